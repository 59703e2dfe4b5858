#include <cctype>
#include <sstream>

#include "mpkit/cli.hpp"
#include "mpkit/dd_io.hpp"

namespace mpkit::cli {

std::string format_number(const dd_real& x, int digits) { return dd_to_string(x, digits + 1); }
std::string format_number(double x, int digits) { return double_to_string(x, digits + 1); }

namespace {

std::string entry(const dd_real& x, int digits) { return format_number(x, digits); }
std::string entry(double x, int digits) { return format_number(x, digits); }
std::string entry(const dd_complex& z, int digits) {
  return format_number(z.real(), digits) + format_number(z.imag(), digits) + "i";
}

template <class T>
std::string print_rows(index_t m, index_t n, const T& at, int digits) {
  std::ostringstream os;
  os << "[ ";
  for (index_t i = 0; i < m; ++i) {
    os << "[ ";
    for (index_t j = 0; j < n; ++j) {
      os << entry(at(i, j), digits);
      if (j + 1 < n) os << ", ";
    }
    os << (i + 1 < m ? "]; " : "] ");
  }
  os << "]";
  return os.str();
}

}  // namespace

std::string print_octave(const Matrix<dd_real>& a, int digits) {
  return print_rows(a.rows(), a.cols(), [&](index_t i, index_t j) { return a(i, j); }, digits);
}
std::string print_octave(const Matrix<double>& a, int digits) {
  return print_rows(a.rows(), a.cols(), [&](index_t i, index_t j) { return a(i, j); }, digits);
}
std::string print_octave(const Matrix<dd_complex>& a, int digits) {
  return print_rows(a.rows(), a.cols(), [&](index_t i, index_t j) { return a(i, j); }, digits);
}
std::string print_octave(const std::vector<dd_real>& v, int digits) {
  return print_rows(static_cast<index_t>(v.size()), 1, [&](index_t i, index_t) { return v[i]; }, digits);
}
std::string print_octave(const std::vector<double>& v, int digits) {
  return print_rows(static_cast<index_t>(v.size()), 1, [&](index_t i, index_t) { return v[i]; }, digits);
}

// -------------------------------------------------------------- parser

namespace {

class OctaveParser {
 public:
  explicit OctaveParser(std::string_view s) : s_(s) {}

  OctaveRows parse() {
    skip_blanks();
    OctaveRows m = bracket();
    skip_blanks();
    if (pos_ != s_.size()) fail("trailing text");
    return m;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("octave: " + what + " at offset " + std::to_string(pos_));
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  bool skip_blanks() {
    const std::size_t start = pos_;
    while (!at_end() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r')) ++pos_;
    return pos_ != start;
  }

  static void hcat(OctaveRows& block, const OctaveRows& item, const OctaveParser& p) {
    if (block.empty()) {
      block = item;
      return;
    }
    if (item.empty()) return;
    if (item.size() != block.size()) p.fail("horizontal dimensions mismatch");
    for (std::size_t r = 0; r < item.size(); ++r) block[r].insert(block[r].end(), item[r].begin(), item[r].end());
  }

  void vcat(OctaveRows& m, OctaveRows& block) const {
    if (block.empty()) return;
    if (!m.empty() && m.front().size() != block.front().size()) fail("vertical dimensions mismatch");
    m.insert(m.end(), block.begin(), block.end());
    block.clear();
  }

  OctaveRows bracket() {
    if (peek() != '[') fail("expected '['");
    ++pos_;
    OctaveRows m;
    OctaveRows block;
    bool need_sep = false;
    for (;;) {
      const bool blank = skip_blanks();
      const char c = peek();
      if (c == '\0') fail("unterminated '['");
      if (c == ']') {
        ++pos_;
        vcat(m, block);
        return m;
      }
      if (c == ';') {
        ++pos_;
        vcat(m, block);
        need_sep = false;
        continue;
      }
      if (c == ',') {
        if (!need_sep) fail("unexpected ','");
        ++pos_;
        need_sep = false;
        continue;
      }
      if (need_sep && !blank) fail("missing separator");
      OctaveRows item = c == '[' ? bracket() : OctaveRows{{number()}};
      hcat(block, item, *this);
      need_sep = true;
    }
  }

  /// [+-]digits[.digits][e[+-]digits]; returns the token text.
  std::string_view real_token() {
    const std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    const std::size_t digits_start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (pos_ == digits_start || (pos_ == digits_start + 1 && s_[digits_start] == '.')) fail("expected a number");
    if (peek() == 'e' || peek() == 'E') {
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      const std::size_t exp_start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == exp_start) fail("bad exponent");
    }
    return s_.substr(start, pos_ - start);
  }

  bool imag_unit() {
    if (peek() == 'i' || peek() == 'j') {
      ++pos_;
      return true;
    }
    return false;
  }

  dd_complex number() {
    const dd_real first = dd_from_string(real_token());
    if (imag_unit()) return {dd_real(0), first};
    if (peek() == '+' || peek() == '-') {
      const dd_real second = dd_from_string(real_token());
      if (!imag_unit()) fail("expected imaginary unit");
      return {first, second};
    }
    return {first, dd_real(0)};
  }
};

}  // namespace

OctaveRows parse_octave(std::string_view text) { return OctaveParser(text).parse(); }

}  // namespace mpkit::cli
