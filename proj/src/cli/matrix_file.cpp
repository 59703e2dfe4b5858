#include <charconv>
#include <fstream>
#include <sstream>

#include "mpkit/cli.hpp"
#include "mpkit/dd_io.hpp"

namespace mpkit::cli {

MatrixFileError::MatrixFileError(const std::string& source, int line, int column, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

index_t parse_dim(const Token& t, const std::string& source, int lineno) {
  index_t v = 0;
  const auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || end != t.text.data() + t.text.size() || v < 0)
    throw MatrixFileError(source, lineno, t.column, "bad dimension '" + std::string(t.text) + "'");
  return v;
}

dd_real parse_entry(const Token& t, const std::string& source, int lineno, dd_real*) {
  try {
    return dd_from_string(t.text);
  } catch (const ParseError& e) {
    throw MatrixFileError(source, lineno, t.column + static_cast<int>(e.position()), e.what());
  }
}

double parse_entry(const Token& t, const std::string& source, int lineno, double*) {
  // Validate the grammar with the dd parser, then round once to binary64.
  (void)parse_entry(t, source, lineno, static_cast<dd_real*>(nullptr));
  double v = 0.0;
  const auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec == std::errc::result_out_of_range) {
    return std::strtod(std::string(t.text).c_str(), nullptr);
  }
  if (ec != std::errc() || end != t.text.data() + t.text.size())
    throw MatrixFileError(source, lineno, t.column, "bad number '" + std::string(t.text) + "'");
  return v;
}

template <class T>
Matrix<T> read_matrix(std::istream& is, const std::string& source) {
  std::string line;
  int lineno = 0;
  if (!std::getline(is, line)) throw MatrixFileError(source, 1, 1, "missing header \"m n\"");
  ++lineno;
  const auto header = split(line);
  if (header.size() != 2) throw MatrixFileError(source, lineno, 1, "header must be \"m n\"");
  const index_t m = parse_dim(header[0], source, lineno);
  const index_t n = parse_dim(header[1], source, lineno);
  Matrix<T> a(m, n);
  for (index_t i = 0; i < m; ++i) {
    if (!std::getline(is, line))
      throw MatrixFileError(source, lineno + 1, 1, "expected " + std::to_string(m) + " rows, got " + std::to_string(i));
    ++lineno;
    const auto tokens = split(line);
    if (static_cast<index_t>(tokens.size()) != n) {
      const int col = tokens.size() > static_cast<std::size_t>(n) ? tokens[static_cast<std::size_t>(n)].column
                                                                   : static_cast<int>(line.size()) + 1;
      throw MatrixFileError(source, lineno, col,
                            "expected " + std::to_string(n) + " entries, got " + std::to_string(tokens.size()));
    }
    for (index_t j = 0; j < n; ++j)
      a(i, j) = parse_entry(tokens[static_cast<std::size_t>(j)], source, lineno, static_cast<T*>(nullptr));
  }
  while (std::getline(is, line)) {
    ++lineno;
    const auto extra = split(line);
    if (!extra.empty()) throw MatrixFileError(source, lineno, extra.front().column, "unexpected data after last row");
  }
  return a;
}

template <class T>
Matrix<T> load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_matrix<T>(f, path);
}

}  // namespace

Matrix<dd_real> read_matrix_dd(std::istream& is, const std::string& source) { return read_matrix<dd_real>(is, source); }
Matrix<double> read_matrix_f64(std::istream& is, const std::string& source) { return read_matrix<double>(is, source); }
Matrix<dd_real> load_matrix_dd(const std::string& path) { return load<dd_real>(path); }
Matrix<double> load_matrix_f64(const std::string& path) { return load<double>(path); }

}  // namespace mpkit::cli
