#pragma once

// Support code for the mpkit command-line tool: Octave-style printing,
// matrix files, and the self-checking demos.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mpkit/dd_complex.hpp"
#include "mpkit/dd_real.hpp"
#include "mpkit/matrix.hpp"

namespace mpkit::cli {

inline constexpr int kShortDigits = 16;
inline constexpr int kLongDigits = 33;

/// "[ [ a, b, c]; [ d, e, f] ]", each entry in signed scientific notation
/// with `digits` digits after the point. Complex entries print as
/// "+re+imi" with no blanks, so the text is valid Octave matrix syntax.
std::string print_octave(const Matrix<dd_real>& a, int digits = kShortDigits);
std::string print_octave(const Matrix<double>& a, int digits = kShortDigits);
std::string print_octave(const Matrix<dd_complex>& a, int digits = kShortDigits);
/// A vector as an n x 1 column.
std::string print_octave(const std::vector<dd_real>& v, int digits = kShortDigits);
std::string print_octave(const std::vector<double>& v, int digits = kShortDigits);

std::string format_number(const dd_real& x, int digits = kShortDigits);
std::string format_number(double x, int digits = kShortDigits);

/// Parse failure with a 1-based line and column.
class MatrixFileError : public std::runtime_error {
 public:
  MatrixFileError(const std::string& source, int line, int column, const std::string& what);
  [[nodiscard]] int line() const noexcept { return line_; }
  [[nodiscard]] int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Matrix file: a header line "m n", then m lines of n whitespace-separated
/// decimal numbers (row-major). Blank lines after the last row are allowed.
/// dd values are correctly rounded from the decimal text; binary64 values
/// likewise (not rounded twice).
Matrix<dd_real> read_matrix_dd(std::istream& is, const std::string& source = "<input>");
Matrix<double> read_matrix_f64(std::istream& is, const std::string& source = "<input>");
Matrix<dd_real> load_matrix_dd(const std::string& path);
Matrix<double> load_matrix_f64(const std::string& path);

/// Parsed Octave matrix literal (rows of complex entries as dd values).
using OctaveRows = std::vector<std::vector<dd_complex>>;

/// Parses the Octave subset print_octave emits: a bracketed matrix whose
/// elements are separated by ',' or blanks and rows by ';' or '[...]'
/// groups, with real or complex (a+bi, bi) numeric literals.
/// Throws std::invalid_argument with the offending offset.
OctaveRows parse_octave(std::string_view text);

const std::vector<std::string>& demo_names();

/// Runs a worked example at dd precision, prints inputs and outputs, then
/// checks the outputs. Returns 0 on match; otherwise prints the mismatches
/// and returns 1.
int run_demo(const std::string& name, std::ostream& out, int digits = kShortDigits);

}  // namespace mpkit::cli
