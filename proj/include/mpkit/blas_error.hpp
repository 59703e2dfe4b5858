#pragma once

#include <optional>
#include <string>

namespace mpkit {

/// Invalid-argument report: routine name and the 1-based position of the
/// offending parameter in the reference BLAS/LAPACK argument list.
struct BlasError {
  std::string routine;
  int index = 0;

  friend bool operator==(const BlasError&, const BlasError&) = default;
};

/// Empty on success.
using BlasStatus = std::optional<BlasError>;

inline bool lsame(char a, char b) noexcept {
  auto up = [](char c) { return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c; };
  return up(a) == up(b);
}

}  // namespace mpkit
