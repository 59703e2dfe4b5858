#pragma once

// Column-major dense matrix with an explicit leading dimension.

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "mpkit/real.hpp"

namespace mpkit {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(index_t m, index_t n) : Matrix(m, n, std::max<index_t>(1, m)) {}
  Matrix(index_t m, index_t n, index_t ld) : m_(m), n_(n), ld_(ld) {
    if (m < 0 || n < 0 || ld < std::max<index_t>(1, m)) throw std::invalid_argument("Matrix: bad shape");
    data_.assign(static_cast<std::size_t>(ld * std::max<index_t>(n, 1)), T(0));
  }

  /// Row-major nested list, as matrices are usually written.
  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    const auto m = static_cast<index_t>(rows.size());
    const auto n = m == 0 ? index_t{0} : static_cast<index_t>(rows.begin()->size());
    Matrix a(m, n);
    index_t i = 0;
    for (const auto& row : rows) {
      if (static_cast<index_t>(row.size()) != n) throw std::invalid_argument("Matrix: ragged rows");
      index_t j = 0;
      for (const auto& v : row) a(i, j++) = v;
      ++i;
    }
    return a;
  }

  static Matrix identity(index_t n) {
    Matrix a(n, n);
    for (index_t i = 0; i < n; ++i) a(i, i) = T(1);
    return a;
  }

  [[nodiscard]] index_t rows() const noexcept { return m_; }
  [[nodiscard]] index_t cols() const noexcept { return n_; }
  [[nodiscard]] index_t ld() const noexcept { return ld_; }

  T& operator()(index_t i, index_t j) noexcept {
    assert(i >= 0 && i < m_ && j >= 0 && j < n_);
    return data_[static_cast<std::size_t>(i + j * ld_)];
  }
  const T& operator()(index_t i, index_t j) const noexcept {
    assert(i >= 0 && i < m_ && j >= 0 && j < n_);
    return data_[static_cast<std::size_t>(i + j * ld_)];
  }

  std::span<T> span() noexcept { return data_; }
  std::span<const T> span() const noexcept { return data_; }
  T* data() noexcept { return data_.data(); }
  const T* data() const noexcept { return data_.data(); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.m_ != b.m_ || a.n_ != b.n_) return false;
    for (index_t j = 0; j < a.n_; ++j)
      for (index_t i = 0; i < a.m_; ++i)
        if (!(a(i, j) == b(i, j))) return false;
    return true;
  }

 private:
  index_t m_ = 0;
  index_t n_ = 0;
  index_t ld_ = 1;
  std::vector<T> data_ = std::vector<T>(1, T(0));
};

template <class To, class From>
Matrix<To> convert(const Matrix<From>& a) {
  Matrix<To> b(a.rows(), a.cols());
  for (index_t j = 0; j < a.cols(); ++j)
    for (index_t i = 0; i < a.rows(); ++i) b(i, j) = To(a(i, j));
  return b;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> b(a.cols(), a.rows());
  for (index_t j = 0; j < a.cols(); ++j)
    for (index_t i = 0; i < a.rows(); ++i) b(j, i) = a(i, j);
  return b;
}

}  // namespace mpkit
