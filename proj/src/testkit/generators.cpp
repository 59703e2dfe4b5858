#include <cmath>
#include <stdexcept>

#include "mpkit/testkit.hpp"

namespace mpkit::testkit {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) {
  std::uint64_t state = seed;
  engine_.seed(splitmix64(state));
}

double Rng::uniform() {
  const auto k = static_cast<double>(engine_() >> 11);  // 53 bits
  return std::ldexp(k, -52) - 1.0;
}

std::vector<double> random_vector(index_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(static_cast<std::size_t>(std::max<index_t>(n, 0)));
  for (double& x : v) x = rng.uniform();
  return v;
}

namespace {

void check_dims(const MatrixGenSpec& spec, bool square) {
  if (spec.m < 0 || spec.n < 0) throw std::invalid_argument("gen_matrix: negative dimension");
  if (square && spec.m != spec.n) throw std::invalid_argument("gen_matrix: kind requires a square matrix");
}

}  // namespace

Matrix<double> gen_matrix_f64(const MatrixGenSpec& spec) {
  const index_t m = spec.m;
  const index_t n = spec.n;
  switch (spec.kind) {
    case MatrixKind::uniform: {
      check_dims(spec, false);
      Rng rng(spec.seed);
      Matrix<double> a(m, n);
      for (index_t j = 0; j < n; ++j)
        for (index_t i = 0; i < m; ++i) a(i, j) = rng.uniform();
      return a;
    }
    case MatrixKind::symmetric: {
      check_dims(spec, true);
      Rng rng(spec.seed);
      Matrix<double> a(n, n);
      for (index_t j = 0; j < n; ++j)
        for (index_t i = 0; i <= j; ++i) a(i, j) = a(j, i) = rng.uniform();
      return a;
    }
    case MatrixKind::spd: {
      check_dims(spec, true);
      Rng rng(spec.seed);
      Matrix<dd_real> mm(n, n);
      for (index_t j = 0; j < n; ++j)
        for (index_t i = 0; i < n; ++i) mm(i, j) = rng.uniform();
      Matrix<dd_real> g(n, n);
      (void)Rgemm<dd_real>('T', 'N', n, n, n, dd_real(1), mm.span(), mm.ld(), mm.span(), mm.ld(), dd_real(0),
                           g.span(), g.ld());
      Matrix<double> a(n, n);
      for (index_t j = 0; j < n; ++j)
        for (index_t i = 0; i < n; ++i) a(i, j) = to_double(g(i, j) + (i == j ? dd_real(n) : dd_real(0)));
      // Round symmetrically.
      for (index_t j = 0; j < n; ++j)
        for (index_t i = j + 1; i < n; ++i) a(i, j) = a(j, i);
      return a;
    }
    case MatrixKind::hilbert: {
      check_dims(spec, true);
      Matrix<double> a(n, n);
      for (index_t j = 0; j < n; ++j)
        for (index_t i = 0; i < n; ++i) a(i, j) = 1.0 / static_cast<double>(i + j + 1);
      return a;
    }
    case MatrixKind::frank: {
      check_dims(spec, true);
      Matrix<double> a(n, n);
      for (index_t j = 0; j < n; ++j)
        for (index_t i = 0; i < n; ++i)
          if (j >= i - 1) a(i, j) = static_cast<double>(n - std::max(i, j));
      return a;
    }
    case MatrixKind::diagonal: {
      check_dims(spec, true);
      if (static_cast<index_t>(spec.diag.size()) != n) throw std::invalid_argument("gen_matrix: diag size != n");
      Matrix<double> a(n, n);
      for (index_t i = 0; i < n; ++i) a(i, i) = spec.diag[static_cast<std::size_t>(i)];
      return a;
    }
  }
  throw std::invalid_argument("gen_matrix: unknown kind");
}

template <>
Matrix<double> gen_matrix<double>(const MatrixGenSpec& spec) {
  return gen_matrix_f64(spec);
}

template <>
Matrix<dd_real> gen_matrix<dd_real>(const MatrixGenSpec& spec) {
  if (spec.kind == MatrixKind::hilbert) {
    check_dims(spec, true);
    Matrix<dd_real> a(spec.n, spec.n);
    for (index_t j = 0; j < spec.n; ++j)
      for (index_t i = 0; i < spec.n; ++i) a(i, j) = dd_from_ratio(1, i + j + 1);
    return a;
  }
  return convert<dd_real>(gen_matrix_f64(spec));
}

MatrixKind parse_kind(const std::string& name) {
  if (name == "uniform") return MatrixKind::uniform;
  if (name == "symmetric") return MatrixKind::symmetric;
  if (name == "spd") return MatrixKind::spd;
  if (name == "hilbert") return MatrixKind::hilbert;
  if (name == "frank") return MatrixKind::frank;
  if (name == "diagonal") return MatrixKind::diagonal;
  throw std::invalid_argument("unknown matrix kind: " + name);
}

std::string kind_name(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::uniform: return "uniform";
    case MatrixKind::symmetric: return "symmetric";
    case MatrixKind::spd: return "spd";
    case MatrixKind::hilbert: return "hilbert";
    case MatrixKind::frank: return "frank";
    case MatrixKind::diagonal: return "diagonal";
  }
  return "?";
}

}  // namespace mpkit::testkit
