#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "opineq/matops.hpp"
#include "opineq/rng.hpp"

using namespace opineq;
using doctest::Approx;

namespace {

SymmetricOperator random_dense(std::uint64_t seed, int n) {
  Rng r = Rng::at(seed, 0, 0);
  SymmetricOperator a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) a.set(i, j, r.normal());
  return a;
}

double frob(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// ||Q Lambda Q^T - A||_F.
double reconstruction_residual(const SymmetricOperator& a,
                               const EigenDecomposition& ed) {
  int n = ed.n;
  std::vector<double> diff(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += ed.vectors[i * n + k] * ed.eigenvalues[k] * ed.vectors[j * n + k];
      diff[i * n + j] = s - a(i, j);
    }
  return frob(diff);
}

// ||Q^T Q - I||_F.
double orthogonality_residual(const EigenDecomposition& ed) {
  int n = ed.n;
  std::vector<double> diff(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += ed.vectors[k * n + i] * ed.vectors[k * n + j];
      diff[i * n + j] = s - (i == j ? 1.0 : 0.0);
    }
  return frob(diff);
}

}  // namespace

TEST_CASE("constructors and element access") {
  SymmetricOperator z(3);
  CHECK(z.dim() == 3);
  CHECK(z.frobenius_norm() == 0.0);

  SymmetricOperator id = SymmetricOperator::identity(2);
  CHECK(id(0, 0) == 1.0);
  CHECK(id(0, 1) == 0.0);

  std::vector<double> d = {3.0, -1.0, 2.0};
  SymmetricOperator dg = SymmetricOperator::diagonal(d);
  CHECK(dg(1, 1) == -1.0);
  CHECK(dg(0, 2) == 0.0);

  SymmetricOperator a(2);
  a.set(0, 1, 5.0);
  CHECK(a(0, 1) == 5.0);
  CHECK(a(1, 0) == 5.0);  // set writes both triangles

  SymmetricOperator fr = SymmetricOperator::from_rows({{1.0, 2.0}, {2.0, 3.0}});
  CHECK(fr(0, 1) == 2.0);
  CHECK_THROWS_AS(SymmetricOperator::from_rows({{1.0, 2.0}, {2.5, 3.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SymmetricOperator::from_rows({{1.0, 2.0}}),
                  std::invalid_argument);
}

TEST_CASE("eigh on a known 2x2") {
  SymmetricOperator a = SymmetricOperator::from_rows({{2.0, 1.0}, {1.0, 2.0}});
  EigenDecomposition ed = eigh(a);
  REQUIRE(ed.eigenvalues.size() == 2);
  CHECK(ed.eigenvalues[0] == Approx(1.0).epsilon(1e-12));
  CHECK(ed.eigenvalues[1] == Approx(3.0).epsilon(1e-12));
  CHECK(reconstruction_residual(a, ed) < 1e-12);
  CHECK(orthogonality_residual(ed) < 1e-12);
}

TEST_CASE("eigh on diagonal input returns sorted entries exactly") {
  std::vector<double> d = {4.0, -2.0, 7.0, 0.5};
  EigenDecomposition ed = eigh(SymmetricOperator::diagonal(d));
  CHECK(ed.eigenvalues == std::vector<double>{-2.0, 0.5, 4.0, 7.0});
  CHECK(orthogonality_residual(ed) == 0.0);  // a signed permutation
}

TEST_CASE("eigh residuals stay small on random dense matrices") {
  for (int n : {1, 2, 5, 12, 30}) {
    CAPTURE(n);
    SymmetricOperator a = random_dense(1000 + static_cast<std::uint64_t>(n), n);
    EigenDecomposition ed = eigh(a);
    double scale = 1.0 + a.frobenius_norm();
    CHECK(reconstruction_residual(a, ed) <= 1e-10 * scale);
    CHECK(orthogonality_residual(ed) <= 1e-10 * scale);
    for (std::size_t k = 1; k < ed.eigenvalues.size(); ++k)
      CHECK(ed.eigenvalues[k - 1] <= ed.eigenvalues[k]);
  }
}

TEST_CASE("eigh is deterministic") {
  SymmetricOperator a = random_dense(77, 8);
  EigenDecomposition e1 = eigh(a);
  EigenDecomposition e2 = eigh(a);
  CHECK(e1.eigenvalues == e2.eigenvalues);
  CHECK(e1.vectors == e2.vectors);
}

TEST_CASE("algebraic helpers") {
  SymmetricOperator a = SymmetricOperator::from_rows({{1.0, 2.0}, {2.0, 0.0}});
  SymmetricOperator b = SymmetricOperator::identity(2);

  SymmetricOperator lc = lincomb(2.0, a, -3.0, b);
  CHECK(lc(0, 0) == -1.0);
  CHECK(lc(0, 1) == 4.0);
  CHECK(lc(1, 1) == -3.0);

  SymmetricOperator sc = scale(0.5, a);
  CHECK(sc(0, 1) == 1.0);

  SymmetricOperator sq = square(a);
  CHECK(sq(0, 0) == 5.0);  // [[5,2],[2,4]]
  CHECK(sq(0, 1) == 2.0);
  CHECK(sq(1, 1) == 4.0);

  // sandwich(s, m) = s m s with s = diag(1, 2).
  SymmetricOperator s = SymmetricOperator::diagonal(std::vector{1.0, 2.0});
  SymmetricOperator sm = sandwich(s, a);
  CHECK(sm(0, 0) == 1.0);
  CHECK(sm(0, 1) == 4.0);
  CHECK(sm(1, 1) == 0.0);

  std::vector<SymmetricOperator> blocks = {a, b};
  SymmetricOperator ds = direct_sum(blocks);
  CHECK(ds.dim() == 4);
  CHECK(ds(0, 1) == 2.0);
  CHECK(ds(2, 2) == 1.0);
  CHECK(ds(1, 2) == 0.0);

  StateVector x{{0.6, 0.8}};
  CHECK(quadratic_form(a, x) ==
        Approx(0.36 * 1.0 + 2.0 * 0.48 * 2.0).epsilon(1e-14));
  CHECK(x.norm() == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("spectrum bounds") {
  SymmetricOperator dg =
      SymmetricOperator::diagonal(std::vector{3.0, -1.0, 2.0});
  auto [lo, hi] = spectrum_bounds(dg);
  CHECK(lo == -1.0);
  CHECK(hi == 3.0);
  CHECK(min_eigenvalue(dg) == -1.0);

  SymmetricOperator one = SymmetricOperator::diagonal(std::vector{5.0});
  auto [l1, h1] = spectrum_bounds(one);
  CHECK(l1 == 5.0);
  CHECK(h1 == 5.0);
}

TEST_CASE("functional calculus through the spectrum") {
  double two_pi = 2.0 * std::numbers::pi;
  const FunctionModel& sin_m = builtin_model("sin");
  SymmetricOperator a = SymmetricOperator::diagonal(std::vector{two_pi, 0.0});
  SymmetricOperator fa = apply_function(sin_m, a);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(fa(i, j)) <= 1e-12);

  // exp model lives on [0, 1]; an eigenvalue at 2 must be rejected.
  SymmetricOperator out = SymmetricOperator::diagonal(std::vector{0.5, 2.0});
  CHECK_THROWS_AS(apply_function(builtin_model("exp"), out), SpectrumError);

  // In-slack eigenvalues are clamped, not rejected.
  SymmetricOperator edge =
      SymmetricOperator::diagonal(std::vector{1.0 + 1e-12, 0.5});
  SymmetricOperator fe = apply_function(builtin_model("exp"), edge);
  CHECK(fe.dim() == 2);

  SymmetricOperator sq = apply_spectral(
      SymmetricOperator::from_rows({{2.0, 1.0}, {1.0, 2.0}}),
      [](double x) { return x * x; });
  CHECK(sq(0, 0) == Approx(5.0).epsilon(1e-12));
  CHECK(sq(0, 1) == Approx(4.0).epsilon(1e-12));
}
