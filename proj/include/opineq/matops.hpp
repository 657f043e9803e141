#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opineq/scalar_fn.hpp"

namespace opineq {

// Raised when an operator's spectrum escapes the domain required by the
// function being applied; the message lists the offending eigenvalues.
class SpectrumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by eigh() if the off-diagonal mass fails to shrink below the
// threshold within the sweep cap (not expected for real symmetric input).
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense real symmetric matrix, row-major storage.
class SymmetricOperator {
 public:
  explicit SymmetricOperator(int n);  // zero matrix
  static SymmetricOperator identity(int n);
  static SymmetricOperator diagonal(std::span<const double> entries);
  // Validates symmetry to a relative tolerance of 1e-12 and symmetrises.
  static SymmetricOperator from_rows(
      const std::vector<std::vector<double>>& rows);

  int dim() const { return n_; }
  double operator()(int i, int j) const { return a_[i * n_ + j]; }
  void set(int i, int j, double v);  // writes both (i,j) and (j,i)

  const std::vector<double>& data() const { return a_; }
  std::vector<std::vector<double>> rows() const;
  double frobenius_norm() const;

 private:
  int n_;
  std::vector<double> a_;
};

// Unit-norm state vector (normalisation is the caller's business; consumers
// validate where the mathematics requires it).
struct StateVector {
  std::vector<double> c;

  int dim() const { return static_cast<int>(c.size()); }
  double norm() const;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  // Row-major n x n; column k is the unit eigenvector for eigenvalues[k].
  std::vector<double> vectors;
  int n;
};

// Cyclic Jacobi with fixed row-major sweep order: deterministic for
// identical input bits.  Stops once the off-diagonal Frobenius mass is
// <= 1e-14 * ||A||_F (or exactly zero).
EigenDecomposition eigh(const SymmetricOperator& a);

// A + B, scaled sums, products that stay symmetric.
SymmetricOperator lincomb(double ca, const SymmetricOperator& a, double cb,
                          const SymmetricOperator& b);
SymmetricOperator scale(double c, const SymmetricOperator& a);
SymmetricOperator square(const SymmetricOperator& a);
// s * m * s for symmetric s, m (result symmetrised); the congruence used to
// build geometric means.
SymmetricOperator sandwich(const SymmetricOperator& s,
                           const SymmetricOperator& m);
SymmetricOperator direct_sum(std::span<const SymmetricOperator> blocks);

double quadratic_form(const SymmetricOperator& a, const StateVector& x);

// [min eigenvalue, max eigenvalue]; for n = 1 both ends coincide, so the
// result is not an Interval (which requires lo < hi).
std::pair<double, double> spectrum_bounds(const SymmetricOperator& a);
double min_eigenvalue(const SymmetricOperator& a);

// f(A) = Q f(Lambda) Q^T for an arbitrary callable on the eigenvalues.
SymmetricOperator map_eigenvalues(const EigenDecomposition& ed,
                                  const std::function<double(double)>& fn);
SymmetricOperator apply_spectral(const SymmetricOperator& a,
                                 const std::function<double(double)>& fn);

// f(A) for a function model: checks Sp(A) against the model domain with a
// relative slack of 1e-9 (listing violators in the SpectrumError), clamps
// in-slack eigenvalues to the domain, then applies f spectrally.
SymmetricOperator apply_function(const FunctionModel& m,
                                 const SymmetricOperator& a);
// Same, reusing a decomposition the caller already has.
SymmetricOperator apply_function(const FunctionModel& m,
                                 const EigenDecomposition& ed);

}  // namespace opineq
