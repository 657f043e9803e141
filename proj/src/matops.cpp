#include "opineq/matops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace opineq {

SymmetricOperator::SymmetricOperator(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("SymmetricOperator: dim must be >= 1");
  a_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

SymmetricOperator SymmetricOperator::identity(int n) {
  SymmetricOperator m(n);
  for (int i = 0; i < n; ++i) m.a_[i * n + i] = 1.0;
  return m;
}

SymmetricOperator SymmetricOperator::diagonal(std::span<const double> entries) {
  SymmetricOperator m(static_cast<int>(entries.size()));
  for (int i = 0; i < m.n_; ++i) m.a_[i * m.n_ + i] = entries[i];
  return m;
}

SymmetricOperator SymmetricOperator::from_rows(
    const std::vector<std::vector<double>>& rows) {
  int n = static_cast<int>(rows.size());
  if (n < 1) throw std::invalid_argument("from_rows: empty matrix");
  double maxabs = 0.0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw std::invalid_argument("from_rows: matrix is not square");
    for (double v : r) {
      if (!std::isfinite(v))
        throw std::invalid_argument("from_rows: non-finite entry");
      maxabs = std::max(maxabs, std::abs(v));
    }
  }
  double tol = 1e-12 * (1.0 + maxabs);
  SymmetricOperator m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (std::abs(rows[i][j] - rows[j][i]) > tol)
        throw std::invalid_argument(
            "from_rows: matrix is not symmetric at (" + std::to_string(i) +
            "," + std::to_string(j) + ")");
      m.a_[i * n + j] = 0.5 * (rows[i][j] + rows[j][i]);
    }
  return m;
}

void SymmetricOperator::set(int i, int j, double v) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::out_of_range("SymmetricOperator::set: index out of range");
  a_[i * n_ + j] = v;
  a_[j * n_ + i] = v;
}

std::vector<std::vector<double>> SymmetricOperator::rows() const {
  std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = a_[i * n_ + j];
  return out;
}

double SymmetricOperator::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double StateVector::norm() const {
  double s = 0.0;
  for (double v : c) s += v * v;
  return std::sqrt(s);
}

EigenDecomposition eigh(const SymmetricOperator& A) {
  const int n = A.dim();
  std::vector<double> a = A.data();
  std::vector<double> q(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) q[i * n + i] = 1.0;

  auto offdiag = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
  };

  const double threshold = 1e-14 * A.frobenius_norm();
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (offdiag() > threshold) {
    if (++sweep > kMaxSweeps)
      throw ConvergenceError("eigh: off-diagonal mass " +
                             std::to_string(offdiag()) + " still above " +
                             std::to_string(threshold) + " after " +
                             std::to_string(kMaxSweeps) + " sweeps");
    for (int p = 0; p < n - 1; ++p)
      for (int r = p + 1; r < n; ++r) {
        double apr = a[p * n + r];
        if (apr == 0.0) continue;
        double app = a[p * n + p];
        double arr = a[r * n + r];
        double theta = (arr - app) / (2.0 * apr);
        double t = std::abs(theta) > 1e10
                       ? 1.0 / (2.0 * theta)
                       : std::copysign(1.0, theta) /
                             (std::abs(theta) +
                              std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == r) continue;
          double akp = a[k * n + p];
          double akr = a[k * n + r];
          double nkp = c * akp - s * akr;
          double nkr = s * akp + c * akr;
          a[k * n + p] = nkp;
          a[p * n + k] = nkp;
          a[k * n + r] = nkr;
          a[r * n + k] = nkr;
        }
        a[p * n + p] = app - t * apr;
        a[r * n + r] = arr + t * apr;
        a[p * n + r] = 0.0;
        a[r * n + p] = 0.0;
        for (int k = 0; k < n; ++k) {
          double qkp = q[k * n + p];
          double qkr = q[k * n + r];
          q[k * n + p] = c * qkp - s * qkr;
          q[k * n + r] = s * qkp + c * qkr;
        }
      }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a[i * n + i] < a[j * n + j];
  });

  EigenDecomposition out;
  out.n = n;
  out.eigenvalues.resize(n);
  out.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a[order[k] * n + order[k]];
    for (int i = 0; i < n; ++i) out.vectors[i * n + k] = q[i * n + order[k]];
  }
  return out;
}

namespace {

void require_same_dim(const SymmetricOperator& a, const SymmetricOperator& b,
                      const char* op) {
  if (a.dim() != b.dim())
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()) + ")");
}

std::vector<double> matmul(int n, const std::vector<double>& x,
                           const std::vector<double>& y) {
  std::vector<double> z(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double xik = x[i * n + k];
      if (xik == 0.0) continue;
      for (int j = 0; j < n; ++j) z[i * n + j] += xik * y[k * n + j];
    }
  return z;
}

}  // namespace

SymmetricOperator lincomb(double ca, const SymmetricOperator& a, double cb,
                          const SymmetricOperator& b) {
  require_same_dim(a, b, "lincomb");
  int n = a.dim();
  SymmetricOperator m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      m.set(i, j, ca * a(i, j) + cb * b(i, j));
  return m;
}

SymmetricOperator scale(double c, const SymmetricOperator& a) {
  int n = a.dim();
  SymmetricOperator m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, c * a(i, j));
  return m;
}

SymmetricOperator square(const SymmetricOperator& a) {
  int n = a.dim();
  SymmetricOperator m(n);
  // sum_k a_ik a_kj is bitwise symmetric because the stored matrix is.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += a(i, k) * a(k, j);
      m.set(i, j, s);
    }
  return m;
}

SymmetricOperator sandwich(const SymmetricOperator& s,
                           const SymmetricOperator& m) {
  require_same_dim(s, m, "sandwich");
  int n = s.dim();
  auto sm = matmul(n, s.data(), m.data());
  auto sms = matmul(n, sm, s.data());
  SymmetricOperator out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      out.set(i, j, 0.5 * (sms[i * n + j] + sms[j * n + i]));
  return out;
}

SymmetricOperator direct_sum(std::span<const SymmetricOperator> blocks) {
  if (blocks.empty()) throw std::invalid_argument("direct_sum: no blocks");
  int total = 0;
  for (const auto& b : blocks) total += b.dim();
  SymmetricOperator m(total);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.dim(); ++i)
      for (int j = i; j < b.dim(); ++j) m.set(off + i, off + j, b(i, j));
    off += b.dim();
  }
  return m;
}

double quadratic_form(const SymmetricOperator& a, const StateVector& x) {
  if (a.dim() != x.dim())
    throw std::invalid_argument("quadratic_form: dimension mismatch");
  int n = a.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += a(i, j) * x.c[j];
    s += x.c[i] * row;
  }
  return s;
}

std::pair<double, double> spectrum_bounds(const SymmetricOperator& a) {
  auto ed = eigh(a);
  return {ed.eigenvalues.front(), ed.eigenvalues.back()};
}

double min_eigenvalue(const SymmetricOperator& a) {
  return eigh(a).eigenvalues.front();
}

SymmetricOperator map_eigenvalues(const EigenDecomposition& ed,
                                  const std::function<double(double)>& fn) {
  int n = ed.n;
  std::vector<double> fv(n);
  for (int k = 0; k < n; ++k) fv[k] = fn(ed.eigenvalues[k]);
  SymmetricOperator m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += ed.vectors[i * n + k] * fv[k] * ed.vectors[j * n + k];
      m.set(i, j, s);
    }
  return m;
}

SymmetricOperator apply_spectral(const SymmetricOperator& a,
                                 const std::function<double(double)>& fn) {
  return map_eigenvalues(eigh(a), fn);
}

SymmetricOperator apply_function(const FunctionModel& m,
                                 const EigenDecomposition& ed) {
  constexpr double kSlack = 1e-9;
  std::vector<double> bad;
  for (double ev : ed.eigenvalues)
    if (!m.domain.contains(ev, kSlack)) bad.push_back(ev);
  if (!bad.empty()) {
    std::ostringstream os;
    os << "spectrum escapes domain [" << m.domain.lo << ", " << m.domain.hi
       << "] of model " << m.name << ": eigenvalues";
    for (double ev : bad) os << ' ' << ev;
    throw SpectrumError(os.str());
  }
  return map_eigenvalues(ed, [&](double ev) {
    return m.value(std::clamp(ev, m.domain.lo, m.domain.hi));
  });
}

SymmetricOperator apply_function(const FunctionModel& m,
                                 const SymmetricOperator& a) {
  return apply_function(m, eigh(a));
}

}  // namespace opineq
