#include "pcpg/intmat.hpp"

#include <sstream>
#include <stdexcept>

namespace pcpg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::mul(const IntMatrix &o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix::mul: shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int &a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int> &x) const {
  if (x.size() != cols_) throw std::invalid_argument("IntMatrix::apply: shape mismatch");
  std::vector<Int> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

bool IntMatrix::is_zero() const {
  for (const Int &v : data_)
    if (v != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Int &k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += k * at(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Int &k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += k * at(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, c) = -at(i, c);
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: not square");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

// Pivot on the minimal-absolute-value nonzero entry in A[t.., t..];
// ties broken by lowest (row, col).
bool find_pivot(const IntMatrix &A, std::size_t t, std::size_t &pr, std::size_t &pc) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < A.rows(); ++i)
    for (std::size_t j = t; j < A.cols(); ++j) {
      const Int &v = A.at(i, j);
      if (v == 0) continue;
      Int a = abs(v);
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
      }
    }
  return found;
}

// Quotient of a/b rounded to nearest, so the remainder is at most |b|/2.
Int round_quotient(const Int &a, const Int &b) {
  Int q = a / b, r = a - q * b;
  if (2 * abs(r) > abs(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
  return q;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix &A) {
  SmithDecomposition s;
  s.D = A;
  s.U = IntMatrix::identity(A.rows());
  s.V = IntMatrix::identity(A.cols());
  IntMatrix &D = s.D, &U = s.U, &V = s.V;

  std::size_t n = std::min(A.rows(), A.cols());
  std::size_t t = 0;
  for (; t < n; ++t) {
    std::size_t pr, pc;
    if (!find_pivot(D, t, pr, pc)) break;

    // Reduce against the globally minimal pivot; whenever a reduction leaves a
    // remainder, re-pick the pivot (its absolute value at least halves), so
    // entries never pile up against a stale pivot.
    while (true) {
      D.swap_rows(t, pr);
      U.swap_rows(t, pr);
      D.swap_cols(t, pc);
      V.swap_cols(t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < D.rows(); ++i) {
        if (D.at(i, t) == 0) continue;
        Int q = round_quotient(D.at(i, t), D.at(t, t));
        D.add_row(i, t, -q);
        U.add_row(i, t, -q);
        if (D.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < D.cols(); ++j) {
        if (D.at(t, j) == 0) continue;
        Int q = round_quotient(D.at(t, j), D.at(t, t));
        D.add_col(j, t, -q);
        V.add_col(j, t, -q);
        if (D.at(t, j) != 0) clean = false;
      }
      if (clean) break;
      find_pivot(D, t, pr, pc);
    }
    if (D.at(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
  s.rank = t;

  // Enforce the divisibility chain d_i | d_{i+1}.
  bool chain = false;
  while (!chain) {
    chain = true;
    for (std::size_t i = 0; i + 1 < s.rank; ++i) {
      if (D.at(i + 1, i + 1) % D.at(i, i) == 0) continue;
      chain = false;
      // Fold d_{i+1} into position (i, i+1) and rediagonalize the 2x2 block.
      D.add_col(i, i + 1, 1);
      V.add_col(i, i + 1, 1);
      // Block is now [[d_i, 0], [d_{i+1}, d_{i+1}]]; Euclid on column i.
      while (D.at(i + 1, i) != 0) {
        Int q = D.at(i, i) / D.at(i + 1, i);
        D.add_row(i, i + 1, -q);
        U.add_row(i, i + 1, -q);
        D.swap_rows(i, i + 1);
        U.swap_rows(i, i + 1);
      }
      // Clear the off-diagonal remainder in row i.
      if (D.at(i, i + 1) != 0) {
        Int q = D.at(i, i + 1) / D.at(i, i);
        D.add_col(i + 1, i, -q);
        V.add_col(i + 1, i, -q);
      }
      if (D.at(i, i + 1) != 0 || D.at(i + 1, i) != 0) {
        // fall back to full rediagonalization of the trailing block
        // (cannot happen for exact division chains, kept as a safety net)
        throw std::logic_error("smith_normal_form: chain repair failed");
      }
      if (D.at(i, i) < 0) {
        D.negate_row(i);
        U.negate_row(i);
      }
      if (D.at(i + 1, i + 1) < 0) {
        D.negate_row(i + 1);
        U.negate_row(i + 1);
      }
    }
  }
  return s;
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix &A) {
  SmithDecomposition s = smith_normal_form(A);
  std::vector<std::vector<Int>> basis;
  for (std::size_t j = s.rank; j < A.cols(); ++j) {
    std::vector<Int> v(A.cols());
    for (std::size_t i = 0; i < A.cols(); ++i) v[i] = s.V.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<MixedSolution> solve_mixed(const IntMatrix &A,
                                         const std::vector<Int> &moduli,
                                         const std::vector<Int> &b) {
  if (moduli.size() != A.rows() || b.size() != A.rows())
    throw std::invalid_argument("solve_mixed: dimension mismatch");
  // Slack columns turn each congruence row into an exact equation.
  std::size_t slacks = 0;
  for (const Int &m : moduli) {
    if (m < 0) throw std::invalid_argument("solve_mixed: negative modulus");
    if (m > 0) ++slacks;
  }
  IntMatrix B(A.rows(), A.cols() + slacks);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) B.at(i, j) = A.at(i, j);
  std::size_t sc = A.cols();
  for (std::size_t i = 0; i < A.rows(); ++i)
    if (moduli[i] > 0) B.at(i, sc++) = moduli[i];

  SmithDecomposition s = smith_normal_form(B);
  std::vector<Int> ub = s.U.apply(b);
  std::vector<Int> z(B.cols());
  for (std::size_t i = 0; i < B.rows(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.D.at(i, i) != 0) return std::nullopt;
      z[i] = ub[i] / s.D.at(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Int> full = s.V.apply(z);

  MixedSolution sol;
  sol.particular.assign(full.begin(), full.begin() + A.cols());
  for (std::size_t j = s.rank; j < B.cols(); ++j) {
    std::vector<Int> v(A.cols());
    bool nonzero = false;
    for (std::size_t i = 0; i < A.cols(); ++i) {
      v[i] = s.V.at(i, j);
      if (v[i] != 0) nonzero = true;
    }
    if (nonzero) sol.kernel.push_back(std::move(v));
  }
  return sol;
}

IntMatrix unimodular_inverse(const IntMatrix &A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("unimodular_inverse: not square");
  SmithDecomposition s = smith_normal_form(A);
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D.at(i, i) != 1) throw std::invalid_argument("unimodular_inverse: matrix not unimodular");
  if (s.rank != A.rows()) throw std::invalid_argument("unimodular_inverse: matrix singular");
  // U A V = I  =>  A^{-1} = V U
  return s.V.mul(s.U);
}

} // namespace pcpg
