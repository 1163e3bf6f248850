#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace pcpg {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int &at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool operator==(const IntMatrix &o) const = default;

  IntMatrix mul(const IntMatrix &o) const;
  IntMatrix transpose() const;
  std::vector<Int> apply(const std::vector<Int> &x) const; // this * x
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row(std::size_t dst, std::size_t src, const Int &k); // row dst += k*row src
  void add_col(std::size_t dst, std::size_t src, const Int &k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  Int determinant() const; // Bareiss, square matrices only

  std::string str() const;

private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

// U*A*V = D with U, V unimodular, D diagonal with d_1 | d_2 | ... | d_rank, d_i > 0.
struct SmithDecomposition {
  IntMatrix U, D, V;
  std::size_t rank = 0;
};

SmithDecomposition smith_normal_form(const IntMatrix &A);

// Basis of {x : A*x = 0} over Z; size = cols - rank.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix &A);

// Solution of A*x ≡ b row-wise: modulus 0 means equality over Z,
// modulus m > 0 means congruence mod m in that row.
struct MixedSolution {
  std::vector<Int> particular;
  std::vector<std::vector<Int>> kernel; // generators of the homogeneous solution lattice
};

// Returns nullopt when the system has no solution. Throws on dimension mismatch.
std::optional<MixedSolution> solve_mixed(const IntMatrix &A,
                                         const std::vector<Int> &moduli,
                                         const std::vector<Int> &b);

// Inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix &A);

} // namespace pcpg
