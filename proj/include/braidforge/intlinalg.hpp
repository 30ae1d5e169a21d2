#ifndef BRAIDFORGE_INTLINALG_HPP
#define BRAIDFORGE_INTLINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace braidforge {

// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<long> values);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  IntMatrix multiply(const IntMatrix& other) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> entries_;
};

// U * A * V = D with D diagonal, d_1 | d_2 | ..., d_i >= 0, det(U), det(V) = +-1.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  std::vector<mpz_class> diagonal() const;
  // Exact witness check U*A*V == D.
  bool verify(const IntMatrix& a) const;
};

// Invariants of the abelian group Z^cols / rowspace.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // entries >= 2, in divisibility order

  friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

// Deterministic SNF: pivot is the smallest-magnitude nonzero entry of the
// working submatrix, ties broken by row-major position. The returned witness
// identity is re-checked by multiplication before returning.
SmithForm smith_normal_form(const IntMatrix& a);

AbelianInvariants abelian_invariants(const IntMatrix& relation_matrix);

// Rank over Q by fraction-free (Bareiss) elimination; independent of the SNF
// code path on purpose.
std::size_t rational_rank(const IntMatrix& a);

// Determinant of a square matrix, Bareiss elimination.
mpz_class determinant(const IntMatrix& a);

// True iff x lies in the integer row span of the matrix behind `snf`.
bool in_row_lattice(const SmithForm& snf, const std::vector<mpz_class>& x);

}  // namespace braidforge

#endif
