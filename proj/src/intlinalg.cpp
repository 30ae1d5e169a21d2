#include "braidforge/intlinalg.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace braidforge {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<long> values)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0) {
  if (values.size() != rows * cols)
    throw std::invalid_argument("IntMatrix: wrong number of entries");
  for (std::size_t i = 0; i < values.size(); ++i) entries_[i] = values[i];
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("IntMatrix::multiply: shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) += aik * other.at(k, j);
    }
  return out;
}

std::vector<mpz_class> SmithForm::diagonal() const {
  std::size_t n = std::min(d.rows(), d.cols());
  std::vector<mpz_class> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = d.at(i, i);
  return out;
}

bool SmithForm::verify(const IntMatrix& a) const {
  return u.multiply(a).multiply(v) == d;
}

namespace {

struct SnfState {
  IntMatrix d, u, v;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  // row[a] += q * row[b]
  void add_row(std::size_t a, std::size_t b, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) += q * d.at(b, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) += q * u.at(b, j);
  }
  // col[a] += q * col[b]
  void add_col(std::size_t a, std::size_t b, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < d.rows(); ++i) d.at(i, a) += q * d.at(i, b);
    for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, a) += q * v.at(i, b);
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) = -d.at(a, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
  }
};

// Smallest-magnitude nonzero entry in the submatrix with corner (k,k);
// ties resolved by row-major position. Returns false if the submatrix is 0.
bool find_pivot(const IntMatrix& d, std::size_t k, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  mpz_class best;
  for (std::size_t i = k; i < d.rows(); ++i)
    for (std::size_t j = k; j < d.cols(); ++j) {
      const mpz_class& e = d.at(i, j);
      if (e == 0) continue;
      mpz_class mag = abs(e);
      if (!found || mag < best) {
        found = true;
        best = mag;
        pr = i;
        pc = j;
      }
    }
  return found;
}

// Floor-free quotient that minimizes the remainder magnitude: round a/b.
mpz_class nearest_quotient(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_class babs = abs(b);
  if (2 * r > babs) q += 1;
  return q;
}

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::logic_error("intlinalg: inexact division in Bareiss step");
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SnfState s;
  s.d = a;
  s.u = IntMatrix::identity(a.rows());
  s.v = IntMatrix::identity(a.cols());

  std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // Re-pick the smallest pivot after every sweep: remainders shrink it
      // monotonically, which both terminates and keeps entries small.
      std::size_t pr = 0, pc = 0;
      if (!find_pivot(s.d, k, pr, pc)) {
        pr = pc = n;  // submatrix is zero; done with the whole matrix
        break;
      }
      s.swap_rows(k, pr);
      s.swap_cols(k, pc);
      const mpz_class pivot = s.d.at(k, k);

      bool clear = true;
      for (std::size_t i = k + 1; i < s.d.rows(); ++i) {
        if (s.d.at(i, k) == 0) continue;
        s.add_row(i, k, -nearest_quotient(s.d.at(i, k), pivot));
        if (s.d.at(i, k) != 0) clear = false;
      }
      for (std::size_t j = k + 1; j < s.d.cols(); ++j) {
        if (s.d.at(k, j) == 0) continue;
        s.add_col(j, k, -nearest_quotient(s.d.at(k, j), pivot));
        if (s.d.at(k, j) != 0) clear = false;
      }
      if (!clear) continue;

      // The divisibility chain falls out of making the pivot divide the
      // whole remaining submatrix before moving on.
      bool divides_all = true;
      for (std::size_t i = k + 1; i < s.d.rows() && divides_all; ++i)
        for (std::size_t j = k + 1; j < s.d.cols() && divides_all; ++j)
          if (s.d.at(i, j) % pivot != 0) {
            s.add_row(k, i, 1);
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (s.d.at(k, k) == 0) break;
  }

  for (std::size_t k = 0; k < n; ++k)
    if (s.d.at(k, k) < 0) s.negate_row(k);

  SmithForm out{std::move(s.d), std::move(s.u), std::move(s.v)};
  if (!out.verify(a)) throw std::logic_error("smith_normal_form: witness check failed");
  return out;
}

AbelianInvariants abelian_invariants(const IntMatrix& relation_matrix) {
  SmithForm snf = smith_normal_form(relation_matrix);
  AbelianInvariants inv;
  std::size_t nonzero = 0;
  for (const mpz_class& d : snf.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.free_rank = relation_matrix.cols() - nonzero;
  return inv;
}

std::size_t rational_rank(const IntMatrix& a) {
  IntMatrix m = a;
  std::size_t rank = 0;
  mpz_class prev_pivot = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < m.rows() && m.at(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == m.rows()) continue;
    if (pivot_row != rank)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(rank, j), m.at(pivot_row, j));
    // Bareiss step: exact division by the previous pivot.
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        mpz_class t = m.at(i, j) * m.at(rank, col) - m.at(i, col) * m.at(rank, j);
        m.at(i, j) = exact_div(t, prev_pivot);
      }
      m.at(i, col) = 0;
    }
    prev_pivot = m.at(rank, col);
    ++rank;
  }
  return rank;
}

mpz_class determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  mpz_class prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot_row = k;
    while (pivot_row < n && m.at(pivot_row, k) == 0) ++pivot_row;
    if (pivot_row == n) return 0;
    if (pivot_row != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = exact_div(t, prev_pivot);
      }
      m.at(i, k) = 0;
    }
    prev_pivot = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

bool in_row_lattice(const SmithForm& snf, const std::vector<mpz_class>& x) {
  std::size_t m = snf.v.rows();
  if (x.size() != m) throw std::invalid_argument("in_row_lattice: wrong length");
  // z = x * V; membership reads off the diagonal.
  std::vector<mpz_class> z(m, 0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) z[j] += x[i] * snf.v.at(i, j);
  std::size_t n = std::min(snf.d.rows(), snf.d.cols());
  for (std::size_t j = 0; j < m; ++j) {
    if (j < n && snf.d.at(j, j) != 0) {
      if (z[j] % snf.d.at(j, j) != 0) return false;
    } else if (z[j] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace braidforge
