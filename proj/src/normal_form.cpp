#include "pi3/normal_form.hpp"

#include <utility>

namespace pi3 {
namespace {

// col_dst -= q * col_src, restricted to rows [row_from, rows).
void column_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q, std::size_t row_from = 0) {
  Integer t;
  for (std::size_t r = row_from; r < m.rows(); ++r) {
    if (m(r, src) == 0) continue;
    t = q * m(r, src);
    m(r, dst) -= t;
  }
}

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  Integer t;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m(src, c) == 0) continue;
    t = q * m(src, c);
    m(dst, c) -= t;
  }
}

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void negate_column(IntMatrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

HermiteForm hermite_columns(const IntMatrix& a) {
  HermiteForm out;
  out.form = a;
  out.transform = IntMatrix::identity(a.cols());
  IntMatrix& h = out.form;
  IntMatrix& u = out.transform;
  const std::size_t n = a.cols();
  std::size_t pc = 0;
  Integer q;
  for (std::size_t i = 0; i < a.rows() && pc < n; ++i) {
    bool have_pivot = false;
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = pc; j < n; ++j)
        if (h(i, j) != 0 && (best == n || abs(h(i, j)) < abs(h(i, best)))) best = j;
      if (best == n) break;
      have_pivot = true;
      swap_columns(h, pc, best);
      swap_columns(u, pc, best);
      bool clean = true;
      for (std::size_t j = pc + 1; j < n; ++j) {
        if (h(i, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, pc).get_mpz_t());
        column_axpy(h, j, pc, q, i);
        column_axpy(u, j, pc, q);
        if (h(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!have_pivot) continue;
    if (h(i, pc) < 0) {
      negate_column(h, pc);
      negate_column(u, pc);
    }
    for (std::size_t c = 0; c < pc; ++c) {
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(i, pc).get_mpz_t());
      if (q == 0) continue;
      column_axpy(h, c, pc, q, i);
      column_axpy(u, c, pc, q);
    }
    out.pivot_rows.push_back(i);
    ++pc;
  }
  out.rank = pc;
  return out;
}

SmithForm smith(const IntMatrix& a) {
  SmithForm out;
  out.form = a;
  out.left = IntMatrix::identity(a.rows());
  out.right = IntMatrix::identity(a.cols());
  IntMatrix& s = out.form;
  const std::size_t m = a.rows(), n = a.cols();
  Integer q;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool exhausted = false;
    for (;;) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (s(i, j) != 0 && (bi == m || abs(s(i, j)) < abs(s(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == m) {
        exhausted = true;
        break;
      }
      swap_rows(s, t, bi);
      swap_rows(out.left, t, bi);
      swap_columns(s, t, bj);
      swap_columns(out.right, t, bj);
      bool changed = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        row_axpy(s, i, t, q);
        row_axpy(out.left, i, t, q);
        if (s(i, t) != 0) changed = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        column_axpy(s, j, t, q);
        column_axpy(out.right, j, t, q);
        if (s(t, j) != 0) changed = true;
      }
      if (changed) continue;
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == m) break;
      row_axpy(s, t, bad_row, Integer(-1));
      row_axpy(out.left, t, bad_row, Integer(-1));
    }
    if (exhausted) break;
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(out.left, t);
    }
    out.invariant_factors.push_back(s(t, t));
  }
  return out;
}

NormalForms normal_forms(const IntMatrix& a) { return {hermite_columns(a), smith(a)}; }

IntMatrix integer_kernel(const IntMatrix& a) {
  HermiteForm h = hermite_columns(a);
  return h.transform.columns(h.rank, a.cols() - h.rank);
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  HermiteForm h = hermite_columns(generators);
  return h.form.columns(0, h.rank);
}

bool same_lattice(const IntMatrix& generators_a, const IntMatrix& generators_b) {
  if (generators_a.rows() != generators_b.rows()) return false;
  return lattice_basis(generators_a) == lattice_basis(generators_b);
}

std::size_t rank(const IntMatrix& a) { return hermite_columns(a).rank; }

std::optional<RatMatrix> solve_rational(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_rational: row count mismatch");
  const std::size_t m = a.rows(), n = a.cols(), k = b.cols();
  RatMatrix lhs = a, rhs = b;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < m; ++c) {
    std::size_t p = row;
    while (p < m && lhs(p, c) == 0) ++p;
    if (p == m) continue;
    if (p != row) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lhs(p, j), lhs(row, j));
      for (std::size_t j = 0; j < k; ++j) std::swap(rhs(p, j), rhs(row, j));
    }
    const Rational piv = lhs(row, c);
    for (std::size_t j = c; j < n; ++j) lhs(row, j) /= piv;
    for (std::size_t j = 0; j < k; ++j) rhs(row, j) /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || lhs(i, c) == 0) continue;
      const Rational f = lhs(i, c);
      for (std::size_t j = c; j < n; ++j)
        if (lhs(row, j) != 0) lhs(i, j) -= f * lhs(row, j);
      for (std::size_t j = 0; j < k; ++j)
        if (rhs(row, j) != 0) rhs(i, j) -= f * rhs(row, j);
    }
    pivot_cols.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (rhs(i, j) != 0) return std::nullopt;
  RatMatrix x(n, k);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r)
    for (std::size_t j = 0; j < k; ++j) x(pivot_cols[r], j) = rhs(r, j);
  return x;
}

}  // namespace pi3
