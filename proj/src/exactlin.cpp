#include "torquo/exactlin.hpp"

#include <algorithm>
#include <cassert>

namespace torquo {

namespace {

// Index of the row in [from, a.rows()) with the smallest nonzero |a(i,col)|,
// ties to the lowest index; -1 if the column is zero below `from`.
Index pick_pivot_row(const IntMat& a, Index from, Index col) {
  Index best = -1;
  for (Index i = from; i < a.rows(); ++i) {
    if (a(i, col) == 0) continue;
    if (best < 0 || cmp(abs(a(i, col)), abs(a(best, col))) < 0) best = i;
  }
  return best;
}

// Shared Hermite elimination; u, when non-null, accumulates the row
// transform applied to the identity.
Index hermite_inplace(IntMat& a, IntMat* u) {
  const Index m = a.rows(), n = a.cols();
  Index r = 0;
  auto swap_rows = [&](Index i, Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    if (u) u->row(i).swap(u->row(j));
  };
  auto add_row = [&](Index dst, const Int& q, Index src) {
    if (q == 0) return;
    a.row(dst) -= q * a.row(src);
    if (u) u->row(dst) -= q * u->row(src);
  };
  auto negate_row = [&](Index i) {
    a.row(i) = -a.row(i);
    if (u) u->row(i) = -u->row(i);
  };
  for (Index c = 0; c < n && r < m; ++c) {
    while (true) {
      Index p = pick_pivot_row(a, r, c);
      if (p < 0) break;
      swap_rows(r, p);
      bool clean = true;
      for (Index i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        add_row(i, fdiv(a(i, c), a(r, c)), r);
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) negate_row(r);
    for (Index i = 0; i < r; ++i) add_row(i, fdiv(a(i, c), a(r, c)), r);
    ++r;
  }
  return r;  // rank
}

}  // namespace

IntMat hermite_rows(IntMat a) {
  Index r = hermite_inplace(a, nullptr);
  return a.topRows(r);
}

std::pair<IntMat, IntMat> hermite_rows_transform(IntMat a) {
  IntMat u = IntMat::Identity(a.rows(), a.rows());
  hermite_inplace(a, &u);
  return {std::move(a), std::move(u)};
}

Index rank_int(const IntMat& a) {
  IntMat c = a;
  return hermite_inplace(c, nullptr);
}

std::vector<Int> SmithResult::invariant_factors() const {
  std::vector<Int> d;
  Index k = std::min(s.rows(), s.cols());
  for (Index i = 0; i < k; ++i)
    if (s(i, i) != 0) d.push_back(s(i, i));
  return d;
}

SmithResult smith_decompose(IntMat a) {
  const Index m = a.rows(), n = a.cols();
  IntMat u = IntMat::Identity(m, m);
  IntMat v = IntMat::Identity(n, n);
  // Invariant: original = u * a * v. Each elementary operation on `a` is
  // compensated by the inverse operation accumulated into u or v.
  auto row_swap = [&](Index i, Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    u.col(i).swap(u.col(j));
  };
  auto row_add = [&](Index dst, const Int& q, Index src) {
    if (q == 0) return;
    a.row(dst) += q * a.row(src);
    u.col(src) -= q * u.col(dst);
  };
  auto row_neg = [&](Index i) {
    a.row(i) = -a.row(i);
    u.col(i) = -u.col(i);
  };
  auto col_swap = [&](Index i, Index j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    v.row(i).swap(v.row(j));
  };
  auto col_add = [&](Index dst, const Int& q, Index src) {
    if (q == 0) return;
    a.col(dst) += q * a.col(src);
    v.row(src) -= q * v.row(dst);
  };

  const Index k = std::min(m, n);
  for (Index t = 0; t < k; ++t) {
    // Move the absolutely smallest nonzero entry of the trailing block to
    // (t, t).
    Index pi = -1, pj = -1;
    for (Index i = t; i < m; ++i)
      for (Index j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        if (pi < 0 || cmp(abs(a(i, j)), abs(a(pi, pj))) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);

    while (true) {
      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        row_add(i, -fdiv(a(i, t), a(t, t)), t);
        if (a(i, t) != 0) {
          row_swap(t, i);  // remainder is smaller; iterate
          clean = false;
        }
      }
      for (Index j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        col_add(j, -fdiv(a(t, j), a(t, t)), t);
        if (a(t, j) != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Diagonal at t; enforce divisibility of the trailing block.
      Index bi = -1, bj = -1;
      for (Index i = t + 1; i < m && bi < 0; ++i)
        for (Index j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      row_add(t, 1, bi);
    }
    if (a(t, t) < 0) row_neg(t);
  }
  return {std::move(a), std::move(u), std::move(v)};
}

SublatticeBasis kernel_saturated(const IntMat& a) {
  const Index n = a.cols();
  IntMat at = a.transpose();
  auto [h, u] = hermite_rows_transform(std::move(at));
  Index r = 0;
  for (Index i = 0; i < h.rows(); ++i) {
    bool nonzero = false;
    for (Index j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) r = i + 1;
  }
  // Rows r..n-1 of u span the full integer kernel (a direct summand, hence
  // saturated); renormalize to the canonical Hermite basis.
  IntMat ker = u.bottomRows(n - r);
  return SublatticeBasis{n, hermite_rows(std::move(ker))};
}

SublatticeBasis lattice_from_rows(const IntMat& rows, Index ambient_rank) {
  if (rows.rows() > 0 && rows.cols() != ambient_rank)
    throw InvalidInputError("lattice_from_rows: wrong ambient rank");
  IntMat r = rows;
  if (r.cols() != ambient_rank) r.resize(0, ambient_rank);
  return SublatticeBasis{ambient_rank, hermite_rows(std::move(r))};
}

SublatticeBasis saturate(const SublatticeBasis& b) {
  // (row span)^perp as a lattice, then its perp again: V cap Z^n.
  SublatticeBasis perp = kernel_saturated(b.rows.rows() == 0
                                              ? IntMat(0, b.ambient_rank)
                                              : b.rows);
  return kernel_saturated(perp.rows.rows() == 0 ? IntMat(0, b.ambient_rank)
                                                : perp.rows);
}

bool is_saturated(const SublatticeBasis& b) { return saturate(b) == b; }

bool in_lattice(const SublatticeBasis& b, const IntVec& v) {
  if (v.size() != b.ambient_rank)
    throw InvalidInputError("in_lattice: wrong vector length");
  IntVec w = v;
  for (Index i = 0; i < b.rows.rows(); ++i) {
    Index p = 0;
    while (p < b.rows.cols() && b.rows(i, p) == 0) ++p;
    if (p == b.rows.cols()) continue;
    if (w[p] % b.rows(i, p) != 0) return false;
    Int q = w[p] / b.rows(i, p);
    w -= q * b.rows.row(i).transpose();
  }
  return is_zero(w);
}

std::optional<RatVec> solve_rational(const RatMat& a, const RatVec& b) {
  if (a.rows() != b.size())
    throw InvalidInputError("solve_rational: dimension mismatch");
  const Index m = a.rows(), n = a.cols();
  RatMat w(m, n + 1);
  w.leftCols(n) = a;
  w.col(n) = b;
  std::vector<Index> pivot_col;
  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    Index p = -1;
    for (Index i = r; i < m; ++i)
      if (w(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    w.row(r).swap(w.row(p));
    for (Index i = 0; i < m; ++i) {
      if (i == r || w(i, c) == 0) continue;
      Rat f = w(i, c) / w(r, c);
      w.row(i) -= f * w.row(r);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (Index i = r; i < m; ++i)
    if (w(i, n) != 0) return std::nullopt;
  RatVec x = RatVec::Zero(n);
  for (Index i = 0; i < r; ++i) x[pivot_col[static_cast<size_t>(i)]] = w(i, n) / w(i, pivot_col[static_cast<size_t>(i)]);
  return x;
}

Rat determinant(const RatMat& a) {
  if (a.rows() != a.cols())
    throw InvalidInputError("determinant: matrix not square");
  RatMat w = a;
  const Index n = w.rows();
  Rat det = 1;
  for (Index c = 0; c < n; ++c) {
    Index p = -1;
    for (Index i = c; i < n; ++i)
      if (w(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      w.row(p).swap(w.row(c));
      det = -det;
    }
    det *= w(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (w(i, c) == 0) continue;
      Rat f = w(i, c) / w(c, c);
      w.row(i) -= f * w.row(c);
    }
  }
  return det;
}

IntMat inverse_unimodular(const IntMat& u) {
  if (u.rows() != u.cols())
    throw InvalidInputError("inverse_unimodular: matrix not square");
  const Index n = u.rows();
  RatMat w(n, 2 * n);
  w.leftCols(n) = to_rational(u);
  w.rightCols(n) = RatMat::Identity(n, n);
  for (Index c = 0; c < n; ++c) {
    Index p = -1;
    for (Index i = c; i < n; ++i)
      if (w(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) throw InvalidInputError("inverse_unimodular: singular matrix");
    w.row(p).swap(w.row(c));
    Rat piv = w(c, c);
    w.row(c) /= piv;
    for (Index i = 0; i < n; ++i) {
      if (i == c || w(i, c) == 0) continue;
      Rat f = w(i, c);
      w.row(i) -= f * w.row(c);
    }
  }
  IntMat inv(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Rat e = w(i, n + j);
      if (e.get_den() != 1)
        throw InvalidInputError("inverse_unimodular: matrix not unimodular");
      inv(i, j) = e.get_num();
    }
  return inv;
}

QuotientProjection quotient_projection(const SublatticeBasis& l) {
  const Index n = l.ambient_rank;
  const Index k = l.rank();
  if (k == 0)
    return {IntMat::Identity(n, n), IntMat::Identity(n, n)};
  SmithResult sr = smith_decompose(l.rows);
  for (Index i = 0; i < k; ++i)
    if (sr.s(i, i) != 1)
      throw InvalidInputError("quotient_projection: sublattice not saturated");
  // rows of sr.v: the first k form a basis of L, the rest complete it to a
  // basis of Z^n. Coordinates w.r.t. that basis are (V^{-T}) x.
  IntMat vinv_t = inverse_unimodular(sr.v).transpose();
  QuotientProjection qp;
  qp.projection = vinv_t.bottomRows(n - k);
  qp.section = sr.v.bottomRows(n - k).transpose();
  assert(int_mat_eq(qp.projection * qp.section, IntMat::Identity(n - k, n - k)));
  return qp;
}

}  // namespace torquo
