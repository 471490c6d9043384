#pragma once

// Exact integer/rational linear algebra over arbitrary-precision scalars:
// Hermite and Smith normal forms, saturated kernels, rational solving, and
// the quotient-projection construction used to form N/L for a saturated
// sublattice L.

#include "torquo/scalar.hpp"

#include <optional>
#include <utility>

namespace torquo {

// Basis of a sublattice of Z^n. Rows of `rows` are the basis vectors, kept
// in canonical row Hermite form, so equal sublattices have equal fields.
struct SublatticeBasis {
  Index ambient_rank = 0;
  IntMat rows;  // k x ambient_rank

  Index rank() const { return rows.rows(); }
  bool empty() const { return rows.rows() == 0; }
};

inline bool operator==(const SublatticeBasis& a, const SublatticeBasis& b) {
  return a.ambient_rank == b.ambient_rank && int_mat_eq(a.rows, b.rows);
}

// Row Hermite normal form: pivot columns strictly increasing, pivots
// positive, entries above a pivot reduced into [0, pivot). Zero rows are
// dropped. Row operations only, so the row lattice is preserved.
IntMat hermite_rows(IntMat a);

// Same reduction but keeps all m rows and returns the unimodular transform:
// result.first = U * a with U = result.second.
std::pair<IntMat, IntMat> hermite_rows_transform(IntMat a);

Index rank_int(const IntMat& a);

struct SmithResult {
  IntMat s;  // m x n, diagonal with d1 | d2 | ..., di >= 0
  IntMat u;  // m x m unimodular
  IntMat v;  // n x n unimodular, a = u * s * v
  std::vector<Int> invariant_factors() const;
};

SmithResult smith_decompose(IntMat a);

// Saturated basis of {x in Z^n : a x = 0}, canonical Hermite form.
SublatticeBasis kernel_saturated(const IntMat& a);

// Canonical (Hermite) basis of the lattice generated by the given rows; the
// rows need not be independent.
SublatticeBasis lattice_from_rows(const IntMat& rows, Index ambient_rank);

// Smallest saturated sublattice containing the given one: same Q-span,
// intersected with Z^n.
SublatticeBasis saturate(const SublatticeBasis& b);

bool is_saturated(const SublatticeBasis& b);

// Membership of v in the lattice spanned by b (exact).
bool in_lattice(const SublatticeBasis& b, const IntVec& v);

// Some solution of a x = b, or nullopt if inconsistent. Deterministic:
// pivots on the leftmost columns, free variables set to zero.
std::optional<RatVec> solve_rational(const RatMat& a, const RatVec& b);

Rat determinant(const RatMat& a);

// Exact inverse of a unimodular integer matrix.
IntMat inverse_unimodular(const IntMat& u);

// For a saturated sublattice L of rank l in Z^n: a surjection
// Q : Z^n -> Z^{n-l} with kernel exactly L, together with a section
// (Q * section = identity). Deterministic in the basis of L.
struct QuotientProjection {
  IntMat projection;  // (n-l) x n
  IntMat section;     // n x (n-l)
};

QuotientProjection quotient_projection(const SublatticeBasis& l);

}  // namespace torquo
