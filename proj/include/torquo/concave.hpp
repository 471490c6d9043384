#pragma once

// Concave families of integral linear forms on a fan, the cone of all
// canonical concave families, normal quasi-fans, common refinements, the
// generic refinement, and maximal indecomposable ray sets.

#include "torquo/fan.hpp"

#include <string>
#include <vector>

namespace torquo {

// A finite labelled family (u_i) of integral linear forms in M.
struct LinearFormFamily {
  Index ambient_rank = 0;
  std::vector<std::pair<std::string, IntVec>> forms;

  size_t size() const { return forms.size(); }
};

LinearFormFamily family_from_forms(std::vector<IntVec> forms, Index rank);

// A family indexed by the maximal cones of a fixed fan, in the fan's
// canonical cone order (the assignment i(sigma) = sigma).
using CanonicalFamily = std::vector<IntVec>;

LinearFormFamily to_family(const CanonicalFamily& fam, Index rank);

// On each maximal cone some member is pointwise minimal.
bool is_concave(const QuasiFan& fan, const LinearFormFamily& fam);
bool is_concave(const QuasiFan& fan, const CanonicalFamily& fam);

// The minimal member on each maximal cone is strictly smaller than every
// other member on the relative interior (tested exactly at the interior
// sample point: a form that is nonnegative on a cone and vanishes at a
// relative interior point vanishes on the span).
bool is_strictly_concave(const QuasiFan& fan, const LinearFormFamily& fam);

// The cone C_Delta of all canonical concave families inside (Z^n)^m,
// m = #maximal cones, block i holding the form assigned to cone i. The
// inequality rows encode (u_tau - u_sigma)(v) >= 0 for every ordered pair
// of maximal cones and every generator v of sigma.
struct FamilyCone {
  Index rank = 0;        // n
  Index blocks = 0;      // m
  IntMat inequalities;   // rows in Z^{n*m}
  std::vector<IntVec> extreme_rays;  // canonical generators mod lineality
  SublatticeBasis lineality;         // always contains the global forms
};

FamilyCone family_cone(const QuasiFan& fan);

CanonicalFamily decode_family(const IntVec& packed, Index rank, Index blocks);

// Generating set of C_Delta: the extreme rays together with +-each
// lineality basis vector, decoded as canonical families.
std::vector<CanonicalFamily> concave_generators(const FamilyCone& fc);

// The complete quasi-fan of regions tau_i = {v : u_i(v) <= u_j(v) for all j}
// for the inclusion-maximal distinct regions; dual to conv(u_i).
QuasiFan normal_quasifan(const LinearFormFamily& fam);

// Same, skipping the quasi-fan validation of the result (for bulk oracle
// sampling; the regions of a point family always form a quasi-fan).
QuasiFan normal_quasifan_regions(const LinearFormFamily& fam);

// Product-indexed family of pairwise sums; its polytope is the Minkowski
// sum.
LinearFormFamily sum_family(const LinearFormFamily& a, const LinearFormFamily& b);

// Maximal cones are the inclusion-maximal intersections of choices of
// maximal cones, one from each input; inputs must be complete.
QuasiFan common_refinement(const std::vector<QuasiFan>& fans);

// Sigma*: the common refinement of the normal quasi-fans of a generating
// set of C_Delta. Every concave family's normal quasi-fan is refined by it.
QuasiFan generic_refinement(const QuasiFan& fan);

// Maximal indecomposable subsets of the rays of the fan, as sorted index
// lists into rays(fan). A fan without rays has the single set {}.
std::vector<std::vector<Index>> indecomposable_sets(const QuasiFan& fan);

}  // namespace torquo
