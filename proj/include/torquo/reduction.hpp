#pragma once

// The toric quasi-projective reduction pipeline: indecomposable ray sets ->
// quasi-fan Sigma -> quotient fan, plus the decision procedures for
// existence of quasi-projective reductions and of quasi-projective
// quotients of subtorus actions.

#include "torquo/concave.hpp"
#include "torquo/fan.hpp"

namespace torquo {

struct ReductionResult {
  QuasiFan input;
  std::vector<std::vector<Index>> indecomposable_sets;  // indices into rays(input)
  QuasiFan sigma;     // hulls of the indecomposable ray sets; a quasi-fan
  Index v_dim = 0;    // dimension of the common lineality space V of sigma
  SublatticeBasis L;  // V cap Z^n, saturated
  LatticeMap Q;       // projection to Z^{n - rank L}
  QuasiFan quotient;  // the fan Delta-tilde
  bool surjective = false;
  bool qp_reduction_exists = false;
};

// The quasi-fan Sigma whose maximal cones are the hulls of the maximal
// indecomposable ray sets; the identity is a map of quasi-fans from the
// input to Sigma.
QuasiFan sigma_of(const QuasiFan& fan);

ReductionResult reduce(const QuasiFan& fan);

bool has_qp_reduction(const QuasiFan& fan);

// The reduction is the identity: L = 0 and the quotient fan equals the
// input. Equivalent to the variety itself being quasi-projective.
bool is_quasiprojective(const QuasiFan& fan);

struct QuotientVerdict {
  bool s1_is_map = false;
  bool s1_surjective = false;       // surjectivity of the toric quotient map
  bool q_surjective = false;        // surjectivity of the reduction of the target
  bool composition_surjective = false;
  bool exists = false;              // = composition_surjective
  SublatticeBasis kernel;           // sublattice of the acting subtorus
  ReductionResult reduction;        // reduction of the quotient fan
};

// Decides whether the subtorus action with toric quotient map s1 admits a
// quotient in the quasi-projective category: composes s1 with the
// reduction of the quotient fan and tests surjectivity. s1 must be a map
// of fans and surjective as a lattice map.
QuotientVerdict quotient_existence(const QuasiFan& src, const LatticeMap& s1,
                                   const QuasiFan& quot);

}  // namespace torquo
