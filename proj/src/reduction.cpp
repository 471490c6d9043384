#include "torquo/reduction.hpp"

namespace torquo {

QuasiFan sigma_of(const QuasiFan& fan) {
  const Index n = fan.ambient_rank();
  std::vector<IntVec> r = rays(fan);
  std::vector<Cone> hulls;
  for (const auto& set : indecomposable_sets(fan)) {
    std::vector<IntVec> gens;
    for (Index i : set) gens.push_back(r[static_cast<size_t>(i)]);
    hulls.push_back(Cone::from_generators(gens, n));
  }
  QuasiFan sigma = QuasiFan::from_cones(std::move(hulls), n);
  if (!is_valid(sigma))
    throw InternalContradictionError(
        "sigma_of: hulls of indecomposable sets do not form a quasi-fan");
  if (!is_map(identity_map(n), fan, sigma))
    throw InternalContradictionError(
        "sigma_of: identity is not a map from the fan to sigma");
  return sigma;
}

ReductionResult reduce(const QuasiFan& fan) {
  ReductionResult out;
  out.input = fan;
  out.indecomposable_sets = indecomposable_sets(fan);
  out.sigma = sigma_of(fan);
  QuotientFanResult qf = quotient_fan(out.sigma);
  out.v_dim = qf.L.rank();
  out.L = std::move(qf.L);
  out.Q = std::move(qf.Q);
  out.quotient = std::move(qf.quotient);
  // Q maps the input fan into the quotient fan (each cone of the fan lies
  // in a cone of sigma).
  if (!is_map(out.Q, fan, out.quotient))
    throw InternalContradictionError(
        "reduce: projection is not a map from the fan to the quotient fan");
  out.surjective = is_surjective(out.Q, fan, out.quotient);
  out.qp_reduction_exists = out.surjective;
  return out;
}

bool has_qp_reduction(const QuasiFan& fan) { return reduce(fan).surjective; }

bool is_quasiprojective(const QuasiFan& fan) {
  ReductionResult r = reduce(fan);
  return r.L.rank() == 0 && r.quotient == fan;
}

QuotientVerdict quotient_existence(const QuasiFan& src, const LatticeMap& s1,
                                   const QuasiFan& quot) {
  if (!is_map(s1, src, quot))
    throw InvalidInputError(
        "quotient_existence: s1 is not a map of the given fans");
  if (!lattice_surjective(s1))
    throw InvalidInputError(
        "quotient_existence: s1 is not surjective as a lattice map, so it "
        "cannot be a toric quotient");
  QuotientVerdict v;
  v.s1_is_map = true;
  v.kernel = kernel_saturated(s1.matrix);
  v.s1_surjective = is_surjective(s1, src, quot);
  v.reduction = reduce(quot);
  v.q_surjective = v.reduction.surjective;
  LatticeMap s = compose(v.reduction.Q, s1);
  v.composition_surjective = is_surjective(s, src, v.reduction.quotient);
  v.exists = v.composition_surjective;
  return v;
}

}  // namespace torquo
