#pragma once

// Shared fixtures and generators for the unit and acceptance suites: the
// worked example fans, projective-space fans, random fan generators, and
// small oracles.

#include "torquo/concave.hpp"
#include "torquo/fan.hpp"

#include <random>
#include <vector>

namespace torquo::testing {

inline IntVec vec(std::initializer_list<int> xs) {
  IntVec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (int x : xs) v[i++] = x;
  return v;
}

inline IntMat mat(std::initializer_list<std::initializer_list<int>> rows) {
  IntMat m(static_cast<Index>(rows.size()),
           rows.size() ? static_cast<Index>(rows.begin()->size()) : 0);
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (int x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

// --- vectors of the open non-projective example -------------------------

inline IntVec v1() { return vec({-1, 0, 0}); }
inline IntVec v2() { return vec({0, -1, 0}); }
inline IntVec v3() { return vec({0, 0, -1}); }
inline IntVec v1p() { return vec({0, 1, 1}); }
inline IntVec v2p() { return vec({1, 0, 1}); }
inline IntVec v3p() { return vec({1, 1, 0}); }

// Delta: tau_1 = cone(v1, v3'), tau_2 = cone(v2, v1'), tau_3 = cone(v3, v2').
inline QuasiFan ex31_delta() {
  return QuasiFan::from_cones(
      {Cone::from_generators({v1(), v3p()}, 3),
       Cone::from_generators({v2(), v1p()}, 3),
       Cone::from_generators({v3(), v2p()}, 3)},
      3);
}

// Delta-tilde: sigma_1 = cone(v1,v3,v1',v3'), sigma_2 = cone(v1,v2,v1',v2'),
// sigma_3 = cone(v2,v3,v2',v3').
inline Cone ex31_sigma1() {
  return Cone::from_generators({v1(), v3(), v1p(), v3p()}, 3);
}
inline Cone ex31_sigma2() {
  return Cone::from_generators({v1(), v2(), v1p(), v2p()}, 3);
}
inline Cone ex31_sigma3() {
  return Cone::from_generators({v2(), v3(), v2p(), v3p()}, 3);
}
inline QuasiFan ex31_delta_tilde() {
  return QuasiFan::from_cones({ex31_sigma1(), ex31_sigma2(), ex31_sigma3()}, 3);
}

// Deformed cube fan: cones over the faces of the cube with vertices
// (+-1,+-1,+-1), the vertex (1,1,1) moved to (1,2,3).
inline QuasiFan ex33_cube() {
  auto w = [](int x, int y, int z) {
    if (x == 1 && y == 1 && z == 1) return vec({1, 2, 3});
    return vec({x, y, z});
  };
  std::vector<Cone> cones;
  for (int axis = 0; axis < 3; ++axis)
    for (int side : {-1, 1}) {
      std::vector<IntVec> gens;
      for (int a : {-1, 1})
        for (int b : {-1, 1}) {
          int c[3];
          c[axis] = side;
          c[(axis + 1) % 3] = a;
          c[(axis + 2) % 3] = b;
          gens.push_back(w(c[0], c[1], c[2]));
        }
      cones.push_back(Cone::from_generators(gens, 3));
    }
  return QuasiFan::from_cones(std::move(cones), 3);
}

// Two disjoint-looking quadrants in Z^4 (open subvariety of C^4).
inline QuasiFan ex34_source() {
  return QuasiFan::from_cones(
      {Cone::from_generators({vec({1, 0, 0, 0}), vec({0, 1, 0, 0})}, 4),
       Cone::from_generators({vec({0, 0, 1, 0}), vec({0, 0, 0, 1})}, 4)},
      4);
}

// S1: e1 -> e1, e2 -> e2, e3 -> e3, e4 -> e1 + e2.
inline LatticeMap ex34_map() {
  return LatticeMap{mat({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 0}})};
}

inline QuasiFan ex34_target() {
  return QuasiFan::from_cones(
      {Cone::from_generators({vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}, 3)}, 3);
}

// Three two-dimensional coordinate cones in Z^6.
inline QuasiFan ex35_source() {
  auto e = [](int i) {
    IntVec v = IntVec::Zero(6);
    v[i] = 1;
    return v;
  };
  return QuasiFan::from_cones({Cone::from_generators({e(0), e(1)}, 6),
                               Cone::from_generators({e(2), e(3)}, 6),
                               Cone::from_generators({e(4), e(5)}, 6)},
                              6);
}

// Columns v1, v3', v2, v1', v3, v2': each maximal cone of the source maps
// onto tau_1, tau_2, tau_3 respectively.
inline LatticeMap ex35_map() {
  IntMat m(3, 6);
  IntVec cols[6] = {v1(), v3p(), v2(), v1p(), v3(), v2p()};
  for (int j = 0; j < 6; ++j) m.col(j) = cols[j];
  return LatticeMap{m};
}

// --- small projective fans ----------------------------------------------

inline QuasiFan p1_fan() {
  return QuasiFan::from_cones(
      {Cone::from_generators({vec({1})}, 1), Cone::from_generators({vec({-1})}, 1)}, 1);
}

inline QuasiFan p2_fan() {
  return QuasiFan::from_cones(
      {Cone::from_generators({vec({1, 0}), vec({0, 1})}, 2),
       Cone::from_generators({vec({1, 0}), vec({-1, -1})}, 2),
       Cone::from_generators({vec({0, 1}), vec({-1, -1})}, 2)},
      2);
}

inline QuasiFan p1xp1_fan() {
  std::vector<Cone> cs;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      cs.push_back(Cone::from_generators({vec({sx, 0}), vec({0, sy})}, 2));
  return QuasiFan::from_cones(std::move(cs), 2);
}

inline QuasiFan quadrant_fan() {
  return QuasiFan::from_cones(
      {Cone::from_generators({vec({1, 0}), vec({0, 1})}, 2)}, 2);
}

inline QuasiFan torus_fan(Index n) {
  return QuasiFan::from_cones({Cone::zero(n)}, n);
}

// --- randomness ----------------------------------------------------------

inline IntMat random_unimodular(std::mt19937_64& rng, Index n, int steps = 8) {
  IntMat t = IntMat::Identity(n, n);
  if (n == 0) return t;
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int step = 0; step < steps; ++step) {
    Index i = pick(rng), j = pick(rng);
    switch (coin(rng)) {
      case 0:
        if (i != j) t.row(i) += t.row(j);
        break;
      case 1:
        if (i != j) t.row(i) -= t.row(j);
        break;
      default:
        t.row(i).swap(t.row(j));
        break;
    }
  }
  return t;
}

inline QuasiFan conjugate(const QuasiFan& q, const IntMat& t) {
  return apply(LatticeMap{t}, q);
}

// Random nonnegative integer combination of the generators of C_Delta,
// i.e. a random canonical concave family.
inline CanonicalFamily random_concave_combo(std::mt19937_64& rng,
                                            const FamilyCone& fc,
                                            int max_coeff = 3) {
  std::uniform_int_distribution<int> d(0, max_coeff);
  CanonicalFamily combo(static_cast<size_t>(fc.blocks),
                        IntVec::Zero(fc.rank));
  for (const auto& g : concave_generators(fc)) {
    int c = d(rng);
    if (c == 0) continue;
    for (Index b = 0; b < fc.blocks; ++b)
      combo[static_cast<size_t>(b)] += Int(c) * g[static_cast<size_t>(b)];
  }
  return combo;
}

// Normal fan of a random full-dimensional lattice polytope with at most
// max_pts vertices (complete by construction; retried until strictly
// convex, i.e. until the sampled polytope is full-dimensional).
inline QuasiFan random_polytope_normal_fan(std::mt19937_64& rng, Index n,
                                           int max_pts, int bound) {
  std::uniform_int_distribution<int> coord(-bound, bound);
  std::uniform_int_distribution<int> npts(static_cast<int>(n) + 1, max_pts);
  while (true) {
    std::vector<IntVec> pts;
    int k = npts(rng);
    for (int i = 0; i < k; ++i) {
      IntVec p(n);
      for (Index j = 0; j < n; ++j) p[j] = coord(rng);
      pts.push_back(std::move(p));
    }
    QuasiFan nf = normal_quasifan(family_from_forms(std::move(pts), n));
    if (is_fan(nf)) return nf;
  }
}

// Replace one full-dimensional maximal cone by its stellar subdivision at
// the canonical relative-interior ray.
inline QuasiFan stellar_subdivide(std::mt19937_64& rng, const QuasiFan& fan) {
  std::vector<size_t> candidates;
  for (size_t i = 0; i < fan.max_cones().size(); ++i)
    if (fan.max_cones()[i].dim() == fan.ambient_rank()) candidates.push_back(i);
  if (candidates.empty()) return fan;
  size_t pick = candidates[rng() % candidates.size()];
  const Cone& sigma = fan.max_cones()[pick];
  IntVec r = primitive(sigma.relative_interior_point());
  std::vector<Cone> cones;
  for (size_t i = 0; i < fan.max_cones().size(); ++i)
    if (i != pick) cones.push_back(fan.max_cones()[i]);
  for (const auto& f : faces(sigma)) {
    if (f.dim() != sigma.dim() - 1) continue;
    std::vector<IntVec> gens = f.extreme_rays();
    gens.push_back(r);
    cones.push_back(Cone::from_generators(gens, fan.ambient_rank()));
  }
  return QuasiFan::from_cones(std::move(cones), fan.ambient_rank());
}

}  // namespace torquo::testing
