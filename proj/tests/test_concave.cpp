#include "torquo/concave.hpp"

#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace torquo;
using namespace torquo::testing;

namespace {

std::mt19937_64 rng(74);

bool contained_in_some_max_cone(const std::vector<IntVec>& rays_of_fan,
                                const std::vector<Index>& set,
                                const QuasiFan& q) {
  for (const auto& c : q.max_cones()) {
    bool all = true;
    for (Index i : set)
      if (!c.contains(rays_of_fan[static_cast<size_t>(i)])) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("is_concave") {
  QuasiFan d = ex31_delta();
  CanonicalFamily zeros(3, IntVec::Zero(3));
  CHECK(is_concave(d, zeros));

  LinearFormFamily p2fam = family_from_forms(
      {vec({0, 0}), vec({0, 1}), vec({1, 0})}, 2);
  CHECK(is_concave(p2_fan(), p2fam));

  // no single form is minimal at both generators of the quadrant
  LinearFormFamily bad = family_from_forms({vec({-1, 0}), vec({0, -1})}, 2);
  CHECK(!is_concave(quadrant_fan(), bad));

  LinearFormFamily single = family_from_forms({vec({1})}, 1);
  CHECK(is_concave(p1_fan(), single));
}

TEST_CASE("is_strictly_concave") {
  LinearFormFamily p2fam = family_from_forms(
      {vec({0, 0}), vec({0, 1}), vec({1, 0})}, 2);
  CHECK(is_strictly_concave(p2_fan(), p2fam));

  LinearFormFamily dup = family_from_forms(
      {vec({0, 0}), vec({0, 0}), vec({0, 1}), vec({1, 0})}, 2);
  CHECK(!is_strictly_concave(p2_fan(), dup));

  LinearFormFamily single = family_from_forms({vec({1, 1})}, 2);
  CHECK(is_strictly_concave(quadrant_fan(), single));

  CHECK_THROWS_AS(is_strictly_concave(quadrant_fan(),
                                      family_from_forms({vec({-1, 0}), vec({0, -1})}, 2)),
                  InvalidInputError);
}

TEST_CASE("family_cone: projective line") {
  FamilyCone fc = family_cone(p1_fan());
  CHECK(fc.rank == 1);
  CHECK(fc.blocks == 2);
  CHECK(fc.lineality.rank() == 1);
  CHECK(int_vec_eq(fc.lineality.rows.row(0).transpose(), vec({1, 1})));
  REQUIRE(fc.extreme_rays.size() == 1);
  // canonical cone order puts the ray through -1 first, so the single
  // extreme family has its block-0 form strictly above the block-1 form
  CanonicalFamily g = decode_family(fc.extreme_rays[0], 1, 2);
  CHECK(g[0][0] > g[1][0]);
  CHECK(is_concave(p1_fan(), g));
}

TEST_CASE("family_cone: single cone is unconstrained") {
  FamilyCone fc = family_cone(quadrant_fan());
  CHECK(fc.blocks == 1);
  CHECK(fc.extreme_rays.empty());
  CHECK(fc.lineality.rank() == 2);
}

TEST_CASE("family_cone: deformed cube admits only global forms") {
  FamilyCone fc = family_cone(ex33_cube());
  CHECK(fc.extreme_rays.empty());
  CHECK(fc.lineality.rank() == 3);
  for (Index i = 0; i < fc.lineality.rows.rows(); ++i) {
    CanonicalFamily g = decode_family(fc.lineality.rows.row(i).transpose(), 3, 6);
    for (size_t b = 1; b < g.size(); ++b) CHECK(int_vec_eq(g[b], g[0]));
  }
}

TEST_CASE("family_cone: the six forced equalities of the non-projective example") {
  QuasiFan d = ex31_delta();
  // canonical cone order is tau_1, tau_2, tau_3 (sorted by first ray)
  REQUIRE(d.max_cones()[0] == Cone::from_generators({v1(), v3p()}, 3));
  REQUIRE(d.max_cones()[1] == Cone::from_generators({v2(), v1p()}, 3));
  REQUIRE(d.max_cones()[2] == Cone::from_generators({v3(), v2p()}, 3));
  FamilyCone fc = family_cone(d);
  CHECK(fc.lineality.rank() == 3);  // the global forms
  CHECK(fc.extreme_rays.size() == 1);
  for (const auto& g : concave_generators(fc)) {
    const IntVec &u1 = g[0], &u2 = g[1], &u3 = g[2];
    CHECK(u1.dot(v1()) == u2.dot(v1()));
    CHECK(u1.dot(v1p()) == u2.dot(v1p()));
    CHECK(u1.dot(v3()) == u3.dot(v3()));
    CHECK(u1.dot(v3p()) == u3.dot(v3p()));
    CHECK(u2.dot(v2()) == u3.dot(v2()));
    CHECK(u2.dot(v2p()) == u3.dot(v2p()));
    CHECK(is_concave(d, g));
  }
}

TEST_CASE("normal_quasifan") {
  QuasiFan pt = normal_quasifan(family_from_forms({vec({0, 0, 0})}, 3));
  REQUIRE(pt.max_cones().size() == 1);
  CHECK(pt.max_cones()[0].is_full_space());

  QuasiFan seg = normal_quasifan(family_from_forms({vec({0}), vec({1})}, 1));
  CHECK(seg == p1_fan());

  QuasiFan p2n = normal_quasifan(
      family_from_forms({vec({0, 0}), vec({0, 1}), vec({1, 0})}, 2));
  QuasiFan expect = QuasiFan::from_cones(
      {Cone::from_generators({vec({1, 0}), vec({0, 1})}, 2),
       Cone::from_generators({vec({1, 0}), vec({-1, -1})}, 2),
       Cone::from_generators({vec({0, 1}), vec({-1, -1})}, 2)},
      2);
  CHECK(p2n == expect);
}

TEST_CASE("sum_family basics") {
  LinearFormFamily a = family_from_forms({vec({1, 0}), vec({0, 1})}, 2);
  LinearFormFamily z = family_from_forms({vec({0, 0})}, 2);
  LinearFormFamily s = sum_family(a, z);
  REQUIRE(s.size() == 2);
  CHECK(int_vec_eq(s.forms[0].second, vec({1, 0})));
  CHECK(int_vec_eq(s.forms[1].second, vec({0, 1})));

  LinearFormFamily b = family_from_forms({vec({0, 0}), vec({1, 1}), vec({2, 0})}, 2);
  CHECK(sum_family(a, b).size() == 6);
}

TEST_CASE("common_refinement: identity, idempotence, rotated projective plane") {
  QuasiFan full = QuasiFan::from_cones({Cone::full_space(2)}, 2);
  CHECK(common_refinement({full, p2_fan()}) == p2_fan());
  CHECK(common_refinement({p1_fan(), p1_fan()}) == p1_fan());

  // rotate the projective-plane fan by the 90-degree unimodular matrix
  IntMat rot = mat({{0, -1}, {1, 0}});
  QuasiFan rotated = conjugate(p2_fan(), rot);
  QuasiFan ref = common_refinement({p2_fan(), rotated});
  // oracle: brute-force pairwise intersections, keep the 2-dimensional ones
  QuasiFan p2 = p2_fan();
  std::vector<Cone> expected;
  for (const auto& a : p2.max_cones())
    for (const auto& b : rotated.max_cones()) {
      Cone c = intersect(a, b);
      if (c.dim() == 2) expected.push_back(c);
    }
  CHECK(ref == QuasiFan::from_cones(expected, 2));
  CHECK(is_complete(ref));

  CHECK_THROWS_AS(common_refinement({quadrant_fan()}), InvalidInputError);
}

TEST_CASE("normal_quasifan of a sum is the common refinement") {
  QuasiFan d = ex31_delta();
  FamilyCone fc = family_cone(d);
  for (int t = 0; t < 8; ++t) {
    CanonicalFamily a = random_concave_combo(rng, fc);
    CanonicalFamily b = random_concave_combo(rng, fc);
    LinearFormFamily fa = to_family(a, 3), fb = to_family(b, 3);
    QuasiFan lhs = normal_quasifan(sum_family(fa, fb));
    QuasiFan rhs = common_refinement({normal_quasifan(fa), normal_quasifan(fb)});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("generic_refinement: trivial cases") {
  QuasiFan single = generic_refinement(quadrant_fan());
  REQUIRE(single.max_cones().size() == 1);
  CHECK(single.max_cones()[0].is_full_space());

  QuasiFan cube = generic_refinement(ex33_cube());
  REQUIRE(cube.max_cones().size() == 1);
  CHECK(cube.max_cones()[0].is_full_space());
}

TEST_CASE("generic_refinement of the non-projective example") {
  QuasiFan d = ex31_delta();
  QuasiFan star = generic_refinement(d);
  // three regions, each sigma_i thickened by the diagonal line
  REQUIRE(star.max_cones().size() == 3);
  IntVec diag = vec({1, 1, 1});
  for (const auto& c : star.max_cones()) {
    CHECK(c.dim() == 3);
    CHECK(c.lineality_dim() == 1);
    CHECK(c.contains(diag));
    CHECK(c.contains(IntVec(-diag)));
  }
  auto covered = [&](const Cone& sigma) {
    for (const auto& c : star.max_cones())
      if (c.contains(sigma)) return true;
    return false;
  };
  CHECK(covered(ex31_sigma1()));
  CHECK(covered(ex31_sigma2()));
  CHECK(covered(ex31_sigma3()));
  // every maximal cone of Delta sits inside a maximal cone of Sigma*
  for (const auto& tau : d.max_cones()) CHECK(covered(tau));
}

TEST_CASE("generic_refinement refines the normal quasi-fan of every generator") {
  for (const QuasiFan& d : {ex31_delta(), p2_fan(), p1xp1_fan()}) {
    FamilyCone fc = family_cone(d);
    QuasiFan star = generic_refinement(d);
    for (const auto& g : concave_generators(fc)) {
      QuasiFan sg = normal_quasifan(to_family(g, d.ambient_rank()));
      for (const auto& c : star.max_cones()) {
        bool inside = false;
        for (const auto& region : sg.max_cones())
          if (region.contains(c)) {
            inside = true;
            break;
          }
        CHECK(inside);
      }
    }
  }
}

TEST_CASE("indecomposable_sets: worked examples") {
  // rays of Delta sort as v1, v2, v3, v1', v2', v3'
  auto sets = indecomposable_sets(ex31_delta());
  REQUIRE(sets.size() == 3);
  std::set<std::vector<Index>> got(sets.begin(), sets.end());
  CHECK(got.count({0, 2, 3, 5}));  // v1, v3, v1', v3'
  CHECK(got.count({0, 1, 3, 4}));  // v1, v2, v1', v2'
  CHECK(got.count({1, 2, 4, 5}));  // v2, v3, v2', v3'

  auto cube_sets = indecomposable_sets(ex33_cube());
  REQUIRE(cube_sets.size() == 1);
  CHECK(cube_sets[0].size() == 8);

  auto p2_sets = indecomposable_sets(p2_fan());
  REQUIRE(p2_sets.size() == 3);
  for (const auto& s : p2_sets) CHECK(s.size() == 2);

  auto torus_sets = indecomposable_sets(torus_fan(2));
  REQUIRE(torus_sets.size() == 1);
  CHECK(torus_sets[0].empty());
}

TEST_CASE("sampling oracle: indecomposable sets fit every concave family") {
  QuasiFan d = ex31_delta();
  FamilyCone fc = family_cone(d);
  auto sets = indecomposable_sets(d);
  std::vector<IntVec> r = rays(d);
  for (int t = 0; t < 25; ++t) {
    CanonicalFamily u = random_concave_combo(rng, fc);
    LinearFormFamily fam = to_family(u, 3);
    REQUIRE(is_concave(d, fam));
    // plain, duplicated-index, and product-sum paddings
    LinearFormFamily padded = fam;
    padded.forms.push_back({"dup", fam.forms[t % fam.forms.size()].second});
    LinearFormFamily summed =
        sum_family(fam, to_family(random_concave_combo(rng, fc), 3));
    for (const LinearFormFamily* f : {&fam, &padded, &summed}) {
      QuasiFan su = normal_quasifan_regions(*f);
      for (const auto& s : sets) CHECK(contained_in_some_max_cone(r, s, su));
    }
  }
}
