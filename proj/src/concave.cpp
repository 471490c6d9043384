#include "torquo/concave.hpp"

#include <algorithm>
#include <set>

namespace torquo {

namespace {

struct ConeLess {
  bool operator()(const Cone& a, const Cone& b) const { return cone_less(a, b); }
};

// Generators of a cone as plain vectors: extreme rays plus +-lineality.
std::vector<IntVec> cone_generators(const Cone& c) {
  std::vector<IntVec> out = c.extreme_rays();
  for (Index i = 0; i < c.lineality().rows.rows(); ++i) {
    IntVec l = c.lineality().rows.row(i).transpose();
    out.push_back(l);
    out.push_back(-l);
  }
  return out;
}

std::vector<Cone> inclusion_maximal(std::vector<Cone> cones) {
  std::sort(cones.begin(), cones.end(), ConeLess{});
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  std::vector<Cone> out;
  for (size_t i = 0; i < cones.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < cones.size() && !dominated; ++j)
      if (i != j && cones[j].contains(cones[i])) dominated = true;
    if (!dominated) out.push_back(cones[i]);
  }
  return out;
}

QuasiFan refine_nocheck(const std::vector<QuasiFan>& fans, Index rank) {
  std::vector<Cone> cur = {Cone::full_space(rank)};
  for (const auto& f : fans) {
    std::vector<Cone> next;
    for (const auto& c : cur)
      for (const auto& d : f.max_cones()) next.push_back(intersect(c, d));
    cur = inclusion_maximal(std::move(next));
  }
  return QuasiFan::from_cones(std::move(cur), rank);
}

}  // namespace

LinearFormFamily family_from_forms(std::vector<IntVec> forms, Index rank) {
  LinearFormFamily fam;
  fam.ambient_rank = rank;
  for (size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].size() != rank)
      throw InvalidInputError("family_from_forms: form length mismatch");
    fam.forms.emplace_back(std::to_string(i), std::move(forms[i]));
  }
  return fam;
}

LinearFormFamily to_family(const CanonicalFamily& fam, Index rank) {
  return family_from_forms(std::vector<IntVec>(fam.begin(), fam.end()), rank);
}

bool is_concave(const QuasiFan& fan, const LinearFormFamily& fam) {
  if (fam.ambient_rank != fan.ambient_rank())
    throw InvalidInputError("is_concave: rank mismatch");
  if (fam.forms.empty()) throw InvalidInputError("is_concave: empty family");
  for (const auto& sigma : fan.max_cones()) {
    std::vector<IntVec> gens = cone_generators(sigma);
    bool found = false;
    for (size_t i = 0; i < fam.forms.size() && !found; ++i) {
      bool minimal = true;
      for (size_t j = 0; j < fam.forms.size() && minimal; ++j) {
        if (j == i) continue;
        for (const auto& g : gens)
          if (fam.forms[i].second.dot(g) > fam.forms[j].second.dot(g)) {
            minimal = false;
            break;
          }
      }
      found = minimal;
    }
    if (!found) return false;
  }
  return true;
}

bool is_concave(const QuasiFan& fan, const CanonicalFamily& fam) {
  return is_concave(fan, to_family(fam, fan.ambient_rank()));
}

bool is_strictly_concave(const QuasiFan& fan, const LinearFormFamily& fam) {
  if (!is_concave(fan, fam))
    throw InvalidInputError("is_strictly_concave: family is not concave");
  for (const auto& sigma : fan.max_cones()) {
    std::vector<IntVec> gens = cone_generators(sigma);
    Index assigned = -1;
    for (size_t i = 0; i < fam.forms.size() && assigned < 0; ++i) {
      bool minimal = true;
      for (size_t j = 0; j < fam.forms.size() && minimal; ++j) {
        if (j == i) continue;
        for (const auto& g : gens)
          if (fam.forms[i].second.dot(g) > fam.forms[j].second.dot(g)) {
            minimal = false;
            break;
          }
      }
      if (minimal) assigned = static_cast<Index>(i);
    }
    IntVec p = sigma.relative_interior_point();
    const IntVec& ui = fam.forms[static_cast<size_t>(assigned)].second;
    for (size_t j = 0; j < fam.forms.size(); ++j) {
      if (static_cast<Index>(j) == assigned) continue;
      if (fam.forms[j].second.dot(p) <= ui.dot(p)) return false;
    }
  }
  return true;
}

FamilyCone family_cone(const QuasiFan& fan) {
  if (fan.empty())
    throw InvalidInputError("family_cone: fan has no maximal cones");
  if (!is_fan(fan))
    throw InvalidInputError("family_cone: input is not strictly convex");
  const Index n = fan.ambient_rank();
  const Index m = static_cast<Index>(fan.max_cones().size());
  const Index big = n * m;
  std::vector<IntVec> rows;
  for (Index a = 0; a < m; ++a) {
    const Cone& sigma = fan.max_cones()[static_cast<size_t>(a)];
    for (const auto& v : sigma.extreme_rays()) {
      for (Index b = 0; b < m; ++b) {
        if (b == a) continue;
        IntVec row = IntVec::Zero(big);
        row.segment(a * n, n) = -v;
        row.segment(b * n, n) = v;
        rows.push_back(std::move(row));
      }
    }
  }
  GeneratorSet gs = enumerate_generators(rows, {}, big);
  FamilyCone fc;
  fc.rank = n;
  fc.blocks = m;
  fc.inequalities = rows.empty() ? IntMat(0, big) : stack_rows(rows, big);
  fc.extreme_rays = std::move(gs.rays);
  fc.lineality = std::move(gs.lineality);
  return fc;
}

CanonicalFamily decode_family(const IntVec& packed, Index rank, Index blocks) {
  if (packed.size() != rank * blocks)
    throw InvalidInputError("decode_family: size mismatch");
  CanonicalFamily fam;
  fam.reserve(static_cast<size_t>(blocks));
  for (Index b = 0; b < blocks; ++b) fam.push_back(packed.segment(b * rank, rank));
  return fam;
}

std::vector<CanonicalFamily> concave_generators(const FamilyCone& fc) {
  std::vector<CanonicalFamily> out;
  for (const auto& r : fc.extreme_rays)
    out.push_back(decode_family(r, fc.rank, fc.blocks));
  for (Index i = 0; i < fc.lineality.rows.rows(); ++i) {
    IntVec b = fc.lineality.rows.row(i).transpose();
    out.push_back(decode_family(b, fc.rank, fc.blocks));
    out.push_back(decode_family(IntVec(-b), fc.rank, fc.blocks));
  }
  return out;
}

QuasiFan normal_quasifan_regions(const LinearFormFamily& fam) {
  if (fam.forms.empty())
    throw InvalidInputError("normal_quasifan: empty family");
  const Index n = fam.ambient_rank;
  std::vector<Cone> regions;
  for (size_t i = 0; i < fam.forms.size(); ++i) {
    std::vector<IntVec> normals;
    for (size_t j = 0; j < fam.forms.size(); ++j) {
      if (j == i) continue;
      normals.push_back(fam.forms[j].second - fam.forms[i].second);
    }
    regions.push_back(Cone::from_inequalities(normals, n));
  }
  return QuasiFan::from_cones(inclusion_maximal(std::move(regions)), n);
}

QuasiFan normal_quasifan(const LinearFormFamily& fam) {
  QuasiFan q = normal_quasifan_regions(fam);
  if (!is_valid(q))
    throw InternalContradictionError(
        "normal_quasifan: regions do not form a quasi-fan");
  if (!is_complete(q))
    throw InternalContradictionError("normal_quasifan: regions are not complete");
  return q;
}

LinearFormFamily sum_family(const LinearFormFamily& a, const LinearFormFamily& b) {
  if (a.ambient_rank != b.ambient_rank)
    throw InvalidInputError("sum_family: rank mismatch");
  LinearFormFamily out;
  out.ambient_rank = a.ambient_rank;
  for (const auto& [la, ua] : a.forms)
    for (const auto& [lb, ub] : b.forms)
      out.forms.emplace_back("(" + la + "," + lb + ")", IntVec(ua + ub));
  return out;
}

QuasiFan common_refinement(const std::vector<QuasiFan>& fans) {
  if (fans.empty())
    throw InvalidInputError("common_refinement: no input fans");
  const Index n = fans.front().ambient_rank();
  for (const auto& f : fans) {
    if (f.ambient_rank() != n)
      throw InvalidInputError("common_refinement: rank mismatch");
    if (!is_complete(f))
      throw InvalidInputError("common_refinement: input is not complete");
  }
  QuasiFan r = refine_nocheck(fans, n);
  if (!is_valid(r))
    throw InternalContradictionError(
        "common_refinement: refinement is not a quasi-fan");
  return r;
}

QuasiFan generic_refinement(const QuasiFan& fan) {
  const Index n = fan.ambient_rank();
  FamilyCone fc = family_cone(fan);
  std::vector<CanonicalFamily> gens = concave_generators(fc);
  if (gens.empty())
    return QuasiFan::from_cones({Cone::full_space(n)}, n);
  std::vector<QuasiFan> parts;
  for (const auto& g : gens) {
    QuasiFan sigma_g = normal_quasifan(to_family(g, n));
    if (std::find(parts.begin(), parts.end(), sigma_g) == parts.end())
      parts.push_back(std::move(sigma_g));
  }
  QuasiFan star = refine_nocheck(parts, n);
  if (!is_valid(star))
    throw InternalContradictionError(
        "generic_refinement: refinement is not a quasi-fan");
  return star;
}

std::vector<std::vector<Index>> indecomposable_sets(const QuasiFan& fan) {
  std::vector<IntVec> r = rays(fan);
  if (r.empty()) return {{}};
  QuasiFan star = generic_refinement(fan);
  std::set<std::vector<Index>> sets;
  for (const auto& c : star.max_cones()) {
    std::vector<Index> s;
    for (size_t i = 0; i < r.size(); ++i)
      if (c.contains(r[i])) s.push_back(static_cast<Index>(i));
    sets.insert(std::move(s));
  }
  std::vector<std::vector<Index>> out;
  for (const auto& s : sets) {
    bool dominated = false;
    for (const auto& t : sets) {
      if (s == t || t.size() < s.size()) continue;
      if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  return out;
}

}  // namespace torquo
