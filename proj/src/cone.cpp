#include "torquo/cone.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <deque>
#include <set>
#include <utility>

namespace torquo {

namespace {

// Tightness bitset over the full inequality list of one enumeration run.
struct BitRow {
  std::vector<uint64_t> w;
  void resize(size_t nbits) { w.assign((nbits + 63) / 64, 0); }
  void set(size_t i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
  bool contains(const BitRow& o) const {  // this >= o as sets
    for (size_t k = 0; k < w.size(); ++k)
      if ((o.w[k] & ~w[k]) != 0) return false;
    return true;
  }
  static BitRow intersect(const BitRow& a, const BitRow& b) {
    BitRow r;
    r.w.resize(a.w.size());
    for (size_t k = 0; k < a.w.size(); ++k) r.w[k] = a.w[k] & b.w[k];
    return r;
  }
};

struct DDRay {
  IntVec v;
  BitRow zero;
};

void check_lengths(const std::vector<IntVec>& vs, Index rank, const char* what) {
  for (const auto& v : vs)
    if (v.size() != rank) throw InvalidInputError(std::string(what) + ": vector length does not match ambient rank");
}

}  // namespace

GeneratorSet enumerate_generators(const std::vector<IntVec>& inequalities,
                                  const std::vector<IntVec>& equations,
                                  Index rank) {
  check_lengths(inequalities, rank, "enumerate_generators");
  check_lengths(equations, rank, "enumerate_generators");

  const size_t m = inequalities.size();
  SublatticeBasis ker = kernel_saturated(
      equations.empty() ? IntMat(0, rank) : stack_rows(equations, rank));
  std::vector<IntVec> lines = unstack_rows(ker.rows);
  std::vector<DDRay> rays;

  for (size_t k = 0; k < m; ++k) {
    const IntVec& u = inequalities[k];

    // A line not orthogonal to u turns into the single new ray; everything
    // else is sheared onto the hyperplane u = 0.
    Index jl = -1;
    std::vector<Int> lv(lines.size());
    for (size_t i = 0; i < lines.size(); ++i) {
      lv[i] = u.dot(lines[i]);
      if (jl < 0 && lv[i] != 0) jl = static_cast<Index>(i);
    }
    if (jl >= 0) {
      IntVec l0 = lines[static_cast<size_t>(jl)];
      Int v0 = lv[static_cast<size_t>(jl)];
      if (v0 < 0) {
        l0 = -l0;
        v0 = -v0;
      }
      std::vector<IntVec> kept;
      for (size_t i = 0; i < lines.size(); ++i) {
        if (static_cast<Index>(i) == jl) continue;
        kept.push_back(lv[i] == 0 ? lines[i]
                                  : primitive(v0 * lines[i] - lv[i] * l0));
      }
      lines = std::move(kept);
      for (auto& r : rays) {
        Int rv = u.dot(r.v);
        if (rv != 0) r.v = primitive(v0 * r.v - rv * l0);
        r.zero.set(k);
      }
      DDRay nr;
      nr.v = std::move(l0);
      nr.zero.resize(m);
      for (size_t j = 0; j < k; ++j) nr.zero.set(j);  // was lineality before
      rays.push_back(std::move(nr));
      continue;
    }

    std::vector<size_t> pos, neg;
    std::vector<Int> rv(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) {
      rv[i] = u.dot(rays[i].v);
      int s = sgn(rv[i]);
      if (s > 0)
        pos.push_back(i);
      else if (s < 0)
        neg.push_back(i);
      else
        rays[i].zero.set(k);
    }
    if (neg.empty()) continue;

    std::vector<DDRay> combos;
    for (size_t p : pos) {
      for (size_t q : neg) {
        BitRow t = BitRow::intersect(rays[p].zero, rays[q].zero);
        bool adjacent = true;
        for (size_t s = 0; s < rays.size() && adjacent; ++s)
          if (s != p && s != q && rays[s].zero.contains(t)) adjacent = false;
        if (!adjacent) continue;
        DDRay w;
        w.v = primitive(rv[p] * rays[q].v - rv[q] * rays[p].v);
        t.set(k);
        w.zero = std::move(t);
        combos.push_back(std::move(w));
      }
    }
    std::vector<DDRay> next;
    next.reserve(rays.size() + combos.size());
    for (size_t i = 0; i < rays.size(); ++i)
      if (rv[i] >= 0) next.push_back(std::move(rays[i]));
    for (auto& w : combos) next.push_back(std::move(w));
    rays = std::move(next);
  }

  GeneratorSet out;
  out.lineality = lines.empty()
                      ? SublatticeBasis{rank, IntMat(0, rank)}
                      : saturate(lattice_from_rows(stack_rows(lines, rank), rank));
  out.rays.reserve(rays.size());
  if (out.lineality.rank() > 0) {
    QuotientProjection qp = quotient_projection(out.lineality);
    for (auto& r : rays) {
      IntVec w = primitive(qp.projection * r.v);
      if (is_zero(w))
        throw InternalContradictionError(
            "double description produced a ray inside the lineality space");
      out.rays.push_back(qp.section * w);
    }
  } else {
    for (auto& r : rays) out.rays.push_back(primitive(std::move(r.v)));
  }
  std::sort(out.rays.begin(), out.rays.end(), lex_less);
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end(), int_vec_eq),
                 out.rays.end());
  return out;
}

Cone Cone::finish(GeneratorSet primal, Index rank) {
  GeneratorSet polar = enumerate_generators(
      primal.rays, unstack_rows(primal.lineality.rows), rank);
  Cone c;
  c.rank_ = rank;
  c.rays_ = std::move(primal.rays);
  c.lineality_ = std::move(primal.lineality);
  c.facet_normals_ = std::move(polar.rays);
  c.span_equations_ = std::move(polar.lineality);
  c.dim_ = rank - c.span_equations_.rank();
  c.verify();
  return c;
}

void Cone::verify() const {
  auto satisfies = [&](const IntVec& v, bool on_boundary_only) {
    for (Index i = 0; i < span_equations_.rows.rows(); ++i)
      if (span_equations_.rows.row(i).transpose().dot(v) != 0) return false;
    for (const auto& u : facet_normals_) {
      Int d = u.dot(v);
      if (on_boundary_only ? d != 0 : d < 0) return false;
    }
    return true;
  };
  for (const auto& r : rays_)
    if (!satisfies(r, false))
      throw InternalContradictionError("cone: extreme ray violates its own constraints");
  for (Index i = 0; i < lineality_.rows.rows(); ++i)
    if (!satisfies(lineality_.rows.row(i).transpose(), true))
      throw InternalContradictionError("cone: lineality vector violates constraints");
  IntMat span(static_cast<Index>(rays_.size()) + lineality_.rank(), rank_);
  for (size_t i = 0; i < rays_.size(); ++i)
    span.row(static_cast<Index>(i)) = rays_[i].transpose();
  span.bottomRows(lineality_.rank()) = lineality_.rows;
  if (rank_int(span) != dim_)
    throw InternalContradictionError("cone: generator span disagrees with facet system");
}

Cone Cone::zero(Index rank) { return from_generators({}, rank); }

Cone Cone::full_space(Index rank) { return from_constraints({}, {}, rank); }

Cone Cone::from_generators(const std::vector<IntVec>& gens, Index rank) {
  return from_generators(gens, {}, rank);
}

Cone Cone::from_generators(const std::vector<IntVec>& gens,
                           const std::vector<IntVec>& lines, Index rank) {
  check_lengths(gens, rank, "from_generators");
  check_lengths(lines, rank, "from_generators");
  GeneratorSet polar = enumerate_generators(gens, lines, rank);
  GeneratorSet primal = enumerate_generators(
      polar.rays, unstack_rows(polar.lineality.rows), rank);
  Cone c;
  c.rank_ = rank;
  c.rays_ = std::move(primal.rays);
  c.lineality_ = std::move(primal.lineality);
  c.facet_normals_ = std::move(polar.rays);
  c.span_equations_ = std::move(polar.lineality);
  c.dim_ = rank - c.span_equations_.rank();
  c.verify();
  return c;
}

Cone Cone::from_inequalities(const std::vector<IntVec>& normals, Index rank) {
  return from_constraints(normals, {}, rank);
}

Cone Cone::from_constraints(const std::vector<IntVec>& normals,
                            const std::vector<IntVec>& equations, Index rank) {
  return finish(enumerate_generators(normals, equations, rank), rank);
}

IntVec Cone::relative_interior_point() const {
  IntVec p = IntVec::Zero(rank_);
  for (const auto& r : rays_) p += r;
  return p;
}

bool Cone::contains(const IntVec& v) const {
  if (v.size() != rank_)
    throw InvalidInputError("Cone::contains: vector length mismatch");
  for (Index i = 0; i < span_equations_.rows.rows(); ++i)
    if (span_equations_.rows.row(i).transpose().dot(v) != 0) return false;
  for (const auto& u : facet_normals_)
    if (u.dot(v) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& o) const {
  if (o.ambient_rank() != rank_)
    throw InvalidInputError("Cone::contains: ambient rank mismatch");
  for (const auto& r : o.rays_)
    if (!contains(r)) return false;
  for (Index i = 0; i < o.lineality_.rows.rows(); ++i) {
    IntVec l = o.lineality_.rows.row(i).transpose();
    if (!contains(l) || !contains(IntVec(-l))) return false;
  }
  return true;
}

Cone Cone::minimal_face() const {
  return from_generators({}, unstack_rows(lineality_.rows), rank_);
}

bool cone_less(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank())
    return a.ambient_rank() < b.ambient_rank();
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.lineality_dim() != b.lineality_dim())
    return a.lineality_dim() < b.lineality_dim();
  if (a.extreme_rays().size() != b.extreme_rays().size())
    return a.extreme_rays().size() < b.extreme_rays().size();
  for (size_t i = 0; i < a.extreme_rays().size(); ++i) {
    if (lex_less(a.extreme_rays()[i], b.extreme_rays()[i])) return true;
    if (lex_less(b.extreme_rays()[i], a.extreme_rays()[i])) return false;
  }
  const IntMat& la = a.lineality().rows;
  const IntMat& lb = b.lineality().rows;
  for (Index i = 0; i < la.rows(); ++i)
    for (Index j = 0; j < la.cols(); ++j) {
      int c = cmp(la(i, j), lb(i, j));
      if (c != 0) return c < 0;
    }
  return false;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw InvalidInputError("intersect: ambient rank mismatch");
  std::vector<IntVec> normals = a.facet_normals();
  normals.insert(normals.end(), b.facet_normals().begin(), b.facet_normals().end());
  std::vector<IntVec> eqs = unstack_rows(a.span_equations().rows);
  auto eb = unstack_rows(b.span_equations().rows);
  eqs.insert(eqs.end(), eb.begin(), eb.end());
  return Cone::from_constraints(normals, eqs, a.ambient_rank());
}

Cone smallest_face_containing(const Cone& c, const Cone& s) {
  if (!c.contains(s))
    throw InvalidInputError("smallest_face_containing: cone s is not contained in c");
  auto vanishes_on_s = [&](const IntVec& u) {
    for (const auto& r : s.extreme_rays())
      if (u.dot(r) != 0) return false;
    for (Index i = 0; i < s.lineality().rows.rows(); ++i)
      if (s.lineality().rows.row(i).transpose().dot(u) != 0) return false;
    return true;
  };
  std::vector<IntVec> tight;
  for (const auto& u : c.facet_normals())
    if (vanishes_on_s(u)) tight.push_back(u);
  if (tight.empty()) return c;
  std::vector<IntVec> eqs = unstack_rows(c.span_equations().rows);
  eqs.insert(eqs.end(), tight.begin(), tight.end());
  return Cone::from_constraints(c.facet_normals(), eqs, c.ambient_rank());
}

bool is_face(const Cone& f, const Cone& c) {
  if (f.ambient_rank() != c.ambient_rank()) return false;
  if (!c.contains(f)) return false;
  return smallest_face_containing(c, f) == f;
}

Cone hull_union(const std::vector<Cone>& cones, Index rank) {
  std::vector<IntVec> gens, lines;
  for (const auto& c : cones) {
    if (c.ambient_rank() != rank)
      throw InvalidInputError("hull_union: ambient rank mismatch");
    gens.insert(gens.end(), c.extreme_rays().begin(), c.extreme_rays().end());
    auto ls = unstack_rows(c.lineality().rows);
    lines.insert(lines.end(), ls.begin(), ls.end());
  }
  return Cone::from_generators(gens, lines, rank);
}

namespace {
struct ConeLess {
  bool operator()(const Cone& a, const Cone& b) const { return cone_less(a, b); }
};
}  // namespace

std::vector<Cone> faces(const Cone& c) {
  std::set<Cone, ConeLess> seen;
  std::deque<Cone> queue;
  seen.insert(c);
  queue.push_back(c);
  while (!queue.empty()) {
    Cone f = std::move(queue.front());
    queue.pop_front();
    for (const auto& u : f.facet_normals()) {
      std::vector<IntVec> eqs = unstack_rows(f.span_equations().rows);
      eqs.push_back(u);
      Cone child = Cone::from_constraints(f.facet_normals(), eqs, c.ambient_rank());
      if (seen.insert(child).second) queue.push_back(child);
    }
  }
  return std::vector<Cone>(seen.begin(), seen.end());
}

Cone apply(const IntMat& map, const Cone& c) {
  if (map.cols() != c.ambient_rank())
    throw InvalidInputError("apply: map source rank mismatch");
  std::vector<IntVec> gens, lines;
  for (const auto& r : c.extreme_rays()) gens.push_back(map * r);
  for (Index i = 0; i < c.lineality().rows.rows(); ++i)
    lines.push_back(map * c.lineality().rows.row(i).transpose());
  return Cone::from_generators(gens, lines, map.rows());
}

ConeStructure structure(const Cone& c) {
  return ConeStructure{c.dim(), c.lineality_dim(), c.is_strictly_convex(),
                       c.minimal_face()};
}

}  // namespace torquo
