#include "torquo/fan.hpp"

#include <algorithm>
#include <set>

namespace torquo {

namespace {
struct ConeLess {
  bool operator()(const Cone& a, const Cone& b) const { return cone_less(a, b); }
};
}  // namespace

QuasiFan QuasiFan::from_cones(std::vector<Cone> cones, Index rank) {
  for (const auto& c : cones)
    if (c.ambient_rank() != rank)
      throw InvalidInputError("QuasiFan: cone ambient rank mismatch");
  std::sort(cones.begin(), cones.end(), ConeLess{});
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  QuasiFan q;
  q.rank_ = rank;
  q.cones_ = std::move(cones);
  return q;
}

LatticeMap identity_map(Index n) { return LatticeMap{IntMat::Identity(n, n)}; }

LatticeMap compose(const LatticeMap& f, const LatticeMap& g) {
  if (f.source_rank() != g.target_rank())
    throw InvalidInputError("compose: rank chain mismatch");
  return LatticeMap{f.matrix * g.matrix};
}

bool lattice_surjective(const LatticeMap& f) {
  if (f.target_rank() == 0) return true;
  SmithResult sr = smith_decompose(f.matrix);
  auto d = sr.invariant_factors();
  if (static_cast<Index>(d.size()) != f.target_rank()) return false;
  for (const Int& x : d)
    if (x != 1) return false;
  return true;
}

std::vector<Violation> validate(const QuasiFan& q) {
  std::vector<Violation> out;
  const auto& cs = q.max_cones();
  for (size_t i = 0; i < cs.size(); ++i) {
    for (size_t j = i + 1; j < cs.size(); ++j) {
      if (cs[i].contains(cs[j]) || cs[j].contains(cs[i])) {
        out.push_back({"redundant_containment", static_cast<Index>(i),
                       static_cast<Index>(j),
                       "one maximal cone is contained in another"});
        continue;
      }
      Cone f = intersect(cs[i], cs[j]);
      if (!is_face(f, cs[i]) || !is_face(f, cs[j]))
        out.push_back({"intersection_not_common_face", static_cast<Index>(i),
                       static_cast<Index>(j),
                       "pairwise intersection is not a face of both cones"});
    }
  }
  return out;
}

bool is_valid(const QuasiFan& q) { return validate(q).empty(); }

bool is_fan(const QuasiFan& q) {
  for (const auto& c : q.max_cones())
    if (!c.is_strictly_convex()) return false;
  return true;
}

std::vector<Cone> all_faces(const QuasiFan& q) {
  std::set<Cone, ConeLess> seen;
  for (const auto& c : q.max_cones())
    for (auto& f : faces(c)) seen.insert(std::move(f));
  return std::vector<Cone>(seen.begin(), seen.end());
}

std::vector<IntVec> rays(const QuasiFan& q) {
  if (!is_fan(q))
    throw InvalidInputError("rays: quasi-fan is not strictly convex");
  std::vector<IntVec> out;
  for (const auto& f : all_faces(q))
    if (f.dim() == 1) out.push_back(f.extreme_rays().at(0));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

namespace {

// Codimension-one faces of a single cone.
std::vector<Cone> facet_faces(const Cone& c) {
  std::set<Cone, ConeLess> seen;
  for (const auto& u : c.facet_normals()) {
    std::vector<IntVec> eqs = unstack_rows(c.span_equations().rows);
    eqs.push_back(u);
    seen.insert(Cone::from_constraints(c.facet_normals(), eqs, c.ambient_rank()));
  }
  return std::vector<Cone>(seen.begin(), seen.end());
}

}  // namespace

bool is_complete(const QuasiFan& q) {
  if (q.empty()) return false;
  const Index n = q.ambient_rank();
  for (const auto& c : q.max_cones())
    if (c.dim() != n) return false;
  for (const auto& c : q.max_cones()) {
    for (const auto& ridge : facet_faces(c)) {
      int count = 0;
      for (const auto& other : q.max_cones())
        if (other.contains(ridge)) ++count;
      if (count != 2) return false;
    }
  }
  return true;
}

bool is_map(const LatticeMap& f, const QuasiFan& src, const QuasiFan& dst) {
  if (f.source_rank() != src.ambient_rank() || f.target_rank() != dst.ambient_rank())
    throw InvalidInputError("is_map: rank mismatch");
  for (const auto& sigma : src.max_cones()) {
    Cone img = apply(f.matrix, sigma);
    bool covered = false;
    for (const auto& tau : dst.max_cones())
      if (tau.contains(img)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

bool is_affine_map(const LatticeMap& f, const QuasiFan& src, const QuasiFan& dst) {
  if (!is_map(f, src, dst))
    throw InvalidInputError("is_affine_map: not a map of quasi-fans");
  std::vector<Cone> src_faces = all_faces(src);
  auto is_cone_of_src = [&](const Cone& c) {
    return std::binary_search(src_faces.begin(), src_faces.end(), c, ConeLess{});
  };
  for (const auto& tau : dst.max_cones()) {
    std::vector<IntVec> pre_normals;
    std::vector<IntVec> pre_eqs;
    for (const auto& u : tau.facet_normals())
      pre_normals.push_back(f.matrix.transpose() * u);
    for (Index i = 0; i < tau.span_equations().rows.rows(); ++i)
      pre_eqs.push_back(f.matrix.transpose() *
                        tau.span_equations().rows.row(i).transpose());
    std::vector<Cone> pieces;
    for (const auto& sigma : src.max_cones()) {
      std::vector<IntVec> normals = sigma.facet_normals();
      normals.insert(normals.end(), pre_normals.begin(), pre_normals.end());
      std::vector<IntVec> eqs = unstack_rows(sigma.span_equations().rows);
      eqs.insert(eqs.end(), pre_eqs.begin(), pre_eqs.end());
      pieces.push_back(Cone::from_constraints(normals, eqs, src.ambient_rank()));
    }
    // the union must be a single cone of src: one piece containing all others
    size_t top = 0;
    for (size_t i = 1; i < pieces.size(); ++i)
      if (pieces[i].contains(pieces[top])) top = i;
    bool single = true;
    for (const auto& p : pieces)
      if (!pieces[top].contains(p)) {
        single = false;
        break;
      }
    if (!single || !is_cone_of_src(pieces[top])) return false;
  }
  return true;
}

std::vector<Cone> image_cones(const LatticeMap& f, const QuasiFan& src,
                              const QuasiFan& dst) {
  if (!is_map(f, src, dst))
    throw InvalidInputError("image_cones: not a map of quasi-fans");
  std::set<Cone, ConeLess> hit;
  for (const auto& sigma : all_faces(src)) {
    Cone img = apply(f.matrix, sigma);
    const Cone* host = nullptr;
    for (const auto& tau : dst.max_cones())
      if (tau.contains(img)) {
        host = &tau;
        break;
      }
    if (host == nullptr)
      throw InternalContradictionError(
          "image_cones: face image not covered although is_map holds");
    hit.insert(smallest_face_containing(*host, img));
  }
  return std::vector<Cone>(hit.begin(), hit.end());
}

bool is_surjective(const LatticeMap& f, const QuasiFan& src, const QuasiFan& dst) {
  if (!lattice_surjective(f)) return false;
  return image_cones(f, src, dst) == all_faces(dst);
}

QuotientFanResult quotient_fan(const QuasiFan& q) {
  if (q.empty()) throw InvalidInputError("quotient_fan: empty quasi-fan");
  // In a quasi-fan every cone has the same lineality space: the minimal
  // cone V, the intersection over the face closure.
  const SublatticeBasis& v = q.max_cones().front().lineality();
  for (const auto& c : q.max_cones())
    if (!(c.lineality() == v))
      throw InvalidInputError(
          "quotient_fan: maximal cones have different lineality spaces; "
          "input is not a quasi-fan");
  QuotientProjection qp = quotient_projection(v);
  LatticeMap proj{qp.projection};
  QuasiFan quot = apply(proj, q);
  if (!is_valid(quot) || !is_fan(quot))
    throw InternalContradictionError(
        "quotient_fan: projected cones do not form a fan");
  QuotientFanResult out;
  out.V = v;
  out.L = v;
  out.Q = std::move(proj);
  out.quotient = std::move(quot);
  return out;
}

QuasiFan apply(const LatticeMap& f, const QuasiFan& q) {
  std::vector<Cone> imgs;
  imgs.reserve(q.max_cones().size());
  for (const auto& c : q.max_cones()) imgs.push_back(apply(f.matrix, c));
  return QuasiFan::from_cones(std::move(imgs), f.target_rank());
}

}  // namespace torquo
