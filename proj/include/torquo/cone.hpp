#pragma once

// Rational convex polyhedral cones kept in double description: canonical
// extreme rays + lineality lattice on the primal side, canonical facet
// normals + span equations (the polar's rays and lineality) on the dual
// side. All comparisons are exact; equal cones have equal fields.

#include "torquo/exactlin.hpp"

#include <vector>

namespace torquo {

struct GeneratorSet {
  std::vector<IntVec> rays;   // canonical: primitive, reduced mod lineality, sorted
  SublatticeBasis lineality;  // saturated Hermite basis
};

// Minimal generators of {x : <u,x> >= 0 for u in inequalities,
// <e,x> = 0 for e in equations} via the incremental double description
// method with the combinatorial adjacency test.
GeneratorSet enumerate_generators(const std::vector<IntVec>& inequalities,
                                  const std::vector<IntVec>& equations,
                                  Index rank);

class Cone {
 public:
  Cone() = default;

  static Cone zero(Index rank);
  static Cone full_space(Index rank);
  static Cone from_generators(const std::vector<IntVec>& gens, Index rank);
  static Cone from_generators(const std::vector<IntVec>& gens,
                              const std::vector<IntVec>& lines, Index rank);
  static Cone from_inequalities(const std::vector<IntVec>& normals, Index rank);
  static Cone from_constraints(const std::vector<IntVec>& normals,
                               const std::vector<IntVec>& equations,
                               Index rank);

  Index ambient_rank() const { return rank_; }
  Index dim() const { return dim_; }
  Index lineality_dim() const { return lineality_.rank(); }
  bool is_strictly_convex() const { return lineality_.rank() == 0; }
  // C is a linear subspace (possibly {0}).
  bool is_linear() const { return rays_.empty(); }
  bool is_zero() const { return dim_ == 0; }
  bool is_full_space() const { return lineality_.rank() == rank_; }

  const std::vector<IntVec>& extreme_rays() const { return rays_; }
  const SublatticeBasis& lineality() const { return lineality_; }
  const std::vector<IntVec>& facet_normals() const { return facet_normals_; }
  const SublatticeBasis& span_equations() const { return span_equations_; }

  // Sum of the extreme rays (zero lineality contribution); lies in the
  // relative interior.
  IntVec relative_interior_point() const;

  bool contains(const IntVec& v) const;
  bool contains(const Cone& other) const;

  Cone minimal_face() const;  // C cap (-C), the lineality space as a cone

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.rank_ == b.rank_ && a.lineality_ == b.lineality_ &&
           a.rays_.size() == b.rays_.size() &&
           [&] {
             for (size_t i = 0; i < a.rays_.size(); ++i)
               if (!int_vec_eq(a.rays_[i], b.rays_[i])) return false;
             return true;
           }();
  }
  friend bool operator!=(const Cone& a, const Cone& b) { return !(a == b); }

 private:
  Index rank_ = 0;
  Index dim_ = 0;
  std::vector<IntVec> rays_;
  SublatticeBasis lineality_;
  std::vector<IntVec> facet_normals_;
  SublatticeBasis span_equations_;

  static Cone finish(GeneratorSet primal, Index rank);
  void verify() const;
};

// Strict total order on canonical cones (used for deterministic fan
// serialization and set operations).
bool cone_less(const Cone& a, const Cone& b);

Cone intersect(const Cone& a, const Cone& b);

// The face of c cut out by every facet hyperplane of c vanishing on s;
// equals c itself when s meets the relative interior. Requires s within c.
Cone smallest_face_containing(const Cone& c, const Cone& s);

bool is_face(const Cone& f, const Cone& c);

// Nonnegative hull of all generators of all inputs; the empty union is the
// zero cone.
Cone hull_union(const std::vector<Cone>& cones, Index rank);

// Full face lattice of c, canonically sorted (includes c and its minimal
// face).
std::vector<Cone> faces(const Cone& c);

// Image cone under a lattice map given by a (target x source) matrix.
Cone apply(const IntMat& map, const Cone& c);

struct ConeStructure {
  Index dim = 0;
  Index lineality_dim = 0;
  bool strictly_convex = true;
  Cone minimal_face;
};

ConeStructure structure(const Cone& c);

}  // namespace torquo
