#pragma once

// Quasi-fans (finite sets of cones pairwise intersecting in common faces,
// possibly with lines), maps of quasi-fans, quotient fans, and the orbit
// image / surjectivity computations for the induced toric morphisms.

#include "torquo/cone.hpp"

#include <string>
#include <vector>

namespace torquo {

class QuasiFan {
 public:
  QuasiFan() = default;

  // Sorts canonically and drops exact duplicates. No validation; call
  // validate() for the common-face conditions.
  static QuasiFan from_cones(std::vector<Cone> cones, Index rank);

  Index ambient_rank() const { return rank_; }
  const std::vector<Cone>& max_cones() const { return cones_; }
  bool empty() const { return cones_.empty(); }

  friend bool operator==(const QuasiFan& a, const QuasiFan& b) {
    return a.rank_ == b.rank_ && a.cones_ == b.cones_;
  }
  friend bool operator!=(const QuasiFan& a, const QuasiFan& b) { return !(a == b); }

 private:
  Index rank_ = 0;
  std::vector<Cone> cones_;
};

struct LatticeMap {
  IntMat matrix;  // target_rank x source_rank, acts on column vectors

  Index source_rank() const { return matrix.cols(); }
  Index target_rank() const { return matrix.rows(); }
};

inline bool operator==(const LatticeMap& a, const LatticeMap& b) {
  return int_mat_eq(a.matrix, b.matrix);
}

LatticeMap identity_map(Index n);
LatticeMap compose(const LatticeMap& f, const LatticeMap& g);  // f after g

// Surjectivity of the lattice homomorphism itself (full rank, all Smith
// invariant factors 1).
bool lattice_surjective(const LatticeMap& f);

struct Violation {
  std::string kind;  // "redundant_containment" | "intersection_not_common_face"
  Index cone_a = -1;
  Index cone_b = -1;
  std::string detail;
};

// Pairwise common-face condition and non-redundancy of the maximal cones.
// Violations are data, not errors.
std::vector<Violation> validate(const QuasiFan& q);
bool is_valid(const QuasiFan& q);

// All maximal cones strictly convex.
bool is_fan(const QuasiFan& q);

// Deduplicated closure of the maximal cones under taking faces, sorted.
std::vector<Cone> all_faces(const QuasiFan& q);

// Primitive generators of the one-dimensional cones; requires a fan.
std::vector<IntVec> rays(const QuasiFan& q);

// |q| = N_R, decided by: nonempty, all maximal cones full-dimensional, and
// every codimension-one face of a maximal cone is a face of exactly two
// maximal cones.
bool is_complete(const QuasiFan& q);

// Every cone of src maps into some cone of dst under f.
bool is_map(const LatticeMap& f, const QuasiFan& src, const QuasiFan& dst);

// f is a map and each preimage of a maximal cone of dst meets |src| in a
// single cone of src.
bool is_affine_map(const LatticeMap& f, const QuasiFan& src, const QuasiFan& dst);

// The cones of dst whose orbits are hit by the toric morphism of f: the
// smallest faces of dst containing the images of the cones of src.
std::vector<Cone> image_cones(const LatticeMap& f, const QuasiFan& src,
                              const QuasiFan& dst);

// Surjectivity of the toric morphism: lattice surjectivity plus full orbit
// coverage (image_cones = all_faces(dst)).
bool is_surjective(const LatticeMap& f, const QuasiFan& src, const QuasiFan& dst);

struct QuotientFanResult {
  SublatticeBasis V;  // saturated basis of the common lineality space
  SublatticeBasis L;  // V cap Z^n; equal to V since saturated
  LatticeMap Q;       // projection Z^n -> Z^{n - rank L}
  QuasiFan quotient;  // a fan
};

// Kill the minimal cone V (the common lineality space of all cones) and
// project; the images of the maximal cones are the maximal cones of a fan.
QuotientFanResult quotient_fan(const QuasiFan& q);

// Image fan under a lattice map (cone-wise image); the caller is
// responsible for the result being a valid quasi-fan.
QuasiFan apply(const LatticeMap& f, const QuasiFan& q);

}  // namespace torquo
