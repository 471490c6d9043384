#pragma once

// Exact scalar types for the whole engine: arbitrary-precision integers and
// rationals from GMP, wired into Eigen dense types. No floating point enters
// any computation.

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace torquo {

using Int = mpz_class;
using Rat = mpq_class;
using Index = Eigen::Index;

using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

// Bad user-supplied data (dimension mismatches, unparsable documents,
// inputs violating a precondition). CLI exit code 2.
struct InvalidInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A property the underlying theory guarantees failed to hold; signals a bug
// upstream, never a user error. CLI exit code 3.
struct InternalContradictionError : std::logic_error {
  using std::logic_error::logic_error;
};

inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool is_zero(const IntVec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

// gcd of all entries, >= 0; 0 for the zero vector.
inline Int content(const IntVec& v) {
  Int g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, v[i]);
  return g;
}

// Divide out the content, keeping orientation. Zero stays zero.
inline IntVec primitive(IntVec v) {
  Int g = content(v);
  if (g > 1)
    for (Index i = 0; i < v.size(); ++i) v[i] /= g;
  return v;
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Index i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

inline bool int_vec_eq(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

inline bool int_mat_eq(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline RatVec to_rational(const IntVec& v) {
  RatVec r(v.size());
  for (Index i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

inline RatMat to_rational(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

// Clear denominators and reduce to the primitive integer vector with the
// same orientation.
inline IntVec to_primitive_integer(const RatVec& v) {
  Int l = 1;
  for (Index i = 0; i < v.size(); ++i) l = lcm(l, v[i].get_den());
  IntVec out(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(l);
    out[i] = s.get_num();  // denominator is 1 after clearing
  }
  return primitive(std::move(out));
}

inline IntMat stack_rows(const std::vector<IntVec>& rows, Index cols) {
  IntMat m(static_cast<Index>(rows.size()), cols);
  for (Index i = 0; i < m.rows(); ++i) {
    if (rows[static_cast<size_t>(i)].size() != cols)
      throw InvalidInputError("stack_rows: inconsistent vector length");
    m.row(i) = rows[static_cast<size_t>(i)].transpose();
  }
  return m;
}

inline std::vector<IntVec> unstack_rows(const IntMat& m) {
  std::vector<IntVec> out;
  out.reserve(static_cast<size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i) out.push_back(m.row(i).transpose());
  return out;
}

}  // namespace torquo
