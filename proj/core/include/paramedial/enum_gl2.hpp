#pragma once

/**
 * @file enum_gl2.hpp
 * @brief Paramedial quasigroups affine over Z_p^2.
 *
 * Isomorphism classes correspond to triples (phi, psi, c): phi runs over
 * conjugacy class representatives of GL(2, p), psi over representatives of
 * the conjugation action of the centralizer C(phi) on the square roots S_phi
 * of phi^2, and c over representatives of Z_p^2 / Im(1 - phi - psi) under
 * C(phi) n C(psi).
 *
 * Conjugacy classes of GL(2, p), p odd:
 *
 *   kind         representative     centralizer                      order
 *   scalar       (a,0;0,a)          GL(2,p)                          (p^2-1)(p^2-p)
 *   diagonal     (a,0;0,b), a<b     (u,0;0,v)                        (p-1)^2
 *   jordan       (a,1;0,a)          (u,v;0,u), u != 0                p(p-1)
 *   irreducible  (0,1;a,b)          (u,v;av,u+bv), (u,v) != (0,0)    p^2-1
 *
 * where x^2 - bx - a is irreducible, i.e. b^2 + 4a is a non-square mod p.
 *
 * p = 2 is routed through the brute-force oracle.
 */

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paramedial/affine.hpp"
#include "paramedial/mat2.hpp"

namespace paramedial {

enum class ConjKind { kScalar, kDiagonal, kJordan, kIrreducible };

std::string to_string(ConjKind kind);

class Centralizer {
 public:
  Centralizer(ConjKind kind, Int a, Int b, const Modulus& field)
      : kind_(kind), a_(a), b_(b), field_(field) {}

  /// Shape predicate from the table above; m need not be invertible-checked by callers.
  bool contains(const Mat2& m) const;
  /// Ascending.
  std::vector<Mat2> elements() const;
  Int order() const;

 private:
  ConjKind kind_;
  Int a_;
  Int b_;
  Modulus field_;
};

struct ConjClass {
  ConjKind kind;
  /// Parameters as in the table: (a, 0) for scalar and jordan, (a, b) otherwise.
  Int a = 0;
  Int b = 0;
  Mat2 representative;
  Centralizer centralizer;
};

/// All conjugacy class representatives of GL(2, p), p odd, grouped by kind.
/// Scalar and jordan by a, diagonal by (a, b), irreducible by (a, b).
std::vector<ConjClass> conjugacy_classes(Int p);

/// The class representative conjugate to an invertible m (any prime p).
ConjClass classify_matrix(const Mat2& m);

/// All X with X^2 = a, p odd, ascending. Cayley-Hamilton gives every root
/// with non-zero trace as (A + d I) / t where d^2 = det A and t^2 = tr A + 2d;
/// for scalar A = cI the trace-zero roots (k, l; m, -k) with k^2 + lm = c are
/// added.
std::vector<Mat2> sqrt_set(const Mat2& a);

/// Orbit representatives of C(phi) acting by conjugation on S_phi, in the
/// order: the explicit families, then (irreducible, b = 0 only) the least
/// matrix of each remaining orbit.
std::vector<Mat2> y_phi(const ConjClass& c);

struct BurnsideReport {
  Int group_order = 0;
  /// Sum over C in C(phi) of the number of S in S_phi with C S C^-1 = S.
  Int fixed_point_total = 0;
  Int orbits_by_fixed_points = 0;
  Int orbits_by_partition = 0;
  /// Orbit sizes of the direct partition, ascending.
  std::vector<Int> orbit_sizes;
};

/// Centralizer conjugation on S_phi for phi = (0,1;a,0), a a non-square.
/// Throws PreconditionViolation for other classes.
BurnsideReport burnside_orbit_count(const ConjClass& c);

struct ConicReport {
  Int count = 0;
  /// (k, l) with k^2 - a l^2 + (1 - 2a) l - a = 0, ascending.
  std::vector<std::pair<Int, Int>> solutions;
};

/// Exhaustive solution count of the conic; p + 1 for every non-square a.
/// Throws PreconditionViolation if p is even or a is a square.
ConicReport conic_count(Int p, Int a);

/// Orbit representatives of C(phi) n C(psi) on Z_p^2 / Im(1 - phi - psi):
/// [0] at rank 2, [0, w] at rank 1 with w the least vector outside the image,
/// [0, (1,0)] at rank 0.
std::vector<Vec2> coset_reps_for(const Mat2& phi, const Mat2& psi);

struct Gl2Row {
  /// Absent for p = 2.
  std::optional<ConjClass> phi_class;
  ConjKind kind;
  Mat2 phi;
  Mat2 psi;
  std::string case_label;
  std::vector<Vec2> coset_reps;
  Int count = 0;
  bool simple = false;
};

struct Gl2Classification {
  Int p = 0;
  std::vector<Gl2Row> rows;
  Int total = 0;

  /// One affine form per (row, coset representative), in row order.
  std::vector<AffineForm> forms() const;
  /// Number of classes whose phi is of the given kind.
  Int subtotal(ConjKind kind) const;
};

/// Table-level family of a simple class: case label and |G_{phi,psi}|.
using SimpleFamily = std::pair<std::string, std::size_t>;

Gl2Classification enumerate_gl2(Int p);

/// Rows whose quasigroups are simple.
Gl2Classification simple_subset(const Gl2Classification& cls);

/// Class counts of the simple subset grouped by family.
std::map<SimpleFamily, Int> simple_family_counts(const Gl2Classification& cls);

/// 4p^2 - 2 for odd p, 7 for p = 2.
Int closed_form_count_elem2(Int p);

// Case labels used in Gl2Row::case_label.
namespace gl2_case {
inline constexpr const char* kScalarSame = "scalar: psi=phi";
inline constexpr const char* kScalarNeg = "scalar: psi=-phi";
inline constexpr const char* kScalarSplit = "scalar: psi=diag(a,-a)";
inline constexpr const char* kDiagSame = "diagonal: psi=phi";
inline constexpr const char* kDiagNeg = "diagonal: psi=-phi";
inline constexpr const char* kDiagFlipFirst = "diagonal: psi=diag(-a,b)";
inline constexpr const char* kDiagFlipSecond = "diagonal: psi=diag(a,-b)";
inline constexpr const char* kAntipodalLower = "diagonal b=-a: psi=(a,0;1,-a)";
inline constexpr const char* kAntipodalLowerNeg = "diagonal b=-a: psi=(-a,0;1,a)";
inline constexpr const char* kAntipodalFamily = "diagonal b=-a: psi=(k,1;a^2-k^2,-k)";
inline constexpr const char* kJordanSame = "jordan: psi=phi";
inline constexpr const char* kJordanNeg = "jordan: psi=-phi";
inline constexpr const char* kIrreducibleSame = "irreducible: psi=phi";
inline constexpr const char* kIrreducibleNeg = "irreducible: psi=-phi";
inline constexpr const char* kIrreducibleOther = "irreducible b=0: psi=(k,l;(a-k^2)/l,-k)";
inline constexpr const char* kOracle = "oracle";
}  // namespace gl2_case

}  // namespace paramedial
