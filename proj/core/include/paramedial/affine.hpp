#pragma once

/**
 * @file affine.hpp
 * @brief Quasigroups x * y = phi(x) + psi(y) + c over a finite abelian group.
 *
 * Two underlying groups are supported: the cyclic group Z_{p^k} and the
 * elementary abelian group Z_p^2. Group elements have a fixed natural
 * encoding as indices 0..n-1: a residue of Z_{p^k} is its own value, and
 * (x, y) in Z_p^2 is x * p + y. Cayley tables, file output and the
 * brute-force oracles all use this encoding.
 */

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "paramedial/mat2.hpp"
#include "paramedial/modring.hpp"

namespace paramedial {

class GroupDescriptor {
 public:
  enum class Kind { kCyclic, kElemAbelian2 };

  static GroupDescriptor cyclic(Int p, int k) { return GroupDescriptor(Kind::kCyclic, Modulus(p, k)); }
  static GroupDescriptor elem2(Int p) { return GroupDescriptor(Kind::kElemAbelian2, Modulus(p, 1)); }

  Kind kind() const noexcept { return kind_; }
  bool is_cyclic() const noexcept { return kind_ == Kind::kCyclic; }
  Int prime() const noexcept { return modulus_.prime(); }
  /// Exponent k of the order p^k (2 for Z_p^2).
  int exponent() const noexcept { return is_cyclic() ? modulus_.exponent() : 2; }
  /// Z_{p^k} for cyclic groups, Z_p for Z_p^2.
  const Modulus& modulus() const noexcept { return modulus_; }
  Int order() const noexcept;

  Int add(Int x, Int y) const noexcept;
  Int negate(Int x) const noexcept;

  /// "Z_9", "Z_3^2".
  std::string name() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

 private:
  GroupDescriptor(Kind kind, const Modulus& m) : kind_(kind), modulus_(m) {}

  Kind kind_;
  Modulus modulus_;
};

struct CyclicForm {
  Unit phi;
  Unit psi;
  Residue c;
};

struct PlanarForm {
  Mat2 phi;
  Mat2 psi;
  Vec2 c;
};

/// Aff(G, phi, psi, c) with phi^2 = psi^2; one isomorphism-class presentation.
class AffineForm {
 public:
  /// Throws NotParamedial when phi^2 != psi^2, ModulusMismatch on mixed moduli.
  explicit AffineForm(const CyclicForm& f);
  /// Additionally throws SingularMatrix for a non-invertible phi or psi.
  explicit AffineForm(const PlanarForm& f);

  static AffineForm cyclic(Int p, int k, Int phi, Int psi, Int c);
  static AffineForm planar(const Mat2& phi, const Mat2& psi, const Vec2& c);

  const GroupDescriptor& group() const noexcept { return group_; }
  Int order() const noexcept { return group_.order(); }
  bool is_cyclic() const noexcept { return group_.is_cyclic(); }

  /// Preconditions: is_cyclic() resp. !is_cyclic().
  const CyclicForm& cyclic_parts() const { return std::get<CyclicForm>(parts_); }
  const PlanarForm& planar_parts() const { return std::get<PlanarForm>(parts_); }

  Int apply_phi(Int x) const;
  Int apply_psi(Int x) const;
  /// x * y in the natural encoding.
  Int multiply(Int x, Int y) const;

  /// phi, psi and c as row-major integer arrays (1x1 for cyclic groups).
  std::vector<std::vector<Int>> phi_rows() const;
  std::vector<std::vector<Int>> psi_rows() const;
  std::vector<Int> c_entries() const;

  std::string to_string() const;

  friend bool operator==(const AffineForm& a, const AffineForm& b);
  /// Lexicographic by (phi, psi, c) with row-major entry order.
  friend std::strong_ordering operator<=>(const AffineForm& a, const AffineForm& b);

 private:
  GroupDescriptor group_;
  std::variant<CyclicForm, PlanarForm> parts_;
};

/// Explicit n x n Cayley table over the elements 0..n-1.
class QuasigroupTable {
 public:
  QuasigroupTable(std::size_t order, std::vector<std::uint32_t> cells);

  std::size_t order() const noexcept { return n_; }
  std::uint32_t at(std::size_t x, std::size_t y) const noexcept { return cells_[x * n_ + y]; }
  std::span<const std::uint32_t> row(std::size_t x) const {
    return std::span<const std::uint32_t>(cells_).subspan(x * n_, n_);
  }
  const std::vector<std::uint32_t>& cells() const noexcept { return cells_; }

  /// "order n" followed by n lines of n space-separated indices.
  std::string to_text() const;
  static QuasigroupTable from_text(std::string_view text);

  friend bool operator==(const QuasigroupTable&, const QuasigroupTable&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> cells_;
};

QuasigroupTable materialize(const AffineForm& f);

bool is_latin(const QuasigroupTable& t);

/// (x*y)*(u*v) = (v*y)*(u*x) for all n^4 quadruples.
bool is_paramedial(const QuasigroupTable& t);

struct Subgroup {
  /// Element indices in ascending order.
  std::vector<Int> elements;
  /// Index of an element generating the subgroup.
  Int generator = 0;
};

/// Proper non-trivial subgroups N with phi(N) = psi(N) = N.
std::vector<Subgroup> invariant_proper_subgroups(const AffineForm& f);

/// No proper non-trivial invariant subgroup, equivalently no proper congruence.
bool is_simple(const AffineForm& f);

}  // namespace paramedial
