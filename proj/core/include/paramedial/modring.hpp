#pragma once

/**
 * @file modring.hpp
 * @brief Exact arithmetic in Z_{p^k} and its unit group.
 *
 * Residues are stored as least non-negative representatives and every
 * operation reduces eagerly. Moduli are limited to p^k < 2^31 so that a
 * product of two residues always fits in a signed 64-bit word.
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace paramedial {

using Int = std::int64_t;

/// Exclusive upper bound on supported moduli p^k.
inline constexpr Int kMaxModulus = Int{1} << 31;

bool is_prime(Int n);

/// Modular exponentiation b^e mod n for e >= 0.
Int pow_mod(Int base, Int exp, Int n);

/// Inverse of a modulo n; throws NotInvertible when gcd(a, n) != 1.
Int inverse_mod(Int a, Int n);

/// The ring Z_{p^k} as a value: prime p, exponent k and cached order p^k.
class Modulus {
 public:
  Modulus(Int p, int k = 1);

  Int prime() const noexcept { return p_; }
  int exponent() const noexcept { return k_; }
  Int order() const noexcept { return n_; }
  bool is_field() const noexcept { return k_ == 1; }

  Int reduce(Int v) const noexcept {
    Int r = v % n_;
    return r < 0 ? r + n_ : r;
  }

  std::string to_string() const;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  Int p_;
  int k_;
  Int n_;
};

class Residue {
 public:
  Residue(Int value, const Modulus& m) : value_(m.reduce(value)), modulus_(m) {}

  Int value() const noexcept { return value_; }
  const Modulus& modulus() const noexcept { return modulus_; }

  bool is_zero() const noexcept { return value_ == 0; }
  bool is_unit() const noexcept { return value_ % modulus_.prime() != 0; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const { return Residue(-value_, modulus_); }

  Residue pow(Int e) const;
  /// Throws NotInvertible when p divides the value.
  Residue inverse() const;

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }
  friend std::strong_ordering operator<=>(const Residue& a, const Residue& b) {
    return a.value_ <=> b.value_;
  }

 private:
  Int value_;
  Modulus modulus_;
};

/// An element of Z_{p^k}^*, i.e. an automorphism of the cyclic group Z_{p^k}.
class Unit {
 public:
  explicit Unit(const Residue& r);
  Unit(Int value, const Modulus& m) : Unit(Residue(value, m)) {}

  const Residue& residue() const noexcept { return r_; }
  Int value() const noexcept { return r_.value(); }
  const Modulus& modulus() const noexcept { return r_.modulus(); }

  Unit operator*(const Unit& o) const { return Unit(r_ * o.r_); }
  Unit operator-() const { return Unit(-r_); }
  Unit inverse() const { return Unit(r_.inverse()); }
  Unit pow(Int e) const { return Unit(r_.pow(e)); }

  friend bool operator==(const Unit&, const Unit&) = default;
  friend std::strong_ordering operator<=>(const Unit& a, const Unit& b) {
    return a.r_ <=> b.r_;
  }

 private:
  Residue r_;
};

/// All units of Z_{p^k}, ascending; there are p^k - p^{k-1} of them.
std::vector<Unit> unit_group(const Modulus& m);

/// Square roots of x in the prime field Z_p, p odd, ascending.
/// Empty for a non-square, {0} for zero, otherwise {r, p - r}.
std::vector<Residue> sqrt_residue(const Residue& x);

/// The smaller of the two square roots, if any.
std::optional<Residue> canonical_sqrt(const Residue& x);

/// True for zero and the quadratic residues of an odd prime field.
bool is_square(const Residue& x);

}  // namespace paramedial
