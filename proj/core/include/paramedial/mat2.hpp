#pragma once

// 2x2 matrices and vectors over the prime field Z_p. Invertible matrices are
// the automorphisms of Z_p^2.

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "paramedial/modring.hpp"

namespace paramedial {

class Vec2 {
 public:
  Vec2(Int x, Int y, const Modulus& field);

  static Vec2 zero(const Modulus& field) { return Vec2(0, 0, field); }
  /// Inverse of index(): element x * p + y of the natural encoding.
  static Vec2 from_index(Int index, const Modulus& field);

  Residue x() const { return Residue(x_, field_); }
  Residue y() const { return Residue(y_, field_); }
  Int x_value() const noexcept { return x_; }
  Int y_value() const noexcept { return y_; }
  const Modulus& field() const noexcept { return field_; }

  Int index() const noexcept { return x_ * field_.prime() + y_; }
  bool is_zero() const noexcept { return x_ == 0 && y_ == 0; }

  Vec2 operator+(const Vec2& o) const;
  Vec2 operator-(const Vec2& o) const;
  Vec2 operator-() const { return Vec2(-x_, -y_, field_); }
  Vec2 scaled(Int s) const { return Vec2(x_ * s, y_ * s, field_); }

  std::string to_string() const;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend std::strong_ordering operator<=>(const Vec2& a, const Vec2& b) {
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    return a.y_ <=> b.y_;
  }

 private:
  Int x_;
  Int y_;
  Modulus field_;
};

/// Row-major ((a, b), (c, d)).
class Mat2 {
 public:
  Mat2(Int a, Int b, Int c, Int d, const Modulus& field);

  static Mat2 identity(const Modulus& field) { return Mat2(1, 0, 0, 1, field); }
  static Mat2 zero(const Modulus& field) { return Mat2(0, 0, 0, 0, field); }
  static Mat2 scalar(Int s, const Modulus& field) { return Mat2(s, 0, 0, s, field); }
  static Mat2 diag(Int a, Int d, const Modulus& field) { return Mat2(a, 0, 0, d, field); }
  /// Inverse of index(): entries read as base-p digits a b c d.
  static Mat2 from_index(Int index, const Modulus& field);

  /// Entry at row r, column c (0-based).
  Int at(int r, int c) const noexcept { return e_[static_cast<std::size_t>(2 * r + c)]; }
  const std::array<Int, 4>& entries() const noexcept { return e_; }
  const Modulus& field() const noexcept { return field_; }
  Int prime() const noexcept { return field_.prime(); }

  Residue det() const;
  Residue trace() const;
  /// Dimension of the image: 0, 1 or 2.
  int rank() const;
  bool is_invertible() const { return !det().is_zero(); }
  bool is_scalar() const noexcept { return e_[1] == 0 && e_[2] == 0 && e_[0] == e_[3]; }

  /// Throws SingularMatrix when det = 0.
  Mat2 inverse() const;

  Mat2 operator*(const Mat2& o) const;
  Mat2 operator+(const Mat2& o) const;
  Mat2 operator-(const Mat2& o) const;
  Mat2 operator-() const;
  Vec2 operator*(const Vec2& v) const;
  Mat2 scaled(Int s) const;
  Mat2 squared() const { return *this * *this; }

  /// Base-p digits of the row-major entries; monotone in the lexicographic order.
  Int index() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend std::strong_ordering operator<=>(const Mat2& a, const Mat2& b) {
    return a.e_ <=> b.e_;
  }

 private:
  Modulus field_;
  std::array<Int, 4> e_;
};

/// Basis of the image of a matrix and coset representatives of Z_p^2 / Im M.
struct ImageCosets {
  int rank = 0;
  std::vector<Vec2> image_basis;
  /// Deterministic order, zero first.
  std::vector<Vec2> coset_reps;
};

ImageCosets image_and_cosets(const Mat2& m);

/// True when v lies in the image of m.
bool in_image(const Mat2& m, const Vec2& v);

/// All p^4 matrices over Z_p in lexicographic order.
std::vector<Mat2> all_matrices(const Modulus& field);

/// GL(2, p) in lexicographic order.
std::vector<Mat2> general_linear_group(const Modulus& field);

/// |GL(2, p)| = (p^2 - 1)(p^2 - p).
Int gl2_order(Int p);

}  // namespace paramedial
