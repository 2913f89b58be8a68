#include "paramedial/mat2.hpp"

#include "paramedial/errors.hpp"

namespace paramedial {

namespace {

const Modulus& checked_field(const Modulus& m) {
  if (!m.is_field()) {
    throw InvalidModulus("2x2 matrices are defined over prime fields, got " + m.to_string());
  }
  return m;
}

void require_same(const Modulus& a, const Modulus& b) {
  if (!(a == b)) {
    throw ModulusMismatch("operands over " + a.to_string() + " and " + b.to_string());
  }
}

}  // namespace

Vec2::Vec2(Int x, Int y, const Modulus& field)
    : x_(checked_field(field).reduce(x)), y_(field.reduce(y)), field_(field) {}

Vec2 Vec2::from_index(Int index, const Modulus& field) {
  const Int p = field.prime();
  return Vec2(index / p, index % p, field);
}

Vec2 Vec2::operator+(const Vec2& o) const {
  require_same(field_, o.field_);
  return Vec2(x_ + o.x_, y_ + o.y_, field_);
}

Vec2 Vec2::operator-(const Vec2& o) const {
  require_same(field_, o.field_);
  return Vec2(x_ - o.x_, y_ - o.y_, field_);
}

std::string Vec2::to_string() const {
  return "(" + std::to_string(x_) + "," + std::to_string(y_) + ")";
}

Mat2::Mat2(Int a, Int b, Int c, Int d, const Modulus& field)
    : field_(checked_field(field)),
      e_{field.reduce(a), field.reduce(b), field.reduce(c), field.reduce(d)} {}

Mat2 Mat2::from_index(Int index, const Modulus& field) {
  const Int p = field.prime();
  std::array<Int, 4> digits{};
  for (int i = 3; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = index % p;
    index /= p;
  }
  return Mat2(digits[0], digits[1], digits[2], digits[3], field);
}

Residue Mat2::det() const { return Residue(e_[0] * e_[3] - e_[1] * e_[2], field_); }

Residue Mat2::trace() const { return Residue(e_[0] + e_[3], field_); }

int Mat2::rank() const {
  if (e_[0] == 0 && e_[1] == 0 && e_[2] == 0 && e_[3] == 0) return 0;
  return det().is_zero() ? 1 : 2;
}

Mat2 Mat2::inverse() const {
  const Residue d = det();
  if (d.is_zero()) throw SingularMatrix("matrix " + to_string() + " is singular");
  const Int inv = d.inverse().value();
  return Mat2(e_[3] * inv, -e_[1] * inv, -e_[2] * inv, e_[0] * inv, field_);
}

Mat2 Mat2::operator*(const Mat2& o) const {
  require_same(field_, o.field_);
  const auto& x = e_;
  const auto& y = o.e_;
  return Mat2(x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
              x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3], field_);
}

Mat2 Mat2::operator+(const Mat2& o) const {
  require_same(field_, o.field_);
  return Mat2(e_[0] + o.e_[0], e_[1] + o.e_[1], e_[2] + o.e_[2], e_[3] + o.e_[3], field_);
}

Mat2 Mat2::operator-(const Mat2& o) const {
  require_same(field_, o.field_);
  return Mat2(e_[0] - o.e_[0], e_[1] - o.e_[1], e_[2] - o.e_[2], e_[3] - o.e_[3], field_);
}

Mat2 Mat2::operator-() const { return Mat2(-e_[0], -e_[1], -e_[2], -e_[3], field_); }

Vec2 Mat2::operator*(const Vec2& v) const {
  require_same(field_, v.field());
  return Vec2(e_[0] * v.x_value() + e_[1] * v.y_value(),
              e_[2] * v.x_value() + e_[3] * v.y_value(), field_);
}

Mat2 Mat2::scaled(Int s) const { return Mat2(e_[0] * s, e_[1] * s, e_[2] * s, e_[3] * s, field_); }

Int Mat2::index() const noexcept {
  const Int p = field_.prime();
  return ((e_[0] * p + e_[1]) * p + e_[2]) * p + e_[3];
}

std::string Mat2::to_string() const {
  return "((" + std::to_string(e_[0]) + "," + std::to_string(e_[1]) + "),(" +
         std::to_string(e_[2]) + "," + std::to_string(e_[3]) + "))";
}

bool in_image(const Mat2& m, const Vec2& v) {
  switch (m.rank()) {
    case 2:
      return true;
    case 0:
      return v.is_zero();
    default: {
      // Image is spanned by a non-zero column u; v is in it iff det(u | v) = 0.
      Int ux = m.at(0, 0), uy = m.at(1, 0);
      if (ux == 0 && uy == 0) {
        ux = m.at(0, 1);
        uy = m.at(1, 1);
      }
      return m.field().reduce(ux * v.y_value() - uy * v.x_value()) == 0;
    }
  }
}

ImageCosets image_and_cosets(const Mat2& m) {
  const Modulus& f = m.field();
  const Int p = f.prime();
  ImageCosets out;
  out.rank = m.rank();
  switch (out.rank) {
    case 2:
      out.image_basis = {Vec2(1, 0, f), Vec2(0, 1, f)};
      out.coset_reps = {Vec2::zero(f)};
      break;
    case 0:
      for (Int i = 0; i < p * p; ++i) out.coset_reps.push_back(Vec2::from_index(i, f));
      break;
    default: {
      Vec2 col0(m.at(0, 0), m.at(1, 0), f);
      out.image_basis = {col0.is_zero() ? Vec2(m.at(0, 1), m.at(1, 1), f) : col0};
      // The least vector outside the image spans a complement.
      Int i = 1;
      while (in_image(m, Vec2::from_index(i, f))) ++i;
      const Vec2 w = Vec2::from_index(i, f);
      for (Int t = 0; t < p; ++t) out.coset_reps.push_back(w.scaled(t));
      break;
    }
  }
  return out;
}

std::vector<Mat2> all_matrices(const Modulus& field) {
  const Int p = checked_field(field).prime();
  const Int count = p * p * p * p;
  std::vector<Mat2> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Int i = 0; i < count; ++i) out.push_back(Mat2::from_index(i, field));
  return out;
}

std::vector<Mat2> general_linear_group(const Modulus& field) {
  std::vector<Mat2> out;
  out.reserve(static_cast<std::size_t>(gl2_order(field.prime())));
  for (auto& m : all_matrices(field)) {
    if (m.is_invertible()) out.push_back(m);
  }
  return out;
}

Int gl2_order(Int p) { return (p * p - 1) * (p * p - p); }

}  // namespace paramedial
