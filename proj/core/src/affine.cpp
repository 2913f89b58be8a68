#include "paramedial/affine.hpp"

#include <algorithm>
#include <sstream>

#include "paramedial/errors.hpp"

namespace paramedial {

Int GroupDescriptor::order() const noexcept {
  const Int n = modulus_.order();
  return is_cyclic() ? n : n * n;
}

Int GroupDescriptor::add(Int x, Int y) const noexcept {
  if (is_cyclic()) return (x + y) % modulus_.order();
  const Int p = modulus_.prime();
  return ((x / p + y / p) % p) * p + (x % p + y % p) % p;
}

Int GroupDescriptor::negate(Int x) const noexcept {
  if (is_cyclic()) return (modulus_.order() - x) % modulus_.order();
  const Int p = modulus_.prime();
  return ((p - x / p) % p) * p + (p - x % p) % p;
}

std::string GroupDescriptor::name() const {
  if (is_cyclic()) return "Z_" + std::to_string(modulus_.order());
  return "Z_" + std::to_string(prime()) + "^2";
}

AffineForm::AffineForm(const CyclicForm& f)
    : group_(GroupDescriptor::cyclic(f.phi.modulus().prime(), f.phi.modulus().exponent())),
      parts_(f) {
  if (!(f.phi.modulus() == f.psi.modulus()) || !(f.phi.modulus() == f.c.modulus())) {
    throw ModulusMismatch("affine form mixes moduli");
  }
  if (!((f.phi * f.phi) == (f.psi * f.psi))) {
    throw NotParamedial("phi^2 != psi^2 for phi=" + std::to_string(f.phi.value()) +
                        ", psi=" + std::to_string(f.psi.value()));
  }
}

AffineForm::AffineForm(const PlanarForm& f)
    : group_(GroupDescriptor::elem2(f.phi.prime())), parts_(f) {
  if (!(f.phi.field() == f.psi.field()) || !(f.phi.field() == f.c.field())) {
    throw ModulusMismatch("affine form mixes moduli");
  }
  if (!f.phi.is_invertible() || !f.psi.is_invertible()) {
    throw SingularMatrix("affine form needs invertible phi and psi");
  }
  if (!(f.phi.squared() == f.psi.squared())) {
    throw NotParamedial("phi^2 != psi^2 for phi=" + f.phi.to_string() + ", psi=" +
                        f.psi.to_string());
  }
}

AffineForm AffineForm::cyclic(Int p, int k, Int phi, Int psi, Int c) {
  const Modulus m(p, k);
  return AffineForm(CyclicForm{Unit(phi, m), Unit(psi, m), Residue(c, m)});
}

AffineForm AffineForm::planar(const Mat2& phi, const Mat2& psi, const Vec2& c) {
  return AffineForm(PlanarForm{phi, psi, c});
}

Int AffineForm::apply_phi(Int x) const {
  if (is_cyclic()) {
    const auto& f = cyclic_parts();
    return f.phi.value() * x % f.phi.modulus().order();
  }
  const auto& f = planar_parts();
  return (f.phi * Vec2::from_index(x, f.phi.field())).index();
}

Int AffineForm::apply_psi(Int x) const {
  if (is_cyclic()) {
    const auto& f = cyclic_parts();
    return f.psi.value() * x % f.psi.modulus().order();
  }
  const auto& f = planar_parts();
  return (f.psi * Vec2::from_index(x, f.psi.field())).index();
}

Int AffineForm::multiply(Int x, Int y) const {
  const Int c = is_cyclic() ? cyclic_parts().c.value() : planar_parts().c.index();
  return group_.add(group_.add(apply_phi(x), apply_psi(y)), c);
}

namespace {

std::vector<std::vector<Int>> rows_of(const Mat2& m) {
  return {{m.at(0, 0), m.at(0, 1)}, {m.at(1, 0), m.at(1, 1)}};
}

}  // namespace

std::vector<std::vector<Int>> AffineForm::phi_rows() const {
  if (is_cyclic()) return {{cyclic_parts().phi.value()}};
  return rows_of(planar_parts().phi);
}

std::vector<std::vector<Int>> AffineForm::psi_rows() const {
  if (is_cyclic()) return {{cyclic_parts().psi.value()}};
  return rows_of(planar_parts().psi);
}

std::vector<Int> AffineForm::c_entries() const {
  if (is_cyclic()) return {cyclic_parts().c.value()};
  const auto& c = planar_parts().c;
  return {c.x_value(), c.y_value()};
}

std::string AffineForm::to_string() const {
  std::ostringstream os;
  os << "Aff(" << group_.name() << ", ";
  if (is_cyclic()) {
    const auto& f = cyclic_parts();
    os << f.phi.value() << ", " << f.psi.value() << ", " << f.c.value();
  } else {
    const auto& f = planar_parts();
    os << f.phi.to_string() << ", " << f.psi.to_string() << ", " << f.c.to_string();
  }
  os << ")";
  return os.str();
}

bool operator==(const AffineForm& a, const AffineForm& b) {
  if (!(a.group_ == b.group_)) return false;
  return a.phi_rows() == b.phi_rows() && a.psi_rows() == b.psi_rows() &&
         a.c_entries() == b.c_entries();
}

std::strong_ordering operator<=>(const AffineForm& a, const AffineForm& b) {
  if (auto c = a.order() <=> b.order(); c != 0) return c;
  if (auto c = static_cast<int>(a.group_.kind()) <=> static_cast<int>(b.group_.kind()); c != 0) {
    return c;
  }
  if (auto c = a.phi_rows() <=> b.phi_rows(); c != 0) return c;
  if (auto c = a.psi_rows() <=> b.psi_rows(); c != 0) return c;
  return a.c_entries() <=> b.c_entries();
}

QuasigroupTable::QuasigroupTable(std::size_t order, std::vector<std::uint32_t> cells)
    : n_(order), cells_(std::move(cells)) {
  if (cells_.size() != n_ * n_) throw PreconditionViolation("table needs n*n cells");
  for (auto v : cells_) {
    if (v >= n_) throw PreconditionViolation("table entry out of range");
  }
}

std::string QuasigroupTable::to_text() const {
  std::string out = "order " + std::to_string(n_) + "\n";
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      if (y) out += ' ';
      out += std::to_string(at(x, y));
    }
    out += '\n';
  }
  return out;
}

QuasigroupTable QuasigroupTable::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  std::size_t n = 0;
  if (!(in >> word) || word != "order" || !(in >> n) || n == 0) {
    throw ParseError("expected header 'order n'");
  }
  std::vector<std::uint32_t> cells(n * n);
  for (auto& cell : cells) {
    long long v = 0;
    if (!(in >> v)) throw ParseError("table truncated");
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw ParseError("entry out of range");
    cell = static_cast<std::uint32_t>(v);
  }
  if (in >> word) throw ParseError("trailing data after table");
  return QuasigroupTable(n, std::move(cells));
}

QuasigroupTable materialize(const AffineForm& f) {
  const auto n = static_cast<std::size_t>(f.order());
  // Tabulate phi and psi once; the group law then gives every cell.
  std::vector<Int> phi(n), psi(n);
  for (std::size_t x = 0; x < n; ++x) {
    phi[x] = f.apply_phi(static_cast<Int>(x));
    psi[x] = f.apply_psi(static_cast<Int>(x));
  }
  const Int c = f.multiply(0, 0);
  const auto& g = f.group();
  std::vector<std::uint32_t> cells(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      cells[x * n + y] = static_cast<std::uint32_t>(g.add(g.add(phi[x], psi[y]), c));
    }
  }
  return QuasigroupTable(n, std::move(cells));
}

bool is_latin(const QuasigroupTable& t) {
  const std::size_t n = t.order();
  std::vector<char> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < n; ++y) {
      if (seen[t.at(x, y)]++) return false;
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (seen[t.at(x, y)]++) return false;
    }
  }
  return true;
}

bool is_paramedial(const QuasigroupTable& t) {
  const std::size_t n = t.order();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto xy = t.at(x, y);
      for (std::size_t u = 0; u < n; ++u) {
        const auto ux = t.at(u, x);
        for (std::size_t v = 0; v < n; ++v) {
          if (t.at(xy, t.at(u, v)) != t.at(t.at(v, y), ux)) return false;
        }
      }
    }
  }
  return true;
}

namespace {

Subgroup span_of(const Vec2& v) {
  const Modulus& f = v.field();
  Subgroup s;
  s.generator = v.index();
  for (Int t = 0; t < f.prime(); ++t) s.elements.push_back(v.scaled(t).index());
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

// phi(v) is a multiple of v.
bool is_eigenvector(const Mat2& m, const Vec2& v) {
  const Vec2 w = m * v;
  return m.field().reduce(v.x_value() * w.y_value() - v.y_value() * w.x_value()) == 0;
}

}  // namespace

std::vector<Subgroup> invariant_proper_subgroups(const AffineForm& f) {
  std::vector<Subgroup> out;
  if (f.is_cyclic()) {
    // Every subgroup p^i Z_{p^k} is characteristic.
    const Modulus& m = f.cyclic_parts().phi.modulus();
    Int step = 1;
    for (int i = 1; i < m.exponent(); ++i) {
      step *= m.prime();
      Subgroup s;
      s.generator = step;
      for (Int e = 0; e < m.order(); e += step) s.elements.push_back(e);
      out.push_back(std::move(s));
    }
    return out;
  }
  // Proper subgroups of Z_p^2 are the p + 1 lines; invariant lines are the
  // spans of common eigenvectors.
  const auto& parts = f.planar_parts();
  const Modulus& field = parts.phi.field();
  std::vector<Vec2> directions;
  for (Int y = 0; y < field.prime(); ++y) directions.emplace_back(1, y, field);
  directions.emplace_back(0, 1, field);
  for (const auto& v : directions) {
    if (is_eigenvector(parts.phi, v) && is_eigenvector(parts.psi, v)) {
      out.push_back(span_of(v));
    }
  }
  return out;
}

bool is_simple(const AffineForm& f) { return invariant_proper_subgroups(f).empty(); }

}  // namespace paramedial
