#include "paramedial/enum_gl2.hpp"

#include <algorithm>
#include <set>

#include "paramedial/errors.hpp"
#include "paramedial/oracle.hpp"

namespace paramedial {

std::string to_string(ConjKind kind) {
  switch (kind) {
    case ConjKind::kScalar:
      return "scalar";
    case ConjKind::kDiagonal:
      return "diagonal";
    case ConjKind::kJordan:
      return "jordan";
    case ConjKind::kIrreducible:
      return "irreducible";
  }
  return "?";
}

namespace {

const Modulus& odd_field(const Modulus& f) {
  if (f.prime() == 2) throw PreconditionViolation("this construction needs an odd prime p");
  return f;
}

bool is_non_square(Int x, const Modulus& f) {
  const Residue r(x, f);
  return !r.is_zero() && !is_square(r);
}

}  // namespace

bool Centralizer::contains(const Mat2& m) const {
  if (!(m.field() == field_) || !m.is_invertible()) return false;
  switch (kind_) {
    case ConjKind::kScalar:
      return true;
    case ConjKind::kDiagonal:
      return m.at(0, 1) == 0 && m.at(1, 0) == 0;
    case ConjKind::kJordan:
      return m.at(1, 0) == 0 && m.at(0, 0) == m.at(1, 1);
    case ConjKind::kIrreducible:
      return m.at(1, 0) == field_.reduce(a_ * m.at(0, 1)) &&
             m.at(1, 1) == field_.reduce(m.at(0, 0) + b_ * m.at(0, 1));
  }
  return false;
}

std::vector<Mat2> Centralizer::elements() const {
  const Int p = field_.prime();
  std::vector<Mat2> out;
  switch (kind_) {
    case ConjKind::kScalar:
      return general_linear_group(field_);
    case ConjKind::kDiagonal:
      for (Int u = 1; u < p; ++u)
        for (Int v = 1; v < p; ++v) out.push_back(Mat2::diag(u, v, field_));
      break;
    case ConjKind::kJordan:
      for (Int u = 1; u < p; ++u)
        for (Int v = 0; v < p; ++v) out.emplace_back(u, v, 0, u, field_);
      break;
    case ConjKind::kIrreducible:
      for (Int u = 0; u < p; ++u)
        for (Int v = 0; v < p; ++v)
          if (u != 0 || v != 0) out.emplace_back(u, v, a_ * v, u + b_ * v, field_);
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int Centralizer::order() const {
  const Int p = field_.prime();
  switch (kind_) {
    case ConjKind::kScalar:
      return gl2_order(p);
    case ConjKind::kDiagonal:
      return (p - 1) * (p - 1);
    case ConjKind::kJordan:
      return p * (p - 1);
    case ConjKind::kIrreducible:
      return p * p - 1;
  }
  return 0;
}

namespace {

ConjClass make_class(ConjKind kind, Int a, Int b, const Modulus& f) {
  switch (kind) {
    case ConjKind::kScalar:
      return {kind, a, 0, Mat2::scalar(a, f), Centralizer(kind, a, 0, f)};
    case ConjKind::kDiagonal:
      return {kind, a, b, Mat2::diag(a, b, f), Centralizer(kind, a, b, f)};
    case ConjKind::kJordan:
      return {kind, a, 0, Mat2(a, 1, 0, a, f), Centralizer(kind, a, 0, f)};
    case ConjKind::kIrreducible:
      return {kind, a, b, Mat2(0, 1, a, b, f), Centralizer(kind, a, b, f)};
  }
  throw PreconditionViolation("unknown class kind");
}

}  // namespace

std::vector<ConjClass> conjugacy_classes(Int p) {
  const Modulus f(p);
  odd_field(f);
  std::vector<ConjClass> out;
  for (Int a = 1; a < p; ++a) out.push_back(make_class(ConjKind::kScalar, a, 0, f));
  for (Int a = 1; a < p; ++a)
    for (Int b = a + 1; b < p; ++b) out.push_back(make_class(ConjKind::kDiagonal, a, b, f));
  for (Int a = 1; a < p; ++a) out.push_back(make_class(ConjKind::kJordan, a, 0, f));
  for (Int a = 0; a < p; ++a)
    for (Int b = 0; b < p; ++b)
      if (is_non_square(b * b + 4 * a, f)) out.push_back(make_class(ConjKind::kIrreducible, a, b, f));
  return out;
}

ConjClass classify_matrix(const Mat2& m) {
  const Modulus& f = m.field();
  if (!m.is_invertible()) throw SingularMatrix("only invertible matrices have a class in GL(2,p)");
  if (m.is_scalar()) return make_class(ConjKind::kScalar, m.at(0, 0), 0, f);
  const Int t = m.trace().value();
  const Int d = m.det().value();
  // Roots of the characteristic polynomial x^2 - t x + d.
  std::vector<Int> roots;
  if (f.prime() == 2) {
    for (Int x = 0; x < 2; ++x) {
      if (f.reduce(x * x - t * x + d) == 0) roots.push_back(x);
    }
  } else {
    const Int inv2 = inverse_mod(2, f.prime());
    for (const auto& s : sqrt_residue(Residue(t * t - 4 * d, f))) {
      roots.push_back(f.reduce((t + s.value()) * inv2));
    }
    std::sort(roots.begin(), roots.end());
  }
  if (roots.empty()) return make_class(ConjKind::kIrreducible, f.reduce(-d), t, f);
  if (roots.size() == 1) return make_class(ConjKind::kJordan, roots[0], 0, f);
  return make_class(ConjKind::kDiagonal, roots[0], roots[1], f);
}

std::vector<Mat2> sqrt_set(const Mat2& a) {
  const Modulus& f = odd_field(a.field());
  const Int p = f.prime();
  std::set<Mat2> roots;
  if (a.is_scalar()) {
    const Int c = a.at(0, 0);
    if (c != 0) {
      if (auto s = canonical_sqrt(Residue(c, f))) {
        roots.insert(Mat2::scalar(s->value(), f));
        roots.insert(Mat2::scalar(-s->value(), f));
      }
    }
    // Trace zero: (k, l; m, -k) with k^2 + lm = c.
    for (Int k = 0; k < p; ++k) {
      const Int rest = f.reduce(c - k * k);
      for (Int l = 1; l < p; ++l) roots.emplace(k, l, rest * inverse_mod(l, p), -k, f);
      if (rest == 0) {
        for (Int m = 0; m < p; ++m) roots.emplace(k, 0, m, -k, f);
      }
    }
  } else {
    const Residue trace = a.trace();
    for (const auto& delta : sqrt_residue(a.det())) {
      for (const auto& tau : sqrt_residue(trace + delta + delta)) {
        if (tau.is_zero()) continue;
        roots.insert((a + Mat2::scalar(delta.value(), f)).scaled(tau.inverse().value()));
      }
    }
  }
  return {roots.begin(), roots.end()};
}

namespace {

// Conjugation orbits of `group` on the ascending list `set`, each orbit ascending
// and orbits ordered by their least element.
std::vector<std::vector<Mat2>> conjugation_orbits(const std::vector<Mat2>& set,
                                                  const std::vector<Mat2>& group) {
  std::vector<Mat2> inverses;
  inverses.reserve(group.size());
  for (const auto& g : group) inverses.push_back(g.inverse());
  std::set<Mat2> seen;
  std::vector<std::vector<Mat2>> out;
  for (const auto& s : set) {
    if (seen.count(s)) continue;
    std::set<Mat2> orbit;
    for (std::size_t i = 0; i < group.size(); ++i) orbit.insert(group[i] * s * inverses[i]);
    seen.insert(orbit.begin(), orbit.end());
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

struct YEntry {
  Mat2 psi;
  const char* label;
};

std::vector<YEntry> labelled_y_phi(const ConjClass& c) {
  const Mat2& phi = c.representative;
  const Modulus& f = odd_field(phi.field());
  const Int p = f.prime();
  const Int a = c.a;
  const Int b = c.b;
  std::vector<YEntry> out;
  switch (c.kind) {
    case ConjKind::kScalar:
      out = {{phi, gl2_case::kScalarSame},
             {-phi, gl2_case::kScalarNeg},
             {Mat2::diag(a, -a, f), gl2_case::kScalarSplit}};
      break;
    case ConjKind::kDiagonal:
      out = {{phi, gl2_case::kDiagSame},
             {-phi, gl2_case::kDiagNeg},
             {Mat2::diag(-a, b, f), gl2_case::kDiagFlipFirst},
             {Mat2::diag(a, -b, f), gl2_case::kDiagFlipSecond}};
      if (f.reduce(a + b) == 0) {
        out.push_back({Mat2(a, 0, 1, -a, f), gl2_case::kAntipodalLower});
        out.push_back({Mat2(-a, 0, 1, a, f), gl2_case::kAntipodalLowerNeg});
        for (Int k = 0; k < p; ++k) {
          out.push_back({Mat2(k, 1, a * a - k * k, -k, f), gl2_case::kAntipodalFamily});
        }
      }
      break;
    case ConjKind::kJordan:
      out = {{phi, gl2_case::kJordanSame}, {-phi, gl2_case::kJordanNeg}};
      break;
    case ConjKind::kIrreducible:
      out = {{phi, gl2_case::kIrreducibleSame}, {-phi, gl2_case::kIrreducibleNeg}};
      if (b == 0) {
        // No closed list is known here: take the least matrix of every other orbit.
        const auto orbs = conjugation_orbits(sqrt_set(phi.squared()), c.centralizer.elements());
        for (const auto& orbit : orbs) {
          if (orbit.front() == phi || orbit.front() == -phi) continue;
          out.push_back({orbit.front(), gl2_case::kIrreducibleOther});
        }
      }
      break;
  }
  return out;
}

}  // namespace

std::vector<Mat2> y_phi(const ConjClass& c) {
  std::vector<Mat2> out;
  for (const auto& e : labelled_y_phi(c)) out.push_back(e.psi);
  return out;
}

BurnsideReport burnside_orbit_count(const ConjClass& c) {
  if (c.kind != ConjKind::kIrreducible || c.b != 0) {
    throw PreconditionViolation("Burnside count applies to phi = (0,1;a,0) with a a non-square");
  }
  const Mat2& phi = c.representative;
  const auto roots = sqrt_set(phi.squared());
  const auto group = c.centralizer.elements();

  BurnsideReport r;
  r.group_order = static_cast<Int>(group.size());
  for (const auto& g : group) {
    for (const auto& s : roots) {
      if (g * s == s * g) ++r.fixed_point_total;
    }
  }
  r.orbits_by_fixed_points = r.fixed_point_total / r.group_order;
  const auto orbs = conjugation_orbits(roots, group);
  r.orbits_by_partition = static_cast<Int>(orbs.size());
  for (const auto& o : orbs) r.orbit_sizes.push_back(static_cast<Int>(o.size()));
  std::sort(r.orbit_sizes.begin(), r.orbit_sizes.end());
  return r;
}

ConicReport conic_count(Int p, Int a) {
  const Modulus f(p);
  odd_field(f);
  if (!is_non_square(a, f)) {
    throw PreconditionViolation(std::to_string(a) + " is not a non-square modulo " + std::to_string(p));
  }
  ConicReport r;
  for (Int k = 0; k < p; ++k) {
    for (Int l = 0; l < p; ++l) {
      if (f.reduce(k * k - a * l * l + (1 - 2 * a) * l - a) == 0) r.solutions.emplace_back(k, l);
    }
  }
  r.count = static_cast<Int>(r.solutions.size());
  return r;
}

std::vector<Vec2> coset_reps_for(const Mat2& phi, const Mat2& psi) {
  if (!(phi.squared() == psi.squared())) throw NotParamedial("phi^2 != psi^2");
  const Modulus& f = phi.field();
  const Mat2 defect = Mat2::identity(f) - phi - psi;
  switch (defect.rank()) {
    case 2:
      return {Vec2::zero(f)};
    case 1: {
      const auto cosets = image_and_cosets(defect);
      return {cosets.coset_reps[0], cosets.coset_reps[1]};
    }
    default:
      // Only phi = psi = 1/2 I reaches rank 0; GL(2,p) is then transitive on
      // non-zero vectors.
      return {Vec2::zero(f), Vec2(1, 0, f)};
  }
}

std::vector<AffineForm> Gl2Classification::forms() const {
  std::vector<AffineForm> out;
  for (const auto& row : rows) {
    for (const auto& c : row.coset_reps) out.push_back(AffineForm::planar(row.phi, row.psi, c));
  }
  return out;
}

Int Gl2Classification::subtotal(ConjKind kind) const {
  Int s = 0;
  for (const auto& row : rows) {
    if (row.kind == kind) s += row.count;
  }
  return s;
}

namespace {

// Simple exactly when phi and psi share no eigenvector: phi irreducible, or
// phi = diag(a,-a) with psi = (k,1;a^2-k^2,-k), k != +-a.
bool simple_by_family(const ConjClass& c, const Mat2& psi, const char* label) {
  if (c.kind == ConjKind::kIrreducible) return true;
  if (std::string(label) == gl2_case::kAntipodalFamily) {
    const Modulus& f = psi.field();
    const Int k = psi.at(0, 0);
    return k != c.a && k != f.reduce(-c.a);
  }
  return false;
}

Gl2Classification enumerate_by_oracle(Int p) {
  const auto cls = oracle::classify_triples(GroupDescriptor::elem2(p));
  Gl2Classification out;
  out.p = p;
  for (const auto& rep : cls.representatives) {
    const auto& parts = rep.planar_parts();
    if (out.rows.empty() || !(out.rows.back().phi == parts.phi) || !(out.rows.back().psi == parts.psi)) {
      out.rows.push_back(Gl2Row{std::nullopt, classify_matrix(parts.phi).kind, parts.phi, parts.psi,
                                gl2_case::kOracle, {}, 0, is_simple(rep)});
    }
    out.rows.back().coset_reps.push_back(parts.c);
    out.rows.back().count += 1;
  }
  for (const auto& row : out.rows) out.total += row.count;
  return out;
}

}  // namespace

Gl2Classification enumerate_gl2(Int p) {
  if (Modulus(p).prime() == 2) return enumerate_by_oracle(p);
  Gl2Classification out;
  out.p = p;
  for (const auto& c : conjugacy_classes(p)) {
    for (const auto& [psi, label] : labelled_y_phi(c)) {
      auto reps = coset_reps_for(c.representative, psi);
      const Int count = static_cast<Int>(reps.size());
      out.rows.push_back(Gl2Row{c, c.kind, c.representative, psi, label, std::move(reps), count,
                                simple_by_family(c, psi, label)});
      out.total += count;
    }
  }
  return out;
}

Gl2Classification simple_subset(const Gl2Classification& cls) {
  Gl2Classification out;
  out.p = cls.p;
  for (const auto& row : cls.rows) {
    if (!row.simple) continue;
    out.rows.push_back(row);
    out.total += row.count;
  }
  return out;
}

std::map<SimpleFamily, Int> simple_family_counts(const Gl2Classification& cls) {
  std::map<SimpleFamily, Int> out;
  for (const auto& row : cls.rows) {
    if (row.simple) out[{row.case_label, row.coset_reps.size()}] += row.count;
  }
  return out;
}

Int closed_form_count_elem2(Int p) {
  if (Modulus(p).prime() == 2) return 7;
  return 4 * p * p - 2;
}

}  // namespace paramedial
