#include "paramedial/oracle.hpp"

#include <map>
#include <numeric>

namespace paramedial::oracle {

namespace {

// (phi, psi, c) as integers in the natural encodings: unit values for cyclic
// groups, Mat2::index / Vec2::index for Z_p^2. The encodings are monotone in
// the lexicographic entry order, so key order equals AffineForm order.
struct TripleKey {
  Int phi;
  Int psi;
  Int c;
  friend auto operator<=>(const TripleKey&, const TripleKey&) = default;
};

// x -> alpha(x) + shift, alpha given by its position in the automorphism list.
struct AffineMap {
  std::size_t alpha;
  Int shift;
  friend auto operator<=>(const AffineMap&, const AffineMap&) = default;
};

class AutomorphismTable {
 public:
  explicit AutomorphismTable(const GroupDescriptor& g) : group_(g) {
    const Modulus& m = g.modulus();
    if (g.is_cyclic()) {
      for (const auto& u : unit_group(m)) codes_.push_back(u.value());
      lookup_.assign(static_cast<std::size_t>(m.order()), kNone);
    } else {
      for (const auto& a : general_linear_group(m)) codes_.push_back(a.index());
      const Int p = m.prime();
      lookup_.assign(static_cast<std::size_t>(p * p * p * p), kNone);
    }
    for (std::size_t i = 0; i < codes_.size(); ++i) {
      lookup_[static_cast<std::size_t>(codes_[i])] = i;
    }
  }

  std::size_t size() const noexcept { return codes_.size(); }
  Int code(std::size_t i) const { return codes_[i]; }
  std::size_t position(Int code) const { return lookup_[static_cast<std::size_t>(code)]; }

  // Automorphisms as codes: product, inverse, image of an element.
  Int mul(Int a, Int b) const {
    if (group_.is_cyclic()) return a * b % group_.modulus().order();
    return (mat(a) * mat(b)).index();
  }
  Int inv(Int a) const {
    if (group_.is_cyclic()) return inverse_mod(a, group_.modulus().order());
    return mat(a).inverse().index();
  }
  Int apply(Int a, Int x) const {
    if (group_.is_cyclic()) return a * x % group_.modulus().order();
    return (mat(a) * Vec2::from_index(x, group_.modulus())).index();
  }
  // (1 - phi - psi)(x)
  Int apply_defect(Int phi, Int psi, Int x) const {
    return group_.add(x, group_.negate(group_.add(apply(phi, x), apply(psi, x))));
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  Mat2 mat(Int code) const { return Mat2::from_index(code, group_.modulus()); }

  GroupDescriptor group_;
  std::vector<Int> codes_;
  std::vector<std::size_t> lookup_;
};

void require_bound(const GroupDescriptor& g, Int max_order) {
  if (g.order() > max_order) {
    throw BoundExceeded("oracle over " + g.name() + " (order " + std::to_string(g.order()) +
                        ") exceeds the configured bound " + std::to_string(max_order));
  }
}

// All pairs (phi, psi) of automorphism codes with phi^2 = psi^2, ascending.
std::vector<std::pair<Int, Int>> square_pairs(const AutomorphismTable& aut) {
  std::map<Int, std::vector<Int>> by_square;
  for (std::size_t i = 0; i < aut.size(); ++i) {
    const Int a = aut.code(i);
    by_square[aut.mul(a, a)].push_back(a);
  }
  std::vector<std::pair<Int, Int>> pairs;
  for (std::size_t i = 0; i < aut.size(); ++i) {
    const Int a = aut.code(i);
    for (Int b : by_square[aut.mul(a, a)]) pairs.emplace_back(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

AffineForm form_from_key(const GroupDescriptor& g, const TripleKey& k) {
  const Modulus& m = g.modulus();
  if (g.is_cyclic()) return AffineForm::cyclic(m.prime(), m.exponent(), k.phi, k.psi, k.c);
  return AffineForm::planar(Mat2::from_index(k.phi, m), Mat2::from_index(k.psi, m),
                            Vec2::from_index(k.c, m));
}

// Rank of the 2x4 matrix [a | b] over Z_p.
int rank_2x4(const Mat2& a, const Mat2& b) {
  const Modulus& f = a.field();
  const std::array<Int, 4> r0{a.at(0, 0), a.at(0, 1), b.at(0, 0), b.at(0, 1)};
  const std::array<Int, 4> r1{a.at(1, 0), a.at(1, 1), b.at(1, 0), b.at(1, 1)};
  bool any = false;
  for (int i = 0; i < 4; ++i) any = any || r0[i] != 0 || r1[i] != 0;
  if (!any) return 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (f.reduce(r0[i] * r1[j] - r0[j] * r1[i]) != 0) return 2;
    }
  }
  return 1;
}

}  // namespace

std::size_t TripleClassification::class_of(const AffineForm& f) const {
  if (!(f.group() == group)) throw PreconditionViolation("form is over a different group");
  auto it = std::lower_bound(points.begin(), points.end(), f);
  if (it == points.end() || !(*it == f)) {
    throw PreconditionViolation("not a valid triple: " + f.to_string());
  }
  return partition.orbit_of[static_cast<std::size_t>(it - points.begin())];
}

TripleClassification classify_triples(const GroupDescriptor& g, Int max_order) {
  require_bound(g, max_order);
  const AutomorphismTable aut(g);
  const Int n = g.order();

  ActionSpec<AffineMap, TripleKey> spec{
      .elements = {},
      .generators = {},
      .points = {},
      .act = {},
      .compose = {},
      .identity = AffineMap{aut.position(g.is_cyclic() ? 1 : Mat2::identity(g.modulus()).index()), 0},
  };
  for (std::size_t a = 0; a < aut.size(); ++a) {
    for (Int u = 0; u < n; ++u) spec.elements.push_back({a, u});
  }
  for (const auto& [phi, psi] : square_pairs(aut)) {
    for (Int c = 0; c < n; ++c) spec.points.push_back({phi, psi, c});
  }

  // An isomorphism x -> alpha(x) + u carries Aff(phi, psi, c) to
  // Aff(alpha phi alpha^-1, alpha psi alpha^-1, alpha(c) + (1 - phi' - psi')(u)).
  spec.act = [&aut, &g](const AffineMap& m, const TripleKey& t) {
    const Int a = aut.code(m.alpha);
    const Int a_inv = aut.inv(a);
    const Int phi = aut.mul(aut.mul(a, t.phi), a_inv);
    const Int psi = aut.mul(aut.mul(a, t.psi), a_inv);
    const Int c = g.add(aut.apply(a, t.c), aut.apply_defect(phi, psi, m.shift));
    return TripleKey{phi, psi, c};
  };
  spec.compose = [&aut, &g](const AffineMap& x, const AffineMap& y) {
    const Int a = aut.code(x.alpha);
    return AffineMap{aut.position(aut.mul(a, aut.code(y.alpha))),
                     g.add(aut.apply(a, y.shift), x.shift)};
  };
  spec.generators = greedy_generators<AffineMap>(spec.elements, spec.compose, spec.identity);

  TripleClassification out{
      .group = g,
      .points = {},
      .partition = orbits(spec),
      .representatives = {},
      .burnside_count = burnside_triple_count(g, max_order),
  };
  out.points.reserve(spec.points.size());
  for (const auto& k : spec.points) out.points.push_back(form_from_key(g, k));
  for (auto rep : out.partition.representatives) out.representatives.push_back(out.points[rep]);
  return out;
}

std::uint64_t burnside_triple_count(const GroupDescriptor& g, Int max_order) {
  require_bound(g, max_order);
  const AutomorphismTable aut(g);
  const auto pairs = square_pairs(aut);
  const Modulus& m = g.modulus();
  const Int n = g.order();

  // Fix(alpha, u) = #{(phi, psi, c)} with alpha commuting with phi and psi and
  // (alpha - 1)(c) + (1 - phi - psi)(u) = 0. Summing over u and c at once
  // counts the kernel of the map (c, u) -> (alpha - 1)c + (1 - phi - psi)u.
  std::uint64_t total = 0;
  if (g.is_cyclic()) {
    // a*c + b*u = 0 (mod n) has n * gcd(a, b, n) solutions.
    for (std::size_t i = 0; i < aut.size(); ++i) {
      const Int a = m.reduce(aut.code(i) - 1);
      for (const auto& [phi, psi] : pairs) {
        const Int b = m.reduce(1 - phi - psi);
        total += static_cast<std::uint64_t>(n * std::gcd(std::gcd(a, b), n));
      }
    }
  } else {
    const Int p = m.prime();
    const Mat2 one = Mat2::identity(m);
    for (std::size_t i = 0; i < aut.size(); ++i) {
      const Mat2 alpha = Mat2::from_index(aut.code(i), m);
      for (const auto& [phi_code, psi_code] : pairs) {
        const Mat2 phi = Mat2::from_index(phi_code, m);
        const Mat2 psi = Mat2::from_index(psi_code, m);
        if (!(alpha * phi == phi * alpha) || !(alpha * psi == psi * alpha)) continue;
        Int kernel = 1;
        for (int e = rank_2x4(alpha - one, one - phi - psi); e < 4; ++e) kernel *= p;
        total += static_cast<std::uint64_t>(kernel);
      }
    }
  }
  const auto group_order = static_cast<std::uint64_t>(aut.size()) * static_cast<std::uint64_t>(n);
  if (total % group_order != 0) throw Error("fixed-point total is not divisible by |G|");
  return total / group_order;
}

std::vector<std::size_t> class_hits(const TripleClassification& cls,
                                    const std::vector<AffineForm>& forms) {
  std::vector<std::size_t> hits;
  hits.reserve(forms.size());
  for (const auto& f : forms) hits.push_back(cls.class_of(f));
  return hits;
}

namespace {

// Per-element isomorphism invariants: idempotency and how often the element
// occurs on the diagonal.
std::vector<std::pair<int, int>> element_profiles(const QuasigroupTable& t) {
  const std::size_t n = t.order();
  std::vector<std::pair<int, int>> prof(n, {0, 0});
  for (std::size_t x = 0; x < n; ++x) {
    const auto d = t.at(x, x);
    prof[d].second++;
    if (d == x) prof[x].first = 1;
  }
  return prof;
}

struct IsoSearch {
  const QuasigroupTable& a;
  const QuasigroupTable& b;
  std::vector<std::pair<int, int>> prof_a;
  std::vector<std::pair<int, int>> prof_b;

  static constexpr int kFree = -1;

  // Extend sigma by closure under the operation; false on contradiction.
  bool propagate(std::vector<int>& sigma, std::vector<char>& used) const {
    const std::size_t n = a.order();
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t x = 0; x < n; ++x) {
        if (sigma[x] == kFree) continue;
        for (std::size_t y = 0; y < n; ++y) {
          if (sigma[y] == kFree) continue;
          const auto z = a.at(x, y);
          const auto w = static_cast<int>(b.at(static_cast<std::size_t>(sigma[x]),
                                               static_cast<std::size_t>(sigma[y])));
          if (sigma[z] == kFree) {
            if (used[static_cast<std::size_t>(w)]) return false;
            if (prof_a[z] != prof_b[static_cast<std::size_t>(w)]) return false;
            sigma[z] = w;
            used[static_cast<std::size_t>(w)] = 1;
            changed = true;
          } else if (sigma[z] != w) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool search(std::vector<int> sigma, std::vector<char> used) const {
    if (!propagate(sigma, used)) return false;
    const std::size_t n = a.order();
    std::size_t x = 0;
    while (x < n && sigma[x] != kFree) ++x;
    if (x == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || prof_a[x] != prof_b[y]) continue;
      auto s = sigma;
      auto u = used;
      s[x] = static_cast<int>(y);
      u[y] = 1;
      if (search(std::move(s), std::move(u))) return true;
    }
    return false;
  }
};

}  // namespace

bool table_isomorphic(const QuasigroupTable& a, const QuasigroupTable& b, std::size_t max_order) {
  if (a.order() != b.order()) return false;
  if (a.order() > max_order) {
    throw BoundExceeded("table isomorphism search limited to order " + std::to_string(max_order));
  }
  IsoSearch s{a, b, element_profiles(a), element_profiles(b)};
  auto pa = s.prof_a;
  auto pb = s.prof_b;
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  if (pa != pb) return false;
  const std::size_t n = a.order();
  return s.search(std::vector<int>(n, IsoSearch::kFree), std::vector<char>(n, 0));
}

std::vector<std::size_t> table_isomorphism_classes(const std::vector<QuasigroupTable>& tables,
                                                   std::size_t max_order) {
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    bool found = false;
    for (auto r : reps) {
      if (table_isomorphic(tables[r], tables[i], max_order)) {
        found = true;
        break;
      }
    }
    if (!found) reps.push_back(i);
  }
  return reps;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool has_proper_congruence(const QuasigroupTable& t) {
  const std::size_t n = t.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      // Smallest congruence containing (a, b): every merged pair must also
      // have all its left and right translates merged.
      UnionFind uf(n);
      std::vector<std::pair<std::size_t, std::size_t>> work{{a, b}};
      uf.unite(a, b);
      std::size_t classes = n - 1;
      while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        for (std::size_t z = 0; z < n; ++z) {
          const std::pair<std::size_t, std::size_t> translates[2] = {{t.at(x, z), t.at(y, z)},
                                                                     {t.at(z, x), t.at(z, y)}};
          for (auto [u, v] : translates) {
            if (uf.unite(u, v)) {
              --classes;
              work.emplace_back(u, v);
            }
          }
        }
      }
      if (classes > 1) return true;
    }
  }
  return false;
}

bool has_proper_subgroup_congruence(const QuasigroupTable& t, const GroupDescriptor& g) {
  const auto n = static_cast<std::size_t>(g.order());
  if (t.order() != n) throw PreconditionViolation("table order does not match the group");
  // All proper subgroups of Z_{p^k} and of Z_p^2 are cyclic.
  std::set<std::vector<Int>> seen;
  for (Int x = 1; x < g.order(); ++x) {
    std::vector<Int> sub{0};
    for (Int y = x; y != 0; y = g.add(y, x)) sub.push_back(y);
    std::sort(sub.begin(), sub.end());
    if (sub.size() == n || !seen.insert(sub).second) continue;

    // Coset label: least element of x + N.
    std::vector<Int> label(n);
    for (std::size_t e = 0; e < n; ++e) {
      Int best = g.order();
      for (Int h : sub) best = std::min(best, g.add(static_cast<Int>(e), h));
      label[e] = best;
    }
    bool congruent = true;
    for (std::size_t e = 0; e < n && congruent; ++e) {
      const auto f = static_cast<std::size_t>(g.add(static_cast<Int>(e), x));
      for (std::size_t z = 0; z < n; ++z) {
        if (label[t.at(e, z)] != label[t.at(f, z)] || label[t.at(z, e)] != label[t.at(z, f)]) {
          congruent = false;
          break;
        }
      }
    }
    if (congruent) return true;
  }
  return false;
}

void for_each_latin_square(std::size_t n, const std::function<void(const QuasigroupTable&)>& visit) {
  if (n == 0 || n > 5) throw BoundExceeded("latin square enumeration limited to orders 1..5");
  std::vector<std::uint32_t> cells(n * n);
  std::vector<std::vector<char>> row_used(n, std::vector<char>(n, 0));
  std::vector<std::vector<char>> col_used(n, std::vector<char>(n, 0));
  std::function<void(std::size_t)> fill = [&](std::size_t pos) {
    if (pos == n * n) {
      visit(QuasigroupTable(n, cells));
      return;
    }
    const std::size_t r = pos / n, c = pos % n;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (row_used[r][v] || col_used[c][v]) continue;
      row_used[r][v] = col_used[c][v] = 1;
      cells[pos] = v;
      fill(pos + 1);
      row_used[r][v] = col_used[c][v] = 0;
    }
  };
  fill(0);
}

}  // namespace paramedial::oracle
