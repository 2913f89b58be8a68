#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force ground truth for the structured enumerators.
 *
 * Nothing here uses conjugacy-class representatives, square-root formulas
 * or case analysis. Orbits are computed by exhaustive closure, isomorphism
 * of affine quasigroups is decided by the action of the affine group
 * Aut(G) x| G on all valid triples (phi, psi, c), and at the table level by
 * backtracking search for an explicit bijection.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "paramedial/affine.hpp"
#include "paramedial/errors.hpp"

namespace paramedial::oracle {

struct OrbitOptions {
  /// Largest point set orbits() will accept.
  std::size_t max_points = 10'000'000;
  /// Burnside's identity is checked when |G| * |X| does not exceed this.
  std::uint64_t burnside_budget = 50'000'000;
  /// Random (g, h, x) triples used to spot-check g(h(x)) = (gh)(x).
  std::size_t compatibility_samples = 64;
};

struct OrbitPartition {
  /// Point indices of each orbit, ascending; orbits ordered by their least point.
  std::vector<std::vector<std::size_t>> orbits;
  /// Least point index of each orbit.
  std::vector<std::size_t> representatives;
  /// |Stab(rep)|, counted over the whole acting group.
  std::vector<std::uint64_t> stabilizer_orders;
  /// Point index -> orbit index.
  std::vector<std::size_t> orbit_of;
  std::uint64_t group_order = 0;
  bool burnside_checked = false;
  /// Sum over g of |Fix(g)|; only meaningful when burnside_checked.
  std::uint64_t fixed_point_total = 0;

  std::size_t size() const noexcept { return orbits.size(); }
};

/// A finite group acting on a finite, strictly ascending point list.
/// compose(g, h) must act as "first h, then g".
template <class Element, class Point>
struct ActionSpec {
  std::vector<Element> elements;
  /// Generating set used for the closure; empty means all elements.
  std::vector<Element> generators;
  std::vector<Point> points;
  std::function<Point(const Element&, const Point&)> act;
  std::function<Element(const Element&, const Element&)> compose;
  Element identity;
};

namespace detail {

template <class Point>
std::size_t locate(const std::vector<Point>& points, const Point& x) {
  auto it = std::lower_bound(points.begin(), points.end(), x);
  if (it == points.end() || !(*it == x)) {
    throw PreconditionViolation("group action leaves the point set");
  }
  return static_cast<std::size_t>(it - points.begin());
}

}  // namespace detail

template <class Element, class Point>
OrbitPartition orbits(const ActionSpec<Element, Point>& spec, const OrbitOptions& opts = {}) {
  const auto& pts = spec.points;
  const auto& group = spec.elements;
  if (pts.size() > opts.max_points) {
    throw BoundExceeded("orbit computation over " + std::to_string(pts.size()) +
                        " points exceeds the budget of " + std::to_string(opts.max_points));
  }
  if (group.empty()) throw PreconditionViolation("acting group has no elements");

  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!(spec.act(spec.identity, pts[i]) == pts[i])) {
      throw PreconditionViolation("identity does not act trivially");
    }
  }
  if (!pts.empty()) {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick_g(0, group.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_x(0, pts.size() - 1);
    for (std::size_t s = 0; s < opts.compatibility_samples; ++s) {
      const auto& g = group[pick_g(rng)];
      const auto& h = group[pick_g(rng)];
      const auto& x = pts[pick_x(rng)];
      if (!(spec.act(spec.compose(g, h), x) == spec.act(g, spec.act(h, x)))) {
        throw PreconditionViolation("action is not compatible with composition");
      }
    }
  }

  const auto& gens = spec.generators.empty() ? group : spec.generators;
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();

  OrbitPartition out;
  out.group_order = group.size();
  out.orbit_of.assign(pts.size(), kUnseen);
  for (std::size_t seed = 0; seed < pts.size(); ++seed) {
    if (out.orbit_of[seed] != kUnseen) continue;
    const std::size_t id = out.orbits.size();
    std::vector<std::size_t> orbit{seed};
    out.orbit_of[seed] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const Point& x = pts[orbit[head]];
      for (const auto& g : gens) {
        const std::size_t j = detail::locate(pts, spec.act(g, x));
        if (out.orbit_of[j] == kUnseen) {
          out.orbit_of[j] = id;
          orbit.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.representatives.push_back(seed);
    out.orbits.push_back(std::move(orbit));
  }

  for (std::size_t id = 0; id < out.orbits.size(); ++id) {
    const Point& rep = pts[out.representatives[id]];
    std::uint64_t stab = 0;
    for (const auto& g : group) {
      if (spec.act(g, rep) == rep) ++stab;
    }
    if (stab * out.orbits[id].size() != out.group_order) {
      throw Error("orbit-stabilizer identity fails; generators do not generate the group");
    }
    out.stabilizer_orders.push_back(stab);
  }

  if (static_cast<std::uint64_t>(group.size()) * pts.size() <= opts.burnside_budget) {
    std::uint64_t total = 0;
    for (const auto& g : group) {
      for (const auto& x : pts) {
        if (spec.act(g, x) == x) ++total;
      }
    }
    if (total != out.group_order * out.orbits.size()) {
      throw Error("Burnside count disagrees with the orbit partition");
    }
    out.burnside_checked = true;
    out.fixed_point_total = total;
  }
  return out;
}

/// A small generating set, picked greedily in element order.
template <class Element>
std::vector<Element> greedy_generators(const std::vector<Element>& elements,
                                       const std::function<Element(const Element&, const Element&)>& compose,
                                       const Element& identity) {
  std::vector<Element> gens;
  std::set<Element> generated{identity};
  for (const auto& e : elements) {
    if (generated.count(e)) continue;
    gens.push_back(e);
    std::vector<Element> frontier(generated.begin(), generated.end());
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (const auto& x : frontier) {
        for (const auto& g : gens) {
          Element y = compose(g, x);
          if (generated.insert(y).second) next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
  }
  return gens;
}

/// Isomorphism classes of paramedial quasigroups affine over a group.
struct TripleClassification {
  GroupDescriptor group;
  /// Every valid triple (phi, psi, c), ascending.
  std::vector<AffineForm> points;
  OrbitPartition partition;
  /// Least triple of each class, ascending.
  std::vector<AffineForm> representatives;
  /// Orbit count from fixed points of the affine group, computed independently.
  std::uint64_t burnside_count = 0;

  std::size_t count() const noexcept { return representatives.size(); }
  /// Class index of a triple; throws PreconditionViolation if it is not a point.
  std::size_t class_of(const AffineForm& f) const;
};

/// Default size limit for classify_triples.
inline constexpr Int kDefaultOracleBound = 25;

/// Throws BoundExceeded when |G| > max_order.
TripleClassification classify_triples(const GroupDescriptor& g, Int max_order = kDefaultOracleBound);

/// Number of isomorphism classes by Burnside's lemma over Aut(G) x| G, with the
/// fixed points of each group element counted as the kernel of a linear map.
std::uint64_t burnside_triple_count(const GroupDescriptor& g, Int max_order = kDefaultOracleBound);

/// For each form, the class it falls into.
std::vector<std::size_t> class_hits(const TripleClassification& cls, const std::vector<AffineForm>& forms);

/// True iff some bijection s satisfies s(x * y) = s(x) o s(y).
bool table_isomorphic(const QuasigroupTable& a, const QuasigroupTable& b, std::size_t max_order = 9);

/// Partition tables into isomorphism classes; returns one table index per class.
std::vector<std::size_t> table_isomorphism_classes(const std::vector<QuasigroupTable>& tables,
                                                   std::size_t max_order = 9);

/// Some pair generates a congruence that is neither equality nor total.
bool has_proper_congruence(const QuasigroupTable& t);

/// Some proper non-trivial subgroup of g induces a coset partition that is a
/// congruence of t. Uses only the group law of g, never the affine form.
bool has_proper_subgroup_congruence(const QuasigroupTable& t, const GroupDescriptor& g);

/// Calls visit on every latin square of order n (n <= 5).
void for_each_latin_square(std::size_t n, const std::function<void(const QuasigroupTable&)>& visit);

}  // namespace paramedial::oracle
