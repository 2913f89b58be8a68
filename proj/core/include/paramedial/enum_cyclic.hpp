#pragma once

// Paramedial quasigroups affine over the cyclic group Z_{p^k}, one
// representative per isomorphism class, and the closed-form class counts.

#include <string>
#include <vector>

#include "paramedial/affine.hpp"
#include "paramedial/modring.hpp"

namespace paramedial {

struct CyclicClassification {
  Modulus modulus;
  /// Ordered by phi, then psi, then c.
  std::vector<AffineForm> forms;
  /// Case of the derivation each form comes from, parallel to forms.
  std::vector<std::string> cases;
  Int count = 0;
};

/// Odd p: psi = -phi, and psi = phi split by gcd(1 - 2 phi, p^k) = p^i with
/// c in {0, p^0, ..., p^{i-1}}. p = 2, k > 2: the four square roots psi of
/// phi^2 for every phi, c = 0. p = 2, k <= 2: least triple of each class
/// found by the brute-force oracle.
CyclicClassification enumerate_cyclic(const Modulus& m);

/// 2p^k - p^{k-1} + sum_{i=0}^{k-2} p^i for odd p; 2^{k+1} for p = 2, k > 2;
/// 4 for Z_4 and 1 for Z_2.
Int closed_form_count(const Modulus& m);

/// Number of paramedial quasigroups of order n up to isomorphism, by
/// multiplicativity over the prime-power parts. Throws UnsupportedOrder if a
/// prime divides n three or more times.
Int pq_total(Int n);

}  // namespace paramedial
