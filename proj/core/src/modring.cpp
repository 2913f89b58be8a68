#include "paramedial/modring.hpp"

#include <numeric>

#include "paramedial/errors.hpp"

namespace paramedial {

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Int pow_mod(Int base, Int exp, Int n) {
  if (exp < 0) throw PreconditionViolation("pow_mod: negative exponent");
  Int result = 1 % n;
  Int b = base % n;
  if (b < 0) b += n;
  while (exp > 0) {
    if (exp & 1) result = result * b % n;
    b = b * b % n;
    exp >>= 1;
  }
  return result;
}

Int inverse_mod(Int a, Int n) {
  Int r0 = n, r1 = a % n;
  if (r1 < 0) r1 += n;
  Int s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) {
    throw NotInvertible(std::to_string(a) + " is not invertible modulo " + std::to_string(n));
  }
  return s0 < 0 ? s0 + n : s0;
}

Modulus::Modulus(Int p, int k) : p_(p), k_(k), n_(1) {
  if (!is_prime(p)) throw InvalidModulus(std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidModulus("exponent must be at least 1");
  for (int i = 0; i < k; ++i) {
    n_ *= p;
    if (n_ >= kMaxModulus) {
      throw InvalidModulus(std::to_string(p) + "^" + std::to_string(k) +
                           " exceeds the supported modulus range (< 2^31)");
    }
  }
}

std::string Modulus::to_string() const { return "Z_" + std::to_string(n_); }

namespace {

void require_same(const Modulus& a, const Modulus& b) {
  if (!(a == b)) {
    throw ModulusMismatch("residues over " + a.to_string() + " and " + b.to_string());
  }
}

}  // namespace

Residue Residue::operator+(const Residue& o) const {
  require_same(modulus_, o.modulus_);
  return Residue(value_ + o.value_, modulus_);
}

Residue Residue::operator-(const Residue& o) const {
  require_same(modulus_, o.modulus_);
  return Residue(value_ - o.value_, modulus_);
}

Residue Residue::operator*(const Residue& o) const {
  require_same(modulus_, o.modulus_);
  return Residue(value_ * o.value_, modulus_);
}

Residue Residue::pow(Int e) const {
  if (e < 0) return inverse().pow(-e);
  return Residue(pow_mod(value_, e, modulus_.order()), modulus_);
}

Residue Residue::inverse() const {
  return Residue(inverse_mod(value_, modulus_.order()), modulus_);
}

Unit::Unit(const Residue& r) : r_(r) {
  if (!r.is_unit()) {
    throw NotInvertible(std::to_string(r.value()) + " is not a unit of " +
                        r.modulus().to_string());
  }
}

std::vector<Unit> unit_group(const Modulus& m) {
  std::vector<Unit> units;
  units.reserve(static_cast<std::size_t>(m.order() - m.order() / m.prime()));
  for (Int v = 1; v < m.order(); ++v) {
    if (v % m.prime() != 0) units.emplace_back(v, m);
  }
  return units;
}

namespace {

void require_odd_prime_field(const Modulus& m) {
  if (!m.is_field() || m.prime() == 2) {
    throw PreconditionViolation("square roots are taken in Z_p for odd primes p only, got " +
                                m.to_string());
  }
}

// Tonelli-Shanks; x must be a non-zero quadratic residue mod p.
Int tonelli_shanks(Int x, Int p) {
  Int q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;

  Int c = pow_mod(z, q, p);
  Int r = pow_mod(x, (q + 1) / 2, p);
  Int t = pow_mod(x, q, p);
  int m = s;
  while (t != 1) {
    int i = 0;
    Int t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    Int b = c;
    for (int j = 0; j < m - i - 1; ++j) b = b * b % p;
    r = r * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return r;
}

}  // namespace

bool is_square(const Residue& x) {
  require_odd_prime_field(x.modulus());
  const Int p = x.modulus().prime();
  return x.is_zero() || pow_mod(x.value(), (p - 1) / 2, p) == 1;
}

std::vector<Residue> sqrt_residue(const Residue& x) {
  if (!is_square(x)) return {};
  const Modulus& m = x.modulus();
  if (x.is_zero()) return {Residue(0, m)};
  Int r = tonelli_shanks(x.value(), m.prime());
  Int s = m.prime() - r;
  if (s < r) std::swap(r, s);
  return {Residue(r, m), Residue(s, m)};
}

std::optional<Residue> canonical_sqrt(const Residue& x) {
  auto roots = sqrt_residue(x);
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

}  // namespace paramedial
