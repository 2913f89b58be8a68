#include "paramedial/enum_cyclic.hpp"

#include <algorithm>
#include <functional>

#include "paramedial/enum_gl2.hpp"
#include "paramedial/errors.hpp"
#include "paramedial/oracle.hpp"

namespace paramedial {

namespace {

struct Entry {
  AffineForm form;
  std::string label;
};

void enumerate_odd(const Modulus& m, std::vector<Entry>& out) {
  const Int p = m.prime();
  const Int n = m.order();
  const int k = m.exponent();

  auto emit = [&](Int phi, Int psi, Int c, std::string label) {
    out.push_back({AffineForm::cyclic(p, k, phi, psi, c), std::move(label)});
  };

  for (const auto& u : unit_group(m)) {
    const Int phi = u.value();
    emit(phi, n - phi, 0, "psi=-phi");

    // p^i = gcd(1 - 2 phi, p^k): i is the precision to which phi agrees with 1/2.
    const Int defect = m.reduce(1 - 2 * phi);
    int i = k;
    if (defect != 0) {
      i = 0;
      for (Int d = defect; d % p == 0; d /= p) ++i;
    }

    if (i == 0) {
      emit(phi, phi, 0, "psi=phi, i=0");
      continue;
    }
    // c in {0, p^0, ..., p^{i-1}}
    emit(phi, phi, 0, i == k ? "psi=phi=1/2" : "psi=phi, i=" + std::to_string(i));
    Int power = 1;
    for (int j = 0; j < i; ++j, power *= p) {
      emit(phi, phi, power, i == k ? "psi=phi=1/2" : "psi=phi, i=" + std::to_string(i));
    }
  }
}

void enumerate_two_power(const Modulus& m, std::vector<Entry>& out) {
  const Int n = m.order();
  const int k = m.exponent();
  const auto units = unit_group(m);
  for (const auto& phi : units) {
    const Int square = phi.value() * phi.value() % n;
    int found = 0;
    for (const auto& psi : units) {
      if (psi.value() * psi.value() % n != square) continue;
      out.push_back({AffineForm::cyclic(2, k, phi.value(), psi.value(), 0), "psi^2=phi^2"});
      ++found;
    }
    if (found != 4) throw Error("expected four square roots of phi^2 in " + m.to_string());
  }
}

void enumerate_by_oracle(const Modulus& m, std::vector<Entry>& out) {
  const auto cls = oracle::classify_triples(GroupDescriptor::cyclic(m.prime(), m.exponent()));
  for (const auto& rep : cls.representatives) out.push_back({rep, "oracle"});
}

// Names of the abelian groups of order p^e, one per partition of e.
std::vector<std::string> abelian_group_names(Int p, int e) {
  std::vector<std::string> names;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      std::string name;
      for (std::size_t i = parts.size(); i-- > 0;) {
        Int q = 1;
        for (int j = 0; j < parts[i]; ++j) q *= p;
        if (!name.empty()) name += " x ";
        name += "Z_" + std::to_string(q);
      }
      names.push_back(name);
      return;
    }
    for (int part = std::min(left, max_part); part >= 1; --part) {
      parts.push_back(part);
      rec(left - part, part);
      parts.pop_back();
    }
  };
  rec(e, e);
  return names;
}

std::string unsupported_message(Int n, Int p, int e) {
  const auto names = abelian_group_names(p, e);
  std::string all, missing;
  for (std::size_t i = 0; i < names.size(); ++i) {
    all += (i ? ", " : "") + names[i];
    if (i > 0) missing += (i > 1 ? ", " : "") + names[i];
  }
  return "unsupported order " + std::to_string(n) + ": needs the abelian groups " + all +
         " of order " + std::to_string(p) + "^" + std::to_string(e) +
         "; only Z_{p^k} and Z_p x Z_p are classified (missing: " + missing + ")";
}

}  // namespace

CyclicClassification enumerate_cyclic(const Modulus& m) {
  std::vector<Entry> entries;
  if (m.prime() != 2) {
    enumerate_odd(m, entries);
  } else if (m.exponent() > 2) {
    enumerate_two_power(m, entries);
  } else {
    enumerate_by_oracle(m, entries);
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.form < b.form; });

  CyclicClassification out{m, {}, {}, 0};
  for (auto& e : entries) {
    out.forms.push_back(std::move(e.form));
    out.cases.push_back(std::move(e.label));
  }
  out.count = static_cast<Int>(out.forms.size());
  return out;
}

Int closed_form_count(const Modulus& m) {
  const Int p = m.prime();
  const int k = m.exponent();
  if (p == 2) {
    if (k == 1) return 1;
    if (k == 2) return 4;
    return Int{1} << (k + 1);
  }
  const Int pk = m.order();
  Int tail = 0;
  Int power = 1;
  for (int i = 0; i <= k - 2; ++i, power *= p) tail += power;
  return 2 * pk - pk / p + tail;
}

Int pq_total(Int n) {
  if (n < 1) throw PreconditionViolation("order must be positive");
  if (n >= kMaxModulus) throw UnsupportedOrder("order " + std::to_string(n) + " is out of range");
  Int total = 1;
  Int rest = n;
  for (Int p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;  // the cofactor left is prime
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e == 0) continue;
    if (e >= 3) throw UnsupportedOrder(unsupported_message(n, p, e));
    Int part = closed_form_count(Modulus(p, e));
    if (e == 2) part += closed_form_count_elem2(p);
    total *= part;
  }
  return total;
}

}  // namespace paramedial
