#include "metasum/hall.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "metasum/errors.hpp"
#include "metasum/presentation.hpp"
#include "metasum/structure.hpp"

namespace metasum {

namespace {

// The part of x whose order involves only the given primes.
Element pi_part(const MetacyclicParams& p, const Element& x, const std::vector<i64>& primes) {
  const i64 n = element_order(p, x);
  return power(p, x, n / part_over(n, primes));
}

bool normalizes(const MetacyclicParams& p, const Subgroup& f, const std::vector<Element>& by) {
  for (const auto& g : by) {
    if (f.generator) {
      if (!f.contains(conjugate(p, *f.generator, g))) return false;
    } else {
      for (const auto& x : f.elements)
        if (!f.contains(conjugate(p, x, g))) return false;
    }
  }
  return true;
}

bool centralizes(const MetacyclicParams& p, const Subgroup& a, const Subgroup& b) {
  for (const auto& x : a.elements)
    for (const auto& y : b.elements)
      if (mul(p, x, y) != mul(p, y, x)) return false;
  return true;
}

// Generator of a cyclic subgroup of <x>: x^(|x| / n) has order n.
Element generator_of_order(const MetacyclicParams& p, const Element& x, i64 n) {
  return power(p, x, element_order(p, x) / n);
}

Subgroup without_generator(Subgroup s) {
  s.generator.reset();
  return s;
}

// Smallest n >= 1 with y^n in A.
i64 order_modulo(const MetacyclicParams& p, const Element& y, const Subgroup& a) {
  i64 n = 1;
  for (Element z = y; !a.contains(z); z = mul(p, z, y)) ++n;
  return n;
}

// p-parts of the elements of H; they generate H_p when H is nilpotent.
std::vector<Element> sylow_generators(const MetacyclicParams& p, const HallDecomposition& d, i64 prime) {
  std::vector<Element> gens;
  for (const auto& x : d.H.elements)
    if (x != identity()) gens.push_back(pi_part(p, x, {prime}));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

std::optional<SylowFactorization> factorize_sylow(const MetacyclicParams& p, const Subgroup& sylow, i64 prime,
                                                  const std::vector<Element>& preferred_a,
                                                  const std::vector<Element>& preferred_b) {
  SylowFactorization out;
  out.prime = prime;
  out.sylow = sylow;
  const i64 order = static_cast<i64>(sylow.order());

  std::vector<Element> a_candidates = preferred_a;
  std::vector<Element> b_candidates = preferred_b;
  std::vector<std::pair<i64, Element>> by_order;
  for (const auto& x : sylow.elements) by_order.push_back({-element_order(p, x), x});
  std::sort(by_order.begin(), by_order.end());
  for (const auto& [neg, x] : by_order) a_candidates.push_back(x);
  b_candidates.insert(b_candidates.end(), sylow.elements.begin(), sylow.elements.end());

  // Cyclic H_p: A_p trivial, B_p = H_p.
  for (const auto& x : b_candidates) {
    if (sylow.contains(x) && element_order(p, x) == order) {
      out.a_part = cyclic_subgroup(p, identity());
      out.b_part = cyclic_subgroup(p, x);
      out.m = 1;
      out.s = order;
      out.t = 0;
      out.r = 1;
      return out;
    }
  }

  const std::vector<Element> sylow_gens(sylow.elements.begin(), sylow.elements.end());
  std::set<std::vector<Element>> tried;
  for (const auto& x : a_candidates) {
    if (!sylow.contains(x) || x == identity()) continue;
    Subgroup a = cyclic_subgroup(p, x);
    if (!tried.insert(a.elements).second) continue;
    if (!normalizes(p, a, sylow_gens)) continue;
    const i64 quotient = order / static_cast<i64>(a.order());
    for (const auto& y : b_candidates) {
      if (!sylow.contains(y) || order_modulo(p, y, a) != quotient) continue;
      const i64 mp = static_cast<i64>(a.order());
      const i64 tp = discrete_log(p, power(p, y, quotient), x);
      const i64 rp = discrete_log(p, conjugate(p, x, y), x);
      if (tp % gcd(mp, rp - 1) != 0) continue;
      out.a_part = std::move(a);
      out.b_part = cyclic_subgroup(p, y);
      out.m = mp;
      out.s = quotient;
      out.t = tp;
      out.r = mp == 1 ? 1 : rp;
      return out;
    }
  }
  return std::nullopt;
}

// Fills U, V, u, v, zeta, epsilon, eta from N.
void split_normal_part(const MetacyclicParams& p, HallDecomposition& d) {
  const Subgroup k = cyclic_subgroup(p, gen_a(p));
  const Subgroup l = cyclic_subgroup(p, gen_b(p));
  d.V = intersect(k, d.N);
  d.U = intersect(l, d.N);
  d.zeta = static_cast<i64>(d.V.order());
  d.epsilon = static_cast<i64>(d.U.order());
  d.v = generator_of_order(p, gen_a(p), d.zeta);
  d.u = generator_of_order(p, gen_b(p), d.epsilon);
  d.V.generator = d.v;
  d.U.generator = d.u;
  d.eta = d.zeta == 1 ? 1 : discrete_log(p, conjugate(p, d.v, d.u), d.v);
}

std::vector<SylowFactorization> factorize_all(const MetacyclicParams& p, const HallDecomposition& d) {
  std::vector<SylowFactorization> out;
  for (i64 prime : d.pi) {
    const auto gens = sylow_generators(p, d, prime);
    const Subgroup sylow = without_generator(generate_subgroup(p, gens));
    if (static_cast<i64>(sylow.order()) != part_over(static_cast<i64>(d.H.order()), {prime})) {
      throw SearchFailed("H is not nilpotent: p-elements for p = " + std::to_string(prime) +
                         " do not form a Sylow subgroup");
    }
    // Prefer the factorization inherited from <a> and <b>.
    auto f = factorize_sylow(p, sylow, prime, {pi_part(p, gen_a(p), {prime})}, {pi_part(p, gen_b(p), {prime})});
    if (!f) throw SearchFailed("no metacyclic factorization meeting the divisibility condition for p = " +
                               std::to_string(prime));
    out.push_back(std::move(*f));
  }
  return out;
}

}  // namespace

std::vector<SylowFactorization> sylow_factorizations(const MetacyclicParams& p, const HallDecomposition& d) {
  return factorize_all(p, d);
}

std::vector<std::string> decomposition_violations(const MetacyclicParams& p, const HallDecomposition& d) {
  std::vector<std::string> bad;
  const i64 n = p.order();
  const i64 nn = static_cast<i64>(d.N.order());
  const i64 nh = static_cast<i64>(d.H.order());
  const std::vector<Element> ab{gen_a(p), gen_b(p)};

  if (nn * nh != n) bad.push_back("|N||H| != |G|");
  if (gcd(nn, nh) != 1) bad.push_back("|N| and |H| not coprime");
  if (intersect(d.N, d.H).order() != 1) bad.push_back("N ∩ H nontrivial");
  if (!normalizes(p, d.N, ab)) bad.push_back("N not normal");

  if (d.zeta * d.epsilon != nn || intersect(d.V, d.U).order() != 1) bad.push_back("N = VU is not split");
  if (d.zeta > 1 && powmod(d.eta, d.epsilon, d.zeta) != 1) bad.push_back("eta^epsilon != 1 mod zeta");
  if (d.zeta > 1 && conjugate(p, d.v, d.u) != power(p, d.v, d.eta)) bad.push_back("v^u != v^eta");
  if (!centralizes(p, d.U, d.H)) bad.push_back("U does not centralize H");

  const Subgroup derived = derived_closed_form(p);
  if (intersect(derived, d.N) != d.V) bad.push_back("G' ∩ N != V");
  if (intersect(derived, d.H) != without_generator(derived_of(p, d.H))) bad.push_back("G' ∩ H != H'");
  if (gcd(p.r() - 1, d.zeta) != 1) bad.push_back("gcd(r - 1, |V|) != 1");

  i64 sylow_product = 1;
  for (std::size_t x = 0; x < d.sylows.size(); ++x) {
    const auto& f = d.sylows[x];
    sylow_product *= static_cast<i64>(f.sylow.order());
    if (!std::includes(d.H.elements.begin(), d.H.elements.end(), f.sylow.elements.begin(), f.sylow.elements.end()))
      bad.push_back("H_p not inside H");
    const std::vector<Element> sylow_elems(f.sylow.elements.begin(), f.sylow.elements.end());
    if (!normalizes(p, f.a_part, sylow_elems)) bad.push_back("A_p not normal in H_p");
    if (f.a_part.order() * f.b_part.order() / intersect(f.a_part, f.b_part).order() != f.sylow.order())
      bad.push_back("H_p != B_p A_p");
    if (f.t % gcd(f.m, f.r - 1) != 0) bad.push_back("(m_p, r_p - 1) does not divide t_p");
    for (std::size_t y = x + 1; y < d.sylows.size(); ++y)
      if (!centralizes(p, f.sylow, d.sylows[y].sylow)) bad.push_back("Sylow subgroups of H do not commute");
  }
  if (sylow_product != nh) bad.push_back("H is not the product of its Sylow subgroups");
  return bad;
}

HallDecomposition hall_decomposition(const MetacyclicParams& p, std::size_t cap) {
  check_cap(p, cap);
  const i64 n = p.order();
  const auto primes = prime_divisors(n);
  const std::size_t k = primes.size();

  // Prime sets for H, largest |H| first.
  std::vector<std::pair<i64, unsigned>> masks;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<i64> pi;
    for (std::size_t x = 0; x < k; ++x)
      if (mask & (1u << x)) pi.push_back(primes[x]);
    masks.push_back({-part_over(n, pi), mask});
  }
  std::sort(masks.begin(), masks.end());

  const std::vector<Element> ab{gen_a(p), gen_b(p)};
  for (const auto& [neg, mask] : masks) {
    HallDecomposition d;
    std::vector<i64> complement;
    for (std::size_t x = 0; x < k; ++x) {
      if (mask & (1u << x)) d.pi.push_back(primes[x]);
      else complement.push_back(primes[x]);
    }
    d.N = without_generator(
        generate_subgroup(p, {pi_part(p, gen_a(p), complement), pi_part(p, gen_b(p), complement)}));
    if (static_cast<i64>(d.N.order()) != part_over(n, complement) || !normalizes(p, d.N, ab)) continue;
    split_normal_part(p, d);

    const Subgroup natural_h =
        without_generator(generate_subgroup(p, {pi_part(p, gen_a(p), d.pi), pi_part(p, gen_b(p), d.pi)}));
    std::set<std::vector<Element>> seen;
    for (const auto& g : d.N.elements) {
      Subgroup h = conjugate(p, natural_h, g);
      if (!seen.insert(h.elements).second) continue;
      d.H = std::move(h);
      try {
        d.sylows = factorize_all(p, d);
      } catch (const SearchFailed&) {
        continue;
      }
      if (decomposition_violations(p, d).empty()) return d;
    }
  }
  throw SearchFailed("no Hall decomposition found for " + p.to_string());
}

HallFamily build_hall_family(const MetacyclicParams& p, const HallDecomposition& d) {
  std::vector<Subgroup> seeds{cyclic_subgroup(p, d.v)};
  for (i64 i = 1; i <= d.zeta; ++i) {
    const i64 e = mod(checked_mul(i, d.eta - 1), std::max<i64>(d.zeta, 1));
    seeds.push_back(cyclic_subgroup(p, mul(p, d.u, power(p, d.v, e))));
  }
  for (const auto& f : d.sylows) {
    seeds.push_back(f.a_part);
    seeds.push_back(f.b_part);
  }

  HallFamily out{conjugacy_closure(p, seeds), {}};

  std::vector<Subgroup> t{d.U, d.V};
  for (const auto& f : d.sylows) {
    t.push_back(f.a_part);
    t.push_back(f.b_part);
  }
  const auto labels = orbit_labels(out.family);
  std::set<std::size_t> covered;
  for (auto& f : t) {
    if (f.is_trivial()) continue;
    const std::size_t idx = out.family.find(f);
    if (idx == out.family.size()) throw InvariantViolation("transversal member missing from family");
    if (!covered.insert(labels[idx]).second)
      throw InvariantViolation("two transversal members are conjugate");
    out.transversal.representatives.push_back(f);
    out.transversal.orbit_sizes.push_back(
        static_cast<std::size_t>(std::count(labels.begin(), labels.end(), labels[idx])));
  }
  if (covered != std::set<std::size_t>(labels.begin(), labels.end()))
    throw InvariantViolation("transversal misses a conjugacy orbit of the family");
  return out;
}

}  // namespace metasum
