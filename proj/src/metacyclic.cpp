#include "metasum/metacyclic.hpp"

#include <algorithm>
#include <tuple>
#include <cstdint>
#include <unordered_set>

#include "metasum/errors.hpp"

namespace metasum {

namespace {

constexpr i64 kTabulateLimit = 1 << 16;

}  // namespace

MetacyclicParams::MetacyclicParams(i64 m, i64 s, i64 t, i64 r) : m_(m), s_(s), t_(t), r_(r) {
  k_ = m_ / gcd(r_ - 1, m_);
  s_prime_ = multiplicative_order(r_, m_);
  if (s_ <= kTabulateLimit) {
    // r^-1 = r^(s-1) since r^s = 1.
    const i64 r_inv = powmod(r_, s_ - 1, m_);
    r_inv_pow_.resize(static_cast<std::size_t>(s_));
    i64 acc = mod(1, m_);
    for (i64 j = 0; j < s_; ++j) {
      r_inv_pow_[static_cast<std::size_t>(j)] = acc;
      acc = mulmod(acc, r_inv, m_);
    }
  }
}

MetacyclicParams MetacyclicParams::validate(i64 m, i64 s, i64 t, i64 r) {
  if (m < 1) throw ConstraintViolation("m must be >= 1");
  if (s < 1) throw ConstraintViolation("s must be >= 1");
  if (t < 0) throw ConstraintViolation("t must be >= 0");
  if (r < 1) throw ConstraintViolation("r must be >= 1");
  i64 order;
  if (__builtin_mul_overflow(m, s, &order)) throw ConstraintViolation("m * s overflows");

  const i64 rr = m == 1 ? 1 : mod(r, m);
  const i64 tt = mod(t, m);
  if (powmod(rr, s, m) != mod(1, m)) {
    throw ConstraintViolation("r^s = 1 (mod m) fails: " + std::to_string(r) + "^" + std::to_string(s) +
                              " mod " + std::to_string(m) + " = " + std::to_string(powmod(rr, s, m)));
  }
  if (mulmod(tt, rr - 1, m) != 0) {
    throw ConstraintViolation("m | t(r - 1) fails: " + std::to_string(m) + " does not divide " +
                              std::to_string(t) + "*" + std::to_string(r - 1));
  }
  return MetacyclicParams(m, s, tt, rr);
}

i64 MetacyclicParams::r_inverse_power(i64 j) const {
  if (!r_inv_pow_.empty()) return r_inv_pow_[static_cast<std::size_t>(j)];
  return powmod(r_, mod(s_ - j, s_), m_);
}

std::string MetacyclicParams::to_string() const {
  return "(" + std::to_string(m_) + "," + std::to_string(s_) + "," + std::to_string(t_) + "," +
         std::to_string(r_) + ")";
}

std::string to_string(const Element& x) {
  return "a^" + std::to_string(x.i) + " b^" + std::to_string(x.j);
}

// a^i b^j a^k b^l = a^(i + k r^-j) b^(j + l), then b^s = a^t folds the overflow
// of the b-exponent into a central a-power.
Element mul(const MetacyclicParams& p, const Element& x, const Element& y) {
  const i64 m = p.m();
  const i64 s = p.s();
  i64 jl = x.j + y.j;
  i64 i = x.i + mulmod(y.i, p.r_inverse_power(x.j), m);
  if (jl >= s) {
    jl -= s;
    i += p.t();
  }
  return {mod(i, m), jl};
}

Element inverse(const MetacyclicParams& p, const Element& x) {
  // b^-j = a^-t b^(s-j) for 0 < j < s.
  Element b_inv = x.j == 0 ? identity() : Element{mod(-p.t(), p.m()), p.s() - x.j};
  return mul(p, b_inv, Element{mod(-x.i, p.m()), 0});
}

Element power(const MetacyclicParams& p, const Element& x, i64 n) {
  Element base = n < 0 ? inverse(p, x) : x;
  if (n < 0) n = -n;
  Element acc = identity();
  while (n > 0) {
    if (n & 1) acc = mul(p, acc, base);
    base = mul(p, base, base);
    n >>= 1;
  }
  return acc;
}

Element conjugate(const MetacyclicParams& p, const Element& g, const Element& h) {
  return mul(p, inverse(p, h), mul(p, g, h));
}

Element commutator(const MetacyclicParams& p, const Element& x, const Element& y) {
  return mul(p, mul(p, inverse(p, x), inverse(p, y)), mul(p, x, y));
}

i64 element_order(const MetacyclicParams& p, const Element& x) {
  // The image in G/<a> has order s / gcd(j, s); that power lands in <a>.
  const i64 d = p.s() / gcd(x.j, p.s());
  const Element y = power(p, x, d);
  return d * (p.m() / gcd(y.i, p.m()));
}

bool Subgroup::contains(const Element& x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

void check_cap(const MetacyclicParams& p, std::size_t cap) {
  if (static_cast<std::size_t>(p.order()) > cap) {
    throw CapExceeded("group order " + std::to_string(p.order()) + " exceeds element cap " +
                      std::to_string(cap));
  }
}

std::vector<Element> enumerate_elements(const MetacyclicParams& p, std::size_t cap) {
  check_cap(p, cap);
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(p.order()));
  for (i64 i = 0; i < p.m(); ++i)
    for (i64 j = 0; j < p.s(); ++j) out.push_back({i, j});
  return out;
}

Subgroup generate_subgroup(const MetacyclicParams& p, const std::vector<Element>& gens) {
  std::vector<Element> distinct(gens.begin(), gens.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::erase(distinct, identity());

  std::unordered_set<std::size_t> seen{index_of(p, identity())};
  std::vector<Element> elements{identity()};
  for (std::size_t n = 0; n < elements.size(); ++n) {
    for (const auto& g : distinct) {
      Element y = mul(p, elements[n], g);
      if (seen.insert(index_of(p, y)).second) elements.push_back(y);
    }
  }
  std::sort(elements.begin(), elements.end());
  Subgroup out{std::move(elements), std::nullopt};
  if (gens.size() == 1) out.generator = gens.front();
  return out;
}

Subgroup cyclic_subgroup(const MetacyclicParams& p, const Element& g) {
  std::vector<Element> elements{identity()};
  for (Element x = g; x != identity(); x = mul(p, x, g)) elements.push_back(x);
  std::sort(elements.begin(), elements.end());
  return {std::move(elements), g};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(out.elements));
  return out;
}

Subgroup conjugate(const MetacyclicParams& p, const Subgroup& f, const Element& g) {
  if (f.generator) return cyclic_subgroup(p, conjugate(p, *f.generator, g));
  Subgroup out;
  out.elements.reserve(f.elements.size());
  for (const auto& x : f.elements) out.elements.push_back(conjugate(p, x, g));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

bool is_normal(const MetacyclicParams& p, const Subgroup& f, std::size_t cap) {
  return normalizer(p, f, cap).order() == static_cast<std::size_t>(p.order());
}

Subgroup bruteforce_center(const MetacyclicParams& p, std::size_t cap) {
  // An element is central iff it commutes with both generators a and b.
  const auto all = enumerate_elements(p, cap);
  const Element a{1 % p.m(), 0}, b{0, 1 % p.s()};
  Subgroup out;
  for (const auto& x : all)
    if (mul(p, x, a) == mul(p, a, x) && mul(p, x, b) == mul(p, b, x)) out.elements.push_back(x);
  return out;
}

Subgroup bruteforce_derived(const MetacyclicParams& p, std::size_t cap) {
  // Cayley table over dense indices; all[k] has index k.
  const auto all = enumerate_elements(p, cap);
  const std::size_t n = all.size();
  std::vector<std::uint32_t> table(n * n);
  std::vector<std::size_t> inv(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto xy = static_cast<std::uint32_t>(index_of(p, mul(p, all[x], all[y])));
      table[x * n + y] = xy;
      if (xy == 0) inv[x] = y;
    }
  auto prod = [&](std::size_t x, std::size_t y) { return static_cast<std::size_t>(table[x * n + y]); };

  std::vector<char> is_commutator(n, 0);
  std::vector<std::size_t> commutators;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t c = prod(prod(inv[x], inv[y]), prod(x, y));
      if (!is_commutator[c]) {
        is_commutator[c] = 1;
        commutators.push_back(c);
      }
    }

  std::vector<char> in(n, 0);
  std::vector<std::size_t> members{0};
  in[0] = 1;
  for (std::size_t k = 0; k < members.size(); ++k)
    for (std::size_t c : commutators) {
      const std::size_t y = prod(members[k], c);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  Subgroup out;
  for (std::size_t k = 0; k < n; ++k)
    if (in[k]) out.elements.push_back(all[k]);
  return out;
}

Subgroup derived_of(const MetacyclicParams& p, const Subgroup& h) {
  return commutator_span(p, h, h);
}

Subgroup normalizer(const MetacyclicParams& p, const Subgroup& f, std::size_t cap) {
  const auto all = enumerate_elements(p, cap);
  Subgroup out;
  for (const auto& g : all) {
    bool normalizes = true;
    if (f.generator) {
      normalizes = f.contains(conjugate(p, *f.generator, g));
    } else {
      for (const auto& x : f.elements) {
        if (!f.contains(conjugate(p, x, g))) {
          normalizes = false;
          break;
        }
      }
    }
    if (normalizes) out.elements.push_back(g);
  }
  return out;
}

Subgroup centralizer(const MetacyclicParams& p, const Subgroup& f, std::size_t cap) {
  const auto all = enumerate_elements(p, cap);
  Subgroup out;
  for (const auto& g : all) {
    bool commutes = true;
    for (const auto& x : f.elements) {
      if (mul(p, x, g) != mul(p, g, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.elements.push_back(g);
  }
  return out;
}

Subgroup commutator_span(const MetacyclicParams& p, const Subgroup& a, const Subgroup& b) {
  std::vector<char> seen(static_cast<std::size_t>(p.order()), 0);
  std::vector<Element> gens;
  for (const auto& x : a.elements) {
    for (const auto& y : b.elements) {
      Element c = commutator(p, x, y);
      char& flag = seen[index_of(p, c)];
      if (!flag) {
        flag = 1;
        gens.push_back(c);
      }
    }
  }
  Subgroup out = generate_subgroup(p, gens);
  out.generator.reset();
  return out;
}

std::vector<MetacyclicParams> valid_params_up_to(i64 max_order) {
  std::vector<MetacyclicParams> out;
  for (i64 n = 1; n <= max_order; ++n) {
    for (i64 m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      const i64 s = n / m;
      for (i64 t = 0; t < m; ++t) {
        for (i64 r = 1; r <= std::max<i64>(1, m - 1); ++r) {
          if (powmod(r, s, m) != mod(1, m)) continue;
          if (mulmod(t, r - 1, m) != 0) continue;
          out.push_back(MetacyclicParams::validate(m, s, t, r));
        }
      }
    }
  }
  return out;
}

}  // namespace metasum
