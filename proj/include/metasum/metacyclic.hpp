#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "metasum/numtheory.hpp"

namespace metasum {

/// Default upper bound on |G| for operations that enumerate every element.
inline constexpr std::size_t kDefaultElementCap = 1'000'000;

/**
 * Parameters (m, s, t, r) of the metacyclic presentation
 *
 *     G = < a, b | a^m = 1, b^s = a^t, b^-1 a b = a^r >
 *
 * with r^s = 1 (mod m) and m | t(r - 1). Instances only come out of
 * validate(), so every value of this type satisfies both congruences and
 * has t, r reduced modulo m (r is kept in [1, m), or r = 1 when m = 1).
 */
class MetacyclicParams {
 public:
  /// The trivial group (1, 1, 0, 1).
  MetacyclicParams() : MetacyclicParams(1, 1, 0, 1) {}

  static MetacyclicParams validate(i64 m, i64 s, i64 t, i64 r);

  i64 m() const { return m_; }
  i64 s() const { return s_; }
  i64 t() const { return t_; }
  i64 r() const { return r_; }

  /// |G| = m * s.
  i64 order() const { return m_ * s_; }
  /// m / gcd(r - 1, m); the center meets <a> in <a^k>.
  i64 k() const { return k_; }
  /// Multiplicative order of r modulo m.
  i64 s_prime() const { return s_prime_; }

  /// r^-j mod m for the b-exponent j, used when moving a-powers left past b^j.
  i64 r_inverse_power(i64 j) const;

  std::string to_string() const;

  friend bool operator==(const MetacyclicParams&, const MetacyclicParams&) = default;

 private:
  MetacyclicParams(i64 m, i64 s, i64 t, i64 r);

  i64 m_, s_, t_, r_;
  i64 k_, s_prime_;
  // r^-j mod m for j < s, filled when s is small enough to tabulate.
  std::vector<i64> r_inv_pow_;
};

/// Normal form a^i b^j with 0 <= i < m, 0 <= j < s.
struct Element {
  i64 i = 0;
  i64 j = 0;

  auto operator<=>(const Element&) const = default;
};

std::string to_string(const Element& x);

inline Element identity() { return {0, 0}; }
inline Element gen_a(const MetacyclicParams& p) { return {p.m() == 1 ? 0 : 1, 0}; }
/// b itself; when s = 1 the relation b = a^t puts it inside <a>.
inline Element gen_b(const MetacyclicParams& p) {
  return p.s() == 1 ? Element{p.t(), 0} : Element{0, 1};
}

Element mul(const MetacyclicParams& p, const Element& x, const Element& y);
Element inverse(const MetacyclicParams& p, const Element& x);
Element power(const MetacyclicParams& p, const Element& x, i64 n);
/// h^-1 g h.
Element conjugate(const MetacyclicParams& p, const Element& g, const Element& h);
/// x^-1 y^-1 x y.
Element commutator(const MetacyclicParams& p, const Element& x, const Element& y);
i64 element_order(const MetacyclicParams& p, const Element& x);

/// Dense index i * s + j, in [0, m * s).
inline std::size_t index_of(const MetacyclicParams& p, const Element& x) {
  return static_cast<std::size_t>(x.i * p.s() + x.j);
}

/**
 * A finite subgroup stored as its sorted element set. The generator is set
 * only when the subgroup was built from a single element; equality ignores it.
 */
struct Subgroup {
  std::vector<Element> elements;
  std::optional<Element> generator;

  std::size_t order() const { return elements.size(); }
  bool contains(const Element& x) const;
  bool is_trivial() const { return elements.size() <= 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) { return a.elements <=> b.elements; }
};

void check_cap(const MetacyclicParams& p, std::size_t cap);

std::vector<Element> enumerate_elements(const MetacyclicParams& p, std::size_t cap = kDefaultElementCap);

Subgroup generate_subgroup(const MetacyclicParams& p, const std::vector<Element>& gens);
Subgroup cyclic_subgroup(const MetacyclicParams& p, const Element& g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// F^g = g^-1 F g.
Subgroup conjugate(const MetacyclicParams& p, const Subgroup& f, const Element& g);
bool is_normal(const MetacyclicParams& p, const Subgroup& f, std::size_t cap = kDefaultElementCap);

Subgroup bruteforce_center(const MetacyclicParams& p, std::size_t cap = kDefaultElementCap);
Subgroup bruteforce_derived(const MetacyclicParams& p, std::size_t cap = kDefaultElementCap);
/// Derived subgroup of an arbitrary subgroup, by brute force.
Subgroup derived_of(const MetacyclicParams& p, const Subgroup& h);
Subgroup normalizer(const MetacyclicParams& p, const Subgroup& f, std::size_t cap = kDefaultElementCap);
Subgroup centralizer(const MetacyclicParams& p, const Subgroup& f, std::size_t cap = kDefaultElementCap);
/// Subgroup generated by [x, y] for x in A, y in B.
Subgroup commutator_span(const MetacyclicParams& p, const Subgroup& a, const Subgroup& b);

/// Every valid parameter tuple with m * s <= max_order, sorted by (m*s, m, s, t, r).
std::vector<MetacyclicParams> valid_params_up_to(i64 max_order);

}  // namespace metasum
