#include "metasum/presentation.hpp"

#include <sstream>
#include <stdexcept>

#include "metasum/errors.hpp"

namespace metasum {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == invert(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word power_word(std::size_t g, i64 e) {
  const Letter l = e < 0 ? inv_letter(g) : gen_letter(g);
  return Word(static_cast<std::size_t>(e < 0 ? -e : e), l);
}

namespace {

void append(Word& w, const Word& tail) { w.insert(w.end(), tail.begin(), tail.end()); }

// Representative of e modulo n in (-n/2, n/2].
i64 balanced(i64 e, i64 n) {
  e = mod(e, n);
  return 2 * e > n ? e - n : e;
}

std::size_t parse_index(const std::string& token) {
  if (token.size() < 2) throw std::invalid_argument("bad generator token '" + token + "'");
  std::size_t pos = 0;
  const unsigned long v = std::stoul(token.substr(1), &pos);
  if (pos != token.size() - 1) throw std::invalid_argument("bad generator token '" + token + "'");
  return v;
}

}  // namespace

std::string FpPresentation::word_to_string(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    const std::size_t g = generator_of(w[i]);
    out += (w[i] & 1) ? 'X' : 'x';
    out += std::to_string(g);
  }
  return out;
}

std::string FpPresentation::dump() const {
  std::ostringstream os;
  for (std::size_t g = 0; g < generators.size(); ++g) os << "gen x" << g << " order " << generators[g].order << "\n";
  for (const auto& r : relators) os << word_to_string(r) << "\n";
  return os.str();
}

FpPresentation FpPresentation::parse(const std::string& text) {
  FpPresentation out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string token;
    if (!(ls >> token) || token.front() == '#') continue;
    if (token == "gen") {
      std::string name, kw;
      i64 order = 0;
      if (!(ls >> name >> kw >> order) || kw != "order" || name.front() != 'x')
        throw std::invalid_argument("bad generator line: " + line);
      if (parse_index(name) != out.generators.size())
        throw std::invalid_argument("generators must be declared in order: " + line);
      out.generators.push_back({name, order, identity()});
      continue;
    }
    Word w;
    do {
      const std::size_t g = parse_index(token);
      if (g >= out.generators.size()) throw std::invalid_argument("undeclared generator in: " + line);
      if (token.front() == 'x')
        w.push_back(gen_letter(g));
      else if (token.front() == 'X')
        w.push_back(inv_letter(g));
      else
        throw std::invalid_argument("bad relator token '" + token + "'");
    } while (ls >> token);
    out.relators.push_back(std::move(w));
  }
  return out;
}

i64 discrete_log(const MetacyclicParams& p, const Element& target, const Element& base) {
  Element x = identity();
  i64 e = 0;
  do {
    if (x == target) return e;
    x = mul(p, x, base);
    ++e;
  } while (x != identity());
  throw NotAPower(to_string(target) + " is not a power of " + to_string(base));
}

FpPresentation build_active_sum_presentation(const Family& family, RelatorMode mode) {
  const auto& p = family.params;
  const std::size_t n = family.size();
  FpPresentation pres;
  for (std::size_t g = 0; g < n; ++g) {
    const auto& f = family.subgroups[g];
    pres.generators.push_back({"x" + std::to_string(g), static_cast<i64>(f.order()), *f.generator});
    pres.relators.push_back(power_word(g, static_cast<i64>(f.order())));
  }

  // x_F1^-a x_F2^c x_F1^a = x_F3^e where F3 = F2^h and g^h = g_F3^e, h = g_F1^a, g = g_F2^c.
  auto emit = [&](std::size_t f1, i64 a, std::size_t f2, i64 c) {
    const Element h = power(p, pres.generators[f1].element, a);
    const Element g = power(p, pres.generators[f2].element, c);
    const Element gh = conjugate(p, g, h);
    const std::size_t f3 = family.find(conjugate(p, family.subgroups[f2], h));
    if (f3 == n) throw InvariantViolation("family is not closed under conjugation");
    i64 e;
    try {
      e = discrete_log(p, gh, pres.generators[f3].element);
    } catch (const NotAPower& err) {
      throw InvariantViolation(std::string("discrete log failure while building relators: ") + err.what());
    }
    Word w = power_word(f1, -a);
    append(w, power_word(f2, c));
    append(w, power_word(f1, a));
    append(w, power_word(f3, -balanced(e, pres.generators[f3].order)));
    w = free_reduce(w);
    if (!w.empty()) pres.relators.push_back(std::move(w));
  };

  for (std::size_t f1 = 0; f1 < n; ++f1) {
    for (std::size_t f2 = 0; f2 < n; ++f2) {
      if (mode == RelatorMode::GeneratorLevel) {
        emit(f1, 1, f2, 1);
        continue;
      }
      const i64 n1 = pres.generators[f1].order;
      const i64 n2 = pres.generators[f2].order;
      for (i64 a = 1; a < n1; ++a)
        for (i64 c = 1; c < n2; ++c) emit(f1, balanced(a, n1), f2, balanced(c, n2));
    }
  }
  return pres;
}

IntMatrix exponent_sum_matrix(const FpPresentation& pres) {
  IntMatrix out(pres.relators.size(), pres.generators.size());
  for (std::size_t i = 0; i < pres.relators.size(); ++i)
    for (Letter l : pres.relators[i]) out(i, generator_of(l)) += (l & 1) ? -1 : 1;
  return out;
}

AbelianStructure abelianized_order(const FpPresentation& pres) {
  return abelian_quotient(exponent_sum_matrix(pres));
}

}  // namespace metasum
