#include "metasum/coset_enum.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "metasum/errors.hpp"

namespace metasum {

namespace {

using Coset = std::int32_t;
constexpr Coset kUndefined = -1;

// A cyclic conjugate of a relator (or of its inverse), addressed without copying.
struct Rotation {
  std::uint32_t word;
  std::uint32_t offset;
};

class Enumerator {
 public:
  Enumerator(const FpPresentation& pres, const EnumerationOptions& options)
      : columns_(2 * pres.generator_count()), options_(options) {
    for (const auto& r : pres.relators) {
      if (r.empty()) continue;
      relators_.push_back(r);
    }
    if (needs_rotations()) build_rotations();
    new_coset();
  }

  EnumerationResult run() {
    if (options_.strategy == Strategy::Felsch)
      felsch();
    else
      hlt();
    return finish();
  }

 private:
  bool needs_rotations() const {
    return options_.strategy == Strategy::Felsch || options_.process_deductions;
  }

  void build_rotations() {
    // Words: relators followed by their inverses.
    words_ = relators_;
    for (const auto& r : relators_) {
      Word inv(r.rbegin(), r.rend());
      for (auto& l : inv) l = invert(l);
      words_.push_back(std::move(inv));
    }
    by_first_.assign(columns_, {});
    for (std::uint32_t w = 0; w < words_.size(); ++w) {
      const Word& word = words_[w];
      const bool uniform = std::all_of(word.begin(), word.end(), [&](Letter l) { return l == word.front(); });
      const std::size_t n = uniform ? 1 : word.size();
      for (std::uint32_t k = 0; k < n; ++k) by_first_[static_cast<std::size_t>(word[k])].push_back({w, k});
    }
  }

  Coset& entry(Coset c, std::size_t col) { return table_[static_cast<std::size_t>(c) * columns_ + col]; }

  bool live(Coset c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  Coset rep(Coset c) {
    Coset root = c;
    while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(c)] != root) {
      Coset next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = root;
      c = next;
    }
    return root;
  }

  bool full() const { return live_count_ >= options_.max_cosets; }

  Coset new_coset() {
    const Coset c = static_cast<Coset>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + columns_, kUndefined);
    ++live_count_;
    ++total_defined_;
    max_live_ = std::max(max_live_, live_count_);
    return c;
  }

  void define(Coset c, std::size_t col) {
    const Coset d = new_coset();
    entry(c, col) = d;
    entry(d, col ^ 1) = c;
    deductions_.push_back({c, col});
  }

  // MERGE: the larger coset is forwarded to the smaller and queued.
  void merge(Coset k, Coset l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    const Coset lo = std::min(k, l), hi = std::max(k, l);
    parent_[static_cast<std::size_t>(hi)] = lo;
    --live_count_;
    queue_.push_back(hi);
  }

  void coincidence(Coset a, Coset b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const Coset g = queue_[i];
      for (std::size_t x = 0; x < columns_; ++x) {
        const Coset d = entry(g, x);
        if (d == kUndefined) continue;
        entry(d, x ^ 1) = kUndefined;
        const Coset mu = rep(g), nu = rep(d);
        if (entry(mu, x) != kUndefined) {
          merge(nu, entry(mu, x));
        } else if (entry(nu, x ^ 1) != kUndefined) {
          merge(mu, entry(nu, x ^ 1));
        } else {
          entry(mu, x) = nu;
          entry(nu, x ^ 1) = mu;
          deductions_.push_back({mu, x});
        }
      }
    }
  }

  template <typename LetterAt>
  void scan(Coset a, std::size_t len, LetterAt at) {
    Coset f = a;
    std::size_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(len) - 1;
    while (static_cast<std::ptrdiff_t>(i) <= j && entry(f, at(i)) != kUndefined) f = entry(f, at(i++));
    if (static_cast<std::ptrdiff_t>(i) > j) {
      if (f != a) coincidence(f, a);
      return;
    }
    Coset b = a;
    while (j >= static_cast<std::ptrdiff_t>(i) && entry(b, at(static_cast<std::size_t>(j)) ^ 1) != kUndefined)
      b = entry(b, at(static_cast<std::size_t>(j--)) ^ 1);
    if (j < static_cast<std::ptrdiff_t>(i)) {
      coincidence(f, b);
    } else if (j == static_cast<std::ptrdiff_t>(i)) {
      entry(f, at(i)) = b;
      entry(b, at(i) ^ 1) = f;
      deductions_.push_back({f, at(i)});
    }
  }

  enum class FillResult { Done, Restart };

  FillResult scan_and_fill(Coset a, const Word& w) {
    const std::size_t len = w.size();
    Coset f = a, b = a;
    std::size_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(len) - 1;
    auto col = [&](std::size_t k) { return static_cast<std::size_t>(w[k]); };
    for (;;) {
      while (static_cast<std::ptrdiff_t>(i) <= j && entry(f, col(i)) != kUndefined) f = entry(f, col(i++));
      if (static_cast<std::ptrdiff_t>(i) > j) {
        if (f != b) coincidence(f, b);
        return FillResult::Done;
      }
      while (j >= static_cast<std::ptrdiff_t>(i) && entry(b, col(static_cast<std::size_t>(j)) ^ 1) != kUndefined)
        b = entry(b, col(static_cast<std::size_t>(j--)) ^ 1);
      if (j < static_cast<std::ptrdiff_t>(i)) {
        coincidence(f, b);
        return FillResult::Done;
      }
      if (j == static_cast<std::ptrdiff_t>(i)) {
        entry(f, col(i)) = b;
        entry(b, col(i) ^ 1) = f;
        deductions_.push_back({f, col(i)});
        return FillResult::Done;
      }
      if (full()) {
        lookahead();
        return FillResult::Restart;
      }
      define(f, col(i));
    }
  }

  void scan_rotation(Coset a, const Rotation& rot) {
    const Word& w = words_[rot.word];
    const std::size_t len = w.size();
    scan(a, len, [&](std::size_t k) { return static_cast<std::size_t>(w[(rot.offset + k) % len]); });
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!live(c)) continue;
      for (const auto& rot : by_first_[x]) {
        scan_rotation(c, rot);
        if (!live(c)) break;
      }
      const Coset d = entry(c, x);
      if (!live(c) || d == kUndefined || !live(d)) continue;
      for (const auto& rot : by_first_[x ^ 1]) {
        scan_rotation(d, rot);
        if (!live(d)) break;
      }
    }
  }

  // Scan every relator at every live coset without defining anything.
  void lookahead() {
    ++lookaheads_;
    const i64 before = live_count_;
    for (Coset c = 0; c < static_cast<Coset>(parent_.size()); ++c) {
      for (const auto& r : relators_) {
        if (!live(c)) break;
        scan(c, r.size(), [&](std::size_t k) { return static_cast<std::size_t>(r[k]); });
      }
      if (needs_rotations()) process_deductions();
      deductions_.clear();
    }
    if (full() && live_count_ >= before) {
      throw CosetLimitExceeded("coset enumeration exceeded " + std::to_string(options_.max_cosets) +
                               " live cosets");
    }
  }

  // Renumber live cosets densely, preserving order. Returns the new number of `keep`.
  Coset compact(Coset keep) {
    std::vector<Coset> index(parent_.size(), kUndefined);
    Coset next = 0;
    Coset kept = 0;
    for (Coset c = 0; c < static_cast<Coset>(parent_.size()); ++c) {
      if (c == keep) kept = next;
      if (live(c)) index[static_cast<std::size_t>(c)] = next++;
    }
    if (keep >= static_cast<Coset>(parent_.size())) kept = next;
    std::vector<Coset> table(static_cast<std::size_t>(next) * columns_, kUndefined);
    for (Coset c = 0; c < static_cast<Coset>(parent_.size()); ++c) {
      if (!live(c)) continue;
      for (std::size_t x = 0; x < columns_; ++x) {
        const Coset d = entry(c, x);
        if (d != kUndefined)
          table[static_cast<std::size_t>(index[static_cast<std::size_t>(c)]) * columns_ + x] =
              index[static_cast<std::size_t>(rep(d))];
      }
    }
    table_ = std::move(table);
    parent_.resize(static_cast<std::size_t>(next));
    for (Coset c = 0; c < next; ++c) parent_[static_cast<std::size_t>(c)] = c;
    deductions_.clear();
    return kept;
  }

  void maybe_compact(Coset& c) {
    const i64 dead = static_cast<i64>(parent_.size()) - live_count_;
    if (dead > 1024 && dead > live_count_) c = compact(c);
  }

  void hlt() {
    for (Coset c = 0; c < static_cast<Coset>(parent_.size()); ++c) {
      maybe_compact(c);
      if (c >= static_cast<Coset>(parent_.size())) break;
      if (!live(c)) continue;
      for (std::size_t r = 0; r < relators_.size() && live(c);) {
        if (scan_and_fill(c, relators_[r]) == FillResult::Restart) continue;
        if (options_.process_deductions) process_deductions();
        deductions_.clear();
        ++r;
      }
      std::size_t x = 0;
      while (x < columns_ && live(c)) {
        if (entry(c, x) != kUndefined) {
          ++x;
          continue;
        }
        if (full()) {
          lookahead();
          continue;
        }
        define(c, x);
        if (options_.process_deductions) process_deductions();
        deductions_.clear();
        ++x;
      }
    }
  }

  void felsch() {
    if (columns_ == 0) return;
    Coset c = 0;
    std::size_t x = 0;
    bool swept = false;
    for (;;) {
      // First undefined entry in coset order.
      while (c < static_cast<Coset>(parent_.size()) && (!live(c) || entry(c, x) != kUndefined)) {
        if (!live(c) || ++x == columns_) {
          ++c;
          x = 0;
        }
      }
      if (c >= static_cast<Coset>(parent_.size())) {
        // Coincidences can reopen gaps behind the cursor; confirm with one sweep from the start.
        if (swept) break;
        swept = true;
        c = 0;
        x = 0;
        continue;
      }
      swept = false;
      if (full())
        throw CosetLimitExceeded("coset enumeration exceeded " + std::to_string(options_.max_cosets) +
                                 " live cosets");
      define(c, x);
      process_deductions();
      const i64 dead = static_cast<i64>(parent_.size()) - live_count_;
      if (dead > 1024 && dead > live_count_) {
        c = compact(c);
        x = 0;
      }
    }
  }

  EnumerationResult finish() {
    compact(0);
    for (Coset e : table_)
      if (e == kUndefined) throw InvariantViolation("coset enumeration finished with an incomplete table");
    EnumerationResult out;
    out.index = live_count_;
    out.table.columns = columns_;
    out.table.entries = table_;
    out.total_defined = total_defined_;
    out.max_live = max_live_;
    out.lookaheads = lookaheads_;
    return out;
  }

  std::size_t columns_;
  EnumerationOptions options_;
  std::vector<Word> relators_;
  std::vector<Word> words_;
  std::vector<std::vector<Rotation>> by_first_;

  std::vector<Coset> table_;
  std::vector<Coset> parent_;
  std::vector<Coset> queue_;
  std::vector<std::pair<Coset, std::size_t>> deductions_;
  i64 live_count_ = 0;
  i64 total_defined_ = 0;
  i64 max_live_ = 0;
  i64 lookaheads_ = 0;
};

}  // namespace

EnumerationResult enumerate_cosets(const FpPresentation& pres, const EnumerationOptions& options) {
  if (options.max_cosets < 1) throw CosetLimitExceeded("max_cosets must be positive");
  Enumerator e(pres, options);
  return e.run();
}

i64 todd_coxeter(const FpPresentation& pres, i64 max_cosets, Strategy strategy) {
  EnumerationOptions options;
  options.max_cosets = max_cosets;
  options.strategy = strategy;
  return enumerate_cosets(pres, options).index;
}

bool table_is_valid(const CosetTable& table, const FpPresentation& pres) {
  const std::size_t rows = table.rows();
  if (table.columns != 2 * pres.generator_count()) return false;
  for (std::size_t c = 0; c < rows; ++c)
    for (std::size_t x = 0; x < table.columns; ++x) {
      const auto d = table(c, x);
      if (d < 0 || static_cast<std::size_t>(d) >= rows) return false;
      if (table(static_cast<std::size_t>(d), x ^ 1) != static_cast<std::int32_t>(c)) return false;
    }
  for (const auto& r : pres.relators)
    for (std::size_t c = 0; c < rows; ++c) {
      std::size_t f = c;
      for (Letter l : r) f = static_cast<std::size_t>(table(f, static_cast<std::size_t>(l)));
      if (f != c) return false;
    }
  return true;
}

}  // namespace metasum
