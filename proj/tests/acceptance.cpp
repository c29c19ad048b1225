// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "metasum/coset_enum.hpp"
#include "metasum/errors.hpp"
#include "metasum/families.hpp"
#include "metasum/hall.hpp"
#include "metasum/lattice.hpp"
#include "metasum/presentation.hpp"
#include "metasum/structure.hpp"
#include "metasum/verdict.hpp"
#include "unimodular.hpp"

using namespace metasum;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] criterion %d: %s -- %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(),
              secs);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

// Records the first few counterexamples and a total.
struct Tally {
  std::size_t checked = 0;
  std::size_t bad = 0;
  std::vector<std::string> examples;

  void fail(const MetacyclicParams& p, const std::string& why) {
    ++bad;
    if (examples.size() < 3) examples.push_back(p.to_string() + " " + why);
  }

  Outcome outcome(const std::string& what) const {
    std::ostringstream os;
    os << checked << " " << what << ", " << bad << " failures";
    for (const auto& e : examples) os << "; " << e;
    return {bad == 0, os.str()};
  }
};

}  // namespace

int main() {
  const auto upto200 = valid_params_up_to(200);
  const auto upto100 = valid_params_up_to(100);

  criterion(1, "closed-form center, derived subgroup and |G' ∩ Z| match brute force (m*s <= 200)", [&] {
    Tally t;
    for (const auto& p : upto200) {
      ++t.checked;
      const Subgroup z = bruteforce_center(p);
      const Subgroup d = bruteforce_derived(p);
      if (center_closed_form(p) != z) t.fail(p, "center");
      if (derived_closed_form(p) != d) t.fail(p, "derived");
      if (static_cast<i64>(intersect(d, z).order()) != derived_cap_center_order(p)) t.fail(p, "cap");
    }
    return t.outcome("tuples");
  });

  criterion(2, "Ganea map surjective (m*s <= 200)", [&] {
    Tally t;
    for (const auto& p : upto200) {
      ++t.checked;
      const auto g = ganea_check(p);
      if (!g.surjective) t.fail(p, "h2=" + std::to_string(g.h2_order) + " cap=" + std::to_string(g.cap_order));
    }
    return t.outcome("tuples");
  });

  criterion(3, "theorem3 family independent iff (m, r-1) | t (m*s <= 200)", [&] {
    Tally t;
    std::size_t degenerate = 0, other = 0, nondegenerate_checked = 0;
    for (const auto& p : upto200) {
      ++t.checked;
      const bool ind = is_independent(build_theorem3_family(p)).independent;
      const bool div = divisibility_condition(p);
      // With s = 1 and (t, m) = 1 the subgroups <a> and <b> coincide.
      const bool collapsed = p.s() == 1 && gcd(p.t(), p.m()) == 1;
      if (!collapsed) ++nondegenerate_checked;
      if (ind != div) {
        t.fail(p, ind ? "independent without divisibility" : "divisible but not independent");
        (collapsed ? degenerate : other) += 1;
      }
    }
    auto o = t.outcome("tuples");
    o.detail += "; mismatches with <a> = <b>: " + std::to_string(degenerate) + ", others: " + std::to_string(other);
    std::printf("[INFO] criterion 3 restricted to tuples with <a> != <b>: %zu tuples, %zu mismatches\n",
                nondegenerate_checked, other);
    return o;
  });

  criterion(4, "theorem3 family regular, independent, |S| = m*s when (m, r-1) | t (m*s <= 100, 10*m*s cosets)", [&] {
    Tally t;
    for (const auto& p : upto100) {
      if (!divisibility_condition(p)) continue;
      ++t.checked;
      const Family f = build_theorem3_family(p);
      const Verdict v = verdict(f, transversal(f), 10 * p.order());
      if (!v.regular) t.fail(p, "not regular");
      if (!v.independent) t.fail(p, "not independent");
      if (v.active_sum_order != p.order())
        t.fail(p, v.active_sum_order ? "|S|=" + std::to_string(*v.active_sum_order) : "coset limit");
    }
    return t.outcome("divisible tuples");
  });

  criterion(5, "Hall family regular, independent, |S| = m*s (m*s <= 100, 10*m*s cosets)", [&] {
    Tally t;
    bool q12 = false;
    for (const auto& p : upto100) {
      ++t.checked;
      const HallFamily hf = build_hall_family(p, hall_decomposition(p));
      const Verdict v = verdict(hf.family, hf.transversal, 10 * p.order());
      if (!v.regular) t.fail(p, "not regular");
      if (!v.independent) t.fail(p, "not independent");
      if (v.active_sum_order != p.order())
        t.fail(p, v.active_sum_order ? "|S|=" + std::to_string(*v.active_sum_order) : "coset limit");
      if (p == MetacyclicParams::validate(6, 2, 3, 5)) q12 = v.active_sum_order == 12;
    }
    auto o = t.outcome("tuples");
    o.detail += q12 ? "; Q12 -> 12" : "; Q12 check failed";
    o.pass = o.pass && q12;
    return o;
  });

  criterion(6, "negative control (8,2,2,5) with the theorem3 family", [&] {
    const auto p = MetacyclicParams::validate(8, 2, 2, 5);
    const Family f = build_theorem3_family(p);
    const Verdict v = verdict(f, transversal(f), 10 * p.order());
    std::ostringstream os;
    os << "regular=" << v.regular << " independent=" << v.independent << " |S^ab|=" << v.abelianized_order_S
       << " |G^ab|=" << v.abelianized_order_G << " |S|="
       << (v.active_sum_order ? std::to_string(*v.active_sum_order) : "limit");
    const bool ok = v.regular && !v.independent && v.abelianized_order_S == 16 && v.abelianized_order_G == 8 &&
                    v.active_sum_order && *v.active_sum_order != 16;
    return Outcome{ok, os.str()};
  });

  criterion(7, "conjugation witness b^(a^z) = b^(s+1) when (m, r-1) | t (m*s <= 200)", [&] {
    Tally t;
    for (const auto& p : upto200) {
      if (!divisibility_condition(p)) continue;
      ++t.checked;
      const auto w = regularity_witness(p);
      const Element az{w.z, 0};
      if (!w.verified || conjugate(p, gen_b(p), az) != power(p, gen_b(p), p.s() + 1)) t.fail(p, "z=" + std::to_string(w.z));
    }
    return t.outcome("divisible tuples");
  });

  criterion(8, "coset enumerator calibration (cyclic n <= 64, S3, Q8, Q12)", [&] {
    std::ostringstream os;
    bool ok = true;
    for (i64 n = 1; n <= 64; ++n) {
      FpPresentation pres;
      pres.generators.push_back({"x0", n, identity()});
      pres.relators.push_back(power_word(0, n));
      const i64 got = todd_coxeter(pres, 10 * n);
      if (got != n) {
        ok = false;
        os << "cyclic " << n << " -> " << got << "; ";
      }
    }
    const auto s3 = MetacyclicParams::validate(3, 2, 0, 2);
    const auto q8 = MetacyclicParams::validate(4, 2, 2, 3);
    const auto q12 = MetacyclicParams::validate(6, 2, 3, 5);
    const i64 o_s3 = todd_coxeter(build_active_sum_presentation(build_theorem3_family(s3)), 60);
    const i64 o_q8 = todd_coxeter(build_active_sum_presentation(build_theorem3_family(q8)), 80);
    const i64 o_q12 =
        todd_coxeter(build_active_sum_presentation(build_hall_family(q12, hall_decomposition(q12)).family), 120);
    ok = ok && o_s3 == 6 && o_q8 == 8 && o_q12 == 12;
    os << "cyclic 1..64 checked; S3 -> " << o_s3 << ", Q8 -> " << o_q8 << ", Q12 -> " << o_q12;
    return Outcome{ok, os.str()};
  });

  criterion(9, "Smith normal form certificates on 1000 random matrices", [&] {
    std::mt19937 rng(1234567);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::size_t bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t rows = dim(rng), cols = dim(rng);
      IntMatrix a(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = entry(rng);
      const SmithForm f = smith_normal_form(a);
      bool ok = f.U * a * f.V == f.D && test_support::is_unimodular(f.U) && test_support::is_unimodular(f.V);
      for (std::size_t i = 0; i < rows && ok; ++i)
        for (std::size_t j = 0; j < cols && ok; ++j)
          if (i != j && f.D(i, j) != 0) ok = false;
      const auto d = f.diagonal();
      for (std::size_t i = 0; i + 1 < d.size() && ok; ++i) {
        if (d[i] < 0) ok = false;
        else if (d[i] == 0) ok = d[i + 1] == 0;
        else ok = d[i + 1] % d[i] == 0;
      }
      if (!ok) ++bad;
    }
    return Outcome{bad == 0, "1000 matrices, " + std::to_string(bad) + " failures"};
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
