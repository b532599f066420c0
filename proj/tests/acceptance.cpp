// Acceptance suite: ten end-to-end checks, one pass/fail line each. Run with
// no arguments for the full suite or with a criterion number for one check.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "kpath/directed.hpp"
#include "kpath/gen.hpp"
#include "kpath/gf2.hpp"
#include "kpath/mmtest.hpp"
#include "kpath/oracle.hpp"
#include "kpath/phi.hpp"
#include "kpath/undirected.hpp"

using namespace kpath;
using gf::Elem;
using oracle::SparsePoly;
using oracle::SparsePolyBox;

namespace {

struct Failure {
  std::string text;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::vector<Elem> random_vec(std::size_t len, SplitMix64& rng) {
  std::vector<Elem> v(len);
  for (auto& e : v) e = gf::random_elem(rng);
  return v;
}

// ---------------------------------------------------------------- criterion 1

void field_axioms() {
  for (unsigned w : {8u, 64u}) {
    gf::set_field(gf::config_for_width(w));
    SplitMix64 rng(100 + w);
    for (int i = 0; i < 10000; ++i) {
      const Elem a = gf::random_elem(rng), b = gf::random_elem(rng), c = gf::random_elem(rng);
      expect(gf::add(gf::add(a, b), c) == gf::add(a, gf::add(b, c)), "add associativity");
      expect(gf::mul(gf::mul(a, b), c) == gf::mul(a, gf::mul(b, c)), "mul associativity");
      expect(gf::mul(a, gf::add(b, c)) == gf::add(gf::mul(a, b), gf::mul(a, c)), "distributivity");
      expect(gf::add(a, a) == gf::zero, "a + a = 0");
      const Elem ab = gf::add(a, b);
      expect(gf::mul(ab, ab) == gf::add(gf::mul(a, a), gf::mul(b, b)), "Frobenius");
    }
  }
  if (!gf::hw_mul_available()) {
    std::printf("  note: no carryless-multiply hardware; path-agreement check skipped\n");
    return;
  }
  for (unsigned w : {8u, 64u}) {
    gf::set_field(gf::config_for_width(w));
    SplitMix64 rng(200 + w);
    for (int i = 0; i < 100000; ++i) {
      const Elem a = gf::random_elem(rng), b = gf::random_elem(rng);
      expect(gf::mul_hw(a, b) == gf::mul_portable(a, b), "hw/portable mismatch");
    }
  }
}

// ---------------------------------------------------------------- criterion 2

void all_monomials(int vars, int degree, const std::function<void(const std::vector<int>&)>& sink) {
  std::vector<int> exps(static_cast<std::size_t>(vars), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == vars - 1) {
      exps[static_cast<std::size_t>(var)] = left;
      sink(exps);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      exps[static_cast<std::size_t>(var)] = e;
      rec(var + 1, left - e);
    }
  };
  rec(0, degree);
}

void operator_identities() {
  gf::set_field(gf::config_for_width(64));
  const int vars = 6;
  SplitMix64 rng(222);
  for (int d = 0; d <= 4; ++d) {
    all_monomials(vars, d, [&](const std::vector<int>& exps) {
      std::vector<int> support;
      bool multilinear = true;
      for (int i = 0; i < vars; ++i) {
        if (exps[static_cast<std::size_t>(i)] > 0) support.push_back(i);
        if (exps[static_cast<std::size_t>(i)] > 1) multilinear = false;
      }
      SparsePoly mono;
      mono.groups = {VarGroup{"x", vars}};
      mono.add_term(exps, gf::one);
      const SparsePolyBox bb(mono);
      for (int m = 1; m <= 4; ++m) {
        const bool killed = d < m || (d == m && !multilinear);
        const bool det_case = d == m && multilinear;
        if (!killed && !det_case) continue;
        PhiSpec spec{{GroupMult{"x", m}}, {}};
        for (int rep = 0; rep < 100; ++rep) {
          PhiBlocks blocks;
          blocks.per_group.emplace_back();
          for (int j = 0; j < m; ++j)
            blocks.per_group[0].push_back(random_vec(static_cast<std::size_t>(vars), rng));
          const Elem value = phi_eval(bb, spec, blocks);
          if (killed) {
            expect(value == gf::zero, "non-multilinear or under-degree monomial not annihilated");
          } else {
            gf::FieldMatrix z(m);
            for (int row = 0; row < m; ++row)
              for (int col = 0; col < m; ++col)
                z.at(row, col) =
                    blocks.per_group[0][static_cast<std::size_t>(row)]
                                       [static_cast<std::size_t>(support[static_cast<std::size_t>(col)])];
            expect(value == gf::determinant(z), "multilinear monomial != block determinant");
          }
        }
      }
    });
  }
}

// ---------------------------------------------------------------- criterion 3

void multilinear_test_contract() {
  gf::set_field(gf::config_for_width(64));

  // exact query accounting against a live counter
  {
    SparsePoly p;
    p.groups = {VarGroup{"x", 4}};
    p.add_term({2, 1, 0, 0}, gf::one);  // no multilinear degree-3 term: all trials run
    const SparsePolyBox bb(p);
    const CountingBox counted(bb);
    const Verdict v = has_multilinear(counted, "x", 3, TestParams{5, 9, gf::config_for_width(64)});
    expect(v.answer == Answer::kNo, "kill case answered YES");
    expect(counted.calls() == 5ull * 8ull, "query counter != trials * 2^k");
    expect(v.queries_used == counted.calls(), "verdict query accounting mismatch");
  }
  {
    SparsePoly p;
    p.groups = {VarGroup{"x", 4}};
    p.add_term({1, 1, 1, 0}, gf::one);
    const SparsePolyBox bb(p);
    const CountingBox counted(bb);
    const Verdict v = has_multilinear(counted, "x", 3, TestParams{5, 9, gf::config_for_width(64)});
    expect(v.answer == Answer::kYes, "multilinear cube missed");
    expect(v.queries_used == (*v.witness_trial + 1) * 8ull, "early-exit query accounting");
    expect(counted.calls() == v.queries_used, "counter and verdict disagree");
  }

  // decision equivalence against the explicit oracle
  SplitMix64 gen(3333);
  int yes = 0;
  for (int instance = 0; instance < 500; ++instance) {
    const int vars = 2 + static_cast<int>(gen.next() % 4);  // 2..5
    const int k = 1 + static_cast<int>(gen.next() % 4);     // 1..4
    SparsePoly p;
    p.groups = {VarGroup{"x", vars}};
    const int terms = 1 + static_cast<int>(gen.next() % 8);
    for (int t = 0; t < terms; ++t) {
      std::vector<int> exps(static_cast<std::size_t>(vars), 0);
      int left = k;
      for (int i = 0; i < vars && left > 0; ++i) {
        const int e = static_cast<int>(gen.next() % static_cast<std::uint64_t>(left + 1));
        exps[static_cast<std::size_t>(i)] = e;
        left -= e;
      }
      p.add_term(exps, gf::random_elem(gen));
    }
    const SparsePolyBox bb(p);
    const bool truth = oracle::poly_has_multilinear(p, "x", k);
    const Verdict v = has_multilinear(bb, "x", k, TestParams{3, gen.next(), gf::config_for_width(64)});
    expect((v.answer == Answer::kYes) == truth,
           truth ? "false NO on instance " + std::to_string(instance)
                 : "false YES on instance " + std::to_string(instance));
    if (truth) ++yes;
  }
  expect(yes >= 100, "generator produced too few YES instances to be meaningful");
}

// ---------------------------------------------------------------- criterion 4

void directed_equivalence() {
  int yes = 0, no = 0;
  for (int instance = 0; instance < 200; ++instance) {
    SplitMix64 gen(derive_seed(4444, static_cast<std::uint64_t>(instance)));
    const int n = 2 + static_cast<int>(gen.next() % 7);  // 2..8
    const int k = 1 + static_cast<int>(gen.next() % 6);  // 1..6
    const Digraph g = random_digraph(n, 0.3, gen.next());
    const bool truth = oracle::dfs_kpath_directed(g, k).has_value();
    const Verdict v = directed_kpath(g, k, TestParams{3, gen.next(), gf::config_for_width(64)});
    expect((v.answer == Answer::kYes) == truth, "disagreement on instance " + std::to_string(instance));
    if (truth) {
      ++yes;
    } else {
      ++no;
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Verdict again = directed_kpath(g, k, TestParams{3, seed, gf::config_for_width(64)});
        expect(again.answer == Answer::kNo, "one-sidedness violated: YES on a NO-truth instance");
      }
    }
  }
  expect(yes > 20 && no > 20, "instance mix is degenerate");
}

// ---------------------------------------------------------------- criterion 5

void undirected_equivalence() {
  const double p_choices[] = {0.2, 0.3, 0.45, 0.6};
  int yes = 0, no = 0;
  for (int instance = 0; instance < 100; ++instance) {
    SplitMix64 gen(derive_seed(5555, static_cast<std::uint64_t>(instance)));
    const int n = 2 + static_cast<int>(gen.next() % 7);  // 2..8
    const int k = 1 + static_cast<int>(gen.next() % 5);  // 1..5 edges
    const Ugraph g = random_ugraph(n, p_choices[gen.next() % 4], gen.next());
    const bool truth = oracle::dfs_kpath_undirected(g, k).has_value();

    const Verdict v =
        undirected_kpath(g, k, TestParams{3, gen.next(), gf::config_for_width(64)}, 10);
    expect((v.answer == Answer::kYes) == truth, "disagreement on instance " + std::to_string(instance));
    expect(v.failure_bound < 1e-3, "miss bound not below 1e-3");
    if (truth) {
      ++yes;
    } else {
      ++no;
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Verdict again =
            undirected_kpath(g, k, TestParams{3, seed, gf::config_for_width(64)}, 10);
        expect(again.answer == Answer::kNo, "one-sidedness violated: YES on a NO-truth instance");
      }
    }
  }
  expect(yes > 10 && no > 10, "instance mix is degenerate");
}

// ---------------------------------------------------------------- criterion 6

void partition_count_exactness() {
  for (int k = 1; k <= 10; ++k) {
    std::uint64_t row_sum = 0;
    for (int r = 0; r <= k + 1; ++r) {
      for (int s = 0; s <= k; ++s) {
        const Rational p = legit_prob(k, r, s);
        // 2^k * p must be an exact integer; den always divides 2^k
        expect((1ull << k) % p.den == 0, "denominator is not a power of two");
        const std::uint64_t expected = p.num * ((1ull << k) / p.den);
        const std::uint64_t counted = oracle::count_partitions(k, r, s);
        expect(counted == expected, "count mismatch at (" + std::to_string(k) + "," +
                                        std::to_string(r) + "," + std::to_string(s) + ")");
        row_sum += counted;
      }
    }
    expect(row_sum == (1ull << k), "partition counts do not sum to 2^k");
  }
}

// ---------------------------------------------------------------- criterion 7

void f_recurrence_equivalence() {
  gf::set_field(gf::config_for_width(64));
  for (int instance = 0; instance < 100; ++instance) {
    SplitMix64 gen(derive_seed(7777, static_cast<std::uint64_t>(instance)));
    const int n = 1 + static_cast<int>(gen.next() % 5);  // 1..5
    const double p = 0.3 + 0.6 * static_cast<double>(gen.next() % 1000) / 1000.0;
    const Ugraph g = random_ugraph(n, p, gen.next());
    for (int v0 = 0; v0 < n; ++v0) {
      for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
        Partition part;
        part.v0 = v0;
        part.in_v1.assign(static_cast<std::size_t>(n), false);
        part.in_v1[static_cast<std::size_t>(v0)] = true;
        int bit = 0;
        for (int v = 0; v < n; ++v) {
          if (v == v0) continue;
          part.in_v1[static_cast<std::size_t>(v)] = ((mask >> bit) & 1) != 0;
          ++bit;
        }
        for (int k = 1; k <= 4; ++k) {
          for (int r = 0; r <= k + 1; ++r) {
            for (int s = 0; s <= k; ++s) {
              const LegitParams params{k, r, s};
              const FEvaluator f(g, part, params);
              const SparsePoly expanded = oracle::expand_legit_paths(g, part, params);
              for (int pt = 0; pt < 20; ++pt) {
                Assignment a = f.zero_assignment();
                for (auto& group : a.groups)
                  for (auto& v : group) v = gf::random_elem(gen);
                expect(f.eval(a) == expanded.eval_at(a),
                       "dp != expansion on instance " + std::to_string(instance));
              }
            }
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------- criterion 8

void directed_scaling() {
  gf::set_field(gf::config_for_width(64));
  const Digraph g = random_digraph(50, 0.3, 987654321);
  const TestParams params{1, 31337, gf::config_for_width(64)};

  // warm-up so the first measurement is not paying cold caches
  (void)directed_kpath(g, 12, params);

  std::vector<double> seconds;
  for (int k = 14; k <= 20; ++k) {
    const auto start = std::chrono::steady_clock::now();
    (void)directed_kpath(g, k, params);
    seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  double ratio_sum = 0.0;
  std::string detail = "ratios:";
  for (std::size_t i = 1; i < seconds.size(); ++i) {
    const double ratio = seconds[i] / seconds[i - 1];
    ratio_sum += ratio;
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.2f", ratio);
    detail += buf;
  }
  const double mean = ratio_sum / static_cast<double>(seconds.size() - 1);
  char buf[64];
  std::snprintf(buf, sizeof buf, " mean %.3f", mean);
  detail += buf;
  std::printf("  %s\n", detail.c_str());
  expect(mean >= 1.7 && mean <= 2.4, "mean growth ratio outside [1.7, 2.4]: " + detail);
}

// ---------------------------------------------------------------- criterion 9

void rate_constant() {
  const double exponent = cost_exponent(1000000);
  const double target = std::log2(1.657);
  char buf[96];
  std::snprintf(buf, sizeof buf, "  cost_exponent(1e6) = %.6f, log2(1.657) = %.6f", exponent, target);
  std::printf("%s\n", buf);
  expect(std::abs(exponent - target) < 0.001, "asymptotic rate constant off by >= 0.001");
}

// --------------------------------------------------------------- criterion 10

void small_field_calibration() {
  // YES instances over GF(2^8): degree-2 polynomials in <= 4 variables that
  // always keep the multilinear term x1*x2. One trial each, so the measured
  // false-NO rate can be compared against the per-trial bound.
  const int runs = 10000;
  int false_no = 0;
  double bound = 0.0;
  for (int i = 0; i < runs; ++i) {
    SplitMix64 gen(derive_seed(101010, static_cast<std::uint64_t>(i)));
    gf::set_field(gf::config_for_width(8));
    SparsePoly p;
    p.groups = {VarGroup{"x", 4}};
    p.add_term({1, 1, 0, 0}, gf::one);
    const int extra = static_cast<int>(gen.next() % 4);
    for (int t = 0; t < extra; ++t) {
      // random degree <= 2 junk: squares, other multilinear pairs, singles
      std::vector<int> exps(4, 0);
      const int kind = static_cast<int>(gen.next() % 3);
      const int a = static_cast<int>(gen.next() % 4);
      const int b = static_cast<int>(gen.next() % 4);
      if (kind == 0) {
        exps[static_cast<std::size_t>(a)] = 2;
      } else if (kind == 1 && a != b) {
        exps[static_cast<std::size_t>(a)] = 1;
        exps[static_cast<std::size_t>(b)] = 1;
      } else {
        exps[static_cast<std::size_t>(a)] = 1;
      }
      if (exps == std::vector<int>{1, 1, 0, 0}) continue;  // keep the witness term alive
      p.add_term(exps, gf::random_elem(gen));
    }
    const SparsePolyBox bb(p);
    expect(oracle::poly_has_multilinear(p, "x", 2), "instance lost its YES witness");
    const Verdict v = has_multilinear(bb, "x", 2, TestParams{1, gen.next(), gf::config_for_width(8)});
    bound = v.failure_bound;  // identical for every instance: degree 2, w = 8, 1 trial
    if (v.answer == Answer::kNo) ++false_no;
  }
  const double rate = static_cast<double>(false_no) / runs;
  char buf[96];
  std::snprintf(buf, sizeof buf, "  false-NO rate %.5f vs bound %.5f (%d/%d)", rate, bound,
                false_no, runs);
  std::printf("%s\n", buf);
  gf::set_field(gf::config_for_width(64));
  expect(rate <= bound, "measured false-NO rate exceeds the Schwartz-Zippel bound");
}

// -----------------------------------------------------------------------------

struct Criterion {
  int id;
  const char* label;
  double limit_seconds;
  std::function<void()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "field axioms and multiplication-path agreement", 5, field_axioms},
      {2, "subset-sum operator: kill and determinant identities", 30, operator_identities},
      {3, "black-box multilinear test: query budget and oracle equivalence", 60, multilinear_test_contract},
      {4, "directed decision vs exhaustive search (200 digraphs)", 120, directed_equivalence},
      {5, "undirected decision vs exhaustive search (100 graphs)", 600, undirected_equivalence},
      {6, "partition-count formula exact for k <= 10", 10, partition_count_exactness},
      {7, "walk-sum dp vs brute-force expansion", 300, f_recurrence_equivalence},
      {8, "directed runtime doubles per unit of k", 300, directed_scaling},
      {9, "asymptotic cost exponent equals log2(1.657)", 1, rate_constant},
      {10, "false-NO rate within the bound at w = 8", 120, small_field_calibration},
  };
  return all;
}

bool run_criterion(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string why;
  try {
    c.run();
  } catch (const Failure& f) {
    ok = false;
    why = f.text;
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = elapsed < c.limit_seconds;
  const bool pass = ok && in_time;
  std::printf("%s  criterion %2d: %s (%.2f s, limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", c.id,
              c.label, elapsed, c.limit_seconds, ok ? "" : (" — " + why).c_str(),
              in_time ? "" : " — over the runtime limit");
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  int failures = 0;
  if (argc > 1) {
    const int want = std::atoi(argv[1]);
    bool found = false;
    for (const auto& c : criteria()) {
      if (c.id == want) {
        found = true;
        if (!run_criterion(c)) ++failures;
      }
    }
    if (!found) {
      std::fprintf(stderr, "no criterion %d (valid: 1..10)\n", want);
      return 2;
    }
    return failures == 0 ? 0 : 1;
  }
  for (const auto& c : criteria()) {
    if (!run_criterion(c)) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria().size()) - failures,
              criteria().size());
  return failures == 0 ? 0 : 1;
}
