// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "acceptance/fixtures.hpp"
#include "dpart/coeffs.hpp"
#include "dpart/decomposer.hpp"
#include "dpart/oracle.hpp"
#include "dpart/reduction.hpp"
#include "dpart/spf.hpp"

namespace dpart::acceptance {
namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int id, const char* title, double limit_s, const std::function<Verdict()>& body) {
  const auto t0 = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) {
    v.pass = false;
    v.detail += "; exceeded " + std::to_string(limit_s) + " s";
  }
  std::printf("[%s] criterion %2d: %s  (%s; %.2f s)\n", v.pass ? "PASS" : "FAIL", id, title,
              v.detail.c_str(), secs);
  std::fflush(stdout);
  return v.pass;
}

std::string describe_mismatch(const GeneratorMatrix& m, const Target& s, const BigInt& want,
                              const BigInt& got) {
  std::ostringstream os;
  os << "first mismatch " << to_string(m) << " at (" << s.r << "," << s.rho << "): expected "
     << want.get_str() << ", got " << got.get_str();
  return os.str();
}

Verdict criterion1() {
  const CoeffTable t = coeff_table_direct(worked_matrix(), 0);
  std::size_t wrong = 0;
  for (std::int64_t jy = 0; jy < 4; ++jy) {
    for (std::int64_t jx = 0; jx < 16; ++jx) wrong += t.at(jx, jy) != published_table()[jy][jx];
  }
  // Nothing may sit outside the published 4 x 16 window.
  for (const auto& [key, a] : t.entries) {
    wrong += key.first < 0 || key.first > 15 || key.second < 0 || key.second > 3;
  }
  bool rows = true;
  for (std::int64_t jy = 0; jy < 4; ++jy) rows = rows && t.row_sum(jy) == 16;
  const bool pass = wrong == 0 && rows && t.total_mass() == 64;
  return {pass, std::to_string(64 - std::min<std::size_t>(wrong, 64)) + "/64 entries match, rows " +
                    (rows ? "sum to 16" : "do not sum to 16") + ", total " + t.total_mass().get_str()};
}

Verdict criterion2() {
  std::vector<TableCase> cases{{worked_matrix(), 0}};
  for (const TableCase& c : random_table_cases(50, 2)) cases.push_back(c);
  const CountMethod inner = oracle_method();
  for (const TableCase& c : cases) {
    const CoeffTable direct = coeff_table_direct(c.matrix, c.column);
    const CoeffTable rec = coeff_table_appendixA(c.matrix, c.column, inner);
    if (const auto d = first_difference(direct, rec)) {
      return {false, to_string(c.matrix) + " column " + std::to_string(c.column + 1) +
                         " differs at (" + std::to_string(d->first) + "," + std::to_string(d->second) + ")"};
    }
  }
  return {true, std::to_string(cases.size()) + " tables equal entry by entry"};
}

Verdict criterion3() {
  struct Golden {
    std::size_t column;
    AffineForm shift;
    std::vector<std::int64_t> generators;
    int weight;
  };
  const std::vector<Golden> golden{
      {1, {2, -1, -5}, {1, 4, 5}, +1},
      {2, {3, -1, -4}, {1, 4, 8}, -1},
      {3, {1, -3, -25}, {5, 8, 12}, -1},
  };
  const GeneratorMatrix m = worked_matrix();
  std::size_t checks = 0;
  for (const Golden& g : golden) {
    const SymbolicTerm sym = classic_symbolic(m, g.column);
    std::vector<std::int64_t> gens = sym.generators;
    std::sort(gens.begin(), gens.end());
    if (sym.argument != g.shift || gens != g.generators || sym.sign != g.weight) {
      return {false, "column " + std::to_string(g.column + 1) + " gave " + sym.str()};
    }
    // The numeric classic_term must normalize to the same shift at every target.
    for (std::int64_t r = 0; r <= 30; ++r) {
      for (std::int64_t rho = 0; rho <= 30; ++rho) {
        const ReductionTerm t = classic_term(validate(Target{r, rho}, m), g.column, {true});
        NormalizedQuery n = normalize(t.query);
        std::sort(n.generators.begin(), n.generators.end());
        ++checks;
        if (n.sign != g.weight || n.argument != g.shift.at({r, rho}) || n.generators != g.generators) {
          return {false, "numeric term for column " + std::to_string(g.column + 1) + " disagrees at (" +
                             std::to_string(r) + "," + std::to_string(rho) + ")"};
        }
      }
    }
  }
  return {true, "3 golden terms, " + std::to_string(checks) + " normalized evaluations"};
}

Verdict criterion4() {
  const GeneratorMatrix m = worked_matrix();
  std::size_t n = 0;
  for (std::int64_t r = 0; r <= 30; ++r) {
    for (std::int64_t rho = 0; rho <= 30; ++rho) {
      const auto aug = validate(Target{r, rho}, m);
      const BigInt want = vpf_bruteforce(aug);
      const BigInt got = count(aug);
      ++n;
      if (got != want) return {false, describe_mismatch(m, {r, rho}, want, got)};
    }
  }
  return {true, std::to_string(n) + " targets exact"};
}

Verdict criterion5() {
  std::size_t n = 0;
  std::size_t skipped = 0;
  for (const GeneratorMatrix& m : classic_corpus(100, 5)) {
    std::int64_t beta_max = 0;
    for (const Column& c : m) beta_max = std::max(beta_max, c.beta);
    for (std::int64_t r = 0; r <= 40; ++r) {
      for (std::int64_t rho = 0; rho <= 40; ++rho) {
        if (beta_max >= rho + 2) {
          ++skipped;
          continue;
        }
        const auto aug = validate(Target{r, rho}, m);
        const BigInt want = vpf_bruteforce(aug);
        const BigInt got = evaluate(classic_reduction(aug, Row::second));
        ++n;
        if (got != want) return {false, describe_mismatch(m, {r, rho}, want, got)};
      }
    }
  }
  return {true, "100 matrices, " + std::to_string(n) + " admissible targets exact (" +
                    std::to_string(skipped) + " outside beta_i < rho+2)"};
}

Verdict criterion6() {
  const CountMethod dispatcher = dispatcher_method();
  std::ostringstream detail;
  std::uint64_t seed = 60;
  for (SpecialCase c : {SpecialCase::gcd_column, SpecialCase::zero_b_column, SpecialCase::zero_beta_column,
                        SpecialCase::collinear_pair, SpecialCase::zeros_both_rows}) {
    const auto corpus = special_corpus(c, 24, seed++);
    for (const GeneratorMatrix& m : corpus) {
      const GridReport rep = verify_grid(m, 20, 20, dispatcher, "auto");
      if (!rep.ok()) {
        const Mismatch& mm = rep.mismatches.front();
        return {false, std::string(name(c)) + ": " +
                           describe_mismatch(m, mm.target, mm.expected, mm.got.value_or(BigInt(-1))) +
                           (mm.error.empty() ? "" : " [" + mm.error + "]")};
      }
    }
    detail << name(c) << " x" << corpus.size() << "; ";
  }
  detail << "each on a 21x21 grid";
  return {true, detail.str()};
}

Verdict criterion7() {
  std::size_t n = 0;
  for (const GeneratorMatrix& m : classic_corpus(100, 5)) {
    for (std::int64_t r = 0; r <= 40; ++r) {
      for (std::int64_t rho = 0; rho <= 40; ++rho) {
        // Full grid: the rho condition is lifted for both eliminations.
        const auto aug = validate(Target{r, rho}, m);
        const BigInt first = evaluate(classic_reduction(aug, Row::first, {true}));
        const BigInt second = evaluate(classic_reduction(aug, Row::second, {true}));
        ++n;
        if (first != second) return {false, describe_mismatch(m, {r, rho}, first, second)};
      }
    }
  }
  return {true, std::to_string(n) + " targets, first-row = second-row"};
}

Verdict criterion8() {
  const GeneratorMatrix m = worked_matrix();
  const CoeffTable table = coeff_table_direct(m, 0);
  std::size_t n = 0;
  for (std::int64_t r = 0; r <= 30; ++r) {
    for (std::int64_t rho = 0; rho <= 30; ++rho) {
      const auto aug = validate(Target{r, rho}, m);
      const BigInt alt = alt_zero_term(aug);
      const BigInt bar = bar_term(aug, 0, table);
      ++n;
      if (alt != bar) return {false, describe_mismatch(m, {r, rho}, bar, alt)};
    }
  }
  return {true, std::to_string(n) + " targets"};
}

Verdict criterion9() {
  const CoeffTableStats s = coeff_table_stats();
  return {s.built > 0 && s.mass_violations == 0,
          std::to_string(s.built) + " tables built by this run, " + std::to_string(s.mass_violations) +
              " violations"};
}

Verdict criterion10() {
  std::size_t lists = 0;
  std::size_t evaluations = 0;
  std::vector<std::int64_t> d;
  std::string failure;
  // Every nondecreasing list of 0..4 parts from 1..9.
  std::function<bool(std::int64_t)> walk = [&](std::int64_t lowest) -> bool {
    ++lists;
    for (std::int64_t s = 0; s <= 50; ++s) {
      const BigInt want = spf_bruteforce(s, d);
      ++evaluations;
      if (spf(s, d) != want) {
        failure = "spf(" + std::to_string(s) + ", " + std::to_string(d.size()) + " parts) wrong";
        return false;
      }
      for (std::int64_t g = 1; g <= 5; ++g) {
        std::vector<std::int64_t> gd;
        for (auto x : d) gd.push_back(g * x);
        ++evaluations;
        if (spf(g * s, gd) != want) {
          failure = "scaling by " + std::to_string(g) + " broke at s = " + std::to_string(s);
          return false;
        }
      }
    }
    if (d.size() == 4) return true;
    for (std::int64_t x = lowest; x <= 9; ++x) {
      d.push_back(x);
      const bool ok = walk(x);
      d.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  if (!walk(1)) return {false, failure};
  return {true, std::to_string(lists) + " generator lists, " + std::to_string(evaluations) + " evaluations"};
}

}  // namespace
}  // namespace dpart::acceptance

int main() {
  using namespace dpart::acceptance;
  bool all = true;
  all &= run_criterion(1, "published coefficient table reproduced", 1.0, criterion1);
  all &= run_criterion(2, "recursive coefficients equal direct expansion", 60.0, criterion2);
  all &= run_criterion(3, "classic golden terms", 0, criterion3);
  all &= run_criterion(4, "dispatcher equals oracle on worked matrix, 0..30", 60.0, criterion4);
  all &= run_criterion(5, "classic reduction equals oracle on admissible corpus", 0, criterion5);
  all &= run_criterion(6, "dispatcher equals oracle on special-case corpus", 0, criterion6);
  all &= run_criterion(7, "first-row and second-row eliminations agree", 0, criterion7);
  all &= run_criterion(8, "zero-column identity equals generalized term", 0, criterion8);
  // Runs after every table-building criterion so the tally covers all of them.
  all &= run_criterion(9, "coefficient mass identity on every table", 0, criterion9);
  all &= run_criterion(10, "scalar partition engine equals enumeration", 10.0, criterion10);
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
