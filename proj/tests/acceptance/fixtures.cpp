#include "acceptance/fixtures.hpp"

#include <random>

#include "test_support.hpp"

namespace dpart::acceptance {

GeneratorMatrix worked_matrix() { return {{0, 4}, {1, 2}, {1, 3}, {3, 1}}; }

const std::array<std::array<std::int64_t, 16>, 4>& published_table() {
  static const std::array<std::array<std::int64_t, 16>, 4> table{{
      {1, 0, 1, 1, 1, 1, 1, 2, 1, 2, 1, 1, 1, 1, 1, 0},
      {0, 0, 1, 2, 1, 2, 1, 1, 1, 1, 2, 1, 2, 1, 0, 0},
      {0, 1, 1, 1, 1, 1, 2, 1, 2, 1, 1, 1, 1, 1, 0, 1},
      {0, 1, 0, 1, 2, 1, 2, 1, 1, 2, 1, 2, 1, 0, 1, 0},
  }};
  return table;
}

std::vector<TableCase> random_table_cases(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> msize(1, 4);
  std::vector<TableCase> out;
  while (out.size() < n) {
    const GeneratorMatrix m = testing::random_matrix(rng, msize(rng), 0, 5);
    std::vector<std::size_t> usable;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i].beta >= 1) usable.push_back(i);
    }
    if (usable.empty()) continue;
    out.push_back({m, usable[std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng)]});
  }
  return out;
}

std::vector<GeneratorMatrix> classic_corpus(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> msize(2, 4);
  std::vector<GeneratorMatrix> out;
  while (out.size() < n) {
    const GeneratorMatrix m = testing::random_matrix(rng, msize(rng), 1, 6);
    bool ok = testing::pairwise_noncollinear(m);
    for (const Column& c : m) ok = ok && gcd(c.b, c.beta) == 1;
    if (ok) out.push_back(m);
  }
  return out;
}

const char* name(SpecialCase c) {
  switch (c) {
    case SpecialCase::gcd_column: return "(a) gcd>1 column";
    case SpecialCase::zero_b_column: return "(b) {0,beta>1} column";
    case SpecialCase::zero_beta_column: return "(c) {b>0,0} column";
    case SpecialCase::collinear_pair: return "(d) collinear columns";
    case SpecialCase::zeros_both_rows: return "(e) >=2 zeros per row";
  }
  return "?";
}

bool matches(SpecialCase c, const GeneratorMatrix& m) {
  std::size_t zeros_b = 0;
  std::size_t zeros_beta = 0;
  for (const Column& col : m) {
    zeros_b += col.b == 0;
    zeros_beta += col.beta == 0;
  }
  for (const Column& col : m) {
    if (c == SpecialCase::gcd_column && col.b > 0 && col.beta > 0 && gcd(col.b, col.beta) > 1) return true;
    if (c == SpecialCase::zero_b_column && col.b == 0 && col.beta > 1) return true;
    if (c == SpecialCase::zero_beta_column && col.b > 0 && col.beta == 0) return true;
  }
  if (c == SpecialCase::collinear_pair) return !testing::pairwise_noncollinear(m);
  if (c == SpecialCase::zeros_both_rows) return zeros_b >= 2 && zeros_beta >= 2;
  return false;
}

std::vector<GeneratorMatrix> special_corpus(SpecialCase c, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> msize(c == SpecialCase::zeros_both_rows ? 4 : 2, 5);
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<GeneratorMatrix> out;
  while (out.size() < n) {
    GeneratorMatrix m = testing::random_matrix(rng, msize(rng), 0, 6);
    // Sprinkle zeros so cases (b), (c) and (e) turn up often enough.
    for (Column& col : m) {
      if (coin(rng) == 0) {
        if (coin(rng) == 0 && col.beta != 0) col.b = 0;
        else if (col.b != 0) col.beta = 0;
      }
    }
    if (matches(c, m)) out.push_back(m);
  }
  return out;
}

}  // namespace dpart::acceptance
