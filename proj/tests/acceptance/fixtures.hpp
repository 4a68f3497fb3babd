#ifndef DPART_ACCEPTANCE_FIXTURES_HPP
#define DPART_ACCEPTANCE_FIXTURES_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "dpart/core.hpp"

namespace dpart::acceptance {

/// The four-column matrix with columns {0,4}, {1,2}, {1,3}, {3,1}.
GeneratorMatrix worked_matrix();

/// Published coefficients of column {0,4}: rows j_y = 0..3, j_x = 0..15.
const std::array<std::array<std::int64_t, 16>, 4>& published_table();

/// Pairs (matrix, 0-based column with beta >= 1): m <= 4, entries <= 5.
struct TableCase {
  GeneratorMatrix matrix;
  std::size_t column;
};
std::vector<TableCase> random_table_cases(std::size_t n, std::uint64_t seed);

/// Positive entries <= 6, coprime columns, pairwise noncollinear, 2 <= m <= 4.
std::vector<GeneratorMatrix> classic_corpus(std::size_t n, std::uint64_t seed);

enum class SpecialCase { gcd_column, zero_b_column, zero_beta_column, collinear_pair, zeros_both_rows };
const char* name(SpecialCase c);
bool matches(SpecialCase c, const GeneratorMatrix& m);
std::vector<GeneratorMatrix> special_corpus(SpecialCase c, std::size_t n, std::uint64_t seed);

}  // namespace dpart::acceptance

#endif  // DPART_ACCEPTANCE_FIXTURES_HPP
