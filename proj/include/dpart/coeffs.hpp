#ifndef DPART_COEFFS_HPP
#define DPART_COEFFS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpart/core.hpp"
#include "dpart/oracle.hpp"

namespace dpart {

inline constexpr std::uint64_t kDefaultKVectorCap = 10'000'000;

/// Expansion coefficients a(j_x, j_y) for one column i of a two-row matrix:
/// the multiplicities of the monomials x^{j_x} y^{j_y} obtained by expanding
///   prod_{j != i} sum_{k=0}^{beta_i - 1} x^{k b_j} y0^{k beta_j},  y0 = x^{-b_i/beta_i}
/// and splitting each exponent into an integer x-part and a y0 residue.
struct CoeffTable {
  std::size_t column = 0;  // 0-based
  std::int64_t modulus = 1;
  std::vector<std::int64_t> b_prime;
  std::vector<std::int64_t> beta_prime;
  std::int64_t n_minus = 0;
  std::int64_t n_plus = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> entries;  // (j_x, j_y) -> a

  std::int64_t at(std::int64_t jx, std::int64_t jy) const;
  std::int64_t row_sum(std::int64_t jy) const;
  BigInt total_mass() const;
  /// modulus^(m-1), which total_mass() must equal.
  BigInt expected_mass() const;

  friend bool operator==(const CoeffTable&, const CoeffTable&) = default;
};

struct CoeffBounds {
  std::int64_t n_minus = 0;
  std::int64_t n_plus = 0;
  std::int64_t b_total = 0;  // (beta_i - 1) * sum(beta')

  /// Largest t with j_y + beta_i t <= b_total; -1 when none.
  std::int64_t t_max(std::int64_t jy, std::int64_t modulus) const;
};

/// Direct expansion: tallies every K in [0, beta_i - 1]^(m-1).
CoeffTable coeff_table_direct(const GeneratorMatrix& matrix, std::size_t i,
                              std::uint64_t cap = kDefaultKVectorCap);

CoeffBounds coeff_bounds(const GeneratorMatrix& matrix, std::size_t i,
                         std::uint64_t cap = kDefaultKVectorCap);

/// One inclusion-exclusion subproblem of the determinant recursion: a
/// two-row count over the remaining columns with a shifted target.
struct AppendixASubproblem {
  std::string label;  // binary index i_1..i_{m-1}, i_k selecting column m+1-k
  int sign = 1;
  Target target;      // may have negative entries, in which case it counts 0
};

/// The 2^(m-1) subproblems for fixed (j_x, j_y, t), in binary label order.
std::vector<AppendixASubproblem> appendixA_subproblems(const GeneratorMatrix& matrix,
                                                       std::size_t i, std::int64_t jx,
                                                       std::int64_t jy, std::int64_t t);

/// Coefficients through the determinant recursion: each a(j_x, j_y) is a
/// signed sum of two-row partition counts over the other columns, summed
/// over t. `inner` evaluates those counts; its failures surface as
/// Error(InnerSolverFailure).
CoeffTable coeff_table_appendixA(const GeneratorMatrix& matrix, std::size_t i,
                                 const CountMethod& inner);

/// First (j_x, j_y) where the tables differ, if any.
std::optional<std::pair<std::int64_t, std::int64_t>> first_difference(const CoeffTable& a,
                                                                      const CoeffTable& b);

/// Process-wide tally of tables returned by the two builders, and how many
/// of those broke the mass identity.
struct CoeffTableStats {
  std::uint64_t built = 0;
  std::uint64_t mass_violations = 0;
};

CoeffTableStats coeff_table_stats();

}  // namespace dpart

#endif  // DPART_COEFFS_HPP
