#ifndef DPART_DECOMPOSER_HPP
#define DPART_DECOMPOSER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dpart/coeffs.hpp"
#include "dpart/core.hpp"
#include "dpart/oracle.hpp"
#include "dpart/reduction.hpp"

namespace dpart {

/// Columns that are positive multiples of one primitive direction.
struct CollinearClass {
  Column direction;                                          // gcd(b, beta) = 1
  std::vector<std::pair<std::size_t, std::int64_t>> members;  // (column index, multiplier)
};

enum class Mode { automatic, classic, general, oracle };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);

struct Strategy {
  Mode mode = Mode::automatic;
  bool classic_override_rho_condition = false;
  std::uint64_t kvector_cap = kDefaultKVectorCap;
  OracleBudget oracle{};

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

std::vector<CollinearClass> collinear_classes(const GeneratorMatrix& matrix);

/// sum_{l=0}^{l_max} W(l, u) * W(s - l c, D_rest), where D_rest is the matrix
/// without the class members. A zero component of c imposes no bound on l.
BigInt convolution_count(const ValidatedAugmentedMatrix& aug, const CollinearClass& cls,
                         const Strategy& strategy = {});

/// Row whose elimination the dispatcher uses: the second unless it holds at
/// least two zeros while the first holds at most one.
Row choose_elimination_row(const GeneratorMatrix& matrix);

/// Per-column reduction of a pairwise-noncollinear matrix (m >= 2) at its
/// target: classic single terms where admissible, expanded generalized
/// terms otherwise. Columns with a zero in the eliminated row are skipped.
Reduction plan_reduction(const ValidatedAugmentedMatrix& aug, const Strategy& strategy = {});

struct CountResult {
  BigInt count;
  std::vector<Method> methods;  // distinct, in first-use order
  std::size_t terms_evaluated = 0;

  std::string method_summary() const;
};

CountResult count_detailed(const ValidatedAugmentedMatrix& aug, const Strategy& strategy = {});

inline BigInt count(const ValidatedAugmentedMatrix& aug, const Strategy& strategy = {}) {
  return count_detailed(aug, strategy).count;
}

/// The line beta_i r - b_i rho = 0, stored as its coefficients (beta_i, -b_i).
struct ChamberLine {
  std::size_t column = 0;
  std::int64_t r_coef = 0;
  std::int64_t rho_coef = 0;

  friend bool operator==(const ChamberLine&, const ChamberLine&) = default;
};

std::vector<ChamberLine> chambers(const GeneratorMatrix& matrix);

/// Count methods for grid verification and as inner solvers of
/// coeff_table_appendixA.
CountMethod dispatcher_method(Strategy strategy = {});
CountMethod oracle_method(OracleBudget budget = {});
/// Classic row elimination only (with the rho condition overridden), plus
/// the m <= 1 base cases.
CountMethod classic_method(ClassicOptions options = {true});

}  // namespace dpart

#endif  // DPART_DECOMPOSER_HPP
