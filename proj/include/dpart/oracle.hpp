#ifndef DPART_ORACLE_HPP
#define DPART_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpart/core.hpp"

namespace dpart {

/// Node cap for brute-force enumeration; exceeding it throws Error(Budget).
struct OracleBudget {
  std::uint64_t max_nodes = 200'000'000;

  friend bool operator==(const OracleBudget&, const OracleBudget&) = default;
};

/// Counts x >= 0 with D x = s by depth-first enumeration. Each variable is
/// bounded by the residual target; the last two (noncollinear) variables
/// are solved directly by Cramer's rule.
BigInt vpf_bruteforce(const ValidatedAugmentedMatrix& aug, OracleBudget budget = {});

/// Counts x >= 0 with sum x_i d_i = s by nested enumeration.
BigInt spf_bruteforce(std::int64_t s, std::span<const std::int64_t> d);

/// A counting method under test, keyed on the validated problem.
using CountMethod = std::function<BigInt(const ValidatedAugmentedMatrix&)>;

struct Mismatch {
  Target target;
  BigInt expected;
  std::optional<BigInt> got;  // empty when the method threw
  std::string error;
};

struct GridReport {
  std::string method;
  std::vector<Mismatch> mismatches;
  std::size_t checked = 0;

  bool ok() const noexcept { return mismatches.empty(); }
};

/// Compares `method` against vpf_bruteforce on [0, r_max] x [0, rho_max].
/// Method failures are recorded per target; oracle failures propagate.
GridReport verify_grid(const GeneratorMatrix& matrix, std::int64_t r_max, std::int64_t rho_max,
                       const CountMethod& method, const std::string& method_name,
                       OracleBudget budget = {});

}  // namespace dpart

#endif  // DPART_ORACLE_HPP
