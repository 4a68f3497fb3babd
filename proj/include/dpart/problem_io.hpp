#ifndef DPART_PROBLEM_IO_HPP
#define DPART_PROBLEM_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "dpart/core.hpp"
#include "dpart/decomposer.hpp"

namespace dpart {

/// Serialized problem: a 2 x m matrix, an optional target and strategy.
struct ProblemDocument {
  GeneratorMatrix matrix;
  std::optional<Target> target;
  std::optional<Strategy> strategy;

  friend bool operator==(const ProblemDocument&, const ProblemDocument&) = default;
};

/// Accepts either JSON
///   {"matrix": [[b...], [beta...]], "target": [r, rho],
///    "strategy": {"mode": "auto", "override_rho_condition": false}}
/// or plain text: two whitespace-separated rows, then an optional
/// "target: r rho" line. Lines starting with '#' are ignored.
/// Throws Error(Parse) naming the offending field. Matrix entries must be
/// nonnegative; the target is range-checked later by validate().
ProblemDocument parse_problem(std::string_view text);

std::string to_json(const ProblemDocument& doc);
std::string to_plain_text(const ProblemDocument& doc);

}  // namespace dpart

#endif  // DPART_PROBLEM_IO_HPP
