#ifndef DPART_SPF_HPP
#define DPART_SPF_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "dpart/core.hpp"

namespace dpart {

/// Largest argument the DP table will be allocated for. Beyond it spf
/// throws Error(Budget) rather than attempting a multi-gigabyte table.
inline constexpr std::int64_t kMaxSpfArgument = 20'000'000;

/// W(s, d): number of nonnegative solutions of sum x_i d_i = s. Zero for
/// s < 0, [s == 0] for empty d. All generators must be >= 1; repeated
/// generators count as distinct parts.
BigInt spf(std::int64_t s, std::span<const std::int64_t> d);

/// A signed query rewritten with positive generators:
/// value = sign * W(argument, generators).
struct NormalizedQuery {
  int sign = 1;
  std::int64_t argument = 0;
  std::vector<std::int64_t> generators;
};

/// Folds each negative generator -a into the argument using
/// 1/(1 - t^-a) = -t^a / (1 - t^a).
NormalizedQuery normalize(const SignedSPFQuery& q);

BigInt spf_signed(const SignedSPFQuery& q);

/// W(s/g, d) when g divides s, otherwise 0.
BigInt spf_scaled(std::int64_t s, std::int64_t g, std::span<const std::int64_t> d);

/// W(argument, g * generators) for a signed query; the scaled counterpart
/// of spf_signed.
BigInt spf_signed_scaled(const SignedSPFQuery& q, std::int64_t g);

}  // namespace dpart

#endif  // DPART_SPF_HPP
