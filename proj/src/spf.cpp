#include "dpart/spf.hpp"

#include <string>

namespace dpart {

namespace {

void check_generators(std::span<const std::int64_t> d) {
  for (std::int64_t g : d) {
    if (g < 1) {
      throw Error(ErrorKind::PreconditionFailed,
                  "scalar partition generator must be positive, got " + std::to_string(g));
    }
  }
}

// Word-sized DP; returns false as soon as any cell would overflow.
bool spf_word(std::int64_t s, std::span<const std::int64_t> d, std::uint64_t& out) {
  std::vector<std::uint64_t> table(static_cast<std::size_t>(s) + 1, 0);
  table[0] = 1;
  for (std::int64_t g : d) {
    if (g > s) continue;
    for (std::int64_t k = g; k <= s; ++k) {
      if (__builtin_add_overflow(table[k], table[k - g], &table[k])) return false;
    }
  }
  out = table[s];
  return true;
}

BigInt spf_big(std::int64_t s, std::span<const std::int64_t> d) {
  std::vector<BigInt> table(static_cast<std::size_t>(s) + 1, 0);
  table[0] = 1;
  for (std::int64_t g : d) {
    for (std::int64_t k = g; k <= s; ++k) table[k] += table[k - g];
  }
  return table[s];
}

}  // namespace

BigInt spf(std::int64_t s, std::span<const std::int64_t> d) {
  check_generators(d);
  if (s < 0) return 0;
  if (s == 0) return 1;
  if (d.empty()) return 0;
  if (s > kMaxSpfArgument) {
    throw Error(ErrorKind::Budget,
                "scalar partition argument " + std::to_string(s) + " exceeds table cap");
  }
  // A single generator needs no table.
  if (d.size() == 1) return s % d[0] == 0 ? 1 : 0;
  std::uint64_t word = 0;
  if (spf_word(s, d, word)) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return BigInt(static_cast<unsigned long>(word));
  }
  return spf_big(s, d);
}

NormalizedQuery normalize(const SignedSPFQuery& q) {
  NormalizedQuery n;
  n.argument = q.argument;
  n.generators.reserve(q.generators.size());
  for (std::int64_t g : q.generators) {
    if (g == 0) throw Error(ErrorKind::PreconditionFailed, "zero generator in signed query");
    if (g < 0) {
      n.sign = -n.sign;
      n.argument = checked_add(n.argument, g);
      n.generators.push_back(-g);
    } else {
      n.generators.push_back(g);
    }
  }
  return n;
}

BigInt spf_signed(const SignedSPFQuery& q) {
  const NormalizedQuery n = normalize(q);
  BigInt w = spf(n.argument, n.generators);
  if (n.sign < 0) w = -w;
  return w;
}

BigInt spf_scaled(std::int64_t s, std::int64_t g, std::span<const std::int64_t> d) {
  if (g < 1) throw Error(ErrorKind::PreconditionFailed, "scale must be positive");
  check_generators(d);
  if (s < 0 || s % g != 0) return 0;
  return spf(s / g, d);
}

BigInt spf_signed_scaled(const SignedSPFQuery& q, std::int64_t g) {
  if (g == 1) return spf_signed(q);
  if (g < 1) throw Error(ErrorKind::PreconditionFailed, "scale must be positive");
  // Generators of the scaled query are g*d; fold negatives as g*d.
  const NormalizedQuery n = normalize(q);
  std::int64_t argument = q.argument;
  for (std::int64_t d : q.generators) {
    if (d < 0) argument = checked_add(argument, checked_mul(g, d));
  }
  BigInt w = spf_scaled(argument, g, n.generators);
  if (n.sign < 0) w = -w;
  return w;
}

}  // namespace dpart
