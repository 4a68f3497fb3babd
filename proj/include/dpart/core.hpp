#ifndef DPART_CORE_HPP
#define DPART_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dpart/error.hpp"

namespace dpart {

/// Exact integer used for every count. Counts never wrap.
using BigInt = mpz_class;

/// One generator column {b, beta} of a two-row matrix.
struct Column {
  std::int64_t b = 0;
  std::int64_t beta = 0;

  friend bool operator==(const Column&, const Column&) = default;
};

/// Right-hand side s = {r, rho}.
struct Target {
  std::int64_t r = 0;
  std::int64_t rho = 0;

  friend bool operator==(const Target&, const Target&) = default;
};

using GeneratorMatrix = std::vector<Column>;

struct AugmentedMatrix {
  Target target;
  GeneratorMatrix matrix;

  friend bool operator==(const AugmentedMatrix&, const AugmentedMatrix&) = default;
};

/// An augmented matrix that passed validate(). Only validate() creates one,
/// so every algorithm taking it can rely on nonnegative entries and
/// nonzero columns.
class ValidatedAugmentedMatrix {
 public:
  const AugmentedMatrix& get() const noexcept { return aug_; }
  const Target& target() const noexcept { return aug_.target; }
  const GeneratorMatrix& matrix() const noexcept { return aug_.matrix; }
  std::size_t size() const noexcept { return aug_.matrix.size(); }
  const Column& column(std::size_t i) const;

  operator const AugmentedMatrix&() const noexcept { return aug_; }

 private:
  explicit ValidatedAugmentedMatrix(AugmentedMatrix aug) : aug_(std::move(aug)) {}
  friend ValidatedAugmentedMatrix validate(const AugmentedMatrix& aug);

  AugmentedMatrix aug_;
};

ValidatedAugmentedMatrix validate(const AugmentedMatrix& aug);
ValidatedAugmentedMatrix validate(const Target& target, const GeneratorMatrix& matrix);

/// Checks the matrix part only (no target).
void validate_matrix(const GeneratorMatrix& matrix);

// Overflow-checked arithmetic; throws Error(Overflow).
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// det of the 2x2 matrix with columns (a, c): a.b*c.beta - c.b*a.beta.
std::int64_t det2(const Column& a, const Column& c);

inline Column as_column(const Target& t) { return {t.r, t.rho}; }

bool collinear(const Column& a, const Column& c);

/// Swaps the two rows: {b, beta} -> {beta, b}.
Column transpose(const Column& c);
Target transpose(const Target& t);
GeneratorMatrix transpose(const GeneratorMatrix& m);
AugmentedMatrix transpose(const AugmentedMatrix& aug);

/// Scalar partition evaluation request W(argument, generators) with signed,
/// nonzero generators.
struct SignedSPFQuery {
  std::int64_t argument = 0;
  std::vector<std::int64_t> generators;

  friend bool operator==(const SignedSPFQuery&, const SignedSPFQuery&) = default;
};

/// The elimination operator for column i: argument det2(s, c_i) and
/// generators det2(c_j, c_i) for j != i in column order. Throws
/// CollinearColumns when some generator vanishes.
SignedSPFQuery eliminate(const AugmentedMatrix& aug, std::size_t i);

/// Matrix with column i removed, order preserved.
GeneratorMatrix without_column(const GeneratorMatrix& m, std::size_t i);

std::string to_string(const Column& c);
std::string to_string(const GeneratorMatrix& m);

}  // namespace dpart

#endif  // DPART_CORE_HPP
