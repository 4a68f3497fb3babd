#include "dpart/core.hpp"

#include <numeric>
#include <sstream>

namespace dpart {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroColumn: return "ZeroColumn";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::CollinearColumns: return "CollinearColumns";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::BetaTooLarge: return "BetaTooLarge";
    case ErrorKind::BetaZero: return "BetaZero";
    case ErrorKind::EmptyEliminationSet: return "EmptyEliminationSet";
    case ErrorKind::TableMismatch: return "TableMismatch";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::Budget: return "Budget";
    case ErrorKind::InnerSolverFailure: return "InnerSolverFailure";
    case ErrorKind::InternalNegative: return "InternalNegative";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

const Column& ValidatedAugmentedMatrix::column(std::size_t i) const {
  if (i >= aug_.matrix.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "column index " + std::to_string(i) + " out of range for m = " +
                    std::to_string(aug_.matrix.size()));
  }
  return aug_.matrix[i];
}

void validate_matrix(const GeneratorMatrix& matrix) {
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const Column& c = matrix[i];
    if (c.b < 0 || c.beta < 0) {
      throw Error(ErrorKind::NegativeEntry,
                  "negative matrix entry in column " + std::to_string(i + 1));
    }
    if (c.b == 0 && c.beta == 0) {
      throw Error(ErrorKind::ZeroColumn, "zero column at position " + std::to_string(i + 1));
    }
  }
}

ValidatedAugmentedMatrix validate(const AugmentedMatrix& aug) {
  if (aug.target.r < 0 || aug.target.rho < 0) {
    throw Error(ErrorKind::NegativeEntry, "negative target entry");
  }
  validate_matrix(aug.matrix);
  return ValidatedAugmentedMatrix(aug);
}

ValidatedAugmentedMatrix validate(const Target& target, const GeneratorMatrix& matrix) {
  return validate(AugmentedMatrix{target, matrix});
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "integer overflow in addition");
  }
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "integer overflow in subtraction");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
  }
  return out;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t det2(const Column& a, const Column& c) {
  return checked_sub(checked_mul(a.b, c.beta), checked_mul(c.b, a.beta));
}

bool collinear(const Column& a, const Column& c) { return det2(a, c) == 0; }

Column transpose(const Column& c) { return {c.beta, c.b}; }
Target transpose(const Target& t) { return {t.rho, t.r}; }

GeneratorMatrix transpose(const GeneratorMatrix& m) {
  GeneratorMatrix out;
  out.reserve(m.size());
  for (const Column& c : m) out.push_back(transpose(c));
  return out;
}

AugmentedMatrix transpose(const AugmentedMatrix& aug) {
  return {transpose(aug.target), transpose(aug.matrix)};
}

SignedSPFQuery eliminate(const AugmentedMatrix& aug, std::size_t i) {
  const GeneratorMatrix& m = aug.matrix;
  if (i >= m.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "column index " + std::to_string(i) + " out of range");
  }
  SignedSPFQuery q;
  q.argument = det2(as_column(aug.target), m[i]);
  q.generators.reserve(m.size() - 1);
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (j == i) continue;
    const std::int64_t d = det2(m[j], m[i]);
    if (d == 0) {
      throw Error(ErrorKind::CollinearColumns, "columns " + std::to_string(j + 1) + " and " +
                                                   std::to_string(i + 1) + " are collinear");
    }
    q.generators.push_back(d);
  }
  return q;
}

GeneratorMatrix without_column(const GeneratorMatrix& m, std::size_t i) {
  GeneratorMatrix out;
  out.reserve(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (j != i) out.push_back(m[j]);
  }
  return out;
}

std::string to_string(const Column& c) {
  return "{" + std::to_string(c.b) + "," + std::to_string(c.beta) + "}";
}

std::string to_string(const GeneratorMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ",";
    os << to_string(m[i]);
  }
  os << "]";
  return os.str();
}

}  // namespace dpart
