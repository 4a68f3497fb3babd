#ifndef DPART_REDUCTION_HPP
#define DPART_REDUCTION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dpart/coeffs.hpp"
#include "dpart/core.hpp"
#include "dpart/spf.hpp"

namespace dpart {

enum class Method { classic, bar, zero_column, convolution };
enum class Row { first, second };

std::string_view to_string(Method m);
std::string_view to_string(Row r);

/// weight * W(query.argument, scale * query.generators), evaluated with the
/// signed-generator normalization. A term with scale g > 1 is nonzero only
/// when g divides the normalized argument.
struct ReductionTerm {
  BigInt weight = 1;
  SignedSPFQuery query;
  std::int64_t scale = 1;
  std::size_t source_column = 0;  // 0-based index into the original matrix
  Method method = Method::classic;
};

struct Reduction {
  std::vector<ReductionTerm> terms;
  Row eliminated_row = Row::second;
};

struct ClassicOptions {
  /// Skip the beta_i < rho + 2 admissibility check.
  bool override_rho_condition = false;
};

/// Target-independent admissibility of the single-term reduction for
/// column i: m >= 2, beta_i >= 1, gcd(b_i, beta_i) = 1, and c_i not
/// parallel to any other column.
void check_classic_structure(const GeneratorMatrix& matrix, std::size_t i);

/// W(r beta_i - b_i rho, {b_j beta_i - b_i beta_j}_{j != i}).
ReductionTerm classic_term(const ValidatedAugmentedMatrix& aug, std::size_t i,
                           ClassicOptions options = {});

/// One classic term per contributing column. Eliminating the first row is
/// the same computation on the row-swapped matrix; columns with a zero in
/// the eliminated row contribute nothing and are skipped.
Reduction classic_reduction(const ValidatedAugmentedMatrix& aug, Row eliminate_row,
                            ClassicOptions options = {});

/// coef_r * r + coef_rho * rho + constant.
struct AffineForm {
  std::int64_t r = 0;
  std::int64_t rho = 0;
  std::int64_t constant = 0;

  std::int64_t at(const Target& s) const;
  std::string str() const;

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// Classic term in closed form, already normalized to positive generators.
struct SymbolicTerm {
  std::size_t source_column = 0;
  int sign = 1;
  AffineForm argument;
  std::vector<std::int64_t> generators;

  std::string str() const;
};

SymbolicTerm classic_symbolic(const GeneratorMatrix& matrix, std::size_t i);

/// Expanded terms of the generalized contribution of column i:
///   sum_{j_x} a(j_x, j_y) W(r - j_x - b_i (rho - j_y) / beta_i, d_i),  j_y = rho mod beta_i.
/// For b_i = 0 the terms read W((r - j_x) / beta_i, {b_j}) and only j_x = r
/// (mod beta_i) is kept.
std::vector<ReductionTerm> bar_terms(const ValidatedAugmentedMatrix& aug, std::size_t i,
                                     const CoeffTable& table);

BigInt bar_term(const ValidatedAugmentedMatrix& aug, std::size_t i, const CoeffTable& table);

/// Contribution of the single {0, beta > 1} column obtained as the
/// difference of the two classic row eliminations of the other columns.
BigInt alt_zero_term(const ValidatedAugmentedMatrix& aug);

BigInt evaluate(const ReductionTerm& term);
BigInt evaluate(const Reduction& reduction, std::span<const BigInt> extra = {});

}  // namespace dpart

#endif  // DPART_REDUCTION_HPP
