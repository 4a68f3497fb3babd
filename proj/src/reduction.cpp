#include "dpart/reduction.hpp"

#include <sstream>

namespace dpart {

namespace {

std::string column_name(std::size_t i) { return "column " + std::to_string(i + 1); }

void check_table(const ValidatedAugmentedMatrix& aug, std::size_t i, const CoeffTable& table) {
  const Column& c = aug.column(i);
  bool ok = table.column == i && table.modulus == c.beta &&
            table.b_prime.size() + 1 == aug.size();
  if (ok) {
    for (std::size_t j = 0, p = 0; j < aug.size(); ++j) {
      if (j == i) continue;
      ok = ok && table.b_prime[p] == aug.matrix()[j].b && table.beta_prime[p] == aug.matrix()[j].beta;
      ++p;
    }
  }
  if (!ok) {
    throw Error(ErrorKind::TableMismatch,
                "coefficient table was not built for " + column_name(i) + " of this matrix");
  }
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::classic: return "classic";
    case Method::bar: return "bar";
    case Method::zero_column: return "zero_column";
    case Method::convolution: return "convolution";
  }
  return "unknown";
}

std::string_view to_string(Row r) { return r == Row::first ? "first" : "second"; }

void check_classic_structure(const GeneratorMatrix& matrix, std::size_t i) {
  if (i >= matrix.size()) throw Error(ErrorKind::IndexOutOfRange, column_name(i) + " out of range");
  if (matrix.size() < 2) {
    throw Error(ErrorKind::EmptyEliminationSet,
                "single-term reduction needs at least two columns");
  }
  const Column& c = matrix[i];
  for (std::size_t j = 0; j < matrix.size(); ++j) {
    if (j != i && collinear(matrix[j], c)) {
      throw Error(ErrorKind::CollinearColumns,
                  column_name(j) + " is parallel to " + column_name(i));
    }
  }
  if (c.beta == 0) throw Error(ErrorKind::BetaZero, column_name(i) + " has beta = 0");
  if (gcd(c.b, c.beta) != 1) {
    throw Error(ErrorKind::NotCoprime, column_name(i) + " entries are not relatively prime");
  }
}

ReductionTerm classic_term(const ValidatedAugmentedMatrix& aug, std::size_t i,
                           ClassicOptions options) {
  check_classic_structure(aug.matrix(), i);
  const Column& c = aug.column(i);
  if (!options.override_rho_condition && c.beta >= aug.target().rho + 2) {
    throw Error(ErrorKind::BetaTooLarge,
                column_name(i) + " violates beta < rho + 2 (beta = " + std::to_string(c.beta) +
                    ", rho = " + std::to_string(aug.target().rho) + ")");
  }
  ReductionTerm t;
  t.query = eliminate(aug, i);
  t.source_column = i;
  t.method = Method::classic;
  return t;
}

Reduction classic_reduction(const ValidatedAugmentedMatrix& aug, Row eliminate_row,
                            ClassicOptions options) {
  if (aug.size() < 2) {
    throw Error(ErrorKind::EmptyEliminationSet,
                "single-term reduction needs at least two columns");
  }
  if (eliminate_row == Row::first) {
    Reduction r = classic_reduction(validate(transpose(aug.get())), Row::second, options);
    r.eliminated_row = Row::first;
    return r;
  }
  Reduction r;
  r.eliminated_row = Row::second;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (aug.column(i).beta == 0) continue;
    r.terms.push_back(classic_term(aug, i, options));
  }
  return r;
}

std::int64_t AffineForm::at(const Target& s) const {
  return checked_add(checked_add(checked_mul(r, s.r), checked_mul(rho, s.rho)), constant);
}

std::string AffineForm::str() const {
  std::ostringstream os;
  bool first = true;
  auto put = [&](std::int64_t coef, const char* name) {
    if (coef == 0) return;
    if (coef < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    const std::int64_t mag = coef < 0 ? -coef : coef;
    if (mag != 1) os << mag << '*';
    os << name;
    first = false;
  };
  put(r, "r");
  put(rho, "rho");
  if (constant != 0 || first) {
    if (constant >= 0 && !first) os << '+';
    os << constant;
  }
  return os.str();
}

std::string SymbolicTerm::str() const {
  std::ostringstream os;
  os << (sign < 0 ? '-' : '+') << "W(" << argument.str() << ", {";
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (k) os << ',';
    os << generators[k];
  }
  os << "})";
  return os.str();
}

SymbolicTerm classic_symbolic(const GeneratorMatrix& matrix, std::size_t i) {
  validate_matrix(matrix);
  check_classic_structure(matrix, i);
  const Column& c = matrix[i];
  SymbolicTerm t;
  t.source_column = i;
  t.argument = {c.beta, -c.b, 0};
  for (std::size_t j = 0; j < matrix.size(); ++j) {
    if (j == i) continue;
    const std::int64_t d = det2(matrix[j], c);
    if (d < 0) {
      t.sign = -t.sign;
      t.argument.constant = checked_add(t.argument.constant, d);
      t.generators.push_back(-d);
    } else {
      t.generators.push_back(d);
    }
  }
  return t;
}

std::vector<ReductionTerm> bar_terms(const ValidatedAugmentedMatrix& aug, std::size_t i,
                                     const CoeffTable& table) {
  const Column& c = aug.column(i);
  if (c.beta < 1) throw Error(ErrorKind::BetaZero, column_name(i) + " has beta = 0");
  check_table(aug, i, table);
  const std::int64_t r = aug.target().r;
  const std::int64_t rho = aug.target().rho;
  const std::int64_t jy = rho % c.beta;

  std::vector<ReductionTerm> out;
  if (c.b == 0) {
    std::vector<std::int64_t> gens;
    for (std::size_t j = 0; j < aug.size(); ++j) {
      if (j == i) continue;
      if (aug.matrix()[j].b == 0) {
        throw Error(ErrorKind::CollinearColumns,
                    column_name(j) + " is parallel to " + column_name(i));
      }
      gens.push_back(aug.matrix()[j].b);
    }
    for (const auto& [key, a] : table.entries) {
      const auto [jx, row] = key;
      if (row != jy || (r - jx) % c.beta != 0) continue;
      out.push_back({static_cast<long>(a), {r - jx, gens}, c.beta, i, Method::zero_column});
    }
    return out;
  }

  const std::vector<std::int64_t> gens = eliminate(aug, i).generators;
  const std::int64_t shift = checked_mul((rho - jy) / c.beta, c.b);
  for (const auto& [key, a] : table.entries) {
    const auto [jx, row] = key;
    if (row != jy) continue;
    out.push_back({static_cast<long>(a), {checked_sub(checked_sub(r, jx), shift), gens}, 1, i,
                   Method::bar});
  }
  return out;
}

BigInt bar_term(const ValidatedAugmentedMatrix& aug, std::size_t i, const CoeffTable& table) {
  BigInt sum = 0;
  for (const ReductionTerm& t : bar_terms(aug, i, table)) sum += evaluate(t);
  return sum;
}

BigInt alt_zero_term(const ValidatedAugmentedMatrix& aug) {
  std::size_t zero = aug.size();
  for (std::size_t i = 0; i < aug.size(); ++i) {
    const Column& c = aug.column(i);
    if (c.b == 0 && c.beta > 1) {
      if (zero != aug.size()) {
        throw Error(ErrorKind::PreconditionFailed, "more than one column of the form {0, beta > 1}");
      }
      zero = i;
    }
  }
  if (zero == aug.size()) {
    throw Error(ErrorKind::PreconditionFailed, "no column of the form {0, beta > 1}");
  }
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (i == zero) continue;
    const Column& c = aug.column(i);
    if (c.b == 0 || c.beta == 0) {
      throw Error(ErrorKind::PreconditionFailed,
                  column_name(i) + " must have both entries positive");
    }
    try {
      check_classic_structure(aug.matrix(), i);
    } catch (const Error& e) {
      throw Error(ErrorKind::PreconditionFailed, e.what());
    }
  }
  BigInt sum = 0;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (i == zero) continue;
    SignedSPFQuery q = eliminate(aug, i);
    SignedSPFQuery mirrored{-q.argument, {}};
    for (std::int64_t d : q.generators) mirrored.generators.push_back(-d);
    sum += spf_signed(mirrored) - spf_signed(q);
  }
  return sum;
}

BigInt evaluate(const ReductionTerm& term) {
  return term.weight * spf_signed_scaled(term.query, term.scale);
}

BigInt evaluate(const Reduction& reduction, std::span<const BigInt> extra) {
  BigInt sum = 0;
  for (const ReductionTerm& t : reduction.terms) sum += evaluate(t);
  for (const BigInt& e : extra) sum += e;
  return sum;
}

}  // namespace dpart
