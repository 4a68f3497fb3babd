#include "dpart/decomposer.hpp"

#include <algorithm>
#include <limits>

#include "dpart/spf.hpp"

namespace dpart {

namespace {

void note(CountResult& out, Method m) {
  if (std::find(out.methods.begin(), out.methods.end(), m) == out.methods.end()) {
    out.methods.push_back(m);
  }
}

void merge(CountResult& out, const CountResult& sub) {
  for (Method m : sub.methods) note(out, m);
  out.terms_evaluated += sub.terms_evaluated;
}

// Count for m <= 1, or nullopt.
std::optional<BigInt> base_count(const ValidatedAugmentedMatrix& aug) {
  const Target& s = aug.target();
  if (aug.size() == 0) return BigInt(s.r == 0 && s.rho == 0 ? 1 : 0);
  if (aug.size() == 1) {
    const Column& c = aug.column(0);
    const std::int64_t k = c.b > 0 ? s.r / c.b : s.rho / c.beta;
    const bool hit = s.r == checked_mul(k, c.b) && s.rho == checked_mul(k, c.beta);
    return BigInt(hit ? 1 : 0);
  }
  return std::nullopt;
}

const CollinearClass* first_nontrivial(const std::vector<CollinearClass>& classes) {
  for (const CollinearClass& c : classes) {
    if (c.members.size() >= 2) return &c;
  }
  return nullptr;
}

bool classic_admissible(const Column& c, const Target& s, const Strategy& strategy) {
  return gcd(c.b, c.beta) == 1 &&
         (strategy.classic_override_rho_condition || c.beta < s.rho + 2);
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::automatic: return "auto";
    case Mode::classic: return "classic";
    case Mode::general: return "general";
    case Mode::oracle: return "oracle";
  }
  return "auto";
}

std::optional<Mode> parse_mode(std::string_view name) {
  if (name == "auto") return Mode::automatic;
  if (name == "classic") return Mode::classic;
  if (name == "general") return Mode::general;
  if (name == "oracle") return Mode::oracle;
  return std::nullopt;
}

std::vector<CollinearClass> collinear_classes(const GeneratorMatrix& matrix) {
  validate_matrix(matrix);
  std::vector<CollinearClass> classes;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const Column& c = matrix[i];
    const std::int64_t g = gcd(c.b, c.beta);
    const Column dir{c.b / g, c.beta / g};
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const CollinearClass& k) { return k.direction == dir; });
    if (it == classes.end()) {
      classes.push_back({dir, {{i, g}}});
    } else {
      it->members.emplace_back(i, g);
    }
  }
  return classes;
}

namespace {

CountResult convolution_detailed(const ValidatedAugmentedMatrix& aug, const CollinearClass& cls,
                                 const Strategy& strategy) {
  const Column& c = cls.direction;
  if (c.b == 0 && c.beta == 0) throw Error(ErrorKind::PreconditionFailed, "unbounded direction");
  std::vector<std::int64_t> u;
  std::vector<bool> in_class(aug.size(), false);
  for (const auto& [idx, mult] : cls.members) {
    if (idx >= aug.size() || !(aug.column(idx) == Column{mult * c.b, mult * c.beta})) {
      throw Error(ErrorKind::PreconditionFailed, "collinear class does not match the matrix");
    }
    in_class[idx] = true;
    u.push_back(mult);
  }
  GeneratorMatrix rest;
  for (std::size_t j = 0; j < aug.size(); ++j) {
    if (!in_class[j]) rest.push_back(aug.column(j));
  }
  const Target& s = aug.target();
  std::int64_t l_max = std::numeric_limits<std::int64_t>::max();
  if (c.b > 0) l_max = std::min(l_max, s.r / c.b);
  if (c.beta > 0) l_max = std::min(l_max, s.rho / c.beta);

  CountResult out;
  out.count = 0;
  note(out, Method::convolution);
  for (std::int64_t l = 0; l <= l_max; ++l) {
    const BigInt weight = spf(l, u);
    ++out.terms_evaluated;
    if (weight == 0) continue;
    const Target shifted{s.r - l * c.b, s.rho - l * c.beta};
    const CountResult sub = count_detailed(validate(shifted, rest), strategy);
    merge(out, sub);
    out.count += weight * sub.count;
  }
  return out;
}

}  // namespace

BigInt convolution_count(const ValidatedAugmentedMatrix& aug, const CollinearClass& cls,
                         const Strategy& strategy) {
  return convolution_detailed(aug, cls, strategy).count;
}

Row choose_elimination_row(const GeneratorMatrix& matrix) {
  std::size_t zeros_first = 0;
  std::size_t zeros_second = 0;
  for (const Column& c : matrix) {
    zeros_first += c.b == 0 ? 1 : 0;
    zeros_second += c.beta == 0 ? 1 : 0;
  }
  return zeros_second >= 2 && zeros_first <= 1 ? Row::first : Row::second;
}

Reduction plan_reduction(const ValidatedAugmentedMatrix& aug, const Strategy& strategy) {
  if (aug.size() < 2) {
    throw Error(ErrorKind::EmptyEliminationSet, "per-column reduction needs at least two columns");
  }
  const Row row = choose_elimination_row(aug.matrix());
  if (row == Row::first) {
    Reduction r = plan_reduction(validate(transpose(aug.get())), strategy);
    r.eliminated_row = Row::first;
    return r;
  }
  Reduction red;
  red.eliminated_row = Row::second;
  const ClassicOptions classic{strategy.classic_override_rho_condition};
  for (std::size_t i = 0; i < aug.size(); ++i) {
    const Column& c = aug.column(i);
    if (c.beta == 0) continue;
    const bool use_classic =
        strategy.mode == Mode::classic ||
        (strategy.mode == Mode::automatic && classic_admissible(c, aug.target(), strategy));
    if (use_classic) {
      red.terms.push_back(classic_term(aug, i, classic));
      continue;
    }
    const CoeffTable table = coeff_table_direct(aug.matrix(), i, strategy.kvector_cap);
    for (ReductionTerm& t : bar_terms(aug, i, table)) red.terms.push_back(std::move(t));
  }
  return red;
}

CountResult count_detailed(const ValidatedAugmentedMatrix& aug, const Strategy& strategy) {
  CountResult out;
  if (strategy.mode == Mode::oracle) {
    out.count = vpf_bruteforce(aug, strategy.oracle);
    return out;
  }
  if (auto base = base_count(aug)) {
    out.count = *base;
    return out;
  }
  const auto classes = collinear_classes(aug.matrix());
  if (const CollinearClass* cls = first_nontrivial(classes)) {
    return convolution_detailed(aug, *cls, strategy);
  }
  const Reduction red = plan_reduction(aug, strategy);
  out.count = 0;
  for (const ReductionTerm& t : red.terms) {
    note(out, t.method);
    out.count += evaluate(t);
  }
  out.terms_evaluated = red.terms.size();
  if (out.count < 0) {
    throw Error(ErrorKind::InternalNegative,
                "reduction evaluated to negative value " + out.count.get_str() + " for " +
                    to_string(aug.matrix()));
  }
  return out;
}

std::string CountResult::method_summary() const {
  if (methods.empty()) return "base";
  std::string s;
  for (Method m : methods) {
    if (!s.empty()) s += '+';
    s += to_string(m);
  }
  return s;
}

std::vector<ChamberLine> chambers(const GeneratorMatrix& matrix) {
  validate_matrix(matrix);
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = i + 1; j < matrix.size(); ++j) {
      if (collinear(matrix[i], matrix[j])) {
        throw Error(ErrorKind::CollinearColumns, "columns " + std::to_string(i + 1) + " and " +
                                                     std::to_string(j + 1) + " are collinear");
      }
    }
  }
  std::vector<ChamberLine> lines;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    lines.push_back({i, matrix[i].beta, -matrix[i].b});
  }
  return lines;
}

CountMethod dispatcher_method(Strategy strategy) {
  return [strategy](const ValidatedAugmentedMatrix& aug) { return count(aug, strategy); };
}

CountMethod oracle_method(OracleBudget budget) {
  return [budget](const ValidatedAugmentedMatrix& aug) { return vpf_bruteforce(aug, budget); };
}

CountMethod classic_method(ClassicOptions options) {
  return [options](const ValidatedAugmentedMatrix& aug) -> BigInt {
    if (auto base = base_count(aug)) return *base;
    return evaluate(classic_reduction(aug, Row::second, options));
  };
}

}  // namespace dpart
