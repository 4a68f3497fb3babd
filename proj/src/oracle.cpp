#include "dpart/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace dpart {

namespace {

class Enumerator {
 public:
  Enumerator(GeneratorMatrix columns, OracleBudget budget)
      : cols_(std::move(columns)), budget_(budget) {}

  std::uint64_t run(Column residual) { return visit(0, residual); }

 private:
  std::uint64_t visit(std::size_t depth, Column res) {
    if (++nodes_ > budget_.max_nodes) {
      throw Error(ErrorKind::Budget, "oracle node budget of " +
                                         std::to_string(budget_.max_nodes) + " exhausted");
    }
    const std::size_t left = cols_.size() - depth;
    if (left == 0) return res.b == 0 && res.beta == 0 ? 1 : 0;
    if (left == 1) return multiple_of(res, cols_[depth]) ? 1 : 0;
    if (left == 2 && !collinear(cols_[depth], cols_[depth + 1])) {
      return solve_pair(res, cols_[depth], cols_[depth + 1]) ? 1 : 0;
    }
    const Column& c = cols_[depth];
    std::uint64_t total = 0;
    while (res.b >= 0 && res.beta >= 0) {
      total += visit(depth + 1, res);
      res.b -= c.b;
      res.beta -= c.beta;
    }
    return total;
  }

  static bool multiple_of(const Column& res, const Column& c) {
    if (c.b > 0) {
      if (res.b % c.b != 0) return false;
      const std::int64_t k = res.b / c.b;
      return res.beta == k * c.beta;
    }
    return res.b == 0 && res.beta % c.beta == 0;
  }

  static bool solve_pair(const Column& res, const Column& p, const Column& q) {
    const std::int64_t det = det2(p, q);
    const std::int64_t np = det2(res, q);
    const std::int64_t nq = det2(p, res);
    if (np % det != 0 || nq % det != 0) return false;
    return np / det >= 0 && nq / det >= 0;
  }

  GeneratorMatrix cols_;
  OracleBudget budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

BigInt vpf_bruteforce(const ValidatedAugmentedMatrix& aug, OracleBudget budget) {
  GeneratorMatrix cols = aug.matrix();
  // Largest entries first keeps the loop bounds tight near the root.
  std::stable_sort(cols.begin(), cols.end(), [](const Column& a, const Column& c) {
    return std::max(a.b, a.beta) > std::max(c.b, c.beta);
  });
  // Move a noncollinear pair to the end so the last two variables can be solved.
  const std::size_t m = cols.size();
  if (m >= 2 && collinear(cols[m - 2], cols[m - 1])) {
    for (std::size_t i = m - 1; i-- > 0;) {
      if (!collinear(cols[i], cols[m - 1])) {
        std::swap(cols[i], cols[m - 2]);
        break;
      }
    }
  }
  Enumerator e(std::move(cols), budget);
  const std::uint64_t n = e.run(as_column(aug.target()));
  return BigInt(static_cast<unsigned long>(n));
}

BigInt spf_bruteforce(std::int64_t s, std::span<const std::int64_t> d) {
  if (s < 0) return 0;
  if (d.empty()) return s == 0 ? 1 : 0;
  if (d.front() < 1) throw Error(ErrorKind::PreconditionFailed, "generator must be positive");
  BigInt total = 0;
  const std::int64_t g = d.front();
  const auto rest = d.subspan(1);
  for (std::int64_t used = 0; used <= s; used += g) total += spf_bruteforce(s - used, rest);
  return total;
}

GridReport verify_grid(const GeneratorMatrix& matrix, std::int64_t r_max, std::int64_t rho_max,
                       const CountMethod& method, const std::string& method_name,
                       OracleBudget budget) {
  validate_matrix(matrix);
  GridReport report;
  report.method = method_name;
  for (std::int64_t r = 0; r <= r_max; ++r) {
    for (std::int64_t rho = 0; rho <= rho_max; ++rho) {
      const auto aug = validate(Target{r, rho}, matrix);
      const BigInt expected = vpf_bruteforce(aug, budget);
      ++report.checked;
      try {
        BigInt got = method(aug);
        if (got != expected) report.mismatches.push_back({{r, rho}, expected, std::move(got), {}});
      } catch (const Error& e) {
        report.mismatches.push_back({{r, rho}, expected, std::nullopt, e.what()});
      }
    }
  }
  return report;
}

}  // namespace dpart
