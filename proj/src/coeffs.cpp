#include "dpart/coeffs.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

namespace dpart {

namespace {

std::atomic<std::uint64_t> g_tables_built{0};
std::atomic<std::uint64_t> g_mass_violations{0};

CoeffTable record(CoeffTable t) {
  g_tables_built.fetch_add(1, std::memory_order_relaxed);
  if (t.total_mass() != t.expected_mass()) g_mass_violations.fetch_add(1, std::memory_order_relaxed);
  return t;
}

struct Split {
  std::int64_t modulus;
  std::int64_t b;
  GeneratorMatrix others;
};

Split split_column(const GeneratorMatrix& matrix, std::size_t i) {
  validate_matrix(matrix);
  if (i >= matrix.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "column index " + std::to_string(i + 1) +
                                                " out of range for m = " +
                                                std::to_string(matrix.size()));
  }
  if (matrix[i].beta < 1) {
    throw Error(ErrorKind::BetaZero, "expansion coefficients need beta >= 1 in column " +
                                         std::to_string(i + 1));
  }
  return {matrix[i].beta, matrix[i].b, without_column(matrix, i)};
}

CoeffTable empty_table(const Split& s, std::size_t i) {
  CoeffTable t;
  t.column = i;
  t.modulus = s.modulus;
  std::int64_t sum_b = 0;
  for (const Column& c : s.others) {
    t.b_prime.push_back(c.b);
    t.beta_prime.push_back(c.beta);
    sum_b = checked_add(sum_b, c.b);
  }
  t.n_plus = checked_mul(s.modulus - 1, sum_b);
  return t;
}

std::int64_t b_total(const Split& s) {
  std::int64_t sum = 0;
  for (const Column& c : s.others) sum = checked_add(sum, c.beta);
  return checked_mul(s.modulus - 1, sum);
}

std::uint64_t kvector_count(std::int64_t modulus, std::size_t n, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(modulus), &total) ||
        total > cap) {
      throw Error(ErrorKind::Budget, "expansion needs " + std::to_string(modulus) + "^" +
                                         std::to_string(n) + " K-vectors, above cap " +
                                         std::to_string(cap));
    }
  }
  return total;
}

// Calls visit(jx, jy) for every K in [0, modulus-1]^n.
template <typename Visit>
void for_each_kvector(const Split& s, std::uint64_t cap, Visit&& visit) {
  const std::size_t n = s.others.size();
  kvector_count(s.modulus, n, cap);
  // Bounds every partial sum below; throws before enumeration on overflow.
  checked_mul(s.b, b_total(s) / s.modulus);
  std::vector<std::int64_t> k(n, 0);
  std::int64_t kb = 0;
  std::int64_t kbeta = 0;
  while (true) {
    visit(kb - s.b * (kbeta / s.modulus), kbeta % s.modulus);
    std::size_t p = 0;
    for (; p < n; ++p) {
      if (k[p] + 1 < s.modulus) {
        ++k[p];
        kb += s.others[p].b;
        kbeta += s.others[p].beta;
        break;
      }
      kb -= k[p] * s.others[p].b;
      kbeta -= k[p] * s.others[p].beta;
      k[p] = 0;
    }
    if (p == n) break;
  }
}

}  // namespace

std::int64_t CoeffTable::at(std::int64_t jx, std::int64_t jy) const {
  const auto it = entries.find({jx, jy});
  return it == entries.end() ? 0 : it->second;
}

std::int64_t CoeffTable::row_sum(std::int64_t jy) const {
  std::int64_t sum = 0;
  for (const auto& [key, a] : entries) {
    if (key.second == jy) sum += a;
  }
  return sum;
}

BigInt CoeffTable::total_mass() const {
  BigInt sum = 0;
  for (const auto& [key, a] : entries) sum += static_cast<long>(a);
  return sum;
}

BigInt CoeffTable::expected_mass() const {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(modulus),
                static_cast<unsigned long>(b_prime.size()));
  return p;
}

std::int64_t CoeffBounds::t_max(std::int64_t jy, std::int64_t modulus) const {
  if (jy > b_total) return -1;
  return (b_total - jy) / modulus;
}

CoeffTable coeff_table_direct(const GeneratorMatrix& matrix, std::size_t i, std::uint64_t cap) {
  const Split s = split_column(matrix, i);
  CoeffTable t = empty_table(s, i);
  std::int64_t lowest = std::numeric_limits<std::int64_t>::max();
  for_each_kvector(s, cap, [&](std::int64_t jx, std::int64_t jy) {
    ++t.entries[{jx, jy}];
    lowest = std::min(lowest, jx);
  });
  t.n_minus = lowest;
  return record(std::move(t));
}

CoeffBounds coeff_bounds(const GeneratorMatrix& matrix, std::size_t i, std::uint64_t cap) {
  const Split s = split_column(matrix, i);
  CoeffBounds bounds;
  bounds.n_plus = empty_table(s, i).n_plus;
  bounds.b_total = b_total(s);
  if (s.b != 0) {
    std::int64_t lowest = std::numeric_limits<std::int64_t>::max();
    for_each_kvector(s, cap, [&](std::int64_t jx, std::int64_t) { lowest = std::min(lowest, jx); });
    bounds.n_minus = lowest;
  }
  return bounds;
}

std::vector<AppendixASubproblem> appendixA_subproblems(const GeneratorMatrix& matrix,
                                                       std::size_t i, std::int64_t jx,
                                                       std::int64_t jy, std::int64_t t) {
  const Split s = split_column(matrix, i);
  const std::size_t n = s.others.size();
  if (n >= 62) throw Error(ErrorKind::Budget, "too many columns for subset expansion");
  const Target base{checked_add(jx, checked_mul(s.b, t)),
                    checked_add(jy, checked_mul(s.modulus, t))};
  std::vector<AppendixASubproblem> out;
  out.reserve(std::size_t{1} << n);
  // Bit p of `code` is the label digit i_{n-p}, which selects others[p].
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    AppendixASubproblem sub;
    sub.target = base;
    sub.label.assign(n, '0');
    for (std::size_t p = 0; p < n; ++p) {
      if ((code >> p) & 1U) {
        sub.label[n - 1 - p] = '1';
        sub.sign = -sub.sign;
        sub.target.r = checked_sub(sub.target.r, checked_mul(s.modulus, s.others[p].b));
        sub.target.rho = checked_sub(sub.target.rho, checked_mul(s.modulus, s.others[p].beta));
      }
    }
    out.push_back(std::move(sub));
  }
  return out;
}

CoeffTable coeff_table_appendixA(const GeneratorMatrix& matrix, std::size_t i,
                                 const CountMethod& inner) {
  const Split s = split_column(matrix, i);
  CoeffTable t = empty_table(s, i);
  CoeffBounds bounds;
  bounds.b_total = b_total(s);
  // j_x >= -b_i * floor(B / beta_i) holds for every K; the exact minimum is
  // read off the computed entries instead of a separate enumeration.
  const std::int64_t lo = -checked_mul(s.b, bounds.b_total / s.modulus);

  for (std::int64_t jy = 0; jy < s.modulus; ++jy) {
    const std::int64_t t_max = bounds.t_max(jy, s.modulus);
    for (std::int64_t jx = lo; jx <= t.n_plus; ++jx) {
      BigInt a = 0;
      for (std::int64_t step = 0; step <= t_max; ++step) {
        for (const AppendixASubproblem& sub : appendixA_subproblems(matrix, i, jx, jy, step)) {
          if (sub.target.r < 0 || sub.target.rho < 0) continue;
          BigInt w;
          try {
            w = inner(validate(sub.target, s.others));
          } catch (const Error& e) {
            throw Error(ErrorKind::InnerSolverFailure,
                        "inner solver failed on target (" + std::to_string(sub.target.r) + "," +
                            std::to_string(sub.target.rho) + ") over " + to_string(s.others) +
                            ": " + e.what());
          }
          if (sub.sign > 0) {
            a += w;
          } else {
            a -= w;
          }
        }
      }
      if (a == 0) continue;
      if (a < 0 || !a.fits_slong_p()) {
        throw Error(ErrorKind::InnerSolverFailure,
                    "coefficient a(" + std::to_string(jx) + "," + std::to_string(jy) +
                        ") = " + a.get_str() + " is not a valid multiplicity");
      }
      t.entries[{jx, jy}] = a.get_si();
    }
  }
  t.n_minus = t.entries.empty() ? 0 : std::min_element(t.entries.begin(), t.entries.end(),
                                                       [](const auto& x, const auto& y) {
                                                         return x.first.first < y.first.first;
                                                       })->first.first;
  return record(std::move(t));
}

std::optional<std::pair<std::int64_t, std::int64_t>> first_difference(const CoeffTable& a,
                                                                      const CoeffTable& b) {
  std::map<std::pair<std::int64_t, std::int64_t>, bool> keys;
  for (const auto& [k, v] : a.entries) keys[k] = true;
  for (const auto& [k, v] : b.entries) keys[k] = true;
  for (const auto& [k, v] : keys) {
    if (a.at(k.first, k.second) != b.at(k.first, k.second)) return k;
  }
  return std::nullopt;
}

CoeffTableStats coeff_table_stats() {
  return {g_tables_built.load(std::memory_order_relaxed),
          g_mass_violations.load(std::memory_order_relaxed)};
}

}  // namespace dpart
