#include "dpart/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dpart/coeffs.hpp"
#include "dpart/decomposer.hpp"
#include "dpart/oracle.hpp"
#include "dpart/problem_io.hpp"
#include "dpart/reduction.hpp"

namespace dpart::cli {

namespace {

using nlohmann::json;

struct Options {
  bool human = false;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget;

  std::string file;
  std::string mode;
  bool override_rho = false;

  std::size_t column = 1;
  std::string coeff_method = "direct";
  std::string inner = "oracle";

  std::int64_t r_max = 30;
  std::int64_t rho_max = 30;
  std::size_t random = 0;
  std::size_t m_max = 4;
  std::int64_t entry_max = 6;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::NegativeEntry:
    case ErrorKind::ZeroColumn:
    case ErrorKind::IndexOutOfRange:
      return kExitInput;
    default:
      return kExitFailure;
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open problem file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ProblemDocument load(const Options& opt) {
  if (opt.file.empty()) throw Error(ErrorKind::Parse, "problem file is required");
  return parse_problem(read_input(opt.file));
}

Strategy strategy_for(const ProblemDocument& doc, const Options& opt) {
  Strategy s = doc.strategy.value_or(Strategy{});
  if (!opt.mode.empty()) {
    const auto mode = parse_mode(opt.mode);
    if (!mode) throw Error(ErrorKind::Parse, "--mode must be one of auto, classic, general, oracle");
    s.mode = *mode;
  }
  if (opt.override_rho) s.classic_override_rho_condition = true;
  if (opt.budget) {
    s.kvector_cap = *opt.budget;
    s.oracle.max_nodes = *opt.budget;
  }
  return s;
}

Target require_target(const ProblemDocument& doc) {
  if (!doc.target) throw Error(ErrorKind::Parse, "target is required for this command");
  return *doc.target;
}

json ints(const std::vector<std::int64_t>& v) { return json(v); }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---- count -----------------------------------------------------------------

int cmd_count(const Options& opt, std::ostream& out) {
  const ProblemDocument doc = load(opt);
  const auto aug = validate(require_target(doc), doc.matrix);
  const CountResult res = count_detailed(aug, strategy_for(doc, opt));
  if (opt.human) {
    out << "W = " << res.count.get_str() << "  (" << res.method_summary() << ", "
        << res.terms_evaluated << " terms)\n";
  } else {
    emit(out, {{"count", res.count.get_str()},
               {"method", res.method_summary()},
               {"terms_evaluated", res.terms_evaluated}});
  }
  return kExitOk;
}

// ---- reduce ----------------------------------------------------------------

json table_rows(const CoeffTable& t) {
  json rows = json::object();
  for (std::int64_t jy = 0; jy < t.modulus; ++jy) {
    json row = json::array();
    for (std::int64_t jx = t.n_minus; jx <= t.n_plus; ++jx) row.push_back(t.at(jx, jy));
    rows[std::to_string(jy)] = row;
  }
  return rows;
}

std::string bar_argument(const Column& c, std::int64_t shift) {
  std::string s;
  if (c.b == 0) return "(r-j_x)/" + std::to_string(c.beta);
  s = "r-j_x-" + std::to_string(c.b) + "*(rho-j_y)/" + std::to_string(c.beta);
  if (shift != 0) s += (shift > 0 ? "+" : "") + std::to_string(shift);
  return s;
}

// `index` maps positions in `m` to 1-based columns of the original matrix.
json symbolic_reduction(const GeneratorMatrix& m, std::uint64_t cap, std::vector<std::string>& lines,
                        std::vector<std::size_t> index = {}) {
  if (index.empty()) {
    for (std::size_t i = 0; i < m.size(); ++i) index.push_back(i + 1);
  }
  json terms = json::array();
  if (m.size() == 0) {
    terms.push_back({{"method", "base"}, {"rule", "W = 1 iff r = 0 and rho = 0"}});
    lines.push_back("W = [r = 0 and rho = 0]");
    return terms;
  }
  if (m.size() == 1) {
    const std::string rule = "W = 1 iff (r, rho) = k*(" + std::to_string(m[0].b) + ", " +
                             std::to_string(m[0].beta) + ") for an integer k >= 0";
    terms.push_back({{"method", "single_column"}, {"source_column", index[0]}, {"rule", rule}});
    lines.push_back(rule);
    return terms;
  }
  const auto classes = collinear_classes(m);
  for (const CollinearClass& cls : classes) {
    if (cls.members.size() < 2) continue;
    GeneratorMatrix rest;
    std::vector<std::size_t> rest_index;
    json cols = json::array();
    json mults = json::array();
    std::vector<bool> in(m.size(), false);
    for (const auto& [idx, u] : cls.members) {
      in[idx] = true;
      cols.push_back(index[idx]);
      mults.push_back(u);
    }
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (!in[j]) {
        rest.push_back(m[j]);
        rest_index.push_back(index[j]);
      }
    }
    const std::string c = "(" + std::to_string(cls.direction.b) + "," +
                          std::to_string(cls.direction.beta) + ")";
    lines.push_back("W = sum_l W(l, u) * W_rest(s - l*" + c + ")  over columns " + cols.dump());
    std::vector<std::string> sub;
    json rest_terms = symbolic_reduction(rest, cap, sub, rest_index);
    for (const auto& s : sub) lines.push_back("  " + s);
    terms.push_back({{"method", "convolution"},
                     {"columns", cols},
                     {"direction", {cls.direction.b, cls.direction.beta}},
                     {"multipliers", mults},
                     {"rest", rest_terms}});
    return terms;
  }
  std::vector<std::string> classic_strings;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Column& c = m[i];
    if (c.beta == 0) continue;
    if (gcd(c.b, c.beta) == 1) {
      const SymbolicTerm t = classic_symbolic(m, i);
      terms.push_back({{"source_column", index[i]},
                       {"method", "classic"},
                       {"weight", t.sign},
                       {"argument", t.argument.str()},
                       {"scale", 1},
                       {"generators", ints(t.generators)}});
      classic_strings.push_back(t.str());
      continue;
    }
    const CoeffTable table = coeff_table_direct(m, i, cap);
    std::vector<std::int64_t> gens;
    std::int64_t shift = 0;
    int sign = 1;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j == i) continue;
      std::int64_t d = c.b == 0 ? m[j].b : det2(m[j], c);
      if (d < 0) {
        sign = -sign;
        shift += d;
        d = -d;
      }
      gens.push_back(d);
    }
    const std::string arg = bar_argument(c, shift);
    terms.push_back({{"source_column", index[i]},
                     {"method", c.b == 0 ? "zero_column" : "bar"},
                     {"weight", sign},
                     {"argument", arg},
                     {"scale", c.b == 0 ? c.beta : 1},
                     {"generators", ints(gens)},
                     {"modulus", c.beta},
                     {"j_y", "rho mod " + std::to_string(c.beta)},
                     {"n_minus", table.n_minus},
                     {"n_plus", table.n_plus},
                     {"coefficients", table_rows(table)}});
    std::ostringstream os;
    os << (sign < 0 ? "-" : "+") << "sum_{j_x=" << table.n_minus << ".." << table.n_plus
       << "} a(j_x, rho mod " << c.beta << ") W(" << arg << ", {";
    for (std::size_t k = 0; k < gens.size(); ++k) os << (k ? "," : "") << gens[k];
    os << "})  [" << table.entries.size() << " nonzero coefficients]";
    lines.push_back(os.str());
  }
  if (!classic_strings.empty()) {
    std::string joined;
    for (const auto& s : classic_strings) joined += (joined.empty() ? "" : " ; ") + s;
    lines.insert(lines.begin(), joined);
  }
  return terms;
}

int cmd_reduce(const Options& opt, std::ostream& out) {
  const ProblemDocument doc = load(opt);
  validate_matrix(doc.matrix);
  const Strategy strategy = strategy_for(doc, opt);
  if (!doc.target) {
    std::vector<std::string> lines;
    const json terms = symbolic_reduction(doc.matrix, strategy.kvector_cap, lines);
    if (opt.human) {
      for (const auto& l : lines) out << l << '\n';
    } else {
      emit(out, {{"eliminated_row", "second"}, {"terms", terms}});
    }
    return kExitOk;
  }

  const auto aug = validate(*doc.target, doc.matrix);
  const bool reducible = aug.size() >= 2 && [&] {
    for (const auto& cls : collinear_classes(aug.matrix())) {
      if (cls.members.size() >= 2) return false;
    }
    return true;
  }();
  if (!reducible) {
    // Base cases and convolutions have no flat term list at a fixed target.
    const CountResult res = count_detailed(aug, strategy);
    std::vector<std::string> lines;
    const json terms = symbolic_reduction(doc.matrix, strategy.kvector_cap, lines);
    if (opt.human) {
      for (const auto& l : lines) out << l << '\n';
      out << "W = " << res.count.get_str() << '\n';
    } else {
      emit(out, {{"terms", terms}, {"count", res.count.get_str()}});
    }
    return kExitOk;
  }

  const Reduction red = plan_reduction(aug, strategy);
  json terms = json::array();
  BigInt total = 0;
  for (const ReductionTerm& t : red.terms) {
    const BigInt value = evaluate(t);
    total += value;
    terms.push_back({{"source_column", t.source_column + 1},
                     {"method", std::string(to_string(t.method))},
                     {"weight", t.weight.get_str()},
                     {"argument", t.query.argument},
                     {"scale", t.scale},
                     {"generators", ints(t.query.generators)},
                     {"value", value.get_str()}});
    if (opt.human) {
      const NormalizedQuery n = normalize(t.query);
      BigInt w = t.weight * n.sign;
      out << (w < 0 ? "-" : "+");
      if (abs(w) != 1) out << BigInt(abs(w)).get_str() << "*";
      out << "W(" << n.argument;
      if (t.scale != 1) out << "/" << t.scale;
      out << ", {";
      for (std::size_t k = 0; k < n.generators.size(); ++k) {
        out << (k ? "," : "") << n.generators[k];
      }
      out << "})  = " << value.get_str() << "   [column " << t.source_column + 1 << ", "
          << to_string(t.method) << "]\n";
    }
  }
  if (opt.human) {
    out << "W = " << total.get_str() << '\n';
  } else {
    emit(out, {{"eliminated_row", std::string(to_string(red.eliminated_row))},
               {"terms", terms},
               {"count", total.get_str()}});
  }
  return kExitOk;
}

// ---- coeffs ----------------------------------------------------------------

CountMethod inner_solver(const std::string& name, const Strategy& strategy) {
  if (name == "oracle") return oracle_method(strategy.oracle);
  if (name == "classic") return classic_method();
  if (name == "dispatcher") return dispatcher_method(strategy);
  throw Error(ErrorKind::Parse, "--inner must be one of oracle, classic, dispatcher");
}

json table_json(const CoeffTable& t) {
  return {{"column", t.column + 1},
          {"modulus", t.modulus},
          {"n_minus", t.n_minus},
          {"n_plus", t.n_plus},
          {"rows", table_rows(t)}};
}

void print_table(std::ostream& out, const CoeffTable& t) {
  out << "column " << t.column + 1 << ", modulus " << t.modulus << ", j_x = " << t.n_minus
      << ".." << t.n_plus << '\n';
  for (std::int64_t jy = 0; jy < t.modulus; ++jy) {
    out << "j_y=" << jy << ":";
    for (std::int64_t jx = t.n_minus; jx <= t.n_plus; ++jx) out << ' ' << t.at(jx, jy);
    out << "   (sum " << t.row_sum(jy) << ")\n";
  }
  out << "total " << t.total_mass().get_str() << '\n';
}

int cmd_coeffs(const Options& opt, std::ostream& out) {
  const ProblemDocument doc = load(opt);
  validate_matrix(doc.matrix);
  const Strategy strategy = strategy_for(doc, opt);
  if (opt.column < 1 || opt.column > doc.matrix.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "--column must be between 1 and " +
                                                std::to_string(doc.matrix.size()));
  }
  if (doc.matrix[opt.column - 1].beta < 1) {
    throw Error(ErrorKind::Parse, "--column must select a column with beta >= 1");
  }
  const std::size_t i = opt.column - 1;
  if (opt.coeff_method == "direct" || opt.coeff_method == "appendixA") {
    const CoeffTable t = opt.coeff_method == "direct"
                             ? coeff_table_direct(doc.matrix, i, strategy.kvector_cap)
                             : coeff_table_appendixA(doc.matrix, i, inner_solver(opt.inner, strategy));
    if (opt.human) {
      print_table(out, t);
    } else {
      emit(out, table_json(t));
    }
    return kExitOk;
  }
  if (opt.coeff_method != "both") {
    throw Error(ErrorKind::Parse, "--method must be one of direct, appendixA, both");
  }
  const CoeffTable direct = coeff_table_direct(doc.matrix, i, strategy.kvector_cap);
  const CoeffTable rec = coeff_table_appendixA(doc.matrix, i, inner_solver(opt.inner, strategy));
  const auto diff = first_difference(direct, rec);
  json j = table_json(direct);
  j["agree"] = !diff.has_value();
  if (diff) j["first_difference"] = {{"j_x", diff->first}, {"j_y", diff->second}};
  if (opt.human) {
    print_table(out, direct);
    out << (diff ? "methods DISAGREE at (" + std::to_string(diff->first) + "," +
                       std::to_string(diff->second) + ")"
                 : std::string("methods agree"))
        << '\n';
  } else {
    emit(out, j);
  }
  return diff ? kExitFailure : kExitOk;
}

// ---- verify / bench --------------------------------------------------------

GeneratorMatrix random_matrix(std::mt19937_64& rng, std::size_t m_max, std::int64_t entry_max) {
  std::uniform_int_distribution<std::size_t> msize(1, std::max<std::size_t>(m_max, 1));
  std::uniform_int_distribution<std::int64_t> entry(0, std::max<std::int64_t>(entry_max, 1));
  GeneratorMatrix m(msize(rng));
  for (Column& c : m) {
    do {
      c = {entry(rng), entry(rng)};
    } while (c.b == 0 && c.beta == 0);
  }
  return m;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  std::vector<GeneratorMatrix> corpus;
  Strategy strategy;
  if (opt.random > 0) {
    std::mt19937_64 rng(opt.seed);
    for (std::size_t k = 0; k < opt.random; ++k) corpus.push_back(random_matrix(rng, opt.m_max, opt.entry_max));
    strategy = strategy_for(ProblemDocument{}, opt);
  } else {
    const ProblemDocument doc = load(opt);
    validate_matrix(doc.matrix);
    corpus.push_back(doc.matrix);
    strategy = strategy_for(doc, opt);
  }
  const CountMethod method = dispatcher_method(strategy);
  std::size_t checked = 0;
  std::size_t mismatch_count = 0;
  json first = json::array();
  for (const GeneratorMatrix& m : corpus) {
    const GridReport rep =
        verify_grid(m, opt.r_max, opt.rho_max, method, std::string(to_string(strategy.mode)),
                    strategy.oracle);
    checked += rep.checked;
    mismatch_count += rep.mismatches.size();
    for (const Mismatch& mm : rep.mismatches) {
      if (first.size() >= 10) break;
      first.push_back({{"matrix", to_string(m)},
                       {"target", {mm.target.r, mm.target.rho}},
                       {"expected", mm.expected.get_str()},
                       {"got", mm.got ? json(mm.got->get_str()) : json(nullptr)},
                       {"error", mm.error}});
    }
  }
  if (opt.human) {
    out << "checked " << checked << " targets over " << corpus.size() << " matrices, "
        << mismatch_count << " mismatches\n";
    for (const auto& f : first) out << "  " << f.dump() << '\n';
  } else {
    emit(out, {{"matrices", corpus.size()},
               {"checked", checked},
               {"mismatch_count", mismatch_count},
               {"mismatches", first}});
  }
  return mismatch_count == 0 ? kExitOk : kExitFailure;
}

int cmd_chambers(const Options& opt, std::ostream& out) {
  const ProblemDocument doc = load(opt);
  std::vector<ChamberLine> lines;
  try {
    lines = chambers(doc.matrix);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CollinearColumns) throw Error(ErrorKind::Parse, e.what());
    throw;
  }
  json j = json::array();
  for (const ChamberLine& l : lines) {
    j.push_back({{"column", l.column + 1}, {"line", {l.r_coef, l.rho_coef}}});
    if (opt.human) {
      AffineForm f{l.r_coef, l.rho_coef, 0};
      out << "column " << l.column + 1 << ": " << f.str() << " = 0\n";
    }
  }
  if (!opt.human) emit(out, j);
  return kExitOk;
}

int cmd_bench(const Options& opt, std::ostream& out) {
  const ProblemDocument doc = load(opt);
  validate_matrix(doc.matrix);
  const Strategy strategy = strategy_for(doc, opt);
  using clock = std::chrono::steady_clock;
  auto time_method = [&](const CountMethod& method, BigInt& sum) {
    const auto t0 = clock::now();
    for (std::int64_t r = 0; r <= opt.r_max; ++r) {
      for (std::int64_t rho = 0; rho <= opt.rho_max; ++rho) {
        sum += method(validate(Target{r, rho}, doc.matrix));
      }
    }
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  };
  BigInt sum_d = 0;
  BigInt sum_o = 0;
  const double ms_d = time_method(dispatcher_method(strategy), sum_d);
  const double ms_o = time_method(oracle_method(strategy.oracle), sum_o);
  const auto targets = (opt.r_max + 1) * (opt.rho_max + 1);
  if (opt.human) {
    out << targets << " targets: dispatcher " << ms_d << " ms, oracle " << ms_o << " ms"
        << (sum_d == sum_o ? "" : "  (TOTALS DIFFER)") << '\n';
  } else {
    emit(out, {{"targets", targets},
               {"dispatcher_ms", ms_d},
               {"oracle_ms", ms_o},
               {"totals_agree", sum_d == sum_o}});
  }
  return sum_d == sum_o ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact double partition counting and reduction to scalar partitions", "dpart"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--human", opt.human, "Human-readable output instead of JSON");
  app.add_option("--seed", opt.seed, "Seed for random verification corpora");
  app.add_option("--budget", opt.budget, "Enumeration cap for oracle nodes and K-vectors");

  auto add_file = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("file", opt.file, "Problem file (JSON or plain text, '-' for stdin)");
    if (required) o->required();
  };
  auto add_strategy = [&](CLI::App* sub) {
    sub->add_option("--mode", opt.mode, "auto | classic | general | oracle");
    sub->add_flag("--override-rho", opt.override_rho, "Skip the beta < rho + 2 check");
  };

  auto* count = app.add_subcommand("count", "Count nonnegative solutions");
  add_file(count);
  add_strategy(count);

  auto* reduce = app.add_subcommand("reduce", "Print the reduction to scalar partitions");
  add_file(reduce);
  add_strategy(reduce);

  auto* coeffs = app.add_subcommand("coeffs", "Expansion coefficient table for one column");
  add_file(coeffs);
  coeffs->add_option("--column", opt.column, "Column index (1-based)")->required();
  coeffs->add_option("--method", opt.coeff_method, "direct | appendixA | both");
  coeffs->add_option("--inner", opt.inner, "Inner solver for appendixA: oracle | classic | dispatcher");

  auto* verify = app.add_subcommand("verify", "Compare the dispatcher against brute force on a grid");
  add_file(verify, false);
  add_strategy(verify);
  verify->add_option("--r-max", opt.r_max, "Largest r");
  verify->add_option("--rho-max", opt.rho_max, "Largest rho");
  verify->add_option("--random", opt.random, "Verify this many random matrices instead of a file");
  verify->add_option("--m-max", opt.m_max, "Random corpus: most columns");
  verify->add_option("--entry-max", opt.entry_max, "Random corpus: largest entry");

  auto* chambers_cmd = app.add_subcommand("chambers", "Chamber boundary lines");
  add_file(chambers_cmd);

  auto* bench = app.add_subcommand("bench", "Time the dispatcher against brute force");
  add_file(bench);
  add_strategy(bench);
  bench->add_option("--r-max", opt.r_max, "Largest r");
  bench->add_option("--rho-max", opt.rho_max, "Largest rho");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*count) return cmd_count(opt, out);
    if (*reduce) return cmd_reduce(opt, out);
    if (*coeffs) return cmd_coeffs(opt, out);
    if (*verify) return cmd_verify(opt, out);
    if (*chambers_cmd) return cmd_chambers(opt, out);
    if (*bench) return cmd_bench(opt, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return kExitInput;
}

}  // namespace dpart::cli
