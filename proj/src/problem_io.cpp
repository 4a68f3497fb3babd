#include "dpart/problem_io.hpp"

#include <sstream>

#include "json.hpp"

namespace dpart {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

std::int64_t as_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) fail(field + " must be an integer");
  return v.get<std::int64_t>();
}

GeneratorMatrix rows_to_matrix(const std::vector<std::int64_t>& top,
                               const std::vector<std::int64_t>& bottom) {
  if (top.size() != bottom.size()) fail("matrix rows must have equal length");
  GeneratorMatrix m;
  for (std::size_t i = 0; i < top.size(); ++i) {
    if (top[i] < 0 || bottom[i] < 0) {
      fail("matrix entry in column " + std::to_string(i + 1) + " is negative");
    }
    m.push_back({top[i], bottom[i]});
  }
  return m;
}

ProblemDocument parse_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("document must be a JSON object");
  ProblemDocument doc;

  if (!j.contains("matrix")) fail("matrix is required");
  const json& m = j["matrix"];
  if (!m.is_array() || m.size() != 2) fail("matrix must have exactly 2 rows");
  std::vector<std::int64_t> rows[2];
  for (int k = 0; k < 2; ++k) {
    if (!m[k].is_array()) fail("matrix row " + std::to_string(k + 1) + " must be an array");
    for (const json& v : m[k]) rows[k].push_back(as_int(v, "matrix entry"));
  }
  doc.matrix = rows_to_matrix(rows[0], rows[1]);

  if (j.contains("target") && !j["target"].is_null()) {
    const json& t = j["target"];
    if (!t.is_array() || t.size() != 2) fail("target must be [r, rho]");
    doc.target = Target{as_int(t[0], "target"), as_int(t[1], "target")};
  }

  if (j.contains("strategy") && !j["strategy"].is_null()) {
    const json& s = j["strategy"];
    if (!s.is_object()) fail("strategy must be an object");
    Strategy st;
    if (s.contains("mode")) {
      if (!s["mode"].is_string()) fail("strategy.mode must be a string");
      const auto mode = parse_mode(s["mode"].get<std::string>());
      if (!mode) fail("strategy.mode must be one of auto, classic, general, oracle");
      st.mode = *mode;
    }
    if (s.contains("override_rho_condition")) {
      if (!s["override_rho_condition"].is_boolean()) {
        fail("strategy.override_rho_condition must be a boolean");
      }
      st.classic_override_rho_condition = s["override_rho_condition"].get<bool>();
    }
    doc.strategy = st;
  }
  return doc;
}

std::vector<std::int64_t> parse_row(const std::string& line, std::size_t lineno) {
  std::istringstream is(line);
  std::vector<std::int64_t> row;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) {
      fail("matrix entry '" + tok + "' on line " + std::to_string(lineno) + " is not an integer");
    }
    row.push_back(v);
  }
  return row;
}

ProblemDocument parse_plain(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<std::int64_t>> rows;
  ProblemDocument doc;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.compare(first, 7, "target:") == 0) {
      const auto vals = parse_row(line.substr(first + 7), lineno);
      if (vals.size() != 2) fail("target line must read 'target: r rho'");
      doc.target = Target{vals[0], vals[1]};
      continue;
    }
    if (rows.size() == 2) fail("matrix must have exactly 2 rows (extra row on line " +
                               std::to_string(lineno) + ")");
    rows.push_back(parse_row(line, lineno));
  }
  if (rows.size() == 1) fail("matrix must have exactly 2 rows");
  if (rows.empty()) rows.assign(2, {});
  doc.matrix = rows_to_matrix(rows[0], rows[1]);
  return doc;
}

}  // namespace

ProblemDocument parse_problem(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_plain(text);
}

std::string to_json(const ProblemDocument& doc) {
  json j;
  json top = json::array();
  json bottom = json::array();
  for (const Column& c : doc.matrix) {
    top.push_back(c.b);
    bottom.push_back(c.beta);
  }
  j["matrix"] = json::array({top, bottom});
  if (doc.target) j["target"] = json::array({doc.target->r, doc.target->rho});
  if (doc.strategy) {
    j["strategy"] = {{"mode", std::string(to_string(doc.strategy->mode))},
                     {"override_rho_condition", doc.strategy->classic_override_rho_condition}};
  }
  return j.dump();
}

std::string to_plain_text(const ProblemDocument& doc) {
  std::ostringstream os;
  for (int k = 0; k < 2; ++k) {
    for (std::size_t i = 0; i < doc.matrix.size(); ++i) {
      if (i) os << ' ';
      os << (k == 0 ? doc.matrix[i].b : doc.matrix[i].beta);
    }
    os << '\n';
  }
  if (doc.target) os << "target: " << doc.target->r << ' ' << doc.target->rho << '\n';
  return os.str();
}

}  // namespace dpart
