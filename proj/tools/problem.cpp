#include "problem.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "linecalc/error.hpp"

namespace linecalc::cli {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

unsigned long long parse_count(const std::string& key, const std::string& text) {
  unsigned long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    fail("bad value '" + text + "' for " + key);
  }
  return v;
}

void parse_line_rows(Problem& p, const std::string& value) {
  auto rows = split(value, ';');
  if (rows.size() != 2) fail("line needs two rows separated by ';'");
  p.line_a = words(rows[0]);
  p.line_b = words(rows[1]);
}

Problem from_json(const nlohmann::json& j0) {
  const nlohmann::json& j = j0.contains("problem") ? j0.at("problem") : j0;
  Problem p;
  try {
    p.field = FieldSpec::parse(j.at("field").get<std::string>());
    p.n = j.at("N").get<std::size_t>();
    p.degrees = j.at("degrees").get<std::vector<unsigned>>();
    p.forms = j.at("forms").get<std::vector<std::string>>();
    if (j.contains("params")) p.params = j.at("params").get<std::vector<std::string>>();
    if (j.contains("line")) {
      p.line_a = j.at("line").at("a").get<std::vector<std::string>>();
      p.line_b = j.at("line").at("b").get<std::vector<std::string>>();
    }
    if (j.contains("curve")) p.curve = j.at("curve").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("bad problem object: ") + e.what());
  }
  return p;
}

void validate(const Problem& p) {
  if (p.n == 0) fail("missing N");
  if (p.degrees.empty()) fail("missing degrees");
  if (p.forms.size() != p.degrees.size()) {
    fail(std::to_string(p.degrees.size()) + " degrees declared but " + std::to_string(p.forms.size()) + " forms given");
  }
  if (p.line_a && (p.line_a->size() != p.n - 1 || p.line_b->size() != p.n - 1)) {
    fail("line rows need N-1 = " + std::to_string(p.n - 1) + " entries each");
  }
  if (p.curve && p.curve->size() != p.n + 1) fail("curve needs N+1 = " + std::to_string(p.n + 1) + " components");
}

}  // namespace

Scalar parse_scalar(const std::string& text, const FieldSpec& f) {
  mpq_class q;
  try {
    q = mpq_class(text, 10);
    q.canonicalize();
  } catch (const std::invalid_argument&) {
    fail("bad scalar '" + text + "'");
  }
  if (q.get_den() == 0) fail("zero denominator in '" + text + "'");
  return Scalar::from_rational(f, q);
}

Problem Problem::parse(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      fail(std::string("bad JSON: ") + e.what());
    }
    Problem p = from_json(j);
    validate(p);
    return p;
  }
  Problem p;
  bool have_field = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::vector<std::string> seen;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail("line " + std::to_string(lineno) + ": expected 'key: value'");
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (key != "form") {
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) fail("duplicate key '" + key + "'");
      seen.push_back(key);
    }
    if (key == "field") {
      p.field = FieldSpec::parse(value);
      have_field = true;
    } else if (key == "N") {
      p.n = parse_count(key, value);
    } else if (key == "degrees") {
      for (const auto& d : split(value, ',')) p.degrees.push_back(static_cast<unsigned>(parse_count(key, d)));
    } else if (key == "params") {
      p.params = split(value, ',');
    } else if (key == "form") {
      p.forms.push_back(value);
    } else if (key == "line") {
      parse_line_rows(p, value);
    } else if (key == "curve") {
      p.curve = split(value, ';');
    } else {
      fail("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!have_field) fail("missing field");
  validate(p);
  return p;
}

Problem Problem::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

CompleteIntersection Problem::variety() const {
  const auto u = projective_universe(n);
  std::vector<MultiPoly> polys;
  for (const auto& f : forms) polys.push_back(parse_polynomial(f, u, field));
  CompleteIntersection x(field, n, degrees, polys);
  if (params.empty()) return x;
  std::vector<Scalar> values;
  for (const auto& s : params) values.push_back(parse_scalar(s, field));
  if (values.size() < x.max_parameter()) {
    throw Error(ErrorKind::InvalidArgument, "forms use c" + std::to_string(x.max_parameter()) + " but only " +
                                                std::to_string(values.size()) + " params are given");
  }
  return x.evaluate_parameters(values);
}

std::optional<LineChartPoint> Problem::line() const {
  if (!line_a) return std::nullopt;
  LineChartPoint pt;
  for (const auto& s : *line_a) pt.a.push_back(parse_scalar(s, field));
  for (const auto& s : *line_b) pt.b.push_back(parse_scalar(s, field));
  return pt;
}

std::optional<RationalCurve> Problem::rational_curve() const {
  if (!curve) return std::nullopt;
  const auto st = binary_universe();
  std::vector<MultiPoly> polys;
  int degree = -1;
  for (const auto& c : *curve) {
    polys.push_back(parse_polynomial(c, st, field, false));
    degree = std::max(degree, polys.back().total_degree());
  }
  if (degree < 1) throw Error(ErrorKind::InvalidArgument, "curve components must have positive degree");
  std::vector<BinaryForm> comps;
  for (const auto& p : polys) comps.push_back(BinaryForm::from_multipoly(p, static_cast<unsigned>(degree)));
  return RationalCurve(std::move(comps));
}

nlohmann::json Problem::to_json() const {
  nlohmann::json j;
  j["field"] = field.to_string();
  j["N"] = n;
  j["degrees"] = degrees;
  j["forms"] = forms;
  if (!params.empty()) j["params"] = params;
  if (line_a) j["line"] = {{"a", *line_a}, {"b", *line_b}};
  if (curve) j["curve"] = *curve;
  return j;
}

}  // namespace linecalc::cli
