#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "linecalc/curves.hpp"
#include "linecalc/error.hpp"
#include "linecalc/families.hpp"
#include "problem.hpp"

using namespace linecalc;
using nlohmann::json;

namespace {

json matrix_json(const ExactMatrix& m) { return m.to_strings(); }

json symbolic_json(const NonFreeMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.symbolic(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

json one_based(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (auto x : v) out.push_back(x + 1);
  return out;
}

json report_json(const SmoothnessReport& r) {
  json j;
  j["contained"] = r.contained;
  j["in_J"] = r.in_j;
  j["verdict"] = verdict_name(r.verdict);
  j["m"] = r.m;
  j["required_rank"] = r.required_rank;
  j["notes"] = r.notes;
  if (!r.contained) return j;
  j["rank_M"] = r.rank_m;
  j["corank"] = r.corank;
  j["M"] = {{"symbolic", symbolic_json(*r.m_matrix)}, {"at_line", matrix_json(*r.m_matrix->evaluated())}};
  j["certificate"] = r.certificate.to_string();
  json conditions = json::array();
  for (const auto& c : r.genericity.conditions) conditions.push_back(c.to_string());
  j["genericity"] = {{"conditions", conditions}};
  if (r.genericity.witness_field) {
    json w = json::array();
    for (const auto& c : r.genericity.witness) w.push_back(c.to_string());
    j["genericity"]["witness"] = {{"field", r.genericity.witness_field->to_string()}, {"c", w}};
  }
  if (r.equations) {
    const auto& eq = *r.equations;
    j["pivot"] = {{"rows", one_based(eq.pivot_rows)}, {"cols", one_based(eq.pivot_cols)},
                  {"minor", eq.pivot_minor.to_string()}};
    json gs = json::array();
    for (std::size_t k = 0; k < eq.minors.size(); ++k) {
      gs.push_back({{"bordering_row", eq.bordering_rows[k] + 1}, {"g", eq.minors[k].to_string()}});
    }
    j["local_equations"] = gs;
  }
  if (r.jacobian) {
    j["jacobian"] = matrix_json(*r.jacobian);
    j["jacobian_rank"] = r.jacobian_rank;
  }
  if (r.local_dimension) j["local_dimension"] = *r.local_dimension;
  return j;
}

json splitting_json(const SplittingType& s) { return s.entries; }

json gate_json(const DegreeGate& g, unsigned b) {
  return {{"b", b}, {"splitting_degree", g.splitting_degree}, {"verdict", gate_verdict_name(g.verdict)}};
}

cli::Problem echo_of(const FamilyVerification& v, const FieldSpec& f) {
  cli::Problem p;
  p.field = f;
  p.n = v.instance.x.n();
  p.degrees = v.instance.x.type().degrees;
  for (const auto& h : v.instance.x.forms()) p.forms.push_back(h.to_string());
  for (const auto& c : v.c) p.params.push_back(c.to_string());
  std::vector<std::string> a, b;
  for (const auto& s : v.instance.line.a) a.push_back(s.to_string());
  for (const auto& s : v.instance.line.b) b.push_back(s.to_string());
  p.line_a = a;
  p.line_b = b;
  return p;
}

json verify_example(const std::string& spec_text, unsigned long long characteristic, std::uint64_t seed) {
  const auto spec = FamilySpec::parse(spec_text);
  const auto field = FieldSpec::from_characteristic(characteristic);
  const auto v = verify_family(spec, field, seed);
  json j;
  j["family"] = spec.to_string();
  j["field"] = field.to_string();
  j["problem"] = echo_of(v, field).to_json();
  j["report"] = report_json(v.report);
  if (spec.c_mode == CMode::Sampled) {
    j["seed"] = spec.seed.value_or(seed);
    j["draws"] = v.draws;
  }
  return j;
}

json classify_line(const cli::Problem& p) {
  const auto x = p.variety();
  const auto point = p.line().value_or(LineChartPoint::origin(p.field, p.n));
  if (!membership_system(x).contains(point)) throw Error(ErrorKind::LineNotContained, "the line does not lie on X");
  const auto rep = expected_pair_report(x, point);
  json j;
  j["report"] = report_json(rep);
  j["free"] = rep.corank == 0;
  if (x.has_parameters()) {
    j["smooth_along_line"] = nullptr;
    return j;
  }
  const bool smooth = is_smooth_along_line(x, point);
  j["smooth_along_line"] = smooth;
  if (smooth) {
    j["normal_splitting"] = splitting_json(normal_splitting_line(x, point));
    j["tangent_splitting"] = splitting_json(tangent_splitting_line(x, point));
  }
  return j;
}

json enumerate_lines(const cli::Problem& p) {
  const auto x = p.variety();
  const auto lines = enumerate_lines_fq(x);
  json out = json::array();
  for (const auto& line : lines) {
    json l;
    json rows = json::array();
    for (const auto* row : {&line.row0, &line.row1}) {
      json r = json::array();
      for (const auto& s : *row) r.push_back(s.to_string());
      rows.push_back(r);
    }
    l["rows"] = rows;
    const auto view = move_line_to_chart(x, line);
    const auto rank = rank_exact(*nonfree_matrix(view.x, view.point).evaluated()).rank;
    l["rank_M"] = rank;
    l["free_by_M"] = rank == x.type().degree_sum();
    const bool smooth = is_smooth_along_line(view.x, view.point);
    l["smooth_along_line"] = smooth;
    if (smooth) {
      const auto c = tangent_cohomology(view.x, line_param(view.point), -1);
      l["h1_twist_minus_1"] = c.h1;
      l["free_by_h1"] = c.h1 == 0;
      l["normal_splitting"] = splitting_json(normal_splitting_line(view.x, view.point));
    }
    out.push_back(l);
  }
  return {{"count", lines.size()}, {"lines", out}};
}

json curve_check(const cli::Problem& p, int twist, unsigned cover) {
  const auto x = p.variety();
  std::optional<RationalCurve> mu = p.rational_curve();
  if (!mu) mu = line_param(p.line().value_or(LineChartPoint::origin(p.field, p.n)));
  if (cover == 0) throw Error(ErrorKind::InvalidArgument, "cover degree must be at least 1");
  if (cover > 1) {
    mu = precompose(*mu, BinaryForm::monomial(p.field, cover, 0), BinaryForm::monomial(p.field, cover, cover));
  }
  const auto c = tangent_cohomology(x, *mu, twist);
  json j;
  j["twist"] = twist;
  j["cover"] = cover;
  j["degree"] = mu->degree();
  j["h0"] = c.h0;
  j["h1"] = c.h1;
  j["chi"] = tangent_euler_characteristic(x.type(), mu->degree(), twist);
  j["h1_vanishes"] = c.h1 == 0;
  j["degree_gate"] = gate_json(degree_nonfree_gate(x.type(), mu->degree()), mu->degree());
  json comps = json::array();
  for (const auto& f : mu->components()) comps.push_back(f.to_string());
  j["components"] = comps;
  return j;
}

json gates(std::size_t n, const std::vector<unsigned>& degrees) {
  const auto h = hypothesis_gates(n, degrees);
  json j;
  j["N"] = n;
  j["degrees"] = degrees;
  j["flags"] = {{"fano", h.fano},
                {"line_exists_iv", h.line_exists_iv},
                {"J_equals_I", h.j_equals_i},
                {"product_gt_2", h.product_gt_2}};
  j["case"] = proof_case_name(h.proof_case);
  j["degree_gate"] = gate_json(degree_nonfree_gate(CIType{n, degrees}, 1), 1);
  return j;
}

int emit_error(const std::string& kind, const std::string& message, int code) {
  json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  std::cout << j.dump(2) << "\n";
  std::cerr << "linecalc: " << kind << ": " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lines and rational curves on complete intersections"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Add wall-clock time to the report");

  std::string family, problem_path;
  unsigned long long characteristic = 0;
  std::uint64_t seed = 0;
  int twist = -1;
  unsigned cover = 1;
  std::size_t gate_n = 0;
  std::vector<unsigned> gate_degrees;

  auto* verify = app.add_subcommand("verify-example", "Rebuild a family and report on its standard line");
  verify->add_option("family", family, "Family spec, e.g. quadrics-general:N=7,r=2,c=symbolic")->required();
  verify->add_option("--char", characteristic, "0 for Q, otherwise a prime");
  verify->add_option("--seed", seed, "Seed for c=sampled");
  auto* classify = app.add_subcommand("classify-line", "Freeness and non-free-locus report for the problem's line");
  classify->add_option("problem", problem_path)->required();
  auto* enumerate = app.add_subcommand("enumerate-lines", "All F_p-lines on X");
  enumerate->add_option("problem", problem_path)->required();
  auto* curve = app.add_subcommand("curve-check", "h0 and h1 of the tangent bundle along the curve");
  curve->add_option("problem", problem_path)->required();
  curve->add_option("--twist", twist)->check(CLI::IsMember({-1, 0}));
  curve->add_option("--cover", cover, "Precompose with (s^k, t^k)");
  auto* gate = app.add_subcommand("gates", "Numerical hypotheses and the case of the main proof");
  gate->add_option("--N", gate_n)->required();
  gate->add_option("--degrees", gate_degrees)->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  const auto start = std::chrono::steady_clock::now();
  json out;
  try {
    if (*verify) {
      out = verify_example(family, characteristic, seed);
    } else if (*gate) {
      out = gates(gate_n, gate_degrees);
    } else {
      const auto problem = cli::Problem::load(problem_path);
      out["problem"] = problem.to_json();
      json result;
      if (*classify) {
        result = classify_line(problem);
      } else if (*enumerate) {
        result = enumerate_lines(problem);
      } else {
        result = curve_check(problem, twist, cover);
      }
      for (auto& [k, v] : result.items()) out[k] = v;
    }
  } catch (const Error& e) {
    return emit_error(std::string(e.name()), e.what(), e.kind() == ErrorKind::ParseError ? 1 : 2);
  } catch (const std::exception& e) {
    return emit_error("InternalError", e.what(), 3);
  }
  out["command"] = app.get_subcommands().front()->get_name();
  if (timing) {
    out["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}
