#include "cli/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "apoly/amalgam.hpp"
#include "apoly/elimination.hpp"
#include "apoly/newton.hpp"
#include "apoly/numeric.hpp"
#include "apoly/parse.hpp"

namespace apoly::cli {

namespace {

using nlohmann::json;

/// Usage problems detected after CLI11 accepted the command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SharedOptions {
  std::string poly;
  std::string vars;
  bool json = false;
  bool pretty = false;
  std::string out;
};

json poly_json(const LaurentPolynomial& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) {
    json exps = json::object();
    for (const auto& [v, e] : m.factors()) exps[v.str()] = e;
    terms.push_back({{"coeff", c.get_str()}, {"exps", std::move(exps)}});
  }
  return {{"expr", f.to_string()}, {"terms", std::move(terms)}};
}

json point_json(const LatticePoint& p) { return json::array({p.i, p.j}); }

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

LaurentPolynomial resolve_poly(const std::string& source) {
  if (auto entry = catalog_lookup(source)) return *entry;
  std::error_code ec;
  if (!source.empty() && std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_poly(buffer.str());
  }
  return parse_poly(source);
}

std::pair<VarName, VarName> resolve_vars(const std::string& vars, const LaurentPolynomial& f) {
  if (vars.empty()) {
    if (f.variables().size() != 2)
      throw UsageError("--vars is required unless the polynomial has exactly two variables");
    return {f.variables()[0], f.variables()[1]};
  }
  const auto comma = vars.find(',');
  if (comma == std::string::npos || vars.find(',', comma + 1) != std::string::npos)
    throw UsageError("--vars expects two comma-separated names, e.g. L,M");
  const auto first = vars.substr(0, comma), second = vars.substr(comma + 1);
  if (!is_valid_var_name(first) || !is_valid_var_name(second))
    throw UsageError("--vars: invalid variable name in '" + vars + "'");
  return {VarName(first), VarName(second)};
}

Slope parse_slope(const std::string& text) {
  if (text == "vertical" || text == "inf") return Slope::vertical_slope();
  long long num = 0, den = 1;
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    num = std::stoll(text.substr(0, slash), &used);
    if (used != text.substr(0, slash).size()) throw std::invalid_argument("trailing");
    if (slash != std::string::npos) {
      const auto rest = text.substr(slash + 1);
      den = std::stoll(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing");
    }
  } catch (const std::logic_error&) {
    throw UsageError("--slope expects p/q, an integer or 'vertical', got '" + text + "'");
  }
  if (den == 0) {
    if (num == 0) throw UsageError("--slope 0/0 is not a slope");
    return Slope::vertical_slope();
  }
  return Slope::from_direction(den, num);
}

json edge_json(const LaurentPolynomial& f, const Edge& e) {
  const auto bc = basis_change_for_edge(e);
  return {{"from", point_json(e.from)},
          {"to", point_json(e.to)},
          {"direction", point_json(e.direction)},
          {"slope", e.slope.to_string()},
          {"lattice_length", e.lattice_length()},
          {"basis", {{"p", bc.p}, {"q", bc.q}, {"a", bc.a}, {"b", bc.b}}},
          {"edge_poly", poly_json(edge_polynomial_substitution(f, e, bc).as_polynomial())},
          {"edge_poly_direct", poly_json(edge_polynomial_direct(f, e).as_polynomial())}};
}

json polygon_json(const LaurentPolynomial& f, const NewtonPolygon& polygon) {
  json vertices = json::array();
  for (const auto& v : polygon.vertices) vertices.push_back(point_json(v));
  json edge_list = json::array();
  if (polygon.vertices.size() >= 2) {
    for (const auto& e : edges(polygon)) {
      const auto fe = edge_polynomial_substitution(f, e, basis_change_for_edge(e));
      edge_list.push_back({{"from", point_json(e.from)},
                           {"to", point_json(e.to)},
                           {"slope", e.slope.to_string()},
                           {"edge_poly", poly_json(fe.as_polynomial())}});
    }
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edge_list)}};
}

json unity_json(const UnityReport& report) {
  json vertical = json::array();
  for (const auto& v : report.vertical_edges)
    vertical.push_back({{"from", point_json(v.edge.from)},
                        {"to", point_json(v.edge.to)},
                        {"edge_poly", poly_json(v.edge_polynomial.as_polynomial())},
                        {"multiplicity", v.multiplicity}});
  return {{"n", report.n},
          {"vertical_edge_found", report.vertical_edge_found},
          {"multiplicity", report.multiplicity},
          {"fiber_polynomial", poly_json(report.fiber_polynomial)},
          {"vertical_edges", std::move(vertical)}};
}

GluingData parse_gluing(const std::string& text) {
  std::vector<long long> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw UsageError("--gluing expects four integers r,s,u,v, got '" + text + "'");
    }
  }
  if (values.size() != 4) throw UsageError("--gluing expects four integers r,s,u,v");
  return {values[0], values[1], values[2], values[3]};
}

void apply_term_limit() {
  std::size_t limit = 1'000'000;
  if (const char* env = std::getenv("APOLY_MAX_TERMS"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(env, &used);
      if (used != std::string(env).size() || value == 0) throw std::invalid_argument("bad");
      limit = static_cast<std::size_t>(value);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("APOLY_MAX_TERMS must be a positive integer, got '") + env + "'");
    }
  }
  set_term_limit(limit);
}

void add_shared(CLI::App* sub, SharedOptions& shared, bool with_poly) {
  if (with_poly)
    sub->add_option("--poly", shared.poly, "Catalog name, file path or inline expression")
        ->required();
  sub->add_option("--vars", shared.vars, "Horizontal,vertical variable names, e.g. L,M");
  auto* json_flag = sub->add_flag("--json", shared.json, "Compact JSON output (default)");
  auto* pretty_flag = sub->add_flag("--pretty", shared.pretty, "Indented JSON output");
  json_flag->excludes(pretty_flag);
  sub->add_option("--out", shared.out, "Write the JSON to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact A-polynomial computations: Newton polygons, edge polynomials, resultants, "
               "amalgams and roots of unity at ideal points.",
               "apoly"};
  app.require_subcommand(1);
  SharedOptions shared;

  auto* parse_cmd = app.add_subcommand("parse", "Parse a polynomial and print it canonically");
  add_shared(parse_cmd, shared, true);

  auto* normalize_cmd = app.add_subcommand("normalize", "Content, monomial and sign normalization");
  add_shared(normalize_cmd, shared, true);

  auto* newton_cmd = app.add_subcommand("newton", "Newton polygon with edge polynomials");
  add_shared(newton_cmd, shared, true);

  auto* edges_cmd = app.add_subcommand("edges", "Edges with slopes, basis changes and edge polynomials");
  add_shared(edges_cmd, shared, true);

  std::string slope_text;
  auto* edgepoly_cmd = app.add_subcommand("edgepoly", "Edge polynomials of all edges of one slope");
  add_shared(edgepoly_cmd, shared, true);
  edgepoly_cmd->add_option("--slope", slope_text, "p/q or 'vertical'")->required();

  std::string var_text;
  std::vector<std::string> operands;
  bool normalize_result = false;
  auto* resultant_cmd = app.add_subcommand("resultant", "Resultant of two polynomials");
  add_shared(resultant_cmd, shared, false);
  resultant_cmd->add_option("--var", var_text, "Variable to eliminate")->required();
  resultant_cmd->add_flag("--normalize", normalize_result, "Normalize the resultant");
  resultant_cmd->add_option("polys", operands, "The two polynomials")->expected(2)->required();

  long long n = 0;
  std::string method = "resultant";
  std::string gluing_text = "4,1,3,1";
  bool check_roots = false;
  auto* amalgam_cmd = app.add_subcommand("amalgam", "F(A,p) or G(A,B) for the amalgam N_n");
  add_shared(amalgam_cmd, shared, false);
  amalgam_cmd->add_option("--poly", shared.poly, "Base polynomial in L, M (default fig8)");
  amalgam_cmd->add_option("--n", n, "Torus link parameter n >= 1")->required();
  amalgam_cmd->add_option("--method", method, "subst: F(A,p); resultant: G(A,B)")
      ->check(CLI::IsMember({"subst", "resultant"}));
  amalgam_cmd->add_option("--gluing", gluing_text, "r,s,u,v with l = mu^r lambda^s, m = mu^u lambda^v");
  amalgam_cmd->add_flag("--check-roots", check_roots, "Report vertical edges and (1 - t^n) multiplicity");

  auto* check_cmd = app.add_subcommand("check-roots", "Multiplicity of (1 - t^n) in every edge polynomial");
  add_shared(check_cmd, shared, true);
  check_cmd->add_option("--n", n, "Root-of-unity order n >= 1")->required();

  double p0 = 1e-2, ratio = 0.1, tol = 1e-12;
  int steps = 4;
  auto* trace_cmd = app.add_subcommand("trace", "Roots of F(A,p) approaching n-th roots of unity");
  add_shared(trace_cmd, shared, false);
  trace_cmd->add_option("--n", n, "Torus link parameter n >= 1")->required();
  trace_cmd->add_option("--p0", p0, "First p value, at most 0.1");
  trace_cmd->add_option("--ratio", ratio, "Geometric ratio in (0,1)");
  trace_cmd->add_option("--steps", steps, "Number of p values, at least 2");
  trace_cmd->add_option("--tol", tol, "Relative backward-error tolerance of the root finder");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "apoly: " << e.what() << "\n";
    if (app.get_subcommands().empty()) err << "Run 'apoly --help' for usage.\n";
    return kUsage;
  }

  try {
    apply_term_limit();
    json result;
    if (parse_cmd->parsed()) {
      result = {{"command", "parse"}, {"polynomial", poly_json(resolve_poly(shared.poly))}};
    } else if (normalize_cmd->parsed()) {
      const auto f = resolve_poly(shared.poly);
      result = {{"command", "normalize"},
                {"input", poly_json(f)},
                {"content", content(f).get_str()},
                {"normalized", poly_json(normalize(f))}};
    } else if (newton_cmd->parsed()) {
      const auto f = resolve_poly(shared.poly);
      const auto [h, v] = resolve_vars(shared.vars, f);
      result = {{"command", "newton"},
                {"vars", {h.str(), v.str()}},
                {"polygon", polygon_json(f, newton_polygon(f, h, v))}};
    } else if (edges_cmd->parsed()) {
      const auto f = resolve_poly(shared.poly);
      const auto [h, v] = resolve_vars(shared.vars, f);
      json list = json::array();
      for (const auto& e : edges(newton_polygon(f, h, v))) list.push_back(edge_json(f, e));
      result = {{"command", "edges"}, {"vars", {h.str(), v.str()}}, {"edges", std::move(list)}};
    } else if (edgepoly_cmd->parsed()) {
      const auto f = resolve_poly(shared.poly);
      const auto [h, v] = resolve_vars(shared.vars, f);
      const Slope wanted = parse_slope(slope_text);
      json list = json::array();
      for (const auto& e : edges(newton_polygon(f, h, v)))
        if (e.slope == wanted) list.push_back(edge_json(f, e));
      if (list.empty())
        throw NotAnEdge("the Newton polygon has no edge of slope " + wanted.to_string());
      result = {{"command", "edgepoly"},
                {"vars", {h.str(), v.str()}},
                {"slope", wanted.to_string()},
                {"edges", std::move(list)}};
    } else if (resultant_cmd->parsed()) {
      if (!is_valid_var_name(var_text)) throw UsageError("--var: invalid variable name");
      const auto f = resolve_poly(operands.at(0));
      const auto g = resolve_poly(operands.at(1));
      auto value = resultant(f, g, VarName(var_text));
      if (normalize_result) value = normalize(value);
      result = {{"command", "resultant"},
                {"var", var_text},
                {"f", poly_json(f)},
                {"g", poly_json(g)},
                {"normalized", normalize_result},
                {"resultant", poly_json(value)}};
    } else if (amalgam_cmd->parsed()) {
      AmalgamParams params{shared.poly.empty() ? figure_eight_apolynomial() : resolve_poly(shared.poly),
                           parse_gluing(gluing_text), n};
      params.validate();
      const auto& g = params.gluing;
      result = {{"command", "amalgam"},
                {"n", n},
                {"method", method},
                {"gluing", {g.r, g.s, g.u, g.v}},
                {"base", poly_json(params.base)}};
      std::optional<LaurentPolynomial> g_ab;
      if (method == "subst") {
        const auto f_ap = glue_substitution(params);
        result["polynomial"] = poly_json(f_ap);
        result["vars"] = {"A", "p"};
        if (check_roots) g_ab = eliminate_p(f_ap, n);
      } else {
        g_ab = resultant_chain(params);
        result["polynomial"] = poly_json(*g_ab);
        result["vars"] = {"A", "B"};
      }
      if (check_roots) result["unity"] = unity_json(unity_report_for(*g_ab, n));
    } else if (check_cmd->parsed()) {
      if (n < 1) throw InvalidArgument("n must be a positive integer");
      const auto f = resolve_poly(shared.poly);
      const auto [h, v] = resolve_vars(shared.vars, f);
      json list = json::array();
      bool vertical_found = false;
      unsigned best = 0;
      for (const auto& e : edges(newton_polygon(f, h, v))) {
        const auto fe = edge_polynomial_substitution(f, e, basis_change_for_edge(e));
        const unsigned k = unity_divisibility(fe, n);
        if (e.slope.vertical()) {
          vertical_found = true;
          best = std::max(best, k);
        }
        list.push_back({{"from", point_json(e.from)},
                        {"to", point_json(e.to)},
                        {"slope", e.slope.to_string()},
                        {"edge_poly", poly_json(fe.as_polynomial())},
                        {"multiplicity", k}});
      }
      result = {{"command", "check-roots"},
                {"vars", {h.str(), v.str()}},
                {"n", n},
                {"vertical_edge_found", vertical_found},
                {"multiplicity", best},
                {"edges", std::move(list)}};
    } else if (trace_cmd->parsed()) {
      const auto trace = convergence_trace(n, p0, ratio, steps, tol);
      json step_list = json::array();
      for (const auto& s : trace.steps) {
        json matched = json::array();
        for (const auto& m : s.matched)
          matched.push_back({{"k", m.k},
                             {"xi", complex_json(m.xi)},
                             {"nearest", complex_json(m.nearest)},
                             {"distance", m.distance}});
        step_list.push_back({{"p", s.p}, {"B", s.b}, {"matched", std::move(matched)}});
      }
      result = {{"command", "trace"},
                {"n", n},
                {"p0", p0},
                {"ratio", ratio},
                {"steps", std::move(step_list)}};
    }

    const std::string text = shared.pretty ? result.dump(2) : result.dump();
    if (!shared.out.empty()) {
      std::ofstream file(shared.out);
      if (!file) throw UsageError("cannot write to '" + shared.out + "'");
      file << text << "\n";
    } else {
      out << text << "\n";
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "apoly: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "apoly: parse error at " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    err << "apoly: " << e.what() << "\n";
    return kMath;
  }
}

}  // namespace apoly::cli
