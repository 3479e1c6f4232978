/* burnside_kit: batch front end for the library.
 *
 * Commands: ext, radical, hull, observables, verify, fixtures.
 * Inputs are JSON documents (poset, algebra, or family) or built-in
 * fixtures addressed as fixture:NAME.  Reports go to standard output,
 * human-readable by default, machine JSON behind --json.  Exit codes:
 * 0 all verdicts pass, 1 verification failed or refused, 2 bad input.
 * JSON reports carry no timings, so identical runs are byte-identical;
 * the text mode prints the elapsed time instead.
 */

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "burnside/algebra.hpp"
#include "burnside/bar.hpp"
#include "burnside/errors.hpp"
#include "burnside/fixtures.hpp"
#include "burnside/hull.hpp"
#include "burnside/io.hpp"
#include "burnside/module.hpp"
#include "burnside/observables.hpp"
#include "burnside/poset.hpp"

namespace {

using namespace burnside;
using io::Json;

struct Options {
  std::string command;
  std::string input;
  std::string theorem;
  std::string fixture_name;
  std::string field = "Q";
  std::string members;
  std::size_t max_degree = 0;  // 0 = radical nilpotency default
  bool oracle = false;
  bool json = false;
};

template <Field K>
struct Resolved {
  FinDimAlgebra<K> algebra;
  ModuleFamily<K> family;
  std::optional<Poset> poset;
};

Json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const Json::exception& e) {
    throw std::invalid_argument("input is not valid JSON: " + std::string(e.what()));
  }
  return doc;
}

bool is_fixture_ref(const std::string& s) { return s.rfind("fixture:", 0) == 0; }

template <Field K>
Resolved<K> resolve_fixture(const std::string& name) {
  Resolved<K> out;
  for (const auto& pn : fixtures::poset_names())
    if (pn == name) {
      out.poset = fixtures::poset(name);
      auto inc = incidence_algebra<K>(*out.poset);
      out.algebra = inc.algebra;
      out.family = simple_modules(inc);
      return out;
    }
  if (name == "k") {
    out.algebra = fixtures::base_field_algebra<K>();
    out.family = {regular_module(out.algebra)};
    return out;
  }
  if (name == "m2") {
    out.algebra = fixtures::matrix2_algebra<K>();
    out.family = {simple_factors(out.algebra, regular_module(out.algebra))[0]};
    return out;
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

template <Field K>
Resolved<K> resolve_algebra_ref(const Json& ref) {
  if (ref.is_string()) {
    const std::string s = ref.get<std::string>();
    if (!is_fixture_ref(s))
      throw std::invalid_argument("algebra reference must be fixture:NAME or a document");
    return resolve_fixture<K>(s.substr(8));
  }
  Resolved<K> out;
  switch (io::classify(ref)) {
    case io::DocKind::poset: {
      out.poset = io::poset_from_json(ref);
      auto inc = incidence_algebra<K>(*out.poset);
      out.algebra = inc.algebra;
      out.family = simple_modules(inc);
      return out;
    }
    case io::DocKind::algebra:
      out.algebra = io::algebra_from_json<K>(ref);
      out.family = simples_of(out.algebra);
      return out;
    default:
      throw std::invalid_argument("family documents cannot nest family documents");
  }
}

template <Field K>
Resolved<K> resolve_input(const Options& opts) {
  Resolved<K> out;
  if (is_fixture_ref(opts.input)) {
    out = resolve_fixture<K>(opts.input.substr(8));
  } else {
    const Json doc = load_document(opts.input);
    if (io::classify(doc) == io::DocKind::family) {
      out = resolve_algebra_ref<K>(io::detail::field_at(doc, "algebra"));
      const Json& modules = io::detail::field_at(doc, "modules");
      if (!modules.is_array() || modules.empty())
        throw std::invalid_argument("family: modules must be a nonempty array");
      out.family.clear();
      for (const auto& m : modules) out.family.push_back(io::module_from_json<K>(m, out.algebra));
    } else {
      out = resolve_algebra_ref<K>(doc);
    }
  }
  if (!opts.members.empty()) {
    ModuleFamily<K> picked;
    std::stringstream ss(opts.members);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t idx = 0;
      try {
        idx = std::stoul(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("--members wants comma-separated 1-based indices");
      }
      if (idx == 0 || idx > out.family.size())
        throw std::invalid_argument("--members index " + tok + " is out of range");
      picked.push_back(out.family[idx - 1]);
    }
    if (picked.empty()) throw std::invalid_argument("--members selected nothing");
    out.family = std::move(picked);
  }
  return out;
}

template <Field K>
TruncatedHull<K> hull_for(const Resolved<K>& res, std::size_t max_degree) {
  if (max_degree == 0) return compute_hull(res.algebra, res.family);
  return compute_hull(res.algebra, res.family, max_degree);
}

Json dims_json(const std::vector<std::vector<std::size_t>>& t) { return Json(t); }

Json bools_json(const std::vector<bool>& v) {
  Json out = Json::array();
  for (bool b : v) out.push_back(b);
  return out;
}

/* ----- command payloads ----- */

template <Field K>
std::pair<Json, std::string> cmd_ext(const Resolved<K>& res, const Options& opts) {
  const std::size_t r = res.family.size();
  Json e1 = Json::array(), e2 = Json::array();
  for (std::size_t i = 0; i < r; ++i) {
    Json row1 = Json::array(), row2 = Json::array();
    for (std::size_t j = 0; j < r; ++j) {
      row1.push_back(ext(res.algebra, res.family, i, j, 1).dimension);
      row2.push_back(ext(res.algebra, res.family, i, j, 2).dimension);
    }
    e1.push_back(std::move(row1));
    e2.push_back(std::move(row2));
  }
  Json result;
  result["ext1"] = e1;
  result["ext2"] = e2;
  std::string verdict = "pass";
  if (opts.oracle) {
    if (!res.poset) throw std::invalid_argument("--oracle needs a poset input");
    const auto table = ext_oracle(*res.poset);
    result["oracle"]["ext1"] = dims_json(table.ext1);
    result["oracle"]["ext2"] = dims_json(table.ext2);
    const bool agrees = e1 == result["oracle"]["ext1"] && e2 == result["oracle"]["ext2"];
    result["agrees"] = agrees;
    if (!agrees) verdict = "fail";
  }
  return {result, verdict};
}

template <Field K>
std::pair<Json, std::string> cmd_radical(const Resolved<K>& res, const Options&) {
  const auto filt = radical_filtration(res.algebra);
  Json result;
  result["dim"] = res.algebra.dim();
  result["radical_dim"] = filt.dims.size() > 1 ? filt.dims[1] : 0;
  result["filtration_dims"] = filt.dims;
  result["nilpotency"] = filt.index;
  result["semisimple_dim"] = res.algebra.dim() - (filt.dims.size() > 1 ? filt.dims[1] : 0);
  return {result, "pass"};
}

template <Field K>
Json hull_json(const FinDimAlgebra<K>& a, const ModuleFamily<K>& family,
               const TruncatedHull<K>& h) {
  Json result;
  result["max_degree"] = h.max_degree;
  result["tangent"] = dims_json(h.tangent);
  result["h_dims"] = dims_json(h.quotient_dims);
  result["dim"] = h.dim();
  Json rels = Json::array();
  for (const auto& rel : h.relations) {
    Json r;
    r["position"] = Json::array({rel.source + 1, rel.target + 1});
    r["degree"] = rel.degree;
    Json support = Json::array(), coeffs = Json::array();
    for (const auto& [mono, c] : rel.terms) {
      support.push_back(h.monomials[mono].label);
      coeffs.push_back(k_str(c));
    }
    r["monomial_support"] = std::move(support);
    r["coefficients"] = std::move(coeffs);
    rels.push_back(std::move(r));
  }
  result["relations"] = std::move(rels);
  result["stable"] = stabilization_check(a, family, h);
  return result;
}

template <Field K>
std::pair<Json, std::string> cmd_hull(const Resolved<K>& res, const Options& opts) {
  const auto h = hull_for(res, opts.max_degree);
  return {hull_json(res.algebra, res.family, h), "pass"};
}

template <Field K>
std::pair<Json, std::string> cmd_observables(const Resolved<K>& res, const Options& opts) {
  const auto h = hull_for(res, opts.max_degree);
  const auto obs = build_observables(res.algebra, res.family, h);
  eta(res.algebra, obs, h);
  Json result;
  result["dim_a"] = res.algebra.dim();
  result["dim_obs"] = obs.dim();
  result["j_dim"] = obs.J.dim();
  const std::size_t rk = rank(obs.eta_matrix);
  result["eta_rank"] = rk;
  result["eta_injective"] = rk == res.algebra.dim();
  result["eta_surjective"] = rk == obs.dim();
  const bool pi_ok = pi_check(obs);
  result["pi_check"] = pi_ok;
  std::vector<std::size_t> degree_counts(h.max_degree + 1, 0);
  for (std::size_t v = 0; v < obs.dim(); ++v) ++degree_counts[obs.degree[v]];
  result["degree_counts"] = degree_counts;
  return {result, pi_ok ? "pass" : "fail"};
}

template <Field K>
std::pair<Json, std::string> cmd_verify(const Resolved<K>& res, const Options& opts) {
  Json result;
  if (opts.theorem == "burnside") {
    const auto rep = verify_burnside(res.algebra, res.family);
    result["end_scalar"] = bools_json(rep.end_scalar);
    result["simple"] = bools_json(rep.simple);
    result["distinct"] = rep.distinct;
    result["hypothesis"] = rep.hypothesis;
    result["rho"] = {{"image_dim", rep.rho.image_dim},
                     {"target_dim", rep.rho.target_dim},
                     {"surjective", rep.rho.surjective}};
    if (!rep.hypothesis) {
      result["refused"] = "hypothesis not satisfied: need pairwise distinct simples with scalar endomorphisms";
      return {result, "refused"};
    }
    return {result, rep.rho.surjective ? "pass" : "fail"};
  }
  if (opts.theorem == "gbt") {
    try {
      const auto rep = verify_gbt(res.algebra, res.family);
      result["dim_a"] = rep.dim_a;
      result["dim_obs"] = rep.dim_obs;
      result["eta_injective"] = rep.eta_injective;
      result["eta_surjective"] = rep.eta_surjective;
      result["eta_bijective"] = rep.eta_bijective;
      result["gr_iso"] = bools_json(rep.gr_iso);
      result["end_scalar"] = bools_json(rep.end_scalar);
      result["rho_surjective"] = rep.burnside.rho.surjective;
      bool layers = true;
      for (bool g : rep.gr_iso) layers = layers && g;
      return {result, rep.eta_bijective && layers ? "pass" : "fail"};
    } catch (const HypothesisViolated& e) {
      result["refused"] = e.what();
      return {result, "refused"};
    }
  }
  if (opts.theorem == "closure") {
    std::size_t n = opts.max_degree;
    if (n == 0) n = hull_for(res, 0).max_degree;
    try {
      const auto rep = closure_check(res.algebra, res.family, n);
      result["max_degree"] = n;
      result["dim_a"] = rep.dim_a;
      result["dim_b"] = rep.dim_b;
      result["dim_c"] = rep.dim_c;
      result["eta_b_bijective"] = rep.eta_b_bijective;
      result["semisimple_quotient_matches"] = rep.semisimple_quotient_matches;
      result["hull_dims"] = dims_json(rep.hull_dims);
      const bool ok =
          rep.eta_b_bijective && rep.semisimple_quotient_matches && rep.gbt.eta_bijective;
      return {result, ok ? "pass" : "fail"};
    } catch (const HypothesisViolated& e) {
      result["refused"] = e.what();
      return {result, "refused"};
    }
  }
  throw std::invalid_argument("verify wants one of: burnside, gbt, closure");
}

template <Field K>
std::pair<Json, std::string> cmd_fixtures(const Options& opts) {
  Json result;
  if (opts.fixture_name.empty()) {
    Json list = Json::array();
    for (const auto& name : fixtures::poset_names())
      list.push_back({{"name", name}, {"kind", "poset"}});
    for (const auto& name : fixtures::algebra_names())
      list.push_back({{"name", name}, {"kind", "algebra"}});
    result["fixtures"] = std::move(list);
    return {result, "pass"};
  }
  for (const auto& name : fixtures::poset_names())
    if (name == opts.fixture_name) return {io::poset_to_json(fixtures::poset(name)), "pass"};
  for (const auto& name : fixtures::algebra_names())
    if (name == opts.fixture_name)
      return {io::algebra_to_json(fixtures::algebra<K>(name)), "pass"};
  throw std::invalid_argument("unknown fixture: " + opts.fixture_name);
}

/* ----- report envelope ----- */

void emit_text(const Json& report, double ms) {
  std::cout << report.at("command").get<std::string>();
  if (report.contains("input")) std::cout << " " << report.at("input").get<std::string>();
  std::cout << " (field " << report.at("field").get<std::string>() << ")\n";
  for (const auto& [key, value] : report.at("result").items())
    std::cout << "  " << key << ": " << value.dump() << "\n";
  std::cout << "verdict: " << report.at("verdict").get<std::string>() << " ("
            << static_cast<long>(ms) << " ms)\n";
}

template <Field K>
int run(const Options& opts) {
  const auto start = std::chrono::steady_clock::now();
  std::pair<Json, std::string> out;
  if (opts.command == "fixtures") {
    out = cmd_fixtures<K>(opts);
    if (!opts.fixture_name.empty()) {
      /* fixture emission prints the bare document, ready to pipe */
      std::cout << out.first.dump(2) << "\n";
      return 0;
    }
  } else {
    const auto res = resolve_input<K>(opts);
    if (opts.command == "ext")
      out = cmd_ext(res, opts);
    else if (opts.command == "radical")
      out = cmd_radical(res, opts);
    else if (opts.command == "hull")
      out = cmd_hull(res, opts);
    else if (opts.command == "observables")
      out = cmd_observables(res, opts);
    else if (opts.command == "verify")
      out = cmd_verify(res, opts);
    else
      throw std::invalid_argument("unknown command: " + opts.command);
  }

  Json report;
  report["command"] = opts.command == "verify" ? "verify " + opts.theorem : opts.command;
  report["field"] = FieldOps<K>::name();
  if (!opts.input.empty()) report["input"] = opts.input;
  report["result"] = std::move(out.first);
  report["verdict"] = out.second;

  if (opts.json) {
    std::cout << report.dump(2) << "\n";
  } else {
    const auto stop = std::chrono::steady_clock::now();
    emit_text(report, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return out.second == "pass" ? 0 : 1;
}

int dispatch(const Options& opts) {
  if (opts.field == "Q") return run<Rational>(opts);
  if (opts.field.rfind("Fp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(opts.field.substr(3));
    } catch (const std::exception&) {
      throw std::invalid_argument("--field Fp:<p> wants a prime number");
    }
    Fp::set_modulus(p);
    return run<Fp>(opts);
  }
  throw std::invalid_argument("--field must be Q or Fp:<p>");
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{"exact deformation and observables toolkit for finite-dimensional algebras"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_input) {
    sub->add_option("--field", opts.field, "scalar field: Q or Fp:<p>")
        ->capture_default_str();
    sub->add_flag("--json", opts.json, "machine-readable JSON report");
    if (with_input)
      sub->add_option("input", opts.input, "JSON document path or fixture:NAME")->required();
  };

  auto* ext_cmd = app.add_subcommand("ext", "Ext^1/Ext^2 dimension tables for a family");
  add_common(ext_cmd, true);
  ext_cmd->add_flag("--oracle", opts.oracle, "include the covering-pair/simple-loop prediction");

  auto* radical_cmd = app.add_subcommand("radical", "radical filtration of the algebra");
  add_common(radical_cmd, true);

  auto* hull_cmd = app.add_subcommand("hull", "formal moduli of the family, order by order");
  add_common(hull_cmd, true);
  hull_cmd->add_option("--max-degree", opts.max_degree, "truncation degree (default: radical nilpotency)");
  hull_cmd->add_option("--members", opts.members, "1-based family subset, e.g. 1,4");

  auto* obs_cmd = app.add_subcommand("observables", "endomorphisms of the versal family");
  add_common(obs_cmd, true);
  obs_cmd->add_option("--max-degree", opts.max_degree, "truncation degree (default: radical nilpotency)");
  obs_cmd->add_option("--members", opts.members, "1-based family subset, e.g. 1,4");

  auto* verify_cmd = app.add_subcommand("verify", "check a theorem instance");
  verify_cmd->add_option("theorem", opts.theorem, "burnside | gbt | closure")
      ->required()
      ->check(CLI::IsMember({"burnside", "gbt", "closure"}));
  add_common(verify_cmd, true);
  verify_cmd->add_option("--max-degree", opts.max_degree, "truncation degree for closure");
  verify_cmd->add_option("--members", opts.members, "1-based family subset, e.g. 1,4");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "list or emit built-in instances");
  add_common(fixtures_cmd, false);
  fixtures_cmd->add_option("name", opts.fixture_name, "fixture to emit (omit to list)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  opts.command = app.get_subcommands().front()->get_name();

  try {
    return dispatch(opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CharPUnsupported& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 1;
  }
}
