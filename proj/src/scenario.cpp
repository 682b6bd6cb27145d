#include "trialg/scenario.hpp"

#include "trialg/corpus.hpp"
#include "trialg/random.hpp"
#include "trialg/search.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace trialg {

namespace {

const json& field(const json& j, const std::string& at, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(at + "/" + key, "missing required field");
  return *it;
}

std::string read_string(const json& j, const std::string& at) {
  if (!j.is_string()) throw SchemaError(at, "expected a string");
  return j.get<std::string>();
}

bool read_bool(const json& j, const std::string& at) {
  if (!j.is_boolean()) throw SchemaError(at, "expected true or false");
  return j.get<bool>();
}

void only_keys(const json& j, const std::string& at, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : j.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* key) { return k == key; })) {
      throw SchemaError(at + "/" + k, "unknown field");
    }
  }
}

const std::vector<std::string> kJordanRecipes = {"s_map", "hom_left", "psi_p", "corpus", "explicit"};
const std::vector<std::string> kDerivationRecipes = {"derivation_corpus", "inner", "zero_derivation"};

bool contains_name(const std::vector<std::string>& names, const std::string& x) {
  return std::find(names.begin(), names.end(), x) != names.end();
}

bool wants_jordan_map(const std::string& action) {
  return action == "verify-jordan" || action == "standardize" || action == "decompose" || action == "uniqueness" ||
         action == "search-sum";
}

GridPoint parse_point(const json& j, const std::string& at) {
  if (!j.is_object()) throw SchemaError(at, "expected an object");
  GridPoint p;
  p.ring = ring_from_json(field(j, at, "scalar"), at + "/scalar");
  p.coefficient = descriptor_from_json(field(j, at, "coefficient"), at + "/coefficient");
  const json& n = field(j, at, "n");
  if (!n.is_number_integer()) throw SchemaError(at + "/n", "expected an integer");
  if (n.get<std::int64_t>() < 2) throw SchemaError(at + "/n", "n must be at least 2 (T_n(R) needs n >= 2)");
  p.n = read_uint(n, at + "/n", 2, 16);
  return p;
}

json point_to_json(const GridPoint& p) {
  return json{{"scalar", ring_to_json(p.ring)}, {"coefficient", descriptor_to_json(p.coefficient)}, {"n", p.n}};
}

void validate_recipe(const json& map, const std::string& action) {
  const std::string at = "/map";
  if (!map.is_object()) throw SchemaError(at, "expected an object");
  const std::string kind = read_string(field(map, at, "kind"), at + "/kind");
  const bool jordan = contains_name(kJordanRecipes, kind);
  const bool derivation = contains_name(kDerivationRecipes, kind);
  if (!jordan && !derivation) throw SchemaError(at + "/kind", "unknown map recipe \"" + kind + "\"");
  if (jordan && !wants_jordan_map(action)) {
    throw SchemaError(at + "/kind", "action \"" + action + "\" does not take a Jordan homomorphism");
  }
  if (derivation && action != "derivation-decompose") {
    throw SchemaError(at + "/kind", "action \"" + action + "\" does not take a Jordan derivation");
  }
  if (kind == "corpus" || kind == "derivation_corpus") {
    only_keys(map, at, {"kind", "count"});
    if (map.contains("count")) read_uint(map["count"], at + "/count", 1, 10000);
  } else if (kind == "explicit") {
    only_keys(map, at, {"kind", "codomain", "images"});
    descriptor_from_json(field(map, at, "codomain"), at + "/codomain");
    if (!field(map, at, "images").is_array()) throw SchemaError(at + "/images", "expected a list of elements");
  } else if (kind == "inner") {
    only_keys(map, at, {"kind", "m"});
    if (!field(map, at, "m").is_array()) throw SchemaError(at + "/m", "expected an element");
  } else {
    only_keys(map, at, {"kind"});
  }
}

ScenarioOptions parse_options(const json& j) {
  const std::string at = "/options";
  if (!j.is_object()) throw SchemaError(at, "expected an object");
  only_keys(j, at,
            {"seed", "max_enum", "max_nodes", "max_unknowns", "require_orthogonal", "codomain_scope", "also_full_scope",
             "force_solver", "tamper", "expect_solutions", "min_solutions", "time_budget_seconds"});
  ScenarioOptions o;
  const std::uint64_t big = UINT64_MAX;
  if (j.contains("seed")) o.seed = read_uint(j["seed"], at + "/seed", 0, big);
  if (j.contains("max_enum")) o.max_enum = read_uint(j["max_enum"], at + "/max_enum", 1, big);
  if (j.contains("max_nodes")) o.max_nodes = read_uint(j["max_nodes"], at + "/max_nodes", 1, big);
  if (j.contains("max_unknowns")) o.max_unknowns = read_uint(j["max_unknowns"], at + "/max_unknowns", 1, 1000000);
  if (j.contains("require_orthogonal")) o.require_orthogonal = read_bool(j["require_orthogonal"], at + "/require_orthogonal");
  if (j.contains("codomain_scope")) {
    const std::string scope = read_string(j["codomain_scope"], at + "/codomain_scope");
    if (scope == "generated") {
      o.scope = CodomainScope::generated;
    } else if (scope == "full") {
      o.scope = CodomainScope::full;
    } else {
      throw SchemaError(at + "/codomain_scope", "expected \"generated\" or \"full\"");
    }
  }
  if (j.contains("also_full_scope")) o.also_full_scope = read_bool(j["also_full_scope"], at + "/also_full_scope");
  if (j.contains("force_solver")) o.force_solver = read_bool(j["force_solver"], at + "/force_solver");
  if (j.contains("tamper")) o.tamper = read_bool(j["tamper"], at + "/tamper");
  if (j.contains("expect_solutions")) o.expect_solutions = read_uint(j["expect_solutions"], at + "/expect_solutions", 0, big);
  if (j.contains("min_solutions")) o.min_solutions = read_uint(j["min_solutions"], at + "/min_solutions", 0, big);
  if (j.contains("time_budget_seconds")) {
    const json& t = j["time_budget_seconds"];
    if (!t.is_number() || t.get<double>() < 0) throw SchemaError(at + "/time_budget_seconds", "expected a number >= 0");
    o.time_budget_seconds = t.get<double>();
  }
  return o;
}

json options_to_json(const ScenarioOptions& o) {
  json j{{"seed", o.seed},
         {"max_enum", o.max_enum},
         {"max_nodes", o.max_nodes},
         {"max_unknowns", o.max_unknowns},
         {"require_orthogonal", o.require_orthogonal},
         {"codomain_scope", to_string(o.scope)},
         {"also_full_scope", o.also_full_scope},
         {"force_solver", o.force_solver},
         {"tamper", o.tamper}};
  if (o.expect_solutions) j["expect_solutions"] = *o.expect_solutions;
  if (o.min_solutions) j["min_solutions"] = *o.min_solutions;
  j["time_budget_seconds"] = o.time_budget_seconds;
  return j;
}

}  // namespace

const std::vector<std::string>& action_names() {
  static const std::vector<std::string> names = {
      "verify-jordan", "verify-eq1",   "verify-lemma1", "verify-lemma2",        "verify-eq2-eq3", "prop1-rank",
      "standardize",   "decompose",    "uniqueness",    "derivation-decompose", "search-sum",     "selfcheck"};
  return names;
}

Scenario parse_scenario(const json& j) {
  if (!j.is_object()) throw SchemaError("", "a scenario must be a JSON object");
  only_keys(j, "", {"name", "description", "scalar", "coefficient", "n", "grid", "map", "action", "options"});
  Scenario s;
  if (j.contains("name")) s.name = read_string(j["name"], "/name");
  if (j.contains("description")) s.description = read_string(j["description"], "/description");
  s.action = read_string(field(j, "", "action"), "/action");
  if (!contains_name(action_names(), s.action)) throw SchemaError("/action", "unknown action \"" + s.action + "\"");

  if (j.contains("grid")) {
    for (const char* key : {"scalar", "coefficient", "n"}) {
      if (j.contains(key)) throw SchemaError(std::string("/") + key, "give either a base point or a grid, not both");
    }
    const json& grid = j["grid"];
    if (!grid.is_array() || grid.empty()) throw SchemaError("/grid", "expected a non-empty list of points");
    for (std::size_t k = 0; k < grid.size(); ++k) s.points.push_back(parse_point(grid[k], "/grid/" + std::to_string(k)));
    s.has_grid = true;
  } else {
    s.points.push_back(parse_point(j, ""));
  }
  if (j.contains("map") && !j["map"].is_null()) {
    validate_recipe(j["map"], s.action);
    s.map = j["map"];
  }
  if (j.contains("options")) s.options = parse_options(j["options"]);
  return s;
}

json scenario_to_json(const Scenario& s) {
  json j = json::object();
  if (!s.name.empty()) j["name"] = s.name;
  if (!s.description.empty()) j["description"] = s.description;
  if (s.has_grid) {
    json grid = json::array();
    for (const auto& p : s.points) grid.push_back(point_to_json(p));
    j["grid"] = grid;
  } else {
    const json p = point_to_json(s.points.at(0));
    for (const auto& [k, v] : p.items()) j[k] = v;
  }
  if (!s.map.is_null()) j["map"] = s.map;
  j["action"] = s.action;
  j["options"] = options_to_json(s.options);
  return j;
}

// ------------------------------------------------------------------ running

namespace {

struct PointRun {
  const Scenario& s;
  std::size_t index;
  AlgebraPtr a;
  std::uint64_t seed;
  CheckList checks;
  json data = json::object();
};

std::size_t recipe_count(const json& map) { return map.contains("count") ? map["count"].get<std::size_t>() : 20; }

std::vector<JordanHomInput> jordan_inputs(const PointRun& run) {
  const AlgebraPtr& a = run.a;
  const json map = run.s.map.is_null() ? json{{"kind", "s_map"}} : run.s.map;
  const std::string kind = map["kind"].get<std::string>();
  const DomainPtr whole = MapDomain::whole(a);
  if (kind == "s_map") return {{s_map_linmap(whole, build_envelope(a)), "s_map"}};
  if (kind == "hom_left") {
    const AlgebraPtr env = build_envelope(a);
    return {{LinMap::from_function(whole, env, [&](const Element& x) { return inject_left(env, x); }), "hom_left"}};
  }
  if (kind == "psi_p") {
    const AlgebraPtr& r = a->inner();
    return {{compose(s_map_linmap(MapDomain::whole(r), build_envelope(r)), projection_p_linmap(a)), "psi_p"}};
  }
  if (kind == "corpus") return generate_test_jordan_homs(a, run.seed, recipe_count(map));
  // explicit
  const AlgebraPtr codomain = build_algebra(a->ring(), descriptor_from_json(map["codomain"], "/map/codomain"));
  const json& imgs = map["images"];
  if (imgs.size() != a->rank()) {
    throw SchemaError("/map/images", "expected " + std::to_string(a->rank()) + " images, one per basis element of " +
                                         a->descriptor().to_string());
  }
  std::vector<Element> images;
  for (std::size_t k = 0; k < imgs.size(); ++k) {
    images.push_back(element_from_json(codomain, imgs[k], "/map/images/" + std::to_string(k)));
  }
  return {{LinMap(whole, codomain, std::move(images)), "explicit"}};
}

std::vector<JordanDerivationInput> derivation_inputs(const PointRun& run) {
  const AlgebraPtr& a = run.a;
  const json map = run.s.map.is_null() ? json{{"kind", "derivation_corpus"}} : run.s.map;
  const std::string kind = map["kind"].get<std::string>();
  if (kind == "derivation_corpus") return generate_test_jordan_derivations(a, run.seed, recipe_count(map));
  const Bimodule reg = Bimodule::regular(a);
  if (kind == "zero_derivation") return {{LinMap::zero(MapDomain::whole(a), a), reg, "zero"}};
  const Element m = element_from_json(a, map["m"], "/map/m");
  return {{inner_derivation(reg, m), reg, "inner_regular"}};
}

std::string label(std::size_t k, const std::string& provenance) {
  return "[" + std::to_string(k) + " " + provenance + "] ";
}

void push_prefixed(CheckList& out, CheckList checks, const std::string& prefix) {
  for (auto& c : checks) {
    c.check = prefix + c.check;
    out.push_back(std::move(c));
  }
}

void push_prefixed(CheckList& out, CheckReport check, const std::string& prefix) {
  check.check = prefix + check.check;
  out.push_back(std::move(check));
}

constexpr std::size_t kTableLimit = 4;

SearchBounds bounds_of(const ScenarioOptions& o) {
  SearchBounds b;
  b.max_enum = o.max_enum;
  b.max_nodes = o.max_nodes;
  b.keep = kTableLimit;
  return b;
}

void act_decompose(PointRun& run) {
  const auto inputs = jordan_inputs(run);
  const ClosureResult closure = envelope_closure(run.a);
  run.data["envelope_rank"] = closure.rank();
  json pairs = json::array();
  json controls = json::array();
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const auto& in = inputs[k];
    const PairDecomposition pair = extract_pair(in.phi);
    push_prefixed(run.checks, verify_theorem2(in.phi, pair), label(k, in.provenance));
    if (inputs.size() <= kTableLimit) {
      pairs.push_back(json{{"provenance", in.provenance},
                           {"local_unit", element_to_json(pair.local_unit)},
                           {"psi1", map_to_json(pair.psi1)},
                           {"psi2", map_to_json(pair.psi2)}});
    }
    if (!run.s.options.tamper) continue;
    // Negative control: move psi2 on the first strict basis vector.
    const std::size_t strict_k = triangular_index(*run.a, 1, 2, 0);
    PairDecomposition bad = pair;
    bad.psi2 = bad.psi2.with_image(strict_k, bad.psi2.images()[strict_k] + in.phi.codomain()->basis_element(0));
    const CheckList rejected = verify_theorem2(in.phi, bad);
    CheckReport control("negative control: tampered psi2 is rejected");
    const auto failing = std::find_if(rejected.begin(), rejected.end(), [](const CheckReport& c) { return !c.pass; });
    if (failing == rejected.end()) {
      control.fail_note("tampered pair passed every check");
    } else if (failing->violations.empty()) {
      control.fail_note("tampered pair rejected without a witness");
    } else {
      control.counts["failed_checks"] =
          std::count_if(rejected.begin(), rejected.end(), [](const CheckReport& c) { return !c.pass; });
      if (controls.size() < kTableLimit) {
        json w = report_to_json(*failing);
        w["violations"] = json::array({w["violations"][0]});
        controls.push_back(w);
      }
    }
    push_prefixed(run.checks, std::move(control), label(k, in.provenance));
  }
  run.data["maps"] = inputs.size();
  if (!pairs.empty()) run.data["pairs"] = pairs;
  if (!controls.empty()) run.data["negative_controls"] = controls;
}

void act_standardize(PointRun& run) {
  const auto inputs = jordan_inputs(run);
  const ClosureResult closure = envelope_closure(run.a);
  run.data["envelope_rank"] = closure.rank();
  json chis = json::array();
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const auto res = induced_standard_hom(inputs[k].phi, closure, true);
    push_prefixed(run.checks, res.report, label(k, inputs[k].provenance));
    if (res.witness_relation) {
      json rel = json::array();
      for (const auto& c : *res.witness_relation) rel.push_back(scalar_to_json(c));
      run.data["witness_relations"].push_back(rel);
    }
    if (res.chi && inputs.size() <= kTableLimit) chis.push_back(map_to_json(*res.chi));
  }
  run.data["maps"] = inputs.size();
  if (!chis.empty()) run.data["chi"] = chis;
}

void act_verify_jordan(PointRun& run) {
  const auto inputs = jordan_inputs(run);
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    push_prefixed(run.checks, is_jordan_homomorphism(inputs[k].phi), label(k, inputs[k].provenance));
  }
  run.data["maps"] = inputs.size();
}

json pair_tables(const std::vector<PairDecomposition>& pairs) {
  json out = json::array();
  for (const auto& p : pairs) out.push_back(json{{"psi1", map_to_json(p.psi1)}, {"psi2", map_to_json(p.psi2)}});
  return out;
}

void act_uniqueness(PointRun& run) {
  const auto inputs = jordan_inputs(run);
  json results = json::array();
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (!is_jordan_homomorphism(inputs[k].phi).pass) {
      throw PreconditionError("map " + std::to_string(k) + " is not a Jordan homomorphism");
    }
    const auto res = exhaustive_uniqueness(inputs[k].phi, run.s.options.require_orthogonal, bounds_of(run.s.options));
    CheckReport rep = res.report;
    if (!run.s.options.require_orthogonal) {
      // Without (ii) the count is informational.
      rep.pass = true;
      rep.notes.clear();
      rep.notes.push_back("orthogonality dropped: pair count reported as data");
    }
    push_prefixed(run.checks, rep, label(k, inputs[k].provenance));
    results.push_back(json{{"provenance", inputs[k].provenance},
                           {"require_orthogonal", res.orthogonality_required},
                           {"hom_candidates", res.hom_candidates},
                           {"antihom_candidates", res.antihom_candidates},
                           {"pair_count", res.pair_count},
                           {"search_space", res.search_space},
                           {"nodes", res.nodes},
                           {"pairs", pair_tables(res.pairs)}});
  }
  run.data["uniqueness"] = results;
}

void act_derivation(PointRun& run) {
  const auto inputs = derivation_inputs(run);
  DerivationOptions opts;
  opts.force_solver = run.s.options.force_solver;
  opts.max_unknowns = run.s.options.max_unknowns;
  std::size_t closed = 0, solved = 0;
  json tables = json::array();
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const auto dec = decompose_jordan_derivation(inputs[k].d, inputs[k].module, opts);
    push_prefixed(run.checks, dec.checks, label(k, inputs[k].provenance));
    (dec.method == DerivationDecomposition::Method::closed_form ? closed : solved) += 1;
    if (inputs.size() <= kTableLimit) {
      tables.push_back(json{{"provenance", inputs[k].provenance},
                            {"method", to_string(dec.method)},
                            {"d1", map_to_json(dec.d1)},
                            {"d2", map_to_json(dec.d2)}});
    }
  }
  run.data["derivations"] = inputs.size();
  run.data["closed_form"] = closed;
  run.data["linear_solver"] = solved;
  if (!tables.empty()) run.data["decompositions"] = tables;
}

void act_search(PointRun& run) {
  const auto inputs = jordan_inputs(run);
  const ScenarioOptions& o = run.s.options;
  json results = json::array();
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const std::string prefix = label(k, inputs[k].provenance);
    push_prefixed(run.checks, is_jordan_homomorphism(inputs[k].phi), prefix);
    const auto res = search_hom_antihom_sum(inputs[k].phi, o.require_orthogonal, bounds_of(o), o.scope);
    json sols = json::array();
    for (const auto& [h, kk] : res.solutions) sols.push_back(json{{"hom", map_to_json(h)}, {"antihom", map_to_json(kk)}});
    json entry{{"provenance", inputs[k].provenance},
               {"require_orthogonal", o.require_orthogonal},
               {"codomain_scope", to_string(res.scope)},
               {"scope_rank", res.scope_rank},
               {"generators", res.generators.size()},
               {"nodes", res.nodes},
               {"solution_count", res.solution_count},
               {"solutions", sols}};
    if (o.also_full_scope && o.scope != CodomainScope::full) {
      const auto full = search_hom_antihom_sum(inputs[k].phi, o.require_orthogonal, bounds_of(o), CodomainScope::full);
      entry["full_scope"] = json{{"scope_rank", full.scope_rank}, {"solution_count", full.solution_count}};
    }
    results.push_back(entry);
    if (o.expect_solutions || o.min_solutions) {
      CheckReport expect("solution count");
      expect.counts["solution_count"] = static_cast<std::int64_t>(res.solution_count);
      if (o.expect_solutions && res.solution_count != *o.expect_solutions) {
        expect.fail_note("expected " + std::to_string(*o.expect_solutions) + " solutions, found " +
                         std::to_string(res.solution_count));
      }
      if (o.min_solutions && res.solution_count < *o.min_solutions) {
        expect.fail_note("expected at least " + std::to_string(*o.min_solutions) + " solutions, found " +
                         std::to_string(res.solution_count));
      }
      push_prefixed(run.checks, std::move(expect), prefix);
    }
  }
  run.data["search"] = results;
}

void act_selfcheck(PointRun& run) {
  const AlgebraPtr& a = run.a;
  const std::vector<AlgebraPtr> algebras = {a, a->inner(), build_envelope(a),
                                            build_algebra(a->ring(), AlgebraDescriptor::opposite(a->descriptor()))};
  for (const auto& alg : algebras) {
    const std::string prefix = "[" + alg->descriptor().to_string() + "] ";
    CheckReport assoc = check_associativity(alg, 30, 1000, run.seed);
    assoc.counts["rank"] = static_cast<std::int64_t>(alg->rank());
    push_prefixed(run.checks, std::move(assoc), prefix);
    push_prefixed(run.checks, check_unit_laws(alg), prefix);
  }
  run.checks.push_back(check_peirce(a));
  run.checks.push_back(check_bimodule(Bimodule::regular(a)));

  const ClosureResult closure = envelope_closure(a);
  CheckReport idem("echelon idempotence");
  const EchelonBasis again = echelonize(a->ring(), closure.basis().rows, closure.basis().ambient_rank);
  if (again.rows != closure.basis().rows || again.pivots != closure.basis().pivots) {
    idem.fail_note("re-echelonizing the closure basis changed it");
  }
  idem.counts["rows"] = static_cast<std::int64_t>(closure.rank());
  run.checks.push_back(std::move(idem));

  CheckReport round("membership round trip");
  for (const auto& p : closure.products) {
    const auto coords = membership(p.value.dense(), closure.basis());
    Element back = Element::zero(closure.ambient);
    if (coords) {
      for (std::size_t r = 0; r < coords->size(); ++r) {
        back += Element::from_dense(closure.ambient, closure.basis().rows[r]).scaled((*coords)[r]);
      }
    }
    round.expect_equal("rows * membership(v) = v", {p.value}, back, p.value);
  }
  run.checks.push_back(std::move(round));

  // solve(A, A x) must return some x' with A x' = A x; A has the closure products as columns.
  CheckReport solve("solve round trip");
  std::vector<Vec> cols;
  for (const auto& p : closure.products) cols.push_back(p.value.dense());
  const ScalarRing& ring = a->ring();
  const ScalarMatrix mat = ScalarMatrix::from_rows(ring, cols, closure.ambient->rank()).transpose();
  SplitMix64 rng(run.seed);
  for (int trial = 0; trial < 8; ++trial) {
    Vec x(cols.size());
    for (auto& c : x) c = ring.canonical(mpz_class(static_cast<long>(rng.below(7))) - 3);
    const Vec rhs = mat.apply(x);
    const auto sol = solve_linear(mat, rhs);
    if (!sol) {
      solve.fail_note("solve_linear found no solution for a consistent system (trial " + std::to_string(trial) + ")");
    } else if (mat.apply(*sol) != rhs) {
      solve.fail_note("solve_linear returned a non-solution (trial " + std::to_string(trial) + ")");
    }
  }
  solve.counts["trials"] = 8;
  run.checks.push_back(std::move(solve));
}

json run_point(const Scenario& s, std::size_t index, const GridPoint& pt) {
  PointRun run{s, index, nullptr, s.options.seed + index, {}, json::object()};
  json out = point_to_json(pt);
  try {
    run.a = build_algebra(pt.ring, AlgebraDescriptor::triangular(pt.n, pt.coefficient));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(s.has_grid ? "/grid/" + std::to_string(index) : "", e.what());
  }
  out["algebra"] = run.a->descriptor().to_string() + " over " + pt.ring.to_string();
  out["rank"] = run.a->rank();
  std::optional<std::string> error;
  try {
    const std::string& act = s.action;
    if (act == "verify-jordan") {
      act_verify_jordan(run);
    } else if (act == "verify-eq1") {
      run.checks.push_back(verify_eq1(run.a));
    } else if (act == "verify-lemma1") {
      run.checks.push_back(verify_lemma1_image(run.a));
    } else if (act == "verify-lemma2") {
      run.checks.push_back(verify_lemma2_image(run.a));
    } else if (act == "verify-eq2-eq3") {
      run.checks.push_back(verify_eq2_eq3_isomorphisms(run.a));
    } else if (act == "prop1-rank") {
      run.checks.push_back(verify_prop1_rank(run.a, envelope_closure(run.a)));
    } else if (act == "standardize") {
      act_standardize(run);
    } else if (act == "decompose") {
      act_decompose(run);
    } else if (act == "uniqueness") {
      act_uniqueness(run);
    } else if (act == "derivation-decompose") {
      act_derivation(run);
    } else if (act == "search-sum") {
      act_search(run);
    } else {
      act_selfcheck(run);
    }
  } catch (const BoundExceeded& e) {
    error = std::string("resource bound exceeded: ") + e.what();
  } catch (const PreconditionError& e) {
    error = std::string("precondition failed: ") + e.what();
  }
  const bool pass = !error && !run.checks.empty() && all_pass(run.checks);
  out["pass"] = pass;
  if (error) out["error"] = *error;
  out["checks"] = checks_to_json(run.checks);
  out["data"] = run.data;
  return out;
}

}  // namespace

RunResult run_scenario(const Scenario& s) {
  RunResult res;
  res.pass = true;
  json points = json::array();
  json point_times = json::array();
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    json p = run_point(s, k, s.points[k]);
    point_times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    res.pass = res.pass && p["pass"].get<bool>();
    points.push_back(std::move(p));
  }
  res.report = json{{"artifact", kArtifactName},
                    {"version", kArtifactVersion},
                    {"scenario", scenario_to_json(s)},
                    {"pass", res.pass},
                    {"points", points}};
  res.timings = json{{"total_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()},
                     {"point_seconds", point_times}};
  return res;
}

std::string report_to_text(const json& report) {
  std::ostringstream out;
  const json& sc = report["scenario"];
  const std::string name = sc.contains("name") ? sc["name"].get<std::string>() : std::string("(unnamed)");
  out << "scenario " << name << " [" << sc["action"].get<std::string>() << "]: "
      << (report["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  const json& points = report["points"];
  for (std::size_t k = 0; k < points.size(); ++k) {
    const json& p = points[k];
    out << "  point " << k + 1 << "/" << points.size() << "  " << p["algebra"].get<std::string>() << "  "
        << (p["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    if (p.contains("error")) out << "    error: " << p["error"].get<std::string>() << "\n";
    std::size_t passed = 0;
    for (const auto& c : p["checks"]) passed += c["pass"].get<bool>();
    out << "    checks passed: " << passed << "/" << p["checks"].size() << "\n";
    for (const auto& c : p["checks"]) {
      if (c["pass"].get<bool>() && p["checks"].size() > 12) continue;
      out << "    [" << (c["pass"].get<bool>() ? "pass" : "FAIL") << "] " << c["check"].get<std::string>();
      for (const auto& [k2, v] : c["counts"].items()) out << "  " << k2 << "=" << v.dump();
      out << "\n";
      if (c.contains("notes")) {
        for (const auto& n : c["notes"]) out << "      note: " << n.get<std::string>() << "\n";
      }
      if (!c["violations"].empty()) {
        const json& v = c["violations"][0];
        out << "      witness: " << v["identity"].get<std::string>() << " inputs=" << v["inputs"].dump()
            << " lhs=" << v["lhs"].dump() << " rhs=" << v["rhs"].dump() << "\n";
      }
    }
    const json& d = p["data"];
    for (const char* key : {"envelope_rank", "maps", "derivations", "closed_form", "linear_solver"}) {
      if (d.contains(key)) out << "    " << key << ": " << d[key].dump() << "\n";
    }
    if (d.contains("search")) {
      for (const auto& e : d["search"]) {
        out << "    search " << e["provenance"].get<std::string>() << " scope=" << e["codomain_scope"].get<std::string>()
            << " orthogonal=" << e["require_orthogonal"].dump() << " solutions=" << e["solution_count"].dump();
        if (e.contains("full_scope")) out << " (full codomain: " << e["full_scope"]["solution_count"].dump() << ")";
        out << "\n";
      }
    }
    if (d.contains("uniqueness")) {
      for (const auto& e : d["uniqueness"]) {
        out << "    uniqueness " << e["provenance"].get<std::string>() << " pairs=" << e["pair_count"].dump()
            << " homs=" << e["hom_candidates"].dump() << " antihoms=" << e["antihom_candidates"].dump() << "\n";
      }
    }
  }
  return out.str();
}

// ----------------------------------------------------------------- registry

std::vector<GridPoint> acceptance_grid() {
  std::vector<GridPoint> grid;
  const std::vector<ScalarRing> rings = {ScalarRing::integers(), ScalarRing::modular(2), ScalarRing::modular(4),
                                         ScalarRing::modular(5)};
  const std::vector<AlgebraDescriptor> coeffs = {AlgebraDescriptor::scalar(),
                                                 AlgebraDescriptor::matrix(2, AlgebraDescriptor::scalar()),
                                                 AlgebraDescriptor::free(2, 2)};
  for (const auto& r : rings) {
    for (const auto& c : coeffs) {
      for (std::size_t n : {2, 3}) grid.push_back({r, c, n});
    }
  }
  return grid;
}

namespace {

json grid_json() {
  json grid = json::array();
  for (const auto& p : acceptance_grid()) grid.push_back(point_to_json(p));
  return grid;
}

json point(const ScalarRing& ring, const AlgebraDescriptor& coeff, std::size_t n) {
  return point_to_json({ring, coeff, n});
}

json scenario(const std::string& name, const std::string& description, json where, const std::string& action,
              json map, json options) {
  json j{{"name", name}, {"description", description}};
  if (where.is_array()) {
    j["grid"] = where;
  } else {
    for (const auto& [k, v] : where.items()) j[k] = v;
  }
  if (!map.is_null()) j["map"] = map;
  j["action"] = action;
  j["options"] = options;
  return j;
}

}  // namespace

const std::vector<Builtin>& builtins() {
  static const std::vector<Builtin> registry = [] {
    using D = AlgebraDescriptor;
    const auto z2 = ScalarRing::modular(2);
    const auto z4 = ScalarRing::modular(4);
    std::vector<Builtin> b;
    auto add = [&](const std::string& name, const std::string& desc, double budget, json where,
                   const std::string& action, json map, json options) {
      options["time_budget_seconds"] = budget;
      b.push_back({name, desc, budget, scenario(name, desc, std::move(where), action, std::move(map), options)});
    };
    add("theorem1-demo", "induced homomorphism chi for 20 generated Jordan maps of T_3(M_2(Z/4))", 120,
        point(z4, D::matrix(2, D::scalar()), 3), "standardize", json{{"kind", "corpus"}, {"count", 20}},
        json{{"seed", 1}});
    add("theorem1-grid", "induced homomorphism chi for 20 generated Jordan maps at every grid point", 600, grid_json(),
        "standardize", json{{"kind", "corpus"}, {"count", 20}}, json{{"seed", 5}});
    add("theorem2-demo", "psi1/psi2 extraction for s_map on T_2(Z/2), with a tampered negative control", 30,
        point(z2, D::scalar(), 2), "decompose", json{{"kind", "s_map"}}, json{{"tamper", true}});
    add("theorem2-grid", "pair extraction and the five checks for 20 Jordan maps at every grid point", 300, grid_json(),
        "decompose", json{{"kind", "corpus"}, {"count", 20}}, json{{"seed", 7}, {"tamper", true}});
    add("theorem3-demo", "derivation/antiderivation split of 20 Jordan derivations of T_2(Free(2,1)) over Z/4, solver path",
        120, point(z4, D::free(2, 1), 2), "derivation-decompose", json{{"kind", "derivation_corpus"}, {"count", 20}},
        json{{"seed", 3}, {"force_solver", true}});
    add("theorem3-grid", "derivation/antiderivation split of 20 Jordan derivations at every grid point", 600,
        grid_json(), "derivation-decompose", json{{"kind", "derivation_corpus"}, {"count", 20}}, json{{"seed", 11}});
    add("jordan-grid", "s_map passes the Jordan homomorphism checker at every grid point", 120, grid_json(),
        "verify-jordan", json{{"kind", "s_map"}}, json::object());
    add("lemma1-sweep", "products of symmetrized homogeneous elements vanish off the strict weights at every grid point", 120,
        grid_json(), "verify-lemma1", nullptr, json::object());
    add("lemma2-sweep", "triple products of symmetrized T_n^0 elements span the closure at every grid point", 300,
        grid_json(), "verify-lemma2", nullptr, json::object());
    add("eq1-grid", "closure span equals diag + S_n + S_n^op, directly, at every grid point", 300, grid_json(),
        "verify-eq1", nullptr, json::object());
    add("eq2-eq3-demo", "T_n^0 embeds as a homomorphism into diag + S_n and as an antihomomorphism into diag + S_n^op, for T_2(Z/2)", 30,
        point(z2, D::scalar(), 2), "verify-eq2-eq3", nullptr, json::object());
    add("prop1-rank", "closure rank n + 2 rank S_n and cardinality at every grid point", 300, grid_json(), "prop1-rank",
        nullptr, json::object());
    add("remark-search", "psi o p over R = T_2(Z/2): Jordan, yet no orthogonal hom + antihom split", 600,
        point(z2, D::triangular(2, D::scalar()), 2), "search-sum", json{{"kind", "psi_p"}},
        json{{"require_orthogonal", true}, {"expect_solutions", 0}, {"also_full_scope", true}});
    add("smap-search", "s_map on T_2(Z/2) has no orthogonal hom + antihom split inside the algebra it generates", 300,
        point(z2, D::scalar(), 2), "search-sum", json{{"kind", "s_map"}},
        json{{"require_orthogonal", true}, {"expect_solutions", 0}, {"also_full_scope", true}});
    add("hom-search-control", "positive control: x -> (x, 0) on T_2(Z/2) splits as (itself, 0)", 300,
        point(z2, D::scalar(), 2), "search-sum", json{{"kind", "hom_left"}},
        json{{"require_orthogonal", true}, {"min_solutions", 1}});
    add("uniqueness-z2", "exhaustive count of psi1/psi2 pairs for s_map on T_2(Z/2) and T_3(Z/2)", 300,
        json::array({point(z2, D::scalar(), 2), point(z2, D::scalar(), 3)}), "uniqueness", json{{"kind", "s_map"}},
        json::object());
    add("selfcheck-grid", "associativity, unit, Peirce, bimodule and echelon self-checks at every grid point", 300,
        grid_json(), "selfcheck", nullptr, json::object());
    return b;
  }();
  return registry;
}

const Builtin* find_builtin(const std::string& name) {
  for (const auto& b : builtins()) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

json scenario_schema() {
  const json uint = json{{"type", "integer"}, {"minimum", 0}};
  json descriptor{
      {"oneOf",
       json::array({
           json{{"type", "object"},
                {"properties", {{"kind", {{"const", "scalar"}}}}},
                {"required", {"kind"}},
                {"additionalProperties", false}},
           json{{"type", "object"},
                {"properties",
                 {{"kind", {{"const", "matrix"}}},
                  {"size", {{"type", "integer"}, {"minimum", 1}}},
                  {"inner", {{"$ref", "#/$defs/descriptor"}}}}},
                {"required", {"kind", "size", "inner"}},
                {"additionalProperties", false}},
           json{{"type", "object"},
                {"properties",
                 {{"kind", {{"const", "free"}}},
                  {"generators", {{"type", "integer"}, {"minimum", 1}}},
                  {"max_degree", {{"type", "integer"}, {"minimum", 1}}}}},
                {"required", {"kind", "generators", "max_degree"}},
                {"additionalProperties", false}},
           json{{"type", "object"},
                {"properties",
                 {{"kind", {{"const", "triangular"}}},
                  {"n", {{"type", "integer"}, {"minimum", 2}}},
                  {"inner", {{"$ref", "#/$defs/descriptor"}}}}},
                {"required", {"kind", "n", "inner"}},
                {"additionalProperties", false}},
           json{{"type", "object"},
                {"properties", {{"kind", {{"const", "opposite"}}}, {"inner", {{"$ref", "#/$defs/descriptor"}}}}},
                {"required", {"kind", "inner"}},
                {"additionalProperties", false}},
           json{{"type", "object"},
                {"properties",
                 {{"kind", {{"const", "direct_sum"}}},
                  {"left", {{"$ref", "#/$defs/descriptor"}}},
                  {"right", {{"$ref", "#/$defs/descriptor"}}}}},
                {"required", {"kind", "left", "right"}},
                {"additionalProperties", false}},
       })}};
  json scalar{{"oneOf",
               json::array({json{{"type", "object"},
                                 {"properties", {{"kind", {{"const", "int"}}}}},
                                 {"required", {"kind"}},
                                 {"additionalProperties", false}},
                            json{{"type", "object"},
                                 {"properties",
                                  {{"kind", {{"const", "mod"}}},
                                   {"modulus",
                                    {{"oneOf", json::array({json{{"type", "integer"}, {"minimum", 2}},
                                                            json{{"type", "string"}, {"pattern", "^[0-9]+$"}}})}}}}},
                                 {"required", {"kind", "modulus"}},
                                 {"additionalProperties", false}}})}};
  json element{{"type", "array"},
               {"description", "sparse element: [basis_index, decimal scalar] pairs"},
               {"items",
                {{"type", "array"},
                 {"prefixItems", json::array({uint, json{{"type", "string"}, {"pattern", "^-?[0-9]+$"}}})},
                 {"minItems", 2},
                 {"maxItems", 2}}}};
  json kinds = json::array();
  for (const auto& k : kJordanRecipes) kinds.push_back(k);
  for (const auto& k : kDerivationRecipes) kinds.push_back(k);
  json map{{"type", "object"},
           {"properties",
            {{"kind", {{"enum", kinds}}},
             {"count", {{"type", "integer"}, {"minimum", 1}}},
             {"codomain", {{"$ref", "#/$defs/descriptor"}}},
             {"images", {{"type", "array"}, {"items", {{"$ref", "#/$defs/element"}}}}},
             {"m", {{"$ref", "#/$defs/element"}}}}},
           {"required", {"kind"}},
           {"additionalProperties", false}};
  json point{{"type", "object"},
             {"properties",
              {{"scalar", {{"$ref", "#/$defs/scalar"}}},
               {"coefficient", {{"$ref", "#/$defs/descriptor"}}},
               {"n", {{"type", "integer"}, {"minimum", 2}}}}},
             {"required", {"scalar", "coefficient", "n"}},
             {"additionalProperties", false}};
  json actions = json::array();
  for (const auto& a : action_names()) actions.push_back(a);
  json options{{"type", "object"},
               {"properties",
                {{"seed", uint},
                 {"max_enum", uint},
                 {"max_nodes", uint},
                 {"max_unknowns", uint},
                 {"require_orthogonal", {{"type", "boolean"}}},
                 {"codomain_scope", {{"enum", {"generated", "full"}}}},
                 {"also_full_scope", {{"type", "boolean"}}},
                 {"force_solver", {{"type", "boolean"}}},
                 {"tamper", {{"type", "boolean"}}},
                 {"expect_solutions", uint},
                 {"min_solutions", uint},
                 {"time_budget_seconds", {{"type", "number"}, {"minimum", 0}}}}},
               {"additionalProperties", false}};
  return json{{"$schema", "https://json-schema.org/draft/2020-12/schema"},
              {"title", "trialg scenario"},
              {"type", "object"},
              {"properties",
               {{"name", {{"type", "string"}}},
                {"description", {{"type", "string"}}},
                {"scalar", {{"$ref", "#/$defs/scalar"}}},
                {"coefficient", {{"$ref", "#/$defs/descriptor"}}},
                {"n", {{"type", "integer"}, {"minimum", 2}}},
                {"grid", {{"type", "array"}, {"minItems", 1}, {"items", {{"$ref", "#/$defs/point"}}}}},
                {"map", {{"$ref", "#/$defs/map"}}},
                {"action", {{"enum", actions}}},
                {"options", {{"$ref", "#/$defs/options"}}}}},
              {"required", {"action"}},
              {"oneOf", json::array({json{{"required", {"scalar", "coefficient", "n"}}}, json{{"required", {"grid"}}}})},
              {"additionalProperties", false},
              {"$defs",
               {{"scalar", scalar},
                {"descriptor", descriptor},
                {"element", element},
                {"map", map},
                {"point", point},
                {"options", options}}}};
}

}  // namespace trialg
