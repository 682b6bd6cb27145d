#include "trialg/serialize.hpp"

namespace trialg {

std::uint64_t read_uint(const json& j, const std::string& at, std::uint64_t lo, std::uint64_t hi) {
  if (!j.is_number_integer()) throw SchemaError(at, "expected an integer");
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v < lo || v > hi) {
      throw SchemaError(at, "must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return v;
  }
  const auto v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::uint64_t>(v) < lo || static_cast<std::uint64_t>(v) > hi) {
    throw SchemaError(at, "must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<std::uint64_t>(v);
}

namespace {

const json& field(const json& j, const std::string& at, const char* key) {
  if (!j.is_object()) throw SchemaError(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(at + "/" + key, "missing required field");
  return *it;
}

std::string read_string(const json& j, const std::string& at) {
  if (!j.is_string()) throw SchemaError(at, "expected a string");
  return j.get<std::string>();
}

mpz_class read_big(const json& j, const std::string& at) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw SchemaError(at, "not a decimal integer");
    return v;
  }
  throw SchemaError(at, "expected a decimal string or integer");
}

void only_keys(const json& j, const std::string& at, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw SchemaError(at + "/" + k, "unknown field");
  }
}

}  // namespace

json ring_to_json(const ScalarRing& ring) {
  if (!ring.is_modular()) return json{{"kind", "int"}};
  if (ring.modulus().fits_slong_p()) return json{{"kind", "mod"}, {"modulus", ring.modulus().get_si()}};
  return json{{"kind", "mod"}, {"modulus", ring.modulus().get_str()}};
}

ScalarRing ring_from_json(const json& j, const std::string& at) {
  const std::string kind = read_string(field(j, at, "kind"), at + "/kind");
  if (kind == "int") {
    only_keys(j, at, {"kind"});
    return ScalarRing::integers();
  }
  if (kind == "mod") {
    only_keys(j, at, {"kind", "modulus"});
    const mpz_class m = read_big(field(j, at, "modulus"), at + "/modulus");
    if (m < 2) throw SchemaError(at + "/modulus", "modulus must be at least 2");
    return ScalarRing::modular(m);
  }
  throw SchemaError(at + "/kind", "expected \"int\" or \"mod\"");
}

json descriptor_to_json(const AlgebraDescriptor& d) {
  using K = AlgebraDescriptor::Kind;
  switch (d.kind) {
    case K::scalar: return json{{"kind", "scalar"}};
    case K::matrix: return json{{"kind", "matrix"}, {"size", d.size}, {"inner", descriptor_to_json(d.inner())}};
    case K::free: return json{{"kind", "free"}, {"generators", d.generators}, {"max_degree", d.max_degree}};
    case K::triangular: return json{{"kind", "triangular"}, {"n", d.size}, {"inner", descriptor_to_json(d.inner())}};
    case K::opposite: return json{{"kind", "opposite"}, {"inner", descriptor_to_json(d.inner())}};
    case K::direct_sum:
      return json{{"kind", "direct_sum"}, {"left", descriptor_to_json(d.left())}, {"right", descriptor_to_json(d.right())}};
  }
  return json();
}

AlgebraDescriptor descriptor_from_json(const json& j, const std::string& at) {
  const std::string kind = read_string(field(j, at, "kind"), at + "/kind");
  auto inner = [&] { return descriptor_from_json(field(j, at, "inner"), at + "/inner"); };
  if (kind == "scalar") {
    only_keys(j, at, {"kind"});
    return AlgebraDescriptor::scalar();
  }
  if (kind == "matrix") {
    only_keys(j, at, {"kind", "size", "inner"});
    const auto k = read_uint(field(j, at, "size"), at + "/size", 1, 16);
    return AlgebraDescriptor::matrix(k, inner());
  }
  if (kind == "free") {
    only_keys(j, at, {"kind", "generators", "max_degree"});
    const auto g = read_uint(field(j, at, "generators"), at + "/generators", 1, 8);
    const auto deg = read_uint(field(j, at, "max_degree"), at + "/max_degree", 1, 8);
    return AlgebraDescriptor::free(g, deg);
  }
  if (kind == "triangular") {
    only_keys(j, at, {"kind", "n", "inner"});
    const auto n = read_uint(field(j, at, "n"), at + "/n", 2, 16);
    return AlgebraDescriptor::triangular(n, inner());
  }
  if (kind == "opposite") {
    only_keys(j, at, {"kind", "inner"});
    return AlgebraDescriptor::opposite(inner());
  }
  if (kind == "direct_sum") {
    only_keys(j, at, {"kind", "left", "right"});
    return AlgebraDescriptor::direct_sum(descriptor_from_json(field(j, at, "left"), at + "/left"),
                                         descriptor_from_json(field(j, at, "right"), at + "/right"));
  }
  throw SchemaError(at + "/kind", "unknown descriptor kind \"" + kind + "\"");
}

json scalar_to_json(const mpz_class& v) { return v.get_str(); }

json element_to_json(const Element& x) {
  json out = json::array();
  for (const auto& t : x.terms()) out.push_back(json::array({t.index, scalar_to_json(t.coeff)}));
  return out;
}

Element element_from_json(const AlgebraPtr& a, const json& j, const std::string& at) {
  if (!j.is_array()) throw SchemaError(at, "expected a list of [basis_index, scalar] pairs");
  Terms terms;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string here = at + "/" + std::to_string(k);
    const json& pair = j[k];
    if (!pair.is_array() || pair.size() != 2) throw SchemaError(here, "expected [basis_index, scalar]");
    const auto idx = read_uint(pair[0], here + "/0", 0, a->rank() == 0 ? 0 : a->rank() - 1);
    terms.push_back({static_cast<std::size_t>(idx), read_big(pair[1], here + "/1")});
  }
  return Element::from_terms(a, std::move(terms));
}

json domain_to_json(const MapDomain& d) {
  if (d.is_whole()) return json{{"algebra", descriptor_to_json(d.ambient()->descriptor())}};
  json basis = json::array();
  for (const auto& b : d.basis()) basis.push_back(element_to_json(b));
  return json{{"subspace", d.tag()}, {"of", descriptor_to_json(d.ambient()->descriptor())}, {"basis", basis}};
}

json map_to_json(const LinMap& f) {
  json images = json::array();
  for (const auto& x : f.images()) images.push_back(element_to_json(x));
  return json{{"domain", domain_to_json(*f.domain())},
              {"codomain", descriptor_to_json(f.codomain()->descriptor())},
              {"images", images}};
}

json report_to_json(const CheckReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    json inputs = json::array();
    for (const auto& x : v.inputs) inputs.push_back(element_to_json(x));
    violations.push_back(
        json{{"identity", v.identity}, {"inputs", inputs}, {"lhs", element_to_json(v.lhs)}, {"rhs", element_to_json(v.rhs)}});
  }
  json counts = json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  json out{{"check", r.check}, {"pass", r.pass}, {"violations", violations}, {"counts", counts}};
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

json checks_to_json(const CheckList& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back(report_to_json(c));
  return out;
}

}  // namespace trialg
