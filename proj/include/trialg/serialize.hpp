#pragma once

// JSON forms of rings, descriptors, elements, maps and reports. Scalars are
// decimal strings so arbitrary precision survives any JSON reader.

#include "trialg/decompose.hpp"

#include <json.hpp>

namespace trialg {

using json = nlohmann::ordered_json;

/// A scenario or input that does not match the schema; `pointer` is a JSON
/// pointer to the offending field.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : std::runtime_error((pointer.empty() ? std::string("/") : pointer) + ": " + message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

json ring_to_json(const ScalarRing& ring);
ScalarRing ring_from_json(const json& j, const std::string& at);

json descriptor_to_json(const AlgebraDescriptor& d);
AlgebraDescriptor descriptor_from_json(const json& j, const std::string& at);

json scalar_to_json(const mpz_class& v);
json element_to_json(const Element& x);
Element element_from_json(const AlgebraPtr& a, const json& j, const std::string& at);

json domain_to_json(const MapDomain& d);
json map_to_json(const LinMap& f);
json report_to_json(const CheckReport& r);
json checks_to_json(const CheckList& checks);

/// Reads an unsigned integer field, with range checks reported as SchemaError.
std::uint64_t read_uint(const json& j, const std::string& at, std::uint64_t lo, std::uint64_t hi);

}  // namespace trialg
