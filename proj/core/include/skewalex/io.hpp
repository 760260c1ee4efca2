#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "skewalex/invariants.hpp"

namespace skewalex::io {

using nlohmann::json;

struct TripleSpec {
  std::string pair1, pair2;
  TripleMap map;
};

/// One self-describing computation input: a presentation (or a raw chain
/// complex), the class phi, a field, and optional representation / pair /
/// triple data.
struct InputDocument {
  FieldSpec field = FieldSpec::rationals();
  std::optional<GroupPresentation> presentation;
  std::optional<CohomologyClass> phi;
  std::optional<LinearRep> rep;
  std::vector<AdmissiblePair> pairs;
  std::optional<TripleSpec> triple;
  std::optional<FreeChainComplex> complex;

  bool knot = false;
  bool fibered = false;
  std::optional<mpq_class> declared_norm;

  SpaceMode mode() const;
  const AdmissiblePair& pair_named(const std::string& name) const;
};

InputDocument parse_input(const json& doc);
InputDocument parse_input_file(const std::string& path);
/// Normalized re-serialization; parse(serialize(parse(d))) == parse(d).
json serialize_input(const InputDocument& doc);

json field_to_json(const FieldSpec& spec);
FieldSpec field_from_json(const json& j);

std::string rational_to_string(const mpq_class& q);
mpq_class rational_from_string(const std::string& s);

/// Laurent polynomial as [[exponent, coefficient], ...], coefficient
/// encoding per field kind.
json poly_to_json(const SkewPoly& p);
SkewPoly poly_from_json(const FieldSpec& spec, const json& j);

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldSpec& spec, const json& j);

}  // namespace skewalex::io
