#pragma once

// JSON reading and writing for fields, groups, instances, manifests and
// reports.  Structural problems in input documents raise ValidationError.

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "tga/characterization.hpp"

namespace tga::io {

using Json = nlohmann::json;

FieldPtr parse_field(const Json& j);
Json field_to_json(const Field& f);

/// An array of n digits, or a bare integer when n == 1.
Elt parse_element(const Field& f, const Json& j);
Json element_to_json(const Field& f, Elt a);

/// {"family": name, "params": [...]} or {"table": [[...]]}.
GroupPtr parse_group(const Json& j);
Json group_to_json(const Group& g);

struct Instance {
  std::string id;
  Json group_spec;
  TwistingData twisting;
};

/// {"group", "field", "sigma"?, "lambda"?, "id"?}; lambda defaults to 1.
Instance parse_instance(const Json& j);
Json instance_to_json(const std::string& id, const Json& group_spec, const TwistingData& t);

Json read_json_file(const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path);

/// JSON array of paths or of {"path", "id"?, "engel_n"?, "engel_m"?};
/// relative paths resolve against the manifest's directory.
std::vector<CorpusInstance> load_manifest(const std::filesystem::path& path);

/// Sparse map from group index to field element.
Json algebra_element_to_json(const Field& f, const AlgebraElement& x);
Json validation_to_json(const TwistingData& t, const ValidationReport& r);
Json series_to_json(const SeriesReport& s);
Json engel_to_json(const Field& f, const EngelReport& r);
Json predicate_to_json(const PredicateResult& r);
Json structure_constants_to_json(const StructureConstants& s);
Json verdict_to_json(const Field& f, const InstanceVerdict& v);

}  // namespace tga::io
