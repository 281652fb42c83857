#include "tga/io.hpp"

#include <fstream>

#include "tga/error.hpp"

namespace tga::io {

namespace {

template <class T>
T get_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ValidationError(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0) throw ValidationError(std::string(what) + " must be non-negative");
  return static_cast<T>(v);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

template <class T>
Json optional_to_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

FieldPtr parse_field(const Json& j) {
  const auto p = get_int<std::uint32_t>(require(j, "p"), "p");
  const auto n = j.contains("n") ? get_int<unsigned>(j.at("n"), "n") : 1u;
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus") && !j.at("modulus").is_null()) {
    if (!j.at("modulus").is_array()) throw ValidationError("modulus must be an array");
    modulus.emplace();
    for (const auto& c : j.at("modulus")) modulus->push_back(get_int<std::uint32_t>(c, "modulus coefficient"));
  }
  return Field::make(p, n, modulus);
}

Json field_to_json(const Field& f) {
  return Json{{"p", f.characteristic()}, {"n", f.degree()}, {"modulus", f.modulus()}};
}

Elt parse_element(const Field& f, const Json& j) {
  if (j.is_number_integer()) {
    if (f.degree() != 1) throw ValidationError("bare integers denote elements only over prime fields");
    const auto v = get_int<std::uint32_t>(j, "field element");
    if (v >= f.characteristic()) throw ValidationError("field element out of range");
    return v;
  }
  if (!j.is_array() || j.size() != f.degree())
    throw ValidationError("field element must be an array of " + std::to_string(f.degree()) + " digits");
  std::vector<std::uint32_t> digits;
  for (const auto& d : j) digits.push_back(get_int<std::uint32_t>(d, "field digit"));
  return f.from_coords(digits);
}

Json element_to_json(const Field& f, Elt a) {
  if (f.degree() == 1) return Json(a);
  return Json(f.coords(a));
}

GroupPtr parse_group(const Json& j) {
  if (j.is_object() && j.contains("table")) {
    const auto& t = j.at("table");
    if (!t.is_array()) throw ValidationError("group table must be an array of rows");
    std::vector<std::vector<Index>> rows;
    for (const auto& row : t) {
      if (!row.is_array()) throw ValidationError("group table rows must be arrays");
      std::vector<Index> r;
      for (const auto& e : row) r.push_back(get_int<Index>(e, "table entry"));
      rows.push_back(std::move(r));
    }
    std::vector<std::string> labels;
    if (j.contains("labels"))
      for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    return std::make_shared<const Group>(Group::from_table(std::move(rows), std::move(labels)));
  }
  const auto& fam = require(j, "family");
  if (!fam.is_string()) throw ValidationError("group family must be a string");
  const std::string family = fam.get<std::string>();
  const Json params = j.contains("params") ? j.at("params") : Json::array();
  if (!params.is_array()) throw ValidationError("group params must be an array");
  auto param = [&](std::size_t i) {
    if (i >= params.size()) throw ValidationError("group family \"" + family + "\" needs more parameters");
    return get_int<unsigned>(params[i], "group parameter");
  };
  if (family == "cyclic") return std::make_shared<const Group>(cyclic(param(0)));
  if (family == "dihedral") return std::make_shared<const Group>(dihedral(param(0)));
  if (family == "quaternion") {
    if (!params.empty() && param(0) != 8) throw ValidationError("only the quaternion group of order 8 is supported");
    return std::make_shared<const Group>(quaternion8());
  }
  if (family == "klein_four") return std::make_shared<const Group>(klein_four());
  if (family == "symmetric") return std::make_shared<const Group>(symmetric(param(0)));
  if (family == "direct_product") {
    if (params.size() != 2) throw ValidationError("direct_product takes two group objects");
    return std::make_shared<const Group>(direct_product(*parse_group(params[0]), *parse_group(params[1])));
  }
  throw ValidationError("unknown group family \"" + family + "\"");
}

Json group_to_json(const Group& g) { return Json{{"table", g.table()}, {"labels", g.labels()}}; }

Instance parse_instance(const Json& j) {
  if (!j.is_object()) throw ValidationError("instance must be a JSON object");
  const Json& gspec = require(j, "group");
  GroupPtr g = parse_group(gspec);
  FieldPtr f = parse_field(require(j, "field"));
  const std::size_t n = g->order();
  std::vector<unsigned> sigma(n, 0);
  if (j.contains("sigma") && !j.at("sigma").is_null()) {
    const auto& s = j.at("sigma");
    if (!s.is_array() || s.size() != n) throw ValidationError("sigma must list one exponent per group element");
    for (std::size_t i = 0; i < n; ++i) sigma[i] = get_int<unsigned>(s[i], "sigma entry");
  }
  std::vector<Elt> lambda(n * n, 1);
  if (j.contains("lambda") && !j.at("lambda").is_null()) {
    const auto& l = j.at("lambda");
    if (!l.is_array() || l.size() != n) throw ValidationError("lambda must be a |G| x |G| array");
    for (std::size_t a = 0; a < n; ++a) {
      if (!l[a].is_array() || l[a].size() != n) throw ValidationError("lambda must be a |G| x |G| array");
      for (std::size_t b = 0; b < n; ++b) lambda[a * n + b] = parse_element(*f, l[a][b]);
    }
  }
  std::string id = j.contains("id") && j.at("id").is_string() ? j.at("id").get<std::string>() : "";
  return Instance{std::move(id), gspec, TwistingData(g, f, std::move(sigma), std::move(lambda))};
}

Json instance_to_json(const std::string& id, const Json& group_spec, const TwistingData& t) {
  const Field& f = t.field();
  Json lambda = Json::array();
  for (Index a = 0; a < t.order(); ++a) {
    Json row = Json::array();
    for (Index b = 0; b < t.order(); ++b) row.push_back(element_to_json(f, t.lambda(a, b)));
    lambda.push_back(std::move(row));
  }
  Json j{{"group", group_spec}, {"field", field_to_json(f)}, {"sigma", t.sigma_table()}, {"lambda", lambda}};
  if (!id.empty()) j["id"] = id;
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

Instance load_instance(const std::filesystem::path& path) {
  try {
    Instance inst = parse_instance(read_json_file(path));
    if (inst.id.empty()) inst.id = path.stem().string();
    return inst;
  } catch (const Json::exception& e) {
    throw ValidationError(path.string() + ": " + e.what());
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path.string(), 0) == 0) throw;
    throw ValidationError(path.string() + ": " + msg);
  }
}

std::vector<CorpusInstance> load_manifest(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  if (!j.is_array()) throw ValidationError(path.string() + ": manifest must be a JSON array");
  const auto dir = path.parent_path();
  std::vector<CorpusInstance> out;
  for (const auto& e : j) {
    std::string rel;
    CorpusInstance ci{"", TwistingData(std::make_shared<const Group>(cyclic(1)), Field::make(2, 1)), 0, 1};
    if (e.is_string()) {
      rel = e.get<std::string>();
    } else if (e.is_object()) {
      rel = require(e, "path").get<std::string>();
      if (e.contains("engel_n")) ci.engel_n = get_int<unsigned>(e.at("engel_n"), "engel_n");
      if (e.contains("engel_m")) ci.engel_m = get_int<unsigned>(e.at("engel_m"), "engel_m");
      if (e.contains("id")) ci.id = e.at("id").get<std::string>();
    } else {
      throw ValidationError(path.string() + ": manifest entries must be paths or objects");
    }
    std::filesystem::path p = rel;
    if (p.is_relative()) p = dir / p;
    Instance inst = load_instance(p);
    if (ci.id.empty()) ci.id = inst.id;
    ci.twisting = std::move(inst.twisting);
    out.push_back(std::move(ci));
  }
  return out;
}

Json algebra_element_to_json(const Field& f, const AlgebraElement& x) {
  Json j = Json::object();
  for (Index g : x.support()) j[std::to_string(g)] = element_to_json(f, x.coeffs[g]);
  return j;
}

Json validation_to_json(const TwistingData& t, const ValidationReport& r) {
  Json j{{"ok", r.ok()}, {"kind", to_string(r.kind)}};
  if (!r.ok()) {
    j["message"] = r.message;
    switch (r.kind) {
      case ValidationReport::Kind::Cocycle: j["triple"] = {r.a, r.b, r.c}; break;
      case ValidationReport::Kind::SigmaRange: j["element"] = r.a; break;
      default: j["pair"] = {r.a, r.b}; break;
    }
    (void)t;
  }
  return j;
}

Json series_to_json(const SeriesReport& s) {
  Json dims = Json::array();
  bool f_linear = true;
  for (auto d : s.prime_dims) f_linear = f_linear && d % s.degree == 0;
  for (auto d : s.prime_dims) dims.push_back(f_linear ? d / s.degree : d);
  return Json{{"kind", to_string(s.kind)},
              {"dims", dims},
              {"dims_over", f_linear ? "F" : "F_p"},
              {"prime_dims", s.prime_dims},
              {"terminated", s.terminated},
              {"stabilized", s.stabilized},
              {"index", optional_to_json(s.index)}};
}

Json engel_to_json(const Field& f, const EngelReport& r) {
  Json j{{"n", r.n},
         {"m", r.m},
         {"strategy", to_string(r.strategy)},
         {"holds", r.holds},
         {"b_checked", r.b_checked},
         {"minimal_n", optional_to_json(r.minimal_n)}};
  if (r.strategy == EngelStrategy::Randomized) j["seed"] = r.seed;
  if (r.counterexample)
    j["counterexample"] = {{"a", algebra_element_to_json(f, r.counterexample->first)},
                           {"b", algebra_element_to_json(f, r.counterexample->second)}};
  else
    j["counterexample"] = nullptr;
  return j;
}

Json predicate_to_json(const PredicateResult& r) {
  Json clauses = Json::array();
  for (const auto& c : r.clauses) clauses.push_back({{"clause", c.name}, {"holds", c.value}});
  Json j{{"value", r.value}, {"clauses", clauses}};
  if (r.witness_b) j["witness_b"] = r.witness_b->members;
  return j;
}

Json structure_constants_to_json(const StructureConstants& s) {
  Json out = Json::array();
  for (std::size_t i = 0; i < s.dim; ++i) {
    Json plane = Json::array();
    for (std::size_t j = 0; j < s.dim; ++j) {
      Json row = Json::array();
      for (std::size_t k = 0; k < s.dim; ++k) row.push_back(element_to_json(*s.field, s.at(i, j, k)));
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

Json verdict_to_json(const Field& f, const InstanceVerdict& v) {
  Json agreement = Json::object();
  for (const auto& [name, ok] : v.agreement) agreement[name] = ok;
  Json engel{{"exhaustive", v.engel.exhaustive},
             {"b_checked", v.engel.b_checked},
             {"engel", v.engel.engel},
             {"minimal_n", optional_to_json(v.engel.minimal_n)},
             {"holds_at_dim_plus_one", v.engel.holds_at_budget},
             {"n", v.engel_n},
             {"m", v.engel_m},
             {"nm_holds", v.engel.nm_holds}};
  if (!v.engel.exhaustive) engel["seed"] = v.engel.seed;
  if (v.engel.counterexample)
    engel["counterexample"] = {{"a", algebra_element_to_json(f, v.engel.counterexample->first)},
                               {"b", algebra_element_to_json(f, v.engel.counterexample->second)}};
  return Json{{"id", v.id},
              {"group_order", v.group_order},
              {"field", {{"p", v.p}, {"n", v.degree}}},
              {"sigma_trivial", v.sigma_trivial},
              {"gamma", {{"prime_dims", v.gamma_dims}, {"index", optional_to_json(v.gamma_index)}}},
              {"lower", {{"prime_dims", v.lower_dims}, {"index", optional_to_json(v.lower_index)}}},
              {"upper", {{"prime_dims", v.upper_dims}, {"index", optional_to_json(v.upper_index)}}},
              {"corollary1", predicate_to_json(v.corollary1)},
              {"theorem1", predicate_to_json(v.theorem1)},
              {"theorem2", predicate_to_json(v.theorem2)},
              {"corollary2", predicate_to_json(v.corollary2)},
              {"engel", engel},
              {"agreement", agreement},
              {"notes", v.notes},
              {"all_agree", v.all_agree},
              {"elapsed_ms", v.elapsed_ms}};
}

}  // namespace tga::io
