// Command-line front end: validate, analyze, series, engel, untwist,
// quotient, enumerate, oracle.
//
// Exit codes: 0 success, 1 mathematical negative or disagreement, 2 input
// error, 3 internal consistency failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tga/characterization.hpp"
#include "tga/error.hpp"
#include "tga/io.hpp"

namespace {

using tga::io::Json;

struct RunConfig {
  std::string input;
  std::string out;
  bool json = false;
  unsigned max_steps = 0;
  unsigned engel_n = 0;
  unsigned engel_m = 1;
  std::string strategy = "auto";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  std::size_t limit = 0;
  bool dedup = false;
  std::uint64_t budget = 1ull << 20;
  std::string subgroup;
};

constexpr int kOk = 0, kNegative = 1, kInput = 2, kInternal = 3;

void emit(const RunConfig& cfg, const Json& report, const std::string& human) {
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    if (!f) throw tga::ValidationError("cannot write " + cfg.out);
    f << report.dump(2) << "\n";
  }
  if (cfg.json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << human;
}

tga::io::Instance load(const RunConfig& cfg) {
  if (cfg.input.empty()) throw tga::ValidationError("--input is required");
  return tga::io::load_instance(cfg.input);
}

tga::EngelOptions engel_options(const RunConfig& cfg, const tga::CrossedProduct& a) {
  tga::EngelOptions eo;
  eo.n = cfg.engel_n == 0 ? static_cast<unsigned>(a.order() + 1) : cfg.engel_n;
  eo.m = cfg.engel_m;
  eo.samples = cfg.samples;
  eo.seed = cfg.seed;
  if (cfg.strategy == "exhaustive") {
    eo.strategy = tga::EngelStrategy::Exhaustive;
  } else if (cfg.strategy == "randomized") {
    eo.strategy = tga::EngelStrategy::Randomized;
  } else {
    std::uint64_t pairs = 1;
    for (std::size_t i = 0; i < 2 * a.order() && pairs <= eo.pair_budget; ++i) pairs *= a.field().order();
    eo.strategy = pairs <= eo.pair_budget ? tga::EngelStrategy::Exhaustive : tga::EngelStrategy::Randomized;
  }
  return eo;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string index_text(const std::optional<unsigned>& i) { return i ? std::to_string(*i) : "none"; }

int cmd_validate(const RunConfig& cfg) {
  auto inst = load(cfg);
  const auto& r = inst.twisting.validate();
  std::ostringstream h;
  h << inst.id << ": " << (r.ok() ? "valid" : "invalid: " + r.message) << "\n";
  emit(cfg, tga::io::validation_to_json(inst.twisting, r), h.str());
  return r.ok() ? kOk : kNegative;
}

Json series_block(const tga::CrossedProduct& a, unsigned max_steps) {
  return Json{{"gamma", tga::io::series_to_json(tga::gamma_series(a, max_steps))},
              {"lower", tga::io::series_to_json(tga::lower_lie_powers(a, max_steps))},
              {"upper", tga::io::series_to_json(tga::upper_lie_powers(a, max_steps))}};
}

int cmd_analyze(const RunConfig& cfg) {
  auto inst = load(cfg);
  const auto& vr = inst.twisting.validate();
  if (!vr.ok()) {
    emit(cfg, Json{{"id", inst.id}, {"validation", tga::io::validation_to_json(inst.twisting, vr)}},
         inst.id + ": invalid: " + vr.message + "\n");
    return kNegative;
  }
  const tga::CrossedProduct a(inst.twisting);
  const tga::Field& f = a.field();
  Json report{{"id", inst.id}, {"validation", tga::io::validation_to_json(inst.twisting, vr)}};
  report["series"] = series_block(a, cfg.max_steps);
  report["commutative"] = a.is_commutative();
  const auto c1 = tga::corollary1_predicate(a);
  const auto t1 = tga::theorem1_predicate(a);
  const auto c2 = tga::corollary2_predicate(a);
  const auto eo = engel_options(cfg, a);
  const auto t2 = tga::theorem2_predicate(a, eo.n, eo.m);
  report["predicates"] = {{"corollary1", tga::io::predicate_to_json(c1)},
                          {"theorem1", tga::io::predicate_to_json(t1)},
                          {"theorem2", tga::io::predicate_to_json(t2)},
                          {"corollary2", tga::io::predicate_to_json(c2)}};
  if (a.twisting().sigma_trivial()) {
    const tga::TwistingData nt = a.twisting().is_normalized() ? a.twisting() : tga::normalize(a.twisting());
    const tga::CrossedProduct na(nt);
    report["normalized"] = a.twisting().is_normalized();
    report["W"] = tga::w_subgroup(nt).members;
    Json mu = Json::array();
    for (tga::Elt m : tga::twist_table(nt)) mu.push_back(tga::io::element_to_json(f, m));
    report["twist"] = mu;
    const auto cl = tga::untwisted_closure_check(na);
    Json wit = Json::array();
    for (const auto& w : cl.witnesses)
      wit.push_back({{"element", w.element}, {"gamma", tga::io::element_to_json(f, w.gamma)}, {"order", w.order}});
    report["untwisted_p_elements"] = {
        {"witnesses", wit},
        {"closed", cl.holds},
        {"note", "over a finite field every p-element has a witness, since x -> x^p is bijective"}};
    const auto cc = tga::commutator_condition_check(na);
    report["commutator_condition"] = {{"holds", cc.holds}, {"reason", cc.reason}};
    const auto su = tga::stably_untwisted_test(na);
    report["stably_untwisted"] = {{"value", su.stably_untwisted}, {"codimension", su.codimension}};
  }
  try {
    report["engel"] = tga::io::engel_to_json(f, tga::engel_check(a, eo));
  } catch (const tga::BudgetError& e) {
    report["engel"] = {{"error", e.what()}};
  }
  const auto lower = tga::lower_lie_powers(a, cfg.max_steps);
  std::ostringstream h;
  h << inst.id << ": |G| = " << a.order() << ", GF(" << f.order() << ")\n"
    << "  lower Lie nilpotent: " << yes_no(lower.index.has_value()) << " (index " << index_text(lower.index) << ")\n"
    << "  corollary1: " << c1.summary() << "\n"
    << "  theorem1:   " << t1.summary() << "\n"
    << "  corollary2: " << c2.summary() << "\n"
    << "  theorem2:   " << t2.summary() << "\n";
  emit(cfg, report, h.str());
  return kOk;
}

int cmd_series(const RunConfig& cfg) {
  auto inst = load(cfg);
  const tga::CrossedProduct a(inst.twisting);
  const Json s = series_block(a, cfg.max_steps);
  std::ostringstream h;
  for (const char* k : {"gamma", "lower", "upper"})
    h << k << ": dims " << s[k]["dims"].dump() << ", index " << s[k]["index"].dump() << "\n";
  emit(cfg, s, h.str());
  return kOk;
}

int cmd_engel(const RunConfig& cfg) {
  auto inst = load(cfg);
  const tga::CrossedProduct a(inst.twisting);
  const auto eo = engel_options(cfg, a);
  const auto r = tga::engel_check(a, eo);
  std::ostringstream h;
  h << "(" << r.n << "," << r.m << ")-Engel, " << tga::to_string(r.strategy) << ": "
    << (r.holds ? (r.strategy == tga::EngelStrategy::Exhaustive ? "holds" : "no counterexample in samples")
                : "fails")
    << " (" << r.b_checked << " values of b)\n";
  emit(cfg, tga::io::engel_to_json(a.field(), r), h.str());
  return r.holds ? kOk : kNegative;
}

int cmd_untwist(const RunConfig& cfg) {
  auto inst = load(cfg);
  const tga::CrossedProduct a(inst.twisting);
  const tga::Field& f = a.field();
  const auto d = tga::coboundary_solve(a.twisting());
  const auto su = tga::stably_untwisted_test(a);
  Json report{{"untwisted", d.has_value()},
              {"stably_untwisted", su.stably_untwisted},
              {"codimension_of_commutator_ideal", su.codimension}};
  if (d) {
    Json dj = Json::array();
    for (tga::Elt x : d->d) dj.push_back(tga::io::element_to_json(f, x));
    report["witness"] = dj;
  }
  if (su.stably_untwisted) report["commutative_quotient"] = tga::io::structure_constants_to_json(su.quotient);
  std::ostringstream h;
  h << "untwisted: " << yes_no(d.has_value()) << ", stably untwisted: " << yes_no(su.stably_untwisted) << "\n";
  emit(cfg, report, h.str());
  return d ? kOk : kNegative;
}

tga::Subgroup parse_subgroup(const tga::Group& g, const std::string& text) {
  std::vector<tga::Index> gens;
  Json j;
  try {
    j = Json::parse(text.front() == '[' ? text : "[" + text + "]");
  } catch (const Json::exception&) {
    throw tga::ValidationError("--subgroup must be a list of element indices");
  }
  for (const auto& e : j) {
    if (!e.is_number_unsigned() || e.get<std::size_t>() >= g.order())
      throw tga::ValidationError("--subgroup entries must be element indices");
    gens.push_back(e.get<tga::Index>());
  }
  return tga::generate_subgroup(g, gens);
}

int cmd_quotient(const RunConfig& cfg) {
  auto inst = load(cfg);
  const tga::CrossedProduct raw(inst.twisting);
  const tga::CrossedProduct a(raw.twisting().is_normalized() ? raw.twisting() : tga::normalize(raw.twisting()));
  if (cfg.subgroup.empty()) throw tga::ValidationError("--subgroup is required");
  const tga::Subgroup h = parse_subgroup(a.group(), cfg.subgroup);
  const auto ind = tga::induced_cocycle(a.twisting(), h);
  const auto qa = tga::quotient_algebra(a, tga::augmentation_ideal(a, h));
  const auto qi = tga::CrossedProduct(ind.twisting).structure_constants();
  const bool match = qa == qi;
  Json report{{"subgroup", h.members},
              {"transversal", ind.quotient.transversal},
              {"induced", tga::io::instance_to_json("", tga::io::group_to_json(ind.quotient.group), ind.twisting)},
              {"quotient_constants", tga::io::structure_constants_to_json(qa)},
              {"match", match}};
  std::ostringstream h_out;
  h_out << "F^lambda[G]/I(H) vs F^mu[G/H] (|G/H| = " << ind.quotient.group.order()
        << "): " << (match ? "structure constants match" : "MISMATCH") << "\n";
  emit(cfg, report, h_out.str());
  return match ? kOk : kNegative;
}

int cmd_enumerate(const RunConfig& cfg) {
  auto inst = load(cfg);
  tga::EnumerateOptions eo;
  eo.limit = cfg.limit;
  eo.dedup = cfg.dedup;
  eo.budget = cfg.budget;
  const auto res = tga::enumerate_cocycles(inst.twisting.group_ptr(), inst.twisting.field_ptr(), eo);
  Json files = Json::array();
  if (!cfg.out.empty()) {
    std::filesystem::create_directories(cfg.out);
    for (std::size_t i = 0; i < res.cocycles.size(); ++i) {
      const std::string id = inst.id + "_" + std::to_string(i);
      const auto path = std::filesystem::path(cfg.out) / (id + ".json");
      std::ofstream f(path);
      if (!f) throw tga::ValidationError("cannot write " + path.string());
      f << tga::io::instance_to_json(id, inst.group_spec, res.cocycles[i]).dump(2) << "\n";
      files.push_back(path.string());
    }
  }
  Json report{{"count", res.cocycles.size()},
              {"dedup", cfg.dedup},
              {"complete", res.complete},
              {"scanned", res.scanned},
              {"total_normalized_cocycles", res.total},
              {"files", files}};
  std::ostringstream h;
  h << res.cocycles.size() << (cfg.dedup ? " cohomology classes" : " normalized cocycles")
    << (res.complete ? "" : " (incomplete)") << "\n";
  if (!res.complete && res.scanned < res.total && (cfg.limit == 0 || res.cocycles.size() < cfg.limit))
    h << "budget exceeded: " << res.total << " cocycles need scanning, budget " << cfg.budget << "\n";
  if (cfg.json) std::cout << report.dump(2) << "\n";
  else std::cout << h.str();
  const bool over_budget = !res.complete && (cfg.limit == 0 || res.cocycles.size() < cfg.limit);
  return over_budget ? kNegative : kOk;
}

int cmd_oracle(const RunConfig& cfg) {
  if (cfg.input.empty()) throw tga::ValidationError("--input manifest is required");
  const auto corpus = tga::io::load_manifest(cfg.input);
  tga::OracleOptions oo;
  oo.samples = cfg.samples;
  oo.seed = cfg.seed;
  const auto verdicts = tga::oracle_compare(corpus, oo);
  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) throw tga::ValidationError("cannot write " + cfg.out);
  }
  std::size_t agree = 0;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const Json line = tga::io::verdict_to_json(corpus[i].twisting.field(), verdicts[i]);
    if (file.is_open()) file << line.dump() << "\n";
    if (cfg.json) std::cout << line.dump() << "\n";
    if (verdicts[i].all_agree) {
      ++agree;
    } else {
      const auto& t = corpus[i].twisting;
      std::cerr << "disagreement: " << verdicts[i].id << "\n"
                << tga::io::instance_to_json(verdicts[i].id, tga::io::group_to_json(t.group()), t).dump() << "\n";
      for (const auto& [name, ok] : verdicts[i].agreement)
        if (!ok) std::cerr << "  failed: " << name << "\n";
      for (const auto& n : verdicts[i].notes) std::cerr << "  note: " << n << "\n";
    }
  }
  if (!cfg.json) std::cout << agree << "/" << verdicts.size() << " instances agree\n";
  return agree == verdicts.size() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossed products and twisted group algebras over finite fields"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", cfg.input, "instance file (manifest for oracle)");
    sub->add_option("--out,-o", cfg.out, "output file (directory for enumerate)");
    sub->add_flag("--json", cfg.json, "print JSON instead of a summary");
    sub->add_option("--max-steps", cfg.max_steps, "series budget (default dim + 2)");
    sub->add_option("--engel-n", cfg.engel_n, "Engel length n (default dim + 1)");
    sub->add_option("--engel-m", cfg.engel_m, "Engel exponent m")->check(CLI::PositiveNumber);
    sub->add_option("--strategy", cfg.strategy, "exhaustive, randomized or auto")
        ->check(CLI::IsMember({"auto", "exhaustive", "randomized"}));
    sub->add_option("--samples", cfg.samples, "randomized Engel samples");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--limit", cfg.limit, "maximum number of enumerated cocycles");
    sub->add_flag("--dedup", cfg.dedup, "one cocycle per cohomology class");
  };
  struct Cmd {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
  };
  const Cmd cmds[] = {
      {"validate", "check the cocycle axioms", cmd_validate},
      {"analyze", "series, predicates and invariants", cmd_analyze},
      {"series", "lower and upper Lie power series", cmd_series},
      {"engel", "(n,m)-Engel check", cmd_engel},
      {"untwist", "coboundary and stably untwisted tests", cmd_untwist},
      {"quotient", "quotient by I(H) against the induced cocycle", cmd_quotient},
      {"enumerate", "enumerate normalized cocycles", cmd_enumerate},
      {"oracle", "compare predicates with brute force over a manifest", cmd_oracle},
  };
  int (*selected)(const RunConfig&) = nullptr;
  for (const auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    common(sub);
    if (std::string(c.name) == "quotient") sub->add_option("--subgroup", cfg.subgroup, "generators, e.g. [2,4]");
    if (std::string(c.name) == "enumerate") sub->add_option("--budget", cfg.budget, "maximum cocycles scanned");
    sub->callback([&selected, run = c.run] { selected = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  try {
    return selected(cfg);
  } catch (const tga::ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const tga::UsageError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const tga::DomainError& e) {
    std::cerr << "precondition not met: " << e.what() << "\n";
    return kNegative;
  } catch (const tga::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kNegative;
  } catch (const tga::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
