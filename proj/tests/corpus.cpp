#include "corpus.hpp"

namespace tga::testing {

namespace {

GroupPtr share(Group g) { return std::make_shared<const Group>(std::move(g)); }

}  // namespace

std::vector<NamedGroup> corpus_groups() {
  std::vector<NamedGroup> out;
  for (unsigned k = 1; k <= 8; ++k) out.push_back({"C" + std::to_string(k), share(cyclic(k))});
  out.push_back({"V4", share(klein_four())});
  out.push_back({"D6", share(dihedral(6))});
  out.push_back({"D8", share(dihedral(8))});
  out.push_back({"Q8", share(quaternion8())});
  out.push_back({"C2xC4", share(direct_product(cyclic(2), cyclic(4)))});
  out.push_back({"C2xC2xC2", share(direct_product(cyclic(2), klein_four()))});
  return out;
}

std::vector<FieldPtr> corpus_fields() { return {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)}; }

const std::vector<CorpusInstance>& corpus() {
  static const std::vector<CorpusInstance> instances = [] {
    std::vector<CorpusInstance> out;
    const auto groups = corpus_groups();
    for (const auto& ng : groups)
      for (const auto& f : corpus_fields()) {
        EnumerateOptions eo;
        eo.dedup = true;
        eo.limit = 50;
        const auto en = enumerate_cocycles(ng.group, f, eo);
        const std::string base = ng.name + "/GF" + std::to_string(f->order());
        for (std::size_t i = 0; i < en.cocycles.size(); ++i)
          out.push_back({base + "/" + std::to_string(i), en.cocycles[i]});
      }
    // Frobenius action of GF(4) through each index-2 subgroup.
    const FieldPtr f4 = Field::make(2, 2);
    for (const auto& ng : groups) {
      const Group& g = *ng.group;
      for (const auto& h : normal_subgroups(g)) {
        if (2 * h.size() != g.order()) continue;
        std::vector<unsigned> sigma(g.order(), 1);
        for (Index x : h.members) sigma[x] = 0;
        std::string id = ng.name + "/GF4/sigma";
        for (Index x : h.members) id += "." + std::to_string(x);
        TwistingData t(ng.group, f4, sigma, std::vector<Elt>(g.order() * g.order(), 1));
        t.validate();
        out.push_back({id, std::move(t)});
      }
    }
    return out;
  }();
  return instances;
}

TwistingData klein_quaternion_cocycle() {
  const FieldPtr f = Field::make(3, 1);
  const std::vector<Elt> lambda = {1, 1, 1, 1,  //
                                   1, 2, 1, 2,  //
                                   1, 2, 2, 1,  //
                                   1, 1, 2, 2};
  TwistingData t(share(klein_four()), f, std::vector<unsigned>(4, 0), lambda);
  t.validate();
  return t;
}

}  // namespace tga::testing
