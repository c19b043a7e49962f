//
// Copyright 2026 The lenslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "support.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lenslab/pushout.hpp"
#include "lenslab/universe.hpp"

namespace lenslab::testing {

namespace {

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

CategoryPtr random_preorder(Rng& rng, std::size_t n, double edge_probability) {
  std::vector<std::string> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back("o" + std::to_string(i));
  std::vector<GraphPresentation::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng, edge_probability)) {
        edges.push_back({"e" + std::to_string(i) + std::to_string(j), nodes[i], nodes[j]});
      }
    }
  }
  return preorder(nodes, edges, "P" + std::to_string(n));
}

CategoryPtr random_base(Rng& rng, std::size_t max_objects) {
  static const auto extras = [] {
    std::vector<CategoryPtr> out;
    for (const auto& c : standard_universe(1)) {
      if (!c->is_thin()) out.push_back(c);
    }
    for (const auto& c : standard_universe(2)) {
      if (!c->is_thin() && c->num_objects() == 2) out.push_back(c);
    }
    return out;
  }();
  if (coin(rng, 0.25)) {
    std::vector<CategoryPtr> fit;
    for (const auto& c : extras) {
      if (c->num_objects() <= max_objects) fit.push_back(c);
    }
    if (!fit.empty()) return fit[pick(rng, fit.size())];
  }
  return random_preorder(rng, 1 + pick(rng, max_objects));
}

FunctorMap coslice_projection(const CategoryPtr& cp, ObjId x) {
  const auto& c = *cp;
  const auto out = c.out(x);
  std::vector<std::uint32_t> index(c.num_morphisms(), kNone);
  std::vector<std::string> names;
  std::vector<ObjId> obj_map;
  for (MorId f : out) {
    index[f.value] = static_cast<std::uint32_t>(names.size());
    names.push_back(c.name(x) + "/" + c.name(f));
    obj_map.push_back(c.tgt(f));
  }
  // Morphisms (f, g): f -> g.f.
  std::vector<FinCategory::Morphism> mors;
  std::vector<std::pair<MorId, MorId>> pairs;
  std::vector<MorId> ids(names.size());
  std::vector<MorId> mor_map;
  for (MorId f : out) {
    for (MorId g : c.out(c.tgt(f))) {
      const ObjId s{index[f.value]};
      const ObjId t{index[c.compose(g, f).value]};
      if (c.is_identity(g)) ids[s.value] = MorId{static_cast<std::uint32_t>(mors.size())};
      mors.push_back({s, t, names[s.value] + ">" + c.name(g)});
      pairs.emplace_back(f, g);
      mor_map.push_back(g);
    }
  }
  const std::size_t m = mors.size();
  std::vector<std::uint32_t> table(m * m, kNone);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto [f1, g1] = pairs[i];
      const auto [f2, g2] = pairs[j];
      if (c.compose(g1, f1) != f2) continue;
      const MorId gg = c.compose(g2, g1);
      for (std::size_t k = 0; k < m; ++k) {
        if (pairs[k].first == f1 && pairs[k].second == gg) table[j * m + i] = static_cast<std::uint32_t>(k);
      }
    }
  }
  auto slice = std::make_shared<FinCategory>(std::move(names), std::move(mors), std::move(ids),
                                             std::move(table));
  slice->set_label(c.name(x) + "/" + c.label());
  return FunctorMap(slice, cp, std::move(obj_map), std::move(mor_map));
}

FunctorMap random_upset_inclusion(Rng& rng, const CategoryPtr& cp) {
  const auto& c = *cp;
  std::vector<bool> objs(c.num_objects(), false);
  objs[pick(rng, c.num_objects())] = true;
  for (ObjId x : c.objects()) {
    if (coin(rng, 0.3)) objs[x.value] = true;
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (MorId f : c.morphisms()) {
      if (objs[c.src(f).value] && !objs[c.tgt(f).value]) {
        objs[c.tgt(f).value] = true;
        grew = true;
      }
    }
  }
  std::vector<bool> mors(c.num_morphisms());
  for (MorId f : c.morphisms()) mors[f.value] = objs[c.src(f).value];
  return make_subcategory(cp, objs, mors, "U").inclusion;
}

FunctorMap random_dopf(Rng& rng, const CategoryPtr& c, std::size_t max_source) {
  auto component = [&]() {
    if (coin(rng)) return random_upset_inclusion(rng, c);
    return coslice_projection(c, ObjId{static_cast<std::uint32_t>(pick(rng, c->num_objects()))});
  };
  for (;;) {
    FunctorMap f = component();
    if (f.src().num_objects() > max_source) continue;
    if (coin(rng, 0.4)) {
      FunctorMap g = component();
      if (f.src().num_objects() + g.src().num_objects() <= max_source) {
        const Coproduct sum = coproduct(f.src_ptr(), g.src_ptr());
        return copair_coproduct(sum, f, g);
      }
    }
    return f;
  }
}

FunctorMap random_cosieve_from(Rng& rng, const CategoryPtr& ap, std::size_t extra) {
  const auto& a = *ap;
  const auto na = static_cast<std::uint32_t>(a.num_objects());
  const auto ma = static_cast<std::uint32_t>(a.num_morphisms());
  std::vector<std::string> names = a.object_names();
  for (std::size_t i = 0; i < extra; ++i) names.push_back("n" + std::to_string(i));
  uniquify_names(names);

  // rep[i]: the object of a whose representable gives hom(n_i, -), or kNone.
  std::vector<std::uint32_t> rep(extra, kNone);
  for (auto& r : rep) {
    if (coin(rng, 0.8)) r = static_cast<std::uint32_t>(pick(rng, na));
  }
  const bool link = extra == 2 && coin(rng, 0.5);
  if (link) rep[0] = rep[1];

  std::vector<FinCategory::Morphism> mors = a.morphism_data();
  std::vector<MorId> ids = a.identity_data();
  std::vector<std::uint32_t> new_id(extra);
  for (std::size_t i = 0; i < extra; ++i) {
    new_id[i] = static_cast<std::uint32_t>(mors.size());
    ids.push_back(MorId{new_id[i]});
    mors.push_back({ObjId{na + static_cast<std::uint32_t>(i)}, ObjId{na + static_cast<std::uint32_t>(i)},
                    "id_" + names[na + i]});
  }
  std::uint32_t link_id = kNone;
  if (link) {
    link_id = static_cast<std::uint32_t>(mors.size());
    mors.push_back({ObjId{na}, ObjId{na + 1}, "l"});
  }
  // into[i][m]: the arrow n_i -> tgt m standing for m: rep_i -> tgt m.
  std::vector<std::vector<std::uint32_t>> into(extra, std::vector<std::uint32_t>(ma, kNone));
  for (std::size_t i = 0; i < extra; ++i) {
    if (rep[i] == kNone) continue;
    for (MorId m : a.out(ObjId{rep[i]})) {
      into[i][m.value] = static_cast<std::uint32_t>(mors.size());
      mors.push_back({ObjId{na + static_cast<std::uint32_t>(i)}, a.tgt(m),
                      names[na + i] + ">" + a.name(m)});
    }
  }
  const std::size_t m = mors.size();
  std::vector<std::uint32_t> table(m * m, kNone);
  auto set = [&](std::uint32_t g, std::uint32_t f, std::uint32_t r) { table[g * m + f] = r; };
  for (MorId g : a.morphisms()) {
    for (MorId f : a.morphisms()) {
      if (auto r = a.try_compose(g, f)) set(g.value, f.value, r->value);
    }
  }
  for (std::size_t i = 0; i < extra; ++i) {
    set(new_id[i], new_id[i], new_id[i]);
    for (MorId x : a.morphisms()) {
      const std::uint32_t e = into[i][x.value];
      if (e == kNone) continue;
      set(e, new_id[i], e);
      set(a.identity(a.tgt(x)).value, e, e);
      for (MorId y : a.out(a.tgt(x))) set(y.value, e, into[i][a.compose(y, x).value]);
    }
  }
  if (link) {
    set(link_id, new_id[0], link_id);
    set(new_id[1], link_id, link_id);
    for (MorId x : a.morphisms()) {
      if (into[1][x.value] != kNone) set(into[1][x.value], link_id, into[0][x.value]);
    }
  }
  auto b = std::make_shared<FinCategory>(std::move(names), std::move(mors), std::move(ids),
                                         std::move(table));
  b->set_label("B");
  std::vector<ObjId> om;
  for (ObjId x : a.objects()) om.push_back(x);
  std::vector<MorId> mm;
  for (MorId f : a.morphisms()) mm.push_back(f);
  return FunctorMap(ap, b, std::move(om), std::move(mm));
}

std::optional<Lens> random_lens(Rng& rng, const CategoryPtr& src, const CategoryPtr& tgt) {
  std::vector<Lens> all;
  for_each_lens(src, tgt, [&](const Lens& l) {
    all.push_back(l);
    return all.size() < 4096;
  });
  if (all.empty()) return std::nullopt;
  return all[pick(rng, all.size())];
}

bool naive_lawful(const Lens& l) {
  const auto& a = l.src();
  const auto& b = l.tgt();
  const auto& get = l.get();
  for (ObjId x : a.objects()) {
    for (MorId u : b.morphisms()) {
      const auto p = l.try_put(x, u);
      if (b.src(u) != get(x)) {
        if (p) return false;
        continue;
      }
      if (!p || p->value >= a.num_morphisms()) return false;
      if (a.src(*p) != x || get(*p) != u) return false;                         // PutGet
      if (b.is_identity(u) && *p != a.identity(x)) return false;               // PutId
    }
  }
  for (ObjId x : a.objects()) {
    for (MorId u : b.out(get(x))) {
      const MorId p = l.put(x, u);
      for (MorId v : b.out(b.tgt(u))) {
        const MorId q = l.put(a.tgt(p), v);
        if (l.put(x, b.compose(v, u)) != a.compose(q, p)) return false;        // PutPut
      }
    }
  }
  return true;
}

std::string corpus_dir() {
  if (const char* env = std::getenv("LENSLAB_CORPUS")) return env;
  return LENSLAB_TEST_CORPUS_DIR;
}

std::vector<CorpusEntry> load_corpus() {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(corpus_dir())) {
    if (e.path().extension() == ".lns") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    out.push_back({f.stem().string(), parse_workspace(ss.str())});
  }
  return out;
}

std::vector<NamedLens> corpus_lenses(const std::vector<CorpusEntry>& corpus) {
  std::vector<NamedLens> out;
  for (const auto& e : corpus) {
    for (const auto& d : e.workspace.lenses) out.push_back({e.file + ":" + d.name, *d.lens});
    for (const auto& d : e.workspace.functors) {
      if (is_discrete_opfibration(*d.functor)) {
        out.push_back({e.file + ":" + d.name, lens_from_dopf(*d.functor)});
      }
    }
  }
  return out;
}

}  // namespace lenslab::testing
