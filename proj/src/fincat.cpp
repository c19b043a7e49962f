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

#include "lenslab/fincat.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "lenslab/universe.hpp"

namespace lenslab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidPresentation: return "InvalidPresentation";
    case ErrorCode::kBoundExceeded: return "BoundExceeded";
    case ErrorCode::kCategoryMismatch: return "CategoryMismatch";
    case ErrorCode::kNotDiscreteOpfibration: return "NotDiscreteOpfibration";
    case ErrorCode::kNotCosieve: return "NotCosieve";
    case ErrorCode::kNotACocone: return "NotACocone";
    case ErrorCode::kNotMonic: return "NotMonic";
    case ErrorCode::kNotEpic: return "NotEpic";
    case ErrorCode::kSquareDoesNotCommute: return "SquareDoesNotCommute";
    case ErrorCode::kNotWellDefined: return "NotWellDefined";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kNotSurjectiveOnComposablePairs: return "NotSurjectiveOnComposablePairs";
    case ErrorCode::kNotACofork: return "NotACofork";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kResolutionError: return "ResolutionError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string Witness::get(const std::string& key) const {
  for (const auto& [k, v] : fields_) {
    if (k == key) return v;
  }
  return {};
}

// ---------------------------------------------------------------------------
// FinCategory
// ---------------------------------------------------------------------------

FinCategory::FinCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                         std::vector<MorId> identities, std::vector<std::uint32_t> table)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      table_(std::move(table)) {
  out_.resize(objects_.size());
  for (std::uint32_t i = 0; i < morphisms_.size(); ++i) {
    const auto s = morphisms_[i].src.value;
    if (s < out_.size()) out_[s].push_back(MorId{i});
  }
  for (std::uint32_t i = 0; i < objects_.size(); ++i) object_index_.emplace(objects_[i], i);
  for (std::uint32_t i = 0; i < morphisms_.size(); ++i) {
    morphism_index_.emplace(morphisms_[i].name, i);
  }
}

bool FinCategory::is_identity(MorId f) const {
  const auto& m = morphisms_.at(f.value);
  return m.src == m.tgt && m.src.value < identities_.size() && identities_[m.src.value] == f;
}

std::optional<MorId> FinCategory::try_compose(MorId g, MorId f) const {
  const std::size_t m = morphisms_.size();
  if (g.value >= m || f.value >= m) return std::nullopt;
  const std::size_t idx = static_cast<std::size_t>(g.value) * m + f.value;
  if (idx >= table_.size() || table_[idx] == kNone) return std::nullopt;
  return MorId{table_[idx]};
}

MorId FinCategory::compose(MorId g, MorId f) const {
  if (auto r = try_compose(g, f)) return *r;
  throw std::logic_error("composite " + name(g) + "." + name(f) + " is undefined");
}

std::optional<ObjId> FinCategory::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return ObjId{it->second};
}

std::optional<MorId> FinCategory::find_morphism(std::string_view name) const {
  auto it = morphism_index_.find(std::string(name));
  if (it == morphism_index_.end()) return std::nullopt;
  return MorId{it->second};
}

std::vector<MorId> FinCategory::hom(ObjId x, ObjId y) const {
  std::vector<MorId> r;
  for (MorId f : out(x)) {
    if (tgt(f) == y) r.push_back(f);
  }
  return r;
}

bool FinCategory::is_thin() const {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const auto& m : morphisms_) {
    if (!seen.emplace(m.src.value, m.tgt.value).second) return false;
  }
  return true;
}

bool operator==(const FinCategory& a, const FinCategory& b) {
  return a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_ &&
         a.identities_ == b.identities_ && a.table_ == b.table_;
}

bool same_category(const CategoryPtr& a, const CategoryPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------------------
// build_category
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void invalid(const std::string& msg) {
  throw Error(ErrorCode::kInvalidPresentation, msg);
}

struct NodeIndex {
  std::unordered_map<std::string, std::uint32_t> index;

  explicit NodeIndex(const std::vector<std::string>& nodes) {
    for (std::uint32_t i = 0; i < nodes.size(); ++i) {
      if (!index.emplace(nodes[i], i).second) invalid("duplicate object '" + nodes[i] + "'");
    }
  }
  std::uint32_t at(const std::string& node, const std::string& edge) const {
    auto it = index.find(node);
    if (it == index.end()) invalid("arrow '" + edge + "' refers to undeclared object '" + node + "'");
    return it->second;
  }
};

// Identities first, one per node, named id_<node>.
void push_identities(const std::vector<std::string>& nodes,
                     std::vector<FinCategory::Morphism>& mors, std::vector<MorId>& ids) {
  for (std::uint32_t i = 0; i < nodes.size(); ++i) {
    ids.push_back(MorId{static_cast<std::uint32_t>(mors.size())});
    mors.push_back({ObjId{i}, ObjId{i}, "id_" + nodes[i]});
  }
}

void check_unique_names(const std::vector<FinCategory::Morphism>& mors) {
  std::unordered_set<std::string> seen;
  for (const auto& m : mors) {
    if (!seen.insert(m.name).second) invalid("duplicate arrow name '" + m.name + "'");
  }
}

std::vector<std::uint32_t> identity_table(const std::vector<FinCategory::Morphism>& mors,
                                          const std::vector<MorId>& ids) {
  const std::size_t m = mors.size();
  std::vector<std::uint32_t> table(m * m, kNone);
  for (std::uint32_t f = 0; f < m; ++f) {
    const MorId idt = ids[mors[f].tgt.value];
    const MorId ids_ = ids[mors[f].src.value];
    table[static_cast<std::size_t>(idt.value) * m + f] = f;
    table[static_cast<std::size_t>(f) * m + ids_.value] = f;
  }
  return table;
}

CategoryPtr finish(FinCategory c, const std::string& label) {
  c.set_label(label);
  Verdict v = validate_category(c);
  if (!v.pass) invalid("presentation is not a category: " + v.check + ": " + v.detail);
  return std::make_shared<const FinCategory>(std::move(c));
}

CategoryPtr build_table(const GraphPresentation& p) {
  NodeIndex nodes(p.nodes);
  std::vector<FinCategory::Morphism> mors;
  std::vector<MorId> ids;
  push_identities(p.nodes, mors, ids);
  for (const auto& e : p.edges) {
    mors.push_back({ObjId{nodes.at(e.src, e.name)}, ObjId{nodes.at(e.tgt, e.name)}, e.name});
  }
  check_unique_names(mors);
  std::unordered_map<std::string, std::uint32_t> by_name;
  for (std::uint32_t i = 0; i < mors.size(); ++i) by_name.emplace(mors[i].name, i);
  auto lookup = [&](const std::string& n) {
    auto it = by_name.find(n);
    if (it == by_name.end()) invalid("compose rule names unknown arrow '" + n + "'");
    return it->second;
  };

  const std::size_t m = mors.size();
  auto table = identity_table(mors, ids);
  for (const auto& r : p.table) {
    const auto g = lookup(r.second);
    const auto f = lookup(r.first);
    const auto h = lookup(r.result);
    if (mors[f].tgt != mors[g].src) {
      invalid("compose " + r.second + "." + r.first + ": arrows are not composable");
    }
    auto& slot = table[static_cast<std::size_t>(g) * m + f];
    if (slot != kNone && slot != h) {
      invalid("compose " + r.second + "." + r.first + " is given twice with different results");
    }
    slot = h;
  }
  for (std::uint32_t g = 0; g < m; ++g) {
    for (std::uint32_t f = 0; f < m; ++f) {
      if (mors[f].tgt == mors[g].src && table[static_cast<std::size_t>(g) * m + f] == kNone) {
        invalid("table mode is missing the composite " + mors[g].name + "." + mors[f].name);
      }
    }
  }
  return finish(FinCategory(p.nodes, std::move(mors), std::move(ids), std::move(table)), p.label);
}

CategoryPtr build_preorder(const GraphPresentation& p) {
  NodeIndex nodes(p.nodes);
  const std::size_t n = p.nodes.size();
  std::vector<std::vector<std::uint32_t>> adj(n);
  // First declared edge per ordered pair names the morphism.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::string> declared;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> declared_order;
  for (const auto& e : p.edges) {
    const auto s = nodes.at(e.src, e.name);
    const auto t = nodes.at(e.tgt, e.name);
    if (s == t) invalid("arrow '" + e.name + "' is a loop; in a preorder it would be an identity");
    if (!declared.emplace(std::make_pair(s, t), e.name).second) {
      invalid("arrow '" + e.name + "' duplicates the unique morphism " + e.src + " -> " + e.tgt);
    }
    declared_order.emplace_back(s, t);
    adj[s].push_back(t);
  }

  // BFS from every node; parent edges give a canonical shortest path name.
  std::vector<std::vector<std::string>> path_name(n, std::vector<std::string>(n));
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::uint32_t s = 0; s < n; ++s) {
    reach[s][s] = true;
    std::deque<std::uint32_t> queue{s};
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (const auto y : adj[x]) {
        if (reach[s][y]) continue;
        reach[s][y] = true;
        const std::string& edge = declared.at({x, y});
        path_name[s][y] = x == s ? edge : edge + "." + path_name[s][x];
        queue.push_back(y);
      }
    }
  }

  std::vector<FinCategory::Morphism> mors;
  std::vector<MorId> ids;
  push_identities(p.nodes, mors, ids);
  std::vector<std::vector<std::uint32_t>> pair_mor(n, std::vector<std::uint32_t>(n, kNone));
  for (std::uint32_t i = 0; i < n; ++i) pair_mor[i][i] = ids[i].value;
  for (const auto& [s, t] : declared_order) {
    pair_mor[s][t] = static_cast<std::uint32_t>(mors.size());
    mors.push_back({ObjId{s}, ObjId{t}, declared.at({s, t})});
  }
  for (std::uint32_t s = 0; s < n; ++s) {
    for (std::uint32_t t = 0; t < n; ++t) {
      if (reach[s][t] && pair_mor[s][t] == kNone) {
        pair_mor[s][t] = static_cast<std::uint32_t>(mors.size());
        mors.push_back({ObjId{s}, ObjId{t}, path_name[s][t]});
      }
    }
  }
  check_unique_names(mors);

  const std::size_t m = mors.size();
  std::vector<std::uint32_t> table(m * m, kNone);
  for (std::uint32_t g = 0; g < m; ++g) {
    for (std::uint32_t f = 0; f < m; ++f) {
      if (mors[f].tgt != mors[g].src) continue;
      table[static_cast<std::size_t>(g) * m + f] = pair_mor[mors[f].src.value][mors[g].tgt.value];
    }
  }
  return finish(FinCategory(p.nodes, std::move(mors), std::move(ids), std::move(table)), p.label);
}

CategoryPtr build_free(const GraphPresentation& p) {
  if (p.bound < 1) invalid("free mode requires a bound of at least 1");
  NodeIndex nodes(p.nodes);
  struct Edge {
    std::uint32_t src, tgt;
  };
  std::vector<Edge> edges;
  for (const auto& e : p.edges) edges.push_back({nodes.at(e.src, e.name), nodes.at(e.tgt, e.name)});

  // Paths as edge sequences in application order, grouped by length.
  std::vector<std::vector<std::uint32_t>> paths;
  std::vector<std::vector<std::uint32_t>> frontier;
  for (std::uint32_t i = 0; i < edges.size(); ++i) frontier.push_back({i});
  std::size_t length = 1;
  while (!frontier.empty()) {
    if (length > p.bound) {
      throw Error(ErrorCode::kBoundExceeded,
                  "free category does not close: a path of length " + std::to_string(length) +
                      " exists (bound " + std::to_string(p.bound) + ")");
    }
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& path : frontier) {
      paths.push_back(path);
      const auto end = edges[path.back()].tgt;
      for (std::uint32_t i = 0; i < edges.size(); ++i) {
        if (edges[i].src != end) continue;
        auto longer = path;
        longer.push_back(i);
        next.push_back(std::move(longer));
      }
    }
    frontier = std::move(next);
    ++length;
  }

  std::vector<FinCategory::Morphism> mors;
  std::vector<MorId> ids;
  push_identities(p.nodes, mors, ids);
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (const auto& path : paths) {
    std::string name;
    for (const auto e : path) name = name.empty() ? p.edges[e].name : p.edges[e].name + "." + name;
    index.emplace(path, static_cast<std::uint32_t>(mors.size()));
    mors.push_back({ObjId{edges[path.front()].src}, ObjId{edges[path.back()].tgt}, name});
  }
  check_unique_names(mors);

  const std::size_t m = mors.size();
  auto table = identity_table(mors, ids);
  const std::size_t base = p.nodes.size();
  for (std::size_t gi = 0; gi < paths.size(); ++gi) {
    for (std::size_t fi = 0; fi < paths.size(); ++fi) {
      if (edges[paths[fi].back()].tgt != edges[paths[gi].front()].src) continue;
      auto joined = paths[fi];
      joined.insert(joined.end(), paths[gi].begin(), paths[gi].end());
      table[(base + gi) * m + base + fi] = index.at(joined);
    }
  }
  return finish(FinCategory(p.nodes, std::move(mors), std::move(ids), std::move(table)), p.label);
}

}  // namespace

CategoryPtr build_category(const GraphPresentation& p) {
  switch (p.mode) {
    case GraphPresentation::Mode::kTable: return build_table(p);
    case GraphPresentation::Mode::kPreorder: return build_preorder(p);
    case GraphPresentation::Mode::kFree: return build_free(p);
  }
  invalid("unknown presentation mode");
}

CategoryPtr preorder(std::vector<std::string> nodes, std::vector<GraphPresentation::Edge> edges,
                     std::string label) {
  GraphPresentation p;
  p.nodes = std::move(nodes);
  p.edges = std::move(edges);
  p.mode = GraphPresentation::Mode::kPreorder;
  p.label = std::move(label);
  return build_category(p);
}

CategoryPtr terminal_category() { return preorder({"0"}, {}, "1"); }

CategoryPtr interval_category() { return preorder({"0", "1"}, {{"u", "0", "1"}}, "2"); }

CategoryPtr iso_category() {
  GraphPresentation p;
  p.nodes = {"0", "1"};
  p.edges = {{"v", "0", "1"}, {"vinv", "1", "0"}};
  p.mode = GraphPresentation::Mode::kTable;
  p.table = {{"v", "vinv", "id_1"}, {"vinv", "v", "id_0"}};
  p.label = "I";
  return build_category(p);
}

// ---------------------------------------------------------------------------
// validate_category
// ---------------------------------------------------------------------------

Verdict validate_category(const FinCategory& c) {
  const std::size_t n = c.num_objects();
  const std::size_t m = c.num_morphisms();
  if (c.identity_data().size() != n || c.table_data().size() != m * m) {
    return Verdict::fail("malformed", "identity map or composition table has the wrong size");
  }
  for (MorId f : c.morphisms()) {
    if (c.src(f).value >= n || c.tgt(f).value >= n) {
      return Verdict::fail("malformed", "morphism endpoint out of range", {{"morphism", c.name(f)}});
    }
  }
  for (ObjId x : c.objects()) {
    const MorId id = c.identity(x);
    if (id.value >= m || c.src(id) != x || c.tgt(id) != x) {
      return Verdict::fail("identity-typing", "identity of " + c.name(x) + " is not an endomorphism of it",
                           {{"object", c.name(x)}});
    }
  }
  for (MorId g : c.morphisms()) {
    for (MorId f : c.morphisms()) {
      const bool composable = c.tgt(f) == c.src(g);
      const auto h = c.try_compose(g, f);
      if (composable != h.has_value()) {
        return Verdict::fail("composition-domain",
                             composable ? "composable pair has no composite"
                                        : "non-composable pair has a composite",
                             {{"g", c.name(g)}, {"f", c.name(f)}});
      }
      if (h && (h->value >= m || c.src(*h) != c.src(f) || c.tgt(*h) != c.tgt(g))) {
        return Verdict::fail("composition-typing", "composite has the wrong source or target",
                             {{"g", c.name(g)}, {"f", c.name(f)}});
      }
    }
  }
  for (MorId f : c.morphisms()) {
    if (c.compose(c.identity(c.tgt(f)), f) != f) {
      return Verdict::fail("left-identity", "id." + c.name(f) + " != " + c.name(f),
                           {{"morphism", c.name(f)}});
    }
  }
  for (MorId f : c.morphisms()) {
    if (c.compose(f, c.identity(c.src(f))) != f) {
      return Verdict::fail("right-identity", c.name(f) + ".id != " + c.name(f),
                           {{"morphism", c.name(f)}});
    }
  }
  for (MorId f : c.morphisms()) {
    for (MorId g : c.out(c.tgt(f))) {
      const MorId gf = c.compose(g, f);
      for (MorId h : c.out(c.tgt(g))) {
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f)) {
          return Verdict::fail("associativity", "h.(g.f) != (h.g).f",
                               {{"f", c.name(f)}, {"g", c.name(g)}, {"h", c.name(h)}});
        }
      }
    }
  }
  return Verdict::ok("category");
}

// ---------------------------------------------------------------------------
// FunctorMap
// ---------------------------------------------------------------------------

FunctorMap::FunctorMap(CategoryPtr src, CategoryPtr tgt, std::vector<ObjId> obj_map,
                       std::vector<MorId> mor_map)
    : src_(std::move(src)),
      tgt_(std::move(tgt)),
      obj_map_(std::move(obj_map)),
      mor_map_(std::move(mor_map)) {
  if (!src_ || !tgt_) throw Error(ErrorCode::kInvalidArgument, "functor needs both categories");
}

FunctorMap FunctorMap::identity(CategoryPtr c) {
  std::vector<ObjId> om;
  std::vector<MorId> mm;
  for (ObjId x : c->objects()) om.push_back(x);
  for (MorId f : c->morphisms()) mm.push_back(f);
  return FunctorMap(c, c, std::move(om), std::move(mm));
}

bool operator==(const FunctorMap& a, const FunctorMap& b) {
  return a.obj_map_ == b.obj_map_ && a.mor_map_ == b.mor_map_ && same_category(a.src_, b.src_) &&
         same_category(a.tgt_, b.tgt_);
}

Verdict check_functor(const FunctorMap& f) {
  const auto& a = f.src();
  const auto& b = f.tgt();
  if (f.obj_map().size() != a.num_objects() || f.mor_map().size() != a.num_morphisms()) {
    return Verdict::fail("totality", "object or arrow map is not total on the source");
  }
  for (ObjId x : a.objects()) {
    if (f(x).value >= b.num_objects()) {
      return Verdict::fail("totality", "object image out of range", {{"object", a.name(x)}});
    }
  }
  for (MorId m : a.morphisms()) {
    if (f(m).value >= b.num_morphisms()) {
      return Verdict::fail("totality", "arrow image out of range", {{"morphism", a.name(m)}});
    }
  }
  for (MorId m : a.morphisms()) {
    if (b.src(f(m)) != f(a.src(m)) || b.tgt(f(m)) != f(a.tgt(m))) {
      return Verdict::fail("source-target", "image of " + a.name(m) + " has the wrong endpoints",
                           {{"morphism", a.name(m)}, {"image", b.name(f(m))}});
    }
  }
  for (ObjId x : a.objects()) {
    if (f(a.identity(x)) != b.identity(f(x))) {
      return Verdict::fail("identity-preservation", "identity of " + a.name(x) + " is not preserved",
                           {{"object", a.name(x)}, {"image", b.name(f(a.identity(x)))}});
    }
  }
  for (MorId m : a.morphisms()) {
    for (MorId n : a.out(a.tgt(m))) {
      if (f(a.compose(n, m)) != b.compose(f(n), f(m))) {
        return Verdict::fail("composition", "F(g.f) != F(g).F(f)",
                             {{"f", a.name(m)}, {"g", a.name(n)}});
      }
    }
  }
  return Verdict::ok("functor");
}

FunctorMap compose_functors(const FunctorMap& g, const FunctorMap& f) {
  if (!same_category(f.tgt_ptr(), g.src_ptr())) {
    throw Error(ErrorCode::kCategoryMismatch, "cannot compose: target of the first functor is not "
                                              "the source of the second");
  }
  std::vector<ObjId> om;
  std::vector<MorId> mm;
  for (ObjId x : f.src().objects()) om.push_back(g(f(x)));
  for (MorId m : f.src().morphisms()) mm.push_back(g(f(m)));
  return FunctorMap(f.src_ptr(), g.tgt_ptr(), std::move(om), std::move(mm));
}

// ---------------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------------

std::optional<MorId> unique_lift(const FunctorMap& f, ObjId x, MorId b) {
  std::optional<MorId> found;
  for (MorId a : f.src().out(x)) {
    if (f(a) != b) continue;
    if (found) return std::nullopt;
    found = a;
  }
  return found;
}

bool is_discrete_opfibration(const FunctorMap& f) {
  for (ObjId x : f.src().objects()) {
    for (MorId b : f.tgt().out(f(x))) {
      if (!unique_lift(f, x, b)) return false;
    }
  }
  return true;
}

namespace {

template <typename Id>
bool injective(const std::vector<Id>& map) {
  std::unordered_set<Id> seen;
  for (Id v : map) {
    if (!seen.insert(v).second) return false;
  }
  return true;
}

template <typename Id>
bool surjective(const std::vector<Id>& map, std::size_t size) {
  std::vector<bool> hit(size, false);
  for (Id v : map) hit.at(v.value) = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace

bool is_cosieve(const FunctorMap& f) {
  return injective(f.obj_map()) && is_discrete_opfibration(f);
}

FunctorProfile classify_functor(const FunctorMap& f) {
  FunctorProfile p;
  const auto& a = f.src();
  const auto& b = f.tgt();
  p.inj_obj = injective(f.obj_map());
  p.inj_mor = injective(f.mor_map());
  p.surj_obj = surjective(f.obj_map(), b.num_objects());
  p.surj_mor = surjective(f.mor_map(), b.num_morphisms());

  const std::size_t mb = b.num_morphisms();
  std::vector<bool> pair_hit(mb * mb, false);
  for (MorId x : a.morphisms()) {
    for (MorId y : a.out(a.tgt(x))) pair_hit[static_cast<std::size_t>(f(x).value) * mb + f(y).value] = true;
  }
  p.surj_composable_pairs = true;
  for (MorId c : b.morphisms()) {
    for (MorId c2 : b.out(b.tgt(c))) {
      if (!pair_hit[static_cast<std::size_t>(c.value) * mb + c2.value]) p.surj_composable_pairs = false;
    }
  }

  p.is_discrete_opfibration = is_discrete_opfibration(f);
  p.is_cosieve = p.is_discrete_opfibration && p.inj_obj;
  p.is_mono = p.inj_obj && p.inj_mor;
  return p;
}

Verdict is_epic_functor_bounded(const FunctorMap& f, std::span<const CategoryPtr> universe) {
  const auto profile = classify_functor(f);
  const bool certified = profile.surj_obj && profile.surj_mor;
  for (const auto& u : universe) {
    // Composite G.F keyed by its maps; a repeat is a refutation.
    std::map<std::pair<std::vector<ObjId>, std::vector<MorId>>, FunctorMap> seen;
    std::optional<Verdict> refuted;
    for_each_functor(f.tgt_ptr(), u, [&](const FunctorMap& g) {
      auto gf = compose_functors(g, f);
      auto key = std::make_pair(gf.obj_map(), gf.mor_map());
      auto [it, inserted] = seen.emplace(std::move(key), g);
      if (inserted) return true;
      Witness w;
      w.add("universe", u->label().empty() ? "#" : u->label())
          .add("g1", describe(it->second))
          .add("g2", describe(g));
      refuted = Verdict::fail("epi", "two distinct functors agree after precomposition", std::move(w));
      return false;
    });
    if (refuted) return *refuted;
  }
  return Verdict::ok("epi").with_label(certified ? "certified" : "not refuted within universe");
}

// ---------------------------------------------------------------------------
// subcategories
// ---------------------------------------------------------------------------

Subcategory make_subcategory(const CategoryPtr& parent, const std::vector<bool>& objects,
                             const std::vector<bool>& morphisms, std::string label) {
  const auto& c = *parent;
  if (objects.size() != c.num_objects() || morphisms.size() != c.num_morphisms()) {
    throw Error(ErrorCode::kInvalidArgument, "subcategory masks have the wrong size");
  }
  std::vector<std::uint32_t> obj_new(c.num_objects(), kNone);
  std::vector<std::uint32_t> mor_new(c.num_morphisms(), kNone);
  std::vector<std::string> names;
  std::vector<ObjId> obj_map;
  for (ObjId x : c.objects()) {
    if (!objects[x.value]) continue;
    if (!morphisms[c.identity(x).value]) {
      throw Error(ErrorCode::kInvalidArgument, "subcategory omits the identity of " + c.name(x));
    }
    obj_new[x.value] = static_cast<std::uint32_t>(names.size());
    names.push_back(c.name(x));
    obj_map.push_back(x);
  }
  std::vector<FinCategory::Morphism> mors;
  std::vector<MorId> mor_map;
  for (MorId f : c.morphisms()) {
    if (!morphisms[f.value]) continue;
    if (!objects[c.src(f).value] || !objects[c.tgt(f).value]) {
      throw Error(ErrorCode::kInvalidArgument, "subcategory keeps " + c.name(f) + " but not its endpoints");
    }
    mor_new[f.value] = static_cast<std::uint32_t>(mors.size());
    mors.push_back({ObjId{obj_new[c.src(f).value]}, ObjId{obj_new[c.tgt(f).value]}, c.name(f)});
    mor_map.push_back(f);
  }
  std::vector<MorId> ids;
  for (ObjId x : obj_map) ids.push_back(MorId{mor_new[c.identity(x).value]});
  const std::size_t m = mors.size();
  std::vector<std::uint32_t> table(m * m, kNone);
  for (std::size_t gi = 0; gi < m; ++gi) {
    for (std::size_t fi = 0; fi < m; ++fi) {
      const auto h = c.try_compose(mor_map[gi], mor_map[fi]);
      if (!h) continue;
      if (mor_new[h->value] == kNone) {
        throw Error(ErrorCode::kInvalidArgument, "subcategory is not closed under composition");
      }
      table[gi * m + fi] = mor_new[h->value];
    }
  }
  FinCategory sub(std::move(names), std::move(mors), std::move(ids), std::move(table));
  sub.set_label(std::move(label));
  auto ptr = std::make_shared<const FinCategory>(std::move(sub));
  return Subcategory{ptr, FunctorMap(ptr, parent, std::move(obj_map), std::move(mor_map))};
}

Subcategory agreement_subcategory(const FunctorMap& f1, const FunctorMap& f2) {
  if (!same_category(f1.src_ptr(), f2.src_ptr()) || !same_category(f1.tgt_ptr(), f2.tgt_ptr())) {
    throw Error(ErrorCode::kCategoryMismatch, "agreement needs a parallel pair of functors");
  }
  const auto& c = f1.src();
  std::vector<bool> objs(c.num_objects()), mors(c.num_morphisms());
  for (ObjId x : c.objects()) objs[x.value] = f1(x) == f2(x);
  for (MorId f : c.morphisms()) mors[f.value] = f1(f) == f2(f);
  return make_subcategory(f1.src_ptr(), objs, mors, "Eq");
}

Subcategory image_subcategory(const FunctorMap& f) {
  const auto& b = f.tgt();
  std::vector<bool> objs(b.num_objects(), false), mors(b.num_morphisms(), false);
  for (ObjId x : f.src().objects()) objs[f(x).value] = true;
  for (MorId m : f.src().morphisms()) mors[f(m).value] = true;
  return make_subcategory(f.tgt_ptr(), objs, mors, "Im");
}

std::string describe(const FunctorMap& f) {
  std::ostringstream os;
  os << "objects[";
  bool first = true;
  for (ObjId x : f.src().objects()) {
    os << (first ? "" : ", ") << f.src().name(x) << "->" << f.tgt().name(f(x));
    first = false;
  }
  os << "] arrows[";
  first = true;
  for (MorId m : f.src().morphisms()) {
    if (f.src().is_identity(m)) continue;
    os << (first ? "" : ", ") << f.src().name(m) << "->" << f.tgt().name(f(m));
    first = false;
  }
  os << "]";
  return os.str();
}

void uniquify_names(std::vector<std::string>& names) {
  std::unordered_set<std::string> seen;
  for (auto& n : names) {
    while (!seen.insert(n).second) n += "'";
  }
}

}  // namespace lenslab
