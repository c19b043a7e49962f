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

#include "lenslab/universe.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lenslab {

namespace {

class FunctorEnumerator {
 public:
  FunctorEnumerator(const CategoryPtr& src, const CategoryPtr& tgt,
                    const std::function<bool(const FunctorMap&)>& visit, FunctorSearch options)
      : src_(src), tgt_(tgt), a_(*src), b_(*tgt), visit_(visit), options_(options) {
    obj_.assign(a_.num_objects(), kNone);
    mor_.assign(a_.num_morphisms(), kNone);
    obj_used_.assign(b_.num_objects(), false);
    mor_used_.assign(b_.num_morphisms(), false);

    for (MorId f : a_.morphisms()) {
      if (!a_.is_identity(f)) order_.push_back(f);
    }
    std::vector<int> position(a_.num_morphisms(), -1);
    for (std::size_t i = 0; i < order_.size(); ++i) position[order_[i].value] = static_cast<int>(i);
    constraints_.resize(order_.size());
    for (MorId f : a_.morphisms()) {
      for (MorId g : a_.out(a_.tgt(f))) {
        const MorId h = a_.compose(g, f);
        const int last = std::max({position[f.value], position[g.value], position[h.value]});
        if (last >= 0) constraints_[last].push_back({g, f, h});
      }
    }
    // Object-level pruning: each arrow needs a nonempty hom-set at its image.
    edge_checks_.resize(a_.num_objects());
    for (MorId f : order_) {
      const auto last = std::max(a_.src(f).value, a_.tgt(f).value);
      edge_checks_[last].push_back(f);
    }
  }

  void run() { assign_object(0); }

 private:
  struct Triple {
    MorId g, f, h;
  };

  bool assign_object(std::uint32_t i) {
    if (i == a_.num_objects()) return start_morphisms();
    std::vector<std::uint32_t> candidates(b_.num_objects());
    std::iota(candidates.begin(), candidates.end(), 0);
    if (options_.shuffle) std::shuffle(candidates.begin(), candidates.end(), *options_.shuffle);
    for (std::uint32_t y : candidates) {
      if (options_.injective_objects && obj_used_[y]) continue;
      obj_[i] = y;
      bool ok = true;
      for (MorId f : edge_checks_[i]) {
        if (b_.hom(ObjId{obj_[a_.src(f).value]}, ObjId{obj_[a_.tgt(f).value]}).empty()) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      obj_used_[y] = true;
      const bool more = assign_object(i + 1);
      obj_used_[y] = false;
      if (!more) return false;
    }
    obj_[i] = kNone;
    return true;
  }

  bool start_morphisms() {
    for (ObjId x : a_.objects()) {
      const MorId id = b_.identity(ObjId{obj_[x.value]});
      mor_[a_.identity(x).value] = id.value;
    }
    if (options_.injective_morphisms) {
      std::fill(mor_used_.begin(), mor_used_.end(), false);
      for (ObjId x : a_.objects()) mor_used_[mor_[a_.identity(x).value]] = true;
    }
    return assign_morphism(0);
  }

  bool assign_morphism(std::size_t i) {
    if (i == order_.size()) {
      std::vector<ObjId> om;
      std::vector<MorId> mm;
      for (auto v : obj_) om.push_back(ObjId{v});
      for (auto v : mor_) mm.push_back(MorId{v});
      return visit_(FunctorMap(src_, tgt_, std::move(om), std::move(mm)));
    }
    const MorId f = order_[i];
    auto candidates = b_.hom(ObjId{obj_[a_.src(f).value]}, ObjId{obj_[a_.tgt(f).value]});
    if (options_.shuffle) std::shuffle(candidates.begin(), candidates.end(), *options_.shuffle);
    for (MorId c : candidates) {
      if (options_.injective_morphisms && mor_used_[c.value]) continue;
      mor_[f.value] = c.value;
      bool ok = true;
      for (const auto& t : constraints_[i]) {
        if (b_.compose(MorId{mor_[t.g.value]}, MorId{mor_[t.f.value]}) != MorId{mor_[t.h.value]}) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (options_.injective_morphisms) mor_used_[c.value] = true;
      const bool more = assign_morphism(i + 1);
      if (options_.injective_morphisms) mor_used_[c.value] = false;
      if (!more) return false;
    }
    mor_[f.value] = kNone;
    return true;
  }

  CategoryPtr src_, tgt_;
  const FinCategory& a_;
  const FinCategory& b_;
  const std::function<bool(const FunctorMap&)>& visit_;
  FunctorSearch options_;
  std::vector<std::uint32_t> obj_, mor_;
  std::vector<bool> obj_used_, mor_used_;
  std::vector<MorId> order_;
  std::vector<std::vector<Triple>> constraints_;
  std::vector<std::vector<MorId>> edge_checks_;
};

CategoryPtr table_category(std::vector<std::string> nodes,
                           std::vector<GraphPresentation::Edge> edges,
                           std::vector<GraphPresentation::ComposeRule> rules, std::string label) {
  GraphPresentation p;
  p.nodes = std::move(nodes);
  p.edges = std::move(edges);
  p.mode = GraphPresentation::Mode::kTable;
  p.table = std::move(rules);
  p.label = std::move(label);
  return build_category(p);
}

}  // namespace

void for_each_functor(const CategoryPtr& src, const CategoryPtr& tgt,
                      const std::function<bool(const FunctorMap&)>& visit, FunctorSearch options) {
  FunctorEnumerator(src, tgt, visit, options).run();
}

std::vector<FunctorMap> enumerate_functors(const CategoryPtr& src, const CategoryPtr& tgt,
                                           std::size_t limit) {
  std::vector<FunctorMap> out;
  if (limit == 0) return out;
  for_each_functor(src, tgt, [&](const FunctorMap& f) {
    out.push_back(f);
    return out.size() < limit;
  });
  return out;
}

std::optional<FunctorMap> find_isomorphism(const CategoryPtr& a, const CategoryPtr& b) {
  if (a->num_objects() != b->num_objects() || a->num_morphisms() != b->num_morphisms()) {
    return std::nullopt;
  }
  std::optional<FunctorMap> found;
  for_each_functor(
      a, b,
      [&](const FunctorMap& f) {
        found = f;
        return false;
      },
      FunctorSearch{true, true});
  return found;
}

std::vector<CategoryPtr> preorder_universe(std::size_t max_objects) {
  std::vector<CategoryPtr> out;
  for (std::size_t n = 1; n <= max_objects; ++n) {
    const std::size_t bits = n * n;
    std::set<std::uint64_t> canon_seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      auto rel = [&](std::size_t i, std::size_t j) { return (mask >> (i * n + j)) & 1u; };
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = rel(i, i);
      for (std::size_t i = 0; i < n && ok; ++i) {
        for (std::size_t j = 0; j < n && ok; ++j) {
          for (std::size_t k = 0; k < n && ok; ++k) {
            if (rel(i, j) && rel(j, k) && !rel(i, k)) ok = false;
          }
        }
      }
      if (!ok) continue;
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::uint64_t canon = ~std::uint64_t{0};
      do {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (rel(i, j)) m |= std::uint64_t{1} << (perm[i] * n + perm[j]);
          }
        }
        canon = std::min(canon, m);
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!canon_seen.insert(canon).second) continue;

      std::vector<std::string> nodes;
      for (std::size_t i = 0; i < n; ++i) nodes.push_back(std::to_string(i));
      std::vector<GraphPresentation::Edge> edges;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j && ((canon >> (i * n + j)) & 1u)) {
            edges.push_back({"a" + std::to_string(i) + std::to_string(j), nodes[i], nodes[j]});
          }
        }
      }
      out.push_back(preorder(nodes, edges, "preorder" + std::to_string(n) + "#" +
                                               std::to_string(canon_seen.size() - 1)));
    }
  }
  return out;
}

std::vector<CategoryPtr> standard_universe(std::size_t max_objects) {
  auto out = preorder_universe(max_objects);
  if (max_objects >= 1) {
    out.push_back(table_category({"0"}, {{"t", "0", "0"}}, {{"t", "t", "id_0"}}, "Z2"));
    out.push_back(table_category({"0"}, {{"e", "0", "0"}}, {{"e", "e", "e"}}, "idempotent"));
  }
  if (max_objects >= 2) {
    GraphPresentation par;
    par.nodes = {"0", "1"};
    par.edges = {{"p", "0", "1"}, {"q", "0", "1"}};
    par.mode = GraphPresentation::Mode::kFree;
    par.label = "parallel";
    out.push_back(build_category(par));
    out.push_back(table_category({"0", "1"}, {{"e", "0", "0"}, {"u", "0", "1"}},
                                 {{"e", "e", "e"}, {"u", "e", "u"}}, "interval+idempotent"));
  }
  return out;
}

}  // namespace lenslab
