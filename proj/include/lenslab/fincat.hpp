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

// Finite categories and functors between them.
//
// A FinCategory stores its objects and morphisms as dense indices together
// with an explicit identity map and a total composition table on composable
// pairs. Values are immutable once built and are shared through
// CategoryPtr; every construction in the library returns fresh categories
// rather than mutating its inputs.

#ifndef LENSLAB_FINCAT_HPP_
#define LENSLAB_FINCAT_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lenslab/types.hpp"

namespace lenslab {

class FinCategory {
 public:
  struct Morphism {
    ObjId src;
    ObjId tgt;
    std::string name;
    friend bool operator==(const Morphism&, const Morphism&) = default;
  };

  FinCategory() = default;

  // Unchecked construction: `table[g * M + f]` is the composite g.f or
  // kNone. Run validate_category before relying on the axioms.
  FinCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
              std::vector<MorId> identities, std::vector<std::uint32_t> table);

  std::size_t num_objects() const noexcept { return objects_.size(); }
  std::size_t num_morphisms() const noexcept { return morphisms_.size(); }

  auto objects() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(objects_.size())) |
           std::views::transform([](std::uint32_t i) { return ObjId{i}; });
  }
  auto morphisms() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(morphisms_.size())) |
           std::views::transform([](std::uint32_t i) { return MorId{i}; });
  }

  ObjId src(MorId f) const { return morphisms_.at(f.value).src; }
  ObjId tgt(MorId f) const { return morphisms_.at(f.value).tgt; }
  MorId identity(ObjId x) const { return identities_.at(x.value); }
  bool is_identity(MorId f) const;

  // g.f, or nullopt when the table has no entry.
  std::optional<MorId> try_compose(MorId g, MorId f) const;
  // g.f; throws std::logic_error when undefined.
  MorId compose(MorId g, MorId f) const;

  const std::string& name(ObjId x) const { return objects_.at(x.value); }
  const std::string& name(MorId f) const { return morphisms_.at(f.value).name; }
  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<MorId> find_morphism(std::string_view name) const;

  // Morphisms out of x, ascending.
  std::span<const MorId> out(ObjId x) const { return out_.at(x.value); }
  // Morphisms x -> y, ascending.
  std::vector<MorId> hom(ObjId x, ObjId y) const;
  // At most one morphism between any ordered pair of objects.
  bool is_thin() const;

  const std::vector<std::string>& object_names() const noexcept { return objects_; }
  const std::vector<Morphism>& morphism_data() const noexcept { return morphisms_; }
  const std::vector<MorId>& identity_data() const noexcept { return identities_; }
  const std::vector<std::uint32_t>& table_data() const noexcept { return table_; }

  // Display label (workspace name or construction tag). Not part of equality.
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  // Structural equality: names, typing, identities and table.
  friend bool operator==(const FinCategory& a, const FinCategory& b);

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorId> identities_;
  std::vector<std::uint32_t> table_;
  std::vector<std::vector<MorId>> out_;
  std::unordered_map<std::string, std::uint32_t> object_index_;
  std::unordered_map<std::string, std::uint32_t> morphism_index_;
  std::string label_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

// Same category, by pointer or by structure.
bool same_category(const CategoryPtr& a, const CategoryPtr& b);

// Input to build_category. Edge and node names are the user's names; in table
// mode identities are named "id_<node>" and may appear in compose rules.
struct GraphPresentation {
  enum class Mode { kTable, kPreorder, kFree };
  struct Edge {
    std::string name;
    std::string src;
    std::string tgt;
  };
  struct ComposeRule {
    std::string second;  // g in g.f
    std::string first;   // f in g.f
    std::string result;
  };

  std::vector<std::string> nodes;
  std::vector<Edge> edges;
  Mode mode = Mode::kPreorder;
  std::size_t bound = 16;
  std::vector<ComposeRule> table;
  std::string label;
};

inline constexpr std::size_t kDefaultFreeBound = 16;

// Table mode returns the given table after validation; preorder mode the thin
// category of the reachability preorder; free mode the path category when it
// closes within `bound`. Throws Error(kInvalidPresentation | kBoundExceeded).
CategoryPtr build_category(const GraphPresentation& p);

// Convenience for tests and the built-in universe.
CategoryPtr preorder(std::vector<std::string> nodes,
                     std::vector<GraphPresentation::Edge> edges,
                     std::string label = {});

// The terminal category, the interval category 0 -> 1 and the free living
// isomorphism.
CategoryPtr terminal_category();
CategoryPtr interval_category();
CategoryPtr iso_category();

Verdict validate_category(const FinCategory& c);

class FunctorMap {
 public:
  FunctorMap(CategoryPtr src, CategoryPtr tgt, std::vector<ObjId> obj_map,
             std::vector<MorId> mor_map);

  static FunctorMap identity(CategoryPtr c);

  const FinCategory& src() const noexcept { return *src_; }
  const FinCategory& tgt() const noexcept { return *tgt_; }
  const CategoryPtr& src_ptr() const noexcept { return src_; }
  const CategoryPtr& tgt_ptr() const noexcept { return tgt_; }

  ObjId operator()(ObjId x) const { return obj_map_.at(x.value); }
  MorId operator()(MorId f) const { return mor_map_.at(f.value); }

  const std::vector<ObjId>& obj_map() const noexcept { return obj_map_; }
  const std::vector<MorId>& mor_map() const noexcept { return mor_map_; }

  // Equality is on-the-nose: same categories, same maps.
  friend bool operator==(const FunctorMap& a, const FunctorMap& b);

 private:
  CategoryPtr src_;
  CategoryPtr tgt_;
  std::vector<ObjId> obj_map_;
  std::vector<MorId> mor_map_;
};

Verdict check_functor(const FunctorMap& f);

// g.f. Throws Error(kCategoryMismatch) unless tgt f = src g.
FunctorMap compose_functors(const FunctorMap& g, const FunctorMap& f);

struct FunctorProfile {
  bool inj_obj = false;
  bool inj_mor = false;
  bool surj_obj = false;
  bool surj_mor = false;
  bool surj_composable_pairs = false;
  bool is_discrete_opfibration = false;
  bool is_cosieve = false;
  bool is_mono = false;

  friend bool operator==(const FunctorProfile&, const FunctorProfile&) = default;
};

FunctorProfile classify_functor(const FunctorMap& f);

bool is_discrete_opfibration(const FunctorMap& f);
bool is_cosieve(const FunctorMap& f);

// The unique a in out(x) with f(a) = b when f is a discrete opfibration at
// (x, b); nullopt when there is no lift or more than one.
std::optional<MorId> unique_lift(const FunctorMap& f, ObjId x, MorId b);

// Searches for G1 != G2 : tgt F -> U with G1.F = G2.F over every U in the
// universe. pass = not refuted; the label says whether F is certified epic
// (surjective on objects and morphisms) or merely unrefuted.
Verdict is_epic_functor_bounded(const FunctorMap& f, std::span<const CategoryPtr> universe);

struct Subcategory {
  CategoryPtr category;
  FunctorMap inclusion;
};

// Subcategory on the masked objects and morphisms, in parent order. Throws
// Error(kInvalidArgument) if the masks are not closed under identities,
// typing and composition.
Subcategory make_subcategory(const CategoryPtr& parent, const std::vector<bool>& objects,
                             const std::vector<bool>& morphisms, std::string label = {});

// Largest subcategory of the common source on which f1 and f2 agree.
Subcategory agreement_subcategory(const FunctorMap& f1, const FunctorMap& f2);

// Smallest subcategory containing the object and morphism images of f; for a
// lens get this is an out-degree-zero subcategory.
Subcategory image_subcategory(const FunctorMap& f);

// Human-readable one-line rendering, e.g. "objects[X->0, Y->1] arrows[f->u]".
std::string describe(const FunctorMap& f);

// Makes display names unique by appending primes.
void uniquify_names(std::vector<std::string>& names);

}  // namespace lenslab

#endif  // LENSLAB_FINCAT_HPP_
