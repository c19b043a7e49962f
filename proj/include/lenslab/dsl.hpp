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

// Workspace files (.lns).
//
//   # comment
//   category B {
//     objects: X, Y1, Y2;
//     arrows: f1: X -> Y1, f2: X -> Y2;
//     mode: preorder;            # or free(N), or table { compose g.f = h; }
//   }
//   functor G: B -> T { objects X -> 0, Y1 -> 1, Y2 -> 1; arrows f1 -> u; }
//   lens L: B -> T { get: G; put X (u) = f1; }
//
// Identifiers are [A-Za-z0-9_']+ or double-quoted strings. Arrow maps may
// be omitted wherever the image is forced (identities, singleton hom-sets,
// composites of mapped arrows). Lens puts are completed from the given
// clauses; a lens must have exactly one lawful completion.

#ifndef LENSLAB_DSL_HPP_
#define LENSLAB_DSL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lenslab/lens.hpp"

namespace lenslab {

struct SourcePos {
  int line = 1;
  int column = 1;
};

struct MapClause {
  std::string from;
  std::string to;
  SourcePos pos;
};

struct FunctorBody {
  std::vector<MapClause> objects;
  std::vector<MapClause> arrows;
};

struct PutClause {
  std::string object;
  std::string morphism;
  std::string value;
  SourcePos pos;
};

struct CategoryDecl {
  std::string name;
  GraphPresentation presentation;
  CategoryPtr category;
  SourcePos pos;
};

struct FunctorDecl {
  std::string name;
  std::string src;
  std::string tgt;
  FunctorBody body;
  std::optional<FunctorMap> functor;
  SourcePos pos;
};

struct LensDecl {
  std::string name;
  std::string src;
  std::string tgt;
  std::string get_ref;                    // named functor, or empty
  std::optional<FunctorBody> inline_get;  // when get_ref is empty
  std::vector<PutClause> puts;
  std::optional<Lens> lens;
  SourcePos pos;
};

class Workspace {
 public:
  enum class Kind { kCategory, kFunctor, kLens };

  std::vector<CategoryDecl> categories;
  std::vector<FunctorDecl> functors;
  std::vector<LensDecl> lenses;
  // Declaration order: (kind, index into the matching vector).
  std::vector<std::pair<Kind, std::size_t>> order;

  const CategoryDecl* find_category(std::string_view name) const;
  const FunctorDecl* find_functor(std::string_view name) const;
  const LensDecl* find_lens(std::string_view name) const;

  // A category by name. Throws kResolutionError.
  CategoryPtr category(std::string_view name) const;
  // A functor by name; a lens name resolves to its get. Throws kResolutionError.
  FunctorMap functor(std::string_view name) const;
  // A lens by name; a functor name resolves to the unique lens over it when
  // it is a discrete opfibration. Throws kResolutionError or
  // kNotDiscreteOpfibration.
  Lens lens(std::string_view name) const;
  bool is_lens(std::string_view name) const { return find_lens(name) != nullptr; }
};

// Parses and resolves. Errors carry "line:column: " prefixes and use
// kParseError, kResolutionError or kValidationError. With validate = false,
// functors are not law-checked and lenses with no lawful completion keep
// their literal put clauses.
Workspace parse_workspace(std::string_view text, bool validate = true);

std::string print_workspace(const Workspace& ws);

// Same declarations, categories, functors and lenses (structurally).
bool same_workspace(const Workspace& a, const Workspace& b);

}  // namespace lenslab

#endif  // LENSLAB_DSL_HPP_
