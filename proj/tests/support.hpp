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

// Shared test helpers: random discrete opfibrations and cosieves, a naive
// lens-law oracle independent of validate_lens, and the corpus loader.

#ifndef LENSLAB_TESTS_SUPPORT_HPP_
#define LENSLAB_TESTS_SUPPORT_HPP_

#include <random>
#include <string>
#include <vector>

#include "lenslab/dsl.hpp"
#include "lenslab/lens.hpp"

namespace lenslab::testing {

using Rng = std::mt19937_64;

// A random poset-like preorder on n objects (edges only go up in index).
CategoryPtr random_preorder(Rng& rng, std::size_t n, double edge_probability = 0.4);

// Small categories to build on: random preorders plus the non-thin members
// of the standard universe.
CategoryPtr random_base(Rng& rng, std::size_t max_objects);

// The projection c/C -> C.
FunctorMap coslice_projection(const CategoryPtr& c, ObjId x);

// Inclusion of a random nonempty out-degree-zero subcategory.
FunctorMap random_upset_inclusion(Rng& rng, const CategoryPtr& c);

// A discrete opfibration into c whose source has at most max_source objects
// (a coproduct of coslices and up-sets of c).
FunctorMap random_dopf(Rng& rng, const CategoryPtr& c, std::size_t max_source);

// A cosieve a -> B adding `extra` objects in front of a. Each new object
// either has no arrows into a or has the arrows of a representable a(x, -);
// with two new objects an arrow between them may be added.
FunctorMap random_cosieve_from(Rng& rng, const CategoryPtr& a, std::size_t extra);

// A random lens src -> tgt, if any exists (uniform over an exhaustive list).
std::optional<Lens> random_lens(Rng& rng, const CategoryPtr& src, const CategoryPtr& tgt);

// Lens laws checked straight from the definitions.
bool naive_lawful(const Lens& l);

struct CorpusEntry {
  std::string file;
  Workspace workspace;
};

std::string corpus_dir();
std::vector<CorpusEntry> load_corpus();

struct NamedLens {
  std::string name;  // "file:name"
  Lens lens;
};

// Declared lenses, plus the canonical lens over every declared functor that
// is a discrete opfibration.
std::vector<NamedLens> corpus_lenses(const std::vector<CorpusEntry>& corpus);

}  // namespace lenslab::testing

#endif  // LENSLAB_TESTS_SUPPORT_HPP_
