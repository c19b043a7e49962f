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

// Exhaustive enumeration of functors between finite categories, and the
// small families of test categories ("universes") used by bounded searches.

#ifndef LENSLAB_UNIVERSE_HPP_
#define LENSLAB_UNIVERSE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lenslab/fincat.hpp"

namespace lenslab {

struct FunctorSearch {
  bool injective_objects = false;
  bool injective_morphisms = false;
  // When set, candidate images are tried in a random order drawn from this
  // generator instead of ascending order.
  std::mt19937_64* shuffle = nullptr;
};

// Calls `visit` on every functor src -> tgt in lexicographic order of
// (object map, arrow map), unless options.shuffle is set. Stops early when
// `visit` returns false.
void for_each_functor(const CategoryPtr& src, const CategoryPtr& tgt,
                      const std::function<bool(const FunctorMap&)>& visit,
                      FunctorSearch options = {});

std::vector<FunctorMap> enumerate_functors(const CategoryPtr& src, const CategoryPtr& tgt,
                                           std::size_t limit = static_cast<std::size_t>(-1));

// An isomorphism a -> b, if one exists.
std::optional<FunctorMap> find_isomorphism(const CategoryPtr& a, const CategoryPtr& b);

// Every preorder on 1..max_objects objects, one per isomorphism class.
std::vector<CategoryPtr> preorder_universe(std::size_t max_objects);

// preorder_universe(max_objects) plus a fixed list of small non-thin
// categories: the monoids of order two, the parallel pair, and the interval
// with an idempotent at its source.
std::vector<CategoryPtr> standard_universe(std::size_t max_objects = 3);

}  // namespace lenslab

#endif  // LENSLAB_UNIVERSE_HPP_
