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

// Proxy pullbacks of lens cospans A -F-> C <-G- B.
//
// The apex is the strict pullback of the gets: objects <A,B> with FA = GB
// and morphisms <a,b> with Fa = Gb, both in lexicographic order. The legs
// project, with puts
//
//   right  put(<A,B>, b) = <put_F(A, Gb), b>
//   left   put(<A,B>, a) = <a, put_G(B, Fa)>

#ifndef LENSLAB_PROXY_HPP_
#define LENSLAB_PROXY_HPP_

#include <utility>
#include <vector>

#include "lenslab/lens.hpp"

namespace lenslab {

struct LensSpan {
  CategoryPtr apex;
  Lens left;   // apex -> A
  Lens right;  // apex -> B
  std::vector<std::pair<ObjId, ObjId>> obj_pairs;
  std::vector<std::pair<MorId, MorId>> mor_pairs;
};

struct CatSpan {
  CategoryPtr apex;
  FunctorMap left;   // apex -> A
  FunctorMap right;  // apex -> B
  std::vector<std::pair<ObjId, ObjId>> obj_pairs;
  std::vector<std::pair<MorId, MorId>> mor_pairs;
};

// The strict pullback of a cospan of functors, named as above. Throws
// kCategoryMismatch.
CatSpan cat_pullback(const FunctorMap& f, const FunctorMap& g);

// Throws kCategoryMismatch unless F and G share a target.
LensSpan proxy_pullback(const Lens& f, const Lens& g);

// proxy_pullback(f, f).
LensSpan proxy_kernel_pair(const Lens& f);

// Compares right.top with bottom.left as lenses. Throws kCategoryMismatch
// when the boundary categories do not line up.
Verdict lens_square_commutes(const Lens& top, const Lens& left, const Lens& right,
                             const Lens& bottom);

// First difference between two parallel lenses, as a failing verdict, or a
// pass. `check` names the verdict.
Verdict compare_lenses(const Lens& lhs, const Lens& rhs, std::string check);

}  // namespace lenslab

#endif  // LENSLAB_PROXY_HPP_
