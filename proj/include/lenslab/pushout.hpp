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

// Pushouts of a functor F: A -> C along a cosieve J: A -> B.
//
// D has objects C + (B \ JA). Its hom-sets are those of C, those of B
// between objects outside JA, nothing from C to B, and for B1 outside JA
// and C2 in C the classes of pairs (c, b), b: B1 -> JA, c: FA -> C2, under
// the equivalence generated by (c, Ja.b) ~ (c.Fa, b).

#ifndef LENSLAB_PUSHOUT_HPP_
#define LENSLAB_PUSHOUT_HPP_

#include <cstdint>
#include <vector>

#include "lenslab/lens.hpp"

namespace lenslab {

// A pair (c, b) with b: B1 -> J(A) and c: F(A) -> C2.
struct SimPair {
  ObjId a;
  MorId b;
  MorId c;
  friend auto operator<=>(const SimPair&, const SimPair&) = default;
};

struct SimClass {
  ObjId source;  // B1 in B
  ObjId target;  // C2 in C
  std::vector<SimPair> members;  // ascending; members.front() is the representative
};

struct SimClasses {
  std::vector<SimClass> classes;  // by (source, target, representative)
};

struct PushoutResult {
  enum class Side : std::uint8_t { kLeft, kRight };      // from C / from B
  enum class Kind : std::uint8_t { kLeft, kRight, kClass };  // C / B / class

  struct ObjTag {
    Side side;
    std::uint32_t index;  // object of C or of B
  };
  struct MorTag {
    Kind kind;
    std::uint32_t index;  // morphism of C, morphism of B, or class index
  };

  CategoryPtr d;
  FunctorMap fbar;  // B -> D
  FunctorMap jbar;  // C -> D
  std::vector<ObjTag> obj_tags;
  std::vector<MorTag> mor_tags;
  SimClasses classes;
  // The span the pushout was built from.
  FunctorMap f;  // A -> C
  FunctorMap j;  // A -> B
};

// Throws kNotCosieve or kCategoryMismatch.
PushoutResult pushout_along_cosieve(const FunctorMap& f, const FunctorMap& j);

// The unique H: D -> E with H.Jbar = fp and H.Fbar = gp, where fp: C -> E,
// gp: B -> E and fp.F = gp.J. Throws kNotACocone.
FunctorMap copair(const FunctorMap& fp, const FunctorMap& gp, const PushoutResult& po);

struct Coproduct {
  CategoryPtr sum;
  FunctorMap left;   // C -> C + B
  FunctorMap right;  // B -> C + B
};

// C + B with C first. Names are made unique with primes.
Coproduct coproduct(const CategoryPtr& c, const CategoryPtr& b);

// [f, g]: C + B -> E. Throws kCategoryMismatch.
FunctorMap copair_coproduct(const Coproduct& sum, const FunctorMap& f, const FunctorMap& g);

// Checks put_F(c1).b1 = put_F(c2).b2 across every class, for F a
// discrete opfibration.
Verdict sim_respects_puts(const PushoutResult& po, const Lens& f);

struct LensPushout {
  PushoutResult pushout;
  Lens fbar;  // B -> D
  Lens jbar;  // C -> D
};

// Pushout of f (get a discrete opfibration) along the monic m, created from
// the Cat pushout. Throws kNotDiscreteOpfibration or kNotMonic.
LensPushout lift_pushout_to_lens(const Lens& f, const Lens& m);

struct CokernelPair {
  Lens j1;
  Lens j2;
  CategoryPtr coker;
  PushoutResult pushout;
};

// Through the image factorisation: pushout of the mono part along itself.
CokernelPair cokernel_pair(const Lens& l);

// Throws kNotMonic.
Verdict effective_mono_check(const Lens& m);

// The unique h with h.e = f and m.h = g. Throws kNotEpic, kNotMonic or
// kSquareDoesNotCommute.
Lens diagonal_filler(const Lens& e, const Lens& m, const Lens& f, const Lens& g);

}  // namespace lenslab

#endif  // LENSLAB_PUSHOUT_HPP_
