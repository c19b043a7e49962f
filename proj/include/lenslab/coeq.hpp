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

// Coequalisers: Cat quotients of parallel pairs, the reflection condition
//
//   put_G(B, d) = put_E(B, E put_G(B, d))
//
// for lifting a Cat coequaliser to Lens, comparison lenses and regular-epi
// certificates.

#ifndef LENSLAB_COEQ_HPP_
#define LENSLAB_COEQ_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "lenslab/lens.hpp"
#include "lenslab/proxy.hpp"

namespace lenslab {

// The smallest equivalence on obj(B) with F1 A ~ F2 A.
struct ObjEquiv {
  std::vector<std::uint32_t> class_of;       // per object of B
  std::vector<std::vector<ObjId>> classes;  // ordered by least member
};

ObjEquiv object_equiv_closure(const FunctorMap& f1, const FunctorMap& f2);

inline constexpr std::size_t kDefaultCoeqBound = 64;

struct CatCoequaliser {
  CategoryPtr quotient;
  FunctorMap projection;  // B -> quotient
  ObjEquiv equiv;
  // For each quotient morphism, a path of B-morphisms (first step first)
  // whose image it is. Identities have the empty path.
  std::vector<std::vector<MorId>> words;
  FunctorMap f1;
  FunctorMap f2;
};

// Enumerates the quotient of B by F1 b = F2 b. Throws kBoundExceeded as
// soon as some hom-set holds more than `bound` distinct morphisms, and
// kCategoryMismatch unless F1 and F2 are parallel.
CatCoequaliser cat_coequaliser_bounded(const FunctorMap& f1, const FunctorMap& f2,
                                       std::size_t bound = kDefaultCoeqBound);

// The unique functor H with H.projection = g. Throws kNotACofork.
FunctorMap mediating_functor(const CatCoequaliser& q, const FunctorMap& g);

struct CoequaliserMatch {
  Verdict verdict;
  // quotient -> tgt E, an isomorphism when the verdict passes.
  std::optional<FunctorMap> comparison;
};

// Whether e coequalises f1 and f2 in Cat (on the nose, up to the unique
// comparison isomorphism from the computed quotient).
CoequaliserMatch is_cat_coequaliser(const FunctorMap& e, const FunctorMap& f1,
                                    const FunctorMap& f2, std::size_t bound = kDefaultCoeqBound);

// The reflection equation for every (B, d). Throws kCategoryMismatch.
Verdict necessary_condition_check(const Lens& e, const Lens& g);

// As above, after re-checking that e and g both cofork f1 and f2 (throws
// kPreconditionFailed otherwise).
Verdict necessary_condition_check(const Lens& e, const Lens& g, const Lens& f1, const Lens& f2);

// Reflection relative to the supplied coforks. Throws kPreconditionFailed
// when e or a witness does not cofork, or get e is not a Cat coequaliser.
Verdict reflection_check(const Lens& e, const Lens& f1, const Lens& f2,
                         const std::vector<Lens>& witnesses,
                         std::size_t bound = kDefaultCoeqBound);

// H: C -> D over the functor h (h.get e = get g) with put_H(EB, d) = E put_G(B, d).
// Throws kNotWellDefined when two objects over the same C disagree, and
// kPreconditionFailed when e is not surjective on objects or h does not
// factor get g.
Lens lens_over_mediator(const Lens& e, const Lens& g, const FunctorMap& h);

// Comparison lens through the kernel pair of get e (e must be surjective on
// composable pairs and g must cofork its kernel pair).
Lens comparison_lens(const Lens& e, const Lens& g);

// Comparison lens through the Cat coequaliser of f1 and f2.
Lens comparison_lens(const Lens& e, const Lens& g, const Lens& f1, const Lens& f2,
                     std::size_t bound = kDefaultCoeqBound);

// The unique H with g = H.e for e surjective on composable pairs. Throws
// kNotSurjectiveOnComposablePairs or kNotACofork.
FunctorMap cat_effective_epi_comparison(const FunctorMap& e, const FunctorMap& g);

struct CertificateOptions {
  // Cofork targets. Empty means standard_universe(3) plus the target of E.
  std::vector<CategoryPtr> targets;
  std::uint64_t seed = 20260101;
  std::size_t samples = 16;  // per target above the exhaustive cutoff
  std::size_t exhaustive_cutoff = 3;
  std::size_t bound = kDefaultCoeqBound;
};

struct RegularEpiCertificate {
  CategoryPtr kernel_apex;
  Verdict cofork;
  Verdict composable_pairs;
  Verdict cat_coequaliser;
  Verdict reflection;
  std::size_t coforks_checked = 0;
  std::size_t sampled = 0;
  std::uint64_t seed = 0;

  bool pass() const {
    return cofork.pass && composable_pairs.pass && cat_coequaliser.pass && reflection.pass;
  }
  std::vector<Verdict> verdicts() const {
    return {cofork, composable_pairs, cat_coequaliser, reflection};
  }
};

// Throws kNotEpic.
RegularEpiCertificate regular_epi_certificate(const Lens& e, const CertificateOptions& options = {});

// Every lens G: B -> T, T in targets, with G.f1 = G.f2.
std::vector<Lens> enumerate_coforks_bounded(const Lens& f1, const Lens& f2,
                                            const std::vector<CategoryPtr>& targets);

// g.f1 = g.f2 as lenses.
bool coforks(const Lens& g, const Lens& f1, const Lens& f2);

}  // namespace lenslab

#endif  // LENSLAB_COEQ_HPP_
