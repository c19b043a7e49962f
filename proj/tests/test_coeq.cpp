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

#include <optional>

#include "doctest.h"
#include "lenslab/coeq.hpp"
#include "lenslab/universe.hpp"
#include "support.hpp"

using namespace lenslab;
using namespace lenslab::testing;

TEST_SUITE("coeq") {

TEST_CASE("Cat coequalisers are coforks through which every cofork factors uniquely") {
  const auto small = standard_universe(2);
  const auto targets = standard_universe(2);
  std::size_t pairs = 0;
  for (const auto& a : small) {
    for (const auto& b : standard_universe(3)) {
      if (a->num_objects() == 0 || b->num_objects() > 3) continue;
      const auto fs = enumerate_functors(a, b, 6);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
          std::optional<CatCoequaliser> maybe;
          try {
            maybe = cat_coequaliser_bounded(fs[i], fs[j], 32);
          } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::kBoundExceeded);
            continue;
          }
          const CatCoequaliser& q = *maybe;
          ++pairs;
          CHECK(validate_category(*q.quotient).pass);
          CHECK(compose_functors(q.projection, fs[i]) == compose_functors(q.projection, fs[j]));
          CHECK(is_cat_coequaliser(q.projection, fs[i], fs[j], 32).verdict.pass);
          for (const auto& e : targets) {
            for_each_functor(b, e, [&](const FunctorMap& g) {
              if (!(compose_functors(g, fs[i]) == compose_functors(g, fs[j]))) return true;
              const FunctorMap h = mediating_functor(q, g);
              CHECK(compose_functors(h, q.projection) == g);
              std::size_t count = 0;
              for_each_functor(q.quotient, e, [&](const FunctorMap& k) {
                count += compose_functors(k, q.projection) == g;
                return true;
              });
              CHECK(count == 1);
              return true;
            });
          }
        }
      }
    }
  }
  CHECK(pairs > 20);
}

TEST_CASE("identifying the two ends of the interval gives the naturals") {
  auto one = terminal_category();
  auto two = interval_category();
  FunctorMap p0(one, two, {ObjId{0}}, {two->identity(ObjId{0})});
  FunctorMap p1(one, two, {ObjId{1}}, {two->identity(ObjId{1})});
  for (std::size_t bound : {4, 64}) {
    try {
      cat_coequaliser_bounded(p0, p1, bound);
      FAIL("expected BoundExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kBoundExceeded);
    }
  }
  const ObjEquiv eq = object_equiv_closure(p0, p1);
  CHECK(eq.classes.size() == 1);
}

TEST_CASE("mediating functors out of a trivial coequaliser") {
  auto one = terminal_category();
  auto two = interval_category();
  FunctorMap p0(one, two, {ObjId{0}}, {two->identity(ObjId{0})});
  FunctorMap both0(two, two, {ObjId{0}, ObjId{0}},
                   std::vector<MorId>(two->num_morphisms(), two->identity(ObjId{0})));
  const auto q = cat_coequaliser_bounded(p0, p0);
  CHECK(q.quotient->num_morphisms() == 3);
  CHECK(check_functor(mediating_functor(q, both0)).pass);
  FunctorMap both1(two, two, {ObjId{1}, ObjId{1}},
                       std::vector<MorId>(two->num_morphisms(), two->identity(ObjId{1})));
  CHECK(compose_functors(mediating_functor(q, both1), q.projection) == both1);
}

TEST_CASE("comparison lenses through kernel pairs") {
  const auto universe = standard_universe(2);
  const auto targets = standard_universe(2);
  std::size_t compared = 0, refused = 0;
  for (const auto& a : standard_universe(3)) {
    for (const auto& b : universe) {
      for_each_lens(a, b, [&](const Lens& e) {
        if (!classify_lens(e).is_epic) return true;
        if (!classify_functor(e.get()).surj_composable_pairs) return true;
        const LensSpan kp = proxy_kernel_pair(e);
        for (const Lens& g : enumerate_coforks_bounded(kp.left, kp.right, targets)) {
          CHECK(coforks(g, kp.left, kp.right));
          if (necessary_condition_check(e, g).pass) {
            const Lens h = comparison_lens(e, g);
            CHECK(naive_lawful(h));
            CHECK(compose_lenses(h, e) == g);
            ++compared;
          } else {
            ++refused;
          }
        }
        return true;
      });
    }
  }
  CHECK(compared > 20);
  // Coforking the kernel pair forces the reflection equation at <B, B>.
  CHECK(refused == 0);
}

TEST_CASE("regular-epi certificates for discrete opfibrations onto the interval") {
  auto a = preorder({"x", "y", "z"}, {{"f", "x", "y"}}, "A");
  auto two = interval_category();
  std::vector<MorId> mm(a->num_morphisms());
  const std::vector<ObjId> om{ObjId{0}, ObjId{1}, ObjId{1}};
  for (MorId m : a->morphisms()) {
    mm[m.value] = a->is_identity(m) ? two->identity(om[a->src(m).value])
                                    : two->hom(ObjId{0}, ObjId{1}).front();
  }
  const FunctorMap get(a, two, om, mm);
  REQUIRE(check_functor(get).pass);
  const auto lenses = enumerate_lens_structures(get);
  REQUIRE(lenses.size() == 1);
  const auto cert = regular_epi_certificate(lenses.front());
  CHECK(cert.cofork.pass);
  CHECK(cert.composable_pairs.pass);
  CHECK(cert.cat_coequaliser.pass);
  CHECK(cert.reflection.pass);
  CHECK(cert.coforks_checked > 0);
  CHECK(cert.seed == 20260101);
}

TEST_CASE("regular_epi_certificate rejects non-epic lenses") {
  auto one = terminal_category();
  auto two = interval_category();
  FunctorMap p1(one, two, {ObjId{1}}, {two->identity(ObjId{1})});
  try {
    regular_epi_certificate(lens_from_dopf(p1));
    FAIL("expected NotEpic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotEpic);
  }
}

TEST_CASE("the corpus replays its reflection failures") {
  const auto corpus = load_corpus();
  const Workspace* nc = nullptr;
  for (const auto& c : corpus) {
    if (c.file == "no-coequaliser") nc = &c.workspace;
  }
  REQUIRE(nc != nullptr);
  const Lens g1 = nc->lens("G1");
  const Lens g2 = nc->lens("G2");
  const Verdict v = necessary_condition_check(g1, g2);
  CHECK_FALSE(v.pass);
  CHECK(v.check == "reflection");
  CHECK(v.witness.get("object") == "X'");
  CHECK(v.witness.get("lhs") == "f2'");
  CHECK(v.witness.get("rhs") == "f1'");
  const Lens f1 = nc->lens("F1");
  const Lens f2 = nc->lens("F2");
  CHECK(coforks(g1, f1, f2));
  CHECK(coforks(g2, f1, f2));
  CHECK_FALSE(reflection_check(g1, f1, f2, {g2}).pass);
  CHECK_FALSE(reflection_check(g2, f1, f2, {g1}).pass);
}

}  // TEST_SUITE
