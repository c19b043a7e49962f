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

#include "doctest.h"
#include "lenslab/proxy.hpp"
#include "lenslab/pushout.hpp"
#include "lenslab/universe.hpp"
#include "support.hpp"

using namespace lenslab;
using namespace lenslab::testing;

namespace {

struct Span {
  FunctorMap f;  // A -> C, a discrete opfibration
  FunctorMap j;  // A -> B, a cosieve
};

Span random_span(Rng& rng) {
  const auto c = random_base(rng, 3);
  FunctorMap f = random_dopf(rng, c, 5);
  FunctorMap j = random_cosieve_from(rng, f.src_ptr(), 1 + rng() % 2);
  return {std::move(f), std::move(j)};
}

}  // namespace

TEST_SUITE("pushout") {

TEST_CASE("pushouts along cosieves: square, cosieve, opfibration, lawful puts") {
  Rng rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const Span s = random_span(rng);
    REQUIRE(is_cosieve(s.j));
    const PushoutResult po = pushout_along_cosieve(s.f, s.j);
    CHECK(validate_category(*po.d).pass);
    CHECK(check_functor(po.fbar).pass);
    CHECK(check_functor(po.jbar).pass);
    CHECK(compose_functors(po.fbar, s.j) == compose_functors(po.jbar, s.f));
    CHECK(is_cosieve(po.jbar));
    CHECK(is_discrete_opfibration(po.fbar));
    CHECK(sim_respects_puts(po, lens_from_dopf(s.f)).pass);

    const LensPushout lp = lift_pushout_to_lens(lens_from_dopf(s.f), lens_from_dopf(s.j));
    CHECK(naive_lawful(lp.fbar));
    CHECK(naive_lawful(lp.jbar));
    CHECK(lens_square_commutes(lens_from_dopf(s.j), lens_from_dopf(s.f), lp.fbar, lp.jbar).pass);
  }
}

TEST_CASE("copair is the unique mediating functor") {
  Rng rng(31);
  const auto targets = standard_universe(2);
  std::size_t cocones = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const Span s = random_span(rng);
    const PushoutResult po = pushout_along_cosieve(s.f, s.j);
    const auto& e = targets[rng() % targets.size()];
    for_each_functor(s.f.tgt_ptr(), e, [&](const FunctorMap& fp) {
      for_each_functor(s.j.tgt_ptr(), e, [&](const FunctorMap& gp) {
        if (!(compose_functors(fp, s.f) == compose_functors(gp, s.j))) return true;
        ++cocones;
        const FunctorMap h = copair(fp, gp, po);
        CHECK(check_functor(h).pass);
        CHECK(compose_functors(h, po.jbar) == fp);
        CHECK(compose_functors(h, po.fbar) == gp);
        std::size_t mediators = 0;
        for_each_functor(po.d, e, [&](const FunctorMap& k) {
          if (compose_functors(k, po.jbar) == fp && compose_functors(k, po.fbar) == gp) {
            ++mediators;
          }
          return true;
        });
        CHECK(mediators == 1);
        return true;
      });
      return true;
    });
  }
  CHECK(cocones > 10);
}

TEST_CASE("copair rejects a non-cocone") {
  auto one = terminal_category();
  auto two = interval_category();
  FunctorMap j(one, two, {ObjId{1}}, {two->identity(ObjId{1})});
  const FunctorMap f = FunctorMap::identity(one);
  const PushoutResult po = pushout_along_cosieve(f, j);
  FunctorMap to0(one, two, {ObjId{0}}, {two->identity(ObjId{0})});
  try {
    copair(to0, FunctorMap::identity(two), po);
    FAIL("expected NotACocone");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotACocone);
  }
}

TEST_CASE("pushout_along_cosieve rejects a non-cosieve") {
  auto one = terminal_category();
  auto two = interval_category();
  FunctorMap bang(two, one, {ObjId{0}, ObjId{0}},
                  std::vector<MorId>(two->num_morphisms(), one->identity(ObjId{0})));
  try {
    pushout_along_cosieve(FunctorMap::identity(two), bang);
    FAIL("expected NotCosieve");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotCosieve);
  }
}

TEST_CASE("coproducts") {
  auto two = interval_category();
  auto iso = iso_category();
  const Coproduct s = coproduct(two, iso);
  CHECK(s.sum->num_objects() == 4);
  CHECK(s.sum->num_morphisms() == 7);
  CHECK(is_cosieve(s.left));
  CHECK(is_cosieve(s.right));
  const FunctorMap h =
      copair_coproduct(s, FunctorMap::identity(two), enumerate_functors(iso, two).front());
  CHECK(compose_functors(h, s.left) == FunctorMap::identity(two));
}

TEST_CASE("monic lenses are effective and their cokernel pairs are cosieves") {
  const auto universe = standard_universe(3);
  std::size_t monos = 0;
  for (const auto& a : universe) {
    for (const auto& b : universe) {
      if (a->num_objects() > b->num_objects()) continue;
      FunctorSearch inj;
      inj.injective_objects = true;
      for_each_functor(a, b, [&](const FunctorMap& f) {
        if (!is_cosieve(f)) return true;
        ++monos;
        const Lens m = lens_from_dopf(f);
        CHECK(effective_mono_check(m).pass);
        const CokernelPair k = cokernel_pair(m);
        CHECK(is_cosieve(k.j1.get()));
        CHECK(is_cosieve(k.j2.get()));
        CHECK(compose_lenses(k.j1, m) == compose_lenses(k.j2, m));
        return true;
      }, inj);
    }
  }
  CHECK(monos > 20);
}

TEST_CASE("effective_mono_check rejects a non-monic lens") {
  auto one = terminal_category();
  auto two = interval_category();
  FunctorMap bang(two, one, {ObjId{0}, ObjId{0}},
                  std::vector<MorId>(two->num_morphisms(), one->identity(ObjId{0})));
  try {
    effective_mono_check(enumerate_lens_structures(bang).front());
    FAIL("expected NotMonic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotMonic);
  }
}

TEST_CASE("diagonal fillers of epi-mono squares") {
  Rng rng(37);
  const auto universe = standard_universe(3);
  std::size_t squares = 0;
  for (int trial = 0; trial < 20000 && squares < 30; ++trial) {
    const auto& a = universe[rng() % universe.size()];
    const auto& b = universe[rng() % universe.size()];
    const auto& c = universe[rng() % universe.size()];
    const auto& d = universe[rng() % universe.size()];
    const auto e = random_lens(rng, a, b);
    if (!e || !classify_lens(*e).is_epic) continue;
    const auto h0 = random_lens(rng, b, c);
    if (!h0) continue;
    const auto m = random_lens(rng, c, d);
    if (!m || !classify_lens(*m).is_monic) continue;
    ++squares;
    const Lens f = compose_lenses(*h0, *e);
    const Lens g = compose_lenses(*m, *h0);
    const Lens h = diagonal_filler(*e, *m, f, g);
    CHECK(h == *h0);
    CHECK(compose_lenses(h, *e) == f);
    CHECK(compose_lenses(*m, h) == g);
  }
  CHECK(squares >= 10);
}

}  // TEST_SUITE
