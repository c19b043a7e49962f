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

#include <algorithm>

#include "doctest.h"
#include "lenslab/universe.hpp"
#include "support.hpp"

using namespace lenslab;
using namespace lenslab::testing;

namespace {

// Redraws one defined put entry to another morphism out of the same object.
std::optional<Lens> mutate(Rng& rng, const Lens& l) {
  std::vector<std::pair<ObjId, MorId>> cells;
  for (ObjId a : l.src().objects()) {
    for (MorId b : l.tgt().out(l.get()(a))) {
      if (l.src().out(a).size() > 1) cells.emplace_back(a, b);
    }
  }
  if (cells.empty()) return std::nullopt;
  const auto [a, b] = cells[rng() % cells.size()];
  const auto out = l.src().out(a);
  const MorId old = l.put(a, b);
  MorId v = old;
  while (v == old) v = out[rng() % out.size()];
  PutTable t = l.put_table();
  t.set(a, b, v);
  return Lens(l.get(), t);
}

}  // namespace

TEST_SUITE("lens") {

TEST_CASE("identity lens") {
  for (const auto& c : standard_universe(3)) {
    const Lens id = Lens::identity(c);
    CHECK(validate_lens(id).pass);
    CHECK(naive_lawful(id));
    CHECK(is_isomorphism(id));
  }
}

TEST_CASE("validate_lens agrees with the naive laws, on lawful lenses and mutants") {
  Rng rng(11);
  const auto universe = standard_universe(2);
  std::size_t lawful = 0, mutants = 0;
  for (const auto& a : universe) {
    for (const auto& b : universe) {
      for_each_lens(a, b, [&](const Lens& l) {
        CHECK(validate_lens(l).pass);
        CHECK(naive_lawful(l));
        ++lawful;
        if (auto m = mutate(rng, l)) {
          CHECK(validate_lens(*m).pass == naive_lawful(*m));
          ++mutants;
        }
        return true;
      });
    }
  }
  CHECK(lawful > 50);
  CHECK(mutants > 0);
}

TEST_CASE("a missing put entry is reported") {
  auto two = interval_category();
  const Lens id = Lens::identity(two);
  PutTable t = id.put_table();
  const MorId u = *std::find_if(two->morphisms().begin(), two->morphisms().end(),
                                [&](MorId m) { return !two->is_identity(m); });
  t.clear(ObjId{0}, u);
  const Verdict v = validate_lens(Lens(id.get(), t));
  CHECK_FALSE(v.pass);
  CHECK(v.witness.get("object") == "0");
}

TEST_CASE("composition: get of the composite is the composite of gets") {
  Rng rng(5);
  const auto universe = standard_universe(2);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& a = universe[rng() % universe.size()];
    const auto& b = universe[rng() % universe.size()];
    const auto& c = universe[rng() % universe.size()];
    const auto f = random_lens(rng, a, b);
    const auto g = random_lens(rng, b, c);
    if (!f || !g) continue;
    const Lens gf = compose_lenses(*g, *f);
    CHECK(gf.get() == compose_functors(g->get(), f->get()));
    CHECK(naive_lawful(gf));
    const auto h = random_lens(rng, c, a);
    if (h) CHECK(compose_lenses(*h, gf) == compose_lenses(compose_lenses(*h, *g), *f));
    CHECK(compose_lenses(Lens::identity(b), *f) == *f);
  }
}

TEST_CASE("composition rejects mismatched lenses") {
  const Lens a = Lens::identity(interval_category());
  const Lens b = Lens::identity(iso_category());
  try {
    compose_lenses(a, b);
    FAIL("expected CategoryMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCategoryMismatch);
  }
}

TEST_CASE("a discrete opfibration carries exactly one lens structure") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto c = random_base(rng, 3);
    const FunctorMap f = random_dopf(rng, c, 6);
    REQUIRE(check_functor(f).pass);
    REQUIRE(is_discrete_opfibration(f));
    const auto all = enumerate_lens_structures(f);
    REQUIRE(all.size() == 1);
    CHECK(all.front() == lens_from_dopf(f));
    CHECK(naive_lawful(all.front()));
  }
}

TEST_CASE("lens_from_dopf rejects other functors") {
  auto one = terminal_category();
  auto two = interval_category();
  FunctorMap bang(two, one, {ObjId{0}, ObjId{0}},
                  std::vector<MorId>(two->num_morphisms(), one->identity(ObjId{0})));
  try {
    lens_from_dopf(bang);
    FAIL("expected NotDiscreteOpfibration");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotDiscreteOpfibration);
  }
  // 2 -> 1 has the single lens structure putting the identity back as id.
  CHECK(enumerate_lens_structures(bang).size() == 1);
}

TEST_CASE("fixed put entries restrict the enumeration") {
  auto a = preorder({"x", "y1", "y2"}, {{"f1", "x", "y1"}, {"f2", "x", "y2"}}, "A");
  auto two = interval_category();
  const MorId u = *std::find_if(two->morphisms().begin(), two->morphisms().end(),
                                [&](MorId m) { return !two->is_identity(m); });
  const std::vector<ObjId> om{ObjId{0}, ObjId{1}, ObjId{1}};
  std::vector<MorId> mm(a->num_morphisms());
  for (MorId m : a->morphisms()) {
    mm[m.value] = a->is_identity(m) ? two->identity(om[a->src(m).value]) : u;
  }
  const FunctorMap g(a, two, om, mm);
  REQUIRE(check_functor(g).pass);
  CHECK(enumerate_lens_structures(g).size() == 2);
  const auto fixed = enumerate_lens_structures(g, {{ObjId{0}, u, *a->find_morphism("f2")}});
  REQUIRE(fixed.size() == 1);
  CHECK(fixed.front().put(ObjId{0}, u) == *a->find_morphism("f2"));
  CHECK(enumerate_lens_structures(g, {}, 1).size() == 1);
}

TEST_CASE("image factorisation") {
  Rng rng(17);
  const auto universe = standard_universe(3);
  std::size_t seen = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const auto& a = universe[rng() % universe.size()];
    const auto& b = universe[rng() % universe.size()];
    const auto l = random_lens(rng, a, b);
    if (!l) continue;
    ++seen;
    const auto fac = image_factorise(*l);
    CHECK(compose_lenses(fac.mono, fac.epi) == *l);
    CHECK(is_cosieve(fac.mono.get()));
    const auto p = classify_functor(fac.epi.get());
    CHECK(p.surj_obj);
    CHECK(p.surj_mor);
    CHECK(naive_lawful(fac.epi));
    CHECK(naive_lawful(fac.mono));
    // The image is closed under outgoing arrows.
    for (ObjId x : fac.image->objects()) {
      for (MorId m : b->out(fac.mono.get()(x))) {
        bool hit = false;
        for (MorId n : fac.image->morphisms()) hit = hit || fac.mono.get()(n) == m;
        CHECK(hit);
      }
    }
  }
  CHECK(seen > 20);
}

TEST_CASE("classification") {
  const auto universe = standard_universe(2);
  std::size_t epics = 0, isos = 0;
  for (const auto& a : universe) {
    for (const auto& b : universe) {
      for_each_lens(a, b, [&](const Lens& l) {
        const LensClass k = classify_lens(l);
        CHECK(k.consistent);
        CHECK(k.is_epic == (k.surj_obj && k.surj_mor));
        if (k.is_epic) {
          ++epics;
          CHECK(classify_functor(l.get()).surj_composable_pairs);
        }
        if (k.is_monic) CHECK(is_cosieve(l.get()));
        if (k.is_monic && k.is_epic) {
          ++isos;
          CHECK(is_isomorphism(l));
          const Lens inv = inverse_lens(l);
          CHECK(compose_lenses(inv, l) == Lens::identity(l.src_ptr()));
          CHECK(compose_lenses(l, inv) == Lens::identity(l.tgt_ptr()));
        }
        return true;
      });
    }
  }
  CHECK(epics > 0);
  CHECK(isos > 0);
}

TEST_CASE("describe_puts lists non-identity entries") {
  const Lens id = Lens::identity(interval_category());
  CHECK(describe_puts(id).find("id_") == std::string::npos);
}

}  // TEST_SUITE
