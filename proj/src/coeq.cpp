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

#include "lenslab/coeq.hpp"

#include <deque>
#include <memory>
#include <random>

#include "lenslab/universe.hpp"
#include "union_find.hpp"

namespace lenslab {

ObjEquiv object_equiv_closure(const FunctorMap& f1, const FunctorMap& f2) {
  if (!same_category(f1.src_ptr(), f2.src_ptr()) || !same_category(f1.tgt_ptr(), f2.tgt_ptr())) {
    throw Error(ErrorCode::kCategoryMismatch, "functors are not parallel");
  }
  const auto& b = f1.tgt();
  detail::UnionFind uf(b.num_objects());
  for (ObjId x : f1.src().objects()) uf.unite(f1(x).value, f2(x).value);
  ObjEquiv eq;
  eq.class_of.assign(b.num_objects(), kNone);
  for (ObjId y : b.objects()) {
    const auto root = uf.find(y.value);
    if (eq.class_of[root] == kNone) {
      eq.class_of[root] = static_cast<std::uint32_t>(eq.classes.size());
      eq.classes.emplace_back();
    }
    eq.class_of[y.value] = eq.class_of[root];
    eq.classes[eq.class_of[y.value]].push_back(y);
  }
  return eq;
}

namespace {

using Word = std::vector<MorId>;

struct Relation {
  Word lhs;
  Word rhs;
};

// Coset enumeration for one source object of the quotient: nodes are the
// morphisms out of that object, the generators (non-identity morphisms of
// B) act by post-composition, and every relation is imposed at every node.
class Enumeration {
 public:
  Enumeration(const FinCategory& b, const std::vector<std::uint32_t>& class_of,
              const std::vector<std::vector<MorId>>& gens_from,
              const std::vector<std::vector<Relation>>& rels_from, std::uint32_t source,
              std::size_t num_classes, std::size_t bound)
      : b_(b),
        class_of_(class_of),
        gens_from_(gens_from),
        rels_from_(rels_from),
        stride_(b.num_morphisms()),
        alive_per_class_(num_classes, 0),
        bound_(bound) {
    new_node(source, {});
  }

  void run() {
    for (std::uint32_t i = 0; i < obj_.size(); ++i) {
      if (uf_.find(i) != i) continue;
      scan(i, true);
      check_bound();
    }
    // Later coincidences can leave earlier scans stale; repeat to a fixpoint.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint32_t i = 0; i < obj_.size(); ++i) {
        if (uf_.find(i) != i) continue;
        if (scan(i, true)) changed = true;
      }
      check_bound();
    }
  }

  std::vector<std::uint32_t> live() {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < obj_.size(); ++i) {
      if (uf_.find(i) == i) out.push_back(i);
    }
    return out;
  }

  std::uint32_t target_class(std::uint32_t n) const { return obj_[n]; }
  const Word& word(std::uint32_t n) const { return words_[n]; }

  std::uint32_t follow(std::uint32_t n, const Word& w) {
    for (MorId g : w) {
      n = uf_.find(n);
      n = uf_.find(next_[n * stride_ + g.value]);
    }
    return uf_.find(n);
  }

 private:
  std::uint32_t new_node(std::uint32_t cls, Word w) {
    const auto id = static_cast<std::uint32_t>(obj_.size());
    if (id >= kNodeCap) {
      throw Error(ErrorCode::kBoundExceeded, "coset enumeration exceeded its node budget");
    }
    obj_.push_back(cls);
    words_.push_back(std::move(w));
    next_.resize(next_.size() + stride_, kNone);
    uf_.add();
    ++alive_per_class_[cls];
    return id;
  }

  std::uint32_t step(std::uint32_t n, MorId g, bool define, bool& defined) {
    n = uf_.find(n);
    auto& slot = next_[n * stride_ + g.value];
    if (slot == kNone) {
      if (!define) return kNone;
      Word w = words_[n];
      w.push_back(g);
      const auto m = new_node(class_of_[b_.tgt(g).value], std::move(w));
      next_[n * stride_ + g.value] = m;
      defined = true;
      return m;
    }
    return uf_.find(slot);
  }

  std::uint32_t trace(std::uint32_t n, const Word& w, bool& defined) {
    for (MorId g : w) n = step(n, g, true, defined);
    return uf_.find(n);
  }

  // Completes the row of n and imposes every relation at n. Returns true if
  // anything was defined or identified.
  bool scan(std::uint32_t n, bool define) {
    bool changed = false;
    for (MorId g : gens_from_[obj_[n]]) {
      if (uf_.find(n) != n) return true;
      step(n, g, define, changed);
    }
    for (const auto& r : rels_from_[obj_[n]]) {
      if (uf_.find(n) != n) return true;
      const auto p = trace(n, r.lhs, changed);
      const auto q = trace(n, r.rhs, changed);
      if (coincide(p, q)) changed = true;
    }
    return changed;
  }

  bool coincide(std::uint32_t p, std::uint32_t q) {
    bool merged = false;
    std::deque<std::pair<std::uint32_t, std::uint32_t>> queue{{p, q}};
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      x = uf_.find(x);
      y = uf_.find(y);
      if (x == y) continue;
      if (y < x) std::swap(x, y);
      uf_.unite(x, y);
      --alive_per_class_[obj_[y]];
      merged = true;
      for (std::size_t g = 0; g < stride_; ++g) {
        const auto ty = next_[y * stride_ + g];
        if (ty == kNone) continue;
        auto& tx = next_[x * stride_ + g];
        if (tx == kNone) {
          tx = ty;
        } else {
          queue.emplace_back(tx, ty);
        }
      }
    }
    return merged;
  }

  void check_bound() const {
    for (std::size_t t = 0; t < alive_per_class_.size(); ++t) {
      if (alive_per_class_[t] > bound_) {
        throw Error(ErrorCode::kBoundExceeded,
                    "more than " + std::to_string(bound_) + " morphisms in a hom-set of the quotient");
      }
    }
  }

  static constexpr std::uint32_t kNodeCap = 1u << 20;

  const FinCategory& b_;
  const std::vector<std::uint32_t>& class_of_;
  const std::vector<std::vector<MorId>>& gens_from_;
  const std::vector<std::vector<Relation>>& rels_from_;
  std::size_t stride_;
  std::vector<std::uint32_t> obj_;
  std::vector<Word> words_;
  std::vector<std::uint32_t> next_;
  detail::UnionFind uf_;
  std::vector<std::size_t> alive_per_class_;
  std::size_t bound_;
};

Word word_of(const FinCategory& b, MorId m) {
  if (b.is_identity(m)) return {};
  return {m};
}

std::string render_word(const FinCategory& b, const Word& w) {
  std::string s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!s.empty()) s += ".";
    s += b.name(*it);
  }
  return s;
}

MorId apply_word(const FunctorMap& g, ObjId start, const Word& w) {
  const auto& d = g.tgt();
  MorId acc = d.identity(start);
  for (MorId m : w) acc = d.compose(g(m), acc);
  return acc;
}

Verdict first_functor_difference(const FunctorMap& lhs, const FunctorMap& rhs,
                                 const std::string& check) {
  const auto& a = lhs.src();
  for (ObjId x : a.objects()) {
    if (lhs(x) != rhs(x)) {
      return Verdict::fail(check, "functors differ on an object",
                           {{"object", a.name(x)},
                            {"lhs", lhs.tgt().name(lhs(x))},
                            {"rhs", rhs.tgt().name(rhs(x))}});
    }
  }
  for (MorId m : a.morphisms()) {
    if (lhs(m) != rhs(m)) {
      return Verdict::fail(check, "functors differ on a morphism",
                           {{"morphism", a.name(m)},
                            {"lhs", lhs.tgt().name(lhs(m))},
                            {"rhs", rhs.tgt().name(rhs(m))}});
    }
  }
  return Verdict::ok(check);
}

}  // namespace

CatCoequaliser cat_coequaliser_bounded(const FunctorMap& f1, const FunctorMap& f2,
                                       std::size_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "bound must be positive");
  ObjEquiv eq = object_equiv_closure(f1, f2);
  const auto& a = f1.src();
  const auto& b = f1.tgt();
  const std::size_t nc = eq.classes.size();

  std::vector<std::vector<MorId>> gens_from(nc);
  for (MorId m : b.morphisms()) {
    if (!b.is_identity(m)) gens_from[eq.class_of[b.src(m).value]].push_back(m);
  }
  std::vector<std::vector<Relation>> rels_from(nc);
  for (MorId f : b.morphisms()) {
    if (b.is_identity(f)) continue;
    for (MorId g : b.out(b.tgt(f))) {
      if (b.is_identity(g)) continue;
      rels_from[eq.class_of[b.src(f).value]].push_back({{f, g}, word_of(b, b.compose(g, f))});
    }
  }
  for (MorId m : a.morphisms()) {
    Word l = word_of(b, f1(m));
    Word r = word_of(b, f2(m));
    if (l == r) continue;
    rels_from[eq.class_of[b.src(f1(m)).value]].push_back({std::move(l), std::move(r)});
  }

  std::vector<std::unique_ptr<Enumeration>> runs;
  std::vector<std::vector<std::uint32_t>> live(nc);
  for (std::uint32_t s = 0; s < nc; ++s) {
    runs.push_back(std::make_unique<Enumeration>(b, eq.class_of, gens_from, rels_from, s, nc, bound));
    runs.back()->run();
    live[s] = runs.back()->live();
  }

  std::vector<std::string> obj_names;
  for (const auto& cls : eq.classes) {
    if (cls.size() == 1) {
      obj_names.push_back(b.name(cls.front()));
    } else {
      std::string n = "{";
      for (std::size_t i = 0; i < cls.size(); ++i) n += (i ? "," : "") + b.name(cls[i]);
      obj_names.push_back(n + "}");
    }
  }

  // Quotient morphisms: by source class, then by node.
  std::vector<FinCategory::Morphism> mors;
  std::vector<Word> words;
  std::vector<MorId> identities(nc);
  std::vector<std::vector<std::uint32_t>> index_of(nc);
  for (std::uint32_t s = 0; s < nc; ++s) {
    auto& run = *runs[s];
    std::uint32_t max_node = 0;
    for (auto n : live[s]) max_node = std::max(max_node, n);
    index_of[s].assign(max_node + 1, kNone);
    for (auto n : live[s]) {
      const MorId id{static_cast<std::uint32_t>(mors.size())};
      index_of[s][n] = id.value;
      const Word& w = run.word(n);
      std::string name = w.empty() ? "id_" + obj_names[s] : render_word(b, w);
      if (w.empty()) identities[s] = id;
      mors.push_back({ObjId{s}, ObjId{run.target_class(n)}, std::move(name)});
      words.push_back(w);
    }
  }
  {
    std::vector<std::string> names;
    for (const auto& m : mors) names.push_back(m.name);
    uniquify_names(names);
    for (std::size_t i = 0; i < mors.size(); ++i) mors[i].name = std::move(names[i]);
  }

  const std::size_t m = mors.size();
  std::vector<std::uint32_t> table(m * m, kNone);
  // Node of each quotient morphism within its source's run.
  std::vector<std::uint32_t> node_of(m);
  for (std::uint32_t s = 0; s < nc; ++s) {
    for (auto n : live[s]) node_of[index_of[s][n]] = n;
  }
  for (std::uint32_t i = 0; i < m; ++i) {
    const auto s = mors[i].src.value;
    for (std::uint32_t k = 0; k < m; ++k) {
      if (mors[k].src != mors[i].tgt) continue;
      const auto n = runs[s]->follow(node_of[i], words[k]);
      table[k * m + i] = index_of[s][n];
    }
  }

  auto q = std::make_shared<FinCategory>(std::move(obj_names), std::move(mors),
                                         std::move(identities), std::move(table));
  q->set_label(b.label() + "/~");
  if (Verdict v = validate_category(*q); !v.pass) {
    throw std::logic_error("quotient category is invalid: " + v.check + ": " + v.detail);
  }

  std::vector<ObjId> om;
  for (ObjId y : b.objects()) om.push_back(ObjId{eq.class_of[y.value]});
  std::vector<MorId> mm;
  for (MorId f : b.morphisms()) {
    const auto s = eq.class_of[b.src(f).value];
    const auto n = runs[s]->follow(0, word_of(b, f));
    mm.push_back(MorId{index_of[s][n]});
  }
  FunctorMap proj(f1.tgt_ptr(), q, std::move(om), std::move(mm));
  return CatCoequaliser{q, std::move(proj), std::move(eq), std::move(words), f1, f2};
}

FunctorMap mediating_functor(const CatCoequaliser& q, const FunctorMap& g) {
  if (!same_category(g.src_ptr(), q.projection.src_ptr())) {
    throw Error(ErrorCode::kCategoryMismatch, "functor does not start at the quotiented category");
  }
  if (Verdict v = first_functor_difference(compose_functors(g, q.f1), compose_functors(g, q.f2),
                                           "cofork");
      !v.pass) {
    throw Error(ErrorCode::kNotACofork, "functor does not cofork the pair: " + v.detail);
  }
  const auto& quot = *q.quotient;
  std::vector<ObjId> om;
  for (const auto& cls : q.equiv.classes) om.push_back(g(cls.front()));
  std::vector<MorId> mm;
  for (MorId m : quot.morphisms()) {
    mm.push_back(apply_word(g, om[quot.src(m).value], q.words[m.value]));
  }
  FunctorMap h(q.quotient, g.tgt_ptr(), std::move(om), std::move(mm));
  if (!check_functor(h).pass || !(compose_functors(h, q.projection) == g)) {
    throw std::logic_error("mediating functor fails to factor the cofork");
  }
  return h;
}

CoequaliserMatch is_cat_coequaliser(const FunctorMap& e, const FunctorMap& f1,
                                    const FunctorMap& f2, std::size_t bound) {
  if (Verdict v = first_functor_difference(compose_functors(e, f1), compose_functors(e, f2),
                                           "cofork");
      !v.pass) {
    return {std::move(v), std::nullopt};
  }
  const auto q = cat_coequaliser_bounded(f1, f2, bound);
  FunctorMap phi = mediating_functor(q, e);
  const auto p = classify_functor(phi);
  if (!(p.inj_obj && p.inj_mor && p.surj_obj && p.surj_mor)) {
    Witness w;
    w.add("quotient_objects", std::to_string(q.quotient->num_objects()))
        .add("quotient_morphisms", std::to_string(q.quotient->num_morphisms()))
        .add("target_objects", std::to_string(e.tgt().num_objects()))
        .add("target_morphisms", std::to_string(e.tgt().num_morphisms()));
    return {Verdict::fail("cat-coequaliser",
                          "comparison from the quotient is not an isomorphism", std::move(w)),
            std::move(phi)};
  }
  return {Verdict::ok("cat-coequaliser"), std::move(phi)};
}

bool coforks(const Lens& g, const Lens& f1, const Lens& f2) {
  return compose_lenses(g, f1) == compose_lenses(g, f2);
}

Verdict necessary_condition_check(const Lens& e, const Lens& g) {
  if (!same_category(e.src_ptr(), g.src_ptr())) {
    throw Error(ErrorCode::kCategoryMismatch, "E and G must share a source");
  }
  const auto& b = e.src();
  const auto& d = g.tgt();
  for (ObjId x : b.objects()) {
    for (MorId dm : d.out(g.get()(x))) {
      const MorId lhs = g.put(x, dm);
      const MorId rhs = e.put(x, e.get()(lhs));
      if (lhs != rhs) {
        return Verdict::fail("reflection", "put_G(B, d) != put_E(B, E put_G(B, d))",
                             {{"object", b.name(x)},
                              {"morphism", d.name(dm)},
                              {"lhs", b.name(lhs)},
                              {"rhs", b.name(rhs)}});
      }
    }
  }
  return Verdict::ok("reflection");
}

Verdict necessary_condition_check(const Lens& e, const Lens& g, const Lens& f1, const Lens& f2) {
  if (!coforks(e, f1, f2)) throw Error(ErrorCode::kPreconditionFailed, "E does not cofork the pair");
  if (!coforks(g, f1, f2)) throw Error(ErrorCode::kPreconditionFailed, "G does not cofork the pair");
  return necessary_condition_check(e, g);
}

Verdict reflection_check(const Lens& e, const Lens& f1, const Lens& f2,
                         const std::vector<Lens>& witnesses, std::size_t bound) {
  if (!coforks(e, f1, f2)) throw Error(ErrorCode::kPreconditionFailed, "E does not cofork the pair");
  const auto match = is_cat_coequaliser(e.get(), f1.get(), f2.get(), bound);
  if (!match.verdict.pass) {
    throw Error(ErrorCode::kPreconditionFailed,
                "get E is not a coequaliser in Cat: " + match.verdict.detail);
  }
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    if (!coforks(witnesses[i], f1, f2)) {
      throw Error(ErrorCode::kPreconditionFailed,
                  "witness " + std::to_string(i) + " does not cofork the pair");
    }
    Verdict v = necessary_condition_check(e, witnesses[i]);
    if (!v.pass) {
      v.detail += " (witness " + std::to_string(i) + ")";
      return std::move(v).with_label("refuted");
    }
  }
  if (is_discrete_opfibration(e.get())) {
    return Verdict::ok("reflection", "get E is a discrete opfibration").with_label("certified");
  }
  if (witnesses.empty()) return Verdict::ok("reflection", "no witnesses").with_label("vacuous");
  return Verdict::ok("reflection", std::to_string(witnesses.size()) + " witnesses")
      .with_label("relative to supplied witnesses");
}

Lens lens_over_mediator(const Lens& e, const Lens& g, const FunctorMap& h) {
  if (!(compose_functors(h, e.get()) == g.get())) {
    throw Error(ErrorCode::kPreconditionFailed, "mediating functor does not factor get G");
  }
  const auto& b = e.src();
  const auto& c = e.tgt();
  const auto& d = g.tgt();
  std::vector<std::uint32_t> rep(c.num_objects(), kNone);
  for (ObjId x : b.objects()) {
    if (rep[e.get()(x).value] == kNone) rep[e.get()(x).value] = x.value;
  }
  PutTable put(c.num_objects(), d.num_morphisms());
  for (ObjId y : c.objects()) {
    if (rep[y.value] == kNone) {
      throw Error(ErrorCode::kPreconditionFailed, "E misses the object " + c.name(y));
    }
    for (MorId dm : d.out(h(y))) put.set(y, dm, e.get()(g.put(ObjId{rep[y.value]}, dm)));
  }
  for (ObjId x : b.objects()) {
    const ObjId y = e.get()(x);
    for (MorId dm : d.out(h(y))) {
      const MorId v = e.get()(g.put(x, dm));
      if (v != *put.at(y, dm)) {
        throw Error(ErrorCode::kNotWellDefined,
                    "E put_G differs between " + b.name(ObjId{rep[y.value]}) + " and " +
                        b.name(x) + " at " + d.name(dm));
      }
    }
  }
  Lens result(h, std::move(put));
  if (Verdict v = validate_lens(result); !v.pass) {
    throw Error(ErrorCode::kNotWellDefined, "comparison lens fails " + v.check + ": " + v.detail);
  }
  return result;
}

FunctorMap cat_effective_epi_comparison(const FunctorMap& e, const FunctorMap& g) {
  if (!same_category(e.src_ptr(), g.src_ptr())) {
    throw Error(ErrorCode::kCategoryMismatch, "E and G must share a source");
  }
  if (!classify_functor(e).surj_composable_pairs) {
    throw Error(ErrorCode::kNotSurjectiveOnComposablePairs,
                "E is not surjective on composable pairs");
  }
  const auto& b = e.src();
  const auto& c = e.tgt();
  std::vector<std::uint32_t> om(c.num_objects(), kNone), mm(c.num_morphisms(), kNone);
  std::vector<std::uint32_t> obj_rep(c.num_objects(), kNone), mor_rep(c.num_morphisms(), kNone);
  for (ObjId x : b.objects()) {
    const auto y = e(x).value;
    if (om[y] == kNone) {
      om[y] = g(x).value;
      obj_rep[y] = x.value;
    } else if (om[y] != g(x).value) {
      throw Error(ErrorCode::kNotACofork, "G separates " + b.name(ObjId{obj_rep[y]}) + " and " +
                                              b.name(x) + " over " + c.name(ObjId{y}));
    }
  }
  for (MorId x : b.morphisms()) {
    const auto y = e(x).value;
    if (mm[y] == kNone) {
      mm[y] = g(x).value;
      mor_rep[y] = x.value;
    } else if (mm[y] != g(x).value) {
      throw Error(ErrorCode::kNotACofork, "G separates " + b.name(MorId{mor_rep[y]}) + " and " +
                                              b.name(x) + " over " + c.name(MorId{y}));
    }
  }
  std::vector<ObjId> ho;
  for (auto v : om) ho.push_back(ObjId{v});
  std::vector<MorId> hm;
  for (auto v : mm) hm.push_back(MorId{v});
  FunctorMap h(e.tgt_ptr(), g.tgt_ptr(), std::move(ho), std::move(hm));
  if (!check_functor(h).pass) throw std::logic_error("effective-epi comparison is not a functor");
  return h;
}

Lens comparison_lens(const Lens& e, const Lens& g) {
  return lens_over_mediator(e, g, cat_effective_epi_comparison(e.get(), g.get()));
}

Lens comparison_lens(const Lens& e, const Lens& g, const Lens& f1, const Lens& f2,
                     std::size_t bound) {
  if (!coforks(e, f1, f2)) throw Error(ErrorCode::kPreconditionFailed, "E does not cofork the pair");
  if (!coforks(g, f1, f2)) throw Error(ErrorCode::kPreconditionFailed, "G does not cofork the pair");
  const auto match = is_cat_coequaliser(e.get(), f1.get(), f2.get(), bound);
  if (!match.verdict.pass) {
    throw Error(ErrorCode::kPreconditionFailed,
                "get E is not a coequaliser in Cat: " + match.verdict.detail);
  }
  const auto q = cat_coequaliser_bounded(f1.get(), f2.get(), bound);
  const FunctorMap via_quotient = mediating_functor(q, g.get());
  // h = via_quotient . phi^-1
  const FunctorMap& phi = *match.comparison;
  std::vector<ObjId> ho(e.tgt().num_objects());
  std::vector<MorId> hm(e.tgt().num_morphisms());
  for (ObjId x : q.quotient->objects()) ho[phi(x).value] = via_quotient(x);
  for (MorId x : q.quotient->morphisms()) hm[phi(x).value] = via_quotient(x);
  return lens_over_mediator(e, g, FunctorMap(e.tgt_ptr(), g.tgt_ptr(), std::move(ho), std::move(hm)));
}

namespace {

// Checks the certificate identity for one cofork g of the kernel pair:
// put_{g.P1}(<B,B>, d) = <put_G d, put_E E put_G d>, then the reflection
// equation.
Verdict check_kernel_cofork(const Lens& e, const LensSpan& kp, const Lens& g) {
  const auto& b = e.src();
  const auto& d = g.tgt();
  const Lens via_left = compose_lenses(g, kp.left);
  std::vector<std::uint32_t> diag(b.num_objects(), kNone);
  for (std::uint32_t i = 0; i < kp.obj_pairs.size(); ++i) {
    if (kp.obj_pairs[i].first == kp.obj_pairs[i].second) diag[kp.obj_pairs[i].first.value] = i;
  }
  for (ObjId x : b.objects()) {
    for (MorId dm : d.out(g.get()(x))) {
      const MorId pg = g.put(x, dm);
      const MorId pe = e.put(x, e.get()(pg));
      const auto pair = kp.mor_pairs[via_left.put(ObjId{diag[x.value]}, dm).value];
      if (pair.first != pg || pair.second != pe) {
        return Verdict::fail("reflection", "kernel-pair put does not split as expected",
                             {{"object", b.name(x)}, {"morphism", d.name(dm)}});
      }
    }
  }
  return necessary_condition_check(e, g);
}

}  // namespace

RegularEpiCertificate regular_epi_certificate(const Lens& e, const CertificateOptions& options) {
  if (!classify_functor(e.get()).surj_obj) throw Error(ErrorCode::kNotEpic, "lens is not epic");
  RegularEpiCertificate cert;
  cert.seed = options.seed;
  const auto kp = proxy_kernel_pair(e);
  cert.kernel_apex = kp.apex;

  cert.cofork = compare_lenses(compose_lenses(e, kp.left), compose_lenses(e, kp.right), "cofork");
  cert.composable_pairs =
      classify_functor(e.get()).surj_composable_pairs
          ? Verdict::ok("composable-pairs")
          : Verdict::fail("composable-pairs", "get E is not surjective on composable pairs");
  try {
    cert.cat_coequaliser =
        is_cat_coequaliser(e.get(), kp.left.get(), kp.right.get(), options.bound).verdict;
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kBoundExceeded) throw;
    cert.cat_coequaliser = Verdict::fail("cat-coequaliser", err.what());
  }

  std::vector<CategoryPtr> targets = options.targets;
  if (targets.empty()) {
    targets = standard_universe(3);
    targets.push_back(e.tgt_ptr());
  }
  std::mt19937_64 rng(options.seed);
  std::optional<Verdict> failure;
  auto visit_get = [&](const FunctorMap& h, bool sampled) {
    const FunctorMap g_get = compose_functors(h, e.get());
    auto structures = enumerate_lens_structures(g_get);
    if (sampled && !structures.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, structures.size() - 1);
      Lens chosen = structures[pick(rng)];
      structures.clear();
      structures.push_back(std::move(chosen));
      ++cert.sampled;
    }
    for (const auto& g : structures) {
      if (!coforks(g, kp.left, kp.right)) continue;
      ++cert.coforks_checked;
      Verdict v = check_kernel_cofork(e, kp, g);
      if (!v.pass) {
        v.witness.add("target", g.tgt().label());
        failure = std::move(v);
        return false;
      }
    }
    return true;
  };
  for (const auto& t : targets) {
    if (failure) break;
    if (t->num_objects() <= options.exhaustive_cutoff) {
      for_each_functor(e.tgt_ptr(), t, [&](const FunctorMap& h) { return visit_get(h, false); });
    } else {
      for (std::size_t s = 0; s < options.samples && !failure; ++s) {
        FunctorSearch search;
        search.shuffle = &rng;
        std::optional<FunctorMap> h;
        for_each_functor(
            e.tgt_ptr(), t,
            [&](const FunctorMap& f) {
              h = f;
              return false;
            },
            search);
        if (h) visit_get(*h, true);
      }
    }
  }
  cert.reflection = failure ? std::move(*failure)
                            : Verdict::ok("reflection", std::to_string(cert.coforks_checked) +
                                                            " coforks checked");
  return cert;
}

std::vector<Lens> enumerate_coforks_bounded(const Lens& f1, const Lens& f2,
                                            const std::vector<CategoryPtr>& targets) {
  if (!same_category(f1.src_ptr(), f2.src_ptr()) || !same_category(f1.tgt_ptr(), f2.tgt_ptr())) {
    throw Error(ErrorCode::kCategoryMismatch, "lenses are not parallel");
  }
  std::vector<Lens> out;
  for (const auto& t : targets) {
    for_each_lens(f1.tgt_ptr(), t, [&](const Lens& g) {
      if (coforks(g, f1, f2)) out.push_back(g);
      return true;
    });
  }
  return out;
}

}  // namespace lenslab
