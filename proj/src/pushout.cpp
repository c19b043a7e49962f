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

#include "lenslab/pushout.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <tuple>

#include "lenslab/coeq.hpp"
#include "lenslab/proxy.hpp"
#include "union_find.hpp"

namespace lenslab {

namespace {

std::vector<std::uint32_t> identity_free_table(std::size_t m) {
  return std::vector<std::uint32_t>(m * m, kNone);
}

}  // namespace

PushoutResult pushout_along_cosieve(const FunctorMap& f, const FunctorMap& j) {
  if (!same_category(f.src_ptr(), j.src_ptr())) {
    throw Error(ErrorCode::kCategoryMismatch, "F and J must share a source");
  }
  if (!is_cosieve(j)) throw Error(ErrorCode::kNotCosieve, "J is not a cosieve");
  const auto& a = f.src();
  const auto& b = j.tgt();
  const auto& c = f.tgt();

  std::vector<std::uint32_t> in_a(b.num_objects(), kNone);
  for (ObjId x : a.objects()) in_a[j(x).value] = x.value;
  std::vector<std::uint32_t> a_of(b.num_morphisms(), kNone);
  for (MorId m : a.morphisms()) a_of[j(m).value] = m.value;
  auto outside = [&](ObjId y) { return in_a[y.value] == kNone; };

  // Index set: pairs (c, b) with b leaving B \ JA into JA.
  const std::size_t cm = c.num_morphisms();
  std::vector<std::uint32_t> elem(b.num_morphisms() * cm, kNone);
  std::vector<SimPair> elems;
  for (MorId bm : b.morphisms()) {
    if (!outside(b.src(bm)) || outside(b.tgt(bm))) continue;
    const ObjId x{in_a[b.tgt(bm).value]};
    for (MorId cc : c.out(f(x))) {
      elem[bm.value * cm + cc.value] = static_cast<std::uint32_t>(elems.size());
      elems.push_back({x, bm, cc});
    }
  }
  auto elem_of = [&](MorId bm, MorId cc) { return elem[bm.value * cm + cc.value]; };

  detail::UnionFind uf(elems.size());
  for (const auto& e : elems) {
    if (!c.is_identity(e.c)) continue;  // visit each (b, a) once
    for (MorId am : a.out(e.a)) {
      const ObjId x2 = a.tgt(am);
      const MorId ab = b.compose(j(am), e.b);
      for (MorId cc : c.out(f(x2))) {
        uf.unite(elem_of(ab, cc), elem_of(e.b, c.compose(cc, f(am))));
      }
    }
  }

  PushoutResult po{nullptr, FunctorMap::identity(f.tgt_ptr()),
                   FunctorMap::identity(f.tgt_ptr()), {}, {}, {}, f, j};

  std::map<std::uint32_t, std::vector<SimPair>> by_root;
  for (std::uint32_t i = 0; i < elems.size(); ++i) by_root[uf.find(i)].push_back(elems[i]);
  for (auto& [root, members] : by_root) {
    std::sort(members.begin(), members.end());
    po.classes.classes.push_back(
        {b.src(members.front().b), c.tgt(members.front().c), std::move(members)});
  }
  std::sort(po.classes.classes.begin(), po.classes.classes.end(),
            [](const SimClass& l, const SimClass& r) {
              return std::tie(l.source, l.target, l.members.front()) <
                     std::tie(r.source, r.target, r.members.front());
            });
  std::vector<std::uint32_t> class_of_elem(elems.size());
  for (std::uint32_t k = 0; k < po.classes.classes.size(); ++k) {
    for (const auto& p : po.classes.classes[k].members) class_of_elem[elem_of(p.b, p.c)] = k;
  }

  // Objects: C, then B \ JA.
  std::vector<std::string> obj_names;
  std::vector<std::uint32_t> d_of_b(b.num_objects(), kNone);
  for (ObjId x : c.objects()) {
    obj_names.push_back(c.name(x));
    po.obj_tags.push_back({PushoutResult::Side::kLeft, x.value});
  }
  for (ObjId y : b.objects()) {
    if (!outside(y)) continue;
    d_of_b[y.value] = static_cast<std::uint32_t>(obj_names.size());
    obj_names.push_back(b.name(y));
    po.obj_tags.push_back({PushoutResult::Side::kRight, y.value});
  }
  uniquify_names(obj_names);

  // Morphisms: C, then B between outside objects, then classes.
  std::vector<FinCategory::Morphism> mors;
  std::vector<std::uint32_t> d_of_bm(b.num_morphisms(), kNone);
  for (MorId m : c.morphisms()) {
    mors.push_back({c.src(m), c.tgt(m), c.name(m)});
    po.mor_tags.push_back({PushoutResult::Kind::kLeft, m.value});
  }
  for (MorId m : b.morphisms()) {
    if (!outside(b.src(m)) || !outside(b.tgt(m))) continue;
    d_of_bm[m.value] = static_cast<std::uint32_t>(mors.size());
    mors.push_back({ObjId{d_of_b[b.src(m).value]}, ObjId{d_of_b[b.tgt(m).value]}, b.name(m)});
    po.mor_tags.push_back({PushoutResult::Kind::kRight, m.value});
  }
  const auto first_class = static_cast<std::uint32_t>(mors.size());
  for (std::uint32_t k = 0; k < po.classes.classes.size(); ++k) {
    const auto& cl = po.classes.classes[k];
    const auto& rep = cl.members.front();
    mors.push_back({ObjId{d_of_b[cl.source.value]}, cl.target,
                    "[" + c.name(rep.c) + "," + b.name(rep.b) + "]"});
    po.mor_tags.push_back({PushoutResult::Kind::kClass, k});
  }
  {
    std::vector<std::string> names;
    for (const auto& m : mors) names.push_back(m.name);
    uniquify_names(names);
    for (std::size_t i = 0; i < mors.size(); ++i) mors[i].name = std::move(names[i]);
  }

  std::vector<MorId> identities;
  for (ObjId x : c.objects()) identities.push_back(c.identity(x));
  for (ObjId y : b.objects()) {
    if (outside(y)) identities.push_back(MorId{d_of_bm[b.identity(y).value]});
  }

  const std::size_t m = mors.size();
  auto table = identity_free_table(m);
  auto set = [&](std::uint32_t g, std::uint32_t h, std::uint32_t r) { table[g * m + h] = r; };
  for (std::uint32_t i = 0; i < m; ++i) {
    const auto ti = po.mor_tags[i];
    for (std::uint32_t k = 0; k < m; ++k) {
      const auto tk = po.mor_tags[k];
      if (mors[i].tgt != mors[k].src) continue;
      // k after i.
      if (ti.kind == PushoutResult::Kind::kLeft && tk.kind == PushoutResult::Kind::kLeft) {
        set(k, i, c.compose(MorId{tk.index}, MorId{ti.index}).value);
      } else if (ti.kind == PushoutResult::Kind::kRight && tk.kind == PushoutResult::Kind::kRight) {
        set(k, i, d_of_bm[b.compose(MorId{tk.index}, MorId{ti.index}).value]);
      } else if (ti.kind == PushoutResult::Kind::kRight && tk.kind == PushoutResult::Kind::kClass) {
        const auto& rep = po.classes.classes[tk.index].members.front();
        const MorId nb = b.compose(rep.b, MorId{ti.index});
        set(k, i, first_class + class_of_elem[elem_of(nb, rep.c)]);
      } else if (ti.kind == PushoutResult::Kind::kClass && tk.kind == PushoutResult::Kind::kLeft) {
        const auto& rep = po.classes.classes[ti.index].members.front();
        const MorId nc = c.compose(MorId{tk.index}, rep.c);
        set(k, i, first_class + class_of_elem[elem_of(rep.b, nc)]);
      }
    }
  }

  auto d = std::make_shared<FinCategory>(std::move(obj_names), std::move(mors),
                                         std::move(identities), std::move(table));
  d->set_label("D(" + c.label() + "," + b.label() + ")");
  if (Verdict v = validate_category(*d); !v.pass) {
    throw std::logic_error("pushout category is invalid: " + v.check + ": " + v.detail);
  }
  po.d = d;

  std::vector<ObjId> fo(b.num_objects());
  for (ObjId y : b.objects()) {
    fo[y.value] = outside(y) ? ObjId{d_of_b[y.value]} : f(ObjId{in_a[y.value]});
  }
  std::vector<MorId> fm(b.num_morphisms());
  for (MorId bm : b.morphisms()) {
    if (!outside(b.src(bm))) {
      fm[bm.value] = f(MorId{a_of[bm.value]});
    } else if (outside(b.tgt(bm))) {
      fm[bm.value] = MorId{d_of_bm[bm.value]};
    } else {
      const MorId id = c.identity(f(ObjId{in_a[b.tgt(bm).value]}));
      fm[bm.value] = MorId{first_class + class_of_elem[elem_of(bm, id)]};
    }
  }
  po.fbar = FunctorMap(j.tgt_ptr(), d, std::move(fo), std::move(fm));

  std::vector<ObjId> jo;
  for (ObjId x : c.objects()) jo.push_back(x);
  std::vector<MorId> jm;
  for (MorId mm : c.morphisms()) jm.push_back(mm);
  po.jbar = FunctorMap(f.tgt_ptr(), d, std::move(jo), std::move(jm));
  return po;
}

FunctorMap copair(const FunctorMap& fp, const FunctorMap& gp, const PushoutResult& po) {
  if (!same_category(fp.src_ptr(), po.f.tgt_ptr()) || !same_category(gp.src_ptr(), po.j.tgt_ptr()) ||
      !same_category(fp.tgt_ptr(), gp.tgt_ptr())) {
    throw Error(ErrorCode::kCategoryMismatch, "copair legs do not match the pushout span");
  }
  const auto lhs = compose_functors(fp, po.f);
  const auto rhs = compose_functors(gp, po.j);
  if (!(lhs == rhs)) {
    const auto& a = po.f.src();
    for (MorId m : a.morphisms()) {
      if (lhs(m) != rhs(m)) {
        throw Error(ErrorCode::kNotACocone, "legs disagree on " + a.name(m));
      }
    }
    throw Error(ErrorCode::kNotACocone, "legs disagree on an object");
  }
  const auto& d = *po.d;
  const auto& e = fp.tgt();
  const auto& b = po.j.tgt();
  std::vector<ObjId> om;
  for (const auto& t : po.obj_tags) {
    om.push_back(t.side == PushoutResult::Side::kLeft ? fp(ObjId{t.index}) : gp(ObjId{t.index}));
  }
  std::vector<MorId> mm;
  for (MorId dm : d.morphisms()) {
    const auto t = po.mor_tags[dm.value];
    switch (t.kind) {
      case PushoutResult::Kind::kLeft:
        mm.push_back(fp(MorId{t.index}));
        break;
      case PushoutResult::Kind::kRight:
        mm.push_back(gp(MorId{t.index}));
        break;
      case PushoutResult::Kind::kClass: {
        const auto& cl = po.classes.classes[t.index];
        const MorId v = e.compose(fp(cl.members.front().c), gp(cl.members.front().b));
        for (const auto& p : cl.members) {
          if (e.compose(fp(p.c), gp(p.b)) != v) {
            throw Error(ErrorCode::kNotACocone,
                        "copair is not well defined on " + d.name(dm) + " at " + b.name(p.b));
          }
        }
        mm.push_back(v);
        break;
      }
    }
  }
  return FunctorMap(po.d, fp.tgt_ptr(), std::move(om), std::move(mm));
}

Coproduct coproduct(const CategoryPtr& c, const CategoryPtr& b) {
  std::vector<std::string> names = c->object_names();
  for (const auto& n : b->object_names()) names.push_back(n);
  uniquify_names(names);

  const auto nc = static_cast<std::uint32_t>(c->num_objects());
  const auto mc = static_cast<std::uint32_t>(c->num_morphisms());
  std::vector<FinCategory::Morphism> mors = c->morphism_data();
  for (const auto& m : b->morphism_data()) {
    mors.push_back({ObjId{m.src.value + nc}, ObjId{m.tgt.value + nc}, m.name});
  }
  {
    std::vector<std::string> mn;
    for (const auto& m : mors) mn.push_back(m.name);
    uniquify_names(mn);
    for (std::size_t i = 0; i < mors.size(); ++i) mors[i].name = std::move(mn[i]);
  }
  std::vector<MorId> ids = c->identity_data();
  for (MorId id : b->identity_data()) ids.push_back(MorId{id.value + mc});

  const std::size_t m = mors.size();
  std::vector<std::uint32_t> table(m * m, kNone);
  for (MorId g : c->morphisms()) {
    for (MorId h : c->morphisms()) {
      if (auto r = c->try_compose(g, h)) table[g.value * m + h.value] = r->value;
    }
  }
  for (MorId g : b->morphisms()) {
    for (MorId h : b->morphisms()) {
      if (auto r = b->try_compose(g, h)) table[(g.value + mc) * m + h.value + mc] = r->value + mc;
    }
  }
  auto sum = std::make_shared<FinCategory>(std::move(names), std::move(mors), std::move(ids),
                                           std::move(table));
  sum->set_label(c->label() + "+" + b->label());

  std::vector<ObjId> lo, ro;
  std::vector<MorId> lm, rm;
  for (ObjId x : c->objects()) lo.push_back(x);
  for (MorId x : c->morphisms()) lm.push_back(x);
  for (ObjId x : b->objects()) ro.push_back(ObjId{x.value + nc});
  for (MorId x : b->morphisms()) rm.push_back(MorId{x.value + mc});
  FunctorMap left(c, sum, std::move(lo), std::move(lm));
  FunctorMap right(b, sum, std::move(ro), std::move(rm));
  return Coproduct{sum, std::move(left), std::move(right)};
}

FunctorMap copair_coproduct(const Coproduct& sum, const FunctorMap& f, const FunctorMap& g) {
  if (!same_category(f.src_ptr(), sum.left.src_ptr()) ||
      !same_category(g.src_ptr(), sum.right.src_ptr()) ||
      !same_category(f.tgt_ptr(), g.tgt_ptr())) {
    throw Error(ErrorCode::kCategoryMismatch, "copair legs do not match the coproduct");
  }
  std::vector<ObjId> om = f.obj_map();
  for (ObjId x : g.obj_map()) om.push_back(x);
  std::vector<MorId> mm = f.mor_map();
  for (MorId x : g.mor_map()) mm.push_back(x);
  return FunctorMap(sum.sum, f.tgt_ptr(), std::move(om), std::move(mm));
}

Verdict sim_respects_puts(const PushoutResult& po, const Lens& f) {
  if (!(f.get() == po.f)) {
    throw Error(ErrorCode::kCategoryMismatch, "lens does not lie over the pushout's F");
  }
  const auto& b = po.j.tgt();
  const auto& c = po.f.tgt();
  for (const auto& cl : po.classes.classes) {
    std::optional<MorId> expected;
    const SimPair* first = nullptr;
    for (const auto& p : cl.members) {
      const MorId v = b.compose(po.j(f.put(p.a, p.c)), p.b);
      if (!expected) {
        expected = v;
        first = &p;
      } else if (*expected != v) {
        return Verdict::fail("sim-respects-puts", "equivalent pairs lift to different morphisms",
                             {{"pair1", "(" + c.name(first->c) + "," + b.name(first->b) + ")"},
                              {"pair2", "(" + c.name(p.c) + "," + b.name(p.b) + ")"},
                              {"lhs", b.name(*expected)},
                              {"rhs", b.name(v)}});
      }
    }
  }
  return Verdict::ok("sim-respects-puts",
                     std::to_string(po.classes.classes.size()) + " classes checked");
}

LensPushout lift_pushout_to_lens(const Lens& f, const Lens& m) {
  if (!is_discrete_opfibration(f.get())) {
    throw Error(ErrorCode::kNotDiscreteOpfibration, "get of F is not a discrete opfibration");
  }
  if (!is_cosieve(m.get())) throw Error(ErrorCode::kNotMonic, "M is not monic");
  auto po = pushout_along_cosieve(f.get(), m.get());
  if (!is_discrete_opfibration(po.fbar)) {
    throw std::logic_error("pushout of a discrete opfibration is not a discrete opfibration");
  }
  Lens fbar = lens_from_dopf(po.fbar);
  Lens jbar = lens_from_dopf(po.jbar);
  if (Verdict v = lens_square_commutes(m, f, fbar, jbar); !v.pass) {
    throw std::logic_error("lifted pushout square does not commute: " + v.detail);
  }
  return LensPushout{std::move(po), std::move(fbar), std::move(jbar)};
}

CokernelPair cokernel_pair(const Lens& l) {
  const auto fac = image_factorise(l);
  auto po = pushout_along_cosieve(fac.mono.get(), fac.mono.get());
  Lens j1 = lens_from_dopf(po.jbar);
  Lens j2 = lens_from_dopf(po.fbar);
  if (Verdict v = compare_lenses(compose_lenses(j1, l), compose_lenses(j2, l), "cokernel");
      !v.pass) {
    throw std::logic_error("cokernel pair does not cofork: " + v.detail);
  }
  CategoryPtr coker = po.d;
  return CokernelPair{std::move(j1), std::move(j2), std::move(coker), std::move(po)};
}

Verdict effective_mono_check(const Lens& m) {
  if (!is_cosieve(m.get())) throw Error(ErrorCode::kNotMonic, "lens is not monic");
  const auto cp = cokernel_pair(m);
  const auto agree = agreement_subcategory(cp.j1.get(), cp.j2.get());
  const auto& b = m.tgt();
  std::vector<bool> in_agree_obj(b.num_objects(), false), in_image_obj(b.num_objects(), false);
  std::vector<bool> in_agree_mor(b.num_morphisms(), false), in_image_mor(b.num_morphisms(), false);
  for (ObjId x : agree.category->objects()) in_agree_obj[agree.inclusion(x).value] = true;
  for (MorId x : agree.category->morphisms()) in_agree_mor[agree.inclusion(x).value] = true;
  for (ObjId x : m.src().objects()) in_image_obj[m.get()(x).value] = true;
  for (MorId x : m.src().morphisms()) in_image_mor[m.get()(x).value] = true;
  for (ObjId y : b.objects()) {
    if (in_agree_obj[y.value] != in_image_obj[y.value]) {
      return Verdict::fail("effective-mono", "cokernel pair agrees off the image",
                           {{"object", b.name(y)}});
    }
  }
  for (MorId y : b.morphisms()) {
    if (in_agree_mor[y.value] != in_image_mor[y.value]) {
      return Verdict::fail("effective-mono", "cokernel pair agrees off the image",
                           {{"morphism", b.name(y)}});
    }
  }
  return Verdict::ok("effective-mono",
                     "agreement = image (" + std::to_string(agree.category->num_objects()) +
                         " objects, " + std::to_string(agree.category->num_morphisms()) +
                         " morphisms)");
}

Lens diagonal_filler(const Lens& e, const Lens& m, const Lens& f, const Lens& g) {
  if (!same_category(f.src_ptr(), e.src_ptr()) || !same_category(f.tgt_ptr(), m.src_ptr()) ||
      !same_category(g.src_ptr(), e.tgt_ptr()) || !same_category(g.tgt_ptr(), m.tgt_ptr())) {
    throw Error(ErrorCode::kCategoryMismatch, "square boundaries do not match");
  }
  if (!classify_functor(e.get()).surj_obj) throw Error(ErrorCode::kNotEpic, "e is not epic");
  if (!is_cosieve(m.get())) throw Error(ErrorCode::kNotMonic, "m is not monic");
  if (Verdict v = compare_lenses(compose_lenses(g, e), compose_lenses(m, f), "square"); !v.pass) {
    throw Error(ErrorCode::kSquareDoesNotCommute, "g.e != m.f: " + v.detail);
  }
  const auto kp = proxy_kernel_pair(e);
  if (!coforks(f, kp.left, kp.right)) {
    throw Error(ErrorCode::kNotACofork, "f does not cofork the kernel pair of e");
  }
  Lens h = comparison_lens(e, f);
  if (!(compose_lenses(h, e) == f) || !(compose_lenses(m, h) == g)) {
    throw std::logic_error("diagonal filler fails a triangle");
  }
  return h;
}

}  // namespace lenslab
