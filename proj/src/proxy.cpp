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

#include "lenslab/proxy.hpp"

#include <memory>

namespace lenslab {

CatSpan cat_pullback(const FunctorMap& fg, const FunctorMap& gg) {
  if (!same_category(fg.tgt_ptr(), gg.tgt_ptr())) {
    throw Error(ErrorCode::kCategoryMismatch, "pullback needs a cospan");
  }
  const auto& a = fg.src();
  const auto& b = gg.src();

  CatSpan span{nullptr, FunctorMap::identity(fg.src_ptr()), FunctorMap::identity(gg.src_ptr()),
               {}, {}};
  std::vector<std::uint32_t> obj_index(a.num_objects() * b.num_objects(), kNone);
  std::vector<std::string> names;
  for (ObjId x : a.objects()) {
    for (ObjId y : b.objects()) {
      if (fg(x) != gg(y)) continue;
      obj_index[x.value * b.num_objects() + y.value] = static_cast<std::uint32_t>(names.size());
      names.push_back("<" + a.name(x) + "," + b.name(y) + ">");
      span.obj_pairs.emplace_back(x, y);
    }
  }
  auto obj_of = [&](ObjId x, ObjId y) {
    return ObjId{obj_index[x.value * b.num_objects() + y.value]};
  };

  std::vector<std::uint32_t> mor_index(a.num_morphisms() * b.num_morphisms(), kNone);
  std::vector<FinCategory::Morphism> mors;
  std::vector<MorId> identities(names.size());
  for (MorId p : a.morphisms()) {
    for (MorId q : b.morphisms()) {
      if (fg(p) != gg(q)) continue;
      const MorId id{static_cast<std::uint32_t>(mors.size())};
      mor_index[p.value * b.num_morphisms() + q.value] = id.value;
      const ObjId s = obj_of(a.src(p), b.src(q));
      const ObjId t = obj_of(a.tgt(p), b.tgt(q));
      std::string name = a.is_identity(p) && b.is_identity(q)
                             ? "id_" + names[s.value]
                             : "<" + a.name(p) + "," + b.name(q) + ">";
      if (a.is_identity(p) && b.is_identity(q)) identities[s.value] = id;
      mors.push_back({s, t, std::move(name)});
      span.mor_pairs.emplace_back(p, q);
    }
  }
  auto mor_of = [&](MorId p, MorId q) {
    return MorId{mor_index[p.value * b.num_morphisms() + q.value]};
  };

  const std::size_t m = mors.size();
  std::vector<std::uint32_t> table(m * m, kNone);
  for (std::size_t i = 0; i < m; ++i) {
    const auto [p1, q1] = span.mor_pairs[i];
    for (std::size_t j = 0; j < m; ++j) {
      const auto [p2, q2] = span.mor_pairs[j];
      if (a.tgt(p1) != a.src(p2) || b.tgt(q1) != b.src(q2)) continue;
      table[j * m + i] = mor_of(a.compose(p2, p1), b.compose(q2, q1)).value;
    }
  }
  auto apex = std::make_shared<FinCategory>(std::move(names), std::move(mors),
                                            std::move(identities), std::move(table));
  apex->set_label("P(" + a.label() + "," + b.label() + ")");
  span.apex = apex;

  std::vector<ObjId> lo, ro;
  for (const auto& [x, y] : span.obj_pairs) {
    lo.push_back(x);
    ro.push_back(y);
  }
  std::vector<MorId> lm, rm;
  for (const auto& [p, q] : span.mor_pairs) {
    lm.push_back(p);
    rm.push_back(q);
  }
  span.left = FunctorMap(apex, fg.src_ptr(), std::move(lo), std::move(lm));
  span.right = FunctorMap(apex, gg.src_ptr(), std::move(ro), std::move(rm));
  return span;
}

LensSpan proxy_pullback(const Lens& f, const Lens& g) {
  if (!same_category(f.tgt_ptr(), g.tgt_ptr())) {
    throw Error(ErrorCode::kCategoryMismatch, "proxy pullback needs a cospan");
  }
  CatSpan cat = cat_pullback(f.get(), g.get());
  const auto& apex = cat.apex;
  const auto& a = f.src();
  const auto& b = g.src();
  std::vector<std::uint32_t> mor_index(a.num_morphisms() * b.num_morphisms(), kNone);
  for (std::size_t i = 0; i < cat.mor_pairs.size(); ++i) {
    const auto [p, q] = cat.mor_pairs[i];
    mor_index[p.value * b.num_morphisms() + q.value] = static_cast<std::uint32_t>(i);
  }
  auto mor_of = [&](MorId p, MorId q) {
    return MorId{mor_index[p.value * b.num_morphisms() + q.value]};
  };

  PutTable left_put(apex->num_objects(), a.num_morphisms());
  PutTable right_put(apex->num_objects(), b.num_morphisms());
  for (ObjId d : apex->objects()) {
    const auto [x, y] = cat.obj_pairs[d.value];
    for (MorId p : a.out(x)) left_put.set(d, p, mor_of(p, g.put(y, f.get()(p))));
    for (MorId q : b.out(y)) right_put.set(d, q, mor_of(f.put(x, g.get()(q)), q));
  }
  return LensSpan{apex, Lens(std::move(cat.left), std::move(left_put)),
                  Lens(std::move(cat.right), std::move(right_put)), std::move(cat.obj_pairs),
                  std::move(cat.mor_pairs)};
}

LensSpan proxy_kernel_pair(const Lens& f) { return proxy_pullback(f, f); }

Verdict compare_lenses(const Lens& lhs, const Lens& rhs, std::string check) {
  const auto& a = lhs.src();
  const auto& b = lhs.tgt();
  for (ObjId x : a.objects()) {
    if (lhs.get()(x) != rhs.get()(x)) {
      return Verdict::fail(check, "gets differ on an object",
                           {{"object", a.name(x)},
                            {"lhs", b.name(lhs.get()(x))},
                            {"rhs", b.name(rhs.get()(x))}});
    }
  }
  for (MorId p : a.morphisms()) {
    if (lhs.get()(p) != rhs.get()(p)) {
      return Verdict::fail(check, "gets differ on a morphism",
                           {{"morphism", a.name(p)},
                            {"lhs", b.name(lhs.get()(p))},
                            {"rhs", b.name(rhs.get()(p))}});
    }
  }
  for (ObjId x : a.objects()) {
    for (MorId q : b.out(lhs.get()(x))) {
      const MorId l = lhs.put(x, q);
      const MorId r = rhs.put(x, q);
      if (l != r) {
        return Verdict::fail(check, "puts differ",
                             {{"object", a.name(x)},
                              {"morphism", b.name(q)},
                              {"lhs", a.name(l)},
                              {"rhs", a.name(r)}});
      }
    }
  }
  return Verdict::ok(check);
}

Verdict lens_square_commutes(const Lens& top, const Lens& left, const Lens& right,
                             const Lens& bottom) {
  if (!same_category(top.src_ptr(), left.src_ptr()) ||
      !same_category(top.tgt_ptr(), right.src_ptr()) ||
      !same_category(left.tgt_ptr(), bottom.src_ptr()) ||
      !same_category(right.tgt_ptr(), bottom.tgt_ptr())) {
    throw Error(ErrorCode::kCategoryMismatch, "square boundaries do not match");
  }
  return compare_lenses(compose_lenses(right, top), compose_lenses(bottom, left), "square");
}

}  // namespace lenslab
