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

#include "lenslab/lens.hpp"

#include <algorithm>
#include <sstream>

#include "lenslab/universe.hpp"

namespace lenslab {

std::optional<MorId> PutTable::at(ObjId a, MorId b) const {
  const std::size_t idx = static_cast<std::size_t>(a.value) * cols_ + b.value;
  if (b.value >= cols_ || idx >= cells_.size() || cells_[idx] == kNone) return std::nullopt;
  return MorId{cells_[idx]};
}

void PutTable::set(ObjId a, MorId b, MorId value) {
  cells_.at(static_cast<std::size_t>(a.value) * cols_ + b.value) = value.value;
}

void PutTable::clear(ObjId a, MorId b) {
  cells_.at(static_cast<std::size_t>(a.value) * cols_ + b.value) = kNone;
}

Lens::Lens(FunctorMap get, PutTable put) : get_(std::move(get)), put_(std::move(put)) {}

Lens Lens::identity(CategoryPtr c) {
  PutTable put(c->num_objects(), c->num_morphisms());
  for (MorId f : c->morphisms()) put.set(c->src(f), f, f);
  return Lens(FunctorMap::identity(c), std::move(put));
}

MorId Lens::put(ObjId a, MorId b) const {
  if (auto v = put_.at(a, b)) return *v;
  throw std::out_of_range("put(" + src().name(a) + ", " + tgt().name(b) + ") is undefined");
}

Verdict validate_lens(const Lens& l) {
  if (Verdict v = check_functor(l.get()); !v.pass) {
    v.detail = "get is not a functor: " + v.check + ": " + v.detail;
    v.check = "get-functor";
    return v;
  }
  const auto& a = l.src();
  const auto& b = l.tgt();
  const auto& f = l.get();
  for (ObjId x : a.objects()) {
    for (MorId m : b.morphisms()) {
      const auto p = l.try_put(x, m);
      const bool in_domain = b.src(m) == f(x);
      if (!in_domain && p) {
        return Verdict::fail("put-domain", "put defined outside out(get A)",
                             {{"object", a.name(x)}, {"morphism", b.name(m)}});
      }
      if (in_domain && !p) {
        return Verdict::fail("put-totality", "put is missing an entry",
                             {{"object", a.name(x)}, {"morphism", b.name(m)}});
      }
      if (p && (p->value >= a.num_morphisms() || a.src(*p) != x)) {
        return Verdict::fail("put-typing", "put value does not start at the object",
                             {{"object", a.name(x)}, {"morphism", b.name(m)}});
      }
    }
  }
  for (ObjId x : a.objects()) {
    for (MorId m : b.out(f(x))) {
      if (f(l.put(x, m)) != m) {
        return Verdict::fail("PutGet", "get(put(A, b)) != b",
                             {{"object", a.name(x)},
                              {"morphism", b.name(m)},
                              {"put", a.name(l.put(x, m))},
                              {"get", b.name(f(l.put(x, m)))}});
      }
    }
  }
  for (ObjId x : a.objects()) {
    const MorId p = l.put(x, b.identity(f(x)));
    if (p != a.identity(x)) {
      return Verdict::fail("PutId", "put(A, id) != id",
                           {{"object", a.name(x)}, {"put", a.name(p)}});
    }
  }
  for (ObjId x : a.objects()) {
    for (MorId m : b.out(f(x))) {
      const MorId pm = l.put(x, m);
      const ObjId x2 = a.tgt(pm);
      for (MorId m2 : b.out(b.tgt(m))) {
        const MorId lhs = l.put(x, b.compose(m2, m));
        const MorId rhs = a.compose(l.put(x2, m2), pm);
        if (lhs != rhs) {
          return Verdict::fail("PutPut", "put(A, b'.b) != put(A', b').put(A, b)",
                               {{"object", a.name(x)},
                                {"morphism", b.name(m)},
                                {"morphism2", b.name(m2)},
                                {"lhs", a.name(lhs)},
                                {"rhs", a.name(rhs)}});
        }
      }
    }
  }
  return Verdict::ok("lens");
}

Lens compose_lenses(const Lens& g, const Lens& f) {
  FunctorMap get = compose_functors(g.get(), f.get());
  const auto& a = f.src();
  const auto& c = g.tgt();
  PutTable put(a.num_objects(), c.num_morphisms());
  for (ObjId x : a.objects()) {
    const ObjId fx = f.get()(x);
    for (MorId m : c.out(g.get()(fx))) put.set(x, m, f.put(x, g.put(fx, m)));
  }
  return Lens(std::move(get), std::move(put));
}

Lens lens_from_dopf(const FunctorMap& f) {
  PutTable put(f.src().num_objects(), f.tgt().num_morphisms());
  for (ObjId x : f.src().objects()) {
    for (MorId b : f.tgt().out(f(x))) {
      auto lift = unique_lift(f, x, b);
      if (!lift) {
        throw Error(ErrorCode::kNotDiscreteOpfibration,
                    "no unique lift of " + f.tgt().name(b) + " at " + f.src().name(x));
      }
      put.set(x, b, *lift);
    }
  }
  return Lens(f, std::move(put));
}

namespace {

// Backtracking search over put tables. Variables are (A, b) pairs with b in
// out(get A), ordered by A then b; each ranges over the fibre of b in out(A).
// PutId and the fixed entries are assigned first, and PutPut is propagated to
// a fixpoint after every choice.
class StructureSearch {
 public:
  StructureSearch(const FunctorMap& f, std::size_t limit) : f_(f), a_(f.src()), b_(f.tgt()), limit_(limit) {
    var_index_.assign(a_.num_objects() * b_.num_morphisms(), kNone);
    for (ObjId x : a_.objects()) {
      for (MorId m : b_.out(f(x))) {
        var_index_[index(x, m)] = static_cast<std::uint32_t>(vars_.size());
        Var v{x, m, {}};
        for (MorId c : a_.out(x)) {
          if (f(c) == m) v.domain.push_back(c);
        }
        vars_.push_back(std::move(v));
      }
    }
    value_.assign(vars_.size(), kNone);
  }

  std::vector<Lens> run(const std::vector<PutConstraint>& fixed) {
    for (const auto& v : vars_) {
      if (v.domain.empty()) return {};
    }
    std::vector<std::uint32_t> trail;
    for (ObjId x : a_.objects()) {
      if (!force(x, b_.identity(f_(x)), a_.identity(x), trail)) return {};
    }
    for (const auto& c : fixed) {
      if (c.object.value >= a_.num_objects() || c.morphism.value >= b_.num_morphisms() ||
          b_.src(c.morphism) != f_(c.object)) {
        return {};
      }
      if (!force(c.object, c.morphism, c.value, trail)) return {};
    }
    if (!propagate(trail, 0)) return {};
    search();
    return std::move(results_);
  }

 private:
  struct Var {
    ObjId object;
    MorId morphism;
    std::vector<MorId> domain;
  };

  std::size_t index(ObjId x, MorId m) const {
    return static_cast<std::size_t>(x.value) * b_.num_morphisms() + m.value;
  }

  bool force(ObjId x, MorId m, MorId value, std::vector<std::uint32_t>& trail) {
    const auto v = var_index_[index(x, m)];
    if (v == kNone) return false;
    if (value_[v] != kNone) return value_[v] == value.value;
    const auto& dom = vars_[v].domain;
    if (std::find(dom.begin(), dom.end(), value) == dom.end()) return false;
    value_[v] = value.value;
    trail.push_back(v);
    return true;
  }

  // Checks PutPut for every instance involving a newly assigned variable,
  // forcing composites that are still open.
  bool propagate(std::vector<std::uint32_t>& trail, std::size_t from) {
    for (std::size_t k = from; k < trail.size(); ++k) {
      const auto v = trail[k];
      const ObjId x = vars_[v].object;
      const MorId m = vars_[v].morphism;
      const MorId pm{value_[v]};
      // (x, m) as the first step: pair with assigned (tgt pm, m2).
      const ObjId x2 = a_.tgt(pm);
      for (MorId m2 : b_.out(b_.tgt(m))) {
        const auto w = var_index_[index(x2, m2)];
        if (value_[w] == kNone) continue;
        const MorId composite = a_.compose(MorId{value_[w]}, pm);
        if (!force(x, b_.compose(m2, m), composite, trail)) return false;
      }
      // (x, m) as the second step: pair with assigned (x0, m0) landing on x.
      for (std::uint32_t u = 0; u < vars_.size(); ++u) {
        if (value_[u] == kNone) continue;
        const MorId p0{value_[u]};
        if (a_.tgt(p0) != x) continue;
        const MorId m0 = vars_[u].morphism;
        if (!force(vars_[u].object, b_.compose(m, m0), a_.compose(pm, p0), trail)) return false;
      }
    }
    return true;
  }

  bool search() {
    std::uint32_t next = kNone;
    for (std::uint32_t v = 0; v < vars_.size(); ++v) {
      if (value_[v] == kNone) {
        next = v;
        break;
      }
    }
    if (next == kNone) {
      PutTable put(a_.num_objects(), b_.num_morphisms());
      for (std::uint32_t v = 0; v < vars_.size(); ++v) {
        put.set(vars_[v].object, vars_[v].morphism, MorId{value_[v]});
      }
      results_.emplace_back(f_, std::move(put));
      return results_.size() < limit_;
    }
    for (MorId c : vars_[next].domain) {
      std::vector<std::uint32_t> trail;
      value_[next] = c.value;
      trail.push_back(next);
      const bool ok = propagate(trail, 0);
      bool more = true;
      if (ok) more = search();
      for (auto v : trail) value_[v] = kNone;
      if (!more) return false;
    }
    return true;
  }

  const FunctorMap& f_;
  const FinCategory& a_;
  const FinCategory& b_;
  std::size_t limit_;
  std::vector<Var> vars_;
  std::vector<std::uint32_t> var_index_;
  std::vector<std::uint32_t> value_;
  std::vector<Lens> results_;
};

}  // namespace

std::vector<Lens> enumerate_lens_structures(const FunctorMap& f,
                                            const std::vector<PutConstraint>& fixed,
                                            std::size_t limit) {
  if (limit == 0) return {};
  return StructureSearch(f, limit).run(fixed);
}

void for_each_lens(const CategoryPtr& src, const CategoryPtr& tgt,
                   const std::function<bool(const Lens&)>& visit) {
  for_each_functor(src, tgt, [&](const FunctorMap& f) {
    for (const auto& l : enumerate_lens_structures(f)) {
      if (!visit(l)) return false;
    }
    return true;
  });
}

LensClass classify_lens(const Lens& l) {
  const auto p = classify_functor(l.get());
  LensClass c;
  c.is_monic = p.is_cosieve;
  c.is_epic = p.surj_obj;
  c.surj_obj = p.surj_obj;
  c.surj_mor = p.surj_mor;
  c.consistent = p.surj_obj == p.surj_mor;
  return c;
}

ImageFactorisation image_factorise(const Lens& l) {
  auto im = image_subcategory(l.get());
  const auto& incl = im.inclusion;
  std::vector<std::uint32_t> back_obj(l.tgt().num_objects(), kNone);
  std::vector<std::uint32_t> back_mor(l.tgt().num_morphisms(), kNone);
  for (ObjId x : im.category->objects()) back_obj[incl(x).value] = x.value;
  for (MorId m : im.category->morphisms()) back_mor[incl(m).value] = m.value;

  std::vector<ObjId> om;
  std::vector<MorId> mm;
  for (ObjId x : l.src().objects()) om.push_back(ObjId{back_obj[l.get()(x).value]});
  for (MorId m : l.src().morphisms()) mm.push_back(MorId{back_mor[l.get()(m).value]});
  FunctorMap corestriction(l.src_ptr(), im.category, std::move(om), std::move(mm));

  PutTable put(l.src().num_objects(), im.category->num_morphisms());
  for (ObjId x : l.src().objects()) {
    for (MorId m : im.category->out(corestriction(x))) put.set(x, m, l.put(x, incl(m)));
  }
  Lens epi(std::move(corestriction), std::move(put));
  Lens mono = lens_from_dopf(incl);
  return ImageFactorisation{std::move(epi), std::move(mono), im.category};
}

bool is_isomorphism(const Lens& l) {
  const auto p = classify_functor(l.get());
  return p.inj_obj && p.inj_mor && p.surj_obj && p.surj_mor;
}

Lens inverse_lens(const Lens& l) {
  if (!is_isomorphism(l)) throw Error(ErrorCode::kInvalidArgument, "lens is not an isomorphism");
  std::vector<ObjId> om(l.tgt().num_objects());
  std::vector<MorId> mm(l.tgt().num_morphisms());
  for (ObjId x : l.src().objects()) om[l.get()(x).value] = x;
  for (MorId m : l.src().morphisms()) mm[l.get()(m).value] = m;
  return lens_from_dopf(FunctorMap(l.tgt_ptr(), l.src_ptr(), std::move(om), std::move(mm)));
}

std::string describe_puts(const Lens& l) {
  std::ostringstream os;
  bool first = true;
  os << "puts[";
  for (ObjId x : l.src().objects()) {
    for (MorId m : l.tgt().out(l.get()(x))) {
      if (l.tgt().is_identity(m)) continue;
      const auto p = l.try_put(x, m);
      os << (first ? "" : ", ") << l.src().name(x) << "(" << l.tgt().name(m)
         << ")=" << (p ? l.src().name(*p) : "?");
      first = false;
    }
  }
  os << "]";
  return os.str();
}

}  // namespace lenslab
