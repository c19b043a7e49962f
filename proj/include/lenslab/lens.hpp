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

// Asymmetric delta lenses between finite categories.
//
// A lens is a get functor together with, for each source object A, a put
// function lifting morphisms out of get(A) to morphisms out of A. The put
// functions are stored extensionally so that the laws
//
//   PutGet  get(put(A, b)) = b
//   PutId   put(A, id) = id
//   PutPut  put(A, b'.b) = put(A', b').put(A, b),  A' = tgt put(A, b)
//
// can be checked exhaustively and lens structures on a functor enumerated.

#ifndef LENSLAB_LENS_HPP_
#define LENSLAB_LENS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lenslab/fincat.hpp"

namespace lenslab {

// put(A, b) for A an object of the source and b a morphism of the target.
// Entries with src b != get(A) stay empty.
class PutTable {
 public:
  PutTable() = default;
  PutTable(std::size_t source_objects, std::size_t target_morphisms)
      : cols_(target_morphisms), cells_(source_objects * target_morphisms, kNone) {}

  std::optional<MorId> at(ObjId a, MorId b) const;
  void set(ObjId a, MorId b, MorId value);
  void clear(ObjId a, MorId b);

  friend bool operator==(const PutTable&, const PutTable&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> cells_;
};

class Lens {
 public:
  Lens(FunctorMap get, PutTable put);

  // The identity lens on c.
  static Lens identity(CategoryPtr c);

  const FunctorMap& get() const noexcept { return get_; }
  const PutTable& put_table() const noexcept { return put_; }
  const FinCategory& src() const noexcept { return get_.src(); }
  const FinCategory& tgt() const noexcept { return get_.tgt(); }
  const CategoryPtr& src_ptr() const noexcept { return get_.src_ptr(); }
  const CategoryPtr& tgt_ptr() const noexcept { return get_.tgt_ptr(); }

  // put(A, b); throws std::out_of_range when the entry is missing.
  MorId put(ObjId a, MorId b) const;
  std::optional<MorId> try_put(ObjId a, MorId b) const { return put_.at(a, b); }

  friend bool operator==(const Lens& a, const Lens& b) {
    return a.get_ == b.get_ && a.put_ == b.put_;
  }

 private:
  FunctorMap get_;
  PutTable put_;
};

// Checks put typing and totality, then PutGet, PutId and PutPut in that
// order. Failing verdicts carry (object, morphism[, morphism2]).
Verdict validate_lens(const Lens& l);

// g.f with put(A, c) = put_f(A, put_g(fA, c)). Throws kCategoryMismatch.
Lens compose_lenses(const Lens& g, const Lens& f);

// The unique lens over a discrete opfibration. Throws kNotDiscreteOpfibration.
Lens lens_from_dopf(const FunctorMap& f);

// Fixed put entries, e.g. from a workspace declaration.
struct PutConstraint {
  ObjId object;
  MorId morphism;
  MorId value;
};

// Every lawful put table on f agreeing with `fixed`, in canonical order (the
// lexicographic order of put values over (object, morphism) pairs). Stops
// after `limit` results.
std::vector<Lens> enumerate_lens_structures(const FunctorMap& f,
                                            const std::vector<PutConstraint>& fixed = {},
                                            std::size_t limit = static_cast<std::size_t>(-1));

// Every lens src -> tgt: all functors, each with all of its lens structures.
void for_each_lens(const CategoryPtr& src, const CategoryPtr& tgt,
                   const std::function<bool(const Lens&)>& visit);

struct LensClass {
  bool is_monic = false;
  bool is_epic = false;
  bool surj_obj = false;
  bool surj_mor = false;
  // surj_obj and surj_mor agree, as they must for any lawful lens.
  bool consistent = false;
};

LensClass classify_lens(const Lens& l);

struct ImageFactorisation {
  Lens epi;   // src -> Im, surjective on objects and morphisms
  Lens mono;  // Im -> tgt, the unique lens over the inclusion cosieve
  CategoryPtr image;
};

ImageFactorisation image_factorise(const Lens& l);

// Bijective on objects and morphisms.
bool is_isomorphism(const Lens& l);

// Inverse of an isomorphism lens (the lens over the inverse functor).
// Throws kInvalidArgument when l is not an isomorphism.
Lens inverse_lens(const Lens& l);

// Short rendering of the non-identity put entries.
std::string describe_puts(const Lens& l);

}  // namespace lenslab

#endif  // LENSLAB_LENS_HPP_
