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

#ifndef LENSLAB_TYPES_HPP_
#define LENSLAB_TYPES_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lenslab {

// Dense object index within one FinCategory, in declaration order.
struct ObjId {
  std::uint32_t value = 0;
  friend auto operator<=>(ObjId, ObjId) = default;
};

// Dense morphism index within one FinCategory, in declaration order.
struct MorId {
  std::uint32_t value = 0;
  friend auto operator<=>(MorId, MorId) = default;
};

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

enum class ErrorCode {
  kInvalidPresentation,
  kBoundExceeded,
  kCategoryMismatch,
  kNotDiscreteOpfibration,
  kNotCosieve,
  kNotACocone,
  kNotMonic,
  kNotEpic,
  kSquareDoesNotCommute,
  kNotWellDefined,
  kPreconditionFailed,
  kNotSurjectiveOnComposablePairs,
  kNotACofork,
  kParseError,
  kResolutionError,
  kValidationError,
  kInvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Ordered key/value pairs naming the objects and morphisms that refute a
// check. Keys keep insertion order so reports are reproducible.
class Witness {
 public:
  Witness() = default;
  Witness(std::initializer_list<std::pair<std::string, std::string>> fields)
      : fields_(fields) {}

  Witness& add(std::string key, std::string value) {
    fields_.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  bool empty() const noexcept { return fields_.empty(); }
  const std::vector<std::pair<std::string, std::string>>& fields() const noexcept {
    return fields_;
  }
  // Value for `key`, or the empty string.
  std::string get(const std::string& key) const;

  friend bool operator==(const Witness&, const Witness&) = default;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

// Pass/fail result of a check. A failing verdict names the violated law in
// `check` and carries the refuting witness.
struct Verdict {
  bool pass = true;
  std::string check;
  std::string detail;
  std::string label;
  Witness witness;

  static Verdict ok(std::string check, std::string detail = {}) {
    return Verdict{true, std::move(check), std::move(detail), {}, {}};
  }
  static Verdict fail(std::string check, std::string detail, Witness witness = {}) {
    return Verdict{false, std::move(check), std::move(detail), {}, std::move(witness)};
  }
  Verdict& with_label(std::string l) & {
    label = std::move(l);
    return *this;
  }
  Verdict&& with_label(std::string l) && {
    label = std::move(l);
    return std::move(*this);
  }

  explicit operator bool() const noexcept { return pass; }
};

}  // namespace lenslab

template <>
struct std::hash<lenslab::ObjId> {
  std::size_t operator()(lenslab::ObjId x) const noexcept {
    return std::hash<std::uint32_t>{}(x.value);
  }
};

template <>
struct std::hash<lenslab::MorId> {
  std::size_t operator()(lenslab::MorId x) const noexcept {
    return std::hash<std::uint32_t>{}(x.value);
  }
};

#endif  // LENSLAB_TYPES_HPP_
