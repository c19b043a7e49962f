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

// Structured results of driver commands, rendered as text or JSON.

#ifndef LENSLAB_REPORT_HPP_
#define LENSLAB_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lenslab/types.hpp"

namespace lenslab {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

enum class Format { kText, kJson };

struct ReportError {
  std::string code;  // error_code_name, or "UsageError"
  std::string message;
};

struct Report {
  std::string command;
  std::vector<std::string> inputs;
  std::vector<Verdict> verdicts;
  Json result = Json::object();
  double elapsed_ms = 0;
  int exit_code = 0;
  std::optional<ReportError> error;

  bool all_pass() const;
};

// 2 for parse, resolution, validation and usage errors; 1 otherwise.
int exit_code_for(ErrorCode code);

Json verdict_json(const Verdict& v);
// Field order is fixed. timing_ms appears only when `timing` is set, so that
// reports of identical runs are byte-identical.
Json report_json(const Report& r, bool timing = false);
std::string render_report(const Report& r, Format format, bool timing = false);

}  // namespace lenslab

#endif  // LENSLAB_REPORT_HPP_
