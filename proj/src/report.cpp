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

#include "lenslab/report.hpp"

#include <cstdio>
#include <sstream>

namespace lenslab {

bool Report::all_pass() const {
  for (const auto& v : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kResolutionError:
    case ErrorCode::kValidationError:
    case ErrorCode::kInvalidArgument:
      return 2;
    default:
      return 1;
  }
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["check"] = v.check;
  j["pass"] = v.pass;
  j["detail"] = v.detail;
  j["label"] = v.label;
  Json w = Json::object();
  for (const auto& [k, val] : v.witness.fields()) w[k] = val;
  j["witness"] = std::move(w);
  return j;
}

Json report_json(const Report& r, bool timing) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  Json vs = Json::array();
  for (const auto& v : r.verdicts) vs.push_back(verdict_json(v));
  j["verdicts"] = std::move(vs);
  j["result"] = r.result;
  j["exit_code"] = r.exit_code;
  if (r.error) j["error"] = Json{{"code", r.error->code}, {"message", r.error->message}};
  if (timing) j["timing_ms"] = r.elapsed_ms;
  return j;
}

namespace {

void render_value(std::ostringstream& os, const std::string& key, const Json& value,
                  const std::string& indent) {
  if (value.is_object() && !value.empty()) {
    os << indent << key << ":\n";
    for (const auto& [k, v] : value.items()) render_value(os, k, v, indent + "  ");
  } else if (value.is_array() && !value.empty() && value.front().is_object()) {
    os << indent << key << ":\n";
    for (const auto& v : value) os << indent << "  " << v.dump() << "\n";
  } else if (value.is_string()) {
    os << indent << key << ": " << value.get<std::string>() << "\n";
  } else {
    os << indent << key << ": " << value.dump() << "\n";
  }
}

}  // namespace

std::string render_report(const Report& r, Format format, bool timing) {
  if (format == Format::kJson) return report_json(r, timing).dump(2) + "\n";
  std::ostringstream os;
  os << r.command;
  for (const auto& in : r.inputs) os << " " << in;
  os << "\n";
  for (const auto& v : r.verdicts) {
    os << (v.pass ? "PASS " : "FAIL ") << v.check;
    if (!v.label.empty()) os << " [" << v.label << "]";
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
    if (!v.witness.empty()) {
      os << " ";
      for (const auto& [k, val] : v.witness.fields()) os << " " << k << "=" << val;
      os << "\n";
    }
  }
  if (r.error) os << "error: " << r.error->code << ": " << r.error->message << "\n";
  if (!r.result.empty()) {
    for (const auto& [k, v] : r.result.items()) render_value(os, k, v, "");
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", r.elapsed_ms);
  os << "exit " << r.exit_code << ", " << buf << " ms\n";
  return os.str();
}

}  // namespace lenslab
