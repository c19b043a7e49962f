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

#include <string>

#include "doctest.h"
#include "lenslab/driver.hpp"
#include "support.hpp"

using namespace lenslab;
using namespace lenslab::testing;

namespace {

RunOptions options() {
  RunOptions o;
  o.corpus_dir = corpus_dir();
  return o;
}

std::string corpus_file(const std::string& stem) { return corpus_dir() + "/" + stem + ".lns"; }

}  // namespace

TEST_SUITE("driver") {

TEST_CASE("report JSON has a fixed field order and no timing by default") {
  const Report r = run_command({"check", corpus_file("interval-cosieve")}, options());
  CHECK(r.exit_code == 0);
  const Json j = report_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema", "command", "inputs", "verdicts", "result",
                                         "exit_code"});
  CHECK(j["schema"] == kReportSchema);
  const Json v = j["verdicts"][0];
  std::vector<std::string> vkeys;
  for (const auto& [k, _] : v.items()) vkeys.push_back(k);
  CHECK(vkeys == std::vector<std::string>{"check", "pass", "detail", "label", "witness"});
  CHECK(report_json(r, true).contains("timing_ms"));
  CHECK(report_json(r).dump() == report_json(run_command({"check", corpus_file("interval-cosieve")},
                                                         options()))
                                     .dump());
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for(ErrorCode::kParseError) == 2);
  CHECK(exit_code_for(ErrorCode::kResolutionError) == 2);
  CHECK(exit_code_for(ErrorCode::kValidationError) == 2);
  CHECK(exit_code_for(ErrorCode::kInvalidArgument) == 2);
  CHECK(exit_code_for(ErrorCode::kBoundExceeded) == 1);
  CHECK(exit_code_for(ErrorCode::kNotDiscreteOpfibration) == 1);

  CHECK(run_command({"frobnicate"}, options()).exit_code == 2);
  CHECK(run_command({"classify", corpus_file("interval-cosieve")}, options()).exit_code == 2);
  CHECK(run_command({"check", "/nonexistent/file.lns"}, options()).exit_code == 2);
  const Report missing = run_command({"classify", corpus_file("interval-cosieve"), "Q"}, options());
  CHECK(missing.exit_code == 2);
  REQUIRE(missing.error);
  CHECK(missing.error->code == "ResolutionError");

  const Report bound =
      run_command({"coequalise", corpus_file("naturals-coequaliser"), "P0", "P1"}, options());
  CHECK(bound.exit_code == 1);
  REQUIRE(bound.error);
  CHECK(bound.error->code == "BoundExceeded");
}

TEST_CASE("failing verdicts exit 1 and carry their witness") {
  RunOptions o = options();
  o.witnesses = {"G2"};
  const Report r = run_command({"reflect", corpus_file("no-coequaliser"), "G1", "F1", "F2"}, o);
  CHECK(r.exit_code == 1);
  bool found = false;
  for (const auto& v : r.verdicts) {
    if (v.check != "reflection" || v.pass) continue;
    found = true;
    CHECK(v.witness.fields().size() == 4);
    CHECK(v.witness.get("lhs") == "f2'");
  }
  CHECK(found);
}

TEST_CASE("parse_universe") {
  CHECK(parse_universe("standard:2", nullptr).size() < parse_universe("standard:3", nullptr).size());
  CHECK_FALSE(parse_universe("preorders:2,standard:1", nullptr).empty());
  for (const char* bad : {"standard:9", "bogus", "preorders:0"}) {
    try {
      parse_universe(bad, nullptr);
      FAIL("expected InvalidArgument for " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInvalidArgument);
    }
  }
  const auto corpus = load_corpus();
  for (const auto& c : corpus) {
    if (c.file != "interval-cosieve") continue;
    CHECK(parse_universe("V,standard:1", &c.workspace).size() ==
          1 + parse_universe("standard:1", nullptr).size());
  }
}

TEST_CASE("text rendering") {
  const Report r = run_command({"classify", corpus_file("interval-cosieve"), "M"}, options());
  const std::string text = render_report(r, Format::kText);
  CHECK(text.find("classify") != std::string::npos);
  CHECK(text.find("exit 0") != std::string::npos);
}

TEST_CASE("every command is reachable") {
  for (const auto& cmd : subcommands()) {
    const Report r = run_command({cmd}, options());
    if (cmd == "paper-suite") {
      CHECK(r.exit_code == 0);
    } else {
      CHECK(r.exit_code == 2);
    }
  }
}

}  // TEST_SUITE
