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

// Command-line front end. Talks to the library only through lenslab.h.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lenslab/lenslab.h"

namespace {

const char* const kSubcommands[][2] = {
    {"check", "validate every (or each named) category, functor and lens"},
    {"classify", "functor profile and lens class of NAME"},
    {"compose", "composite G.F"},
    {"proxy-pullback", "proxy pullback of the cospan F, G"},
    {"kernel-pair", "proxy kernel pair of F"},
    {"factorise", "image factorisation of a lens"},
    {"pushout", "pushout of F along J"},
    {"cokernel-pair", "cokernel pair of a lens"},
    {"effective-mono", "check that a monic lens equalises its cokernel pair"},
    {"coequalise", "Cat coequaliser of F1, F2"},
    {"reflect", "reflection condition for E against coforks of F1, F2"},
    {"regular-epi", "regular-epi certificate"},
    {"filler", "diagonal filler of an epi/mono square E M F G"},
    {"enumerate-lenses", "lens structures on --functor G"},
    {"paper-suite", "run the bundled corpus against its expectations"},
};

int fail(const char* what) {
  std::fprintf(stderr, "lenslab: %s: %s\n", what, lenslab_last_error());
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification workbench for finite categories and delta lenses", "lenslab"};
  app.set_version_flag("--version", std::string(lenslab_version()));
  app.require_subcommand(1);

  std::string format = "text";
  std::size_t bound = 0;
  std::string universe;
  std::string seed;
  std::vector<std::string> functors;
  std::vector<std::string> witnesses;
  std::string corpus;
  bool no_validate = false;
  bool timing = false;

  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--bound", bound, "coequaliser bound per hom-set")->check(CLI::PositiveNumber);
  app.add_option("--universe", universe, "standard[:N], preorders[:N] or category names");
  app.add_option("--seed", seed, "sampling seed (LENSLAB_SEED overrides)");
  app.add_option("--functor", functors, "functor operand (repeatable)");
  app.add_option("--witness", witnesses, "cofork witness lens (repeatable)");
  app.add_option("--corpus", corpus, "corpus directory for paper-suite");
  app.add_flag("--no-validate", no_validate, "load lenses without law checks");
  app.add_flag("--timing", timing, "include timing in JSON output");

  std::vector<std::string> operands;
  for (const auto& [name, help] : kSubcommands) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("operands", operands, "FILE and names");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (const char* env = std::getenv("LENSLAB_SEED"); env && *env) seed = env;

  lenslab_options* options = lenslab_options_create();
  if (!options) return fail("options");
  auto set = [&](const char* key, const std::string& value) {
    return lenslab_options_set(options, key, value.c_str()) == LENSLAB_OK;
  };
  bool ok = true;
  if (bound) ok = ok && set("bound", std::to_string(bound));
  if (!universe.empty()) ok = ok && set("universe", universe);
  if (!seed.empty()) ok = ok && set("seed", seed);
  if (!corpus.empty()) ok = ok && set("corpus", corpus);
  if (no_validate) ok = ok && set("validate", "0");
  for (const auto& f : functors) ok = ok && set("functor", f);
  for (const auto& w : witnesses) ok = ok && set("witness", w);
  if (!ok) {
    const int code = fail("option");
    lenslab_options_destroy(options);
    return code;
  }

  std::vector<const char*> args{app.get_subcommands().front()->get_name().c_str()};
  for (const auto& o : operands) args.push_back(o.c_str());

  lenslab_report* report = nullptr;
  if (lenslab_run_argv(args.data(), args.size(), options, &report) != LENSLAB_OK) {
    lenslab_options_destroy(options);
    return fail("run");
  }
  lenslab_options_destroy(options);

  char* text = nullptr;
  const auto fmt = format == "json" ? LENSLAB_FORMAT_JSON : LENSLAB_FORMAT_TEXT;
  if (lenslab_report_render(report, fmt, timing ? 1 : 0, &text) != LENSLAB_OK) {
    lenslab_report_destroy(report);
    return fail("render");
  }
  std::fputs(text, stdout);
  lenslab_string_free(text);
  const int code = lenslab_report_exit_code(report);
  lenslab_report_destroy(report);
  return code;
}
