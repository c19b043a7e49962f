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

// Command driver shared by the CLI and the C API.
//
//   check FILE [NAME...]          validate categories, functors and lenses
//   classify FILE NAME            functor profile, lens class, epi refuter
//   compose FILE G F              G.F
//   proxy-pullback FILE F G
//   kernel-pair FILE F
//   factorise FILE L              image factorisation
//   pushout FILE F J              along a cosieve J, otherwise the general
//                                 Cat pushout and every lens structure on it
//   cokernel-pair FILE L
//   effective-mono FILE M
//   coequalise FILE F1 F2         Cat coequaliser; --functor E compares
//   reflect FILE E F1 F2          --witness G..., else coforks over --universe
//   regular-epi FILE E
//   filler FILE E M F G           diagonal of m.f = g.e
//   enumerate-lenses FILE [F1 F2] --functor G...
//   paper-suite                   every corpus file against its .expect sidecar
//
// A universe spec is a comma list of "standard[:N]", "preorders[:N]" and
// workspace category names.

#ifndef LENSLAB_DRIVER_HPP_
#define LENSLAB_DRIVER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "lenslab/coeq.hpp"
#include "lenslab/dsl.hpp"
#include "lenslab/report.hpp"

namespace lenslab {

struct RunOptions {
  std::size_t bound = kDefaultCoeqBound;
  std::uint64_t seed = 20260101;
  std::string universe = "standard:3";
  std::vector<std::string> functors;
  std::vector<std::string> witnesses;
  std::string corpus_dir;  // empty: the bundled corpus
  bool validate = true;
};

const std::vector<std::string>& subcommands();

std::string default_corpus_dir();

std::vector<CategoryPtr> parse_universe(const std::string& spec, const Workspace* ws);

// args = {subcommand, operands...}. Never throws; failures become report
// errors with the matching exit code.
Report run_command(const std::vector<std::string>& args, const RunOptions& options);

// As run_command, on an already loaded workspace. `names` excludes the file.
Report run_on_workspace(const std::string& command, const Workspace& ws,
                        const std::vector<std::string>& names, const RunOptions& options);

}  // namespace lenslab

#endif  // LENSLAB_DRIVER_HPP_
