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

#include "lenslab/lenslab.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "lenslab/driver.hpp"

struct lenslab_options {
  lenslab::RunOptions run;
};

struct lenslab_workspace {
  lenslab::Workspace ws;
};

struct lenslab_report {
  lenslab::Report report;
};

namespace {

thread_local std::string last_error;

lenslab_status status_of(lenslab::ErrorCode code) {
  return static_cast<lenslab_status>(static_cast<int>(code) + 1);
}

lenslab_status set_error(lenslab_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <typename F>
lenslab_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const lenslab::Error& e) {
    return set_error(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(LENSLAB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(LENSLAB_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::uint64_t parse_u64(const char* v, const char* key) {
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (!*v || *end || v[0] == '-') {
    throw lenslab::Error(lenslab::ErrorCode::kInvalidArgument,
                         std::string("invalid value for ") + key + ": '" + v + "'");
  }
  return n;
}

}  // namespace

extern "C" {

const char* lenslab_version(void) { return LENSLAB_VERSION_STRING; }

const char* lenslab_status_name(lenslab_status status) {
  if (status == LENSLAB_OK) return "OK";
  if (status == LENSLAB_ERR_INTERNAL) return "InternalError";
  if (status > LENSLAB_OK && status < LENSLAB_ERR_INTERNAL) {
    return lenslab::error_code_name(static_cast<lenslab::ErrorCode>(static_cast<int>(status) - 1));
  }
  return "Unknown";
}

const char* lenslab_last_error(void) { return last_error.c_str(); }

void lenslab_string_free(char* s) { std::free(s); }

lenslab_options* lenslab_options_create(void) {
  try {
    return new lenslab_options{};
  } catch (...) {
    return nullptr;
  }
}

void lenslab_options_destroy(lenslab_options* o) { delete o; }

lenslab_status lenslab_options_set(lenslab_options* o, const char* key, const char* value) {
  if (!o || !key || !value) return set_error(LENSLAB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string k = key;
    auto& r = o->run;
    if (k == "bound") {
      r.bound = parse_u64(value, key);
      if (r.bound == 0) throw lenslab::Error(lenslab::ErrorCode::kInvalidArgument, "bound must be positive");
    } else if (k == "seed") {
      r.seed = parse_u64(value, key);
    } else if (k == "universe") {
      r.universe = value;
    } else if (k == "corpus") {
      r.corpus_dir = value;
    } else if (k == "validate") {
      r.validate = parse_u64(value, key) != 0;
    } else if (k == "functor") {
      r.functors.emplace_back(value);
    } else if (k == "witness") {
      r.witnesses.emplace_back(value);
    } else {
      return set_error(LENSLAB_ERR_INVALID_ARGUMENT, "unknown option key '" + k + "'");
    }
    return LENSLAB_OK;
  });
}

lenslab_status lenslab_workspace_parse(const char* text, size_t length, int validate,
                                       lenslab_workspace** out) {
  if (!text || !out) return set_error(LENSLAB_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto ws = std::make_unique<lenslab_workspace>();
    ws->ws = lenslab::parse_workspace(std::string_view(text, length), validate != 0);
    *out = ws.release();
    return LENSLAB_OK;
  });
}

lenslab_status lenslab_workspace_load_file(const char* path, int validate, lenslab_workspace** out) {
  if (!path || !out) return set_error(LENSLAB_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  std::ifstream in(path, std::ios::binary);
  if (!in) return set_error(LENSLAB_ERR_INVALID_ARGUMENT, std::string("cannot read '") + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  return lenslab_workspace_parse(text.data(), text.size(), validate, out);
}

lenslab_status lenslab_workspace_print(const lenslab_workspace* ws, char** out) {
  if (!ws || !out) return set_error(LENSLAB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(lenslab::print_workspace(ws->ws));
    return LENSLAB_OK;
  });
}

void lenslab_workspace_destroy(lenslab_workspace* ws) { delete ws; }

lenslab_status lenslab_run(const lenslab_workspace* ws, const char* command,
                           const char* const* names, size_t count, const lenslab_options* o,
                           lenslab_report** out) {
  if (!ws || !command || !out || (count && !names)) {
    return set_error(LENSLAB_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    std::vector<std::string> args(names, names + count);
    const lenslab::RunOptions defaults;
    auto r = std::make_unique<lenslab_report>();
    r->report = lenslab::run_on_workspace(command, ws->ws, args, o ? o->run : defaults);
    *out = r.release();
    return LENSLAB_OK;
  });
}

lenslab_status lenslab_run_argv(const char* const* argv, size_t argc, const lenslab_options* o,
                                lenslab_report** out) {
  if (!out || (argc && !argv)) return set_error(LENSLAB_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<std::string> args(argv, argv + argc);
    const lenslab::RunOptions defaults;
    auto r = std::make_unique<lenslab_report>();
    r->report = lenslab::run_command(args, o ? o->run : defaults);
    *out = r.release();
    return LENSLAB_OK;
  });
}

int lenslab_report_exit_code(const lenslab_report* r) { return r ? r->report.exit_code : 2; }

lenslab_status lenslab_report_render(const lenslab_report* r, lenslab_format format, int timing,
                                     char** out) {
  if (!r || !out) return set_error(LENSLAB_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto f = format == LENSLAB_FORMAT_JSON ? lenslab::Format::kJson : lenslab::Format::kText;
    *out = copy_string(lenslab::render_report(r->report, f, timing != 0));
    return LENSLAB_OK;
  });
}

void lenslab_report_destroy(lenslab_report* r) { delete r; }

}  // extern "C"
