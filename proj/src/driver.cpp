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

#include "lenslab/driver.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "lenslab/proxy.hpp"
#include "lenslab/pushout.hpp"
#include "lenslab/universe.hpp"

#ifndef LENSLAB_CORPUS_DIR
#define LENSLAB_CORPUS_DIR "corpus"
#endif

namespace lenslab {

namespace {

namespace fs = std::filesystem;

[[noreturn]] void usage(const std::string& message) { throw Error(ErrorCode::kInvalidArgument, message); }

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t n = 0;
  const auto* end = text.data() + text.size();
  if (text.empty() || std::from_chars(text.data(), end, n).ptr != end) {
    usage("invalid " + what + " '" + text + "'");
  }
  return n;
}

Json category_json(const FinCategory& c) {
  Json j;
  j["label"] = c.label();
  j["num_objects"] = c.num_objects();
  j["num_morphisms"] = c.num_morphisms();
  j["thin"] = c.is_thin();
  j["objects"] = c.object_names();
  Json ms = Json::array();
  for (MorId m : c.morphisms()) {
    if (c.is_identity(m)) continue;
    ms.push_back(c.name(m) + ": " + c.name(c.src(m)) + " -> " + c.name(c.tgt(m)));
  }
  j["morphisms"] = std::move(ms);
  return j;
}

Json functor_json(const FunctorMap& f) {
  Json j;
  j["src"] = f.src().label();
  j["tgt"] = f.tgt().label();
  j["map"] = describe(f);
  return j;
}

Json lens_json(const Lens& l) {
  Json j = functor_json(l.get());
  j["puts"] = describe_puts(l);
  return j;
}

Json profile_json(const FunctorProfile& p) {
  Json j;
  j["inj_obj"] = p.inj_obj;
  j["inj_mor"] = p.inj_mor;
  j["surj_obj"] = p.surj_obj;
  j["surj_mor"] = p.surj_mor;
  j["surj_composable_pairs"] = p.surj_composable_pairs;
  j["discrete_opfibration"] = p.is_discrete_opfibration;
  j["cosieve"] = p.is_cosieve;
  j["mono"] = p.is_mono;
  return j;
}

Verdict named(Verdict v, std::string check) {
  v.check = std::move(check);
  return v;
}

Verdict holds(bool pass, std::string check, std::string failure) {
  return pass ? Verdict::ok(std::move(check)) : Verdict::fail(std::move(check), std::move(failure));
}

Verdict functors_agree(const FunctorMap& a, const FunctorMap& b, std::string check) {
  if (a == b) return Verdict::ok(std::move(check));
  return Verdict::fail(std::move(check), describe(a) + " differs from " + describe(b));
}

bool lens_or_dopf(const Workspace& ws, const std::string& name) {
  return ws.is_lens(name) || is_discrete_opfibration(ws.functor(name));
}

using Command = std::function<void(const Workspace&, const std::vector<std::string>&,
                                   const RunOptions&, Report&)>;

struct CommandSpec {
  std::string usage;
  std::size_t min_names;
  std::size_t max_names;
  Command run;
};

void cmd_check(const Workspace& ws, const std::vector<std::string>& names, const RunOptions&,
               Report& r) {
  for (const auto& n : names) {
    if (!ws.find_category(n) && !ws.find_functor(n) && !ws.find_lens(n)) {
      throw Error(ErrorCode::kResolutionError, "unknown name '" + n + "'");
    }
  }
  auto wanted = [&](const std::string& n) {
    return names.empty() || std::find(names.begin(), names.end(), n) != names.end();
  };
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& [kind, idx] : ws.order) {
    Verdict v;
    std::string name;
    switch (kind) {
      case Workspace::Kind::kCategory:
        name = ws.categories[idx].name;
        if (!wanted(name)) continue;
        v = validate_category(*ws.categories[idx].category);
        if (v.pass) v.check = "category";
        break;
      case Workspace::Kind::kFunctor:
        name = ws.functors[idx].name;
        if (!wanted(name)) continue;
        v = check_functor(*ws.functors[idx].functor);
        if (v.pass) v.check = "functor";
        break;
      case Workspace::Kind::kLens:
        name = ws.lenses[idx].name;
        if (!wanted(name)) continue;
        v = validate_lens(*ws.lenses[idx].lens);
        if (v.pass) v.check = "lens-laws";
        break;
    }
    ++counts[static_cast<int>(kind)];
    v.label = name;
    r.verdicts.push_back(std::move(v));
  }
  r.result["categories"] = counts[0];
  r.result["functors"] = counts[1];
  r.result["lenses"] = counts[2];
}

void cmd_classify(const Workspace& ws, const std::vector<std::string>& names, const RunOptions& o,
                  Report& r) {
  const FunctorMap f = ws.functor(names[0]);
  const auto profile = classify_functor(f);
  r.result["functor"] = profile_json(profile);
  const auto universe = parse_universe(o.universe, &ws);
  const Verdict epic = is_epic_functor_bounded(f, universe);
  Json search;
  search["refuted"] = !epic.pass;
  search["label"] = epic.label;
  Json w = Json::object();
  for (const auto& [k, v] : epic.witness.fields()) w[k] = v;
  search["witness"] = std::move(w);
  r.result["epic_search"] = std::move(search);
  if (ws.is_lens(names[0]) || profile.is_discrete_opfibration) {
    const Lens l = ws.lens(names[0]);
    r.verdicts.push_back(named(validate_lens(l), "lens-laws"));
    const auto c = classify_lens(l);
    Json j;
    j["monic"] = c.is_monic;
    j["epic"] = c.is_epic;
    j["surj_obj"] = c.surj_obj;
    j["surj_mor"] = c.surj_mor;
    j["consistent"] = c.consistent;
    r.result["lens"] = std::move(j);
  } else {
    r.result["lens"] = nullptr;
  }
}

void cmd_compose(const Workspace& ws, const std::vector<std::string>& names, const RunOptions&,
                 Report& r) {
  if (ws.is_lens(names[0]) && ws.is_lens(names[1])) {
    const Lens c = compose_lenses(ws.lens(names[0]), ws.lens(names[1]));
    r.verdicts.push_back(named(validate_lens(c), "lens-laws"));
    r.result["lens"] = lens_json(c);
  } else {
    const FunctorMap c = compose_functors(ws.functor(names[0]), ws.functor(names[1]));
    r.verdicts.push_back(named(check_functor(c), "functor"));
    r.result["functor"] = functor_json(c);
  }
}

void report_span(const LensSpan& s, const Lens& f, const Lens& g, Report& r) {
  r.verdicts.push_back(named(validate_lens(s.left), "left-leg"));
  r.verdicts.push_back(named(validate_lens(s.right), "right-leg"));
  r.verdicts.push_back(named(lens_square_commutes(s.left, s.right, f, g), "square"));
  r.result["apex"] = category_json(*s.apex);
  r.result["left"] = lens_json(s.left);
  r.result["right"] = lens_json(s.right);
}

void cmd_proxy_pullback(const Workspace& ws, const std::vector<std::string>& names,
                        const RunOptions&, Report& r) {
  const Lens f = ws.lens(names[0]);
  const Lens g = ws.lens(names[1]);
  report_span(proxy_pullback(f, g), f, g, r);
}

void cmd_kernel_pair(const Workspace& ws, const std::vector<std::string>& names, const RunOptions&,
                     Report& r) {
  const Lens f = ws.lens(names[0]);
  report_span(proxy_kernel_pair(f), f, f, r);
}

void cmd_factorise(const Workspace& ws, const std::vector<std::string>& names, const RunOptions&,
                   Report& r) {
  const Lens l = ws.lens(names[0]);
  const auto fz = image_factorise(l);
  r.verdicts.push_back(named(validate_lens(fz.epi), "epi-laws"));
  r.verdicts.push_back(named(validate_lens(fz.mono), "mono-laws"));
  r.verdicts.push_back(holds(classify_lens(fz.epi).is_epic, "epi-part", "epi part is not surjective"));
  r.verdicts.push_back(holds(is_cosieve(fz.mono.get()), "mono-part", "mono part is not a cosieve"));
  r.verdicts.push_back(compare_lenses(compose_lenses(fz.mono, fz.epi), l, "factorises"));
  r.result["image"] = category_json(*fz.image);
  r.result["epi"] = lens_json(fz.epi);
  r.result["mono"] = lens_json(fz.mono);
}

// Lens structures on the two legs of a pushout square and how many pairs
// commute with the given lenses.
void lens_square_search(const Lens& top, const Lens& left, const FunctorMap& right,
                        const FunctorMap& bottom, Report& r) {
  const auto rights = enumerate_lens_structures(right);
  const auto bottoms = enumerate_lens_structures(bottom);
  std::size_t combinations = 0, commuting = 0;
  Verdict first_failure;
  for (const auto& rl : rights) {
    for (const auto& bl : bottoms) {
      ++combinations;
      Verdict v = lens_square_commutes(top, left, rl, bl);
      if (v.pass) {
        ++commuting;
      } else if (first_failure.pass) {
        first_failure = std::move(v);
      }
    }
  }
  r.result["jbar_lens_structures"] = rights.size();
  r.result["fbar_lens_structures"] = bottoms.size();
  r.result["combinations"] = combinations;
  r.result["commuting"] = commuting;
  if (commuting > 0) {
    r.verdicts.push_back(Verdict::ok("lens-square", std::to_string(commuting) + " of " +
                                                        std::to_string(combinations) + " commute"));
  } else if (combinations == 0) {
    r.verdicts.push_back(Verdict::fail("lens-square", "no lens structures on the pushout legs"));
  } else {
    first_failure.check = "lens-square";
    first_failure.detail = "none of " + std::to_string(combinations) +
                           " combinations commutes; first: " + first_failure.detail;
    r.verdicts.push_back(std::move(first_failure));
  }
}

void cmd_pushout(const Workspace& ws, const std::vector<std::string>& names, const RunOptions& o,
                 Report& r) {
  const FunctorMap f = ws.functor(names[0]);
  const FunctorMap j = ws.functor(names[1]);
  if (!same_category(f.src_ptr(), j.src_ptr())) {
    throw Error(ErrorCode::kCategoryMismatch, "pushout needs a span");
  }
  if (is_cosieve(j)) {
    const PushoutResult po = pushout_along_cosieve(f, j);
    r.result["route"] = "cosieve";
    r.result["d"] = category_json(*po.d);
    r.result["fbar"] = functor_json(po.fbar);
    r.result["jbar"] = functor_json(po.jbar);
    r.result["classes"] = po.classes.classes.size();
    r.verdicts.push_back(functors_agree(compose_functors(po.jbar, f), compose_functors(po.fbar, j),
                                        "square"));
    r.verdicts.push_back(holds(is_cosieve(po.jbar), "jbar-cosieve", "Jbar is not a cosieve"));
    const Lens jl = lens_from_dopf(j);
    if (is_discrete_opfibration(f)) {
      const Lens fl = ws.is_lens(names[0]) ? ws.lens(names[0]) : lens_from_dopf(f);
      r.verdicts.push_back(
          holds(is_discrete_opfibration(po.fbar), "fbar-dopf", "Fbar is not a discrete opfibration"));
      r.verdicts.push_back(sim_respects_puts(po, fl));
      const LensPushout lp = lift_pushout_to_lens(fl, jl);
      r.verdicts.push_back(named(lens_square_commutes(fl, jl, lp.jbar, lp.fbar), "lens-square"));
    } else {
      const auto structures = enumerate_lens_structures(po.fbar);
      r.verdicts.push_back(holds(!structures.empty(), "fbar-lens-structure",
                                 "get Fbar has no lens structure"));
      if (ws.is_lens(names[0])) {
        lens_square_search(ws.lens(names[0]), jl, po.jbar, po.fbar, r);
      } else {
        r.result["fbar_lens_structures"] = structures.size();
      }
    }
    return;
  }
  const Coproduct sum = coproduct(f.tgt_ptr(), j.tgt_ptr());
  const auto q = cat_coequaliser_bounded(compose_functors(sum.left, f),
                                         compose_functors(sum.right, j), o.bound);
  const FunctorMap jbar = compose_functors(q.projection, sum.left);
  const FunctorMap fbar = compose_functors(q.projection, sum.right);
  r.result["route"] = "coequaliser";
  r.result["d"] = category_json(*q.quotient);
  r.result["fbar"] = functor_json(fbar);
  r.result["jbar"] = functor_json(jbar);
  r.verdicts.push_back(
      functors_agree(compose_functors(jbar, f), compose_functors(fbar, j), "square"));
  if (lens_or_dopf(ws, names[0]) && lens_or_dopf(ws, names[1])) {
    lens_square_search(ws.lens(names[0]), ws.lens(names[1]), jbar, fbar, r);
  }
}

void cmd_cokernel_pair(const Workspace& ws, const std::vector<std::string>& names,
                       const RunOptions&, Report& r) {
  const Lens l = ws.lens(names[0]);
  const auto cp = cokernel_pair(l);
  r.verdicts.push_back(holds(is_cosieve(cp.j1.get()), "j1-cosieve", "J1 is not a cosieve"));
  r.verdicts.push_back(holds(is_cosieve(cp.j2.get()), "j2-cosieve", "J2 is not a cosieve"));
  r.verdicts.push_back(compare_lenses(compose_lenses(cp.j1, l), compose_lenses(cp.j2, l), "cofork"));
  r.result["coker"] = category_json(*cp.coker);
  r.result["j1"] = lens_json(cp.j1);
  r.result["j2"] = lens_json(cp.j2);
}

void cmd_effective_mono(const Workspace& ws, const std::vector<std::string>& names,
                        const RunOptions&, Report& r) {
  r.verdicts.push_back(effective_mono_check(ws.lens(names[0])));
}

void cmd_coequalise(const Workspace& ws, const std::vector<std::string>& names,
                    const RunOptions& o, Report& r) {
  const FunctorMap f1 = ws.functor(names[0]);
  const FunctorMap f2 = ws.functor(names[1]);
  const auto q = cat_coequaliser_bounded(f1, f2, o.bound);
  r.verdicts.push_back(Verdict::ok("cat-coequaliser", std::to_string(q.quotient->num_objects()) +
                                                          " objects, " +
                                                          std::to_string(q.quotient->num_morphisms()) +
                                                          " morphisms"));
  r.result["quotient"] = category_json(*q.quotient);
  r.result["projection"] = functor_json(q.projection);
  if (ws.is_lens(names[0]) && ws.is_lens(names[1])) {
    const Lens l1 = ws.lens(names[0]);
    const Lens l2 = ws.lens(names[1]);
    const auto all = enumerate_lens_structures(q.projection);
    Json coforking = Json::array();
    for (const auto& g : all) {
      if (coforks(g, l1, l2)) coforking.push_back(describe_puts(g));
    }
    r.result["lens_structures"] = all.size();
    r.result["coforking_structures"] = coforking.size();
    r.result["coforking"] = std::move(coforking);
  }
  for (const auto& name : o.functors) {
    auto match = is_cat_coequaliser(ws.functor(name), f1, f2, o.bound);
    match.verdict.label = name;
    r.verdicts.push_back(std::move(match.verdict));
  }
}

void cmd_reflect(const Workspace& ws, const std::vector<std::string>& names, const RunOptions& o,
                 Report& r) {
  const Lens e = ws.lens(names[0]);
  const Lens l1 = ws.lens(names[1]);
  const Lens l2 = ws.lens(names[2]);
  std::vector<Lens> witnesses;
  if (o.witnesses.empty()) {
    witnesses = enumerate_coforks_bounded(l1, l2, parse_universe(o.universe, &ws));
    r.result["witness_source"] = "universe";
  } else {
    for (const auto& w : o.witnesses) witnesses.push_back(ws.lens(w));
    r.result["witness_source"] = o.witnesses;
  }
  r.result["witnesses"] = witnesses.size();
  r.result["discrete_opfibration"] = is_discrete_opfibration(e.get());
  r.verdicts.push_back(holds(coforks(e, l1, l2), "cofork", "E does not cofork the pair"));
  r.verdicts.push_back(reflection_check(e, l1, l2, witnesses, o.bound));
}

void cmd_regular_epi(const Workspace& ws, const std::vector<std::string>& names,
                     const RunOptions& o, Report& r) {
  const std::string& name = names[0];
  if (lens_or_dopf(ws, name)) {
    const Lens e = ws.lens(name);
    CertificateOptions co;
    co.targets = parse_universe(o.universe, &ws);
    co.targets.push_back(e.tgt_ptr());
    co.seed = o.seed;
    co.bound = o.bound;
    const auto cert = regular_epi_certificate(e, co);
    for (auto& v : cert.verdicts()) r.verdicts.push_back(v);
    r.result["level"] = "lens";
    r.result["kernel_apex"] = category_json(*cert.kernel_apex);
    r.result["coforks_checked"] = cert.coforks_checked;
    r.result["sampled"] = cert.sampled;
    r.result["seed"] = cert.seed;
    return;
  }
  // A functor with no canonical lens: regular in Cat iff it coequalises its
  // kernel pair.
  const FunctorMap e = ws.functor(name);
  r.verdicts.push_back(
      named(is_epic_functor_bounded(e, parse_universe(o.universe, &ws)), "epic-refuter"));
  const CatSpan k = cat_pullback(e, e);
  auto match = is_cat_coequaliser(e, k.left, k.right, o.bound);
  match.verdict.label = "kernel pair";
  r.verdicts.push_back(std::move(match.verdict));
  r.result["level"] = "functor";
  r.result["kernel_apex"] = category_json(*k.apex);
}

void cmd_filler(const Workspace& ws, const std::vector<std::string>& names, const RunOptions&,
                Report& r) {
  const Lens e = ws.lens(names[0]);
  const Lens m = ws.lens(names[1]);
  const Lens f = ws.lens(names[2]);
  const Lens g = ws.lens(names[3]);
  const Lens h = diagonal_filler(e, m, f, g);
  r.verdicts.push_back(compare_lenses(compose_lenses(h, e), f, "upper-triangle"));
  r.verdicts.push_back(compare_lenses(compose_lenses(m, h), g, "lower-triangle"));
  std::size_t fillers = 0;
  for_each_lens(e.tgt_ptr(), m.src_ptr(), [&](const Lens& k) {
    if (compose_lenses(k, e) == f && compose_lenses(m, k) == g) ++fillers;
    return fillers < 2;
  });
  r.verdicts.push_back(holds(fillers == 1, "unique", "more than one diagonal filler"));
  r.result["filler"] = lens_json(h);
}

void cmd_enumerate_lenses(const Workspace& ws, const std::vector<std::string>& names,
                          const RunOptions& o, Report& r) {
  if (o.functors.empty()) usage("enumerate-lenses needs --functor NAME");
  if (names.size() == 1) usage("enumerate-lenses takes either no pair or two lenses F1 F2");
  std::optional<Lens> l1, l2;
  if (names.size() == 2) {
    l1 = ws.lens(names[0]);
    l2 = ws.lens(names[1]);
  }
  Json list = Json::array();
  for (const auto& name : o.functors) {
    const auto all = enumerate_lens_structures(ws.functor(name));
    Json j;
    j["functor"] = name;
    j["structures"] = all.size();
    Json puts = Json::array();
    for (const auto& l : all) puts.push_back(describe_puts(l));
    j["puts"] = std::move(puts);
    if (l1) {
      Json coforking = Json::array();
      for (const auto& l : all) {
        if (coforks(l, *l1, *l2)) coforking.push_back(describe_puts(l));
      }
      j["coforking_structures"] = coforking.size();
      j["coforking"] = std::move(coforking);
    }
    Verdict v = Verdict::ok("lens-structures", std::to_string(all.size()) + " structures");
    v.label = name;
    r.verdicts.push_back(std::move(v));
    list.push_back(std::move(j));
  }
  r.result["functors"] = std::move(list);
}

const std::map<std::string, CommandSpec>& commands() {
  static const std::map<std::string, CommandSpec> table{
      {"check", {"check FILE [NAME...]", 0, static_cast<std::size_t>(-1), cmd_check}},
      {"classify", {"classify FILE NAME", 1, 1, cmd_classify}},
      {"compose", {"compose FILE G F", 2, 2, cmd_compose}},
      {"proxy-pullback", {"proxy-pullback FILE F G", 2, 2, cmd_proxy_pullback}},
      {"kernel-pair", {"kernel-pair FILE F", 1, 1, cmd_kernel_pair}},
      {"factorise", {"factorise FILE L", 1, 1, cmd_factorise}},
      {"pushout", {"pushout FILE F J", 2, 2, cmd_pushout}},
      {"cokernel-pair", {"cokernel-pair FILE L", 1, 1, cmd_cokernel_pair}},
      {"effective-mono", {"effective-mono FILE M", 1, 1, cmd_effective_mono}},
      {"coequalise", {"coequalise FILE F1 F2", 2, 2, cmd_coequalise}},
      {"reflect", {"reflect FILE E F1 F2", 3, 3, cmd_reflect}},
      {"regular-epi", {"regular-epi FILE E", 1, 1, cmd_regular_epi}},
      {"filler", {"filler FILE E M F G", 4, 4, cmd_filler}},
      {"enumerate-lenses", {"enumerate-lenses FILE [F1 F2] --functor G", 0, 2, cmd_enumerate_lenses}},
  };
  return table;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) usage("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void fill_error(Report& r, const Error& e) {
  r.error = ReportError{error_code_name(e.code()), e.what()};
  r.exit_code = exit_code_for(e.code());
}

// ---------------------------------------------------------------------------
// paper-suite
// ---------------------------------------------------------------------------

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

// Dot path into the report JSON; "witness.K" reads the first failing
// verdict's witness and "verdict.C" the outcome of check C.
std::optional<std::string> lookup(const Report& r, const std::string& key) {
  auto render = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (key.rfind("witness.", 0) == 0) {
    for (const auto& v : r.verdicts) {
      if (!v.pass) return v.witness.get(key.substr(8));
    }
    return std::nullopt;
  }
  if (key.rfind("verdict.", 0) == 0) {
    for (const auto& v : r.verdicts) {
      if (v.check == key.substr(8)) return std::string(v.pass ? "pass" : "fail");
    }
    return std::nullopt;
  }
  Json j = report_json(r);
  const Json* cur = &j;
  std::istringstream in(key);
  for (std::string part; std::getline(in, part, '.');) {
    if (cur->is_object() && cur->contains(part)) {
      cur = &(*cur)[part];
    } else if (cur->is_array() && !part.empty() &&
               std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
               std::stoul(part) < cur->size()) {
      cur = &(*cur)[std::stoul(part)];
    } else {
      return std::nullopt;
    }
  }
  return render(*cur);
}

Json run_expectation(const std::string& lns, const std::string& line, std::size_t lineno,
                     const RunOptions& base) {
  Json out;
  out["file"] = fs::path(lns).filename().string();
  out["line"] = lineno;
  const auto bar = line.find('|');
  const auto invocation = split_ws(line.substr(0, bar));
  const auto checks = bar == std::string::npos ? std::vector<std::string>{}
                                               : split_ws(line.substr(bar + 1));
  if (invocation.size() < 2) usage(out["file"].get<std::string>() + ":" + std::to_string(lineno) +
                                   ": expected '<exit> <subcommand> ...'");
  const int expected = static_cast<int>(parse_count(invocation[0], "expected exit code"));
  RunOptions opts = base;
  opts.functors.clear();
  opts.witnesses.clear();
  std::vector<std::string> args{invocation[1], lns};
  for (std::size_t i = 2; i < invocation.size(); ++i) {
    const std::string& t = invocation[i];
    if (t == "--no-validate") {
      opts.validate = false;
      continue;
    }
    if (t.rfind("--", 0) != 0) {
      args.push_back(t);
      continue;
    }
    if (i + 1 >= invocation.size()) usage("option " + t + " needs a value");
    const std::string& v = invocation[++i];
    if (t == "--bound") opts.bound = parse_count(v, "bound");
    else if (t == "--seed") opts.seed = parse_count(v, "seed");
    else if (t == "--universe") opts.universe = v;
    else if (t == "--functor") opts.functors.push_back(v);
    else if (t == "--witness") opts.witnesses.push_back(v);
    else usage("unknown option " + t);
  }
  std::string command;
  for (std::size_t i = 1; i < invocation.size(); ++i) command += (i > 1 ? " " : "") + invocation[i];
  out["command"] = command;
  const Report r = run_command(args, opts);
  out["expected_exit"] = expected;
  out["exit"] = r.exit_code;
  Json mismatches = Json::array();
  if (r.exit_code != expected) {
    std::string m = "exit " + std::to_string(r.exit_code) + ", expected " + std::to_string(expected);
    if (r.error) m += " (" + r.error->code + ": " + r.error->message + ")";
    mismatches.push_back(m);
  }
  for (const auto& c : checks) {
    const auto eq = c.find('=');
    if (eq == std::string::npos) usage("expectation '" + c + "' is not key=value");
    const std::string key = c.substr(0, eq);
    const std::string want = c.substr(eq + 1);
    const auto got = lookup(r, key);
    if (!got) {
      mismatches.push_back(key + ": missing, expected " + want);
    } else if (*got != want) {
      mismatches.push_back(key + ": " + *got + ", expected " + want);
    }
  }
  out["pass"] = mismatches.empty();
  out["mismatches"] = std::move(mismatches);
  return out;
}

void run_paper_suite(const std::vector<std::string>& names, const RunOptions& o, Report& r) {
  if (!names.empty()) usage("paper-suite takes no operands");
  const std::string dir = o.corpus_dir.empty() ? default_corpus_dir() : o.corpus_dir;
  if (!fs::is_directory(dir)) usage("corpus directory '" + dir + "' not found");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".lns") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) usage("no .lns files in '" + dir + "'");
  Json runs = Json::array();
  std::size_t passed = 0, total = 0;
  for (const auto& file : files) {
    fs::path expect = file;
    expect.replace_extension(".expect");
    const std::string base = file.filename().string();
    if (!fs::exists(expect)) {
      r.verdicts.push_back(Verdict::fail("corpus", base + " has no .expect sidecar"));
      continue;
    }
    std::istringstream lines(read_file(expect.string()));
    std::size_t lineno = 0, file_pass = 0, file_total = 0;
    std::string first_failure;
    for (std::string line; std::getline(lines, line);) {
      ++lineno;
      const auto start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      if (line.back() == '\r') line.pop_back();
      Json run = run_expectation(file.string(), line, lineno, o);
      ++file_total;
      if (run["pass"].get<bool>()) {
        ++file_pass;
      } else if (first_failure.empty()) {
        first_failure = std::to_string(lineno) + ": " + run["command"].get<std::string>() + ": " +
                        run["mismatches"][0].get<std::string>();
      }
      runs.push_back(std::move(run));
    }
    passed += file_pass;
    total += file_total;
    Verdict v = file_pass == file_total && file_total > 0
                    ? Verdict::ok("corpus", std::to_string(file_total) + " expectations")
                    : Verdict::fail("corpus", file_total == 0 ? "no expectations" : first_failure);
    v.label = base;
    r.verdicts.push_back(std::move(v));
  }
  r.result["files"] = files.size();
  r.result["expectations"] = total;
  r.result["passed"] = passed;
  r.result["runs"] = std::move(runs);
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"check",         "classify",       "compose",    "proxy-pullback",
                               "kernel-pair",   "factorise",      "pushout",    "cokernel-pair",
                               "effective-mono", "coequalise",    "reflect",    "regular-epi",
                               "filler",        "enumerate-lenses", "paper-suite"};
    return v;
  }();
  return names;
}

std::string default_corpus_dir() {
  if (const char* env = std::getenv("LENSLAB_CORPUS")) return env;
  return LENSLAB_CORPUS_DIR;
}

std::vector<CategoryPtr> parse_universe(const std::string& spec, const Workspace* ws) {
  std::vector<CategoryPtr> out;
  std::istringstream in(spec);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) usage("empty item in universe '" + spec + "'");
    const auto colon = item.find(':');
    const std::string head = item.substr(0, colon);
    if (head == "standard" || head == "preorders") {
      const std::size_t n = colon == std::string::npos ? 3 : parse_count(item.substr(colon + 1), "universe size");
      if (n == 0 || n > 4) usage("universe size must be between 1 and 4");
      auto part = head == "standard" ? standard_universe(n) : preorder_universe(n);
      out.insert(out.end(), part.begin(), part.end());
    } else if (ws) {
      out.push_back(ws->category(item));
    } else {
      usage("unknown universe item '" + item + "'");
    }
  }
  return out;
}

Report run_on_workspace(const std::string& command, const Workspace& ws,
                        const std::vector<std::string>& names, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.command = command;
  r.inputs = names;
  try {
    const auto it = commands().find(command);
    if (it == commands().end()) usage("unknown subcommand '" + command + "'");
    const auto& spec = it->second;
    if (names.size() < spec.min_names || names.size() > spec.max_names) {
      usage("usage: lenslab " + spec.usage);
    }
    spec.run(ws, names, options, r);
    r.exit_code = r.all_pass() ? 0 : 1;
  } catch (const Error& e) {
    fill_error(r, e);
  } catch (const std::exception& e) {
    r.error = ReportError{"InternalError", e.what()};
    r.exit_code = 1;
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report run_command(const std::vector<std::string>& args, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    if (args.empty()) usage("missing subcommand");
    r.command = args[0];
    if (args[0] == "paper-suite") {
      r.inputs.assign(args.begin() + 1, args.end());
      run_paper_suite(r.inputs, options, r);
      r.exit_code = r.all_pass() ? 0 : 1;
    } else {
      if (!commands().count(args[0])) usage("unknown subcommand '" + args[0] + "'");
      if (args.size() < 2) usage("usage: lenslab " + commands().at(args[0]).usage);
      const Workspace ws = parse_workspace(read_file(args[1]), options.validate);
      const std::vector<std::string> names(args.begin() + 2, args.end());
      r = run_on_workspace(args[0], ws, names, options);
      r.inputs.insert(r.inputs.begin(), args[1]);
    }
  } catch (const Error& e) {
    r.inputs.assign(args.empty() ? args.begin() : args.begin() + 1, args.end());
    fill_error(r, e);
  } catch (const std::exception& e) {
    r.error = ReportError{"InternalError", e.what()};
    r.exit_code = 1;
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace lenslab
