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
#include "lenslab/dsl.hpp"
#include "support.hpp"

using namespace lenslab;
using namespace lenslab::testing;

namespace {

const char* kTwo = R"(
category "2" {
  objects: 0, 1;
  arrows: u: 0 -> 1;
  mode: preorder;
}
)";

// Parses and returns the error, failing the test when parsing succeeds.
Error parse_error(const std::string& text) {
  try {
    parse_workspace(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected a parse failure for:\n" << text);
  return Error(ErrorCode::kInvalidArgument, "");
}

}  // namespace

TEST_SUITE("dsl") {

TEST_CASE("every corpus file round-trips through the printer") {
  const auto corpus = load_corpus();
  CHECK(corpus.size() >= 9);
  for (const auto& entry : corpus) {
    CAPTURE(entry.file);
    const std::string printed = print_workspace(entry.workspace);
    const Workspace back = parse_workspace(printed);
    CHECK(same_workspace(entry.workspace, back));
    CHECK(print_workspace(back) == printed);
  }
}

TEST_CASE("arrow images are inferred") {
  const Workspace ws = parse_workspace(std::string(kTwo) + R"(
category A {
  objects: x, y, z;
  arrows: f: x -> y, g: y -> z;
  mode: preorder;
}
functor F: A -> "2" {
  objects x -> 0, y -> 1, z -> 1;
}
functor T: A -> A {
  objects x -> x, y -> y, z -> z;
}
)");
  const FunctorMap f = ws.functor("F");
  CHECK(check_functor(f).pass);
  const auto& a = f.src();
  CHECK(f.tgt().name(f(*a.find_morphism("f"))) == "u");
  CHECK(f(*a.find_morphism("g")) == f.tgt().identity(ObjId{1}));
  CHECK(ws.functor("T") == FunctorMap::identity(ws.category("A")));
}

TEST_CASE("table and free modes") {
  const Workspace ws = parse_workspace(R"(
category I {
  objects: 0, 1;
  arrows: v: 0 -> 1, vinv: 1 -> 0;
  mode: table {
    compose vinv.v = id_0;
    compose v.vinv = id_1;
  }
}
category P {
  objects: a, b;
  arrows: f: a -> b, g: a -> b;
  mode: free(8);
}
)");
  CHECK(ws.category("I")->num_morphisms() == 4);
  CHECK(ws.category("P")->hom(ObjId{0}, ObjId{1}).size() == 2);
}

TEST_CASE("lens puts are completed from the clauses") {
  const Workspace ws = parse_workspace(std::string(kTwo) + R"(
category A {
  objects: x, y1, y2;
  arrows: f1: x -> y1, f2: x -> y2;
  mode: preorder;
}
lens L: A -> "2" {
  get: { objects x -> 0, y1 -> 1, y2 -> 1; }
  put x (u) = f2;
}
)");
  const Lens l = ws.lens("L");
  CHECK(naive_lawful(l));
  CHECK(l.src().name(l.put(ObjId{0}, *l.tgt().find_morphism("u"))) == "f2");
}

TEST_CASE("comments and quoted names") {
  const Workspace ws = parse_workspace(R"(
# leading comment
category "my cat" {  # trailing comment
  objects: "an object", "category";
}
)");
  CHECK(ws.category("my cat")->num_objects() == 2);
  const std::string printed = print_workspace(ws);
  CHECK(printed.find("\"category\"") != std::string::npos);
  CHECK(same_workspace(parse_workspace(printed), ws));
}

TEST_CASE("parse errors carry positions") {
  const Error e = parse_error("category A {\n  objects: x\n}\n");
  CHECK(e.code() == ErrorCode::kParseError);
  CHECK(std::string(e.what()).rfind("3:1:", 0) == 0);

  CHECK(parse_error("category {").code() == ErrorCode::kParseError);
  CHECK(parse_error("widget W {}").code() == ErrorCode::kParseError);
  CHECK(parse_error("category A { objects: x; objects: y; }").code() == ErrorCode::kParseError);
  CHECK(parse_error("category A { objects: \"x; }").code() == ErrorCode::kParseError);
}

TEST_CASE("resolution errors") {
  CHECK(parse_error("category A { objects: x; }\ncategory A { objects: y; }").code() ==
        ErrorCode::kResolutionError);
  CHECK(parse_error("functor F: A -> B { objects x -> y; }").code() ==
        ErrorCode::kResolutionError);
  CHECK(parse_error(std::string(kTwo) + "functor F: \"2\" -> \"2\" { objects 0 -> 7; }").code() ==
        ErrorCode::kResolutionError);
  // No arrow 1 -> 0 to send u to.
  CHECK(parse_error(std::string(kTwo) + "functor F: \"2\" -> \"2\" { objects 0 -> 1, 1 -> 0; }")
            .code() == ErrorCode::kResolutionError);
  // Two lawful completions and no clause to choose between them.
  const Error amb = parse_error(std::string(kTwo) + R"(
category A {
  objects: x, y1, y2;
  arrows: f1: x -> y1, f2: x -> y2;
  mode: preorder;
}
lens L: A -> "2" {
  get: { objects x -> 0, y1 -> 1, y2 -> 1; }
}
)");
  CHECK(amb.code() == ErrorCode::kResolutionError);
}

TEST_CASE("validation errors") {
  // Not a functor: u is sent to an identity between distinct objects.
  CHECK(parse_error(std::string(kTwo) +
                    "functor F: \"2\" -> \"2\" { objects 0 -> 0, 1 -> 1; arrows u -> id_0; }")
            .code() == ErrorCode::kValidationError);
  // PutGet fails for the clause.
  const Error pg = parse_error(std::string(kTwo) + R"(
lens L: "2" -> "2" {
  get: { objects 0 -> 0, 1 -> 1; }
  put 0 (u) = id_0;
}
)");
  CHECK(pg.code() == ErrorCode::kValidationError);
  CHECK(std::string(pg.what()).find("PutGet") != std::string::npos);
  // No lens structure at all: 1 -> 2 at 0 cannot lift u.
  CHECK(parse_error(std::string(kTwo) + R"(
category "1" { objects: 0; }
lens L: "1" -> "2" { get: { objects 0 -> 0; } }
)").code() == ErrorCode::kValidationError);
  // A non-associative table.
  CHECK(parse_error(R"(
category M {
  objects: x;
  arrows: e: x -> x, f: x -> x;
  mode: table { compose e.e = f; compose f.e = e; compose e.f = f; compose f.f = f; }
}
)").code() == ErrorCode::kValidationError);
}

TEST_CASE("a bound in free mode keeps its own code") {
  CHECK(parse_error("category N { objects: x; arrows: s: x -> x; mode: free(4); }").code() ==
        ErrorCode::kBoundExceeded);
}

TEST_CASE("without validation, lawless lenses keep their clauses") {
  const std::string text = std::string(kTwo) + R"(
lens L: "2" -> "2" {
  get: { objects 0 -> 1, 1 -> 1; }
  put 0 (id_1) = u;
}
)";
  CHECK(parse_error(text).code() == ErrorCode::kValidationError);
  const Workspace ws = parse_workspace(text, false);
  const Lens l = ws.lens("L");
  CHECK_FALSE(validate_lens(l).pass);
}

TEST_CASE("functors name their unique lens only when they are discrete opfibrations") {
  const Workspace ws = parse_workspace(std::string(kTwo) + R"(
category "1" { objects: 0; }
functor M: "1" -> "2" { objects 0 -> 1; }
functor N: "1" -> "2" { objects 0 -> 0; }
)");
  CHECK(naive_lawful(ws.lens("M")));
  try {
    ws.lens("N");
    FAIL("expected NotDiscreteOpfibration");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotDiscreteOpfibration);
  }
  try {
    ws.lens("nothing");
    FAIL("expected ResolutionError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kResolutionError);
  }
}

}  // TEST_SUITE
