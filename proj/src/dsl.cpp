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

#include "lenslab/dsl.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace lenslab {

namespace {

std::string at(SourcePos p) { return std::to_string(p.line) + ":" + std::to_string(p.column) + ": "; }

[[noreturn]] void fail(ErrorCode code, SourcePos p, const std::string& message) {
  throw Error(code, at(p) + message);
}

bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '\'';
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

struct Token {
  enum class Kind { kIdent, kPunct, kArrow, kEnd };
  Kind kind;
  std::string text;
  SourcePos pos;
  bool quoted = false;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::kEnd:
      return "end of input";
    case Token::Kind::kArrow:
      return "'->'";
    case Token::Kind::kIdent:
      return t.quoted ? "\"" + t.text + "\"" : "'" + t.text + "'";
    case Token::Kind::kPunct:
      return "'" + t.text + "'";
  }
  return "?";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Token::Kind::kArrow, "->", pos});
      advance(2);
    } else if (ident_char(c)) {
      const SourcePos start = pos;
      std::string text;
      while (i < src.size() && ident_char(src[i])) {
        text += src[i];
        advance(1);
      }
      out.push_back({Token::Kind::kIdent, std::move(text), start});
    } else if (c == '"') {
      const SourcePos start = pos;
      advance(1);
      std::string text;
      while (true) {
        if (i >= src.size() || src[i] == '\n') fail(ErrorCode::kParseError, start, "unterminated string");
        if (src[i] == '"') break;
        if (src[i] == '\\' && i + 1 < src.size()) advance(1);
        text += src[i];
        advance(1);
      }
      advance(1);
      if (text.empty()) fail(ErrorCode::kParseError, start, "empty quoted name");
      out.push_back({Token::Kind::kIdent, std::move(text), start, true});
    } else if (std::string_view("{}();:,=.").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::kPunct, std::string(1, c), pos});
      advance(1);
    } else {
      fail(ErrorCode::kParseError, pos, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::kEnd, "", pos});
  return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------


class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  void parse(Workspace& ws) {
    while (peek().kind != Token::Kind::kEnd) {
      if (is_word("category")) {
        ws.order.emplace_back(Workspace::Kind::kCategory, ws.categories.size());
        ws.categories.push_back(category());
      } else if (is_word("functor")) {
        ws.order.emplace_back(Workspace::Kind::kFunctor, ws.functors.size());
        ws.functors.push_back(functor());
      } else if (is_word("lens")) {
        ws.order.emplace_back(Workspace::Kind::kLens, ws.lenses.size());
        ws.lenses.push_back(lens());
      } else {
        unexpected({"'category'", "'functor'", "'lens'"});
      }
    }
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  bool is_word(std::string_view w) const {
    return peek().kind == Token::Kind::kIdent && !peek().quoted && peek().text == w;
  }
  bool is_punct(char c) const {
    return peek().kind == Token::Kind::kPunct && peek().text[0] == c;
  }

  [[noreturn]] void unexpected(const std::vector<std::string>& expected) const {
    std::string list;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      list += (i ? ", " : "") + expected[i];
    }
    const std::string lead = expected.size() == 1 ? "expected " : "expected one of ";
    fail(ErrorCode::kParseError, peek().pos, lead + list + " but found " + describe(peek()));
  }

  void punct(char c) {
    if (!is_punct(c)) unexpected({std::string("'") + c + "'"});
    take();
  }
  void arrow() {
    if (peek().kind != Token::Kind::kArrow) unexpected({"'->'"});
    take();
  }
  void word(std::string_view w) {
    if (!is_word(w)) unexpected({"'" + std::string(w) + "'"});
    take();
  }
  std::string ident() {
    if (peek().kind != Token::Kind::kIdent) unexpected({"a name"});
    return take().text;
  }

  CategoryDecl category() {
    CategoryDecl d;
    d.pos = peek().pos;
    word("category");
    d.name = ident();
    d.presentation.label = d.name;
    punct('{');
    bool seen_objects = false, seen_arrows = false, seen_mode = false;
    while (!is_punct('}')) {
      const SourcePos item = peek().pos;
      if (is_word("objects")) {
        if (seen_objects) fail(ErrorCode::kParseError, item, "duplicate 'objects' section");
        seen_objects = true;
        take();
        punct(':');
        if (!is_punct(';')) {
          d.presentation.nodes.push_back(ident());
          while (is_punct(',')) {
            take();
            d.presentation.nodes.push_back(ident());
          }
        }
        punct(';');
      } else if (is_word("arrows")) {
        if (seen_arrows) fail(ErrorCode::kParseError, item, "duplicate 'arrows' section");
        seen_arrows = true;
        take();
        punct(':');
        if (!is_punct(';')) {
          d.presentation.edges.push_back(edge());
          while (is_punct(',')) {
            take();
            d.presentation.edges.push_back(edge());
          }
        }
        punct(';');
      } else if (is_word("mode")) {
        if (seen_mode) fail(ErrorCode::kParseError, item, "duplicate 'mode' section");
        seen_mode = true;
        take();
        punct(':');
        mode(d.presentation);
      } else {
        unexpected({"'objects'", "'arrows'", "'mode'", "'}'"});
      }
    }
    punct('}');
    return d;
  }

  GraphPresentation::Edge edge() {
    GraphPresentation::Edge e;
    e.name = ident();
    punct(':');
    e.src = ident();
    arrow();
    e.tgt = ident();
    return e;
  }

  void mode(GraphPresentation& p) {
    if (is_word("preorder")) {
      take();
      p.mode = GraphPresentation::Mode::kPreorder;
      punct(';');
    } else if (is_word("free")) {
      take();
      p.mode = GraphPresentation::Mode::kFree;
      punct('(');
      const Token& t = peek();
      std::size_t n = 0;
      if (t.kind != Token::Kind::kIdent || t.quoted ||
          std::from_chars(t.text.data(), t.text.data() + t.text.size(), n).ptr !=
              t.text.data() + t.text.size()) {
        unexpected({"a bound"});
      }
      if (n == 0) fail(ErrorCode::kParseError, t.pos, "free bound must be at least 1");
      take();
      p.bound = n;
      punct(')');
      punct(';');
    } else if (is_word("table")) {
      take();
      p.mode = GraphPresentation::Mode::kTable;
      punct('{');
      while (!is_punct('}')) {
        word("compose");
        GraphPresentation::ComposeRule r;
        r.second = ident();
        punct('.');
        r.first = ident();
        punct('=');
        r.result = ident();
        punct(';');
        p.table.push_back(std::move(r));
      }
      punct('}');
      if (is_punct(';')) take();
    } else {
      unexpected({"'preorder'", "'free'", "'table'"});
    }
  }

  void signature(std::string& name, std::string& src, std::string& tgt) {
    name = ident();
    punct(':');
    src = ident();
    arrow();
    tgt = ident();
  }

  MapClause mapping() {
    MapClause m;
    m.pos = peek().pos;
    m.from = ident();
    arrow();
    m.to = ident();
    return m;
  }

  // objects ...; arrows ...; in any order, each at most once.
  FunctorBody body() {
    FunctorBody b;
    bool seen_objects = false, seen_arrows = false;
    while (is_word("objects") || is_word("arrows")) {
      const bool objects = is_word("objects");
      if ((objects && seen_objects) || (!objects && seen_arrows)) {
        fail(ErrorCode::kParseError, peek().pos, "duplicate '" + peek().text + "' section");
      }
      (objects ? seen_objects : seen_arrows) = true;
      take();
      auto& list = objects ? b.objects : b.arrows;
      if (!is_punct(';')) {
        list.push_back(mapping());
        while (is_punct(',')) {
          take();
          list.push_back(mapping());
        }
      }
      punct(';');
    }
    return b;
  }

  FunctorDecl functor() {
    FunctorDecl d;
    d.pos = peek().pos;
    word("functor");
    signature(d.name, d.src, d.tgt);
    punct('{');
    d.body = body();
    if (!is_punct('}')) unexpected({"'objects'", "'arrows'", "'}'"});
    punct('}');
    return d;
  }

  LensDecl lens() {
    LensDecl d;
    d.pos = peek().pos;
    word("lens");
    signature(d.name, d.src, d.tgt);
    punct('{');
    bool seen_get = false;
    while (!is_punct('}')) {
      if (is_word("get")) {
        if (seen_get) fail(ErrorCode::kParseError, peek().pos, "duplicate 'get'");
        seen_get = true;
        take();
        punct(':');
        if (is_punct('{')) {
          take();
          d.inline_get = body();
          if (!is_punct('}')) unexpected({"'objects'", "'arrows'", "'}'"});
          punct('}');
          if (is_punct(';')) take();
        } else {
          d.get_ref = ident();
          punct(';');
        }
      } else if (is_word("put")) {
        PutClause c;
        c.pos = peek().pos;
        take();
        c.object = ident();
        punct('(');
        c.morphism = ident();
        punct(')');
        punct('=');
        c.value = ident();
        punct(';');
        d.puts.push_back(std::move(c));
      } else {
        unexpected({"'get'", "'put'", "'}'"});
      }
    }
    if (!seen_get) fail(ErrorCode::kParseError, peek().pos, "lens " + d.name + " has no 'get'");
    punct('}');
    return d;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Resolution
// ---------------------------------------------------------------------------

FunctorMap resolve_body(const FunctorBody& body, const CategoryPtr& src, const CategoryPtr& tgt,
                        SourcePos pos, const std::string& what) {
  const auto& a = *src;
  const auto& b = *tgt;
  std::vector<std::uint32_t> om(a.num_objects(), kNone);
  for (const auto& m : body.objects) {
    auto x = a.find_object(m.from);
    if (!x) fail(ErrorCode::kResolutionError, m.pos, "no object '" + m.from + "' in " + a.label());
    auto y = b.find_object(m.to);
    if (!y) fail(ErrorCode::kResolutionError, m.pos, "no object '" + m.to + "' in " + b.label());
    if (om[x->value] != kNone && om[x->value] != y->value) {
      fail(ErrorCode::kResolutionError, m.pos, "object '" + m.from + "' is mapped twice");
    }
    om[x->value] = y->value;
  }
  for (ObjId x : a.objects()) {
    if (om[x.value] != kNone) continue;
    if (b.num_objects() == 1) {
      om[x.value] = 0;
    } else {
      fail(ErrorCode::kResolutionError, pos, what + ": object '" + a.name(x) + "' has no image");
    }
  }
  std::vector<std::uint32_t> mm(a.num_morphisms(), kNone);
  for (const auto& m : body.arrows) {
    auto x = a.find_morphism(m.from);
    if (!x) fail(ErrorCode::kResolutionError, m.pos, "no arrow '" + m.from + "' in " + a.label());
    auto y = b.find_morphism(m.to);
    if (!y) fail(ErrorCode::kResolutionError, m.pos, "no arrow '" + m.to + "' in " + b.label());
    if (mm[x->value] != kNone && mm[x->value] != y->value) {
      fail(ErrorCode::kResolutionError, m.pos, "arrow '" + m.from + "' is mapped twice");
    }
    mm[x->value] = y->value;
  }
  // Forced images: identities, singleton hom-sets, composites.
  bool progress = true;
  while (progress) {
    progress = false;
    for (MorId f : a.morphisms()) {
      if (mm[f.value] != kNone) continue;
      const ObjId s{om[a.src(f).value]};
      const ObjId t{om[a.tgt(f).value]};
      if (a.is_identity(f)) {
        mm[f.value] = b.identity(s).value;
      } else if (auto h = b.hom(s, t); h.size() == 1) {
        mm[f.value] = h.front().value;
      } else {
        for (MorId g : a.out(a.src(f))) {
          if (a.is_identity(g) || mm[g.value] == kNone) continue;
          for (MorId k : a.out(a.tgt(g))) {
            if (a.is_identity(k) || mm[k.value] == kNone || a.compose(k, g) != f) continue;
            if (auto c = b.try_compose(MorId{mm[k.value]}, MorId{mm[g.value]})) {
              mm[f.value] = c->value;
              break;
            }
          }
          if (mm[f.value] != kNone) break;
        }
      }
      if (mm[f.value] != kNone) progress = true;
    }
  }
  for (MorId f : a.morphisms()) {
    if (mm[f.value] == kNone) {
      fail(ErrorCode::kResolutionError, pos,
           what + ": cannot infer the image of arrow '" + a.name(f) + "'");
    }
  }
  std::vector<ObjId> objs;
  for (auto v : om) objs.push_back(ObjId{v});
  std::vector<MorId> mors;
  for (auto v : mm) mors.push_back(MorId{v});
  return FunctorMap(src, tgt, std::move(objs), std::move(mors));
}

void check_functor_or_fail(const FunctorMap& f, SourcePos pos, const std::string& what) {
  if (Verdict v = check_functor(f); !v.pass) {
    std::string w;
    for (const auto& [k, val] : v.witness.fields()) w += " " + k + "=" + val;
    fail(ErrorCode::kValidationError, pos, what + " is not a functor (" + v.check + ":" + w + ")");
  }
}

Lens resolve_lens(const LensDecl& d, const FunctorMap& get, bool validate) {
  const auto& a = get.src();
  const auto& b = get.tgt();
  std::vector<PutConstraint> fixed;
  PutTable raw(a.num_objects(), b.num_morphisms());
  for (const auto& c : d.puts) {
    auto x = a.find_object(c.object);
    if (!x) fail(ErrorCode::kResolutionError, c.pos, "no object '" + c.object + "' in " + a.label());
    auto m = b.find_morphism(c.morphism);
    if (!m) fail(ErrorCode::kResolutionError, c.pos, "no arrow '" + c.morphism + "' in " + b.label());
    auto v = a.find_morphism(c.value);
    if (!v) fail(ErrorCode::kResolutionError, c.pos, "no arrow '" + c.value + "' in " + a.label());
    if (validate) {
      if (b.src(*m) != get(*x)) {
        fail(ErrorCode::kValidationError, c.pos,
             "put " + c.object + " (" + c.morphism + "): arrow does not leave get " + c.object);
      }
      if (a.src(*v) != *x || get(*v) != *m) {
        fail(ErrorCode::kValidationError, c.pos,
             "put " + c.object + " (" + c.morphism + ") = " + c.value +
                 " violates PutGet at (" + c.object + ", " + c.morphism + ")");
      }
    }
    if (auto prev = raw.at(*x, *m); prev && *prev != *v) {
      fail(ErrorCode::kValidationError, c.pos,
           "put " + c.object + " (" + c.morphism + ") is given twice");
    }
    raw.set(*x, *m, *v);
    fixed.push_back({*x, *m, *v});
  }

  const bool is_functor = check_functor(get).pass;
  if (!is_functor) return Lens(get, std::move(raw));
  auto found = enumerate_lens_structures(get, fixed, 2);
  if (found.size() == 1) return std::move(found.front());
  if (found.size() > 1) {
    for (ObjId x : a.objects()) {
      for (MorId m : b.out(get(x))) {
        const MorId p = found[0].put(x, m);
        const MorId q = found[1].put(x, m);
        if (p != q) {
          fail(ErrorCode::kResolutionError, d.pos,
               "lens " + d.name + " is ambiguous: put " + a.name(x) + " (" + b.name(m) +
                   ") may be " + a.name(p) + " or " + a.name(q));
        }
      }
    }
  }
  if (!validate) return Lens(get, std::move(raw));
  if (enumerate_lens_structures(get, {}, 1).empty()) {
    fail(ErrorCode::kValidationError, d.pos, "lens " + d.name + ": the get functor has no lens structure");
  }
  fail(ErrorCode::kValidationError, d.pos,
       "lens " + d.name + ": no lawful put table extends the given put clauses");
}

void resolve(Workspace& ws, bool validate) {
  std::set<std::string> names;
  auto declare = [&](const std::string& name, SourcePos pos) {
    if (!names.insert(name).second) fail(ErrorCode::kResolutionError, pos, "'" + name + "' is already declared");
  };
  for (const auto& [kind, idx] : ws.order) {
    switch (kind) {
      case Workspace::Kind::kCategory: {
        auto& d = ws.categories[idx];
        declare(d.name, d.pos);
        try {
          d.category = build_category(d.presentation);
        } catch (const Error& e) {
          const auto code = e.code() == ErrorCode::kBoundExceeded ? ErrorCode::kBoundExceeded
                                                                   : ErrorCode::kValidationError;
          fail(code, d.pos, "category " + d.name + ": " + e.what());
        }
        break;
      }
      case Workspace::Kind::kFunctor: {
        auto& d = ws.functors[idx];
        declare(d.name, d.pos);
        auto src = ws.find_category(d.src);
        if (!src) fail(ErrorCode::kResolutionError, d.pos, "unknown category '" + d.src + "'");
        auto tgt = ws.find_category(d.tgt);
        if (!tgt) fail(ErrorCode::kResolutionError, d.pos, "unknown category '" + d.tgt + "'");
        d.functor = resolve_body(d.body, src->category, tgt->category, d.pos, "functor " + d.name);
        if (validate) check_functor_or_fail(*d.functor, d.pos, "functor " + d.name);
        break;
      }
      case Workspace::Kind::kLens: {
        auto& d = ws.lenses[idx];
        declare(d.name, d.pos);
        auto src = ws.find_category(d.src);
        if (!src) fail(ErrorCode::kResolutionError, d.pos, "unknown category '" + d.src + "'");
        auto tgt = ws.find_category(d.tgt);
        if (!tgt) fail(ErrorCode::kResolutionError, d.pos, "unknown category '" + d.tgt + "'");
        std::optional<FunctorMap> get;
        if (!d.get_ref.empty()) {
          if (auto f = ws.find_functor(d.get_ref)) {
            get = f->functor;
          } else if (auto l = ws.find_lens(d.get_ref)) {
            get = l->lens->get();
          } else {
            fail(ErrorCode::kResolutionError, d.pos, "unknown functor '" + d.get_ref + "'");
          }
          if (!same_category(get->src_ptr(), src->category) ||
              !same_category(get->tgt_ptr(), tgt->category)) {
            fail(ErrorCode::kResolutionError, d.pos,
                 "lens " + d.name + ": get '" + d.get_ref + "' is not " + d.src + " -> " + d.tgt);
          }
          get = FunctorMap(src->category, tgt->category, get->obj_map(), get->mor_map());
        } else {
          get = resolve_body(*d.inline_get, src->category, tgt->category, d.pos, "lens " + d.name);
          if (validate) check_functor_or_fail(*get, d.pos, "get of lens " + d.name);
        }
        d.lens = resolve_lens(d, *get, validate);
        break;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

const std::set<std::string>& keywords() {
  static const std::set<std::string> k{"category", "functor", "lens", "objects", "arrows",
                                       "mode",     "preorder", "free", "table",  "compose",
                                       "get",      "put"};
  return k;
}

std::string quote(const std::string& name) {
  const bool plain = !name.empty() && std::all_of(name.begin(), name.end(), ident_char) &&
                     !keywords().count(name);
  if (plain) return name;
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void print_body(std::ostringstream& os, const FunctorMap& f, const std::string& indent) {
  const auto& a = f.src();
  const auto& b = f.tgt();
  os << indent << "objects";
  for (ObjId x : a.objects()) {
    os << (x.value ? ", " : " ") << quote(a.name(x)) << " -> " << quote(b.name(f(x)));
  }
  os << ";\n";
  os << indent << "arrows";
  bool first = true;
  for (MorId m : a.morphisms()) {
    if (a.is_identity(m)) continue;
    os << (first ? " " : ", ") << quote(a.name(m)) << " -> " << quote(b.name(f(m)));
    first = false;
  }
  os << ";\n";
}

}  // namespace

const CategoryDecl* Workspace::find_category(std::string_view name) const {
  for (const auto& d : categories) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

const FunctorDecl* Workspace::find_functor(std::string_view name) const {
  for (const auto& d : functors) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

const LensDecl* Workspace::find_lens(std::string_view name) const {
  for (const auto& d : lenses) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

CategoryPtr Workspace::category(std::string_view name) const {
  if (auto d = find_category(name)) return d->category;
  throw Error(ErrorCode::kResolutionError, "unknown category '" + std::string(name) + "'");
}

FunctorMap Workspace::functor(std::string_view name) const {
  if (auto d = find_functor(name)) return *d->functor;
  if (auto d = find_lens(name)) return d->lens->get();
  throw Error(ErrorCode::kResolutionError, "unknown functor or lens '" + std::string(name) + "'");
}

Lens Workspace::lens(std::string_view name) const {
  if (auto d = find_lens(name)) return *d->lens;
  if (auto d = find_functor(name)) {
    if (!is_discrete_opfibration(*d->functor)) {
      throw Error(ErrorCode::kNotDiscreteOpfibration,
                  "functor '" + std::string(name) + "' is not a discrete opfibration, so it names no lens");
    }
    return lens_from_dopf(*d->functor);
  }
  throw Error(ErrorCode::kResolutionError, "unknown lens '" + std::string(name) + "'");
}

Workspace parse_workspace(std::string_view text, bool validate) {
  Workspace ws;
  Parser(lex(text)).parse(ws);
  resolve(ws, validate);
  return ws;
}

std::string print_workspace(const Workspace& ws) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [kind, idx] : ws.order) {
    if (!first) os << "\n";
    first = false;
    switch (kind) {
      case Workspace::Kind::kCategory: {
        const auto& d = ws.categories[idx];
        const auto& p = d.presentation;
        os << "category " << quote(d.name) << " {\n  objects:";
        if (p.nodes.empty()) os << " ";
        for (std::size_t i = 0; i < p.nodes.size(); ++i) os << (i ? ", " : " ") << quote(p.nodes[i]);
        os << ";\n";
        if (!p.edges.empty()) {
          os << "  arrows:";
          for (std::size_t i = 0; i < p.edges.size(); ++i) {
            os << (i ? ", " : " ") << quote(p.edges[i].name) << ": " << quote(p.edges[i].src)
               << " -> " << quote(p.edges[i].tgt);
          }
          os << ";\n";
        }
        switch (p.mode) {
          case GraphPresentation::Mode::kPreorder:
            os << "  mode: preorder;\n";
            break;
          case GraphPresentation::Mode::kFree:
            os << "  mode: free(" << p.bound << ");\n";
            break;
          case GraphPresentation::Mode::kTable:
            os << "  mode: table {\n";
            for (const auto& r : p.table) {
              os << "    compose " << quote(r.second) << "." << quote(r.first) << " = "
                 << quote(r.result) << ";\n";
            }
            os << "  }\n";
            break;
        }
        os << "}\n";
        break;
      }
      case Workspace::Kind::kFunctor: {
        const auto& d = ws.functors[idx];
        os << "functor " << quote(d.name) << ": " << quote(d.src) << " -> " << quote(d.tgt) << " {\n";
        print_body(os, *d.functor, "  ");
        os << "}\n";
        break;
      }
      case Workspace::Kind::kLens: {
        const auto& d = ws.lenses[idx];
        const Lens& l = *d.lens;
        os << "lens " << quote(d.name) << ": " << quote(d.src) << " -> " << quote(d.tgt) << " {\n";
        if (!d.get_ref.empty()) {
          os << "  get: " << quote(d.get_ref) << ";\n";
        } else {
          os << "  get: {\n";
          print_body(os, l.get(), "    ");
          os << "  }\n";
        }
        for (ObjId x : l.src().objects()) {
          for (MorId m : l.tgt().morphisms()) {
            if (l.tgt().is_identity(m)) continue;
            if (auto v = l.try_put(x, m)) {
              os << "  put " << quote(l.src().name(x)) << " (" << quote(l.tgt().name(m))
                 << ") = " << quote(l.src().name(*v)) << ";\n";
            }
          }
        }
        os << "}\n";
        break;
      }
    }
  }
  return os.str();
}

bool same_workspace(const Workspace& a, const Workspace& b) {
  if (a.order != b.order || a.categories.size() != b.categories.size() ||
      a.functors.size() != b.functors.size() || a.lenses.size() != b.lenses.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.categories.size(); ++i) {
    if (a.categories[i].name != b.categories[i].name ||
        !same_category(a.categories[i].category, b.categories[i].category)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.functors.size(); ++i) {
    if (a.functors[i].name != b.functors[i].name || !(*a.functors[i].functor == *b.functors[i].functor)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.lenses.size(); ++i) {
    if (a.lenses[i].name != b.lenses[i].name || !(*a.lenses[i].lens == *b.lenses[i].lens)) {
      return false;
    }
  }
  return true;
}

}  // namespace lenslab
