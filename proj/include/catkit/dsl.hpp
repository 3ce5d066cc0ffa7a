#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "catkit/names.hpp"

namespace catkit::dsl {

struct Diagnostic {
  enum Severity { Error, Warning } severity = Error;
  int line = 0, col = 0;
  std::string message;
  std::string law;  // violated law name for semantic errors, else empty
};

struct ParseError : CatError {
  std::vector<Diagnostic> diagnostics;
  explicit ParseError(std::vector<Diagnostic> diags)
      : CatError(render(diags)), diagnostics(std::move(diags)) {}

  static std::string render(const std::vector<Diagnostic>& diags) {
    std::ostringstream os;
    for (size_t i = 0; i < diags.size(); ++i) {
      if (i) os << "\n";
      os << diags[i].line << ":" << diags[i].col << ": " << diags[i].message;
      if (!diags[i].law.empty()) os << " [" << diags[i].law << "]";
    }
    return os.str();
  }
};

// ---------------------------------------------------------------------------
// Lexer

namespace detail {

struct Token {
  enum Kind {
    Ident,
    Integer,
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Colon,
    Semi,
    Comma,
    Dot,
    Tilde,
    Equals,
    Arrow,      // ->
    FatArrow,   // =>
    End
  } kind = End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_ws();
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_.kind = Token::End;
      return;
    }
    char c = src_[pos_];
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        bump();
      tok_.kind = Token::Ident;
      tok_.text = src_.substr(start, pos_ - start);
      return;
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             isdigit(static_cast<unsigned char>(src_[pos_])))
        bump();
      tok_.kind = Token::Integer;
      tok_.text = src_.substr(start, pos_ - start);
      return;
    }
    if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      bump();
      bump();
      tok_.kind = Token::Arrow;
      return;
    }
    if (c == '=' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      bump();
      bump();
      tok_.kind = Token::FatArrow;
      return;
    }
    bump();
    switch (c) {
      case '{': tok_.kind = Token::LBrace; return;
      case '}': tok_.kind = Token::RBrace; return;
      case '(': tok_.kind = Token::LParen; return;
      case ')': tok_.kind = Token::RParen; return;
      case '[': tok_.kind = Token::LBracket; return;
      case ']': tok_.kind = Token::RBracket; return;
      case ':': tok_.kind = Token::Colon; return;
      case ';': tok_.kind = Token::Semi; return;
      case ',': tok_.kind = Token::Comma; return;
      case '.': tok_.kind = Token::Dot; return;
      case '~': tok_.kind = Token::Tilde; return;
      case '=': tok_.kind = Token::Equals; return;
      default:
        tok_.kind = Token::End;
        tok_.text = std::string(1, c);
        tok_.line = line_;
        tok_.col = col_ - 1;
        throw ParseError({Diagnostic{Diagnostic::Error, tok_.line, tok_.col,
                                     "unexpected character '" +
                                         std::string(1, c) + "'",
                                     ""}});
    }
  }

  void skip_ws() {
    for (;;) {
      while (pos_ < src_.size() &&
             isspace(static_cast<unsigned char>(src_[pos_])))
        bump();
      if (pos_ + 1 < src_.size() && src_[pos_] == '/' &&
          src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
        continue;
      }
      if (pos_ < src_.size() && src_[pos_] == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
        continue;
      }
      break;
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

// Name environments for one precategory under construction.
struct PrecatBuilder {
  std::string name;
  std::vector<std::string> objects;
  std::map<std::string, int> obj_index;
  // hom lists: declared (non-identity) morphism names per pair
  std::vector<std::vector<std::vector<std::string>>> declared;
  std::map<std::string, MorRef> mor_by_name;  // includes identities
  // composition entries by name, with positions for diagnostics
  struct ComposeEntry {
    MorRef g, f, result;
    int line, col;
  };
  std::vector<ComposeEntry> composes;
  enum PathMode { Discrete, Core, Explicit } path_mode = Discrete;
  // explicit path data
  std::vector<std::string> path_names;             // declared (non-refl)
  std::map<std::string, PathRef> path_by_name;     // includes refls
  std::vector<std::vector<std::vector<std::string>>> path_lists;
  struct PathEntry {
    PathRef p, q, result;
    int line, col;
  };
  std::vector<PathEntry> concats;
  std::vector<std::pair<PathRef, PathRef>> invs;
  std::vector<std::pair<PathRef, MorRef>> transports;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  SourceFile parse() {
    SourceFile file;
    while (lex_.peek().kind != detail::Token::End) {
      auto kw = expect_ident("item keyword");
      if (kw.text == "precategory") {
        parse_precategory(file);
      } else if (kw.text == "functor") {
        parse_functor(file);
      } else if (kw.text == "presheaf") {
        parse_presheaf(file);
      } else {
        fail(kw, "expected 'precategory', 'functor' or 'presheaf'");
      }
    }
    if (!diags_.empty()) throw ParseError(diags_);
    return file;
  }

 private:
  using Token = detail::Token;

  [[noreturn]] void fail(const Token& at, const std::string& msg,
                         const std::string& law = "") {
    diags_.push_back(Diagnostic{Diagnostic::Error, at.line, at.col, msg, law});
    throw ParseError(diags_);
  }

  void note_error(const Token& at, const std::string& msg,
                  const std::string& law = "") {
    diags_.push_back(Diagnostic{Diagnostic::Error, at.line, at.col, msg, law});
  }

  Token expect(Token::Kind k, const std::string& what) {
    Token t = lex_.take();
    if (t.kind != k) fail(t, "expected " + what);
    return t;
  }

  Token expect_ident(const std::string& what) {
    Token t = lex_.take();
    if (t.kind != Token::Ident) fail(t, "expected " + what);
    return t;
  }

  bool peek_ident(const std::string& text) {
    return lex_.peek().kind == Token::Ident && lex_.peek().text == text;
  }

  // ---- shared reference parsing ----

  // REF := NAME | id(obj)
  std::pair<Token, std::string> parse_mor_ref_text() {
    Token t = expect_ident("a morphism name");
    if (t.text == "id" && lex_.peek().kind == Token::LParen) {
      lex_.take();
      Token o = expect_ident("an object name");
      expect(Token::RParen, "')'");
      return {t, "id(" + o.text + ")"};
    }
    return {t, t.text};
  }

  // PREF := NAME | refl(obj) | iso(REF)
  std::pair<Token, std::string> parse_path_ref_text() {
    Token t = expect_ident("a path name");
    if ((t.text == "refl" || t.text == "iso") &&
        lex_.peek().kind == Token::LParen) {
      lex_.take();
      if (t.text == "iso") {
        auto [tok, inner] = parse_mor_ref_text();
        expect(Token::RParen, "')'");
        return {t, "iso(" + inner + ")"};
      }
      Token o = expect_ident("an object name");
      expect(Token::RParen, "')'");
      return {t, "refl(" + o.text + ")"};
    }
    return {t, t.text};
  }

  // ---- precategory ----

  void parse_precategory(SourceFile& file) {
    detail::PrecatBuilder b;
    Token name = expect_ident("a precategory name");
    b.name = name.text;
    if (file.find_precategory(b.name) || file.find_functor(b.name) ||
        file.find_presheaf(b.name))
      fail(name, "duplicate item name '" + b.name + "'");
    expect(Token::LBrace, "'{'");
    Token objkw = expect_ident("'objects'");
    if (objkw.text != "objects") fail(objkw, "expected 'objects'");
    expect(Token::Colon, "':'");
    while (lex_.peek().kind == Token::Ident) {
      Token o = lex_.take();
      if (b.obj_index.count(o.text))
        fail(o, "duplicate object name '" + o.text + "'");
      b.obj_index[o.text] = static_cast<int>(b.objects.size());
      b.objects.push_back(o.text);
      if (lex_.peek().kind == Token::Comma)
        lex_.take();
      else
        break;
    }
    expect(Token::Semi, "';'");
    const int n = static_cast<int>(b.objects.size());
    b.declared.assign(static_cast<size_t>(n),
                      std::vector<std::vector<std::string>>(
                          static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
      b.mor_by_name["id(" + b.objects[a] + ")"] = MorRef{a, a, 0};

    for (;;) {
      if (lex_.peek().kind == Token::RBrace) break;
      Token kw = expect_ident("'hom', 'compose', 'paths' or '}'");
      if (kw.text == "hom")
        parse_hom(b);
      else if (kw.text == "compose")
        parse_compose(b);
      else if (kw.text == "paths") {
        parse_paths(b);
        break;  // paths clause is last
      } else
        fail(kw, "expected 'hom', 'compose' or 'paths'");
    }
    expect(Token::RBrace, "'}'");
    build_precategory(file, b, name);
  }

  void parse_hom(detail::PrecatBuilder& b) {
    Token src = expect_ident("a source object");
    Token tgt = expect_ident("a target object");
    auto is = b.obj_index.find(src.text);
    auto it = b.obj_index.find(tgt.text);
    if (is == b.obj_index.end())
      fail(src, "unknown object '" + src.text + "'");
    if (it == b.obj_index.end())
      fail(tgt, "unknown object '" + tgt.text + "'");
    expect(Token::Colon, "':'");
    for (;;) {
      Token m = expect_ident("a morphism name");
      if (b.mor_by_name.count(m.text))
        fail(m, "duplicate morphism name '" + m.text + "'");
      int a = is->second, c = it->second;
      int index = static_cast<int>(b.declared[a][c].size()) +
                  (a == c ? 1 : 0);  // identity occupies slot 0
      b.mor_by_name[m.text] = MorRef{a, c, index};
      b.declared[a][c].push_back(m.text);
      if (lex_.peek().kind == Token::Comma)
        lex_.take();
      else
        break;
    }
    expect(Token::Semi, "';'");
  }

  MorRef resolve_mor(detail::PrecatBuilder& b, const Token& at,
                     const std::string& ref) {
    auto it = b.mor_by_name.find(ref);
    if (it == b.mor_by_name.end())
      fail(at, "unknown morphism '" + ref + "'");
    return it->second;
  }

  void parse_compose(detail::PrecatBuilder& b) {
    auto [gt, gname] = parse_mor_ref_text();
    expect(Token::Dot, "'.'");
    auto [ft, fname] = parse_mor_ref_text();
    expect(Token::Equals, "'='");
    auto [rt, rname] = parse_mor_ref_text();
    expect(Token::Semi, "';'");
    MorRef g = resolve_mor(b, gt, gname);
    MorRef f = resolve_mor(b, ft, fname);
    MorRef r = resolve_mor(b, rt, rname);
    if (f.tgt != g.src)
      fail(gt, "'" + gname + " . " + fname + "' is not composable: " +
                   fname + " ends at " + b.objects[f.tgt] + " but " + gname +
                   " starts at " + b.objects[g.src]);
    if (r.src != f.src || r.tgt != g.tgt)
      fail(rt, "composite '" + rname + "' is not in hom(" +
                   b.objects[f.src] + "," + b.objects[g.tgt] + ")");
    b.composes.push_back({g, f, r, gt.line, gt.col});
  }

  void parse_paths(detail::PrecatBuilder& b) {
    Token mode = expect_ident("'discrete', 'core' or 'explicit'");
    if (mode.text == "discrete") {
      b.path_mode = detail::PrecatBuilder::Discrete;
    } else if (mode.text == "core") {
      b.path_mode = detail::PrecatBuilder::Core;
    } else if (mode.text == "explicit") {
      b.path_mode = detail::PrecatBuilder::Explicit;
      parse_explicit_paths(b);
    } else {
      fail(mode, "expected 'discrete', 'core' or 'explicit'");
    }
    expect(Token::Semi, "';'");
  }

  void parse_explicit_paths(detail::PrecatBuilder& b) {
    const int n = static_cast<int>(b.objects.size());
    b.path_lists.assign(static_cast<size_t>(n),
                        std::vector<std::vector<std::string>>(
                            static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
      b.path_by_name["refl(" + b.objects[a] + ")"] = PathRef{a, a, 0};
    expect(Token::LBrace, "'{'");
    // declarations first, then tables
    for (;;) {
      if (lex_.peek().kind == Token::RBrace) break;
      Token kw = expect_ident("'path', 'concat', 'inv' or 'transport'");
      if (kw.text == "path") {
        Token p = expect_ident("a path name");
        expect(Token::Colon, "':'");
        Token src = expect_ident("an object name");
        expect(Token::Tilde, "'~'");
        Token tgt = expect_ident("an object name");
        expect(Token::Semi, "';'");
        auto is = b.obj_index.find(src.text);
        auto it = b.obj_index.find(tgt.text);
        if (is == b.obj_index.end())
          fail(src, "unknown object '" + src.text + "'");
        if (it == b.obj_index.end())
          fail(tgt, "unknown object '" + tgt.text + "'");
        if (b.path_by_name.count(p.text))
          fail(p, "duplicate path name '" + p.text + "'");
        int a = is->second, c = it->second;
        int index = static_cast<int>(b.path_lists[a][c].size()) +
                    (a == c ? 1 : 0);
        b.path_by_name[p.text] = PathRef{a, c, index};
        b.path_lists[a][c].push_back(p.text);
        b.path_names.push_back(p.text);
      } else if (kw.text == "concat") {
        auto [qt, qname] = parse_path_ref_text();
        expect(Token::Dot, "'.'");
        auto [pt, pname] = parse_path_ref_text();
        expect(Token::Equals, "'='");
        auto [rt, rname] = parse_path_ref_text();
        expect(Token::Semi, "';'");
        PathRef q = resolve_path(b, qt, qname);
        PathRef p = resolve_path(b, pt, pname);
        PathRef r = resolve_path(b, rt, rname);
        if (p.tgt != q.src)
          fail(qt, "'" + qname + " . " + pname + "' is not composable");
        if (r.src != p.src || r.tgt != q.tgt)
          fail(rt, "concatenation result '" + rname + "' has wrong endpoints");
        b.concats.push_back({p, q, r, qt.line, qt.col});
      } else if (kw.text == "inv") {
        auto [pt, pname] = parse_path_ref_text();
        expect(Token::Equals, "'='");
        auto [qt, qname] = parse_path_ref_text();
        expect(Token::Semi, "';'");
        PathRef p = resolve_path(b, pt, pname);
        PathRef q = resolve_path(b, qt, qname);
        if (q.src != p.tgt || q.tgt != p.src)
          fail(qt, "inverse '" + qname + "' has wrong endpoints");
        b.invs.emplace_back(p, q);
      } else if (kw.text == "transport") {
        auto [pt, pname] = parse_path_ref_text();
        expect(Token::FatArrow, "'=>'");
        auto [mt, mname] = parse_mor_ref_text();
        expect(Token::Semi, "';'");
        PathRef p = resolve_path(b, pt, pname);
        MorRef m = resolve_mor(b, mt, mname);
        if (m.src != p.src || m.tgt != p.tgt)
          fail(mt, "transport image '" + mname + "' has wrong endpoints");
        b.transports.emplace_back(p, m);
      } else {
        fail(kw, "expected 'path', 'concat', 'inv' or 'transport'");
      }
    }
    expect(Token::RBrace, "'}'");
  }

  PathRef resolve_path(detail::PrecatBuilder& b, const Token& at,
                       const std::string& ref) {
    auto it = b.path_by_name.find(ref);
    if (it == b.path_by_name.end()) fail(at, "unknown path '" + ref + "'");
    return it->second;
  }

  void build_precategory(SourceFile& file, detail::PrecatBuilder& b,
                         const Token& at) {
    const int n = static_cast<int>(b.objects.size());
    FinPrecategory C;
    C.object_count = n;
    C.hom_size.assign(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        C.hom_size[a][c] = static_cast<int>(b.declared[a][c].size()) +
                           (a == c ? 1 : 0);
    C.identity.assign(static_cast<size_t>(n), 0);
    C.comp.assign(n,
                  std::vector<std::vector<Table2>>(n, std::vector<Table2>(n)));
    std::vector<std::vector<std::vector<std::vector<char>>>> filled(
        static_cast<size_t>(n),
        std::vector<std::vector<std::vector<char>>>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        filled[a][c].assign(static_cast<size_t>(n), {});
        for (int d = 0; d < n; ++d) {
          C.comp[a][c][d].assign(
              static_cast<size_t>(C.hom_size[a][c]),
              std::vector<int>(static_cast<size_t>(C.hom_size[c][d]), 0));
          filled[a][c][d].assign(
              static_cast<size_t>(C.hom_size[a][c] * C.hom_size[c][d]), 0);
        }
      }
    auto mark = [&](MorRef f, MorRef g, MorRef r) {
      C.comp[f.src][f.tgt][g.tgt][f.index][g.index] = r.index;
      filled[f.src][f.tgt][g.tgt][f.index * C.hom_size[g.src][g.tgt] +
                                  g.index] = 1;
    };
    // identity composites derived
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        for (int f = 0; f < C.hom_size[a][c]; ++f) {
          mark(MorRef{a, a, 0}, MorRef{a, c, f}, MorRef{a, c, f});
          mark(MorRef{a, c, f}, MorRef{c, c, 0}, MorRef{a, c, f});
        }
    for (const auto& e : b.composes) {
      if (filled[e.f.src][e.f.tgt][e.g.tgt]
                [e.f.index * C.hom_size[e.g.src][e.g.tgt] + e.g.index]) {
        Token t;
        t.line = e.line;
        t.col = e.col;
        fail(t, "duplicate or identity-redundant compose entry");
      }
      mark(e.f, e.g, e.result);
    }
    // every composable non-identity pair must be specified
    std::vector<std::string> missing;
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int f = 0; f < C.hom_size[a][c]; ++f)
            for (int g = 0; g < C.hom_size[c][d]; ++g)
              if (!filled[a][c][d][f * C.hom_size[c][d] + g]) {
                std::string fn = (a == c && f == 0)
                                     ? "id(" + b.objects[a] + ")"
                                     : b.declared[a][c][f - (a == c ? 1 : 0)];
                std::string gn = (c == d && g == 0)
                                     ? "id(" + b.objects[c] + ")"
                                     : b.declared[c][d][g - (c == d ? 1 : 0)];
                missing.push_back(gn + " . " + fn);
              }
    if (!missing.empty()) {
      for (const auto& m : missing)
        diags_.push_back(Diagnostic{Diagnostic::Error, at.line, at.col,
                                    "missing composite " + m,
                                    "missing-composite"});
      throw ParseError(diags_);
    }

    NameTable names;
    names.objects = b.objects;
    names.morphisms.assign(static_cast<size_t>(n),
                           std::vector<std::vector<std::string>>(
                               static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        if (a == c) names.morphisms[a][c].push_back("id(" + b.objects[a] + ")");
        for (const auto& m : b.declared[a][c])
          names.morphisms[a][c].push_back(m);
      }

    switch (b.path_mode) {
      case detail::PrecatBuilder::Discrete: {
        C.paths = discrete_groupoid(n);
        C.transport.assign(n, std::vector<std::vector<int>>(n));
        for (int a = 0; a < n; ++a)
          for (int c = 0; c < n; ++c)
            C.transport[a][c] =
                (a == c) ? std::vector<int>{0} : std::vector<int>{};
        break;
      }
      case detail::PrecatBuilder::Core: {
        FinPrecategory base = C;
        base.paths = discrete_groupoid(n);
        base.transport.assign(n, std::vector<std::vector<int>>(n));
        for (int a = 0; a < n; ++a)
          for (int c = 0; c < n; ++c)
            base.transport[a][c] =
                (a == c) ? std::vector<int>{0} : std::vector<int>{};
        C = with_core_paths(base);
        break;
      }
      case detail::PrecatBuilder::Explicit:
        build_explicit_paths(b, C, at);
        break;
    }
    build_path_names(b, C, names);
    file.precategories.push_back(NamedPrecategory{b.name, C, names});
  }

  void build_explicit_paths(detail::PrecatBuilder& b, FinPrecategory& C,
                            const Token& at) {
    const int n = C.object_count;
    FinGroupoid G;
    G.object_count = n;
    G.path_size.assign(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        G.path_size[a][c] = static_cast<int>(b.path_lists[a][c].size()) +
                            (a == c ? 1 : 0);
    G.refl.assign(static_cast<size_t>(n), 0);
    G.concat.assign(n,
                    std::vector<std::vector<Table2>>(n, std::vector<Table2>(n)));
    G.inv.assign(n, std::vector<std::vector<int>>(n));
    C.transport.assign(n, std::vector<std::vector<int>>(n));
    std::vector<std::vector<std::vector<char>>> cfilled(
        static_cast<size_t>(n),
        std::vector<std::vector<char>>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        G.inv[a][c].assign(static_cast<size_t>(G.path_size[a][c]), -1);
        C.transport[a][c].assign(static_cast<size_t>(G.path_size[a][c]), -1);
        cfilled[a][c].assign(static_cast<size_t>(n), {});
        for (int d = 0; d < n; ++d) {
          G.concat[a][c][d].assign(
              static_cast<size_t>(G.path_size[a][c]),
              std::vector<int>(static_cast<size_t>(G.path_size[c][d]), 0));
        }
      }
    std::vector<std::vector<std::vector<std::vector<char>>>> cf(
        static_cast<size_t>(n),
        std::vector<std::vector<std::vector<char>>>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        cf[a][c].assign(static_cast<size_t>(n), {});
        for (int d = 0; d < n; ++d)
          cf[a][c][d].assign(
              static_cast<size_t>(G.path_size[a][c] * G.path_size[c][d]), 0);
      }
    auto markc = [&](PathRef p, PathRef q, PathRef r) {
      G.concat[p.src][p.tgt][q.tgt][p.index][q.index] = r.index;
      cf[p.src][p.tgt][q.tgt][p.index * G.path_size[q.src][q.tgt] + q.index] =
          1;
    };
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        for (int p = 0; p < G.path_size[a][c]; ++p) {
          markc(PathRef{a, a, 0}, PathRef{a, c, p}, PathRef{a, c, p});
          markc(PathRef{a, c, p}, PathRef{c, c, 0}, PathRef{a, c, p});
        }
    for (const auto& e : b.concats) {
      Token t;
      t.line = e.line;
      t.col = e.col;
      if (cf[e.p.src][e.p.tgt][e.q.tgt]
            [e.p.index * G.path_size[e.q.src][e.q.tgt] + e.q.index])
        fail(t, "duplicate or refl-redundant concat entry");
      markc(e.p, e.q, e.result);
    }
    for (int a = 0; a < n; ++a) {
      G.inv[a][a][0] = 0;
      C.transport[a][a][0] = C.identity[a];
    }
    for (const auto& [p, q] : b.invs) {
      if (G.inv[p.src][p.tgt][p.index] != -1 &&
          G.inv[p.src][p.tgt][p.index] != q.index)
        note_error(at, "conflicting inv entries for a path");
      G.inv[p.src][p.tgt][p.index] = q.index;
    }
    for (const auto& [p, m] : b.transports) {
      if (C.transport[p.src][p.tgt][p.index] != -1 &&
          C.transport[p.src][p.tgt][p.index] != m.index)
        note_error(at, "conflicting transport entries for a path");
      C.transport[p.src][p.tgt][p.index] = m.index;
    }
    std::vector<std::string> missing;
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int p = 0; p < G.path_size[a][c]; ++p)
            for (int q = 0; q < G.path_size[c][d]; ++q)
              if (!cf[a][c][d][p * G.path_size[c][d] + q])
                missing.push_back(
                    path_display(b, PathRef{c, d, q}) + " . " +
                    path_display(b, PathRef{a, c, p}));
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        for (int p = 0; p < G.path_size[a][c]; ++p) {
          PathRef pp{a, c, p};
          if (G.inv[a][c][p] == -1)
            missing.push_back("inv " + path_display(b, pp));
          if (C.transport[a][c][p] == -1)
            missing.push_back("transport " + path_display(b, pp));
        }
    if (!missing.empty()) {
      for (const auto& m : missing)
        diags_.push_back(Diagnostic{Diagnostic::Error, at.line, at.col,
                                    "missing path entry: " + m,
                                    "missing-composite"});
      throw ParseError(diags_);
    }
    C.paths = G;
  }

  std::string path_display(const detail::PrecatBuilder& b, PathRef p) const {
    if (p.src == p.tgt && p.index == 0)
      return "refl(" + b.objects[p.src] + ")";
    return b.path_lists[p.src][p.tgt][p.index - (p.src == p.tgt ? 1 : 0)];
  }

  void build_path_names(const detail::PrecatBuilder& b,
                        const FinPrecategory& C, NameTable& names) {
    const int n = C.object_count;
    names.paths.assign(static_cast<size_t>(n),
                       std::vector<std::vector<std::string>>(
                           static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        for (int p = 0; p < C.paths.path_size[a][c]; ++p) {
          std::string nm;
          if (a == c && p == C.paths.refl[a]) {
            nm = "refl(" + names.objects[a] + ")";
          } else if (b.path_mode == detail::PrecatBuilder::Core) {
            nm = "iso(" + names.morphisms[a][c][C.transport[a][c][p]] + ")";
          } else if (b.path_mode == detail::PrecatBuilder::Explicit) {
            nm = b.path_lists[a][c][p - (a == c ? 1 : 0)];
          }
          names.paths[a][c].push_back(nm);
        }
  }

  // ---- functor ----

  void parse_functor(SourceFile& file) {
    Token name = expect_ident("a functor name");
    if (file.find_precategory(name.text) || file.find_functor(name.text) ||
        file.find_presheaf(name.text))
      fail(name, "duplicate item name '" + name.text + "'");
    expect(Token::Colon, "':'");
    Token dom = expect_ident("a precategory name");
    expect(Token::Arrow, "'->'");
    Token cod = expect_ident("a precategory name");
    const NamedPrecategory* D = file.find_precategory(dom.text);
    const NamedPrecategory* E = file.find_precategory(cod.text);
    if (!D) fail(dom, "unknown precategory '" + dom.text + "'");
    if (!E) fail(cod, "unknown precategory '" + cod.text + "'");
    expect(Token::LBrace, "'{'");

    const int n = D->cat.object_count;
    std::vector<int> omap(static_cast<size_t>(n), -1);
    // mor/path images recorded by name, resolved after obj map is known
    std::vector<std::tuple<Token, std::string, std::string>> mors, paths;
    for (;;) {
      if (lex_.peek().kind == Token::RBrace) break;
      Token kw = expect_ident("'obj', 'mor' or 'path'");
      if (kw.text == "obj") {
        Token a = expect_ident("an object name");
        expect(Token::FatArrow, "'=>'");
        Token x = expect_ident("an object name");
        expect(Token::Semi, "';'");
        int ai = lookup_obj(*D, a);
        int xi = lookup_obj(*E, x);
        if (omap[ai] != -1) fail(a, "duplicate obj mapping for " + a.text);
        omap[ai] = xi;
      } else if (kw.text == "mor") {
        auto [t, ref] = parse_mor_ref_text();
        expect(Token::FatArrow, "'=>'");
        auto [t2, ref2] = parse_mor_ref_text();
        expect(Token::Semi, "';'");
        mors.emplace_back(t, ref, ref2);
      } else if (kw.text == "path") {
        auto [t, ref] = parse_path_ref_text();
        expect(Token::FatArrow, "'=>'");
        auto [t2, ref2] = parse_path_ref_text();
        expect(Token::Semi, "';'");
        paths.emplace_back(t, ref, ref2);
      } else {
        fail(kw, "expected 'obj', 'mor' or 'path'");
      }
    }
    expect(Token::RBrace, "'}'");

    for (int a = 0; a < n; ++a)
      if (omap[a] == -1)
        note_error(name, "functor '" + name.text +
                             "' is missing an obj mapping for '" +
                             D->names.objects[a] + "'");
    if (!diags_.empty()) throw ParseError(diags_);

    FinFunctor F;
    F.dom = wrap(D->cat);
    F.cod = wrap(E->cat);
    F.obj_map = FinMap{n, E->cat.object_count, omap};
    F.hom_maps.assign(static_cast<size_t>(n), std::vector<FinMap>(n));
    F.path_map.assign(static_cast<size_t>(n), std::vector<FinMap>(n));
    std::vector<std::vector<std::vector<int>>> hm(
        static_cast<size_t>(n),
        std::vector<std::vector<int>>(static_cast<size_t>(n)));
    std::vector<std::vector<std::vector<int>>> pm(
        static_cast<size_t>(n),
        std::vector<std::vector<int>>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        hm[a][c].assign(static_cast<size_t>(D->cat.hom_size[a][c]), -1);
        pm[a][c].assign(
            static_cast<size_t>(D->cat.paths.path_size[a][c]), -1);
      }
    // derived: identities and refls
    for (int a = 0; a < n; ++a) {
      hm[a][a][D->cat.identity[a]] = E->cat.identity[omap[a]];
      pm[a][a][D->cat.paths.refl[a]] = E->cat.paths.refl[omap[a]];
    }
    for (auto& [t, ref, ref2] : mors) {
      MorRef f = lookup_mor(*D, t, ref);
      MorRef g = lookup_mor(*E, t, ref2);
      if (g.src != omap[f.src] || g.tgt != omap[f.tgt])
        fail(t, "image of '" + ref + "' has wrong endpoints under the "
                "object map");
      hm[f.src][f.tgt][f.index] = g.index;
    }
    for (auto& [t, ref, ref2] : paths) {
      PathRef p = lookup_path(*D, t, ref);
      PathRef q = lookup_path(*E, t, ref2);
      if (q.src != omap[p.src] || q.tgt != omap[p.tgt])
        fail(t, "image of '" + ref + "' has wrong endpoints under the "
                "object map");
      pm[p.src][p.tgt][p.index] = q.index;
    }
    std::vector<std::string> missing;
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        for (int f = 0; f < D->cat.hom_size[a][c]; ++f)
          if (hm[a][c][f] == -1)
            missing.push_back("mor " + D->names.morphisms[a][c][f]);
        for (int p = 0; p < D->cat.paths.path_size[a][c]; ++p)
          if (pm[a][c][p] == -1)
            missing.push_back("path " + D->names.paths[a][c][p]);
      }
    if (!missing.empty()) {
      for (const auto& m : missing)
        diags_.push_back(Diagnostic{Diagnostic::Error, name.line, name.col,
                                    "functor '" + name.text +
                                        "' is missing a mapping: " + m,
                                    ""});
      throw ParseError(diags_);
    }
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        F.hom_maps[a][c] =
            FinMap{D->cat.hom_size[a][c],
                   E->cat.hom_size[omap[a]][omap[c]], hm[a][c]};
        F.path_map[a][c] =
            FinMap{D->cat.paths.path_size[a][c],
                   E->cat.paths.path_size[omap[a]][omap[c]], pm[a][c]};
      }
    file.functors.push_back(
        NamedFunctor{name.text, dom.text, cod.text, std::move(F)});
  }

  int lookup_obj(const NamedPrecategory& P, const Token& t) {
    for (size_t i = 0; i < P.names.objects.size(); ++i)
      if (P.names.objects[i] == t.text) return static_cast<int>(i);
    fail(t, "unknown object '" + t.text + "' in precategory '" + P.name +
                "'");
  }

  MorRef lookup_mor(const NamedPrecategory& P, const Token& t,
                    const std::string& ref) {
    const int n = P.cat.object_count;
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        for (int k = 0; k < P.cat.hom_size[a][c]; ++k)
          if (P.names.morphisms[a][c][k] == ref) return MorRef{a, c, k};
    fail(t, "unknown morphism '" + ref + "' in precategory '" + P.name + "'");
  }

  PathRef lookup_path(const NamedPrecategory& P, const Token& t,
                      const std::string& ref) {
    const int n = P.cat.object_count;
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        for (int k = 0; k < P.cat.paths.path_size[a][c]; ++k)
          if (P.names.paths[a][c][k] == ref) return PathRef{a, c, k};
    fail(t, "unknown path '" + ref + "' in precategory '" + P.name + "'");
  }

  // ---- presheaf ----

  void parse_presheaf(SourceFile& file) {
    Token name = expect_ident("a presheaf name");
    if (file.find_precategory(name.text) || file.find_functor(name.text) ||
        file.find_presheaf(name.text))
      fail(name, "duplicate item name '" + name.text + "'");
    Token onkw = expect_ident("'on'");
    if (onkw.text != "on") fail(onkw, "expected 'on'");
    Token base = expect_ident("a precategory name");
    const NamedPrecategory* B = file.find_precategory(base.text);
    if (!B) fail(base, "unknown precategory '" + base.text + "'");
    expect(Token::LBrace, "'{'");

    const int n = B->cat.object_count;
    std::vector<int> carrier(static_cast<size_t>(n), -1);
    std::vector<std::tuple<Token, std::string, std::vector<int>>> acts;
    for (;;) {
      if (lex_.peek().kind == Token::RBrace) break;
      Token kw = expect_ident("'at' or 'act'");
      if (kw.text == "at") {
        Token o = expect_ident("an object name");
        expect(Token::Colon, "':'");
        Token k = expect(Token::Integer, "a carrier size");
        expect(Token::Semi, "';'");
        int oi = lookup_obj(*B, o);
        if (carrier[oi] != -1) fail(o, "duplicate carrier for " + o.text);
        carrier[oi] = std::stoi(k.text);
      } else if (kw.text == "act") {
        auto [t, ref] = parse_mor_ref_text();
        expect(Token::Equals, "'='");
        expect(Token::LBracket, "'['");
        std::vector<int> table;
        if (lex_.peek().kind == Token::Integer) {
          for (;;) {
            Token v = expect(Token::Integer, "an element index");
            table.push_back(std::stoi(v.text));
            if (lex_.peek().kind == Token::Comma)
              lex_.take();
            else
              break;
          }
        }
        expect(Token::RBracket, "']'");
        expect(Token::Semi, "';'");
        acts.emplace_back(t, ref, table);
      } else {
        fail(kw, "expected 'at' or 'act'");
      }
    }
    expect(Token::RBrace, "'}'");

    for (int a = 0; a < n; ++a)
      if (carrier[a] == -1)
        note_error(name, "presheaf '" + name.text +
                             "' is missing a carrier for '" +
                             B->names.objects[a] + "'");
    if (!diags_.empty()) throw ParseError(diags_);

    FinPresheaf P;
    P.base = wrap(B->cat);
    P.carrier = carrier;
    P.action.assign(static_cast<size_t>(n),
                    std::vector<std::vector<FinMap>>(static_cast<size_t>(n)));
    std::vector<std::vector<std::vector<char>>> have(
        static_cast<size_t>(n),
        std::vector<std::vector<char>>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        P.action[a][c].assign(static_cast<size_t>(B->cat.hom_size[a][c]),
                              FinMap{});
        have[a][c].assign(static_cast<size_t>(B->cat.hom_size[a][c]), 0);
      }
    for (int a = 0; a < n; ++a) {
      P.action[a][a][B->cat.identity[a]] = identity_map(carrier[a]);
      have[a][a][B->cat.identity[a]] = 1;
    }
    for (auto& [t, ref, table] : acts) {
      MorRef f = lookup_mor(*B, t, ref);
      if (static_cast<int>(table.size()) != carrier[f.tgt])
        fail(t, "action table for '" + ref + "' must have " +
                    std::to_string(carrier[f.tgt]) + " entries");
      for (int v : table)
        if (v < 0 || v >= carrier[f.src])
          fail(t, "action table entry out of range for '" + ref + "'");
      if (have[f.src][f.tgt][f.index])
        fail(t, "duplicate action for '" + ref + "'");
      P.action[f.src][f.tgt][f.index] =
          FinMap{carrier[f.tgt], carrier[f.src], table};
      have[f.src][f.tgt][f.index] = 1;
    }
    std::vector<std::string> missing;
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        for (int k = 0; k < B->cat.hom_size[a][c]; ++k)
          if (!have[a][c][k])
            missing.push_back(B->names.morphisms[a][c][k]);
    if (!missing.empty()) {
      for (const auto& m : missing)
        diags_.push_back(Diagnostic{Diagnostic::Error, name.line, name.col,
                                    "presheaf '" + name.text +
                                        "' is missing an action for " + m,
                                    ""});
      throw ParseError(diags_);
    }
    file.presheaves.push_back(
        NamedPresheaf{name.text, base.text, std::move(P)});
  }

  detail::Lexer lex_;
  std::vector<Diagnostic> diags_;
};

inline SourceFile parse_dsl(const std::string& text) {
  return Parser(text).parse();
}

// ---------------------------------------------------------------------------
// Printer (used by the saturate subcommand)

// Explicit path declarations need plain identifiers; core-style names like
// iso(f) are flattened.
inline std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (isalnum(static_cast<unsigned char>(c)) || c == '_')
      out += c;
    else
      out += '_';
  }
  return out;
}

inline std::string path_ref(const NamedPrecategory& item, PathRef p) {
  const FinPrecategory& C = item.cat;
  if (p.src == p.tgt && p.index == C.paths.refl[p.src])
    return "refl(" + item.names.objects[p.src] + ")";
  return sanitize(item.names.paths[p.src][p.tgt][p.index]);
}

inline std::string print_dsl(const NamedPrecategory& item) {
  const FinPrecategory& C = item.cat;
  const NameTable& names = item.names;
  const int n = C.object_count;
  std::ostringstream os;
  os << "precategory " << item.name << " {\n";
  os << "  objects:";
  for (int a = 0; a < n; ++a) os << (a ? ", " : " ") << names.objects[a];
  os << ";\n";
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      std::vector<std::string> list;
      for (int k = 0; k < C.hom_size[a][c]; ++k)
        if (!(a == c && k == C.identity[a]))
          list.push_back(names.morphisms[a][c][k]);
      if (list.empty()) continue;
      os << "  hom " << names.objects[a] << " " << names.objects[c] << ":";
      for (size_t i = 0; i < list.size(); ++i)
        os << (i ? ", " : " ") << list[i];
      os << ";\n";
    }
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d)
        for (int f = 0; f < C.hom_size[a][c]; ++f)
          for (int g = 0; g < C.hom_size[c][d]; ++g) {
            if (a == c && f == C.identity[a]) continue;
            if (c == d && g == C.identity[c]) continue;
            MorRef mf{a, c, f}, mg{c, d, g};
            os << "  compose " << names.mor(mg) << " . " << names.mor(mf)
               << " = " << names.mor(C.compose(mg, mf)) << ";\n";
          }
  if (C.paths.is_discrete()) {
    os << "  paths discrete;\n";
  } else {
    os << "  paths explicit {\n";
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        for (int p = 0; p < C.paths.path_size[a][c]; ++p) {
          if (a == c && p == C.paths.refl[a]) continue;
          os << "    path " << sanitize(names.paths[a][c][p]) << " : "
             << names.objects[a] << " ~ " << names.objects[c] << ";\n";
        }
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int p = 0; p < C.paths.path_size[a][c]; ++p)
            for (int q = 0; q < C.paths.path_size[c][d]; ++q) {
              if (a == c && p == C.paths.refl[a]) continue;
              if (c == d && q == C.paths.refl[c]) continue;
              PathRef pp{a, c, p}, qq{c, d, q};
              os << "    concat " << path_ref(item, qq) << " . "
                 << path_ref(item, pp) << " = "
                 << path_ref(item, C.paths.concat_paths(pp, qq)) << ";\n";
            }
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        for (int p = 0; p < C.paths.path_size[a][c]; ++p) {
          if (a == c && p == C.paths.refl[a]) continue;
          PathRef pp{a, c, p};
          os << "    inv " << path_ref(item, pp) << " = "
             << path_ref(item, C.paths.inverse(pp)) << ";\n"
             << "    transport " << path_ref(item, pp) << " => "
             << names.mor(C.idtoiso(pp)) << ";\n";
        }
    os << "  };\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace catkit::dsl
