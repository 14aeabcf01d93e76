#include "mltt/frontend/parser.hpp"

#include <array>
#include <cctype>
#include <string>

namespace mltt::frontend {

namespace {

constexpr std::array kKeywords = {
    std::string_view("Type"),  std::string_view("Nat"),    std::string_view("Empty"),
    std::string_view("zero"),  std::string_view("succ"),   std::string_view("pair"),
    std::string_view("fst"),   std::string_view("snd"),    std::string_view("natrec"),
    std::string_view("Id"),    std::string_view("refl"),   std::string_view("idrec"),
    std::string_view("exfalso"), std::string_view("def"),
};

enum class Tok {
  ident,
  keyword,
  lparen,
  rparen,
  colon,
  arrow,     // ->
  star2,     // **
  backslash,
  fat_arrow, // =>
  comma,
  dot,
  define,    // :=
  eof,
};

struct Token {
  Tok kind;
  std::string_view text;
  Span span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const std::size_t start = pos_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::eof, {}, {start, start}});
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
        const std::string_view word = src_.substr(start, pos_ - start);
        out.push_back({is_keyword(word) ? Tok::keyword : Tok::ident, word, {start, pos_}});
        continue;
      }
      const auto two = [&](std::string_view s) { return src_.substr(pos_, 2) == s; };
      Tok kind;
      std::size_t len = 1;
      if (two("->")) kind = Tok::arrow, len = 2;
      else if (two("**")) kind = Tok::star2, len = 2;
      else if (two("=>")) kind = Tok::fat_arrow, len = 2;
      else if (two(":=")) kind = Tok::define, len = 2;
      else if (c == '(') kind = Tok::lparen;
      else if (c == ')') kind = Tok::rparen;
      else if (c == ':') kind = Tok::colon;
      else if (c == '\\') kind = Tok::backslash;
      else if (c == ',') kind = Tok::comma;
      else if (c == '.') kind = Tok::dot;
      else
        throw DiagnosticError({Diagnostic::Severity::error, DiagKind::parse,
                               "unexpected character '" + std::string(1, c) + "'",
                               {start, start + 1}});
      pos_ += len;
      out.push_back({kind, src_.substr(start, len), {start, pos_}});
    }
  }

 private:
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
      } else if (src_.substr(pos_, 2) == "--") {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::eof) return "end of input";
  return "'" + std::string(t.text) + "'";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

  SurfaceTerm whole_term() {
    SurfaceTerm t = term();
    expect(Tok::eof, "end of input");
    return t;
  }

  std::vector<Definition> file() {
    std::vector<Definition> defs;
    while (!at(Tok::eof)) {
      const Token& kw = peek();
      if (!at_keyword("def")) fail("expected 'def'");
      advance();
      const Token& name = expect(Tok::ident, "a definition name");
      expect(Tok::colon, "':'");
      SurfaceTerm ty = term();
      expect(Tok::define, "':='");
      SurfaceTerm body = term();
      const Span whole{kw.span.start, body.span.end};
      defs.push_back({std::string(name.text), std::move(ty), std::move(body), whole, name.span});
    }
    return defs;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_keyword(std::string_view kw) const {
    return peek().kind == Tok::keyword && peek().text == kw;
  }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw DiagnosticError({Diagnostic::Severity::error, DiagKind::parse,
                           what + ", found " + describe(peek()), peek().span});
  }

  const Token& expect(Tok k, std::string_view what) {
    if (!at(k)) fail("expected " + std::string(what));
    return advance();
  }

  std::string binder_name() { return std::string(expect(Tok::ident, "a binder name").text); }

  static SurfaceTerm node(Tag tag, std::vector<SurfaceTerm> kids, Span span,
                          std::vector<std::string> binders = {}) {
    SurfaceTerm s;
    s.tag = tag;
    s.children = std::move(kids);
    s.binders = std::move(binders);
    s.span = span;
    return s;
  }

  bool at_binder_group() const {
    return at(Tok::lparen) && peek(1).kind == Tok::ident && peek(2).kind == Tok::colon;
  }

  SurfaceTerm term() {
    const std::size_t start = peek().span.start;
    if (at(Tok::backslash)) {
      advance();
      expect(Tok::lparen, "'(' after '\\'");
      std::string x = binder_name();
      expect(Tok::colon, "':'");
      SurfaceTerm dom = term();
      expect(Tok::rparen, "')'");
      expect(Tok::fat_arrow, "'=>'");
      SurfaceTerm body = term();
      const Span span{start, body.span.end};
      return node(Tag::Lam, {std::move(dom), std::move(body)}, span, {std::move(x)});
    }
    SurfaceTerm lhs = product();
    if (at(Tok::arrow)) {
      advance();
      SurfaceTerm rhs = term();
      const Span span{start, rhs.span.end};
      return node(Tag::Pi, {std::move(lhs), std::move(rhs)}, span, {"_"});
    }
    return lhs;
  }

  // `**` binds tighter than `->`; both associate to the right.
  SurfaceTerm product() {
    const std::size_t start = peek().span.start;
    if (at_binder_group()) {
      advance();
      std::string x = binder_name();
      expect(Tok::colon, "':'");
      SurfaceTerm dom = term();
      expect(Tok::rparen, "')'");
      Tag tag;
      if (at(Tok::arrow)) tag = Tag::Pi;
      else if (at(Tok::star2)) tag = Tag::Sigma;
      else fail("expected '->' or '**' after a binder");
      advance();
      SurfaceTerm cod = tag == Tag::Pi ? term() : product();
      const Span span{start, cod.span.end};
      return node(tag, {std::move(dom), std::move(cod)}, span, {std::move(x)});
    }
    SurfaceTerm lhs = application();
    if (at(Tok::star2)) {
      advance();
      SurfaceTerm rhs = product();
      const Span span{start, rhs.span.end};
      return node(Tag::Sigma, {std::move(lhs), std::move(rhs)}, span, {"_"});
    }
    return lhs;
  }

  bool starts_atom() const {
    if (at(Tok::ident) || at(Tok::lparen)) return true;
    if (!at(Tok::keyword)) return false;
    const std::string_view k = peek().text;
    return k == "Type" || k == "Nat" || k == "Empty" || k == "zero" || k == "pair" ||
           k == "natrec" || k == "idrec" || k == "exfalso";
  }

  SurfaceTerm application() {
    const std::size_t start = peek().span.start;
    SurfaceTerm head = prefix_form();
    while (starts_atom()) {
      SurfaceTerm arg = atom();
      const Span span{start, arg.span.end};
      head = node(Tag::App, {std::move(head), std::move(arg)}, span);
    }
    return head;
  }

  SurfaceTerm prefix_form() {
    if (!at(Tok::keyword)) return atom();
    const std::string_view k = peek().text;
    const std::size_t start = peek().span.start;
    const auto with_atoms = [&](Tag tag, std::size_t n) {
      advance();
      std::vector<SurfaceTerm> kids;
      for (std::size_t i = 0; i < n; ++i) kids.push_back(atom());
      const Span span{start, kids.back().span.end};
      return node(tag, std::move(kids), span);
    };
    if (k == "succ") return with_atoms(Tag::Succ, 1);
    if (k == "fst") return with_atoms(Tag::Fst, 1);
    if (k == "snd") return with_atoms(Tag::Snd, 1);
    if (k == "Id") return with_atoms(Tag::Id, 3);
    if (k == "refl") return with_atoms(Tag::Refl, 2);
    return atom();
  }

  SurfaceTerm atom() {
    const Token tok = peek();
    const std::size_t start = tok.span.start;
    if (tok.kind == Tok::ident) {
      advance();
      SurfaceTerm s;
      s.tag = Tag::Var;
      s.name = std::string(tok.text);
      s.span = tok.span;
      return s;
    }
    if (tok.kind == Tok::lparen) {
      advance();
      SurfaceTerm inner = term();
      const Token& close = expect(Tok::rparen, "')'");
      inner.span = {start, close.span.end};
      return inner;
    }
    if (tok.kind != Tok::keyword) fail("expected a term");
    const std::string_view k = tok.text;
    if (k == "Type" || k == "Nat" || k == "Empty" || k == "zero") {
      advance();
      const Tag tag = k == "Type" ? Tag::Univ : k == "Nat" ? Tag::Nat
                    : k == "Empty" ? Tag::Empty : Tag::Zero;
      return node(tag, {}, tok.span);
    }
    if (k == "pair") {
      // pair(A, x. B, a, b)
      advance();
      expect(Tok::lparen, "'('");
      SurfaceTerm dom = term();
      expect(Tok::comma, "','");
      std::string x = binder_name();
      expect(Tok::dot, "'.'");
      SurfaceTerm cod = term();
      expect(Tok::comma, "','");
      SurfaceTerm a = term();
      expect(Tok::comma, "','");
      SurfaceTerm b = term();
      const Token& close = expect(Tok::rparen, "')'");
      return node(Tag::Pair, {std::move(dom), std::move(cod), std::move(a), std::move(b)},
                  {start, close.span.end}, {std::move(x)});
    }
    if (k == "natrec") {
      // natrec(x. P, hz, hs, n)
      advance();
      expect(Tok::lparen, "'('");
      std::string x = binder_name();
      expect(Tok::dot, "'.'");
      SurfaceTerm motive = term();
      expect(Tok::comma, "','");
      SurfaceTerm hz = term();
      expect(Tok::comma, "','");
      SurfaceTerm hs = term();
      expect(Tok::comma, "','");
      SurfaceTerm n = term();
      const Token& close = expect(Tok::rparen, "')'");
      return node(Tag::NatElim, {std::move(motive), std::move(hz), std::move(hs), std::move(n)},
                  {start, close.span.end}, {std::move(x)});
    }
    if (k == "idrec") {
      // idrec(A, a, y e. P, hr, b, p)
      advance();
      expect(Tok::lparen, "'('");
      SurfaceTerm ty = term();
      expect(Tok::comma, "','");
      SurfaceTerm lhs = term();
      expect(Tok::comma, "','");
      std::string y = binder_name();
      std::string e = binder_name();
      expect(Tok::dot, "'.'");
      SurfaceTerm motive = term();
      expect(Tok::comma, "','");
      SurfaceTerm hr = term();
      expect(Tok::comma, "','");
      SurfaceTerm rhs = term();
      expect(Tok::comma, "','");
      SurfaceTerm proof = term();
      const Token& close = expect(Tok::rparen, "')'");
      std::vector<SurfaceTerm> kids;
      kids.push_back(std::move(ty));
      kids.push_back(std::move(lhs));
      kids.push_back(std::move(motive));
      kids.push_back(std::move(hr));
      kids.push_back(std::move(rhs));
      kids.push_back(std::move(proof));
      return node(Tag::IdElim, std::move(kids), {start, close.span.end},
                  {std::move(y), std::move(e)});
    }
    if (k == "exfalso") {
      // exfalso(x. P, e)
      advance();
      expect(Tok::lparen, "'('");
      std::string x = binder_name();
      expect(Tok::dot, "'.'");
      SurfaceTerm motive = term();
      expect(Tok::comma, "','");
      SurfaceTerm e = term();
      const Token& close = expect(Tok::rparen, "')'");
      return node(Tag::EmptyElim, {std::move(motive), std::move(e)}, {start, close.span.end},
                  {std::move(x)});
    }
    fail("expected a term");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_keyword(std::string_view word) {
  for (std::string_view k : kKeywords)
    if (k == word) return true;
  return false;
}

std::string_view diag_kind_name(DiagKind kind) {
  switch (kind) {
    case DiagKind::parse: return "parse";
    case DiagKind::type: return "type";
    case DiagKind::fuel: return "fuel";
    case DiagKind::internal: return "internal";
  }
  return "internal";
}

int exit_code(DiagKind kind) {
  switch (kind) {
    case DiagKind::type: return 1;
    case DiagKind::parse: return 2;
    case DiagKind::fuel: return 3;
    case DiagKind::internal: return 4;
  }
  return 4;
}

SurfaceTerm parse_term(std::string_view text) { return Parser(text).whole_term(); }

std::vector<Definition> parse_file(std::string_view text) { return Parser(text).file(); }

}  // namespace mltt::frontend
