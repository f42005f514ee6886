#include "fleck/parser.hpp"

#include <cctype>
#include <optional>

#include "fleck/report.hpp"

namespace fleck {

namespace {

enum class Tok {
  End, Ident, Zero, One, And, Or, Star, Arrow, BiArrow, Tilde,
  LParen, RParen, Comma, Turnstile, Eq, Leq,
};

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string ident;
  std::size_t tok_pos = 0;

  explicit Lexer(const std::string& s) : src(s) { next(); }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg + " at position " + std::to_string(at), at);
  }

  void next() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
    tok_pos = pos;
    if (pos >= src.size()) {
      tok = Tok::End;
      return;
    }
    const char c = src[pos];
    auto two = [&](char a, char b) {
      return c == a && pos + 1 < src.size() && src[pos + 1] == b;
    };
    if (two('/', '\\')) { tok = Tok::And; pos += 2; return; }
    if (two('\\', '/')) { tok = Tok::Or; pos += 2; return; }
    if (two('-', '>')) { tok = Tok::Arrow; pos += 2; return; }
    if (two('|', '-')) { tok = Tok::Turnstile; pos += 2; return; }
    if (c == '<') {
      if (pos + 2 < src.size() && src[pos + 1] == '-' && src[pos + 2] == '>') {
        tok = Tok::BiArrow; pos += 3; return;
      }
      if (pos + 1 < src.size() && src[pos + 1] == '=') {
        tok = Tok::Leq; pos += 2; return;
      }
      fail("expected '<->' or '<='", pos);
    }
    switch (c) {
      case '*': tok = Tok::Star; ++pos; return;
      case '~': tok = Tok::Tilde; ++pos; return;
      case '(': tok = Tok::LParen; ++pos; return;
      case ')': tok = Tok::RParen; ++pos; return;
      case ',': tok = Tok::Comma; ++pos; return;
      case '=': tok = Tok::Eq; ++pos; return;
      case '0': tok = Tok::Zero; ++pos; return;
      case '1': tok = Tok::One; ++pos; return;
      default: break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos;
      while (pos < src.size()) {
        const char d = src[pos];
        if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9') || d == '_')
          ++pos;
        else
          break;
      }
      tok = Tok::Ident;
      ident = src.substr(start, pos - start);
      return;
    }
    fail(std::string("unexpected character '") + c + "'", pos);
  }
};

struct Parser {
  Lexer lx;

  explicit Parser(const std::string& s) : lx(s) {}

  bool at_ident(const char* kw) const {
    return lx.tok == Tok::Ident && lx.ident == kw;
  }

  void expect(Tok t, const char* what) {
    if (lx.tok != t) lx.fail(std::string("expected ") + what, lx.tok_pos);
    lx.next();
  }

  TermPtr parse_unary() {
    switch (lx.tok) {
      case Tok::Tilde:
        lx.next();
        return Term::neg(parse_unary());
      case Tok::Zero:
        lx.next();
        return Term::zero();
      case Tok::One:
        lx.next();
        return Term::one();
      case Tok::LParen: {
        lx.next();
        TermPtr t = parse_arrows();
        expect(Tok::RParen, "')'");
        return t;
      }
      case Tok::Ident: {
        const std::string name = lx.ident;
        std::optional<TermKind> fn;
        if (name == "dm") fn = TermKind::Dm;
        else if (name == "delta") fn = TermKind::Delta;
        else if (name == "bdiam") fn = TermKind::BDiamond;
        if (fn) {
          lx.next();
          expect(Tok::LParen, "'(' after unary operator");
          TermPtr t = parse_arrows();
          expect(Tok::RParen, "')'");
          return Term::unary(*fn, std::move(t));
        }
        if (name == "cm" || name == "cp" || name == "cmd" || name == "cpd")
          lx.fail("arrow keyword '" + name + "' used as a term", lx.tok_pos);
        lx.next();
        return Term::var(name);
      }
      default:
        lx.fail("expected a term", lx.tok_pos);
    }
  }

  TermPtr parse_prod() {
    TermPtr t = parse_unary();
    while (lx.tok == Tok::Star) {
      lx.next();
      t = Term::prod(std::move(t), parse_unary());
    }
    return t;
  }

  TermPtr parse_meet() {
    TermPtr t = parse_prod();
    while (lx.tok == Tok::And) {
      lx.next();
      t = Term::meet(std::move(t), parse_prod());
    }
    return t;
  }

  TermPtr parse_join() {
    TermPtr t = parse_meet();
    while (lx.tok == Tok::Or) {
      lx.next();
      t = Term::join(std::move(t), parse_meet());
    }
    return t;
  }

  std::optional<TermKind> arrow_kind() {
    if (lx.tok == Tok::Arrow) return TermKind::Arrow;
    if (lx.tok == Tok::BiArrow) return TermKind::BiArrow;
    if (lx.tok == Tok::Ident) {
      if (lx.ident == "cm") return TermKind::CnxMeet;
      if (lx.ident == "cp") return TermKind::CnxProd;
      if (lx.ident == "cmd") return TermKind::CnxMeetD;
      if (lx.ident == "cpd") return TermKind::CnxProdD;
    }
    return std::nullopt;
  }

  TermPtr parse_arrows() {
    TermPtr l = parse_join();
    if (auto k = arrow_kind()) {
      lx.next();
      return Term::binary(*k, std::move(l), parse_arrows());
    }
    return l;
  }

  Atom parse_atom() {
    TermPtr l = parse_arrows();
    if (lx.tok == Tok::Eq) {
      lx.next();
      return Atom{true, std::move(l), parse_arrows()};
    }
    if (lx.tok == Tok::Leq) {
      lx.next();
      return Atom{false, std::move(l), parse_arrows()};
    }
    lx.fail("expected '=' or '<='", lx.tok_pos);
  }

  Statement parse_stmt() {
    std::vector<Atom> atoms{parse_atom()};
    while (lx.tok == Tok::Comma) {
      lx.next();
      atoms.push_back(parse_atom());
    }
    if (lx.tok == Tok::Turnstile) {
      lx.next();
      Atom concl = parse_atom();
      expect(Tok::End, "end of statement");
      return Statement::quasi(std::move(atoms), std::move(concl));
    }
    if (atoms.size() > 1)
      lx.fail("',' without a following '|-'", lx.tok_pos);
    expect(Tok::End, "end of statement");
    Statement s;
    s.conclusion = std::move(atoms.front());
    return s;
  }
};

}  // namespace

Statement parse_statement(const std::string& text) {
  Parser p(text);
  return p.parse_stmt();
}

TermPtr parse_term(const std::string& text) {
  Parser p(text);
  TermPtr t = p.parse_arrows();
  p.expect(Tok::End, "end of term");
  return t;
}

}  // namespace fleck
