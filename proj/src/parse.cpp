#include "palg/parse.hpp"

#include <cctype>

namespace palg {

namespace {

enum class Tok { End, Ident, Number, Plus, Minus, Star, Caret, LParen, RParen };

struct Lexer {
  const std::string& s;
  size_t i = 0;
  Tok tok = Tok::End;
  std::string ident;
  BigRat number;
  size_t tok_pos = 0;

  explicit Lexer(const std::string& text) : s(text) { next(); }

  void next() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    tok_pos = i;
    if (i >= s.size()) { tok = Tok::End; return; }
    char c = s[i];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      ident = s.substr(i, j - i);
      i = j;
      tok = Tok::Ident;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      BigInt num(s.substr(i, j - i));
      BigInt den = 1;
      if (j < s.size() && s[j] == '/' && j + 1 < s.size() &&
          std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        size_t k = j + 1;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        den = BigInt(s.substr(j + 1, k - j - 1));
        j = k;
      }
      number = BigRat(num, den);
      i = j;
      tok = Tok::Number;
      return;
    }
    ++i;
    switch (c) {
      case '+': tok = Tok::Plus; return;
      case '-': tok = Tok::Minus; return;
      case '*': tok = Tok::Star; return;
      case '^': tok = Tok::Caret; return;
      case '(': tok = Tok::LParen; return;
      case ')': tok = Tok::RParen; return;
      default: throw ParseError(std::string("unexpected character '") + c + "'", tok_pos);
    }
  }
};

struct ElementParser {
  Lexer lex;
  QuiverPtr q;
  Field f;

  ElementParser(const std::string& text, QuiverPtr quiver, Field field)
      : lex(text), q(std::move(quiver)), f(field) {}

  AlgebraElement parse() {
    AlgebraElement e = expr();
    if (lex.tok != Tok::End) throw ParseError("trailing input", lex.tok_pos);
    return e;
  }

  AlgebraElement expr() {
    bool neg = false;
    if (lex.tok == Tok::Minus) { neg = true; lex.next(); }
    AlgebraElement e = term();
    if (neg) e = -e;
    while (lex.tok == Tok::Plus || lex.tok == Tok::Minus) {
      bool minus = lex.tok == Tok::Minus;
      lex.next();
      AlgebraElement t = term();
      e = minus ? e - t : e + t;
    }
    return e;
  }

  AlgebraElement term() {
    AlgebraElement e = factor();
    while (lex.tok == Tok::Star) {
      lex.next();
      size_t pos = lex.tok_pos;
      AlgebraElement g = factor();
      AlgebraElement p = e * g;
      if (p.is_zero() && e.term_count() == 1 && g.term_count() == 1)
        throw ParseError("non-composable product", pos);
      e = p;
    }
    return e;
  }

  AlgebraElement factor() {
    AlgebraElement e = atom();
    if (lex.tok == Tok::Caret) {
      lex.next();
      bool neg = false;
      if (lex.tok == Tok::Minus) { neg = true; lex.next(); }
      if (lex.tok != Tok::Number) throw ParseError("expected exponent", lex.tok_pos);
      if (denominator(lex.number) != 1) throw ParseError("fractional exponent", lex.tok_pos);
      if (neg) throw ParseError("negative exponent not allowed here", lex.tok_pos);
      BigInt n = numerator(lex.number);
      if (n > 64) throw ParseError("exponent too large", lex.tok_pos);
      lex.next();
      e = e.pow(n.convert_to<unsigned>());
    }
    return e;
  }

  AlgebraElement atom() {
    if (lex.tok == Tok::Number) {
      Scalar c(f, lex.number);
      lex.next();
      return AlgebraElement::constant(q, f, c);
    }
    if (lex.tok == Tok::LParen) {
      lex.next();
      AlgebraElement e = expr();
      if (lex.tok != Tok::RParen) throw ParseError("expected ')'", lex.tok_pos);
      lex.next();
      return e;
    }
    if (lex.tok == Tok::Ident) {
      std::string name = lex.ident;
      size_t pos = lex.tok_pos;
      lex.next();
      int a = q->arrow_index(name);
      if (a >= 0) return AlgebraElement::arrow(q, f, a);
      int c = q->central_index(name);
      if (c >= 0) return AlgebraElement::central(q, f, c);
      if (!name.empty() && name[0] == 'e') {
        int v = q->vertex_index(name.substr(1));
        if (v >= 0) return AlgebraElement::idempotent(q, f, v);
      }
      throw ParseError("unknown identifier '" + name + "'", pos);
    }
    throw ParseError("expected expression", lex.tok_pos);
  }
};

}  // namespace

AlgebraElement parse_element(const std::string& text, QuiverPtr quiver, Field field) {
  try {
    return ElementParser(text, std::move(quiver), field).parse();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what(), 0);
  }
}

std::vector<int> parse_group_word(const std::string& text, const std::vector<std::string>& gens) {
  Lexer lex(text);
  std::vector<int> word;
  bool expect_factor = true;
  while (lex.tok != Tok::End) {
    if (!expect_factor) {
      if (lex.tok != Tok::Star) throw ParseError("expected '*'", lex.tok_pos);
      lex.next();
      expect_factor = true;
      continue;
    }
    if (lex.tok != Tok::Ident) throw ParseError("expected generator", lex.tok_pos);
    int g = -1;
    for (size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == lex.ident) g = int(i);
    if (g < 0) throw ParseError("unknown generator '" + lex.ident + "'", lex.tok_pos);
    lex.next();
    long e = 1;
    if (lex.tok == Tok::Caret) {
      lex.next();
      bool neg = false;
      if (lex.tok == Tok::Minus) { neg = true; lex.next(); }
      if (lex.tok != Tok::Number || denominator(lex.number) != 1)
        throw ParseError("expected integer exponent", lex.tok_pos);
      e = numerator(lex.number).convert_to<long>();
      if (neg) e = -e;
      lex.next();
    }
    int letter = e >= 0 ? g + 1 : -(g + 1);
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) word.push_back(letter);
    expect_factor = false;
  }
  return word;
}

}  // namespace palg
