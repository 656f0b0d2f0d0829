#include "pi3/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <stdexcept>

#include "pi3/errors.hpp"

namespace pi3 {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return out;
}

std::size_t GroupPresentation::generator_index(std::string_view name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  if (it == generators.end()) throw std::out_of_range("unknown generator '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - generators.begin());
}

std::string GroupPresentation::word_to_string(const Word& w) const {
  if (w.empty()) return "e";
  std::string s;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long run = static_cast<long>(j - i) * w[i].exponent;
    if (!s.empty()) s += "*";
    s += generators.at(w[i].generator);
    if (run != 1) s += "^" + std::to_string(run);
    i = j;
  }
  return s;
}

std::string GroupPresentation::to_string() const {
  std::string s = "gens: ";
  for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? ", " : "") + generators[i];
  s += " ; rels: ";
  for (std::size_t i = 0; i < relators.size(); ++i) s += (i ? ", " : "") + word_to_string(relators[i]);
  return s;
}

namespace {

enum class Tok { Name, Int, Colon, Comma, Semicolon, Star, Caret, Equals, Minus, Plus, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    const std::size_t l = line, cc = col;
    if (std::isalpha(c)) {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::Name, std::string(text.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Int, std::string(text.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (c) {
      case ':': kind = Tok::Colon; break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semicolon; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '=': kind = Tok::Equals; break;
      case '-': kind = Tok::Minus; break;
      case '+': kind = Tok::Plus; break;
      default: throw ParseError(std::string("unexpected character '") + text[i] + "'", l, cc);
    }
    out.push_back({kind, std::string(1, text[i]), l, cc});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  GroupPresentation presentation() {
    GroupPresentation p;
    keyword("gens");
    expect(Tok::Colon, "':'");
    do {
      const Token& t = expect(Tok::Name, "generator name");
      if (std::find(p.generators.begin(), p.generators.end(), t.text) != p.generators.end())
        throw ParseError("duplicate generator '" + t.text + "'", t.line, t.column);
      p.generators.push_back(t.text);
    } while (accept(Tok::Comma));
    expect(Tok::Semicolon, "';'");
    keyword("rels");
    expect(Tok::Colon, "':'");
    do {
      const Token& start = peek();
      Word w = relation(p);
      if (w.empty()) throw ParseError("empty relator", start.line, start.column);
      p.relators.push_back(std::move(w));
    } while (accept(Tok::Comma));
    accept(Tok::Semicolon);
    expect(Tok::End, "end of input");
    return p;
  }

  Word single_word(const GroupPresentation& p) {
    Word w = word(p);
    expect(Tok::End, "end of input");
    return w;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  const Token& expect(Tok k, const std::string& what) {
    const Token& t = peek();
    if (t.kind != k) {
      std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
      throw ParseError("expected " + what + ", found " + found, t.line, t.column);
    }
    ++pos_;
    return t;
  }

  void keyword(const std::string& kw) {
    const Token& t = peek();
    if (t.kind != Tok::Name || t.text != kw) throw ParseError("expected '" + kw + "'", t.line, t.column);
    ++pos_;
  }

  Word relation(const GroupPresentation& p) {
    Word lhs = word(p);
    if (!accept(Tok::Equals)) return lhs;
    Word rhs = word(p);
    Word inv = inverse(rhs);
    lhs.insert(lhs.end(), inv.begin(), inv.end());
    return lhs;
  }

  Word word(const GroupPresentation& p) {
    Word w;
    do term(p, w);
    while (accept(Tok::Star));
    return w;
  }

  void term(const GroupPresentation& p, Word& w) {
    const Token& name = expect(Tok::Name, "generator name");
    auto it = std::find(p.generators.begin(), p.generators.end(), name.text);
    if (it == p.generators.end()) throw ParseError("unknown generator '" + name.text + "'", name.line, name.column);
    const std::size_t g = static_cast<std::size_t>(it - p.generators.begin());
    long exponent = 1;
    if (accept(Tok::Caret)) {
      long sign = 1;
      if (accept(Tok::Minus))
        sign = -1;
      else
        accept(Tok::Plus);
      const Token& num = expect(Tok::Int, "integer exponent");
      long value = 0;
      auto [ptr, ec] = std::from_chars(num.text.data(), num.text.data() + num.text.size(), value);
      if (ec != std::errc() || value > 1'000'000)
        throw ParseError("exponent out of range", num.line, num.column);
      exponent = sign * value;
    }
    const int step = exponent < 0 ? -1 : 1;
    for (long k = 0; k < std::abs(exponent); ++k) w.push_back({g, step});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupPresentation parse_presentation(std::string_view text) { return Parser(text).presentation(); }

Word parse_word(std::string_view text, const GroupPresentation& p) { return Parser(text).single_word(p); }

}  // namespace pi3
