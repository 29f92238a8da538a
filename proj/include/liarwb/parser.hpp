#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "liarwb/errors.hpp"
#include "liarwb/formula.hpp"
#include "liarwb/system.hpp"

namespace liarwb {
namespace detail {

struct Token {
  enum class Type { Ident, Punct, End };
  Type type = Type::End;
  std::string text;
  int line = 1;
  int col = 1;
};

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
inline bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// One token stream per parsed unit; "#" comments run to end of line.
class Lexer {
 public:
  Lexer(std::string_view text, int first_line = 1) : text_(text), line_(first_line) {
    advance();
  }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = current_.type == Token::Type::End
                            ? "end of input"
                            : "'" + current_.text + "'";
    throw ParseError(current_.line, current_.col, found, std::move(expected));
  }
  bool at_end() const { return current_.type == Token::Type::End; }
  bool is_punct(std::string_view p) const {
    return current_.type == Token::Type::Punct && current_.text == p;
  }
  bool is_ident(std::string_view w) const {
    return current_.type == Token::Type::Ident && current_.text == w;
  }
  void expect_punct(std::string_view p) {
    if (!is_punct(p)) fail({"'" + std::string(p) + "'"});
    advance();
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        line_start_ = pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
    current_.line = line_;
    current_.col = static_cast<int>(pos_ - line_start_) + 1;
    if (pos_ >= text_.size()) {
      current_.type = Token::Type::End;
      current_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      current_.type = Token::Type::Ident;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    current_.type = Token::Type::Punct;
    for (std::string_view p : {":=", "->", "<->"}) {
      if (text_.substr(pos_).starts_with(p)) {
        current_.text = std::string(p);
        pos_ += p.size();
        return;
      }
    }
    current_.text = std::string(1, c);
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  int line_;
  Token current_;
};

inline bool is_reserved_word(const std::string& w) {
  return w == "false" || w == "true" || w == "box" || w == "sentence" ||
         w == "atom" || w == "axiom" || w == "goal" || w == "option";
}

inline std::string take_name(Lexer& lx, const char* what) {
  if (lx.peek().type != Token::Type::Ident || is_reserved_word(lx.peek().text))
    lx.fail({what});
  return lx.take().text;
}

inline Formula parse_imp(Lexer& lx);

// prim := "false" | "true" | NAME | "T" "(" NAME ")" | "T" NAT "(" NAME ")"
//       | "T?" "(" NAME ")" | "(" formula ")"
inline Formula parse_prim(Lexer& lx) {
  if (lx.is_punct("(")) {
    lx.take();
    Formula f = parse_imp(lx);
    lx.expect_punct(")");
    return f;
  }
  if (lx.peek().type != Token::Type::Ident) lx.fail({"a formula"});
  if (lx.is_ident("false")) {
    lx.take();
    return Formula::falsum();
  }
  if (lx.is_ident("true")) {
    lx.take();
    return Formula::verum();
  }
  Token id = lx.take();
  if (is_reserved_word(id.text))
    throw ParseError(id.line, id.col, "'" + id.text + "'", {"a formula"});

  // "T", "T?" and "Tk" introduce the truth predicate only when immediately
  // applied; otherwise the identifier is an ordinary name.
  if (id.text == "T" && lx.is_punct("?")) {
    lx.take();
    lx.expect_punct("(");
    std::string target = take_name(lx, "a sentence name");
    lx.expect_punct(")");
    return Formula::truth_at(std::nullopt, target);
  }
  if (id.text == "T" && lx.is_punct("(")) {
    lx.take();
    std::string target = take_name(lx, "a sentence name");
    lx.expect_punct(")");
    return Formula::truth(target);
  }
  if (id.text.size() > 1 && id.text.size() <= 10 && id.text[0] == 'T' &&
      id.text.find_first_not_of("0123456789", 1) == std::string::npos &&
      lx.is_punct("(")) {
    unsigned long k = std::stoul(id.text.substr(1));
    if (k < 1)
      throw ParseError(id.line, id.col, "'" + id.text + "'",
                       {"a truth-predicate index >= 1"});
    lx.take();
    std::string target = take_name(lx, "a sentence name");
    lx.expect_punct(")");
    return Formula::truth_at(static_cast<unsigned>(k), target);
  }
  return Formula::atom(id.text);
}

// un := "~" un | "box" un | prim
inline Formula parse_un(Lexer& lx) {
  if (lx.is_punct("~")) {
    lx.take();
    return Formula::neg(parse_un(lx));
  }
  if (lx.is_ident("box")) {
    lx.take();
    return Formula::box(parse_un(lx));
  }
  return parse_prim(lx);
}

// and := un {"&" un}
inline Formula parse_and(Lexer& lx) {
  Formula f = parse_un(lx);
  while (lx.is_punct("&")) {
    lx.take();
    f = Formula::conj(f, parse_un(lx));
  }
  return f;
}

// or := and {"|" and}
inline Formula parse_or(Lexer& lx) {
  Formula f = parse_and(lx);
  while (lx.is_punct("|")) {
    lx.take();
    f = Formula::disj(f, parse_and(lx));
  }
  return f;
}

// imp := or ["->" imp]; "A <-> B" is accepted here and desugared.
inline Formula parse_imp(Lexer& lx) {
  Formula f = parse_or(lx);
  if (lx.is_punct("->")) {
    lx.take();
    return Formula::imp(f, parse_imp(lx));
  }
  if (lx.is_punct("<->")) {
    lx.take();
    return Formula::iff(f, parse_imp(lx));
  }
  return f;
}

inline Formula parse_formula_tokens(Lexer& lx) {
  Formula f = parse_imp(lx);
  if (!lx.at_end()) lx.fail({"end of formula"});
  return f;
}

}  // namespace detail

// Parses a single formula, fully desugared.
inline Formula parse_formula(std::string_view text) {
  detail::Lexer lx(text);
  return detail::parse_formula_tokens(lx);
}

// Parses and validates a scenario file. The grammar is line-oriented:
//   sentence NAME := formula | atom NAME = true|false | axiom formula
//   | goal LABEL : formula | option KEY = VALUE
inline SentenceSystem parse_system(std::string_view text) {
  SentenceSystem sys;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;

    detail::Lexer lx(line, line_no);
    if (!lx.at_end()) {
      if (lx.peek().type != detail::Token::Type::Ident)
        lx.fail({"'sentence'", "'atom'", "'axiom'", "'goal'", "'option'"});
      detail::Token head_tok = lx.take();
      const std::string& head = head_tok.text;
      if (head == "sentence") {
        std::string name = detail::take_name(lx, "a sentence name");
        lx.expect_punct(":=");
        sys.add_definition(name, detail::parse_formula_tokens(lx));
      } else if (head == "atom") {
        std::string name = detail::take_name(lx, "an atom name");
        lx.expect_punct("=");
        bool value;
        if (lx.is_ident("true"))
          value = true;
        else if (lx.is_ident("false"))
          value = false;
        else
          lx.fail({"'true'", "'false'"});
        lx.take();
        if (!lx.at_end()) lx.fail({"end of line"});
        sys.add_base_fact(name, value);
      } else if (head == "axiom") {
        sys.add_axiom(detail::parse_formula_tokens(lx));
      } else if (head == "goal") {
        std::string label = detail::take_name(lx, "a goal label");
        lx.expect_punct(":");
        sys.add_goal(label, detail::parse_formula_tokens(lx));
      } else if (head == "option") {
        std::string key = detail::take_name(lx, "an option key");
        lx.expect_punct("=");
        if (lx.at_end()) lx.fail({"an option value"});
        std::string value = lx.take().text;
        if (!lx.at_end()) lx.fail({"end of line"});
        sys.add_option(key, value);
      } else {
        throw ParseError(head_tok.line, head_tok.col, "'" + head + "'",
                         {"'sentence'", "'atom'", "'axiom'", "'goal'", "'option'"});
      }
    }

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  sys.validate();
  return sys;
}

}  // namespace liarwb
