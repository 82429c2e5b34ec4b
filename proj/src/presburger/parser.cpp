#include "liarlab/presburger/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "liarlab/errors.hpp"

namespace liarlab::presburger {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FormulaPtr formula() {
    FormulaPtr f = parse_implies();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("trailing input", pos_);
    return f;
  }

  Term term() {
    Term t = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("trailing input", pos_);
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_arrow() {
    skip_ws();
    if (pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>') {
      pos_ += 2;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) throw SyntaxError("expected identifier", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  bool at_quantifier() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    if (text_[pos_] != 'E' && text_[pos_] != 'A') return false;
    // A quantifier keyword is a lone E/A followed by an identifier.
    std::size_t next = pos_ + 1;
    if (next < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[next])) || text_[next] == '_'))
      return false;
    return true;
  }

  FormulaPtr parse_quantifier() {
    const char q = text_[pos_++];
    const std::string binder = ident();
    if (binder == "E" || binder == "A")
      throw SyntaxError("reserved identifier '" + binder + "'", pos_);
    if (!eat('.')) throw SyntaxError("expected '.' after binder", pos_);
    binders_.push_back(binder);
    FormulaPtr body = parse_implies();
    binders_.pop_back();
    return q == 'E' ? exists(std::move(body)) : forall(std::move(body));
  }

  FormulaPtr parse_implies() {
    FormulaPtr lhs = parse_or();
    if (eat_arrow()) return implies(std::move(lhs), parse_implies());
    return lhs;
  }

  FormulaPtr parse_or() {
    FormulaPtr lhs = parse_and();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '|') {
        ++pos_;
        lhs = disj(std::move(lhs), parse_and());
      } else {
        return lhs;
      }
    }
  }

  FormulaPtr parse_and() {
    FormulaPtr lhs = parse_unary();
    while (eat('&')) lhs = conj(std::move(lhs), parse_unary());
    return lhs;
  }

  FormulaPtr parse_unary() {
    if (eat('~')) return neg(parse_unary());
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    if (at_quantifier()) return parse_quantifier();
    if (eat('(')) {
      FormulaPtr f = parse_implies();
      if (!eat(')')) throw SyntaxError("expected ')'", pos_);
      return f;
    }
    Term lhs = parse_sum();
    skip_ws();
    if (eat('=')) return eq(std::move(lhs), parse_sum());
    if (pos_ + 1 < text_.size() && text_[pos_] == '!' && text_[pos_ + 1] == '=') {
      pos_ += 2;
      return neg(eq(std::move(lhs), parse_sum()));
    }
    throw SyntaxError("expected '=' or '!='", pos_);
  }

  Term parse_sum() {
    std::vector<TermAtom> atoms;
    atoms.push_back(parse_atom());
    while (eat('+')) atoms.push_back(parse_atom());
    return make_term(std::move(atoms));
  }

  TermAtom parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("expected term", pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        ++pos_;
      }
      return numeral_atom(value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = pos_;
      const std::string name = ident();
      if (name == "E" || name == "A")
        throw SyntaxError("reserved identifier '" + name + "'", at);
      for (std::size_t i = binders_.size(); i-- > 0;) {
        if (binders_[i] == name)
          return bound_atom(static_cast<std::uint64_t>(binders_.size() - 1 - i));
      }
      if (name == "x") return free_x_atom();
      throw FreeVariableError("free variable '" + name + "' (only x may be free)", at);
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> binders_;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(text).formula(); }

Term parse_term(std::string_view text) { return Parser(text).term(); }

}  // namespace liarlab::presburger
