#include "liarlab/quineland/ast.hpp"

#include <cctype>
#include <utility>

#include "liarlab/errors.hpp"

namespace liarlab::quineland {

QExprPtr var_x() {
  static const QExprPtr kX = std::make_shared<QExpr>();
  return kX;
}

static QExprPtr node(QExpr::Tag tag, QExprPtr a, QExprPtr b = nullptr) {
  auto e = std::make_shared<QExpr>();
  e->tag = tag;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

QExprPtr quote(QExprPtr e) { return node(QExpr::Tag::Quote, std::move(e)); }
QExprPtr diag(QExprPtr t) { return node(QExpr::Tag::Diag, std::move(t)); }
QExprPtr pr(QExprPtr t) { return node(QExpr::Tag::Pr, std::move(t)); }
QExprPtr neg(QExprPtr f) { return node(QExpr::Tag::Not, std::move(f)); }
QExprPtr conj(QExprPtr f, QExprPtr g) {
  return node(QExpr::Tag::And, std::move(f), std::move(g));
}

bool is_term(const QExpr& e) {
  return e.tag == QExpr::Tag::VarX || e.tag == QExpr::Tag::Quote || e.tag == QExpr::Tag::Diag;
}

bool is_formula(const QExpr& e) { return !is_term(e); }

bool has_free_x(const QExpr& e) {
  switch (e.tag) {
    case QExpr::Tag::VarX:
      return true;
    case QExpr::Tag::Quote:
      return false;
    case QExpr::Tag::Diag:
    case QExpr::Tag::Pr:
    case QExpr::Tag::Not:
      return has_free_x(*e.a);
    case QExpr::Tag::And:
      return has_free_x(*e.a) || has_free_x(*e.b);
  }
  return false;
}

std::size_t node_count(const QExpr& e) {
  switch (e.tag) {
    case QExpr::Tag::VarX:
      return 1;
    case QExpr::Tag::And:
      return 1 + node_count(*e.a) + node_count(*e.b);
    default:
      return 1 + node_count(*e.a);
  }
}

bool equal(const QExprPtr& a, const QExprPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case QExpr::Tag::VarX:
      return true;
    case QExpr::Tag::And:
      return equal(a->a, b->a) && equal(a->b, b->b);
    default:
      return equal(a->a, b->a);
  }
}

static void serialize_into(const QExpr& e, std::string& out) {
  switch (e.tag) {
    case QExpr::Tag::VarX:
      out += 'x';
      return;
    case QExpr::Tag::Quote:
      out += '<';
      serialize_into(*e.a, out);
      out += '>';
      return;
    case QExpr::Tag::Diag:
      out += "diag(";
      serialize_into(*e.a, out);
      out += ')';
      return;
    case QExpr::Tag::Pr:
      out += "Pr(";
      serialize_into(*e.a, out);
      out += ')';
      return;
    case QExpr::Tag::Not:
      out += '~';
      serialize_into(*e.a, out);
      return;
    case QExpr::Tag::And:
      out += '(';
      serialize_into(*e.a, out);
      out += " & ";
      serialize_into(*e.b, out);
      out += ')';
      return;
  }
}

std::string serialize(const QExpr& e) {
  std::string out;
  serialize_into(e, out);
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  QExprPtr expr() { return finish(parse_expr()); }
  QExprPtr formula() { return finish(parse_formula()); }
  QExprPtr term() { return finish(parse_term()); }

 private:
  QExprPtr finish(QExprPtr e) {
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("trailing input", pos_);
    return e;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  // Formulas start with Pr, ~ or (; terms with x, < or diag.
  QExprPtr parse_expr() {
    const char c = peek();
    if (c == 'P' || c == '~' || c == '(') return parse_formula();
    return parse_term();
  }

  QExprPtr parse_formula() {
    const char c = peek();
    if (c == '~') {
      ++pos_;
      return neg(parse_formula());
    }
    if (c == '(') {
      ++pos_;
      QExprPtr lhs = parse_formula();
      expect('&');
      QExprPtr rhs = parse_formula();
      expect(')');
      return conj(std::move(lhs), std::move(rhs));
    }
    if (c == 'P') {
      if (text_.substr(pos_, 2) != "Pr") throw SyntaxError("expected 'Pr'", pos_);
      pos_ += 2;
      expect('(');
      QExprPtr t = parse_term();
      expect(')');
      return pr(std::move(t));
    }
    throw SyntaxError("expected formula", pos_);
  }

  QExprPtr parse_term() {
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      return var_x();
    }
    if (c == '<') {
      ++pos_;
      QExprPtr e = parse_expr();
      expect('>');
      return quote(std::move(e));
    }
    if (c == 'd') {
      if (text_.substr(pos_, 4) != "diag") throw SyntaxError("expected 'diag'", pos_);
      pos_ += 4;
      expect('(');
      QExprPtr t = parse_term();
      expect(')');
      return diag(std::move(t));
    }
    throw SyntaxError("expected term", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QExprPtr parse_expr(std::string_view text) { return Parser(text).expr(); }
QExprPtr parse_formula(std::string_view text) { return Parser(text).formula(); }
QExprPtr parse_term(std::string_view text) { return Parser(text).term(); }

QExprPtr substitute_free_x(const QExprPtr& e, const QExprPtr& replacement) {
  switch (e->tag) {
    case QExpr::Tag::VarX:
      return replacement;
    case QExpr::Tag::Quote:
      return e;
    case QExpr::Tag::Diag:
      return has_free_x(*e) ? diag(substitute_free_x(e->a, replacement)) : e;
    case QExpr::Tag::Pr:
      return has_free_x(*e) ? pr(substitute_free_x(e->a, replacement)) : e;
    case QExpr::Tag::Not:
      return has_free_x(*e) ? neg(substitute_free_x(e->a, replacement)) : e;
    case QExpr::Tag::And:
      return has_free_x(*e) ? conj(substitute_free_x(e->a, replacement),
                                   substitute_free_x(e->b, replacement))
                            : e;
  }
  return e;
}

}  // namespace liarlab::quineland
