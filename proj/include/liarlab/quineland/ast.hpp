#ifndef LIARLAB_QUINELAND_AST_HPP
#define LIARLAB_QUINELAND_AST_HPP

// The quotation language: terms are the variable x, quotations <e> of
// arbitrary expressions, and diag(t); formulas are Pr(t), ~f and (f & g).
// Sentences are formulas without free x; quotation is opaque, so x inside
// <...> is not free. Names of the abstract system are exactly the quotes of
// formulas.
//
// Grammar (whitespace insignificant):
//   F ::= 'Pr' '(' T ')' | '~' F | '(' F '&' F ')'
//   T ::= 'x' | '<' E '>' | 'diag' '(' T ')'
// where E is any serialized expression.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace liarlab::quineland {

struct QExpr;
using QExprPtr = std::shared_ptr<const QExpr>;

struct QExpr {
  enum class Tag { VarX, Quote, Diag, Pr, Not, And };
  Tag tag = Tag::VarX;
  QExprPtr a, b;
};

QExprPtr var_x();
QExprPtr quote(QExprPtr e);
QExprPtr diag(QExprPtr t);
QExprPtr pr(QExprPtr t);
QExprPtr neg(QExprPtr f);
QExprPtr conj(QExprPtr f, QExprPtr g);

bool is_term(const QExpr& e);
bool is_formula(const QExpr& e);
bool has_free_x(const QExpr& e);
inline bool is_sentence(const QExpr& e) { return is_formula(e) && !has_free_x(e); }

std::size_t node_count(const QExpr& e);
bool equal(const QExprPtr& a, const QExprPtr& b);

std::string serialize(const QExpr& e);

// Any expression (formula or term). Throws SyntaxError.
QExprPtr parse_expr(std::string_view text);
QExprPtr parse_formula(std::string_view text);
QExprPtr parse_term(std::string_view text);

// e with every free occurrence of x replaced by `replacement` (a term).
QExprPtr substitute_free_x(const QExprPtr& e, const QExprPtr& replacement);

}  // namespace liarlab::quineland

#endif
