#include "liarlab/presburger/ast.hpp"

#include <array>
#include <cassert>
#include <utility>

namespace liarlab::presburger {

TermAtom numeral_atom(std::uint64_t value) { return {TermAtom::Kind::Numeral, value}; }
TermAtom free_x_atom() { return {TermAtom::Kind::FreeX, 0}; }
TermAtom bound_atom(std::uint64_t index) { return {TermAtom::Kind::Bound, index}; }

Term make_term(std::vector<TermAtom> atoms) {
  assert(!atoms.empty());
  Term out;
  out.atoms.reserve(atoms.size());
  for (const TermAtom& a : atoms) {
    if (a.kind == TermAtom::Kind::Numeral && a.value > 0 && !out.atoms.empty() &&
        out.atoms.back().kind == TermAtom::Kind::Numeral && out.atoms.back().value > 0) {
      out.atoms.back().value += a.value;
    } else {
      out.atoms.push_back(a);
    }
  }
  return out;
}

Term numeral(std::uint64_t value) { return Term{{numeral_atom(value)}}; }

FormulaPtr eq(Term lhs, Term rhs) {
  auto f = std::make_shared<Formula>();
  f->tag = Formula::Tag::Eq;
  f->lhs = std::move(lhs);
  f->rhs = std::move(rhs);
  return f;
}

static FormulaPtr unary(Formula::Tag tag, FormulaPtr child) {
  auto f = std::make_shared<Formula>();
  f->tag = tag;
  f->child = std::move(child);
  return f;
}

static FormulaPtr binary(Formula::Tag tag, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->tag = tag;
  f->child = std::move(a);
  f->child2 = std::move(b);
  return f;
}

FormulaPtr neg(FormulaPtr f) { return unary(Formula::Tag::Not, std::move(f)); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) {
  return binary(Formula::Tag::And, std::move(a), std::move(b));
}
FormulaPtr disj(FormulaPtr a, FormulaPtr b) {
  return binary(Formula::Tag::Or, std::move(a), std::move(b));
}
FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
  return binary(Formula::Tag::Implies, std::move(a), std::move(b));
}
FormulaPtr exists(FormulaPtr body) { return unary(Formula::Tag::Exists, std::move(body)); }
FormulaPtr forall(FormulaPtr body) { return unary(Formula::Tag::Forall, std::move(body)); }

std::size_t node_count(const Term& t) {
  std::size_t total = t.atoms.size() - 1;  // the implied sum nodes
  for (const TermAtom& a : t.atoms) {
    if (a.kind == TermAtom::Kind::Numeral && a.value > 1)
      total += 2 * a.value - 1;
    else
      total += 1;
  }
  return total;
}

std::size_t node_count(const Formula& f) {
  switch (f.tag) {
    case Formula::Tag::Eq:
      return 1 + node_count(f.lhs) + node_count(f.rhs);
    case Formula::Tag::Not:
    case Formula::Tag::Exists:
    case Formula::Tag::Forall:
      return 1 + node_count(*f.child);
    default:
      return 1 + node_count(*f.child) + node_count(*f.child2);
  }
}

static bool term_has_free_x(const Term& t) {
  for (const TermAtom& a : t.atoms)
    if (a.kind == TermAtom::Kind::FreeX) return true;
  return false;
}

bool has_free_x(const Formula& f) {
  switch (f.tag) {
    case Formula::Tag::Eq:
      return term_has_free_x(f.lhs) || term_has_free_x(f.rhs);
    case Formula::Tag::Not:
    case Formula::Tag::Exists:
    case Formula::Tag::Forall:
      return has_free_x(*f.child);
    default:
      return has_free_x(*f.child) || has_free_x(*f.child2);
  }
}

bool is_sentence(const Formula& f) { return !has_free_x(f); }

bool equal(const Formula& a, const Formula& b) {
  if (a.tag != b.tag) return false;
  switch (a.tag) {
    case Formula::Tag::Eq:
      return a.lhs == b.lhs && a.rhs == b.rhs;
    case Formula::Tag::Not:
    case Formula::Tag::Exists:
    case Formula::Tag::Forall:
      return equal(*a.child, *b.child);
    default:
      return equal(*a.child, *b.child) && equal(*a.child2, *b.child2);
  }
}

// Binder names by absolute nesting level, outermost first.
static std::string binder_name(std::size_t level) {
  static constexpr std::array<const char*, 6> kNames = {"y", "z", "w", "u", "v", "t"};
  if (level < kNames.size()) return kNames[level];
  return "b" + std::to_string(level);
}

std::string serialize(const Term& t, std::size_t depth) {
  std::string out;
  for (std::size_t i = 0; i < t.atoms.size(); ++i) {
    if (i > 0) out += '+';
    const TermAtom& a = t.atoms[i];
    switch (a.kind) {
      case TermAtom::Kind::Numeral:
        out += std::to_string(a.value);
        break;
      case TermAtom::Kind::FreeX:
        out += 'x';
        break;
      case TermAtom::Kind::Bound:
        out += binder_name(depth - 1 - static_cast<std::size_t>(a.value));
        break;
    }
  }
  return out;
}

// Precedence: -> (0, right) < | (1, left) < & (2, left) < ~ < atoms.
// Quantifiers extend right and print at the lowest level. A negation always
// parenthesizes its argument unless the argument is itself a negation.
static void serialize_into(const Formula& f, std::size_t depth, int context, std::string& out) {
  switch (f.tag) {
    case Formula::Tag::Eq:
      out += serialize(f.lhs, depth);
      out += " = ";
      out += serialize(f.rhs, depth);
      return;
    case Formula::Tag::Not:
      out += '~';
      if (f.child->tag == Formula::Tag::Not) {
        serialize_into(*f.child, depth, 3, out);
      } else {
        out += '(';
        serialize_into(*f.child, depth, 0, out);
        out += ')';
      }
      return;
    case Formula::Tag::And:
    case Formula::Tag::Or:
    case Formula::Tag::Implies: {
      const bool is_and = f.tag == Formula::Tag::And;
      const bool is_or = f.tag == Formula::Tag::Or;
      const int level = is_and ? 2 : (is_or ? 1 : 0);
      const bool parens = context > level;
      if (parens) out += '(';
      serialize_into(*f.child, depth, is_and ? 2 : (is_or ? 1 : 1), out);
      out += is_and ? " & " : (is_or ? " | " : " -> ");
      serialize_into(*f.child2, depth, is_and ? 3 : (is_or ? 2 : 0), out);
      if (parens) out += ')';
      return;
    }
    case Formula::Tag::Exists:
    case Formula::Tag::Forall: {
      const bool parens = context > 0;
      if (parens) out += '(';
      out += f.tag == Formula::Tag::Exists ? "E " : "A ";
      out += binder_name(depth);
      out += ". ";
      serialize_into(*f.child, depth + 1, 0, out);
      if (parens) out += ')';
      return;
    }
  }
}

std::string serialize(const Formula& f) {
  std::string out;
  serialize_into(f, 0, 0, out);
  return out;
}

static Term substitute_term(const Term& t, std::uint64_t value) {
  std::vector<TermAtom> atoms;
  atoms.reserve(t.atoms.size());
  for (const TermAtom& a : t.atoms)
    atoms.push_back(a.kind == TermAtom::Kind::FreeX ? numeral_atom(value) : a);
  return make_term(std::move(atoms));
}

FormulaPtr substitute_free_x(const Formula& phi, std::uint64_t value) {
  switch (phi.tag) {
    case Formula::Tag::Eq:
      return eq(substitute_term(phi.lhs, value), substitute_term(phi.rhs, value));
    case Formula::Tag::Not:
      return neg(substitute_free_x(*phi.child, value));
    case Formula::Tag::Exists:
      return exists(substitute_free_x(*phi.child, value));
    case Formula::Tag::Forall:
      return forall(substitute_free_x(*phi.child, value));
    case Formula::Tag::And:
      return conj(substitute_free_x(*phi.child, value), substitute_free_x(*phi.child2, value));
    case Formula::Tag::Or:
      return disj(substitute_free_x(*phi.child, value), substitute_free_x(*phi.child2, value));
    case Formula::Tag::Implies:
      return implies(substitute_free_x(*phi.child, value),
                     substitute_free_x(*phi.child2, value));
  }
  return nullptr;
}

static Term instantiate_term(const Term& t, std::uint64_t index, std::uint64_t value) {
  std::vector<TermAtom> atoms;
  atoms.reserve(t.atoms.size());
  for (const TermAtom& a : t.atoms) {
    if (a.kind == TermAtom::Kind::Bound && a.value == index)
      atoms.push_back(numeral_atom(value));
    else if (a.kind == TermAtom::Kind::Bound && a.value > index)
      atoms.push_back(bound_atom(a.value - 1));
    else
      atoms.push_back(a);
  }
  return make_term(std::move(atoms));
}

static FormulaPtr instantiate_at(const Formula& f, std::uint64_t index, std::uint64_t value) {
  switch (f.tag) {
    case Formula::Tag::Eq:
      return eq(instantiate_term(f.lhs, index, value), instantiate_term(f.rhs, index, value));
    case Formula::Tag::Not:
      return neg(instantiate_at(*f.child, index, value));
    case Formula::Tag::Exists:
      return exists(instantiate_at(*f.child, index + 1, value));
    case Formula::Tag::Forall:
      return forall(instantiate_at(*f.child, index + 1, value));
    case Formula::Tag::And:
      return conj(instantiate_at(*f.child, index, value), instantiate_at(*f.child2, index, value));
    case Formula::Tag::Or:
      return disj(instantiate_at(*f.child, index, value), instantiate_at(*f.child2, index, value));
    case Formula::Tag::Implies:
      return implies(instantiate_at(*f.child, index, value),
                     instantiate_at(*f.child2, index, value));
  }
  return nullptr;
}

FormulaPtr instantiate_outer(const Formula& body, std::uint64_t value) {
  return instantiate_at(body, 0, value);
}

}  // namespace liarlab::presburger
