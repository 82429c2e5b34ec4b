#include "liarlab/presburger/decide.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <numeric>
#include <utility>
#include <vector>

#include "liarlab/errors.hpp"

namespace liarlab::presburger {
namespace {

// ---------------------------------------------------------------------------
// Linear terms  k + sum c_i * v_i  over integer variables.
// Invariant: coefficient list sorted by variable id, no zero coefficients.

struct Lin {
  long long k = 0;
  std::vector<std::pair<int, long long>> c;
};

Lin lin_const(long long k) { return Lin{k, {}}; }

Lin lin_var(int v) { return Lin{0, {{v, 1}}}; }

Lin lin_add(const Lin& a, const Lin& b) {
  Lin out;
  out.k = a.k + b.k;
  std::size_t i = 0, j = 0;
  while (i < a.c.size() || j < b.c.size()) {
    if (j == b.c.size() || (i < a.c.size() && a.c[i].first < b.c[j].first)) {
      out.c.push_back(a.c[i++]);
    } else if (i == a.c.size() || b.c[j].first < a.c[i].first) {
      out.c.push_back(b.c[j++]);
    } else {
      const long long sum = a.c[i].second + b.c[j].second;
      if (sum != 0) out.c.emplace_back(a.c[i].first, sum);
      ++i, ++j;
    }
  }
  return out;
}

Lin lin_scale(const Lin& a, long long f) {
  if (f == 0) return lin_const(0);
  Lin out;
  out.k = a.k * f;
  out.c.reserve(a.c.size());
  for (auto [v, coeff] : a.c) out.c.emplace_back(v, coeff * f);
  return out;
}

Lin lin_sub(const Lin& a, const Lin& b) { return lin_add(a, lin_scale(b, -1)); }

long long lin_coeff(const Lin& a, int v) {
  for (auto [var, coeff] : a.c)
    if (var == v) return coeff;
  return 0;
}

Lin lin_drop(const Lin& a, int v) {
  Lin out;
  out.k = a.k;
  for (auto [var, coeff] : a.c)
    if (var != v) out.c.emplace_back(var, coeff);
  return out;
}

bool lin_ground(const Lin& a) { return a.c.empty(); }

bool lin_equal(const Lin& a, const Lin& b) { return a.k == b.k && a.c == b.c; }

// ---------------------------------------------------------------------------
// Quantifier-free / prenex-free internal formulas.

struct Node;
using NodePtr = std::shared_ptr<const Node>;

enum class AtomKind { EqZ, NeZ, LtZ, Dvd, Ndvd };  // t = 0, t != 0, t < 0, d | t

struct Node {
  enum class Tag { True, False, Atom, Not, And, Or, Exists };
  Tag tag = Tag::True;
  AtomKind kind = AtomKind::EqZ;
  Lin t;
  long long d = 0;
  NodePtr a, b;
  int var = -1;  // Exists
};

struct Budget {
  std::uint64_t used = 0;
  std::uint64_t cap = 0;
  void charge() {
    if (cap != 0 && ++used > cap) throw BudgetExceeded("decide: node budget exhausted");
  }
};

struct Builder {
  Budget* budget;

  NodePtr leaf(bool value) {
    static const NodePtr kTrue = [] {
      auto n = std::make_shared<Node>();
      n->tag = Node::Tag::True;
      return n;
    }();
    static const NodePtr kFalse = [] {
      auto n = std::make_shared<Node>();
      n->tag = Node::Tag::False;
      return n;
    }();
    return value ? kTrue : kFalse;
  }

  // Atoms over ground terms fold to constants immediately.
  NodePtr atom(AtomKind kind, Lin t, long long d = 0) {
    budget->charge();
    if (lin_ground(t)) {
      switch (kind) {
        case AtomKind::EqZ:
          return leaf(t.k == 0);
        case AtomKind::NeZ:
          return leaf(t.k != 0);
        case AtomKind::LtZ:
          return leaf(t.k < 0);
        case AtomKind::Dvd:
          return leaf(t.k % d == 0);
        case AtomKind::Ndvd:
          return leaf(t.k % d != 0);
      }
    }
    auto n = std::make_shared<Node>();
    n->tag = Node::Tag::Atom;
    n->kind = kind;
    n->t = std::move(t);
    n->d = d;
    return n;
  }

  NodePtr negate(NodePtr x) {
    budget->charge();
    switch (x->tag) {
      case Node::Tag::True:
        return leaf(false);
      case Node::Tag::False:
        return leaf(true);
      case Node::Tag::Atom:
        switch (x->kind) {
          case AtomKind::EqZ:
            return atom(AtomKind::NeZ, x->t);
          case AtomKind::NeZ:
            return atom(AtomKind::EqZ, x->t);
          case AtomKind::LtZ:
            // not(t < 0)  <=>  -t - 1 < 0
            return atom(AtomKind::LtZ, lin_add(lin_scale(x->t, -1), lin_const(-1)));
          case AtomKind::Dvd:
            return atom(AtomKind::Ndvd, x->t, x->d);
          case AtomKind::Ndvd:
            return atom(AtomKind::Dvd, x->t, x->d);
        }
        return x;
      case Node::Tag::Not:
        return x->a;
      case Node::Tag::And:
        return disj(negate(x->a), negate(x->b));
      case Node::Tag::Or:
        return conj(negate(x->a), negate(x->b));
      case Node::Tag::Exists: {
        auto n = std::make_shared<Node>();
        n->tag = Node::Tag::Not;
        n->a = std::move(x);
        return n;
      }
    }
    return x;
  }

  NodePtr conj(NodePtr x, NodePtr y) {
    budget->charge();
    if (x->tag == Node::Tag::False || y->tag == Node::Tag::False) return leaf(false);
    if (x->tag == Node::Tag::True) return y;
    if (y->tag == Node::Tag::True) return x;
    auto n = std::make_shared<Node>();
    n->tag = Node::Tag::And;
    n->a = std::move(x);
    n->b = std::move(y);
    return n;
  }

  NodePtr disj(NodePtr x, NodePtr y) {
    budget->charge();
    if (x->tag == Node::Tag::True || y->tag == Node::Tag::True) return leaf(true);
    if (x->tag == Node::Tag::False) return y;
    if (y->tag == Node::Tag::False) return x;
    auto n = std::make_shared<Node>();
    n->tag = Node::Tag::Or;
    n->a = std::move(x);
    n->b = std::move(y);
    return n;
  }

  NodePtr quantified(int var, NodePtr body) {
    budget->charge();
    auto n = std::make_shared<Node>();
    n->tag = Node::Tag::Exists;
    n->var = var;
    n->a = std::move(body);
    return n;
  }
};

// ---------------------------------------------------------------------------
// Translation from the surface syntax, relativizing quantifiers to N.

struct Translator {
  Builder* build;
  int next_var = 0;

  Lin term(const Term& t, const std::vector<int>& env) {
    Lin out = lin_const(0);
    for (const TermAtom& a : t.atoms) {
      switch (a.kind) {
        case TermAtom::Kind::Numeral:
          out.k += static_cast<long long>(a.value);
          break;
        case TermAtom::Kind::Bound:
          out = lin_add(out, lin_var(env[env.size() - 1 - static_cast<std::size_t>(a.value)]));
          break;
        case TermAtom::Kind::FreeX:
          throw NotAFormula("decide: free x in sentence");
      }
    }
    return out;
  }

  NodePtr formula(const Formula& f, std::vector<int>& env) {
    switch (f.tag) {
      case Formula::Tag::Eq:
        return build->atom(AtomKind::EqZ, lin_sub(term(f.lhs, env), term(f.rhs, env)));
      case Formula::Tag::Not:
        return build->negate(formula(*f.child, env));
      case Formula::Tag::And:
        return build->conj(formula(*f.child, env), formula(*f.child2, env));
      case Formula::Tag::Or:
        return build->disj(formula(*f.child, env), formula(*f.child2, env));
      case Formula::Tag::Implies:
        return build->disj(build->negate(formula(*f.child, env)), formula(*f.child2, env));
      case Formula::Tag::Exists:
      case Formula::Tag::Forall: {
        const int v = next_var++;
        env.push_back(v);
        NodePtr body = formula(*f.child, env);
        env.pop_back();
        // v >= 0  <=>  -v - 1 < 0
        NodePtr nonneg =
            build->atom(AtomKind::LtZ, lin_add(lin_scale(lin_var(v), -1), lin_const(-1)));
        if (f.tag == Formula::Tag::Exists)
          return build->quantified(v, build->conj(std::move(nonneg), std::move(body)));
        return build->negate(build->quantified(
            v, build->conj(std::move(nonneg), build->negate(std::move(body)))));
      }
    }
    return build->leaf(false);
  }
};

// ---------------------------------------------------------------------------
// Cooper elimination of one existential over a quantifier-free matrix in
// negation normal form (only And/Or over atoms and constants).

NodePtr nnf(Builder* build, NodePtr x, bool positive) {
  switch (x->tag) {
    case Node::Tag::True:
      return build->leaf(positive);
    case Node::Tag::False:
      return build->leaf(!positive);
    case Node::Tag::Atom:
      return positive ? x : build->negate(x);
    case Node::Tag::Not:
      return nnf(build, x->a, !positive);
    case Node::Tag::And: {
      NodePtr a = nnf(build, x->a, positive);
      NodePtr b = nnf(build, x->b, positive);
      return positive ? build->conj(a, b) : build->disj(a, b);
    }
    case Node::Tag::Or: {
      NodePtr a = nnf(build, x->a, positive);
      NodePtr b = nnf(build, x->b, positive);
      return positive ? build->disj(a, b) : build->conj(a, b);
    }
    case Node::Tag::Exists:
      assert(false && "nnf over unfolded quantifier");
      return x;
  }
  return x;
}

long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

struct Cooper {
  Builder* build;
  int var;

  // Pass 1: lcm of |coefficient of var| across atoms.
  long long coefficient_lcm(const NodePtr& x) {
    switch (x->tag) {
      case Node::Tag::Atom: {
        const long long a = lin_coeff(x->t, var);
        return a == 0 ? 1 : std::abs(a);
      }
      case Node::Tag::And:
      case Node::Tag::Or:
        return lcm_ll(coefficient_lcm(x->a), coefficient_lcm(x->b));
      default:
        return 1;
    }
  }

  // Pass 2: scale every atom so var's coefficient is +-m, then rewrite that
  // monomial as a unit coefficient of the re-scaled variable u = m * var.
  NodePtr unitize(const NodePtr& x, long long m) {
    switch (x->tag) {
      case Node::Tag::Atom: {
        const long long a = lin_coeff(x->t, var);
        if (a == 0) return x;
        const long long f = m / std::abs(a);
        const Lin scaled = f == 1 ? x->t : lin_scale(x->t, f);
        const Lin unit = lin_add(lin_drop(scaled, var),
                                 lin_scale(lin_var(var), a > 0 ? 1 : -1));
        const bool dvd = x->kind == AtomKind::Dvd || x->kind == AtomKind::Ndvd;
        return build->atom(x->kind, unit, dvd ? x->d * f : 0);
      }
      case Node::Tag::And:
        return build->conj(unitize(x->a, m), unitize(x->b, m));
      case Node::Tag::Or:
        return build->disj(unitize(x->a, m), unitize(x->b, m));
      default:
        return x;
    }
  }

  // Pass 3: divisor lcm and boundary terms. Atoms are read in the normalized
  // senses  u < t, t < u, u = t, u != t, d | u + r  with u's coefficient +-1.
  void scan(const NodePtr& x, long long* delta, std::vector<Lin>* bset) {
    switch (x->tag) {
      case Node::Tag::Atom: {
        const long long a = lin_coeff(x->t, var);
        if (x->kind == AtomKind::Dvd || x->kind == AtomKind::Ndvd) {
          if (a != 0) *delta = lcm_ll(*delta, x->d);
          return;
        }
        if (a == 0) return;
        const Lin rest = lin_drop(x->t, var);
        Lin boundary;
        bool have = false;
        switch (x->kind) {
          case AtomKind::LtZ:
            if (a < 0) {  // r < u
              boundary = rest;
              have = true;
            }
            break;
          case AtomKind::EqZ:
            // u = -r  (or u = r when negative); boundary is the value - 1.
            boundary = lin_add(lin_scale(rest, a > 0 ? -1 : 1), lin_const(-1));
            have = true;
            break;
          case AtomKind::NeZ:
            boundary = lin_scale(rest, a > 0 ? -1 : 1);
            have = true;
            break;
          default:
            break;
        }
        if (have) {
          for (const Lin& b : *bset)
            if (lin_equal(b, boundary)) return;
          bset->push_back(std::move(boundary));
        }
        return;
      }
      case Node::Tag::And:
      case Node::Tag::Or:
        scan(x->a, delta, bset);
        scan(x->b, delta, bset);
        return;
      default:
        return;
    }
  }

  // The minus-infinity projection with u := j in divisibility atoms.
  NodePtr minus_inf(const NodePtr& x, long long j) {
    switch (x->tag) {
      case Node::Tag::Atom: {
        const long long a = lin_coeff(x->t, var);
        if (a == 0) return x;
        const Lin rest = lin_drop(x->t, var);
        switch (x->kind) {
          case AtomKind::LtZ:
            return build->leaf(a > 0);  // u + r < 0 holds toward -inf
          case AtomKind::EqZ:
            return build->leaf(false);
          case AtomKind::NeZ:
            return build->leaf(true);
          case AtomKind::Dvd:
          case AtomKind::Ndvd:
            return build->atom(x->kind, lin_add(lin_scale(lin_const(j), a), rest), x->d);
        }
        return x;
      }
      case Node::Tag::And:
        return build->conj(minus_inf(x->a, j), minus_inf(x->b, j));
      case Node::Tag::Or:
        return build->disj(minus_inf(x->a, j), minus_inf(x->b, j));
      default:
        return x;
    }
  }

  // u := s.
  NodePtr substitute(const NodePtr& x, const Lin& s) {
    switch (x->tag) {
      case Node::Tag::Atom: {
        const long long a = lin_coeff(x->t, var);
        if (a == 0) return x;
        const Lin rest = lin_drop(x->t, var);
        return build->atom(x->kind, lin_add(lin_scale(s, a), rest), x->d);
      }
      case Node::Tag::And:
        return build->conj(substitute(x->a, s), substitute(x->b, s));
      case Node::Tag::Or:
        return build->disj(substitute(x->a, s), substitute(x->b, s));
      default:
        return x;
    }
  }

  NodePtr eliminate(NodePtr matrix) {
    const long long m = coefficient_lcm(matrix);
    NodePtr unit = unitize(matrix, m);
    // After unitization u = m * var has unit coefficients; remember m | u.
    unit = build->conj(unit, build->atom(AtomKind::Dvd, lin_var(var), m));

    long long delta = 1;
    std::vector<Lin> bset;
    scan(unit, &delta, &bset);

    NodePtr result = build->leaf(false);
    for (long long j = 1; j <= delta; ++j) result = build->disj(result, minus_inf(unit, j));
    for (const Lin& b : bset)
      for (long long j = 1; j <= delta; ++j)
        result = build->disj(result, substitute(unit, lin_add(b, lin_const(j))));
    return result;
  }
};

NodePtr eliminate_all(Builder* build, const NodePtr& x) {
  switch (x->tag) {
    case Node::Tag::True:
    case Node::Tag::False:
    case Node::Tag::Atom:
      return x;
    case Node::Tag::Not:
      return build->negate(eliminate_all(build, x->a));
    case Node::Tag::And:
      return build->conj(eliminate_all(build, x->a), eliminate_all(build, x->b));
    case Node::Tag::Or:
      return build->disj(eliminate_all(build, x->a), eliminate_all(build, x->b));
    case Node::Tag::Exists: {
      NodePtr body = eliminate_all(build, x->a);
      NodePtr matrix = nnf(build, body, true);
      Cooper cooper{build, x->var};
      return cooper.eliminate(std::move(matrix));
    }
  }
  return x;
}

}  // namespace

bool decide(const Formula& sentence, const DecideLimits& limits) {
  Budget budget{0, limits.max_nodes};
  Builder build{&budget};
  Translator tr{&build};
  std::vector<int> env;
  NodePtr ir = tr.formula(sentence, env);
  NodePtr out = eliminate_all(&build, ir);
  if (out->tag == Node::Tag::True) return true;
  if (out->tag == Node::Tag::False) return false;
  throw Error("decide: residual variables after elimination (input was not a sentence?)");
}

// ---------------------------------------------------------------------------
// Bounded evaluation. Deliberately independent of the elimination engine: a
// direct recursive walk with quantifiers ranging over {0..bound}.

namespace {

std::uint64_t eval_term(const Term& t, const std::vector<std::uint64_t>& env) {
  std::uint64_t total = 0;
  for (const TermAtom& a : t.atoms) {
    switch (a.kind) {
      case TermAtom::Kind::Numeral:
        total += a.value;
        break;
      case TermAtom::Kind::Bound:
        total += env[env.size() - 1 - static_cast<std::size_t>(a.value)];
        break;
      case TermAtom::Kind::FreeX:
        throw NotAFormula("eval_bounded: free x in sentence");
    }
  }
  return total;
}

bool eval_at(const Formula& f, std::uint64_t bound, std::vector<std::uint64_t>& env) {
  switch (f.tag) {
    case Formula::Tag::Eq:
      return eval_term(f.lhs, env) == eval_term(f.rhs, env);
    case Formula::Tag::Not:
      return !eval_at(*f.child, bound, env);
    case Formula::Tag::And:
      return eval_at(*f.child, bound, env) && eval_at(*f.child2, bound, env);
    case Formula::Tag::Or:
      return eval_at(*f.child, bound, env) || eval_at(*f.child2, bound, env);
    case Formula::Tag::Implies:
      return !eval_at(*f.child, bound, env) || eval_at(*f.child2, bound, env);
    case Formula::Tag::Exists:
      for (std::uint64_t v = 0; v <= bound; ++v) {
        env.push_back(v);
        const bool ok = eval_at(*f.child, bound, env);
        env.pop_back();
        if (ok) return true;
      }
      return false;
    case Formula::Tag::Forall:
      for (std::uint64_t v = 0; v <= bound; ++v) {
        env.push_back(v);
        const bool ok = eval_at(*f.child, bound, env);
        env.pop_back();
        if (!ok) return false;
      }
      return true;
  }
  return false;
}

struct Soundness {
  bool when_true = false;
  bool when_false = false;
};

Soundness soundness(const Formula& f) {
  switch (f.tag) {
    case Formula::Tag::Eq:
      return {true, true};
    case Formula::Tag::Not: {
      const Soundness c = soundness(*f.child);
      return {c.when_false, c.when_true};
    }
    case Formula::Tag::And:
    case Formula::Tag::Or: {
      const Soundness a = soundness(*f.child);
      const Soundness b = soundness(*f.child2);
      return {a.when_true && b.when_true, a.when_false && b.when_false};
    }
    case Formula::Tag::Implies: {
      const Soundness a = soundness(*f.child);
      const Soundness b = soundness(*f.child2);
      return {a.when_false && b.when_true, a.when_true && b.when_false};
    }
    case Formula::Tag::Exists: {
      const Soundness c = soundness(*f.child);
      return {c.when_true, false};
    }
    case Formula::Tag::Forall: {
      const Soundness c = soundness(*f.child);
      return {false, c.when_false};
    }
  }
  return {};
}

}  // namespace

BoundedEval eval_bounded(const Formula& sentence, std::uint64_t bound) {
  std::vector<std::uint64_t> env;
  BoundedEval out;
  out.value = eval_at(sentence, bound, env);
  const Soundness s = soundness(sentence);
  out.sound = out.value ? s.when_true : s.when_false;
  return out;
}

}  // namespace liarlab::presburger
