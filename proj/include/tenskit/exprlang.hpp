#ifndef TENSKIT_EXPRLANG_HPP
#define TENSKIT_EXPRLANG_HPP

#include "tenskit/tensormap.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace tenskit {

using Env = std::map<std::string, TensorMap>;

// Parse tree for double-index expressions. Grammar:
//
//   expr   := term (('+' | '-') term)*
//   term   := scalar? factor (('.' | '∘' | '⊗' | juxtaposition) factor)*
//   factor := name ('_' labels)? ('^' labels)? | '(' expr ')'
//
// where name is a letter followed by letters/digits, labels is a contiguous
// run of index labels (letter, optional digits, optional '*', optional
// primes), and scalar is an unsigned integer or fraction p/q. '.' and '∘'
// and juxtaposition all mean composition with automatic matching of
// repeated labels; '⊗' composes with no matching and requires disjoint
// labels. Parentheses group and are transparent in the tree.
//
// Label discipline within a chain of composed factors: a label may occur at
// most twice; twice in one factor means once per side (a self-contraction);
// twice across factors must be once as a subscript of the earlier factor
// and once as a superscript of the later one.
struct Expr {
    enum class Kind { Factor, Compose, Outer, Scale, Sum };

    Kind kind = Kind::Factor;

    // Factor payload: written index labels, in written order. A label may
    // appear once in each list (self-contraction) but not twice in one.
    std::string name;
    std::vector<IndexLabel> subs, supers;

    // Scale payload; the scaled operand sits in `left`.
    Scalar factor{0};

    std::shared_ptr<const Expr> left, right;

    // Labels still unmatched after this node, in result order.
    std::vector<IndexLabel> freeSubs, freeSupers;

    // Source span [begin, end) in the parsed text.
    std::size_t begin = 0, end = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

// Structural equality, ignoring source spans.
bool expr_equal(const Expr& a, const Expr& b);

ExprPtr parse_expr_text(const std::string& text);

// Canonical rendering; reparsing it yields an equal tree.
std::string pretty_print(const Expr& e);

// A straight-line program over a value stack, buildable from syntax alone.
struct PlanStep {
    enum class Kind { Load, Contract, Compose, Outer, Scale, Add };

    Kind kind = Kind::Load;
    std::string name;                                      // Load
    std::vector<IndexLabel> subs, supers;                  // result labels (Load: written labels)
    std::vector<std::pair<IndexLabel, IndexLabel>> pairs;  // Contract: (sub, super); Compose: matches
    Scalar factor{0};                                      // Scale
};

struct Plan {
    std::vector<PlanStep> steps;
    std::vector<IndexLabel> outSubs, outSupers;
};

Plan build_plan(const Expr& e);

// Deterministic text dump of a plan, one line per step.
std::string plan_text(const Plan& p);

// Check e against an environment (names bound, written index counts and
// base/dual flags agreeing with the bound tensors, one common dimension and
// basis) and return its plan.
Plan validate(const Expr& e, const Env& env);

// Execute a validated plan left to right.
TensorMap evaluate(const Plan& p, const Env& env);

} // namespace tenskit

#endif
