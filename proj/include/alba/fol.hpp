// First-order correspondence language and the standard translation.
#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "alba/formula.hpp"
#include "alba/semantics.hpp"

namespace alba::fol {

struct Term {
    enum class Kind : std::uint8_t { Var, Const };
    Kind kind;
    std::string name;
    static Term var(std::string n) { return {Kind::Var, std::move(n)}; }
    static Term constant(std::string n) { return {Kind::Const, std::move(n)}; }
    friend bool operator==(const Term&, const Term&) = default;
};

enum class FOp : std::uint8_t { Equal, Rel, Pred, Bot, Top, Not, And, Or, Imp, Forall, Exists };

class FOFormula {
public:
    FOp op() const { return node_->op; }
    /// Predicate name for Pred, bound variable for quantifiers.
    const std::string& name() const { return node_->name; }
    const std::vector<Term>& terms() const { return node_->terms; }
    const FOFormula& child(std::size_t i) const { return node_->children.at(i); }
    std::size_t arity() const { return node_->children.size(); }

    static FOFormula make(FOp op, std::string name, std::vector<Term> terms, std::vector<FOFormula> children);
    friend bool operator==(const FOFormula& a, const FOFormula& b);

private:
    struct Node {
        FOp op;
        std::string name;
        std::vector<Term> terms;
        std::vector<FOFormula> children;
    };
    explicit FOFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

namespace fo {
FOFormula equal(Term a, Term b);
FOFormula rel(Term a, Term b);
FOFormula pred(std::string p, Term t);
FOFormula bot();
FOFormula top();
FOFormula neg(FOFormula a);
FOFormula conj(FOFormula a, FOFormula b);
FOFormula disj(FOFormula a, FOFormula b);
FOFormula imp(FOFormula a, FOFormula b);
FOFormula forall(std::string v, FOFormula a);
FOFormula exists(std::string v, FOFormula a);
}  // namespace fo

/// Standard translation of a formula at FO variable x. Auxiliary variables
/// y1, y2, ... avoid every name of f and x.
FOFormula st_formula(const std::string& x, const Formula& f);
/// Global translation of a statement; the world variable is "x", or x1, x2... on a clash.
FOFormula st_statement(const Statement& s);

struct Symbols {
    std::vector<std::string> free_vars;  // first-use order
    std::vector<std::string> constants;  // first-use order
};
Symbols free_symbols(const FOFormula& f);
bool is_sentence(const FOFormula& f);

/// Replaces every constant by a fresh variable (its own name when that is
/// unused) and universally quantifies all free variables. Quantifier order:
/// the constants listed in `leading` that occur, then everything else in
/// first-use order.
FOFormula universal_closure(const FOFormula& f, const std::vector<std::string>& leading = {});

struct Interpretation {
    std::map<std::string, WorldSet> preds;
    std::map<std::string, World> constants;
    std::map<std::string, World> vars;
};

bool fo_eval(const KripkeFrame& frame, const Interpretation& interp, const FOFormula& f);

/// Slot-compiled evaluator for sentences and formulas over a fixed symbol set.
class CompiledFO {
public:
    explicit CompiledFO(const FOFormula& f);
    bool eval(const KripkeFrame& frame, const Interpretation& interp) const;

    struct Node {
        FOp op;
        int slot;  // predicate slot, or bound variable slot
        int t0;
        int t1;  // term slots
        int a;
        int b;
    };

private:
    int compile(const FOFormula& f);
    int term_slot(const Term& t);
    std::vector<Node> nodes_;
    std::vector<std::string> preds_;
    std::vector<Term> term_slots_;
    std::set<std::string> free_vars_;
    int root_ = -1;
};

std::string to_string(const FOFormula& f);
std::string to_sexpr(const FOFormula& f);

}  // namespace alba::fol
