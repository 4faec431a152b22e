// Formulas of the hybrid language H(@, down) and its expanded language, plus
// the inequality statement family the correspondence algorithm works on.
//
// Formulas are immutable trees with shared structure. Three disjoint name
// spaces are kept apart by the node kind: propositional variables (Prop),
// nominals (Nom) and state variables (Svar).
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace alba {

enum class Op : std::uint8_t {
    Prop,
    Nom,
    Svar,
    Bot,
    Top,
    Not,
    And,
    Or,
    Imp,
    Box,
    Dia,
    AtNom,   // @_i phi   (index stored in name())
    AtSvar,  // @_x phi   (index stored in name())
    Down,    // down x. phi
    BBox,    // box on the converse relation
    BDia,    // diamond on the converse relation
    GlobalA,
    GlobalE,
    Forall,  // forall x. phi   (state quantifier)
    Exists,  // exists x. phi
};

const char* op_name(Op op);

class Formula {
public:
    Op op() const { return node_->op; }
    /// Atom name, @-index, or bound variable; empty for other nodes.
    const std::string& name() const { return node_->name; }
    std::size_t arity() const { return node_->children.size(); }
    const Formula& child(std::size_t i) const { return node_->children.at(i); }
    const std::vector<Formula>& children() const { return node_->children; }

    bool is_atom() const;
    bool is_literal() const { return op() == Op::Nom || op() == Op::Svar; }
    bool same_node(const Formula& other) const { return node_ == other.node_; }

    std::size_t size() const;
    std::size_t depth() const;
    std::size_t hash() const { return node_->hash; }

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

    static Formula make(Op op, std::string name, std::vector<Formula> children);

private:
    struct Node {
        Op op;
        std::string name;
        std::vector<Formula> children;
        std::size_t hash;
        std::size_t size;
    };
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Constructors for formulas, one per connective.
namespace mk {
Formula prop(std::string name);
Formula nom(std::string name);
Formula svar(std::string name);
Formula bot();
Formula top();
Formula neg(Formula a);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula imp(Formula a, Formula b);
Formula box(Formula a);
Formula dia(Formula a);
Formula at_nom(std::string nominal, Formula a);
Formula at_svar(std::string var, Formula a);
/// @ with an index given as a Nom or Svar formula.
Formula at(const Formula& index, Formula a);
Formula down(std::string var, Formula a);
Formula bbox(Formula a);
Formula bdia(Formula a);
Formula glob_a(Formula a);
Formula glob_e(Formula a);
Formula forall(std::string var, Formula a);
Formula exists(std::string var, Formula a);
/// Left fold with disj; bot() for an empty list.
Formula big_disj(const std::vector<Formula>& terms);
/// Left fold with conj; top() for an empty list.
Formula big_conj(const std::vector<Formula>& terms);
}  // namespace mk

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

struct Inequality {
    Formula lhs;
    Formula rhs;
    friend bool operator==(const Inequality& a, const Inequality& b) {
        return a.lhs == b.lhs && a.rhs == b.rhs;
    }
    friend bool operator!=(const Inequality& a, const Inequality& b) { return !(a == b); }
};

struct QuasiInequality {
    std::vector<Inequality> premises;
    Inequality conclusion;
    friend bool operator==(const QuasiInequality&, const QuasiInequality&) = default;
};

/// Mega-inequality: Leaf(ineq) | Conj(M, M) | Forall(x, M).
class Mega {
public:
    enum class Kind : std::uint8_t { Leaf, Conj, Forall };

    static Mega leaf(Inequality ineq);
    static Mega conj(Mega a, Mega b);
    static Mega forall(std::string var, Mega body);

    Kind kind() const { return node_->kind; }
    const Inequality& ineq() const;
    const Mega& left() const;
    const Mega& right() const;
    const Mega& body() const;
    const std::string& var() const;

    friend bool operator==(const Mega& a, const Mega& b);
    friend bool operator!=(const Mega& a, const Mega& b) { return !(a == b); }

private:
    struct Node {
        Kind kind;
        std::optional<Inequality> ineq;
        std::string var;
        std::vector<Mega> children;
    };
    explicit Mega(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct UQInequality {
    std::vector<std::string> bound;  // outermost first
    Inequality body;
    friend bool operator==(const UQInequality&, const UQInequality&) = default;
};

struct QuasiUQInequality {
    std::vector<UQInequality> premises;
    UQInequality conclusion;
    friend bool operator==(const QuasiUQInequality&, const QuasiUQInequality&) = default;
};

using Statement = std::variant<Inequality, QuasiInequality, Mega, UQInequality, QuasiUQInequality>;

/// Converts a mega-inequality of shape forall x1 ... forall xk (leaf) to its
/// prefix form; nullopt when the tree contains a meta-conjunction.
std::optional<UQInequality> as_uq(const Mega& m);
Mega to_mega(const UQInequality& uq);
/// Meta-conjunction of a list of mega-inequalities (right nested).
Mega mega_conj(const std::vector<Mega>& items);

// ---------------------------------------------------------------------------
// Names, predicates, substitution
// ---------------------------------------------------------------------------

struct Names {
    std::set<std::string> props;
    std::set<std::string> noms;
    std::set<std::string> svars;  // free and bound
    std::set<std::string> all() const;
    void merge(const Names& other);
};

Names names_of(const Formula& f);
Names names_of(const Inequality& ineq);
Names names_of(const Mega& m);
Names names_of(const Statement& s);

std::set<std::string> free_svars(const Formula& f);
std::set<std::string> free_svars(const Mega& m);
std::set<std::string> free_svars(const Statement& s);

/// Propositional variables in order of first occurrence (left to right).
std::vector<std::string> props_in_order(const Formula& f);

bool is_base(const Formula& f);
bool is_pure(const Formula& f);
bool is_pure(const Inequality& ineq);
bool is_pure(const Mega& m);
bool contains_prop(const Formula& f, const std::string& p);
bool contains_prop(const Mega& m, const std::string& p);

/// Replaces free occurrences of state variable `var` by `term`, which must be
/// a Nom or Svar formula. Bound occurrences are untouched and binders are
/// renamed when they would capture `term`.
Formula substitute_svar(const Formula& f, const std::string& var, const Formula& term);

/// Replaces every occurrence of propositional variable `p` by `replacement`,
/// renaming binders that would capture free state variables of it.
Formula substitute_prop(const Formula& f, const std::string& p, const Formula& replacement);

enum class Polarity : std::uint8_t { Positive, Negative, Mixed, Absent };
const char* polarity_name(Polarity p);

Polarity polarity(const Formula& f, const std::string& p);
/// Positive or absent.
bool is_positive_in(const Formula& f, const std::string& p);
/// Negative or absent.
bool is_negative_in(const Formula& f, const std::string& p);

/// Fresh nominals i0, i1, ... and state variables y1, y2, ..., skipping every
/// reserved name. One generator per algorithm run.
class FreshNames {
public:
    explicit FreshNames(std::set<std::string> reserved = {});
    std::string nominal();
    std::string state_variable();
    void reserve(const std::string& name) { reserved_.insert(name); }
    void reserve(const std::set<std::string>& names) { reserved_.insert(names.begin(), names.end()); }
    bool is_reserved(const std::string& name) const { return reserved_.count(name) != 0; }
    /// Nominals produced so far, in creation order.
    const std::vector<std::string>& issued_nominals() const { return issued_nominals_; }

private:
    std::set<std::string> reserved_;
    std::size_t next_nominal_ = 0;
    std::size_t next_svar_ = 1;
    std::vector<std::string> issued_nominals_;
};

/// Boolean and modal constant folding (T /\ a = a, dia F = F, ...).
Formula simplify(const Formula& f);
Inequality simplify(const Inequality& ineq);

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

enum class Notation : std::uint8_t { Ascii, Unicode };

/// ASCII output re-parses to a structurally equal formula.
std::string to_string(const Formula& f, Notation n = Notation::Ascii);
std::string to_string(const Inequality& ineq, Notation n = Notation::Ascii);
std::string to_string(const Mega& m, Notation n = Notation::Ascii);
std::string to_string(const UQInequality& uq, Notation n = Notation::Ascii);
std::string to_string(const QuasiInequality& q, Notation n = Notation::Ascii);
std::string to_string(const QuasiUQInequality& q, Notation n = Notation::Ascii);
std::string to_string(const Statement& s, Notation n = Notation::Ascii);

}  // namespace alba

template <>
struct std::hash<alba::Formula> {
    std::size_t operator()(const alba::Formula& f) const noexcept { return f.hash(); }
};
