// Signed generation trees, order types and the Sahlqvist classifier.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alba/formula.hpp"

namespace alba {

enum class Sign : std::uint8_t { Plus, Minus };
inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Outer/inner classification of a signed connective. Both means the node
/// may sit in either segment of an excellent branch.
enum class Tag : std::uint8_t { Outer, Inner, Both, Neither, Leaf };
const char* tag_name(Tag t);
Tag classify(Op op, Sign sign);
inline bool can_be_outer(Tag t) { return t == Tag::Outer || t == Tag::Both; }
inline bool can_be_inner(Tag t) { return t == Tag::Inner || t == Tag::Both; }

struct SignedNode {
    Formula formula;
    Sign sign;
    Tag tag;
    std::vector<SignedNode> children;

    Op op() const { return formula.op(); }
    /// Connective symbol with its index or binder, e.g. "□", "@i", "↓x", "p1".
    std::string label() const;
    /// Sign followed by label, e.g. "+□".
    std::string signed_label() const { return std::string(1, sign_char(sign)) + label(); }
};

SignedNode build_signed_tree(const Formula& f, Sign root_sign);
/// Indented multi-line rendering, one signed node per line.
std::string render_tree(const SignedNode& t);

enum class Order : std::uint8_t { One, Dual };

class OrderType {
public:
    OrderType() = default;
    OrderType(std::vector<std::string> vars, std::vector<Order> values);
    /// All variables mapped to the same value.
    static OrderType uniform(std::vector<std::string> vars, Order value);
    /// "1,d,1" against the given variable tuple.
    static OrderType parse(const std::vector<std::string>& vars, const std::string& text);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<Order>& values() const { return values_; }
    std::optional<Order> get(const std::string& p) const;
    Order at(const std::string& p) const;
    OrderType dual() const;
    /// "1,d" style.
    std::string to_string() const;
    std::vector<std::string> labels() const;

    friend bool operator==(const OrderType&, const OrderType&) = default;

private:
    std::vector<std::string> vars_;
    std::vector<Order> values_;
};

/// Sorted propositional variables of an inequality; the tuple order types
/// range over.
std::vector<std::string> order_variables(const Inequality& ineq);

/// Leaf first, root last.
using Branch = std::vector<const SignedNode*>;

/// Branches ending in a leaf +p with e(p)=1 or -p with e(p)=d.
std::vector<Branch> critical_branches(const SignedNode& tree, const OrderType& e);
bool is_excellent(const Branch& branch);
bool is_epsilon_sahlqvist(const Inequality& ineq, const OrderType& e);
/// Candidates in lexicographic order with 1 before d; at most 8 variables.
std::vector<OrderType> find_order_types(const Inequality& ineq);

bool is_definite(const SignedNode& tree, const OrderType& e);
bool is_definite(const Inequality& ineq, const OrderType& e);
bool is_inner(const SignedNode& tree, const OrderType& e);
/// Every leaf p of the tree carries the sign e dictates (+ for 1, - for d).
bool is_uniform(const SignedNode& tree, const OrderType& e);
/// is_uniform on +lhs and -rhs.
bool is_uniform(const Inequality& ineq, const OrderType& e);

}  // namespace alba
