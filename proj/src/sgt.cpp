#include "alba/sgt.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace alba {

const char* tag_name(Tag t) {
    switch (t) {
        case Tag::Outer: return "outer";
        case Tag::Inner: return "inner";
        case Tag::Both: return "both";
        case Tag::Neither: return "neither";
        case Tag::Leaf: return "leaf";
    }
    return "?";
}

Tag classify(Op op, Sign sign) {
    const bool plus = sign == Sign::Plus;
    switch (op) {
        case Op::Prop:
        case Op::Nom:
        case Op::Svar:
        case Op::Bot:
        case Op::Top: return Tag::Leaf;
        case Op::Not:
        case Op::Down:
        case Op::AtNom:
        case Op::AtSvar: return Tag::Both;
        case Op::And: return plus ? Tag::Both : Tag::Outer;
        case Op::Or: return plus ? Tag::Outer : Tag::Both;
        case Op::Dia: return plus ? Tag::Outer : Tag::Inner;
        case Op::Box: return plus ? Tag::Inner : Tag::Outer;
        case Op::Imp: return plus ? Tag::Neither : Tag::Outer;
        default: return Tag::Neither;
    }
}

std::string SignedNode::label() const {
    const Formula& f = formula;
    switch (f.op()) {
        case Op::Prop: return f.name();
        case Op::Nom: return f.name();
        case Op::Svar: return f.name();
        case Op::Bot: return "⊥";
        case Op::Top: return "⊤";
        case Op::Not: return "¬";
        case Op::And: return "∧";
        case Op::Or: return "∨";
        case Op::Imp: return "→";
        case Op::Box: return "□";
        case Op::Dia: return "◇";
        case Op::AtNom:
        case Op::AtSvar: return "@" + f.name();
        case Op::Down: return "↓" + f.name();
        case Op::BBox: return "■";
        case Op::BDia: return "◆";
        case Op::GlobalA: return "A";
        case Op::GlobalE: return "E";
        case Op::Forall: return "∀" + f.name();
        case Op::Exists: return "∃" + f.name();
    }
    return "?";
}

SignedNode build_signed_tree(const Formula& f, Sign root_sign) {
    SignedNode n{f, root_sign, classify(f.op(), root_sign), {}};
    for (std::size_t i = 0; i < f.arity(); ++i) {
        Sign s = root_sign;
        if (f.op() == Op::Not || (f.op() == Op::Imp && i == 0)) s = flip(root_sign);
        n.children.push_back(build_signed_tree(f.child(i), s));
    }
    return n;
}

namespace {
void render(const SignedNode& t, std::size_t depth, std::ostringstream& out) {
    out << std::string(2 * depth, ' ') << t.signed_label();
    if (t.tag != Tag::Leaf) out << " [" << tag_name(t.tag) << "]";
    out << "\n";
    for (const auto& c : t.children) render(c, depth + 1, out);
}
}  // namespace

std::string render_tree(const SignedNode& t) {
    std::ostringstream out;
    render(t, 0, out);
    return out.str();
}

// ---------------------------------------------------------------------------
// Order types
// ---------------------------------------------------------------------------

OrderType::OrderType(std::vector<std::string> vars, std::vector<Order> values)
    : vars_(std::move(vars)), values_(std::move(values)) {
    if (vars_.size() != values_.size()) throw std::invalid_argument("order type arity mismatch");
}

OrderType OrderType::uniform(std::vector<std::string> vars, Order value) {
    std::vector<Order> values(vars.size(), value);
    return OrderType(std::move(vars), std::move(values));
}

OrderType OrderType::parse(const std::vector<std::string>& vars, const std::string& text) {
    std::vector<Order> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item == "1") values.push_back(Order::One);
        else if (item == "d" || item == "∂") values.push_back(Order::Dual);
        else if (!item.empty() || !text.empty()) throw std::invalid_argument("order type entries must be 1 or d, got '" + item + "'");
    }
    if (values.size() != vars.size())
        throw std::invalid_argument("order type has " + std::to_string(values.size()) + " entries but the inequality has " +
                                    std::to_string(vars.size()) + " variables");
    return OrderType(vars, std::move(values));
}

std::optional<Order> OrderType::get(const std::string& p) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == p) return values_[i];
    return std::nullopt;
}

Order OrderType::at(const std::string& p) const {
    auto v = get(p);
    if (!v) throw std::out_of_range("order type does not cover '" + p + "'");
    return *v;
}

OrderType OrderType::dual() const {
    std::vector<Order> flipped;
    for (Order o : values_) flipped.push_back(o == Order::One ? Order::Dual : Order::One);
    return OrderType(vars_, std::move(flipped));
}

std::vector<std::string> OrderType::labels() const {
    std::vector<std::string> out;
    for (Order o : values_) out.push_back(o == Order::One ? "1" : "d");
    return out;
}

std::string OrderType::to_string() const {
    std::string out;
    for (const auto& l : labels()) {
        if (!out.empty()) out += ",";
        out += l;
    }
    return out;
}

std::vector<std::string> order_variables(const Inequality& ineq) {
    auto props = names_of(ineq).props;
    return {props.begin(), props.end()};
}

// ---------------------------------------------------------------------------
// Branches
// ---------------------------------------------------------------------------

namespace {

bool is_critical_leaf(const SignedNode& n, const OrderType& e) {
    if (n.op() != Op::Prop) return false;
    auto o = e.get(n.formula.name());
    if (!o) return false;
    return (*o == Order::One) == (n.sign == Sign::Plus);
}

void collect_critical(const SignedNode& n, std::vector<const SignedNode*>& path, const OrderType& e,
                      std::vector<Branch>& out) {
    path.push_back(&n);
    if (is_critical_leaf(n, e)) out.emplace_back(path.rbegin(), path.rend());
    for (const auto& c : n.children) collect_critical(c, path, e, out);
    path.pop_back();
}

}  // namespace

std::vector<Branch> critical_branches(const SignedNode& tree, const OrderType& e) {
    std::vector<Branch> out;
    std::vector<const SignedNode*> path;
    collect_critical(tree, path, e, out);
    return out;
}

bool is_excellent(const Branch& branch) {
    // branch[0] is the leaf; candidate split k: nodes 1..k inner, k+1.. outer.
    const std::size_t m = branch.size();
    for (std::size_t k = 0; k < m; ++k) {
        bool ok = true;
        for (std::size_t i = 1; i < m && ok; ++i) {
            Tag t = branch[i]->tag;
            if (t == Tag::Leaf) continue;
            ok = i <= k ? can_be_inner(t) : can_be_outer(t);
        }
        if (ok) return true;
    }
    return m <= 1;
}

bool is_epsilon_sahlqvist(const Inequality& ineq, const OrderType& e) {
    for (const auto& tree : {build_signed_tree(ineq.lhs, Sign::Plus), build_signed_tree(ineq.rhs, Sign::Minus)})
        for (const auto& b : critical_branches(tree, e))
            if (!is_excellent(b)) return false;
    return true;
}

std::vector<OrderType> find_order_types(const Inequality& ineq) {
    auto vars = order_variables(ineq);
    if (vars.size() > 8) throw std::invalid_argument("order type search supports at most 8 variables");
    const std::size_t n = vars.size();
    std::vector<OrderType> out;
    for (std::uint32_t code = 0; code < (1U << n); ++code) {
        std::vector<Order> vals(n);
        for (std::size_t i = 0; i < n; ++i) vals[i] = ((code >> (n - 1 - i)) & 1U) ? Order::Dual : Order::One;
        OrderType e(vars, vals);
        if (is_epsilon_sahlqvist(ineq, e)) out.push_back(e);
    }
    return out;
}

bool is_definite(const SignedNode& tree, const OrderType& e) {
    for (const auto& b : critical_branches(tree, e))
        for (const SignedNode* n : b) {
            if (n->op() == Op::Or && n->sign == Sign::Plus) return false;
            if (n->op() == Op::And && n->sign == Sign::Minus) return false;
        }
    return true;
}

bool is_definite(const Inequality& ineq, const OrderType& e) {
    return is_definite(build_signed_tree(ineq.lhs, Sign::Plus), e) &&
           is_definite(build_signed_tree(ineq.rhs, Sign::Minus), e);
}

bool is_inner(const SignedNode& tree, const OrderType& e) {
    for (const auto& b : critical_branches(tree, e))
        for (const SignedNode* n : b)
            if (n->tag != Tag::Leaf && !can_be_inner(n->tag)) return false;
    return true;
}

bool is_uniform(const SignedNode& tree, const OrderType& e) {
    if (tree.op() == Op::Prop) {
        auto o = e.get(tree.formula.name());
        return !o || (*o == Order::One) == (tree.sign == Sign::Plus);
    }
    return std::all_of(tree.children.begin(), tree.children.end(),
                       [&](const SignedNode& c) { return is_uniform(c, e); });
}

bool is_uniform(const Inequality& ineq, const OrderType& e) {
    return is_uniform(build_signed_tree(ineq.lhs, Sign::Plus), e) &&
           is_uniform(build_signed_tree(ineq.rhs, Sign::Minus), e);
}

}  // namespace alba
