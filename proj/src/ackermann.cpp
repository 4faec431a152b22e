// Substage 4: right- and left-handed Ackermann elimination on the whole system.
#include <algorithm>

#include "engine_internal.hpp"

namespace alba::detail {
namespace {

struct Attempt {
    bool ok = false;
    std::vector<std::size_t> collected;
    Diagnostic failure;
};

Attempt try_variable(const std::vector<UQInequality>& items, const std::string& p, bool right) {
    Attempt at;
    const Formula var = mk::prop(p);
    std::vector<Formula> minimal;
    for (std::size_t k = 0; k < items.size(); ++k) {
        const UQInequality& u = items[k];
        if (!u.bound.empty()) continue;
        const bool hit = right ? (u.body.rhs == var && is_pure(u.body.lhs)) : (u.body.lhs == var && is_pure(u.body.rhs));
        if (hit) {
            at.collected.push_back(k);
            minimal.push_back(right ? u.body.lhs : u.body.rhs);
        }
    }
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (std::find(at.collected.begin(), at.collected.end(), k) != at.collected.end()) continue;
        const UQInequality& u = items[k];
        if (!contains_prop(u.body.lhs, p) && !contains_prop(u.body.rhs, p)) continue;
        const std::string shown = to_string(to_mega(u));
        const bool lhs_ok = right ? is_positive_in(u.body.lhs, p) : is_negative_in(u.body.lhs, p);
        const bool rhs_ok = right ? is_negative_in(u.body.rhs, p) : is_positive_in(u.body.rhs, p);
        if (!lhs_ok || !rhs_ok) {
            const char* want = right ? "positive on the left and negative on the right"
                                     : "negative on the left and positive on the right";
            at.failure = {p, shown, std::string("occurrences of ") + p + " must be " + want};
            return at;
        }
        for (const auto& x : u.bound)
            for (const auto& a : minimal)
                if (free_svars(a).count(x)) {
                    at.failure = {p, shown, "bound variable " + x + " occurs free in a collected bound"};
                    return at;
                }
    }
    at.ok = true;
    return at;
}

}  // namespace

std::optional<Applied> substage4_step(System& sys, const OrderType& e, const Allow& allow,
                                      std::vector<Diagnostic>* diagnostics) {
    std::vector<UQInequality> items;
    for (const auto& m : sys) {
        auto u = as_uq(m);
        if (!u) {
            if (diagnostics) diagnostics->push_back({"", to_string(m), "meta-conjunction left after splitting"});
            return std::nullopt;
        }
        items.push_back(*u);
    }
    std::set<std::string> props;
    for (const auto& m : sys) props.merge(names_of(m).props);

    std::vector<Diagnostic> failures;
    for (const auto& p : props) {
        const bool right = e.get(p).value_or(Order::One) == Order::One;
        const char* id = right ? "ackermann.right" : "ackermann.left";
        if (!allow(id)) continue;
        Attempt at = try_variable(items, p, right);
        if (!at.ok) {
            failures.push_back(at.failure);
            continue;
        }
        std::vector<Formula> bounds;
        for (auto k : at.collected) bounds.push_back(right ? items[k].body.lhs : items[k].body.rhs);
        const Formula sub = right ? mk::big_disj(bounds) : mk::big_conj(bounds);
        System out;
        for (std::size_t k = 0; k < items.size(); ++k) {
            if (std::find(at.collected.begin(), at.collected.end(), k) != at.collected.end()) continue;
            UQInequality u = items[k];
            u.body = {substitute_prop(u.body.lhs, p, sub), substitute_prop(u.body.rhs, p, sub)};
            out.push_back(to_mega(u));
        }
        const std::size_t where = at.collected.empty() ? 0 : at.collected.front();
        sys = std::move(out);
        return Applied{id, {where, p, 0}, {}};
    }
    if (diagnostics) diagnostics->insert(diagnostics->end(), failures.begin(), failures.end());
    return std::nullopt;
}

}  // namespace alba::detail
