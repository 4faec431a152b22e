#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "alba/engine.hpp"

namespace alba::detail {

using Allow = std::function<bool(const std::string&)>;

struct Applied {
    std::string rule;
    Position position;
    std::vector<std::string> introduced;
};

inline Formula with_child(const Formula& f, std::size_t i, Formula c) {
    std::vector<Formula> kids = f.children();
    kids[i] = std::move(c);
    return Formula::make(f.op(), f.name(), std::move(kids));
}

inline Sign child_sign(const Formula& f, Sign s, std::size_t i) {
    return (f.op() == Op::Not || (f.op() == Op::Imp && i == 0)) ? flip(s) : s;
}

/// "nom" or "svar" for a literal.
inline const char* literal_kind(const Formula& f) { return f.op() == Op::Nom ? "nom" : "svar"; }

inline bool is_neg_literal(const Formula& f) { return f.op() == Op::Not && f.child(0).is_literal(); }

std::optional<Applied> stage1_step(std::vector<Inequality>& items, const Allow& allow);
std::optional<Applied> substage1_step(System& sys, FreshNames& fresh, const Allow& allow);
std::optional<Applied> substage2_step(System& sys, FreshNames& fresh, const Allow& allow);
std::optional<Applied> substage3_step(System& sys, const Allow& allow);
/// Eliminates one variable; on failure appends one diagnostic per variable
/// that could not be eliminated.
std::optional<Applied> substage4_step(System& sys, const OrderType& e, const Allow& allow,
                                      std::vector<Diagnostic>* diagnostics);

}  // namespace alba::detail
