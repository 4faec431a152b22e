#include "alba/formula.hpp"

namespace alba {

namespace {
bool is_top(const Formula& f) { return f.op() == Op::Top; }
bool is_bot(const Formula& f) { return f.op() == Op::Bot; }
}  // namespace

Formula simplify(const Formula& f) {
    std::vector<Formula> kids;
    for (const auto& c : f.children()) kids.push_back(simplify(c));
    switch (f.op()) {
        case Op::Not:
            if (is_top(kids[0])) return mk::bot();
            if (is_bot(kids[0])) return mk::top();
            if (kids[0].op() == Op::Not) return kids[0].child(0);
            return mk::neg(kids[0]);
        case Op::And:
            if (is_bot(kids[0]) || is_bot(kids[1])) return mk::bot();
            if (is_top(kids[0])) return kids[1];
            if (is_top(kids[1])) return kids[0];
            if (kids[0] == kids[1]) return kids[0];
            return mk::conj(kids[0], kids[1]);
        case Op::Or:
            if (is_top(kids[0]) || is_top(kids[1])) return mk::top();
            if (is_bot(kids[0])) return kids[1];
            if (is_bot(kids[1])) return kids[0];
            if (kids[0] == kids[1]) return kids[0];
            return mk::disj(kids[0], kids[1]);
        case Op::Imp:
            if (is_bot(kids[0]) || is_top(kids[1])) return mk::top();
            if (is_top(kids[0])) return kids[1];
            if (is_bot(kids[1])) return simplify(mk::neg(kids[0]));
            return mk::imp(kids[0], kids[1]);
        case Op::Box:
        case Op::BBox:
        case Op::GlobalA:
            if (is_top(kids[0])) return mk::top();
            break;
        case Op::Dia:
        case Op::BDia:
        case Op::GlobalE:
            if (is_bot(kids[0])) return mk::bot();
            break;
        case Op::AtNom:
        case Op::AtSvar:
            if (is_top(kids[0]) || is_bot(kids[0])) return kids[0];
            break;
        case Op::Down:
        case Op::Forall:
        case Op::Exists:
            if (!free_svars(kids[0]).count(f.name())) return kids[0];
            break;
        default: return f;
    }
    return Formula::make(f.op(), f.name(), std::move(kids));
}

Inequality simplify(const Inequality& ineq) { return {simplify(ineq.lhs), simplify(ineq.rhs)}; }

}  // namespace alba
