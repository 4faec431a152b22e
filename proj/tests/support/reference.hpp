// Deliberately naive evaluators written independently of the library:
// explicit adjacency matrices, recursion on the syntax, std::map
// environments. Used as the test-side oracle.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "alba/fol.hpp"
#include "alba/formula.hpp"

namespace ref {

struct Frame {
    int n = 1;
    std::vector<std::vector<bool>> r;  // r[a][b]: a sees b

    explicit Frame(int worlds = 1) : n(worlds), r(worlds, std::vector<bool>(worlds, false)) {}
};

/// Frame number `bits` of size n, edge (a,b) at bit a*n+b.
inline Frame frame_from_bits(int n, unsigned long long bits) {
    Frame f(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) f.r[a][b] = (bits >> (a * n + b)) & 1ULL;
    return f;
}

struct Env {
    std::map<std::string, std::vector<bool>> props;
    std::map<std::string, int> noms;
    std::map<std::string, int> vars;
};

inline bool sat(const Frame& F, const Env& e, int w, const alba::Formula& f) {
    using alba::Op;
    auto sub = [&](std::size_t k, int v) { return sat(F, e, v, f.child(k)); };
    auto bind = [&](const std::string& x, int v) {
        Env e2 = e;
        e2.vars[x] = v;
        return e2;
    };
    switch (f.op()) {
        case Op::Top: return true;
        case Op::Bot: return false;
        case Op::Prop: return e.props.at(f.name())[w];
        case Op::Nom: return e.noms.at(f.name()) == w;
        case Op::Svar: return e.vars.at(f.name()) == w;
        case Op::Not: return !sub(0, w);
        case Op::And: return sub(0, w) && sub(1, w);
        case Op::Or: return sub(0, w) || sub(1, w);
        case Op::Imp: return !sub(0, w) || sub(1, w);
        case Op::Box:
            for (int v = 0; v < F.n; ++v)
                if (F.r[w][v] && !sub(0, v)) return false;
            return true;
        case Op::Dia:
            for (int v = 0; v < F.n; ++v)
                if (F.r[w][v] && sub(0, v)) return true;
            return false;
        case Op::BBox:
            for (int v = 0; v < F.n; ++v)
                if (F.r[v][w] && !sub(0, v)) return false;
            return true;
        case Op::BDia:
            for (int v = 0; v < F.n; ++v)
                if (F.r[v][w] && sub(0, v)) return true;
            return false;
        case Op::GlobalA:
            for (int v = 0; v < F.n; ++v)
                if (!sub(0, v)) return false;
            return true;
        case Op::GlobalE:
            for (int v = 0; v < F.n; ++v)
                if (sub(0, v)) return true;
            return false;
        case Op::AtNom: return sub(0, e.noms.at(f.name()));
        case Op::AtSvar: return sub(0, e.vars.at(f.name()));
        case Op::Down: return sat(F, bind(f.name(), w), w, f.child(0));
        case Op::Forall:
            for (int v = 0; v < F.n; ++v)
                if (!sat(F, bind(f.name(), v), w, f.child(0))) return false;
            return true;
        case Op::Exists:
            for (int v = 0; v < F.n; ++v)
                if (sat(F, bind(f.name(), v), w, f.child(0))) return true;
            return false;
    }
    throw std::logic_error("unknown operator");
}

inline bool leq(const Frame& F, const Env& e, const alba::Inequality& q) {
    for (int w = 0; w < F.n; ++w)
        if (sat(F, e, w, q.lhs) && !sat(F, e, w, q.rhs)) return false;
    return true;
}

inline bool holds(const Frame& F, const Env& e, const alba::Mega& m) {
    switch (m.kind()) {
        case alba::Mega::Kind::Leaf: return leq(F, e, m.ineq());
        case alba::Mega::Kind::Conj: return holds(F, e, m.left()) && holds(F, e, m.right());
        case alba::Mega::Kind::Forall:
            for (int v = 0; v < F.n; ++v) {
                Env e2 = e;
                e2.vars[m.var()] = v;
                if (!holds(F, e2, m.body())) return false;
            }
            return true;
    }
    return false;
}

inline bool holds(const Frame& F, const Env& e, const alba::UQInequality& u) { return holds(F, e, alba::to_mega(u)); }

inline bool holds(const Frame& F, const Env& e, const alba::Statement& s) {
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, alba::Inequality>) {
                return leq(F, e, x);
            } else if constexpr (std::is_same_v<T, alba::Mega> || std::is_same_v<T, alba::UQInequality>) {
                return holds(F, e, x);
            } else {
                for (const auto& p : x.premises)
                    if (!holds(F, e, p)) return true;
                return holds(F, e, x.conclusion);
            }
        },
        s);
}

/// Frame validity by enumerating every valuation of props and nominals and
/// every assignment of the free state variables.
inline bool valid(const Frame& F, const alba::Statement& s) {
    const alba::Names names = alba::names_of(s);
    std::vector<std::string> P(names.props.begin(), names.props.end());
    std::vector<std::string> I(names.noms.begin(), names.noms.end());
    auto fv = alba::free_svars(s);
    std::vector<std::string> X(fv.begin(), fv.end());
    Env e;
    const unsigned long long sets = 1ULL << F.n;
    std::vector<unsigned long long> pv(P.size(), 0);
    std::vector<int> iv(I.size() + X.size(), 0);
    while (true) {
        for (std::size_t k = 0; k < P.size(); ++k) {
            std::vector<bool> ext(F.n);
            for (int w = 0; w < F.n; ++w) ext[w] = (pv[k] >> w) & 1ULL;
            e.props[P[k]] = ext;
        }
        for (std::size_t k = 0; k < I.size(); ++k) e.noms[I[k]] = iv[k];
        for (std::size_t k = 0; k < X.size(); ++k) e.vars[X[k]] = iv[I.size() + k];
        if (!holds(F, e, s)) return false;
        std::size_t k = 0;
        for (; k < iv.size(); ++k) {
            if (++iv[k] < F.n) break;
            iv[k] = 0;
        }
        if (k < iv.size()) continue;
        for (k = 0; k < pv.size(); ++k) {
            if (++pv[k] < sets) break;
            pv[k] = 0;
        }
        if (k == pv.size()) return true;
    }
}

inline bool fo(const Frame& F, const Env& e, const alba::fol::FOFormula& f) {
    using alba::fol::FOp;
    using alba::fol::Term;
    auto val = [&](const Term& t) { return t.kind == Term::Kind::Var ? e.vars.at(t.name) : e.noms.at(t.name); };
    switch (f.op()) {
        case FOp::Equal: return val(f.terms()[0]) == val(f.terms()[1]);
        case FOp::Rel: return F.r[val(f.terms()[0])][val(f.terms()[1])];
        case FOp::Pred: return e.props.at(f.name())[val(f.terms()[0])];
        case FOp::Bot: return false;
        case FOp::Top: return true;
        case FOp::Not: return !fo(F, e, f.child(0));
        case FOp::And: return fo(F, e, f.child(0)) && fo(F, e, f.child(1));
        case FOp::Or: return fo(F, e, f.child(0)) || fo(F, e, f.child(1));
        case FOp::Imp: return !fo(F, e, f.child(0)) || fo(F, e, f.child(1));
        case FOp::Forall:
        case FOp::Exists: {
            const bool all = f.op() == FOp::Forall;
            Env e2 = e;
            for (int v = 0; v < F.n; ++v) {
                e2.vars[f.name()] = v;
                if (fo(F, e2, f.child(0)) != all) return !all;
            }
            return all;
        }
    }
    throw std::logic_error("unknown first-order operator");
}

// Conversions from the library types, for cross-checks only.
inline Frame from(const alba::KripkeFrame& f) {
    Frame r(static_cast<int>(f.size()));
    for (auto [a, b] : f.edges()) r.r[a][b] = true;
    return r;
}

inline Env from(const alba::KripkeModel& m) {
    Env e;
    for (const auto& [p, s] : m.valuation.props) {
        std::vector<bool> ext(m.frame.size());
        for (std::size_t w = 0; w < m.frame.size(); ++w) ext[w] = (s >> w) & 1U;
        e.props[p] = ext;
    }
    for (const auto& [i, w] : m.valuation.noms) e.noms[i] = static_cast<int>(w);
    for (const auto& [x, w] : m.assignment.vars) e.vars[x] = static_cast<int>(w);
    return e;
}

}  // namespace ref
