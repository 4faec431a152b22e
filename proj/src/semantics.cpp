#include "alba/semantics.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace alba {

KripkeFrame::KripkeFrame(std::size_t n) : n_(n), succ_(n, 0), pred_(n, 0) {
    if (n == 0) throw std::invalid_argument("a Kripke frame needs at least one world");
    if (n > kMaxWorlds) throw std::invalid_argument("at most 64 worlds are supported");
}

KripkeFrame KripkeFrame::from_bits(std::size_t n, std::uint64_t bits) {
    KripkeFrame f(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if ((bits >> (a * n + b)) & 1U) f.add_edge(static_cast<World>(a), static_cast<World>(b));
    return f;
}

void KripkeFrame::add_edge(World a, World b) {
    if (a >= n_ || b >= n_) throw std::out_of_range("edge endpoint outside the frame");
    succ_[a] |= WorldSet{1} << b;
    pred_[b] |= WorldSet{1} << a;
}

std::vector<std::pair<World, World>> KripkeFrame::edges() const {
    std::vector<std::pair<World, World>> out;
    for (World a = 0; a < n_; ++a)
        for (World b = 0; b < n_; ++b)
            if (has_edge(a, b)) out.emplace_back(a, b);
    return out;
}

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("validity check needs " + std::to_string(required) + " model checks, budget is " +
                         std::to_string(budget)),
      required_(required),
      budget_(budget) {}

namespace {

WorldSet bit(World w) { return WorldSet{1} << w; }

WorldSet box_of(const KripkeFrame& fr, WorldSet a, bool converse) {
    WorldSet out = 0;
    for (World w = 0; w < fr.size(); ++w) {
        WorldSet nb = converse ? fr.predecessors(w) : fr.successors(w);
        if ((nb & ~a) == 0) out |= bit(w);
    }
    return out;
}

WorldSet dia_of(const KripkeFrame& fr, WorldSet a, bool converse) {
    WorldSet out = 0;
    for (World w = 0; w < fr.size(); ++w) {
        WorldSet nb = converse ? fr.predecessors(w) : fr.successors(w);
        if (nb & a) out |= bit(w);
    }
    return out;
}

template <typename Map>
auto lookup(const Map& m, const std::string& key, const char* what) {
    auto it = m.find(key);
    if (it == m.end()) throw MissingName(std::string(what) + " '" + key + "' is not interpreted");
    return it->second;
}

WorldSet eval(const KripkeFrame& fr, const Valuation& v, const Assignment& g, const Formula& f) {
    const WorldSet all = fr.all();
    switch (f.op()) {
        case Op::Prop: return lookup(v.props, f.name(), "propositional variable") & all;
        case Op::Nom: return bit(lookup(v.noms, f.name(), "nominal"));
        case Op::Svar: return bit(lookup(g.vars, f.name(), "state variable"));
        case Op::Bot: return 0;
        case Op::Top: return all;
        case Op::Not: return all & ~eval(fr, v, g, f.child(0));
        case Op::And: return eval(fr, v, g, f.child(0)) & eval(fr, v, g, f.child(1));
        case Op::Or: return eval(fr, v, g, f.child(0)) | eval(fr, v, g, f.child(1));
        case Op::Imp: return (all & ~eval(fr, v, g, f.child(0))) | eval(fr, v, g, f.child(1));
        case Op::Box: return box_of(fr, eval(fr, v, g, f.child(0)), false);
        case Op::Dia: return dia_of(fr, eval(fr, v, g, f.child(0)), false);
        case Op::BBox: return box_of(fr, eval(fr, v, g, f.child(0)), true);
        case Op::BDia: return dia_of(fr, eval(fr, v, g, f.child(0)), true);
        case Op::AtNom: {
            World w = lookup(v.noms, f.name(), "nominal");
            return (eval(fr, v, g, f.child(0)) & bit(w)) ? all : 0;
        }
        case Op::AtSvar: {
            World w = lookup(g.vars, f.name(), "state variable");
            return (eval(fr, v, g, f.child(0)) & bit(w)) ? all : 0;
        }
        case Op::Down: {
            WorldSet out = 0;
            for (World w = 0; w < fr.size(); ++w)
                if (eval(fr, v, g.with(f.name(), w), f.child(0)) & bit(w)) out |= bit(w);
            return out;
        }
        case Op::GlobalA: return eval(fr, v, g, f.child(0)) == all ? all : 0;
        case Op::GlobalE: return eval(fr, v, g, f.child(0)) != 0 ? all : 0;
        case Op::Forall: {
            WorldSet out = all;
            for (World w = 0; w < fr.size(); ++w) out &= eval(fr, v, g.with(f.name(), w), f.child(0));
            return out;
        }
        case Op::Exists: {
            WorldSet out = 0;
            for (World w = 0; w < fr.size(); ++w) out |= eval(fr, v, g.with(f.name(), w), f.child(0));
            return out;
        }
    }
    return 0;
}

bool holds_ineq(const KripkeFrame& fr, const Valuation& v, const Assignment& g, const Inequality& i) {
    return (eval(fr, v, g, i.lhs) & ~eval(fr, v, g, i.rhs)) == 0;
}

bool holds_mega(const KripkeFrame& fr, const Valuation& v, const Assignment& g, const Mega& m) {
    switch (m.kind()) {
        case Mega::Kind::Leaf: return holds_ineq(fr, v, g, m.ineq());
        case Mega::Kind::Conj: return holds_mega(fr, v, g, m.left()) && holds_mega(fr, v, g, m.right());
        case Mega::Kind::Forall:
            for (World w = 0; w < fr.size(); ++w)
                if (!holds_mega(fr, v, g.with(m.var(), w), m.body())) return false;
            return true;
    }
    return false;
}

}  // namespace

WorldSet truth_set(const KripkeFrame& frame, const Valuation& v, const Assignment& g, const Formula& f) {
    return eval(frame, v, g, f);
}

bool satisfies(const KripkeFrame& frame, const Valuation& v, const Assignment& g, World w, const Formula& f) {
    if (w >= frame.size()) throw std::out_of_range("world outside the frame");
    return (eval(frame, v, g, f) >> w) & 1U;
}

bool holds(const KripkeFrame& frame, const Valuation& v, const Assignment& g, const Statement& s) {
    struct Visitor {
        const KripkeFrame& fr;
        const Valuation& v;
        const Assignment& g;
        bool operator()(const Inequality& i) const { return holds_ineq(fr, v, g, i); }
        bool operator()(const QuasiInequality& q) const {
            for (const auto& p : q.premises)
                if (!holds_ineq(fr, v, g, p)) return true;
            return holds_ineq(fr, v, g, q.conclusion);
        }
        bool operator()(const Mega& m) const { return holds_mega(fr, v, g, m); }
        bool operator()(const UQInequality& u) const { return holds_mega(fr, v, g, to_mega(u)); }
        bool operator()(const QuasiUQInequality& q) const {
            for (const auto& p : q.premises)
                if (!holds_mega(fr, v, g, to_mega(p))) return true;
            return holds_mega(fr, v, g, to_mega(q.conclusion));
        }
    };
    return std::visit(Visitor{frame, v, g}, s);
}

Vocabulary vocabulary_of(const Statement& s) {
    Names n = names_of(s);
    auto fv = free_svars(s);
    return {{n.props.begin(), n.props.end()}, {n.noms.begin(), n.noms.end()}, {fv.begin(), fv.end()}};
}

Vocabulary vocabulary_of(const Formula& f) {
    Names n = names_of(f);
    auto fv = free_svars(f);
    return {{n.props.begin(), n.props.end()}, {n.noms.begin(), n.noms.end()}, {fv.begin(), fv.end()}};
}

std::uint64_t enumeration_size(std::size_t worlds, const Vocabulary& vocab) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    auto mul = [&](std::uint64_t f) {
        if (total != 0 && f > kMax / total) total = kMax;
        else total *= f;
    };
    for (std::size_t i = 0; i < vocab.props.size(); ++i) {
        if (worlds >= 64) mul(kMax);
        else mul(std::uint64_t{1} << worlds);
    }
    for (std::size_t i = 0; i < vocab.noms.size() + vocab.svars.size(); ++i) mul(worlds);
    return total;
}

// ---------------------------------------------------------------------------
// Compiled evaluation
// ---------------------------------------------------------------------------

class StatementCompiler {
public:
    explicit StatementCompiler(CompiledStatement& out) : out_(out) {
        for (std::size_t i = 0; i < out.vocab_.svars.size(); ++i) svar_slot(out.vocab_.svars[i]);
    }

    int formula(const Formula& f) {
        CompiledStatement::Node n{f.op(), -1, -1, -1};
        switch (f.op()) {
            case Op::Prop: n.slot = index_of(out_.vocab_.props, f.name(), "propositional variable"); break;
            case Op::Nom:
            case Op::AtNom: n.slot = index_of(out_.vocab_.noms, f.name(), "nominal"); break;
            case Op::Svar:
            case Op::AtSvar:
            case Op::Down:
            case Op::Forall:
            case Op::Exists: n.slot = svar_slot(f.name()); break;
            default: break;
        }
        if (f.arity() >= 1) n.a = formula(f.child(0));
        if (f.arity() == 2) n.b = formula(f.child(1));
        out_.nodes_.push_back(n);
        return static_cast<int>(out_.nodes_.size()) - 1;
    }

    int mega(const Mega& m) {
        CompiledStatement::MegaNode n{m.kind(), -1, -1, -1};
        switch (m.kind()) {
            case Mega::Kind::Leaf:
                n.a = formula(m.ineq().lhs);
                n.b = formula(m.ineq().rhs);
                break;
            case Mega::Kind::Conj:
                n.a = mega(m.left());
                n.b = mega(m.right());
                break;
            case Mega::Kind::Forall:
                n.slot = svar_slot(m.var());
                n.a = mega(m.body());
                break;
        }
        out_.megas_.push_back(n);
        return static_cast<int>(out_.megas_.size()) - 1;
    }

    void statement(const Statement& s) {
        struct V {
            StatementCompiler& c;
            void operator()(const Inequality& i) const { c.out_.conclusion_ = c.mega(Mega::leaf(i)); }
            void operator()(const QuasiInequality& q) const {
                for (const auto& p : q.premises) c.out_.premises_.push_back(c.mega(Mega::leaf(p)));
                c.out_.conclusion_ = c.mega(Mega::leaf(q.conclusion));
            }
            void operator()(const Mega& m) const { c.out_.conclusion_ = c.mega(m); }
            void operator()(const UQInequality& u) const { c.out_.conclusion_ = c.mega(to_mega(u)); }
            void operator()(const QuasiUQInequality& q) const {
                for (const auto& p : q.premises) c.out_.premises_.push_back(c.mega(to_mega(p)));
                c.out_.conclusion_ = c.mega(to_mega(q.conclusion));
            }
        };
        std::visit(V{*this}, s);
        out_.svar_slots_ = svar_names_.size();
    }

private:
    static int index_of(const std::vector<std::string>& v, const std::string& name, const char* what) {
        auto it = std::find(v.begin(), v.end(), name);
        if (it == v.end()) throw MissingName(std::string(what) + " '" + name + "' is not in the vocabulary");
        return static_cast<int>(it - v.begin());
    }

    int svar_slot(const std::string& name) {
        auto it = std::find(svar_names_.begin(), svar_names_.end(), name);
        if (it != svar_names_.end()) return static_cast<int>(it - svar_names_.begin());
        svar_names_.push_back(name);
        return static_cast<int>(svar_names_.size()) - 1;
    }

    CompiledStatement& out_;
    std::vector<std::string> svar_names_;
};

CompiledStatement::CompiledStatement(const Statement& s, const Vocabulary& vocab) : vocab_(vocab) {
    StatementCompiler c(*this);
    c.statement(s);
    auto fv = free_svars(s);
    for (const auto& x : fv)
        if (std::find(vocab_.svars.begin(), vocab_.svars.end(), x) == vocab_.svars.end())
            throw MissingName("state variable '" + x + "' is free but not in the vocabulary");
}

namespace {

struct Evaluator {
    const KripkeFrame& fr;
    const std::vector<CompiledStatement::Node>& nodes;
    const std::vector<WorldSet>& props;
    const std::vector<World>& noms;
    std::vector<World>& env;
    WorldSet all;

    WorldSet f(int idx) {
        const auto& n = nodes[static_cast<std::size_t>(idx)];
        switch (n.op) {
            case Op::Prop: return props[n.slot] & all;
            case Op::Nom: return bit(noms[n.slot]);
            case Op::Svar: return bit(env[n.slot]);
            case Op::Bot: return 0;
            case Op::Top: return all;
            case Op::Not: return all & ~f(n.a);
            case Op::And: {
                WorldSet l = f(n.a);
                return l ? (l & f(n.b)) : 0;
            }
            case Op::Or: {
                WorldSet l = f(n.a);
                return l == all ? all : (l | f(n.b));
            }
            case Op::Imp: {
                WorldSet l = all & ~f(n.a);
                return l == all ? all : (l | f(n.b));
            }
            case Op::Box: return box_of(fr, f(n.a), false);
            case Op::Dia: return dia_of(fr, f(n.a), false);
            case Op::BBox: return box_of(fr, f(n.a), true);
            case Op::BDia: return dia_of(fr, f(n.a), true);
            case Op::AtNom: return (f(n.a) & bit(noms[n.slot])) ? all : 0;
            case Op::AtSvar: return (f(n.a) & bit(env[n.slot])) ? all : 0;
            case Op::GlobalA: return f(n.a) == all ? all : 0;
            case Op::GlobalE: return f(n.a) != 0 ? all : 0;
            case Op::Down: {
                World saved = env[n.slot];
                WorldSet out = 0;
                for (World w = 0; w < fr.size(); ++w) {
                    env[n.slot] = w;
                    if (f(n.a) & bit(w)) out |= bit(w);
                }
                env[n.slot] = saved;
                return out;
            }
            case Op::Forall:
            case Op::Exists: {
                bool universal = n.op == Op::Forall;
                World saved = env[n.slot];
                WorldSet out = universal ? all : 0;
                for (World w = 0; w < fr.size(); ++w) {
                    env[n.slot] = w;
                    WorldSet t = f(n.a);
                    out = universal ? (out & t) : (out | t);
                    if (universal ? out == 0 : out == all) break;
                }
                env[n.slot] = saved;
                return out;
            }
        }
        return 0;
    }
};

bool eval_mega(Evaluator& ev, const std::vector<CompiledStatement::MegaNode>& megas, int idx) {
    const auto& m = megas[static_cast<std::size_t>(idx)];
    switch (m.kind) {
        case Mega::Kind::Leaf: {
            WorldSet l = ev.f(m.a);
            if (l == 0) return true;
            return (l & ~ev.f(m.b)) == 0;
        }
        case Mega::Kind::Conj: return eval_mega(ev, megas, m.a) && eval_mega(ev, megas, m.b);
        case Mega::Kind::Forall: {
            World saved = ev.env[m.slot];
            bool ok = true;
            for (World w = 0; w < ev.fr.size() && ok; ++w) {
                ev.env[m.slot] = w;
                ok = eval_mega(ev, megas, m.a);
            }
            ev.env[m.slot] = saved;
            return ok;
        }
    }
    return false;
}

}  // namespace

bool CompiledStatement::holds(const KripkeFrame& frame, const std::vector<WorldSet>& props,
                              const std::vector<World>& noms, const std::vector<World>& svars) const {
    std::vector<World> env(std::max<std::size_t>(svar_slots_, 1), 0);
    for (std::size_t i = 0; i < svars.size(); ++i) env[i] = svars[i];
    Evaluator ev{frame, nodes_, props, noms, env, frame.all()};
    for (int p : premises_)
        if (!eval_mega(ev, megas_, p)) return true;
    return eval_mega(ev, megas_, conclusion_);
}

bool for_each_interpretation(std::size_t n, const Vocabulary& vocab,
                             const std::function<bool(const std::vector<WorldSet>&, const std::vector<World>&,
                                                      const std::vector<World>&)>& fn) {
    std::vector<WorldSet> props(vocab.props.size(), 0);
    std::vector<World> noms(vocab.noms.size(), 0);
    std::vector<World> svars(vocab.svars.size(), 0);
    const WorldSet limit = n >= 64 ? 0 : WorldSet{1} << n;
    for (;;) {
        if (!fn(props, noms, svars)) return false;
        // Odometer increment: svars, then nominals, then propositional variables.
        std::size_t k = 0;
        for (; k < svars.size(); ++k) {
            if (++svars[k] < n) break;
            svars[k] = 0;
        }
        if (k < svars.size()) continue;
        k = 0;
        for (; k < noms.size(); ++k) {
            if (++noms[k] < n) break;
            noms[k] = 0;
        }
        if (k < noms.size()) continue;
        k = 0;
        for (; k < props.size(); ++k) {
            if (++props[k] != limit) break;
            props[k] = 0;
        }
        if (k == props.size()) return true;
    }
}

bool frame_valid(const KripkeFrame& frame, const Statement& s, const Vocabulary& vocab, std::uint64_t budget) {
    std::uint64_t required = enumeration_size(frame.size(), vocab);
    if (required > budget) throw BudgetExceeded(required, budget);
    CompiledStatement cs(s, vocab);
    return for_each_interpretation(frame.size(), vocab,
                                   [&](const std::vector<WorldSet>& p, const std::vector<World>& i,
                                       const std::vector<World>& x) { return cs.holds(frame, p, i, x); });
}

bool frame_valid(const KripkeFrame& frame, const Statement& s, std::uint64_t budget) {
    return frame_valid(frame, s, vocabulary_of(s), budget);
}

}  // namespace alba
