#include "alba/fol.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace alba::fol {

FOFormula FOFormula::make(FOp op, std::string name, std::vector<Term> terms, std::vector<FOFormula> children) {
    return FOFormula(std::make_shared<const Node>(Node{op, std::move(name), std::move(terms), std::move(children)}));
}

bool operator==(const FOFormula& a, const FOFormula& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op() || a.name() != b.name() || a.terms() != b.terms() || a.arity() != b.arity()) return false;
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (!(a.child(i) == b.child(i))) return false;
    return true;
}

namespace fo {
FOFormula equal(Term a, Term b) { return FOFormula::make(FOp::Equal, "", {std::move(a), std::move(b)}, {}); }
FOFormula rel(Term a, Term b) { return FOFormula::make(FOp::Rel, "", {std::move(a), std::move(b)}, {}); }
FOFormula pred(std::string p, Term t) { return FOFormula::make(FOp::Pred, std::move(p), {std::move(t)}, {}); }
FOFormula bot() { return FOFormula::make(FOp::Bot, "", {}, {}); }
FOFormula top() { return FOFormula::make(FOp::Top, "", {}, {}); }
FOFormula neg(FOFormula a) { return FOFormula::make(FOp::Not, "", {}, {std::move(a)}); }
FOFormula conj(FOFormula a, FOFormula b) { return FOFormula::make(FOp::And, "", {}, {std::move(a), std::move(b)}); }
FOFormula disj(FOFormula a, FOFormula b) { return FOFormula::make(FOp::Or, "", {}, {std::move(a), std::move(b)}); }
FOFormula imp(FOFormula a, FOFormula b) { return FOFormula::make(FOp::Imp, "", {}, {std::move(a), std::move(b)}); }
FOFormula forall(std::string v, FOFormula a) { return FOFormula::make(FOp::Forall, std::move(v), {}, {std::move(a)}); }
FOFormula exists(std::string v, FOFormula a) { return FOFormula::make(FOp::Exists, std::move(v), {}, {std::move(a)}); }
}  // namespace fo

// ---------------------------------------------------------------------------
// Standard translation
// ---------------------------------------------------------------------------

namespace {

class Translator {
public:
    explicit Translator(std::set<std::string> avoid) : avoid_(std::move(avoid)) {}

    std::string fresh() {
        for (;;) {
            std::string cand = "y" + std::to_string(next_++);
            if (!avoid_.count(cand)) return cand;
        }
    }

    FOFormula st(const std::string& x, const Formula& f) {
        const Term tx = Term::var(x);
        switch (f.op()) {
            case Op::Prop: return fo::pred(f.name(), tx);
            case Op::Nom: return fo::equal(tx, Term::constant(f.name()));
            case Op::Svar: return fo::equal(tx, Term::var(f.name()));
            case Op::Bot: return fo::bot();
            case Op::Top: return fo::top();
            case Op::Not: return fo::neg(st(x, f.child(0)));
            case Op::And: return fo::conj(st(x, f.child(0)), st(x, f.child(1)));
            case Op::Or: return fo::disj(st(x, f.child(0)), st(x, f.child(1)));
            case Op::Imp: return fo::imp(st(x, f.child(0)), st(x, f.child(1)));
            case Op::Box: {
                std::string y = fresh();
                return fo::forall(y, fo::imp(fo::rel(tx, Term::var(y)), st(y, f.child(0))));
            }
            case Op::Dia: {
                std::string y = fresh();
                return fo::exists(y, fo::conj(fo::rel(tx, Term::var(y)), st(y, f.child(0))));
            }
            case Op::BBox: {
                std::string y = fresh();
                return fo::forall(y, fo::imp(fo::rel(Term::var(y), tx), st(y, f.child(0))));
            }
            case Op::BDia: {
                std::string y = fresh();
                return fo::exists(y, fo::conj(fo::rel(Term::var(y), tx), st(y, f.child(0))));
            }
            case Op::AtNom: {
                std::string y = fresh();
                return fo::exists(y, fo::conj(fo::equal(Term::var(y), Term::constant(f.name())), st(y, f.child(0))));
            }
            case Op::AtSvar: {
                std::string y = fresh();
                return fo::exists(y, fo::conj(fo::equal(Term::var(y), Term::var(f.name())), st(y, f.child(0))));
            }
            case Op::Down:
                return fo::exists(f.name(), fo::conj(fo::equal(Term::var(f.name()), tx), st(x, f.child(0))));
            case Op::GlobalA: {
                std::string y = fresh();
                return fo::forall(y, st(y, f.child(0)));
            }
            case Op::GlobalE: {
                std::string y = fresh();
                return fo::exists(y, st(y, f.child(0)));
            }
            case Op::Forall: return fo::forall(f.name(), st(x, f.child(0)));
            case Op::Exists: return fo::exists(f.name(), st(x, f.child(0)));
        }
        throw std::logic_error("unknown connective");
    }

    FOFormula ineq(const std::string& x, const Inequality& i) {
        return fo::forall(x, fo::imp(st(x, i.lhs), st(x, i.rhs)));
    }

    FOFormula mega(const std::string& x, const Mega& m) {
        switch (m.kind()) {
            case Mega::Kind::Leaf: return ineq(x, m.ineq());
            case Mega::Kind::Conj: return fo::conj(mega(x, m.left()), mega(x, m.right()));
            case Mega::Kind::Forall: return fo::forall(m.var(), mega(x, m.body()));
        }
        throw std::logic_error("unknown mega-inequality");
    }

    FOFormula premises_imply(const std::vector<FOFormula>& prem, FOFormula concl) {
        if (prem.empty()) return concl;
        FOFormula acc = prem.front();
        for (std::size_t i = 1; i < prem.size(); ++i) acc = fo::conj(acc, prem[i]);
        return fo::imp(acc, std::move(concl));
    }

private:
    std::set<std::string> avoid_;
    std::size_t next_ = 1;
};

std::string pick_world_var(const std::set<std::string>& avoid) {
    if (!avoid.count("x")) return "x";
    for (std::size_t k = 1;; ++k) {
        std::string cand = "x" + std::to_string(k);
        if (!avoid.count(cand)) return cand;
    }
}

}  // namespace

FOFormula st_formula(const std::string& x, const Formula& f) {
    std::set<std::string> avoid = names_of(f).all();
    avoid.insert(x);
    Translator t(std::move(avoid));
    return t.st(x, f);
}

FOFormula st_statement(const Statement& s) {
    std::set<std::string> avoid = names_of(s).all();
    std::string x = pick_world_var(avoid);
    avoid.insert(x);
    Translator t(std::move(avoid));
    struct V {
        Translator& t;
        const std::string& x;
        FOFormula operator()(const Inequality& i) const { return t.ineq(x, i); }
        FOFormula operator()(const QuasiInequality& q) const {
            std::vector<FOFormula> prem;
            for (const auto& p : q.premises) prem.push_back(t.ineq(x, p));
            return t.premises_imply(prem, t.ineq(x, q.conclusion));
        }
        FOFormula operator()(const Mega& m) const { return t.mega(x, m); }
        FOFormula operator()(const UQInequality& u) const { return t.mega(x, to_mega(u)); }
        FOFormula operator()(const QuasiUQInequality& q) const {
            std::vector<FOFormula> prem;
            for (const auto& p : q.premises) prem.push_back(t.mega(x, to_mega(p)));
            return t.premises_imply(prem, t.mega(x, to_mega(q.conclusion)));
        }
    };
    return std::visit(V{t, x}, s);
}

// ---------------------------------------------------------------------------
// Free symbols and closure
// ---------------------------------------------------------------------------

namespace {

struct SymbolWalk {
    // Interleaved first-use order of free variables and constants.
    std::vector<Term> order;
    std::set<std::string> all_vars;  // every variable name, bound or free

    void note(const Term& t, const std::vector<std::string>& bound) {
        if (t.kind == Term::Kind::Var) {
            all_vars.insert(t.name);
            if (std::find(bound.begin(), bound.end(), t.name) != bound.end()) return;
        }
        if (std::find(order.begin(), order.end(), t) == order.end()) order.push_back(t);
    }

    void walk(const FOFormula& f, std::vector<std::string>& bound) {
        for (const auto& t : f.terms()) note(t, bound);
        if (f.op() == FOp::Forall || f.op() == FOp::Exists) {
            all_vars.insert(f.name());
            bound.push_back(f.name());
            walk(f.child(0), bound);
            bound.pop_back();
            return;
        }
        for (std::size_t i = 0; i < f.arity(); ++i) walk(f.child(i), bound);
    }
};

FOFormula rename_constants(const FOFormula& f, const std::map<std::string, std::string>& to_var) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        if (t.kind == Term::Kind::Const) {
            auto it = to_var.find(t.name);
            terms.push_back(it == to_var.end() ? t : Term::var(it->second));
        } else {
            terms.push_back(t);
        }
    }
    std::vector<FOFormula> kids;
    for (std::size_t i = 0; i < f.arity(); ++i) kids.push_back(rename_constants(f.child(i), to_var));
    return FOFormula::make(f.op(), f.name(), std::move(terms), std::move(kids));
}

}  // namespace

Symbols free_symbols(const FOFormula& f) {
    SymbolWalk w;
    std::vector<std::string> bound;
    w.walk(f, bound);
    Symbols s;
    for (const auto& t : w.order) (t.kind == Term::Kind::Var ? s.free_vars : s.constants).push_back(t.name);
    return s;
}

bool is_sentence(const FOFormula& f) {
    auto s = free_symbols(f);
    return s.free_vars.empty() && s.constants.empty();
}

FOFormula universal_closure(const FOFormula& f, const std::vector<std::string>& leading) {
    SymbolWalk w;
    std::vector<std::string> bound;
    w.walk(f, bound);
    std::set<std::string> taken = w.all_vars;
    std::map<std::string, std::string> to_var;
    for (const auto& t : w.order) {
        if (t.kind != Term::Kind::Const) continue;
        std::string name = t.name;
        for (std::size_t k = 1; taken.count(name); ++k) name = t.name + "_" + std::to_string(k);
        taken.insert(name);
        to_var[t.name] = name;
    }
    FOFormula body = rename_constants(f, to_var);

    std::vector<std::string> order;
    for (const auto& c : leading)
        if (to_var.count(c)) order.push_back(to_var[c]);
    for (const auto& t : w.order) {
        std::string v = t.kind == Term::Kind::Const ? to_var[t.name] : t.name;
        if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) body = fo::forall(*it, body);
    return body;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

template <typename Map>
World lookup(const Map& m, const std::string& key, const char* what) {
    auto it = m.find(key);
    if (it == m.end()) throw MissingName(std::string(what) + " '" + key + "' is not interpreted");
    return it->second;
}

World term_value(const Interpretation& in, const Term& t) {
    return t.kind == Term::Kind::Var ? lookup(in.vars, t.name, "variable") : lookup(in.constants, t.name, "constant");
}

bool eval(const KripkeFrame& fr, Interpretation& in, const FOFormula& f) {
    switch (f.op()) {
        case FOp::Equal: return term_value(in, f.terms()[0]) == term_value(in, f.terms()[1]);
        case FOp::Rel: return fr.has_edge(term_value(in, f.terms()[0]), term_value(in, f.terms()[1]));
        case FOp::Pred: {
            auto it = in.preds.find(f.name());
            if (it == in.preds.end()) throw MissingName("predicate P_" + f.name() + " is not interpreted");
            return (it->second >> term_value(in, f.terms()[0])) & 1U;
        }
        case FOp::Bot: return false;
        case FOp::Top: return true;
        case FOp::Not: return !eval(fr, in, f.child(0));
        case FOp::And: return eval(fr, in, f.child(0)) && eval(fr, in, f.child(1));
        case FOp::Or: return eval(fr, in, f.child(0)) || eval(fr, in, f.child(1));
        case FOp::Imp: return !eval(fr, in, f.child(0)) || eval(fr, in, f.child(1));
        case FOp::Forall:
        case FOp::Exists: {
            const bool universal = f.op() == FOp::Forall;
            auto prev = in.vars.find(f.name());
            std::optional<World> saved;
            if (prev != in.vars.end()) saved = prev->second;
            bool result = universal;
            for (World w = 0; w < fr.size(); ++w) {
                in.vars[f.name()] = w;
                bool r = eval(fr, in, f.child(0));
                if (universal && !r) {
                    result = false;
                    break;
                }
                if (!universal && r) {
                    result = true;
                    break;
                }
            }
            if (saved) in.vars[f.name()] = *saved;
            else in.vars.erase(f.name());
            return result;
        }
    }
    return false;
}

}  // namespace

bool fo_eval(const KripkeFrame& frame, const Interpretation& interp, const FOFormula& f) {
    Interpretation in = interp;
    return eval(frame, in, f);
}

CompiledFO::CompiledFO(const FOFormula& f) {
    root_ = compile(f);
    auto fs = free_symbols(f);
    free_vars_.insert(fs.free_vars.begin(), fs.free_vars.end());
}

int CompiledFO::term_slot(const Term& t) {
    auto it = std::find(term_slots_.begin(), term_slots_.end(), t);
    if (it != term_slots_.end()) return static_cast<int>(it - term_slots_.begin());
    term_slots_.push_back(t);
    return static_cast<int>(term_slots_.size()) - 1;
}

int CompiledFO::compile(const FOFormula& f) {
    Node n{f.op(), -1, -1, -1, -1, -1};
    if (!f.terms().empty()) n.t0 = term_slot(f.terms()[0]);
    if (f.terms().size() > 1) n.t1 = term_slot(f.terms()[1]);
    if (f.op() == FOp::Pred) {
        auto it = std::find(preds_.begin(), preds_.end(), f.name());
        if (it == preds_.end()) {
            preds_.push_back(f.name());
            n.slot = static_cast<int>(preds_.size()) - 1;
        } else {
            n.slot = static_cast<int>(it - preds_.begin());
        }
    }
    if (f.op() == FOp::Forall || f.op() == FOp::Exists) n.slot = term_slot(Term::var(f.name()));
    if (f.arity() >= 1) n.a = compile(f.child(0));
    if (f.arity() == 2) n.b = compile(f.child(1));
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
}

namespace {

struct FastEval {
    const KripkeFrame& fr;
    const std::vector<CompiledFO::Node>* nodes;
    std::vector<WorldSet> preds;
    std::vector<World> env;

    bool run(int idx) {
        const auto& n = (*nodes)[static_cast<std::size_t>(idx)];
        switch (n.op) {
            case FOp::Equal: return env[n.t0] == env[n.t1];
            case FOp::Rel: return fr.has_edge(env[n.t0], env[n.t1]);
            case FOp::Pred: return (preds[n.slot] >> env[n.t0]) & 1U;
            case FOp::Bot: return false;
            case FOp::Top: return true;
            case FOp::Not: return !run(n.a);
            case FOp::And: return run(n.a) && run(n.b);
            case FOp::Or: return run(n.a) || run(n.b);
            case FOp::Imp: return !run(n.a) || run(n.b);
            case FOp::Forall:
            case FOp::Exists: {
                const bool universal = n.op == FOp::Forall;
                World saved = env[n.slot];
                bool result = universal;
                for (World w = 0; w < fr.size(); ++w) {
                    env[n.slot] = w;
                    if (run(n.a) != universal) {
                        result = !universal;
                        break;
                    }
                }
                env[n.slot] = saved;
                return result;
            }
        }
        return false;
    }
};

}  // namespace

bool CompiledFO::eval(const KripkeFrame& frame, const Interpretation& interp) const {
    FastEval ev{frame, &nodes_, {}, {}};
    for (const auto& p : preds_) {
        auto it = interp.preds.find(p);
        if (it == interp.preds.end()) throw MissingName("predicate P_" + p + " is not interpreted");
        ev.preds.push_back(it->second);
    }
    ev.env.assign(term_slots_.size(), 0);
    for (std::size_t i = 0; i < term_slots_.size(); ++i) {
        const Term& t = term_slots_[i];
        if (t.kind == Term::Kind::Const) {
            ev.env[i] = lookup(interp.constants, t.name, "constant");
        } else if (free_vars_.count(t.name)) {
            ev.env[i] = lookup(interp.vars, t.name, "variable");
        }
    }
    return ev.run(root_);
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

std::string term_str(const Term& t) { return t.name; }

constexpr int kImp = 0, kOr = 1, kAnd = 2, kUnary = 3;

void print(const FOFormula& f, int min_prec, bool tail_ok, std::ostringstream& out) {
    auto binary = [&](const char* sym, int prec, bool right_assoc) {
        bool parens = prec < min_prec;
        bool tail = parens ? true : tail_ok;
        if (parens) out << "(";
        print(f.child(0), right_assoc ? prec + 1 : prec, false, out);
        out << sym;
        print(f.child(1), right_assoc ? prec : prec + 1, tail, out);
        if (parens) out << ")";
    };
    switch (f.op()) {
        case FOp::Equal:
            if (min_prec >= kUnary) out << "(";
            out << term_str(f.terms()[0]) << " = " << term_str(f.terms()[1]);
            if (min_prec >= kUnary) out << ")";
            return;
        case FOp::Rel: out << "R(" << term_str(f.terms()[0]) << "," << term_str(f.terms()[1]) << ")"; return;
        case FOp::Pred: out << "P_" << f.name() << "(" << term_str(f.terms()[0]) << ")"; return;
        case FOp::Bot: out << "F"; return;
        case FOp::Top: out << "T"; return;
        case FOp::Not:
            out << "~";
            print(f.child(0), kUnary, tail_ok, out);
            return;
        case FOp::And: binary(" /\\ ", kAnd, false); return;
        case FOp::Or: binary(" \\/ ", kOr, false); return;
        case FOp::Imp: binary(" -> ", kImp, true); return;
        case FOp::Forall:
        case FOp::Exists:
            if (!tail_ok) out << "(";
            out << (f.op() == FOp::Forall ? "forall " : "exists ") << f.name() << ". ";
            print(f.child(0), kImp, true, out);
            if (!tail_ok) out << ")";
            return;
    }
}

void sexpr(const FOFormula& f, std::ostringstream& out) {
    switch (f.op()) {
        case FOp::Equal: out << "(= " << f.terms()[0].name << " " << f.terms()[1].name << ")"; return;
        case FOp::Rel: out << "(R " << f.terms()[0].name << " " << f.terms()[1].name << ")"; return;
        case FOp::Pred: out << "(P " << f.name() << " " << f.terms()[0].name << ")"; return;
        case FOp::Bot: out << "false"; return;
        case FOp::Top: out << "true"; return;
        default: break;
    }
    const char* head = "";
    switch (f.op()) {
        case FOp::Not: head = "not"; break;
        case FOp::And: head = "and"; break;
        case FOp::Or: head = "or"; break;
        case FOp::Imp: head = "=>"; break;
        case FOp::Forall: head = "forall"; break;
        case FOp::Exists: head = "exists"; break;
        default: break;
    }
    out << "(" << head;
    if (f.op() == FOp::Forall || f.op() == FOp::Exists) out << " " << f.name();
    for (std::size_t i = 0; i < f.arity(); ++i) {
        out << " ";
        sexpr(f.child(i), out);
    }
    out << ")";
}

}  // namespace

std::string to_string(const FOFormula& f) {
    std::ostringstream out;
    print(f, kImp, true, out);
    return out.str();
}

std::string to_sexpr(const FOFormula& f) {
    std::ostringstream out;
    sexpr(f, out);
    return out.str();
}

}  // namespace alba::fol
