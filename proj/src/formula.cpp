#include "alba/formula.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace alba {

const char* op_name(Op op) {
    switch (op) {
        case Op::Prop: return "prop";
        case Op::Nom: return "nom";
        case Op::Svar: return "svar";
        case Op::Bot: return "bot";
        case Op::Top: return "top";
        case Op::Not: return "not";
        case Op::And: return "and";
        case Op::Or: return "or";
        case Op::Imp: return "imp";
        case Op::Box: return "box";
        case Op::Dia: return "dia";
        case Op::AtNom: return "atnom";
        case Op::AtSvar: return "atsvar";
        case Op::Down: return "down";
        case Op::BBox: return "bbox";
        case Op::BDia: return "bdia";
        case Op::GlobalA: return "A";
        case Op::GlobalE: return "E";
        case Op::Forall: return "forall";
        case Op::Exists: return "exists";
    }
    return "?";
}

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t expected_arity(Op op) {
    switch (op) {
        case Op::Prop:
        case Op::Nom:
        case Op::Svar:
        case Op::Bot:
        case Op::Top: return 0;
        case Op::And:
        case Op::Or:
        case Op::Imp: return 2;
        default: return 1;
    }
}

bool needs_name(Op op) {
    switch (op) {
        case Op::Prop:
        case Op::Nom:
        case Op::Svar:
        case Op::AtNom:
        case Op::AtSvar:
        case Op::Down:
        case Op::Forall:
        case Op::Exists: return true;
        default: return false;
    }
}

}  // namespace

Formula Formula::make(Op op, std::string name, std::vector<Formula> children) {
    if (children.size() != expected_arity(op)) throw std::invalid_argument("wrong arity for connective");
    if (needs_name(op) != !name.empty()) throw std::invalid_argument("connective name mismatch");
    std::size_t h = combine(static_cast<std::size_t>(op) + 1, std::hash<std::string>{}(name));
    std::size_t sz = 1;
    for (const auto& c : children) {
        h = combine(h, c.hash());
        sz += c.size();
    }
    auto node = std::make_shared<const Node>(Node{op, std::move(name), std::move(children), h, sz});
    return Formula(std::move(node));
}

bool Formula::is_atom() const {
    switch (op()) {
        case Op::Prop:
        case Op::Nom:
        case Op::Svar:
        case Op::Bot:
        case Op::Top: return true;
        default: return false;
    }
}

std::size_t Formula::size() const { return node_->size; }

std::size_t Formula::depth() const {
    std::size_t d = 0;
    for (const auto& c : children()) d = std::max(d, c.depth());
    return d + 1;
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash || a.node_->op != b.node_->op || a.node_->size != b.node_->size) return false;
    if (a.node_->name != b.node_->name) return false;
    const auto& ca = a.node_->children;
    const auto& cb = b.node_->children;
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (!(ca[i] == cb[i])) return false;
    return true;
}

namespace mk {
Formula prop(std::string name) { return Formula::make(Op::Prop, std::move(name), {}); }
Formula nom(std::string name) { return Formula::make(Op::Nom, std::move(name), {}); }
Formula svar(std::string name) { return Formula::make(Op::Svar, std::move(name), {}); }
Formula bot() {
    static const Formula f = Formula::make(Op::Bot, "", {});
    return f;
}
Formula top() {
    static const Formula f = Formula::make(Op::Top, "", {});
    return f;
}
Formula neg(Formula a) { return Formula::make(Op::Not, "", {std::move(a)}); }
Formula conj(Formula a, Formula b) { return Formula::make(Op::And, "", {std::move(a), std::move(b)}); }
Formula disj(Formula a, Formula b) { return Formula::make(Op::Or, "", {std::move(a), std::move(b)}); }
Formula imp(Formula a, Formula b) { return Formula::make(Op::Imp, "", {std::move(a), std::move(b)}); }
Formula box(Formula a) { return Formula::make(Op::Box, "", {std::move(a)}); }
Formula dia(Formula a) { return Formula::make(Op::Dia, "", {std::move(a)}); }
Formula at_nom(std::string nominal, Formula a) { return Formula::make(Op::AtNom, std::move(nominal), {std::move(a)}); }
Formula at_svar(std::string var, Formula a) { return Formula::make(Op::AtSvar, std::move(var), {std::move(a)}); }
Formula at(const Formula& index, Formula a) {
    if (index.op() == Op::Nom) return at_nom(index.name(), std::move(a));
    if (index.op() == Op::Svar) return at_svar(index.name(), std::move(a));
    throw std::invalid_argument("@ index must be a nominal or a state variable");
}
Formula down(std::string var, Formula a) { return Formula::make(Op::Down, std::move(var), {std::move(a)}); }
Formula bbox(Formula a) { return Formula::make(Op::BBox, "", {std::move(a)}); }
Formula bdia(Formula a) { return Formula::make(Op::BDia, "", {std::move(a)}); }
Formula glob_a(Formula a) { return Formula::make(Op::GlobalA, "", {std::move(a)}); }
Formula glob_e(Formula a) { return Formula::make(Op::GlobalE, "", {std::move(a)}); }
Formula forall(std::string var, Formula a) { return Formula::make(Op::Forall, std::move(var), {std::move(a)}); }
Formula exists(std::string var, Formula a) { return Formula::make(Op::Exists, std::move(var), {std::move(a)}); }

Formula big_disj(const std::vector<Formula>& terms) {
    if (terms.empty()) return bot();
    Formula acc = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) acc = disj(acc, terms[i]);
    return acc;
}

Formula big_conj(const std::vector<Formula>& terms) {
    if (terms.empty()) return top();
    Formula acc = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) acc = conj(acc, terms[i]);
    return acc;
}
}  // namespace mk

// ---------------------------------------------------------------------------
// Mega-inequalities
// ---------------------------------------------------------------------------

Mega Mega::leaf(Inequality ineq) {
    return Mega(std::make_shared<const Node>(Node{Kind::Leaf, std::move(ineq), "", {}}));
}

Mega Mega::conj(Mega a, Mega b) {
    return Mega(std::make_shared<const Node>(Node{Kind::Conj, std::nullopt, "", {std::move(a), std::move(b)}}));
}

Mega Mega::forall(std::string var, Mega body) {
    if (var.empty()) throw std::invalid_argument("quantified variable must be named");
    return Mega(std::make_shared<const Node>(Node{Kind::Forall, std::nullopt, std::move(var), {std::move(body)}}));
}

const Inequality& Mega::ineq() const {
    if (kind() != Kind::Leaf) throw std::logic_error("not a leaf mega-inequality");
    return *node_->ineq;
}
const Mega& Mega::left() const {
    if (kind() != Kind::Conj) throw std::logic_error("not a meta-conjunction");
    return node_->children[0];
}
const Mega& Mega::right() const {
    if (kind() != Kind::Conj) throw std::logic_error("not a meta-conjunction");
    return node_->children[1];
}
const Mega& Mega::body() const {
    if (kind() != Kind::Forall) throw std::logic_error("not a quantified mega-inequality");
    return node_->children[0];
}
const std::string& Mega::var() const {
    if (kind() != Kind::Forall) throw std::logic_error("not a quantified mega-inequality");
    return node_->var;
}

bool operator==(const Mega& a, const Mega& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Mega::Kind::Leaf: return a.ineq() == b.ineq();
        case Mega::Kind::Conj: return a.left() == b.left() && a.right() == b.right();
        case Mega::Kind::Forall: return a.var() == b.var() && a.body() == b.body();
    }
    return false;
}

std::optional<UQInequality> as_uq(const Mega& m) {
    UQInequality out{{}, {mk::top(), mk::top()}};
    const Mega* cur = &m;
    while (cur->kind() == Mega::Kind::Forall) {
        out.bound.push_back(cur->var());
        cur = &cur->body();
    }
    if (cur->kind() != Mega::Kind::Leaf) return std::nullopt;
    out.body = cur->ineq();
    return out;
}

Mega to_mega(const UQInequality& uq) {
    Mega m = Mega::leaf(uq.body);
    for (auto it = uq.bound.rbegin(); it != uq.bound.rend(); ++it) m = Mega::forall(*it, m);
    return m;
}

Mega mega_conj(const std::vector<Mega>& items) {
    if (items.empty()) throw std::invalid_argument("empty meta-conjunction");
    Mega acc = items.back();
    for (std::size_t i = items.size() - 1; i-- > 0;) acc = Mega::conj(items[i], acc);
    return acc;
}

// ---------------------------------------------------------------------------
// Names
// ---------------------------------------------------------------------------

std::set<std::string> Names::all() const {
    std::set<std::string> out = props;
    out.insert(noms.begin(), noms.end());
    out.insert(svars.begin(), svars.end());
    return out;
}

void Names::merge(const Names& other) {
    props.insert(other.props.begin(), other.props.end());
    noms.insert(other.noms.begin(), other.noms.end());
    svars.insert(other.svars.begin(), other.svars.end());
}

namespace {

void collect_names(const Formula& f, Names& out) {
    switch (f.op()) {
        case Op::Prop: out.props.insert(f.name()); return;
        case Op::Nom:
        case Op::AtNom: out.noms.insert(f.name()); break;
        case Op::Svar:
        case Op::AtSvar:
        case Op::Down:
        case Op::Forall:
        case Op::Exists: out.svars.insert(f.name()); break;
        default: break;
    }
    for (const auto& c : f.children()) collect_names(c, out);
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (f.op()) {
        case Op::Svar:
        case Op::AtSvar:
            if (!bound.count(f.name())) out.insert(f.name());
            break;
        case Op::Down:
        case Op::Forall:
        case Op::Exists: {
            bool fresh = bound.insert(f.name()).second;
            collect_free(f.child(0), bound, out);
            if (fresh) bound.erase(f.name());
            return;
        }
        default: break;
    }
    for (const auto& c : f.children()) collect_free(c, bound, out);
}

void collect_free(const Mega& m, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (m.kind()) {
        case Mega::Kind::Leaf:
            collect_free(m.ineq().lhs, bound, out);
            collect_free(m.ineq().rhs, bound, out);
            return;
        case Mega::Kind::Conj:
            collect_free(m.left(), bound, out);
            collect_free(m.right(), bound, out);
            return;
        case Mega::Kind::Forall: {
            bool fresh = bound.insert(m.var()).second;
            collect_free(m.body(), bound, out);
            if (fresh) bound.erase(m.var());
            return;
        }
    }
}

}  // namespace

Names names_of(const Formula& f) {
    Names n;
    collect_names(f, n);
    return n;
}

Names names_of(const Inequality& ineq) {
    Names n;
    collect_names(ineq.lhs, n);
    collect_names(ineq.rhs, n);
    return n;
}

Names names_of(const Mega& m) {
    switch (m.kind()) {
        case Mega::Kind::Leaf: return names_of(m.ineq());
        case Mega::Kind::Conj: {
            Names n = names_of(m.left());
            n.merge(names_of(m.right()));
            return n;
        }
        case Mega::Kind::Forall: {
            Names n = names_of(m.body());
            n.svars.insert(m.var());
            return n;
        }
    }
    return {};
}

Names names_of(const Statement& s) {
    struct V {
        Names operator()(const Inequality& i) const { return names_of(i); }
        Names operator()(const QuasiInequality& q) const {
            Names n = names_of(q.conclusion);
            for (const auto& p : q.premises) n.merge(names_of(p));
            return n;
        }
        Names operator()(const Mega& m) const { return names_of(m); }
        Names operator()(const UQInequality& u) const { return names_of(to_mega(u)); }
        Names operator()(const QuasiUQInequality& q) const {
            Names n = names_of(to_mega(q.conclusion));
            for (const auto& p : q.premises) n.merge(names_of(to_mega(p)));
            return n;
        }
    };
    return std::visit(V{}, s);
}

std::set<std::string> free_svars(const Formula& f) {
    std::set<std::string> bound, out;
    collect_free(f, bound, out);
    return out;
}

std::set<std::string> free_svars(const Mega& m) {
    std::set<std::string> bound, out;
    collect_free(m, bound, out);
    return out;
}

std::set<std::string> free_svars(const Statement& s) {
    struct V {
        std::set<std::string> operator()(const Inequality& i) const { return free_svars(Mega::leaf(i)); }
        std::set<std::string> operator()(const QuasiInequality& q) const {
            auto out = (*this)(q.conclusion);
            for (const auto& p : q.premises) {
                auto f = (*this)(p);
                out.insert(f.begin(), f.end());
            }
            return out;
        }
        std::set<std::string> operator()(const Mega& m) const { return free_svars(m); }
        std::set<std::string> operator()(const UQInequality& u) const { return free_svars(to_mega(u)); }
        std::set<std::string> operator()(const QuasiUQInequality& q) const {
            auto out = free_svars(to_mega(q.conclusion));
            for (const auto& p : q.premises) {
                auto f = free_svars(to_mega(p));
                out.insert(f.begin(), f.end());
            }
            return out;
        }
    };
    return std::visit(V{}, s);
}

std::vector<std::string> props_in_order(const Formula& f) {
    std::vector<std::string> out;
    std::function<void(const Formula&)> walk = [&](const Formula& g) {
        if (g.op() == Op::Prop) {
            if (std::find(out.begin(), out.end(), g.name()) == out.end()) out.push_back(g.name());
            return;
        }
        for (const auto& c : g.children()) walk(c);
    };
    walk(f);
    return out;
}

bool is_base(const Formula& f) {
    switch (f.op()) {
        case Op::BBox:
        case Op::BDia:
        case Op::GlobalA:
        case Op::GlobalE:
        case Op::Forall:
        case Op::Exists: return false;
        default: break;
    }
    return std::all_of(f.children().begin(), f.children().end(), [](const Formula& c) { return is_base(c); });
}

bool contains_prop(const Formula& f, const std::string& p) {
    if (f.op() == Op::Prop) return f.name() == p;
    return std::any_of(f.children().begin(), f.children().end(),
                       [&](const Formula& c) { return contains_prop(c, p); });
}

bool contains_prop(const Mega& m, const std::string& p) {
    switch (m.kind()) {
        case Mega::Kind::Leaf: return contains_prop(m.ineq().lhs, p) || contains_prop(m.ineq().rhs, p);
        case Mega::Kind::Conj: return contains_prop(m.left(), p) || contains_prop(m.right(), p);
        case Mega::Kind::Forall: return contains_prop(m.body(), p);
    }
    return false;
}

bool is_pure(const Formula& f) {
    if (f.op() == Op::Prop) return false;
    return std::all_of(f.children().begin(), f.children().end(), [](const Formula& c) { return is_pure(c); });
}

bool is_pure(const Inequality& ineq) { return is_pure(ineq.lhs) && is_pure(ineq.rhs); }

bool is_pure(const Mega& m) {
    switch (m.kind()) {
        case Mega::Kind::Leaf: return is_pure(m.ineq());
        case Mega::Kind::Conj: return is_pure(m.left()) && is_pure(m.right());
        case Mega::Kind::Forall: return is_pure(m.body());
    }
    return true;
}

// ---------------------------------------------------------------------------
// Substitution
// ---------------------------------------------------------------------------

namespace {

std::string rename_away(const std::string& base, const std::set<std::string>& avoid) {
    for (std::size_t k = 1;; ++k) {
        std::string cand = "z" + std::to_string(k);
        if (cand != base && !avoid.count(cand)) return cand;
    }
}

Formula rebuild(const Formula& f, std::vector<Formula> kids) {
    bool same = true;
    for (std::size_t i = 0; i < kids.size(); ++i)
        if (!kids[i].same_node(f.child(i))) same = false;
    if (same) return f;
    return Formula::make(f.op(), f.name(), std::move(kids));
}

Formula subst_svar_impl(const Formula& f, const std::string& var, const Formula& term, const std::set<std::string>& avoid);

Formula subst_binder(const Formula& f, const std::string& var, const Formula& term, const std::set<std::string>& avoid) {
    const std::string& bound = f.name();
    if (bound == var) return f;
    const auto fv = free_svars(f.child(0));
    if (!fv.count(var)) return f;
    if (term.op() == Op::Svar && term.name() == bound) {
        std::set<std::string> block = avoid;
        auto all = names_of(f).all();
        block.insert(all.begin(), all.end());
        block.insert(term.name());
        block.insert(var);
        std::string fresh = rename_away(bound, block);
        Formula body = subst_svar_impl(f.child(0), bound, mk::svar(fresh), block);
        body = subst_svar_impl(body, var, term, block);
        return Formula::make(f.op(), fresh, {body});
    }
    return Formula::make(f.op(), bound, {subst_svar_impl(f.child(0), var, term, avoid)});
}

Formula subst_svar_impl(const Formula& f, const std::string& var, const Formula& term, const std::set<std::string>& avoid) {
    switch (f.op()) {
        case Op::Svar: return f.name() == var ? term : f;
        case Op::AtSvar:
            if (f.name() == var) return mk::at(term, subst_svar_impl(f.child(0), var, term, avoid));
            break;
        case Op::Down:
        case Op::Forall:
        case Op::Exists: return subst_binder(f, var, term, avoid);
        case Op::Prop:
        case Op::Nom:
        case Op::Bot:
        case Op::Top: return f;
        default: break;
    }
    std::vector<Formula> kids;
    kids.reserve(f.arity());
    for (const auto& c : f.children()) kids.push_back(subst_svar_impl(c, var, term, avoid));
    return rebuild(f, std::move(kids));
}

Formula subst_prop_impl(const Formula& f, const std::string& p, const Formula& repl, const std::set<std::string>& repl_free) {
    switch (f.op()) {
        case Op::Prop: return f.name() == p ? repl : f;
        case Op::Nom:
        case Op::Svar:
        case Op::Bot:
        case Op::Top: return f;
        case Op::Down:
        case Op::Forall:
        case Op::Exists:
            if (repl_free.count(f.name()) && contains_prop(f.child(0), p)) {
                std::set<std::string> block = repl_free;
                auto all = names_of(f).all();
                block.insert(all.begin(), all.end());
                std::string fresh = rename_away(f.name(), block);
                Formula body = substitute_svar(f.child(0), f.name(), mk::svar(fresh));
                return Formula::make(f.op(), fresh, {subst_prop_impl(body, p, repl, repl_free)});
            }
            break;
        default: break;
    }
    std::vector<Formula> kids;
    kids.reserve(f.arity());
    for (const auto& c : f.children()) kids.push_back(subst_prop_impl(c, p, repl, repl_free));
    return rebuild(f, std::move(kids));
}

}  // namespace

Formula substitute_svar(const Formula& f, const std::string& var, const Formula& term) {
    if (!term.is_literal()) throw std::invalid_argument("state variables can only be replaced by nominals or state variables");
    return subst_svar_impl(f, var, term, {});
}

Formula substitute_prop(const Formula& f, const std::string& p, const Formula& replacement) {
    if (!contains_prop(f, p)) return f;
    return subst_prop_impl(f, p, replacement, free_svars(replacement));
}

// ---------------------------------------------------------------------------
// Polarity
// ---------------------------------------------------------------------------

const char* polarity_name(Polarity p) {
    switch (p) {
        case Polarity::Positive: return "positive";
        case Polarity::Negative: return "negative";
        case Polarity::Mixed: return "mixed";
        case Polarity::Absent: return "absent";
    }
    return "?";
}

namespace {

void scan_polarity(const Formula& f, const std::string& p, bool positive, bool& pos, bool& neg) {
    switch (f.op()) {
        case Op::Prop:
            if (f.name() == p) (positive ? pos : neg) = true;
            return;
        case Op::Not: scan_polarity(f.child(0), p, !positive, pos, neg); return;
        case Op::Imp:
            scan_polarity(f.child(0), p, !positive, pos, neg);
            scan_polarity(f.child(1), p, positive, pos, neg);
            return;
        default:
            for (const auto& c : f.children()) scan_polarity(c, p, positive, pos, neg);
    }
}

}  // namespace

Polarity polarity(const Formula& f, const std::string& p) {
    bool pos = false, neg = false;
    scan_polarity(f, p, true, pos, neg);
    if (pos && neg) return Polarity::Mixed;
    if (pos) return Polarity::Positive;
    if (neg) return Polarity::Negative;
    return Polarity::Absent;
}

bool is_positive_in(const Formula& f, const std::string& p) {
    auto pol = polarity(f, p);
    return pol == Polarity::Positive || pol == Polarity::Absent;
}

bool is_negative_in(const Formula& f, const std::string& p) {
    auto pol = polarity(f, p);
    return pol == Polarity::Negative || pol == Polarity::Absent;
}

// ---------------------------------------------------------------------------
// Fresh names
// ---------------------------------------------------------------------------

FreshNames::FreshNames(std::set<std::string> reserved) : reserved_(std::move(reserved)) {}

std::string FreshNames::nominal() {
    for (;;) {
        std::string cand = "i" + std::to_string(next_nominal_++);
        if (reserved_.insert(cand).second) {
            issued_nominals_.push_back(cand);
            return cand;
        }
    }
}

std::string FreshNames::state_variable() {
    for (;;) {
        std::string cand = "y" + std::to_string(next_svar_++);
        if (reserved_.insert(cand).second) return cand;
    }
}

}  // namespace alba
