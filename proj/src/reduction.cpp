// Substages 1-3: outer decomposition, inner decomposition, packing.
#include <utility>

#include "engine_internal.hpp"

namespace alba::detail {
namespace {

using Items = std::vector<Inequality>;

// ---------------------------------------------------------------------------
// Substage 1
// ---------------------------------------------------------------------------

struct S1Result {
    std::string rule;
    std::string side;
    Items out;
    std::vector<std::string> introduced;
};

std::optional<S1Result> s1_split(const std::string& base, const Inequality& q, const Allow& allow) {
    if (!allow(base)) return std::nullopt;
    if (base == "split.and" && q.rhs.op() == Op::And)
        return S1Result{base, "rhs", {{q.lhs, q.rhs.child(0)}, {q.lhs, q.rhs.child(1)}}, {}};
    if (base == "split.or" && q.lhs.op() == Op::Or)
        return S1Result{base, "lhs", {{q.lhs.child(0), q.rhs}, {q.lhs.child(1), q.rhs}}, {}};
    return std::nullopt;
}

std::optional<S1Result> s1_approx(const std::string& base, const Inequality& q, FreshNames& fresh, const Allow& allow) {
    const bool lit_left = q.lhs.is_literal();
    const bool lit_right = is_neg_literal(q.rhs);
    if (!lit_left && !lit_right) return std::nullopt;

    if (lit_left) {
        const Formula& i = q.lhs;
        const Formula& r = q.rhs;
        const std::string id = base + "." + literal_kind(i);
        if (base == "approx.dia" && r.op() == Op::Dia && allow(id)) {
            const std::string j = fresh.nominal();
            return S1Result{id, "rhs", {{i, mk::dia(mk::nom(j))}, {mk::nom(j), r.child(0)}}, {j}};
        }
        if (base == "approx.atnom.right" && r.op() == Op::AtNom && allow(id))
            return S1Result{id, "rhs", {{mk::nom(r.name()), r.child(0)}}, {}};
        if (base == "approx.atsvar.right" && r.op() == Op::AtSvar && allow(id))
            return S1Result{id, "rhs", {{mk::svar(r.name()), r.child(0)}}, {}};
        if (base == "approx.down.right" && r.op() == Op::Down && allow(id))
            return S1Result{id, "rhs", {{i, substitute_svar(r.child(0), r.name(), i)}}, {}};
        if (base == "resid.not.s1.right" && r.op() == Op::Not && allow(id))
            return S1Result{id, "rhs", {{r.child(0), mk::neg(i)}}, {}};
        return std::nullopt;
    }

    const Formula& i = q.rhs.child(0);
    const Formula& l = q.lhs;
    const std::string id = base + "." + literal_kind(i);
    if (base == "approx.box" && l.op() == Op::Box && allow(id)) {
        const std::string j = fresh.nominal();
        return S1Result{id, "lhs", {{mk::box(mk::neg(mk::nom(j))), q.rhs}, {l.child(0), mk::neg(mk::nom(j))}}, {j}};
    }
    if (base == "approx.atnom.left" && l.op() == Op::AtNom && allow(id))
        return S1Result{id, "lhs", {{l.child(0), mk::neg(mk::nom(l.name()))}}, {}};
    if (base == "approx.atsvar.left" && l.op() == Op::AtSvar && allow(id))
        return S1Result{id, "lhs", {{l.child(0), mk::neg(mk::svar(l.name()))}}, {}};
    if (base == "approx.down.left" && l.op() == Op::Down && allow(id))
        return S1Result{id, "lhs", {{substitute_svar(l.child(0), l.name(), i), q.rhs}}, {}};
    if (base == "approx.imp" && l.op() == Op::Imp && allow(id)) {
        const std::string j = fresh.nominal();
        const std::string k = fresh.nominal();
        const Formula nj = mk::nom(j);
        const Formula not_k = mk::neg(mk::nom(k));
        return S1Result{id, "lhs", {{mk::imp(nj, not_k), q.rhs}, {nj, l.child(0)}, {l.child(1), not_k}}, {j, k}};
    }
    if (base == "resid.not.s1.left" && l.op() == Op::Not && allow(id))
        return S1Result{id, "lhs", {{i, l.child(0)}}, {}};
    return std::nullopt;
}

const std::vector<std::vector<std::string>>& s1_classes() {
    static const std::vector<std::vector<std::string>> classes = {
        {"split.and", "split.or"},
        {"approx.dia", "approx.box", "approx.atnom.right", "approx.atnom.left", "approx.atsvar.right",
         "approx.atsvar.left", "approx.down.right", "approx.down.left", "approx.imp"},
        {"resid.not.s1.right", "resid.not.s1.left"},
    };
    return classes;
}

// ---------------------------------------------------------------------------
// Substage 2
// ---------------------------------------------------------------------------

struct LeafResult {
    std::string rule;
    std::string side;
    std::vector<Mega> out;
    std::vector<std::string> introduced;
};

std::optional<LeafResult> s2_leaf(const std::string& id, const Inequality& q, FreshNames& fresh, const Allow& allow) {
    if (!allow(id)) return std::nullopt;
    const Formula& l = q.lhs;
    const Formula& r = q.rhs;
    const bool lp = is_pure(l);
    const bool rp = is_pure(r);
    auto leaf = [](Formula a, Formula b) { return Mega::leaf({std::move(a), std::move(b)}); };

    if (id == "split.and" && r.op() == Op::And)
        return LeafResult{id, "rhs", {leaf(l, r.child(0)), leaf(l, r.child(1))}, {}};
    if (id == "split.or" && l.op() == Op::Or)
        return LeafResult{id, "lhs", {leaf(l.child(0), r), leaf(l.child(1), r)}, {}};

    // Residuation decomposes the non-pure side against a pure side.
    if (lp && !rp) {
        if (id == "resid.not.right" && r.op() == Op::Not)
            return LeafResult{id, "rhs", {leaf(r.child(0), mk::neg(l))}, {}};
        if (id == "resid.box.right" && r.op() == Op::Box)
            return LeafResult{id, "rhs", {leaf(mk::bdia(l), r.child(0))}, {}};
        if (id == "resid.atnom.right" && r.op() == Op::AtNom)
            return LeafResult{id, "rhs", {leaf(mk::conj(mk::glob_e(l), mk::nom(r.name())), r.child(0))}, {}};
        if (id == "resid.atsvar.right" && r.op() == Op::AtSvar)
            return LeafResult{id, "rhs", {leaf(mk::conj(mk::glob_e(l), mk::svar(r.name())), r.child(0))}, {}};
        if (id == "resid.down.right" && r.op() == Op::Down) {
            const std::string y = fresh.state_variable();
            const Formula vy = mk::svar(y);
            Mega body = leaf(mk::conj(mk::glob_a(mk::imp(vy, l)), vy), substitute_svar(r.child(0), r.name(), vy));
            return LeafResult{id, "rhs", {Mega::forall(y, body)}, {y}};
        }
    }
    if (rp && !lp) {
        if (id == "resid.not.left" && l.op() == Op::Not)
            return LeafResult{id, "lhs", {leaf(mk::neg(r), l.child(0))}, {}};
        if (id == "resid.dia.left" && l.op() == Op::Dia)
            return LeafResult{id, "lhs", {leaf(l.child(0), mk::bbox(r))}, {}};
        if (id == "resid.atnom.left" && l.op() == Op::AtNom)
            return LeafResult{id, "lhs", {leaf(l.child(0), mk::imp(mk::nom(l.name()), mk::glob_a(r)))}, {}};
        if (id == "resid.atsvar.left" && l.op() == Op::AtSvar)
            return LeafResult{id, "lhs", {leaf(l.child(0), mk::imp(mk::svar(l.name()), mk::glob_a(r)))}, {}};
        if (id == "resid.down.left" && l.op() == Op::Down) {
            const std::string y = fresh.state_variable();
            const Formula vy = mk::svar(y);
            Mega body = leaf(substitute_svar(l.child(0), l.name(), vy), mk::imp(vy, mk::glob_e(mk::conj(vy, r))));
            return LeafResult{id, "lhs", {Mega::forall(y, body)}, {y}};
        }
    }
    return std::nullopt;
}

const std::vector<std::vector<std::string>>& s2_classes() {
    static const std::vector<std::vector<std::string>> classes = {
        {"split.and", "split.or"},
        {"split.forall"},
        {"resid.not.right", "resid.not.left", "resid.box.right", "resid.dia.left", "resid.atnom.right",
         "resid.atnom.left", "resid.atsvar.right", "resid.atsvar.left", "resid.down.right", "resid.down.left"},
    };
    return classes;
}

/// Rewrites the first node (pre-order) accepted by `fn`. At the top level
/// the replacement list is spliced into the system; below it is folded into
/// a meta-conjunction.
using NodeFn = std::function<std::optional<LeafResult>(const Mega&)>;

struct NodeHit {
    std::vector<Mega> out;
    LeafResult result;
    std::string path;
    std::size_t depth;
};

std::string join(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "/" + b;
}

std::optional<NodeHit> rewrite_first(const Mega& m, const NodeFn& fn, const std::string& path, std::size_t depth) {
    if (auto r = fn(m)) {
        NodeHit h{r->out, *r, join(path, r->side), depth};
        return h;
    }
    auto fold = [](const std::vector<Mega>& v) { return v.size() == 1 ? v[0] : mega_conj(v); };
    switch (m.kind()) {
        case Mega::Kind::Leaf: return std::nullopt;
        case Mega::Kind::Conj:
            if (auto h = rewrite_first(m.left(), fn, join(path, "conj.0"), depth)) {
                h->out = {Mega::conj(fold(h->out), m.right())};
                return h;
            }
            if (auto h = rewrite_first(m.right(), fn, join(path, "conj.1"), depth)) {
                h->out = {Mega::conj(m.left(), fold(h->out))};
                return h;
            }
            return std::nullopt;
        case Mega::Kind::Forall:
            if (auto h = rewrite_first(m.body(), fn, join(path, "forall"), depth + 1)) {
                h->out = {Mega::forall(m.var(), fold(h->out))};
                return h;
            }
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Applied> apply_first(System& sys, const NodeFn& fn) {
    for (std::size_t k = 0; k < sys.size(); ++k) {
        auto h = rewrite_first(sys[k], fn, "", 0);
        if (!h) continue;
        sys.erase(sys.begin() + static_cast<std::ptrdiff_t>(k));
        sys.insert(sys.begin() + static_cast<std::ptrdiff_t>(k), h->out.begin(), h->out.end());
        return Applied{h->result.rule, {k, h->path, h->depth}, h->result.introduced};
    }
    return std::nullopt;
}

}  // namespace

std::optional<Applied> substage1_step(System& sys, FreshNames& fresh, const Allow& allow) {
    for (const auto& cls : s1_classes())
        for (const auto& base : cls)
            for (std::size_t k = 0; k < sys.size(); ++k) {
                if (sys[k].kind() != Mega::Kind::Leaf) continue;
                const Inequality q = sys[k].ineq();
                if (is_pure(q)) continue;
                std::optional<S1Result> r =
                    base.rfind("split.", 0) == 0 ? s1_split(base, q, allow) : s1_approx(base, q, fresh, allow);
                if (!r) continue;
                sys.erase(sys.begin() + static_cast<std::ptrdiff_t>(k));
                std::vector<Mega> out;
                for (const auto& o : r->out) out.push_back(Mega::leaf(o));
                sys.insert(sys.begin() + static_cast<std::ptrdiff_t>(k), out.begin(), out.end());
                return Applied{r->rule, {k, r->side, 0}, r->introduced};
            }
    return std::nullopt;
}

std::optional<Applied> substage2_step(System& sys, FreshNames& fresh, const Allow& allow) {
    for (const auto& cls : s2_classes())
        for (const auto& id : cls) {
            NodeFn fn;
            if (id == "split.forall") {
                if (!allow(id)) continue;
                fn = [&](const Mega& m) -> std::optional<LeafResult> {
                    if (m.kind() != Mega::Kind::Forall || m.body().kind() != Mega::Kind::Conj) return std::nullopt;
                    return LeafResult{id, "", {Mega::forall(m.var(), m.body().left()), Mega::forall(m.var(), m.body().right())}, {}};
                };
            } else {
                fn = [&](const Mega& m) -> std::optional<LeafResult> {
                    if (m.kind() != Mega::Kind::Leaf || is_pure(m.ineq())) return std::nullopt;
                    return s2_leaf(id, m.ineq(), fresh, allow);
                };
            }
            if (auto a = apply_first(sys, fn)) return a;
        }
    return std::nullopt;
}

std::optional<Applied> substage3_step(System& sys, const Allow& allow) {
    NodeFn fn = [&](const Mega& m) -> std::optional<LeafResult> {
        if (m.kind() != Mega::Kind::Forall || m.body().kind() != Mega::Kind::Leaf) return std::nullopt;
        const std::string& x = m.var();
        const Inequality& q = m.body().ineq();
        const bool in_lhs = free_svars(q.lhs).count(x) != 0;
        const bool in_rhs = free_svars(q.rhs).count(x) != 0;
        if (in_lhs && in_rhs) return std::nullopt;
        bool exists = !in_rhs && in_lhs;
        if (!in_lhs && !in_rhs) exists = is_pure(q.lhs) && !is_pure(q.rhs);
        const char* id = exists ? "pack.exists" : "pack.forall";
        if (!allow(id)) return std::nullopt;
        Inequality out = exists ? Inequality{mk::exists(x, q.lhs), q.rhs} : Inequality{q.lhs, mk::forall(x, q.rhs)};
        return LeafResult{id, "", {Mega::leaf(out)}, {}};
    };
    return apply_first(sys, fn);
}

}  // namespace alba::detail
