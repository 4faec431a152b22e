// Stage 1: distribution towards the root, splitting, monotone/antitone
// elimination, and the first approximation.
#include <utility>

#include "engine_internal.hpp"

namespace alba {
namespace detail {
namespace {

Formula rewrap(const Formula& unary, Formula c) { return Formula::make(unary.op(), unary.name(), {std::move(c)}); }

struct Redex {
    std::string rule;
    Formula result;
};

std::optional<Redex> distribution_redex(const Formula& f, Sign s, const Allow& allow) {
    auto hit = [&](const char* id, auto build) -> std::optional<Redex> {
        if (!allow(id)) return std::nullopt;
        return Redex{id, build()};
    };
    auto child_is = [&](std::size_t i, Op op) { return f.arity() > i && f.child(i).op() == op; };

    if (s == Sign::Plus) {
        const char* unary = nullptr;
        switch (f.op()) {
            case Op::Dia: unary = "dist.dia.or"; break;
            case Op::Down: unary = "dist.down.or"; break;
            case Op::AtNom: unary = "dist.atnom.or"; break;
            case Op::AtSvar: unary = "dist.atsvar.or"; break;
            default: break;
        }
        if (unary && child_is(0, Op::Or)) {
            const Formula& d = f.child(0);
            return hit(unary, [&] { return mk::disj(rewrap(f, d.child(0)), rewrap(f, d.child(1))); });
        }
        if (f.op() == Op::And && child_is(0, Op::Or)) {
            const Formula& d = f.child(0);
            const Formula& c = f.child(1);
            return hit("dist.and.or.left",
                       [&] { return mk::disj(mk::conj(d.child(0), c), mk::conj(d.child(1), c)); });
        }
        if (f.op() == Op::And && child_is(1, Op::Or)) {
            const Formula& c = f.child(0);
            const Formula& d = f.child(1);
            return hit("dist.and.or.right",
                       [&] { return mk::disj(mk::conj(c, d.child(0)), mk::conj(c, d.child(1))); });
        }
        if (f.op() == Op::Not && child_is(0, Op::And)) {
            const Formula& d = f.child(0);
            return hit("dist.not.and", [&] { return mk::disj(mk::neg(d.child(0)), mk::neg(d.child(1))); });
        }
        return std::nullopt;
    }

    const char* unary = nullptr;
    switch (f.op()) {
        case Op::Box: unary = "dist.box.and"; break;
        case Op::Down: unary = "dist.down.and"; break;
        case Op::AtNom: unary = "dist.atnom.and"; break;
        case Op::AtSvar: unary = "dist.atsvar.and"; break;
        default: break;
    }
    if (unary && child_is(0, Op::And)) {
        const Formula& d = f.child(0);
        return hit(unary, [&] { return mk::conj(rewrap(f, d.child(0)), rewrap(f, d.child(1))); });
    }
    if (f.op() == Op::Or && child_is(0, Op::And)) {
        const Formula& d = f.child(0);
        const Formula& c = f.child(1);
        return hit("dist.or.and.left", [&] { return mk::conj(mk::disj(d.child(0), c), mk::disj(d.child(1), c)); });
    }
    if (f.op() == Op::Or && child_is(1, Op::And)) {
        const Formula& c = f.child(0);
        const Formula& d = f.child(1);
        return hit("dist.or.and.right", [&] { return mk::conj(mk::disj(c, d.child(0)), mk::disj(c, d.child(1))); });
    }
    if (f.op() == Op::Not && child_is(0, Op::Or)) {
        const Formula& d = f.child(0);
        return hit("dist.not.or", [&] { return mk::conj(mk::neg(d.child(0)), mk::neg(d.child(1))); });
    }
    if (f.op() == Op::Imp && child_is(0, Op::Or)) {
        const Formula& d = f.child(0);
        const Formula& c = f.child(1);
        return hit("dist.imp.or", [&] { return mk::conj(mk::imp(d.child(0), c), mk::imp(d.child(1), c)); });
    }
    if (f.op() == Op::Imp && child_is(1, Op::And)) {
        const Formula& c = f.child(0);
        const Formula& d = f.child(1);
        return hit("dist.imp.and", [&] { return mk::conj(mk::imp(c, d.child(0)), mk::imp(c, d.child(1))); });
    }
    return std::nullopt;
}

struct DistHit {
    std::string rule;
    std::string path;
    Formula result;
};

// Leftmost-outermost redex whose node and ancestors are all outer.
std::optional<DistHit> distribute(const Formula& f, Sign s, const Allow& allow, const std::string& path) {
    if (f.arity() == 0 || !can_be_outer(classify(f.op(), s))) return std::nullopt;
    if (auto r = distribution_redex(f, s, allow)) return DistHit{r->rule, path, r->result};
    for (std::size_t i = 0; i < f.arity(); ++i) {
        if (auto h = distribute(f.child(i), child_sign(f, s, i), allow, path + "/" + std::to_string(i))) {
            h->result = with_child(f, i, h->result);
            return h;
        }
    }
    return std::nullopt;
}

void replace_with(std::vector<Inequality>& items, std::size_t idx, std::vector<Inequality> repl) {
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(idx));
    items.insert(items.begin() + static_cast<std::ptrdiff_t>(idx), repl.begin(), repl.end());
}

}  // namespace

std::optional<Applied> stage1_step(std::vector<Inequality>& items, const Allow& allow) {
    for (std::size_t k = 0; k < items.size(); ++k) {
        const Inequality& q = items[k];
        if (auto h = distribute(q.lhs, Sign::Plus, allow, "lhs")) {
            Applied a{h->rule, {k, h->path, 0}, {}};
            items[k] = {h->result, q.rhs};
            return a;
        }
        if (auto h = distribute(q.rhs, Sign::Minus, allow, "rhs")) {
            Applied a{h->rule, {k, h->path, 0}, {}};
            items[k] = {q.lhs, h->result};
            return a;
        }
    }

    if (allow("split.and"))
        for (std::size_t k = 0; k < items.size(); ++k) {
            Inequality q = items[k];
            if (q.rhs.op() != Op::And) continue;
            replace_with(items, k, {{q.lhs, q.rhs.child(0)}, {q.lhs, q.rhs.child(1)}});
            return Applied{"split.and", {k, "rhs", 0}, {}};
        }
    if (allow("split.or"))
        for (std::size_t k = 0; k < items.size(); ++k) {
            Inequality q = items[k];
            if (q.lhs.op() != Op::Or) continue;
            replace_with(items, k, {{q.lhs.child(0), q.rhs}, {q.lhs.child(1), q.rhs}});
            return Applied{"split.or", {k, "lhs", 0}, {}};
        }

    for (std::size_t k = 0; k < items.size(); ++k) {
        const Inequality& q = items[k];
        for (const auto& p : names_of(q).props) {
            const bool lhs_neg = is_negative_in(q.lhs, p);
            const bool lhs_pos = is_positive_in(q.lhs, p);
            const bool rhs_neg = is_negative_in(q.rhs, p);
            const bool rhs_pos = is_positive_in(q.rhs, p);
            if (lhs_neg && rhs_pos && allow("elim.bottom")) {
                items[k] = {substitute_prop(q.lhs, p, mk::bot()), substitute_prop(q.rhs, p, mk::bot())};
                return Applied{"elim.bottom", {k, p, 0}, {}};
            }
            if (lhs_pos && rhs_neg && allow("elim.top")) {
                items[k] = {substitute_prop(q.lhs, p, mk::top()), substitute_prop(q.rhs, p, mk::top())};
                return Applied{"elim.top", {k, p, 0}, {}};
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

namespace {
System as_system(const std::vector<Inequality>& items) {
    System s;
    for (const auto& q : items) s.push_back(Mega::leaf(q));
    return s;
}
}  // namespace

std::vector<Inequality> preprocess(const Inequality& ineq, std::vector<Step>* trace) {
    std::vector<Inequality> items{ineq};
    const detail::Allow all = [](const std::string&) { return true; };
    while (true) {
        std::vector<Inequality> before = items;
        auto a = detail::stage1_step(items, all);
        if (!a) break;
        if (trace) trace->push_back({a->rule, Stage::Preprocess, a->position, as_system(before), as_system(items)});
    }
    return items;
}

System first_approximation(const Inequality& ineq, FreshNames& fresh) {
    const std::string i0 = fresh.nominal();
    const std::string i1 = fresh.nominal();
    return {Mega::leaf({mk::nom(i0), ineq.lhs}), Mega::leaf({ineq.rhs, mk::neg(mk::nom(i1))})};
}

}  // namespace alba
