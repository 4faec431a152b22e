#include "alba/engine.hpp"

#include <stdexcept>

#include "engine_internal.hpp"

namespace alba {

const char* stage_name(Stage s) {
    switch (s) {
        case Stage::Preprocess: return "preprocess";
        case Stage::FirstApproximation: return "first_approximation";
        case Stage::Substage1: return "substage1";
        case Stage::Substage2: return "substage2";
        case Stage::Substage3: return "substage3";
        case Stage::Substage4: return "substage4";
    }
    return "?";
}

const char* soundness_level_name(SoundnessLevel l) {
    switch (l) {
        case SoundnessLevel::Model: return "model";
        case SoundnessLevel::Valuation: return "valuation";
        case SoundnessLevel::Validity: return "validity";
    }
    return "?";
}

const std::vector<RuleInfo>& rule_catalogue() {
    static const std::vector<RuleInfo> rules = [] {
        std::vector<RuleInfo> r;
        auto add = [&](std::string id, Stage s, SoundnessLevel l) { r.push_back({std::move(id), s, l}); };
        for (const char* id :
             {"dist.dia.or", "dist.not.or", "dist.and.or.left", "dist.and.or.right", "dist.down.or", "dist.atnom.or",
              "dist.atsvar.or", "dist.imp.or", "dist.box.and", "dist.not.and", "dist.or.and.left", "dist.or.and.right",
              "dist.down.and", "dist.atnom.and", "dist.atsvar.and", "dist.imp.and"})
            add(id, Stage::Preprocess, SoundnessLevel::Model);
        add("elim.bottom", Stage::Preprocess, SoundnessLevel::Validity);
        add("elim.top", Stage::Preprocess, SoundnessLevel::Validity);
        add("first_approx", Stage::FirstApproximation, SoundnessLevel::Validity);
        for (const char* base :
             {"approx.dia", "approx.box", "approx.atnom.right", "approx.atnom.left", "approx.atsvar.right",
              "approx.atsvar.left", "approx.down.right", "approx.down.left", "approx.imp", "resid.not.s1.right",
              "resid.not.s1.left"})
            for (const char* kind : {"nom", "svar"})
                add(std::string(base) + "." + kind, Stage::Substage1, SoundnessLevel::Valuation);
        // Splitting runs in Stage 1 and both decomposition substages with the
        // same schema; it is listed once.
        for (const char* id :
             {"split.and", "split.or", "split.forall", "resid.not.right", "resid.not.left", "resid.box.right",
              "resid.dia.left", "resid.atnom.right", "resid.atnom.left", "resid.atsvar.right", "resid.atsvar.left",
              "resid.down.right", "resid.down.left"})
            add(id, Stage::Substage2, SoundnessLevel::Model);
        add("pack.exists", Stage::Substage3, SoundnessLevel::Model);
        add("pack.forall", Stage::Substage3, SoundnessLevel::Model);
        add("ackermann.right", Stage::Substage4, SoundnessLevel::Valuation);
        add("ackermann.left", Stage::Substage4, SoundnessLevel::Valuation);
        return r;
    }();
    return rules;
}

std::optional<RuleInfo> rule_info(const std::string& id) {
    for (const auto& r : rule_catalogue())
        if (r.id == id) return r;
    return std::nullopt;
}

namespace {

constexpr std::size_t kStepLimit = 100000;

const detail::Allow& allow_all() {
    static const detail::Allow a = [](const std::string&) { return true; };
    return a;
}

template <typename StepFn>
void exhaust(System& sys, Stage stage, std::vector<Step>& steps, StepFn&& fn) {
    for (std::size_t n = 0;; ++n) {
        if (n > kStepLimit) throw std::logic_error(std::string("step limit exceeded in ") + stage_name(stage));
        System before = sys;
        auto a = fn(sys);
        if (!a) return;
        steps.push_back({a->rule, stage, a->position, std::move(before), sys});
    }
}

Names names_of_all(const std::vector<Inequality>& items) {
    Names n;
    for (const auto& q : items) n.merge(names_of(q));
    return n;
}

BranchRun run_branch(const Inequality& q, const std::set<std::string>& reserved, const OrderType& e,
                     const AlbaOptions& opts) {
    BranchRun br;
    br.preprocessed = q;
    FreshNames fresh(reserved);
    System sys = first_approximation(q, fresh);
    br.i0 = fresh.issued_nominals().at(0);
    br.i1 = fresh.issued_nominals().at(1);
    br.steps.push_back({"first_approx", Stage::FirstApproximation, {0, "", 0}, {Mega::leaf(q)}, sys});

    exhaust(sys, Stage::Substage1, br.steps,
            [&](System& s) { return detail::substage1_step(s, fresh, allow_all()); });
    br.after_substage1 = sys;
    exhaust(sys, Stage::Substage2, br.steps,
            [&](System& s) { return detail::substage2_step(s, fresh, allow_all()); });
    br.after_substage2 = sys;
    exhaust(sys, Stage::Substage3, br.steps, [&](System& s) { return detail::substage3_step(s, allow_all()); });
    br.after_substage3 = sys;
    std::vector<Diagnostic> diags;
    exhaust(sys, Stage::Substage4, br.steps, [&](System& s) {
        diags.clear();
        return detail::substage4_step(s, e, allow_all(), &diags);
    });
    br.nominals = fresh.issued_nominals();

    bool pure = true;
    for (const auto& m : sys) pure = pure && is_pure(m);
    if (!pure) {
        br.stuck = diags;
        br.reduce = sys;
        return br;
    }

    std::vector<UQInequality> premises;
    for (const auto& m : sys) {
        UQInequality u = *as_uq(m);
        if (opts.simplify) u.body = simplify(u.body);
        br.reduce.push_back(to_mega(u));
        premises.push_back(std::move(u));
    }
    QuasiUQInequality quasi{std::move(premises), {{}, {mk::nom(br.i0), mk::neg(mk::nom(br.i1))}}};
    br.fo = fol::universal_closure(fol::st_statement(quasi), br.nominals);
    br.quasi = std::move(quasi);
    br.ok = true;
    return br;
}

}  // namespace

AlbaResult run_alba(const Inequality& ineq, const OrderType& e, const AlbaOptions& opts) {
    AlbaResult res;
    res.input = ineq;
    res.epsilon = e;
    res.preprocessed = preprocess(ineq, &res.preprocess_steps);

    Names reserved = names_of(ineq);
    reserved.merge(names_of_all(res.preprocessed));
    const std::set<std::string> taken = reserved.all();

    bool ok = true;
    for (const auto& q : res.preprocessed) {
        res.branches.push_back(run_branch(q, taken, e, opts));
        ok = ok && res.branches.back().ok;
    }
    if (ok && !res.branches.empty()) {
        fol::FOFormula f = *res.branches.front().fo;
        for (std::size_t b = 1; b < res.branches.size(); ++b) f = fol::fo::conj(f, *res.branches[b].fo);
        res.fo = f;
    }
    return res;
}

AlbaResult run_alba_auto(const Inequality& ineq, const AlbaOptions& opts) {
    const auto vars = order_variables(ineq);
    std::vector<OrderType> tried;
    std::optional<AlbaResult> first;
    auto attempt = [&](const OrderType& e) -> std::optional<AlbaResult> {
        for (const auto& t : tried)
            if (t == e) return std::nullopt;
        tried.push_back(e);
        AlbaResult r = run_alba(ineq, e, opts);
        if (r.success()) return r;
        if (!first) first = std::move(r);
        return std::nullopt;
    };

    if (vars.size() <= 8) {
        for (const auto& e : find_order_types(ineq))
            if (auto r = attempt(e)) return *r;
        const std::size_t n = vars.size();
        for (std::uint32_t code = 0; code < (1U << n); ++code) {
            std::vector<Order> vals(n);
            for (std::size_t i = 0; i < n; ++i) vals[i] = ((code >> (n - 1 - i)) & 1U) ? Order::Dual : Order::One;
            if (auto r = attempt(OrderType(vars, vals))) return *r;
        }
    } else {
        for (Order o : {Order::One, Order::Dual})
            if (auto r = attempt(OrderType::uniform(vars, o))) return *r;
    }
    return *first;
}

std::optional<Rewrite> apply_rule(const std::string& rule, const System& system, FreshNames& fresh,
                                  const OrderType* e) {
    auto info = rule_info(rule);
    if (!info) throw std::invalid_argument("unknown rule '" + rule + "'");
    const detail::Allow only = [&](const std::string& id) { return id == rule; };
    System sys = system;
    std::optional<detail::Applied> a;

    switch (info->stage) {
        case Stage::Preprocess: {
            std::vector<Inequality> items;
            for (const auto& m : sys) {
                if (m.kind() != Mega::Kind::Leaf) throw std::invalid_argument(rule + " expects plain inequalities");
                items.push_back(m.ineq());
            }
            a = detail::stage1_step(items, only);
            sys.clear();
            for (const auto& q : items) sys.push_back(Mega::leaf(q));
            break;
        }
        case Stage::FirstApproximation: {
            if (sys.size() != 1 || sys[0].kind() != Mega::Kind::Leaf)
                throw std::invalid_argument("first_approx expects a single inequality");
            const std::size_t before = fresh.issued_nominals().size();
            sys = first_approximation(sys[0].ineq(), fresh);
            const auto& issued = fresh.issued_nominals();
            a = detail::Applied{rule, {0, "", 0}, {issued.begin() + static_cast<std::ptrdiff_t>(before), issued.end()}};
            break;
        }
        case Stage::Substage1: a = detail::substage1_step(sys, fresh, only); break;
        case Stage::Substage2: a = detail::substage2_step(sys, fresh, only); break;
        case Stage::Substage3: a = detail::substage3_step(sys, only); break;
        case Stage::Substage4:
            if (!e) throw std::invalid_argument(rule + " needs an order type");
            a = detail::substage4_step(sys, *e, only, nullptr);
            break;
    }
    if (!a) return std::nullopt;
    return Rewrite{{a->rule, info->stage, a->position, system, sys}, a->introduced};
}

namespace shape {

bool literal_sided(const System& s, std::string* offending) {
    for (const auto& m : s) {
        bool ok = m.kind() == Mega::Kind::Leaf;
        if (ok && !is_pure(m.ineq())) ok = m.ineq().lhs.is_literal() || detail::is_neg_literal(m.ineq().rhs);
        if (!ok) {
            if (offending) *offending = to_string(m);
            return false;
        }
    }
    return true;
}

bool inner_heads(const System& s, const OrderType& e, std::string* offending) {
    const OrderType d = e.dual();
    for (const auto& m : s) {
        auto u = as_uq(m);
        bool ok = u.has_value();
        if (ok) {
            const Formula& a = u->body.lhs;
            const Formula& b = u->body.rhs;
            const bool pa = is_pure(a);
            const bool pb = is_pure(b);
            ok = (pa && pb) ||
                 (pa && b.op() == Op::Prop && e.get(b.name()).value_or(Order::One) == Order::One) ||
                 (pb && a.op() == Op::Prop && e.get(a.name()).value_or(Order::One) == Order::Dual) ||
                 (pa && is_uniform(build_signed_tree(b, Sign::Plus), d)) ||
                 (pb && is_uniform(build_signed_tree(a, Sign::Minus), d));
        }
        if (!ok) {
            if (offending) *offending = to_string(m);
            return false;
        }
    }
    return true;
}

}  // namespace shape

}  // namespace alba
