// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "alba/cli.hpp"
#include "alba/oracle.hpp"
#include "alba/parser.hpp"
#include "alba/trace_json.hpp"
#include "support/generators.hpp"
#include "support/golden.hpp"
#include "support/reference.hpp"
#include "support/rule_fixtures.hpp"

using namespace alba;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
    bool pass = true;
    std::string detail;
};

double ms_since(Clock::time_point t) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

bool report(int n, const std::string& title, const std::function<Result()>& body) {
    const auto t = Clock::now();
    Result r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    std::ostringstream ms;
    ms.precision(1);
    ms << std::fixed << ms_since(t);
    std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << title << " (" << r.detail << ", "
              << ms.str() << " ms)" << std::endl;
    return r.pass;
}

std::vector<std::string> preorder(const SignedNode& t) {
    std::vector<std::string> out{t.signed_label()};
    for (const auto& c : t.children)
        for (auto& s : preorder(c)) out.push_back(std::move(s));
    return out;
}

Result golden_run(const golden::Run& g, bool literal_quasi) {
    const auto t = Clock::now();
    const AlbaResult r = run_alba(parse_inequality(g.input), OrderType::parse({"p1", "p2"}, "1,1"));
    const double elapsed = ms_since(t);
    const auto trace = golden::match_trace(g, r);
    const auto quasi = golden::match_quasi(g, r, literal_quasi);
    Result out;
    out.pass = trace.ok && quasi.ok && elapsed < 1000.0;
    out.detail = "trace: " + trace.message + "; quasi: " + (quasi.ok ? "match" : quasi.message) +
                 "; run " + std::to_string(static_cast<int>(elapsed)) + " ms";
    return out;
}

Result criterion1() { return golden_run(golden::first(), true); }

Result criterion2() {
    Result r = golden_run(golden::second(), false);
    // The universally quantified head must survive into the premises as is.
    const AlbaResult run = run_alba(parse_inequality(golden::second().input), OrderType::parse({"p1", "p2"}, "1,1"));
    bool head = false;
    if (run.branches.size() == 1 && run.branches[0].quasi) {
        const std::set<std::string> keep = names_of(run.input).all();
        const auto want = golden::canonical(
            {to_string(parse_mega("forall $y [ bdia (A ($y -> bdia 'i0) /\\ $y) <= $y ]"))}, keep);
        for (const auto& p : run.branches[0].quasi->premises)
            head = head || golden::canonical({to_string(to_mega(p))}, keep) == want;
    }
    r.pass = r.pass && head;
    r.detail += head ? "; head present" : "; head missing";
    return r;
}

Result criterion3() {
    const Inequality binder_ineq = parse_inequality(
        "down $x . (dia box p1 /\\ box (@'i $x /\\ box p2)) <= dia box dia p1 \\/ dia box dia p2");
    const nlohmann::json c = classification_json(binder_ineq);
    bool has11 = false;
    for (const auto& e : c["order_types"]) has11 = has11 || e == nlohmann::json({"1", "1"});
    const SignedNode t = build_signed_tree(parse_formula("box (p \\/ ~ dia q) -> box q"), Sign::Plus);
    const std::vector<std::string> want{"+→", "-□", "-∨", "-p", "-¬", "+◇", "+q", "+□", "+q"};
    const bool signs = preorder(t) == want;
    return {has11 && signs, std::string("order types ") + c["order_types"].dump() + "; tree signs " +
                                (signs ? "match" : "differ")};
}

Result criterion4() {
    std::vector<std::string> suite = {
        "p <= dia p",
        "dia dia p <= dia p",
        "dia p <= box p",
        golden::first().input,
        golden::second().input,
        "box p <= p",
        "box p <= box box p",
        "p <= box dia p",
        "dia p <= box dia p",
        "dia box p <= box dia p",
        "dia box p <= p",
        "box box p <= box p",
        "'i <= dia 'i",
        "dia (p /\\ 'i) <= box (p \\/ ~'i)",
        "down $x . dia $x <= dia dia p \\/ ~p",
    };
    testgen::Rng rng(2024);
    testgen::SahlqvistGenerator gen(rng, {"p", "q"}, 3);
    for (int k = 0; k < 10; ++k) suite.push_back(to_string(gen.next().ineq));

    const auto small = oracle::enumerate_frames(2);
    std::size_t ok = 0;
    std::string first_bad;
    for (const auto& text : suite) {
        std::ostringstream out;
        std::ostringstream err;
        std::istringstream in;
        const int code = cli::run({"verify", text, "--max-worlds", "3"}, out, err, in);
        bool good = code == 0 && out.str().rfind("Equivalent (530 frames", 0) == 0;
        // Independent check of the same correspondent on the smaller frames.
        if (good) {
            const Inequality q = parse_inequality(text);
            const AlbaResult r = run_alba_auto(q);
            good = r.fo.has_value();
            for (std::size_t f = 0; good && f < small.size(); ++f) {
                const ref::Frame rf = ref::from(small[f]);
                good = ref::valid(rf, Statement{q}) == ref::fo(rf, {}, *r.fo);
            }
        }
        if (good)
            ++ok;
        else if (first_bad.empty())
            first_bad = text + " -> " + out.str() + err.str();
    }
    Result r{ok == suite.size() && suite.size() >= 20,
             std::to_string(ok) + "/" + std::to_string(suite.size()) + " equivalent on 530 frames"};
    if (!first_bad.empty()) r.detail += "; first failure: " + first_bad;
    return r;
}

Result criterion5() {
    std::set<std::string> covered;
    std::size_t suites = 0;
    std::uint64_t checks = 0;
    std::string bad;
    for (const auto& fx : fixtures::rule_fixtures()) {
        System sys;
        for (const auto& t : fx.system) sys.push_back(parse_mega(t));
        Names n;
        for (const auto& m : sys) n.merge(names_of(m));
        FreshNames fresh(n.all());
        std::optional<OrderType> e;
        if (!fx.order.empty()) e = OrderType::parse({n.props.begin(), n.props.end()}, fx.order);
        const auto rw = apply_rule(fx.rule, sys, fresh, e ? &*e : nullptr);
        if (!rw) {
            if (bad.empty()) bad = fx.rule + " did not fire";
            continue;
        }
        const oracle::RuleInstance inst = oracle::instance_of(*rw);
        oracle::Verdict v;
        switch (inst.level) {
            case SoundnessLevel::Model: v = oracle::check_rule_soundness(inst, 4, 200, 17); break;
            case SoundnessLevel::Valuation: v = oracle::check_rule_soundness(inst, 2, 0); break;
            case SoundnessLevel::Validity: v = oracle::check_rule_soundness(inst, 3, 0); break;
        }
        ++suites;
        checks += v.checked;
        if (!v.equivalent() && bad.empty()) bad = fx.rule + ": " + v.detail;
        if (v.equivalent()) covered.insert(fx.rule);
    }
    std::size_t missing = 0;
    for (const auto& info : rule_catalogue()) missing += covered.count(info.id) ? 0 : 1;
    Result r{bad.empty() && missing == 0, std::to_string(suites) + " suites over " +
                                              std::to_string(rule_catalogue().size()) + " rules, " +
                                              std::to_string(checks) + " checks, " + std::to_string(missing) +
                                              " rules uncovered"};
    if (!bad.empty()) r.detail += "; violation: " + bad;
    return r;
}

Result criterion6() {
    testgen::Rng rng(7);
    testgen::SahlqvistGenerator gen(rng, {"p", "q", "r"}, 5);
    int ok = 0;
    std::string bad;
    for (int k = 0; k < 500; ++k) {
        const auto s = gen.next();
        const AlbaResult r = run_alba(s.ineq, s.epsilon);
        std::string why;
        if (!r.success()) why = "failed";
        for (const auto& q : r.preprocessed) {
            std::vector<Order> vals;
            for (const auto& p : order_variables(q)) vals.push_back(s.epsilon.at(p));
            if (why.empty() && !is_definite(q, OrderType(order_variables(q), vals))) why = "not definite";
        }
        for (const auto& b : r.branches) {
            std::string off;
            if (why.empty() && !shape::literal_sided(b.after_substage1, &off)) why = "substage 1 shape: " + off;
            if (why.empty() && !shape::inner_heads(b.after_substage2, s.epsilon, &off))
                why = "substage 2 shape: " + off;
        }
        if (why.empty())
            ++ok;
        else if (bad.empty())
            bad = to_string(s.ineq) + " (" + s.epsilon.to_string() + "): " + why;
    }
    Result r{ok == 500, std::to_string(ok) + "/500 succeeded with all shape checks"};
    if (!bad.empty()) r.detail += "; first failure: " + bad;
    return r;
}

Result criterion7() {
    testgen::Rng rng(11);
    testgen::FormulaConfig cfg;
    cfg.expanded = true;
    cfg.depth = 5;
    cfg.free_svars = {"z"};
    const Vocabulary vocab{{"p", "q"}, {"i", "j"}, {"z"}};
    int agree = 0;
    for (int k = 0; k < 10000; ++k) {
        const KripkeModel m = testgen::random_model(rng, 4, vocab);
        const Formula f = testgen::random_formula(rng, cfg);
        const World w = static_cast<World>(testgen::pick(rng, m.frame.size()));
        fol::Interpretation in;
        in.preds = m.valuation.props;
        in.constants = m.valuation.noms;
        in.vars = m.assignment.vars;
        in.vars["x"] = w;
        const fol::FOFormula t = fol::st_formula("x", f);
        const bool hybrid = satisfies(m.frame, m.valuation, m.assignment, w, f);
        ref::Env re = ref::from(m);
        re.vars["x"] = static_cast<int>(w);
        const bool naive = ref::sat(ref::from(m.frame), re, static_cast<int>(w), f);
        if (hybrid == fol::fo_eval(m.frame, in, t) && hybrid == naive) ++agree;
    }
    return {agree == 10000, std::to_string(agree) + "/10000 pairs agree"};
}

}  // namespace

int main() {
    bool all = true;
    all &= report(1, "first reference trace and quasi-inequality", criterion1);
    all &= report(2, "second reference quasi-inequality with quantified head", criterion2);
    all &= report(3, "classification and signed generation tree", criterion3);
    const auto t4 = Clock::now();
    all &= report(4, "Sahlqvist suite equivalent on all frames up to 3 worlds", [&] {
        Result r = criterion4();
        if (ms_since(t4) > 300000.0) r = {false, r.detail + "; over 5 minutes"};
        return r;
    });
    all &= report(5, "rule soundness for every rule id", criterion5);
    all &= report(6, "500 generated instances succeed with structural checks", criterion6);
    all &= report(7, "hybrid truth agrees with the standard translation", criterion7);
    return all ? 0 : 1;
}
