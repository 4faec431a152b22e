#include "alba/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace alba::oracle {
namespace {

void guard(int n_max) {
    if (n_max < 1 || n_max > kMaxEnumeratedWorlds)
        throw std::invalid_argument("frame enumeration supports 1.." + std::to_string(kMaxEnumeratedWorlds) +
                                    " worlds, got " + std::to_string(n_max));
}

std::uint64_t frames_with(int n) { return std::uint64_t{1} << (n * n); }

KripkeFrame frame_at(std::uint64_t index) {
    int n = 1;
    while (index >= frames_with(n)) {
        index -= frames_with(n);
        ++n;
    }
    return KripkeFrame::from_bits(static_cast<std::size_t>(n), index);
}

Vocabulary merge(const Vocabulary& a, const Vocabulary& b) {
    auto join = [](std::vector<std::string> x, const std::vector<std::string>& y) {
        x.insert(x.end(), y.begin(), y.end());
        std::sort(x.begin(), x.end());
        x.erase(std::unique(x.begin(), x.end()), x.end());
        return x;
    };
    return {join(a.props, b.props), join(a.noms, b.noms), join(a.svars, b.svars)};
}

KripkeModel model_of(const KripkeFrame& f, const Vocabulary& v, const std::vector<WorldSet>& p,
                     const std::vector<World>& i, const std::vector<World>& x) {
    KripkeModel m;
    m.frame = f;
    for (std::size_t k = 0; k < v.props.size(); ++k) m.valuation.props[v.props[k]] = p[k];
    for (std::size_t k = 0; k < v.noms.size(); ++k) m.valuation.noms[v.noms[k]] = i[k];
    for (std::size_t k = 0; k < v.svars.size(); ++k) m.assignment.vars[v.svars[k]] = x[k];
    return m;
}

Statement system_statement(const System& s) {
    if (s.size() == 1) return s.front();
    return mega_conj(s);
}

}  // namespace

std::uint64_t frame_count(int n_max) {
    guard(n_max);
    std::uint64_t total = 0;
    for (int n = 1; n <= n_max; ++n) total += frames_with(n);
    return total;
}

void for_each_frame(int n_max, const std::function<bool(const KripkeFrame&, std::uint64_t)>& fn) {
    guard(n_max);
    std::uint64_t index = 0;
    for (int n = 1; n <= n_max; ++n)
        for (std::uint64_t bits = 0; bits < frames_with(n); ++bits, ++index)
            if (!fn(KripkeFrame::from_bits(static_cast<std::size_t>(n), bits), index)) return;
}

std::vector<KripkeFrame> enumerate_frames(int n_max) {
    if (n_max > 4) throw std::invalid_argument("enumerate_frames materializes at most 4 worlds; use for_each_frame");
    std::vector<KripkeFrame> out;
    for_each_frame(n_max, [&](const KripkeFrame& f, std::uint64_t) {
        out.push_back(f);
        return true;
    });
    return out;
}

Verdict check_correspondence(const Statement& s, const fol::FOFormula& fo, int n_max, unsigned threads,
                             std::uint64_t budget) {
    const std::uint64_t total = frame_count(n_max);
    if (!fol::is_sentence(fo)) throw std::invalid_argument("correspondent must be a first-order sentence");
    const Vocabulary vocab = vocabulary_of(s);
    const std::uint64_t required = enumeration_size(static_cast<std::size_t>(n_max), vocab);
    if (required > budget) throw BudgetExceeded(required, budget);
    const CompiledStatement cs(s, vocab);
    const fol::CompiledFO cf(fo);

    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

    constexpr std::uint64_t kChunk = 64;
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> first_bad{total};
    std::mutex mu;
    std::exception_ptr error;
    std::uint64_t error_index = total;

    auto worker = [&] {
        while (true) {
            const std::uint64_t start = next.fetch_add(kChunk);
            if (start >= total || start >= first_bad.load()) return;
            const std::uint64_t end = std::min(total, start + kChunk);
            for (std::uint64_t idx = start; idx < end && idx < first_bad.load(); ++idx) {
                try {
                    const KripkeFrame f = frame_at(idx);
                    const bool hv = for_each_interpretation(
                        f.size(), vocab,
                        [&](const std::vector<WorldSet>& p, const std::vector<World>& i, const std::vector<World>& x) {
                            return cs.holds(f, p, i, x);
                        });
                    const bool fv = cf.eval(f, {});
                    if (hv != fv) {
                        std::uint64_t cur = first_bad.load();
                        while (idx < cur && !first_bad.compare_exchange_weak(cur, idx)) {
                        }
                        break;
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (idx < error_index) {
                        error_index = idx;
                        error = std::current_exception();
                    }
                    return;
                }
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    const std::uint64_t bad = first_bad.load();
    if (error && error_index < bad) std::rethrow_exception(error);

    Verdict v;
    if (bad == total) {
        v.checked = total;
        return v;
    }
    const KripkeFrame f = frame_at(bad);
    v.kind = Verdict::Kind::Counterexample;
    v.checked = bad + 1;
    v.frame = f;
    v.conclusion_side = cf.eval(f, {});
    v.premise_side = !v.conclusion_side;
    v.detail = v.premise_side ? "inequality valid, first-order sentence false" : "first-order sentence true, inequality not valid";
    return v;
}

RuleInstance instance_of(const Rewrite& rw) {
    const Step& st = rw.step;
    auto info = rule_info(st.rule);
    if (!info) throw std::invalid_argument("unknown rule '" + st.rule + "'");
    RuleInstance inst{st.rule, info->level, system_statement(st.before), system_statement(st.after)};
    if (st.rule == "first_approx") {
        if (rw.introduced.size() != 2) throw std::logic_error("first_approx introduces two nominals");
        std::vector<UQInequality> premises;
        for (const auto& m : st.after) premises.push_back(*as_uq(m));
        inst.conclusion = QuasiUQInequality{
            std::move(premises), {{}, {mk::nom(rw.introduced[0]), mk::neg(mk::nom(rw.introduced[1]))}}};
    }
    return inst;
}

Verdict check_rule_soundness(const RuleInstance& inst, int n_max, int samples, std::uint64_t seed) {
    const Vocabulary vp = vocabulary_of(inst.premise);
    const Vocabulary vc = vocabulary_of(inst.conclusion);
    const Vocabulary all = merge(vp, vc);
    Verdict v;

    if (inst.level == SoundnessLevel::Model) {
        if (n_max < 1 || n_max > static_cast<int>(kMaxWorlds)) throw std::invalid_argument("bad world bound");
        std::mt19937_64 rng(seed);
        for (int s = 0; s < samples; ++s) {
            const std::size_t n = 1 + rng() % static_cast<std::uint64_t>(n_max);
            KripkeFrame f(n);
            for (World a = 0; a < n; ++a)
                for (World b = 0; b < n; ++b)
                    if (rng() & 1U) f.add_edge(a, b);
            std::vector<WorldSet> p;
            std::vector<World> i;
            std::vector<World> x;
            for (std::size_t k = 0; k < all.props.size(); ++k) p.push_back(rng() & f.all());
            for (std::size_t k = 0; k < all.noms.size(); ++k) i.push_back(static_cast<World>(rng() % n));
            for (std::size_t k = 0; k < all.svars.size(); ++k) x.push_back(static_cast<World>(rng() % n));
            KripkeModel m = model_of(f, all, p, i, x);
            const bool a = holds(m.frame, m.valuation, m.assignment, inst.premise);
            const bool b = holds(m.frame, m.valuation, m.assignment, inst.conclusion);
            ++v.checked;
            if (a != b) {
                v.kind = Verdict::Kind::Counterexample;
                v.frame = f;
                v.model = m;
                v.premise_side = a;
                v.conclusion_side = b;
                v.detail = "premise and conclusion disagree on a model";
                return v;
            }
        }
        return v;
    }

    if (inst.level == SoundnessLevel::Validity) {
        for_each_frame(n_max, [&](const KripkeFrame& f, std::uint64_t) {
            const bool a = frame_valid(f, inst.premise);
            const bool b = frame_valid(f, inst.conclusion);
            ++v.checked;
            if (a == b) return true;
            v.kind = Verdict::Kind::Counterexample;
            v.frame = f;
            v.premise_side = a;
            v.conclusion_side = b;
            v.detail = "frame validity differs";
            return false;
        });
        return v;
    }

    // Valuation level: compare the projections onto the shared names.
    auto shared_index = [&](const std::vector<std::string>& names, const std::vector<std::string>& a,
                            const std::vector<std::string>& b) {
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < names.size(); ++k)
            if (std::binary_search(a.begin(), a.end(), names[k]) && std::binary_search(b.begin(), b.end(), names[k]))
                idx.push_back(k);
        return idx;
    };
    const auto sp = shared_index(all.props, vp.props, vc.props);
    const auto si = shared_index(all.noms, vp.noms, vc.noms);
    const auto sx = shared_index(all.svars, vp.svars, vc.svars);
    const CompiledStatement cp(inst.premise, all);
    const CompiledStatement cc(inst.conclusion, all);

    using Key = std::vector<std::uint64_t>;
    for_each_frame(n_max, [&](const KripkeFrame& f, std::uint64_t) {
        std::set<Key> with_premise;
        std::set<Key> with_conclusion;
        std::map<Key, KripkeModel> witness;
        for_each_interpretation(
            f.size(), all, [&](const std::vector<WorldSet>& p, const std::vector<World>& i, const std::vector<World>& x) {
                Key key;
                for (auto k : sp) key.push_back(p[k]);
                for (auto k : si) key.push_back(i[k]);
                for (auto k : sx) key.push_back(x[k]);
                const bool a = cp.holds(f, p, i, x);
                const bool b = cc.holds(f, p, i, x);
                if (a) with_premise.insert(key);
                if (b) with_conclusion.insert(key);
                if ((a || b) && !witness.count(key)) witness.emplace(key, model_of(f, all, p, i, x));
                return true;
            });
        ++v.checked;
        if (with_premise == with_conclusion) return true;
        v.kind = Verdict::Kind::Counterexample;
        v.frame = f;
        for (const auto& [key, m] : witness) {
            const bool a = with_premise.count(key) != 0;
            const bool b = with_conclusion.count(key) != 0;
            if (a != b) {
                v.model = m;
                v.premise_side = a;
                v.conclusion_side = b;
                break;
            }
        }
        v.detail = "satisfiability over the shared names differs";
        return false;
    });
    return v;
}

}  // namespace alba::oracle
