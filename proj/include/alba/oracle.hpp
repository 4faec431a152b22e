// Brute-force finite-frame oracle: frame enumeration, correspondence checks
// and per-rule soundness checks.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "alba/engine.hpp"
#include "alba/fol.hpp"
#include "alba/semantics.hpp"

namespace alba::oracle {

constexpr int kMaxEnumeratedWorlds = 5;

/// Number of frames with 1..n_max worlds.
std::uint64_t frame_count(int n_max);

/// Visits every frame with 1..n_max worlds: by world count, then relation
/// bitmask (see KripkeFrame::from_bits). The callback returns false to stop.
void for_each_frame(int n_max, const std::function<bool(const KripkeFrame&, std::uint64_t index)>& fn);

/// Materialized form of for_each_frame; n_max <= 4.
std::vector<KripkeFrame> enumerate_frames(int n_max);

struct Verdict {
    enum class Kind : std::uint8_t { Equivalent, Counterexample };
    Kind kind = Kind::Equivalent;
    std::uint64_t checked = 0;
    /// Counterexample data.
    std::optional<KripkeFrame> frame;
    std::optional<KripkeModel> model;
    bool premise_side = false;
    bool conclusion_side = false;
    std::string detail;

    bool equivalent() const { return kind == Kind::Equivalent; }
};

/// Compares frame validity of `s` with truth of the sentence `fo` on every
/// frame up to n_max worlds; the first mismatch in enumeration order wins.
/// premise_side is the hybrid verdict, conclusion_side the first-order one.
Verdict check_correspondence(const Statement& s, const fol::FOFormula& fo, int n_max, unsigned threads = 0,
                             std::uint64_t budget = kDefaultBudget);

struct RuleInstance {
    std::string rule;
    SoundnessLevel level;
    Statement premise;
    Statement conclusion;
};

/// Statement form of a single-rule rewrite. For first_approx the
/// conclusion is the quasi-inequality closing the new system with i0 <= ~i1.
RuleInstance instance_of(const Rewrite& rw);

/// Model level: `samples` random models with 1..n_max worlds.
/// Valuation level: every frame up to n_max worlds and every
/// interpretation of the shared names; the premise must be satisfiable by
/// extending it to premise-only names exactly when the conclusion is by
/// extending it to conclusion-only names.
/// Validity level: frame validity agrees on every frame up to n_max worlds.
Verdict check_rule_soundness(const RuleInstance& inst, int n_max, int samples, std::uint64_t seed = 1);

}  // namespace alba::oracle
