// The staged correspondence algorithm for H(@, down).
//
//   Stage 1   preprocess: distribution, splitting, monotone/antitone
//             elimination, then first approximation per branch
//   Stage 2   reduction: substage 1 (outer part), substage 2 (inner part),
//             substage 3 (packing), substage 4 (Ackermann)
//   Stage 3   output: quasi-inequalities, standard translation, closure
//
// Every rewrite is recorded as a Step carrying the whole system before and
// after, so a run can be replayed and compared against reference traces.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "alba/fol.hpp"
#include "alba/formula.hpp"
#include "alba/sgt.hpp"

namespace alba {

enum class Stage : std::uint8_t { Preprocess, FirstApproximation, Substage1, Substage2, Substage3, Substage4 };
const char* stage_name(Stage s);

using System = std::vector<Mega>;

struct Position {
    std::size_t item = 0;
    /// Slash separated route: mega nodes (forall, conj.0, conj.1), then the
    /// side (lhs, rhs) and child indices inside the formula.
    std::string path;
    std::size_t quantifier_depth = 0;
};

struct Step {
    std::string rule;
    Stage stage;
    Position position;
    System before;
    System after;
};

struct Diagnostic {
    std::string variable;
    std::string item;
    std::string reason;
};

struct BranchRun {
    Inequality preprocessed{mk::top(), mk::top()};
    std::string i0;
    std::string i1;
    /// Nominals created in this branch, i0 and i1 first.
    std::vector<std::string> nominals;
    std::vector<Step> steps;
    System after_substage1;
    System after_substage2;
    System after_substage3;
    System reduce;
    std::optional<QuasiUQInequality> quasi;
    std::optional<fol::FOFormula> fo;
    std::vector<Diagnostic> stuck;
    bool ok = false;
};

struct AlbaOptions {
    /// Constant folding on the pure output items only.
    bool simplify = false;
};

struct AlbaResult {
    Inequality input{mk::top(), mk::top()};
    OrderType epsilon;
    std::vector<Step> preprocess_steps;
    std::vector<Inequality> preprocessed;
    std::vector<BranchRun> branches;
    std::optional<fol::FOFormula> fo;
    bool success() const { return fo.has_value(); }
};

std::vector<Inequality> preprocess(const Inequality& ineq, std::vector<Step>* trace = nullptr);
System first_approximation(const Inequality& ineq, FreshNames& fresh);

/// Runs one order type.
AlbaResult run_alba(const Inequality& ineq, const OrderType& e, const AlbaOptions& opts = {});
/// Tries the Sahlqvist order types in lexicographic order, then every other
/// candidate; returns the first success or the first failed attempt.
AlbaResult run_alba_auto(const Inequality& ineq, const AlbaOptions& opts = {});

// ---------------------------------------------------------------------------
// Rule catalogue and single-rule application
// ---------------------------------------------------------------------------

/// How a rule is justified: preserving truth in every model, preserving
/// the existence of a valuation of the fresh names, or preserving frame
/// validity.
enum class SoundnessLevel : std::uint8_t { Model, Valuation, Validity };
const char* soundness_level_name(SoundnessLevel l);

struct RuleInfo {
    std::string id;
    Stage stage;
    SoundnessLevel level;
};

const std::vector<RuleInfo>& rule_catalogue();
std::optional<RuleInfo> rule_info(const std::string& id);

struct Rewrite {
    Step step;
    /// Names introduced by the rule (fresh nominals or state variables).
    std::vector<std::string> introduced;
};

/// Applies `rule` once at its first match in `system`. Stage 1 rules and
/// first_approx read the system as a list of plain inequalities; the
/// Ackermann rules need an order type and act on the first variable they
/// can eliminate.
std::optional<Rewrite> apply_rule(const std::string& rule, const System& system, FreshNames& fresh,
                                  const OrderType* e = nullptr);

/// Structural checks used by the property suites.
namespace shape {
/// Non-pure items have a literal side: i <= a, x <= a, b <= ~i or b <= ~x.
bool literal_sided(const System& s, std::string* offending = nullptr);
/// Every item is a universally quantified inequality whose head is pure,
/// a <= p (e(p)=1, a pure), p <= b (e(p)=d, b pure), a <= g with a pure and
/// +g e^d-uniform, or g <= b with b pure and -g e^d-uniform.
bool inner_heads(const System& s, const OrderType& e, std::string* offending = nullptr);
}  // namespace shape

}  // namespace alba
