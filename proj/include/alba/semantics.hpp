// Finite Kripke semantics for the expanded hybrid language.
//
// Worlds are 0..n-1 with n <= 64, world sets are bitmasks. Formulas and
// statements can be compiled once against a vocabulary and then evaluated
// many times, which is what the exhaustive validity checks do.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "alba/formula.hpp"

namespace alba {

using World = std::uint32_t;
using WorldSet = std::uint64_t;

constexpr std::size_t kMaxWorlds = 64;

class KripkeFrame {
public:
    explicit KripkeFrame(std::size_t n);
    /// Frame whose relation is read from the low n*n bits of `bits`; bit
    /// a*n+b stands for the edge (a,b).
    static KripkeFrame from_bits(std::size_t n, std::uint64_t bits);

    std::size_t size() const { return n_; }
    WorldSet all() const { return n_ == 64 ? ~WorldSet{0} : (WorldSet{1} << n_) - 1; }
    void add_edge(World a, World b);
    bool has_edge(World a, World b) const { return (succ_[a] >> b) & 1U; }
    WorldSet successors(World a) const { return succ_[a]; }
    WorldSet predecessors(World b) const { return pred_[b]; }
    std::vector<std::pair<World, World>> edges() const;

    friend bool operator==(const KripkeFrame& a, const KripkeFrame& b) { return a.n_ == b.n_ && a.succ_ == b.succ_; }

private:
    std::size_t n_;
    std::vector<WorldSet> succ_;
    std::vector<WorldSet> pred_;
};

struct Valuation {
    std::map<std::string, WorldSet> props;
    std::map<std::string, World> noms;
};

struct Assignment {
    std::map<std::string, World> vars;
    Assignment with(const std::string& x, World w) const {
        Assignment g = *this;
        g.vars[x] = w;
        return g;
    }
};

/// Raised when a formula mentions a name that the valuation or assignment
/// does not cover.
class MissingName : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget);
    std::uint64_t required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

WorldSet truth_set(const KripkeFrame& frame, const Valuation& v, const Assignment& g, const Formula& f);
bool satisfies(const KripkeFrame& frame, const Valuation& v, const Assignment& g, World w, const Formula& f);
bool holds(const KripkeFrame& frame, const Valuation& v, const Assignment& g, const Statement& s);

struct Vocabulary {
    std::vector<std::string> props;
    std::vector<std::string> noms;
    std::vector<std::string> svars;  // free state variables only
};

/// Names occurring in a statement, each list sorted.
Vocabulary vocabulary_of(const Statement& s);
Vocabulary vocabulary_of(const Formula& f);

constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Number of (valuation, assignment) combinations frame_valid would check,
/// saturating at UINT64_MAX.
std::uint64_t enumeration_size(std::size_t worlds, const Vocabulary& vocab);

bool frame_valid(const KripkeFrame& frame, const Statement& s, const Vocabulary& vocab,
                 std::uint64_t budget = kDefaultBudget);
bool frame_valid(const KripkeFrame& frame, const Statement& s, std::uint64_t budget = kDefaultBudget);

/// Name-to-slot resolved program for repeated evaluation.
class CompiledStatement {
public:
    CompiledStatement(const Statement& s, const Vocabulary& vocab);

    const Vocabulary& vocabulary() const { return vocab_; }
    /// props[i], noms[i], svars[i] follow the vocabulary order.
    bool holds(const KripkeFrame& frame, const std::vector<WorldSet>& props, const std::vector<World>& noms,
               const std::vector<World>& svars) const;

    struct Node {
        Op op;
        int slot;  // prop/nom/svar slot, or bound variable slot
        int a;
        int b;
    };
    struct MegaNode {
        Mega::Kind kind;
        int slot;  // Forall: svar slot
        int a;     // Leaf: lhs formula node; Conj/Forall: child mega node
        int b;     // Leaf: rhs formula node; Conj: right mega node
    };

private:
    friend class StatementCompiler;
    Vocabulary vocab_;
    std::vector<Node> nodes_;
    std::vector<MegaNode> megas_;
    std::vector<int> premises_;  // mega roots
    int conclusion_ = -1;
    std::size_t svar_slots_ = 0;
};

/// Iterates every (props, noms, svars) combination for a vocabulary on a
/// frame of `n` worlds. The callback returns false to stop early; the
/// function returns false exactly when stopped.
bool for_each_interpretation(std::size_t n, const Vocabulary& vocab,
                             const std::function<bool(const std::vector<WorldSet>&, const std::vector<World>&,
                                                      const std::vector<World>&)>& fn);

// ---------------------------------------------------------------------------
// Fixture text format
// ---------------------------------------------------------------------------

struct KripkeModel {
    KripkeFrame frame{1};
    Valuation valuation;
    Assignment assignment;
};

/// worlds: n / edges: (a,b) ... / prop p: {..} / nom 'i: w / svar $x: w
KripkeModel parse_model(const std::string& text);
std::string format_model(const KripkeModel& m);
std::string format_frame(const KripkeFrame& f);

}  // namespace alba
