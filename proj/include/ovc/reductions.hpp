#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ovc/game.hpp"
#include "ovc/oracles.hpp"

namespace ovc {

enum class QbfFamily { Ccdv, Ccav, Dcdv, Dcav, Ccpv, Dcpv };

std::string to_string(QbfFamily f);
std::optional<QbfFamily> qbf_family_from_string(const std::string& s);
std::vector<QbfFamily> all_qbf_families();

// Control instance whose chair wins exactly when the alternating formula
// instance is true. dv/av families run over two formula-named candidates
// with 3l voters whose name suffixes drive the winner rule; pv families run
// over {RoundOne, formula} with the Marker voter first.
ControlInstance reduce_qbf(const QbfPrimeInstance& q, QbfFamily family);

// One-candidate partition instance; the chair can keep the candidate from
// winning exactly when the formula is satisfiable. Requires every variable
// index 1..max to occur.
ControlInstance reduce_sat_1cand(const FormulaPtr& f);

enum class HsVariant { Constructive, Destructive };

// Plurality partition instance built from a Hitting Set instance; the chair
// can reach her goal exactly when no hitting set of size <= k exists.
ControlInstance reduce_hitting_set(const HittingSetInstance& h, HsVariant variant);

// Zero-budget deletion instance over the tautology-testing system; the
// chair's top choice is guaranteed to win exactly when the formula is a
// tautology. The current voter's name sorts after the n future testers, so
// the adversary freely chooses every variable.
ControlInstance reduce_taut(const FormulaPtr& f);

// Score accounting for both proof strategies on the Hitting Set reduction.
// When a hitting set exists the adversary tops its members and the runoff
// scores are identical across all partitions of u and the future voters;
// otherwise the chair groups u with all future voters and the greedy
// adversary draws tops from the universe.
struct HsScoreReport {
    bool has_hitting_set = false;
    std::vector<CandidateName> adversary_tops;   // B' as candidate names
    std::vector<CandidateName> final_round;      // runoff candidate set
    long long score_c = 0;
    long long score_w = 0;
    long long sum_adversary_tops = 0;            // total runoff score of B'
    std::vector<CandidateName> runoff_winners;
    bool partitions_agree = true;  // yes branch: scores equal across partitions
    long long max_a_side_score = 0;  // largest first-round score of an A-candidate
    long long min_c_side_score = 0;  // smallest first-round score of c
};

HsScoreReport simulate_hs_proof_strategies(const HittingSetInstance& h);

// --- corpora and generators ------------------------------------------------

// Fixed single-alternation formulas (max variable index 2).
std::vector<FormulaPtr> corpus_qbf_l1();
// Seeded distinct formulas with max variable index exactly 4.
std::vector<FormulaPtr> corpus_qbf_l2(std::uint64_t seed, std::size_t count = 20);
// Fixed formulas over at most three variables, every index occurring;
// mixes satisfiable, unsatisfiable and tautological shapes.
std::vector<FormulaPtr> corpus_small_formulas();
// All Hitting Set instances with m, n in {1, 2}, k in 1..m, over every
// collection of nonempty subsets.
std::vector<HittingSetInstance> hs_corpus();

struct RandomSpec {
    ControlType control = ControlType::DeleteVoters;
    GoalMode mode = GoalMode::Constructive;
    int candidates = 3;
    int past = 2;
    int future = 2;
    int budget = 1;  // ignored for pv
};

// Uniform ballots over all |C|! orders, flags uniform subject to validity.
ControlInstance random_instance(const RandomSpec& spec, std::uint64_t seed);

// Exhaustive dv/av plurality space: canonical candidate names, every sigma
// and distinguished candidate, both modes, all past flag/ballot
// combinations, all current ballots, 0..max_future future voters and
// budgets 0..max_budget. The callback returns false to stop early.
struct PluralitySpaceOptions {
    int max_candidates = 3;
    int max_past = 2;
    int max_future = 3;
    int max_budget = 2;
};

void enumerate_plurality_space(
    const PluralitySpaceOptions& opts,
    const std::function<bool(const ControlInstance&)>& visit);

// --- equivalence harness -----------------------------------------------------

enum class Suite { PluralityFastVsExact, Qbf, Sat1c, Taut, HsScores };

std::string to_string(Suite s);
std::optional<Suite> suite_from_string(const std::string& s);

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::uint64_t limit = 0;        // 0: enumerate everything
    std::size_t record_cap = 2000;  // keep per-case rows up to this many
};

struct CaseResult {
    std::string id;
    std::string expected;
    std::string got;
    bool agree = false;
    std::string counterexample;  // instance dump, filled on disagreement
};

struct VerifyReport {
    std::string suite;
    std::uint64_t total = 0;
    std::uint64_t agreements = 0;
    std::uint64_t disagreements = 0;
    std::vector<CaseResult> cases;       // complete when total <= record_cap
    std::vector<CaseResult> mismatches;  // always complete
};

VerifyReport verify_equivalence(Suite suite, const VerifyOptions& opts = {});

}  // namespace ovc
