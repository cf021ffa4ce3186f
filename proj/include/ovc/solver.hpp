#pragma once

#include <cstdint>
#include <optional>

#include "ovc/game.hpp"

namespace ovc {

struct SolverConfig {
    // Universal branching enumerates all |C|! ballots; refuse larger
    // candidate sets (a single candidate is always fine, the branching is
    // degenerate there).
    int max_candidates = 5;
    // Replace the |C|! adversary ballots by one representative per top
    // choice. Takes effect only for top-only systems under dv/av control.
    bool top_only_reduction = true;
    // Cache values of alternation-free positions. Takes effect only for
    // anonymous systems.
    bool memoize = true;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    int max_depth = 0;
};

struct Verdict {
    bool chair_wins = false;
    // First chair action achieving the value; present only on a win with a
    // pending decision.
    std::optional<ChairAction> witness;
    SearchStats stats;
};

// Exact decision of the online control question by alternating evaluation:
// chair nodes are existential, revealed-ballot nodes universal, terminals
// evaluate the goal on the ultimate election. Exhaustive and deterministic.
// Throws ValidationError on a malformed instance and CapError when the
// candidate set exceeds the branching cap.
Verdict solve(const ControlInstance& inst, const SolverConfig& cfg = {});

// Same evaluation started from an arbitrary reachable position.
Verdict solve_from_state(const ControlInstance& inst, const GameState& state,
                         const SolverConfig& cfg = {});

// A chair action at u whose subgame is chair-winning, ties broken by the
// fixed action order. Throws Error on a chair-losing instance.
ChairAction best_action(const ControlInstance& inst,
                        const SolverConfig& cfg = {});

// A revealed ballot minimizing the chair's value at a reveal point, by
// exhaustive evaluation; ties broken by lexicographic ballot enumeration.
PreferenceOrder adversary_best_reply(const ControlInstance& inst,
                                     const GameState& state,
                                     const SolverConfig& cfg = {});

}  // namespace ovc
