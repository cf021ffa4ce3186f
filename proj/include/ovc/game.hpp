#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ovc/core.hpp"

namespace ovc {

enum class ControlType { DeleteVoters, AddVoters, PartitionVoters };
enum class GoalMode { Constructive, Destructive };

enum class PastFlag {
    Kept,        // DV: ballot counted
    Deleted,     // DV: ballot removed, not part of the record
    Registered,  // AV: counted automatically
    Added,       // AV: unregistered, added by the chair
    Skipped,     // AV: unregistered, passed over; ballot unknown
    Left,        // PV
    Right,       // PV
};

enum class ChairAction { Keep, Delete, Skip, Add, AssignLeft, AssignRight };

std::string to_string(ControlType t);
std::string to_string(GoalMode m);
std::string to_string(PastFlag f);
std::string to_string(ChairAction a);
std::optional<ControlType> control_from_string(const std::string& s);
std::optional<GoalMode> mode_from_string(const std::string& s);
std::optional<PastFlag> past_flag_from_string(const std::string& s);
std::optional<ChairAction> chair_action_from_string(const std::string& s);

struct PastRecord {
    std::string voter;
    PastFlag flag = PastFlag::Kept;
    std::optional<PreferenceOrder> ballot;  // absent iff Deleted or Skipped

    bool operator==(const PastRecord&) const = default;
};

struct FutureVoter {
    std::string name;
    bool registered = false;  // meaningful for AV only

    bool operator==(const FutureVoter&) const = default;
};

// One online control snapshot: the decided past, the current voter u whose
// ballot is on the table, and the ordered roster of future voters whose
// ballots are still unknown.
struct ControlInstance {
    ControlType control = ControlType::DeleteVoters;
    GoalMode mode = GoalMode::Constructive;
    std::string system;
    std::vector<CandidateName> candidates;
    PreferenceOrder sigma;  // chair's order, most preferred first
    CandidateName distinguished;
    int budget = 0;  // DV/AV only; 0 for PV
    std::vector<PastRecord> past;
    std::string current_voter;
    PreferenceOrder current_ballot;
    bool current_registered = false;  // AV: must be false
    std::vector<FutureVoter> future;

    bool operator==(const ControlInstance&) const = default;
};

// Goal predicate over the chair's order: the upper segment Up(d) must meet
// the winner set (constructive) or the lower segment Down(d) must miss it
// (destructive).
struct GoalSpec {
    GoalMode mode = GoalMode::Constructive;
    PreferenceOrder sigma;
    CandidateName distinguished;

    std::vector<CandidateName> up_set() const;    // {c : c >=_sigma d}
    std::vector<CandidateName> down_set() const;  // {c : c <=_sigma d}
};

GoalSpec goal_of(const ControlInstance& inst);
bool goal_holds(const GoalSpec& goal, const std::vector<CandidateName>& winners);

// Game position: accumulated effective ballots, chair-action usage, the
// index of the next future voter, and the revealed ballot awaiting the
// chair's decision (when at a decision point).
struct GameState {
    std::vector<Ballot> counted;  // DV: kept; AV: registered + added
    std::vector<Ballot> left;     // PV
    std::vector<Ballot> right;    // PV
    int actions_used = 0;         // deletions or additions so far
    std::size_t next_future = 0;
    std::optional<Ballot> pending;

    bool operator==(const GameState&) const = default;
};

// State with the past replayed and u's ballot pending. The instance is
// assumed valid (see validate_instance).
GameState initial_state(const ControlInstance& inst);

bool state_is_terminal(const ControlInstance& inst, const GameState& state);

// Actions available at the pending decision point, in the fixed order
// keep < delete, skip < add, left < right. Empty when no decision pends.
std::vector<ChairAction> legal_chair_actions(const ControlInstance& inst,
                                             const GameState& state);

// Deterministic successor; throws Error on an illegal action.
GameState apply_chair_action(const ControlInstance& inst, GameState state,
                             ChairAction action);

// Reveals the next future voter's ballot. Registered AV voters enter the
// election directly; everyone else becomes the pending decision point.
GameState reveal_vote(const ControlInstance& inst, GameState state,
                      const std::string& voter, const PreferenceOrder& order);

struct PartitionOutcome {
    std::vector<CandidateName> first_round_left;   // W1
    std::vector<CandidateName> first_round_right;  // W2
    std::vector<CandidateName> runoff_winners;
};

// Two-round election with ties-promote: all winners of each side advance,
// the runoff runs over their union with every ballot masked down to it.
// A runoff over zero candidates has an empty winner set.
PartitionOutcome run_two_round_tp(const ElectionSystem& system,
                                  const std::vector<CandidateName>& candidates,
                                  const std::vector<Ballot>& left,
                                  const std::vector<Ballot>& right);

// Winner set of the ultimate election of a terminal state.
std::vector<CandidateName> finalize_and_evaluate(const ControlInstance& inst,
                                                 const GameState& state);

// First violated invariant, or nothing if the instance is well formed.
std::optional<Violation> validate_instance(const ControlInstance& inst);

// Non-online voter-partition decision for a single candidate: she can be
// made a winner iff she wins the election in which everyone votes.
bool nononline_ccpv_one_candidate(const ElectionSystem& system,
                                  const std::vector<CandidateName>& candidates,
                                  const std::vector<Ballot>& votes);

}  // namespace ovc
