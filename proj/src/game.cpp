#include "ovc/game.hpp"

#include <algorithm>
#include <unordered_set>

namespace ovc {

std::string to_string(ControlType t) {
    switch (t) {
        case ControlType::DeleteVoters: return "dv";
        case ControlType::AddVoters: return "av";
        case ControlType::PartitionVoters: return "pv";
    }
    return "?";
}

std::string to_string(GoalMode m) {
    return m == GoalMode::Constructive ? "constructive" : "destructive";
}

std::string to_string(PastFlag f) {
    switch (f) {
        case PastFlag::Kept: return "kept";
        case PastFlag::Deleted: return "deleted";
        case PastFlag::Registered: return "registered";
        case PastFlag::Added: return "added";
        case PastFlag::Skipped: return "skipped";
        case PastFlag::Left: return "left";
        case PastFlag::Right: return "right";
    }
    return "?";
}

std::string to_string(ChairAction a) {
    switch (a) {
        case ChairAction::Keep: return "keep";
        case ChairAction::Delete: return "delete";
        case ChairAction::Skip: return "skip";
        case ChairAction::Add: return "add";
        case ChairAction::AssignLeft: return "left";
        case ChairAction::AssignRight: return "right";
    }
    return "?";
}

std::optional<ControlType> control_from_string(const std::string& s) {
    if (s == "dv") return ControlType::DeleteVoters;
    if (s == "av") return ControlType::AddVoters;
    if (s == "pv") return ControlType::PartitionVoters;
    return std::nullopt;
}

std::optional<GoalMode> mode_from_string(const std::string& s) {
    if (s == "constructive") return GoalMode::Constructive;
    if (s == "destructive") return GoalMode::Destructive;
    return std::nullopt;
}

std::optional<PastFlag> past_flag_from_string(const std::string& s) {
    if (s == "kept") return PastFlag::Kept;
    if (s == "deleted") return PastFlag::Deleted;
    if (s == "registered") return PastFlag::Registered;
    if (s == "added") return PastFlag::Added;
    if (s == "skipped") return PastFlag::Skipped;
    if (s == "left") return PastFlag::Left;
    if (s == "right") return PastFlag::Right;
    return std::nullopt;
}

std::optional<ChairAction> chair_action_from_string(const std::string& s) {
    if (s == "keep") return ChairAction::Keep;
    if (s == "delete") return ChairAction::Delete;
    if (s == "skip") return ChairAction::Skip;
    if (s == "add") return ChairAction::Add;
    if (s == "left") return ChairAction::AssignLeft;
    if (s == "right") return ChairAction::AssignRight;
    return std::nullopt;
}

std::vector<CandidateName> GoalSpec::up_set() const {
    std::vector<CandidateName> out;
    for (const auto& c : sigma) {
        out.push_back(c);
        if (c == distinguished) break;
    }
    return out;
}

std::vector<CandidateName> GoalSpec::down_set() const {
    std::vector<CandidateName> out;
    bool seen = false;
    for (const auto& c : sigma) {
        if (c == distinguished) seen = true;
        if (seen) out.push_back(c);
    }
    return out;
}

GoalSpec goal_of(const ControlInstance& inst) {
    return GoalSpec{inst.mode, inst.sigma, inst.distinguished};
}

bool goal_holds(const GoalSpec& goal, const std::vector<CandidateName>& winners) {
    if (goal.mode == GoalMode::Constructive) {
        for (const auto& c : goal.up_set())
            if (std::find(winners.begin(), winners.end(), c) != winners.end())
                return true;
        return false;
    }
    for (const auto& c : goal.down_set())
        if (std::find(winners.begin(), winners.end(), c) != winners.end())
            return false;
    return true;
}

GameState initial_state(const ControlInstance& inst) {
    GameState s;
    for (const auto& rec : inst.past) {
        switch (rec.flag) {
            case PastFlag::Kept:
            case PastFlag::Registered:
                s.counted.push_back({rec.voter, *rec.ballot});
                break;
            case PastFlag::Added:
                s.counted.push_back({rec.voter, *rec.ballot});
                ++s.actions_used;
                break;
            case PastFlag::Deleted:
                ++s.actions_used;
                break;
            case PastFlag::Skipped:
                break;
            case PastFlag::Left:
                s.left.push_back({rec.voter, *rec.ballot});
                break;
            case PastFlag::Right:
                s.right.push_back({rec.voter, *rec.ballot});
                break;
        }
    }
    s.pending = Ballot{inst.current_voter, inst.current_ballot};
    return s;
}

bool state_is_terminal(const ControlInstance& inst, const GameState& state) {
    return !state.pending.has_value() &&
           state.next_future == inst.future.size();
}

std::vector<ChairAction> legal_chair_actions(const ControlInstance& inst,
                                             const GameState& state) {
    if (!state.pending.has_value()) return {};
    switch (inst.control) {
        case ControlType::DeleteVoters: {
            std::vector<ChairAction> out{ChairAction::Keep};
            if (state.actions_used < inst.budget) out.push_back(ChairAction::Delete);
            return out;
        }
        case ControlType::AddVoters: {
            std::vector<ChairAction> out{ChairAction::Skip};
            if (state.actions_used < inst.budget) out.push_back(ChairAction::Add);
            return out;
        }
        case ControlType::PartitionVoters:
            return {ChairAction::AssignLeft, ChairAction::AssignRight};
    }
    return {};
}

GameState apply_chair_action(const ControlInstance& inst, GameState state,
                             ChairAction action) {
    auto legal = legal_chair_actions(inst, state);
    if (std::find(legal.begin(), legal.end(), action) == legal.end())
        throw Error("illegal chair action '" + to_string(action) + "'");
    Ballot b = std::move(*state.pending);
    state.pending.reset();
    switch (action) {
        case ChairAction::Keep:
            state.counted.push_back(std::move(b));
            break;
        case ChairAction::Delete:
            ++state.actions_used;
            break;
        case ChairAction::Skip:
            break;
        case ChairAction::Add:
            state.counted.push_back(std::move(b));
            ++state.actions_used;
            break;
        case ChairAction::AssignLeft:
            state.left.push_back(std::move(b));
            break;
        case ChairAction::AssignRight:
            state.right.push_back(std::move(b));
            break;
    }
    return state;
}

GameState reveal_vote(const ControlInstance& inst, GameState state,
                      const std::string& voter, const PreferenceOrder& order) {
    if (state.pending.has_value())
        throw Error("reveal: a chair decision is pending");
    if (state.next_future >= inst.future.size())
        throw Error("reveal: no future voter remains");
    const FutureVoter& expected = inst.future[state.next_future];
    if (expected.name != voter)
        throw Error("reveal: expected voter '" + expected.name + "', got '" +
                    voter + "'");
    if (!is_total_order_over(order, inst.candidates))
        throw Error("reveal: ballot is not a total order over the candidates");
    ++state.next_future;
    if (inst.control == ControlType::AddVoters && expected.registered) {
        state.counted.push_back({voter, order});  // enters automatically
    } else {
        state.pending = Ballot{voter, order};
    }
    return state;
}

PartitionOutcome run_two_round_tp(const ElectionSystem& system,
                                  const std::vector<CandidateName>& candidates,
                                  const std::vector<Ballot>& left,
                                  const std::vector<Ballot>& right) {
    PartitionOutcome out;
    out.first_round_left = system.winners(candidates, left);
    out.first_round_right = system.winners(candidates, right);

    std::vector<CandidateName> promoted = out.first_round_left;
    promoted.insert(promoted.end(), out.first_round_right.begin(),
                    out.first_round_right.end());
    std::sort(promoted.begin(), promoted.end());
    promoted.erase(std::unique(promoted.begin(), promoted.end()),
                   promoted.end());
    if (promoted.empty()) return out;  // zero-candidate runoff

    std::vector<Ballot> runoff_votes;
    runoff_votes.reserve(left.size() + right.size());
    for (const auto& b : left)
        runoff_votes.push_back({b.voter, mask(b.order, promoted)});
    for (const auto& b : right)
        runoff_votes.push_back({b.voter, mask(b.order, promoted)});
    out.runoff_winners = system.winners(promoted, runoff_votes);
    return out;
}

std::vector<CandidateName> finalize_and_evaluate(const ControlInstance& inst,
                                                 const GameState& state) {
    if (!state_is_terminal(inst, state))
        throw Error("finalize: state is not terminal");
    const ElectionSystem* sys = find_system(inst.system);
    if (sys == nullptr) throw Error("unknown election system '" + inst.system + "'");
    if (inst.control == ControlType::PartitionVoters)
        return run_two_round_tp(*sys, inst.candidates, state.left, state.right)
            .runoff_winners;
    return sys->winners(inst.candidates, state.counted);
}

namespace {

bool flag_allowed(ControlType control, PastFlag flag) {
    switch (control) {
        case ControlType::DeleteVoters:
            return flag == PastFlag::Kept || flag == PastFlag::Deleted;
        case ControlType::AddVoters:
            return flag == PastFlag::Registered || flag == PastFlag::Added ||
                   flag == PastFlag::Skipped;
        case ControlType::PartitionVoters:
            return flag == PastFlag::Left || flag == PastFlag::Right;
    }
    return false;
}

bool ballot_required(PastFlag flag) {
    return flag != PastFlag::Deleted && flag != PastFlag::Skipped;
}

}  // namespace

std::optional<Violation> validate_instance(const ControlInstance& inst) {
    if (inst.candidates.empty())
        return Violation{"no-candidates", "candidate set is empty"};
    {
        std::unordered_set<std::string> seen;
        for (const auto& c : inst.candidates) {
            if (c.empty())
                return Violation{"empty-candidate-name", "candidate name is empty"};
            if (!seen.insert(c).second)
                return Violation{"duplicate-candidate",
                                 "duplicate candidate name '" + c + "'"};
        }
    }
    if (!is_total_order_over(inst.sigma, inst.candidates))
        return Violation{"sigma-not-total",
                         "sigma is not a total order over the candidate set"};
    if (std::find(inst.candidates.begin(), inst.candidates.end(),
                  inst.distinguished) == inst.candidates.end())
        return Violation{"distinguished-not-candidate",
                         "distinguished candidate '" + inst.distinguished +
                             "' is not in the candidate set"};
    if (inst.budget < 0)
        return Violation{"negative-budget", "budget is negative"};
    if (inst.control == ControlType::PartitionVoters && inst.budget != 0)
        return Violation{"budget-forbidden",
                         "partition control carries no budget"};

    std::unordered_set<std::string> voters;
    auto check_name = [&](const std::string& name) -> std::optional<Violation> {
        if (name.empty())
            return Violation{"empty-voter-name", "voter name is empty"};
        if (!voters.insert(name).second)
            return Violation{"duplicate-voter",
                             "duplicate voter name '" + name + "'"};
        return std::nullopt;
    };

    int used = 0;
    for (const auto& rec : inst.past) {
        if (auto v = check_name(rec.voter)) return v;
        if (!flag_allowed(inst.control, rec.flag))
            return Violation{"bad-flag", "flag '" + to_string(rec.flag) +
                                             "' is not valid for " +
                                             to_string(inst.control) +
                                             " control"};
        if (ballot_required(rec.flag)) {
            if (!rec.ballot.has_value())
                return Violation{"missing-ballot",
                                 "voter '" + rec.voter + "' must carry a ballot"};
            if (!is_total_order_over(*rec.ballot, inst.candidates))
                return Violation{"invalid-ballot",
                                 "ballot of voter '" + rec.voter +
                                     "' is not a total order over the "
                                     "candidate set"};
        } else if (rec.ballot.has_value()) {
            return Violation{"unexpected-ballot",
                             "voter '" + rec.voter +
                                 "' carries a ballot despite flag '" +
                                 to_string(rec.flag) + "'"};
        }
        if (rec.flag == PastFlag::Deleted || rec.flag == PastFlag::Added) ++used;
    }
    if ((inst.control == ControlType::DeleteVoters ||
         inst.control == ControlType::AddVoters) &&
        used > inst.budget)
        return Violation{"over-budget",
                         std::to_string(used) + " chair actions flagged but the "
                                                "budget is " +
                             std::to_string(inst.budget)};

    if (auto v = check_name(inst.current_voter)) return v;
    if (inst.control == ControlType::AddVoters && inst.current_registered)
        return Violation{"u-registered", "the current voter must be unregistered"};
    if (inst.control != ControlType::AddVoters && inst.current_registered)
        return Violation{"u-registered",
                         "the registered flag applies to av control only"};
    if (!is_total_order_over(inst.current_ballot, inst.candidates))
        return Violation{"invalid-ballot",
                         "ballot of the current voter is not a total order over "
                         "the candidate set"};

    for (const auto& f : inst.future) {
        if (auto v = check_name(f.name)) return v;
        if (inst.control != ControlType::AddVoters && f.registered)
            return Violation{"future-flag-forbidden",
                             "future voter '" + f.name +
                                 "' carries a registered flag outside av control"};
    }
    return std::nullopt;
}

bool nononline_ccpv_one_candidate(const ElectionSystem& system,
                                  const std::vector<CandidateName>& candidates,
                                  const std::vector<Ballot>& votes) {
    if (candidates.size() != 1)
        throw Error("one-candidate decision requires exactly one candidate");
    std::vector<CandidateName> winners = system.winners(candidates, votes);
    return std::find(winners.begin(), winners.end(), candidates.front()) !=
           winners.end();
}

}  // namespace ovc
