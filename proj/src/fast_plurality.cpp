#include "ovc/fast_plurality.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace ovc {

namespace {

void require(const ControlInstance& inst, ControlType control) {
    if (inst.control != control)
        throw ValidationError("fast-engine-unsupported",
                              "this algorithm handles " + to_string(control) +
                                  " control only");
    if (inst.system != "plurality")
        throw ValidationError("fast-engine-unsupported",
                              "this algorithm handles the plurality system only");
    if (auto v = validate_instance(inst))
        throw ValidationError(v->code, v->message);
}

struct Segments {
    std::unordered_set<std::string> favourable;  // cc: Up(d); dc: C \ Down(d)
    std::unordered_set<std::string> threats;     // cc: C \ Up(d); dc: Down(d)
};

Segments split_candidates(const ControlInstance& inst) {
    GoalSpec goal = goal_of(inst);
    Segments seg;
    if (inst.mode == GoalMode::Constructive) {
        for (const auto& c : goal.up_set()) seg.favourable.insert(c);
        for (const auto& c : inst.candidates)
            if (!seg.favourable.count(c)) seg.threats.insert(c);
    } else {
        for (const auto& c : goal.down_set()) seg.threats.insert(c);
        for (const auto& c : inst.candidates)
            if (!seg.threats.count(c)) seg.favourable.insert(c);
    }
    return seg;
}

long long max_score(const std::unordered_map<std::string, long long>& scores,
                    const std::unordered_set<std::string>& within) {
    long long best = 0;
    for (const auto& c : within) {
        auto it = scores.find(c);
        long long s = it == scores.end() ? 0 : it->second;
        best = std::max(best, s);
    }
    return best;
}

}  // namespace

bool fast_dv(const ControlInstance& inst) {
    require(inst, ControlType::DeleteVoters);
    Segments seg = split_candidates(inst);
    bool constructive = inst.mode == GoalMode::Constructive;
    if (seg.threats.empty()) return constructive;  // dc: threats include d

    std::unordered_map<std::string, long long> scores;
    int deletions_used = 0;
    for (const auto& rec : inst.past) {
        if (rec.flag == PastFlag::Deleted)
            ++deletions_used;
        else
            ++scores[rec.ballot->front()];
    }
    long long remaining = inst.budget - deletions_used;

    const std::string& u_top = inst.current_ballot.front();
    bool delete_u = remaining > 0 && seg.threats.count(u_top) &&
                    scores[u_top] == max_score(scores, seg.threats);
    if (delete_u)
        --remaining;
    else
        ++scores[u_top];

    long long hostile_growth =
        std::max<long long>(0, static_cast<long long>(inst.future.size()) -
                                   remaining);
    long long best_favourable = max_score(scores, seg.favourable);
    long long worst_threat = max_score(scores, seg.threats) + hostile_growth;
    return constructive ? best_favourable >= worst_threat
                        : best_favourable > worst_threat;
}

bool fast_av(const ControlInstance& inst) {
    require(inst, ControlType::AddVoters);
    Segments seg = split_candidates(inst);
    bool constructive = inst.mode == GoalMode::Constructive;
    if (seg.threats.empty()) return constructive;

    std::unordered_map<std::string, long long> scores;
    int additions_used = 0;
    for (const auto& rec : inst.past) {
        if (rec.flag == PastFlag::Skipped) continue;
        if (rec.flag == PastFlag::Added) ++additions_used;
        ++scores[rec.ballot->front()];
    }
    long long remaining = inst.budget - additions_used;

    // Add u exactly when her top choice lies in the favourable segment;
    // future unregistered voters are never worth adding in the worst case,
    // so the rest of the budget stays idle there.
    const std::string& u_top = inst.current_ballot.front();
    if (remaining > 0 && seg.favourable.count(u_top)) ++scores[u_top];

    long long registered_futures = 0;
    for (const auto& f : inst.future)
        if (f.registered) ++registered_futures;

    long long best_favourable = max_score(scores, seg.favourable);
    long long worst_threat = max_score(scores, seg.threats) + registered_futures;
    return constructive ? best_favourable >= worst_threat
                        : best_favourable > worst_threat;
}

}  // namespace ovc
