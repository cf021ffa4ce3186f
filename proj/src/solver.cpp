#include "ovc/solver.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace ovc {

namespace {

struct EngineBallot {
    std::uint32_t voter;  // index into the voter-name table
    std::uint16_t order;  // index into the permutation table
};

class Engine {
public:
    Engine(const ControlInstance& inst, const SolverConfig& cfg)
        : inst_(inst), cfg_(cfg) {
        if (auto v = validate_instance(inst_))
            throw ValidationError(v->code, v->message);
        sys_ = find_system(inst_.system);
        if (sys_ == nullptr)
            throw ValidationError("unknown-system",
                                  "unknown election system '" + inst_.system + "'");
        std::size_t n_cands = inst_.candidates.size();
        if (static_cast<int>(n_cands) > cfg_.max_candidates && n_cands != 1)
            throw CapError("candidate set of size " + std::to_string(n_cands) +
                           " exceeds the branching cap of " +
                           std::to_string(cfg_.max_candidates));

        cands_ = inst_.candidates;
        std::sort(cands_.begin(), cands_.end());
        build_orders();
        build_goal_masks();
        build_voter_table();

        partition_ = inst_.control == ControlType::PartitionVoters;
        plurality_terminal_ = sys_->top_only && !partition_;
        reduce_adversary_ =
            cfg_.top_only_reduction && sys_->top_only && !partition_;
        build_adversary_orders();
        memo_enabled_ = cfg_.memoize && sys_->anonymous && total_voters_ < 250;
        memo_packed_ = memo_enabled_ && !partition_ && reduce_adversary_ &&
                       cands_.size() <= 7 && total_voters_ < 128 &&
                       inst_.budget < 128 && inst_.future.size() < 120;

        counts_.assign(cands_.size(), 0);
        main_.reserve(total_voters_);
        left_.reserve(total_voters_);
        right_.reserve(total_voters_);
    }

    void load_state(const GameState& state) {
        main_.clear();
        left_.clear();
        right_.clear();
        counts_.assign(cands_.size(), 0);
        for (const auto& b : state.counted) push_main(ballot_of(b));
        for (const auto& b : state.left) left_.push_back(ballot_of(b));
        for (const auto& b : state.right) right_.push_back(ballot_of(b));
        used_ = state.actions_used;
        pos_ = state.next_future;
        pending_.reset();
        if (state.pending) pending_ = ballot_of(*state.pending);
    }

    Verdict run() {
        Verdict verdict;
        if (pending_) {
            EngineBallot pending = *pending_;
            pending_.reset();
            verdict.chair_wins = eval_decision(pending, 0, &verdict.witness);
        } else {
            verdict.chair_wins = eval_continue(0);
        }
        verdict.stats = stats_;
        return verdict;
    }

    // Chair value after revealing the given ballot for the next voter.
    bool value_after_reveal(std::uint16_t order_id) {
        const FutureVoter& voter = inst_.future[pos_];
        EngineBallot b{voter_id(voter.name), order_id};
        ++pos_;
        bool value;
        if (inst_.control == ControlType::AddVoters && voter.registered) {
            push_main(b);
            value = eval_continue(1);
            pop_main();
        } else {
            value = eval_decision(b, 1, nullptr);
        }
        --pos_;
        return value;
    }

    std::size_t order_count() const { return orders_named_.size(); }
    const PreferenceOrder& order_names(std::uint16_t id) const {
        return orders_named_[id];
    }
    bool at_reveal() const {
        return !pending_ && pos_ < inst_.future.size();
    }

private:
    void build_orders() {
        std::size_t n = cands_.size();
        std::vector<std::uint8_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint8_t>(i);
        do {
            orders_.push_back(perm);
            PreferenceOrder named(n);
            for (std::size_t i = 0; i < n; ++i) named[i] = cands_[perm[i]];
            orders_named_.push_back(std::move(named));
            order_lookup_[orders_named_.back()] =
                static_cast<std::uint16_t>(orders_.size() - 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    void build_goal_masks() {
        GoalSpec goal = goal_of(inst_);
        constructive_ = inst_.mode == GoalMode::Constructive;
        in_segment_.assign(cands_.size(), false);
        auto segment = constructive_ ? goal.up_set() : goal.down_set();
        for (const auto& name : segment) {
            auto it = std::lower_bound(cands_.begin(), cands_.end(), name);
            in_segment_[it - cands_.begin()] = true;
        }
    }

    void build_voter_table() {
        for (const auto& rec : inst_.past) add_voter(rec.voter);
        add_voter(inst_.current_voter);
        for (const auto& f : inst_.future) add_voter(f.name);
        total_voters_ = static_cast<int>(voter_names_.size());
    }

    void build_adversary_orders() {
        if (!reduce_adversary_) {
            for (std::uint16_t i = 0; i < orders_.size(); ++i)
                adversary_.push_back(i);
            return;
        }
        // One representative per top choice: the top followed by the rest
        // ascending; tops iterate in ascending name order.
        for (std::size_t top = 0; top < cands_.size(); ++top) {
            PreferenceOrder rep{cands_[top]};
            for (std::size_t i = 0; i < cands_.size(); ++i)
                if (i != top) rep.push_back(cands_[i]);
            adversary_.push_back(order_lookup_.at(rep));
        }
    }

    void add_voter(const std::string& name) {
        voter_lookup_[name] = static_cast<std::uint32_t>(voter_names_.size());
        voter_names_.push_back(name);
    }

    std::uint32_t voter_id(const std::string& name) const {
        return voter_lookup_.at(name);
    }

    EngineBallot ballot_of(const Ballot& b) const {
        auto it = order_lookup_.find(b.order);
        if (it == order_lookup_.end())
            throw Error("ballot of voter '" + b.voter +
                        "' is not a total order over the candidates");
        return EngineBallot{voter_id(b.voter), it->second};
    }

    void push_main(EngineBallot b) {
        main_.push_back(b);
        if (plurality_terminal_) ++counts_[orders_[b.order][0]];
    }

    void pop_main() {
        if (plurality_terminal_) --counts_[orders_[main_.back().order][0]];
        main_.pop_back();
    }

    // --- evaluation -------------------------------------------------------

    bool eval_decision(EngineBallot pending, int depth,
                       std::optional<ChairAction>* witness) {
        ++stats_.nodes;
        stats_.max_depth = std::max(stats_.max_depth, depth);
        bool can_spend = used_ < inst_.budget;
        switch (inst_.control) {
            case ControlType::DeleteVoters: {
                push_main(pending);
                bool keep = eval_continue(depth + 1);
                pop_main();
                if (keep) {
                    if (witness) *witness = ChairAction::Keep;
                    return true;
                }
                if (can_spend) {
                    ++used_;
                    bool del = eval_continue(depth + 1);
                    --used_;
                    if (del) {
                        if (witness) *witness = ChairAction::Delete;
                        return true;
                    }
                }
                return false;
            }
            case ControlType::AddVoters: {
                bool skip = eval_continue(depth + 1);
                if (skip) {
                    if (witness) *witness = ChairAction::Skip;
                    return true;
                }
                if (can_spend) {
                    push_main(pending);
                    ++used_;
                    bool add = eval_continue(depth + 1);
                    --used_;
                    pop_main();
                    if (add) {
                        if (witness) *witness = ChairAction::Add;
                        return true;
                    }
                }
                return false;
            }
            case ControlType::PartitionVoters: {
                left_.push_back(pending);
                bool left = eval_continue(depth + 1);
                left_.pop_back();
                if (left) {
                    if (witness) *witness = ChairAction::AssignLeft;
                    return true;
                }
                right_.push_back(pending);
                bool right = eval_continue(depth + 1);
                right_.pop_back();
                if (right) {
                    if (witness) *witness = ChairAction::AssignRight;
                    return true;
                }
                return false;
            }
        }
        return false;
    }

    bool eval_continue(int depth) {
        ++stats_.nodes;
        stats_.max_depth = std::max(stats_.max_depth, depth);
        if (pos_ == inst_.future.size()) return terminal_value();

        std::uint64_t packed_key = 0;
        std::string string_key;
        bool memo_here = memo_enabled_;
        if (memo_here) {
            if (memo_packed_) {
                packed_key = pack_key();
                auto it = memo64_.find(packed_key);
                if (it != memo64_.end()) return it->second;
            } else {
                string_key = state_key();
                auto it = memo_str_.find(string_key);
                if (it != memo_str_.end()) return it->second;
            }
        }

        const FutureVoter& voter = inst_.future[pos_];
        std::uint32_t vid = voter_id(voter.name);
        bool auto_enter =
            inst_.control == ControlType::AddVoters && voter.registered;
        ++pos_;
        bool value = true;
        for (std::uint16_t order_id : adversary_) {
            bool branch;
            if (auto_enter) {
                push_main(EngineBallot{vid, order_id});
                branch = eval_continue(depth + 1);
                pop_main();
            } else {
                branch = eval_decision(EngineBallot{vid, order_id}, depth + 1,
                                       nullptr);
            }
            if (!branch) {
                value = false;
                break;
            }
        }
        --pos_;

        if (memo_here) {
            if (memo_packed_)
                memo64_.emplace(packed_key, value);
            else
                memo_str_.emplace(std::move(string_key), value);
        }
        return value;
    }

    bool terminal_value() {
        if (plurality_terminal_) {
            long long best = 0;
            for (long long c : counts_) best = std::max(best, c);
            if (constructive_) {
                for (std::size_t i = 0; i < counts_.size(); ++i)
                    if (in_segment_[i] && counts_[i] == best) return true;
                return false;
            }
            for (std::size_t i = 0; i < counts_.size(); ++i)
                if (in_segment_[i] && counts_[i] == best) return false;
            return true;
        }
        std::vector<CandidateName> winners;
        if (partition_) {
            winners = run_two_round_tp(*sys_, inst_.candidates,
                                       materialize(left_), materialize(right_))
                          .runoff_winners;
        } else {
            winners = sys_->winners(inst_.candidates, materialize(main_));
        }
        bool hit = false;
        for (const auto& w : winners) {
            auto it = std::lower_bound(cands_.begin(), cands_.end(), w);
            if (it != cands_.end() && *it == w && in_segment_[it - cands_.begin()]) {
                hit = true;
                break;
            }
        }
        return constructive_ ? hit : !hit;
    }

    std::vector<Ballot> materialize(const std::vector<EngineBallot>& list) const {
        std::vector<Ballot> out;
        out.reserve(list.size());
        for (const auto& b : list)
            out.push_back({voter_names_[b.voter], orders_named_[b.order]});
        return out;
    }

    // Anonymous-state keys. With the top-only reduction active the value of
    // a position depends only on the top-choice tallies; otherwise on the
    // multisets of full ballots.
    std::uint64_t pack_key() const {
        std::uint64_t key = 0;
        for (long long c : counts_) key = (key << 7) | static_cast<std::uint64_t>(c);
        key = (key << 7) | static_cast<std::uint64_t>(used_);
        key = (key << 7) | static_cast<std::uint64_t>(pos_);
        return key;
    }

    std::string state_key() const {
        std::string key;
        auto append_multiset = [&](const std::vector<EngineBallot>& list) {
            std::string hist(orders_.size(), '\0');
            for (const auto& b : list) ++hist[b.order];
            key += hist;
        };
        if (partition_) {
            append_multiset(left_);
            key.push_back('#');
            append_multiset(right_);
        } else {
            append_multiset(main_);
        }
        key.push_back(static_cast<char>(used_));
        key.push_back(static_cast<char>(pos_));
        return key;
    }

    const ControlInstance& inst_;
    SolverConfig cfg_;
    const ElectionSystem* sys_ = nullptr;
    std::vector<CandidateName> cands_;  // ascending
    std::vector<std::vector<std::uint8_t>> orders_;
    std::vector<PreferenceOrder> orders_named_;
    std::map<PreferenceOrder, std::uint16_t> order_lookup_;
    std::vector<std::uint16_t> adversary_;
    std::vector<std::string> voter_names_;
    std::unordered_map<std::string, std::uint32_t> voter_lookup_;
    int total_voters_ = 0;

    bool constructive_ = true;
    std::vector<bool> in_segment_;
    bool partition_ = false;
    bool plurality_terminal_ = false;
    bool reduce_adversary_ = false;
    bool memo_enabled_ = false;
    bool memo_packed_ = false;

    std::vector<EngineBallot> main_, left_, right_;
    std::vector<long long> counts_;
    int used_ = 0;
    std::size_t pos_ = 0;
    std::optional<EngineBallot> pending_;

    std::unordered_map<std::uint64_t, bool> memo64_;
    std::unordered_map<std::string, bool> memo_str_;
    SearchStats stats_;
};

}  // namespace

Verdict solve(const ControlInstance& inst, const SolverConfig& cfg) {
    return solve_from_state(inst, initial_state(inst), cfg);
}

Verdict solve_from_state(const ControlInstance& inst, const GameState& state,
                         const SolverConfig& cfg) {
    Engine engine(inst, cfg);
    engine.load_state(state);
    return engine.run();
}

ChairAction best_action(const ControlInstance& inst, const SolverConfig& cfg) {
    Verdict verdict = solve(inst, cfg);
    if (!verdict.chair_wins || !verdict.witness)
        throw Error("best_action: the chair cannot guarantee her goal");
    return *verdict.witness;
}

PreferenceOrder adversary_best_reply(const ControlInstance& inst,
                                     const GameState& state,
                                     const SolverConfig& cfg) {
    Engine engine(inst, cfg);
    engine.load_state(state);
    if (!engine.at_reveal())
        throw Error("adversary_best_reply: the next move is not a reveal");
    std::uint16_t best = 0;
    bool best_value = true;
    for (std::uint16_t id = 0; id < engine.order_count(); ++id) {
        bool value = engine.value_after_reveal(id);
        if (id == 0 || (!value && best_value)) {
            best = id;
            best_value = value;
        }
        if (!best_value) break;  // the chair already loses; no better reply
    }
    return engine.order_names(best);
}

}  // namespace ovc
