#include "ovc/reductions.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "ovc/fast_plurality.hpp"
#include "ovc/io.hpp"
#include "ovc/rng.hpp"
#include "ovc/solver.hpp"
#include "ovc/systems.hpp"

namespace ovc {

std::string to_string(QbfFamily f) {
    switch (f) {
        case QbfFamily::Ccdv: return "ccdv";
        case QbfFamily::Ccav: return "ccav";
        case QbfFamily::Dcdv: return "dcdv";
        case QbfFamily::Dcav: return "dcav";
        case QbfFamily::Ccpv: return "ccpv";
        case QbfFamily::Dcpv: return "dcpv";
    }
    return "?";
}

std::optional<QbfFamily> qbf_family_from_string(const std::string& s) {
    for (QbfFamily f : all_qbf_families())
        if (to_string(f) == s) return f;
    return std::nullopt;
}

std::vector<QbfFamily> all_qbf_families() {
    return {QbfFamily::Ccdv, QbfFamily::Ccav, QbfFamily::Dcdv,
            QbfFamily::Dcav, QbfFamily::Ccpv, QbfFamily::Dcpv};
}

namespace {

PreferenceOrder ascending(const std::vector<CandidateName>& candidates) {
    PreferenceOrder out = candidates;
    std::sort(out.begin(), out.end());
    return out;
}

ControlInstance reduce_qbf_dv_av(const QbfPrimeInstance& q, QbfFamily family) {
    bool adding = family == QbfFamily::Ccav || family == QbfFamily::Dcav;
    bool destructive = family == QbfFamily::Dcdv || family == QbfFamily::Dcav;

    ControlInstance inst;
    inst.control = adding ? ControlType::AddVoters : ControlType::DeleteVoters;
    inst.mode = destructive ? GoalMode::Destructive : GoalMode::Constructive;
    inst.system = destructive ? "qbf-dv-flip" : "qbf-dv";

    std::string a = render_formula(q.formula);
    std::string b = a + "0";  // the string immediately following a
    inst.candidates = {a, b};
    inst.sigma = {a, b};
    inst.distinguished = destructive ? b : a;
    inst.budget = q.ell;

    int total = 3 * q.ell;
    int width = bit_length(total);
    for (int i = 1; i <= total; ++i) {
        std::string suffix = i % 3 == 1 ? "00" : i % 3 == 2 ? "01" : "10";
        std::string name = padded_binary(i, width) + suffix;
        if (i == 1) {
            inst.current_voter = name;
            inst.current_ballot = {a, b};
        } else {
            // i % 3 == 0 voters are registered in the adding variant.
            inst.future.push_back({name, adding && i % 3 == 0});
        }
    }
    return inst;
}

ControlInstance reduce_qbf_pv(const QbfPrimeInstance& q, QbfFamily family) {
    bool destructive = family == QbfFamily::Dcpv;

    ControlInstance inst;
    inst.control = ControlType::PartitionVoters;
    inst.mode = destructive ? GoalMode::Destructive : GoalMode::Constructive;
    inst.system = destructive ? "roundone-flip" : "roundone";

    std::string a = render_formula(q.formula);
    inst.candidates = {kRoundOneCandidate, a};
    inst.sigma = destructive ? PreferenceOrder{kRoundOneCandidate, a}
                             : PreferenceOrder{a, kRoundOneCandidate};
    inst.distinguished = a;

    inst.current_voter = kMarkerVoter;
    inst.current_ballot = ascending(inst.candidates);

    int two_ell = 2 * q.ell;
    for (int j = 1; j <= q.ell; ++j) {
        inst.future.push_back({roundone_voter_name(2 * j - 1, two_ell, "yes"), false});
        inst.future.push_back({roundone_voter_name(2 * j - 1, two_ell, "no"), false});
        inst.future.push_back({roundone_voter_name(2 * j, two_ell, ""), false});
    }
    return inst;
}

}  // namespace

ControlInstance reduce_qbf(const QbfPrimeInstance& q, QbfFamily family) {
    if (!q.formula || q.ell < 1 || max_var_index(*q.formula) != 2 * q.ell)
        throw ValidationError("malformed-qbf",
                              "instance formula does not match ell");
    ControlInstance inst;
    if (family == QbfFamily::Ccpv || family == QbfFamily::Dcpv)
        inst = reduce_qbf_pv(q, family);
    else
        inst = reduce_qbf_dv_av(q, family);
    if (auto v = validate_instance(inst))
        throw Error("generated instance is invalid: " + v->message);
    return inst;
}

ControlInstance reduce_sat_1cand(const FormulaPtr& f) {
    int k = max_var_index(*f);
    std::vector<int> vars = var_indices(*f);
    if (static_cast<int>(vars.size()) != k)
        throw ValidationError("variable-gap",
                              "every index 1.." + std::to_string(k) +
                                  " must occur in the formula");

    ControlInstance inst;
    inst.control = ControlType::PartitionVoters;
    inst.mode = GoalMode::Destructive;
    inst.system = "sat-1c";
    std::string c = render_formula(f);
    inst.candidates = {c};
    inst.sigma = {c};
    inst.distinguished = c;

    int width = bit_length(2 * k);
    for (int i = 1; i <= 2 * k; ++i) {
        std::string name = padded_binary(i, width);
        if (i == 1) {
            inst.current_voter = name;
            inst.current_ballot = {c};
        } else {
            inst.future.push_back({name, false});
        }
    }
    if (auto v = validate_instance(inst))
        throw Error("generated instance is invalid: " + v->message);
    return inst;
}

ControlInstance reduce_taut(const FormulaPtr& f) {
    int n = max_var_index(*f);

    ControlInstance inst;
    inst.control = ControlType::DeleteVoters;
    inst.mode = GoalMode::Constructive;
    inst.system = "taut";
    inst.budget = 0;
    std::string a = render_formula(f);
    std::string b = a + "0";
    inst.candidates = {a, b};
    inst.sigma = {a, b};
    inst.distinguished = a;

    // The current voter's name sorts after every tester, so the winner rule
    // reads all n variables off the adversary-controlled future ballots.
    inst.current_voter = "u";
    inst.current_ballot = {a, b};
    int width = bit_length(n);
    for (int i = 1; i <= n; ++i)
        inst.future.push_back({padded_binary(i, width), false});

    if (auto v = validate_instance(inst))
        throw Error("generated instance is invalid: " + v->message);
    return inst;
}

// --- Hitting Set reduction ---------------------------------------------------

namespace {

struct HsNames {
    CandidateName c = "c";
    CandidateName w = "w";
    std::vector<CandidateName> b;  // b[j-1], ascending
    std::vector<CandidateName> a;  // a[i-1], ascending
    std::vector<CandidateName> all;
};

HsNames hs_candidate_names(const HittingSetInstance& h) {
    HsNames names;
    long long n = static_cast<long long>(h.sets.size());
    long long a_count = 4LL * h.m * n * h.k + 1;
    int b_width = static_cast<int>(std::to_string(h.m).size());
    int a_width = static_cast<int>(std::to_string(a_count).size());
    for (int j = 1; j <= h.m; ++j) {
        std::string idx = std::to_string(j);
        names.b.push_back("b" + std::string(b_width - idx.size(), '0') + idx);
    }
    for (long long i = 1; i <= a_count; ++i) {
        std::string idx = std::to_string(i);
        names.a.push_back("a" + std::string(a_width - idx.size(), '0') + idx);
    }
    names.all = names.a;
    names.all.insert(names.all.end(), names.b.begin(), names.b.end());
    names.all.push_back(names.c);
    names.all.push_back(names.w);  // ascending: a... < b... < c < w
    return names;
}

// Ballot starting with the given candidates, followed by everyone else in
// ascending name order.
PreferenceOrder prefixed_ballot(const std::vector<CandidateName>& prefix,
                                const std::vector<CandidateName>& all) {
    PreferenceOrder order = prefix;
    std::unordered_set<std::string> used(prefix.begin(), prefix.end());
    for (const auto& c : all)
        if (!used.count(c)) order.push_back(c);
    return order;
}

std::vector<PreferenceOrder> hs_side_ballots(const HittingSetInstance& h,
                                             const HsNames& names) {
    long long n = static_cast<long long>(h.sets.size());
    long long votes_cw = 4LL * n * h.k;
    std::vector<PreferenceOrder> side;

    for (long long i = 0; i < votes_cw; ++i)
        side.push_back(prefixed_ballot({names.c, names.w}, names.all));
    for (long long i = 0; i < votes_cw; ++i)
        side.push_back(prefixed_ballot({names.w, names.c}, names.all));

    std::vector<long long> top_votes(h.m, 0);  // b_j tops from set ballots
    for (const auto& s : h.sets) {
        std::vector<int> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        std::vector<CandidateName> prefix;
        for (int e : sorted) prefix.push_back(names.b[e - 1]);
        prefix.push_back(names.c);
        for (int i = 0; i < 2 * h.k; ++i)
            side.push_back(prefixed_ballot(prefix, names.all));
        top_votes[sorted.front() - 1] += 2 * h.k;
    }

    // Padding lifts every b_j to a first-round score of 4nk - 1.
    for (int j = 1; j <= h.m; ++j) {
        long long padding = votes_cw - 1 - top_votes[j - 1];
        std::vector<CandidateName> prefix{names.b[j - 1]};
        for (int jj = 1; jj <= h.m; ++jj)
            if (jj != j) prefix.push_back(names.b[jj - 1]);
        prefix.push_back(names.c);
        prefix.push_back(names.w);
        for (long long i = 0; i < padding; ++i)
            side.push_back(prefixed_ballot(prefix, names.all));
    }

    long long a_solid = 4LL * h.m * n * h.k;
    for (long long i = 0; i < a_solid; ++i) {
        side.push_back(prefixed_ballot({names.a[i], names.c}, names.all));
        side.push_back(prefixed_ballot({names.a[i], names.w}, names.all));
    }
    return side;
}

std::string decimal_padded(long long value, int width) {
    std::string s = std::to_string(value);
    if (static_cast<int>(s.size()) < width)
        s.insert(s.begin(), width - s.size(), '0');
    return s;
}

}  // namespace

ControlInstance reduce_hitting_set(const HittingSetInstance& h,
                                   HsVariant variant) {
    validate_hitting_set(h);
    HsNames names = hs_candidate_names(h);
    std::vector<PreferenceOrder> side = hs_side_ballots(h, names);

    ControlInstance inst;
    inst.control = ControlType::PartitionVoters;
    inst.mode = variant == HsVariant::Constructive ? GoalMode::Constructive
                                                   : GoalMode::Destructive;
    inst.system = "plurality";
    inst.candidates = names.all;
    // Chair's order: c on top, w at the bottom, the rest ascending between.
    inst.sigma.push_back(names.c);
    for (const auto& cand : names.all)
        if (cand != names.c && cand != names.w) inst.sigma.push_back(cand);
    inst.sigma.push_back(names.w);
    inst.distinguished = variant == HsVariant::Constructive ? names.c : names.w;

    int name_width = static_cast<int>(std::to_string(2 * side.size()).size());
    long long seq = 0;
    for (const auto& order : side)
        inst.past.push_back(
            {"p" + decimal_padded(++seq, name_width), PastFlag::Left, order});
    for (const auto& order : side)
        inst.past.push_back(
            {"p" + decimal_padded(++seq, name_width), PastFlag::Right, order});

    inst.current_voter = "q";
    inst.current_ballot =
        prefixed_ballot({names.a.back(), names.w}, names.all);

    int future_width = static_cast<int>(std::to_string(h.k).size());
    for (int i = 1; i <= h.k; ++i)
        inst.future.push_back({"r" + decimal_padded(i, future_width), false});

    if (auto v = validate_instance(inst))
        throw Error("generated instance is invalid: " + v->message);
    return inst;
}

namespace {

// Distinct elements of the universe covering as many sets as possible,
// greedily, padded to exactly k elements; ties and padding prefer smaller
// indices.
std::vector<int> greedy_universe_tops(const HittingSetInstance& h) {
    std::vector<int> chosen;
    std::vector<bool> taken(h.m + 1, false);
    std::vector<bool> hit(h.sets.size(), false);
    for (int round = 0; round < h.k; ++round) {
        int best = -1;
        int best_gain = -1;
        for (int e = 1; e <= h.m; ++e) {
            if (taken[e]) continue;
            int gain = 0;
            for (std::size_t i = 0; i < h.sets.size(); ++i)
                if (!hit[i] && std::find(h.sets[i].begin(), h.sets[i].end(), e) !=
                                   h.sets[i].end())
                    ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = e;
            }
        }
        taken[best] = true;
        chosen.push_back(best);
        for (std::size_t i = 0; i < h.sets.size(); ++i)
            if (std::find(h.sets[i].begin(), h.sets[i].end(), best) !=
                h.sets[i].end())
                hit[i] = true;
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

// Smallest hitting set of size <= k, padded to exactly k elements.
std::vector<int> smallest_hitting_set_padded(const HittingSetInstance& h) {
    for (int size = 0; size <= h.k; ++size) {
        std::vector<int> mask;
        std::function<bool(int, int)> search = [&](int start, int left) -> bool {
            if (left == 0) {
                for (const auto& s : h.sets) {
                    bool hitset = false;
                    for (int e : s)
                        if (std::find(mask.begin(), mask.end(), e) != mask.end()) {
                            hitset = true;
                            break;
                        }
                    if (!hitset) return false;
                }
                return true;
            }
            for (int e = start; e <= h.m; ++e) {
                mask.push_back(e);
                if (search(e + 1, left - 1)) return true;
                mask.pop_back();
            }
            return false;
        };
        if (search(1, size)) {
            for (int e = 1; e <= h.m && static_cast<int>(mask.size()) < h.k; ++e)
                if (std::find(mask.begin(), mask.end(), e) == mask.end())
                    mask.push_back(e);
            std::sort(mask.begin(), mask.end());
            return mask;
        }
    }
    return {};
}

struct RunoffScores {
    std::vector<CandidateName> final_round;
    std::vector<CandidateName> winners;
    long long score_c = 0;
    long long score_w = 0;
    long long sum_tops = 0;
    long long max_a_side = 0;
    long long min_c_side = 0;
};

RunoffScores score_partition(const ControlInstance& inst, const HsNames& names,
                             const std::vector<CandidateName>& adversary_tops,
                             unsigned partition_bits) {
    // Bit i of partition_bits sends the i-th undecided voter (u first) to
    // the right side.
    GameState state = initial_state(inst);
    auto side_of = [&](unsigned i) {
        return (partition_bits >> i) & 1u ? ChairAction::AssignRight
                                          : ChairAction::AssignLeft;
    };
    state = apply_chair_action(inst, std::move(state), side_of(0));
    for (std::size_t i = 0; i < inst.future.size(); ++i) {
        PreferenceOrder order =
            prefixed_ballot({adversary_tops[i]}, inst.candidates);
        state = reveal_vote(inst, std::move(state), inst.future[i].name, order);
        state = apply_chair_action(inst, std::move(state),
                                   side_of(static_cast<unsigned>(i + 1)));
    }

    const ElectionSystem& plurality = *find_system("plurality");
    PartitionOutcome outcome = run_two_round_tp(plurality, inst.candidates,
                                                state.left, state.right);
    RunoffScores out;
    out.final_round = outcome.first_round_left;
    out.final_round.insert(out.final_round.end(),
                           outcome.first_round_right.begin(),
                           outcome.first_round_right.end());
    std::sort(out.final_round.begin(), out.final_round.end());
    out.final_round.erase(
        std::unique(out.final_round.begin(), out.final_round.end()),
        out.final_round.end());
    out.winners = outcome.runoff_winners;

    std::unordered_set<std::string> promoted(out.final_round.begin(),
                                             out.final_round.end());
    std::unordered_set<std::string> tops(adversary_tops.begin(),
                                         adversary_tops.end());
    auto runoff_top = [&](const PreferenceOrder& order) -> const std::string& {
        for (const auto& cand : order)
            if (promoted.count(cand)) return cand;
        throw Error("runoff ballot lost every candidate");
    };
    for (const auto* list : {&state.left, &state.right}) {
        for (const auto& ballot : *list) {
            const std::string& top = runoff_top(ballot.order);
            if (top == names.c) ++out.score_c;
            else if (top == names.w) ++out.score_w;
            if (tops.count(top)) ++out.sum_tops;
        }
    }

    // First-round side tallies for the A-candidate bound.
    bool first_side = true;
    for (const auto* list : {&state.left, &state.right}) {
        std::vector<long long> counts = top_counts(inst.candidates, *list);
        for (std::size_t i = 0; i < inst.candidates.size(); ++i) {
            const std::string& cand = inst.candidates[i];
            if (!cand.empty() && cand[0] == 'a')
                out.max_a_side = std::max(out.max_a_side, counts[i]);
            if (cand == names.c)
                out.min_c_side = first_side ? counts[i]
                                            : std::min(out.min_c_side, counts[i]);
        }
        first_side = false;
    }
    return out;
}

}  // namespace

HsScoreReport simulate_hs_proof_strategies(const HittingSetInstance& h) {
    validate_hitting_set(h);
    HsNames names = hs_candidate_names(h);
    ControlInstance inst = reduce_hitting_set(h, HsVariant::Constructive);

    HsScoreReport report;
    report.has_hitting_set = hitting_set_exists(h);

    std::vector<int> chosen = report.has_hitting_set
                                  ? smallest_hitting_set_padded(h)
                                  : greedy_universe_tops(h);
    for (int e : chosen) report.adversary_tops.push_back(names.b[e - 1]);

    if (report.has_hitting_set) {
        // Every partition of u and the future voters yields the same scores.
        unsigned partitions = 1u << (inst.future.size() + 1);
        std::optional<RunoffScores> reference;
        for (unsigned bits = 0; bits < partitions; ++bits) {
            RunoffScores scores =
                score_partition(inst, names, report.adversary_tops, bits);
            if (!reference) {
                reference = scores;
            } else if (scores.score_c != reference->score_c ||
                       scores.score_w != reference->score_w ||
                       scores.sum_tops != reference->sum_tops ||
                       scores.final_round != reference->final_round) {
                report.partitions_agree = false;
            }
            reference->max_a_side =
                std::max(reference->max_a_side, scores.max_a_side);
            reference->min_c_side =
                std::min(reference->min_c_side, scores.min_c_side);
        }
        report.final_round = reference->final_round;
        report.score_c = reference->score_c;
        report.score_w = reference->score_w;
        report.sum_adversary_tops = reference->sum_tops;
        report.runoff_winners = reference->winners;
        report.max_a_side_score = reference->max_a_side;
        report.min_c_side_score = reference->min_c_side;
    } else {
        // The chair groups u and every future voter into the left side.
        RunoffScores scores =
            score_partition(inst, names, report.adversary_tops, 0);
        report.final_round = scores.final_round;
        report.score_c = scores.score_c;
        report.score_w = scores.score_w;
        report.sum_adversary_tops = scores.sum_tops;
        report.runoff_winners = scores.winners;
        report.max_a_side_score = scores.max_a_side;
        report.min_c_side_score = scores.min_c_side;
    }
    return report;
}

// --- corpora -----------------------------------------------------------------

std::vector<FormulaPtr> corpus_qbf_l1() {
    static const char* texts[] = {
        "x2",
        "!x2",
        "(x1&x2)",
        "(x1|x2)",
        "(!x1&x2)",
        "(!x1|x2)",
        "(x1&!x2)",
        "(x1|!x2)",
        "((x1|x2)&(!x1|!x2))",
        "((x1&x2)|(!x1&!x2))",
    };
    std::vector<FormulaPtr> out;
    for (const char* t : texts) out.push_back(parse_formula(t));
    return out;
}

namespace {

FormulaPtr random_formula(Rng& rng, int max_var, int size_budget) {
    if (size_budget <= 1) return Formula::var(1 + rng.below_int(max_var));
    switch (rng.below_int(4)) {
        case 0:
            return Formula::var(1 + rng.below_int(max_var));
        case 1:
            return Formula::negation(random_formula(rng, max_var, size_budget - 1));
        case 2: {
            int left = 1 + rng.below_int(size_budget - 1);
            return Formula::conjunction(
                random_formula(rng, max_var, left),
                random_formula(rng, max_var, size_budget - 1 - left));
        }
        default: {
            int left = 1 + rng.below_int(size_budget - 1);
            return Formula::disjunction(
                random_formula(rng, max_var, left),
                random_formula(rng, max_var, size_budget - 1 - left));
        }
    }
}

}  // namespace

std::vector<FormulaPtr> corpus_qbf_l2(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    std::vector<FormulaPtr> out;
    std::set<std::string> seen;
    while (out.size() < count) {
        FormulaPtr f = random_formula(rng, 4, 7);
        if (max_var_index(*f) != 4) continue;
        if (!seen.insert(render_formula(f)).second) continue;
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<FormulaPtr> corpus_small_formulas() {
    static const char* texts[] = {
        // one variable
        "x1", "!x1", "!!x1", "(x1&x1)", "(x1|x1)", "(x1&!x1)", "(x1|!x1)",
        "(!x1&!x1)", "(!x1|!x1)",
        // two variables
        "(x1&x2)", "(x1|x2)", "(x1&!x2)", "(!x1&x2)", "(!x1&!x2)", "(!x1|x2)",
        "(x1|!x2)", "(!x1|!x2)", "((x1&x2)|(!x1&!x2))", "((x1|x2)&(!x1|!x2))",
        "((x1|!x2)&(!x1|x2))", "((x1&x2)&(!x1|!x2))", "((x1|x2)|(!x1&!x2))",
        "((x1&!x1)&x2)",
        // three variables
        "((x1&x2)&x3)", "((x1|x2)|x3)", "((x1&x2)|x3)", "((x1|x2)&x3)",
        "((x1&!x2)|x3)", "((x1|!x2)&!x3)", "(((x1|!x1)|x2)|x3)",
        "((x1&!x1)&(x2&x3))", "((x1|x2)&(!x2|x3))", "((!x1|!x2)|!x3)",
        "(((x1&x2)|(!x1&x3))&!x2)",
    };
    std::vector<FormulaPtr> out;
    for (const char* t : texts) out.push_back(parse_formula(t));
    return out;
}

std::vector<HittingSetInstance> hs_corpus() {
    std::vector<HittingSetInstance> out;
    for (int m = 1; m <= 2; ++m) {
        std::vector<std::vector<int>> subsets;
        for (int mask = 1; mask < (1 << m); ++mask) {
            std::vector<int> s;
            for (int e = 1; e <= m; ++e)
                if ((mask >> (e - 1)) & 1) s.push_back(e);
            subsets.push_back(std::move(s));
        }
        for (int n = 1; n <= 2; ++n) {
            std::vector<std::size_t> pick(n, 0);
            while (true) {
                for (int k = 1; k <= std::min(2, m); ++k) {
                    HittingSetInstance h;
                    h.m = m;
                    h.k = k;
                    for (int i = 0; i < n; ++i) h.sets.push_back(subsets[pick[i]]);
                    out.push_back(std::move(h));
                }
                int digit = n - 1;
                while (digit >= 0 && ++pick[digit] == subsets.size())
                    pick[digit--] = 0;
                if (digit < 0) break;
            }
        }
    }
    return out;
}

// --- random instances ----------------------------------------------------------

ControlInstance random_instance(const RandomSpec& spec, std::uint64_t seed) {
    if (spec.candidates < 1 || spec.candidates > 26)
        throw ValidationError("bad-spec", "candidate count must be in 1..26");
    if (spec.past < 0 || spec.future < 0 || spec.budget < 0)
        throw ValidationError("bad-spec", "counts must be nonnegative");

    Rng rng(seed);
    ControlInstance inst;
    inst.control = spec.control;
    inst.mode = spec.mode;
    inst.system = "plurality";
    for (int i = 0; i < spec.candidates; ++i)
        inst.candidates.push_back(std::string(1, static_cast<char>('a' + i)));
    inst.sigma = inst.candidates;
    rng.shuffle(inst.sigma);
    inst.distinguished = inst.candidates[rng.below_int(spec.candidates)];
    inst.budget =
        spec.control == ControlType::PartitionVoters ? 0 : spec.budget;

    auto random_ballot = [&] {
        PreferenceOrder order = inst.candidates;
        rng.shuffle(order);
        return order;
    };

    int width = static_cast<int>(std::to_string(std::max(1, spec.past)).size());
    bool valid = false;
    while (!valid) {
        inst.past.clear();
        int used = 0;
        for (int i = 1; i <= spec.past; ++i) {
            PastRecord rec;
            rec.voter = "p" + decimal_padded(i, width);
            switch (spec.control) {
                case ControlType::DeleteVoters:
                    rec.flag = rng.coin() ? PastFlag::Deleted : PastFlag::Kept;
                    break;
                case ControlType::AddVoters: {
                    int pick = rng.below_int(3);
                    rec.flag = pick == 0   ? PastFlag::Registered
                               : pick == 1 ? PastFlag::Added
                                           : PastFlag::Skipped;
                    break;
                }
                case ControlType::PartitionVoters:
                    rec.flag = rng.coin() ? PastFlag::Right : PastFlag::Left;
                    break;
            }
            if (rec.flag == PastFlag::Deleted || rec.flag == PastFlag::Added)
                ++used;
            if (rec.flag != PastFlag::Deleted && rec.flag != PastFlag::Skipped)
                rec.ballot = random_ballot();
            inst.past.push_back(std::move(rec));
        }
        valid = used <= inst.budget;  // uniform over valid flag vectors
    }

    inst.current_voter = "u";
    inst.current_ballot = random_ballot();
    int fwidth = static_cast<int>(std::to_string(std::max(1, spec.future)).size());
    for (int i = 1; i <= spec.future; ++i)
        inst.future.push_back(
            {"v" + decimal_padded(i, fwidth),
             spec.control == ControlType::AddVoters ? rng.coin() : false});

    if (auto v = validate_instance(inst))
        throw Error("generated instance is invalid: " + v->message);
    return inst;
}

// --- exhaustive dv/av plurality space ------------------------------------------

void enumerate_plurality_space(
    const PluralitySpaceOptions& opts,
    const std::function<bool(const ControlInstance&)>& visit) {
    for (ControlType control :
         {ControlType::DeleteVoters, ControlType::AddVoters}) {
        for (int n_cands = 1; n_cands <= opts.max_candidates; ++n_cands) {
            std::vector<CandidateName> candidates;
            for (int i = 0; i < n_cands; ++i)
                candidates.push_back(std::string(1, static_cast<char>('a' + i)));

            std::vector<PreferenceOrder> orders;
            {
                PreferenceOrder perm = candidates;
                do {
                    orders.push_back(perm);
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
            // Variants of one past record: every kept/registered ballot, for
            // av also every added ballot, plus the no-ballot flag.
            std::size_t order_count = orders.size();
            std::size_t variants = control == ControlType::AddVoters
                                       ? 2 * order_count + 1
                                       : order_count + 1;

            ControlInstance inst;
            inst.control = control;
            inst.system = "plurality";
            inst.candidates = candidates;
            inst.current_voter = "u";

            for (const auto& sigma : orders) {
                inst.sigma = sigma;
                for (const auto& d : candidates) {
                    inst.distinguished = d;
                    for (GoalMode mode :
                         {GoalMode::Constructive, GoalMode::Destructive}) {
                        inst.mode = mode;
                        for (int budget = 0; budget <= opts.max_budget; ++budget) {
                            inst.budget = budget;
                            for (int past = 0; past <= opts.max_past; ++past) {
                                std::vector<std::size_t> pick(past, 0);
                                while (true) {
                                    inst.past.clear();
                                    int used = 0;
                                    for (int i = 0; i < past; ++i) {
                                        PastRecord rec;
                                        rec.voter = "p" + std::to_string(i + 1);
                                        std::size_t v = pick[i];
                                        if (control == ControlType::DeleteVoters) {
                                            if (v < order_count) {
                                                rec.flag = PastFlag::Kept;
                                                rec.ballot = orders[v];
                                            } else {
                                                rec.flag = PastFlag::Deleted;
                                                ++used;
                                            }
                                        } else {
                                            if (v < order_count) {
                                                rec.flag = PastFlag::Registered;
                                                rec.ballot = orders[v];
                                            } else if (v < 2 * order_count) {
                                                rec.flag = PastFlag::Added;
                                                rec.ballot = orders[v - order_count];
                                                ++used;
                                            } else {
                                                rec.flag = PastFlag::Skipped;
                                            }
                                        }
                                        inst.past.push_back(std::move(rec));
                                    }
                                    if (used <= budget) {
                                        for (const auto& u_ballot : orders) {
                                            inst.current_ballot = u_ballot;
                                            int future_shapes =
                                                control == ControlType::AddVoters ? 2 : 1;
                                            for (int fcount = 0;
                                                 fcount <= opts.max_future; ++fcount) {
                                                int shapes = 1;
                                                for (int i = 0; i < fcount; ++i)
                                                    shapes *= future_shapes;
                                                for (int flags = 0; flags < shapes;
                                                     ++flags) {
                                                    inst.future.clear();
                                                    for (int i = 0; i < fcount; ++i)
                                                        inst.future.push_back(
                                                            {"f" + std::to_string(i + 1),
                                                             ((flags >> i) & 1) != 0});
                                                    if (!visit(inst)) return;
                                                }
                                            }
                                        }
                                    }
                                    int digit = past - 1;
                                    while (digit >= 0 && ++pick[digit] == variants)
                                        pick[digit--] = 0;
                                    if (digit < 0) break;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

// --- equivalence harness --------------------------------------------------------

std::string to_string(Suite s) {
    switch (s) {
        case Suite::PluralityFastVsExact: return "plurality-fast-vs-exact";
        case Suite::Qbf: return "qbf";
        case Suite::Sat1c: return "sat1c";
        case Suite::Taut: return "taut";
        case Suite::HsScores: return "hs-scores";
    }
    return "?";
}

std::optional<Suite> suite_from_string(const std::string& s) {
    for (Suite suite : {Suite::PluralityFastVsExact, Suite::Qbf, Suite::Sat1c,
                        Suite::Taut, Suite::HsScores})
        if (to_string(suite) == s) return suite;
    return std::nullopt;
}

namespace {

class ReportBuilder {
public:
    ReportBuilder(Suite suite, const VerifyOptions& opts) : opts_(opts) {
        report_.suite = to_string(suite);
    }

    // Returns false once the case limit is reached.
    bool add(const std::string& id, const std::string& expected,
             const std::string& got, const std::string& counterexample) {
        ++report_.total;
        bool agree = expected == got;
        if (agree)
            ++report_.agreements;
        else
            ++report_.disagreements;
        CaseResult result{id, expected, got, agree,
                          agree ? std::string{} : counterexample};
        if (!agree) report_.mismatches.push_back(result);
        if (report_.total <= opts_.record_cap)
            report_.cases.push_back(std::move(result));
        return opts_.limit == 0 || report_.total < opts_.limit;
    }

    VerifyReport take() {
        if (report_.total > opts_.record_cap) report_.cases.clear();
        return std::move(report_);
    }

private:
    VerifyOptions opts_;
    VerifyReport report_;
};

std::string verdict_name(bool chair_wins) {
    return chair_wins ? "chair-wins" : "chair-loses";
}

VerifyReport verify_fast_vs_exact(const VerifyOptions& opts) {
    ReportBuilder builder(Suite::PluralityFastVsExact, opts);
    std::uint64_t index = 0;
    enumerate_plurality_space({}, [&](const ControlInstance& inst) {
        bool exact = solve(inst).chair_wins;
        bool fast = inst.control == ControlType::DeleteVoters ? fast_dv(inst)
                                                              : fast_av(inst);
        std::string id = to_string(inst.control) + "/" + to_string(inst.mode) +
                         "/case" + std::to_string(index++);
        return builder.add(id, verdict_name(exact), verdict_name(fast),
                           exact == fast ? std::string{} : instance_to_json(inst));
    });
    return builder.take();
}

VerifyReport verify_qbf(const VerifyOptions& opts) {
    ReportBuilder builder(Suite::Qbf, opts);
    std::vector<FormulaPtr> corpus = corpus_qbf_l1();
    for (auto& f : corpus_qbf_l2(opts.seed)) corpus.push_back(std::move(f));
    for (const auto& f : corpus) {
        QbfPrimeInstance q = make_qbf_prime(f);
        bool expected = eval_qbf_prime(q);
        for (QbfFamily family : all_qbf_families()) {
            ControlInstance inst = reduce_qbf(q, family);
            bool got = solve(inst).chair_wins;
            std::string id =
                "qbf/" + to_string(family) + "/" + render_formula(f);
            if (!builder.add(id, verdict_name(expected), verdict_name(got),
                             expected == got ? std::string{}
                                             : instance_to_json(inst)))
                return builder.take();
        }
    }
    return builder.take();
}

VerifyReport verify_sat1c(const VerifyOptions& opts) {
    ReportBuilder builder(Suite::Sat1c, opts);
    for (const auto& f : corpus_small_formulas()) {
        ControlInstance inst = reduce_sat_1cand(f);
        bool expected = sat_satisfiable(f);
        bool got = solve(inst).chair_wins;
        std::string id = "sat1c/" + render_formula(f);
        if (!builder.add(id, verdict_name(expected), verdict_name(got),
                         expected == got ? std::string{} : instance_to_json(inst)))
            break;
    }
    return builder.take();
}

VerifyReport verify_taut(const VerifyOptions& opts) {
    ReportBuilder builder(Suite::Taut, opts);
    for (const auto& f : corpus_small_formulas()) {
        ControlInstance inst = reduce_taut(f);
        bool expected = taut(f);
        bool got = solve(inst).chair_wins;
        std::string id = "taut/" + render_formula(f);
        if (!builder.add(id, verdict_name(expected), verdict_name(got),
                         expected == got ? std::string{} : instance_to_json(inst)))
            break;
    }
    return builder.take();
}

std::string hs_case_id(const HittingSetInstance& h) {
    std::string id = "hs/m" + std::to_string(h.m) + "n" +
                     std::to_string(h.sets.size()) + "k" + std::to_string(h.k) +
                     "/";
    for (const auto& s : h.sets) {
        id += "{";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) id += ",";
            id += std::to_string(s[i]);
        }
        id += "}";
    }
    return id;
}

VerifyReport verify_hs_scores(const VerifyOptions& opts) {
    ReportBuilder builder(Suite::HsScores, opts);
    for (const auto& h : hs_corpus()) {
        long long n = static_cast<long long>(h.sets.size());
        long long base = 8 * n * h.k + 8 * h.m * n * h.k;
        HsScoreReport report = simulate_hs_proof_strategies(h);

        std::string expected, got;
        if (report.has_hitting_set) {
            long long expected_sum = 8 * h.m * n * h.k - 2 * h.m + h.k;
            expected = "c=" + std::to_string(base) +
                       " w=" + std::to_string(base + 1) +
                       " sum=" + std::to_string(expected_sum) +
                       " partitions=agree a<=" + std::to_string(2 + h.k);
            got = "c=" + std::to_string(report.score_c) +
                  " w=" + std::to_string(report.score_w) +
                  " sum=" + std::to_string(report.sum_adversary_tops) +
                  " partitions=" +
                  (report.partitions_agree ? "agree" : "differ") + " a<=" +
                  std::to_string(2 + h.k);
            if (report.max_a_side_score > 2 + h.k ||
                report.max_a_side_score >= report.min_c_side_score)
                got += " a-bound-broken";
        } else {
            bool c_ok = report.score_c >= base + 4 * h.k;
            bool w_ok = report.score_w <= base + 1 + h.k;
            bool unique_c = report.runoff_winners ==
                            std::vector<CandidateName>{"c"};
            expected = "c>=lb w<=ub unique-c a<=" + std::to_string(2 + h.k);
            got = std::string(c_ok ? "c>=lb" : "c<lb") + " " +
                  (w_ok ? "w<=ub" : "w>ub") + " " +
                  (unique_c ? "unique-c" : "not-unique-c") + " a<=" +
                  std::to_string(2 + h.k);
            if (report.max_a_side_score > 2 + h.k ||
                report.max_a_side_score >= report.min_c_side_score)
                got += " a-bound-broken";
        }
        if (!builder.add(hs_case_id(h), expected, got,
                         expected == got
                             ? std::string{}
                             : instance_to_json(
                                   reduce_hitting_set(h, HsVariant::Constructive))))
            break;
    }
    return builder.take();
}

}  // namespace

VerifyReport verify_equivalence(Suite suite, const VerifyOptions& opts) {
    switch (suite) {
        case Suite::PluralityFastVsExact: return verify_fast_vs_exact(opts);
        case Suite::Qbf: return verify_qbf(opts);
        case Suite::Sat1c: return verify_sat1c(opts);
        case Suite::Taut: return verify_taut(opts);
        case Suite::HsScores: return verify_hs_scores(opts);
    }
    throw Error("unknown suite");
}

}  // namespace ovc
