#include "ovc/systems.hpp"

#include <algorithm>

namespace ovc {

namespace {

std::vector<CandidateName> sorted_copy(const std::vector<CandidateName>& c) {
    std::vector<CandidateName> out = c;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Ballot> votes_sorted_by_name(const std::vector<Ballot>& votes) {
    std::vector<Ballot> out = votes;
    std::sort(out.begin(), out.end(),
              [](const Ballot& a, const Ballot& b) { return a.voter < b.voter; });
    return out;
}

bool has_duplicate_voter(const std::vector<Ballot>& sorted_votes) {
    for (std::size_t i = 1; i < sorted_votes.size(); ++i)
        if (sorted_votes[i - 1].voter == sorted_votes[i].voter) return true;
    return false;
}

// x_i from the ballot shape: true iff the least preferred candidate's name
// is lex-less than the next-to-least preferred one's.
bool ballot_tail_bit(const Ballot& b) {
    if (b.order.size() < 2) return false;
    const std::string& last = b.order[b.order.size() - 1];
    const std::string& next_to_last = b.order[b.order.size() - 2];
    return lex_less(last, next_to_last);
}

// A formula is admissible for the alternating rules when its maximum
// variable index is even; that index is 2l and x_2l occurs by maximality.
FormulaPtr parse_even_formula(const std::string& name, int& two_ell) {
    FormulaPtr f = try_parse_formula(name);
    if (!f) return nullptr;
    int max_index = max_var_index(*f);
    if (max_index % 2 != 0) return nullptr;
    two_ell = max_index;
    return f;
}

}  // namespace

std::vector<CandidateName> winners_qbf_dv(
    const std::vector<CandidateName>& candidates,
    const std::vector<Ballot>& votes, SystemVariant variant) {
    std::vector<CandidateName> c = sorted_copy(candidates);
    auto everyone = [&](bool wins) {
        // The flipped twin exchanges every all-win/all-lose outcome.
        if (variant.flip) wins = !wins;
        return wins ? c : std::vector<CandidateName>{};
    };
    if (c.empty()) return {};

    int two_ell = 0;
    FormulaPtr phi = parse_even_formula(c.front(), two_ell);
    if (!phi) return everyone(false);

    std::vector<Ballot> v = votes_sorted_by_name(votes);
    if (has_duplicate_voter(v)) return everyone(false);
    if (static_cast<int>(v.size()) < two_ell || c.size() < 2)
        return everyone(false);

    std::vector<bool> assignment(two_ell, false);
    for (int i = 1; i <= two_ell; ++i) {
        const Ballot& voter = v[i - 1];
        if (voter.voter.size() < 2) return everyone(false);
        std::string suffix = voter.voter.substr(voter.voter.size() - 2);
        if (i % 2 == 1) {
            if (suffix != "00" && suffix != "01") return everyone(false);
            assignment[i - 1] = suffix == "01";
        } else {
            if (suffix != "10" && suffix != "11") return everyone(false);
            assignment[i - 1] = ballot_tail_bit(voter);
        }
    }
    return everyone(eval_formula(phi, assignment));
}

std::vector<CandidateName> winners_taut(
    const std::vector<CandidateName>& candidates,
    const std::vector<Ballot>& votes) {
    std::vector<CandidateName> c = sorted_copy(candidates);
    if (c.empty()) return {};

    FormulaPtr phi = try_parse_formula(c.front());
    if (!phi || c.size() < 2) return {};
    int n = max_var_index(*phi);

    std::vector<Ballot> v = votes_sorted_by_name(votes);
    if (has_duplicate_voter(v)) return {};
    if (static_cast<int>(v.size()) < n) return {};

    std::vector<bool> assignment(n, false);
    for (int i = 1; i <= n; ++i) assignment[i - 1] = ballot_tail_bit(v[i - 1]);
    return eval_formula(phi, assignment) ? c : std::vector<CandidateName>{};
}

std::string roundone_voter_name(int index, int two_ell,
                                const std::string& suffix) {
    return "v" + padded_binary(index, bit_length(two_ell)) + suffix;
}

std::vector<CandidateName> winners_roundone(
    const std::vector<CandidateName>& candidates,
    const std::vector<Ballot>& votes, SystemVariant variant) {
    std::vector<CandidateName> c = sorted_copy(candidates);
    if (c.empty()) return {};

    bool has_roundone =
        std::find(c.begin(), c.end(), kRoundOneCandidate) != c.end();
    if (!has_roundone) {
        // Everyone wins; the twin makes everyone lose.
        return variant.flip ? std::vector<CandidateName>{} : c;
    }
    bool has_marker = std::any_of(votes.begin(), votes.end(), [](const Ballot& b) {
        return b.voter == kMarkerVoter;
    });
    if (!has_marker) return {};  // identical in both variants

    // RoundOne candidate and Marker voter present. Outcomes: the formula
    // candidate alone on satisfaction, RoundOne alone otherwise; the twin
    // maps satisfaction to an empty winner set and everything else to C.
    auto satisfied = [&](const CandidateName& formula_candidate) {
        return variant.flip ? std::vector<CandidateName>{}
                            : std::vector<CandidateName>{formula_candidate};
    };
    auto unsatisfied = [&] {
        return variant.flip ? c
                            : std::vector<CandidateName>{kRoundOneCandidate};
    };

    const CandidateName* formula_candidate = nullptr;
    for (const auto& name : c) {
        if (name != kRoundOneCandidate) {
            formula_candidate = &name;
            break;
        }
    }
    if (formula_candidate == nullptr) return unsatisfied();

    int two_ell = 0;
    FormulaPtr phi = parse_even_formula(*formula_candidate, two_ell);
    if (!phi) return unsatisfied();
    if (c.size() != 2) return unsatisfied();

    if (static_cast<int>(votes.size()) != two_ell + 1) return unsatisfied();
    std::vector<Ballot> v = votes_sorted_by_name(votes);
    if (has_duplicate_voter(v)) return unsatisfied();

    std::vector<bool> assignment(two_ell, false);
    std::vector<std::string> expected_names{kMarkerVoter};
    std::vector<const Ballot*> even_voter(two_ell + 1, nullptr);

    // Exact roster: Marker, one of v_i^yes / v_i^no per odd i, one v_i per
    // even i. Any other multiset fails.
    for (int i = 1; i <= two_ell; ++i) {
        if (i % 2 == 1) {
            std::string yes = roundone_voter_name(i, two_ell, "yes");
            std::string no = roundone_voter_name(i, two_ell, "no");
            bool have_yes = std::any_of(v.begin(), v.end(), [&](const Ballot& b) {
                return b.voter == yes;
            });
            bool have_no = std::any_of(v.begin(), v.end(), [&](const Ballot& b) {
                return b.voter == no;
            });
            if (have_yes == have_no) return unsatisfied();
            assignment[i - 1] = have_yes;
            expected_names.push_back(have_yes ? yes : no);
        } else {
            std::string plain = roundone_voter_name(i, two_ell, "");
            auto it = std::find_if(v.begin(), v.end(), [&](const Ballot& b) {
                return b.voter == plain;
            });
            if (it == v.end()) return unsatisfied();
            even_voter[i] = &*it;
            expected_names.push_back(plain);
        }
    }
    // Roster size matches and all expected names are present and distinct,
    // so the voter list is exactly the expected multiset.
    if (expected_names.size() != votes.size()) return unsatisfied();

    for (int i = 2; i <= two_ell; i += 2) {
        const Ballot& b = *even_voter[i];
        assignment[i - 1] = !b.order.empty() && b.order.front() == kRoundOneCandidate;
    }
    return eval_formula(phi, assignment) ? satisfied(*formula_candidate)
                                         : unsatisfied();
}

std::vector<CandidateName> winners_sat_1c(
    const std::vector<CandidateName>& candidates,
    const std::vector<Ballot>& votes) {
    std::vector<CandidateName> c = sorted_copy(candidates);
    if (c.size() != 1) return c;  // everyone wins, including the empty case

    FormulaPtr phi = try_parse_formula(c.front());
    if (!phi) return c;
    int k = max_var_index(*phi);

    if (static_cast<int>(votes.size()) != k) return c;
    std::vector<Ballot> v = votes_sorted_by_name(votes);
    if (has_duplicate_voter(v)) return c;

    std::vector<bool> assignment(k, false);
    for (int i = 0; i < k; ++i) {
        const std::string& name = v[i].voter;
        assignment[i] = !name.empty() && name.back() == '1';
    }
    std::vector<bool> complement(k, false);
    for (int i = 0; i < k; ++i) complement[i] = !assignment[i];

    if (eval_formula(phi, assignment) || eval_formula(phi, complement))
        return {};  // everyone loses
    return c;
}

}  // namespace ovc
