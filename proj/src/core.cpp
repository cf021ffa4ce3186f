#include "ovc/core.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "ovc/systems.hpp"

namespace ovc {

bool lex_less(const std::string& a, const std::string& b) {
    // std::string compares through unsigned char traits, i.e. byte-wise.
    return a < b;
}

PreferenceOrder mask(const PreferenceOrder& order,
                     const std::vector<CandidateName>& keep) {
    std::unordered_set<std::string> keep_set(keep.begin(), keep.end());
    for (const auto& c : keep) {
        if (std::find(order.begin(), order.end(), c) == order.end()) {
            throw ValidationError("unknown-candidate",
                                  "mask: candidate '" + c +
                                      "' does not appear in the order");
        }
    }
    PreferenceOrder out;
    out.reserve(keep_set.size());
    for (const auto& c : order) {
        if (keep_set.count(c)) out.push_back(c);
    }
    return out;
}

bool is_total_order_over(const PreferenceOrder& order,
                         const std::vector<CandidateName>& candidates) {
    if (order.size() != candidates.size()) return false;
    std::vector<CandidateName> a = order;
    std::vector<CandidateName> b = candidates;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
    return std::adjacent_find(a.begin(), a.end()) == a.end();
}

std::vector<long long> top_counts(const std::vector<CandidateName>& candidates,
                                  const std::vector<Ballot>& votes) {
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) index[candidates[i]] = i;
    std::vector<long long> counts(candidates.size(), 0);
    for (const auto& v : votes) {
        if (v.order.empty()) continue;
        auto it = index.find(v.order.front());
        if (it != index.end()) ++counts[it->second];
    }
    return counts;
}

std::vector<CandidateName> plurality_winners(
    const std::vector<CandidateName>& candidates,
    const std::vector<Ballot>& votes) {
    if (candidates.empty()) return {};
    for (const auto& v : votes) {
        if (!is_total_order_over(v.order, candidates)) {
            throw ValidationError("invalid-ballot",
                                  "plurality: ballot of voter '" + v.voter +
                                      "' is not a total order over the "
                                      "candidate set");
        }
    }
    std::vector<long long> counts = top_counts(candidates, votes);
    long long best = *std::max_element(counts.begin(), counts.end());
    std::vector<CandidateName> winners;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (counts[i] == best) winners.push_back(candidates[i]);
    }
    std::sort(winners.begin(), winners.end());
    return winners;
}

std::optional<Violation> validate_election(
    const std::vector<CandidateName>& candidates,
    const std::vector<Ballot>& votes) {
    std::unordered_set<std::string> seen;
    for (const auto& c : candidates) {
        if (c.empty())
            return Violation{"empty-candidate-name", "candidate name is empty"};
        if (!seen.insert(c).second)
            return Violation{"duplicate-candidate",
                             "duplicate candidate name '" + c + "'"};
    }
    std::unordered_set<std::string> voters;
    for (const auto& v : votes) {
        if (v.voter.empty())
            return Violation{"empty-voter-name", "voter name is empty"};
        if (!voters.insert(v.voter).second)
            return Violation{"duplicate-voter",
                             "duplicate voter name '" + v.voter + "'"};
        if (!is_total_order_over(v.order, candidates)) {
            return Violation{"invalid-ballot",
                             "ballot of voter '" + v.voter +
                                 "' is not a total order over the candidate set"};
        }
    }
    return std::nullopt;
}

int bit_length(std::uint64_t n) {
    int len = 1;
    while (n > 1) {
        n >>= 1;
        ++len;
    }
    return len;
}

std::string binary_string(std::uint64_t n) {
    std::string s;
    do {
        s.push_back(static_cast<char>('0' + (n & 1)));
        n >>= 1;
    } while (n > 0);
    std::reverse(s.begin(), s.end());
    return s;
}

std::string padded_binary(std::uint64_t n, int width) {
    std::string s = binary_string(n);
    if (static_cast<int>(s.size()) < width)
        s.insert(s.begin(), width - s.size(), '0');
    return s;
}

namespace {

const ElectionSystem* make_registry_entry(const std::string& id) {
    static const std::vector<ElectionSystem> registry = [] {
        std::vector<ElectionSystem> systems;
        systems.push_back(ElectionSystem{
            "plurality", /*anonymous=*/true, /*top_only=*/true,
            [](const std::vector<CandidateName>& c,
               const std::vector<Ballot>& v) { return plurality_winners(c, v); }});
        systems.push_back(ElectionSystem{
            "qbf-dv", false, false,
            [](const std::vector<CandidateName>& c, const std::vector<Ballot>& v) {
                return winners_qbf_dv(c, v, SystemVariant{false});
            }});
        systems.push_back(ElectionSystem{
            "qbf-dv-flip", false, false,
            [](const std::vector<CandidateName>& c, const std::vector<Ballot>& v) {
                return winners_qbf_dv(c, v, SystemVariant{true});
            }});
        systems.push_back(ElectionSystem{
            "roundone", false, false,
            [](const std::vector<CandidateName>& c, const std::vector<Ballot>& v) {
                return winners_roundone(c, v, SystemVariant{false});
            }});
        systems.push_back(ElectionSystem{
            "roundone-flip", false, false,
            [](const std::vector<CandidateName>& c, const std::vector<Ballot>& v) {
                return winners_roundone(c, v, SystemVariant{true});
            }});
        systems.push_back(ElectionSystem{
            "taut", false, false,
            [](const std::vector<CandidateName>& c, const std::vector<Ballot>& v) {
                return winners_taut(c, v);
            }});
        systems.push_back(ElectionSystem{
            "sat-1c", false, false,
            [](const std::vector<CandidateName>& c, const std::vector<Ballot>& v) {
                return winners_sat_1c(c, v);
            }});
        return systems;
    }();
    for (const auto& s : registry)
        if (s.id == id) return &s;
    return nullptr;
}

}  // namespace

const ElectionSystem* find_system(const std::string& id) {
    return make_registry_entry(id);
}

std::vector<std::string> known_system_ids() {
    return {"plurality", "qbf-dv", "qbf-dv-flip", "roundone",
            "roundone-flip", "taut", "sat-1c"};
}

}  // namespace ovc
