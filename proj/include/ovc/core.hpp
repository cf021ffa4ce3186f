#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ovc/errors.hpp"

namespace ovc {

using CandidateName = std::string;

// A total preference order over some candidate set, most preferred first.
using PreferenceOrder = std::vector<CandidateName>;

struct Ballot {
    std::string voter;
    PreferenceOrder order;

    bool operator==(const Ballot&) const = default;
};

// Byte-wise lexicographic comparison. Every "lexicographically least/less"
// rule in this library is defined in terms of this order.
bool lex_less(const std::string& a, const std::string& b);

// Subsequence of `order` containing exactly the candidates in `keep`,
// relative order preserved. Throws ValidationError if `keep` mentions a
// candidate absent from `order`.
PreferenceOrder mask(const PreferenceOrder& order,
                     const std::vector<CandidateName>& keep);

// All candidates attaining the maximum top-choice count. An empty ballot
// list makes everyone tie at zero; an empty candidate set has no winners.
// Throws ValidationError on ballots that are not total orders over C.
std::vector<CandidateName> plurality_winners(
    const std::vector<CandidateName>& candidates,
    const std::vector<Ballot>& votes);

struct Violation {
    std::string code;
    std::string message;
};

// Checks candidate-name distinctness, voter-name distinctness, and that
// every ballot is a total order over exactly the candidate set.
std::optional<Violation> validate_election(
    const std::vector<CandidateName>& candidates,
    const std::vector<Ballot>& votes);

// A winner rule plus the structural properties other modules key off:
// `anonymous` means the result ignores voter names and ballot order,
// `top_only` means it depends only on each ballot's top choice.
struct ElectionSystem {
    std::string id;
    bool anonymous = false;
    bool top_only = false;
    std::function<std::vector<CandidateName>(
        const std::vector<CandidateName>&, const std::vector<Ballot>&)>
        winners;
};

// Registry of built-in systems: plurality plus the constructed rules.
// Returns nullptr for unknown ids.
const ElectionSystem* find_system(const std::string& id);
std::vector<std::string> known_system_ids();

// Binary-string helpers shared by the constructed systems and the
// instance generators.
int bit_length(std::uint64_t n);                     // bit_length(0) == 1
std::string binary_string(std::uint64_t n);          // no leading zeros
std::string padded_binary(std::uint64_t n, int width);

// True iff `order` is a permutation of `candidates`.
bool is_total_order_over(const PreferenceOrder& order,
                         const std::vector<CandidateName>& candidates);

// Per-candidate top-choice counts, in the order of `candidates`.
std::vector<long long> top_counts(const std::vector<CandidateName>& candidates,
                                  const std::vector<Ballot>& votes);

}  // namespace ovc
