#pragma once

#include <string>
#include <vector>

#include "ovc/core.hpp"
#include "ovc/formula.hpp"

namespace ovc {

// Selects the destructive twin of a rule: every "everyone wins" /
// "everyone loses" outcome is exchanged where the rule defines a twin.
struct SystemVariant {
    bool flip = false;
};

// Winner rule driven by a formula encoded in the lexicographically least
// candidate name. The formula must use variables x_1..x_2l with x_2l
// occurring. Voters are sorted by name; the first 2l of them fix the
// assignment: odd positions must carry name suffix "00"/"01" (x_i true on
// "01"), even positions suffix "10"/"11" with x_i true iff the ballot's
// least preferred candidate is lex-less than its next-to-least. Any
// syntactic failure makes everyone lose. Total on all inputs.
std::vector<CandidateName> winners_qbf_dv(
    const std::vector<CandidateName>& candidates,
    const std::vector<Ballot>& votes, SystemVariant variant);

// Tautology-testing rule: the least candidate name encodes a formula over
// x_1..x_n; the first n lex-sorted voters set each x_i through the
// least-vs-next-to-least ballot comparison. Everyone wins iff the formula
// holds under that assignment.
std::vector<CandidateName> winners_taut(
    const std::vector<CandidateName>& candidates,
    const std::vector<Ballot>& votes);

// Three-case rule keyed on a reserved candidate "RoundOne" and a reserved
// voter "Marker". With both present, the other candidate name encodes a
// formula over x_1..x_2l and the voter roster must be exactly Marker plus
// one of v_i^yes/v_i^no per odd i and one v_i per even i (binary indices,
// zero-padded to the width of 2l). Odd variables read presence of the
// "yes" voter, even variables read whether RoundOne tops that voter's
// ballot. Satisfied: only the formula candidate wins; any roster failure:
// only RoundOne wins; no RoundOne candidate: everyone wins; RoundOne
// without Marker: everyone loses.
std::vector<CandidateName> winners_roundone(
    const std::vector<CandidateName>& candidates,
    const std::vector<Ballot>& votes, SystemVariant variant);

// One-candidate rule: with two or more candidates everyone wins. With one
// candidate whose name encodes a formula with max variable index k and
// exactly k distinct voters, x_i is the last character of the i-th
// lex-sorted voter name being '1'; everyone loses iff the formula holds
// under that assignment or its bitwise complement. All other cases win.
std::vector<CandidateName> winners_sat_1c(
    const std::vector<CandidateName>& candidates,
    const std::vector<Ballot>& votes);

// Expected roster name for the roundone rule: "v" + padded index + suffix.
std::string roundone_voter_name(int index, int two_ell,
                                const std::string& suffix);

inline constexpr const char* kRoundOneCandidate = "RoundOne";
inline constexpr const char* kMarkerVoter = "Marker";

}  // namespace ovc
