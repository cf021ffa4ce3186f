#pragma once

#include "ovc/game.hpp"

namespace ovc {

// Polynomial-time decision for online plurality control by deleting voters.
// The chair deletes u exactly when budget remains and u's top choice is a
// highest scoring threat candidate; the answer compares the goal segment's
// best score against the worst case in which every future voter backs the
// strongest threat and the chair spends her remaining deletions on those
// ballots. Throws ValidationError unless the instance is a valid dv
// instance over plurality.
bool fast_dv(const ControlInstance& inst);

// Counterpart for adding voters: u is added exactly when budget remains and
// her top choice lies in the favourable segment; in the worst case every
// registered future voter backs the strongest threat and no future
// unregistered voter is worth adding.
bool fast_av(const ControlInstance& inst);

}  // namespace ovc
