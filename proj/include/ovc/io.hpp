#pragma once

#include <string>
#include <vector>

#include "ovc/game.hpp"
#include "ovc/oracles.hpp"

namespace ovc {

// Instance wire format: a JSON object with keys control, mode, system,
// candidates, sigma, distinguished, budget (dv/av only), past, current and
// future. Unknown keys are rejected everywhere. Loading validates through
// validate_instance and surfaces its error verbatim.
std::string instance_to_json(const ControlInstance& inst);
ControlInstance instance_from_json(const std::string& text);

ControlInstance load_instance(const std::string& path);
void store_instance(const ControlInstance& inst, const std::string& path);

// Plain election file for the winners command: {"candidates": [...],
// "ballots": [{"voter": ..., "ballot": [...]}]}.
struct ElectionFile {
    std::vector<CandidateName> candidates;
    std::vector<Ballot> ballots;
};
ElectionFile load_election(const std::string& path);
ElectionFile election_from_json(const std::string& text);

// Hitting Set text format: first line "m n k", then one line per set
// listing its elements.
HittingSetInstance parse_hitting_set_text(const std::string& text);
HittingSetInstance load_hitting_set_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ovc
