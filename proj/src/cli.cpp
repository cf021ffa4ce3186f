#include "ovc/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ovc/fast_plurality.hpp"
#include "ovc/io.hpp"
#include "ovc/reductions.hpp"
#include "ovc/solver.hpp"

namespace ovc {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCap = 3;

void emit_instance(const ControlInstance& inst, const std::string& out_path,
                   std::ostream& out) {
    std::string text = instance_to_json(inst);
    if (out_path.empty())
        out << text;
    else
        write_text_file(out_path, text);
}

std::string join_names(const std::vector<std::string>& names,
                       const std::string& sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += sep;
        out += names[i];
    }
    return out;
}

int cmd_solve(const std::string& path, const std::string& engine,
              int max_candidates, bool no_reduction, bool no_memo,
              std::ostream& out) {
    ControlInstance inst = load_instance(path);
    if (engine == "fast") {
        bool wins;
        if (inst.control == ControlType::DeleteVoters)
            wins = fast_dv(inst);
        else if (inst.control == ControlType::AddVoters)
            wins = fast_av(inst);
        else
            throw ValidationError("fast-engine-unsupported",
                                  "the fast engine handles dv and av control "
                                  "over plurality only");
        out << (wins ? "chair-wins" : "chair-loses") << "\n";
        return kExitOk;
    }
    SolverConfig cfg;
    cfg.max_candidates = max_candidates;
    cfg.top_only_reduction = !no_reduction;
    cfg.memoize = !no_memo;
    Verdict verdict = solve(inst, cfg);
    out << (verdict.chair_wins ? "chair-wins" : "chair-loses") << "\n";
    if (verdict.witness) out << "witness: " << to_string(*verdict.witness) << "\n";
    out << "nodes: " << verdict.stats.nodes << "\n";
    out << "max-depth: " << verdict.stats.max_depth << "\n";
    return kExitOk;
}

int cmd_winners(const std::string& system_id, const std::string& election_path,
                std::ostream& out) {
    const ElectionSystem* sys = find_system(system_id);
    if (sys == nullptr)
        throw ValidationError("unknown-system",
                              "unknown election system '" + system_id + "'");
    ElectionFile election = load_election(election_path);
    std::vector<CandidateName> winners =
        sys->winners(election.candidates, election.ballots);
    out << "winners: " << join_names(winners) << "\n";
    return kExitOk;
}

void print_report(const VerifyReport& report, bool as_json, std::ostream& out) {
    if (as_json) {
        nlohmann::json j;
        j["suite"] = report.suite;
        j["total"] = report.total;
        j["agree"] = report.agreements;
        j["disagree"] = report.disagreements;
        nlohmann::json cases = nlohmann::json::array();
        for (const auto& c : report.cases) {
            nlohmann::json row;
            row["id"] = c.id;
            row["expected"] = c.expected;
            row["got"] = c.got;
            row["agree"] = c.agree;
            cases.push_back(std::move(row));
        }
        j["cases"] = std::move(cases);
        nlohmann::json bad = nlohmann::json::array();
        for (const auto& c : report.mismatches) {
            nlohmann::json row;
            row["id"] = c.id;
            row["expected"] = c.expected;
            row["got"] = c.got;
            row["counterexample"] = c.counterexample;
            bad.push_back(std::move(row));
        }
        j["counterexamples"] = std::move(bad);
        out << j.dump(2) << "\n";
        return;
    }
    out << "suite: " << report.suite << "\n";
    for (const auto& c : report.cases) {
        out << "case " << c.id << " expected=" << c.expected << " got=" << c.got
            << (c.agree ? " agree" : " DISAGREE") << "\n";
    }
    for (const auto& c : report.mismatches) {
        out << "counterexample " << c.id << " expected=" << c.expected
            << " got=" << c.got << "\n"
            << c.counterexample;
    }
    out << "cases: " << report.total << "  agree: " << report.agreements
        << "  disagree: " << report.disagreements << "\n";
    out << "result: " << (report.disagreements == 0 ? "OK" : "FAILED") << "\n";
}

int cmd_verify(const std::string& suite_name, std::uint64_t seed,
               std::uint64_t limit, bool as_json, std::ostream& out) {
    auto suite = suite_from_string(suite_name);
    if (!suite)
        throw ValidationError("unknown-suite",
                              "unknown suite '" + suite_name + "'");
    VerifyOptions opts;
    opts.seed = seed;
    opts.limit = limit;
    VerifyReport report = verify_equivalence(*suite, opts);
    print_report(report, as_json, out);
    return report.disagreements == 0 ? kExitOk : kExitFailed;
}

void print_tally(const ControlInstance& inst, const GameState& state,
                 std::ostream& out) {
    if (inst.control == ControlType::PartitionVoters) {
        out << "left ballots: " << state.left.size()
            << "  right ballots: " << state.right.size() << "\n";
        return;
    }
    std::vector<long long> counts = top_counts(inst.candidates, state.counted);
    out << "tally:";
    for (std::size_t i = 0; i < inst.candidates.size(); ++i)
        out << " " << inst.candidates[i] << "=" << counts[i];
    out << "\n";
}

int cmd_play(const std::string& path, std::ostream& out, std::istream& in) {
    ControlInstance inst = load_instance(path);
    SolverConfig cfg;
    GameState state = initial_state(inst);

    out << "control: " << to_string(inst.control) << " ("
        << to_string(inst.mode) << ")  system: " << inst.system << "\n";
    out << "candidates: " << join_names(inst.candidates) << "\n";
    out << "sigma: " << join_names(inst.sigma, " > ")
        << "  distinguished: " << inst.distinguished << "\n";
    if (inst.control != ControlType::PartitionVoters)
        out << "budget: " << inst.budget << "\n";

    while (!state_is_terminal(inst, state)) {
        if (state.pending) {
            print_tally(inst, state, out);
            out << "voter " << state.pending->voter << " votes: "
                << join_names(state.pending->order, " > ") << "\n";
            std::vector<ChairAction> legal = legal_chair_actions(inst, state);
            std::vector<std::string> names;
            for (ChairAction a : legal) names.push_back(to_string(a));
            bool acted = false;
            while (!acted) {
                out << "action [" << join_names(names, "/") << "/hint/quit]> "
                    << std::flush;
                std::string line;
                if (!std::getline(in, line)) {
                    out << "\naborted\n";
                    return kExitFailed;
                }
                line.erase(0, line.find_first_not_of(" \t"));
                line.erase(line.find_last_not_of(" \t") + 1);
                if (line == "quit") {
                    out << "aborted\n";
                    return kExitFailed;
                }
                if (line == "hint") {
                    Verdict verdict = solve_from_state(inst, state, cfg);
                    if (verdict.chair_wins && verdict.witness)
                        out << "hint: " << to_string(*verdict.witness) << "\n";
                    else
                        out << "hint: no action guarantees the goal\n";
                    continue;
                }
                auto action = chair_action_from_string(line);
                if (!action ||
                    std::find(legal.begin(), legal.end(), *action) == legal.end()) {
                    out << "illegal action\n";
                    continue;
                }
                out << "> " << line << "\n";
                state = apply_chair_action(inst, std::move(state), *action);
                acted = true;
            }
        } else {
            const FutureVoter& voter = inst.future[state.next_future];
            PreferenceOrder reply = adversary_best_reply(inst, state, cfg);
            out << "voter " << voter.name << " votes: "
                << join_names(reply, " > ") << "\n";
            state = reveal_vote(inst, std::move(state), voter.name, reply);
        }
    }

    std::vector<CandidateName> winners = finalize_and_evaluate(inst, state);
    out << "winners: " << join_names(winners) << "\n";
    out << "goal " << (goal_holds(goal_of(inst), winners) ? "met" : "not met")
        << "\n";
    return kExitOk;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err, std::istream& in) {
    CLI::App app{"online voter control in sequential elections"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "decide an instance");
    std::string solve_path, engine = "exact";
    int max_candidates = 5;
    bool no_reduction = false, no_memo = false;
    solve_cmd->add_option("--instance", solve_path, "instance file")->required();
    solve_cmd->add_option("--engine", engine, "exact|fast")
        ->check(CLI::IsMember({"exact", "fast"}));
    solve_cmd->add_option("--max-candidates", max_candidates,
                          "universal branching cap");
    solve_cmd->add_flag("--no-top-only-reduction", no_reduction,
                        "branch over all ballots");
    solve_cmd->add_flag("--no-memo", no_memo, "disable memoization");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate instances");
    gen_cmd->require_subcommand(1);
    std::string gen_out;

    auto* gen_qbf = gen_cmd->add_subcommand("qbf", "alternating formula instance");
    std::string qbf_family, qbf_formula;
    gen_qbf->add_option("--family", qbf_family,
                        "ccdv|ccav|dcdv|dcav|ccpv|dcpv")->required();
    gen_qbf->add_option("--formula", qbf_formula, "formula text")->required();
    gen_qbf->add_option("-o,--out", gen_out, "output file (default stdout)");

    auto* gen_sat = gen_cmd->add_subcommand("sat1c", "one-candidate instance");
    std::string sat_formula;
    gen_sat->add_option("--formula", sat_formula, "formula text")->required();
    gen_sat->add_option("-o,--out", gen_out, "output file (default stdout)");

    auto* gen_taut = gen_cmd->add_subcommand("taut", "tautology-test instance");
    std::string taut_formula;
    gen_taut->add_option("--formula", taut_formula, "formula text")->required();
    gen_taut->add_option("-o,--out", gen_out, "output file (default stdout)");

    auto* gen_hs = gen_cmd->add_subcommand("hs", "hitting-set instance");
    std::string hs_file, hs_variant = "cc";
    gen_hs->add_option("--sets-file", hs_file, "text file: 'm n k' then sets")
        ->required();
    gen_hs->add_option("--variant", hs_variant, "cc|dc")
        ->check(CLI::IsMember({"cc", "dc"}));
    gen_hs->add_option("-o,--out", gen_out, "output file (default stdout)");

    auto* gen_random = gen_cmd->add_subcommand("random", "seeded random instance");
    std::string rnd_control = "dv", rnd_mode = "constructive";
    int rnd_candidates = 3, rnd_past = 2, rnd_future = 2, rnd_budget = 1;
    std::uint64_t rnd_seed = 0;
    gen_random->add_option("--control", rnd_control, "dv|av|pv")
        ->check(CLI::IsMember({"dv", "av", "pv"}));
    gen_random->add_option("--mode", rnd_mode, "constructive|destructive")
        ->check(CLI::IsMember({"constructive", "destructive"}));
    gen_random->add_option("--candidates", rnd_candidates, "candidate count");
    gen_random->add_option("--past", rnd_past, "past voter count");
    gen_random->add_option("--future", rnd_future, "future voter count");
    gen_random->add_option("--budget", rnd_budget, "budget (dv/av)");
    gen_random->add_option("--seed", rnd_seed, "64-bit seed")->required();
    gen_random->add_option("-o,--out", gen_out, "output file (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run an equivalence suite");
    std::string suite_name;
    std::uint64_t verify_seed = 1, verify_limit = 0;
    bool verify_json = false;
    verify_cmd
        ->add_option("--suite", suite_name,
                     "plurality-fast-vs-exact|qbf|sat1c|taut|hs-scores")
        ->required();
    verify_cmd->add_option("--seed", verify_seed, "corpus seed");
    verify_cmd->add_option("--limit", verify_limit, "stop after this many cases");
    verify_cmd->add_flag("--json", verify_json, "emit the report as JSON");

    // winners
    auto* winners_cmd = app.add_subcommand("winners", "evaluate one election");
    std::string winners_system, winners_election;
    winners_cmd->add_option("--system", winners_system, "election system id")
        ->required();
    winners_cmd->add_option("--election", winners_election, "election file")
        ->required();

    // play
    auto* play_cmd = app.add_subcommand("play", "interactive chair session");
    std::string play_path;
    play_cmd->add_option("--instance", play_path, "instance file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    if (solve_cmd->parsed())
        return cmd_solve(solve_path, engine, max_candidates, no_reduction,
                         no_memo, out);
    if (gen_qbf->parsed()) {
        auto family = qbf_family_from_string(qbf_family);
        if (!family)
            throw ValidationError("unknown-family",
                                  "unknown family '" + qbf_family + "'");
        QbfPrimeInstance q = make_qbf_prime(parse_formula(qbf_formula));
        emit_instance(reduce_qbf(q, *family), gen_out, out);
        return kExitOk;
    }
    if (gen_sat->parsed()) {
        emit_instance(reduce_sat_1cand(parse_formula(sat_formula)), gen_out, out);
        return kExitOk;
    }
    if (gen_taut->parsed()) {
        emit_instance(reduce_taut(parse_formula(taut_formula)), gen_out, out);
        return kExitOk;
    }
    if (gen_hs->parsed()) {
        HittingSetInstance h = load_hitting_set_file(hs_file);
        emit_instance(reduce_hitting_set(h, hs_variant == "cc"
                                                ? HsVariant::Constructive
                                                : HsVariant::Destructive),
                      gen_out, out);
        return kExitOk;
    }
    if (gen_random->parsed()) {
        RandomSpec spec;
        spec.control = *control_from_string(rnd_control);
        spec.mode = *mode_from_string(rnd_mode);
        spec.candidates = rnd_candidates;
        spec.past = rnd_past;
        spec.future = rnd_future;
        spec.budget = rnd_budget;
        if (spec.control == ControlType::PartitionVoters) spec.budget = 0;
        emit_instance(random_instance(spec, rnd_seed), gen_out, out);
        return kExitOk;
    }
    if (verify_cmd->parsed())
        return cmd_verify(suite_name, verify_seed, verify_limit, verify_json, out);
    if (winners_cmd->parsed())
        return cmd_winners(winners_system, winners_election, out);
    if (play_cmd->parsed()) return cmd_play(play_path, out, in);

    err << "error: no subcommand\n";
    return kExitInvalid;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err, std::istream& in) {
    try {
        return dispatch(args, out, err, in);
    } catch (const CapError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

}  // namespace ovc
