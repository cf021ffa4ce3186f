#include "ovc/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ovc {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) {
    throw ParseError("instance parse error: " + what);
}

void expect_keys(const json& object, const std::vector<std::string>& required,
                 const std::vector<std::string>& optional,
                 const std::string& where) {
    if (!object.is_object()) parse_fail(where + " must be a JSON object");
    for (const auto& key : required)
        if (!object.contains(key))
            parse_fail(where + " is missing key '" + key + "'");
    for (auto it = object.begin(); it != object.end(); ++it) {
        const std::string& key = it.key();
        bool known =
            std::find(required.begin(), required.end(), key) != required.end() ||
            std::find(optional.begin(), optional.end(), key) != optional.end();
        if (!known) parse_fail(where + " has unknown key '" + key + "'");
    }
}

std::string get_string(const json& j, const std::string& key,
                       const std::string& where) {
    if (!j.at(key).is_string())
        parse_fail(where + " key '" + key + "' must be a string");
    return j.at(key).get<std::string>();
}

std::vector<std::string> get_string_list(const json& j, const std::string& key,
                                         const std::string& where) {
    if (!j.at(key).is_array())
        parse_fail(where + " key '" + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& e : j.at(key)) {
        if (!e.is_string())
            parse_fail(where + " key '" + key + "' must hold strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

json ballot_json(const PreferenceOrder& order) {
    return json(order);
}

}  // namespace

std::string instance_to_json(const ControlInstance& inst) {
    json j;
    j["control"] = to_string(inst.control);
    j["mode"] = to_string(inst.mode);
    j["system"] = inst.system;
    j["candidates"] = json(inst.candidates);
    j["sigma"] = json(inst.sigma);
    j["distinguished"] = inst.distinguished;
    if (inst.control != ControlType::PartitionVoters) j["budget"] = inst.budget;

    json past = json::array();
    for (const auto& rec : inst.past) {
        json r;
        r["voter"] = rec.voter;
        r["flag"] = to_string(rec.flag);
        if (rec.ballot) r["ballot"] = ballot_json(*rec.ballot);
        past.push_back(std::move(r));
    }
    j["past"] = std::move(past);

    json current;
    current["voter"] = inst.current_voter;
    current["ballot"] = ballot_json(inst.current_ballot);
    if (inst.control == ControlType::AddVoters)
        current["registered"] = inst.current_registered;
    j["current"] = std::move(current);

    json future = json::array();
    for (const auto& f : inst.future) {
        json r;
        r["voter"] = f.name;
        if (inst.control == ControlType::AddVoters) r["registered"] = f.registered;
        future.push_back(std::move(r));
    }
    j["future"] = std::move(future);
    return j.dump(2) + "\n";
}

ControlInstance instance_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        parse_fail(e.what());
    }

    std::vector<std::string> required{"control", "mode",          "system",
                                      "candidates", "sigma",      "distinguished",
                                      "past",    "current",       "future"};
    expect_keys(j, required, {"budget"}, "instance");

    ControlInstance inst;
    auto control = control_from_string(get_string(j, "control", "instance"));
    if (!control) parse_fail("control must be one of dv, av, pv");
    inst.control = *control;
    auto mode = mode_from_string(get_string(j, "mode", "instance"));
    if (!mode) parse_fail("mode must be constructive or destructive");
    inst.mode = *mode;
    inst.system = get_string(j, "system", "instance");
    inst.candidates = get_string_list(j, "candidates", "instance");
    inst.sigma = get_string_list(j, "sigma", "instance");
    inst.distinguished = get_string(j, "distinguished", "instance");

    bool wants_budget = inst.control != ControlType::PartitionVoters;
    if (wants_budget) {
        if (!j.contains("budget")) parse_fail("dv/av instances require a budget");
        if (!j.at("budget").is_number_integer())
            parse_fail("budget must be an integer");
        inst.budget = j.at("budget").get<int>();
    } else if (j.contains("budget")) {
        parse_fail("pv instances carry no budget");
    }

    if (!j.at("past").is_array()) parse_fail("past must be an array");
    for (const auto& r : j.at("past")) {
        PastRecord rec;
        std::string where = "past record";
        expect_keys(r, {"voter", "flag"}, {"ballot"}, where);
        rec.voter = get_string(r, "voter", where);
        auto flag = past_flag_from_string(get_string(r, "flag", where));
        if (!flag) parse_fail("unknown past flag");
        rec.flag = *flag;
        bool needs_ballot =
            rec.flag != PastFlag::Deleted && rec.flag != PastFlag::Skipped;
        if (needs_ballot && !r.contains("ballot"))
            parse_fail("past voter '" + rec.voter +
                       "' must carry a ballot under flag '" +
                       to_string(rec.flag) + "'");
        if (!needs_ballot && r.contains("ballot"))
            parse_fail("past voter '" + rec.voter +
                       "' must not carry a ballot under flag '" +
                       to_string(rec.flag) + "'");
        if (r.contains("ballot")) rec.ballot = get_string_list(r, "ballot", where);
        inst.past.push_back(std::move(rec));
    }

    {
        const json& cur = j.at("current");
        std::vector<std::string> optional;
        if (inst.control == ControlType::AddVoters) optional.push_back("registered");
        expect_keys(cur, {"voter", "ballot"}, optional, "current voter");
        inst.current_voter = get_string(cur, "voter", "current voter");
        inst.current_ballot = get_string_list(cur, "ballot", "current voter");
        if (cur.contains("registered")) {
            if (!cur.at("registered").is_boolean())
                parse_fail("current 'registered' must be a boolean");
            inst.current_registered = cur.at("registered").get<bool>();
        }
    }

    if (!j.at("future").is_array()) parse_fail("future must be an array");
    for (const auto& r : j.at("future")) {
        FutureVoter f;
        std::string where = "future voter";
        if (inst.control == ControlType::AddVoters) {
            expect_keys(r, {"voter", "registered"}, {}, where);
            if (!r.at("registered").is_boolean())
                parse_fail("future 'registered' must be a boolean");
            f.registered = r.at("registered").get<bool>();
        } else {
            expect_keys(r, {"voter"}, {}, where);
        }
        f.name = get_string(r, "voter", where);
        inst.future.push_back(std::move(f));
    }

    if (auto v = validate_instance(inst))
        throw ValidationError(v->code, v->message);
    return inst;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw Error("failed writing '" + path + "'");
}

ControlInstance load_instance(const std::string& path) {
    return instance_from_json(read_text_file(path));
}

void store_instance(const ControlInstance& inst, const std::string& path) {
    write_text_file(path, instance_to_json(inst));
}

ElectionFile election_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        parse_fail(e.what());
    }
    expect_keys(j, {"candidates", "ballots"}, {}, "election");
    ElectionFile out;
    out.candidates = get_string_list(j, "candidates", "election");
    if (!j.at("ballots").is_array()) parse_fail("ballots must be an array");
    for (const auto& r : j.at("ballots")) {
        expect_keys(r, {"voter", "ballot"}, {}, "ballot record");
        Ballot b;
        b.voter = get_string(r, "voter", "ballot record");
        b.order = get_string_list(r, "ballot", "ballot record");
        out.ballots.push_back(std::move(b));
    }
    if (auto v = validate_election(out.candidates, out.ballots))
        throw ValidationError(v->code, v->message);
    return out;
}

ElectionFile load_election(const std::string& path) {
    return election_from_json(read_text_file(path));
}

HittingSetInstance parse_hitting_set_text(const std::string& text) {
    std::istringstream in(text);
    HittingSetInstance h;
    int n = 0;
    std::string header;
    if (!std::getline(in, header))
        throw ParseError("sets file: missing 'm n k' header line");
    {
        std::istringstream hs(header);
        if (!(hs >> h.m >> n >> h.k))
            throw ParseError("sets file: header must be 'm n k'");
        std::string rest;
        if (hs >> rest) throw ParseError("sets file: trailing header input");
    }
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> set;
        int e;
        while (ls >> e) set.push_back(e);
        if (!ls.eof()) throw ParseError("sets file: non-numeric set element");
        if (!set.empty()) h.sets.push_back(std::move(set));
    }
    if (static_cast<int>(h.sets.size()) != n)
        throw ParseError("sets file: expected " + std::to_string(n) +
                         " sets, found " + std::to_string(h.sets.size()));
    validate_hitting_set(h);
    return h;
}

HittingSetInstance load_hitting_set_file(const std::string& path) {
    return parse_hitting_set_text(read_text_file(path));
}

}  // namespace ovc
