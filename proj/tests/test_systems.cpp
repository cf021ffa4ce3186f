#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "ovc/formula.hpp"
#include "ovc/systems.hpp"

using namespace ovc;

namespace {

using Names = std::vector<CandidateName>;

Ballot ballot(const std::string& voter, const PreferenceOrder& order) {
    return Ballot{voter, order};
}

// Independent step-by-step oracle for the formula-candidate rule, written
// directly from its case list and kept deliberately naive.
Names naive_qbf_dv(Names c, std::vector<Ballot> v, bool flip) {
    std::sort(c.begin(), c.end());
    auto all = [&](bool wins) {
        if (flip) wins = !wins;
        return wins ? c : Names{};
    };
    if (c.empty()) return {};

    FormulaPtr phi = try_parse_formula(c[0]);
    if (!phi) return all(false);
    int max_index = 0;
    for (int i : var_indices(*phi)) max_index = std::max(max_index, i);
    if (max_index % 2 != 0) return all(false);
    int two_ell = max_index;

    std::set<std::string> names;
    for (const auto& b : v) names.insert(b.voter);
    if (names.size() != v.size()) return all(false);

    std::sort(v.begin(), v.end(),
              [](const Ballot& x, const Ballot& y) { return x.voter < y.voter; });
    if (static_cast<int>(v.size()) < two_ell) return all(false);
    if (c.size() < 2) return all(false);

    std::vector<bool> assignment;
    for (int i = 1; i <= two_ell; ++i) {
        std::string name = v[i - 1].voter;
        if (name.size() < 2) return all(false);
        std::string low = name.substr(name.size() - 2);
        if (i % 2 == 1) {
            if (low != "00" && low != "01") return all(false);
            assignment.push_back(low == "01");
        } else {
            if (low != "10" && low != "11") return all(false);
            const PreferenceOrder& order = v[i - 1].order;
            bool bit = order.size() >= 2 &&
                       order[order.size() - 1] < order[order.size() - 2];
            assignment.push_back(bit);
        }
    }
    return all(eval_formula(phi, assignment));
}

// Naive oracle for the RoundOne rule.
Names naive_roundone(Names c, const std::vector<Ballot>& v, bool flip) {
    std::sort(c.begin(), c.end());
    if (c.empty()) return {};
    bool round_one = std::count(c.begin(), c.end(), "RoundOne") > 0;
    if (!round_one) return flip ? Names{} : c;
    bool marker = false;
    for (const auto& b : v) marker = marker || b.voter == "Marker";
    if (!marker) return {};

    auto lose_case2 = [&] { return flip ? c : Names{"RoundOne"}; };

    Names others;
    for (const auto& name : c)
        if (name != "RoundOne") others.push_back(name);
    if (others.empty()) return lose_case2();
    FormulaPtr phi = try_parse_formula(others[0]);
    if (!phi) return lose_case2();
    int two_ell = 0;
    for (int i : var_indices(*phi)) two_ell = std::max(two_ell, i);
    if (two_ell % 2 != 0) return lose_case2();
    if (c.size() != 2) return lose_case2();

    std::multiset<std::string> roster;
    for (const auto& b : v) roster.insert(b.voter);
    std::multiset<std::string> expected{"Marker"};
    std::vector<bool> assignment(two_ell);
    int width = 1;
    while ((1 << width) <= two_ell) ++width;
    auto bin = [&](int i) {
        std::string s;
        for (int bit = width - 1; bit >= 0; --bit)
            s.push_back(((i >> bit) & 1) ? '1' : '0');
        return s;
    };
    for (int i = 1; i <= two_ell; i += 2) {
        bool yes = roster.count("v" + bin(i) + "yes") == 1;
        bool no = roster.count("v" + bin(i) + "no") == 1;
        if (yes == no) return lose_case2();
        expected.insert(yes ? "v" + bin(i) + "yes" : "v" + bin(i) + "no");
        assignment[i - 1] = yes;
    }
    for (int i = 2; i <= two_ell; i += 2) {
        if (roster.count("v" + bin(i)) != 1) return lose_case2();
        expected.insert("v" + bin(i));
        for (const auto& b : v)
            if (b.voter == "v" + bin(i))
                assignment[i - 1] = !b.order.empty() && b.order[0] == "RoundOne";
    }
    if (roster != expected) return lose_case2();
    if (eval_formula(phi, assignment))
        return flip ? Names{} : Names{others[0]};
    return lose_case2();
}

}  // namespace

TEST_SUITE("systems") {

TEST_CASE("qbf-dv worked examples") {
    Names c{"(x1&x2)", "(x1&x2)0"};
    std::string a = c[0], b = c[1];

    // suffixes 00/10 give x1 = false; a-before-b at the tail gives x2 = false
    std::vector<Ballot> v1{ballot("0100", {a, b}), ballot("1010", {a, b})};
    CHECK(winners_qbf_dv(c, v1, {false}).empty());
    CHECK(naive_qbf_dv(c, v1, false).empty());

    // suffix 01 sets x1, the reversed tail order sets x2
    std::vector<Ballot> v2{ballot("0101", {a, b}), ballot("1010", {b, a})};
    CHECK(winners_qbf_dv(c, v2, {false}) == c);
    CHECK(naive_qbf_dv(c, v2, false) == c);

    CHECK(winners_qbf_dv({"x2"}, v1, {false}).empty());  // fewer than two candidates

    // malformed least name, duplicate voters, too few voters
    CHECK(winners_qbf_dv({"#bad", "x2"}, v2, {false}).empty());
    std::vector<Ballot> dup{ballot("0101", {a, b}), ballot("0101", {b, a})};
    CHECK(winners_qbf_dv(c, dup, {false}).empty());
    CHECK(winners_qbf_dv(c, {ballot("0100", {a, b})}, {false}).empty());
    // an odd maximum index is never admissible
    CHECK(winners_qbf_dv({"x1", "x10"}, v2, {false}).empty());
}

TEST_CASE("qbf-dv matches the naive rule oracle") {
    for (const char* text : {"(x1&x2)", "(x1|x2)", "(!x1&!x2)", "x2",
                             "((x1|x2)&(!x1|!x2))"}) {
        Names c{text, std::string(text) + "0"};
        const std::string& a = c[0];
        const std::string& b = c[1];
        const char* suffixes[] = {"00", "01", "10", "11"};
        for (const char* s1 : suffixes)
            for (const char* s2 : suffixes)
                for (bool ballot1_rev : {false, true})
                    for (bool ballot2_rev : {false, true})
                        for (bool flip : {false, true}) {
                            std::vector<Ballot> v{
                                ballot(std::string("0") + s1,
                                       ballot1_rev ? PreferenceOrder{b, a}
                                                   : PreferenceOrder{a, b}),
                                ballot(std::string("1") + s2,
                                       ballot2_rev ? PreferenceOrder{b, a}
                                                   : PreferenceOrder{a, b})};
                            CHECK(winners_qbf_dv(c, v, {flip}) ==
                                  naive_qbf_dv(c, v, flip));
                        }
    }
}

TEST_CASE("qbf-dv flip duality") {
    Names c{"(x1|x2)", "(x1|x2)0"};
    const char* suffixes[] = {"00", "01", "10", "11"};
    for (const char* s1 : suffixes)
        for (const char* s2 : suffixes) {
            std::vector<Ballot> v{ballot(std::string("0") + s1, {c[0], c[1]}),
                                  ballot(std::string("1") + s2, {c[1], c[0]})};
            Names plain = winners_qbf_dv(c, v, {false});
            Names flipped = winners_qbf_dv(c, v, {true});
            CHECK(plain != flipped);
            CHECK((plain.empty() ? flipped == c : flipped.empty()));
        }
}

TEST_CASE("taut system") {
    // tautology: every assignment of the single tester satisfies it
    Names c{"(x1|!x1)", "(x1|!x1)0"};
    for (bool rev : {false, true}) {
        std::vector<Ballot> v{ballot("01", rev ? PreferenceOrder{c[1], c[0]}
                                               : PreferenceOrder{c[0], c[1]})};
        CHECK(winners_taut(c, v) == c);
    }

    Names cx{"x1", "x10"};
    std::vector<Ballot> forward{ballot("01", {"x1", "x10"})};
    CHECK(winners_taut(cx, forward).empty());  // tail order gives x1 = false
    std::vector<Ballot> reversed{ballot("01", {"x10", "x1"})};
    CHECK(winners_taut(cx, reversed) == cx);

    CHECK(winners_taut({"#bad", "z"}, forward).empty());
    CHECK(winners_taut(cx, {}).empty());  // fewer voters than variables
    std::vector<Ballot> dup{ballot("01", {"x1", "x10"}),
                            ballot("01", {"x10", "x1"})};
    CHECK(winners_taut(cx, dup).empty());
}

TEST_CASE("roundone worked example") {
    // ell = 1: roster is Marker, one of v01yes/v01no, and v10
    Names c{"RoundOne", "x2"};
    std::vector<Ballot> v{ballot("Marker", {"x2", "RoundOne"}),
                          ballot("v01yes", {"x2", "RoundOne"}),
                          ballot("v10", {"RoundOne", "x2"})};
    CHECK(winners_roundone(c, v, {false}) == Names{"x2"});
    CHECK(naive_roundone(c, v, false) == Names{"x2"});

    // x2 reads whether RoundOne tops the v10 ballot
    v[2].order = {"x2", "RoundOne"};
    CHECK(winners_roundone(c, v, {false}) == Names{"RoundOne"});
    CHECK(naive_roundone(c, v, false) == Names{"RoundOne"});

    // no Marker: everyone loses in both variants
    std::vector<Ballot> unmarked{ballot("v01yes", {"x2", "RoundOne"})};
    CHECK(winners_roundone(c, unmarked, {false}).empty());
    CHECK(winners_roundone(c, unmarked, {true}).empty());

    // no RoundOne candidate: everyone wins; the twin makes everyone lose
    CHECK(winners_roundone({"x2"}, v, {false}) == Names{"x2"});
    CHECK(winners_roundone({"x2"}, v, {true}).empty());
}

TEST_CASE("roundone matches the naive rule oracle") {
    Names c{"RoundOne", "(x1&x2)"};
    std::vector<std::vector<Ballot>> rosters;
    for (const char* odd : {"v01yes", "v01no", "v01yes_bad"})
        for (const char* even : {"v10", "v11"})
            for (bool top : {false, true})
                for (bool with_marker : {false, true}) {
                    std::vector<Ballot> v;
                    if (with_marker)
                        v.push_back(ballot("Marker", {"(x1&x2)", "RoundOne"}));
                    v.push_back(ballot(odd, {"(x1&x2)", "RoundOne"}));
                    v.push_back(ballot(even, top
                                                 ? PreferenceOrder{"RoundOne",
                                                                   "(x1&x2)"}
                                                 : PreferenceOrder{"(x1&x2)",
                                                                   "RoundOne"}));
                    rosters.push_back(std::move(v));
                }
    for (const auto& v : rosters)
        for (bool flip : {false, true})
            CHECK(winners_roundone(c, v, {flip}) == naive_roundone(c, v, flip));
}

TEST_CASE("roundone winners stay within the reserved pair") {
    // with a RoundOne candidate the plain rule only ever elects RoundOne or
    // the least other candidate
    Names c{"RoundOne", "x2", "zz"};
    std::vector<Ballot> v{ballot("Marker", {"x2", "RoundOne", "zz"}),
                          ballot("v01yes", {"zz", "x2", "RoundOne"}),
                          ballot("v10", {"RoundOne", "x2", "zz"})};
    Names winners = winners_roundone(c, v, {false});
    for (const auto& w : winners) CHECK((w == "RoundOne" || w == "x2"));
}

TEST_CASE("sat-1c") {
    // (T,F) read off the lowest-order name bits satisfies the formula
    Names c{"(x1&!x2)"};
    std::vector<Ballot> v{ballot("01", {c[0]}), ballot("10", {c[0]})};
    CHECK(winners_sat_1c(c, v).empty());
    {
        FormulaPtr f = parse_formula("(x1&!x2)");
        CHECK((eval_formula(f, {true, false}) || eval_formula(f, {false, true})));
    }

    // neither (T,F) nor its complement satisfies a plain conjunction
    Names c2{"(x1&x2)"};
    CHECK(winners_sat_1c(c2, {ballot("01", {c2[0]}), ballot("10", {c2[0]})}) == c2);
    {
        FormulaPtr f = parse_formula("(x1&x2)");
        CHECK_FALSE(eval_formula(f, {true, false}));
        CHECK_FALSE(eval_formula(f, {false, true}));
    }

    // two or more candidates: everyone wins
    Names pair{"(x1&x2)", "other"};
    CHECK(winners_sat_1c(pair, {}) == Names{"(x1&x2)", "other"});

    // syntactic failures fall through to everyone winning
    CHECK(winners_sat_1c({"#bad"}, v) == Names{"#bad"});
    CHECK(winners_sat_1c(c, {ballot("01", {c[0]})}) == c);  // wrong voter count
    CHECK(winners_sat_1c(c, {ballot("1", {c[0]}), ballot("1", {c[0]})}) == c);

    // the complement twin is honoured
    Names neg{"!x1"};
    CHECK(winners_sat_1c(neg, {ballot("0", {neg[0]})}).empty());
    CHECK(winners_sat_1c(neg, {ballot("1", {neg[0]})}).empty());
}

TEST_CASE("constructed systems stay inside the candidate set") {
    Names c{"(x1&x2)", "(x1&x2)0", "RoundOne"};
    std::vector<Ballot> v{ballot("0101", {c[0], c[1], c[2]}),
                          ballot("1011", {c[2], c[1], c[0]})};
    for (const auto& id : known_system_ids()) {
        const ElectionSystem* sys = find_system(id);
        for (const auto& w : sys->winners(c, v))
            CHECK(std::find(c.begin(), c.end(), w) != c.end());
    }
}

}  // TEST_SUITE
