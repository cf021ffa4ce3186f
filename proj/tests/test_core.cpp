#include <doctest.h>

#include <algorithm>

#include "ovc/core.hpp"
#include "ovc/rng.hpp"

using namespace ovc;

namespace {

Ballot ballot(const std::string& voter, const PreferenceOrder& order) {
    return Ballot{voter, order};
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("lex_less follows byte order") {
    CHECK(lex_less("100", "1001"));  // proper prefix precedes
    CHECK(lex_less("a", "a0"));
    CHECK(lex_less("R", "x"));
    CHECK_FALSE(lex_less("x", "R"));
    CHECK_FALSE(lex_less("a", "a"));
}

TEST_CASE("lex_less is a strict total order on distinct strings") {
    std::vector<std::string> names{"", "0", "00", "01", "1", "10", "a",
                                   "ab", "b", "A", "Z", "z0"};
    for (const auto& a : names)
        for (const auto& b : names) {
            if (a == b) {
                CHECK_FALSE(lex_less(a, b));
            } else {
                CHECK(lex_less(a, b) != lex_less(b, a));
            }
            for (const auto& c : names)
                if (lex_less(a, b) && lex_less(b, c)) CHECK(lex_less(a, c));
        }
}

TEST_CASE("mask keeps a subsequence") {
    CHECK(mask({"a", "b", "c"}, {"a", "c"}) == PreferenceOrder{"a", "c"});
    CHECK(mask({"c", "b", "a"}, {"b"}) == PreferenceOrder{"b"});
    CHECK(mask({"a", "b", "c"}, {"a", "b", "c"}) == PreferenceOrder{"a", "b", "c"});
    CHECK_THROWS_AS(mask({"a", "b"}, {"z"}), ValidationError);
}

TEST_CASE("mask composes") {
    PreferenceOrder order{"d", "b", "a", "c", "e"};
    std::vector<CandidateName> wide{"a", "b", "c", "d"};
    std::vector<CandidateName> narrow{"a", "d"};
    CHECK(mask(mask(order, wide), narrow) == mask(order, narrow));
}

TEST_CASE("plurality winners") {
    std::vector<CandidateName> c{"a", "b", "c"};
    std::vector<Ballot> v{ballot("v1", {"a", "b", "c"}),
                          ballot("v2", {"a", "c", "b"}),
                          ballot("v3", {"b", "a", "c"})};
    CHECK(plurality_winners(c, v) == std::vector<CandidateName>{"a"});

    CHECK(plurality_winners({"a", "b"}, {}) ==
          std::vector<CandidateName>{"a", "b"});  // everyone ties at zero

    std::vector<Ballot> tied{ballot("v1", {"x", "y"}), ballot("v2", {"y", "x"})};
    CHECK(plurality_winners({"x", "y"}, tied) ==
          std::vector<CandidateName>{"x", "y"});

    CHECK(plurality_winners({}, {}).empty());
    CHECK_THROWS_AS(plurality_winners({"a", "b"}, {ballot("v1", {"a"})}),
                    ValidationError);
}

TEST_CASE("plurality is anonymous and top-only") {
    std::vector<CandidateName> c{"a", "b", "c"};
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Ballot> v;
        int n = 1 + rng.below_int(5);
        for (int i = 0; i < n; ++i) {
            PreferenceOrder order = c;
            rng.shuffle(order);
            v.push_back(ballot("v" + std::to_string(i), order));
        }
        auto winners = plurality_winners(c, v);
        CHECK_FALSE(winners.empty());
        for (const auto& w : winners)
            CHECK(std::find(c.begin(), c.end(), w) != c.end());

        // permutation of the list and renaming leave the result unchanged
        std::vector<Ballot> shuffled = v;
        rng.shuffle(shuffled);
        for (std::size_t i = 0; i < shuffled.size(); ++i)
            shuffled[i].voter = "w" + std::to_string(i);
        CHECK(plurality_winners(c, shuffled) == winners);

        // replacing a ballot by another with the same top keeps the result
        std::vector<Ballot> retopped = v;
        for (auto& b : retopped) {
            PreferenceOrder rest(b.order.begin() + 1, b.order.end());
            rng.shuffle(rest);
            b.order.assign(1, b.order.front());
            b.order.insert(b.order.end(), rest.begin(), rest.end());
        }
        CHECK(plurality_winners(c, retopped) == winners);
    }
}

TEST_CASE("validate_election") {
    std::vector<CandidateName> c{"a", "b"};
    CHECK(!validate_election(c, {ballot("v1", {"a", "b"})}).has_value());

    auto dup = validate_election(
        c, {ballot("v1", {"a", "b"}), ballot("v1", {"b", "a"})});
    REQUIRE(dup.has_value());
    CHECK(dup->code == "duplicate-voter");

    auto incomplete = validate_election(c, {ballot("v1", {"a"})});
    REQUIRE(incomplete.has_value());
    CHECK(incomplete->code == "invalid-ballot");

    auto dup_cand = validate_election({"a", "a"}, {});
    REQUIRE(dup_cand.has_value());
    CHECK(dup_cand->code == "duplicate-candidate");
}

TEST_CASE("system registry") {
    const ElectionSystem* plurality = find_system("plurality");
    REQUIRE(plurality != nullptr);
    CHECK(plurality->anonymous);
    CHECK(plurality->top_only);
    for (const auto& id : known_system_ids()) {
        const ElectionSystem* sys = find_system(id);
        REQUIRE(sys != nullptr);
        CHECK(sys->id == id);
        if (id != "plurality") {
            CHECK_FALSE(sys->anonymous);
            CHECK_FALSE(sys->top_only);
        }
        CHECK(sys->winners({}, {}).empty());  // no candidates, no winners
    }
    CHECK(find_system("borda") == nullptr);
}

TEST_CASE("binary helpers") {
    CHECK(bit_length(0) == 1);
    CHECK(bit_length(1) == 1);
    CHECK(bit_length(2) == 2);
    CHECK(bit_length(6) == 3);
    CHECK(binary_string(6) == "110");
    CHECK(padded_binary(1, 3) == "001");
    CHECK(padded_binary(6, 3) == "110");
}

}  // TEST_SUITE
