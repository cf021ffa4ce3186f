#include <doctest.h>

#include <functional>

#include "ovc/formula.hpp"
#include "ovc/rng.hpp"

using namespace ovc;

TEST_SUITE("formula") {

TEST_CASE("parse grammar instances") {
    FormulaPtr f = parse_formula("(x1&x2)");
    REQUIRE(f->kind() == Formula::Kind::And);
    CHECK(f->left()->kind() == Formula::Kind::Var);
    CHECK(f->left()->var_index() == 1);
    CHECK(f->right()->var_index() == 2);

    CHECK(parse_formula("!x1")->kind() == Formula::Kind::Not);
    CHECK(parse_formula("((x1|x2)&!x3)") != nullptr);
}

TEST_CASE("parse rejections") {
    CHECK_THROWS_AS(parse_formula("x0"), ParseError);   // indices are 1-based
    CHECK_THROWS_AS(parse_formula("RoundOne"), ParseError);
    CHECK_THROWS_AS(parse_formula("x1x2"), ParseError);  // trailing garbage
    CHECK_THROWS_AS(parse_formula("(x1&x2"), ParseError);
    CHECK_THROWS_AS(parse_formula("(x1&)"), ParseError);
    CHECK_THROWS_AS(parse_formula(""), ParseError);
    CHECK_THROWS_AS(parse_formula("x01"), ParseError);  // leading zero
    CHECK_THROWS_AS(parse_formula("(x1 & x2)"), ParseError);
    CHECK(try_parse_formula("Marker") == nullptr);
}

TEST_CASE("eval") {
    CHECK_FALSE(eval_formula(parse_formula("(x1&x2)"), {true, false}));
    CHECK(eval_formula(parse_formula("!x1"), {false}));
    CHECK(eval_formula(parse_formula("(x1|x2)"), {false, true}));
    CHECK_THROWS_AS(eval_formula(parse_formula("x3"), {true, false}), Error);
}

TEST_CASE("render parse round trip") {
    for (const char* text : {"x1", "!x12", "(x1&(x2|!x3))", "!!(x1|x1)",
                             "((x1&x2)|(!x1&!x2))"}) {
        FormulaPtr f = parse_formula(text);
        CHECK(render_formula(f) == text);
    }
}

TEST_CASE("round trip on random trees") {
    Rng rng(42);
    std::function<FormulaPtr(int)> build = [&](int budget) -> FormulaPtr {
        if (budget <= 1 || rng.below(4) == 0)
            return Formula::var(1 + rng.below_int(9));
        switch (rng.below(3)) {
            case 0:
                return Formula::negation(build(budget - 1));
            case 1: {
                int left = 1 + rng.below_int(budget - 1);
                return Formula::conjunction(build(left), build(budget - 1 - left));
            }
            default: {
                int left = 1 + rng.below_int(budget - 1);
                return Formula::disjunction(build(left), build(budget - 1 - left));
            }
        }
    };
    for (int i = 0; i < 200; ++i) {
        FormulaPtr f = build(8);
        FormulaPtr back = parse_formula(render_formula(f));
        CHECK(*back == *f);
        CHECK(render_formula(back) == render_formula(f));
    }
}

TEST_CASE("variable queries") {
    FormulaPtr f = parse_formula("((x2&x5)|!x2)");
    CHECK(max_var_index(*f) == 5);
    CHECK(var_indices(*f) == std::vector<int>{2, 5});
}

}  // TEST_SUITE
