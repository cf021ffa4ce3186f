#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ovc/errors.hpp"

namespace ovc {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Boolean formula AST: 1-based variables, negation, binary AND/OR.
// Text form:  formula ::= "x"<decimal>=1> | "!"formula
//                       | "("formula"&"formula")" | "("formula"|"formula")"
class Formula {
public:
    enum class Kind { Var, Not, And, Or };

    static FormulaPtr var(int index);
    static FormulaPtr negation(FormulaPtr operand);
    static FormulaPtr conjunction(FormulaPtr lhs, FormulaPtr rhs);
    static FormulaPtr disjunction(FormulaPtr lhs, FormulaPtr rhs);

    Kind kind() const { return kind_; }
    int var_index() const { return var_index_; }
    const FormulaPtr& left() const { return left_; }
    const FormulaPtr& right() const { return right_; }

    bool operator==(const Formula& other) const;

private:
    Formula(Kind kind, int var_index, FormulaPtr left, FormulaPtr right)
        : kind_(kind), var_index_(var_index),
          left_(std::move(left)), right_(std::move(right)) {}

    Kind kind_;
    int var_index_;
    FormulaPtr left_;
    FormulaPtr right_;
};

// Canonical text rendering; parse_formula(render_formula(f)) reproduces f.
std::string render_formula(const Formula& f);
std::string render_formula(const FormulaPtr& f);

// Strict parser for the grammar above. Rejects index 0, leading zeros in
// indices, and trailing garbage. Throws ParseError.
FormulaPtr parse_formula(std::string_view text);

// Non-throwing variant used by winner rules that must be total functions.
FormulaPtr try_parse_formula(std::string_view text) noexcept;

// assignment[i-1] is the value of x_i. Throws Error if some variable of f
// is not covered by the assignment.
bool eval_formula(const Formula& f, const std::vector<bool>& assignment);
bool eval_formula(const FormulaPtr& f, const std::vector<bool>& assignment);

int max_var_index(const Formula& f);
// Sorted, duplicate-free list of the variable indices occurring in f.
std::vector<int> var_indices(const Formula& f);

}  // namespace ovc
