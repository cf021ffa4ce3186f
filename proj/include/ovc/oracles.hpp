#pragma once

#include <vector>

#include "ovc/formula.hpp"

namespace ovc {

// Alternating-quantifier instance: exists x1, for all x2, ..., exists
// x_{2l-1}, for all x_{2l}, with x_{2l} occurring in the matrix and no
// variable beyond it.
struct QbfPrimeInstance {
    FormulaPtr formula;
    int ell = 0;  // max variable index is 2*ell
};

// Derives ell from the formula; throws ValidationError when the maximum
// variable index is odd.
QbfPrimeInstance make_qbf_prime(FormulaPtr formula);

// Exact recursive evaluation of the alternation.
bool eval_qbf_prime(const QbfPrimeInstance& q);

// Brute force over all assignments of x_1..x_max.
bool sat_satisfiable(const Formula& f);
bool taut(const Formula& f);
inline bool sat_satisfiable(const FormulaPtr& f) { return sat_satisfiable(*f); }
inline bool taut(const FormulaPtr& f) { return taut(*f); }

// Hitting Set: does some B' of size <= k intersect every listed subset of
// {1..m}?
struct HittingSetInstance {
    int m = 0;                            // universe size
    std::vector<std::vector<int>> sets;   // nonempty subsets of {1..m}
    int k = 0;                            // 1 <= k <= m
};

// Throws ValidationError on a malformed instance.
void validate_hitting_set(const HittingSetInstance& h);

// Brute force over all subsets of size <= k.
bool hitting_set_exists(const HittingSetInstance& h);

}  // namespace ovc
