#include "ovc/oracles.hpp"

#include <algorithm>

namespace ovc {

QbfPrimeInstance make_qbf_prime(FormulaPtr formula) {
    int max_index = max_var_index(*formula);
    if (max_index % 2 != 0)
        throw ValidationError("odd-max-variable",
                              "the maximum variable index must be even, got x" +
                                  std::to_string(max_index));
    return QbfPrimeInstance{std::move(formula), max_index / 2};
}

namespace {

bool eval_prefix(const Formula& f, std::vector<bool>& assignment,
                 std::size_t next) {
    if (next == assignment.size()) return eval_formula(f, assignment);
    bool existential = next % 2 == 0;  // positions 0,2,... are x1,x3,...
    assignment[next] = false;
    bool on_false = eval_prefix(f, assignment, next + 1);
    if (existential && on_false) return true;
    if (!existential && !on_false) return false;
    assignment[next] = true;
    return eval_prefix(f, assignment, next + 1);
}

}  // namespace

bool eval_qbf_prime(const QbfPrimeInstance& q) {
    if (!q.formula || q.ell < 1 || max_var_index(*q.formula) != 2 * q.ell)
        throw ValidationError("malformed-qbf",
                              "instance formula does not match ell");
    std::vector<bool> assignment(2 * q.ell, false);
    return eval_prefix(*q.formula, assignment, 0);
}

bool sat_satisfiable(const Formula& f) {
    int n = max_var_index(f);
    std::vector<bool> assignment(n, false);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        for (int i = 0; i < n; ++i) assignment[i] = (bits >> i) & 1;
        if (eval_formula(f, assignment)) return true;
    }
    return false;
}

bool taut(const Formula& f) {
    int n = max_var_index(f);
    std::vector<bool> assignment(n, false);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        for (int i = 0; i < n; ++i) assignment[i] = (bits >> i) & 1;
        if (!eval_formula(f, assignment)) return false;
    }
    return true;
}

void validate_hitting_set(const HittingSetInstance& h) {
    if (h.m < 1)
        throw ValidationError("bad-universe", "universe size must be positive");
    if (h.sets.empty())
        throw ValidationError("no-sets", "the set collection is empty");
    if (h.k < 1 || h.k > h.m)
        throw ValidationError("bad-bound",
                              "k must satisfy 1 <= k <= m, got " +
                                  std::to_string(h.k));
    for (const auto& s : h.sets) {
        if (s.empty())
            throw ValidationError("empty-set", "every listed set must be nonempty");
        for (int e : s)
            if (e < 1 || e > h.m)
                throw ValidationError("element-out-of-range",
                                      "set element " + std::to_string(e) +
                                          " is outside 1.." + std::to_string(h.m));
        std::vector<int> copy = s;
        std::sort(copy.begin(), copy.end());
        if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
            throw ValidationError("duplicate-element",
                                  "a listed set repeats an element");
    }
}

bool hitting_set_exists(const HittingSetInstance& h) {
    validate_hitting_set(h);
    if (h.m > 30)
        throw CapError("hitting set brute force is limited to universes of "
                       "size 30");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h.m); ++mask) {
        if (static_cast<int>(__builtin_popcountll(mask)) > h.k) continue;
        bool hits_all = true;
        for (const auto& s : h.sets) {
            bool hit = false;
            for (int e : s)
                if ((mask >> (e - 1)) & 1) {
                    hit = true;
                    break;
                }
            if (!hit) {
                hits_all = false;
                break;
            }
        }
        if (hits_all) return true;
    }
    return false;
}

}  // namespace ovc
