#include "ovc/formula.hpp"

#include <algorithm>
#include <set>

namespace ovc {

FormulaPtr Formula::var(int index) {
    if (index < 1) throw ParseError("variable index must be >= 1");
    return FormulaPtr(new Formula(Kind::Var, index, nullptr, nullptr));
}

FormulaPtr Formula::negation(FormulaPtr operand) {
    return FormulaPtr(new Formula(Kind::Not, 0, std::move(operand), nullptr));
}

FormulaPtr Formula::conjunction(FormulaPtr lhs, FormulaPtr rhs) {
    return FormulaPtr(new Formula(Kind::And, 0, std::move(lhs), std::move(rhs)));
}

FormulaPtr Formula::disjunction(FormulaPtr lhs, FormulaPtr rhs) {
    return FormulaPtr(new Formula(Kind::Or, 0, std::move(lhs), std::move(rhs)));
}

bool Formula::operator==(const Formula& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::Var:
            return var_index_ == other.var_index_;
        case Kind::Not:
            return *left_ == *other.left_;
        case Kind::And:
        case Kind::Or:
            return *left_ == *other.left_ && *right_ == *other.right_;
    }
    return false;
}

namespace {

void render_into(const Formula& f, std::string& out) {
    switch (f.kind()) {
        case Formula::Kind::Var:
            out += 'x';
            out += std::to_string(f.var_index());
            break;
        case Formula::Kind::Not:
            out += '!';
            render_into(*f.left(), out);
            break;
        case Formula::Kind::And:
        case Formula::Kind::Or:
            out += '(';
            render_into(*f.left(), out);
            out += f.kind() == Formula::Kind::And ? '&' : '|';
            render_into(*f.right(), out);
            out += ')';
            break;
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    FormulaPtr parse() {
        FormulaPtr f = parse_formula();
        if (pos_ != text_.size())
            fail("trailing input after formula");
        return f;
    }

private:
    FormulaPtr parse_formula() {
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == 'x') {
            ++pos_;
            return parse_var();
        }
        if (c == '!') {
            ++pos_;
            return Formula::negation(parse_formula());
        }
        if (c == '(') {
            ++pos_;
            FormulaPtr lhs = parse_formula();
            if (pos_ >= text_.size() || (text_[pos_] != '&' && text_[pos_] != '|'))
                fail("expected '&' or '|'");
            char op = text_[pos_++];
            FormulaPtr rhs = parse_formula();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                fail("expected ')'");
            ++pos_;
            return op == '&' ? Formula::conjunction(std::move(lhs), std::move(rhs))
                             : Formula::disjunction(std::move(lhs), std::move(rhs));
        }
        fail("expected 'x', '!' or '('");
        return nullptr;  // unreachable
    }

    FormulaPtr parse_var() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
            ++pos_;
        if (pos_ == start) fail("expected a variable index");
        std::string_view digits = text_.substr(start, pos_ - start);
        if (digits[0] == '0')
            fail(digits == "0" ? "variable index must be >= 1"
                               : "variable index has a leading zero");
        if (digits.size() > 6) fail("variable index too large");
        int value = 0;
        for (char d : digits) value = value * 10 + (d - '0');
        return Formula::var(value);
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("formula parse error at position " +
                         std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string render_formula(const Formula& f) {
    std::string out;
    render_into(f, out);
    return out;
}

std::string render_formula(const FormulaPtr& f) { return render_formula(*f); }

FormulaPtr parse_formula(std::string_view text) {
    return Parser(text).parse();
}

FormulaPtr try_parse_formula(std::string_view text) noexcept {
    try {
        return Parser(text).parse();
    } catch (const ParseError&) {
        return nullptr;
    }
}

bool eval_formula(const Formula& f, const std::vector<bool>& assignment) {
    switch (f.kind()) {
        case Formula::Kind::Var: {
            int i = f.var_index();
            if (i < 1 || static_cast<std::size_t>(i) > assignment.size())
                throw Error("assignment does not cover variable x" +
                            std::to_string(i));
            return assignment[i - 1];
        }
        case Formula::Kind::Not:
            return !eval_formula(*f.left(), assignment);
        case Formula::Kind::And:
            return eval_formula(*f.left(), assignment) &&
                   eval_formula(*f.right(), assignment);
        case Formula::Kind::Or:
            return eval_formula(*f.left(), assignment) ||
                   eval_formula(*f.right(), assignment);
    }
    return false;
}

bool eval_formula(const FormulaPtr& f, const std::vector<bool>& assignment) {
    return eval_formula(*f, assignment);
}

namespace {

void collect_vars(const Formula& f, std::set<int>& out) {
    switch (f.kind()) {
        case Formula::Kind::Var:
            out.insert(f.var_index());
            break;
        case Formula::Kind::Not:
            collect_vars(*f.left(), out);
            break;
        case Formula::Kind::And:
        case Formula::Kind::Or:
            collect_vars(*f.left(), out);
            collect_vars(*f.right(), out);
            break;
    }
}

}  // namespace

int max_var_index(const Formula& f) {
    std::set<int> vars;
    collect_vars(f, vars);
    return *vars.rbegin();
}

std::vector<int> var_indices(const Formula& f) {
    std::set<int> vars;
    collect_vars(f, vars);
    return std::vector<int>(vars.begin(), vars.end());
}

}  // namespace ovc
