#include "germcalc/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "germcalc/error.hpp"

namespace germcalc {

namespace {

struct Factor {
    std::size_t var;
    int power;
};

struct Term {
    Integer coeff;
    std::vector<Factor> factors;
};

using RawPoly = std::vector<Term>;

class Parser {
public:
    Parser(std::string_view text, std::vector<std::string>& vars) : text_(text), vars_(vars) {}

    std::vector<std::vector<RawPoly>> multigerm() {
        std::vector<std::vector<RawPoly>> branches;
        skip_ws();
        if (peek() == '{') {
            advance();
            branches.push_back(branch());
            while (accept(';')) branches.push_back(branch());
            expect('}', "'}' or ';'");
        } else {
            branches.push_back(branch());
        }
        end();
        return branches;
    }

    RawPoly single_poly() {
        RawPoly p = poly();
        end();
        return p;
    }

private:
    std::vector<RawPoly> branch() {
        expect('(', "'('");
        std::vector<RawPoly> comps;
        comps.push_back(poly());
        while (accept(',')) comps.push_back(poly());
        expect(')', "')' or ','");
        return comps;
    }

    RawPoly poly() {
        RawPoly out;
        bool negative = accept('-');
        for (;;) {
            Term t = term();
            if (negative) t.coeff = -t.coeff;
            out.push_back(std::move(t));
            if (accept('+')) {
                negative = false;
            } else if (accept('-')) {
                negative = true;
            } else {
                return out;
            }
        }
    }

    Term term() {
        skip_ws();
        Term t{Integer(1), {}};
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coeff = integer();
            if (!accept('*')) return t;
        }
        t.factors.push_back(factor());
        while (accept('*')) t.factors.push_back(factor());
        return t;
    }

    Factor factor() {
        skip_ws();
        if (!std::islower(static_cast<unsigned char>(peek()))) fail("expected a variable");
        std::string name;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                name += c;
                advance();
            } else {
                break;
            }
        }
        auto it = std::find(vars_.begin(), vars_.end(), name);
        const auto var = static_cast<std::size_t>(it - vars_.begin());
        if (it == vars_.end()) vars_.push_back(name);
        int power = 1;
        if (accept('^')) {
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
            const Integer e = integer();
            if (!e.fits_sint_p() || e > 1000000) fail("exponent too large");
            power = static_cast<int>(e.get_si());
        }
        return {var, power};
    }

    Integer integer() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        return Integer(digits);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (peek() != c || pos_ >= text_.size()) return false;
        advance();
        return true;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected ") + what);
    }

    void end() {
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
    }

    [[noreturn]] void fail(const std::string& msg) const {
        std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
        throw ParseError(msg + ", found " + found, line_, col_);
    }

    std::string_view text_;
    std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

Poly build_poly(const RawPoly& raw, std::size_t nvars) {
    Poly p(nvars);
    for (const Term& t : raw) {
        std::vector<int> e(nvars, 0);
        for (const Factor& f : t.factors) e.at(f.var) += f.power;
        p.add_term(Monomial(std::move(e)), Rational(t.coeff));
    }
    return p;
}

std::string fresh_name(const std::vector<std::string>& taken) {
    for (int i = 1;; ++i) {
        std::string candidate = "w" + std::to_string(i);
        if (std::find(taken.begin(), taken.end(), candidate) == taken.end()) return candidate;
    }
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names.at(i);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

}  // namespace

MultiGerm parse_multigerm(std::string_view text, const ParseOptions& options) {
    std::vector<std::string> vars;
    Parser parser(text, vars);
    const auto raw = parser.multigerm();

    if (options.source_dim) {
        if (*options.source_dim < vars.size())
            throw ValidationError("expression uses " + std::to_string(vars.size()) +
                                  " variables but source dimension " + std::to_string(*options.source_dim) +
                                  " was requested");
        while (vars.size() < *options.source_dim) vars.push_back(fresh_name(vars));
    }
    if (vars.empty()) throw ValidationError("germ has no source variables; use an explicit source dimension");

    std::vector<Branch> branches;
    for (const auto& comps : raw) {
        Branch b;
        for (const RawPoly& rp : comps) b.components.push_back(build_poly(rp, vars.size()));
        branches.push_back(std::move(b));
    }
    if (options.target_dim) {
        for (const auto& b : branches)
            if (b.components.size() != *options.target_dim)
                throw ValidationError("branch has " + std::to_string(b.components.size()) +
                                      " components but target dimension " +
                                      std::to_string(*options.target_dim) + " was requested");
    }
    return MultiGerm(std::move(vars), std::move(branches));
}

Poly parse_poly(std::string_view text, std::vector<std::string>& var_names) {
    Parser parser(text, var_names);
    const RawPoly raw = parser.single_poly();
    return build_poly(raw, var_names.size());
}

namespace {

std::string format_term(const Monomial& m, const Rational& c, bool first, const std::vector<std::string>& names) {
    std::string s;
    const bool negative = sgn(c) < 0;
    if (first) {
        if (negative) s += "-";
    } else {
        s += negative ? "-" : "+";
    }
    const Rational mag = abs(c);
    const std::string mono = format_monomial(m, names);
    if (mono.empty()) {
        s += mag.get_str();
    } else if (mag == 1) {
        s += mono;
    } else {
        s += mag.get_str() + "*" + mono;
    }
    return s;
}

// Terms go out in descending grlex order, except that a term may only be
// printed once every variable it introduces is the next unseen one; this
// keeps first-appearance order equal to variable order when re-parsed.
std::string format_poly_tracked(const Poly& p, const std::vector<std::string>& names, std::size_t& seen) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<const Monomial*, const Rational*>> pending;
    for (const auto& [m, c] : p.terms()) pending.emplace_back(&m, &c);

    auto introduces_prefix = [&](const Monomial& m) {
        std::size_t next = seen;
        for (std::size_t v = 0; v < m.nvars(); ++v) {
            if (m[v] == 0 || v < seen) continue;
            if (v != next) return false;
            ++next;
        }
        return true;
    };

    std::string s;
    bool first = true;
    while (!pending.empty()) {
        auto it = std::find_if(pending.begin(), pending.end(),
                               [&](const auto& t) { return introduces_prefix(*t.first); });
        if (it == pending.end()) it = pending.begin();  // var order not realizable; keep grlex
        const Monomial& m = *it->first;
        s += format_term(m, *it->second, first, names);
        first = false;
        for (std::size_t v = 0; v < m.nvars(); ++v)
            if (m[v] > 0 && v >= seen) seen = v + 1;
        pending.erase(it);
    }
    return s;
}

}  // namespace

std::string format_poly(const Poly& p, const std::vector<std::string>& names) {
    std::size_t seen = 0;
    return format_poly_tracked(p, names, seen);
}

std::string format_multigerm(const MultiGerm& f) {
    std::size_t seen = 0;
    auto branch_text = [&](const Branch& b) {
        std::string s = "(";
        for (std::size_t l = 0; l < b.components.size(); ++l) {
            if (l) s += ", ";
            s += format_poly_tracked(b.components[l], f.var_names(), seen);
        }
        return s + ")";
    };
    if (f.branch_count() == 1) return branch_text(f.branch(0));
    std::string s = "{";
    for (std::size_t i = 0; i < f.branch_count(); ++i) {
        if (i) s += "; ";
        s += branch_text(f.branch(i));
    }
    return s + "}";
}

}  // namespace germcalc
