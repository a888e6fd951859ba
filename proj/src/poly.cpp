#include "jelonek/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "jelonek/errors.hpp"

namespace jelonek {

Poly Poly::constant(const Rational& c, std::vector<std::string> vars) {
    Poly p(std::move(vars));
    p.add_term(Mono{0, 0, 0, 0}, c);
    return p;
}

Poly Poly::variable(const std::string& name, std::vector<std::string> vars) {
    Poly p(std::move(vars));
    long i = p.var_index(name);
    if (i < 0) throw std::domain_error("variable not in list: " + name);
    Mono m{0, 0, 0, 0};
    m[size_t(i)] = 1;
    p.add_term(m, Rational(1));
    return p;
}

Poly Poly::monomial(const Rational& c, const Mono& m, std::vector<std::string> vars) {
    Poly p(std::move(vars));
    p.add_term(m, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_total(terms_.begin()->first) == 0);
}

Rational Poly::constant_value() const {
    auto it = terms_.find(Mono{0, 0, 0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

long Poly::degree() const {
    if (terms_.empty()) return -1;
    return long(mono_total(terms_.begin()->first));
}

long Poly::degree_in(const std::string& var) const {
    long i = var_index(var);
    if (i < 0 || terms_.empty()) return terms_.empty() ? -1 : 0;
    uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[size_t(i)]);
    return long(d);
}

long Poly::var_index(const std::string& var) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == var) return long(i);
    return -1;
}

void Poly::add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

static void check_same_vars(const Poly& a, const Poly& b) {
    if (a.vars() != b.vars())
        throw std::domain_error("polynomial variable lists differ");
}

Poly Poly::operator+(const Poly& o) const {
    check_same_vars(*this, o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_vars(*this, o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_vars(*this, o);
    Poly r(vars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Mono m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]};
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    check_same_vars(*this, o);
    return terms_ == o.terms_;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(vars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, c * k);
    return r;
}

Poly Poly::pow(long e) const {
    if (e < 0) throw std::domain_error("negative polynomial power");
    Poly acc = Poly::constant(Rational(1), vars_);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

Poly Poly::divide_exact(const Poly& o) const {
    check_same_vars(*this, o);
    if (o.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly rem = *this;
    Poly quo(vars_);
    const auto& [lm, lc] = *o.terms_.begin();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.begin();
        Mono q;
        for (int i = 0; i < 4; ++i) {
            if (rm[i] < lm[i]) throw std::domain_error("inexact polynomial division");
            q[i] = rm[i] - lm[i];
        }
        Rational qc = rc / lc;
        quo.add_term(q, qc);
        Poly t = Poly::monomial(qc, q, vars_);
        rem = rem - t * o;
        if (!rem.is_zero() && !(MonoDegLexDesc{}(rm, rem.terms_.begin()->first)))
            throw std::domain_error("inexact polynomial division");
    }
    return quo;
}

Poly Poly::derivative(const std::string& var) const {
    long i = var_index(var);
    if (i < 0) return Poly(vars_);
    Poly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[size_t(i)] == 0) continue;
        Mono d = m;
        d[size_t(i)] -= 1;
        r.add_term(d, c * long(m[size_t(i)]));
    }
    return r;
}

Poly Poly::leading_form() const {
    Poly r(vars_);
    if (terms_.empty()) return r;
    uint32_t top = mono_total(terms_.begin()->first);
    for (const auto& [m, c] : terms_) {
        if (mono_total(m) == top) r.terms_.emplace(m, c);
    }
    return r;
}

Poly Poly::coeff_of(const std::string& var, long k) const {
    long i = var_index(var);
    if (i < 0) throw std::domain_error("coeff_of: unknown variable " + var);
    Poly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (long(m[size_t(i)]) != k) continue;
        Mono d = m;
        d[size_t(i)] = 0;
        r.add_term(d, c);
    }
    return r;
}

Poly Poly::compose(const std::map<std::string, Poly>& subst) const {
    // Horner is awkward multivariately; with desk-scale degrees, cached
    // powers per substituted variable are plenty.
    std::array<std::vector<Poly>, 4> powers;
    std::array<const Poly*, 4> target{nullptr, nullptr, nullptr, nullptr};
    for (const auto& [name, rep] : subst) {
        long i = var_index(name);
        if (i < 0) throw std::domain_error("compose: unknown variable " + name);
        check_same_vars(rep, *this);
        target[size_t(i)] = &rep;
        powers[size_t(i)].push_back(Poly::constant(Rational(1), vars_));
    }
    Poly result(vars_);
    for (const auto& [m, c] : terms_) {
        Poly term = Poly::constant(c, vars_);
        Mono rest = m;
        for (size_t i = 0; i < 4; ++i) {
            if (!target[i]) continue;
            auto& pw = powers[i];
            while (pw.size() <= m[i]) pw.push_back(pw.back() * *target[i]);
            if (m[i] > 0) term = term * pw[m[i]];
            rest[i] = 0;
        }
        term = term * Poly::monomial(Rational(1), rest, vars_);
        result += term;
    }
    return result;
}

Poly Poly::eval_var(const std::string& var, const Rational& value) const {
    long i = var_index(var);
    if (i < 0) return *this;
    Poly r(vars_);
    std::vector<Rational> pw{Rational(1)};
    for (const auto& [m, c] : terms_) {
        while (pw.size() <= m[size_t(i)]) pw.push_back(pw.back() * value);
        Mono d = m;
        d[size_t(i)] = 0;
        r.add_term(d, c * pw[m[size_t(i)]]);
    }
    return r;
}

Rational Poly::eval_all(const std::map<std::string, Rational>& values) const {
    Poly p = *this;
    for (const auto& [name, v] : values) p = p.eval_var(name, v);
    if (!p.is_constant())
        throw std::domain_error("eval_all: unassigned variables remain");
    return p.constant_value();
}

Poly Poly::with_vars(const std::vector<std::string>& vars) const {
    std::array<long, 4> remap{-1, -1, -1, -1};
    for (size_t i = 0; i < vars_.size(); ++i) {
        long j = -1;
        for (size_t k = 0; k < vars.size(); ++k)
            if (vars[k] == vars_[i]) { j = long(k); break; }
        remap[i] = j;
    }
    Poly r(vars);
    for (const auto& [m, c] : terms_) {
        Mono d{0, 0, 0, 0};
        for (size_t i = 0; i < 4; ++i) {
            if (m[i] == 0) continue;
            if (remap[i] < 0)
                throw std::domain_error("with_vars: dropped variable still present");
            d[size_t(remap[i])] = m[i];
        }
        r.add_term(d, c);
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = mono_total(m) > 0;
        bool coeff_shown = !has_var || a != 1;
        if (coeff_shown) out << rat_to_string(a);
        bool need_star = coeff_shown;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (m[i] == 0) continue;
            if (need_star) out << "*";
            out << vars_[i];
            if (m[i] > 1) out << "^" << m[i];
            need_star = true;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Parser: expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
// factor := atom ('^' uint)* ; atom := rational | var | '(' expr ')' | '-' atom

namespace {

struct Parser {
    const std::string& text;
    const std::vector<std::string>& vars;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw input_error("parse", msg + " at position " + std::to_string(pos));
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Poly parse_expr() {
        Poly r = parse_term();
        while (true) {
            if (eat('+')) r += parse_term();
            else if (eat('-')) r -= parse_term();
            else break;
        }
        return r;
    }

    Poly parse_term() {
        Poly r = parse_factor();
        while (eat('*')) r *= parse_factor();
        return r;
    }

    Poly parse_factor() {
        Poly base = parse_atom();
        while (eat('^')) {
            skip_ws();
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) fail("expected non-negative integer exponent");
            long e = std::stol(text.substr(start, pos - start));
            base = base.pow(e);
        }
        return base;
    }

    Poly parse_atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Poly r = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == '-') {
            eat('-');
            return -parse_atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_var();
        fail("unexpected character");
    }

    Poly parse_number() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string num = text.substr(start, pos - start);
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == dstart) fail("expected denominator digits");
            std::string den = text.substr(dstart, pos - dstart);
            auto r = rat_from_string(num + "/" + den);
            if (!r || r->get_den() == 0) fail("bad rational literal");
            return Poly::constant(*r, vars);
        }
        return Poly::constant(Rational(num), vars);
    }

    Poly parse_var() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name = text.substr(start, pos - start);
        for (const auto& v : vars)
            if (v == name) return Poly::variable(name, vars);
        pos = start;
        fail("unknown variable '" + name + "'");
    }
};

} // namespace

Poly parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    Parser p{text, vars};
    Poly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

} // namespace jelonek
