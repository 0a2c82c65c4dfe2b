// Exact Laurent polynomial arithmetic over arbitrary-precision integers.
//
// LaurentPoly is an element of Z[t, t^-1] stored as a sparse map from
// exponent to nonzero coefficient.  Alexander polynomials live here, and
// the comparison that matters for them is equality up to a unit +-t^j
// (written ~ below and implemented by doteq / unit_normalize).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "corkal/errors.hpp"

namespace corkal {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class LaurentPoly {
public:
    using Terms = std::map<long long, Int>;

    LaurentPoly() = default;

    static LaurentPoly constant(Int c) { return monomial(std::move(c), 0); }

    static LaurentPoly monomial(Int c, long long exp) {
        LaurentPoly p;
        if (c != 0) p.terms_.emplace(exp, std::move(c));
        return p;
    }

    static LaurentPoly one() { return constant(1); }

    bool is_zero() const { return terms_.empty(); }

    // exponent-ascending, zero coefficients never stored
    const Terms& terms() const { return terms_; }

    Int coeff(long long exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Int(0) : it->second;
    }

    long long min_exp() const {
        if (terms_.empty()) throw ZeroPolynomial();
        return terms_.begin()->first;
    }

    long long max_exp() const {
        if (terms_.empty()) throw ZeroPolynomial();
        return terms_.rbegin()->first;
    }

    Int leading_coeff() const {
        if (terms_.empty()) throw ZeroPolynomial();
        return terms_.rbegin()->second;
    }

    void add_term(long long exp, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // p(t) * t^j
    LaurentPoly shifted(long long j) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + j, c);
        return r;
    }

    // p(1/t)
    LaurentPoly reciprocal() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    // exact convolution product
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const Int& k) {
        LaurentPoly r;
        if (k == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * k);
        return r;
    }

    bool operator==(const LaurentPoly& o) const = default;

private:
    Terms terms_;
};

// Canonical representative of the class of p under multiplication by +-t^j:
// poly has min exponent 0 and positive top coefficient, and
// sign * t^shift * poly recovers the input.
struct UnitNormalForm {
    LaurentPoly poly;
    int sign = 1;
    long long shift = 0;
};

inline UnitNormalForm unit_normalize(const LaurentPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    UnitNormalForm f;
    f.shift = p.min_exp();
    f.sign = p.leading_coeff() > 0 ? 1 : -1;
    f.poly = p.shifted(-f.shift);
    if (f.sign < 0) f.poly = -f.poly;
    return f;
}

// a ~ b, i.e. a = +-t^j b for some integer j.  Zero only matches zero.
inline bool doteq(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return unit_normalize(a).poly == unit_normalize(b).poly;
}

inline std::pair<long long, long long> degree_span(const LaurentPoly& p) {
    return {p.min_exp(), p.max_exp()};  // throws ZeroPolynomial on zero
}

inline Rational evaluate(const LaurentPoly& p, const Int& value) {
    if (value == 0) throw EvalAtZero();
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) {
        Int pw = boost::multiprecision::pow(value, static_cast<unsigned>(e < 0 ? -e : e));
        if (e >= 0)
            sum += Rational(c * pw);
        else
            sum += Rational(c) / Rational(pw);
    }
    return sum;
}

// Exact evaluation at +-1 (and other points where the result is integral).
inline Int evaluate_int(const LaurentPoly& p, const Int& value) {
    Rational r = evaluate(p, value);
    if (boost::multiprecision::denominator(r) != 1)
        throw Error("evaluation result is not an integer");
    return boost::multiprecision::numerator(r);
}

// Quotient a/b when it exists in Z[t, t^-1]; nullopt otherwise.
// Long division from the top exponent; any non-integral step aborts.
inline std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw ZeroDivisor();
    if (a.is_zero()) return LaurentPoly();
    // shift both to ordinary polynomials with nonzero constant term
    const long long amin = a.min_exp(), bmin = b.min_exp();
    LaurentPoly rem = a.shifted(-amin);
    const LaurentPoly div = b.shifted(-bmin);
    const long long bdeg = div.max_exp();
    LaurentPoly q;
    while (!rem.is_zero()) {
        const long long rdeg = rem.max_exp();
        if (rdeg < bdeg) return std::nullopt;
        const Int& top = rem.leading_coeff();
        if (top % div.leading_coeff() != 0) return std::nullopt;
        LaurentPoly mono = LaurentPoly::monomial(top / div.leading_coeff(), rdeg - bdeg);
        q += mono;
        rem -= mono * div;
    }
    return q.shifted(amin - bmin);
}

// ---------------------------------------------------------------------------
// Text format: terms `c*t^e` joined by `+`/`-`, coefficient omitted when 1,
// `t^0` written as a bare integer, exponent-ascending on output.
// Example: t^-2 - 3*t^-1 + 5 - 3*t + t^2
// ---------------------------------------------------------------------------

inline std::string to_text(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        Int mag = neg ? Int(-c) : c;
        if (e == 0) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            out << "t";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace detail {

inline void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

inline bool parse_int(const std::string& s, size_t& i, Int& out) {
    size_t j = i;
    if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
    size_t digits = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == digits) return false;
    out = Int(s.substr(i, j - i));
    i = j;
    return true;
}

inline bool parse_ll(const std::string& s, size_t& i, long long& out) {
    Int v;
    if (!parse_int(s, i, v)) return false;
    out = static_cast<long long>(v);
    return true;
}

}  // namespace detail

inline LaurentPoly parse_poly_text(const std::string& s) {
    LaurentPoly p;
    size_t i = 0;
    detail::skip_ws(s, i);
    if (i == s.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        detail::skip_ws(s, i);
        if (!first || s[i] == '+' || s[i] == '-') {
            if (i >= s.size() || (s[i] != '+' && s[i] != '-'))
                throw ParseError("expected '+' or '-' in polynomial at offset " + std::to_string(i));
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
            detail::skip_ws(s, i);
        }
        first = false;
        Int coef = 1;
        bool have_coef = detail::parse_int(s, i, coef);
        detail::skip_ws(s, i);
        long long exp = 0;
        bool have_t = false;
        if (i < s.size() && (s[i] == '*' || s[i] == 't')) {
            if (s[i] == '*') {
                if (!have_coef) throw ParseError("'*' without coefficient at offset " + std::to_string(i));
                ++i;
                detail::skip_ws(s, i);
            }
            if (i >= s.size() || s[i] != 't') throw ParseError("expected 't' at offset " + std::to_string(i));
            ++i;
            have_t = true;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (!detail::parse_ll(s, i, exp)) throw ParseError("bad exponent at offset " + std::to_string(i));
            }
        }
        if (!have_coef && !have_t) throw ParseError("expected term at offset " + std::to_string(i));
        p.add_term(exp, sign < 0 ? Int(-coef) : coef);
        detail::skip_ws(s, i);
    }
    return p;
}

}  // namespace corkal
