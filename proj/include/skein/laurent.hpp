#pragma once

/*
  Exact arithmetic in Z[A^(+/-1)], the ring of integer Laurent polynomials in A.

  A LaurentPoly is a sparse map exponent -> coefficient; no stored coefficient
  is zero and the zero polynomial is the empty map. All values are immutable
  in spirit: operations return new values and never mutate shared state.
*/

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skein {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Exp = std::int64_t;

class LaurentPoly {
public:
    using Terms = std::map<Exp, Int>;

    LaurentPoly() = default;
    LaurentPoly(int c) { if (c != 0) terms_[0] = c; }
    explicit LaurentPoly(Int c) { if (c != 0) terms_[0] = std::move(c); }

    static LaurentPoly monomial(Int coef, Exp exp) {
        LaurentPoly p;
        if (coef != 0) p.terms_[exp] = std::move(coef);
        return p;
    }

    // A^exp
    static LaurentPoly a_pow(Exp exp) { return monomial(1, exp); }

    static LaurentPoly from_terms(const std::vector<std::pair<Exp, Int>>& ts) {
        LaurentPoly p;
        for (const auto& [e, c] : ts) {
            if (c == 0) continue;
            auto& slot = p.terms_[e];
            slot += c;
            if (slot == 0) p.terms_.erase(e);
        }
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.count(0) && terms_.at(0) == 1; }

    // units of Z[A^(+/-1)] are exactly +/-A^k
    bool is_unit() const {
        if (terms_.size() != 1) return false;
        const Int& c = terms_.begin()->second;
        return c == 1 || c == -1;
    }

    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    Exp min_exp() const { require_nonzero(); return terms_.begin()->first; }
    Exp max_exp() const { require_nonzero(); return terms_.rbegin()->first; }
    Exp span() const { return max_exp() - min_exp(); }

    const Int& leading_coeff() const { require_nonzero(); return terms_.rbegin()->second; }
    const Int& trailing_coeff() const { require_nonzero(); return terms_.begin()->second; }

    Int coeff(Exp e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& q) {
        for (const auto& [e, c] : q.terms_) {
            auto& slot = terms_[e];
            slot += c;
            if (slot == 0) terms_.erase(e);
        }
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& q) {
        for (const auto& [e, c] : q.terms_) {
            auto& slot = terms_[e];
            slot -= c;
            if (slot == 0) terms_.erase(e);
        }
        return *this;
    }

    LaurentPoly& operator*=(const LaurentPoly& q) {
        *this = *this * q;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { p += q; return p; }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { p -= q; return p; }

    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
        LaurentPoly r;
        for (const auto& [e1, c1] : p.terms_)
            for (const auto& [e2, c2] : q.terms_) {
                auto& slot = r.terms_[e1 + e2];
                slot += c1 * c2;
                if (slot == 0) r.terms_.erase(e1 + e2);
            }
        return r;
    }

    friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) { return p.terms_ == q.terms_; }
    friend bool operator!=(const LaurentPoly& p, const LaurentPoly& q) { return !(p == q); }
    friend bool operator<(const LaurentPoly& p, const LaurentPoly& q) { return p.terms_ < q.terms_; }

    // p * A^k
    LaurentPoly shifted(Exp k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }

    // A -> A^(-1)
    LaurentPoly substitute_a_inverse() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }

    // gcd of the integer coefficients, nonnegative; 0 for the zero polynomial
    Int content() const {
        Int g = 0;
        for (const auto& [e, c] : terms_) g = boost::multiprecision::gcd(g, c);
        return g < 0 ? Int(-g) : g;
    }

    LaurentPoly primitive_part() const {
        if (is_zero()) return LaurentPoly();
        Int g = content();
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = c / g;
        return r;
    }

    // canonical unit representative: minimal exponent 0, leading coefficient positive
    LaurentPoly normalized() const {
        if (is_zero()) return LaurentPoly();
        LaurentPoly r = shifted(-min_exp());
        if (r.leading_coeff() < 0) r = -r;
        return r;
    }

    // unit representative with exponents centred around 0 (min exponent = -span/2)
    LaurentPoly balanced() const {
        if (is_zero()) return LaurentPoly();
        LaurentPoly r = normalized();
        return r.shifted(-(r.span() / 2));
    }

    // substitution at a nonzero exact rational
    Rat evaluate(const Rat& a) const {
        if (a == 0) throw std::domain_error("LaurentPoly::evaluate: a must be nonzero");
        const Rat inv = Rat(1) / a;
        Rat value = 0;
        for (const auto& [e, c] : terms_) {
            Rat power = 1;
            const Rat& base = e >= 0 ? a : inv;
            for (Exp i = 0, m = e >= 0 ? e : -e; i < m; ++i) power *= base;
            value += Rat(c) * power;
        }
        return value;
    }

    // canonical text form, highest exponent first: "A^3 + 2A + 2A^-1 + A^-3"
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Exp e = it->first;
            const Int& c = it->second;
            const bool neg = c < 0;
            Int mag = neg ? Int(-c) : c;
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            if (mag != 1 || e == 0) os << mag;
            if (e == 1) os << "A";
            else if (e != 0) os << "A^" << e;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

private:
    void require_nonzero() const {
        if (terms_.empty()) throw std::logic_error("zero polynomial has no extremal exponent");
    }

    Terms terms_;
};

inline LaurentPoly operator*(const LaurentPoly& p, int c) { return p * LaurentPoly(c); }
inline LaurentPoly operator*(int c, const LaurentPoly& p) { return p * LaurentPoly(c); }

inline LaurentPoly pow(const LaurentPoly& p, unsigned n) {
    LaurentPoly r(1);
    for (unsigned i = 0; i < n; ++i) r *= p;
    return r;
}

// inverse of a unit +/-A^k
inline LaurentPoly unit_inverse(const LaurentPoly& u) {
    if (!u.is_unit()) throw std::invalid_argument("unit_inverse: not a unit of Z[A^(+/-1)]");
    return LaurentPoly::monomial(u.leading_coeff(), -u.max_exp());
}

// u^k for a unit u and a possibly negative integer k
inline LaurentPoly unit_pow(const LaurentPoly& u, Exp k) {
    const LaurentPoly base = k >= 0 ? u : unit_inverse(u);
    LaurentPoly r(1);
    for (Exp i = 0, m = k >= 0 ? k : -k; i < m; ++i) r *= base;
    return r;
}

// exact division in Z[A^(+/-1)]: returns r with q*r = p, or nullopt if p is not in (q)
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("divide_exact: divisor is zero");
    if (p.is_zero()) return LaurentPoly();

    const Exp shift = p.min_exp() - q.min_exp();
    LaurentPoly rem = p.shifted(-p.min_exp());
    const LaurentPoly div = q.shifted(-q.min_exp());
    const Exp ddeg = div.max_exp();
    const Int& dlc = div.leading_coeff();

    LaurentPoly quot;
    while (!rem.is_zero()) {
        const Exp rdeg = rem.max_exp();
        if (rdeg < ddeg) return std::nullopt;
        const Int& rlc = rem.leading_coeff();
        if (rlc % dlc != 0) return std::nullopt;
        const LaurentPoly term = LaurentPoly::monomial(rlc / dlc, rdeg - ddeg);
        quot += term;
        rem -= term * div;
    }
    return quot.shifted(shift);
}

struct MonicDivision {
    LaurentPoly quotient;
    LaurentPoly remainder;
};

/*
  Division with a windowed remainder: p = quotient*m + remainder where every
  exponent of the remainder lies in [window_low, window_low + span(m) - 1].
  Requires both end coefficients of m (after shifting its minimal exponent to
  zero) to be +/-1; the quotient/remainder pair is then unique for the window.
*/
inline MonicDivision monic_division(const LaurentPoly& p, const LaurentPoly& m, Exp window_low) {
    if (m.is_zero()) throw std::invalid_argument("monic_division: divisor is zero");
    const Int& lc = m.leading_coeff();
    const Int& tc = m.trailing_coeff();
    if (lc != 1 && lc != -1)
        throw std::invalid_argument("monic_division: shifted leading coefficient is not +/-1");
    if (tc != 1 && tc != -1)
        throw std::invalid_argument("monic_division: shifted trailing coefficient is not +/-1");

    const Exp w = m.span();
    const Exp s = m.min_exp();
    LaurentPoly quot, rem = p;

    if (w == 0) {  // m is a unit: everything divides, remainder window is empty
        return {rem * unit_inverse(m), LaurentPoly()};
    }
    // clear exponents above the window using the leading term of m
    while (!rem.is_zero() && rem.max_exp() > window_low + w - 1) {
        const Exp e = rem.max_exp();
        const LaurentPoly term = LaurentPoly::monomial(rem.leading_coeff() * lc, e - s - w);
        quot += term;
        rem -= term * m;
    }
    // clear exponents below the window using the trailing term of m
    while (!rem.is_zero() && rem.min_exp() < window_low) {
        const Exp e = rem.min_exp();
        const LaurentPoly term = LaurentPoly::monomial(rem.trailing_coeff() * tc, e - s);
        quot += term;
        rem -= term * m;
    }
    return {quot, rem};
}

}  // namespace skein
