#pragma once

/*
  Polynomials in t with LaurentPoly coefficients, carried in one of two bases:
  the monomial basis {t^n} or the basis {S_n(t)} of Chebyshev polynomials of
  the second kind (S_0 = 1, S_1 = t, S_{n+1} = t*S_n - S_{n-1}).

  The basis tag is explicit data: silent basis confusion is the dominant bug
  class here, so mixed-basis arithmetic is rejected rather than guessed.
*/

#include "skein/laurent.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace skein {

enum class Basis { Monomial, Chebyshev };

inline const char* basis_name(Basis b) { return b == Basis::Monomial ? "monomial" : "chebyshev"; }

class TPoly {
public:
    using Coeffs = std::map<unsigned, LaurentPoly>;

    TPoly() = default;
    explicit TPoly(Basis b) : basis_(b) {}

    static TPoly scalar(LaurentPoly c) { return term(std::move(c), 0, Basis::Monomial); }
    static TPoly t() { return term(LaurentPoly(1), 1, Basis::Monomial); }

    // c * t^k  or  c * S_k, depending on the basis
    static TPoly term(LaurentPoly c, unsigned k, Basis b) {
        TPoly p(b);
        if (!c.is_zero()) p.coeffs_[k] = std::move(c);
        return p;
    }

    Basis basis() const { return basis_; }
    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    unsigned degree() const {
        if (is_zero()) throw std::logic_error("zero polynomial has no degree");
        return coeffs_.rbegin()->first;
    }

    LaurentPoly coeff(unsigned k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? LaurentPoly() : it->second;
    }

    void add_term(unsigned k, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto& slot = coeffs_[k];
        slot += c;
        if (slot.is_zero()) coeffs_.erase(k);
    }

    TPoly operator-() const {
        TPoly r(basis_);
        for (const auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
        return r;
    }

    TPoly& operator+=(const TPoly& q) {
        if (is_zero()) { *this = q; return *this; }
        if (q.is_zero()) return *this;
        if (basis_ != q.basis_)
            throw std::invalid_argument("TPoly: mixed-basis addition; convert first");
        for (const auto& [k, c] : q.coeffs_) add_term(k, c);
        return *this;
    }

    TPoly& operator-=(const TPoly& q) { return *this += -q; }

    friend TPoly operator+(TPoly p, const TPoly& q) { p += q; return p; }
    friend TPoly operator-(TPoly p, const TPoly& q) { p -= q; return p; }

    // scaling by a ring element is basis-independent
    friend TPoly operator*(const LaurentPoly& c, const TPoly& p) {
        TPoly r(p.basis_);
        if (c.is_zero()) return r;
        for (const auto& [k, g] : p.coeffs_) {
            LaurentPoly prod = c * g;
            if (!prod.is_zero()) r.coeffs_[k] = std::move(prod);
        }
        return r;
    }

    friend bool operator==(const TPoly& p, const TPoly& q) {
        if (p.coeffs_.empty() && q.coeffs_.empty()) return true;  // zero has no basis
        return p.basis_ == q.basis_ && p.coeffs_ == q.coeffs_;
    }
    friend bool operator!=(const TPoly& p, const TPoly& q) { return !(p == q); }

    // canonical text form, highest degree first; the basis is NOT part of the
    // string, callers state it separately
    std::string str() const {
        if (is_zero()) return "0";
        struct Chunk { bool neg; std::string text; };
        std::vector<Chunk> chunks;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const unsigned k = it->first;
            const LaurentPoly& c = it->second;
            if (basis_ == Basis::Monomial && k == 0) {
                // constant terms splice in bare, one chunk per monomial
                for (auto t = c.terms().rbegin(); t != c.terms().rend(); ++t) {
                    const bool neg = t->second < 0;
                    const Int mag = neg ? Int(-t->second) : t->second;
                    chunks.push_back({neg, LaurentPoly::monomial(mag, t->first).str()});
                }
            } else {
                const bool neg = c.leading_coeff() < 0;
                chunks.push_back({neg, term_str(neg ? -c : c, k)});
            }
        }
        std::ostringstream os;
        for (std::size_t i = 0; i < chunks.size(); ++i) {
            if (i == 0) os << (chunks[i].neg ? "-" : "");
            else os << (chunks[i].neg ? " - " : " + ");
            os << chunks[i].text;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.str(); }

private:
    std::string term_str(const LaurentPoly& c, unsigned k) const {
        const bool cheb = basis_ == Basis::Chebyshev;
        std::ostringstream os;
        if (c.is_one()) {}
        else if (c.term_count() == 1) os << c.str() << "*";
        else os << "(" << c.str() << ")*";
        if (cheb) os << "S_" << k;
        else if (k == 1) os << "t";
        else os << "t^" << k;
        return os.str();
    }

    Coeffs coeffs_;
    Basis basis_ = Basis::Monomial;
};

namespace detail {

// t * p in the monomial basis: shift every degree up by one
inline TPoly shift_degree_up(const TPoly& p) {
    TPoly r(Basis::Monomial);
    for (const auto& [k, c] : p.coeffs()) r.add_term(k + 1, c);
    return r;
}

}  // namespace detail

// S_n(t) expanded in the monomial basis, via the defining recursion
inline TPoly chebyshev_S(unsigned n) {
    static std::vector<TPoly> table;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    if (table.empty()) {
        table.push_back(TPoly::scalar(LaurentPoly(1)));  // S_0 = 1
        table.push_back(TPoly::t());                     // S_1 = t
    }
    while (table.size() <= n)
        table.push_back(detail::shift_degree_up(table[table.size() - 1]) - table[table.size() - 2]);
    return table[n];
}

// product in the monomial basis; Chebyshev-basis operands are rejected
inline TPoly tpoly_mul(const TPoly& p, const TPoly& q) {
    if ((!p.is_zero() && p.basis() != Basis::Monomial) ||
        (!q.is_zero() && q.basis() != Basis::Monomial))
        throw std::invalid_argument("tpoly_mul: operands must be in the monomial basis; convert first");
    TPoly r(Basis::Monomial);
    for (const auto& [k1, c1] : p.coeffs())
        for (const auto& [k2, c2] : q.coeffs())
            r.add_term(k1 + k2, c1 * c2);
    return r;
}

// change of basis {t^n} -> {S_n(t)}: unitriangular since S_n is monic of degree n
inline TPoly to_chebyshev(const TPoly& p) {
    if (p.is_zero() || p.basis() == Basis::Chebyshev) {
        TPoly r = p;
        return r.is_zero() ? TPoly(Basis::Chebyshev) : r;
    }
    TPoly work = p;
    TPoly out(Basis::Chebyshev);
    while (!work.is_zero()) {
        const unsigned k = work.degree();
        const LaurentPoly g = work.coeff(k);
        out.add_term(k, g);
        work -= g * chebyshev_S(k);
    }
    return out;
}

inline TPoly to_monomial(const TPoly& p) {
    if (p.is_zero() || p.basis() == Basis::Monomial) {
        TPoly r = p;
        return r.is_zero() ? TPoly(Basis::Monomial) : r;
    }
    TPoly out(Basis::Monomial);
    for (const auto& [k, c] : p.coeffs()) out += c * chebyshev_S(k);
    return out;
}

// exact evaluation of a monomial-basis polynomial at t = t_val, A = a_val
inline Rat evaluate_at(const TPoly& p, const Rat& t_val, const Rat& a_val) {
    if (!p.is_zero() && p.basis() != Basis::Monomial)
        throw std::invalid_argument("evaluate_at: convert to the monomial basis first");
    Rat value = 0;
    if (p.is_zero()) return value;
    // Horner from the top degree down
    unsigned prev = p.degree();
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        for (unsigned i = it->first; i < prev; ++i) value *= t_val;
        value += it->second.evaluate(a_val);
        prev = it->first;
    }
    for (unsigned i = 0; i < prev; ++i) value *= t_val;
    return value;
}

}  // namespace skein
