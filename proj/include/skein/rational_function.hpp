#pragma once

// Minimal support for Q(A), the field of fractions of Z[A^(+/-1)]: just what
// localization displays need. Stored reduced: numerator/denominator gcd is 1
// and the denominator is normalized (minimal exponent 0, positive leading
// integer coefficient).

#include "skein/ideals.hpp"

namespace skein {

class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}

    RationalFunction(LaurentPoly numerator, LaurentPoly denominator) {
        if (denominator.is_zero())
            throw std::invalid_argument("RationalFunction: zero denominator");
        if (numerator.is_zero()) {
            num_ = LaurentPoly();
            den_ = LaurentPoly(1);
            return;
        }
        const GcdResult g = laurent_gcd(numerator, denominator);
        num_ = g.cofactor1;
        den_ = g.cofactor2;
        // normalize by the unit den_ / den_.normalized()
        const LaurentPoly target = den_.normalized();
        LaurentPoly unit = LaurentPoly::monomial(1, -den_.min_exp());
        if (den_.leading_coeff() < 0) unit = -unit;
        num_ = num_ * unit;
        den_ = den_ * unit;
        if (den_ != target) throw std::logic_error("RationalFunction: normalization failure");
    }

    const LaurentPoly& numerator() const { return num_; }
    const LaurentPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
        return os << f.str();
    }

private:
    LaurentPoly num_, den_;
};

}  // namespace skein
