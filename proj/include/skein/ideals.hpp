#pragma once

/*
  Gcd and ideal-theoretic certificates in Z[A^(+/-1)].

  The gcd is computed as (integer content gcd) * (primitive-part gcd), the
  latter by a subresultant pseudo-remainder sequence on the polynomials
  shifted to minimal exponent zero. Certificates for two-generated ideals:

    - properness: a prime p such that the ideal's image in F_p[A^(+/-1)]
      is contained in a proper principal ideal, which proves 1 is not in
      the ideal over Z;
    - non-principality: unit gcd + properness (a principal ideal with unit
      gcd would be the whole ring);
    - principality: an explicit generator with cofactor identities;
    - bounded membership: integer column reduction (Hermite-style) of the
      coefficient matrix of shifted generators. Positive answers carry exact
      cofactors; a negative answer is *not* a proof of non-membership.

  Everything a verdict asserts re-verifies by ring arithmetic alone; see
  verify_properness / verify_principality.
*/

#include "skein/laurent.hpp"

#include <algorithm>
#include <array>
#include <optional>

namespace skein {

struct GcdResult {
    LaurentPoly gcd;        // unit-normalized: minimal exponent 0, positive leading coefficient
    LaurentPoly cofactor1;  // g1 = gcd * cofactor1
    LaurentPoly cofactor2;  // g2 = gcd * cofactor2
};

namespace detail {

// pseudo-remainder: the remainder of lc(b)^(deg a - deg b + 1) * a divided by b,
// both ordinary polynomials with min exponent 0 and deg a >= deg b
inline LaurentPoly pseudo_remainder(const LaurentPoly& a, const LaurentPoly& b) {
    const Exp db = b.max_exp();
    const Int lc = b.leading_coeff();
    LaurentPoly r = a;
    Exp steps = a.max_exp() - db + 1;
    while (!r.is_zero() && r.max_exp() >= db) {
        const LaurentPoly term = LaurentPoly::monomial(r.leading_coeff(), r.max_exp() - db);
        r = r * LaurentPoly(Int(lc)) - term * b;
        --steps;
    }
    for (; steps > 0; --steps) r = r * LaurentPoly(Int(lc));
    return r;
}

// gcd of primitive ordinary polynomials via the subresultant PRS
inline LaurentPoly subresultant_gcd(LaurentPoly a, LaurentPoly b) {
    if (a.max_exp() < b.max_exp()) std::swap(a, b);
    Int g = 1, h = 1;
    while (true) {
        if (b.is_zero()) return a.primitive_part();
        if (b.max_exp() == 0) return LaurentPoly(1);  // nonzero constant: coprime primitives
        const Exp delta = a.max_exp() - b.max_exp();
        LaurentPoly r = pseudo_remainder(a, b);
        if (r.is_zero()) return b.primitive_part();
        Int divisor = g;
        for (Exp i = 0; i < delta; ++i) divisor *= h;
        a = b;
        LaurentPoly next;
        for (const auto& [e, c] : r.terms()) next += LaurentPoly::monomial(c / divisor, e);
        b = next;
        g = a.leading_coeff();
        // h = g^delta / h^(delta-1), exact by the subresultant theory
        Int hn = 1;
        for (Exp i = 0; i < delta; ++i) hn *= g;
        for (Exp i = 0; i + 1 < delta; ++i) hn /= h;
        if (delta == 0) hn = h;  // h unchanged when degrees tie
        h = hn;
    }
}

}  // namespace detail

// greatest common divisor in Z[A^(+/-1)], unit-normalized, with exact cofactors
inline GcdResult laurent_gcd(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("laurent_gcd: both arguments are zero");

    LaurentPoly g;
    if (p.is_zero()) g = q.normalized();
    else if (q.is_zero()) g = p.normalized();
    else {
        const Int content = boost::multiprecision::gcd(p.content(), q.content());
        const LaurentPoly prim =
            detail::subresultant_gcd(p.primitive_part().shifted(-p.min_exp()),
                                     q.primitive_part().shifted(-q.min_exp()));
        g = (LaurentPoly(content) * prim).normalized();
    }

    GcdResult result;
    result.gcd = g;
    const auto c1 = p.is_zero() ? std::optional<LaurentPoly>(LaurentPoly()) : divide_exact(p, g);
    const auto c2 = q.is_zero() ? std::optional<LaurentPoly>(LaurentPoly()) : divide_exact(q, g);
    if (!c1 || !c2) throw std::logic_error("laurent_gcd: computed gcd does not divide an input");
    result.cofactor1 = *c1;
    result.cofactor2 = *c2;
    return result;
}

struct IdealTwoGen {
    LaurentPoly g1, g2;
};

inline void require_valid(const IdealTwoGen& ideal) {
    if (ideal.g1.is_zero() && ideal.g2.is_zero())
        throw std::invalid_argument("IdealTwoGen: both generators are zero");
}

// ---------------------------------------------------------------------------
// arithmetic in F_p[A^(+/-1)] for small primes, on LaurentPoly values whose
// coefficients are reduced into [0, p)
// ---------------------------------------------------------------------------

inline LaurentPoly mod_reduce(const LaurentPoly& f, int prime) {
    LaurentPoly r;
    for (const auto& [e, c] : f.terms()) {
        Int m = c % prime;
        if (m < 0) m += prime;
        if (m != 0) r += LaurentPoly::monomial(m, e);
    }
    return r;
}

// nonzero monomials are exactly the units of F_p[A^(+/-1)]
inline bool modp_is_unit(const LaurentPoly& f) { return !f.is_zero() && f.term_count() == 1; }

namespace detail {

inline Int modp_inverse(Int a, int prime) {
    a %= prime;
    if (a < 0) a += prime;
    Int t = 0, newt = 1, r = prime, newr = a;
    while (newr != 0) {
        const Int q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (t < 0) t += prime;
    return t;
}

}  // namespace detail

// Euclidean gcd in F_p[A^(+/-1)]; result is monic with minimal exponent 0
// (zero when both inputs reduce to zero)
inline LaurentPoly modp_gcd(const LaurentPoly& f, const LaurentPoly& g, int prime) {
    LaurentPoly a = mod_reduce(f, prime), b = mod_reduce(g, prime);
    if (!a.is_zero()) a = a.shifted(-a.min_exp());
    if (!b.is_zero()) b = b.shifted(-b.min_exp());
    while (!b.is_zero()) {
        // a mod b over the field F_p
        const Exp db = b.max_exp();
        const Int inv = detail::modp_inverse(b.leading_coeff(), prime);
        while (!a.is_zero() && a.max_exp() >= db) {
            const Int factor = (a.leading_coeff() * inv) % prime;
            a = mod_reduce(a - LaurentPoly::monomial(factor, a.max_exp() - db) * b, prime);
        }
        std::swap(a, b);
        if (!b.is_zero()) b = b.shifted(-b.min_exp());
    }
    if (a.is_zero()) return a;
    return mod_reduce(LaurentPoly(detail::modp_inverse(a.leading_coeff(), prime)) * a, prime);
}

// exact division in F_p[A^(+/-1)]: shift to ordinary polynomials, divide, check
// for a zero remainder
inline std::optional<LaurentPoly> modp_divide(const LaurentPoly& f, const LaurentPoly& g, int prime) {
    const LaurentPoly a = mod_reduce(f, prime), b = mod_reduce(g, prime);
    if (b.is_zero()) return a.is_zero() ? std::optional<LaurentPoly>(LaurentPoly()) : std::nullopt;
    if (a.is_zero()) return LaurentPoly();
    const Exp shift = a.min_exp() - b.min_exp();
    LaurentPoly rem = a.shifted(-a.min_exp());
    const LaurentPoly div = b.shifted(-b.min_exp());
    LaurentPoly quot;
    const Int inv = detail::modp_inverse(div.leading_coeff(), prime);
    while (!rem.is_zero() && rem.max_exp() >= div.max_exp()) {
        const Int factor = (rem.leading_coeff() * inv) % prime;
        const LaurentPoly term = LaurentPoly::monomial(factor, rem.max_exp() - div.max_exp());
        quot += term;
        rem = mod_reduce(rem - term * div, prime);
    }
    if (!rem.is_zero()) return std::nullopt;
    return mod_reduce(quot, prime).shifted(shift);
}

// ---------------------------------------------------------------------------
// properness
// ---------------------------------------------------------------------------

enum class Properness { Proper, Improper, Inconclusive };

// evidence that the ideal's image mod `prime` lies in the proper principal
// ideal (common): g_i === common * u_i (mod prime) and common is a non-unit
struct PropernessCertificate {
    int prime = 0;
    LaurentPoly g1_mod, g2_mod;
    LaurentPoly common;
    LaurentPoly u1, u2;
};

struct PropernessOutcome {
    Properness status = Properness::Inconclusive;
    std::optional<PropernessCertificate> certificate;  // when Proper
    int unit_generator = 0;                            // when Improper: 1 or 2
};

inline bool verify_properness(const PropernessCertificate& cert, const IdealTwoGen& ideal) {
    if (cert.prime < 2) return false;
    static const std::array<int, 6> primes = {2, 3, 5, 7, 11, 13};
    if (std::find(primes.begin(), primes.end(), cert.prime) == primes.end()) return false;
    if (mod_reduce(ideal.g1, cert.prime) != cert.g1_mod) return false;
    if (mod_reduce(ideal.g2, cert.prime) != cert.g2_mod) return false;
    if (modp_is_unit(cert.common)) return false;  // must be a non-unit (possibly zero)
    const LaurentPoly p1 = mod_reduce(cert.common * cert.u1, cert.prime);
    const LaurentPoly p2 = mod_reduce(cert.common * cert.u2, cert.prime);
    return p1 == cert.g1_mod && p2 == cert.g2_mod;
}

// searches small prime moduli for a properness certificate
inline PropernessOutcome properness_certificate(const IdealTwoGen& ideal) {
    require_valid(ideal);
    PropernessOutcome out;
    if (ideal.g1.is_unit()) { out.status = Properness::Improper; out.unit_generator = 1; return out; }
    if (ideal.g2.is_unit()) { out.status = Properness::Improper; out.unit_generator = 2; return out; }

    static const std::array<int, 6> primes = {2, 3, 5, 7, 11, 13};
    for (int prime : primes) {
        const LaurentPoly r1 = mod_reduce(ideal.g1, prime);
        const LaurentPoly r2 = mod_reduce(ideal.g2, prime);
        const LaurentPoly h = modp_gcd(r1, r2, prime);
        if (modp_is_unit(h)) continue;  // image generates the whole quotient ring
        PropernessCertificate cert;
        cert.prime = prime;
        cert.g1_mod = r1;
        cert.g2_mod = r2;
        cert.common = h;
        if (h.is_zero()) {
            cert.u1 = LaurentPoly();
            cert.u2 = LaurentPoly();
        } else {
            cert.u1 = *modp_divide(r1, h, prime);
            cert.u2 = *modp_divide(r2, h, prime);
        }
        out.status = Properness::Proper;
        out.certificate = cert;
        return out;
    }
    return out;
}

// ---------------------------------------------------------------------------
// bounded ideal membership via integer column reduction
// ---------------------------------------------------------------------------

struct MembershipWitness {
    LaurentPoly cofactor1, cofactor2;  // cofactor1*g1 + cofactor2*g2 = p
};

namespace detail {

// solve M x = b over the integers; columns of M are given explicitly.
// Column-echelon reduction with a tracked unimodular transformation.
inline std::optional<std::vector<Int>> integer_solve(std::vector<std::vector<Int>> cols,
                                                     const std::vector<Int>& b) {
    const std::size_t rows = b.size();
    const std::size_t ncols = cols.size();
    // transformation: solution = U * y for the echelon system
    std::vector<std::vector<Int>> u(ncols, std::vector<Int>(ncols, 0));
    for (std::size_t j = 0; j < ncols; ++j) u[j][j] = 1;

    std::size_t pivot_col = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    for (std::size_t r = 0; r < rows && pivot_col < ncols; ++r) {
        // gcd-reduce row r across columns >= pivot_col until at most one nonzero
        while (true) {
            std::size_t best = ncols;
            for (std::size_t j = pivot_col; j < ncols; ++j) {
                if (cols[j][r] == 0) continue;
                if (best == ncols ||
                    boost::multiprecision::abs(cols[j][r]) < boost::multiprecision::abs(cols[best][r]))
                    best = j;
            }
            if (best == ncols) break;  // row is zero from pivot_col on
            bool others = false;
            for (std::size_t j = pivot_col; j < ncols; ++j) {
                if (j == best || cols[j][r] == 0) continue;
                others = true;
                const Int q = cols[j][r] / cols[best][r];
                if (q != 0) {
                    for (std::size_t i = 0; i < rows; ++i) cols[j][i] -= q * cols[best][i];
                    for (std::size_t i = 0; i < ncols; ++i) u[j][i] -= q * u[best][i];
                }
            }
            if (!others) {  // unique nonzero: it is the pivot
                std::swap(cols[best], cols[pivot_col]);
                std::swap(u[best], u[pivot_col]);
                pivots.emplace_back(r, pivot_col);
                ++pivot_col;
                break;
            }
        }
    }

    // forward substitution over the echelon columns
    std::vector<Int> residual = b;
    std::vector<Int> y(ncols, 0);
    for (const auto& [r, j] : pivots) {
        if (residual[r] % cols[j][r] != 0) return std::nullopt;
        const Int f = residual[r] / cols[j][r];
        y[j] = f;
        if (f != 0)
            for (std::size_t i = 0; i < rows; ++i) residual[i] -= f * cols[j][i];
    }
    for (std::size_t i = 0; i < rows; ++i)
        if (residual[i] != 0) return std::nullopt;

    std::vector<Int> x(ncols, 0);
    for (std::size_t j = 0; j < ncols; ++j) {
        if (y[j] == 0) continue;
        for (std::size_t i = 0; i < ncols; ++i) x[i] += y[j] * u[j][i];
    }
    return x;
}

}  // namespace detail

inline Exp default_membership_bound(const IdealTwoGen& ideal) {
    Exp widest = 0;
    if (!ideal.g1.is_zero()) widest = std::max(widest, ideal.g1.span());
    if (!ideal.g2.is_zero()) widest = std::max(widest, ideal.g2.span());
    return 4 * widest;
}

/*
  Decides whether p lies in the integer span of { A^i*g1, A^j*g2 } with shifts
  confined to a window of slack `degree_bound` around the support of p.
  A positive answer carries exact cofactors; NotFound (nullopt) is only a
  bounded-search failure, never a proof of non-membership.
*/
inline std::optional<MembershipWitness> membership_bounded(const LaurentPoly& p,
                                                           const IdealTwoGen& ideal,
                                                           Exp degree_bound) {
    require_valid(ideal);
    if (degree_bound < 0) throw std::invalid_argument("membership_bounded: negative bound");
    if (p.is_zero()) return MembershipWitness{LaurentPoly(), LaurentPoly()};

    const Exp pmin = p.min_exp(), pmax = p.max_exp();
    struct Column { int gen; Exp shift; };
    std::vector<Column> meta;
    std::vector<std::vector<Int>> cols;
    Exp row_min = pmin, row_max = pmax;

    const LaurentPoly* gens[2] = {&ideal.g1, &ideal.g2};
    for (int gi = 0; gi < 2; ++gi) {
        const LaurentPoly& g = *gens[gi];
        if (g.is_zero()) continue;
        const Exp lo = pmin - degree_bound - g.max_exp();
        const Exp hi = pmax + degree_bound - g.min_exp();
        for (Exp s = lo; s <= hi; ++s) {
            meta.push_back({gi, s});
            row_min = std::min(row_min, s + g.min_exp());
            row_max = std::max(row_max, s + g.max_exp());
        }
    }
    const std::size_t rows = static_cast<std::size_t>(row_max - row_min + 1);
    for (const Column& col : meta) {
        std::vector<Int> v(rows, 0);
        for (const auto& [e, c] : gens[col.gen]->terms())
            v[static_cast<std::size_t>(col.shift + e - row_min)] = c;
        cols.push_back(std::move(v));
    }
    std::vector<Int> b(rows, 0);
    for (const auto& [e, c] : p.terms()) b[static_cast<std::size_t>(e - row_min)] = c;

    const auto solution = detail::integer_solve(std::move(cols), b);
    if (!solution) return std::nullopt;

    MembershipWitness w;
    for (std::size_t j = 0; j < meta.size(); ++j) {
        if ((*solution)[j] == 0) continue;
        const LaurentPoly term = LaurentPoly::monomial((*solution)[j], meta[j].shift);
        if (meta[j].gen == 0) w.cofactor1 += term;
        else w.cofactor2 += term;
    }
    return w;
}

inline std::optional<MembershipWitness> membership_bounded(const LaurentPoly& p,
                                                           const IdealTwoGen& ideal) {
    return membership_bounded(p, ideal, default_membership_bound(ideal));
}

// ---------------------------------------------------------------------------
// principality
// ---------------------------------------------------------------------------

enum class Principality { Principal, NonPrincipal, Inconclusive };

inline const char* principality_name(Principality s) {
    switch (s) {
        case Principality::Principal: return "principal";
        case Principality::NonPrincipal: return "non-principal";
        default: return "inconclusive";
    }
}

struct PrincipalityVerdict {
    Principality status = Principality::Inconclusive;
    GcdResult gcd_evidence;  // g = gcd(g1, g2) with cofactors, always filled

    // NonPrincipal: gcd is a unit and the ideal is proper, so it cannot be (f)
    std::optional<PropernessCertificate> properness;

    // Principal: generator plus the two cofactor identities and the membership
    // combination generator = m1*g1 + m2*g2
    std::optional<LaurentPoly> generator;
    std::optional<MembershipWitness> combination;
};

inline PrincipalityVerdict principality_verdict(const IdealTwoGen& ideal) {
    require_valid(ideal);
    PrincipalityVerdict verdict;
    verdict.gcd_evidence = laurent_gcd(ideal.g1, ideal.g2);
    const LaurentPoly& h = verdict.gcd_evidence.gcd;

    const PropernessOutcome proper = properness_certificate(ideal);
    if (proper.status == Properness::Improper) {
        // the ideal is the whole ring: principal with generator 1
        verdict.status = Principality::Principal;
        verdict.generator = LaurentPoly(1);
        MembershipWitness w;
        if (proper.unit_generator == 1) w.cofactor1 = unit_inverse(ideal.g1);
        else w.cofactor2 = unit_inverse(ideal.g2);
        verdict.combination = w;
        return verdict;
    }

    if (h.is_unit()) {
        if (proper.status == Properness::Proper) {
            verdict.status = Principality::NonPrincipal;
            verdict.properness = proper.certificate;
        }
        return verdict;
    }

    if (auto w = membership_bounded(h, ideal)) {
        verdict.status = Principality::Principal;
        verdict.generator = h;
        verdict.combination = w;
    }
    return verdict;
}

// re-checks every identity a verdict asserts, by ring arithmetic alone
inline bool verify_principality(const PrincipalityVerdict& verdict, const IdealTwoGen& ideal) {
    const GcdResult& gr = verdict.gcd_evidence;
    if (gr.gcd * gr.cofactor1 != ideal.g1) return false;
    if (gr.gcd * gr.cofactor2 != ideal.g2) return false;

    switch (verdict.status) {
        case Principality::NonPrincipal:
            if (!gr.gcd.is_unit()) return false;
            return verdict.properness && verify_properness(*verdict.properness, ideal);
        case Principality::Principal: {
            if (!verdict.generator || !verdict.combination) return false;
            const LaurentPoly& gen = *verdict.generator;
            if (!divide_exact(ideal.g1, gen) || !divide_exact(ideal.g2, gen)) return false;
            const MembershipWitness& w = *verdict.combination;
            return w.cofactor1 * ideal.g1 + w.cofactor2 * ideal.g2 == gen;
        }
        case Principality::Inconclusive:
            return true;  // asserts nothing
    }
    return false;
}

}  // namespace skein
