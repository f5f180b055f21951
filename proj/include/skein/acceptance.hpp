#pragma once

/*
  The acceptance suite: one pass/fail line per criterion, exact checks, pinned
  time budgets. The CLI `selftest` subcommand and the standalone acceptance
  binary both run exactly this code.

  Where a criterion demands an independent route, the oracle here uses its own
  arithmetic: relation fidelity is checked against a dense coefficient-vector
  expansion of the defining formulas (no TPoly, no shared Chebyshev table),
  and the bracket corpus cross-validates the state sum against the memoized
  recursion plus move-invariance corpora.
*/

#include "skein/modpres.hpp"
#include "skein/moves.hpp"
#include "skein/parse.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

namespace skein::acceptance {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

namespace oracle {

// dense polynomial in t: index = degree. Deliberately separate from TPoly.
using Dense = std::vector<LaurentPoly>;

inline void trim(Dense& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Dense dense_sub(Dense a, const Dense& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

inline Dense dense_shift_up(const Dense& a) {  // multiply by t
    Dense r(a.size() + 1);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + 1] = a[i];
    trim(r);
    return r;
}

inline Dense dense_scale(const Dense& a, const LaurentPoly& c) {
    Dense r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    trim(r);
    return r;
}

inline Dense dense_chebyshev(unsigned n) {
    Dense prev{LaurentPoly(1)};               // S_0
    if (n == 0) return prev;
    Dense cur{LaurentPoly(), LaurentPoly(1)};  // S_1
    for (unsigned i = 2; i <= n; ++i) {
        Dense next = dense_sub(dense_shift_up(cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// the defining relation formulas expanded directly over the dense vectors
inline Dense dense_relation(unsigned n) {
    const Exp en = static_cast<Exp>(n);
    const LaurentPoly c = LaurentPoly::a_pow(en + 1) + LaurentPoly::a_pow(-(en + 1));
    Dense sn = dense_chebyshev(n);
    if (n % 2 == 0) {
        Dense body = sn;
        if (body.empty()) body.resize(1);
        body[0] -= LaurentPoly(1);  // S_n - 1
        Dense expr = dense_scale(body, c);
        LaurentPoly sum;
        for (Exp k = 1; k <= en / 2; ++k) sum += LaurentPoly::a_pow(en + 2 - 4 * k);
        const LaurentPoly tail = 2 * ((LaurentPoly::a_pow(1) + LaurentPoly::a_pow(-1)) * sum);
        if (expr.empty()) expr.resize(1);
        expr[0] -= tail;
        trim(expr);
        return expr;
    }
    Dense body = sn;
    if (body.size() < 2) body.resize(2);
    body[1] -= LaurentPoly(1);  // S_n - t
    Dense expr = dense_scale(body, c);
    LaurentPoly sum;
    for (Exp k = 1; k <= (en - 1) / 2; ++k) sum += LaurentPoly::a_pow(en + 1 - 4 * k);
    if (expr.size() < 2) expr.resize(2);
    expr[1] -= 2 * sum;
    trim(expr);
    return expr;
}

inline bool dense_equals_tpoly(const Dense& a, const TPoly& p) {
    if (!p.is_zero() && p.basis() != Basis::Monomial) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (p.coeff(static_cast<unsigned>(i)) != a[i]) return false;
    if (!p.is_zero() && p.degree() >= a.size()) return false;
    return true;
}

}  // namespace oracle

namespace detail {

inline LaurentPoly random_laurent(std::mt19937& rng, int max_terms = 4, int exp_range = 8,
                                  int coef_range = 9) {
    std::uniform_int_distribution<int> n_terms(0, max_terms);
    std::uniform_int_distribution<int> exp(-exp_range, exp_range);
    std::uniform_int_distribution<int> coef(-coef_range, coef_range);
    LaurentPoly p;
    const int n = n_terms(rng);
    for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(coef(rng), exp(rng));
    return p;
}

inline TPoly random_tpoly(std::mt19937& rng, unsigned max_degree, Basis basis,
                          int max_terms = 3) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<int> n_terms(1, max_terms);
    TPoly p(basis);
    const int n = n_terms(rng);
    for (int i = 0; i < n; ++i) p.add_term(deg(rng), random_laurent(rng));
    return p;
}

inline PlanarDiagram random_diagram(std::mt19937& rng, int max_crossings = 8) {
    std::uniform_int_distribution<int> nc(0, max_crossings);
    std::uniform_int_distribution<int> fl(0, 2);
    std::uniform_int_distribution<int> flag(0, 1);
    const int c = nc(rng);
    // random perfect matching of the 4c slots into 2c edges
    std::vector<int> slots(4 * c);
    for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = static_cast<int>(i);
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<int> edge_of_slot(4 * c, -1);
    for (std::size_t i = 0; i + 1 < slots.size(); i += 2) {
        edge_of_slot[slots[i]] = static_cast<int>(i / 2);
        edge_of_slot[slots[i + 1]] = static_cast<int>(i / 2);
    }
    PlanarDiagram d;
    for (int i = 0; i < c; ++i)
        d.crossings.push_back({{edge_of_slot[4 * i], edge_of_slot[4 * i + 1],
                                edge_of_slot[4 * i + 2], edge_of_slot[4 * i + 3]},
                               flag(rng)});
    d.free_loops = fl(rng);
    return d;
}

inline std::vector<int> random_braid_word(std::mt19937& rng, int strands, int length) {
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<int> w;
    for (int i = 0; i < length; ++i) w.push_back(gen(rng) * (sign(rng) ? 1 : -1));
    return w;
}

}  // namespace detail

using Check = std::function<bool(std::string&)>;

inline CriterionResult run_criterion(int index, const std::string& name, double budget_seconds,
                                     const Check& check) {
    CriterionResult r;
    r.index = index;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = check(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && r.seconds >= budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("exceeded ") +
                  std::to_string(budget_seconds) + "s budget";
    }
    r.pass = ok;
    r.detail = detail;
    return r;
}

// --------------------------------------------------------------------------
// the criteria
// --------------------------------------------------------------------------

inline CriterionResult criterion_rank() {
    return run_criterion(1, "rank-over-Q(A)", 1.0, [](std::string& detail) {
        const RankReport report = rank_over_QA(30);
        if (report.rank != 4) { detail = "rank != 4"; return false; }
        if (report.entries.size() != 29) { detail = "missing reduction entries"; return false; }
        for (const auto& e : report.entries)
            if (!e.verified) { detail = "entry n=" + std::to_string(e.n) + " failed"; return false; }
        detail = "rank 4; S_n collapses into span{S_0,S_1} for n=2..30";
        return true;
    });
}

inline CriterionResult criterion_relation_fidelity() {
    return run_criterion(2, "relation-fidelity", 5.0, [](std::string& detail) {
        for (unsigned n = 2; n <= 40; ++n) {
            const TPoly expanded = to_monomial(relation(n).expression);
            if (!oracle::dense_equals_tpoly(oracle::dense_relation(n), expanded)) {
                detail = "mismatch at n=" + std::to_string(n);
                return false;
            }
        }
        detail = "relation(n) matches the independent dense expansion for n=2..40";
        return true;
    });
}

inline CriterionResult criterion_torsion_witness() {
    return run_criterion(3, "torsion-witness-n2", 0.0, [](std::string& detail) {
        const TPoly element = parse_tpoly("(A^2 - 1 + A^-2)*S_2 - (A^2 + 1 + A^-2)*S_0");
        if (normal_form(element).is_zero()) { detail = "element reduces to zero"; return false; }
        const LaurentPoly ann = parse_laurent("A + A^-1");
        if (!normal_form(ann * element).is_zero()) {
            detail = "annihilator fails to kill the element";
            return false;
        }
        const auto type = torsion_type_check(ann);
        if (!type || type->k != 2) { detail = "type check did not return k=2"; return false; }
        const auto witness = torsion_witness(2);
        if (!witness || witness->element != element || witness->annihilator != ann) {
            detail = "torsion_witness(2) does not reproduce the expected witness";
            return false;
        }
        detail = "nonzero element, (A + A^-1)-annihilated, type k=2";
        return true;
    });
}

inline CriterionResult criterion_split_obstruction() {
    return run_criterion(4, "non-splitness-evidence", 1.0, [](std::string& detail) {
        for (unsigned n : {2u, 3u}) {
            const SplitObstruction ob = split_obstruction(n);
            if (ob.verdict.status != Principality::NonPrincipal) {
                detail = "n=" + std::to_string(n) + ": not NonPrincipal";
                return false;
            }
            if (!verify_principality(ob.verdict, ob.ideal)) {
                detail = "n=" + std::to_string(n) + ": witness failed re-verification";
                return false;
            }
        }
        detail = "NonPrincipal with re-verified witnesses for n=2 and n=3";
        return true;
    });
}

inline CriterionResult criterion_bracket() {
    return run_criterion(5, "bracket-oracle-equivalence", 30.0, [](std::string& detail) {
        std::mt19937 rng(20240517);
        const LaurentPoly delta = loop_value();

        std::vector<PlanarDiagram> corpus = {
            unknot(),
            add_kink(unknot(), +1),
            add_kink(unknot(), -1),
            add_kink(add_kink(unknot(), +1), -1),
            hopf_link(),
            braid_closure({1, 1}, 2),
            trefoil(),
            mirror(trefoil()),
            braid_closure({1, 1, 1}, 2),
            figure_eight(),
            braid_closure({1, -2, 1, -2}, 3),
            disjoint_union(hopf_link(), unknot()),
        };
        for (int i = 0; i < 200; ++i) corpus.push_back(detail::random_diagram(rng));

        for (std::size_t i = 0; i < corpus.size(); ++i)
            if (bracket_statesum(corpus[i]) != bracket_recursive(corpus[i])) {
                detail = "state sum and recursion disagree on corpus diagram " + std::to_string(i);
                return false;
            }

        // Reidemeister II/III invariance on generated move corpora
        for (int i = 0; i < 25; ++i) {
            const auto w = detail::random_braid_word(rng, 3, 5);
            std::uniform_int_distribution<int> gen(1, 2);
            std::uniform_int_distribution<int> sign(0, 1);
            const int g = gen(rng) * (sign(rng) ? 1 : -1);
            std::vector<int> with_r2 = {g, -g};
            with_r2.insert(with_r2.end(), w.begin(), w.end());
            if (bracket_statesum(braid_closure(with_r2, 3)) != bracket_statesum(braid_closure(w, 3))) {
                detail = "R2 braid invariance failed";
                return false;
            }
            std::vector<int> lhs = {1, 2, 1}, rhs = {2, 1, 2};
            lhs.insert(lhs.end(), w.begin(), w.end());
            rhs.insert(rhs.end(), w.begin(), w.end());
            if (bracket_statesum(braid_closure(lhs, 3)) != bracket_statesum(braid_closure(rhs, 3))) {
                detail = "R3 braid invariance failed";
                return false;
            }
        }
        for (int i = 0; i < 25; ++i) {
            PlanarDiagram d = detail::random_diagram(rng, 6);
            const int m = max_edge_id(d);
            if (m < 1) continue;
            std::uniform_int_distribution<int> pick(0, m);
            int e1 = pick(rng), e2 = pick(rng);
            if (e1 == e2) continue;
            if (bracket_statesum(insert_r2(d, e1, e2)) != bracket_statesum(d)) {
                detail = "R2 insertion invariance failed";
                return false;
            }
        }

        // the negative kink carries the twist factor -A^-3
        const LaurentPoly neg_kink = bracket_statesum(add_kink(unknot(), -1));
        if (neg_kink != LaurentPoly::monomial(-1, -3) * delta) {
            detail = "negative kink factor is not -A^-3";
            return false;
        }
        detail = "212 diagrams dual-route equal; R2/R3 invariance; kink factor -A^-3";
        return true;
    });
}

inline CriterionResult criterion_chebyshev() {
    return run_criterion(6, "chebyshev-suite", 0.0, [](std::string& detail) {
        for (unsigned n = 2; n <= 64; ++n) {
            const TPoly lhs = chebyshev_S(n);
            const TPoly rhs = tpoly_mul(TPoly::t(), chebyshev_S(n - 1)) - chebyshev_S(n - 2);
            if (lhs != rhs) { detail = "recursion fails at n=" + std::to_string(n); return false; }
            if (lhs.coeff(n) != LaurentPoly(1)) {
                detail = "S_n not monic at n=" + std::to_string(n);
                return false;
            }
        }
        for (unsigned n = 0; n <= 64; ++n)
            if (evaluate_at(chebyshev_S(n), 2, 1) != Rat(n + 1)) {
                detail = "S_n(2) != n+1 at n=" + std::to_string(n);
                return false;
            }
        std::mt19937 rng(777);
        for (int i = 0; i < 50; ++i) {
            const TPoly p = detail::random_tpoly(rng, 40, Basis::Monomial);
            if (to_monomial(to_chebyshev(p)) != p) { detail = "basis round-trip failed"; return false; }
        }
        detail = "recursion + monicity (n<=64), S_n(2)=n+1, 50 random round-trips";
        return true;
    });
}

inline CriterionResult criterion_normal_form() {
    return run_criterion(7, "normal-form-properties", 0.0, [](std::string& detail) {
        std::mt19937 rng(424242);
        int used = 0;
        for (int i = 0; i < 200; ++i, ++used) {  // idempotence
            const TPoly p = detail::random_tpoly(rng, 30, Basis::Chebyshev);
            const NormalForm nf = normal_form(p);
            if (normal_form(nf.canonical_lift()) != nf) { detail = "idempotence failed"; return false; }
        }
        for (int i = 0; i < 150; ++i, ++used) {  // linearity
            const TPoly p = detail::random_tpoly(rng, 25, Basis::Chebyshev);
            const TPoly q = detail::random_tpoly(rng, 25, Basis::Chebyshev);
            const LaurentPoly alpha = detail::random_laurent(rng), beta = detail::random_laurent(rng);
            const NormalForm direct = normal_form(alpha * p + beta * q);
            const NormalForm recombined = normal_form(
                alpha * normal_form(p).canonical_lift() + beta * normal_form(q).canonical_lift());
            if (direct != recombined) { detail = "linearity failed"; return false; }
        }
        for (int i = 0; i < 150; ++i, ++used) {  // confluence probe: reduction order
            const TPoly p = detail::random_tpoly(rng, 30, Basis::Chebyshev);
            std::vector<unsigned> order;
            for (const auto& [n, c] : p.coeffs())
                if (n >= 2) order.push_back(n);
            TPoly asc = p, desc = p, shuffled = p;
            for (auto it = order.begin(); it != order.end(); ++it) asc = reduce_once(asc, *it);
            for (auto it = order.rbegin(); it != order.rend(); ++it) desc = reduce_once(desc, *it);
            std::shuffle(order.begin(), order.end(), rng);
            for (unsigned n : order) shuffled = reduce_once(shuffled, n);
            if (asc != desc || asc != shuffled) { detail = "confluence probe failed"; return false; }
        }
        for (unsigned n = 2; n <= 40; ++n) {  // soundness
            if (!normal_form(relation(n).expression).is_zero()) {
                detail = "nf(relation " + std::to_string(n) + ") != 0";
                return false;
            }
        }
        detail = std::to_string(used) + " randomized inputs: idempotent, linear, order-independent;"
                 " nf(r_n)=0 for n<=40";
        return true;
    });
}

inline CriterionResult criterion_catalog() {
    return run_criterion(8, "catalog-positive-control", 0.0, [](std::string& detail) {
        const auto catalog = manifold_catalog(12);
        const ManifoldProfile& s1s2 = catalog.front();
        if (s1s2.free_rank != 1 || s1s2.summands.size() != 11) {
            detail = "unexpected S^1 x S^2 profile";
            return false;
        }
        for (const TorsionSummand& s : s1s2.summands) {
            if (!s.identity_verified) {
                detail = "identity 1-A^2k = -A^k(A^k - A^-k) failed at k=" + std::to_string(s.k);
                return false;
            }
            if (!s.type || s.type->k != s.k) {
                detail = "type check missed k=" + std::to_string(s.k);
                return false;
            }
        }
        detail = "identity and type assignment verified for k=2..12";
        return true;
    });
}

inline std::vector<CriterionResult> run_all() {
    return {criterion_rank(),          criterion_relation_fidelity(),
            criterion_torsion_witness(), criterion_split_obstruction(),
            criterion_bracket(),       criterion_chebyshev(),
            criterion_normal_form(),   criterion_catalog()};
}

inline int run_and_print(std::ostream& os) {
    const auto results = run_all();
    bool all = true;
    for (const CriterionResult& r : results) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.index << "  " << r.name << "  (" << buf
           << ")  " << r.detail << "\n";
        all = all && r.pass;
    }
    os << (all ? "acceptance: all criteria passed\n" : "acceptance: FAILURES present\n");
    return all ? 0 : 1;
}

}  // namespace skein::acceptance
