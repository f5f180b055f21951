#pragma once

/*
  Kauffman bracket evaluation for unoriented framed link diagrams, by two
  independent routes: the full 2^c state sum with union-find loop counting,
  and the skein recursion with memoization on a canonical diagram key.

  Diagrams are combinatorial: a crossing lists its four edge identifiers in
  counterclockwise order, and the over-strand occupies the slot pair
  {over, over+2}. Each edge identifier occurs exactly twice across the whole
  diagram. Planarity of the matching is the caller's contract; validation is
  structural only.

  Conventions (fixed here once):
    - <empty> = 1, so a crossingless circle contributes delta = -A^2 - A^-2;
    - the A-smoothing joins each over-strand slot to its counterclockwise
      neighbour;
    - the kink whose two-state sum yields -A^3 is the positive one; crossing
      [l,l,a,b] with over pair {0,2} realizes it, over pair {1,3} gives the
      negative kink with factor -A^-3;
    - the `kinks` counter multiplies the bracket by (-A^3)^kinks, carrying
      residual framing twists without drawn crossings.
*/

#include "skein/laurent.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <thread>
#include <unordered_map>

namespace skein {

struct Crossing {
    std::array<int, 4> edges;  // edge ids, counterclockwise
    int over = 0;              // over-strand at slots {over, over+2}, over in {0,1}
};

struct PlanarDiagram {
    std::vector<Crossing> crossings;
    int free_loops = 0;
    long kinks = 0;
};

enum class Smoothing { A, B };

inline LaurentPoly loop_value() {  // delta
    return LaurentPoly::from_terms({{2, -1}, {-2, -1}});
}

inline std::vector<std::string> validate(const PlanarDiagram& d) {
    std::vector<std::string> violations;
    std::map<int, int> uses;
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        const Crossing& x = d.crossings[i];
        if (x.over != 0 && x.over != 1)
            violations.push_back("crossing " + std::to_string(i) +
                                 ": over pair must occupy opposite slots");
        for (int e : x.edges) {
            if (e < 0)
                violations.push_back("crossing " + std::to_string(i) + ": negative edge id");
            else
                ++uses[e];
        }
    }
    for (const auto& [e, count] : uses)
        if (count != 2)
            violations.push_back("edge " + std::to_string(e) + " occurs " +
                                 std::to_string(count) + " times, expected 2");
    if (d.free_loops < 0) violations.push_back("negative free_loops");
    return violations;
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }

    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }

    void unite(int a, int b) { parent[find(a)] = find(b); }

    int components() {
        int c = 0;
        for (std::size_t i = 0; i < parent.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
        return c;
    }
};

// slot pairs fused by each smoothing: A joins over-slot -> ccw neighbour
inline std::array<std::array<int, 2>, 2> smoothing_pairs(const Crossing& x, Smoothing s) {
    const int o = x.over;
    if (s == Smoothing::A) return {{{o, (o + 1) % 4}, {(o + 2) % 4, (o + 3) % 4}}};
    return {{{o, (o + 3) % 4}, {(o + 2) % 4, (o + 1) % 4}}};
}

inline std::map<int, int> edge_index(const PlanarDiagram& d) {
    std::map<int, int> index;
    for (const Crossing& x : d.crossings)
        for (int e : x.edges)
            index.emplace(e, static_cast<int>(index.size()));
    return index;
}

}  // namespace detail

// replace one crossing by a smoothing, re-fusing the edges at the joined slots
inline PlanarDiagram resolve(const PlanarDiagram& d, std::size_t crossing_id, Smoothing s) {
    if (crossing_id >= d.crossings.size())
        throw std::out_of_range("resolve: unknown crossing id");
    const Crossing x = d.crossings[crossing_id];

    PlanarDiagram out;
    out.free_loops = d.free_loops;
    out.kinks = d.kinks;
    out.crossings.reserve(d.crossings.size() - 1);
    for (std::size_t i = 0; i < d.crossings.size(); ++i)
        if (i != crossing_id) out.crossings.push_back(d.crossings[i]);

    auto pairs = detail::smoothing_pairs(x, s);
    std::array<std::array<int, 2>, 2> fused;
    for (int i = 0; i < 2; ++i) fused[i] = {x.edges[pairs[i][0]], x.edges[pairs[i][1]]};

    for (int i = 0; i < 2; ++i) {
        const int a = fused[i][0], b = fused[i][1];
        if (a == b) {
            ++out.free_loops;  // the joined pair closes into a circle
            continue;
        }
        for (Crossing& y : out.crossings)
            for (int& e : y.edges)
                if (e == b) e = a;
        if (i == 0) {  // the second fused pair may name the renamed edge
            for (int& e : fused[1])
                if (e == b) e = a;
        }
    }
    return out;
}

// full state sum: sum over the 2^c smoothings of A^(a-b) * delta^(loops),
// then the framing factor (-A^3)^kinks; states may be partitioned across
// threads, partial sums combine by addition in thread order
inline LaurentPoly bracket_statesum(const PlanarDiagram& d, unsigned threads = 1) {
    const std::size_t c = d.crossings.size();
    const auto index = detail::edge_index(d);
    const std::size_t n_edges = index.size();

    // delta powers up to the largest possible loop count
    const std::size_t max_loops = n_edges + static_cast<std::size_t>(std::max(0, d.free_loops)) + 1;
    std::vector<LaurentPoly> delta_pow(max_loops + 1);
    delta_pow[0] = LaurentPoly(1);
    for (std::size_t i = 1; i <= max_loops; ++i) delta_pow[i] = delta_pow[i - 1] * loop_value();

    const auto sum_range = [&](std::uint64_t begin, std::uint64_t end) {
        LaurentPoly acc;
        for (std::uint64_t state = begin; state < end; ++state) {
            detail::UnionFind uf(n_edges);
            int a_count = 0;
            for (std::size_t i = 0; i < c; ++i) {
                const Smoothing s = (state >> i) & 1 ? Smoothing::B : Smoothing::A;
                if (s == Smoothing::A) ++a_count;
                const auto pairs = detail::smoothing_pairs(d.crossings[i], s);
                for (const auto& pr : pairs)
                    uf.unite(index.at(d.crossings[i].edges[pr[0]]),
                             index.at(d.crossings[i].edges[pr[1]]));
            }
            const int loops = (n_edges ? uf.components() : 0) + d.free_loops;
            const int b_count = static_cast<int>(c) - a_count;
            acc += LaurentPoly::monomial(1, a_count - b_count) * delta_pow[loops];
        }
        return acc;
    };

    const std::uint64_t n_states = std::uint64_t(1) << c;
    LaurentPoly total;
    if (threads <= 1 || c < 4) {
        total = sum_range(0, n_states);
    } else {
        const unsigned t = std::min<std::uint64_t>(threads, n_states);
        std::vector<LaurentPoly> partial(t);
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < t; ++i) {
            const std::uint64_t lo = n_states * i / t, hi = n_states * (i + 1) / t;
            pool.emplace_back([&, i, lo, hi] { partial[i] = sum_range(lo, hi); });
        }
        for (auto& th : pool) th.join();
        for (const auto& p : partial) total += p;
    }

    const LaurentPoly kink_unit = LaurentPoly::monomial(-1, 3);  // -A^3
    return total * unit_pow(kink_unit, d.kinks);
}

namespace detail {

// deterministic relabel-and-sort key; used only as a memo key, so imperfect
// canonicity across isomorphic diagrams costs hit rate, never correctness
inline std::string canonical_key(const PlanarDiagram& d) {
    std::vector<std::array<int, 4>> cs;
    cs.reserve(d.crossings.size());
    for (const Crossing& x : d.crossings) {
        // rotate so the over pair sits at {0,2}, picking the smaller of the
        // two admissible rotations
        std::array<int, 4> r0, r1;
        for (int i = 0; i < 4; ++i) r0[i] = x.edges[(x.over + i) % 4];
        for (int i = 0; i < 4; ++i) r1[i] = x.edges[(x.over + 2 + i) % 4];
        cs.push_back(std::min(r0, r1));
    }
    std::sort(cs.begin(), cs.end());
    std::map<int, int> rename;
    for (const auto& x : cs)
        for (int e : x)
            rename.emplace(e, static_cast<int>(rename.size()));
    std::string key;
    for (auto& x : cs) {
        std::array<int, 4> y;
        for (int i = 0; i < 4; ++i) y[i] = rename[x[i]];
        std::array<int, 4> z;
        for (int i = 0; i < 4; ++i) z[i] = y[(2 + i) % 4];
        const auto& best = std::min(y, z);
        for (int e : best) key += std::to_string(e) + ",";
        key += ";";
    }
    key += "|" + std::to_string(d.free_loops) + "|" + std::to_string(d.kinks);
    return key;
}

inline LaurentPoly bracket_recursive_impl(const PlanarDiagram& d,
                                          std::unordered_map<std::string, LaurentPoly>& memo) {
    if (d.crossings.empty()) {
        LaurentPoly v(1);
        for (int i = 0; i < d.free_loops; ++i) v *= loop_value();
        return v * unit_pow(LaurentPoly::monomial(-1, 3), d.kinks);
    }
    const std::string key = canonical_key(d);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const LaurentPoly value =
        LaurentPoly::monomial(1, 1) * bracket_recursive_impl(resolve(d, 0, Smoothing::A), memo) +
        LaurentPoly::monomial(1, -1) * bracket_recursive_impl(resolve(d, 0, Smoothing::B), memo);
    memo.emplace(key, value);
    return value;
}

}  // namespace detail

// skein recursion <L> = A<L_A> + A^-1<L_B>, memoized within one evaluation
inline LaurentPoly bracket_recursive(const PlanarDiagram& d) {
    std::unordered_map<std::string, LaurentPoly> memo;
    return detail::bracket_recursive_impl(d, memo);
}

inline int max_edge_id(const PlanarDiagram& d) {
    int m = -1;
    for (const Crossing& x : d.crossings)
        for (int e : x.edges) m = std::max(m, e);
    return m;
}

/*
  Insert a drawn kink of the given sign. With an edge id, the edge is split
  and the kink rides on that strand; without one, a free loop is converted
  into a standalone one-crossing kink. The bracket gains a factor -A^3
  (sign = +1) or -A^-3 (sign = -1).
*/
inline PlanarDiagram add_kink(const PlanarDiagram& d, int sign, std::optional<int> edge = std::nullopt) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("add_kink: sign must be +/-1");
    PlanarDiagram out = d;
    const int loop_edge = max_edge_id(d) + 1;
    const int tail_edge = loop_edge + 1;
    const int over = sign > 0 ? 0 : 1;

    if (!edge && !d.crossings.empty()) edge = d.crossings.front().edges[0];

    if (edge) {
        bool replaced = false;
        for (auto it = out.crossings.rbegin(); it != out.crossings.rend() && !replaced; ++it)
            for (int& e : it->edges)
                if (e == *edge) {  // re-route one of the two occurrences
                    e = tail_edge;
                    replaced = true;
                    break;
                }
        if (!replaced) throw std::invalid_argument("add_kink: unknown edge id");
        out.crossings.push_back({{loop_edge, loop_edge, *edge, tail_edge}, over});
        return out;
    }
    if (out.free_loops > 0) {
        --out.free_loops;
        out.crossings.push_back({{loop_edge, loop_edge, tail_edge, tail_edge}, over});
        return out;
    }
    throw std::domain_error("add_kink: no component to attach the kink to");
}

inline PlanarDiagram mirror(const PlanarDiagram& d) {
    PlanarDiagram out = d;
    for (Crossing& x : out.crossings) x.over ^= 1;
    out.kinks = -out.kinks;
    return out;
}

inline PlanarDiagram disjoint_union(const PlanarDiagram& d1, const PlanarDiagram& d2) {
    PlanarDiagram out = d1;
    const int offset = max_edge_id(d1) + 1;
    for (Crossing x : d2.crossings) {
        for (int& e : x.edges) e += offset;
        out.crossings.push_back(x);
    }
    out.free_loops += d2.free_loops;
    out.kinks += d2.kinks;
    return out;
}

// ---------------------------------------------------------------------------
// standard diagrams; PD tuples list edges counterclockwise from the incoming
// under-strand, so the over-strand occupies slots {1,3}
// ---------------------------------------------------------------------------

inline PlanarDiagram unknot() { return PlanarDiagram{{}, 1, 0}; }

inline PlanarDiagram from_pd(const std::vector<std::array<int, 4>>& code) {
    PlanarDiagram d;
    for (const auto& x : code) d.crossings.push_back({x, 1});
    return d;
}

inline PlanarDiagram hopf_link() { return from_pd({{4, 1, 3, 2}, {2, 3, 1, 4}}); }

inline PlanarDiagram trefoil() { return from_pd({{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}); }

inline PlanarDiagram figure_eight() {
    return from_pd({{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}});
}

}  // namespace skein
