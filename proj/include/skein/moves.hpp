#pragma once

/*
  Diagram builders for regular-isotopy checks: braid-word closures and local
  R2 insertion between arbitrary edges. Closures of words differing by
  sigma_i sigma_i^-1 cancellation or by the braid relation
  sigma_i sigma_j sigma_i = sigma_j sigma_i sigma_j (|i-j| = 1) are related by
  Reidemeister II/III moves, so their brackets must agree exactly.
*/

#include "skein/bracket.hpp"

namespace skein {

// closure of a braid word on `strands` strands; letter +k is the positive
// crossing of strands k, k+1 (left strand over), -k the negative one
inline PlanarDiagram braid_closure(const std::vector<int>& word, int strands) {
    if (strands < 1) throw std::invalid_argument("braid_closure: need at least one strand");
    for (int w : word)
        if (w == 0 || std::abs(w) >= strands)
            throw std::invalid_argument("braid_closure: letter out of range");

    PlanarDiagram d;
    std::vector<int> start(strands), cur(strands);
    int next_id = 0;
    for (int i = 0; i < strands; ++i) start[i] = cur[i] = next_id++;

    for (int w : word) {
        const int k = std::abs(w) - 1;  // 0-based position
        const int il = cur[k], ir = cur[k + 1];
        const int or_ = next_id++, ol = next_id++;
        // counterclockwise from bottom-left: il, ir, or, ol;
        // positive letter: the il -> or strand is over (slots {0,2})
        d.crossings.push_back({{il, ir, or_, ol}, w > 0 ? 0 : 1});
        cur[k] = ol;
        cur[k + 1] = or_;
    }

    // close up: fuse cur[i] with start[i]
    for (int i = 0; i < strands; ++i) {
        if (cur[i] == start[i]) {
            ++d.free_loops;  // untouched strand closes into a circle
            continue;
        }
        const int keep = start[i], drop = cur[i];
        for (Crossing& x : d.crossings)
            for (int& e : x.edges)
                if (e == drop) e = keep;
        for (int j = i + 1; j < strands; ++j)
            if (cur[j] == drop) cur[j] = keep;
    }
    return d;
}

// push edge e1 over edge e2 (an R2 move; the two new crossings share the same
// over-strand). first_over = false puts e2 on top instead.
inline PlanarDiagram insert_r2(const PlanarDiagram& d, int e1, int e2, bool first_over = true) {
    if (e1 == e2) throw std::invalid_argument("insert_r2: edges must be distinct");
    PlanarDiagram out = d;
    const int base = max_edge_id(d) + 1;
    const int e1_mid = base, e1_tail = base + 1, e2_mid = base + 2, e2_tail = base + 3;

    auto split = [&out](int edge, int tail) {
        for (auto it = out.crossings.rbegin(); it != out.crossings.rend(); ++it)
            for (int& e : it->edges)
                if (e == edge) { e = tail; return true; }
        return false;
    };
    if (!split(e1, e1_tail) || !split(e2, e2_tail))
        throw std::invalid_argument("insert_r2: unknown edge id");

    // braid-style: strands (e1..., e2...) cross twice, same strand over both
    out.crossings.push_back({{e1, e2, e1_mid, e2_mid}, first_over ? 0 : 1});
    out.crossings.push_back({{e2_mid, e1_mid, e2_tail, e1_tail}, first_over ? 1 : 0});
    return out;
}

}  // namespace skein
