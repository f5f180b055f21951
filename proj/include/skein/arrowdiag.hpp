#pragma once

/*
  Arrow diagrams for links in F x S^1 and in the twisted circle bundle over
  the projective plane (disk with antipodal boundary identification).

  A diagram is a set of strands (closed curves and arcs), each a cyclic or
  linear sequence of events: crossing visits (with over/under flags) and
  arrow marks (with a direction relative to the strand traversal). Arcs end
  on boundary endpoints, which come in antipodal pairs.

  Isotopy moves are implemented as local pattern rewrites at caller-specified
  locations; the module never searches for move sequences and never decides
  diagram equivalence. The catalog below is transcription data for the
  standard move set - the three Reidemeister moves, the two arrow moves
  (cancellation of an adjacent opposite pair; sliding an arrow pair through a
  crossing), and the three boundary moves of the twisted bundle (finger
  through the boundary, creating or annihilating one antipodal pair;
  transposing two neighbouring endpoints, inserting a crossing; transporting
  an arrow across the identification, flipping its direction). Each move
  declares its effect on the number of boundary pairs and is exactly
  invertible at the same location.
*/

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein::arrow {

struct Event {
    enum class Kind { Crossing, Arrow };
    Kind kind = Kind::Arrow;
    int crossing = -1;  // Kind::Crossing
    bool over = false;  // Kind::Crossing
    int dir = 0;        // Kind::Arrow: +1 or -1 along the traversal

    static Event crossing_visit(int id, bool over) { return {Kind::Crossing, id, over, 0}; }
    static Event arrow(int dir) { return {Kind::Arrow, -1, false, dir}; }

    friend bool operator==(const Event& a, const Event& b) {
        return a.kind == b.kind && a.crossing == b.crossing && a.over == b.over && a.dir == b.dir;
    }
};

struct Strand {
    bool closed = true;
    std::vector<Event> events;
    int start = -1, end = -1;  // boundary endpoint ids; -1 for closed strands

    friend bool operator==(const Strand& a, const Strand& b) {
        return a.closed == b.closed && a.events == b.events && a.start == b.start && a.end == b.end;
    }
};

struct ArrowDiagram {
    std::vector<Strand> strands;
    std::vector<std::array<int, 2>> pairs;  // antipodal boundary endpoint pairs

    friend bool operator==(const ArrowDiagram& a, const ArrowDiagram& b) {
        return a.strands == b.strands && a.pairs == b.pairs;
    }
};

class pattern_mismatch : public std::runtime_error {
public:
    explicit pattern_mismatch(const std::string& what)
        : std::runtime_error("pattern mismatch: " + what) {}
};

// ---------------------------------------------------------------------------
// validation
// ---------------------------------------------------------------------------

inline std::vector<std::string> validate(const ArrowDiagram& d) {
    std::vector<std::string> violations;

    std::map<int, int> endpoint_pair_uses;   // endpoint id -> times listed in pairs
    std::map<int, int> endpoint_arc_uses;    // endpoint id -> times used by arc ends
    for (const auto& pr : d.pairs) {
        ++endpoint_pair_uses[pr[0]];
        ++endpoint_pair_uses[pr[1]];
        if (pr[0] == pr[1])
            violations.push_back("pair joins endpoint " + std::to_string(pr[0]) + " to itself");
    }
    for (const auto& [e, n] : endpoint_pair_uses)
        if (n != 1)
            violations.push_back("endpoint " + std::to_string(e) + " listed in " +
                                 std::to_string(n) + " pairs");

    std::map<int, std::vector<bool>> crossing_flags;
    for (std::size_t si = 0; si < d.strands.size(); ++si) {
        const Strand& s = d.strands[si];
        const std::string tag = "strand " + std::to_string(si);
        if (s.closed) {
            if (s.start != -1 || s.end != -1)
                violations.push_back(tag + ": closed curves have no endpoints");
        } else {
            for (int e : {s.start, s.end}) {
                if (e < 0) { violations.push_back(tag + ": arc end missing an endpoint"); continue; }
                ++endpoint_arc_uses[e];
                if (!endpoint_pair_uses.count(e))
                    violations.push_back(tag + ": endpoint " + std::to_string(e) +
                                         " lacks antipode");
            }
            if (s.start == s.end && s.start >= 0)
                violations.push_back(tag + ": arc ends on the same endpoint twice");
        }
        for (const Event& ev : s.events) {
            if (ev.kind == Event::Kind::Crossing) crossing_flags[ev.crossing].push_back(ev.over);
            else if (ev.dir != 1 && ev.dir != -1)
                violations.push_back(tag + ": arrow direction must be +/-1");
        }
    }
    for (const auto& [e, n] : endpoint_arc_uses)
        if (n != 1)
            violations.push_back("endpoint " + std::to_string(e) + " joined to " +
                                 std::to_string(n) + " arc ends");
    for (const auto& pr : d.pairs)
        for (int e : pr)
            if (!endpoint_arc_uses.count(e))
                violations.push_back("endpoint " + std::to_string(e) + " joined to no arc end");

    for (const auto& [id, flags] : crossing_flags) {
        if (flags.size() != 2)
            violations.push_back("crossing " + std::to_string(id) + " visited " +
                                 std::to_string(flags.size()) + " times, expected 2");
        else if (flags[0] == flags[1])
            violations.push_back("crossing " + std::to_string(id) +
                                 ": visits must be one over, one under");
    }
    return violations;
}

// arrow count mod 2, one entry per strand; invariant under the arrow moves
inline std::vector<int> arrow_count_parity(const ArrowDiagram& d) {
    std::vector<int> parity;
    for (const Strand& s : d.strands) {
        int n = 0;
        for (const Event& ev : s.events)
            if (ev.kind == Event::Kind::Arrow) ++n;
        parity.push_back(n % 2);
    }
    return parity;
}

// ---------------------------------------------------------------------------
// named generator templates
// ---------------------------------------------------------------------------

// x: closed curve with one arrow. t: x with a negative full twist (one
// self-crossing). K: crossingless arc between two antipodal endpoints.
// K': the arc with an arrow.
inline ArrowDiagram generator(const std::string& name) {
    ArrowDiagram d;
    if (name == "empty") return d;
    if (name == "x") {
        d.strands.push_back({true, {Event::arrow(1)}, -1, -1});
        return d;
    }
    if (name == "t") {
        d.strands.push_back(
            {true, {Event::arrow(1), Event::crossing_visit(0, true), Event::crossing_visit(0, false)},
             -1, -1});
        return d;
    }
    if (name == "K") {
        d.strands.push_back({false, {}, 0, 1});
        d.pairs.push_back({0, 1});
        return d;
    }
    if (name == "K'" || name == "Kprime") {
        d.strands.push_back({false, {Event::arrow(1)}, 0, 1});
        d.pairs.push_back({0, 1});
        return d;
    }
    throw std::invalid_argument("unknown generator '" + name + "' (empty, x, t, K, K')");
}

// ---------------------------------------------------------------------------
// moves
// ---------------------------------------------------------------------------

enum class MoveKind {
    R1,            // kink insertion (forward) / removal (reverse)
    R2,            // strand-over-strand push (forward) / removal (reverse)
    R3,            // slide a strand across a crossing (self-inverse via side)
    ArrowCancel,   // remove an adjacent opposite arrow pair (forward) / insert (reverse)
    ArrowSlide,    // slide the arrow pair through a crossing (forward: before -> after)
    BoundaryFinger,  // push a strand through the boundary: +1 pair (forward), -1 (reverse)
    BoundarySwap,  // transpose neighbouring endpoints, inserting (forward) or
                   // removing (reverse) a crossing between the two arc tails
    BoundaryArrowFlip  // carry a terminal arrow to the antipodal arc end, flipping it
};

inline const char* move_name(MoveKind k) {
    switch (k) {
        case MoveKind::R1: return "r1";
        case MoveKind::R2: return "r2";
        case MoveKind::R3: return "r3";
        case MoveKind::ArrowCancel: return "arrow_cancel";
        case MoveKind::ArrowSlide: return "arrow_slide";
        case MoveKind::BoundaryFinger: return "boundary_finger";
        case MoveKind::BoundarySwap: return "boundary_swap";
        case MoveKind::BoundaryArrowFlip: return "boundary_arrow_flip";
    }
    return "?";
}

struct MoveSpec {
    MoveKind kind = MoveKind::R1;
    bool reverse = false;
    int strand = -1, strand2 = -1;
    int pos = -1, pos2 = -1;       // event positions / cut index
    int crossing = -1, crossing2 = -1;
    bool over = false;
    int dir = 0;
    int pair_id = -1;              // BoundaryFinger reverse: index into pairs
    int end1 = 1, end2 = 1;        // BoundarySwap / ArrowFlip: 0 = start side, 1 = end side
};

// declared effect of a move on the number of antipodal boundary pairs
inline int pair_count_delta(const MoveSpec& m) {
    if (m.kind == MoveKind::BoundaryFinger) return m.reverse ? -1 : +1;
    return 0;
}

namespace detail {

inline std::size_t norm_pos(const Strand& s, int pos, const char* what) {
    if (s.events.empty() || pos < 0 || static_cast<std::size_t>(pos) >= s.events.size())
        throw pattern_mismatch(std::string(what) + ": position out of range");
    return static_cast<std::size_t>(pos);
}

// position after `pos`, cyclic for closed strands; npos when none
inline std::optional<std::size_t> next_pos(const Strand& s, std::size_t pos) {
    if (pos + 1 < s.events.size()) return pos + 1;
    if (s.closed && s.events.size() > 1) return 0;
    return std::nullopt;
}

inline Strand& strand_at(ArrowDiagram& d, int idx, const char* what) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= d.strands.size())
        throw pattern_mismatch(std::string(what) + ": strand index out of range");
    return d.strands[static_cast<std::size_t>(idx)];
}

// remove two cyclically adjacent events at pos, pos+1
inline void erase_adjacent_pair(Strand& s, std::size_t pos) {
    const std::size_t n = s.events.size();
    const std::size_t next = (pos + 1) % n;
    if (next > pos) s.events.erase(s.events.begin() + pos, s.events.begin() + pos + 2);
    else {  // wrapped: drop last and first
        s.events.pop_back();
        s.events.erase(s.events.begin());
    }
}

struct VisitRef { std::size_t strand, pos; };

// the two visits of a crossing (may sit on the same strand)
inline std::array<VisitRef, 2> find_crossing(const ArrowDiagram& d, int crossing) {
    std::array<VisitRef, 2> out{};
    int found = 0;
    for (std::size_t si = 0; si < d.strands.size(); ++si)
        for (std::size_t p = 0; p < d.strands[si].events.size(); ++p) {
            const Event& ev = d.strands[si].events[p];
            if (ev.kind == Event::Kind::Crossing && ev.crossing == crossing) {
                if (found < 2) out[found] = {si, p};
                ++found;
            }
        }
    if (found != 2)
        throw pattern_mismatch("crossing " + std::to_string(crossing) + " is not visited exactly twice");
    return out;
}

inline int max_crossing_id(const ArrowDiagram& d) {
    int m = -1;
    for (const Strand& s : d.strands)
        for (const Event& ev : s.events)
            if (ev.kind == Event::Kind::Crossing) m = std::max(m, ev.crossing);
    return m;
}

inline int max_endpoint_id(const ArrowDiagram& d) {
    int m = -1;
    for (const auto& pr : d.pairs) m = std::max({m, pr[0], pr[1]});
    return m;
}

// strand reversal: events reversed, arrow directions flip with the traversal
inline Strand reversed(const Strand& s) {
    Strand r = s;
    std::reverse(r.events.begin(), r.events.end());
    for (Event& ev : r.events)
        if (ev.kind == Event::Kind::Arrow) ev.dir = -ev.dir;
    std::swap(r.start, r.end);
    return r;
}

}  // namespace detail

inline ArrowDiagram apply_move(const ArrowDiagram& diagram, const MoveSpec& m) {
    using detail::next_pos;
    using detail::norm_pos;
    using detail::strand_at;
    ArrowDiagram d = diagram;

    switch (m.kind) {
        case MoveKind::R1: {
            if (!m.reverse) {  // insert a kink: two adjacent visits to a fresh crossing
                Strand& s = strand_at(d, m.strand, "r1");
                if (m.pos < 0 || static_cast<std::size_t>(m.pos) > s.events.size())
                    throw pattern_mismatch("r1: insertion position out of range");
                const int id = m.crossing >= 0 ? m.crossing : detail::max_crossing_id(d) + 1;
                s.events.insert(s.events.begin() + m.pos,
                                {Event::crossing_visit(id, m.over),
                                 Event::crossing_visit(id, !m.over)});
            } else {  // remove: both visits adjacent on one strand
                Strand& s = strand_at(d, m.strand, "r1");
                const std::size_t p = norm_pos(s, m.pos, "r1");
                const auto q = next_pos(s, p);
                if (!q) throw pattern_mismatch("r1: no adjacent event");
                const Event &a = s.events[p], &b = s.events[*q];
                if (a.kind != Event::Kind::Crossing || b.kind != Event::Kind::Crossing ||
                    a.crossing != b.crossing || a.over == b.over)
                    throw pattern_mismatch("r1: events are not the two visits of one kink");
                detail::erase_adjacent_pair(s, p);
            }
            break;
        }

        case MoveKind::R2: {
            if (!m.reverse) {  // push strand over strand: visits [X,Y] and [X,Y]
                const int x = m.crossing >= 0 ? m.crossing : detail::max_crossing_id(d) + 1;
                const int y = m.crossing2 >= 0 ? m.crossing2 : x + 1;
                Strand& s1 = strand_at(d, m.strand, "r2");
                if (m.pos < 0 || static_cast<std::size_t>(m.pos) > s1.events.size())
                    throw pattern_mismatch("r2: position out of range");
                s1.events.insert(s1.events.begin() + m.pos,
                                 {Event::crossing_visit(x, m.over), Event::crossing_visit(y, m.over)});
                Strand& s2 = strand_at(d, m.strand2, "r2");
                int pos2 = m.pos2;
                if (m.strand == m.strand2 && pos2 >= m.pos) pos2 += 2;
                if (pos2 < 0 || static_cast<std::size_t>(pos2) > s2.events.size())
                    throw pattern_mismatch("r2: position out of range");
                s2.events.insert(s2.events.begin() + pos2,
                                 {Event::crossing_visit(x, !m.over), Event::crossing_visit(y, !m.over)});
            } else {  // remove two crossings forming an R2 pocket
                const auto vx = detail::find_crossing(d, m.crossing);
                detail::find_crossing(d, m.crossing2);  // must be visited exactly twice
                // on each strand the X and Y visits must be adjacent with equal flags
                auto check_side = [&](const detail::VisitRef& a) -> detail::VisitRef {
                    const Strand& s = d.strands[a.strand];
                    const auto q = next_pos(s, a.pos);
                    if (q) {
                        const Event& nb = s.events[*q];
                        if (nb.kind == Event::Kind::Crossing && nb.crossing == m.crossing2 &&
                            nb.over == s.events[a.pos].over)
                            return {a.strand, *q};
                    }
                    throw pattern_mismatch("r2: visits are not adjacent with matching flags");
                };
                const auto y0 = check_side(vx[0]);
                const auto y1 = check_side(vx[1]);
                // erase higher positions first on each strand
                std::vector<std::pair<std::size_t, std::size_t>> victims = {
                    {vx[0].strand, vx[0].pos}, {y0.strand, y0.pos},
                    {vx[1].strand, vx[1].pos}, {y1.strand, y1.pos}};
                std::sort(victims.begin(), victims.end(),
                          [](auto& a, auto& b) { return a.first != b.first ? a.first < b.first : a.second > b.second; });
                for (const auto& [si, p] : victims)
                    d.strands[si].events.erase(d.strands[si].events.begin() + p);
            }
            break;
        }

        case MoveKind::R3: {
            // slide the strand passing over (or under) both neighbours across
            // the pivot crossing: transpose the adjacent (C, X) visit pairs on
            // the two strands of X
            const auto vx = detail::find_crossing(d, m.crossing);
            const bool after = m.reverse;  // side of X on which the pattern sits
            std::array<detail::VisitRef, 2> neighbours{};
            std::array<int, 2> flank_ids{};
            for (int i = 0; i < 2; ++i) {
                const Strand& s = d.strands[vx[i].strand];
                std::optional<std::size_t> nb;
                if (!after) {
                    const std::size_t n = s.events.size();
                    if (n >= 2) nb = (vx[i].pos + n - 1) % n;
                    if (!s.closed && vx[i].pos == 0) nb = std::nullopt;
                } else {
                    nb = next_pos(s, vx[i].pos);
                }
                if (!nb) throw pattern_mismatch("r3: no flanking event");
                const Event& ev = s.events[*nb];
                if (ev.kind != Event::Kind::Crossing)
                    throw pattern_mismatch("r3: flanking event is not a crossing visit");
                neighbours[i] = {vx[i].strand, *nb};
                flank_ids[i] = ev.crossing;
            }
            if (flank_ids[0] == flank_ids[1] || flank_ids[0] == m.crossing || flank_ids[1] == m.crossing)
                throw pattern_mismatch("r3: flanking crossings must be distinct from the pivot");
            // the two flanking crossings' other visits sit on the sliding strand
            // with equal flags there
            std::array<Event, 2> remote{};
            for (int i = 0; i < 2; ++i) {
                const auto vs = detail::find_crossing(d, flank_ids[i]);
                const auto& self = neighbours[i];
                const auto& other = (vs[0].strand == self.strand && vs[0].pos == self.pos) ? vs[1] : vs[0];
                remote[i] = d.strands[other.strand].events[other.pos];
            }
            if (remote[0].over != remote[1].over)
                throw pattern_mismatch("r3: sliding strand must pass the same way over both");
            for (int i = 0; i < 2; ++i)
                std::swap(d.strands[vx[i].strand].events[vx[i].pos],
                          d.strands[neighbours[i].strand].events[neighbours[i].pos]);
            break;
        }

        case MoveKind::ArrowCancel: {
            if (!m.reverse) {  // remove an adjacent opposite pair
                Strand& s = strand_at(d, m.strand, "arrow_cancel");
                const std::size_t p = norm_pos(s, m.pos, "arrow_cancel");
                const auto q = next_pos(s, p);
                if (!q) throw pattern_mismatch("arrow_cancel: no adjacent event");
                const Event &a = s.events[p], &b = s.events[*q];
                if (a.kind != Event::Kind::Arrow || b.kind != Event::Kind::Arrow || a.dir != -b.dir)
                    throw pattern_mismatch("arrow_cancel: events are not an opposite arrow pair");
                detail::erase_adjacent_pair(s, p);
            } else {  // insert a cancelling pair
                Strand& s = strand_at(d, m.strand, "arrow_cancel");
                if (m.pos < 0 || static_cast<std::size_t>(m.pos) > s.events.size())
                    throw pattern_mismatch("arrow_cancel: insertion position out of range");
                const int dir = m.dir == 0 ? 1 : m.dir;
                s.events.insert(s.events.begin() + m.pos, {Event::arrow(dir), Event::arrow(-dir)});
            }
            break;
        }

        case MoveKind::ArrowSlide: {
            // both strands at the crossing carry an arrow immediately before
            // their visit (forward) or immediately after (reverse); the pair
            // slides to the other side, directions preserved
            detail::find_crossing(d, m.crossing);  // must be visited exactly twice
            // handle same-strand visits: operate on positions, recompute after edits
            for (int i = 0; i < 2; ++i) {
                const auto visits = detail::find_crossing(d, m.crossing);
                const auto v = visits[i];
                Strand& s = d.strands[v.strand];
                const std::size_t n = s.events.size();
                std::optional<std::size_t> from;
                if (!m.reverse) {
                    if (n >= 2 && (s.closed || v.pos > 0)) from = (v.pos + n - 1) % n;
                } else {
                    from = next_pos(s, v.pos);
                }
                if (!from || s.events[*from].kind != Event::Kind::Arrow)
                    throw pattern_mismatch("arrow_slide: no arrow adjacent to the crossing visit");
                const Event arrow_ev = s.events[*from];
                s.events.erase(s.events.begin() + *from);
                // the visit may have shifted left by the erasure
                std::size_t vpos = v.pos - (*from < v.pos ? 1 : 0);
                const std::size_t insert_at = m.reverse ? vpos : vpos + 1;
                s.events.insert(s.events.begin() + insert_at, arrow_ev);
            }
            break;
        }

        case MoveKind::BoundaryFinger: {
            if (!m.reverse) {  // cut: push the strand through the boundary
                Strand& s = strand_at(d, m.strand, "boundary_finger");
                if (m.pos < 0 || static_cast<std::size_t>(m.pos) > s.events.size())
                    throw pattern_mismatch("boundary_finger: cut position out of range");
                const int e1 = detail::max_endpoint_id(d) + 1, e2 = e1 + 1;
                d.pairs.push_back({e1, e2});
                if (s.closed) {  // closed curve becomes one arc, rotated to the cut
                    std::vector<Event> ev(s.events.begin() + m.pos, s.events.end());
                    ev.insert(ev.end(), s.events.begin(), s.events.begin() + m.pos);
                    s = Strand{false, std::move(ev), e1, e2};
                } else {  // arc becomes two arcs
                    Strand tail{false,
                                std::vector<Event>(s.events.begin() + m.pos, s.events.end()),
                                e2, s.end};
                    s.events.erase(s.events.begin() + m.pos, s.events.end());
                    s.end = e1;
                    d.strands.push_back(std::move(tail));
                }
            } else {  // annihilate a pair, fusing the incident arc ends
                if (m.pair_id < 0 || static_cast<std::size_t>(m.pair_id) >= d.pairs.size())
                    throw pattern_mismatch("boundary_finger: pair index out of range");
                const auto pr = d.pairs[static_cast<std::size_t>(m.pair_id)];
                auto find_end = [&](int endpoint) -> std::pair<std::size_t, bool> {
                    for (std::size_t si = 0; si < d.strands.size(); ++si) {
                        if (d.strands[si].closed) continue;
                        if (d.strands[si].start == endpoint) return {si, false};
                        if (d.strands[si].end == endpoint) return {si, true};
                    }
                    throw pattern_mismatch("boundary_finger: endpoint joined to no arc end");
                };
                const auto [s1, at_end1] = find_end(pr[0]);
                const auto [s2, at_end2] = find_end(pr[1]);
                if (s1 == s2) {  // one arc closes into a curve
                    Strand& s = d.strands[s1];
                    s = Strand{true, s.events, -1, -1};
                } else {  // fuse two arcs, reversing as needed so pr[0]-end meets pr[1]-end
                    Strand a = at_end1 ? d.strands[s1] : detail::reversed(d.strands[s1]);
                    Strand b = at_end2 ? detail::reversed(d.strands[s2]) : d.strands[s2];
                    a.events.insert(a.events.end(), b.events.begin(), b.events.end());
                    a.end = b.end;
                    d.strands[s1] = std::move(a);
                    d.strands.erase(d.strands.begin() + s2);
                }
                d.pairs.erase(d.pairs.begin() + m.pair_id);
            }
            break;
        }

        case MoveKind::BoundarySwap: {
            if (!m.reverse) {  // transpose two endpoints: the arc tails cross
                if (m.strand == m.strand2 && m.end1 == m.end2)
                    throw pattern_mismatch("boundary_swap: need two distinct arc ends");
                const int id = m.crossing >= 0 ? m.crossing : detail::max_crossing_id(d) + 1;
                auto insert_terminal = [&](int strand, int end, bool over) {
                    Strand& s = strand_at(d, strand, "boundary_swap");
                    if (s.closed) throw pattern_mismatch("boundary_swap: strand is not an arc");
                    if (end == 1) s.events.push_back(Event::crossing_visit(id, over));
                    else s.events.insert(s.events.begin(), Event::crossing_visit(id, over));
                };
                insert_terminal(m.strand, m.end1, m.over);
                insert_terminal(m.strand2, m.end2, !m.over);
            } else {  // remove a crossing adjacent to two arc ends
                const auto vs = detail::find_crossing(d, m.crossing);
                for (const auto& v : vs) {
                    const Strand& s = d.strands[v.strand];
                    if (s.closed || (v.pos != 0 && v.pos + 1 != s.events.size()))
                        throw pattern_mismatch("boundary_swap: crossing is not terminal on an arc");
                }
                // erase higher position first if both visits share a strand
                auto victims = vs;
                std::sort(victims.begin(), victims.end(), [](auto& a, auto& b) {
                    return a.strand != b.strand ? a.strand < b.strand : a.pos > b.pos;
                });
                for (const auto& v : victims)
                    d.strands[v.strand].events.erase(d.strands[v.strand].events.begin() + v.pos);
            }
            break;
        }

        case MoveKind::BoundaryArrowFlip: {
            Strand& s = strand_at(d, m.strand, "boundary_arrow_flip");
            if (s.closed) throw pattern_mismatch("boundary_arrow_flip: strand is not an arc");
            const bool at_end = m.end1 == 1;
            if (s.events.empty()) throw pattern_mismatch("boundary_arrow_flip: no terminal arrow");
            const std::size_t p = at_end ? s.events.size() - 1 : 0;
            if (s.events[p].kind != Event::Kind::Arrow)
                throw pattern_mismatch("boundary_arrow_flip: terminal event is not an arrow");
            const Event arrow_ev = s.events[p];
            const int endpoint = at_end ? s.end : s.start;
            s.events.erase(s.events.begin() + p);

            int partner = -1;
            for (const auto& pr : d.pairs) {
                if (pr[0] == endpoint) partner = pr[1];
                if (pr[1] == endpoint) partner = pr[0];
            }
            if (partner < 0) throw pattern_mismatch("boundary_arrow_flip: endpoint lacks antipode");
            for (Strand& s2 : d.strands) {
                if (s2.closed) continue;
                if (s2.start == partner) {
                    s2.events.insert(s2.events.begin(), Event::arrow(-arrow_ev.dir));
                    return d;
                }
                if (s2.end == partner) {
                    s2.events.push_back(Event::arrow(-arrow_ev.dir));
                    return d;
                }
            }
            throw pattern_mismatch("boundary_arrow_flip: antipodal endpoint joined to no arc end");
        }
    }
    return d;
}

}  // namespace skein::arrow
