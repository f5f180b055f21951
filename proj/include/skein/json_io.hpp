#pragma once

/*
  JSON formats. Diagrams mirror their field structure; certificates carry
  every polynomial (canonical text grammar) a third party needs to re-verify
  the claimed identities with independent tools. Certificate bodies contain
  no timestamps or environment data: identical inputs give identical bytes.

  Planar diagram format:
    {"crossings":[{"edges":[e0,e1,e2,e3],"over":[0,2]}, ...],
     "free_loops": n, "kinks": k}
  where `edges` lists edge ids counterclockwise and `over` names the two
  opposite slots occupied by the over-strand.
*/

#include "skein/arrowdiag.hpp"
#include "skein/bracket.hpp"
#include "skein/modpres.hpp"
#include "skein/parse.hpp"

#include <json.hpp>

namespace skein {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// planar diagrams
// ---------------------------------------------------------------------------

inline Json to_json(const PlanarDiagram& d) {
    Json crossings = Json::array();
    for (const Crossing& x : d.crossings) {
        Json c;
        c["edges"] = x.edges;
        c["over"] = std::array<int, 2>{x.over, x.over + 2};
        crossings.push_back(std::move(c));
    }
    return Json{{"crossings", std::move(crossings)},
                {"free_loops", d.free_loops},
                {"kinks", d.kinks}};
}

inline PlanarDiagram planar_from_json(const Json& j) {
    PlanarDiagram d;
    for (const Json& c : j.at("crossings")) {
        Crossing x;
        const auto& edges = c.at("edges");
        if (!edges.is_array() || edges.size() != 4)
            throw std::invalid_argument("diagram: \"edges\" must list 4 edge ids");
        for (int i = 0; i < 4; ++i) x.edges[i] = edges.at(i).get<int>();
        const auto& over = c.at("over");
        if (!over.is_array() || over.size() != 2)
            throw std::invalid_argument("diagram: \"over\" must list 2 slots");
        const int a = over.at(0).get<int>(), b = over.at(1).get<int>();
        if ((b - a + 4) % 4 != 2 || a < 0 || a > 3)
            throw std::invalid_argument("diagram: over-strand slots must be opposite");
        x.over = a % 2;
        d.crossings.push_back(x);
    }
    d.free_loops = j.value("free_loops", 0);
    d.kinks = j.value("kinks", 0L);
    return d;
}

// ---------------------------------------------------------------------------
// arrow diagrams and move specs
// ---------------------------------------------------------------------------

inline Json to_json(const arrow::ArrowDiagram& d) {
    Json strands = Json::array();
    for (const arrow::Strand& s : d.strands) {
        Json events = Json::array();
        for (const arrow::Event& ev : s.events) {
            if (ev.kind == arrow::Event::Kind::Crossing)
                events.push_back(Json{{"type", "crossing"}, {"id", ev.crossing}, {"over", ev.over}});
            else
                events.push_back(Json{{"type", "arrow"}, {"dir", ev.dir}});
        }
        Json js{{"closed", s.closed}, {"events", std::move(events)}};
        if (!s.closed) js["endpoints"] = std::array<int, 2>{s.start, s.end};
        strands.push_back(std::move(js));
    }
    return Json{{"strands", std::move(strands)}, {"boundary_pairs", d.pairs}};
}

inline arrow::ArrowDiagram arrow_from_json(const Json& j) {
    arrow::ArrowDiagram d;
    for (const Json& js : j.at("strands")) {
        arrow::Strand s;
        s.closed = js.at("closed").get<bool>();
        if (!s.closed) {
            const auto& ends = js.at("endpoints");
            s.start = ends.at(0).get<int>();
            s.end = ends.at(1).get<int>();
        }
        for (const Json& ev : js.at("events")) {
            const std::string type = ev.at("type").get<std::string>();
            if (type == "crossing")
                s.events.push_back(arrow::Event::crossing_visit(ev.at("id").get<int>(),
                                                                ev.at("over").get<bool>()));
            else if (type == "arrow")
                s.events.push_back(arrow::Event::arrow(ev.at("dir").get<int>()));
            else
                throw std::invalid_argument("arrow diagram: unknown event type '" + type + "'");
        }
        d.strands.push_back(std::move(s));
    }
    for (const Json& pr : j.at("boundary_pairs"))
        d.pairs.push_back({pr.at(0).get<int>(), pr.at(1).get<int>()});
    return d;
}

inline Json to_json(const arrow::MoveSpec& m) {
    Json j{{"move", arrow::move_name(m.kind)}, {"reverse", m.reverse}};
    j["strand"] = m.strand;
    j["strand2"] = m.strand2;
    j["pos"] = m.pos;
    j["pos2"] = m.pos2;
    j["crossing"] = m.crossing;
    j["crossing2"] = m.crossing2;
    j["over"] = m.over;
    j["dir"] = m.dir;
    j["pair_id"] = m.pair_id;
    j["end1"] = m.end1;
    j["end2"] = m.end2;
    return j;
}

inline arrow::MoveSpec move_from_json(const Json& j) {
    arrow::MoveSpec m;
    const std::string name = j.at("move").get<std::string>();
    bool known = false;
    for (arrow::MoveKind k : {arrow::MoveKind::R1, arrow::MoveKind::R2, arrow::MoveKind::R3,
                              arrow::MoveKind::ArrowCancel, arrow::MoveKind::ArrowSlide,
                              arrow::MoveKind::BoundaryFinger, arrow::MoveKind::BoundarySwap,
                              arrow::MoveKind::BoundaryArrowFlip})
        if (name == arrow::move_name(k)) { m.kind = k; known = true; }
    if (!known) throw std::invalid_argument("unknown move '" + name + "'");
    m.reverse = j.value("reverse", false);
    m.strand = j.value("strand", -1);
    m.strand2 = j.value("strand2", -1);
    m.pos = j.value("pos", -1);
    m.pos2 = j.value("pos2", -1);
    m.crossing = j.value("crossing", -1);
    m.crossing2 = j.value("crossing2", -1);
    m.over = j.value("over", false);
    m.dir = j.value("dir", 0);
    m.pair_id = j.value("pair_id", -1);
    m.end1 = j.value("end1", 1);
    m.end2 = j.value("end2", 1);
    return m;
}

// ---------------------------------------------------------------------------
// certificates
// ---------------------------------------------------------------------------

inline Json to_json(const PropernessCertificate& cert) {
    return Json{{"prime", cert.prime},
                {"g1_mod", cert.g1_mod.str()},
                {"g2_mod", cert.g2_mod.str()},
                {"common_factor", cert.common.str()},
                {"cofactor1", cert.u1.str()},
                {"cofactor2", cert.u2.str()}};
}

inline PropernessCertificate properness_from_json(const Json& j) {
    PropernessCertificate c;
    c.prime = j.at("prime").get<int>();
    c.g1_mod = parse_laurent(j.at("g1_mod").get<std::string>());
    c.g2_mod = parse_laurent(j.at("g2_mod").get<std::string>());
    c.common = parse_laurent(j.at("common_factor").get<std::string>());
    c.u1 = parse_laurent(j.at("cofactor1").get<std::string>());
    c.u2 = parse_laurent(j.at("cofactor2").get<std::string>());
    return c;
}

inline Json to_json(const GcdResult& g) {
    return Json{{"gcd", g.gcd.str()},
                {"cofactor1", g.cofactor1.str()},
                {"cofactor2", g.cofactor2.str()}};
}

inline Json to_json(const PrincipalityVerdict& v, const IdealTwoGen& ideal) {
    Json j{{"kind", "principality_verdict"},
           {"ideal", Json{{"g1", ideal.g1.str()}, {"g2", ideal.g2.str()}}},
           {"status", principality_name(v.status)},
           {"gcd_evidence", to_json(v.gcd_evidence)}};
    if (v.properness) j["properness"] = to_json(*v.properness);
    if (v.generator) j["generator"] = v.generator->str();
    if (v.combination)
        j["combination"] = Json{{"cofactor1", v.combination->cofactor1.str()},
                                {"cofactor2", v.combination->cofactor2.str()}};
    return j;
}

inline Json to_json(const TorsionWitness& w) {
    const Relation rel = relation(w.n);
    return Json{{"kind", "torsion_witness"},
                {"n", w.n},
                {"basis", "chebyshev"},
                {"element", w.element.str()},
                {"annihilator", w.annihilator.str()},
                {"relation_c", rel.c.str()},
                {"relation_d", rel.d.str()},
                {"relation_expression", rel.expression.str()}};
}

inline Json to_json(const SplitObstruction& ob) {
    Json j = to_json(ob.verdict, ob.ideal);
    j["kind"] = "split_obstruction";
    j["n"] = ob.n;
    j["relation_gcd"] = ob.g.str();
    j["relation_c"] = relation_c(ob.n).str();
    j["relation_d"] = relation_d(ob.n).str();
    return j;
}

inline Json to_json(const NormalForm& nf) {
    Json residues = Json::object();
    for (const auto& [n, r] : nf.residues) residues[std::to_string(n)] = r.str();
    return Json{{"kind", "normal_form"},
                {"basis", "chebyshev"},
                {"a0", nf.a0.str()},
                {"a1", nf.a1.str()},
                {"residues", std::move(residues)},
                {"zero", nf.is_zero()}};
}

inline Json to_json(const RankReport& report) {
    Json entries = Json::array();
    for (const auto& e : report.entries)
        entries.push_back(Json{{"n", e.n},
                               {"c", e.c.str()},
                               {"d", e.d.str()},
                               {"collapses_to", e.n % 2 == 0 ? "S_0" : "S_1"},
                               {"fraction_num", e.reduced.numerator().str()},
                               {"fraction_den", e.reduced.denominator().str()},
                               {"verified", e.verified}});
    return Json{{"kind", "rank_report"},
                {"rank", report.rank},
                {"free_generators", Json::array({"K", "K'"})},
                {"bound", report.bound},
                {"reductions", std::move(entries)}};
}

inline Json to_json(const std::vector<ManifoldProfile>& catalog) {
    Json out = Json::array();
    for (const ManifoldProfile& p : catalog) {
        Json summands = Json::array();
        for (const TorsionSummand& s : p.summands) {
            Json js{{"k", s.k},
                    {"annihilator", s.annihilator.str()},
                    {"identity_verified", s.identity_verified}};
            if (s.type) js["type_k"] = s.type->k;
            summands.push_back(std::move(js));
        }
        out.push_back(Json{{"name", p.name},
                           {"free_rank", p.free_rank},
                           {"torsion_note", p.torsion_note},
                           {"summands", std::move(summands)}});
    }
    return out;
}

}  // namespace skein
