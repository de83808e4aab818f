#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "derivation.hpp"
#include "families.hpp"
#include "grid_diagram.hpp"
#include "invariants.hpp"
#include "word.hpp"

namespace permexpr {

using nlohmann::json;

// Derivations serialize with 1-based positions and a direction tag: "LR" when
// the pattern leads with the smaller index. The step letters are recovered by
// replaying, so the payload stays minimal.
inline json to_json(const Derivation& d) {
    json steps = json::array();
    for (const auto& s : d.steps) {
        steps.push_back(json{{"pos", s.pos + 1},
                             {"kind", s.kind.type == RelationType::I ? "I" : "II"},
                             {"dir", s.kind.i < s.kind.j ? "LR" : "RL"}});
    }
    return json{{"n", d.start.strand_count()}, {"start", d.start.str()}, {"steps", steps}};
}

inline Derivation derivation_from_json(const json& j) {
    Derivation d;
    d.start = Word::parse(j.at("n").get<int>(), j.at("start").get<std::string>());
    Word w = d.start;
    std::size_t index = 0;
    for (const auto& js : j.at("steps")) {
        int pos = js.at("pos").get<int>() - 1;
        std::string kind_tag = js.at("kind").get<std::string>();
        std::string dir = js.value("dir", "");
        int span = kind_tag == "I" ? 3 : 2;
        if (pos < 0 || pos + span > w.length())
            throw ReplayMismatch(index, "step " + std::to_string(index) + " out of range");
        int a = w.letter(pos), b = w.letter(pos + 1);
        RelationKind kind;
        try {
            kind = kind_tag == "I" ? RelationKind::type_i(a, b) : RelationKind::type_ii(a, b);
        } catch (const Error& e) {
            throw ReplayMismatch(index, "step " + std::to_string(index) + ": " + e.what());
        }
        if (!dir.empty() && dir != (a < b ? "LR" : "RL"))
            throw ReplayMismatch(index, "step " + std::to_string(index) + ": direction tag does not match letters");
        w = apply_relation(w, pos, kind);  // PatternMismatch surfaces for type I tails
        d.steps.push_back(Step{pos, kind});
        ++index;
    }
    return d;
}

inline json to_json(const StepName& s) {
    if (std::holds_alternative<Name3>(s)) {
        const auto& t = std::get<Name3>(s).v;
        return json::array({t[0], t[1], t[2]});
    }
    const auto& q = std::get<Name22>(s);
    return json::array({json::array({q.a.p, q.a.q}), json::array({q.b.p, q.b.q})});
}

inline StepName step_name_from_json(const json& j) {
    if (j.size() == 3 && j[0].is_number()) return Name3(j[0].get<int>(), j[1].get<int>(), j[2].get<int>());
    if (j.size() == 2 && j[0].is_array())
        return Name22(Name2(j[0][0].get<int>(), j[0][1].get<int>()), Name2(j[1][0].get<int>(), j[1][1].get<int>()));
    throw Error("malformed step name");
}

inline json to_json(const Certificate& c) {
    json witness = json::array(), duplicates = json::array();
    for (const auto& s : c.witness) witness.push_back(to_json(s));
    for (const auto& s : c.duplicates) duplicates.push_back(to_json(s));
    return json{{"verdict", c.optimal() ? "CertifiedOptimal" : "Inconclusive"},
                {"witness", witness},
                {"duplicates", duplicates}};
}

inline Certificate certificate_from_json(const json& j) {
    Certificate c;
    std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "CertifiedOptimal")
        c.verdict = Certificate::Verdict::CertifiedOptimal;
    else if (verdict == "Inconclusive")
        c.verdict = Certificate::Verdict::Inconclusive;
    else
        throw Error("unknown verdict: " + verdict);
    for (const auto& s : j.at("witness")) c.witness.push_back(step_name_from_json(s));
    for (const auto& s : j.at("duplicates")) c.duplicates.push_back(step_name_from_json(s));
    return c;
}

inline json to_json(const NameSequence& s) {
    json names = json::array();
    for (const auto& m : s.names) names.push_back(json::array({m.p, m.q}));
    return json{{"n", s.n}, {"names", names}};
}

inline NameSequence name_sequence_from_json(const json& j) {
    NameSequence s;
    s.n = j.at("n").get<int>();
    for (const auto& m : j.at("names")) s.names.emplace_back(m[0].get<int>(), m[1].get<int>());
    return s;
}

inline json to_json(const TileCounts& c) {
    return json{{"I", c.type_i},
                {"II", c.type_ii},
                {"III", c.type_iii},
                {"I'", c.i_prime},
                {"I''", c.i_double_prime},
                {"nontrivial", c.nontrivial()}};
}

inline TileType tile_type_from_name(const std::string& s) {
    if (s == "I") return TileType::I;
    if (s == "II") return TileType::II;
    if (s == "III") return TileType::III;
    if (s == "I'") return TileType::IPrime;
    if (s == "I''") return TileType::IDoublePrime;
    throw Error("unknown tile type: " + s);
}

inline json to_json(const GridDiagram& g) {
    json vertices = json::array();
    for (const auto& v : g.vertices) vertices.push_back(json{{"id", v.id}, {"x", v.x}, {"y", v.y}});
    json edges = json::array();
    for (const auto& e : g.edges) {
        const char* kind = e.kind == DiagramEdge::Kind::H ? "h" : e.kind == DiagramEdge::Kind::V ? "v" : "eps";
        edges.push_back(json{{"id", e.id}, {"from", e.from}, {"to", e.to}, {"label", e.label}, {"kind", kind}});
    }
    json tiles = json::array();
    for (const auto& t : g.tiles) {
        tiles.push_back(json{{"id", t.id},
                             {"type", tile_type_name(t.type)},
                             {"i", t.i},
                             {"j", t.j},
                             {"old", t.old_edges},
                             {"new", t.new_edges},
                             {"polygon", t.polygon},
                             {"fused_with", t.fused_with},
                             {"absorbed", t.absorbed}});
    }
    json steps = json::array();
    for (const auto& s : g.steps)
        steps.push_back(json{{"pos", s.pos + 1}, {"type", tile_type_name(s.type)}, {"i", s.i}, {"j", s.j}});
    return json{{"n", g.n},
                {"start", g.start.str()},
                {"pair", g.pair_input},
                {"u", g.u.str()},
                {"v", g.v.str()},
                {"u_out", g.u_out.str()},
                {"v_out", g.v_out.str()},
                {"vertices", vertices},
                {"edges", edges},
                {"tiles", tiles},
                {"counts", to_json(g.counts)},
                {"initial_left", g.initial_left},
                {"initial_top", g.initial_top},
                {"frontier", g.frontier},
                {"steps", steps},
                {"compacted", g.compacted}};
}

inline GridDiagram diagram_from_json(const json& j) {
    GridDiagram g;
    g.n = j.at("n").get<int>();
    g.start = ExtendedWord::parse(g.n, j.at("start").get<std::string>());
    g.pair_input = j.at("pair").get<bool>();
    g.u = Word::parse(g.n, j.at("u").get<std::string>());
    g.v = Word::parse(g.n, j.at("v").get<std::string>());
    g.u_out = Word::parse(g.n, j.at("u_out").get<std::string>());
    g.v_out = Word::parse(g.n, j.at("v_out").get<std::string>());
    for (const auto& jv : j.at("vertices"))
        g.vertices.push_back(DiagramVertex{jv.at("id").get<int>(), jv.at("x").get<double>(), jv.at("y").get<double>()});
    for (const auto& je : j.at("edges")) {
        std::string kind = je.at("kind").get<std::string>();
        DiagramEdge e;
        e.id = je.at("id").get<int>();
        e.from = je.at("from").get<int>();
        e.to = je.at("to").get<int>();
        e.label = je.at("label").get<int>();
        e.kind = kind == "h" ? DiagramEdge::Kind::H : kind == "v" ? DiagramEdge::Kind::V : DiagramEdge::Kind::Eps;
        g.edges.push_back(e);
    }
    for (const auto& jt : j.at("tiles")) {
        Tile t;
        t.id = jt.at("id").get<int>();
        t.type = tile_type_from_name(jt.at("type").get<std::string>());
        t.i = jt.at("i").get<int>();
        t.j = jt.at("j").get<int>();
        t.old_edges = jt.at("old").get<std::vector<int>>();
        t.new_edges = jt.at("new").get<std::vector<int>>();
        t.polygon = jt.at("polygon").get<std::vector<int>>();
        t.fused_with = jt.at("fused_with").get<int>();
        t.absorbed = jt.at("absorbed").get<bool>();
        g.tiles.push_back(std::move(t));
    }
    for (const auto& js : j.at("steps")) {
        ReversingStep s;
        s.pos = js.at("pos").get<int>() - 1;
        s.type = tile_type_from_name(js.at("type").get<std::string>());
        s.i = js.at("i").get<int>();
        s.j = js.at("j").get<int>();
        g.steps.push_back(s);
    }
    const json& c = j.at("counts");
    g.counts.type_i = c.at("I").get<long long>();
    g.counts.type_ii = c.at("II").get<long long>();
    g.counts.type_iii = c.at("III").get<long long>();
    g.counts.i_prime = c.at("I'").get<long long>();
    g.counts.i_double_prime = c.at("I''").get<long long>();
    g.initial_left = j.at("initial_left").get<std::vector<int>>();
    g.initial_top = j.at("initial_top").get<std::vector<int>>();
    g.frontier = j.at("frontier").get<std::vector<int>>();
    g.compacted = j.at("compacted").get<bool>();
    return g;
}

inline json to_json(const StepCountReport& r) {
    return json{{"label", r.label},
                {"p", r.p},
                {"formula", r.formula},
                {"steps_total", r.steps_total},
                {"steps_nontrivial", r.steps_nontrivial},
                {"counts", to_json(r.counts)},
                {"terminal_ok", r.terminal_ok},
                {"expected_terminal", r.expected_terminal},
                {"actual_terminal", r.actual_terminal},
                {"ok", r.ok()}};
}

inline json to_json(const QuarticReport& r) {
    return json{{"l", r.l},
                {"formula", r.formula},
                {"compl", r.engine_nontrivial},
                {"total", r.engine_total},
                {"counts", to_json(r.counts)},
                {"opening_type_ii", r.opening_type_ii},
                {"claimed_opening_type_ii", r.claimed_opening_type_ii},
                {"dc_applications", r.dc_applications},
                {"terminal_ok", r.terminal_ok},
                {"digon_free_compacted", r.digon_free_compacted},
                {"ok", r.ok()}};
}

}  // namespace permexpr
