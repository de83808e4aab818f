#pragma once

#include <algorithm>
#include <cstdint>
#include <list>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "derivation.hpp"
#include "reversing.hpp"
#include "word.hpp"

namespace permexpr {

struct DiagramVertex {
    int id = 0;
    double x = 0;
    double y = 0;
    friend bool operator==(const DiagramVertex&, const DiagramVertex&) = default;
};

struct DiagramEdge {
    enum class Kind : std::uint8_t { H, V, Eps };
    int id = 0;
    int from = 0;  // H: left vertex; V: top vertex; Eps: tail along the path
    int to = 0;
    int label = 0;  // generator index, 0 for eps
    Kind kind = Kind::H;
    friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
};

// One tile of a reversing diagram. old_edges is the consumed frontier segment
// [vertical, eps..., horizontal]; new_edges are the created edges in frontier
// order: type I gets [H(j), H(i), V(j), V(i)] with V(i) the top right edge,
// type II gets [H(j), V(i)], type III a single eps arc.
struct Tile {
    int id = 0;
    TileType type = TileType::III;
    int i = 1;
    int j = 1;
    std::vector<int> old_edges;
    std::vector<int> new_edges;
    std::vector<int> polygon;  // vertex ids around the boundary
    int fused_with = -1;       // digon id fused into this tile (I', I'')
    bool absorbed = false;     // this digon was fused into a hexagon
    friend bool operator==(const Tile&, const Tile&) = default;
};

struct GridDiagram {
    int n = 1;
    ExtendedWord start;
    bool pair_input = false;  // start is bar(u) v
    Word u, v;                // boundary words when pair_input
    Word u_out, v_out;
    std::vector<DiagramVertex> vertices;
    std::vector<DiagramEdge> edges;
    std::vector<Tile> tiles;
    TileCounts counts;
    std::vector<int> initial_left;  // V edges of u, top to bottom (pair input)
    std::vector<int> initial_top;   // H edges of v, left to right (pair input)
    std::vector<int> frontier;      // terminal frontier, path order, eps included
    std::vector<ReversingStep> steps;
    bool compacted = false;
};

namespace detail {

class DiagramBuilder {
public:
    DiagramBuilder(const ExtendedWord& w, long long step_budget) : budget_(step_budget) {
        g_.n = w.strand_count();
        g_.start = w;
        build_initial_path(w);
        run();
        finish(w);
    }

    GridDiagram take() { return std::move(g_); }

private:
    GridDiagram g_;
    std::list<int> frontier_;
    long long budget_;

    DiagramVertex& vertex(int id) { return g_.vertices[static_cast<std::size_t>(id)]; }
    DiagramEdge& edge(int id) { return g_.edges[static_cast<std::size_t>(id)]; }

    int add_vertex(double x, double y) {
        int id = static_cast<int>(g_.vertices.size());
        g_.vertices.push_back(DiagramVertex{id, x, y});
        return id;
    }
    int add_edge(DiagramEdge::Kind kind, int from, int to, int label) {
        int id = static_cast<int>(g_.edges.size());
        g_.edges.push_back(DiagramEdge{id, from, to, label, kind});
        return id;
    }

    void build_initial_path(const ExtendedWord& w) {
        double x = 0, y = 0;
        int prev = add_vertex(0, 0);
        for (const auto& l : w.letters()) {
            if (l.positive) {
                int nv = add_vertex(x + 1, y);
                frontier_.push_back(add_edge(DiagramEdge::Kind::H, prev, nv, l.index));
                prev = nv;
                x += 1;
            } else {
                int nv = add_vertex(x, y - 1);
                frontier_.push_back(add_edge(DiagramEdge::Kind::V, nv, prev, l.index));
                prev = nv;
                y -= 1;
            }
        }
        double min_y = 0;
        for (const auto& v : g_.vertices) min_y = std::min(min_y, v.y);
        for (auto& v : g_.vertices) v.y -= min_y;
    }

    void run() {
        auto cursor = frontier_.begin();
        int cursor_pos = 0;  // letter index of cursor (eps items do not count)
        while (true) {
            // find the leftmost factor bar(s_i) s_j from the cursor on
            auto it = cursor;
            int pos = cursor_pos;
            std::list<int>::iterator h_it;
            bool found = false;
            while (it != frontier_.end()) {
                const DiagramEdge& e = edge(*it);
                if (e.kind == DiagramEdge::Kind::Eps) {
                    ++it;
                    continue;
                }
                if (e.kind == DiagramEdge::Kind::V) {
                    auto scan = std::next(it);
                    while (scan != frontier_.end() && edge(*scan).kind == DiagramEdge::Kind::Eps) ++scan;
                    if (scan != frontier_.end() && edge(*scan).kind == DiagramEdge::Kind::H) {
                        h_it = scan;
                        found = true;
                        break;
                    }
                }
                ++it;
                ++pos;
            }
            if (!found) break;
            if (--budget_ < 0) throw StepBudgetExceeded("reversing exceeded its step budget");
            apply_tile(it, h_it, pos);
            // a new factor can appear no earlier than one letter back
            cursor = it;
            cursor_pos = pos;
            while (cursor != frontier_.begin()) {
                --cursor;
                if (edge(*cursor).kind != DiagramEdge::Kind::Eps) {
                    --cursor_pos;
                    break;
                }
            }
        }
    }

    // it points at the V edge, h_it at the H edge, eps arcs in between.
    void apply_tile(std::list<int>::iterator& it, std::list<int>::iterator h_it, int pos) {
        const DiagramEdge ev = edge(*it);
        const DiagramEdge eh = edge(*h_it);
        int i = ev.label, j = eh.label;
        int vb = ev.to;    // path enters the V edge at its bottom
        int vc = eh.to;    // and leaves the H edge at its right end

        Tile tile;
        tile.id = static_cast<int>(g_.tiles.size());
        tile.i = i;
        tile.j = j;
        tile.old_edges.assign(it, std::next(h_it));
        tile.polygon.push_back(vb);
        tile.polygon.push_back(ev.from);
        for (auto scan = std::next(it); scan != h_it; ++scan) tile.polygon.push_back(edge(*scan).to);
        tile.polygon.push_back(vc);

        auto after = std::next(h_it);
        frontier_.erase(it, after);

        if (i == j) {
            tile.type = TileType::III;
            int arc = add_edge(DiagramEdge::Kind::Eps, vb, vc, 0);
            tile.new_edges = {arc};
            it = frontier_.insert(after, arc);
            ++g_.counts.type_iii;
        } else {
            double bx = vertex(vb).x, by = vertex(vb).y;
            double cx = vertex(vc).x, cy = vertex(vc).y;
            if (i - j == 1 || j - i == 1) {
                tile.type = TileType::I;
                int p = add_vertex((bx + cx) / 2, by);
                int se = add_vertex(cx, by);
                int m = add_vertex(cx, (by + cy) / 2);
                int h1 = add_edge(DiagramEdge::Kind::H, vb, p, j);
                int h2 = add_edge(DiagramEdge::Kind::H, p, se, i);
                int v2 = add_edge(DiagramEdge::Kind::V, m, se, j);
                int v1 = add_edge(DiagramEdge::Kind::V, vc, m, i);
                tile.new_edges = {h1, h2, v2, v1};
                tile.polygon.insert(tile.polygon.end(), {m, se, p});
                it = frontier_.insert(after, h1);
                frontier_.insert(after, h2);
                frontier_.insert(after, v2);
                frontier_.insert(after, v1);
                ++g_.counts.type_i;
            } else {
                tile.type = TileType::II;
                int se = add_vertex(cx, by);
                int h1 = add_edge(DiagramEdge::Kind::H, vb, se, j);
                int v1 = add_edge(DiagramEdge::Kind::V, vc, se, i);
                tile.new_edges = {h1, v1};
                tile.polygon.push_back(se);
                it = frontier_.insert(after, h1);
                frontier_.insert(after, v1);
                ++g_.counts.type_ii;
            }
        }
        g_.steps.push_back(ReversingStep{pos, tile.type, i, j});
        g_.tiles.push_back(std::move(tile));
    }

    void finish(const ExtendedWord& w) {
        g_.frontier.assign(frontier_.begin(), frontier_.end());

        std::vector<int> pos_part, neg_part;
        for (int id : g_.frontier) {
            const DiagramEdge& e = edge(id);
            if (e.kind == DiagramEdge::Kind::H) pos_part.push_back(e.label);
            if (e.kind == DiagramEdge::Kind::V) neg_part.push_back(e.label);
        }
        std::reverse(neg_part.begin(), neg_part.end());
        g_.v_out = Word(g_.n, std::move(pos_part));
        g_.u_out = Word(g_.n, std::move(neg_part));

        // recognize a bar(u) v start: negatives first, then positives
        const auto& letters = w.letters();
        std::size_t k = 0;
        while (k < letters.size() && !letters[k].positive) ++k;
        bool shaped = std::all_of(letters.begin() + static_cast<std::ptrdiff_t>(k), letters.end(),
                                  [](const ExtLetter& l) { return l.positive; });
        if (shaped) {
            g_.pair_input = true;
            std::vector<int> u_letters, v_letters;
            for (std::size_t t = 0; t < k; ++t) u_letters.push_back(letters[t].index);
            std::reverse(u_letters.begin(), u_letters.end());
            for (std::size_t t = k; t < letters.size(); ++t) v_letters.push_back(letters[t].index);
            g_.u = Word(g_.n, std::move(u_letters));
            g_.v = Word(g_.n, std::move(v_letters));
            // initial V edges were created bottom-up: ids 0.. in creation order
            for (std::size_t t = 0; t < k; ++t) g_.initial_left.push_back(static_cast<int>(k - 1 - t));
            for (std::size_t t = k; t < letters.size(); ++t) g_.initial_top.push_back(static_cast<int>(t));
        }
    }
};

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace detail

inline GridDiagram reversing_diagram(const ExtendedWord& w, long long step_budget = kDefaultStepBudget) {
    detail::DiagramBuilder builder(w, step_budget);
    return builder.take();
}

inline GridDiagram reversing_diagram(const Word& u, const Word& v, long long step_budget = kDefaultStepBudget) {
    return reversing_diagram(bar_concat(u, v), step_budget);
}

// Fuse hexagon + digon pairs into I'/I'' tiles, greedily in creation order.
// A digon is eligible for I' when its vertical edge is the top right edge of a
// hexagon, and for I'' when its horizontal edge is the hexagon's first bottom
// edge. The nontrivial tile count is unchanged.
inline GridDiagram compact(const GridDiagram& g) {
    GridDiagram h = g;
    h.compacted = true;
    std::unordered_map<int, std::size_t> hex_by_top_right, hex_by_bottom_left;
    for (std::size_t k = 0; k < h.tiles.size(); ++k) {
        if (h.tiles[k].type != TileType::I) continue;
        hex_by_top_right[h.tiles[k].new_edges[3]] = k;
        hex_by_bottom_left[h.tiles[k].new_edges[0]] = k;
    }
    for (auto& digon : h.tiles) {
        if (digon.type != TileType::III || digon.absorbed) continue;
        int ev = digon.old_edges.front();
        int eh = digon.old_edges.back();
        if (auto it = hex_by_top_right.find(ev); it != hex_by_top_right.end()) {
            Tile& hex = h.tiles[it->second];
            if (hex.fused_with < 0) {
                hex.type = TileType::IPrime;
                hex.fused_with = digon.id;
                digon.absorbed = true;
                --h.counts.type_i;
                --h.counts.type_iii;
                ++h.counts.i_prime;
                continue;
            }
        }
        if (auto it = hex_by_bottom_left.find(eh); it != hex_by_bottom_left.end()) {
            Tile& hex = h.tiles[it->second];
            if (hex.fused_with < 0) {
                hex.type = TileType::IDoublePrime;
                hex.fused_with = digon.id;
                digon.absorbed = true;
                --h.counts.type_i;
                --h.counts.type_iii;
                ++h.counts.i_double_prime;
            }
        }
    }
    return h;
}

inline long long remaining_digons(const GridDiagram& g) {
    long long c = 0;
    for (const auto& t : g.tiles)
        if (t.type == TileType::III && !t.absorbed) ++c;
    return c;
}

// Collapse the eps arcs and digons and sweep the tiles into a derivation from
// u v' to v u', with one step per nontrivial tile.
inline Derivation to_derivation(const GridDiagram& g) {
    if (!g.pair_input)
        throw Error("to_derivation requires a diagram whose start word has the shape bar(u) v");

    detail::Dsu edges_dsu(g.edges.size());
    for (const auto& t : g.tiles)
        if (t.type == TileType::III)
            edges_dsu.unite(t.old_edges.front(), t.old_edges.back());

    auto cls = [&](int e) { return edges_dsu.find(e); };
    auto label_of = [&](int e) { return g.edges[static_cast<std::size_t>(e)].label; };

    std::vector<int> path;
    for (int e : g.initial_left) path.push_back(cls(e));
    for (int e : g.frontier)
        if (g.edges[static_cast<std::size_t>(e)].kind == DiagramEdge::Kind::H) path.push_back(cls(e));

    std::vector<int> target;
    for (int e : g.initial_top) target.push_back(cls(e));
    {
        std::vector<int> right;
        for (int e : g.frontier)
            if (g.edges[static_cast<std::size_t>(e)].kind == DiagramEdge::Kind::V) right.push_back(cls(e));
        target.insert(target.end(), right.rbegin(), right.rend());
    }

    Derivation d;
    {
        std::vector<int> letters;
        letters.reserve(path.size());
        for (int e : path) letters.push_back(label_of(e));
        d.start = Word(g.n, std::move(letters));
    }

    auto side_a = [&](const Tile& t) -> std::vector<int> {
        if (t.type == TileType::II) return {cls(t.old_edges.front()), cls(t.new_edges[0])};
        return {cls(t.old_edges.front()), cls(t.new_edges[0]), cls(t.new_edges[1])};
    };
    auto side_b = [&](const Tile& t) -> std::vector<int> {
        if (t.type == TileType::II) return {cls(t.old_edges.back()), cls(t.new_edges[1])};
        return {cls(t.old_edges.back()), cls(t.new_edges[3]), cls(t.new_edges[2])};
    };

    std::vector<bool> used(g.tiles.size(), false);
    std::size_t remaining = 0;
    for (const auto& t : g.tiles)
        if (t.type != TileType::III) ++remaining;

    while (remaining > 0) {
        bool progressed = false;
        for (std::size_t k = 0; k < g.tiles.size(); ++k) {
            const Tile& t = g.tiles[k];
            if (used[k] || t.type == TileType::III) continue;
            std::vector<int> a = side_a(t);
            auto hit = std::search(path.begin(), path.end(), a.begin(), a.end());
            if (hit == path.end()) continue;
            int pos = static_cast<int>(hit - path.begin());
            RelationKind kind = a.size() == 3 ? RelationKind::type_i(t.i, t.j) : RelationKind::type_ii(t.i, t.j);
            d.steps.push_back(Step{pos, kind});
            std::vector<int> b = side_b(t);
            path.erase(hit, hit + static_cast<std::ptrdiff_t>(a.size()));
            path.insert(path.begin() + pos, b.begin(), b.end());
            used[k] = true;
            --remaining;
            progressed = true;
            break;
        }
        if (!progressed) throw Error("to_derivation: no sweep order found");
    }

    if (path != target) throw Error("to_derivation: sweep did not reach the target boundary");
    return d;
}

// A compacted diagram with no digon left realizes the combinatorial distance
// between its collapsed boundary words u v' and v u'.
inline Certificate certify_digon_free(const GridDiagram& g) {
    if (!g.pair_input)
        throw Error("certify_digon_free requires a diagram built from a word pair");
    Word left = concat(g.u, g.v_out);
    Word top = concat(g.v, g.u_out);
    if (!is_reduced(left) || !is_reduced(top))
        throw NotReduced("certify_digon_free requires reduced boundary words");
    Certificate c;
    c.witness = step_names(to_derivation(g));
    std::vector<StepName> sorted = c.witness;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k + 1 < sorted.size(); ++k)
        if (sorted[k] == sorted[k + 1] && (c.duplicates.empty() || !(c.duplicates.back() == sorted[k])))
            c.duplicates.push_back(sorted[k]);
    c.verdict = remaining_digons(g) == 0 ? Certificate::Verdict::CertifiedOptimal
                                         : Certificate::Verdict::Inconclusive;
    return c;
}

}  // namespace permexpr
