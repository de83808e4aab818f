#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "grid_diagram.hpp"

namespace permexpr {

namespace detail {

inline std::string fmt(double x) {
    double r = std::round(x * 100) / 100;
    if (r == 0) r = 0;  // avoid "-0"
    std::ostringstream os;
    os << r;
    return os.str();
}

inline const char* tile_fill(TileType t) {
    switch (t) {
        case TileType::I: return "#d9e4f5";
        case TileType::II: return "#eeeeee";
        case TileType::IPrime: return "#cfe8d8";
        case TileType::IDoublePrime: return "#e8d8cf";
        case TileType::III: return "#fdf3d8";
    }
    return "#ffffff";
}

}  // namespace detail

inline std::string to_dot(const GridDiagram& g) {
    std::ostringstream os;
    os << "digraph reversing {\n";
    os << "  rankdir=LR;\n  node [shape=point, width=0.06];\n";
    for (const auto& v : g.vertices)
        os << "  v" << v.id << " [pos=\"" << detail::fmt(v.x) << "," << detail::fmt(-v.y) << "!\"];\n";
    for (const auto& e : g.edges) {
        os << "  v" << e.from << " -> v" << e.to;
        if (e.kind == DiagramEdge::Kind::Eps)
            os << " [style=dotted, label=\"eps\"]";
        else
            os << " [label=\"s" << e.label << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

inline std::string to_svg(const GridDiagram& g) {
    const double s = 56.0, margin = 40.0;
    double maxx = 0, maxy = 0;
    for (const auto& v : g.vertices) {
        maxx = std::max(maxx, v.x);
        maxy = std::max(maxy, v.y);
    }
    auto px = [&](double x) { return margin + x * s; };
    auto py = [&](double y) { return margin + y * s; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fmt(maxx * s + 2 * margin)
       << "\" height=\"" << detail::fmt(maxy * s + 2 * margin) << "\">\n";
    os << "<defs><marker id=\"arrow\" markerWidth=\"7\" markerHeight=\"7\" refX=\"6\" refY=\"2.5\" orient=\"auto\">"
          "<path d=\"M0,0 L6,2.5 L0,5 z\" fill=\"#444\"/></marker></defs>\n";

    for (const auto& t : g.tiles) {
        if (t.type == TileType::III && !t.absorbed) continue;  // drawn as an arc, not a face
        if (t.absorbed) continue;                              // covered by its fused hexagon
        os << "<polygon points=\"";
        for (std::size_t k = 0; k < t.polygon.size(); ++k) {
            const auto& v = g.vertices[static_cast<std::size_t>(t.polygon[k])];
            os << (k ? " " : "") << detail::fmt(px(v.x)) << "," << detail::fmt(py(v.y));
        }
        os << "\" fill=\"" << detail::tile_fill(t.type) << "\" stroke=\"none\"/>\n";
        double cx = 0, cy = 0;
        for (int vid : t.polygon) {
            cx += g.vertices[static_cast<std::size_t>(vid)].x;
            cy += g.vertices[static_cast<std::size_t>(vid)].y;
        }
        cx /= static_cast<double>(t.polygon.size());
        cy /= static_cast<double>(t.polygon.size());
        os << "<text x=\"" << detail::fmt(px(cx)) << "\" y=\"" << detail::fmt(py(cy))
           << "\" font-size=\"10\" fill=\"#666\" text-anchor=\"middle\">" << tile_type_name(t.type) << "</text>\n";
    }

    for (const auto& e : g.edges) {
        const auto& a = g.vertices[static_cast<std::size_t>(e.from)];
        const auto& b = g.vertices[static_cast<std::size_t>(e.to)];
        if (e.kind == DiagramEdge::Kind::Eps) {
            os << "<path d=\"M" << detail::fmt(px(a.x)) << "," << detail::fmt(py(a.y)) << " Q"
               << detail::fmt(px(a.x)) << "," << detail::fmt(py(b.y)) << " " << detail::fmt(px(b.x)) << ","
               << detail::fmt(py(b.y)) << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"3,3\"/>\n";
            continue;
        }
        os << "<line x1=\"" << detail::fmt(px(a.x)) << "\" y1=\"" << detail::fmt(py(a.y)) << "\" x2=\""
           << detail::fmt(px(b.x)) << "\" y2=\"" << detail::fmt(py(b.y))
           << "\" stroke=\"#444\" marker-end=\"url(#arrow)\"/>\n";
        double lx = (a.x + b.x) / 2, ly = (a.y + b.y) / 2;
        if (e.kind == DiagramEdge::Kind::H)
            os << "<text x=\"" << detail::fmt(px(lx)) << "\" y=\"" << detail::fmt(py(ly) - 4)
               << "\" font-size=\"11\" text-anchor=\"middle\">s" << e.label << "</text>\n";
        else
            os << "<text x=\"" << detail::fmt(px(lx) - 6) << "\" y=\"" << detail::fmt(py(ly) + 4)
               << "\" font-size=\"11\" text-anchor=\"end\">s" << e.label << "</text>\n";
    }
    for (const auto& v : g.vertices)
        os << "<circle cx=\"" << detail::fmt(px(v.x)) << "\" cy=\"" << detail::fmt(py(v.y))
           << "\" r=\"2\" fill=\"#222\"/>\n";
    os << "</svg>\n";
    return os.str();
}

inline std::string to_tikz(const GridDiagram& g) {
    std::ostringstream os;
    os << "\\begin{tikzpicture}[>=stealth, scale=1.2]\n";
    for (const auto& t : g.tiles) {
        if (t.type == TileType::III || t.absorbed) continue;
        os << "\\fill[blue!8] ";
        for (int vid : t.polygon) {
            const auto& v = g.vertices[static_cast<std::size_t>(vid)];
            os << "(" << detail::fmt(v.x) << "," << detail::fmt(-v.y) << ") -- ";
        }
        os << "cycle;\n";
    }
    for (const auto& e : g.edges) {
        const auto& a = g.vertices[static_cast<std::size_t>(e.from)];
        const auto& b = g.vertices[static_cast<std::size_t>(e.to)];
        if (e.kind == DiagramEdge::Kind::Eps) {
            os << "\\draw[dotted] (" << detail::fmt(a.x) << "," << detail::fmt(-a.y) << ") .. controls ("
               << detail::fmt(a.x) << "," << detail::fmt(-b.y) << ") .. (" << detail::fmt(b.x) << ","
               << detail::fmt(-b.y) << ");\n";
            continue;
        }
        const char* anchor = e.kind == DiagramEdge::Kind::H ? "above" : "left";
        os << "\\draw[->] (" << detail::fmt(a.x) << "," << detail::fmt(-a.y) << ") -- node[" << anchor
           << ", font=\\scriptsize] {$s_{" << e.label << "}$} (" << detail::fmt(b.x) << "," << detail::fmt(-b.y)
           << ");\n";
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace permexpr
