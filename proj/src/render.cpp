#include "rookmaze/render.hpp"

#include <sstream>

namespace rookmaze {

RenderFormat render_format_from_string(const std::string& s) {
    if (s == "ascii") return RenderFormat::Ascii;
    if (s == "svg") return RenderFormat::Svg;
    throw DomainError("unsupported render format '" + s + "'");
}

namespace {

char glyph(Piece p) {
    switch (p) {
        case Piece::Empty: return '.';
        case Piece::Vertical: return '|';
        case Piece::Horizontal: return '-';
        case Piece::X: return 'x';
        case Piece::O: return 'o';
    }
    return '?';
}

std::string render_ascii(const Maze& m) {
    PieceGrid g = m.pieces();
    std::string border = "+" + std::string(m.n(), '-') + "+\n";
    std::ostringstream out;
    out << border;
    for (int r = 1; r <= m.m(); ++r) {
        out << '|';
        for (int c = 1; c <= m.n(); ++c) out << glyph(g.at(r, c));
        out << "|\n";
    }
    out << border;
    return out.str();
}

constexpr int kCell = 40;

std::string render_svg(const Maze& m) {
    const int w = m.n() * kCell, h = m.m() * kCell;
    auto cx = [](int col) { return (col - 1) * kCell + kCell / 2; };
    auto cy = [](int row) { return (row - 1) * kCell + kCell / 2; };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w + 2 << "\" height=\"" << h + 2
        << "\" viewBox=\"-1 -1 " << w + 2 << ' ' << h + 2 << "\">\n";
    out << "<g stroke=\"#999\" stroke-width=\"1\" fill=\"none\">\n";
    for (int r = 0; r <= m.m(); ++r)
        out << "<line x1=\"0\" y1=\"" << r * kCell << "\" x2=\"" << w << "\" y2=\"" << r * kCell << "\"/>\n";
    for (int c = 0; c <= m.n(); ++c)
        out << "<line x1=\"" << c * kCell << "\" y1=\"0\" x2=\"" << c * kCell << "\" y2=\"" << h << "\"/>\n";
    out << "</g>\n<g stroke=\"#e07000\" stroke-width=\"3\" fill=\"none\">\n";
    for (const Wall& wall : m.walls()) {
        const Cell first = wall.path.front(), last = wall.path.back();
        out << "<polyline class=\"wall\" data-kind=\"" << to_string(wall.kind) << "\" points=\"";
        if (wall.kind == WallKind::I || wall.kind == WallKind::III)
            out << cx(first.col) << ",0";
        else
            out << w << ',' << cy(first.row);
        for (Cell c : wall.path) out << ' ' << cx(c.col) << ',' << cy(c.row);
        if (wall.kind == WallKind::I || wall.kind == WallKind::IV)
            out << " 0," << cy(last.row);
        else
            out << ' ' << cx(last.col) << ',' << h;
        out << "\"/>\n";
    }
    out << "</g>\n<g font-family=\"monospace\" font-size=\"20\" text-anchor=\"middle\">\n";
    for (const Wall& wall : m.walls())
        for (auto [cell, mk] : wall.corners())
            out << "<text x=\"" << cx(cell.col) << "\" y=\"" << cy(cell.row) + 7 << "\">"
                << (mk == Marker::X ? 'x' : 'o') << "</text>\n";
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace

std::string render(const Maze& m, RenderFormat format) {
    require_valid(m);
    return format == RenderFormat::Ascii ? render_ascii(m) : render_svg(m);
}

}  // namespace rookmaze
