#pragma once

// Tile and region geometry: the four ribbon L n-omino orientations (plus the
// 2x2 square for the plus families), their reference Groebner bases, the
// auxiliary signed tiles B and D, inflated L regions, rectangles, and the
// region text format. Cell lists are the source of truth; the closed-form
// polynomials are asserted against them at construction time.

#include "sigtile/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sigtile {

struct Cell {
    std::int64_t col = 0;
    std::int64_t row = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct CellSet {
    std::set<Cell> cells;

    bool empty() const { return cells.empty(); }
    std::size_t size() const { return cells.size(); }
    void insert(std::int64_t col, std::int64_t row) { cells.insert(Cell{col, row}); }

    // Bounding box as [min_col, max_col] x [min_row, max_row].
    void bounds(std::int64_t& min_col, std::int64_t& max_col,
                std::int64_t& min_row, std::int64_t& max_row) const {
        if (cells.empty()) throw std::domain_error("bounds of empty cell set");
        min_col = max_col = cells.begin()->col;
        min_row = max_row = cells.begin()->row;
        for (const Cell& c : cells) {
            min_col = std::min(min_col, c.col);
            max_col = std::max(max_col, c.col);
            min_row = std::min(min_row, c.row);
            max_row = std::max(max_row, c.row);
        }
    }

    CellSet translated(std::int64_t dc, std::int64_t dr) const {
        CellSet out;
        for (const Cell& c : cells) out.insert(c.col + dc, c.row + dr);
        return out;
    }

    // Translates so that min column = 0 and min row = 0.
    CellSet normalized() const {
        std::int64_t c0, c1, r0, r1;
        bounds(c0, c1, r0, r1);
        return translated(-c0, -r0);
    }

    friend bool operator==(const CellSet&, const CellSet&) = default;
};

// Ribbon check: no two cells share a diagonal row - col = const.
inline bool is_ribbon(const CellSet& cs) {
    std::set<std::int64_t> diagonals;
    for (const Cell& c : cs.cells)
        if (!diagonals.insert(c.row - c.col).second) return false;
    return true;
}

inline PolyZ cells_to_poly(const CellSet& cs) {
    PolyZ p;
    for (const Cell& c : cs.cells) {
        if (c.col < 0 || c.row < 0)
            throw std::domain_error("cells_to_poly: cell set not translated into the first quadrant");
        p.add_term(Monomial{c.col, c.row}, Int(1));
    }
    return p;
}

// 1 + v + ... + v^(m-1) in the chosen variable.
inline PolyZ geom_sum_x(std::int64_t m) {
    PolyZ p;
    for (std::int64_t j = 0; j < m; ++j) p.add_term(Monomial{j, 0}, Int(1));
    return p;
}
inline PolyZ geom_sum_y(std::int64_t m) {
    PolyZ p;
    for (std::int64_t j = 0; j < m; ++j) p.add_term(Monomial{0, j}, Int(1));
    return p;
}

namespace detail {

inline void require_even_n(int n, int minimum) {
    if (n < minimum || n % 2 != 0)
        throw std::invalid_argument("n must be even and at least " + std::to_string(minimum) +
                                    ", got " + std::to_string(n));
}

}  // namespace detail

// --- generator polynomials (closed forms) ------------------------------

inline PolyZ h1(int k) { return geom_sum_y(2 * k - 1) + PolyZ::variable_x(); }
inline PolyZ h2(int k) {
    return PolyZ(Int(1), Monomial{0, 2 * k - 2}) + geom_sum_y(2 * k - 1).mul_monomial(Monomial{1, 0});
}
inline PolyZ h3(int k) { return geom_sum_x(2 * k - 1) + PolyZ::variable_y(); }
inline PolyZ h4(int k) {
    return geom_sum_x(2 * k - 1).mul_monomial(Monomial{0, 1}) + PolyZ(Int(1), Monomial{2 * k - 2, 0});
}
inline PolyZ h5() { return parse_polynomial<Int>("x*y + x + y + 1"); }

// --- generator cell geometry -------------------------------------------

inline CellSet cells_h1(int k) {
    CellSet cs;
    for (int j = 0; j <= 2 * k - 2; ++j) cs.insert(0, j);
    cs.insert(1, 0);
    return cs;
}
inline CellSet cells_h2(int k) {
    CellSet cs;
    for (int j = 0; j <= 2 * k - 2; ++j) cs.insert(1, j);
    cs.insert(0, 2 * k - 2);
    return cs;
}
inline CellSet cells_h3(int k) {
    CellSet cs;
    for (int j = 0; j <= 2 * k - 2; ++j) cs.insert(j, 0);
    cs.insert(0, 1);
    return cs;
}
inline CellSet cells_h4(int k) {
    CellSet cs;
    for (int j = 0; j <= 2 * k - 2; ++j) cs.insert(j, 1);
    cs.insert(2 * k - 2, 0);
    return cs;
}
inline CellSet cells_h5() {
    CellSet cs;
    cs.insert(0, 0);
    cs.insert(1, 0);
    cs.insert(0, 1);
    cs.insert(1, 1);
    return cs;
}

inline std::vector<PolyZ> ribbon_L_generators(int n) {
    detail::require_even_n(n, 4);
    const int k = n / 2;
    const CellSet geo[4] = {cells_h1(k), cells_h2(k), cells_h3(k), cells_h4(k)};
    const PolyZ closed[4] = {h1(k), h2(k), h3(k), h4(k)};
    std::vector<PolyZ> out;
    for (int i = 0; i < 4; ++i) {
        if (static_cast<int>(geo[i].size()) != n)
            throw std::logic_error("ribbon_L_generators: wrong cell count");
        if (!is_ribbon(geo[i]))
            throw std::logic_error("ribbon_L_generators: orientation is not a ribbon tile");
        PolyZ p = cells_to_poly(geo[i]);
        if (p != closed[i])
            throw std::logic_error("ribbon_L_generators: geometry disagrees with the closed form");
        out.push_back(std::move(p));
    }
    return out;
}

struct TileSet {
    std::string name;
    int n = 0;
    int k = 0;
    bool plus = false;
    std::vector<std::pair<CellSet, PolyZ>> generators;
};

inline TileSet tile_set(int n, bool plus) {
    detail::require_even_n(n, 4);
    const int k = n / 2;
    TileSet ts;
    ts.name = "T" + std::to_string(n) + (plus ? "+" : "");
    ts.n = n;
    ts.k = k;
    ts.plus = plus;
    const CellSet geo[4] = {cells_h1(k), cells_h2(k), cells_h3(k), cells_h4(k)};
    auto polys = ribbon_L_generators(n);
    for (int i = 0; i < 4; ++i) ts.generators.emplace_back(geo[i], polys[i]);
    if (plus) {
        CellSet sq = cells_h5();
        PolyZ p = cells_to_poly(sq);
        if (p != h5()) throw std::logic_error("tile_set: 2x2 square disagrees with closed form");
        ts.generators.emplace_back(std::move(sq), std::move(p));
    }
    return ts;
}

inline std::vector<PolyZ> generator_polys(const TileSet& ts) {
    std::vector<PolyZ> out;
    out.reserve(ts.generators.size());
    for (const auto& [cells, poly] : ts.generators) out.push_back(poly);
    return out;
}

// --- reference Groebner bases ------------------------------------------

inline PolyZ c1(int k) {
    PolyZ p = geom_sum_y(k + 1);
    for (int j = 1; j <= k - 1; ++j) p.add_term(Monomial{j, 0}, Int(1));
    const Int f((k - 1) / 2);
    p.add_term(Monomial{1, 1}, f);
    p.add_term(Monomial{0, 0}, -f);
    return p;
}
inline PolyZ c2(int k) { return c1(k).swap_xy(); }
inline PolyZ c3() { return parse_polynomial<Int>("x^2*y + x*y - x - 1"); }
inline PolyZ c4() { return parse_polynomial<Int>("x*y^2 + x*y - y - 1"); }
inline PolyZ c5(int k) {
    PolyZ p;
    p.add_term(Monomial{1, 1}, Int(k - 2));
    p.add_term(Monomial{0, 0}, Int(-(k - 2)));
    return p;
}

inline PolyZ d1() { return parse_polynomial<Int>("y^2 + 2*y + 1"); }
inline PolyZ d2(int k) {
    PolyZ p;
    p.add_term(Monomial{0, 1}, Int((k - 2) * (k - 1) - 1));
    p.add_term(Monomial{1, 0}, Int(1));
    p.add_term(Monomial{0, 0}, Int((k - 2) * (k - 1)));
    return p;
}
inline PolyZ d3(int k) {
    PolyZ p;
    p.add_term(Monomial{0, 1}, Int(k * (k - 2)));
    p.add_term(Monomial{0, 0}, Int(k * (k - 2)));
    return p;
}

inline std::vector<PolyZ> reference_basis(int n, bool plus) {
    detail::require_even_n(n, 4);
    const int k = n / 2;
    if (plus) {
        if (n == 4) return {d1(), parse_polynomial<Int>("x - y")};
        return {d1(), d2(k), d3(k)};
    }
    if (n == 4)
        return {parse_polynomial<Int>("x^2 + x + y + 1"), parse_polynomial<Int>("y^2 + y + x + 1")};
    if (n == 6)
        return {parse_polynomial<Int>("x^3 + x^2 + x + y^2 + y + 1"),
                parse_polynomial<Int>("y^3 + y^2 + y + x^2 + x + 1"),
                parse_polynomial<Int>("x*y - 1")};
    return {c1(k), c2(k), c3(), c4(), c5(k)};
}

// --- auxiliary signed tiles --------------------------------------------

struct AuxTiles {
    PolyZ B;
    PolyZ D;
};

inline AuxTiles aux_tiles(int n) {
    detail::require_even_n(n, 6);
    const int k = n / 2;
    AuxTiles t;
    t.B = parse_polynomial<Int>("x*y - 1");
    t.D = h1(k).mul_monomial(Monomial{0, 1}) - c4();
    PolyZ bar_form = geom_sum_y(n) - t.B.mul_monomial(Monomial{0, 1});
    if (t.D != bar_form)
        throw std::logic_error("aux_tiles: D disagrees with its bar-minus-shifted-B form");
    return t;
}

// --- regions ------------------------------------------------------------

inline CellSet rect_region(std::int64_t w, std::int64_t h) {
    if (w < 1 || h < 1) throw std::invalid_argument("rect_region: sides must be positive");
    CellSet cs;
    for (std::int64_t i = 0; i < w; ++i)
        for (std::int64_t j = 0; j < h; ++j) cs.insert(i, j);
    return cs;
}

// The L n-omino (horizontal arm of n-1 cells, one extra cell above its left
// end) with every cell replaced by a factor x factor block.
inline CellSet inflated_L_region(int n, std::int64_t factor) {
    detail::require_even_n(n, 4);
    if (factor < 1) throw std::invalid_argument("inflated_L_region: factor must be positive");
    CellSet cs;
    for (std::int64_t col = 0; col < (n - 1) * factor; ++col)
        for (std::int64_t row = 0; row < factor; ++row) cs.insert(col, row);
    for (std::int64_t col = 0; col < factor; ++col)
        for (std::int64_t row = factor; row < 2 * factor; ++row) cs.insert(col, row);
    if (cs.size() != static_cast<std::size_t>(n) * factor * factor)
        throw std::logic_error("inflated_L_region: wrong cell count");
    return cs;
}

// --- region text format: one `col row` pair per line, `#` comments -------

inline CellSet read_region(std::istream& in) {
    CellSet cs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::int64_t col, row;
        if (!(ss >> col)) continue;  // blank or comment-only line
        if (!(ss >> row))
            throw std::invalid_argument("region line " + std::to_string(lineno) +
                                        ": expected `col row`");
        std::string extra;
        if (ss >> extra)
            throw std::invalid_argument("region line " + std::to_string(lineno) +
                                        ": trailing content");
        cs.insert(col, row);
    }
    return cs;
}

inline CellSet read_region_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open region file: " + path);
    return read_region(in);
}

inline void write_region(std::ostream& out, const CellSet& cs) {
    for (const Cell& c : cs.cells) out << c.col << " " << c.row << "\n";
}

// Region specs accepted by the CLI: `rect:WxH`, `inflatedL:N:FACTOR`, or
// `file:PATH` (a bare path works too).
inline CellSet parse_region_spec(const std::string& spec) {
    if (spec.rfind("rect:", 0) == 0) {
        const std::string body = spec.substr(5);
        auto x = body.find('x');
        if (x == std::string::npos)
            throw std::invalid_argument("region spec `" + spec + "`: expected rect:WxH");
        try {
            std::int64_t w = std::stoll(body.substr(0, x));
            std::int64_t h = std::stoll(body.substr(x + 1));
            return rect_region(w, h);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("region spec `" + spec + "`: expected rect:WxH");
        }
    }
    if (spec.rfind("inflatedL:", 0) == 0) {
        const std::string body = spec.substr(10);
        auto colon = body.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("region spec `" + spec + "`: expected inflatedL:N:FACTOR");
        try {
            int n = std::stoi(body.substr(0, colon));
            std::int64_t factor = std::stoll(body.substr(colon + 1));
            return inflated_L_region(n, factor);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("region spec `" + spec + "`: expected inflatedL:N:FACTOR");
        }
    }
    if (spec.rfind("file:", 0) == 0) return read_region_file(spec.substr(5));
    return read_region_file(spec);
}

}  // namespace sigtile
