#pragma once

// Independent brute-force signed-tiling solver: enumerate every tile
// placement inside a margin-padded window, solve the exact linear system
// over Z or Q, and return a verifiable certificate. Shares no algebra with
// the Groebner decision path.

#include "sigtile/intlinalg.hpp"
#include "sigtile/tiles.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sigtile {

struct Window {
    std::int64_t x0 = 0, y0 = 0;  // lower-left cell
    std::int64_t w = 0, h = 0;

    bool contains(const Cell& c) const {
        return c.col >= x0 && c.col < x0 + w && c.row >= y0 && c.row < y0 + h;
    }
    std::size_t index_of(const Cell& c) const {
        return static_cast<std::size_t>((c.row - y0) * w + (c.col - x0));
    }
    std::size_t cell_count() const { return static_cast<std::size_t>(w * h); }
};

struct Placement {
    std::size_t tile_index = 0;
    std::int64_t u = 0, v = 0;
};

template <class C>
struct Certificate {
    std::string tile_set_name;
    Window window;
    std::vector<std::pair<Placement, C>> entries;  // weights are nonzero
};

// Every translate of every generator lying fully inside the window, ordered
// by (tile index, u, v).
inline std::vector<Placement> enumerate_placements(const TileSet& tiles, const Window& win) {
    if (win.w < 1 || win.h < 1) throw std::invalid_argument("enumerate_placements: empty window");
    std::vector<Placement> out;
    for (std::size_t t = 0; t < tiles.generators.size(); ++t) {
        std::int64_t c0, c1, r0, r1;
        tiles.generators[t].first.bounds(c0, c1, r0, r1);
        const std::int64_t tw = c1 - c0 + 1, th = r1 - r0 + 1;
        for (std::int64_t u = win.x0; u + tw <= win.x0 + win.w; ++u)
            for (std::int64_t v = win.y0; v + th <= win.y0 + win.h; ++v)
                out.push_back(Placement{t, u, v});
    }
    return out;
}

inline Window window_for(const CellSet& region, std::int64_t margin) {
    std::int64_t c0, c1, r0, r1;
    region.bounds(c0, c1, r0, r1);
    return Window{c0 - margin, r0 - margin, (c1 - c0 + 1) + 2 * margin, (r1 - r0 + 1) + 2 * margin};
}

// Decides exact solvability of the placement system for the region inside
// the padded window. Absence means no solution within this window, not a
// proof that no signed tiling exists.
template <class C>
std::optional<Certificate<C>> oracle_solve(const CellSet& region, const TileSet& tiles,
                                           std::int64_t margin = -1) {
    if (region.empty()) throw std::invalid_argument("oracle_solve: empty region");
    if (margin < 0) margin = tiles.n;
    const CellSet reg = region.normalized();
    const Window win = window_for(reg, margin);
    for (const Cell& c : reg.cells)
        if (!win.contains(c)) throw std::invalid_argument("oracle_solve: region outside window");

    const std::vector<Placement> placements = enumerate_placements(tiles, win);
    std::vector<SparseCol<C>> cols(placements.size());
    for (std::size_t j = 0; j < placements.size(); ++j) {
        const auto& pl = placements[j];
        for (const Cell& c : tiles.generators[pl.tile_index].first.cells) {
            const Cell shifted{c.col + pl.u, c.row + pl.v};
            cols[j].emplace(win.index_of(shifted), C(1));
        }
    }
    std::vector<C> b(win.cell_count(), C(0));
    for (const Cell& c : reg.cells) b[win.index_of(c)] = C(1);

    auto weights = solve_columns<C>(std::move(cols), win.cell_count(), b);
    if (!weights) return std::nullopt;

    Certificate<C> cert;
    cert.tile_set_name = tiles.name;
    cert.window = win;
    for (std::size_t j = 0; j < placements.size(); ++j)
        if ((*weights)[j] != 0) cert.entries.emplace_back(placements[j], (*weights)[j]);
    return cert;
}

// Exact re-summation of the certificate, independent of the solver: the
// weighted cover must be 1 on every region cell and 0 everywhere else.
template <class C>
bool verify_certificate(const Certificate<C>& cert, const TileSet& tiles, const CellSet& region) {
    const CellSet reg = region.normalized();
    std::map<Cell, C> cover;
    for (const auto& [pl, weight] : cert.entries) {
        if (weight == 0) return false;
        if (pl.tile_index >= tiles.generators.size()) return false;
        for (const Cell& c : tiles.generators[pl.tile_index].first.cells) {
            const Cell shifted{c.col + pl.u, c.row + pl.v};
            if (!cert.window.contains(shifted)) return false;
            cover[shifted] += weight;
        }
    }
    for (const Cell& c : reg.cells) {
        auto it = cover.find(c);
        if (it == cover.end() || it->second != 1) return false;
    }
    for (const auto& [cell, total] : cover)
        if (total != 0 && !reg.cells.count(cell)) return false;
    return true;
}

}  // namespace sigtile
