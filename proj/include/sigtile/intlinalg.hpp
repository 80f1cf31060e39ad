#pragma once

// Exact sparse linear solvers for A w = b with A given by columns: over Z a
// column-style Hermite elimination with unimodular tracking (deciding
// membership of b in the column lattice), over Q ordinary sparse elimination.
// Both return a particular solution or nothing.

#include "sigtile/numbers.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace sigtile {

template <class C>
using SparseCol = std::map<std::size_t, C>;

namespace detail {

inline Int rounded_div(const Int& a, const Int& b) {
    Int q, r;
    euclid_divmod(a, b, q, r);
    Int ab = b < 0 ? Int(-b) : b;
    if (2 * r > ab) q += (b > 0 ? 1 : -1);
    return q;
}

// col -= q * other, acting on the full stacked (data + tracking) vector.
template <class C>
void axpy_col(SparseCol<C>& col, const C& q, const SparseCol<C>& other) {
    if (q == 0) return;
    for (const auto& [row, val] : other) {
        auto it = col.find(row);
        if (it == col.end()) {
            C nv = -q * val;
            if (nv != 0) col.emplace(row, std::move(nv));
        } else {
            it->second -= q * val;
            if (it->second == 0) col.erase(it);
        }
    }
}

template <class C>
C col_at(const SparseCol<C>& col, std::size_t row) {
    auto it = col.find(row);
    return it == col.end() ? C(0) : it->second;
}

}  // namespace detail

// Columns are stacked vectors: data rows [0, nrows) describe A, tracking
// rows [nrows, nrows + ncols) start as the identity, so every column always
// equals (A u ; u) for some integer/rational vector u.
template <class C>
std::optional<std::vector<C>> solve_columns(std::vector<SparseCol<C>> cols,
                                            std::size_t nrows,
                                            const std::vector<C>& b) {
    const std::size_t ncols = cols.size();
    for (std::size_t j = 0; j < ncols; ++j) cols[j][nrows + j] = C(1);

    std::vector<bool> active(ncols, true);
    // pivot column index per data row, or npos
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pivot(nrows, npos);

    for (std::size_t r = 0; r < nrows; ++r) {
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < ncols; ++j)
            if (active[j] && cols[j].count(r)) nz.push_back(j);
        if (nz.empty()) continue;

        if constexpr (coeff_traits<C>::is_field) {
            // smallest support first keeps the elimination sparse
            std::size_t best = nz[0];
            for (std::size_t j : nz)
                if (cols[j].size() < cols[best].size()) best = j;
            const C pv = detail::col_at(cols[best], r);
            for (std::size_t j : nz) {
                if (j == best) continue;
                detail::axpy_col(cols[j], detail::col_at(cols[j], r) / pv, cols[best]);
            }
            pivot[r] = best;
            active[best] = false;
        } else {
            // gcd chain: repeatedly reduce against the smallest entry
            while (nz.size() > 1) {
                std::size_t best = nz[0];
                for (std::size_t j : nz) {
                    const C a = detail::col_at(cols[j], r);
                    const C m = detail::col_at(cols[best], r);
                    if ((a < 0 ? C(-a) : a) < (m < 0 ? C(-m) : m)) best = j;
                }
                std::vector<std::size_t> still;
                const C m = detail::col_at(cols[best], r);
                for (std::size_t j : nz) {
                    if (j == best) {
                        still.push_back(j);
                        continue;
                    }
                    detail::axpy_col(cols[j], detail::rounded_div(detail::col_at(cols[j], r), m),
                                     cols[best]);
                    if (cols[j].count(r)) still.push_back(j);
                }
                if (still.size() == 1 && still[0] == best) {
                    nz = std::move(still);
                    break;
                }
                nz = std::move(still);
            }
            const std::size_t piv = nz[0];
            if (detail::col_at(cols[piv], r) < 0) {
                SparseCol<C> negated;
                for (const auto& [row, val] : cols[piv]) negated.emplace(row, -val);
                cols[piv] = std::move(negated);
            }
            pivot[r] = piv;
            active[piv] = false;
        }
    }

    // forward substitution against the echelon columns
    std::map<std::size_t, C> res;
    for (std::size_t r = 0; r < nrows; ++r)
        if (b[r] != 0) res[r] = b[r];
    std::vector<C> weights(ncols, C(0));
    for (std::size_t r = 0; r < nrows; ++r) {
        const C cur = detail::col_at(res, r);
        if (pivot[r] == npos) {
            if (cur != 0) return std::nullopt;
            continue;
        }
        const SparseCol<C>& pc = cols[pivot[r]];
        const C pv = detail::col_at(pc, r);
        C z;
        if constexpr (coeff_traits<C>::is_field) {
            z = cur / pv;
        } else {
            if (cur % pv != 0) return std::nullopt;
            z = cur / pv;
        }
        if (z == 0) continue;
        for (const auto& [row, val] : pc) {
            if (row < nrows) {
                auto it = res.find(row);
                if (it == res.end()) {
                    C nv = -z * val;
                    if (nv != 0) res.emplace(row, std::move(nv));
                } else {
                    it->second -= z * val;
                    if (it->second == 0) res.erase(it);
                }
            } else {
                weights[row - nrows] += z * val;
            }
        }
    }
    if (!res.empty()) return std::nullopt;
    return weights;
}

}  // namespace sigtile
