#pragma once

// Signed-tiling decisions: Groebner-membership with a test-monomial search,
// closed-form rectangle and inflated-L predicates, and grid scans comparing
// the two. Groebner bases are cached per (n, plus, domain) for the lifetime
// of the process.

#include "sigtile/groebner.hpp"
#include "sigtile/tiles.hpp"

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace sigtile {

enum class Verdict { Yes, No };
enum class Method { groebner, closed_form, oracle };

inline const char* to_string(Verdict v) { return v == Verdict::Yes ? "yes" : "no"; }
inline const char* to_string(Method m) {
    switch (m) {
        case Method::groebner: return "groebner";
        case Method::closed_form: return "closed_form";
        default: return "oracle";
    }
}

template <class C>
struct Decision {
    Verdict answer = Verdict::No;
    std::optional<Monomial> test_monomial;        // the (alpha, beta) that succeeded
    std::optional<ReductionTrace<C>> trace;       // for the reported test monomial
    Method method = Method::groebner;
    std::int64_t test_bound = 0;                  // search box actually used
};

namespace detail {

template <class C>
Polynomial<C> adapt_domain(const PolyZ& p) {
    if constexpr (coeff_traits<C>::is_field)
        return to_rational(p);
    else
        return p;
}

template <class C>
class BasisCache {
  public:
    std::shared_ptr<const std::vector<Polynomial<C>>> get(int n, bool plus,
                                                          const BuchbergerOptions& opts) {
        const std::pair<int, bool> key{n, plus};
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        auto gens = generator_polys(tile_set(n, plus));
        std::vector<Polynomial<C>> lifted;
        lifted.reserve(gens.size());
        for (const auto& g : gens) lifted.push_back(adapt_domain<C>(g));
        auto basis = std::make_shared<const std::vector<Polynomial<C>>>(buchberger(lifted, opts));
        std::lock_guard<std::mutex> lock(mu_);
        return map_.try_emplace(key, std::move(basis)).first->second;
    }

    static BasisCache& instance() {
        static BasisCache cache;
        return cache;
    }

  private:
    std::mutex mu_;
    std::map<std::pair<int, bool>, std::shared_ptr<const std::vector<Polynomial<C>>>> map_;
};

}  // namespace detail

template <class C>
std::shared_ptr<const std::vector<Polynomial<C>>> cached_tile_basis(
    int n, bool plus, const BuchbergerOptions& opts = {}) {
    return detail::BasisCache<C>::instance().get(n, plus, opts);
}

// Decides whether the region admits a signed tiling by the tile set over the
// chosen coefficient domain: searches test monomials x^a y^b, 0 <= a, b <=
// test_bound (default n), lexicographically, for one that shifts the region
// polynomial into the tile ideal.
template <class C>
Decision<C> signed_tileable(const CellSet& region, const TileSet& tiles,
                            std::int64_t test_bound = -1,
                            const BuchbergerOptions& opts = {}) {
    if (region.empty()) throw std::invalid_argument("signed_tileable: empty region");
    const std::int64_t bound = test_bound < 0 ? tiles.n : test_bound;
    const auto basis = cached_tile_basis<C>(tiles.n, tiles.plus, opts);
    const ReduceMode mode = coeff_traits<C>::is_field ? ReduceMode::D : ReduceMode::E;

    const Polynomial<C> f = detail::adapt_domain<C>(cells_to_poly(region.normalized()));
    Decision<C> dec;
    dec.method = Method::groebner;
    dec.test_bound = bound;

    ReductionTrace<C> tr0 = normal_form(f, *basis, mode);
    if (tr0.remainder.is_zero()) {
        dec.answer = Verdict::Yes;
        dec.test_monomial = Monomial{0, 0};
        dec.trace = std::move(tr0);
        return dec;
    }
    // x^a y^b f lies in the ideal iff x^a y^b NF(f) does, and the normal form
    // is usually far smaller than f.
    const Polynomial<C> r0 = tr0.remainder;
    for (std::int64_t a = 0; a <= bound; ++a) {
        for (std::int64_t b = 0; b <= bound; ++b) {
            if (a == 0 && b == 0) continue;
            const Monomial t{a, b};
            if (normal_form(r0.mul_monomial(t), *basis, mode).remainder.is_zero()) {
                dec.answer = Verdict::Yes;
                dec.test_monomial = t;
                dec.trace = normal_form(f.mul_monomial(t), *basis, mode);
                return dec;
            }
        }
    }
    dec.answer = Verdict::No;
    dec.trace = std::move(tr0);
    return dec;
}

// --- closed-form predicates ----------------------------------------------

// Integer-weight rectangle predicate for T_n / T_n+.
inline bool closed_form_rect(int n, bool plus, std::int64_t p, std::int64_t q) {
    detail::require_even_n(n, 4);
    if (p < 1 || q < 1) throw std::invalid_argument("closed_form_rect: sides must be positive");
    const bool both_even = p % 2 == 0 && q % 2 == 0;
    if (n == 4) {
        if (plus) return both_even;
        return both_even && (p % 4 == 0 || q % 4 == 0);
    }
    const std::int64_t modulus = std::int64_t{n} * (n / 2 - 2);
    const bool odd_case = (p % 2 == 1 && q % modulus == 0) || (q % 2 == 1 && p % modulus == 0);
    if (plus) return both_even || odd_case;
    return (both_even && (p % n == 0 || q % n == 0)) || odd_case;
}

// Integer-weight predicate for factor-inflated L regions under T_n.
inline bool closed_form_inflated(int n, std::int64_t factor) {
    detail::require_even_n(n, 6);
    if (factor < 1) throw std::invalid_argument("closed_form_inflated: factor must be positive");
    return factor % 2 == 0 || factor % (n / 2 - 2) == 0;
}

// Rational-weight (equivalently complex-weight) rectangle predicate.
inline bool barnes_closed_form(int n, bool plus, std::int64_t p, std::int64_t q) {
    detail::require_even_n(n, 4);
    if (p < 1 || q < 1) throw std::invalid_argument("barnes_closed_form: sides must be positive");
    if (n == 4) {
        if (!plus)
            throw std::invalid_argument("barnes_closed_form: no rational-weight predicate for T4");
        return p % 2 == 0 && q % 2 == 0;
    }
    if (plus) return p % 2 == 0 || q % 2 == 0;
    return p % n == 0 || q % n == 0;
}

// Integer-weight membership of (k-2) * f_rect for rectangles with a side
// divisible by n.
inline bool scaled_membership(int n, std::int64_t p, std::int64_t q,
                              const BuchbergerOptions& opts = {}) {
    detail::require_even_n(n, 6);
    if (p % n != 0 && q % n != 0)
        throw std::invalid_argument("scaled_membership: neither side is divisible by n");
    const auto basis = cached_tile_basis<Int>(n, false, opts);
    const PolyZ f = cells_to_poly(rect_region(q, p)).scale(Int(n / 2 - 2));
    return ideal_contains(f, *basis);
}

// --- grid scans -----------------------------------------------------------

struct ScanRow {
    std::int64_t p = 0, q = 0;
    bool groebner_answer = false;
    bool closed_answer = false;
    bool agree = false;
    std::optional<Monomial> test_monomial;
    std::string error;  // nonempty if the cell hit a resource cap
};

struct ScanResult {
    std::vector<ScanRow> rows;
    std::size_t mismatches = 0;
    std::size_t errors = 0;
};

namespace detail {

inline void parallel_cells(std::size_t total, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || total <= 1) {
        for (std::size_t i = 0; i < total; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= total) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs - 1; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace detail

// Compares the Groebner decision with the matching closed form on the grid
// 1 <= p <= q <= max. Rows are emitted in deterministic (p, q) order.
template <class C>
ScanResult scan_rects(int n, bool plus, std::int64_t max, int jobs = 1,
                      const BuchbergerOptions& opts = {}) {
    detail::require_even_n(n, 4);
    if (max < 1) throw std::invalid_argument("scan_rects: max must be positive");
    const TileSet ts = tile_set(n, plus);
    cached_tile_basis<C>(n, plus, opts);  // warm the cache before going parallel

    std::vector<std::pair<std::int64_t, std::int64_t>> cells;
    for (std::int64_t p = 1; p <= max; ++p)
        for (std::int64_t q = p; q <= max; ++q) cells.emplace_back(p, q);

    ScanResult result;
    result.rows.resize(cells.size());
    detail::parallel_cells(cells.size(), jobs, [&](std::size_t i) {
        const auto [p, q] = cells[i];
        ScanRow& row = result.rows[i];
        row.p = p;
        row.q = q;
        row.closed_answer = coeff_traits<C>::is_field ? barnes_closed_form(n, plus, p, q)
                                                      : closed_form_rect(n, plus, p, q);
        try {
            // width q, height p: rows of the rectangle correspond to y-powers
            const auto dec = signed_tileable<C>(rect_region(q, p), ts, -1, opts);
            row.groebner_answer = dec.answer == Verdict::Yes;
            row.test_monomial = dec.test_monomial;
            row.agree = row.groebner_answer == row.closed_answer;
        } catch (const ResourceCapError& e) {
            row.error = e.what();
            row.agree = false;
        }
    });
    for (const auto& row : result.rows) {
        if (!row.error.empty())
            ++result.errors;
        else if (!row.agree)
            ++result.mismatches;
    }
    return result;
}

}  // namespace sigtile
