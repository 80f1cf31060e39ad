#pragma once

// S- and G-polynomials, the Groebner basis criterion (S-polynomials
// D-reduce to zero, G-polynomials top-D-reducible), Buchberger completion
// over Z and Q, ideal membership, and ideal equality.

#include "sigtile/reduction.hpp"

#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace sigtile {

// Exceeding the completion step cap is a resource failure, never a verdict.
class ResourceCapError : public std::runtime_error {
  public:
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

inline std::size_t default_step_cap() {
    if (const char* env = std::getenv("SIGTILE_STEP_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 100000;
}

struct BuchbergerOptions {
    std::size_t step_cap = default_step_cap();
};

template <class C>
Polynomial<C> s_poly(const Polynomial<C>& g1, const Polynomial<C>& g2) {
    if (g1.is_zero() || g2.is_zero()) throw std::domain_error("s_poly: zero input");
    const auto l1 = g1.leading();
    const auto l2 = g2.leading();
    const Monomial t = mono_lcm(l1.ht, l2.ht);
    const C a = coeff_traits<C>::head_lcm(l1.hc, l2.hc);
    Polynomial<C> s;
    s.add_scaled_shifted(coeff_traits<C>::exact_div(a, l1.hc), mono_div(t, l1.ht), g1);
    s.add_scaled_shifted(-coeff_traits<C>::exact_div(a, l2.hc), mono_div(t, l2.ht), g2);
    return s;
}

// Bezout combination with head coefficient gcd(a1, a2); one coefficient is
// chosen zero whenever a head coefficient divides the other, making the
// G-polynomial a plain multiple of one input.
inline PolyZ g_poly(const PolyZ& g1, const PolyZ& g2) {
    if (g1.is_zero() || g2.is_zero()) throw std::domain_error("g_poly: zero input");
    const auto l1 = g1.leading();
    const auto l2 = g2.leading();
    const Monomial t = mono_lcm(l1.ht, l2.ht);
    Int c1, c2;
    if (l2.hc % l1.hc == 0) {
        c1 = l1.hc < 0 ? -1 : 1;
        c2 = 0;
    } else if (l1.hc % l2.hc == 0) {
        c1 = 0;
        c2 = l2.hc < 0 ? -1 : 1;
    } else {
        Int g;
        ext_gcd(l1.hc, l2.hc, g, c1, c2);
    }
    PolyZ out;
    out.add_scaled_shifted(c1, mono_div(t, l1.ht), g1);
    out.add_scaled_shifted(c2, mono_div(t, l2.ht), g2);
    return out;
}

enum class PairKind { S, G };

template <class C>
struct FailingPair {
    std::size_t i;
    std::size_t j;
    PairKind kind;
    Polynomial<C> combination;  // the unreduced S- (or G-) polynomial
};

template <class C>
struct BasisReport {
    std::vector<Polynomial<C>> basis;
    bool is_groebner = false;
    std::optional<FailingPair<C>> failing_pair;
};

namespace detail {

template <class C>
bool top_d_reducible(const Polynomial<C>& f, const std::vector<Polynomial<C>>& G) {
    if (f.is_zero()) return true;
    const auto lf = f.leading();
    for (const auto& g : G) {
        const auto lg = g.leading();
        if (divides(lg.ht, lf.ht) && coeff_traits<C>::divides(lg.hc, lf.hc)) return true;
    }
    return false;
}

inline bool needs_g_poly(const Int& a1, const Int& a2) {
    return a1 % a2 != 0 && a2 % a1 != 0;
}
inline bool needs_g_poly(const Rat&, const Rat&) { return false; }

}  // namespace detail

template <class C>
BasisReport<C> is_groebner(const std::vector<Polynomial<C>>& G) {
    if (G.empty()) throw std::invalid_argument("is_groebner: empty basis");
    for (const auto& g : G)
        if (g.is_zero()) throw std::invalid_argument("is_groebner: zero basis element");
    BasisReport<C> report;
    report.basis = G;
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            Polynomial<C> s = s_poly(G[i], G[j]);
            if (!normal_form(s, G, ReduceMode::D).remainder.is_zero()) {
                report.failing_pair = FailingPair<C>{i, j, PairKind::S, std::move(s)};
                return report;
            }
            if constexpr (!coeff_traits<C>::is_field) {
                if (detail::needs_g_poly(G[i].leading().hc, G[j].leading().hc)) {
                    Polynomial<C> g = g_poly(G[i], G[j]);
                    if (!detail::top_d_reducible(g, G)) {
                        report.failing_pair = FailingPair<C>{i, j, PairKind::G, std::move(g)};
                        return report;
                    }
                }
            }
        }
    }
    report.is_groebner = true;
    return report;
}

// Scales basis elements to the preferred head form: positive head
// coefficient over Z, monic over Q.
inline void normalize_heads(std::vector<PolyZ>& basis) {
    for (auto& g : basis)
        if (!g.is_zero() && g.leading().hc < 0) g = -g;
}
inline void normalize_heads(std::vector<PolyQ>& basis) {
    for (auto& g : basis)
        if (!g.is_zero()) g = g.scale(Rat(1) / g.leading().hc);
}

template <class C>
std::vector<Polynomial<C>> buchberger(const std::vector<Polynomial<C>>& generators,
                                      const BuchbergerOptions& opts = {}) {
    for (const auto& g : generators)
        if (g.is_zero()) throw std::invalid_argument("buchberger: zero generator");
    if (generators.empty()) throw std::invalid_argument("buchberger: empty generator list");

    std::vector<Polynomial<C>> basis = generators;

    struct PairEntry {
        Monomial lcm;
        std::size_t i, j;
        bool operator<(const PairEntry& o) const {
            Ordering c = cmp(lcm, o.lcm);
            if (c != Ordering::Equal) return c == Ordering::Less;
            return std::tie(i, j) < std::tie(o.i, o.j);
        }
    };
    std::set<PairEntry> queue;
    auto enqueue_with = [&](std::size_t upto) {
        for (std::size_t i = 0; i < upto; ++i)
            queue.insert({mono_lcm(basis[i].leading().ht, basis[upto].leading().ht), i, upto});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) enqueue_with(j);

    auto consider = [&](Polynomial<C>&& candidate) {
        auto rem = normal_form(candidate, basis, ReduceMode::D).remainder;
        if (rem.is_zero()) return;
        basis.push_back(std::move(rem));
        enqueue_with(basis.size() - 1);
    };

    std::size_t steps = 0;
    while (!queue.empty()) {
        if (++steps > opts.step_cap)
            throw ResourceCapError("buchberger: step cap of " + std::to_string(opts.step_cap) +
                                   " pair treatments exceeded");
        const PairEntry pr = *queue.begin();
        queue.erase(queue.begin());
        const auto li = basis[pr.i].leading();
        const auto lj = basis[pr.j].leading();
        if constexpr (coeff_traits<C>::is_field) {
            // product criterion: coprime leading monomials reduce to zero
            if (pr.lcm == li.ht * lj.ht) continue;
        }
        consider(s_poly(basis[pr.i], basis[pr.j]));
        if constexpr (!coeff_traits<C>::is_field) {
            if (detail::needs_g_poly(li.hc, lj.hc)) consider(g_poly(basis[pr.i], basis[pr.j]));
        }
    }

    // Inter-reduce: bring every element to normal form against the others,
    // so the returned basis carries no internally reducible terms.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<Polynomial<C>> others;
            others.reserve(basis.size() - 1);
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            if (others.empty()) break;
            auto rem = normal_form(basis[i], others, ReduceMode::D).remainder;
            if (rem == basis[i]) continue;
            changed = true;
            if (rem.is_zero()) {
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                --i;
            } else {
                basis[i] = std::move(rem);
            }
        }
    }

    normalize_heads(basis);
    auto report = is_groebner(basis);
    if (!report.is_groebner)
        throw std::logic_error("buchberger: completion finished but the criterion re-check failed");
    return basis;
}

// Membership of f in the ideal spanned by a verified Groebner basis:
// E-reduction over Z, field reduction over Q.
template <class C>
bool ideal_contains(const Polynomial<C>& f, const std::vector<Polynomial<C>>& groebner_basis) {
    const ReduceMode mode = coeff_traits<C>::is_field ? ReduceMode::D : ReduceMode::E;
    return normal_form(f, groebner_basis, mode).remainder.is_zero();
}

template <class C>
bool ideal_equal(const std::vector<Polynomial<C>>& G1,
                 const std::vector<Polynomial<C>>& G2,
                 const BuchbergerOptions& opts = {}) {
    const auto B1 = buchberger(G1, opts);
    const auto B2 = buchberger(G2, opts);
    for (const auto& g : G1)
        if (!ideal_contains(g, B2)) return false;
    for (const auto& g : G2)
        if (!ideal_contains(g, B1)) return false;
    return true;
}

}  // namespace sigtile
