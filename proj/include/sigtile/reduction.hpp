#pragma once

// D- and E-reduction steps and traced normal forms modulo a list of
// polynomials. A D-step cancels a monomial outright (head coefficient must
// divide); an E-step over Z applies Euclidean division to the coefficient,
// leaving a remainder in [0, head coefficient). Every normal form carries a
// trace: input = sum(quotients[i] * basis[i]) + remainder, exactly.

#include "sigtile/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sigtile {

enum class ReduceMode { D, E };

template <class C>
struct ReductionStep {
    std::size_t basis_index;
    C coeff;        // coefficient of the quotient term applied to the basis element
    Monomial shift; // monomial of that quotient term
};

template <class C>
struct ReductionTrace {
    std::vector<ReductionStep<C>> steps;
    std::vector<Polynomial<C>> quotients;
    Polynomial<C> remainder;
};

template <class C>
bool trace_identity_holds(const Polynomial<C>& input,
                          const std::vector<Polynomial<C>>& basis,
                          const ReductionTrace<C>& trace) {
    if (trace.quotients.size() != basis.size()) return false;
    Polynomial<C> acc = trace.remainder;
    for (std::size_t i = 0; i < basis.size(); ++i) acc += trace.quotients[i] * basis[i];
    return acc == input;
}

// One D-reduction step of f modulo p at the largest eligible monomial.
template <class C>
std::optional<Polynomial<C>> d_reduce_step(const Polynomial<C>& f, const Polynomial<C>& p) {
    if (p.is_zero()) throw std::domain_error("d_reduce_step: zero reducer");
    const auto lead = p.leading();
    for (const auto& [m, c] : f.terms()) {
        if (!divides(lead.ht, m) || !coeff_traits<C>::divides(lead.hc, c)) continue;
        Polynomial<C> r = f;
        r.add_scaled_shifted(-coeff_traits<C>::exact_div(c, lead.hc), mono_div(m, lead.ht), p);
        return r;
    }
    return std::nullopt;
}

// One E-reduction step of f modulo p (integer coefficients; p must have a
// positive head coefficient). Applies the Euclidean quotient q != 0 of the
// term coefficient by the head coefficient.
inline std::optional<PolyZ> e_reduce_step(const PolyZ& f, const PolyZ& p) {
    if (p.is_zero()) throw std::domain_error("e_reduce_step: zero reducer");
    const auto lead = p.leading();
    if (lead.hc <= 0) throw std::domain_error("e_reduce_step: reducer head coefficient must be positive");
    for (const auto& [m, c] : f.terms()) {
        if (!divides(lead.ht, m)) continue;
        Int q, r;
        euclid_divmod(c, lead.hc, q, r);
        if (q == 0) continue;
        PolyZ out = f;
        out.add_scaled_shifted(-q, mono_div(m, lead.ht), p);
        return out;
    }
    return std::nullopt;
}

namespace detail {

// Picks the quotient for one candidate (monomial, coefficient, reducer) or
// returns false. `sign` accounts for reducers normalized to positive head.
template <class C>
bool step_quotient(ReduceMode mode, const C& c, const C& hc, C& q) {
    if (mode == ReduceMode::D || coeff_traits<C>::is_field) {
        if (!coeff_traits<C>::divides(hc, c)) return false;
        q = coeff_traits<C>::exact_div(c, hc);
        return true;
    }
    if constexpr (!coeff_traits<C>::is_field) {
        C hcp = hc < 0 ? C(-hc) : hc;
        C quo, rem;
        euclid_divmod(c, hcp, quo, rem);
        if (quo == 0) return false;
        q = hc < 0 ? C(-quo) : quo;
        return true;
    }
    return false;
}

}  // namespace detail

// Fully reduces f modulo G in the given mode, always attacking the largest
// reducible monomial; among eligible reducers the first in `order` (by
// default: index order) wins. Returns the full trace.
template <class C>
ReductionTrace<C> normal_form(const Polynomial<C>& f,
                              const std::vector<Polynomial<C>>& G,
                              ReduceMode mode,
                              const std::vector<std::size_t>* order = nullptr) {
    ReductionTrace<C> trace;
    trace.quotients.assign(G.size(), Polynomial<C>{});
    std::vector<Leading<C>> leads;
    leads.reserve(G.size());
    for (const auto& g : G) {
        if (g.is_zero()) throw std::domain_error("normal_form: zero basis element");
        leads.push_back(g.leading());
    }
    std::vector<std::size_t> idx;
    if (order) {
        idx = *order;
        if (idx.size() != G.size()) throw std::invalid_argument("normal_form: order size mismatch");
    } else {
        idx.resize(G.size());
        for (std::size_t i = 0; i < G.size(); ++i) idx[i] = i;
    }

    Polynomial<C> work = f;
    std::optional<Monomial> bound;
    for (;;) {
        auto it = bound ? work.terms().lower_bound(*bound) : work.terms().begin();
        bool stepped = false;
        while (it != work.terms().end()) {
            const Monomial m = it->first;
            const C c = it->second;
            for (std::size_t i : idx) {
                if (!divides(leads[i].ht, m)) continue;
                C q;
                if (!detail::step_quotient(mode, c, leads[i].hc, q)) continue;
                const Monomial t = mono_div(m, leads[i].ht);
                work.add_scaled_shifted(-q, t, G[i]);
                trace.quotients[i].add_term(t, q);
                trace.steps.push_back({i, q, t});
                bound = m;
                stepped = true;
                break;
            }
            if (stepped) break;
            ++it;
        }
        if (!stepped) break;
    }
    trace.remainder = std::move(work);
    return trace;
}

// True when some monomial of f admits a reduction step against some element of G.
template <class C>
bool reducible(const Polynomial<C>& f, const std::vector<Polynomial<C>>& G, ReduceMode mode) {
    for (const auto& g : G) {
        if (g.is_zero()) continue;
        const auto lead = g.leading();
        for (const auto& [m, c] : f.terms()) {
            if (!divides(lead.ht, m)) continue;
            C q;
            if (detail::step_quotient(mode, c, lead.hc, q)) return true;
        }
    }
    return false;
}

}  // namespace sigtile
