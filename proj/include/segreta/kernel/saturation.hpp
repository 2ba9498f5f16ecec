#pragma once

// Ideal intersection, quotient and saturation.
//
// Intersections and quotients go through a tag variable t placed in an
// elimination block of weight 0, so that t*J + (1-t)*K stays homogeneous in
// the x-grading and Buchberger proceeds degree by degree.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "segreta/kernel/ideal.hpp"

namespace segreta::kernel {

enum class SaturationMethod {
    /// J : f^inf as the stable value of J, (J:f), ((J:f):f), ...
    QuotientChain,
    /// One basis of J + (u - f) in weighted grevlex with u last, divide out
    /// powers of u, substitute u = f.
    Bayer,
};

namespace detail {

/// k[t, x_0..x_{n-1}] eliminating t (weight 0), x-weights copied from `base`.
template <class F>
RingPtr<F> tagged_ring(const Ring<F>& base) {
    std::vector<std::string> names{"_t"};
    std::vector<int> weights{0};
    for (int i = 0; i < base.nvars(); ++i) {
        names.push_back(base.names()[static_cast<std::size_t>(i)]);
        weights.push_back(base.order().weights()[static_cast<std::size_t>(i)]);
    }
    return Ring<F>::create(base.field(), std::move(names), MonomialOrder::elimination(std::move(weights), 1));
}

inline std::vector<int> shift_map(int n, int offset) {
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), offset);
    return m;
}

template <class F>
bool is_constant(const Polynomial<F>& f) {
    return !f.is_zero() && f.lead_monomial().is_one();
}

}  // namespace detail

/// A ∩ B, returned as a reduced basis in A's ring.
template <class F>
Ideal<F> intersect(const Ideal<F>& A, const Ideal<F>& B) {
    require_same_ring(*A.ring(), *B.ring(), "intersect");
    const auto& base = A.ring();
    const int n = base->nvars();
    auto T = detail::tagged_ring(*base);
    const auto into_t = detail::shift_map(n, 1);
    auto t = Polynomial<F>::variable(T, 0);
    auto one_minus_t = Polynomial<F>::constant(T, T->field().one()) - t;

    std::vector<Polynomial<F>> gens;
    for (const auto& a : A.generators()) gens.push_back(t * a.remap(T, into_t));
    for (const auto& b : B.generators()) gens.push_back(one_minus_t * b.remap(T, into_t));
    auto G = groebner_basis<F>(gens, T);

    std::vector<int> back(static_cast<std::size_t>(n + 1));
    back[0] = -1;
    for (int i = 0; i < n; ++i) back[static_cast<std::size_t>(i + 1)] = i;
    std::vector<Polynomial<F>> out;
    for (const auto& g : G.polynomials()) {
        if (g.lead_monomial()[0] != 0) continue;  // t-free iff the lead is t-free
        std::vector<typename Polynomial<F>::Term> terms;
        for (const auto& term : g.terms()) {
            std::vector<int> exps(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) exps[static_cast<std::size_t>(i)] = term.mono[i + 1];
            terms.push_back({Monomial(n, exps), term.coeff});
        }
        out.push_back(Polynomial<F>::from_terms(base, std::move(terms)));
    }
    return ideal_from_basis(groebner_basis<F>(out, base));
}

/// (J : f) = {g : g f in J}, via J ∩ (f) and exact division by f.
template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& J, const Polynomial<F>& f) {
    require_same_ring(*J.ring(), *f.ring(), "ideal_quotient");
    if (f.is_zero() || !f.homogeneous_degree()) throw std::invalid_argument("ideal_quotient: divisor must be a nonzero form");
    if (detail::is_constant(f)) return ideal_from_basis(J.groebner_basis());
    auto meet = intersect(J, Ideal<F>(J.ring(), {f}));
    std::vector<Polynomial<F>> gens;
    for (const auto& g : meet.generators()) {
        auto q = g.divide_exact(f);
        if (!q) throw std::logic_error("ideal_quotient: element of J ∩ (f) not divisible by f");
        gens.push_back(std::move(*q));
    }
    return ideal_from_basis(groebner_basis<F>(gens, J.ring()));
}

/// J : x_var^inf, from a basis in (weighted) grevlex with x_var breaking
/// ties last: for homogeneous g there, x_var divides the lead term only if it
/// divides g.  The result keeps that basis.
template <class F>
Ideal<F> saturate_by_variable(const Ideal<F>& J, int var) {
    const auto& base = J.ring();
    const int n = base->nvars();
    if (var < 0 || var >= n) throw std::out_of_range("saturate_by_variable: variable index out of range");
    if (base->order().elimination_block() != 0) throw std::invalid_argument("saturate_by_variable: elimination orders not supported");
    auto M = base->with_order(MonomialOrder::weighted_grevlex(base->order().weights(), var));

    std::vector<Polynomial<F>> gens;
    for (const auto& g : J.generators()) gens.push_back(g.in_ring(M));
    auto G = groebner_basis<F>(gens, M);

    std::vector<Polynomial<F>> out;
    for (const auto& g : G.polynomials()) {
        const int v = g.lead_monomial()[var];
        if (v == 0) {
            out.push_back(g);
            continue;
        }
        const auto xv = Monomial::variable(n, var, v);
        std::vector<typename Polynomial<F>::Term> terms;
        for (const auto& t : g.terms()) terms.push_back({t.mono / xv, t.coeff});
        out.push_back(Polynomial<F>::from_terms(M, std::move(terms)));
    }
    return ideal_from_basis(groebner_basis<F>(out, M), base);
}

/// J : f^inf.
template <class F>
Ideal<F> saturate_by_element(const Ideal<F>& J, const Polynomial<F>& f, SaturationMethod method = SaturationMethod::Bayer) {
    require_same_ring(*J.ring(), *f.ring(), "saturate");
    if (f.is_zero() || !f.homogeneous_degree()) throw std::invalid_argument("saturate: element must be a nonzero form");
    if (detail::is_constant(f)) return ideal_from_basis(J.groebner_basis());

    if (method == SaturationMethod::QuotientChain) {
        Ideal<F> current = ideal_from_basis(J.groebner_basis());
        for (;;) {
            Ideal<F> next = ideal_quotient(current, f);
            if (ideal_contains(current, next)) return current;
            current = std::move(next);
        }
    }

    if (f.size() == 1) {
        // J : (c x^a)^inf = J : (prod of x_i in the support)^inf
        Ideal<F> current = J;
        const auto& m = f.lead_monomial();
        for (int i = 0; i < m.nvars(); ++i)
            if (m[i] > 0) current = saturate_by_variable(current, i);
        return current;
    }

    const auto& base = J.ring();
    const int n = base->nvars();
    if (n + 1 > kMaxVars) throw std::invalid_argument("saturate: too many variables");
    const int e = *f.graded_degree();
    std::vector<std::string> names = base->names();
    names.push_back("_u");
    std::vector<int> weights = base->order().weights();
    weights.push_back(e);
    auto U = Ring<F>::create(base->field(), std::move(names), MonomialOrder::weighted_grevlex(std::move(weights)));
    const auto into_u = detail::shift_map(n, 0);
    auto u = Polynomial<F>::variable(U, n);
    auto fu = f.remap(U, into_u);

    std::vector<Polynomial<F>> gens;
    for (const auto& g : J.generators()) gens.push_back(g.remap(U, into_u));
    gens.push_back(u - fu);
    auto G = groebner_basis<F>(gens, U);

    std::vector<int> back(static_cast<std::size_t>(n + 1));
    std::iota(back.begin(), back.end(), 0);
    std::vector<Polynomial<F>> out;
    for (const auto& g : G.polynomials()) {
        // Every term of g has u-degree at least that of its lead term.
        const int v = g.lead_monomial()[n];
        Polynomial<F> h = g;
        if (v > 0) h = *g.divide_exact(Polynomial<F>::monomial(U, Monomial::variable(n + 1, n, v), U->field().one()));
        h = h.substitute(n, fu);
        if (h.is_zero()) continue;
        // h is u-free now; drop the extra coordinate.
        std::vector<typename Polynomial<F>::Term> terms;
        for (const auto& term : h.terms()) {
            std::vector<int> exps(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) exps[static_cast<std::size_t>(i)] = term.mono[i];
            terms.push_back({Monomial(n, exps), term.coeff});
        }
        out.push_back(Polynomial<F>::from_terms(base, std::move(terms)));
    }
    return ideal_from_basis(groebner_basis<F>(out, base));
}

/// J : I^inf = ∩_i (J : F_i^inf) over the generators F_i of I.
template <class F>
Ideal<F> saturate(const Ideal<F>& J, const Ideal<F>& I, SaturationMethod method = SaturationMethod::Bayer) {
    require_same_ring(*J.ring(), *I.ring(), "saturate");
    for (const auto& g : I.generators())
        if (detail::is_constant(g)) return ideal_from_basis(J.groebner_basis());

    // J : I^inf only depends on V(I).  For the Bayer route, drop generators
    // whose saturation is implied by another one: repeated generators, and
    // monomials whose support contains the support of another monomial.
    std::vector<Polynomial<F>> needed;
    if (method == SaturationMethod::Bayer) {
        for (const auto& g : I.generators()) {
            bool redundant = false;
            for (const auto& h : I.generators()) {
                if (&h == &g) continue;
                if (g.size() == 1 && h.size() == 1) {
                    auto gm = g.lead_monomial().support_mask(), hm = h.lead_monomial().support_mask();
                    if ((hm & ~gm) == 0 && (hm != gm || &h < &g)) redundant = true;
                } else if (g.monic() == h.monic() && &h < &g) {
                    redundant = true;
                }
                if (redundant) break;
            }
            if (!redundant) needed.push_back(g);
        }
    } else {
        needed = I.generators();
    }

    std::optional<Ideal<F>> acc;
    for (const auto& g : needed) {
        Ideal<F> part = saturate_by_element(J, g, method);
        if (!acc) {
            acc = std::move(part);
        } else if (ideal_contains(part, *acc)) {
            // acc ⊆ part: intersection is acc
        } else if (ideal_contains(*acc, part)) {
            acc = std::move(part);
        } else {
            acc = intersect(*acc, part);
        }
    }
    return std::move(*acc);
}

}  // namespace segreta::kernel
