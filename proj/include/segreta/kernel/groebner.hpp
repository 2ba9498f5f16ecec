#pragma once

// Buchberger's algorithm with the Gebauer-Moeller installation of both
// Buchberger criteria and the sugar-normal selection strategy.

#include <cstddef>
#include <deque>
#include <map>
#include <span>
#include <type_traits>
#include <vector>

#include "segreta/kernel/polynomial.hpp"

namespace segreta::kernel {

struct GroebnerStats {
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
    std::size_t pairs_skipped = 0;
};

/// Reduced Groebner basis: monic, auto-reduced, sorted by increasing lead monomial.
template <class F>
class GroebnerBasis {
   public:
    GroebnerBasis(RingPtr<F> ring, std::vector<Polynomial<F>> basis) : ring_(std::move(ring)), basis_(std::move(basis)) {}

    const RingPtr<F>& ring() const noexcept { return ring_; }
    const std::vector<Polynomial<F>>& polynomials() const noexcept { return basis_; }
    std::size_t size() const noexcept { return basis_.size(); }
    bool is_zero_ideal() const noexcept { return basis_.empty(); }
    bool is_unit_ideal() const noexcept { return basis_.size() == 1 && basis_.front().lead_monomial().is_one(); }

    std::vector<Monomial> lead_monomials() const {
        std::vector<Monomial> out;
        out.reserve(basis_.size());
        for (const auto& g : basis_) out.push_back(g.lead_monomial());
        return out;
    }

    /// Unique remainder of f modulo the basis.  Throws RingMismatch.
    Polynomial<F> normal_form(const Polynomial<F>& f) const;
    bool contains(const Polynomial<F>& f) const { return normal_form(f).is_zero(); }

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return a.ring_->compatible(*b.ring_) && a.basis_ == b.basis_;
    }

   private:
    RingPtr<F> ring_;
    std::vector<Polynomial<F>> basis_;
};

/// Reduced Groebner basis of the ideal generated by `generators` in their
/// common ring (and its order).  Zero generators are ignored.
template <class F>
GroebnerBasis<F> groebner_basis(std::span<const Polynomial<F>> generators, const RingPtr<F>& ring,
                                GroebnerStats* stats = nullptr);

namespace detail {

/// Reduction of a term list against a set of polynomials.  Over Q the work is
/// done on primitive integer polynomials and the result is exact only when
/// `exact` is set; otherwise it is a nonzero rational multiple.
template <class F>
class Reducer {
   public:
    using Term = typename Polynomial<F>::Term;

    explicit Reducer(const Ring<F>& ring) : ring_(&ring) {}

    void add(const Polynomial<F>* g) { reducers_.push_back(g); }
    void clear() { reducers_.clear(); }

    const Polynomial<F>* find(const Monomial& m, const Polynomial<F>* skip = nullptr) const {
        for (const auto* g : reducers_)
            if (g != skip && g->lead_monomial().divides(m)) return g;
        return nullptr;
    }

    /// Top reduction only (full == false) or complete reduction.
    std::vector<Term> reduce(std::vector<Term> work, bool full, const Polynomial<F>* skip = nullptr,
                             bool exact = true) const {
        if constexpr (std::is_same_v<F, RationalField>)
            return reduce_integral(std::move(work), full, skip, exact);
        const auto& K = ring_->field();
        std::vector<Term> done;
        std::size_t pos = 0;
        while (pos < work.size()) {
            const Term& lt = work[pos];
            const Polynomial<F>* g = find(lt.mono, skip);
            if (g == nullptr) {
                if (!full) break;
                done.push_back(lt);
                ++pos;
                continue;
            }
            Monomial shift = lt.mono / g->lead_monomial();
            auto c = K.div(lt.coeff, g->lead_coeff());
            work = Polynomial<F>::sub_scaled(std::move(work), pos, c, shift, g->terms(), *ring_);
            pos = 0;
        }
        if (done.empty()) {
            if (pos == 0) return work;
            return {work.begin() + static_cast<std::ptrdiff_t>(pos), work.end()};
        }
        done.insert(done.end(), work.begin() + static_cast<std::ptrdiff_t>(pos), work.end());
        return done;
    }

   private:
    static constexpr int kContentInterval = 64;

    struct ITerm {
        Monomial mono;
        mpz_class c;
    };
    using IPoly = std::vector<ITerm>;

    static IPoly integral(const std::vector<Term>& terms, std::size_t from, mpq_class* scale) {
        mpz_class den = 1;
        for (std::size_t i = from; i < terms.size(); ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), terms[i].coeff.get_den_mpz_t());
        IPoly out;
        out.reserve(terms.size() - from);
        for (std::size_t i = from; i < terms.size(); ++i) {
            mpz_class c;
            mpz_divexact(c.get_mpz_t(), den.get_mpz_t(), terms[i].coeff.get_den_mpz_t());
            c *= terms[i].coeff.get_num();
            out.push_back({terms[i].mono, std::move(c)});
        }
        if (scale) *scale = den;
        return out;
    }

    static mpz_class content(const IPoly& a, const IPoly& b, std::size_t from) {
        mpz_class g = 0;
        for (const auto* p : {&a, &b})
            for (std::size_t i = (p == &b ? from : 0); i < p->size(); ++i) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), (*p)[i].c.get_mpz_t());
                if (g == 1) return g;
            }
        return g;
    }

    const IPoly& integral_of(const Polynomial<F>* g) const {
        auto it = cache_.find(g);
        if (it != cache_.end()) return it->second;
        IPoly p = integral(g->terms(), 0, nullptr);
        IPoly none;
        mpz_class c = content(p, none, 0);
        if (c != 1)
            for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
        return cache_.emplace(g, std::move(p)).first->second;
    }

    std::vector<Term> reduce_integral(std::vector<Term> input, bool full, const Polynomial<F>* skip, bool exact) const {
        const auto& ord = ring_->order();
        mpq_class scale;  // work = scale * input
        IPoly work = integral(input, 0, &scale), done, next;
        std::size_t pos = 0;
        mpz_class a, b, h;
        int steps = 0;
        while (pos < work.size()) {
            const Polynomial<F>* g = find(work[pos].mono, skip);
            if (g == nullptr) {
                if (!full) break;
                done.push_back(std::move(work[pos]));
                ++pos;
                continue;
            }
            const IPoly& gi = integral_of(g);
            mpz_gcd(h.get_mpz_t(), work[pos].c.get_mpz_t(), gi[0].c.get_mpz_t());
            mpz_divexact(a.get_mpz_t(), work[pos].c.get_mpz_t(), h.get_mpz_t());
            mpz_divexact(b.get_mpz_t(), gi[0].c.get_mpz_t(), h.get_mpz_t());
            const Monomial shift = work[pos].mono / g->lead_monomial();
            const bool scaled = b != 1;

            // next = b * work[pos+1..] - a * shift * gi[1..]
            next.clear();
            next.reserve(work.size() - pos + gi.size());
            std::size_t i = pos + 1, j = 1;
            Monomial shifted;
            if (j < gi.size()) shifted = gi[j].mono * shift;
            while (i < work.size() || j < gi.size()) {
                int cmp;
                if (i >= work.size()) {
                    cmp = -1;
                } else if (j >= gi.size()) {
                    cmp = 1;
                } else {
                    auto r = ord.compare(work[i].mono, shifted);
                    cmp = r > 0 ? 1 : r < 0 ? -1 : 0;
                }
                if (cmp > 0) {
                    if (scaled) work[i].c *= b;
                    next.push_back(std::move(work[i++]));
                    continue;
                }
                mpz_class v;
                mpz_mul(v.get_mpz_t(), a.get_mpz_t(), gi[j].c.get_mpz_t());
                if (cmp == 0) {
                    if (scaled) work[i].c *= b;
                    mpz_sub(v.get_mpz_t(), work[i].c.get_mpz_t(), v.get_mpz_t());
                    ++i;
                } else {
                    mpz_neg(v.get_mpz_t(), v.get_mpz_t());
                }
                if (sgn(v) != 0) next.push_back({shifted, std::move(v)});
                if (++j < gi.size()) shifted = gi[j].mono * shift;
            }
            std::swap(work, next);
            pos = 0;
            if (scaled) {
                for (auto& t : done) t.c *= b;
                scale *= b;
            }
            if (++steps % kContentInterval == 0) {
                mpz_class c = content(done, work, 0);
                if (c > 1) {
                    for (auto& t : done) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
                    for (auto& t : work) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
                    scale /= c;
                }
            }
        }
        for (std::size_t i = pos; i < work.size(); ++i) done.push_back(std::move(work[i]));
        std::vector<Term> out;
        out.reserve(done.size());
        if (exact) {
            for (auto& t : done) out.push_back({t.mono, mpq_class(t.c) / scale});
        } else {
            IPoly none;
            mpz_class c = content(done, none, 0);
            for (auto& t : done) {
                if (c > 1) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
                out.push_back({t.mono, mpq_class(t.c)});
            }
        }
        return out;
    }

    const Ring<F>* ring_;
    std::vector<const Polynomial<F>*> reducers_;
    mutable std::map<const Polynomial<F>*, IPoly> cache_;
};

}  // namespace detail

template <class F>
Polynomial<F> GroebnerBasis<F>::normal_form(const Polynomial<F>& f) const {
    require_same_ring(*ring_, *f.ring(), "normal_form");
    detail::Reducer<F> reducer(*ring_);
    for (const auto& g : basis_) reducer.add(&g);
    return Polynomial<F>::from_terms(ring_, reducer.reduce(f.terms(), true));
}

template <class F>
GroebnerBasis<F> groebner_basis(std::span<const Polynomial<F>> generators, const RingPtr<F>& ring,
                                GroebnerStats* stats) {
    using Poly = Polynomial<F>;
    const auto& ord = ring->order();
    const auto& K = ring->field();

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        int sugar;
    };

    std::deque<Poly> polys;  // every basis element ever added; references stay valid
    std::vector<int> sugar;
    std::vector<char> active;
    std::vector<Pair> pairs;
    GroebnerStats local;

    // Reducer over the active set; rebuilt lazily when elements retire.
    detail::Reducer<F> reducer(*ring);
    auto rebuild = [&] {
        reducer.clear();
        for (std::size_t k = 0; k < polys.size(); ++k)
            if (active[k]) reducer.add(&polys[k]);
    };

    auto install = [&](Poly h, int h_sugar) {
        // Gebauer-Moeller update.
        const std::size_t hi = polys.size();
        polys.push_back(std::move(h));
        sugar.push_back(h_sugar);
        active.push_back(1);
        const Monomial hl = polys[hi].lead_monomial();

        std::vector<Pair> fresh;
        for (std::size_t k = 0; k < hi; ++k) {
            if (!active[k]) continue;
            const Monomial& gl = polys[k].lead_monomial();
            Monomial l = lcm(hl, gl);
            int s = std::max(h_sugar + ord.degree(l) - ord.degree(hl), sugar[k] + ord.degree(l) - ord.degree(gl));
            fresh.push_back({k, hi, l, s});
        }
        // Chain criterion among the new pairs.
        std::vector<char> keep(fresh.size(), 1);
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            const Monomial& gl = polys[fresh[a].i].lead_monomial();
            if (coprime(hl, gl)) continue;
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || !keep[b]) continue;
                if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm && b > a)) {
                    keep[a] = 0;
                    break;
                }
            }
        }
        // Product criterion: drop coprime pairs after they served in the chain test.
        std::vector<Pair> kept_new;
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (!keep[a]) {
                ++local.pairs_skipped;
                continue;
            }
            if (coprime(hl, polys[fresh[a].i].lead_monomial())) {
                ++local.pairs_skipped;
                continue;
            }
            kept_new.push_back(fresh[a]);
        }
        // Old pairs made redundant by h.
        std::vector<Pair> next;
        next.reserve(pairs.size() + kept_new.size());
        for (auto& p : pairs) {
            if (hl.divides(p.lcm) && !(lcm(polys[p.i].lead_monomial(), hl) == p.lcm) &&
                !(lcm(polys[p.j].lead_monomial(), hl) == p.lcm)) {
                ++local.pairs_skipped;
                continue;
            }
            next.push_back(std::move(p));
        }
        for (auto& p : kept_new) next.push_back(std::move(p));
        pairs = std::move(next);
        // Retire elements whose lead is now redundant.
        bool retired = false;
        for (std::size_t k = 0; k < hi; ++k) {
            if (active[k] && hl.divides(polys[k].lead_monomial())) {
                active[k] = 0;
                retired = true;
            }
        }
        if (retired) {
            rebuild();
        } else {
            reducer.add(&polys[hi]);
        }
    };

    auto push_reduced = [&](std::vector<typename Poly::Term> terms, int s) {
        if (terms.empty()) return false;
        auto h = Poly::from_terms(ring, std::move(terms));
        if constexpr (!std::is_same_v<F, RationalField>) h = h.monic();
        install(std::move(h), s);
        return true;
    };

    for (const auto& g : generators) {
        require_same_ring(*ring, *g.ring(), "groebner_basis");
        if (g.is_zero()) continue;
        push_reduced(reducer.reduce(g.terms(), true, nullptr, false), g.max_graded_degree());
    }

    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const auto& a = pairs[k];
            const auto& b = pairs[best];
            if (a.sugar < b.sugar || (a.sugar == b.sugar && ord.compare(a.lcm, b.lcm) < 0)) best = k;
        }
        Pair p = std::move(pairs[best]);
        pairs[best] = std::move(pairs.back());
        pairs.pop_back();

        const Poly& gi = polys[p.i];
        const Poly& gj = polys[p.j];
        Monomial mi = p.lcm / gi.lead_monomial();
        Monomial mj = p.lcm / gj.lead_monomial();
        auto si = gi.times_term(mi, gj.lead_coeff());
        auto s = Poly::sub_scaled(si.terms(), gi.lead_coeff(), mj, gj.terms(), *ring);
        ++local.pairs_reduced;
        auto h = reducer.reduce(std::move(s), true, nullptr, false);
        if (h.empty()) {
            ++local.zero_reductions;
            continue;
        }
        push_reduced(std::move(h), p.sugar);
    }

    // Active elements form a minimal basis; tail-reduce each against the rest.
    std::vector<Poly> minimal;
    for (std::size_t k = 0; k < polys.size(); ++k)
        if (active[k]) minimal.push_back(polys[k]);
    std::sort(minimal.begin(), minimal.end(),
              [&](const Poly& a, const Poly& b) { return ord.compare(a.lead_monomial(), b.lead_monomial()) < 0; });
    detail::Reducer<F> final_reducer(*ring);
    for (const auto& g : minimal) final_reducer.add(&g);
    std::vector<Poly> reduced;
    reduced.reserve(minimal.size());
    for (const auto& g : minimal) {
        auto tail = std::vector<typename Poly::Term>(g.terms().begin() + 1, g.terms().end());
        auto r = final_reducer.reduce(std::move(tail), true);
        r.insert(r.begin(), g.lead());
        reduced.push_back(Poly::from_terms(ring, std::move(r)).monic());
    }
    if (stats) *stats = local;
    return GroebnerBasis<F>(ring, std::move(reduced));
}

}  // namespace segreta::kernel
