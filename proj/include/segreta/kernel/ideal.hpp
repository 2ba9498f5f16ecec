#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "segreta/kernel/groebner.hpp"

namespace segreta::kernel {

/// Homogeneous ideal given by a nonempty list of nonzero homogeneous generators.
template <class F>
class Ideal {
   public:
    Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators) : Ideal(std::move(ring), std::move(generators), nullptr) {}

    /// `basis` is a reduced basis of the same ideal, in any order on the
    /// same variables.
    Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators, std::shared_ptr<const GroebnerBasis<F>> basis)
        : ring_(std::move(ring)), gens_(std::move(generators)), basis_(std::move(basis)) {
        if (basis_ && (basis_->ring()->nvars() != ring_->nvars() || !(basis_->ring()->field() == ring_->field())))
            throw RingMismatch("ideal: basis lives over different variables");
        if (ring_->nvars() < 2) throw std::invalid_argument("ideal: need at least two variables");
        if (gens_.empty()) throw std::invalid_argument("ideal: generator list is empty");
        for (const auto& g : gens_) {
            require_same_ring(*ring_, *g.ring(), "ideal");
            if (g.is_zero()) throw std::invalid_argument("ideal: zero generator");
            if (!g.homogeneous_degree()) throw std::invalid_argument("ideal: inhomogeneous generator " + g.to_string());
        }
    }

    const RingPtr<F>& ring() const noexcept { return ring_; }
    int nvars() const noexcept { return ring_->nvars(); }
    const std::vector<Polynomial<F>>& generators() const noexcept { return gens_; }

    /// The degree shared by all generators, if any.
    std::optional<int> common_degree() const {
        int d = *gens_.front().homogeneous_degree();
        for (const auto& g : gens_)
            if (*g.homogeneous_degree() != d) return std::nullopt;
        return d;
    }

    /// Reduced basis in the ring's own order.
    GroebnerBasis<F> groebner_basis() const {
        if (basis_ && basis_->ring()->compatible(*ring_)) return *basis_;
        return kernel::groebner_basis<F>(gens_, ring_);
    }

    /// A reduced basis in whatever order is at hand; enough for order-free
    /// invariants such as the Hilbert series.
    GroebnerBasis<F> known_basis() const { return basis_ ? *basis_ : groebner_basis(); }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
        return s + ")";
    }

   private:
    RingPtr<F> ring_;
    std::vector<Polynomial<F>> gens_;
    std::shared_ptr<const GroebnerBasis<F>> basis_;
};

/// Reduced Groebner basis of I under `order` (variables and field kept).
template <class F>
GroebnerBasis<F> buchberger(const Ideal<F>& I, const MonomialOrder& order, GroebnerStats* stats = nullptr) {
    if (order.nvars() != I.nvars()) throw RingMismatch("buchberger: order arity does not match the ideal");
    auto ring = I.ring()->with_order(order);
    std::vector<Polynomial<F>> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(g.in_ring(ring));
    return groebner_basis<F>(gens, ring, stats);
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& G) {
    return G.normal_form(f);
}

/// Ideal generated by a reduced basis (homogeneous input gives homogeneous output).
template <class F>
Ideal<F> ideal_from_basis(const GroebnerBasis<F>& G) {
    if (G.is_zero_ideal()) throw std::invalid_argument("ideal_from_basis: zero ideal");
    auto gens = G.polynomials();
    return Ideal<F>(G.ring(), std::move(gens), std::make_shared<const GroebnerBasis<F>>(G));
}

/// The ideal of G, with generators moved into `ring` (same variables, any order).
template <class F>
Ideal<F> ideal_from_basis(const GroebnerBasis<F>& G, const RingPtr<F>& ring) {
    if (G.is_zero_ideal()) throw std::invalid_argument("ideal_from_basis: zero ideal");
    std::vector<Polynomial<F>> gens;
    for (const auto& g : G.polynomials()) gens.push_back(g.in_ring(ring));
    return Ideal<F>(ring, std::move(gens), std::make_shared<const GroebnerBasis<F>>(G));
}

/// True iff every generator of `inner` lies in `outer`.
template <class F>
bool ideal_contains(const Ideal<F>& outer, const Ideal<F>& inner) {
    auto G = outer.groebner_basis();
    for (const auto& g : inner.generators())
        if (!G.contains(g)) return false;
    return true;
}

template <class F>
bool same_ideal(const Ideal<F>& a, const Ideal<F>& b) {
    return a.groebner_basis() == b.groebner_basis();
}

}  // namespace segreta::kernel
