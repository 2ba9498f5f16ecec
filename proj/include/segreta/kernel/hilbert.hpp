#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "segreta/kernel/ideal.hpp"

namespace segreta::kernel {

/// Integer polynomial, coefficient of t^i at index i.
using IntPoly = std::vector<std::int64_t>;

/// Dimension and degree of Proj(S/J), read off the Hilbert series
/// HS(t) = numerator(t) / (1-t)^krull_dim.
struct HilbertData {
    int nvars = 0;
    int krull_dim = 0;
    /// krull_dim - 1; -1 when the scheme is empty.
    int proj_dim = -1;
    bool empty = true;
    /// numerator(1) for a nonempty scheme, 0 otherwise.
    std::int64_t degree = 0;
    /// Reduced numerator P(t) with P(1) != 0 (empty for the unit ideal).
    IntPoly numerator;

    friend bool operator==(const HilbertData&, const HilbertData&) = default;
};

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of S/M for the
/// monomial ideal M generated by `generators` (pivot recursion).
IntPoly hilbert_numerator(std::vector<Monomial> generators, int nvars);

/// Reduce N(t)/(1-t)^nvars to lowest terms and extract dimension data.
HilbertData hilbert_data_from_numerator(const IntPoly& numerator, int nvars);

/// Hilbert data of a homogeneous ideal from the lead terms of a basis.
/// The grading is the standard one; the order of `G` is irrelevant.
template <class F>
HilbertData hilbert_data(const GroebnerBasis<F>& G) {
    const int n = G.ring()->nvars();
    for (const auto& g : G.polynomials())
        if (!g.homogeneous_degree()) throw std::invalid_argument("hilbert_data: basis is not homogeneous");
    return hilbert_data_from_numerator(hilbert_numerator(G.lead_monomials(), n), n);
}

template <class F>
HilbertData hilbert_data(const Ideal<F>& J) {
    return hilbert_data(J.known_basis());
}

}  // namespace segreta::kernel
