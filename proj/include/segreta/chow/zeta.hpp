#pragma once

#include "segreta/chow/chow_class.hpp"

namespace segreta::chow {

/// A(H) / (1 + dH)^{n+1}, with numerator A_0..A_{n+1}.
struct SegreZeta {
    Integer d = 1;
    int n = 0;
    std::vector<Integer> numerator;

    friend bool operator==(const SegreZeta&, const SegreZeta&) = default;
};

/// A(H) = [(1+dH)^{n+1} S(H)]_n + d^{n+1} H^{n+1} for an ordinary class S.
SegreZeta zeta_from_segre(const ChowClass& S, Integer d);

/// The class in P^N given by expanding A(H)/(1+dH)^{n+1} through H^N.
ChowClass zeta_expand(const SegreZeta& zeta, int N);

}  // namespace segreta::chow
