#pragma once

#include "segreta/chow/chow_class.hpp"

namespace segreta::chow {

class RankMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A nonsingular Z ⊆ P^n described intrinsically: H|_Z = e h, and the
/// normal bundle has Chern class chern_normal (a polynomial in h).
struct SubvarietyModel {
    int z = 0;
    Integer e = 1;
    Series chern_normal{1};
    int rank = 0;
    /// ∫_Z h^z; 1 when Z is a projective space of its own.
    Integer model_degree = 1;
};

/// c(N ⊗ O(m h)) for N of the given rank, truncated at h^z.
Series twist_chern(const Series& chern, int rank, Integer m, int z);

/// s(Z, P^n)^{O(mH)} from (c(L) c(N ⊗ L))^{-1} ∩ [Z], pushed forward.
TwistedSegreClass segre_regular_embedding(const SubvarietyModel& M, int n, Integer m);

}  // namespace segreta::chow
