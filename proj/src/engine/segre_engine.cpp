#include "segreta/engine/segre_engine.hpp"

namespace segreta::engine {

TwistedSegreClass tensored_from_counts(const std::vector<Integer>& N, int d) {
    if (N.empty()) throw std::invalid_argument("tensored_from_counts: empty count vector");
    std::vector<Integer> a;
    Integer dk = 1;
    for (std::size_t k = 0; k < N.size(); ++k) {
        a.push_back(chow::series::add(dk, -N[k]));
        if (k + 1 < N.size()) dk = chow::series::mul(dk, d);
    }
    return {ChowClass(std::move(a)), -static_cast<Integer>(d), d};
}

ChowClass hypersurface_segre(int n, Integer e) {
    std::vector<Integer> a(static_cast<std::size_t>(n) + 1, 0);
    Integer v = e;
    for (int i = 1; i <= n; ++i) {
        a[static_cast<std::size_t>(i)] = v;
        if (i < n) v = chow::series::mul(v, -e);
    }
    return ChowClass(std::move(a));
}

}  // namespace segreta::engine
