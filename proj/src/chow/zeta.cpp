#include "segreta/chow/zeta.hpp"

namespace segreta::chow {

SegreZeta zeta_from_segre(const ChowClass& S, Integer d) {
    if (d < 1) throw std::invalid_argument("zeta_from_segre: d must be positive");
    const int n = S.ambient_dim();
    const auto len = static_cast<std::size_t>(n) + 1;
    auto A = series::multiply(series::binomial_series(d, n + 1, len), S.coeffs(), len);
    A.push_back(series::pow(d, n + 1));
    return {d, n, std::move(A)};
}

ChowClass zeta_expand(const SegreZeta& zeta, int N) {
    if (N < zeta.n) throw std::invalid_argument("zeta_expand: N must be at least the source dimension");
    const auto len = static_cast<std::size_t>(N) + 1;
    auto denom = series::binomial_series(zeta.d, -(zeta.n + 1), len);
    return ChowClass(series::multiply(zeta.numerator, denom, len));
}

}  // namespace segreta::chow
