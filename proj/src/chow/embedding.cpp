#include "segreta/chow/embedding.hpp"

namespace segreta::chow {

Series twist_chern(const Series& chern, int rank, Integer m, int z) {
    if (chern.empty() || chern[0] != 1) throw std::invalid_argument("twist_chern: constant term must be 1");
    if (z < 0) throw std::invalid_argument("twist_chern: negative truncation degree");
    const auto len = static_cast<std::size_t>(z) + 1;
    Series out(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j <= i && j < chern.size(); ++j) {
            Integer b = series::binomial(rank - static_cast<Integer>(j), static_cast<Integer>(i - j));
            if (b == 0 || chern[j] == 0) continue;
            s = series::add(s, series::mul(series::mul(b, chern[j]), series::pow(m, static_cast<int>(i - j))));
        }
        out[i] = s;
    }
    return out;
}

TwistedSegreClass segre_regular_embedding(const SubvarietyModel& M, int n, Integer m) {
    if (M.z < 0 || M.z > n) throw std::invalid_argument("segre_regular_embedding: dimension out of range");
    if (M.rank != n - M.z) throw RankMismatch("segre_regular_embedding: rank must equal n - z");
    if (M.e < 1 || M.model_degree < 1) throw std::invalid_argument("segre_regular_embedding: e and model degree must be positive");
    const auto len = static_cast<std::size_t>(M.z) + 1;
    const Integer mh = series::mul(m, M.e);
    auto total = series::multiply(Series{1, mh}, twist_chern(M.chern_normal, M.rank, mh, M.z), len);
    auto s = series::inverse(total, len);

    std::vector<Integer> out(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i <= M.z; ++i) {
        // h^i ∩ [Z] has dimension z-i and degree model_degree * e^{z-i}
        Integer deg = series::mul(M.model_degree, series::pow(M.e, M.z - i));
        out[static_cast<std::size_t>(n - M.z + i)] = series::mul(s[static_cast<std::size_t>(i)], deg);
    }
    return {ChowClass(std::move(out)), m, std::nullopt};
}

}  // namespace segreta::chow
