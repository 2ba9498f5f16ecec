#include "segreta/kernel/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace segreta::kernel {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Hilbert numerator coefficient overflow");
    return r;
}

void add_shifted(IntPoly& acc, const IntPoly& p, int shift, int sign) {
    if (acc.size() < p.size() + static_cast<std::size_t>(shift)) acc.resize(p.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] = checked_add(acc[i + shift], sign * p[i]);
}

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.total_degree() < b.total_degree(); });
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& k) { return k.divides(m); });
        if (!redundant) out.push_back(m);
    }
    return out;
}

IntPoly numerator(std::vector<Monomial> gens, int nvars) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    if (gens.front().is_one()) return {};

    bool coprime_all = true;
    std::uint32_t seen = 0;
    for (const auto& m : gens) {
        if (seen & m.support_mask()) {
            coprime_all = false;
            break;
        }
        seen |= m.support_mask();
    }
    if (coprime_all) {
        IntPoly acc{1};
        for (const auto& m : gens) {
            IntPoly next = acc;
            add_shifted(next, acc, m.total_degree(), -1);
            acc = std::move(next);
        }
        trim(acc);
        return acc;
    }

    // Pivot on the most frequent variable.
    std::vector<int> counts(static_cast<std::size_t>(nvars), 0);
    for (const auto& m : gens)
        for (int i = 0; i < nvars; ++i)
            if (m[i] > 0) ++counts[static_cast<std::size_t>(i)];
    const int x = static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
    std::vector<int> exps;
    for (const auto& m : gens)
        if (m[x] > 0 && m.total_degree() != m[x]) exps.push_back(m[x]);
    std::sort(exps.begin(), exps.end());
    const int e = exps[exps.size() / 2];
    const Monomial pivot = Monomial::variable(nvars, x, e);

    std::vector<Monomial> with_pivot = gens;
    with_pivot.push_back(pivot);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& m : gens) colon.push_back(m / gcd(m, pivot));

    IntPoly result = numerator(std::move(with_pivot), nvars);
    add_shifted(result, numerator(std::move(colon), nvars), e, 1);
    trim(result);
    return result;
}

}  // namespace

IntPoly hilbert_numerator(std::vector<Monomial> generators, int nvars) {
    for (const auto& m : generators)
        if (m.nvars() != nvars) throw std::invalid_argument("hilbert_numerator: monomial arity mismatch");
    return numerator(std::move(generators), nvars);
}

HilbertData hilbert_data_from_numerator(const IntPoly& numerator_in, int nvars) {
    HilbertData h;
    h.nvars = nvars;
    IntPoly p = numerator_in;
    trim(p);
    if (p.empty()) {
        // Unit ideal.
        h.krull_dim = 0;
        return h;
    }
    int divisions = 0;
    for (;;) {
        std::int64_t at_one = 0;
        for (auto c : p) at_one = checked_add(at_one, c);
        if (at_one != 0) break;
        // Divide by (1 - t): q_i = sum_{j<=i} p_j.
        IntPoly q(p.size() - 1);
        std::int64_t run = 0;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            run = checked_add(run, p[i]);
            q[i] = run;
        }
        p = std::move(q);
        trim(p);
        ++divisions;
    }
    h.krull_dim = nvars - divisions;
    h.numerator = p;
    h.proj_dim = h.krull_dim - 1;
    h.empty = h.krull_dim == 0;
    if (h.empty) {
        h.proj_dim = -1;
        h.degree = 0;
    } else {
        h.degree = 0;
        for (auto c : p) h.degree = checked_add(h.degree, c);
    }
    return h;
}

}  // namespace segreta::kernel
