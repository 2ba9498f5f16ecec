#pragma once

// Segre classes of V(I) ⊆ P^n from the degrees of residual schemes of
// random combinations of the generators of I.
//
// With f_1..f_n general in the span of I_d, R_k is the part of
// V(f_1..f_k) away from V(I), computed as (f_1..f_k) : I^inf, and
// N_k = deg R_k when R_k has the expected dimension n-k.  Then
// s(Z, P^n)^{O(-dH)} has coefficients d^k - N_k.

#include <cstdint>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "segreta/chow/chow_class.hpp"
#include "segreta/chow/zeta.hpp"
#include "segreta/kernel/hilbert.hpp"
#include "segreta/kernel/random.hpp"
#include "segreta/kernel/saturation.hpp"

namespace segreta::engine {

using chow::ChowClass;
using chow::Integer;
using chow::TwistedSegreClass;

class NonEqualDegree : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class ZeroGradient : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class RetryExhausted : public std::runtime_error {
   public:
    RetryExhausted(int k, int attempts)
        : std::runtime_error("residual scheme R_" + std::to_string(k) + " kept excess dimension after " +
                             std::to_string(attempts) + (attempts == 1 ? " draw" : " draws") + "; use a larger field or another seed"),
          k_(k),
          attempts_(attempts) {}
    int step() const noexcept { return k_; }
    int attempts() const noexcept { return attempts_; }

   private:
    int k_;
    int attempts_;
};

constexpr int kDefaultMaxRetries = 5;

struct ResidualStep {
    int k = 0;
    kernel::HilbertData hilbert;
    /// Reduced basis of J_k in the ring's order.
    std::vector<std::string> basis;
    /// Failed draws at this step before the accepted one.
    int retries = 0;
    Integer N = 0;
};

struct ResidualReport {
    std::uint64_t seed = 0;
    int d = 0;
    /// N_0..N_n, N_0 = 1.
    std::vector<Integer> N;
    std::vector<ResidualStep> steps;
    /// Total number of draws of f_1..f_n, including the accepted one.
    int attempts = 1;
};

/// All products g * m with m a monomial of degree d - deg g: a spanning set of I_d.
template <class F>
kernel::Ideal<F> regenerate(const kernel::Ideal<F>& I, int d);

/// The same generators read in P^N (new variables appended after the old ones).
template <class F>
kernel::Ideal<F> extend_ideal(const kernel::Ideal<F>& I, int N);

template <class F>
class SegreJob {
   public:
    /// Uses the common degree of the generators, or regenerates I in degree `d`
    /// when given.  Throws NonEqualDegree.
    static SegreJob create(kernel::Ideal<F> I, std::uint64_t seed, std::optional<int> d = std::nullopt,
                           int max_retries = kDefaultMaxRetries) {
        int top = 0;
        for (const auto& g : I.generators()) top = std::max(top, *g.homogeneous_degree());
        int degree;
        if (d) {
            if (*d < top) throw NonEqualDegree("generator degree " + std::to_string(top) + " exceeds d = " + std::to_string(*d));
            degree = *d;
        } else {
            auto common = I.common_degree();
            if (!common) throw NonEqualDegree("generators are not all of the same degree");
            degree = *common;
        }
        if (degree < 1) throw NonEqualDegree("generators must have positive degree");
        if (max_retries < 0) throw std::invalid_argument("max_retries must be nonnegative");
        auto presented = I.common_degree() == degree ? I : regenerate(I, degree);
        return SegreJob(std::move(presented), std::move(I), degree, seed, max_retries);
    }

    /// Generators spanning I_d.
    const kernel::Ideal<F>& ideal() const noexcept { return ideal_; }
    /// The ideal that is saturated away (the original generators).
    const kernel::Ideal<F>& saturator() const noexcept { return saturator_; }
    int d() const noexcept { return d_; }
    int n() const noexcept { return ideal_.nvars() - 1; }
    std::uint64_t seed() const noexcept { return seed_; }
    int max_retries() const noexcept { return max_retries_; }

   private:
    SegreJob(kernel::Ideal<F> presented, kernel::Ideal<F> original, int d, std::uint64_t seed, int max_retries)
        : ideal_(std::move(presented)), saturator_(std::move(original)), d_(d), seed_(seed), max_retries_(max_retries) {}

    kernel::Ideal<F> ideal_;
    kernel::Ideal<F> saturator_;
    int d_;
    std::uint64_t seed_;
    int max_retries_;
};

template <class F>
ResidualReport residual_degrees(const SegreJob<F>& job);

/// a_k = d^k - N_k at twist -d.
TwistedSegreClass tensored_from_counts(const std::vector<Integer>& N, int d);

template <class F>
TwistedSegreClass tensored_segre(const SegreJob<F>& job, ResidualReport* report = nullptr) {
    auto r = residual_degrees(job);
    auto s = tensored_from_counts(r.N, job.d());
    if (report) *report = std::move(r);
    return s;
}

template <class F>
ChowClass segre_class(const SegreJob<F>& job, ResidualReport* report = nullptr) {
    return chow::to_ordinary(tensored_segre(job, report));
}

/// Segre class of the join of V(I) with P^{N-n-1}, from the zeta function.
template <class F>
ChowClass join_scheme_segre(const SegreJob<F>& job, int N, ResidualReport* report = nullptr) {
    if (N < job.n()) throw std::invalid_argument("join_scheme_segre: N must be at least n");
    return chow::zeta_expand(chow::zeta_from_segre(segre_class(job, report), job.d()), N);
}

/// s(X, P^n) for a hypersurface of degree e.
ChowClass hypersurface_segre(int n, Integer e);

struct CsmResult {
    ChowClass csm;
    /// Tensored class of the singularity subscheme at twist -(e-1) (absent for e = 1).
    std::optional<TwistedSegreClass> singular_tensored;
    std::optional<ResidualReport> report;
};

/// c_SM of the hypersurface V(f) ⊆ P^n.  Throws ZeroGradient when every
/// partial derivative vanishes.
template <class F>
CsmResult csm_hypersurface(const kernel::Polynomial<F>& f, std::uint64_t seed, int max_retries = kDefaultMaxRetries);

// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<kernel::Monomial> monomials_of_degree(int n, int d) {
    std::vector<kernel::Monomial> out;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n - 1) {
            e[static_cast<std::size_t>(i)] = left;
            out.emplace_back(n, e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[static_cast<std::size_t>(i)] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

/// Draw f_1..f_n from one stream and compute each residual (concurrently
/// across k).  Returns the first k whose residual has excess dimension, or 0.
template <class F>
int attempt_residuals(const SegreJob<F>& job, kernel::SeedStream stream, std::vector<ResidualStep>& steps) {
    const int n = job.n();
    std::vector<kernel::Polynomial<F>> draws;
    for (int k = 1; k <= n; ++k) draws.push_back(kernel::random_combination(job.ideal(), stream));

    auto residual = [&job, &draws](int k) {
        std::vector<kernel::Polynomial<F>> prefix(draws.begin(), draws.begin() + k);
        kernel::Ideal<F> J(job.ideal().ring(), std::move(prefix));
        auto G = kernel::saturate(J, job.saturator()).known_basis();
        ResidualStep step;
        step.k = k;
        step.hilbert = kernel::hilbert_data(G);
        for (const auto& g : G.polynomials()) step.basis.push_back(g.to_string());
        return step;
    };
    std::vector<std::future<ResidualStep>> pending;
    for (int k = 1; k <= n; ++k) pending.push_back(std::async(std::launch::async, residual, k));

    steps.clear();
    int bad = 0;
    for (auto& p : pending) {
        auto step = p.get();
        if (step.hilbert.proj_dim > n - step.k) {
            if (!bad) bad = step.k;
        } else {
            step.N = step.hilbert.proj_dim == n - step.k ? step.hilbert.degree : 0;
        }
        steps.push_back(std::move(step));
    }
    return bad;
}

}  // namespace detail

template <class F>
kernel::Ideal<F> regenerate(const kernel::Ideal<F>& I, int d) {
    using Poly = kernel::Polynomial<F>;
    const auto& K = I.ring()->field();
    std::vector<Poly> out;
    for (const auto& g : I.generators()) {
        int e = *g.homogeneous_degree();
        if (e > d) throw NonEqualDegree("generator of degree " + std::to_string(e) + " exceeds d = " + std::to_string(d));
        for (const auto& m : detail::monomials_of_degree(I.nvars(), d - e)) {
            auto p = g.times_term(m, K.one());
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
        }
    }
    return kernel::Ideal<F>(I.ring(), std::move(out));
}

template <class F>
kernel::Ideal<F> extend_ideal(const kernel::Ideal<F>& I, int N) {
    const int n = I.nvars() - 1;
    if (N < n) throw std::invalid_argument("extend_ideal: N must be at least n");
    auto names = I.ring()->names();
    for (int i = n + 1; i <= N; ++i) {
        std::string name = "x" + std::to_string(i);
        while (std::find(names.begin(), names.end(), name) != names.end()) name = "_" + name;
        names.push_back(name);
    }
    auto R = kernel::Ring<F>::create(I.ring()->field(), names, kernel::MonomialOrder::grevlex(N + 1));
    auto map = kernel::detail::shift_map(n + 1, 0);
    std::vector<kernel::Polynomial<F>> gens;
    for (const auto& g : I.generators()) gens.push_back(g.remap(R, map));
    return kernel::Ideal<F>(R, std::move(gens));
}

template <class F>
ResidualReport residual_degrees(const SegreJob<F>& job) {
    ResidualReport report;
    report.seed = job.seed();
    report.d = job.d();
    const kernel::SeedStream root(job.seed());
    std::vector<int> failures(static_cast<std::size_t>(job.n()) + 1, 0);
    std::vector<ResidualStep> steps;
    int attempt = 0;
    for (;; ++attempt) {
        int bad = detail::attempt_residuals(job, root.derive(static_cast<std::uint64_t>(attempt)), steps);
        if (bad == 0) break;
        ++failures[static_cast<std::size_t>(bad)];
        if (attempt >= job.max_retries()) throw RetryExhausted(bad, attempt + 1);
    }
    report.attempts = attempt + 1;
    report.N.push_back(1);
    for (auto& s : steps) {
        s.retries = failures[static_cast<std::size_t>(s.k)];
        report.N.push_back(s.N);
    }
    report.steps = std::move(steps);
    return report;
}

template <class F>
CsmResult csm_hypersurface(const kernel::Polynomial<F>& f, std::uint64_t seed, int max_retries) {
    const auto& ring = f.ring();
    const int n = ring->nvars() - 1;
    if (f.is_zero() || !f.homogeneous_degree()) throw std::invalid_argument("csm_hypersurface: need a nonzero form");
    const int e = *f.homogeneous_degree();
    if (e < 1) throw std::invalid_argument("csm_hypersurface: form must have positive degree");

    std::vector<kernel::Polynomial<F>> partials;
    for (int i = 0; i <= n; ++i) {
        auto p = f.derivative(i);
        if (!p.is_zero()) partials.push_back(std::move(p));
    }
    if (partials.empty()) throw ZeroGradient("every partial derivative vanishes; use a field of larger characteristic");

    CsmResult result{ChowClass(n), std::nullopt, std::nullopt};
    ChowClass inside = hypersurface_segre(n, e);
    if (e > 1) {
        ResidualReport report;
        auto job = SegreJob<F>::create(kernel::Ideal<F>(ring, partials), seed, e - 1, max_retries);
        auto sJ = tensored_segre(job, &report);
        inside = inside + chow::dual_class(chow::compose_twists(sJ, -1).cls);
        result.singular_tensored = std::move(sJ);
        result.report = std::move(report);
    }
    result.csm = chow::fulton_class(inside);
    return result;
}

}  // namespace segreta::engine
