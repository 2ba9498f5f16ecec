// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <tuple>
#include <utility>

#include "reference.hpp"
#include "segreta/chow/embedding.hpp"
#include "segreta/chow/zeta.hpp"
#include "segreta/engine/segre_engine.hpp"
#include "test_support.hpp"

using namespace segreta;
using namespace segreta::testing;
using engine::SegreJob;
using Fp = kernel::PrimeField;
using Q = kernel::RationalField;

namespace {

class Criterion {
   public:
    explicit Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

    template <class A, class B>
    void expect_eq(const A& got, const B& want, const std::string& what) {
        ++checks_;
        if (!(got == want)) failures_.push_back(what + ": got " + show(got) + ", expected " + show(want));
    }
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) failures_.push_back(what);
    }
    void note(const std::string& s) { notes_.push_back(s); }

    bool report(double seconds) const {
        const bool ok = failures_.empty();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id_ << ": " << title_ << " [" << checks_ << " checks, "
                  << std::fixed << std::setprecision(2) << seconds << " s]";
        for (const auto& n : notes_) std::cout << "; " << n;
        std::cout << "\n";
        for (std::size_t i = 0; i < failures_.size() && i < 10; ++i) std::cout << "    " << failures_[i] << "\n";
        if (failures_.size() > 10) std::cout << "    ... " << failures_.size() - 10 << " more\n";
        return ok;
    }

   private:
    template <class T>
    static std::string show(const T& v) {
        std::ostringstream os;
        if constexpr (std::is_same_v<T, ChowClass>) {
            os << "(";
            for (std::size_t i = 0; i < v.coeffs().size(); ++i) os << (i ? "," : "") << v.coeffs()[i];
            os << ")";
        } else if constexpr (requires { v.begin(); }) {
            os << "(";
            bool first = true;
            for (const auto& x : v) os << (std::exchange(first, false) ? "" : ",") << x;
            os << ")";
        } else {
            os << v;
        }
        return os.str();
    }

    int id_;
    std::string title_;
    int checks_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

using Vec = std::vector<Integer>;

struct Fixture {
    std::string name;
    int nvars;
    std::vector<std::string_view> gens;
    std::optional<int> d;
    Vec N;
};

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = {
        {"hyperplane", 4, {"x0"}, std::nullopt, {1, 0, 0, 0}},
        {"point_with_embedded_point", 2, {"x0*x1", "x1^2"}, std::nullopt, {1, 1}},
        {"line_with_embedded_point", 3, {"x0*x1", "x1^2"}, std::nullopt, {1, 1, 0}},
        {"conic", 3, {"x0*x2 - x1^2"}, std::nullopt, {1, 0, 0}},
        {"twisted_cubic", 4, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"}, std::nullopt, {1, 2, 1, 0}},
        {"quadrics", 4, {"x0*x1 - x2*x3", "x0^2 + x1^2 - x2^2 + 2*x3^2"}, std::nullopt, {1, 2, 0, 0}},
        {"veronese", 6, std::vector<std::string_view>(kVeroneseFixture), std::nullopt, {1, 2, 4, 4, 2, 1}},
        {"monomial_d8", 4, std::vector<std::string_view>(kMonomialFixture), 8, {1, 6, 14, 30}},
        {"monomial_d9", 4, std::vector<std::string_view>(kMonomialFixture), 9, {1, 7, 27, 91}},
    };
    return all;
}

template <class F>
kernel::Ideal<F> make(const Fixture& fx, F field = F()) {
    auto R = ring<F>(fx.nvars, field);
    std::vector<kernel::Polynomial<F>> gens;
    for (auto g : fx.gens) gens.push_back(poly(R, g));
    return kernel::Ideal<F>(R, std::move(gens));
}

template <class F>
SegreJob<F> job_of(const Fixture& fx, std::uint64_t seed, F field = F()) {
    return SegreJob<F>::create(make(fx, field), seed, fx.d);
}

const Fixture& fixture(const std::string& name) {
    for (const auto& f : fixtures())
        if (f.name == name) return f;
    throw std::out_of_range(name);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion1(Criterion& c) {
    auto job = job_of<Fp>(fixture("monomial_d8"), 42);
    engine::ResidualReport report;
    auto t = engine::tensored_segre(job, &report);
    c.expect_eq(report.N, Vec{1, 6, 14, 30}, "N");
    c.expect_eq(t.cls, ChowClass({0, 2, 50, 482}), "tensored class");
    c.expect_eq(t.twist, Integer{-8}, "twist");
    c.expect_eq(chow::to_ordinary(t), ChowClass({0, 2, 18, -334}), "ordinary class");
}

void criterion2(Criterion& c) {
    auto job = job_of<Fp>(fixture("monomial_d9"), 42);
    engine::ResidualReport report;
    auto t = engine::tensored_segre(job, &report);
    const Integer d = 9;
    c.expect_eq(report.N, Vec{1, d - 2, d * d - 4 * d - 18, d * d * d - 6 * d * d - 54 * d + 334}, "N");
    c.expect_eq(report.N, Vec{1, 7, 27, 91}, "N");
    c.expect_eq(chow::to_ordinary(t), ChowClass({0, 2, 18, -334}), "ordinary class");
}

void criterion3(Criterion& c) {
    auto job = job_of<Fp>(fixture("veronese"), 42);
    auto t = engine::tensored_segre(job);
    c.expect_eq(t.cls, ChowClass({0, 0, 0, 4, 14, 31}), "tensored class");
    c.expect_eq(chow::to_ordinary(t), ChowClass({0, 0, 0, 4, -18, 51}), "ordinary class");
    c.expect_eq(chow::predicted_counts(t, 2), Vec{1, 2, 4, 4, 2, 1}, "characteristic numbers");
    // P^2 embedded by O(2): N = T_{P^5}|/T_{P^2}, c(N) = (1+2h)^6 / (1+h)^3.
    const Series cN = ref_mul(ref_linear_pow(2, 6, 3), ref_mul(ref_linear_pow(1, -1, 3), ref_mul(ref_linear_pow(1, -1, 3), ref_linear_pow(1, -1, 3), 3), 3), 3);
    chow::SubvarietyModel veronese{2, 2, cN, 3, 1};
    c.expect_eq(chow::segre_regular_embedding(veronese, 5, -2).cls, ChowClass({0, 0, 0, 4, 14, 31}),
                "regular embedding formula");
}

void criterion4(Criterion& c) {
    const auto& fx = fixture("conic");
    auto I = make<Fp>(fx);
    auto job = SegreJob<Fp>::create(I, 42);
    auto t = engine::tensored_segre(job);
    auto z = chow::zeta_from_segre(chow::to_ordinary(t), 2);
    c.expect_eq(z.numerator, Vec{0, 2, 8, 8}, "A(H)");
    c.expect_eq(chow::zeta_expand(z, 3), ChowClass({0, 2, -4, 8}), "zeta expansion in P^3");
    for (int N = 3; N <= 5; ++N) {
        auto via_join = chow::to_ordinary(chow::join_class(t, N - 3));
        auto direct = engine::segre_class(SegreJob<Fp>::create(engine::extend_ideal(I, N), 42));
        auto via_zeta = chow::zeta_expand(z, N);
        c.expect_eq(via_join, direct, "join route vs direct engine in P^" + std::to_string(N));
        c.expect_eq(via_zeta, direct, "zeta route vs direct engine in P^" + std::to_string(N));
    }
}

void criterion5(Criterion& c) {
    auto R = ring<Q>(3);
    struct Case {
        const char* name;
        const char* f;
        Integer chi;
    };
    for (const auto& [name, f, chi] : {Case{"smooth conic", "x0*x2 - x1^2", 2},
                                       Case{"nodal cubic", "x1^2*x2 - x0^2*(x0 + x2)", 1},
                                       Case{"cuspidal cubic", "x1^2*x2 - x0^3", 2}}) {
        auto csm = engine::csm_hypersurface(poly(R, f), 42).csm;
        c.expect_eq(csm[2], chi, std::string(name) + " degree-0 coefficient");
        if (std::string_view(name) == "smooth conic") c.expect_eq(csm, ChowClass({0, 2, 2}), "smooth conic CSM");
    }
}

template <class Body>
int suite(Criterion& c, const std::string& name, Body body) {
    const int cases = body();
    c.note(name + " " + std::to_string(cases));
    return cases;
}

void criterion6(Criterion& c) {
    constexpr int kCases = 250;
    std::mt19937_64 gen(2718);

    suite(c, "pic-action", [&] {
        for (int i = 0; i < kCases; ++i) {
            auto s = random_class(gen, 1 + i % 7);
            Integer a = static_cast<Integer>(gen() % 13) - 6, b = static_cast<Integer>(gen() % 13) - 6;
            c.expect_eq(chow::tensor_twist(s, a), ref_twist(s, a), "twist vs reference");
            c.expect_eq(chow::tensor_twist(chow::tensor_twist(s, a), b), chow::tensor_twist(s, a + b), "composition");
            c.expect_eq(chow::tensor_twist(chow::tensor_twist(s, a), -a), s, "inverse");
            c.expect_eq(chow::to_ordinary(chow::from_ordinary(s, a)), s, "ordinary round trip");
        }
        return kCases;
    });

    suite(c, "lemma-components", [&] {
        for (int i = 0; i < kCases; ++i) {
            const int n = 1 + i % 7;
            const auto len = static_cast<std::size_t>(n) + 1;
            auto s = random_class(gen, n);
            Integer m = static_cast<Integer>(gen() % 11) - 5;
            auto t = ref_twist(s, m);
            for (int k = 1; k <= n + 1; ++k) {
                auto capped = ref_mul(ref_linear_pow(m, k - 1, len), t.coeffs(), len);
                c.expect_eq(capped[static_cast<std::size_t>(k - 1)], s[k - 1], "component of dimension n+1-k");
            }
        }
        return kCases;
    });

    suite(c, "twist-independence", [&] {
        // Complete intersections of r forms of degree d: the codimension-r part of
        // c(N ⊗ O(t)) ∩ s^{O(t)} is deg Z = d^r for every t.
        int cases = 0;
        kernel::SeedStream stream(31);
        auto contribution = [](const ChowClass& s, Integer d, int r, Integer t) {
            const auto len = static_cast<std::size_t>(s.ambient_dim()) + 1;
            return ref_mul(ref_linear_pow(d + t, r, len), ref_twist(s, t).coeffs(), len)[static_cast<std::size_t>(r)];
        };
        for (int rep = 0; rep < 3; ++rep)
            for (int n = 2; n <= 4; ++n)
                for (int d = 1; d <= 3; ++d)
                    for (int r = 1; r < n; ++r) {
                        auto R = ring<Fp>(n + 1);
                        std::vector<kernel::Polynomial<Fp>> monos, forms;
                        for (const auto& m : engine::detail::monomials_of_degree(n + 1, d))
                            monos.push_back(kernel::Polynomial<Fp>::monomial(R, m, 1));
                        for (int i = 0; i < r; ++i) forms.push_back(kernel::random_combination<Fp>(monos, stream));
                        auto s = engine::segre_class(SegreJob<Fp>::create(kernel::Ideal<Fp>(R, forms), gen()));
                        for (Integer t = -3; t <= 3; ++t, ++cases)
                            c.expect_eq(contribution(s, d, r, t), chow::series::pow(d, r), "complete intersection");
                    }
        for (const auto& [name, d, r] : {std::tuple{"hyperplane", 1, 1}, std::tuple{"conic", 2, 1}, std::tuple{"quadrics", 2, 2}}) {
            auto s = engine::segre_class(job_of<Fp>(fixture(name), 5));
            for (Integer t = -6; t <= 6; ++t, ++cases)
                c.expect_eq(contribution(s, d, r, t), chow::series::pow(d, r), std::string(name));
        }
        return cases;
    });

    suite(c, "monomial-effectivity", [&] {
        int cases = 0;
        for (; cases < 25; ++cases) {
            const int d = 2 + cases % 3;
            const auto pool = engine::detail::monomials_of_degree(4, d);
            auto R = ring<Fp>(4);
            std::vector<kernel::Polynomial<Fp>> gens;
            const auto count = 2 + gen() % 4;
            while (gens.size() < count) {
                auto p = kernel::Polynomial<Fp>::monomial(R, pool[gen() % pool.size()], 1);
                if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
            }
            kernel::Ideal<Fp> I(R, gens);
            auto t = engine::tensored_segre(SegreJob<Fp>::create(I, gen()));
            c.expect(chow::effectivity_check(t).effective, "effective: " + I.to_string());
            c.expect(chow::huh_logconcavity_check(t, d), "log-concave: " + I.to_string());
        }
        return cases;
    });

    suite(c, "seed-independence", [&] {
        int cases = 0;
        for (const auto& fx : fixtures())
            for (int s = 0; s < 23; ++s, ++cases)
                c.expect_eq(engine::residual_degrees(job_of<Fp>(fx, gen())).N, fx.N, fx.name + " seed");
        return cases;
    });

    suite(c, "field-independence", [&] {
        int cases = 0;
        for (const auto& fx : fixtures()) {
            std::vector<std::uint32_t> primes{2147483647u, 1000003u, 32003u};
            std::uniform_int_distribution<std::uint32_t> draw(1u << 20, (1u << 31) - 1);
            while (primes.size() < 23) {
                try {
                    primes.push_back(Fp(draw(gen)).characteristic());
                } catch (const std::invalid_argument&) {
                }
            }
            for (auto p : primes) {
                c.expect_eq(engine::residual_degrees(job_of<Fp>(fx, gen(), Fp(p))).N, fx.N, fx.name + " Fp:" + std::to_string(p));
                ++cases;
            }
            c.expect_eq(engine::residual_degrees(job_of<Q>(fx, gen())).N, fx.N, fx.name + " Q");
            ++cases;
        }
        return cases;
    });

    suite(c, "fulton-identity", [&] {
        std::vector<ChowClass> classes;
        for (const auto& fx : fixtures()) classes.push_back(engine::segre_class(job_of<Fp>(fx, 3)));
        classes.push_back(engine::hypersurface_segre(2, 3));
        while (classes.size() < 40) classes.push_back(random_class(gen, 1 + static_cast<int>(classes.size() % 6)));
        int cases = 0;
        for (const auto& S : classes) {
            const int n = S.ambient_dim();
            const auto len = static_cast<std::size_t>(n) + 1;
            auto cF = ref_mul(ref_linear_pow(1, n + 1, len), S.coeffs(), len);
            for (Integer m = -3; m <= 3; ++m, ++cases) {
                // c(T P^n ⊗ O(m)) = (1 + (1+m)H)^{n+1} / (1 + mH)
                auto tangent = ref_mul(ref_linear_pow(1 + m, n + 1, len), ref_linear_pow(m, -1, len), len);
                auto lhs = ref_mul(tangent, ref_twist(S, m).coeffs(), len);
                auto rhs = ref_mul(ref_linear_pow(m, n, len), ref_twist(ChowClass(cF), m).coeffs(), len);
                c.expect_eq(lhs, rhs, "identity at m=" + std::to_string(m));
                c.expect_eq(chow::fulton_class(S), ChowClass(cF), "c_F");
            }
        }
        return cases;
    });
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
        {"monomial scheme, d = 8", criterion1},
        {"monomial scheme regenerated in degree 9", criterion2},
        {"Veronese surface", criterion3},
        {"conic: zeta function and joins", criterion4},
        {"CSM classes of plane curves over Q", criterion5},
        {"property suites", criterion6},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c(static_cast<int>(i) + 1, criteria[i].first);
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = seconds_since(t0);
        if (i != 5) c.expect(secs < 60.0, "runtime under a minute");
        all = c.report(secs) && all;
    }
    return all ? 0 : 1;
}
