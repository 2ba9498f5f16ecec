#include <gtest/gtest.h>

#include <map>

#include "segreta/kernel/hilbert.hpp"
#include "segreta/kernel/random.hpp"
#include "segreta/kernel/saturation.hpp"
#include "test_support.hpp"

using namespace segreta::kernel;
using segreta::testing::ideal;
using segreta::testing::kMonomialFixture;
using segreta::testing::kVeroneseFixture;
using segreta::testing::poly;
using segreta::testing::ring;

namespace {

using Fp = PrimeField;
using Poly = Polynomial<Fp>;

std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
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

// Row-reduced span of the degree-D part of an ideal, built only from products
// m * g with no Groebner machinery.
class DegreeSlice {
   public:
    DegreeSlice(const Ideal<Fp>& I, int D) : K_(I.ring()->field()) {
        const int n = I.nvars();
        int idx = 0;
        for (const auto& m : monomials_of_degree(n, D)) column_[m.exponents()] = idx++;
        width_ = idx;
        for (const auto& g : I.generators()) {
            int dg = *g.homogeneous_degree();
            if (dg > D) continue;
            for (const auto& m : monomials_of_degree(n, D - dg)) insert(row(g.times_term(m, K_.one())));
        }
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }
    bool contains(const Poly& f) {
        auto r = row(f);
        reduce(r);
        for (auto v : r)
            if (v) return false;
        return true;
    }

   private:
    std::vector<std::uint32_t> row(const Poly& f) const {
        std::vector<std::uint32_t> r(static_cast<std::size_t>(width_), 0);
        for (const auto& t : f.terms()) r[static_cast<std::size_t>(column_.at(t.mono.exponents()))] = t.coeff;
        return r;
    }
    void reduce(std::vector<std::uint32_t>& r) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            auto c = r[pivots_[k]];
            if (!c) continue;
            for (std::size_t j = 0; j < r.size(); ++j) r[j] = K_.sub(r[j], K_.mul(c, rows_[k][j]));
        }
    }
    void insert(std::vector<std::uint32_t> r) {
        reduce(r);
        std::size_t p = 0;
        while (p < r.size() && !r[p]) ++p;
        if (p == r.size()) return;
        auto inv = K_.inv(r[p]);
        for (auto& v : r) v = K_.mul(v, inv);
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            auto c = rows_[k][p];
            if (!c) continue;
            for (std::size_t j = 0; j < r.size(); ++j) rows_[k][j] = K_.sub(rows_[k][j], K_.mul(c, r[j]));
        }
        rows_.push_back(std::move(r));
        pivots_.push_back(p);
    }

    Fp K_;
    std::map<std::vector<int>, int> column_;
    int width_ = 0;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivots_;
};

std::int64_t binom(int n, int k) {
    if (k < 0 || n < k) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// dim (S/J)_D from the Hilbert series numerator / (1-t)^nvars.
std::int64_t hilbert_function(const IntPoly& numerator, int nvars, int D) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < numerator.size(); ++i)
        s += numerator[i] * binom(D - static_cast<int>(i) + nvars - 1, nvars - 1);
    return s;
}

Poly random_form(const RingPtr<Fp>& R, int d, std::mt19937_64& gen, int max_terms) {
    auto monos = monomials_of_degree(R->nvars(), d);
    std::vector<Poly::Term> terms;
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<int> coeff(1, 9);
    for (int i = 0; i < max_terms; ++i) terms.push_back({monos[pick(gen)], R->field().from_int(coeff(gen))});
    return Poly::from_terms(R, std::move(terms));
}

}  // namespace

TEST(Polynomial, ParsingAndArithmetic) {
    auto R = ring<Fp>(3);
    auto f = poly(R, "(x0 + x1)^2 - x0^2 - 2*x0*x1");
    EXPECT_EQ(f, poly(R, "x1^2"));
    EXPECT_EQ(poly(R, "-x0^2").to_string(), "-x0^2");
    auto g = poly(R, "x0*x1 - x2^2");
    auto h = poly(R, "x0 + 3*x2");
    EXPECT_EQ(*(g * h).divide_exact(h), g);
    EXPECT_FALSE(g.divide_exact(poly(R, "x0")).has_value());
    EXPECT_EQ(g.derivative(0), poly(R, "x1"));
    EXPECT_EQ(g.substitute(2, poly(R, "x0")), poly(R, "x0*x1 - x0^2"));
    EXPECT_EQ(*poly(R, "x0^3 + x1^3").homogeneous_degree(), 3);
    EXPECT_FALSE(poly(R, "x0^3 + x1").homogeneous_degree().has_value());
}

TEST(Polynomial, RingMismatchIsRejected) {
    auto A = ring<Fp>(3);
    auto B = ring<Fp>(3, Fp(101));
    EXPECT_THROW(poly(A, "x0") + poly(B, "x0"), RingMismatch);
    EXPECT_THROW(Ideal<Fp>(A, {poly(B, "x0")}), RingMismatch);
}

TEST(Ideal, ValidatesGenerators) {
    auto R = ring<Fp>(3);
    EXPECT_THROW(Ideal<Fp>(R, {}), std::invalid_argument);
    EXPECT_THROW(Ideal<Fp>(R, {Poly(R)}), std::invalid_argument);
    EXPECT_THROW(ideal(R, {"x0^2 + x1"}), std::invalid_argument);
    EXPECT_THROW(ideal(ring<Fp>(1), {"x0"}), std::invalid_argument);
}

TEST(Groebner, NormalFormOfSmallExample) {
    auto R = ring<Fp>(3);
    auto G = ideal(R, {"x0^2 - x1*x2", "x1^2"}).groebner_basis();
    EXPECT_TRUE(G.contains(poly(R, "x0^2*x1 - x1^2*x2 + x1^3")));
    EXPECT_FALSE(G.contains(poly(R, "x0*x1")));
    auto nf = normal_form(poly(R, "x0^2 + x0*x1"), G);
    EXPECT_EQ(nf, poly(R, "x1*x2 + x0*x1"));
}

TEST(Groebner, VeroneseBasis) {
    auto R = ring<Fp>(6);
    auto I = ideal(R, kVeroneseFixture);
    auto G = I.groebner_basis();
    ASSERT_EQ(G.size(), 6u);
    for (const auto& m : G.lead_monomials()) EXPECT_EQ(m.total_degree(), 2);
    // idempotence
    EXPECT_EQ(ideal_from_basis(G).groebner_basis(), G);
    auto h = hilbert_data(G);
    EXPECT_EQ(h.proj_dim, 2);
    EXPECT_EQ(h.degree, 4);
}

TEST(Groebner, GeneratorOrderDoesNotMatter) {
    auto R = ring<Fp>(6);
    std::vector<Poly> gens;
    for (auto s : kVeroneseFixture) gens.push_back(poly(R, s));
    auto G = Ideal<Fp>(R, gens).groebner_basis();
    std::mt19937_64 gen(3);
    for (int i = 0; i < 5; ++i) {
        std::shuffle(gens.begin(), gens.end(), gen);
        EXPECT_EQ(Ideal<Fp>(R, gens).groebner_basis(), G);
    }
}

TEST(Groebner, MembershipAgreesWithLinearAlgebra) {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 12; ++trial) {
        auto R = ring<Fp>(4, Fp(32003));
        std::vector<Poly> gens;
        int ngens = 2 + trial % 3;
        for (int i = 0; i < ngens; ++i) gens.push_back(random_form(R, 2 + (i + trial) % 2, gen, 3));
        Ideal<Fp> I(R, gens);
        auto G = I.groebner_basis();
        for (int D = 2; D <= 6; ++D) {
            DegreeSlice slice(I, D);
            // Hilbert function check.
            auto h = hilbert_numerator(G.lead_monomials(), 4);
            EXPECT_EQ(hilbert_function(h, 4, D), slice.width() - slice.rank()) << I.to_string() << " D=" << D;
            for (int k = 0; k < 4; ++k) {
                Poly f = random_form(R, D, gen, 4);
                if (k % 2 == 0) {
                    // force membership half the time
                    Poly acc(R);
                    for (const auto& g : gens) {
                        int e = D - *g.homogeneous_degree();
                        if (e >= 0) acc = acc + g * random_form(R, e, gen, 2);
                    }
                    f = acc.is_zero() ? f : acc;
                }
                EXPECT_EQ(G.contains(f), slice.contains(f)) << f.to_string() << " in " << I.to_string();
            }
        }
    }
}

TEST(Groebner, RationalAndModularAgree) {
    auto RQ = ring<RationalField>(6);
    auto RP = ring<Fp>(6);
    auto GQ = ideal(RQ, kVeroneseFixture).groebner_basis();
    auto GP = ideal(RP, kVeroneseFixture).groebner_basis();
    ASSERT_EQ(GQ.size(), GP.size());
    EXPECT_EQ(GQ.lead_monomials(), GP.lead_monomials());
    EXPECT_EQ(hilbert_data(GQ), hilbert_data(GP));
}

TEST(Quotient, MonomialQuotient) {
    auto R = ring<Fp>(4);
    auto J = ideal(R, {"x1^2*x2^6", "x1^7"});
    auto Q = ideal_quotient(J, poly(R, "x1^2"));
    EXPECT_TRUE(same_ideal(Q, ideal(R, {"x2^6", "x1^5"})));
    EXPECT_TRUE(same_ideal(ideal_quotient(J, poly(R, "x0")), J));
}

TEST(Quotient, IntersectionOfLines) {
    auto R = ring<Fp>(3);
    auto meet = intersect(ideal(R, {"x0", "x1"}), ideal(R, {"x1", "x2"}));
    EXPECT_TRUE(same_ideal(meet, ideal(R, {"x1", "x0*x2"})));
}

TEST(Saturation, RemovesEmbeddedAndIrrelevantComponents) {
    auto R = ring<Fp>(3);
    // (x0^2, x0*x1) = (x0) ∩ (x0^2, x1): saturating by the irrelevant ideal
    // leaves (x0^2, x0*x1); saturating by x1 leaves (x0).
    auto J = ideal(R, {"x0^2", "x0*x1"});
    for (auto m : {SaturationMethod::Bayer, SaturationMethod::QuotientChain}) {
        EXPECT_TRUE(same_ideal(saturate_by_element(J, poly(R, "x1"), m), ideal(R, {"x0"})));
        EXPECT_TRUE(same_ideal(saturate(J, ideal(R, {"x0", "x1", "x2"}), m), J));
        EXPECT_TRUE(same_ideal(saturate(ideal(R, {"x0^2", "x0*x1", "x0*x2"}), ideal(R, {"x0", "x1", "x2"}), m),
                               ideal(R, {"x0"})));
    }
}

TEST(Saturation, MethodsAgreeOnRandomInput) {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 15; ++trial) {
        auto R = ring<Fp>(4, Fp(32003));
        std::vector<Poly> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_form(R, 2, gen, 3));
        Ideal<Fp> J(R, gens);
        auto f = random_form(R, 1 + trial % 2, gen, 2);
        auto a = saturate_by_element(J, f, SaturationMethod::Bayer);
        auto b = saturate_by_element(J, f, SaturationMethod::QuotientChain);
        EXPECT_TRUE(same_ideal(a, b)) << J.to_string() << " : " << f.to_string();
        // fixed point
        EXPECT_TRUE(same_ideal(saturate_by_element(a, f), a));
        EXPECT_TRUE(ideal_contains(a, J));
    }
}

TEST(Saturation, IndependentOfGeneratorOrder) {
    auto R = ring<Fp>(4);
    auto J = ideal(R, {"x1^2*x2^6", "x1^3*x2^4"});
    auto a = saturate(J, ideal(R, kMonomialFixture));
    std::vector<Poly> rev;
    for (auto s : kMonomialFixture) rev.insert(rev.begin(), poly(R, s));
    auto b = saturate(J, Ideal<Fp>(R, rev));
    EXPECT_TRUE(same_ideal(a, b));
}

TEST(Hilbert, KnownSeries) {
    // twisted cubic: degree 3 curve
    auto R = ring<Fp>(4);
    auto h = hilbert_data(ideal(R, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"}));
    EXPECT_EQ(h.proj_dim, 1);
    EXPECT_EQ(h.degree, 3);
    EXPECT_EQ(h.numerator, (IntPoly{1, 2}));
    // complete intersection of a quadric and a cubic in P^3
    auto ci = hilbert_data(ideal(R, {"x0^2 + x1*x3", "x2^3 - x0*x1*x3"}));
    EXPECT_EQ(ci.proj_dim, 1);
    EXPECT_EQ(ci.degree, 6);
    // points and empties
    auto pt = hilbert_data(ideal(R, {"x0", "x1", "x2"}));
    EXPECT_EQ(pt.proj_dim, 0);
    EXPECT_EQ(pt.degree, 1);
    auto empty = hilbert_data(ideal(R, {"x0", "x1", "x2", "x3^5"}));
    EXPECT_TRUE(empty.empty);
    EXPECT_EQ(empty.proj_dim, -1);
    EXPECT_EQ(empty.degree, 0);
    auto unit = hilbert_data(Ideal<Fp>(R, {Poly::constant(R, 1)}));
    EXPECT_TRUE(unit.empty);
    EXPECT_TRUE(unit.numerator.empty());
}

TEST(Hilbert, IndependentOfMonomialOrder) {
    auto R = ring<Fp>(6);
    auto I = ideal(R, kVeroneseFixture);
    auto a = hilbert_data(buchberger(I, MonomialOrder::grevlex(6)));
    auto b = hilbert_data(buchberger(I, MonomialOrder::weighted_grevlex({1, 2, 3, 1, 2, 3})));
    EXPECT_EQ(a, b);
}

TEST(Random, CombinationIsDeterministic) {
    auto R = ring<Fp>(6);
    auto I = ideal(R, kVeroneseFixture);
    SeedStream s1(42), s2(42), s3(43);
    auto a = random_combination(I, s1);
    EXPECT_EQ(a, random_combination(I, s2));
    EXPECT_FALSE(a == random_combination(I, s3));
    EXPECT_EQ(*a.homogeneous_degree(), 2);
    SeedStream base(9);
    EXPECT_EQ(base.derive(1).next(), base.derive(1).next());
    EXPECT_NE(base.derive(1).next(), base.derive(2).next());
}

TEST(Random, CombinationRejectsMixedDegrees) {
    auto R = ring<Fp>(3);
    SeedStream s(1);
    EXPECT_THROW(random_combination(ideal(R, {"x0", "x1^2"}), s), std::invalid_argument);
}

TEST(Random, CoefficientsLookUniform) {
    // Over F_7 each coefficient of x0 in c0*x0 + c1*x1 should be uniform on 0..6.
    auto R = ring<Fp>(2, Fp(7));
    auto I = ideal(R, {"x0", "x1"});
    SeedStream s(2024);
    std::vector<int> hits(7, 0);
    const int draws = 7000;
    for (int i = 0; i < draws; ++i) {
        auto f = random_combination(I, s);
        std::uint32_t c = 0;
        for (const auto& t : f.terms())
            if (t.mono[0] == 1) c = t.coeff;
        ++hits[c];
    }
    double chi2 = 0;
    for (int h : hits) chi2 += (h - draws / 7.0) * (h - draws / 7.0) / (draws / 7.0);
    EXPECT_LT(chi2, 22.46);  // 6 degrees of freedom, p = 0.001
}

namespace {

using Qq = RationalField;

Polynomial<Fp> reduce_mod(const Polynomial<Qq>& f, const RingPtr<Fp>& R) {
    std::vector<Polynomial<Fp>::Term> terms;
    for (const auto& t : f.terms()) terms.push_back({t.mono, R->field().from_rational(t.coeff)});
    return Polynomial<Fp>::from_terms(R, std::move(terms));
}

// Random form with integer coefficients, built in both rings from the same data.
std::pair<Polynomial<Qq>, Polynomial<Fp>> random_pair(const RingPtr<Qq>& RQ, const RingPtr<Fp>& RP, int d,
                                                      std::mt19937_64& gen, int nterms) {
    auto monos = monomials_of_degree(RQ->nvars(), d);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<long> coeff(-500, 500);
    std::vector<Polynomial<Qq>::Term> tq;
    for (int i = 0; i < nterms; ++i) tq.push_back({monos[pick(gen)], mpq_class(coeff(gen))});
    auto q = Polynomial<Qq>::from_terms(RQ, std::move(tq));
    return {q, reduce_mod(q, RP)};
}

}  // namespace

TEST(MonomialOrder, LastVariableBreaksTies) {
    auto plain = MonomialOrder::weighted_grevlex({1, 1, 1});
    auto moved = MonomialOrder::weighted_grevlex({1, 1, 1}, 0);
    EXPECT_EQ(plain.last_variable(), -1);
    EXPECT_EQ(moved.last_variable(), 0);
    const Monomial a(3, {1, 1, 0}), b(3, {0, 1, 1});
    EXPECT_TRUE(plain.compare(a, b) > 0);
    EXPECT_TRUE(moved.compare(a, b) < 0);
    const Monomial c(3, {1, 0, 1}), e(3, {0, 2, 0});
    EXPECT_TRUE(moved.compare(c, e) < 0);
    EXPECT_TRUE(moved.compare(c, c) == 0);
    EXPECT_THROW(MonomialOrder::weighted_grevlex({1, 1}, 2), std::invalid_argument);
}

TEST(Saturation, ByVariableMatchesQuotientChain) {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 20; ++trial) {
        auto R = ring<Fp>(4, Fp(32003));
        std::vector<Poly> gens;
        for (int i = 0; i < 3; ++i) {
            auto x = Poly::variable(R, static_cast<int>(gen() % 4));
            gens.push_back(random_form(R, 1 + i % 2, gen, 2) * x);
        }
        Ideal<Fp> J(R, gens);
        const int v = trial % 4;
        auto a = saturate_by_variable(J, v);
        auto b = saturate_by_element(J, Poly::variable(R, v), SaturationMethod::QuotientChain);
        EXPECT_TRUE(same_ideal(a, b)) << J.to_string() << " : x" << v;
    }
    auto R = ring<Fp>(3);
    EXPECT_TRUE(same_ideal(saturate_by_variable(ideal(R, {"x0^2", "x0*x1"}), 1), ideal(R, {"x0"})));
    EXPECT_THROW(saturate_by_variable(ideal(R, {"x0"}), 3), std::out_of_range);
}

TEST(Groebner, RationalBasisReducesToModularBasis) {
    std::mt19937_64 gen(23);
    const Fp K(1000003);
    for (int trial = 0; trial < 15; ++trial) {
        auto RQ = ring<Qq>(4);
        auto RP = ring<Fp>(4, K);
        std::vector<Polynomial<Qq>> gq;
        std::vector<Poly> gp;
        for (int i = 0; i < 3; ++i) {
            auto [q, p] = random_pair(RQ, RP, 2 + (i + trial) % 2, gen, 4);
            if (q.is_zero() || p.is_zero()) continue;
            gq.push_back(q);
            gp.push_back(p);
        }
        if (gq.empty()) continue;
        auto GQ = Ideal<Qq>(RQ, gq).groebner_basis();
        auto GP = Ideal<Fp>(RP, gp).groebner_basis();
        // A large prime is good for these inputs; the reduced bases then agree.
        ASSERT_EQ(GQ.size(), GP.size());
        for (std::size_t i = 0; i < GQ.size(); ++i) {
            const auto& g = GQ.polynomials()[i];
            EXPECT_EQ(g.lead_coeff(), 1);
            EXPECT_EQ(reduce_mod(g, RP), GP.polynomials()[i]);
        }
    }
}

TEST(Groebner, RationalNormalFormIsExact) {
    std::mt19937_64 gen(29);
    auto RQ = ring<Qq>(4);
    auto RP = ring<Fp>(4, Fp(1000003));
    auto G = ideal(RQ, {"3*x0^2 - 7*x1*x2", "5*x1^2 + 2*x0*x3", "x2^2 - 11*x0*x1 + x3^2"}).groebner_basis();
    for (int trial = 0; trial < 30; ++trial) {
        auto f = random_pair(RQ, RP, 3, gen, 5).first;
        auto h = random_pair(RQ, RP, 1, gen, 2).first;
        auto nf = G.normal_form(f);
        for (const auto& t : nf.terms())
            for (const auto& m : G.lead_monomials()) EXPECT_FALSE(m.divides(t.mono));
        EXPECT_EQ(G.normal_form(nf), nf);
        EXPECT_TRUE(G.contains(f - nf));
        const mpq_class c(-7, 13);
        EXPECT_EQ(G.normal_form(f.scaled(c)), nf.scaled(c));
        EXPECT_EQ(G.normal_form(f + h * G.polynomials()[trial % G.size()]), nf);
    }
}
