#include <gtest/gtest.h>

#include <random>

#include "ydlab/linalg.hpp"

using namespace ydlab;

namespace {

template <FiniteField F>
std::vector<Vector<F>> all_vectors(const F& field, std::size_t n) {
    std::vector<Vector<F>> out;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= field.order();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vector<F> v;
        auto t = idx;
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(field.element(t % field.order()));
            t /= field.order();
        }
        out.push_back(v);
    }
    return out;
}

template <ExactField F, class Rng>
Matrix<F> random_matrix(const F& field, std::size_t r, std::size_t c, Rng& rng) {
    Matrix<F> m(field, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = field.random(rng);
    return m;
}

}  // namespace

TEST(Field, PrimeFieldArithmetic) {
    PrimeField f(7);
    EXPECT_EQ(f.parse("-1"), f.from_int(6));
    EXPECT_EQ(f.parse("3/2"), f.from_int(5));  // 2*5 = 10 = 3 mod 7
    EXPECT_EQ(f.format(f.parse("-15")), "6");
    for (std::uint64_t a = 1; a < 7; ++a) EXPECT_EQ(f.element(a) * f.element(a).inverse(), f.one());
    EXPECT_THROW(PrimeField(8), Error);
    EXPECT_THROW(f.parse("x1"), Error);
}

TEST(Field, RationalSerialization) {
    RationalField q;
    EXPECT_EQ(q.format(q.parse("4/2")), "2");
    EXPECT_EQ(q.format(q.parse("-6/4")), "-3/2");
    EXPECT_EQ(q.format(q.parse("3/-9")), "-1/3");
    EXPECT_EQ(q.parse("1/3") + q.parse("1/6"), q.parse("1/2"));
    EXPECT_THROW(q.parse("1/0"), Error);
    EXPECT_THROW(q.parse("1.5"), Error);
}

TEST(Kernel, IdentityHasZeroKernel) {
    PrimeField f(5);
    auto k = kernel(Matrix<PrimeField>::identity(f, 3));
    EXPECT_EQ(k.dim(), 0u);
    EXPECT_EQ(k.ambient(), 3u);
}

TEST(Kernel, ZeroMapOverQ) {
    RationalField q;
    auto k = kernel(Matrix<RationalField>(q, 2, 4));
    EXPECT_EQ(k.dim(), 4u);
    EXPECT_EQ(k, Subspace<RationalField>::full(q, 4));
}

TEST(Kernel, NoRowsMeansFullSpace) {
    PrimeField f(3);
    EXPECT_EQ(kernel(Matrix<PrimeField>(f, 0, 5)).dim(), 5u);
}

TEST(Kernel, RankOneOverGF3MatchesEnumeration) {
    PrimeField f(3);
    auto a = Matrix<PrimeField>::from_ints(f, {{1, 1}, {2, 2}});
    auto k = kernel(a);
    ASSERT_EQ(k.dim(), 1u);
    EXPECT_EQ(k.basis()[0], (Vector<PrimeField>{f.from_int(1), f.from_int(2)}));

    std::vector<Vector<PrimeField>> solutions;
    for (const auto& v : all_vectors(f, 2))
        if (is_zero_vector<PrimeField>(a.apply(v))) solutions.push_back(v);
    EXPECT_EQ(solutions.size(), 3u);  // 3^dim
    EXPECT_EQ(Subspace<PrimeField>::span(f, 2, solutions), k);
}

TEST(SolveAffine, IdentitySystem) {
    RationalField q;
    Vector<RationalField> b{q.parse("1/2"), q.parse("-3"), q.parse("7")};
    auto r = solve_affine(Matrix<RationalField>::identity(q, 3), std::span<const Rational>(b));
    auto* s = std::get_if<AffineSolution<RationalField>>(&r);
    ASSERT_NE(s, nullptr);
    EXPECT_EQ(s->particular, b);
    EXPECT_EQ(s->homogeneous.dim(), 0u);
}

TEST(SolveAffine, ZeroMatrixNonzeroRhsIsInconsistentWithWitness) {
    PrimeField f(5);
    Matrix<PrimeField> a(f, 2, 2);
    Vector<PrimeField> b{f.from_int(0), f.from_int(3)};
    auto r = solve_affine(a, std::span<const Fp>(b));
    auto* bad = std::get_if<Inconsistent<PrimeField>>(&r);
    ASSERT_NE(bad, nullptr);
    auto ya = a.transpose().apply(bad->witness);
    EXPECT_TRUE(is_zero_vector<PrimeField>(ya));
    auto yb = f.zero();
    for (std::size_t i = 0; i < b.size(); ++i) yb += bad->witness[i] * b[i];
    EXPECT_FALSE(yb.is_zero());
}

TEST(SolveAffine, SingleEquationOverGF2MatchesEnumeration) {
    PrimeField f(2);
    auto a = Matrix<PrimeField>::from_ints(f, {{1, 1}});
    Vector<PrimeField> b{f.zero()};
    auto r = solve_affine(a, std::span<const Fp>(b));
    auto* s = std::get_if<AffineSolution<PrimeField>>(&r);
    ASSERT_NE(s, nullptr);
    EXPECT_EQ(s->particular, (Vector<PrimeField>{f.zero(), f.zero()}));
    std::vector<Vector<PrimeField>> sols;
    for (const auto& v : all_vectors(f, 2))
        if (a.apply(v) == b) sols.push_back(v);
    EXPECT_EQ(sols.size(), 2u);
    EXPECT_EQ(s->homogeneous, Subspace<PrimeField>::span(f, 2, sols));
    EXPECT_EQ(s->homogeneous.basis()[0], (Vector<PrimeField>{f.one(), f.one()}));
}

TEST(SolveAffine, RandomConsistentSystemsAreSolvedExactly) {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u, 7u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            auto a = random_matrix(f, r, c, rng);
            Vector<PrimeField> x0;
            for (std::size_t j = 0; j < c; ++j) x0.push_back(f.random(rng));
            auto b = a.apply(x0);
            auto res = solve_affine(a, std::span<const Fp>(b));
            auto* s = std::get_if<AffineSolution<PrimeField>>(&res);
            ASSERT_NE(s, nullptr);
            EXPECT_EQ(a.apply(s->particular), b);
            for (const auto& h : s->homogeneous.basis()) EXPECT_TRUE(is_zero_vector<PrimeField>(a.apply(h)));
        }
    }
    RationalField q;
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        auto a = random_matrix(q, r, c, rng);
        Vector<RationalField> x0;
        for (std::size_t j = 0; j < c; ++j) x0.push_back(q.random(rng));
        auto b = a.apply(x0);
        auto res = solve_affine(a, std::span<const Rational>(b));
        auto* s = std::get_if<AffineSolution<RationalField>>(&res);
        ASSERT_NE(s, nullptr);
        EXPECT_EQ(a.apply(s->particular), b);
    }
}

TEST(Kernel, RankNullityAndCanonicalIdempotence) {
    std::mt19937_64 rng(5);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 80; ++trial) {
            std::size_t r = rng() % 7, c = 1 + rng() % 7;
            auto a = random_matrix(f, r, c, rng);
            // sprinkle dependent rows
            if (r >= 2 && rng() % 2)
                for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) + a(1, j);
            auto k = kernel(a);
            EXPECT_EQ(rank(a) + k.dim(), c);
            for (const auto& v : k.basis()) EXPECT_TRUE(is_zero_vector<PrimeField>(a.apply(v)));
            auto again = Subspace<PrimeField>::span(f, c, k.basis());
            EXPECT_EQ(again, k);
            EXPECT_EQ(again.basis(), k.basis());
        }
    }
}

TEST(Subspace, IntersectionSumDimensionFormula) {
    std::mt19937_64 rng(17);
    PrimeField f(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + rng() % 5;
        std::vector<Vector<PrimeField>> a, b;
        for (std::size_t i = 0; i < 1 + rng() % n; ++i) a.push_back(random_matrix(f, 1, n, rng).data());
        for (std::size_t i = 0; i < 1 + rng() % n; ++i) b.push_back(random_matrix(f, 1, n, rng).data());
        auto u = Subspace<PrimeField>::span(f, n, a), w = Subspace<PrimeField>::span(f, n, b);
        auto cap = intersect(u, w);
        EXPECT_EQ((u + w).dim() + cap.dim(), u.dim() + w.dim());
        EXPECT_TRUE(cap.is_subspace_of(u));
        EXPECT_TRUE(cap.is_subspace_of(w));
        auto q = annihilator(u);
        for (const auto& v : u.basis()) EXPECT_TRUE(is_zero_vector<PrimeField>(q.apply(v)));
        EXPECT_EQ(q.rows() + u.dim(), n);
    }
}

TEST(Inverse, SingularAndRegular) {
    PrimeField f(5);
    auto a = Matrix<PrimeField>::from_ints(f, {{1, 2}, {3, 4}});
    auto inv = inverse(a);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(a * *inv, (Matrix<PrimeField>::identity(f, 2)));
    EXPECT_FALSE(inverse(Matrix<PrimeField>::from_ints(f, {{1, 2}, {2, 4}})).has_value());
}

TEST(MinpolySplit, Identity) {
    PrimeField f(7);
    auto fac = minpoly_split(Matrix<PrimeField>::identity(f, 4));
    ASSERT_EQ(fac.size(), 1u);
    EXPECT_EQ(fac[0].poly, Polynomial<PrimeField>::from_ints(f, {-1, 1}));
    EXPECT_EQ(fac[0].multiplicity, 1u);
}

TEST(MinpolySplit, NilpotentJordanBlock) {
    RationalField q;
    auto fac = minpoly_split(Matrix<RationalField>::from_ints(q, {{0, 1}, {0, 0}}));
    ASSERT_EQ(fac.size(), 1u);
    EXPECT_EQ(fac[0].poly, Polynomial<RationalField>::x(q));
    EXPECT_EQ(fac[0].multiplicity, 2u);
}

TEST(MinpolySplit, CompanionOfXSquaredPlusOneOverGF5) {
    PrimeField f(5);
    // companion matrix of x^2 + 1
    auto c = Matrix<PrimeField>::from_ints(f, {{0, -1}, {1, 0}});
    // oracle: roots of x^2+1 by enumeration
    std::vector<std::uint32_t> roots;
    for (std::uint32_t r = 0; r < 5; ++r)
        if ((f.element(r) * f.element(r) + f.one()).is_zero()) roots.push_back(r);
    ASSERT_EQ(roots, (std::vector<std::uint32_t>{2, 3}));
    auto fac = minpoly_split(c);
    ASSERT_EQ(fac.size(), 2u);
    for (auto r : roots) {
        auto expected = Polynomial<PrimeField>::linear(f, f.element(r));
        auto it = std::find_if(fac.begin(), fac.end(), [&](const auto& fa) { return fa.poly == expected; });
        ASSERT_NE(it, fac.end()) << "missing factor " << expected;
        EXPECT_EQ(it->multiplicity, 1u);
    }
}

TEST(Factor, RepeatedAndIrreducibleOverGF2) {
    PrimeField f(2);
    using P = Polynomial<PrimeField>;
    auto xp1 = P::from_ints(f, {1, 1});
    auto q = P::from_ints(f, {1, 1, 1});
    auto quartic = P::from_ints(f, {1, 1, 0, 0, 1});  // x^4 + x + 1, irreducible
    auto fac = factor(xp1 * xp1 * xp1 * q * q * quartic);
    ASSERT_EQ(fac.size(), 3u);
    EXPECT_EQ(fac[0].poly, xp1);
    EXPECT_EQ(fac[0].multiplicity, 3u);
    EXPECT_EQ(fac[1].poly, q);
    EXPECT_EQ(fac[1].multiplicity, 2u);
    EXPECT_EQ(fac[2].poly, quartic);
    EXPECT_EQ(fac[2].multiplicity, 1u);
}

TEST(Factor, FrobeniusPolynomialSplitsCompletely) {
    PrimeField f(7);
    using P = Polynomial<PrimeField>;
    std::vector<Fp> c(8, f.zero());
    c[7] = f.one();
    c[1] = -f.one();
    auto fac = factor(P(f, c));  // x^7 - x
    EXPECT_EQ(fac.size(), 7u);
    for (const auto& fa : fac) EXPECT_EQ(fa.poly.degree(), 1);
}

TEST(Factor, RationalQuarticsAndLimits) {
    RationalField q;
    using P = Polynomial<RationalField>;
    auto sophie = factor(P::from_ints(q, {4, 0, 0, 0, 1}));  // x^4 + 4
    ASSERT_EQ(sophie.size(), 2u);
    EXPECT_EQ(sophie[0].poly * sophie[1].poly, P::from_ints(q, {4, 0, 0, 0, 1}));
    auto biquad = factor(P::from_ints(q, {1, 0, 1}) * P::from_ints(q, {3, 0, 1}));
    ASSERT_EQ(biquad.size(), 2u);
    EXPECT_EQ(factor(P::from_ints(q, {-2, 0, 0, 0, 1})).size(), 1u);  // x^4 - 2
    EXPECT_EQ(factor(P::from_ints(q, {-2, 0, 0, 1})).size(), 1u);     // x^3 - 2
    auto mixed = factor(P::from_ints(q, {-1, 1}) * P::from_ints(q, {-1, 1}) * P::from_ints(q, {1, 0, 1}));
    ASSERT_EQ(mixed.size(), 2u);
    EXPECT_EQ(mixed[0].multiplicity, 2u);
    try {
        factor(P::from_ints(q, {-2, 0, 0, 0, 0, 1}));
        FAIL() << "expected Unsupported";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::Unsupported);
    }
}

TEST(MinpolySplit, FactorsAnnihilateRandomMatrices) {
    std::mt19937_64 rng(23);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t n = 1 + rng() % 5;
            auto a = random_matrix(f, n, n, rng);
            auto fac = minpoly_split(a);
            auto prod = Polynomial<PrimeField>::constant(f, f.one());
            for (const auto& fa : fac) {
                EXPECT_EQ(fa.poly, fa.poly.monic());
                for (std::size_t k = 0; k < fa.multiplicity; ++k) prod = prod * fa.poly;
            }
            EXPECT_EQ(prod, minimal_polynomial(a));
            EXPECT_TRUE(prod.evaluate(a).is_zero());
            for (std::size_t i = 0; i < fac.size(); ++i)
                for (std::size_t j = i + 1; j < fac.size(); ++j) EXPECT_FALSE(fac[i].poly == fac[j].poly);
        }
    }
}
