#include <gtest/gtest.h>

#include <algorithm>

#include "ydlab/hopf.hpp"
#include "support.hpp"

using namespace ydlab;
using testing_support::Constants;
using testing_support::surviving_mutations;

namespace {

const PrimeField gf2(2), gf3(3), gf5(5), gf7(7);
const RationalField qq;

/// Every vector of GF(p)^n, used as a brute-force oracle.
std::vector<Vector<PrimeField>> all_vectors(const PrimeField& k, std::size_t n) {
    std::vector<Vector<PrimeField>> out;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= k.order();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vector<PrimeField> v;
        auto t = idx;
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(k.element(t % k.order()));
            t /= k.order();
        }
        out.push_back(v);
    }
    return out;
}

std::vector<Vector<PrimeField>> brute_force_characters(const HopfAlgebra<PrimeField>& h) {
    std::vector<Vector<PrimeField>> out;
    const auto& k = h.field();
    for (const auto& chi : all_vectors(k, h.dim())) {
        if (!(dot(k, chi, h.unit()) == k.one())) continue;
        bool ok = true;
        for (std::size_t a = 0; a < h.dim() && ok; ++a)
            for (std::size_t b = 0; b < h.dim() && ok; ++b) ok = dot(k, chi, h.product(a, b)) == chi[a] * chi[b];
        if (ok) out.push_back(chi);
    }
    return out;
}

template <class V>
void sort_vectors(std::vector<V>& vs) {
    std::sort(vs.begin(), vs.end(), [](const V& a, const V& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](const Fp& x, const Fp& y) { return x.value() < y.value(); });
    });
}

}  // namespace

TEST(Verify, ShippedFixturesPass) {
    EXPECT_TRUE(verify_hopf(cyclic_group_algebra(gf2, 2)).passed);
    EXPECT_TRUE(verify_hopf(cyclic_group_algebra(qq, 2)).passed);
    EXPECT_TRUE(verify_hopf(cyclic_group_algebra(gf3, 3)).passed);
    EXPECT_TRUE(verify_hopf(s3_group_algebra(gf7)).passed);
    EXPECT_TRUE(verify_hopf(dual(cyclic_group_algebra(gf5, 4))).passed);

    auto c4 = verify_hopf(cyclic_group_algebra(gf5, 4));
    EXPECT_TRUE(c4.passed);
    EXPECT_TRUE(c4.flags.commutative);
    EXPECT_TRUE(c4.flags.cocommutative);

    auto h4 = verify_hopf(sweedler_h4(gf5));
    EXPECT_TRUE(h4.passed) << (h4.details.empty() ? "" : h4.details.front());
    EXPECT_FALSE(h4.flags.commutative);
    EXPECT_FALSE(h4.flags.cocommutative);

    auto s3 = verify_hopf(s3_group_algebra(gf7));
    EXPECT_FALSE(s3.flags.commutative);
    EXPECT_TRUE(s3.flags.cocommutative);
}

TEST(Verify, TrivialGroup) {
    auto h = group_algebra(qq, CayleyTable{{0}});
    EXPECT_EQ(h.dim(), 1u);
    EXPECT_TRUE(verify_hopf(h).passed);
    EXPECT_TRUE(h.antipode() == Matrix<RationalField>::identity(qq, 1));
    EXPECT_TRUE(is_semisimple(h));
    EXPECT_TRUE(is_cosemisimple(h));
}

TEST(Verify, SweedlerRelationsByHand) {
    auto h = sweedler_h4(gf5);
    enum { One, G, X, GX };
    auto minus = [&](Vector<PrimeField> v) {
        for (auto& x : v) x = -x;
        return v;
    };
    EXPECT_EQ(h.product(G, G), h.basis_vector(One));
    EXPECT_TRUE(is_zero_vector<PrimeField>(h.product(X, X)));
    EXPECT_EQ(h.product(X, G), minus(h.basis_vector(GX)));
    EXPECT_EQ(h.product(G, X), h.basis_vector(GX));
    // Delta(gx) = Delta(g) Delta(x)
    EXPECT_EQ(h.comult_coeff(GX, GX, G), gf5.one());
    EXPECT_EQ(h.comult_coeff(GX, One, GX), gf5.one());
}

TEST(Verify, PerturbedMultiplicationFails) {
    Constants<PrimeField> c(cyclic_group_algebra(gf5, 4));
    c.mult[(1 * 4 + 2) * 4 + 3] += gf5.one();
    auto r = verify_hopf(c.build());
    EXPECT_FALSE(r.passed);
    bool named = std::count(r.failures.begin(), r.failures.end(), "associativity") ||
                 std::count(r.failures.begin(), r.failures.end(), "bialgebra");
    EXPECT_TRUE(named);
}

TEST(Verify, EverySingleEntryMutationFailsOverGF2AndGF3) {
    std::size_t tried = 0;
    EXPECT_EQ(surviving_mutations(cyclic_group_algebra(gf2, 2), &tried), 0u);
    EXPECT_EQ(tried, 2u + 8 + 8 + 2 + 4);
    EXPECT_EQ(surviving_mutations(cyclic_group_algebra(gf3, 3), &tried), 0u);
    EXPECT_EQ(tried, 2u * (3 + 27 + 27 + 3 + 9));
}

TEST(Verify, MalformedTensorsRejected) {
    EXPECT_THROW(HopfAlgebra<PrimeField>(gf5, {"a", "b"}, Vector<PrimeField>(2, gf5.one()),
                                         std::vector<Fp>(7, gf5.zero()), {{}, {}}, Vector<PrimeField>(2, gf5.one()),
                                         Matrix<PrimeField>::identity(gf5, 2)),
                 Error);
    try {
        HopfAlgebra<PrimeField>(gf5, {"a"}, {gf5.one()}, {gf5.one()}, {{{0, 3, gf5.one()}}}, {gf5.one()},
                                Matrix<PrimeField>::identity(gf5, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DimensionMismatch);
    }
}

TEST(Antipode, GroupAlgebrasAreInvolutive) {
    for (const auto& h : {cyclic_group_algebra(gf5, 4), s3_group_algebra(gf7), cyclic_group_algebra(gf2, 2)}) {
        EXPECT_TRUE(antipode_inverse(h) == h.antipode());
        EXPECT_TRUE(h.antipode() * h.antipode() == Matrix<PrimeField>::identity(h.field(), h.dim()));
    }
}

TEST(Antipode, SweedlerHasOrderFour) {
    auto h = sweedler_h4(gf5);
    const auto& s = h.antipode();
    auto id = Matrix<PrimeField>::identity(gf5, 4);
    EXPECT_FALSE(s * s == id);
    EXPECT_TRUE(matrix_power(s, 4) == id);
    EXPECT_TRUE(antipode_inverse(h) == matrix_power(s, 3));
    EXPECT_TRUE(s * antipode_inverse(h) == id);
}

TEST(Antipode, SingularIsRejected) {
    Constants<PrimeField> c(cyclic_group_algebra(gf5, 4));
    std::fill(c.antipode.begin(), c.antipode.end(), gf5.zero());
    auto h = c.build();
    try {
        antipode_inverse(h);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotBijective);
    }
    auto r = verify_hopf(h);
    EXPECT_FALSE(r.passed);
    EXPECT_NE(std::find(r.failures.begin(), r.failures.end(), "antipode-bijective"), r.failures.end());
}

TEST(Dual, DoubleDualHasSameConstants) {
    for (const auto& h : {cyclic_group_algebra(gf5, 4), sweedler_h4(gf5), s3_group_algebra(gf7)})
        EXPECT_TRUE(same_structure(dual(dual(h)), h));
    EXPECT_TRUE(same_structure(dual(dual(cyclic_group_algebra(qq, 2))), cyclic_group_algebra(qq, 2)));
}

TEST(Dual, CyclicDualIsCommutativeAndCocommutative) {
    auto d = dual(cyclic_group_algebra(gf5, 4));
    auto r = verify_hopf(d);
    EXPECT_TRUE(r.passed);
    EXPECT_TRUE(r.flags.commutative);
    EXPECT_TRUE(r.flags.cocommutative);
    EXPECT_EQ(d.dim(), 4u);
}

TEST(Dual, S3DualIsCommutativeNotCocommutative) {
    auto r = verify_hopf(dual(s3_group_algebra(gf7)));
    EXPECT_TRUE(r.passed);
    EXPECT_TRUE(r.flags.commutative);
    EXPECT_FALSE(r.flags.cocommutative);
}

// Search for a Hopf isomorphism H4 -> H4*. It must send 1, g to the two
// grouplikes of the dual, and is then fixed by the image of x.
TEST(Dual, SweedlerIsSelfDual) {
    auto h = sweedler_h4(gf5);
    auto d = dual(h);
    ASSERT_TRUE(verify_hopf(d).passed);
    auto gl = grouplikes(d);
    ASSERT_EQ(gl.size(), 2u);
    auto g_image = gl[0] == d.unit() ? gl[1] : gl[0];
    std::size_t found = 0;
    for (const auto& x_image : all_vectors(gf5, 4)) {
        auto gx_image = d.multiply(g_image, x_image);
        auto phi = Matrix<PrimeField>::from_columns(gf5, 4, {d.unit(), g_image, x_image, gx_image});
        if (!inverse(phi)) continue;
        bool ok = true;
        for (std::size_t a = 0; a < 4 && ok; ++a)
            for (std::size_t b = 0; b < 4 && ok; ++b)
                ok = phi.apply(h.product(a, b)) == d.multiply(phi.column(a), phi.column(b));
        for (std::size_t a = 0; a < 4 && ok; ++a) {
            ok = d.apply_counit(phi.column(a)) == h.counit()[a];
            auto lhs = zero_vector(gf5, 16);
            auto col = phi.column(a);
            for (std::size_t m = 0; m < 4; ++m)
                for (const auto& t : d.comult(m)) lhs[t.left * 4 + t.right] += col[m] * t.coeff;
            auto rhs = zero_vector(gf5, 16);
            for (const auto& t : h.comult(a)) {
                auto l = phi.column(t.left), r = phi.column(t.right);
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 4; ++j) rhs[i * 4 + j] += t.coeff * l[i] * r[j];
            }
            ok = ok && lhs == rhs;
        }
        if (ok) ++found;
    }
    EXPECT_GT(found, 0u);
}

TEST(Integrals, GF2CyclicIsNotSemisimple) {
    auto h = cyclic_group_algebra(gf2, 2);
    auto lambda = left_integral(h);
    EXPECT_EQ(lambda, (Vector<PrimeField>{gf2.one(), gf2.one()}));
    EXPECT_TRUE(h.apply_counit(lambda).is_zero());
    EXPECT_FALSE(is_semisimple(h));
    EXPECT_TRUE(is_cosemisimple(h));
}

TEST(Integrals, GF5CyclicIsSemisimple) {
    auto h = cyclic_group_algebra(gf5, 4);
    auto lambda = left_integral(h);
    EXPECT_EQ(lambda, Vector<PrimeField>(4, gf5.one()));
    EXPECT_EQ(h.apply_counit(lambda), gf5.from_int(4));
    EXPECT_TRUE(is_semisimple(h));
    EXPECT_TRUE(is_cosemisimple(h));
    auto d = dual(h);
    auto dual_lambda = left_integral(d);
    EXPECT_EQ(dual_lambda, h.unit());
}

TEST(Integrals, RationalC2) {
    auto h = cyclic_group_algebra(qq, 2);
    EXPECT_EQ(h.apply_counit(left_integral(h)), qq.from_int(2));
    EXPECT_TRUE(is_semisimple(h));
}

TEST(Integrals, SweedlerIsNeitherSemisimpleNorCosemisimple) {
    auto h = sweedler_h4(gf5);
    auto lambda = left_integral(h);
    EXPECT_EQ(lambda, (Vector<PrimeField>{gf5.zero(), gf5.zero(), gf5.one(), gf5.one()}));
    EXPECT_FALSE(is_semisimple(h));
    EXPECT_FALSE(is_cosemisimple(h));
}

TEST(Integrals, S3OverGF7) {
    auto h = s3_group_algebra(gf7);
    EXPECT_EQ(h.dim(), 6u);
    EXPECT_TRUE(is_semisimple(h));
    EXPECT_TRUE(is_cosemisimple(h));
}

TEST(Integrals, Maschke) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        PrimeField k(p);
        for (std::size_t n : {2u, 3u, 4u, 6u}) {
            auto h = cyclic_group_algebra(k, n);
            EXPECT_EQ(is_semisimple(h), n % p != 0) << "C" << n << " over GF(" << p << ")";
            EXPECT_TRUE(is_cosemisimple(h));
        }
        EXPECT_EQ(is_semisimple(s3_group_algebra(k)), 6 % p != 0);
        EXPECT_TRUE(is_cosemisimple(s3_group_algebra(k)));
    }
}

TEST(Integrals, DegenerateSpaceIsReported) {
    // zero multiplication: every vector is an integral
    Constants<PrimeField> c(cyclic_group_algebra(gf3, 3));
    std::fill(c.mult.begin(), c.mult.end(), gf3.zero());
    try {
        left_integrals(c.build());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DegenerateIntegralSpace);
    }
}

TEST(Constructors, RejectNonGroups) {
    auto expect = [](const CayleyTable& t) {
        try {
            group_algebra(gf5, t);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::NotAGroup);
        }
    };
    expect({});
    expect({{0, 1}, {1, 1}});          // no inverse for 1
    expect({{1, 0}, {0, 0}});          // no identity
    expect({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}});  // not a latin square, not associative
    expect({{0, 2}, {1, 0}});          // entry out of range
}

TEST(Constructors, SweedlerNeedsOddCharacteristic) {
    try {
        sweedler_h4(gf2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::BadCharacteristic);
    }
    EXPECT_TRUE(verify_hopf(sweedler_h4(qq)).passed);
    EXPECT_TRUE(verify_hopf(sweedler_h4(gf3)).passed);
}

TEST(Characters, MatchBruteForce) {
    for (const auto& h : {cyclic_group_algebra(gf5, 4), sweedler_h4(gf5), s3_group_algebra(gf7),
                          cyclic_group_algebra(gf3, 3), dual(cyclic_group_algebra(gf5, 4))}) {
        auto fast = characters(h);
        auto slow = brute_force_characters(h);
        sort_vectors(fast);
        sort_vectors(slow);
        EXPECT_EQ(fast, slow);
    }
}

TEST(Characters, Counts) {
    EXPECT_EQ(characters(cyclic_group_algebra(gf5, 4)).size(), 4u);
    EXPECT_EQ(characters(cyclic_group_algebra(gf7, 4)).size(), 2u);
    EXPECT_EQ(characters(s3_group_algebra(gf7)).size(), 2u);
    EXPECT_EQ(characters(sweedler_h4(gf5)).size(), 2u);
    EXPECT_EQ(characters(cyclic_group_algebra(qq, 2)).size(), 2u);
    EXPECT_EQ(grouplikes(s3_group_algebra(gf7)).size(), 6u);
    EXPECT_EQ(grouplikes(sweedler_h4(gf5)).size(), 2u);
    EXPECT_EQ(grouplikes(cyclic_group_algebra(qq, 2)).size(), 2u);
}

TEST(Characters, GrouplikesOfGroupAlgebraAreTheGroup) {
    auto h = cyclic_group_algebra(gf5, 4);
    auto gl = grouplikes(h);
    sort_vectors(gl);
    std::vector<Vector<PrimeField>> basis;
    for (std::size_t i = 0; i < 4; ++i) basis.push_back(h.basis_vector(i));
    sort_vectors(basis);
    EXPECT_EQ(gl, basis);
}

TEST(Io, RoundTrip) {
    for (const auto& h : {sweedler_h4(gf5), s3_group_algebra(gf7)}) {
        auto j = to_json(h);
        auto back = std::get<HopfPtr<PrimeField>>(load_hopf(Json::parse(j.dump())));
        EXPECT_TRUE(same_structure(*back, h));
        EXPECT_EQ(back->basis_names(), h.basis_names());
    }
    auto q = cyclic_group_algebra(qq, 2);
    auto back = std::get<HopfPtr<RationalField>>(load_hopf(to_json(q)));
    EXPECT_TRUE(same_structure(*back, q));
}

TEST(Io, FieldOverride) {
    auto j = to_json(cyclic_group_algebra(gf5, 4));
    auto h = std::get<HopfPtr<PrimeField>>(load_hopf(j, parse_field_spec("gf:2")));
    EXPECT_EQ(h->field().p(), 2u);
    EXPECT_FALSE(is_semisimple(*h));
}

TEST(Io, Rejections) {
    auto code_of = [](const Json& j) {
        try {
            load_hopf(j);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::Unsupported;
    };
    auto good = to_json(cyclic_group_algebra(gf5, 4));
    auto extra = good;
    extra["colour"] = "blue";
    EXPECT_EQ(code_of(extra), Errc::ParseError);
    auto short_unit = good;
    short_unit["unit"] = Json::array({"1"});
    EXPECT_EQ(code_of(short_unit), Errc::DimensionMismatch);
    auto bad_scalar = good;
    bad_scalar["counit"][0] = "one";
    EXPECT_EQ(code_of(bad_scalar), Errc::ParseError);
    auto bad_field = good;
    bad_field["field"] = Json{{"kind", "gf"}, {"p", 6}};
    EXPECT_EQ(code_of(bad_field), Errc::ParseError);
    auto bad_index = good;
    bad_index["comult"][0][0][0] = 9;
    EXPECT_EQ(code_of(bad_index), Errc::DimensionMismatch);
    EXPECT_THROW(parse_field_spec("gf:x"), Error);
}
