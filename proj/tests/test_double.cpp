#include <gtest/gtest.h>

#include "support.hpp"
#include "ydlab/double.hpp"

using namespace ydlab;
using namespace testing_support;

namespace {

using Obj = Object<PrimeField>;
using Com = ComoduleStructure<PrimeField>;
using Mat = Matrix<PrimeField>;

HopfPtr<PrimeField> H(const std::string& name) { return fixture<PrimeField>(name); }

const std::vector<std::string> kFixtures = {"gf2_c2", "gf3_c3", "gf5_c4", "gf5_c4_dual", "h4_gf5", "gf7_s3"};

/// D-linear maps between two modules over the same algebra.
Subspace<PrimeField> linear_maps(const ModuleStructure<PrimeField>& m, const ModuleStructure<PrimeField>& n) {
    std::vector<Mat> blocks;
    for (std::size_t i = 0; i < m.ops().size(); ++i)
        blocks.push_back(kron(Mat::identity(m.field(), n.dim()), m.op(i).transpose()) -
                         kron(n.op(i), Mat::identity(m.field(), m.dim())));
    return kernel(vstack(m.field(), m.dim() * n.dim(), blocks));
}

std::size_t order_of(const HopfAlgebra<PrimeField>& h, const Vector<PrimeField>& g) {
    auto x = g;
    for (std::size_t k = 1; k <= h.dim(); ++k) {
        if (x == h.unit()) return k;
        x = h.multiply(x, g);
    }
    return 0;
}

}  // namespace

// Exactly one of the two twists turns free yd objects into modules over the
// double on every fixture; that is the pinned convention.
TEST(Double, ConventionSelection) {
    std::vector<DoubleConvention> fitting;
    for (auto conv : {DoubleConvention::AdjointInverse, DoubleConvention::InverseAdjoint}) {
        bool all = true;
        for (const auto& name : kFixtures) all = all && convention_fits(H(name), conv);
        if (all) fitting.push_back(conv);
    }
    ASSERT_EQ(fitting.size(), 1u);
    EXPECT_EQ(fitting.front(), kDoubleConvention);
    EXPECT_FALSE(convention_fits(H("h4_gf5"), DoubleConvention::InverseAdjoint));
}

TEST(Double, TrivialGroup) {
    auto h = share(cyclic_group_algebra(PrimeField(5), 1));
    auto d = drinfeld_double(h);
    EXPECT_EQ(d.hopf->dim(), 1u);
    EXPECT_TRUE(verify_hopf(*d.hopf).passed);
    EXPECT_TRUE(same_structure(*d.hopf, *h));
}

TEST(Double, HopfAxiomsOnFixtures) {
    for (const auto& name : kFixtures) {
        auto h = H(name);
        auto d = drinfeld_double(h);
        EXPECT_EQ(d.hopf->dim(), h->dim() * h->dim()) << name;
        auto r = verify_hopf(*d.hopf);
        EXPECT_TRUE(r.passed) << name << ": " << (r.failures.empty() ? "" : r.failures.front());
        EXPECT_EQ(d.hopf->is_commutative(), h->is_commutative() && h->is_cocommutative()) << name;
    }
}

TEST(Double, CyclicDoubleIsGroupAlgebraOfC4xC4) {
    auto d = drinfeld_double(H("gf5_c4"));
    EXPECT_TRUE(d.hopf->is_commutative());
    EXPECT_TRUE(d.hopf->is_cocommutative());
    auto gs = grouplikes(*d.hopf);
    ASSERT_EQ(gs.size(), 16u);
    EXPECT_EQ(characters(*d.hopf).size(), 16u);
    std::size_t at_most_two = 0;
    for (const auto& g : gs) {
        auto o = order_of(*d.hopf, g);
        EXPECT_TRUE(o == 1 || o == 2 || o == 4);
        at_most_two += o <= 2;
    }
    EXPECT_EQ(at_most_two, 4u);  // C4 x C4, not C16 or C4 x C2 x C2
}

TEST(Double, SweedlerDoubleIsNoncommutative) {
    auto d = drinfeld_double(H("h4_gf5"));
    EXPECT_EQ(d.hopf->dim(), 16u);
    EXPECT_FALSE(d.hopf->is_commutative());
    EXPECT_TRUE(verify_hopf(*d.hopf).passed);
}

TEST(Double, EmbeddingsAreAlgebraMaps) {
    for (const auto& name : {"h4_gf5", "gf7_s3", "gf5_c4"}) {
        auto h = H(name);
        auto d = drinfeld_double(h);
        const auto eh = d.embed_h(), ed = d.embed_dual();
        EXPECT_EQ(eh.apply(h->unit()), d.hopf->unit());
        EXPECT_EQ(ed.apply(d.dual->unit()), d.hopf->unit());
        for (std::size_t i = 0; i < h->dim(); ++i)
            for (std::size_t j = 0; j < h->dim(); ++j) {
                EXPECT_EQ(eh.apply(h->product(i, j)), d.hopf->multiply(eh.column(i), eh.column(j))) << name;
                EXPECT_EQ(ed.apply(d.dual->product(i, j)), d.hopf->multiply(ed.column(i), ed.column(j))) << name;
                // (h (x) eps)(1 (x) phi) = h (x) phi
                EXPECT_EQ(d.hopf->multiply(eh.column(i), ed.column(j)), d.hopf->basis_vector(d.index(i, j)));
            }
    }
}

TEST(Double, SemisimpleIffSemisimpleAndCosemisimple) {
    for (const auto& name : kFixtures) {
        auto h = H(name);
        auto d = drinfeld_double(h);
        EXPECT_EQ(is_semisimple(*d.hopf), is_semisimple(*h) && is_cosemisimple(*h)) << name;
    }
}

TEST(YDToDouble, TrivialObject) {
    for (const auto& name : kFixtures) {
        auto h = H(name);
        auto d = drinfeld_double(h);
        auto a = yd_to_double(d, Obj::trivial(h, 2, Kind::YD));
        EXPECT_TRUE(a == ModuleStructure<PrimeField>::trivial(d.hopf, 2)) << name;
    }
}

TEST(YDToDouble, OneDimensionalObjectsAreDistinctCharacters) {
    auto h = H("gf5_c4");
    auto d = drinfeld_double(h);
    auto chars = characters(*d.hopf);
    std::vector<Vector<PrimeField>> seen;
    for (std::int64_t z : {1, 2, 3, 4})
        for (std::size_t b = 0; b < 4; ++b) {
            auto a = yd_to_double(d, cyclic_one_dim(h, z, b));
            Vector<PrimeField> chi;
            for (const auto& op : a.ops()) chi.push_back(op(0, 0));
            EXPECT_NE(std::find(chars.begin(), chars.end(), chi), chars.end());
            EXPECT_EQ(std::find(seen.begin(), seen.end(), chi), seen.end());
            seen.push_back(chi);
        }
    EXPECT_EQ(seen.size(), 16u);
}

TEST(YDToDouble, RoundTrips) {
    auto h = H("gf2_c2");
    auto d = drinfeld_double(h);
    auto f = free_yd(h, Com::trivial(h, 1));
    auto a = yd_to_double(d, f);
    EXPECT_EQ(a.dim(), 2u);
    EXPECT_TRUE(double_to_yd(d, a) == f);
    // the other direction starts from D(H)-modules: the regular one
    for (const auto& name : {"gf2_c2", "h4_gf5", "gf5_c4"}) {
        auto hh = H(name);
        auto dd = drinfeld_double(hh);
        auto reg = ModuleStructure<PrimeField>::regular(dd.hopf);
        auto m = double_to_yd(dd, reg);
        EXPECT_TRUE(yd_to_double(dd, m) == reg) << name;
    }
}

TEST(YDToDouble, RejectsNonYD) {
    auto h = H("h4_gf5");
    auto d = drinfeld_double(h);
    auto bad = one_dim(h, h->counit(), h->basis_vector(1));
    ASSERT_FALSE(check_yd(bad).passed);
    try {
        yd_to_double(d, bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotYD);
    }
}

// A map is a yd morphism iff it is D(H)-linear.
TEST(YDToDouble, Functoriality) {
    std::mt19937_64 rng(31);
    for (const auto& name : {"gf2_c2", "gf5_c4", "h4_gf5", "gf7_s3"}) {
        auto h = H(name);
        auto d = drinfeld_double(h);
        auto cat = small_yd_catalogue(h, rng);
        if (h->dim() <= 4) cat.push_back(free_yd(h, Com::trivial(h, 1)));
        for (const auto& m : cat)
            for (const auto& n : cat)
                EXPECT_TRUE(colinear_homs(m, n) == linear_maps(yd_to_double(d, m), yd_to_double(d, n))) << name;
    }
}

TEST(LongAlgebra, UnitAndAxioms) {
    for (const auto& name : {"gf5_c4", "h4_gf5", "gf7_s3"}) {
        auto h = H(name);
        auto l = long_algebra(h);
        EXPECT_EQ(l.algebra->dim(), h->dim() * h->dim());
        EXPECT_EQ(l.algebra->unit(), detail::kron_vectors<PrimeField>(h->unit(), h->counit())) << name;
        EXPECT_TRUE(verify_hopf(*l.algebra).passed) << name;
    }
}

TEST(LongAlgebra, CommutativeCocommutativeDoubleCoincides) {
    for (const auto& name : {"gf2_c2", "gf5_c4"}) {
        auto h = H(name);
        EXPECT_TRUE(same_structure(*drinfeld_double(h).hopf, *long_algebra(h).algebra)) << name;
    }
    EXPECT_FALSE(same_structure(*drinfeld_double(H("h4_gf5")).hopf, *long_algebra(H("h4_gf5")).algebra));
}

TEST(LongToTensor, TrivialAndFree) {
    for (const auto& name : {"gf5_c4", "h4_gf5"}) {
        auto h = H(name);
        auto l = long_algebra(h);
        auto t = long_to_tensor(l, Obj::trivial(h, 1, Kind::Long));
        for (std::size_t i = 0; i < h->dim(); ++i)
            for (std::size_t a = 0; a < h->dim(); ++a)
                EXPECT_EQ(t.op(i * h->dim() + a)(0, 0), h->counit()[i] * h->unit()[a]);
        auto f = long_to_tensor(l, free_long(h, Com::trivial(h, 1)));
        for (std::size_t i = 0; i < h->dim(); ++i)
            for (std::size_t a = 0; a < h->dim(); ++a)
                EXPECT_TRUE(f.op(i * h->dim() + a) == h->left_multiplication(i) * h->unit()[a]);
    }
}

TEST(LongToTensor, S3CharacterPair) {
    std::mt19937_64 rng(41);
    auto h = H("gf7_s3");
    auto l = long_algebra(h);
    auto chars = characters(*h);
    auto gs = grouplikes(*h);
    ASSERT_EQ(chars.size(), 2u);
    auto a = one_dim(h, chars[0], gs[3], Kind::Long), b = one_dim(h, chars[1], gs[4], Kind::Long);
    auto m = change_basis(direct_sum(a, b), random_invertible(PrimeField(7), 2, rng));
    ASSERT_TRUE(check_long(m).passed);
    auto t = long_to_tensor(l, m);
    EXPECT_TRUE(verify_module(t).passed);
    const auto n = h->dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c) {
            Mat hi(PrimeField(7), 2, 2), dc(PrimeField(7), 2, 2);
            for (std::size_t x = 0; x < n; ++x) {
                hi.add_scaled(h->counit()[x], t.op(i * n + x));
                dc.add_scaled(h->unit()[x], t.op(x * n + c));
            }
            EXPECT_TRUE(hi * dc == dc * hi);
        }
    EXPECT_TRUE(tensor_to_long(l, t) == m);
}

TEST(LongToTensor, RejectsNonLong) {
    auto h = H("h4_gf5");
    auto l = long_algebra(h);
    try {
        long_to_tensor(l, free_yd(h, Com::trivial(h, 1)).with_kind(Kind::Long));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotLong);
    }
}
