#pragma once

#include <random>

#include "ydlab/compat.hpp"
#include "ydlab/hopf.hpp"

namespace testing_support {

using namespace ydlab;

template <ExactField F>
Vector<F> random_vector(const F& k, std::size_t n, std::mt19937_64& rng) {
    Vector<F> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(k.random(rng));
    return v;
}

template <ExactField F>
Matrix<F> random_matrix(const F& k, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Matrix<F> m(k, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = k.random(rng);
    return m;
}

template <ExactField F>
Matrix<F> random_invertible(const F& k, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        auto m = random_matrix(k, n, n, rng);
        if (inverse(m)) return m;
    }
}

/// One-dimensional object: e_i acts by chi[i], v -> v (x) g.
template <ExactField F>
Object<F> one_dim(const HopfPtr<F>& h, const Vector<F>& chi, const Vector<F>& g, Kind kind = Kind::YD) {
    std::vector<Matrix<F>> ops;
    for (const auto& c : chi) ops.push_back(Matrix<F>(h->field(), 1, 1, {c}));
    return Object<F>(ModuleStructure<F>(h, 1, std::move(ops)), ComoduleStructure<F>::grouplike(h, g), kind);
}

/// Over a cyclic group algebra k[C_n]: g acts by zeta, grading g^b.
inline Object<PrimeField> cyclic_one_dim(const HopfPtr<PrimeField>& h, std::int64_t zeta, std::size_t b,
                                         Kind kind = Kind::YD) {
    const auto& k = h->field();
    Vector<PrimeField> chi;
    auto z = k.one();
    for (std::size_t i = 0; i < h->dim(); ++i) {
        chi.push_back(z);
        z *= k.from_int(zeta);
    }
    return one_dim(h, chi, h->basis_vector(b), kind);
}

/// free_yd(H, k) over H, the trivial object and a few 1-dim objects, each
/// in a randomly chosen basis: a small catalogue of yd objects with dim <= 3.
inline std::vector<Object<PrimeField>> small_yd_catalogue(const HopfPtr<PrimeField>& h, std::mt19937_64& rng) {
    std::vector<Object<PrimeField>> out;
    const auto& k = h->field();
    out.push_back(Object<PrimeField>::trivial(h, 1, Kind::YD));
    for (const auto& g : grouplikes(*h))
        for (const auto& chi : characters(*h)) {
            auto o = one_dim(h, chi, g);
            if (!(o == out.front()) && check_yd(o).passed) out.push_back(std::move(o));
        }
    if (h->dim() <= 3) {
        auto f = free_yd(h, ComoduleStructure<PrimeField>::trivial(h, 1));
        out.push_back(change_basis(f, random_invertible(k, f.dim(), rng)));
    }
    auto two = direct_sum(out.front(), out[out.size() > 1 ? 1 : 0]);
    out.push_back(change_basis(two, random_invertible(k, 2, rng)));
    return out;
}

/// Raw structure constants, editable one entry at a time.
template <ExactField F>
struct Constants {
    F field;
    std::vector<std::string> names;
    Vector<F> unit;
    std::vector<scalar_t<F>> mult;
    std::vector<scalar_t<F>> comult;  // dense n^3, index (i * n + j) * n + k
    Vector<F> counit;
    std::vector<scalar_t<F>> antipode;  // row-major n^2

    explicit Constants(const HopfAlgebra<F>& h)
        : field(h.field()),
          names(h.basis_names()),
          unit(h.unit()),
          mult(h.mult_table()),
          counit(h.counit()),
          antipode(h.antipode().data()) {
        for (std::size_t i = 0; i < h.dim(); ++i) {
            auto d = h.comult_dense(i);
            comult.insert(comult.end(), d.begin(), d.end());
        }
    }

    HopfAlgebra<F> build() const {
        const auto n = names.size();
        std::vector<typename HopfAlgebra<F>::Coproduct> c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const auto& x = comult[(i * n + j) * n + k];
                    if (!x.is_zero()) c[i].push_back({j, k, x});
                }
        return HopfAlgebra<F>(field, names, unit, mult, std::move(c), counit, Matrix<F>(field, n, n, antipode));
    }

    std::vector<scalar_t<F>*> entries() {
        std::vector<scalar_t<F>*> out;
        for (auto* v : {&unit, &mult, &comult, &counit, &antipode})
            for (auto& x : *v) out.push_back(&x);
        return out;
    }
};

/// Counts single-entry mutations that still pass verify_hopf.
inline std::size_t surviving_mutations(const HopfAlgebra<PrimeField>& h, std::size_t* tried) {
    Constants<PrimeField> c(h);
    std::size_t survivors = 0;
    *tried = 0;
    auto slots = c.entries();
    for (auto* slot : slots) {
        const auto original = *slot;
        for (std::uint64_t v = 0; v < c.field.order(); ++v) {
            auto candidate = c.field.element(v);
            if (candidate == original) continue;
            *slot = candidate;
            ++*tried;
            if (verify_hopf(c.build()).passed) ++survivors;
        }
        *slot = original;
    }
    return survivors;
}

}  // namespace testing_support
