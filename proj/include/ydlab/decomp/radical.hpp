#pragma once

#include "ydlab/decomp/simple.hpp"
#include "ydlab/hopf/integrals.hpp"

namespace ydlab {

/// Largest number of lines scanned by the characteristic-p radical search.
inline constexpr std::uint64_t kRadicalLineLimit = 200'000;

namespace detail {

template <ExactField F>
scalar_t<F> trace(const Matrix<F>& m) {
    auto s = m.field().zero();
    for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
    return s;
}

template <ExactField F>
Matrix<F> combination(const F& k, std::size_t d, const std::vector<Matrix<F>>& basis, const Vector<F>& c) {
    Matrix<F> x(k, d, d);
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (!c[j].is_zero()) x.add_scaled(c[j], basis[j]);
    return x;
}

/// Whether the right ideal x A of the matrix algebra A is nilpotent.
template <ExactField F>
bool right_ideal_nilpotent(const F& k, std::size_t d, const Matrix<F>& x, const std::vector<Matrix<F>>& algebra) {
    std::vector<Matrix<F>> ideal;
    {
        EchelonBuilder<F> span(k, d * d);
        for (const auto& b : algebra) {
            auto p = x * b;
            if (span.insert(flatten(p))) ideal.push_back(std::move(p));
        }
    }
    auto power = ideal;
    // a nilpotent subalgebra of d x d matrices has index at most d
    for (std::size_t step = 0; step < d && !power.empty(); ++step) {
        EchelonBuilder<F> span(k, d * d);
        std::vector<Matrix<F>> next;
        for (const auto& p : power)
            for (const auto& q : ideal) {
                auto r = p * q;
                if (span.insert(flatten(r))) next.push_back(std::move(r));
            }
        power = std::move(next);
    }
    return power.empty();
}

}  // namespace detail

/// {x in A : tr(x y) = 0 for all y in A}, as coordinates in `basis`. It
/// contains the radical and equals it in characteristic 0.
template <ExactField F>
Subspace<F> trace_form_kernel(const F& k, const std::vector<Matrix<F>>& basis) {
    const auto n = basis.size();
    Matrix<F> gram(k, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram(i, j) = detail::trace(basis[i] * basis[j]);
    return kernel(gram);
}

/// Jacobson radical of the algebra spanned by `basis` (closed under product,
/// containing the identity), as coordinates in `basis`. In characteristic p
/// the trace-form kernel is scanned line by line for elements x with x A
/// nilpotent; nullopt when that scan exceeds kRadicalLineLimit.
template <ExactField F>
std::optional<Subspace<F>> jacobson_radical(const F& k, std::size_t d, const std::vector<Matrix<F>>& basis) {
    auto t = trace_form_kernel(k, basis);
    if (k.characteristic() == 0 || t.dim() == 0) return t;
    if constexpr (FiniteField<F>) {
        const auto q = k.order();
        auto total = detail::bounded_power(q, t.dim(), kRadicalLineLimit * (q - 1));
        if (!total) return std::nullopt;
        EchelonBuilder<F> rad(k, basis.size());
        detail::for_each_line(k, t.dim(), [&](const Vector<F>& c) {
            auto coords = t.combine(c);
            if (rad.contains(coords)) return;
            if (detail::right_ideal_nilpotent(k, d, detail::combination(k, d, basis, coords), basis)) rad.insert(coords);
        });
        return Subspace<F>::from_builder(rad);
    } else {
        return std::nullopt;
    }
}

/// Radical of H acting on itself by left multiplication.
template <ExactField F>
std::optional<Subspace<F>> regular_radical(const HopfAlgebra<F>& h) {
    std::vector<Matrix<F>> ops;
    for (std::size_t i = 0; i < h.dim(); ++i) ops.push_back(h.left_multiplication(i));
    // the left multiplications already form a basis of the regular image
    return jacobson_radical(h.field(), h.dim(), ops);
}

/// Center of an algebra given by its structure constants.
template <ExactField F>
Subspace<F> center(const HopfAlgebra<F>& a) {
    std::vector<Matrix<F>> blocks;
    for (std::size_t j = 0; j < a.dim(); ++j) blocks.push_back(a.left_multiplication(j) - a.right_multiplication(j));
    return kernel(vstack(a.field(), a.dim(), blocks));
}

/// Number of isomorphism classes of simple modules of a semisimple algebra
/// over GF(q): the dimension of the fixed space of z -> z^q on the center.
template <FiniteField F>
std::size_t simple_class_count(const HopfAlgebra<F>& a) {
    require(is_semisimple(a), Errc::Unsupported, "simple-class count needs a semisimple algebra");
    const auto& k = a.field();
    const auto q = k.order();
    auto z = center(a);
    Matrix<F> frob(k, z.dim(), z.dim());
    for (std::size_t c = 0; c < z.dim(); ++c) {
        const auto& x = z.basis()[c];
        auto result = a.unit(), base = x;
        for (auto e = q; e > 0; e >>= 1) {
            if (e & 1) result = a.multiply(result, base);
            base = a.multiply(base, base);
        }
        auto coords = z.coordinates(result);
        require(coords.has_value(), Errc::RationalityFailure, "power of a central element left the center");
        for (std::size_t r = 0; r < z.dim(); ++r) frob(r, c) = (*coords)[r];
    }
    return kernel(frob - Matrix<F>::identity(k, z.dim())).dim();
}

}  // namespace ydlab
