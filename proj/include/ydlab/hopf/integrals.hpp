#pragma once

#include "ydlab/hopf/dual.hpp"

namespace ydlab {

enum class IntegralSide { LeftInH, LeftInDual };

template <ExactField F>
struct IntegralSpace {
    IntegralSide side;
    Subspace<F> space;
};

/// Left integrals of H: all L with h L = eps(h) L for every basis h.
template <ExactField F>
IntegralSpace<F> left_integrals(const HopfAlgebra<F>& h, IntegralSide side = IntegralSide::LeftInH) {
    const auto n = h.dim();
    std::vector<Matrix<F>> blocks;
    for (std::size_t i = 0; i < n; ++i) {
        auto m = h.left_multiplication(i);
        m -= Matrix<F>::identity(h.field(), n) * h.counit()[i];
        blocks.push_back(std::move(m));
    }
    auto space = kernel(vstack(h.field(), n, blocks));
    if (space.dim() != 1)
        fail(Errc::DegenerateIntegralSpace, "left integral space has dimension " + std::to_string(space.dim()));
    return {side, std::move(space)};
}

/// A spanning left integral.
template <ExactField F>
Vector<F> left_integral(const HopfAlgebra<F>& h) {
    return left_integrals(h).space.basis().front();
}

template <ExactField F>
bool is_semisimple(const HopfAlgebra<F>& h) {
    return !h.apply_counit(left_integral(h)).is_zero();
}

template <ExactField F>
bool is_cosemisimple(const HopfAlgebra<F>& h) {
    auto d = dual(h);
    auto lambda = left_integrals(d, IntegralSide::LeftInDual).space.basis().front();
    return !d.apply_counit(lambda).is_zero();
}

}  // namespace ydlab
