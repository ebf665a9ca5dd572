#pragma once

#include "ydlab/hopf/hopf_algebra.hpp"

namespace ydlab {

/// The dual Hopf algebra on the dual basis delta_0..delta_{n-1}: its product
/// is the transpose of Delta, its coproduct the transpose of mu, its unit is
/// eps, its counit is evaluation at 1 and its antipode is S transposed.
template <ExactField F>
HopfAlgebra<F> dual(const HopfAlgebra<F>& h) {
    const auto n = h.dim();
    const auto& k = h.field();
    std::vector<std::string> names;
    for (const auto& s : h.basis_names()) names.push_back("δ_" + s);

    std::vector<scalar_t<F>> mult(n * n * n, k.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& t : h.comult(i)) mult[(t.left * n + t.right) * n + i] += t.coeff;

    std::vector<typename HopfAlgebra<F>::Coproduct> comult(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t i = 0; i < n; ++i) {
                const auto& c = h.mult(j, l, i);
                if (!c.is_zero()) comult[i].push_back({j, l, c});
            }

    return HopfAlgebra<F>(k, std::move(names), h.counit(), std::move(mult), std::move(comult), h.unit(),
                          h.antipode().transpose());
}

}  // namespace ydlab
