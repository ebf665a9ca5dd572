#pragma once

#include <vector>

#include "ydlab/hopf/dual.hpp"

namespace ydlab {

/// All algebra maps H -> k, each given by its values on the basis. A
/// character chi is a common left eigenvector of the left multiplications
/// with eigenvalue chi(e_i) on L_i, so the search walks eigenvalue choices
/// generator by generator and prunes on empty joint eigenspaces.
template <ExactField F>
std::vector<Vector<F>> characters(const HopfAlgebra<F>& h) {
    const auto n = h.dim();
    const auto& k = h.field();
    std::vector<Matrix<F>> lt;
    std::vector<std::vector<scalar_t<F>>> eigen;
    for (std::size_t i = 0; i < n; ++i) {
        lt.push_back(h.left_multiplication(i).transpose());
        eigen.push_back(roots(minimal_polynomial(h.left_multiplication(i))));
    }
    std::vector<Vector<F>> out;
    Vector<F> chosen(n, k.zero());
    auto recurse = [&](auto&& self, std::size_t i, const Subspace<F>& space) -> void {
        if (space.dim() == 0) return;
        if (i == n) {
            if (!(dot(k, chosen, h.unit()) == k.one())) return;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (!(dot(k, chosen, h.product(a, b)) == chosen[a] * chosen[b])) return;
            out.push_back(chosen);
            return;
        }
        for (const auto& lambda : eigen[i]) {
            auto shifted = lt[i] - Matrix<F>::identity(k, n) * lambda;
            auto eig = kernel(shifted);
            chosen[i] = lambda;
            self(self, i + 1, intersect(space, eig));
        }
    };
    recurse(recurse, 0, Subspace<F>::full(k, n));
    return out;
}

/// Grouplike elements: Delta(g) = g (x) g and eps(g) = 1. These are exactly
/// the characters of the dual algebra.
template <ExactField F>
std::vector<Vector<F>> grouplikes(const HopfAlgebra<F>& h) {
    return characters(dual(h));
}

}  // namespace ydlab
