#pragma once

#include <variant>

#include "ydlab/decomp/structure_algebra.hpp"

namespace ydlab {

/// The linear system A vec(e) = b (row-major vec) whose solutions are the
/// projections e onto W that commute with the structure maps.
template <ExactField F>
struct ComplementSystem {
    Matrix<F> a;
    Vector<F> b;
};

/// Proof that 0 -> W -> M -> M/W -> 0 does not split: y A = 0 but y b != 0.
template <ExactField F>
struct NotSplit {
    Subspace<F> sub;
    ComplementSystem<F> system;
    Vector<F> witness;

    bool certifies() const {
        const auto& k = sub.field();
        const auto& a = system.a;
        if (witness.size() != a.rows()) return false;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            auto s = k.zero();
            for (std::size_t i = 0; i < a.rows(); ++i) s += witness[i] * a(i, j);
            if (!s.is_zero()) return false;
        }
        return !dot<F>(k, witness, system.b).is_zero();
    }
};

template <ExactField F>
using ComplementResult = std::variant<Matrix<F>, NotSplit<F>>;

template <ExactField F>
ComplementSystem<F> complement_system(const Object<F>& m, const Subspace<F>& w) {
    const auto& k = m.field();
    const auto d = m.dim();
    const auto id = Matrix<F>::identity(k, d);
    std::vector<Matrix<F>> blocks;
    // e g - g e = 0
    for (const auto& g : structure_generators(m)) blocks.push_back(kron(id, g.transpose()) - kron(g, id));
    // q e = 0 for every functional q vanishing on W
    const auto ann = annihilator(w);
    if (ann.rows() > 0) blocks.push_back(kron(ann, id));
    // e w = w
    for (const auto& v : w.basis()) blocks.push_back(kron(id, Matrix<F>::from_rows(k, d, {v})));
    auto a = vstack(k, d * d, blocks);
    auto b = zero_vector(k, a.rows());
    std::size_t offset = a.rows() - w.dim() * d;
    for (const auto& v : w.basis())
        for (std::size_t r = 0; r < d; ++r) b[offset++] = v[r];
    return {std::move(a), std::move(b)};
}

/// A structure-preserving projection onto W, or a certificate that none exists.
template <ExactField F>
ComplementResult<F> find_complement(const Object<F>& m, const Subspace<F>& w) {
    require(is_subobject(m, w), Errc::NotASubobject, "W is not invariant under the structure maps");
    auto sys = complement_system(m, w);
    auto sol = solve_affine(sys.a, std::span<const scalar_t<F>>(sys.b));
    if (auto* x = std::get_if<AffineSolution<F>>(&sol))
        return unflatten(m.field(), m.dim(), m.dim(), std::span<const scalar_t<F>>(x->particular));
    return NotSplit<F>{w, std::move(sys), std::get<Inconsistent<F>>(sol).witness};
}

}  // namespace ydlab
