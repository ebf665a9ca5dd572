#pragma once

#include "ydlab/double/drinfeld.hpp"

namespace ydlab {

/// A (x) B with componentwise product and coproduct; index of a_i (x) b_j is i * dim B + j.
template <ExactField F>
HopfAlgebra<F> tensor_hopf(const HopfAlgebra<F>& a, const HopfAlgebra<F>& b) {
    const auto& k = a.field();
    const auto na = a.dim(), nb = b.dim(), n = na * nb;
    std::vector<scalar_t<F>> mult(n * n * n, k.zero());
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            auto left = a.product(i, j);
            for (std::size_t x = 0; x < nb; ++x)
                for (std::size_t y = 0; y < nb; ++y) {
                    auto right = b.product(x, y);
                    const auto row = (i * nb + x) * n + (j * nb + y);
                    for (std::size_t u = 0; u < na; ++u) {
                        if (left[u].is_zero()) continue;
                        for (std::size_t v = 0; v < nb; ++v)
                            if (!right[v].is_zero()) mult[row * n + u * nb + v] = left[u] * right[v];
                    }
                }
        }
    std::vector<typename HopfAlgebra<F>::Coproduct> comult(n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t x = 0; x < nb; ++x)
            for (const auto& s : a.comult(i))
                for (const auto& t : b.comult(x))
                    comult[i * nb + x].push_back({s.left * nb + t.left, s.right * nb + t.right, s.coeff * t.coeff});
    return HopfAlgebra<F>(k, detail::pair_names(a, b), detail::kron_vectors<F>(a.unit(), b.unit()), std::move(mult),
                          std::move(comult), detail::kron_vectors<F>(a.counit(), b.counit()),
                          kron(a.antipode(), b.antipode()));
}

/// H (x) H* with componentwise multiplication; unit 1 (x) eps.
template <ExactField F>
struct LongAlgebra {
    HopfPtr<F> base;
    HopfPtr<F> algebra;
};

template <ExactField F>
LongAlgebra<F> long_algebra(const HopfPtr<F>& h) {
    return {h, share(tensor_hopf(*h, dual(*h)))};
}

/// Long object -> H (x) H*-module, (h (x) phi) m = h . phi(m_1) m_0.
template <ExactField F>
ModuleStructure<F> long_to_tensor(const LongAlgebra<F>& l, const Object<F>& m) {
    auto r = check_long(m);
    if (!r.passed) fail(Errc::NotLong, "input is not a long object: " + (r.passed ? "" : r.failures.front()));
    auto a = pair_action(l.algebra, m);
    auto mr = verify_module(a);
    if (!mr.passed)
        fail(Errc::NotLong, "long object does not give a module: " + (mr.passed ? "" : mr.failures.front()));
    auto back = split_pair_action(l.base, a, Kind::Long);
    require(back.module() == m.module() && back.comodule() == m.comodule(), Errc::NotLong,
            "round trip through H (x) H* is not exact");
    return a;
}

template <ExactField F>
Object<F> tensor_to_long(const LongAlgebra<F>& l, const ModuleStructure<F>& a) {
    auto m = split_pair_action(l.base, a, Kind::Long);
    auto r = check_long(m);
    if (!r.passed) fail(Errc::NotLong, "induced pair is not a long object: " + (r.passed ? "" : r.failures.front()));
    require(pair_action(l.algebra, m) == a, Errc::NotLong, "action is not recovered from its restriction");
    return m;
}

}  // namespace ydlab
