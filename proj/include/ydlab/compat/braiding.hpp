#pragma once

#include "ydlab/compat/constructions.hpp"

namespace ydlab {

/// P(m (x) n) = n (x) m from M (x) N to N (x) M.
template <ExactField F>
Matrix<F> swap_matrix(const F& k, std::size_t dm, std::size_t dn) {
    Matrix<F> p(k, dm * dn, dm * dn);
    for (std::size_t j = 0; j < dm; ++j)
        for (std::size_t l = 0; l < dn; ++l) p(l * dm + j, j * dn + l) = k.one();
    return p;
}

/// Matrix of c(m (x) n) = n_0 (x) n_1 m, without any verification.
template <ExactField F>
Matrix<F> braiding_matrix(const Object<F>& m, const Object<F>& n) {
    const auto& k = m.field();
    Matrix<F> sum(k, m.dim() * n.dim(), m.dim() * n.dim());
    for (std::size_t a = 0; a < m.hopf()->dim(); ++a) sum += kron(m.act(a), n.coact(a));
    return swap_matrix(k, m.dim(), n.dim()) * sum;
}

/// c_{M,N}: M (x) N -> N (x) M between the yd tensor objects, verified
/// invertible, H-linear and H-colinear.
template <ExactField F>
Morphism<F> braiding(const Object<F>& m, const Object<F>& n) {
    auto mn = share(tensor_yd(m, n));
    auto nm = share(tensor_yd(n, m));
    auto c = check_morphism(mn, nm, braiding_matrix(m, n));
    require(inverse(c.matrix).has_value(), Errc::NotBijective, "braiding is not invertible");
    require(*c.flags.h_linear, Errc::BraidingNotColinear, "braiding is not H-linear");
    require(*c.flags.h_colinear, Errc::BraidingNotColinear, "braiding is not H-colinear");
    return c;
}

/// (c (x) id)(id (x) c)(c (x) id) = (id (x) c)(c (x) id)(id (x) c) on M (x) M (x) M.
template <ExactField F>
bool qybe_check(const Object<F>& m) {
    const auto c = braiding(m, m).matrix;
    const auto id = Matrix<F>::identity(m.field(), m.dim());
    const auto c12 = kron(c, id), c23 = kron(id, c);
    return c12 * c23 * c12 == c23 * c12 * c23;
}

/// c_{M,N(x)P} = (id_N (x) c_{M,P})(c_{M,N} (x) id_P) and
/// c_{M(x)N,P} = (c_{M,P} (x) id_N)(id_M (x) c_{N,P}).
template <ExactField F>
std::pair<bool, bool> hexagon_check(const Object<F>& m, const Object<F>& n, const Object<F>& p) {
    const auto& k = m.field();
    auto id = [&](const Object<F>& x) { return Matrix<F>::identity(k, x.dim()); };
    auto np = tensor_yd(n, p), mn = tensor_yd(m, n);
    bool first = braiding(m, np).matrix == kron(id(n), braiding(m, p).matrix) * kron(braiding(m, n).matrix, id(p));
    bool second = braiding(mn, p).matrix == kron(braiding(m, p).matrix, id(n)) * kron(id(m), braiding(n, p).matrix);
    return {first, second};
}

/// c_{M',N'} (f (x) g) = (g (x) f) c_{M,N} for morphisms f: M -> M', g: N -> N'.
template <ExactField F>
bool braiding_natural(const Morphism<F>& f, const Morphism<F>& g) {
    auto before = braiding_matrix(*f.target, *g.target) * kron(f.matrix, g.matrix);
    auto after = kron(g.matrix, f.matrix) * braiding_matrix(*f.source, *g.source);
    return before == after;
}

}  // namespace ydlab
