#pragma once

#include "ydlab/compat/constructions.hpp"
#include "ydlab/hopf/dual.hpp"

namespace ydlab {

/// How delta-functionals are moved past H in D(H):
/// (1 (x) phi)(h (x) 1) = h_2 (x) phi(t(h, -)) with
///   AdjointInverse: t(h, y) = h_3 y S^-1(h_1)
///   InverseAdjoint: t(h, y) = S^-1(h_3) y h_1
enum class DoubleConvention { AdjointInverse, InverseAdjoint };

inline std::string convention_name(DoubleConvention c) {
    return c == DoubleConvention::AdjointInverse ? "h3-y-Sinv(h1)" : "Sinv(h3)-y-h1";
}

/// The convention under which left-right Yetter-Drinfeld modules are exactly
/// the D(H)-modules; pinned by the convention-selection test.
inline constexpr DoubleConvention kDoubleConvention = DoubleConvention::AdjointInverse;

namespace detail {

template <ExactField F>
std::vector<std::string> pair_names(const HopfAlgebra<F>& a, const HopfAlgebra<F>& b) {
    std::vector<std::string> names;
    for (const auto& x : a.basis_names())
        for (const auto& y : b.basis_names()) names.push_back(x + "⊗" + y);
    return names;
}

template <ExactField F>
Vector<F> kron_vectors(const Vector<F>& a, const Vector<F>& b) {
    Vector<F> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    return out;
}

}  // namespace detail

/// D(H) on the basis e_i (x) delta_a (index i * n + a) together with H.
template <ExactField F>
struct DoubleAlgebra {
    HopfPtr<F> base;
    HopfPtr<F> dual;
    HopfPtr<F> hopf;
    DoubleConvention convention;

    std::size_t index(std::size_t i, std::size_t a) const { return i * base->dim() + a; }

    /// h -> h (x) eps.
    Matrix<F> embed_h() const {
        const auto n = base->dim();
        Matrix<F> m(base->field(), n * n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t a = 0; a < n; ++a) m(index(i, a), i) = dual->unit()[a];
        return m;
    }

    /// phi -> 1 (x) phi.
    Matrix<F> embed_dual() const {
        const auto n = base->dim();
        Matrix<F> m(base->field(), n * n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t a = 0; a < n; ++a) m(index(i, a), a) = base->unit()[i];
        return m;
    }
};

template <ExactField F>
DoubleAlgebra<F> drinfeld_double(const HopfPtr<F>& hp, DoubleConvention conv = kDoubleConvention) {
    const auto& h = *hp;
    const auto& k = h.field();
    const auto n = h.dim(), nn = n * n;
    auto dp = share(dual(h));
    const auto& d = *dp;
    const auto& sinv = h.antipode_inverse();

    // twist[(j * n + a)] = sum of c * e_q (x) psi over Delta^2(e_j) = (p, q, r, c),
    // the coordinates of (1 (x) delta_a)(e_j (x) 1) in D(H)
    std::vector<Vector<F>> twist(nn, zero_vector(k, nn));
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& t : h.double_coproduct(j)) {
            // psi_a(e_y) = [t(e_j parts, e_y)]_a for all a at once
            Matrix<F> psi(k, n, n);  // psi(a, y)
            for (std::size_t y = 0; y < n; ++y) {
                auto w = conv == DoubleConvention::AdjointInverse
                             ? h.multiply(h.product(t.third, y), sinv.column(t.first))
                             : h.multiply(h.multiply(sinv.column(t.third), h.basis_vector(y)), h.basis_vector(t.first));
                for (std::size_t a = 0; a < n; ++a) psi(a, y) = w[a];
            }
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t y = 0; y < n; ++y)
                    if (!psi(a, y).is_zero()) twist[j * n + a][t.second * n + y] += t.coeff * psi(a, y);
        }

    std::vector<scalar_t<F>> mult(nn * nn * nn, k.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t b = 0; b < n; ++b) {
                    const auto row = (i * n + a) * nn + (j * n + b);
                    const auto& tw = twist[j * n + a];
                    for (std::size_t q = 0; q < n; ++q)
                        for (std::size_t y = 0; y < n; ++y) {
                            const auto& c = tw[q * n + y];
                            if (c.is_zero()) continue;
                            auto left = h.product(i, q);
                            auto right = d.product(y, b);
                            for (std::size_t u = 0; u < n; ++u) {
                                if (left[u].is_zero()) continue;
                                for (std::size_t v = 0; v < n; ++v)
                                    if (!right[v].is_zero()) mult[row * nn + u * n + v] += c * left[u] * right[v];
                            }
                        }
                }

    // Delta(h (x) phi) = (h_1 (x) phi_2) (x) (h_2 (x) phi_1)
    std::vector<typename HopfAlgebra<F>::Coproduct> comult(nn);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (const auto& x : h.comult(i))
                for (const auto& y : d.comult(a))
                    comult[i * n + a].push_back({x.left * n + y.right, x.right * n + y.left, x.coeff * y.coeff});

    auto unit = detail::kron_vectors<F>(h.unit(), d.unit());
    auto counit = detail::kron_vectors<F>(h.counit(), d.counit());

    // S(h (x) phi) = (1 (x) phi o S^-1)(S(h) (x) 1), assembled after the product exists
    HopfAlgebra<F> pre(k, detail::pair_names(h, d), unit, mult, comult, counit, Matrix<F>::identity(k, nn));
    Matrix<F> s(k, nn, nn);
    const auto dual_sinv = sinv.transpose();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a) {
            auto phi = detail::kron_vectors<F>(h.unit(), dual_sinv.column(a));
            auto sh = detail::kron_vectors<F>(h.antipode().column(i), d.unit());
            auto col = pre.multiply(phi, sh);
            for (std::size_t r = 0; r < nn; ++r) s(r, i * n + a) = col[r];
        }
    auto dh = share(HopfAlgebra<F>(k, detail::pair_names(h, d), std::move(unit), std::move(mult), std::move(comult),
                                   std::move(counit), std::move(s)));
    return {hp, std::move(dp), std::move(dh), conv};
}

/// A_(i,a) = L_i C_a: h (x) phi acts as m -> h . phi(m_1) m_0.
template <ExactField F>
ModuleStructure<F> pair_action(const HopfPtr<F>& target, const Object<F>& m) {
    std::vector<Matrix<F>> ops;
    for (std::size_t i = 0; i < m.hopf()->dim(); ++i)
        for (std::size_t a = 0; a < m.hopf()->dim(); ++a) ops.push_back(m.act(i) * m.coact(a));
    return ModuleStructure<F>(target, m.dim(), std::move(ops));
}

/// Restricts a module over H (x) H* (either algebra) to the pair
/// L_i = A(e_i (x) eps), C_a = A(1 (x) delta_a).
template <ExactField F>
Object<F> split_pair_action(const HopfPtr<F>& base, const ModuleStructure<F>& a, Kind kind) {
    const auto n = base->dim();
    require(a.hopf()->dim() == n * n, Errc::DimensionMismatch, "module is not over an algebra on H (x) H*");
    const auto& k = base->field();
    std::vector<Matrix<F>> ops, comps;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<F> l(k, a.dim(), a.dim());
        for (std::size_t b = 0; b < n; ++b) l.add_scaled(base->counit()[b], a.op(i * n + b));
        ops.push_back(std::move(l));
    }
    for (std::size_t b = 0; b < n; ++b) {
        Matrix<F> c(k, a.dim(), a.dim());
        for (std::size_t i = 0; i < n; ++i) c.add_scaled(base->unit()[i], a.op(i * n + b));
        comps.push_back(std::move(c));
    }
    return Object<F>(ModuleStructure<F>(base, a.dim(), std::move(ops)), ComoduleStructure<F>(base, a.dim(), std::move(comps)),
                     kind);
}

/// D(H)-module -> yd object, rejected unless the pair satisfies the yd condition.
template <ExactField F>
Object<F> double_to_yd(const DoubleAlgebra<F>& d, const ModuleStructure<F>& a) {
    auto m = split_pair_action(d.base, a, Kind::YD);
    auto r = check_yd(m);
    if (!r.passed) fail(Errc::NotYD, "induced pair is not a yd object: " + (r.passed ? "" : r.failures.front()));
    require(pair_action(d.hopf, m) == a, Errc::NotYD, "D(H)-action is not recovered from its restriction");
    return m;
}

/// yd object -> D(H)-module, with the module axioms and the round trip checked.
template <ExactField F>
ModuleStructure<F> yd_to_double(const DoubleAlgebra<F>& d, const Object<F>& m) {
    auto r = check_yd(m);
    if (!r.passed) fail(Errc::NotYD, "input is not a yd object: " + (r.passed ? "" : r.failures.front()));
    auto a = pair_action(d.hopf, m);
    auto mr = verify_module(a);
    if (!mr.passed)
        fail(Errc::NotYD, "yd object does not give a D(H)-module: " + (mr.passed ? "" : mr.failures.front()));
    auto back = split_pair_action(d.base, a, Kind::YD);
    require(back.module() == m.module() && back.comodule() == m.comodule(), Errc::NotYD, "round trip through D(H) is not exact");
    return a;
}

/// Whether free_yd(H, k) and free_yd(H, H) become D(H)-modules under `conv`.
template <ExactField F>
bool convention_fits(const HopfPtr<F>& h, DoubleConvention conv) {
    auto d = drinfeld_double(h, conv);
    for (const auto& v : {ComoduleStructure<F>::trivial(h, 1), ComoduleStructure<F>::regular(h)})
        if (!verify_module(pair_action(d.hopf, free_yd(h, v))).passed) return false;
    return true;
}

}  // namespace ydlab
