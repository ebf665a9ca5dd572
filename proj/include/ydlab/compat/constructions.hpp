#pragma once

#include "ydlab/compat/conditions.hpp"

namespace ydlab {

namespace detail {

template <ExactField F>
void require_same_hopf(const Object<F>& m, const Object<F>& n) {
    require(m.hopf() == n.hopf() || same_structure(*m.hopf(), *n.hopf()), Errc::ShapeMismatch,
            "objects over different Hopf algebras");
}

template <ExactField F>
void require_kind(const Object<F>& m, Kind kind, const char* what) {
    if (m.kind() != kind)
        fail(Errc::KindMismatch, std::string(what) + " expects " + kind_name(kind) + " objects, got " + kind_name(m.kind()));
}

/// Raises NotYD / NotLong unless `m` passes the check of `kind`.
template <ExactField F>
const Object<F>& assert_kind(const Object<F>& m, const std::string& what) {
    auto r = check_kind(m);
    if (!r.passed) {
        auto code = m.kind() == Kind::Long ? Errc::NotLong : Errc::NotYD;
        fail(code, what + " fails the " + kind_name(m.kind()) + " condition: " + r.failures.front());
    }
    return m;
}

/// Operators h (m (x) n) = h_1 m (x) h_2 n.
template <ExactField F>
std::vector<Matrix<F>> tensor_action(const ModuleStructure<F>& m, const ModuleStructure<F>& n) {
    const auto& h = *m.hopf();
    std::vector<Matrix<F>> ops;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        Matrix<F> op(h.field(), m.dim() * n.dim(), m.dim() * n.dim());
        for (const auto& t : h.comult(i)) op.add_scaled(t.coeff, kron(m.op(t.left), n.op(t.right)));
        ops.push_back(std::move(op));
    }
    return ops;
}

/// rho(m (x) n) = m_0 (x) n_0 (x) n_1 m_1 (yd) or m_1 n_1 (long).
template <ExactField F>
std::vector<Matrix<F>> tensor_coaction(const ComoduleStructure<F>& m, const ComoduleStructure<F>& n, Kind kind) {
    const auto& h = *m.hopf();
    const auto d = h.dim();
    std::vector<Matrix<F>> comps(d, Matrix<F>(h.field(), m.dim() * n.dim(), m.dim() * n.dim()));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            auto k = kron(m.comp(a), n.comp(b));
            for (std::size_t c = 0; c < d; ++c) {
                const auto& x = kind == Kind::Long ? h.mult(a, b, c) : h.mult(b, a, c);
                if (!x.is_zero()) comps[c].add_scaled(x, k);
            }
        }
    return comps;
}

template <ExactField F>
Object<F> tensor_object(const Object<F>& m, const Object<F>& n, Kind kind, const char* what) {
    require_kind(m, kind, what);
    require_kind(n, kind, what);
    require_same_hopf(m, n);
    assert_kind(m, "left factor");
    assert_kind(n, "right factor");
    const auto dim = m.dim() * n.dim();
    Object<F> out(ModuleStructure<F>(m.hopf(), dim, tensor_action(m.module(), n.module())),
                  ComoduleStructure<F>(m.hopf(), dim, tensor_coaction(m.comodule(), n.comodule(), kind)), kind);
    return assert_kind(out, what);
}

}  // namespace detail

/// M (x) N with the diagonal action and coaction m_0 (x) n_0 (x) n_1 m_1.
/// Basis vector m_j (x) n_l sits at index j * dim N + l.
template <ExactField F>
Object<F> tensor_yd(const Object<F>& m, const Object<F>& n) {
    return detail::tensor_object(m, n, Kind::YD, "tensor_yd");
}

/// M (x) N with the diagonal action and coaction m_0 (x) n_0 (x) m_1 n_1.
template <ExactField F>
Object<F> tensor_long(const Object<F>& m, const Object<F>& n) {
    return detail::tensor_object(m, n, Kind::Long, "tensor_long");
}

/// H (x) V with h(h' (x) v) = hh' (x) v and
/// rho(h (x) v) = h_2 (x) v_0 (x) h_3 v_1 S^-1(h_1). Index of e_u (x) v_b is u * dim V + b.
template <ExactField F>
Object<F> free_yd(const HopfPtr<F>& hopf, const ComoduleStructure<F>& v) {
    auto r = verify_comodule(v);
    if (!r.passed) fail(Errc::IllDefinedCoaction, "free_yd needs a comodule: " + (r.passed ? "" : r.failures.front()));
    const auto& h = *hopf;
    const auto n = h.dim(), m = v.dim(), dim = n * m;
    const auto& sinv = h.antipode_inverse();
    std::vector<Matrix<F>> ops;
    for (std::size_t i = 0; i < n; ++i) ops.push_back(kron(h.left_multiplication(i), Matrix<F>::identity(h.field(), m)));
    std::vector<Matrix<F>> comps(n, Matrix<F>(h.field(), dim, dim));
    for (std::size_t u = 0; u < n; ++u)
        for (const auto& t : h.double_coproduct(u)) {
            auto s1 = sinv.column(t.first);
            for (std::size_t a = 0; a < n; ++a) {
                auto w = h.multiply(h.product(t.third, a), s1);
                for (std::size_t c = 0; c < n; ++c) {
                    if (w[c].is_zero()) continue;
                    auto coeff = t.coeff * w[c];
                    for (std::size_t b = 0; b < m; ++b)
                        for (std::size_t k = 0; k < m; ++k)
                            if (!v.comp(a)(k, b).is_zero())
                                comps[c](t.second * m + k, u * m + b) += coeff * v.comp(a)(k, b);
                }
            }
        }
    Object<F> out(ModuleStructure<F>(hopf, dim, std::move(ops)), ComoduleStructure<F>(hopf, dim, std::move(comps)),
                  Kind::YD);
    return detail::assert_kind(out, "free_yd");
}

/// H (x) V with h(h' (x) v) = hh' (x) v and rho(h (x) v) = h (x) v_0 (x) v_1.
template <ExactField F>
Object<F> free_long(const HopfPtr<F>& hopf, const ComoduleStructure<F>& v) {
    auto r = verify_comodule(v);
    if (!r.passed)
        fail(Errc::IllDefinedCoaction, "free_long needs a comodule: " + (r.passed ? "" : r.failures.front()));
    const auto& h = *hopf;
    const auto n = h.dim(), m = v.dim();
    std::vector<Matrix<F>> ops, comps;
    for (std::size_t i = 0; i < n; ++i) {
        ops.push_back(kron(h.left_multiplication(i), Matrix<F>::identity(h.field(), m)));
        comps.push_back(kron(Matrix<F>::identity(h.field(), n), v.comp(i)));
    }
    Object<F> out(ModuleStructure<F>(hopf, n * m, std::move(ops)), ComoduleStructure<F>(hopf, n * m, std::move(comps)),
                  Kind::Long);
    return detail::assert_kind(out, "free_long");
}

template <ExactField F>
Object<F> free_object(const HopfPtr<F>& hopf, const ComoduleStructure<F>& v, Kind kind) {
    require(kind == Kind::YD || kind == Kind::Long, Errc::KindMismatch, "free objects are yd or long");
    return kind == Kind::YD ? free_yd(hopf, v) : free_long(hopf, v);
}

/// M (x)_H N together with the quotient map from M (x) N.
template <ExactField F>
struct TensorOverH {
    Object<F> object;
    Quotient<F> quotient;
};

/// (M (x) N) / span{hm (x) n - m (x) hn} with h(m (x) n) = hm (x) n and the
/// tensor coaction of the kind, after checking both descend to the quotient.
template <ExactField F>
TensorOverH<F> tensor_over_h(const Object<F>& m, const Object<F>& n, Kind kind) {
    require(kind == Kind::YD || kind == Kind::Long, Errc::KindMismatch, "tensor over H is yd or long");
    detail::require_kind(m, kind, "tensor_over_h");
    detail::require_kind(n, kind, "tensor_over_h");
    detail::require_same_hopf(m, n);
    const auto& h = *m.hopf();
    if (kind == Kind::YD) require(h.is_commutative(), Errc::NotCommutative, "yd tensor over H needs H commutative");
    detail::assert_kind(m, "left factor");
    detail::assert_kind(n, "right factor");
    const auto& k = h.field();
    const auto dim = m.dim() * n.dim();
    const auto im = Matrix<F>::identity(k, m.dim()), in = Matrix<F>::identity(k, n.dim());
    std::vector<Matrix<F>> rel_blocks;
    for (std::size_t i = 0; i < h.dim(); ++i) rel_blocks.push_back(kron(m.act(i), in) - kron(im, n.act(i)));
    EchelonBuilder<F> b(k, dim);
    for (const auto& blk : rel_blocks)
        for (std::size_t c = 0; c < dim; ++c) b.insert(blk.column(c));
    auto q = quotient(Subspace<F>::from_builder(b));

    std::vector<Matrix<F>> ops, comps;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        auto op = q.descend(kron(m.act(i), in));
        if (!op)
            fail(Errc::IllDefinedAction, "action of " + h.basis_names()[i] + " does not preserve the balancing relations");
        ops.push_back(std::move(*op));
    }
    for (auto& c : detail::tensor_coaction(m.comodule(), n.comodule(), kind)) {
        auto d = q.descend(c);
        require(d.has_value(), Errc::IllDefinedCoaction, "coaction does not descend to the tensor product over H");
        comps.push_back(std::move(*d));
    }
    Object<F> out(ModuleStructure<F>(m.hopf(), q.dim(), std::move(ops)),
                  ComoduleStructure<F>(m.hopf(), q.dim(), std::move(comps)), kind);
    detail::assert_kind(out, "tensor_over_h");
    return {std::move(out), std::move(q)};
}

}  // namespace ydlab
