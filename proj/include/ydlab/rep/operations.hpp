#pragma once

#include "ydlab/hopf/dual.hpp"
#include "ydlab/rep/structures.hpp"

namespace ydlab {

namespace detail {

/// Index of the first column where two equally shaped matrices differ.
template <ExactField F>
std::optional<std::size_t> first_differing_column(const Matrix<F>& a, const Matrix<F>& b) {
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (!(a(i, j) == b(i, j))) return j;
    return std::nullopt;
}

inline std::string vec_name(std::size_t j) { return "v" + std::to_string(j); }

}  // namespace detail

/// (e_i e_j) v = e_i (e_j v) and 1 v = v on every basis vector.
template <ExactField F>
CheckReport verify_module(const ModuleStructure<F>& m) {
    CheckReport r;
    const auto& h = *m.hopf();
    const auto n = h.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto lhs = m.op(i) * m.op(j);
            auto rhs = m.op_of(h.product(i, j));
            if (auto col = detail::first_differing_column(lhs, rhs))
                r.fail("associativity: (" + h.basis_names()[i] + " " + h.basis_names()[j] + ") . " +
                       detail::vec_name(*col));
        }
    auto one = m.op_of(h.unit());
    if (auto col = detail::first_differing_column(one, Matrix<F>::identity(m.field(), m.dim())))
        r.fail("unit: 1 . " + detail::vec_name(*col) + " != " + detail::vec_name(*col));
    return r;
}

/// (rho (x) id) rho = (id (x) Delta) rho and (id (x) eps) rho = id on every
/// basis vector. In components: C_a C_b = sum_i Delta_i[a,b] C_i and
/// sum_i eps(e_i) C_i = I.
template <ExactField F>
CheckReport verify_comodule(const ComoduleStructure<F>& c) {
    CheckReport r;
    const auto& h = *c.hopf();
    const auto n = h.dim();
    std::vector<Matrix<F>> rhs(n * n, Matrix<F>(c.field(), c.dim(), c.dim()));
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& t : h.comult(i)) rhs[t.left * n + t.right].add_scaled(t.coeff, c.comp(i));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto lhs = c.comp(a) * c.comp(b);
            if (auto col = detail::first_differing_column(lhs, rhs[a * n + b]))
                r.fail("coassociativity: component (" + h.basis_names()[a] + ", " + h.basis_names()[b] + ") at " +
                       detail::vec_name(*col));
        }
    auto counit = c.comp_of(h.counit());
    if (auto col = detail::first_differing_column(counit, Matrix<F>::identity(c.field(), c.dim())))
        r.fail("counit: (id x eps) rho(" + detail::vec_name(*col) + ") != " + detail::vec_name(*col));
    return r;
}

/// Runs the module and/or comodule checks that apply to the object.
template <ExactField F>
CheckReport verify_structures(const Object<F>& m) {
    CheckReport r;
    auto absorb = [&](const CheckReport& x) {
        for (const auto& f : x.failures) r.fail(f);
    };
    if (m.has_action()) absorb(verify_module(m.module()));
    if (m.has_coaction()) absorb(verify_comodule(m.comodule()));
    return r;
}

/// f: source -> target is H-linear iff f L_i = L_i f for all i.
template <ExactField F>
bool is_h_linear(const Object<F>& source, const Object<F>& target, const Matrix<F>& f) {
    for (std::size_t i = 0; i < source.hopf()->dim(); ++i)
        if (!(f * source.act(i) == target.act(i) * f)) return false;
    return true;
}

/// f is H-colinear iff rho_N f = (f (x) id) rho_M, i.e. C^N_a f = f C^M_a.
template <ExactField F>
bool is_h_colinear(const Object<F>& source, const Object<F>& target, const Matrix<F>& f) {
    for (std::size_t a = 0; a < source.hopf()->dim(); ++a)
        if (!(f * source.coact(a) == target.coact(a) * f)) return false;
    return true;
}

struct MorphismFlags {
    std::optional<bool> h_linear;
    std::optional<bool> h_colinear;
};

/// A linear map between objects; the flags are filled only by check_morphism.
template <ExactField F>
struct Morphism {
    ObjectPtr<F> source;
    ObjectPtr<F> target;
    Matrix<F> matrix;
    MorphismFlags flags;
};

template <ExactField F>
Morphism<F> check_morphism(ObjectPtr<F> source, ObjectPtr<F> target, Matrix<F> f) {
    if (!(f.rows() == target->dim() && f.cols() == source->dim()))
        fail(Errc::ShapeMismatch, "morphism matrix is " + f.shape() + ", expected " + std::to_string(target->dim()) + "x" + std::to_string(source->dim()));
    require(source->hopf()->dim() == target->hopf()->dim(), Errc::ShapeMismatch, "objects over different Hopf algebras");
    Morphism<F> m{source, target, std::move(f), {}};
    if (source->has_action() && target->has_action()) m.flags.h_linear = is_h_linear(*source, *target, m.matrix);
    if (source->has_coaction() && target->has_coaction())
        m.flags.h_colinear = is_h_colinear(*source, *target, m.matrix);
    return m;
}

/// M^coH = { m : rho(m) = m (x) 1 } = common kernel of C_a - 1_a I.
template <ExactField F>
Subspace<F> coinvariants(const ComoduleStructure<F>& c) {
    const auto& h = *c.hopf();
    std::vector<Matrix<F>> blocks;
    for (std::size_t a = 0; a < h.dim(); ++a) blocks.push_back(c.comp(a) - Matrix<F>::identity(c.field(), c.dim()) * h.unit()[a]);
    return kernel(vstack(c.field(), c.dim(), blocks));
}

/// Smallest subcomodule containing `vectors`: close under all coaction
/// components C_a = (id (x) delta_a) rho until the dimension stabilises.
template <ExactField F>
Subspace<F> subcomodule_hull(const ComoduleStructure<F>& c, const std::vector<Vector<F>>& vectors) {
    EchelonBuilder<F> b(c.field(), c.dim());
    std::vector<Vector<F>> frontier;
    for (const auto& v : vectors) {
        require(v.size() == c.dim(), Errc::DimensionMismatch, "vector length != comodule dim");
        if (b.insert(v)) frontier.push_back(v);
    }
    while (!frontier.empty()) {
        std::vector<Vector<F>> next;
        for (const auto& v : frontier)
            for (const auto& comp : c.comps()) {
                auto w = comp.apply(v);
                if (b.insert(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return Subspace<F>::from_builder(b);
}

namespace detail {

/// Operators of the dual basis on Hom_k(M, N); see hstar_action_on_homk.
template <ExactField F>
std::vector<Matrix<F>> hstar_operators(const ComoduleStructure<F>& m, const ComoduleStructure<F>& n) {
    const auto& h = *m.hopf();
    const auto d = h.dim();
    const auto dim = m.dim() * n.dim();
    std::vector<Matrix<F>> ops(d, Matrix<F>(h.field(), dim, dim));
    std::vector<Matrix<F>> mt;
    for (const auto& c : m.comps()) mt.push_back(c.transpose());
    for (std::size_t i = 0; i < d; ++i) {
        auto s_i = h.antipode().column(i);
        for (std::size_t j = 0; j < d; ++j) {
            auto coeffs = h.multiply(h.basis_vector(j), s_i);
            if (is_zero_vector<F>(coeffs)) continue;
            auto k = kron(n.comp(j), mt[i]);
            for (std::size_t a = 0; a < d; ++a) ops[a].add_scaled(coeffs[a], k);
        }
    }
    return ops;
}

}  // namespace detail

/// The H*-action on Hom_k(M, N), (phi f)(m) = phi(f(m_0)_1 S(m_1)) f(m_0)_0.
/// Hom_k(M, N) is flattened row-major (f is dim N x dim M), so the operator of
/// the dual basis element delta_a is sum_{i,j} [e_j S(e_i)]_a C^N_j (x) (C^M_i)^T.
template <ExactField F>
ModuleStructure<F> hstar_action_on_homk(const ComoduleStructure<F>& m, const ComoduleStructure<F>& n,
                                        HopfPtr<F> dual_hopf = nullptr) {
    if (!dual_hopf) dual_hopf = share(dual(*m.hopf()));
    return ModuleStructure<F>(std::move(dual_hopf), m.dim() * n.dim(), detail::hstar_operators(m, n));
}

}  // namespace ydlab
