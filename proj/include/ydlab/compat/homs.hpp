#pragma once

#include "ydlab/compat/constructions.hpp"
#include "ydlab/hopf/integrals.hpp"

namespace ydlab {

// Hom_k(M, N) is flattened row-major: f is dim N x dim M and
// vec(A f B) = (A (x) B^T) vec(f).

namespace detail {

/// Stacked blocks whose common kernel is { f : f X_i = Y_i f }.
template <ExactField F>
void intertwiner_blocks(std::vector<Matrix<F>>& blocks, const std::vector<Matrix<F>>& xs,
                        const std::vector<Matrix<F>>& ys) {
    const auto& k = xs.front().field();
    const auto im = Matrix<F>::identity(k, xs.front().rows());
    const auto in = Matrix<F>::identity(k, ys.front().rows());
    for (std::size_t i = 0; i < xs.size(); ++i) blocks.push_back(kron(in, xs[i].transpose()) - kron(ys[i], im));
}

template <ExactField F>
Matrix<F> as_map(const F& k, std::size_t rows, std::size_t cols, const Vector<F>& v) {
    return unflatten(k, rows, cols, std::span<const scalar_t<F>>(v));
}

}  // namespace detail

/// H-linear maps M -> N.
template <ExactField F>
Subspace<F> h_linear_homs(const Object<F>& m, const Object<F>& n) {
    detail::require_same_hopf(m, n);
    std::vector<Matrix<F>> blocks;
    detail::intertwiner_blocks(blocks, m.module().ops(), n.module().ops());
    return kernel(vstack(m.field(), m.dim() * n.dim(), blocks));
}

/// Maps that are both H-linear and H-colinear, solved as one linear system.
template <ExactField F>
Subspace<F> colinear_homs(const Object<F>& m, const Object<F>& n) {
    detail::require_same_hopf(m, n);
    std::vector<Matrix<F>> blocks;
    detail::intertwiner_blocks(blocks, m.module().ops(), n.module().ops());
    detail::intertwiner_blocks(blocks, m.comodule().comps(), n.comodule().comps());
    return kernel(vstack(m.field(), m.dim() * n.dim(), blocks));
}

/// The coaction f -> f_0 (x) f_1 on Hom_k(M, N) given by
/// f_0(m) (x) f_1 = f(m_0)_0 (x) f(m_0)_1 S(m_1). Component a is
/// sum_{i,t} [e_t S(e_i)]_a C^N_t (x) (C^M_i)^T on the flattened space.
template <ExactField F>
ComoduleStructure<F> homk_comodule(const ComoduleStructure<F>& m, const ComoduleStructure<F>& n) {
    return ComoduleStructure<F>(m.hopf(), m.dim() * n.dim(), detail::hstar_operators(m, n));
}

/// The same coaction evaluated on one map by composition:
/// component a is sum_{i,t} [e_t S(e_i)]_a C^N_t f C^M_i.
template <ExactField F>
std::vector<Matrix<F>> hom_coaction_components(const ComoduleStructure<F>& m, const ComoduleStructure<F>& n,
                                               const Matrix<F>& f) {
    const auto& h = *m.hopf();
    const auto d = h.dim();
    std::vector<Matrix<F>> out(d, Matrix<F>(h.field(), n.dim(), m.dim()));
    for (std::size_t i = 0; i < d; ++i) {
        auto s_i = h.antipode().column(i);
        auto fc = f * m.comp(i);
        for (std::size_t t = 0; t < d; ++t) {
            auto w = h.multiply(h.basis_vector(t), s_i);
            if (is_zero_vector<F>(w)) continue;
            auto x = n.comp(t) * fc;
            for (std::size_t a = 0; a < d; ++a)
                if (!w[a].is_zero()) out[a].add_scaled(w[a], x);
        }
    }
    return out;
}

/// H-linear maps M -> N with their coaction, in coordinates of `space`.
template <ExactField F>
struct HomComodule {
    Subspace<F> space;
    ComoduleStructure<F> comodule;
    std::string route;  // which hypothesis admitted the construction
};

/// Coaction on hom_H(M, N): pi(f)(m) = f(m_0)_0 (x) f(m_0)_1 S(m_1), checked to land
/// in hom_H(M, N) (x) H and to induce the H*-action of hstar_action_on_homk.
template <ExactField F>
HomComodule<F> hom_coaction(const Object<F>& m, const Object<F>& n, Kind kind) {
    require(kind == Kind::YD || kind == Kind::Long, Errc::KindMismatch, "hom_coaction is for yd or long objects");
    detail::require_kind(m, kind, "hom_coaction");
    detail::require_kind(n, kind, "hom_coaction");
    detail::require_same_hopf(m, n);
    const auto& h = *m.hopf();
    const auto& k = h.field();
    std::string route;
    if (kind == Kind::YD) {
        require(h.is_commutative(), Errc::NotCommutative, "yd hom coaction needs H commutative");
        route = "yd, H commutative";
    } else {
        route = h.is_commutative() ? "long, H commutative" : "long, H arbitrary";
    }
    auto space = h_linear_homs(m, n);
    const auto hstar = detail::hstar_operators(m.comodule(), n.comodule());
    const auto s = space.dim();
    std::vector<Matrix<F>> comps(h.dim(), Matrix<F>(k, s, s));
    for (std::size_t b = 0; b < s; ++b) {
        const auto& fv = space.basis()[b];
        auto parts = hom_coaction_components(m.comodule(), n.comodule(), detail::as_map(k, n.dim(), m.dim(), fv));
        for (std::size_t a = 0; a < h.dim(); ++a) {
            auto flat = flatten(parts[a]);
            if (flat != hstar[a].apply(fv))
                fail(Errc::RationalityFailure, "coaction on Hom disagrees with the H*-action at component " + h.basis_names()[a]);
            auto coords = space.coordinates(flat);
            if (!coords)
                fail(Errc::RationalityFailure, "pi(f) leaves hom_H(M, N) (x) H at component " + h.basis_names()[a]);
            for (std::size_t c = 0; c < s; ++c) comps[a](c, b) = (*coords)[c];
        }
    }
    ComoduleStructure<F> com(m.hopf(), s, std::move(comps));
    auto r = verify_comodule(com);
    if (!r.passed)
        fail(Errc::RationalityFailure, "coaction on hom_H(M, N) is not coassociative/counital: " + (r.passed ? "" : r.failures.front()));
    return {std::move(space), std::move(com), std::move(route)};
}

/// hom_H(M, N) as an object of the same kind, with (hf)(m) = h f(m).
template <ExactField F>
struct HomObject {
    Subspace<F> space;
    Object<F> object;
};

template <ExactField F>
HomObject<F> hom_object(const Object<F>& m, const Object<F>& n, Kind kind) {
    require(m.hopf()->is_commutative(), Errc::NotCommutative, "an H-action on hom_H(M, N) needs H commutative");
    auto hc = hom_coaction(m, n, kind);
    const auto& h = *m.hopf();
    const auto& k = h.field();
    const auto s = hc.space.dim();
    std::vector<Matrix<F>> ops(h.dim(), Matrix<F>(k, s, s));
    for (std::size_t b = 0; b < s; ++b) {
        auto f = detail::as_map(k, n.dim(), m.dim(), hc.space.basis()[b]);
        for (std::size_t i = 0; i < h.dim(); ++i) {
            auto coords = hc.space.coordinates(flatten(n.act(i) * f));
            require(coords.has_value(), Errc::IllDefinedAction, "h f is not H-linear");
            for (std::size_t c = 0; c < s; ++c) ops[i](c, b) = (*coords)[c];
        }
    }
    Object<F> out(ModuleStructure<F>(m.hopf(), s, std::move(ops)), std::move(hc.comodule), kind);
    detail::assert_kind(out, "hom object");
    return {std::move(hc.space), std::move(out)};
}

template <ExactField F>
HomObject<F> hom_yd_object(const Object<F>& m, const Object<F>& n) {
    return hom_object(m, n, Kind::YD);
}

/// Whether H-linear H-colinear maps are exactly the coinvariants of hom_H(M, N).
template <ExactField F>
bool hom_h_colinear_equals_coinvariants(const Object<F>& m, const Object<F>& n, Kind kind) {
    auto hc = hom_coaction(m, n, kind);
    auto co = coinvariants(hc.comodule);
    std::vector<Vector<F>> lifted;
    for (const auto& c : co.basis()) lifted.push_back(hc.space.combine(c));
    return Subspace<F>::span(m.field(), m.dim() * n.dim(), lifted) == colinear_homs(m, n);
}

/// phi: hom_H(H (x) V, N) -> Hom_k(V, N), phi(f)(v) = f(1 (x) v), and its inverse
/// g -> (h (x) v -> h g(v)), as comodule maps between the two Hom comodules.
template <ExactField F>
struct FreeHomIso {
    Subspace<F> hom_space;  // inside Hom_k(H (x) V, N)
    Morphism<F> phi;
    Morphism<F> phi_inverse;
};

template <ExactField F>
FreeHomIso<F> free_hom_iso(const ComoduleStructure<F>& v, const Object<F>& n, Kind kind) {
    const auto& hopf = n.hopf();
    const auto& h = *hopf;
    const auto& k = h.field();
    auto free = free_object(hopf, v, kind);
    auto hc = hom_coaction(free, n, kind);
    auto target = homk_comodule(v, n.comodule());
    const auto s = hc.space.dim(), dv = v.dim(), dn = n.dim();
    const auto t = dv * dn;

    Matrix<F> phi(k, t, s);
    for (std::size_t b = 0; b < s; ++b) {
        auto f = detail::as_map(k, dn, h.dim() * dv, hc.space.basis()[b]);
        Matrix<F> g(k, dn, dv);
        for (std::size_t u = 0; u < h.dim(); ++u)
            if (!h.unit()[u].is_zero())
                for (std::size_t x = 0; x < dv; ++x)
                    for (std::size_t r = 0; r < dn; ++r) g(r, x) += h.unit()[u] * f(r, u * dv + x);
        auto flat = flatten(g);
        for (std::size_t r = 0; r < t; ++r) phi(r, b) = flat[r];
    }
    Matrix<F> inv(k, s, t);
    for (std::size_t e = 0; e < t; ++e) {
        auto g = detail::as_map(k, dn, dv, unit_vector(k, t, e));
        Matrix<F> f(k, dn, h.dim() * dv);
        for (std::size_t u = 0; u < h.dim(); ++u) {
            auto hg = n.act(u) * g;
            for (std::size_t x = 0; x < dv; ++x)
                for (std::size_t r = 0; r < dn; ++r) f(r, u * dv + x) = hg(r, x);
        }
        auto coords = hc.space.coordinates(flatten(f));
        require(coords.has_value(), Errc::IllDefinedAction, "h (x) v -> h g(v) is not H-linear");
        for (std::size_t c = 0; c < s; ++c) inv(c, e) = (*coords)[c];
    }
    require(inv * phi == Matrix<F>::identity(k, s) && phi * inv == Matrix<F>::identity(k, t), Errc::NotBijective,
            "free Hom maps are not mutually inverse");
    auto src = share(Object<F>(std::nullopt, std::move(hc.comodule), Kind::Comodule));
    auto dst = share(Object<F>(std::nullopt, std::move(target), Kind::Comodule));
    return {std::move(hc.space), check_morphism(src, dst, std::move(phi)), check_morphism(dst, src, std::move(inv))};
}

/// pi: H (x) V -> M, h (x) v -> h v, for V the subcomodule generated by `generators`
/// (all of M when empty), written in the basis of `span`.
template <ExactField F>
struct FreeCover {
    Subspace<F> span;
    ComoduleStructure<F> generators;
    Morphism<F> map;
    bool surjective;
};

template <ExactField F>
FreeCover<F> free_cover(const ObjectPtr<F>& m, Kind kind, std::vector<Vector<F>> generators = {}) {
    const auto& hopf = m->hopf();
    const auto& h = *hopf;
    const auto& k = h.field();
    if (generators.empty())
        for (std::size_t j = 0; j < m->dim(); ++j) generators.push_back(unit_vector(k, m->dim(), j));
    auto w = subcomodule_hull(m->comodule(), generators);
    const auto basis = w.column_basis(), coords = w.coordinate_map();
    std::vector<Matrix<F>> comps;
    for (const auto& c : m->comodule().comps()) comps.push_back(coords * c * basis);
    ComoduleStructure<F> v(hopf, w.dim(), std::move(comps));
    auto cover = share(free_object(hopf, v, kind));
    Matrix<F> pi(k, m->dim(), h.dim() * w.dim());
    for (std::size_t u = 0; u < h.dim(); ++u) {
        auto img = m->act(u) * basis;
        for (std::size_t b = 0; b < w.dim(); ++b)
            for (std::size_t r = 0; r < m->dim(); ++r) pi(r, u * w.dim() + b) = img(r, b);
    }
    bool onto = rank(pi) == m->dim();
    auto mor = check_morphism(cover, m, std::move(pi));
    if (!*mor.flags.h_linear || !*mor.flags.h_colinear)
        fail(kind == Kind::Long ? Errc::NotLong : Errc::NotYD, "free cover map is not a morphism");
    return {std::move(w), std::move(v), std::move(mor), onto};
}

namespace detail {

/// A section s of the free cover pi of N with pi s = id, H-linear and, when
/// `colinear`, also H-colinear; solved as one affine system.
template <ExactField F>
std::optional<Matrix<F>> cover_section(const ObjectPtr<F>& n, Kind kind, bool colinear) {
    auto cover = free_cover(n, kind);
    const auto& src = *cover.map.source;
    const auto& p = cover.map.matrix;
    const auto& k = n->field();
    const auto rows = src.dim(), cols = n->dim();
    std::vector<Matrix<F>> blocks;
    intertwiner_blocks(blocks, n->module().ops(), src.module().ops());
    if (colinear) intertwiner_blocks(blocks, n->comodule().comps(), src.comodule().comps());
    blocks.push_back(kron(p, Matrix<F>::identity(k, cols)));
    auto a = vstack(k, rows * cols, blocks);
    auto rhs = zero_vector(k, a.rows());
    auto id = flatten(Matrix<F>::identity(k, cols));
    std::copy(id.begin(), id.end(), rhs.end() - static_cast<std::ptrdiff_t>(id.size()));
    auto sol = solve_affine(a, std::span<const scalar_t<F>>(rhs));
    if (auto* x = std::get_if<AffineSolution<F>>(&sol)) return as_map(k, rows, cols, x->particular);
    return std::nullopt;
}

}  // namespace detail

/// An H-linear section of the free cover of N, if one exists.
template <ExactField F>
std::optional<Matrix<F>> module_splitting(const ObjectPtr<F>& n, Kind kind) {
    return detail::cover_section(n, kind, false);
}

template <ExactField F>
struct AdjunctionReport {
    std::size_t lhs_dim;  // colinear maps M -> hom_H(N, P)
    std::size_t rhs_dim;  // colinear maps M (x)_H N -> P
    std::string projectivity_route;
    bool bijective;
};

/// phi(f)(m (x) n) = f(m)(n) between hom_H^H(M, hom_H(N, P)) and hom_H^H(M (x)_H N, P).
template <ExactField F>
AdjunctionReport<F> adjunction_iso(const ObjectPtr<F>& m, const ObjectPtr<F>& n, const ObjectPtr<F>& p, Kind kind) {
    const auto& h = *m->hopf();
    const auto& k = h.field();
    require(h.is_commutative(), Errc::NotCommutative, "the adjunction needs H commutative");
    std::string route;
    if (is_semisimple(h))
        route = "H semisimple";
    else if (module_splitting(n, kind))
        route = "N splits off its free cover";
    else
        fail(Errc::ProjectivityUnverified, "N is not certified projective over H");

    auto inner = hom_object(*n, *p, kind);
    auto lhs = colinear_homs(*m, inner.object);
    auto tensor = tensor_over_h(*m, *n, kind);
    auto rhs = colinear_homs(tensor.object, *p);

    const auto dm = m->dim(), dn = n->dim(), dp = p->dim(), s = inner.space.dim(), q = tensor.quotient.dim();
    const auto embed = inner.space.column_basis();
    std::vector<Vector<F>> images;
    for (const auto& fv : lhs.basis()) {
        auto f = embed * detail::as_map(k, s, dm, fv);  // column j: f(m_j) flattened in Hom_k(N, P)
        Matrix<F> g(k, dp, dm * dn);
        for (std::size_t j = 0; j < dm; ++j) {
            auto fj = detail::as_map(k, dp, dn, f.column(j));
            for (std::size_t l = 0; l < dn; ++l)
                for (std::size_t r = 0; r < dp; ++r) g(r, j * dn + l) = fj(r, l);
        }
        for (const auto& rel : tensor.quotient.relations.basis())
            require(is_zero_vector<F>(g.apply(rel)), Errc::IllDefinedAction, "phi(f) is not balanced");
        auto gq = g * tensor.quotient.section;
        require(gq.cols() == q, Errc::ShapeMismatch, "quotient width mismatch");
        images.push_back(flatten(gq));
    }
    auto img = Subspace<F>::span(k, dp * q, images);
    bool ok = lhs.dim() == rhs.dim() && img.dim() == lhs.dim() && img.is_subspace_of(rhs);
    return {lhs.dim(), rhs.dim(), std::move(route), ok};
}

}  // namespace ydlab
