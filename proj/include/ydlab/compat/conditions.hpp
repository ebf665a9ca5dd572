#pragma once

#include "ydlab/rep/operations.hpp"

namespace ydlab {

namespace detail {

template <ExactField F>
void require_bimodule_data(const Object<F>& m) {
    require(m.has_action() && m.has_coaction(), Errc::KindMismatch,
            "compatibility needs both an action and a coaction");
}

/// Products L_p C_a (or C_a L_p when `coaction_first`), indexed [p * n + a].
template <ExactField F>
std::vector<Matrix<F>> pair_products(const Object<F>& m, bool coaction_first) {
    const auto n = m.hopf()->dim();
    std::vector<Matrix<F>> out;
    out.reserve(n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t a = 0; a < n; ++a)
            out.push_back(coaction_first ? m.coact(a) * m.act(p) : m.act(p) * m.coact(a));
    return out;
}

/// Compares two families X_b, Y_b (v -> sum_b X_b v (x) e_b) and reports the
/// first basis vector where they disagree.
template <ExactField F>
void compare_families(CheckReport& r, const std::string& label, const std::string& h_name,
                      const std::vector<Matrix<F>>& x, const std::vector<Matrix<F>>& y) {
    for (std::size_t b = 0; b < x.size(); ++b)
        if (auto col = first_differing_column(x[b], y[b])) {
            r.fail(label + ": h = " + h_name + ", m = " + vec_name(*col));
            return;
        }
}

}  // namespace detail

/// h_1 m_0 (x) h_2 m_1 = (h_2 m)_0 (x) (h_2 m)_1 h_1 on all basis pairs.
template <ExactField F>
CheckReport check_yd_form1(const Object<F>& m) {
    detail::require_bimodule_data(m);
    const auto& h = *m.hopf();
    const auto n = h.dim();
    const auto lc = detail::pair_products(m, false);
    const auto cl = detail::pair_products(m, true);
    CheckReport r;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Matrix<F>> lhs(n, Matrix<F>(m.field(), m.dim(), m.dim())), rhs = lhs;
        for (const auto& t : h.comult(i))
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const auto& x = h.mult(t.right, a, b);
                    if (!x.is_zero()) lhs[b].add_scaled(t.coeff * x, lc[t.left * n + a]);
                    const auto& y = h.mult(a, t.left, b);
                    if (!y.is_zero()) rhs[b].add_scaled(t.coeff * y, cl[t.right * n + a]);
                }
        detail::compare_families(r, "yd form 1", h.basis_names()[i], lhs, rhs);
    }
    return r;
}

/// rho(h m) = h_2 m_0 (x) h_3 m_1 S^-1(h_1) on all basis pairs.
template <ExactField F>
CheckReport check_yd_form2(const Object<F>& m) {
    detail::require_bimodule_data(m);
    const auto& h = *m.hopf();
    const auto n = h.dim();
    const auto& sinv = h.antipode_inverse();
    const auto lc = detail::pair_products(m, false);
    CheckReport r;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Matrix<F>> lhs, rhs(n, Matrix<F>(m.field(), m.dim(), m.dim()));
        for (std::size_t b = 0; b < n; ++b) lhs.push_back(m.coact(b) * m.act(i));
        for (const auto& t : h.double_coproduct(i)) {
            auto s1 = sinv.column(t.first);
            for (std::size_t a = 0; a < n; ++a) {
                auto w = h.multiply(h.product(t.third, a), s1);
                for (std::size_t b = 0; b < n; ++b)
                    if (!w[b].is_zero()) rhs[b].add_scaled(t.coeff * w[b], lc[t.second * n + a]);
            }
        }
        detail::compare_families(r, "yd form 2", h.basis_names()[i], lhs, rhs);
    }
    return r;
}

/// Yetter-Drinfeld condition in both forms. The forms are equivalent, so a
/// disagreement is reported as a failure of its own.
template <ExactField F>
CheckReport check_yd(const Object<F>& m) {
    auto r = verify_structures(m);
    if (!r.passed) return r;
    auto one = check_yd_form1(m);
    auto two = check_yd_form2(m);
    for (auto& f : one.failures) r.fail(std::move(f));
    for (auto& f : two.failures) r.fail(std::move(f));
    if (one.passed != two.passed) r.fail("yd forms disagree");
    return r;
}

/// Long condition rho(h m) = h m_0 (x) m_1, i.e. every C_a commutes with every L_i.
template <ExactField F>
CheckReport check_long(const Object<F>& m) {
    auto r = verify_structures(m);
    if (!r.passed) return r;
    detail::require_bimodule_data(m);
    const auto& h = *m.hopf();
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t a = 0; a < h.dim(); ++a)
            if (auto col = detail::first_differing_column(m.coact(a) * m.act(i), m.act(i) * m.coact(a))) {
                r.fail("long: h = " + h.basis_names()[i] + ", m = " + detail::vec_name(*col));
                break;
            }
    return r;
}

/// The check matching the object's declared kind.
template <ExactField F>
CheckReport check_kind(const Object<F>& m) {
    switch (m.kind()) {
        case Kind::YD: return check_yd(m);
        case Kind::Long: return check_long(m);
        default: return verify_structures(m);
    }
}

}  // namespace ydlab
