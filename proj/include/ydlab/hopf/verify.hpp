#pragma once

#include <string>
#include <vector>

#include "ydlab/hopf/hopf_algebra.hpp"

namespace ydlab {

struct HopfFlags {
    bool commutative = false;
    bool cocommutative = false;
};

/// Outcome of checking the Hopf algebra axioms. `failures` holds axiom family
/// names; `details` holds one human-readable witness per failing family.
struct HopfReport {
    bool passed = false;
    std::vector<std::string> failures;
    std::vector<std::string> details;
    HopfFlags flags;
};

inline const std::vector<std::string>& hopf_axiom_families() {
    static const std::vector<std::string> names = {"associativity", "unit",     "coassociativity",
                                                   "counit",        "bialgebra", "antipode",
                                                   "antipode-bijective"};
    return names;
}

namespace detail {

/// Dense coordinates of x (x) y in H (x) H, for x, y in H given densely.
template <ExactField F>
void add_tensor(Vector<F>& out, std::size_t n, const scalar_t<F>& c, std::span<const scalar_t<F>> x,
                std::span<const scalar_t<F>> y) {
    for (std::size_t a = 0; a < n; ++a) {
        if (x[a].is_zero()) continue;
        auto cx = c * x[a];
        for (std::size_t b = 0; b < n; ++b)
            if (!y[b].is_zero()) out[a * n + b] += cx * y[b];
    }
}

template <ExactField F>
std::string pair_name(const HopfAlgebra<F>& h, std::size_t i, std::size_t j) {
    return "(" + h.basis_names()[i] + ", " + h.basis_names()[j] + ")";
}

template <ExactField F>
std::optional<std::string> check_associativity(const HopfAlgebra<F>& h) {
    const auto n = h.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto ij = h.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                auto lhs = h.multiply(ij, h.basis_vector(k));
                auto rhs = h.multiply(h.basis_vector(i), h.product(j, k));
                if (lhs != rhs)
                    return "(e_i e_j) e_k != e_i (e_j e_k) at " + h.basis_names()[i] + ", " + h.basis_names()[j] +
                           ", " + h.basis_names()[k];
            }
        }
    return std::nullopt;
}

template <ExactField F>
std::optional<std::string> check_unit(const HopfAlgebra<F>& h) {
    for (std::size_t i = 0; i < h.dim(); ++i) {
        auto e = h.basis_vector(i);
        if (h.multiply(h.unit(), e) != e || h.multiply(e, h.unit()) != e)
            return "1 * e != e or e * 1 != e at " + h.basis_names()[i];
    }
    return std::nullopt;
}

template <ExactField F>
std::optional<std::string> check_coassociativity(const HopfAlgebra<F>& h) {
    const auto n = h.dim();
    const auto& k = h.field();
    for (std::size_t i = 0; i < n; ++i) {
        auto lhs = zero_vector(k, n * n * n);
        auto rhs = zero_vector(k, n * n * n);
        for (const auto& t : h.comult(i)) {
            for (const auto& u : h.comult(t.left)) lhs[(u.left * n + u.right) * n + t.right] += t.coeff * u.coeff;
            for (const auto& u : h.comult(t.right)) rhs[(t.left * n + u.left) * n + u.right] += t.coeff * u.coeff;
        }
        if (lhs != rhs) return "(Delta x id) Delta != (id x Delta) Delta at " + h.basis_names()[i];
    }
    return std::nullopt;
}

template <ExactField F>
std::optional<std::string> check_counit(const HopfAlgebra<F>& h) {
    const auto n = h.dim();
    const auto& k = h.field();
    for (std::size_t i = 0; i < n; ++i) {
        auto left = zero_vector(k, n);
        auto right = zero_vector(k, n);
        for (const auto& t : h.comult(i)) {
            left[t.right] += t.coeff * h.counit()[t.left];
            right[t.left] += t.coeff * h.counit()[t.right];
        }
        auto e = h.basis_vector(i);
        if (left != e || right != e) return "counit identity fails at " + h.basis_names()[i];
    }
    return std::nullopt;
}

template <ExactField F>
std::optional<std::string> check_bialgebra(const HopfAlgebra<F>& h) {
    const auto n = h.dim();
    const auto& k = h.field();
    // Delta(1) = 1 (x) 1 and eps(1) = 1.
    {
        auto d1 = zero_vector(k, n * n);
        for (std::size_t i = 0; i < n; ++i)
            if (!h.unit()[i].is_zero())
                for (const auto& t : h.comult(i)) d1[t.left * n + t.right] += h.unit()[i] * t.coeff;
        auto one_one = zero_vector(k, n * n);
        add_tensor<F>(one_one, n, k.one(), h.unit(), h.unit());
        if (d1 != one_one) return std::string("Delta(1) != 1 x 1");
        if (!(h.apply_counit(h.unit()) == k.one())) return std::string("eps(1) != 1");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto ij = h.product(i, j);
            auto lhs = zero_vector(k, n * n);
            for (std::size_t m = 0; m < n; ++m)
                if (!ij[m].is_zero())
                    for (const auto& t : h.comult(m)) lhs[t.left * n + t.right] += ij[m] * t.coeff;
            auto rhs = zero_vector(k, n * n);
            for (const auto& t : h.comult(i))
                for (const auto& u : h.comult(j))
                    add_tensor<F>(rhs, n, t.coeff * u.coeff, h.product(t.left, u.left), h.product(t.right, u.right));
            if (lhs != rhs) return "Delta(e_i e_j) != Delta(e_i) Delta(e_j) at " + pair_name(h, i, j);
            if (!(h.apply_counit(ij) == h.counit()[i] * h.counit()[j]))
                return "eps(e_i e_j) != eps(e_i) eps(e_j) at " + pair_name(h, i, j);
        }
    return std::nullopt;
}

template <ExactField F>
std::optional<std::string> check_antipode(const HopfAlgebra<F>& h) {
    const auto n = h.dim();
    const auto& k = h.field();
    const auto& s = h.antipode();
    for (std::size_t i = 0; i < n; ++i) {
        auto left = zero_vector(k, n);
        auto right = zero_vector(k, n);
        for (const auto& t : h.comult(i)) {
            auto sl = s.column(t.left);
            auto sr = s.column(t.right);
            auto a = h.multiply(sl, h.basis_vector(t.right));
            auto b = h.multiply(h.basis_vector(t.left), sr);
            for (std::size_t m = 0; m < n; ++m) {
                left[m] += t.coeff * a[m];
                right[m] += t.coeff * b[m];
            }
        }
        auto expected = h.unit();
        for (auto& x : expected) x *= h.counit()[i];
        if (left != expected || right != expected) return "S(h1) h2 or h1 S(h2) != eps(h) 1 at " + h.basis_names()[i];
    }
    return std::nullopt;
}

}  // namespace detail

/// Checks every Hopf algebra axiom family exactly; all families are evaluated
/// so the report lists each one that fails.
template <ExactField F>
HopfReport verify_hopf(const HopfAlgebra<F>& h) {
    HopfReport report;
    auto record = [&](const std::string& name, const std::optional<std::string>& witness) {
        if (witness) {
            report.failures.push_back(name);
            report.details.push_back(name + ": " + *witness);
        }
    };
    record("associativity", detail::check_associativity(h));
    record("unit", detail::check_unit(h));
    record("coassociativity", detail::check_coassociativity(h));
    record("counit", detail::check_counit(h));
    record("bialgebra", detail::check_bialgebra(h));
    record("antipode", detail::check_antipode(h));
    record("antipode-bijective",
           h.has_bijective_antipode() ? std::nullopt : std::optional<std::string>("antipode matrix is singular"));
    report.passed = report.failures.empty();
    report.flags.commutative = h.is_commutative();
    report.flags.cocommutative = h.is_cocommutative();
    return report;
}

}  // namespace ydlab
