#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ydlab/linalg.hpp"

namespace ydlab {

/// One term c * e_left (x) e_right of a comultiplication.
template <ExactField F>
struct CoproductTerm {
    std::size_t left;
    std::size_t right;
    scalar_t<F> coeff;
};

/// One term c * e_first (x) e_second (x) e_third of the iterated coproduct.
template <ExactField F>
struct TripleTerm {
    std::size_t first;
    std::size_t second;
    std::size_t third;
    scalar_t<F> coeff;
};

/// Finite-dimensional Hopf algebra given by structure constants on a basis
/// e_0..e_{n-1}. Multiplication is a dense table, comultiplication a list of
/// sparse terms per basis element. Immutable after construction.
template <ExactField F>
class HopfAlgebra {
public:
    using Scalar = scalar_t<F>;
    using Coproduct = std::vector<CoproductTerm<F>>;

    /// `mult[(i * n + j) * n + k]` is the coefficient of e_k in e_i e_j.
    HopfAlgebra(F field, std::vector<std::string> basis_names, Vector<F> unit, std::vector<Scalar> mult,
                std::vector<Coproduct> comult, Vector<F> counit, Matrix<F> antipode)
        : field_(std::move(field)),
          names_(std::move(basis_names)),
          unit_(std::move(unit)),
          mult_(std::move(mult)),
          comult_(std::move(comult)),
          counit_(std::move(counit)),
          antipode_(std::move(antipode)) {
        const auto n = names_.size();
        require(unit_.size() == n, Errc::DimensionMismatch, "unit length != dim");
        require(mult_.size() == n * n * n, Errc::DimensionMismatch, "mult table is not n x n x n");
        require(comult_.size() == n, Errc::DimensionMismatch, "comult length != dim");
        require(counit_.size() == n, Errc::DimensionMismatch, "counit length != dim");
        require(antipode_.rows() == n && antipode_.cols() == n, Errc::DimensionMismatch, "antipode is not n x n");
        for (auto& terms : comult_) {
            for (const auto& t : terms)
                require(t.left < n && t.right < n, Errc::DimensionMismatch, "comult index out of range");
            compact(terms);
        }
        antipode_inverse_ = inverse(antipode_);
    }

    const F& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return names_.size(); }
    const std::vector<std::string>& basis_names() const noexcept { return names_; }
    const Vector<F>& unit() const noexcept { return unit_; }
    const Vector<F>& counit() const noexcept { return counit_; }
    const Matrix<F>& antipode() const noexcept { return antipode_; }
    const std::vector<Scalar>& mult_table() const noexcept { return mult_; }

    const Scalar& mult(std::size_t i, std::size_t j, std::size_t k) const {
        const auto n = dim();
        return mult_[(i * n + j) * n + k];
    }

    const Coproduct& comult(std::size_t i) const { return comult_[i]; }

    /// Coefficient of e_j (x) e_k in Delta(e_i).
    Scalar comult_coeff(std::size_t i, std::size_t j, std::size_t k) const {
        auto c = field_.zero();
        for (const auto& t : comult_[i])
            if (t.left == j && t.right == k) c += t.coeff;
        return c;
    }

    bool has_bijective_antipode() const noexcept { return antipode_inverse_.has_value(); }

    const Matrix<F>& antipode_inverse() const {
        if (!antipode_inverse_) fail(Errc::NotBijective, "antipode is singular");
        return *antipode_inverse_;
    }

    Vector<F> basis_vector(std::size_t i) const { return unit_vector(field_, dim(), i); }

    /// e_i e_j as a coordinate vector.
    Vector<F> product(std::size_t i, std::size_t j) const {
        const auto n = dim();
        return Vector<F>(mult_.begin() + (i * n + j) * n, mult_.begin() + (i * n + j + 1) * n);
    }

    Vector<F> multiply(std::span<const Scalar> a, std::span<const Scalar> b) const {
        const auto n = dim();
        auto out = zero_vector(field_, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[j].is_zero()) continue;
                auto ab = a[i] * b[j];
                const Scalar* row = mult_.data() + (i * n + j) * n;
                for (std::size_t k = 0; k < n; ++k)
                    if (!row[k].is_zero()) out[k] += ab * row[k];
            }
        }
        return out;
    }

    Scalar apply_counit(std::span<const Scalar> a) const {
        auto s = field_.zero();
        for (std::size_t i = 0; i < dim(); ++i) s += a[i] * counit_[i];
        return s;
    }

    /// Matrix of h -> e_i h on H.
    Matrix<F> left_multiplication(std::size_t i) const {
        const auto n = dim();
        Matrix<F> m(field_, n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(k, j) = mult(i, j, k);
        return m;
    }

    /// Matrix of h -> h e_i on H.
    Matrix<F> right_multiplication(std::size_t i) const {
        const auto n = dim();
        Matrix<F> m(field_, n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(k, j) = mult(j, i, k);
        return m;
    }

    /// Delta^2(e_i) = (Delta (x) id) Delta(e_i), as sparse triples e_a (x) e_b (x) e_c.
    std::vector<TripleTerm<F>> double_coproduct(std::size_t i) const {
        std::vector<TripleTerm<F>> out;
        for (const auto& t : comult_[i])
            for (const auto& u : comult_[t.left]) out.push_back({u.left, u.right, t.right, t.coeff * u.coeff});
        return out;
    }

    /// Dense n^2 coordinate vector of Delta(e_i); index j * n + k.
    Vector<F> comult_dense(std::size_t i) const {
        const auto n = dim();
        auto v = zero_vector(field_, n * n);
        for (const auto& t : comult_[i]) v[t.left * n + t.right] += t.coeff;
        return v;
    }

    bool is_commutative() const {
        const auto n = dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (product(i, j) != product(j, i)) return false;
        return true;
    }

    bool is_cocommutative() const {
        const auto n = dim();
        for (std::size_t i = 0; i < n; ++i) {
            auto d = comult_dense(i);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!(d[j * n + k] == d[k * n + j])) return false;
        }
        return true;
    }

    /// Index of the basis element equal to 1, if the unit is a basis vector.
    std::optional<std::size_t> unit_index() const {
        std::optional<std::size_t> idx;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (unit_[i].is_zero()) continue;
            if (idx || !(unit_[i] == field_.one())) return std::nullopt;
            idx = i;
        }
        return idx;
    }

private:
    /// Merges repeated (left, right) pairs and drops zero coefficients so that
    /// comultiplications compare canonically.
    void compact(Coproduct& terms) const {
        Coproduct merged;
        for (const auto& t : terms) {
            auto it = std::find_if(merged.begin(), merged.end(),
                                   [&](const auto& m) { return m.left == t.left && m.right == t.right; });
            if (it == merged.end())
                merged.push_back(t);
            else
                it->coeff += t.coeff;
        }
        std::erase_if(merged, [](const auto& t) { return t.coeff.is_zero(); });
        std::sort(merged.begin(), merged.end(),
                  [](const auto& a, const auto& b) { return std::pair(a.left, a.right) < std::pair(b.left, b.right); });
        terms = std::move(merged);
    }

    F field_;
    std::vector<std::string> names_;
    Vector<F> unit_;
    std::vector<Scalar> mult_;
    std::vector<Coproduct> comult_;
    Vector<F> counit_;
    Matrix<F> antipode_;
    std::optional<Matrix<F>> antipode_inverse_;
};

template <ExactField F>
using HopfPtr = std::shared_ptr<const HopfAlgebra<F>>;

template <ExactField F>
HopfPtr<F> share(HopfAlgebra<F> h) {
    return std::make_shared<const HopfAlgebra<F>>(std::move(h));
}

/// Structure constants equal, entry by entry.
template <ExactField F>
bool same_structure(const HopfAlgebra<F>& a, const HopfAlgebra<F>& b) {
    if (a.dim() != b.dim()) return false;
    if (a.unit() != b.unit() || a.counit() != b.counit() || a.mult_table() != b.mult_table()) return false;
    if (!(a.antipode() == b.antipode())) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.comult_dense(i) != b.comult_dense(i)) return false;
    return true;
}

template <ExactField F>
Matrix<F> antipode_inverse(const HopfAlgebra<F>& h) {
    return h.antipode_inverse();
}

}  // namespace ydlab
