#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <variant>
#include <vector>

#include "ydlab/linalg/matrix.hpp"

namespace ydlab {

template <ExactField F>
struct Echelon {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row, increasing

    std::size_t rank() const noexcept { return pivots.size(); }
};

namespace detail {

/// Gauss-Jordan on `a` in place; the leftmost column with a nonzero entry at or
/// below the current row supplies the pivot, taken from the first such row.
/// When `transform` is given, the same row operations are applied to it.
template <ExactField F>
std::vector<std::size_t> gauss_jordan(Matrix<F>& a, Matrix<F>* transform, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const auto& field = a.field();
    for (std::size_t c = 0; c < pivot_cols && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
            if (transform)
                for (std::size_t j = 0; j < transform->cols(); ++j) std::swap((*transform)(p, j), (*transform)(r, j));
        }
        auto inv = field.one() / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        if (transform)
            for (std::size_t j = 0; j < transform->cols(); ++j) (*transform)(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            auto factor = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
            if (transform)
                for (std::size_t j = 0; j < transform->cols(); ++j)
                    if (!(*transform)(r, j).is_zero()) (*transform)(i, j) -= factor * (*transform)(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

template <ExactField F>
Echelon<F> rref(Matrix<F> a) {
    auto pivots = detail::gauss_jordan<F>(a, nullptr, a.cols());
    return {std::move(a), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& a) {
    return rref(a).rank();
}

/// Incremental reduced-echelon basis. Rows stay fully reduced against each
/// other's pivots, so `finish()` only has to sort.
template <ExactField F>
class EchelonBuilder {
public:
    using Scalar = scalar_t<F>;

    EchelonBuilder(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

    const F& field() const noexcept { return field_; }
    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return rows_.size(); }

    /// Returns v reduced against the current rows (zero iff v is in the span).
    Vector<F> reduce(Vector<F> v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const auto& coeff = v[pivots_[k]];
            if (coeff.is_zero()) continue;
            auto c = coeff;
            const auto& row = rows_[k];
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!row[j].is_zero()) v[j] -= c * row[j];
        }
        return v;
    }

    bool contains(const Vector<F>& v) const { return is_zero_vector<F>(reduce(v)); }

    /// Adds v to the span; returns true when the dimension grew.
    bool insert(Vector<F> v) {
        require(v.size() == ambient_, Errc::DimensionMismatch, "echelon insert length mismatch");
        v = reduce(std::move(v));
        std::size_t c = 0;
        while (c < ambient_ && v[c].is_zero()) ++c;
        if (c == ambient_) return false;
        auto inv = field_.one() / v[c];
        for (auto& x : v) x *= inv;
        for (auto& row : rows_) {
            if (row[c].is_zero()) continue;
            auto factor = row[c];
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!v[j].is_zero()) row[j] -= factor * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(c);
        return true;
    }

    const std::vector<Vector<F>>& rows() const noexcept { return rows_; }

    /// Rows sorted by pivot column: the reduced row echelon basis.
    std::pair<std::vector<Vector<F>>, std::vector<std::size_t>> finish() const {
        std::vector<std::size_t> order(rows_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
        std::vector<Vector<F>> rows;
        std::vector<std::size_t> pivots;
        for (auto k : order) {
            rows.push_back(rows_[k]);
            pivots.push_back(pivots_[k]);
        }
        return {std::move(rows), std::move(pivots)};
    }

private:
    F field_;
    std::size_t ambient_;
    std::vector<Vector<F>> rows_;
    std::vector<std::size_t> pivots_;
};

/// A subspace of F^n held by its reduced row echelon basis. The basis is the
/// canonical representative, so equality is plain comparison.
template <ExactField F>
class Subspace {
public:
    using Scalar = scalar_t<F>;

    static Subspace zero(const F& field, std::size_t ambient) { return Subspace(field, ambient, {}, {}); }

    static Subspace full(const F& field, std::size_t ambient) {
        std::vector<Vector<F>> rows;
        std::vector<std::size_t> pivots;
        for (std::size_t i = 0; i < ambient; ++i) {
            rows.push_back(unit_vector(field, ambient, i));
            pivots.push_back(i);
        }
        return Subspace(field, ambient, std::move(rows), std::move(pivots));
    }

    static Subspace span(const F& field, std::size_t ambient, const std::vector<Vector<F>>& vectors) {
        EchelonBuilder<F> b(field, ambient);
        for (const auto& v : vectors) b.insert(v);
        return from_builder(b);
    }

    static Subspace from_builder(const EchelonBuilder<F>& b) {
        auto [rows, pivots] = b.finish();
        return Subspace(b.field(), b.ambient(), std::move(rows), std::move(pivots));
    }

    /// Span of the rows of `m`.
    static Subspace row_span(const Matrix<F>& m) {
        auto e = rref(m);
        std::vector<Vector<F>> rows;
        for (std::size_t i = 0; i < e.rank(); ++i) {
            auto r = e.reduced.row(i);
            rows.emplace_back(r.begin(), r.end());
        }
        return Subspace(m.field(), m.cols(), std::move(rows), std::move(e.pivots));
    }

    /// Span of the columns of `m` (the image of the map m).
    static Subspace column_span(const Matrix<F>& m) { return row_span(m.transpose()); }

    const F& field() const noexcept { return field_; }
    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    const std::vector<Vector<F>>& basis() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// v minus its projection along the pivot coordinates; zero iff v lies in the subspace.
    Vector<F> reduce(Vector<F> v) const {
        require(v.size() == ambient_, Errc::DimensionMismatch, "subspace vector length mismatch");
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            auto c = v[pivots_[k]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!rows_[k][j].is_zero()) v[j] -= c * rows_[k][j];
        }
        return v;
    }

    bool contains(const Vector<F>& v) const { return is_zero_vector<F>(reduce(v)); }

    /// Coordinates in the echelon basis; nullopt when v is outside.
    std::optional<Vector<F>> coordinates(const Vector<F>& v) const {
        if (!contains(v)) return std::nullopt;
        Vector<F> c;
        c.reserve(rows_.size());
        for (auto p : pivots_) c.push_back(v[p]);
        return c;
    }

    Vector<F> combine(std::span<const Scalar> coords) const {
        require(coords.size() == rows_.size(), Errc::DimensionMismatch, "coordinate length mismatch");
        auto v = zero_vector(field_, ambient_);
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (coords[k].is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!rows_[k][j].is_zero()) v[j] += coords[k] * rows_[k][j];
        }
        return v;
    }

    /// ambient x dim matrix whose columns are the basis vectors.
    Matrix<F> column_basis() const {
        Matrix<F> m(field_, ambient_, rows_.size());
        for (std::size_t k = 0; k < rows_.size(); ++k)
            for (std::size_t i = 0; i < ambient_; ++i) m(i, k) = rows_[k][i];
        return m;
    }

    /// dim x ambient selection of the pivot coordinates; a left inverse of
    /// column_basis() on the subspace.
    Matrix<F> coordinate_map() const {
        Matrix<F> m(field_, rows_.size(), ambient_);
        for (std::size_t k = 0; k < rows_.size(); ++k) m(k, pivots_[k]) = field_.one();
        return m;
    }

    bool is_subspace_of(const Subspace& other) const {
        for (const auto& r : rows_)
            if (!other.contains(r)) return false;
        return true;
    }

    bool is_invariant_under(const Matrix<F>& op) const {
        for (const auto& r : rows_)
            if (!contains(op.apply(r))) return false;
        return true;
    }

    Subspace image_under(const Matrix<F>& op) const {
        std::vector<Vector<F>> images;
        for (const auto& r : rows_) images.push_back(op.apply(r));
        return span(field_, op.rows(), images);
    }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        require(a.ambient_ == b.ambient_, Errc::DimensionMismatch, "subspace sum ambient mismatch");
        EchelonBuilder<F> builder(a.field_, a.ambient_);
        for (const auto& r : a.rows_) builder.insert(r);
        for (const auto& r : b.rows_) builder.insert(r);
        return from_builder(builder);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
    }

    /// Lexicographic comparison of (dim, echelon entries) for deterministic tie-breaking.
    bool echelon_less(const Subspace& o, const F& field) const {
        if (dim() != o.dim()) return dim() < o.dim();
        if (pivots_ != o.pivots_) return pivots_ > o.pivots_;  // earlier pivots first
        for (std::size_t k = 0; k < rows_.size(); ++k)
            for (std::size_t j = 0; j < ambient_; ++j) {
                auto x = field.format(rows_[k][j]), y = field.format(o.rows_[k][j]);
                if (x != y) return x < y;
            }
        return false;
    }

private:
    Subspace(F field, std::size_t ambient, std::vector<Vector<F>> rows, std::vector<std::size_t> pivots)
        : field_(std::move(field)), ambient_(ambient), rows_(std::move(rows)), pivots_(std::move(pivots)) {}

    F field_;
    std::size_t ambient_;
    std::vector<Vector<F>> rows_;
    std::vector<std::size_t> pivots_;

};

/// Null space of `a` in canonical form. A matrix with zero rows has the full
/// space as kernel.
template <ExactField F>
Subspace<F> kernel(const Matrix<F>& a) {
    const auto& field = a.field();
    if (a.rows() == 0) return Subspace<F>::full(field, a.cols());
    auto e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector<F>> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        auto v = zero_vector(field, a.cols());
        v[f] = field.one();
        for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return Subspace<F>::span(field, a.cols(), basis);
}

template <ExactField F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
    require(a.ambient() == b.ambient(), Errc::DimensionMismatch, "intersection ambient mismatch");
    const auto& field = a.field();
    auto qa = kernel(Matrix<F>::from_rows(field, a.ambient(), a.basis()));
    auto qb = kernel(Matrix<F>::from_rows(field, b.ambient(), b.basis()));
    std::vector<Vector<F>> rows = qa.basis();
    rows.insert(rows.end(), qb.basis().begin(), qb.basis().end());
    return kernel(Matrix<F>::from_rows(field, a.ambient(), rows));
}

/// Rows q with q . w = 0 for every w in the subspace.
template <ExactField F>
Matrix<F> annihilator(const Subspace<F>& w) {
    const auto& field = w.field();
    auto k = kernel(Matrix<F>::from_rows(field, w.ambient(), w.basis()));
    return Matrix<F>::from_rows(field, w.ambient(), k.basis());
}

template <ExactField F>
struct AffineSolution {
    Vector<F> particular;
    Subspace<F> homogeneous;
};

/// Certificate that A x = b has no solution: y A = 0 while y . b != 0.
template <ExactField F>
struct Inconsistent {
    Vector<F> witness;
};

template <ExactField F>
using AffineResult = std::variant<AffineSolution<F>, Inconsistent<F>>;

template <ExactField F>
AffineResult<F> solve_affine(const Matrix<F>& a, std::span<const scalar_t<F>> b) {
    require(a.rows() == b.size(), Errc::DimensionMismatch, "solve_affine: rows != len(b)");
    const auto& field = a.field();
    Matrix<F> aug(field, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto transform = Matrix<F>::identity(field, a.rows());
    auto pivots = detail::gauss_jordan<F>(aug, &transform, a.cols());
    for (std::size_t r = pivots.size(); r < a.rows(); ++r) {
        if (!aug(r, a.cols()).is_zero()) {
            auto y = transform.row(r);
            return Inconsistent<F>{Vector<F>(y.begin(), y.end())};
        }
    }
    auto x = zero_vector(field, a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
    return AffineSolution<F>{std::move(x), kernel(a)};
}

/// Coordinates on k^n / W: the quotient basis is the images of the unit
/// vectors at the non-pivot positions of W's echelon basis.
template <ExactField F>
struct Quotient {
    Subspace<F> relations;
    std::vector<std::size_t> free_columns;
    Matrix<F> projection;  // q x n
    Matrix<F> section;     // n x q, projection * section = I

    std::size_t dim() const noexcept { return free_columns.size(); }

    /// Induced operator on the quotient; nullopt unless `op` preserves W.
    std::optional<Matrix<F>> descend(const Matrix<F>& op) const {
        if (!relations.is_invariant_under(op)) return std::nullopt;
        return projection * op * section;
    }
};

template <ExactField F>
Quotient<F> quotient(const Subspace<F>& w) {
    const auto& field = w.field();
    const auto n = w.ambient();
    std::vector<std::size_t> free;
    const auto& piv = w.pivots();
    for (std::size_t j = 0; j < n; ++j)
        if (!std::binary_search(piv.begin(), piv.end(), j)) free.push_back(j);
    Matrix<F> proj(field, free.size(), n), sec(field, n, free.size());
    for (std::size_t j = 0; j < n; ++j) {
        auto r = w.reduce(unit_vector(field, n, j));
        for (std::size_t k = 0; k < free.size(); ++k) proj(k, j) = r[free[k]];
    }
    for (std::size_t k = 0; k < free.size(); ++k) sec(free[k], k) = field.one();
    return {w, std::move(free), std::move(proj), std::move(sec)};
}

template <ExactField F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
    require(a.is_square(), Errc::DimensionMismatch, "inverse of non-square matrix");
    auto work = a;
    auto inv = Matrix<F>::identity(a.field(), a.rows());
    auto pivots = detail::gauss_jordan<F>(work, &inv, a.cols());
    if (pivots.size() != a.rows()) return std::nullopt;
    return inv;
}

}  // namespace ydlab
