#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ydlab/hopf/hopf_algebra.hpp"

namespace ydlab {

/// Group table: `table[a][b]` is the index of the product of elements a and b.
using CayleyTable = std::vector<std::vector<std::size_t>>;

/// The group algebra kG with Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1.
/// Element names default to "g0", "g1", ...
template <ExactField F>
HopfAlgebra<F> group_algebra(const F& field, const CayleyTable& table, std::vector<std::string> names = {}) {
    const auto n = table.size();
    require(n > 0, Errc::NotAGroup, "empty group table");
    for (const auto& row : table) {
        require(row.size() == n, Errc::NotAGroup, "group table is not square");
        for (auto x : row) require(x < n, Errc::NotAGroup, "group table entry out of range");
    }
    std::optional<std::size_t> identity;
    for (std::size_t e = 0; e < n && !identity; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
        if (ok) identity = e;
    }
    require(identity.has_value(), Errc::NotAGroup, "no identity element");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                require(table[table[a][b]][c] == table[a][table[b][c]], Errc::NotAGroup, "table is not associative");
    std::vector<std::size_t> inv(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] == *identity && table[b][a] == *identity) inv[a] = b;
        require(inv[a] < n, Errc::NotAGroup, "element without inverse");
    }

    if (names.empty())
        for (std::size_t a = 0; a < n; ++a) names.push_back("g" + std::to_string(a));
    require(names.size() == n, Errc::DimensionMismatch, "name count != group order");

    std::vector<scalar_t<F>> mult(n * n * n, field.zero());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mult[(a * n + b) * n + table[a][b]] = field.one();
    std::vector<typename HopfAlgebra<F>::Coproduct> comult(n);
    Matrix<F> s(field, n, n);
    for (std::size_t a = 0; a < n; ++a) {
        comult[a].push_back({a, a, field.one()});
        s(inv[a], a) = field.one();
    }
    return HopfAlgebra<F>(field, std::move(names), unit_vector(field, n, *identity), std::move(mult),
                          std::move(comult), Vector<F>(n, field.one()), std::move(s));
}

inline CayleyTable cyclic_table(std::size_t n) {
    CayleyTable t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

/// k[C_n] on 1, g, g^2, ...
template <ExactField F>
HopfAlgebra<F> cyclic_group_algebra(const F& field, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) names.push_back(a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a));
    return group_algebra(field, cyclic_table(n), std::move(names));
}

/// S_3 as permutations of {0,1,2}, listed as e, (12), (23), (13), (123), (132).
inline CayleyTable s3_table() {
    using Perm = std::array<int, 3>;
    const std::vector<Perm> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    CayleyTable t(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            Perm c{};
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return t;
}

template <ExactField F>
HopfAlgebra<F> s3_group_algebra(const F& field) {
    return group_algebra(field, s3_table(), {"e", "(12)", "(23)", "(13)", "(123)", "(132)"});
}

/// Sweedler's four-dimensional Hopf algebra on 1, g, x, gx with g^2 = 1,
/// x^2 = 0, xg = -gx, Delta(x) = x (x) 1 + g (x) x and S(x) = -gx.
template <ExactField F>
HopfAlgebra<F> sweedler_h4(const F& field) {
    require(field.characteristic() != 2, Errc::BadCharacteristic, "Sweedler algebra needs characteristic != 2");
    constexpr std::size_t n = 4;
    enum : std::size_t { One = 0, G = 1, X = 2, GX = 3 };
    const auto one = field.one();
    const auto neg = -field.one();
    std::vector<scalar_t<F>> mult(n * n * n, field.zero());
    auto set = [&](std::size_t a, std::size_t b, std::size_t c, const scalar_t<F>& v) { mult[(a * n + b) * n + c] = v; };
    for (std::size_t a = 0; a < n; ++a) {
        set(One, a, a, one);
        set(a, One, a, one);
    }
    set(G, G, One, one);
    set(G, X, GX, one);
    set(G, GX, X, one);
    set(X, G, GX, neg);
    set(GX, G, X, neg);

    std::vector<typename HopfAlgebra<F>::Coproduct> comult(n);
    comult[One] = {{One, One, one}};
    comult[G] = {{G, G, one}};
    comult[X] = {{X, One, one}, {G, X, one}};
    comult[GX] = {{GX, G, one}, {One, GX, one}};

    Matrix<F> s(field, n, n);
    s(One, One) = one;
    s(G, G) = one;
    s(GX, X) = neg;
    s(X, GX) = one;

    Vector<F> counit{one, one, field.zero(), field.zero()};
    return HopfAlgebra<F>(field, {"1", "g", "x", "gx"}, unit_vector(field, n, One), std::move(mult), std::move(comult),
                          std::move(counit), std::move(s));
}

}  // namespace ydlab
