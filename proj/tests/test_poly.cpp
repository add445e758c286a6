#include "doctest.h"

#include "oracles.hpp"
#include "ufspec/base_ring.hpp"
#include "ufspec/errors.hpp"
#include "ufspec/matrix.hpp"
#include "ufspec/poly.hpp"
#include "ufspec/rng.hpp"

using namespace ufspec;

TEST_CASE("irreducible_poly examples") {
    auto F3 = BaseRing::prime_field(3);
    CHECK(irreducible_poly(3, 1) == Poly::variable(F3));

    auto F2 = BaseRing::prime_field(2);
    // exhaustive oracle over the 4 monic quadratics over F_2: the only
    // one that is not a product of two monic linear factors
    std::vector<Poly> products;
    for (const auto& g : oracle::all_monic(F2, 1))
        for (const auto& h : oracle::all_monic(F2, 1)) products.push_back(g * h);
    Poly expected2 = Poly::from_ints(F2, {1, 1, 1});
    for (const auto& q : oracle::all_monic(F2, 2)) {
        bool reducible = std::find(products.begin(), products.end(), q) != products.end();
        CHECK(reducible == !(q == expected2));
    }
    CHECK(irreducible_poly(2, 2) == expected2);

    // degree 3 over F_2: first candidate with no root (no monic linear factor)
    CHECK(irreducible_poly(2, 3) == Poly::from_ints(F2, {1, 1, 0, 1}));
}

TEST_CASE("irreducible_poly output has no small factors (product oracle)") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{
             {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8},
             {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}, {13, 2}}) {
        Poly f = irreducible_poly(p, k);
        CHECK(f.degree() == k);
        CHECK(f.is_monic());
        CHECK(oracle::irreducible_by_products(f));
        // no root in F_p
        for (std::uint64_t v = 0; v < f.parent()->size(); ++v)
            CHECK(!f.eval(f.parent()->element(v)).is_zero());
    }
}

TEST_CASE("matrix_det examples") {
    auto F2 = BaseRing::prime_field(2);
    auto one = F2->one();
    auto zero = F2->zero();
    CHECK(matrix_det(Matrix::from_rows(F2, {{one, zero}, {zero, one}})).is_one());
    CHECK(matrix_det(Matrix::from_rows(F2, {{one, one}, {one, zero}})).is_one());
    CHECK(matrix_det(Matrix::from_rows(F2, {{zero, zero}, {zero, zero}})).is_zero());

    Matrix rect(F2, 2, 3);
    CHECK_THROWS_AS(matrix_det(rect), ShapeMismatch);
}

TEST_CASE("matrix_det agrees with cofactor expansion and is multiplicative") {
    Rng rng(271828);
    for (std::int64_t p : {2, 3, 5, 7}) {
        auto F = BaseRing::prime_field(p);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 1 + rng.below(4);
            Matrix a(F, n, n), b(F, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    a.at(i, j) = F->from_int(Int(rng.below(static_cast<std::uint64_t>(p))));
                    b.at(i, j) = F->from_int(Int(rng.below(static_cast<std::uint64_t>(p))));
                }
            RingElem da = matrix_det(a);
            RingElem db = matrix_det(b);
            CHECK(da == oracle::cofactor_det(a));
            Matrix ab(F, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    RingElem acc = F->zero();
                    for (std::size_t l = 0; l < n; ++l) acc = acc + a.at(i, l) * b.at(l, j);
                    ab.at(i, j) = acc;
                }
            CHECK(matrix_det(ab) == da * db);
        }
    }
}

TEST_CASE("poly2_eval examples") {
    auto F2 = BaseRing::prime_field(2);
    auto Z = BaseRing::integers();
    auto form = [](const BaseRingPtr& r) {
        return Poly2::from_terms(
            r, {{{2, 0}, r->one()}, {{1, 1}, r->one()}, {{0, 2}, r->one()}});
    };
    Poly2 s2 = form(F2);
    CHECK(poly2_eval(s2, F2->zero(), F2->zero()).is_zero());
    CHECK(poly2_eval(s2, F2->one(), F2->one()).is_one());
    Poly2 sz = form(Z);
    CHECK(poly2_eval(sz, Z->from_int(2), Z->from_int(3)).scalar() == 19);
    CHECK_THROWS_AS(poly2_eval(sz, F2->one(), F2->one()), ParentMismatch);
    CHECK(s2.has_zero_constant_term());
}

TEST_CASE("univariate lagrange interpolation reproduces values") {
    auto F7 = BaseRing::prime_field(7);
    std::vector<RingElem> nodes, values;
    for (int i = 0; i < 5; ++i) {
        nodes.push_back(F7->from_int(i));
        values.push_back(F7->from_int(3 * i * i + 1));
    }
    Poly f = lagrange_interpolate(F7, nodes, values);
    for (std::size_t i = 0; i < nodes.size(); ++i) CHECK(f.eval(nodes[i]) == values[i]);
}

TEST_CASE("bivariate interpolation hits prescribed grid values") {
    auto F5 = BaseRing::prime_field(5);
    std::vector<RingElem> xs = {F5->from_int(0), F5->from_int(1), F5->from_int(3)};
    std::vector<RingElem> ys = {F5->from_int(0), F5->from_int(2)};
    auto value = [&](std::size_t i, std::size_t j) {
        return F5->from_int(Int(2 * i + 3 * j + 1));
    };
    Poly2 s = bivariate_interpolate(F5, xs, ys, value);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j)
            CHECK(s.eval(xs[i], ys[j]) == value(i, j));
}
