#include "doctest.h"

#include "oracles.hpp"
#include "ufspec/errors.hpp"
#include "ufspec/func_ring.hpp"
#include "ufspec/rng.hpp"

using namespace ufspec;

namespace {

FnValue fn_over(const BaseRingPtr& base, const std::vector<Int>& values) {
    std::vector<RingElem> elems;
    elems.reserve(values.size());
    for (const auto& v : values) elems.push_back(base->from_int(v));
    return FnValue(base, std::move(elems));
}

FuncRing ring_with_x(const BaseRingPtr& base, const std::vector<Int>& E_values) {
    std::vector<RingElem> E;
    for (const auto& v : E_values) E.push_back(base->from_int(v));
    FnValue x(base, E);
    return FuncRing(base, E, {{"x", x}});
}

}  // namespace

TEST_CASE("eval_expr examples") {
    auto Z = BaseRing::integers();
    FuncRing R = ring_with_x(Z, {0, 1, 2});

    // the spec names the identity generator g1 here
    FuncRing R1(Z, R.E(), {{"g1", R.identity()}});
    CHECK(eval_expr(R1, "g1^2 + 1") == fn_over(Z, {1, 2, 5}));
    CHECK(eval_expr(R1, "3") == fn_over(Z, {3, 3, 3}));
    CHECK_THROWS_AS(eval_expr(R1, "g7"), UnknownGenerator);
}

TEST_CASE("func ring construction validates inputs") {
    auto Z = BaseRing::integers();
    std::vector<RingElem> dup = {Z->from_int(1), Z->from_int(1)};
    CHECK_THROWS_AS(FuncRing(Z, dup, {}), InputError);

    auto F5 = BaseRing::prime_field(5);
    std::vector<RingElem> E = {Z->from_int(0), Z->from_int(1)};
    CHECK_THROWS_AS(FuncRing(Z, E, {{"g", FnValue(F5, {F5->one(), F5->one()})}}),
                    ParentMismatch);
    CHECK_THROWS_AS(FuncRing(Z, E, {{"g", fn_over(Z, {1, 2, 3})}}), GroundSetMismatch);
}

TEST_CASE("preimage examples") {
    auto Z = BaseRing::integers();
    auto M2 = MDescriptor::principal(2);
    CHECK(preimage(fn_over(Z, {1, 2, 0, 4}), M2) == 0b1110);
    CHECK(preimage(fn_over(Z, {1, 1, 1}), M2) == 0);
    CHECK(preimage(fn_over(Z, {0, 0, 0}), M2) == 0b111);
    CHECK(preimage(fn_over(Z, {0, 0, 0}), MDescriptor::principal(97)) == 0b111);
}

TEST_CASE("is_M_unit_valued examples") {
    auto Z = BaseRing::integers();
    auto M2 = MDescriptor::principal(2);
    CHECK(is_M_unit_valued(fn_over(Z, {1, 3, 5}), M2));
    CHECK(!is_M_unit_valued(fn_over(Z, {1, 2, 3}), M2));

    // over F_p with M = (0): unit-valued iff no entry is 0
    auto F7 = BaseRing::prime_field(7);
    CHECK(is_M_unit_valued(fn_over(F7, {1, 2, 6}), MDescriptor::zero_ideal()));
    CHECK(!is_M_unit_valued(fn_over(F7, {1, 0, 6}), MDescriptor::zero_ideal()));

    // D/M must be a field
    CHECK_THROWS_AS(is_M_unit_valued(fn_over(Z, {1}), MDescriptor::principal(6)), NotMaximal);
}

TEST_CASE("image_ring examples, frozen against the naive closure oracle") {
    auto Z = BaseRing::integers();

    SUBCASE("generator x on E={0,1,2} mod 2") {
        FuncRing R = ring_with_x(Z, {0, 1, 2});
        ImageRing img = image_ring(R, MDescriptor::principal(2));
        CHECK(img.ring->size() == 4);
        // frozen from the closure oracle: {(0,0,0),(1,1,1),(0,1,0),(1,0,1)}
        auto oracle_elems =
            oracle::naive_closure(img.residue.quotient, 3, {{0, 1, 0}});
        CHECK(oracle_elems.size() == 4);
        for (std::uint32_t i = 0; i < img.ring->size(); ++i) {
            std::vector<std::uint64_t> t(img.ring->tuple(i).begin(), img.ring->tuple(i).end());
            CHECK(oracle_elems.count(t) == 1);
        }
        CHECK(img.ring->index_of(FiniteRing::Tuple{0, 1, 0}).has_value());
        CHECK(img.ring->index_of(FiniteRing::Tuple{1, 0, 1}).has_value());
        CHECK(!img.ring->index_of(FiniteRing::Tuple{1, 1, 0}).has_value());
    }

    SUBCASE("constants only mod 3") {
        auto Z3 = MDescriptor::principal(3);
        std::vector<RingElem> E = {Z->from_int(0), Z->from_int(1), Z->from_int(2)};
        FuncRing R(Z, E, {});
        ImageRing img = image_ring(R, Z3);
        CHECK(img.ring->size() == 3);  // isomorphic to F_3
    }

    SUBCASE("separating generator on |E|=2 mod 2 gives all of F_2^2") {
        FuncRing R = ring_with_x(Z, {0, 1});
        ImageRing img = image_ring(R, MDescriptor::principal(2));
        CHECK(img.ring->size() == 4);
    }

    SUBCASE("reduction map sends R-elements into S") {
        FuncRing R = ring_with_x(Z, {0, 1, 2});
        ImageRing img = image_ring(R, MDescriptor::principal(2));
        FnValue f = eval_expr(R, "x^3 + 2*x + 5");
        std::uint32_t idx = img.reduce(f);
        CHECK(img.ring->tuple(idx) == img.reduce_tuple(f));
    }

    SUBCASE("cap is enforced") {
        FuncRing R = ring_with_x(Z, {0, 1, 2, 3, 4, 5, 6});
        CHECK_THROWS_AS(image_ring(R, MDescriptor::principal(5), 100), TooLarge);
    }
}

TEST_CASE("image ring is closed (one more closure pass) and contains all constants") {
    auto Z = BaseRing::integers();
    for (Int p : {2, 3, 5}) {
        FuncRing R = ring_with_x(Z, {0, 1, 2, 3});
        ImageRing img = image_ring(R, MDescriptor::principal(p));
        const auto& S = *img.ring;
        const std::uint64_t q = img.residue.quotient->size();
        for (std::uint64_t c = 0; c < q; ++c) CHECK(S.constant(c).has_value());
        bool closed = true;
        for (std::uint32_t a = 0; a < S.size(); ++a)
            for (std::uint32_t b = 0; b < S.size(); ++b) {
                // add/mul throw if the result were missing; recompute tuples
                if (S.tuple(S.add(a, b)).size() != S.coord_count()) closed = false;
                if (S.tuple(S.mul(a, b)).size() != S.coord_count()) closed = false;
            }
        CHECK(closed);
    }
}

TEST_CASE("preimage of a product is the union of preimages when D/M is a domain") {
    auto Z = BaseRing::integers();
    Rng rng(4242);
    for (Int p : {2, 3, 5}) {
        auto M = MDescriptor::principal(p);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t n = 1 + rng.below(6);
            std::vector<Int> fv, gv;
            for (std::size_t i = 0; i < n; ++i) {
                fv.push_back(Int(rng.range(-20, 20)));
                gv.push_back(Int(rng.range(-20, 20)));
            }
            FnValue f = fn_over(Z, fv), g = fn_over(Z, gv);
            CHECK(preimage(f * g, M) == (preimage(f, M) | preimage(g, M)));
        }
    }
}

TEST_CASE("polynomials with zero constant term map ideal elements into the ideal") {
    // for every ideal I of a small image ring and g in D[x] with g(0)=0,
    // applying g elementwise to members of I stays inside I
    auto Z = BaseRing::integers();
    FuncRing R = ring_with_x(Z, {0, 1, 2, 3});
    ImageRing img = image_ring(R, MDescriptor::principal(2));
    const auto& S = img.ring;
    REQUIRE(S->size() <= 256);

    std::vector<std::vector<Int>> polys = {{0, 1}, {0, 2}, {0, 1, 1}, {0, 0, 3}, {0, 5, 0, 1}};
    // a few ideals: principal ideals of every element
    for (std::uint32_t gen = 0; gen < S->size(); ++gen) {
        FiniteIdeal I = FiniteIdeal::generated_by(S, {gen});
        for (auto member : I.members()) {
            for (const auto& gcoeffs : polys) {
                // evaluate g(member) inside S via constants
                std::uint32_t acc = S->zero();
                std::uint32_t power = S->one();
                for (std::size_t d = 0; d < gcoeffs.size(); ++d) {
                    if (d > 0) power = S->mul(power, member);
                    auto c = S->constant(
                        img.residue.quotient->index_of(img.residue.quotient->from_int(gcoeffs[d])));
                    REQUIRE(c.has_value());
                    acc = S->add(acc, S->mul(*c, power));
                }
                CHECK(I.contains(acc));
            }
        }
    }
}
