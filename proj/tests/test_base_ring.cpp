#include "doctest.h"

#include "ufspec/base_ring.hpp"
#include "ufspec/errors.hpp"
#include "ufspec/integer.hpp"

using namespace ufspec;

TEST_CASE("integers are an infinite domain") {
    auto Z = BaseRing::integers();
    CHECK(Z->is_domain());
    CHECK(!Z->is_field());
    CHECK(!Z->is_finite());
    CHECK(Z->characteristic() == 0);
    auto a = Z->from_int(-7);
    auto b = Z->from_int(5);
    CHECK((a * b).scalar() == -35);
    CHECK((a + b).scalar() == -2);
}

TEST_CASE("integers mod m normalize to [0, m)") {
    auto R = BaseRing::integers_mod(6);
    CHECK(!R->is_domain());  // 6 is composite
    CHECK(R->from_int(-1).scalar() == 5);
    CHECK((R->from_int(4) + R->from_int(5)).scalar() == 3);
    CHECK((R->from_int(2) * R->from_int(3)).is_zero());
    CHECK(BaseRing::integers_mod(7)->is_domain());
    CHECK_THROWS_AS(BaseRing::integers_mod(1), InputError);
}

TEST_CASE("elem_inverse examples") {
    auto F5 = BaseRing::prime_field(5);
    CHECK(elem_inverse(F5->from_int(2)).scalar() == 3);

    // t in F_4 = F_2[t]/(t^2+t+1) has inverse t+1.
    auto F4 = BaseRing::ext_field(2, 2);
    auto t = F4->from_coeffs({0, 1});
    auto inv = elem_inverse(t);
    CHECK(inv == F4->from_coeffs({1, 1}));
    CHECK((t * inv).is_one());

    CHECK_THROWS_AS(elem_inverse(F5->zero()), NotAUnit);
    CHECK_THROWS_AS(elem_inverse(F4->zero()), NotAUnit);
    CHECK_THROWS_AS(elem_inverse(BaseRing::integers()->from_int(0)), NotAUnit);
    // zero divisors in Z/6 are not units either
    CHECK_THROWS_AS(elem_inverse(BaseRing::integers_mod(6)->from_int(2)), NotAUnit);
    CHECK(elem_inverse(BaseRing::integers_mod(6)->from_int(5)).scalar() == 5);
}

TEST_CASE("parent mismatch is rejected") {
    auto F5 = BaseRing::prime_field(5);
    auto F7 = BaseRing::prime_field(7);
    CHECK_THROWS_AS(F5->from_int(1) + F7->from_int(1), ParentMismatch);
}

TEST_CASE("element indexing round trips") {
    for (auto ring : {BaseRing::integers_mod(9), BaseRing::prime_field(13),
                      BaseRing::ext_field(3, 2)}) {
        for (std::uint64_t i = 0; i < ring->size(); ++i)
            CHECK(ring->index_of(ring->element(i)) == i);
    }
}

TEST_CASE("field axioms hold exhaustively on all fields of size <= 64") {
    std::vector<BaseRingPtr> fields;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61})
        fields.push_back(BaseRing::prime_field(p));
    for (auto [p, k] : std::vector<std::pair<int, int>>{
             {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {7, 2}})
        fields.push_back(BaseRing::ext_field(p, k));

    for (const auto& F : fields) {
        const std::uint64_t q = F->size();
        std::vector<RingElem> elems;
        elems.reserve(q);
        for (std::uint64_t i = 0; i < q; ++i) elems.push_back(F->element(i));

        // inverses: every nonzero element has one
        for (const auto& a : elems) {
            if (a.is_zero()) {
                CHECK_THROWS_AS(F->inverse(a), NotAUnit);
            } else {
                CHECK((a * F->inverse(a)).is_one());
            }
        }
        // associativity and distributivity on all triples
        bool ok = true;
        for (const auto& a : elems)
            for (const auto& b : elems)
                for (const auto& c : elems) {
                    if (!(((a * b) * c) == (a * (b * c)))) ok = false;
                    if (!(((a + b) + c) == (a + (b + c)))) ok = false;
                    if (!((a * (b + c)) == (a * b + a * c))) ok = false;
                }
        CHECK(ok);
    }
}
