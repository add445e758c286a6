#include "doctest.h"

#include "ufspec/errors.hpp"
#include "ufspec/filters.hpp"

using namespace ufspec;

namespace {

FnValue fn_over(const BaseRingPtr& base, const std::vector<Int>& values) {
    std::vector<RingElem> elems;
    for (const auto& v : values) elems.push_back(base->from_int(v));
    return FnValue(base, std::move(elems));
}

}  // namespace

TEST_CASE("fip_filter examples") {
    // {{0,1},{1,2}} on n=3 -> minimal member {1}
    auto F = fip_filter(SetFamily::from_index_lists(3, {{0, 1}, {1, 2}}));
    CHECK(F.minimal_member() == 0b010);

    // disjoint members violate FIP
    CHECK_THROWS_AS(fip_filter(SetFamily::from_index_lists(3, {{0}, {1}})), FIPViolated);
    try {
        fip_filter(SetFamily::from_index_lists(3, {{0}, {1}}));
    } catch (const FIPViolated& err) {
        CHECK(err.violating_members == std::vector<std::size_t>{0, 1});
    }

    // the empty family generates the trivial filter {E}
    auto T = fip_filter(SetFamily::from_masks(3, {}));
    CHECK(T.minimal_member() == 0b111);
}

TEST_CASE("refinements examples") {
    auto points = [](const FilterFin& f) {
        std::vector<unsigned> out;
        for (const auto& u : refinements(f)) out.push_back(u.point());
        return out;
    };
    CHECK(points(FilterFin(3, 0b010)) == std::vector<unsigned>{1});
    CHECK(points(FilterFin::trivial(3)) == std::vector<unsigned>{0, 1, 2});
    CHECK(points(FilterFin(3, 0b101)) == std::vector<unsigned>{0, 2});
    // canonical refinement = smallest point = first entry
    CHECK(refinements(FilterFin(3, 0b101)).front().point() == 0);
}

TEST_CASE("mf_contains examples") {
    auto Z = BaseRing::integers();
    auto M2 = MDescriptor::principal(2);
    FnValue f = fn_over(Z, {1, 2, 0});

    CHECK(!mf_contains(f, M2, UltrafilterFin(3, 0)));
    CHECK(mf_contains(f, M2, UltrafilterFin(3, 1)));
    CHECK(mf_contains(f, M2, UltrafilterFin(3, 2)));

    // filter with minimal member {1,2}: membership iff preimage contains {1,2}
    FilterFin F(3, 0b110);
    CHECK(mf_contains(f, M2, F));
    CHECK(!mf_contains(fn_over(Z, {1, 2, 1}), M2, F));

    // the zero function is in M_F for every filter
    FnValue zero = fn_over(Z, {0, 0, 0});
    for (std::uint64_t mask = 1; mask < 8; ++mask)
        CHECK(mf_contains(zero, M2, FilterFin(3, mask)));

    CHECK_THROWS_AS(mf_contains(fn_over(Z, {1, 2}), M2, F), GroundSetMismatch);
}

TEST_CASE("zero_locus_family examples") {
    auto Z = BaseRing::integers();
    auto M2 = MDescriptor::principal(2);
    std::vector<RingElem> E = {Z->from_int(0), Z->from_int(1), Z->from_int(2)};
    FnValue x(Z, E);
    FuncRing R(Z, E, {{"x", x}});

    SUBCASE("ideal generated by (0,1,0) in the 4-element image ring") {
        // the ideal is {(0,0,0),(0,1,0)}; zero sets E and {0,2}
        IdealDescriptor I{{x}};  // x reduces to (0,1,0) mod 2
        SetFamily fam = zero_locus_family(R, I, M2);
        CHECK(fam.members == std::vector<std::uint64_t>{0b101, 0b111});
    }

    SUBCASE("zero ideal gives {E}") {
        IdealDescriptor I{{R.constant_int(0)}};
        SetFamily fam = zero_locus_family(R, I, M2);
        CHECK(fam.members == std::vector<std::uint64_t>{0b111});
    }

    SUBCASE("unit ideal contains the empty zero set") {
        IdealDescriptor I{{R.constant_int(1)}};
        SetFamily fam = zero_locus_family(R, I, M2);
        CHECK(fam.contains(0));
    }
}

TEST_CASE("inclusion remarks, exhaustive on small instances") {
    auto Z = BaseRing::integers();

    // F subset G implies M_F subset M_G: over all filters on n <= 4,
    // checked on all functions with values in [0, 6) over E of size n
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<FilterFin> filters;
        for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) filters.emplace_back(n, mask);
        auto M = MDescriptor::principal(2);
        std::vector<FnValue> fns;
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 6;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<Int> vals;
            std::uint64_t rest = code;
            for (std::size_t i = 0; i < n; ++i) {
                vals.push_back(Int(rest % 6));
                rest /= 6;
            }
            fns.push_back(fn_over(Z, vals));
        }
        for (const auto& F : filters)
            for (const auto& G : filters) {
                if (!F.subset_of(G)) continue;
                for (const auto& f : fns)
                    if (mf_contains(f, M, F)) CHECK(mf_contains(f, M, G));
            }
    }

    // I subset J implies I_F subset J_F, for principal ideals (m) of Z:
    // (m) subset (d) iff d | m
    auto M6 = MDescriptor::principal(6);
    auto M3 = MDescriptor::principal(3);
    FilterFin F(3, 0b011);
    for (Int a = -10; a <= 10; ++a)
        for (Int b = -10; b <= 10; ++b) {
            FnValue f = fn_over(Z, {a, b, a + b});
            if (mf_contains(f, M6, F)) CHECK(mf_contains(f, M3, F));
        }
}

TEST_CASE("Z_M properties and the FIP lemma on image-ring ideals") {
    auto Z = BaseRing::integers();
    std::vector<RingElem> E;
    for (int v : {0, 1, 2, 3}) E.push_back(Z->from_int(v));
    FuncRing R(Z, E, {{"x", FnValue(Z, E)}});
    auto M = MDescriptor::principal(2);
    ImageRing img = image_ring(R, M);
    const auto& S = img.ring;

    for (std::uint32_t g1 = 0; g1 < S->size(); ++g1)
        for (std::uint32_t g2 = 0; g2 < S->size(); ++g2) {
            FiniteIdeal I = FiniteIdeal::generated_by(S, {g1});
            FiniteIdeal J = FiniteIdeal::generated_by(S, {g1, g2});
            SetFamily ZI = zero_locus_family(img, I);
            SetFamily ZJ = zero_locus_family(img, J);

            // monotonicity: I subset J implies Z(I) subset Z(J)
            for (auto mask : ZI.members) CHECK(ZJ.contains(mask));

            // I subset M_F iff Z(I) subset F, for every filter
            for (std::uint64_t fm = 1; fm < (1ULL << 4); ++fm) {
                FilterFin F(4, fm);
                bool all_members_in = true;
                for (auto m : I.members())
                    if (!F.contains(img.zero_mask(m))) all_members_in = false;
                bool z_in_f = true;
                for (auto mask : ZI.members)
                    if (!F.contains(mask)) z_in_f = false;
                CHECK(all_members_in == z_in_f);
            }

            // lemma (a)<->(b): some filter F has I subset M_F iff Z(I)
            // satisfies the finite intersection property
            bool fip_holds;
            std::uint64_t generated_min = 0;
            try {
                generated_min = fip_filter(ZI).minimal_member();
                fip_holds = true;
            } catch (const FIPViolated&) {
                fip_holds = false;
            }
            bool no_unit = true;
            for (auto m : I.members())
                if (img.unit_valued(m)) no_unit = false;
            // in a finite image ring, a filter with I in M_F exists iff no
            // member of I is unit-valued (empty zero set)
            CHECK(fip_holds == no_unit);
            if (fip_holds) {
                FilterFin F(4, generated_min);
                for (auto m : I.members()) CHECK(F.contains(img.zero_mask(m)));
            }
        }
}
