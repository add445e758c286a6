/*
   Copyright 2026 The ufspec Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ufspec/filters.hpp"

#include <algorithm>

#include "ufspec/errors.hpp"

namespace ufspec {

namespace {

std::uint64_t full_mask(std::size_t n) { return n >= 64 ? ~0ULL : (1ULL << n) - 1; }

void check_ground(std::size_t n) {
    if (n == 0) throw InputError("ground set must be nonempty");
    if (n > FuncRing::kMaxGroundSet)
        throw TooLarge("ground set capped at " + std::to_string(FuncRing::kMaxGroundSet));
}

}  // namespace

SetFamily SetFamily::from_masks(std::size_t n, std::vector<std::uint64_t> masks) {
    check_ground(n);
    for (auto m : masks)
        if (m > full_mask(n)) throw InputError("member exceeds the ground set");
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return SetFamily{n, std::move(masks)};
}

SetFamily SetFamily::from_index_lists(std::size_t n,
                                      const std::vector<std::vector<unsigned>>& lists) {
    std::vector<std::uint64_t> masks;
    masks.reserve(lists.size());
    for (const auto& list : lists) {
        std::uint64_t m = 0;
        for (unsigned i : list) {
            if (i >= n) throw InputError("set index " + std::to_string(i) + " out of range");
            m |= 1ULL << i;
        }
        masks.push_back(m);
    }
    return from_masks(n, std::move(masks));
}

bool SetFamily::contains(std::uint64_t mask) const {
    return std::binary_search(members.begin(), members.end(), mask);
}

FilterFin::FilterFin(std::size_t n, std::uint64_t minimal_member)
    : n_(n), min_mask_(minimal_member) {
    check_ground(n);
    if (minimal_member == 0) throw InputError("the empty set cannot generate a filter");
    if (minimal_member > full_mask(n)) throw InputError("minimal member exceeds the ground set");
}

FilterFin FilterFin::trivial(std::size_t n) { return FilterFin(n, full_mask(n)); }

UltrafilterFin::UltrafilterFin(std::size_t n, unsigned point) : n_(n), point_(point) {
    check_ground(n);
    if (point >= n) throw InputError("ultrafilter point out of range");
}

FilterFin fip_filter(const SetFamily& family) {
    check_ground(family.n);
    std::uint64_t inter = full_mask(family.n);
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        inter &= family.members[i];
        if (inter == 0) {
            // Greedy minimal violating tuple ending at member i.
            std::vector<std::size_t> tuple = {i};
            std::uint64_t cur = family.members[i];
            for (std::size_t j = 0; j < i && cur != 0; ++j) {
                if ((cur & family.members[j]) != cur) {
                    tuple.push_back(j);
                    cur &= family.members[j];
                }
            }
            std::sort(tuple.begin(), tuple.end());
            throw FIPViolated("family violates the finite intersection property", tuple);
        }
    }
    return FilterFin(family.n, inter);
}

std::vector<UltrafilterFin> refinements(const FilterFin& filter) {
    std::vector<UltrafilterFin> out;
    for (unsigned i = 0; i < filter.n(); ++i)
        if ((filter.minimal_member() >> i) & 1ULL) out.emplace_back(filter.n(), i);
    return out;
}

bool mf_contains(const FnValue& f, const MDescriptor& M, const FilterFin& filter) {
    if (f.size() != filter.n())
        throw GroundSetMismatch("function and filter over different ground sets");
    return filter.contains(preimage(f, M));
}

bool mf_contains(const FnValue& f, const MDescriptor& M, const UltrafilterFin& ultrafilter) {
    if (f.size() != ultrafilter.n())
        throw GroundSetMismatch("function and ultrafilter over different ground sets");
    return ultrafilter.contains(preimage(f, M));
}

SetFamily zero_locus_family(const ImageRing& image, const FiniteIdeal& ideal) {
    std::vector<std::uint64_t> masks;
    masks.reserve(ideal.size());
    for (auto member : ideal.members()) masks.push_back(image.zero_mask(member));
    return SetFamily::from_masks(image.ring->coord_count(), std::move(masks));
}

SetFamily zero_locus_family(const FuncRing& R, const IdealDescriptor& I, const MDescriptor& M,
                            std::uint64_t cap) {
    if (I.generators.empty()) throw InputError("ideal descriptor requires generators");
    ImageRing image = image_ring(R, M, cap);
    std::vector<std::uint32_t> gens;
    gens.reserve(I.generators.size());
    for (const auto& g : I.generators) gens.push_back(image.reduce(g));
    FiniteIdeal ideal = FiniteIdeal::generated_by(image.ring, gens);
    return zero_locus_family(image, ideal);
}

}  // namespace ufspec
