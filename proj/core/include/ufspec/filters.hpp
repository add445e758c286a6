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

#ifndef UFSPEC_FILTERS_HPP
#define UFSPEC_FILTERS_HPP

#include <cstdint>
#include <vector>

#include "ufspec/func_ring.hpp"

namespace ufspec {

/// A family of subsets of a finite ground set E = {0, ..., n-1}, each
/// subset a bitmask; members sorted and deduplicated.
struct SetFamily {
    std::size_t n = 0;
    std::vector<std::uint64_t> members;

    static SetFamily from_masks(std::size_t n, std::vector<std::uint64_t> masks);
    static SetFamily from_index_lists(std::size_t n,
                                      const std::vector<std::vector<unsigned>>& lists);
    bool contains(std::uint64_t mask) const;
};

/// A filter on a finite set, stored by its unique minimal member (the
/// represented family is all supersets). The minimal member is nonempty.
class FilterFin {
public:
    FilterFin(std::size_t n, std::uint64_t minimal_member);

    std::size_t n() const { return n_; }
    std::uint64_t minimal_member() const { return min_mask_; }
    bool contains(std::uint64_t mask) const { return (mask & min_mask_) == min_mask_; }
    bool subset_of(const FilterFin& other) const { return other.contains(min_mask_); }

    static FilterFin trivial(std::size_t n);

private:
    std::size_t n_;
    std::uint64_t min_mask_;
};

/// A principal ultrafilter on a finite set: all sets containing `point`.
/// On a finite set every ultrafilter is of this form.
class UltrafilterFin {
public:
    UltrafilterFin(std::size_t n, unsigned point);

    std::size_t n() const { return n_; }
    unsigned point() const { return point_; }
    bool contains(std::uint64_t mask) const { return (mask >> point_) & 1ULL; }
    FilterFin as_filter() const { return FilterFin(n_, 1ULL << point_); }

private:
    std::size_t n_;
    unsigned point_;
};

/// The filter generated by a family with the finite intersection
/// property: all supersets of the total intersection. The empty family
/// generates the trivial filter {E}. Throws FIPViolated (with a
/// violating member tuple) when some intersection is empty.
FilterFin fip_filter(const SetFamily& family);

/// All ultrafilters refining F: the principal ultrafilters at the points
/// of the minimal member, in ascending point order. The canonical
/// refinement is the first entry.
std::vector<UltrafilterFin> refinements(const FilterFin& filter);

/// Membership of f in M_F = {f : f^{-1}(M) in F}.
bool mf_contains(const FnValue& f, const MDescriptor& M, const FilterFin& filter);
bool mf_contains(const FnValue& f, const MDescriptor& M, const UltrafilterFin& ultrafilter);

/// Z_M(I) = {f^{-1}(M) : f in I} for the ideal of R generated by I's
/// generators, computed exactly in the finite image ring of R mod M.
SetFamily zero_locus_family(const FuncRing& R, const IdealDescriptor& I, const MDescriptor& M,
                            std::uint64_t cap = 65536);

/// Same computation inside an already-built image ring.
SetFamily zero_locus_family(const ImageRing& image, const FiniteIdeal& ideal);

}  // namespace ufspec

#endif
