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

#ifndef UFSPEC_FINITE_RING_HPP
#define UFSPEC_FINITE_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ufspec/base_ring.hpp"

namespace ufspec {

class FiniteRing;
using FiniteRingPtr = std::shared_ptr<const FiniteRing>;

/// Explicit finite commutative ring, realized as a subring of a finite
/// product of coordinate rings with pointwise operations. Elements are
/// stored as tuples of coordinate element indices, listed in canonical
/// sorted order; operations return element indices.
///
/// Immutable after construction.
class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
public:
    using Tuple = std::vector<std::uint16_t>;

    /// Subring of prod_i coords[i] generated by the given tuples together
    /// with all constants (available when all coordinate rings coincide;
    /// for heterogeneous coordinates, 0 and 1 are always included).
    /// Throws TooLarge when the closure exceeds `cap`.
    static FiniteRingPtr closure(std::vector<BaseRingPtr> coords,
                                 const std::vector<Tuple>& generators,
                                 std::uint64_t cap = 65536);

    /// All of one finite base ring, as a single-coordinate FiniteRing.
    static FiniteRingPtr full(const BaseRingPtr& base);

    /// The full direct product of the factors (all element combinations).
    static FiniteRingPtr product(const std::vector<FiniteRingPtr>& factors,
                                 std::uint64_t cap = 65536);

    std::size_t coord_count() const { return coords_.size(); }
    const BaseRingPtr& coord_ring(std::size_t i) const { return coords_[i]; }
    bool homogeneous() const;

    std::size_t size() const { return elems_.size(); }
    const Tuple& tuple(std::uint32_t index) const { return elems_[index]; }
    std::optional<std::uint32_t> index_of(const Tuple& t) const;

    std::uint32_t zero() const { return zero_; }
    std::uint32_t one() const { return one_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;

    /// Index of the constant tuple (c, ..., c); requires homogeneous
    /// coordinates. Empty when that tuple is not an element (cannot
    /// happen for closures, which contain all constants).
    std::optional<std::uint32_t> constant(std::uint64_t coord_elem_index) const;

    RingElem coord_elem(std::uint32_t elem, std::size_t coord) const;
    std::string elem_to_string(std::uint32_t index) const;

private:
    FiniteRing() = default;
    void build_coord_ops();
    void finalize();             // sort elements, build index and op tables
    Tuple op_tuple(const Tuple& a, const Tuple& b, bool multiply) const;

    struct TupleHash {
        std::size_t operator()(const Tuple& t) const {
            std::size_t h = 1469598103934665603ULL;
            for (auto v : t) {
                h ^= static_cast<std::size_t>(v) + 1;
                h *= 1099511628211ULL;
            }
            return h;
        }
    };

    std::vector<BaseRingPtr> coords_;
    std::vector<Tuple> elems_;
    std::unordered_map<Tuple, std::uint32_t, TupleHash> index_;
    std::uint32_t zero_ = 0, one_ = 0;

    // per-coordinate operation tables (coordinate rings are small)
    struct CoordOps {
        std::uint32_t q = 0;
        std::vector<std::uint16_t> add, mul, neg;
    };
    std::vector<std::uint32_t> coord_ops_of_;  // coordinate -> ops entry
    std::vector<CoordOps> coord_ops_;

    // whole-ring tables, built eagerly for small rings
    std::vector<std::uint32_t> add_tab_, mul_tab_;
};

/// Ideal of a FiniteRing, stored as a sorted member index list plus a
/// membership mask.
class FiniteIdeal {
public:
    /// Validates the ideal axioms (contains 0, closed under addition and
    /// under multiplication by every ring element).
    static FiniteIdeal from_members(FiniteRingPtr parent, std::vector<std::uint32_t> members);
    /// Smallest ideal containing the generators.
    static FiniteIdeal generated_by(FiniteRingPtr parent,
                                    const std::vector<std::uint32_t>& generators);
    /// Internal fast path for ideals that are correct by construction.
    static FiniteIdeal unchecked(FiniteRingPtr parent, std::vector<std::uint32_t> members);

    const FiniteRingPtr& parent() const { return parent_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<std::uint32_t>& members() const { return members_; }
    bool contains(std::uint32_t index) const { return mask_[index]; }
    bool is_whole_ring() const { return members_.size() == parent_->size(); }

    bool operator==(const FiniteIdeal& other) const { return members_ == other.members_; }
    /// Canonical order: by size, then lexicographic member list.
    bool operator<(const FiniteIdeal& other) const;

    /// The ideal {x + y : x in this, y in other}.
    FiniteIdeal sum(const FiniteIdeal& other) const;

private:
    FiniteRingPtr parent_;
    std::vector<std::uint32_t> members_;
    std::vector<bool> mask_;
};

}  // namespace ufspec

#endif
