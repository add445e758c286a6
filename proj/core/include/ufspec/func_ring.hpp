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

#ifndef UFSPEC_FUNC_RING_HPP
#define UFSPEC_FUNC_RING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ufspec/base_ring.hpp"
#include "ufspec/expr.hpp"
#include "ufspec/finite_ring.hpp"

namespace ufspec {

/// An ideal M of the base ring D: either the zero ideal or a principal
/// ideal (m) for D = Z or Z/n. Fields only admit the zero ideal.
struct MDescriptor {
    bool zero = true;
    Int generator;  // meaningful when !zero

    static MDescriptor zero_ideal() { return MDescriptor{}; }
    static MDescriptor principal(Int m) { return MDescriptor{false, std::move(m)}; }

    std::string to_string() const { return zero ? "(0)" : "(" + generator.str() + ")"; }
};

/// D/M together with the reduction D -> D/M and the canonical lift
/// D/M -> D (always a section of the reduction).
struct ResidueRing {
    BaseRingPtr domain;    // D
    BaseRingPtr quotient;  // D/M
    MDescriptor M;

    bool field() const { return quotient->is_field(); }
    bool finite() const { return quotient->is_finite(); }

    /// Membership of a D-element in M.
    bool in_ideal(const RingElem& d) const;
    RingElem reduce(const RingElem& d) const;
    RingElem lift(const RingElem& q) const;
};

/// Builds D/M; rejects descriptors that give the unit ideal (and, for
/// fields, any nonzero M).
ResidueRing residue_ring(const BaseRingPtr& D, const MDescriptor& M);

/// A function E -> D as a value table over the (implicit, ordered) finite
/// set E. The ground set is fixed by the owning FuncRing; FnValue itself
/// carries the base ring and the values.
class FnValue {
public:
    FnValue() = default;
    FnValue(BaseRingPtr base, std::vector<RingElem> values);

    const BaseRingPtr& base() const { return base_; }
    std::size_t size() const { return values_.size(); }
    const RingElem& at(std::size_t i) const { return values_[i]; }
    const std::vector<RingElem>& values() const { return values_; }

    bool operator==(const FnValue& other) const;

    FnValue pointwise_add(const FnValue& other) const;
    FnValue pointwise_sub(const FnValue& other) const;
    FnValue pointwise_mul(const FnValue& other) const;
    FnValue scaled(const RingElem& c) const;

    std::string to_string() const;

private:
    void check_compatible(const FnValue& other) const;
    BaseRingPtr base_;
    std::vector<RingElem> values_;
};

FnValue operator+(const FnValue& a, const FnValue& b);
FnValue operator-(const FnValue& a, const FnValue& b);
FnValue operator*(const FnValue& a, const FnValue& b);

/// A finitely generated ring of functions E -> D: the subring of D^E
/// generated by all constant functions together with the named
/// generators. E is an ordered list of distinct elements of D; subsets of
/// E are bitmasks over that order, so |E| <= 62.
class FuncRing {
public:
    static constexpr std::size_t kMaxGroundSet = 62;

    FuncRing(BaseRingPtr base, std::vector<RingElem> E,
             std::vector<std::pair<std::string, FnValue>> generators);

    const BaseRingPtr& base() const { return base_; }
    const std::vector<RingElem>& E() const { return E_; }
    std::size_t ground_size() const { return E_.size(); }
    const std::vector<std::pair<std::string, FnValue>>& generators() const { return generators_; }
    const FnValue* find_generator(const std::string& name) const;

    FnValue constant(const RingElem& c) const;
    FnValue constant_int(const Int& c) const;
    /// The identity function e -> e (the generator usually called x).
    FnValue identity() const;

    /// Full-ground-set bitmask.
    std::uint64_t all_mask() const { return E_.size() == 64 ? ~0ULL : (1ULL << E_.size()) - 1; }

private:
    BaseRingPtr base_;
    std::vector<RingElem> E_;
    std::vector<std::pair<std::string, FnValue>> generators_;
};

/// An ideal of a ring of functions, given by finitely many generators.
struct IdealDescriptor {
    std::vector<FnValue> generators;  // nonempty; the zero function is allowed
};

/// Pointwise evaluation of a polynomial expression in the generator names
/// with integer coefficients. UnknownGenerator for undeclared names.
FnValue eval_expr(const FuncRing& R, const ExprPtr& expr);
FnValue eval_expr(const FuncRing& R, const std::string& text);

/// The set {e in E : f(e) in M} as a bitmask over E's order.
std::uint64_t preimage(const FnValue& f, const MDescriptor& M);

/// True iff every value of f is a unit mod M; requires D/M to be a field
/// (NotMaximal otherwise).
bool is_M_unit_valued(const FnValue& f, const MDescriptor& M);

/// The image of a FuncRing in (D/M)^E: the finite subring generated by
/// the constants and the reduced generators, plus the reduction map.
struct ImageRing {
    FiniteRingPtr ring;
    ResidueRing residue;

    FiniteRing::Tuple reduce_tuple(const FnValue& f) const;
    std::uint32_t reduce(const FnValue& f) const;
    /// True iff the element has no zero coordinate (all values units of
    /// the residue field).
    bool unit_valued(std::uint32_t index) const;
    /// Bitmask of coordinates where the element is zero (the zero locus).
    std::uint64_t zero_mask(std::uint32_t index) const;
};

ImageRing image_ring(const FuncRing& R, const MDescriptor& M, std::uint64_t cap = 65536);

}  // namespace ufspec

#endif
