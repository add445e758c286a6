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

#ifndef UFSPEC_BASE_RING_HPP
#define UFSPEC_BASE_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "ufspec/integer.hpp"

namespace ufspec {

class BaseRing;
using BaseRingPtr = std::shared_ptr<const BaseRing>;

/// An element of a BaseRing. Representations are canonical: two elements
/// are equal exactly when their representations are equal.
///
/// Integers use an arbitrary-precision value; IntegersMod and PrimeField
/// use the representative in [0, m); ExtField uses the coefficient vector
/// of length k with entries in [0, p), low degree first.
class RingElem {
public:
    RingElem() = default;

    const BaseRingPtr& parent() const { return parent_; }
    const Int& scalar() const { return scalar_; }
    const std::vector<std::int64_t>& ext_coeffs() const { return ext_; }

    bool is_zero() const;
    bool is_one() const;

    bool operator==(const RingElem& other) const;
    bool operator!=(const RingElem& other) const { return !(*this == other); }

    /// Canonical order within one parent (used for sorted, reproducible
    /// output). Integers by value; finite rings by element index.
    bool operator<(const RingElem& other) const;

    std::string to_string() const;

private:
    friend class BaseRing;
    BaseRingPtr parent_;
    Int scalar_;
    std::vector<std::int64_t> ext_;
};

enum class RingKind { Integers, IntegersMod, PrimeField, ExtField };

/// The base ring D (or a residue ring D/M): exact arithmetic over Z, Z/m,
/// F_p, and F_{p^k}.
///
/// Immutable after construction; all operations are pure.
class BaseRing : public std::enable_shared_from_this<BaseRing> {
public:
    static BaseRingPtr integers();
    static BaseRingPtr integers_mod(const Int& m);
    static BaseRingPtr prime_field(const Int& p);
    /// F_{p^k} over the first irreducible polynomial of degree k.
    static BaseRingPtr ext_field(const Int& p, unsigned k);
    /// F_{p^k} over an explicit monic irreducible modulus (low degree
    /// first, length k+1, leading coefficient 1).
    static BaseRingPtr ext_field(const Int& p, unsigned k, std::vector<std::int64_t> modulus);

    RingKind kind() const { return kind_; }
    bool is_domain() const { return is_domain_; }
    bool is_field() const { return is_field_; }
    bool is_finite() const { return kind_ != RingKind::Integers; }
    /// Number of elements; only valid for finite rings.
    std::uint64_t size() const;
    /// 0 for Z, m for Z/m, p for F_p and F_{p^k}.
    Int characteristic() const;
    /// The prime p (PrimeField/ExtField) or modulus m (IntegersMod).
    const Int& scalar_modulus() const { return m_; }
    unsigned ext_degree() const { return k_; }
    const std::vector<std::int64_t>& ext_modulus() const { return modulus_; }

    bool same_as(const BaseRing& other) const;

    RingElem zero() const;
    RingElem one() const;
    /// Canonical image of an integer (for ExtField: constant coefficient).
    RingElem from_int(const Int& v) const;
    /// ExtField element from a coefficient vector (length <= k).
    RingElem from_coeffs(std::vector<std::int64_t> coeffs) const;

    /// Canonical element indexing for finite rings: index = value for
    /// Z/m and F_p, and sum_i c_i p^i for F_{p^k}.
    RingElem element(std::uint64_t index) const;
    std::uint64_t index_of(const RingElem& a) const;

    RingElem add(const RingElem& a, const RingElem& b) const;
    RingElem sub(const RingElem& a, const RingElem& b) const;
    RingElem mul(const RingElem& a, const RingElem& b) const;
    RingElem neg(const RingElem& a) const;
    RingElem pow(const RingElem& a, unsigned e) const;

    bool is_unit(const RingElem& a) const;
    /// Multiplicative inverse; throws NotAUnit if none exists.
    RingElem inverse(const RingElem& a) const;

    std::string describe() const;

private:
    BaseRing() = default;
    void check_parent(const RingElem& a) const;

    RingKind kind_ = RingKind::Integers;
    bool is_domain_ = true;
    bool is_field_ = false;
    Int m_;                               // m or p
    unsigned k_ = 1;                      // extension degree
    std::vector<std::int64_t> modulus_;   // ExtField modulus, monic, length k+1
};

/// Element-level convenience operators; both operands must share a parent
/// (ParentMismatch otherwise).
RingElem operator+(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a, const RingElem& b);
RingElem operator*(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a);

/// Spec operation elem_inverse: b with a*b = 1, or NotAUnit.
RingElem elem_inverse(const RingElem& a);

}  // namespace ufspec

#endif
