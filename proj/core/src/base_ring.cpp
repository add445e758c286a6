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

#include "ufspec/base_ring.hpp"

#include <algorithm>
#include <sstream>

#include "ufspec/errors.hpp"
#include "ufspec/fpx.hpp"

namespace ufspec {

// ---------------------------------------------------------------- RingElem

bool RingElem::is_zero() const {
    if (!parent_) throw InputError("uninitialized ring element");
    if (parent_->kind() == RingKind::ExtField)
        return std::all_of(ext_.begin(), ext_.end(), [](std::int64_t c) { return c == 0; });
    return scalar_ == 0;
}

bool RingElem::is_one() const {
    if (!parent_) throw InputError("uninitialized ring element");
    if (parent_->kind() == RingKind::ExtField) {
        if (ext_.empty() || ext_[0] != 1) return false;
        return std::all_of(ext_.begin() + 1, ext_.end(), [](std::int64_t c) { return c == 0; });
    }
    return scalar_ == 1;
}

bool RingElem::operator==(const RingElem& other) const {
    if (!parent_ || !other.parent_) return !parent_ && !other.parent_;
    if (!parent_->same_as(*other.parent_)) return false;
    if (parent_->kind() == RingKind::ExtField) return ext_ == other.ext_;
    return scalar_ == other.scalar_;
}

bool RingElem::operator<(const RingElem& other) const {
    if (!parent_ || !other.parent_ || !parent_->same_as(*other.parent_))
        throw ParentMismatch("ordering requires elements of the same ring");
    if (parent_->kind() == RingKind::ExtField)
        return parent_->index_of(*this) < parent_->index_of(other);
    return scalar_ < other.scalar_;
}

std::string RingElem::to_string() const {
    if (!parent_) return "<invalid>";
    if (parent_->kind() != RingKind::ExtField) return scalar_.str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < ext_.size(); ++i) {
        if (ext_[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << ext_[i];
        } else {
            if (ext_[i] != 1) os << ext_[i] << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------- BaseRing

BaseRingPtr BaseRing::integers() {
    auto r = std::shared_ptr<BaseRing>(new BaseRing());
    r->kind_ = RingKind::Integers;
    r->is_domain_ = true;
    r->is_field_ = false;
    return r;
}

BaseRingPtr BaseRing::integers_mod(const Int& m) {
    if (m < 2) throw InputError("IntegersMod requires modulus >= 2, got " + m.str());
    auto r = std::shared_ptr<BaseRing>(new BaseRing());
    r->kind_ = RingKind::IntegersMod;
    r->m_ = m;
    r->is_domain_ = is_prime(m);
    r->is_field_ = r->is_domain_;
    return r;
}

BaseRingPtr BaseRing::prime_field(const Int& p) {
    if (!is_prime(p)) throw InputError("PrimeField requires a prime, got " + p.str());
    auto r = std::shared_ptr<BaseRing>(new BaseRing());
    r->kind_ = RingKind::PrimeField;
    r->m_ = p;
    r->is_domain_ = true;
    r->is_field_ = true;
    return r;
}

BaseRingPtr BaseRing::ext_field(const Int& p, unsigned k) {
    if (!is_prime(p)) throw InputError("ExtField requires a prime, got " + p.str());
    if (k < 1) throw InputError("ExtField requires degree >= 1");
    auto modulus = fpx::smallest_irreducible(p.convert_to<std::int64_t>(), k);
    return ext_field(p, k, std::move(modulus));
}

BaseRingPtr BaseRing::ext_field(const Int& p, unsigned k, std::vector<std::int64_t> modulus) {
    if (!is_prime(p)) throw InputError("ExtField requires a prime, got " + p.str());
    if (k < 1) throw InputError("ExtField requires degree >= 1");
    if (modulus.size() != k + 1 || modulus.back() != 1)
        throw InputError("ExtField modulus must be monic of degree k");
    const std::int64_t pv = p.convert_to<std::int64_t>();
    for (std::int64_t c : modulus)
        if (c < 0 || c >= pv) throw InputError("ExtField modulus coefficients must lie in [0, p)");
    if (!fpx::is_irreducible(modulus, pv))
        throw InputError("ExtField modulus is reducible over F_p");
    if (pow_int(p, k) > (Int(1) << 62))
        throw TooLarge("ExtField size exceeds 2^62");
    auto r = std::shared_ptr<BaseRing>(new BaseRing());
    r->kind_ = RingKind::ExtField;
    r->m_ = p;
    r->k_ = k;
    r->modulus_ = std::move(modulus);
    r->is_domain_ = true;
    r->is_field_ = true;
    return r;
}

std::uint64_t BaseRing::size() const {
    switch (kind_) {
        case RingKind::Integers:
            throw InputError("Integers is not finite");
        case RingKind::IntegersMod:
        case RingKind::PrimeField:
            return m_.convert_to<std::uint64_t>();
        case RingKind::ExtField:
            return pow_int(m_, k_).convert_to<std::uint64_t>();
    }
    throw InputError("unreachable");
}

Int BaseRing::characteristic() const {
    return kind_ == RingKind::Integers ? Int(0) : m_;
}

bool BaseRing::same_as(const BaseRing& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case RingKind::Integers:
            return true;
        case RingKind::IntegersMod:
        case RingKind::PrimeField:
            return m_ == other.m_;
        case RingKind::ExtField:
            return m_ == other.m_ && k_ == other.k_ && modulus_ == other.modulus_;
    }
    return false;
}

void BaseRing::check_parent(const RingElem& a) const {
    if (!a.parent_ || !a.parent_->same_as(*this))
        throw ParentMismatch("element belongs to a different ring");
}

RingElem BaseRing::zero() const { return from_int(0); }
RingElem BaseRing::one() const { return from_int(1); }

RingElem BaseRing::from_int(const Int& v) const {
    RingElem e;
    e.parent_ = shared_from_this();
    switch (kind_) {
        case RingKind::Integers:
            e.scalar_ = v;
            break;
        case RingKind::IntegersMod:
        case RingKind::PrimeField:
            e.scalar_ = mod_floor(v, m_);
            break;
        case RingKind::ExtField:
            e.ext_.assign(k_, 0);
            e.ext_[0] = mod_floor(v, m_).convert_to<std::int64_t>();
            break;
    }
    return e;
}

RingElem BaseRing::from_coeffs(std::vector<std::int64_t> coeffs) const {
    if (kind_ != RingKind::ExtField)
        throw InputError("coefficient constructor is only for extension fields");
    if (coeffs.size() > k_) throw InputError("coefficient vector longer than extension degree");
    const std::int64_t p = m_.convert_to<std::int64_t>();
    coeffs.resize(k_, 0);
    for (auto& c : coeffs) {
        c %= p;
        if (c < 0) c += p;
    }
    RingElem e;
    e.parent_ = shared_from_this();
    e.ext_ = std::move(coeffs);
    return e;
}

RingElem BaseRing::element(std::uint64_t index) const {
    if (!is_finite()) throw InputError("element enumeration requires a finite ring");
    if (index >= size()) throw InputError("element index out of range");
    if (kind_ != RingKind::ExtField) return from_int(Int(index));
    const std::uint64_t p = m_.convert_to<std::uint64_t>();
    std::vector<std::int64_t> coeffs(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
        coeffs[i] = static_cast<std::int64_t>(index % p);
        index /= p;
    }
    return from_coeffs(std::move(coeffs));
}

std::uint64_t BaseRing::index_of(const RingElem& a) const {
    check_parent(a);
    if (!is_finite()) throw InputError("element indexing requires a finite ring");
    if (kind_ != RingKind::ExtField) return a.scalar_.convert_to<std::uint64_t>();
    const std::uint64_t p = m_.convert_to<std::uint64_t>();
    std::uint64_t idx = 0;
    for (unsigned i = k_; i-- > 0;) idx = idx * p + static_cast<std::uint64_t>(a.ext_[i]);
    return idx;
}

RingElem BaseRing::add(const RingElem& a, const RingElem& b) const {
    check_parent(a);
    check_parent(b);
    RingElem e;
    e.parent_ = shared_from_this();
    if (kind_ == RingKind::ExtField) {
        const std::int64_t p = m_.convert_to<std::int64_t>();
        e.ext_.resize(k_);
        for (unsigned i = 0; i < k_; ++i) {
            std::int64_t v = a.ext_[i] + b.ext_[i];
            e.ext_[i] = v >= p ? v - p : v;
        }
    } else {
        e.scalar_ = a.scalar_ + b.scalar_;
        if (kind_ != RingKind::Integers) e.scalar_ = mod_floor(e.scalar_, m_);
    }
    return e;
}

RingElem BaseRing::sub(const RingElem& a, const RingElem& b) const {
    return add(a, neg(b));
}

RingElem BaseRing::neg(const RingElem& a) const {
    check_parent(a);
    RingElem e;
    e.parent_ = shared_from_this();
    if (kind_ == RingKind::ExtField) {
        const std::int64_t p = m_.convert_to<std::int64_t>();
        e.ext_.resize(k_);
        for (unsigned i = 0; i < k_; ++i) e.ext_[i] = a.ext_[i] == 0 ? 0 : p - a.ext_[i];
    } else {
        e.scalar_ = -a.scalar_;
        if (kind_ != RingKind::Integers) e.scalar_ = mod_floor(e.scalar_, m_);
    }
    return e;
}

RingElem BaseRing::mul(const RingElem& a, const RingElem& b) const {
    check_parent(a);
    check_parent(b);
    RingElem e;
    e.parent_ = shared_from_this();
    if (kind_ == RingKind::ExtField) {
        const std::int64_t p = m_.convert_to<std::int64_t>();
        auto prod = fpx::rem(fpx::mul(fpx::normalize(a.ext_), fpx::normalize(b.ext_), p),
                             modulus_, p);
        prod.resize(k_, 0);
        e.ext_ = std::move(prod);
    } else {
        e.scalar_ = a.scalar_ * b.scalar_;
        if (kind_ != RingKind::Integers) e.scalar_ = mod_floor(e.scalar_, m_);
    }
    return e;
}

RingElem BaseRing::pow(const RingElem& a, unsigned e) const {
    check_parent(a);
    RingElem result = one();
    RingElem base = a;
    while (e > 0) {
        if (e & 1u) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

bool BaseRing::is_unit(const RingElem& a) const {
    check_parent(a);
    switch (kind_) {
        case RingKind::Integers:
            return a.scalar_ == 1 || a.scalar_ == -1;
        case RingKind::IntegersMod:
            return gcd_int(a.scalar_, m_) == 1;
        case RingKind::PrimeField:
            return a.scalar_ != 0;
        case RingKind::ExtField:
            return !a.is_zero();
    }
    return false;
}

RingElem BaseRing::inverse(const RingElem& a) const {
    check_parent(a);
    RingElem e;
    e.parent_ = shared_from_this();
    switch (kind_) {
        case RingKind::Integers:
            if (a.scalar_ != 1 && a.scalar_ != -1)
                throw NotAUnit(a.scalar_.str() + " is not a unit of Z");
            e.scalar_ = a.scalar_;
            return e;
        case RingKind::IntegersMod:
        case RingKind::PrimeField:
            e.scalar_ = inverse_mod(a.scalar_, m_);
            return e;
        case RingKind::ExtField: {
            const std::int64_t p = m_.convert_to<std::int64_t>();
            auto inv = fpx::inverse_mod(fpx::normalize(a.ext_), modulus_, p);
            inv.resize(k_, 0);
            e.ext_ = std::move(inv);
            return e;
        }
    }
    throw InputError("unreachable");
}

std::string BaseRing::describe() const {
    switch (kind_) {
        case RingKind::Integers:
            return "Z";
        case RingKind::IntegersMod:
            return "Z/" + m_.str();
        case RingKind::PrimeField:
            return "F_" + m_.str();
        case RingKind::ExtField:
            return "F_" + pow_int(m_, k_).str();
    }
    return "?";
}

RingElem operator+(const RingElem& a, const RingElem& b) {
    if (!a.parent()) throw InputError("uninitialized ring element");
    return a.parent()->add(a, b);
}

RingElem operator-(const RingElem& a, const RingElem& b) {
    if (!a.parent()) throw InputError("uninitialized ring element");
    return a.parent()->sub(a, b);
}

RingElem operator*(const RingElem& a, const RingElem& b) {
    if (!a.parent()) throw InputError("uninitialized ring element");
    return a.parent()->mul(a, b);
}

RingElem operator-(const RingElem& a) {
    if (!a.parent()) throw InputError("uninitialized ring element");
    return a.parent()->neg(a);
}

RingElem elem_inverse(const RingElem& a) {
    if (!a.parent()) throw InputError("uninitialized ring element");
    return a.parent()->inverse(a);
}

}  // namespace ufspec
