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

#include "ufspec/func_ring.hpp"

#include <sstream>

#include "ufspec/errors.hpp"

namespace ufspec {

// ------------------------------------------------------------- ResidueRing

bool ResidueRing::in_ideal(const RingElem& d) const {
    if (!d.parent() || !d.parent()->same_as(*domain))
        throw ParentMismatch("element belongs to a different ring");
    if (M.zero) return d.is_zero();
    const Int g = quotient->scalar_modulus();
    return d.scalar() % g == 0;
}

RingElem ResidueRing::reduce(const RingElem& d) const {
    if (!d.parent() || !d.parent()->same_as(*domain))
        throw ParentMismatch("element belongs to a different ring");
    if (M.zero) return d;  // the zero ideal keeps the domain
    return quotient->from_int(d.scalar());
}

RingElem ResidueRing::lift(const RingElem& q) const {
    if (!q.parent() || !q.parent()->same_as(*quotient))
        throw ParentMismatch("element belongs to a different ring");
    if (M.zero) return q;
    return domain->from_int(q.scalar());
}

ResidueRing residue_ring(const BaseRingPtr& D, const MDescriptor& M) {
    ResidueRing rr;
    rr.domain = D;
    rr.M = M;
    if (M.zero) {
        rr.quotient = D;
        return rr;
    }
    if (D->is_field())
        throw InputError("fields only admit the zero ideal");
    if (D->kind() == RingKind::Integers) {
        if (M.generator == 0)
            throw InputError("use the zero descriptor for the zero ideal");
        Int m = M.generator < 0 ? -M.generator : M.generator;
        if (m == 1) throw InputError("(1) is the unit ideal, not a proper ideal");
        rr.quotient = is_prime(m) ? BaseRing::prime_field(m) : BaseRing::integers_mod(m);
        return rr;
    }
    // D = Z/n: (m) = (gcd(m, n))
    const Int n = D->scalar_modulus();
    Int g = gcd_int(M.generator, n);
    if (g == 1) throw InputError("(" + M.generator.str() + ") is the unit ideal of Z/" + n.str());
    if (g == 0) {  // (0) in Z/n written as principal
        rr.quotient = D;
        return rr;
    }
    rr.quotient = is_prime(g) ? BaseRing::prime_field(g) : BaseRing::integers_mod(g);
    return rr;
}

// ----------------------------------------------------------------- FnValue

FnValue::FnValue(BaseRingPtr base, std::vector<RingElem> values)
    : base_(std::move(base)), values_(std::move(values)) {
    for (const auto& v : values_)
        if (!v.parent() || !v.parent()->same_as(*base_))
            throw ParentMismatch("value belongs to a different base ring");
}

bool FnValue::operator==(const FnValue& other) const {
    if (!base_ || !other.base_) return false;
    return base_->same_as(*other.base_) && values_ == other.values_;
}

void FnValue::check_compatible(const FnValue& other) const {
    if (!base_ || !other.base_ || !base_->same_as(*other.base_))
        throw ParentMismatch("function values over different base rings");
    if (values_.size() != other.values_.size())
        throw GroundSetMismatch("function values over different ground sets");
}

FnValue FnValue::pointwise_add(const FnValue& other) const {
    check_compatible(other);
    std::vector<RingElem> out;
    out.reserve(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out.push_back(values_[i] + other.values_[i]);
    return FnValue(base_, std::move(out));
}

FnValue FnValue::pointwise_sub(const FnValue& other) const {
    check_compatible(other);
    std::vector<RingElem> out;
    out.reserve(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out.push_back(values_[i] - other.values_[i]);
    return FnValue(base_, std::move(out));
}

FnValue FnValue::pointwise_mul(const FnValue& other) const {
    check_compatible(other);
    std::vector<RingElem> out;
    out.reserve(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out.push_back(values_[i] * other.values_[i]);
    return FnValue(base_, std::move(out));
}

FnValue FnValue::scaled(const RingElem& c) const {
    std::vector<RingElem> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.push_back(v * c);
    return FnValue(base_, std::move(out));
}

std::string FnValue::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ",";
        os << values_[i].to_string();
    }
    os << ")";
    return os.str();
}

FnValue operator+(const FnValue& a, const FnValue& b) { return a.pointwise_add(b); }
FnValue operator-(const FnValue& a, const FnValue& b) { return a.pointwise_sub(b); }
FnValue operator*(const FnValue& a, const FnValue& b) { return a.pointwise_mul(b); }

// ---------------------------------------------------------------- FuncRing

FuncRing::FuncRing(BaseRingPtr base, std::vector<RingElem> E,
                   std::vector<std::pair<std::string, FnValue>> generators)
    : base_(std::move(base)), E_(std::move(E)), generators_(std::move(generators)) {
    if (E_.empty()) throw InputError("E must be nonempty");
    if (E_.size() > kMaxGroundSet)
        throw TooLarge("|E| is capped at " + std::to_string(kMaxGroundSet));
    for (const auto& e : E_)
        if (!e.parent() || !e.parent()->same_as(*base_))
            throw ParentMismatch("E entry belongs to a different base ring");
    for (std::size_t i = 0; i < E_.size(); ++i)
        for (std::size_t j = i + 1; j < E_.size(); ++j)
            if (E_[i] == E_[j])
                throw InputError("duplicate E entry " + E_[i].to_string());
    for (const auto& [name, value] : generators_) {
        if (name.empty()) throw InputError("generator names must be nonempty");
        if (value.size() != E_.size())
            throw GroundSetMismatch("generator '" + name + "' has wrong length");
        if (!value.base()->same_as(*base_))
            throw ParentMismatch("generator '" + name + "' over a different base ring");
    }
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            if (generators_[i].first == generators_[j].first)
                throw InputError("duplicate generator name '" + generators_[i].first + "'");
}

const FnValue* FuncRing::find_generator(const std::string& name) const {
    for (const auto& [n, v] : generators_)
        if (n == name) return &v;
    return nullptr;
}

FnValue FuncRing::constant(const RingElem& c) const {
    return FnValue(base_, std::vector<RingElem>(E_.size(), c));
}

FnValue FuncRing::constant_int(const Int& c) const { return constant(base_->from_int(c)); }

FnValue FuncRing::identity() const { return FnValue(base_, E_); }

FnValue eval_expr(const FuncRing& R, const ExprPtr& expr) {
    switch (expr->kind()) {
        case Expr::Kind::IntLit:
            return R.constant_int(expr->value());
        case Expr::Kind::Ident: {
            const FnValue* g = R.find_generator(expr->name());
            if (!g) throw UnknownGenerator("unknown generator '" + expr->name() + "'");
            return *g;
        }
        case Expr::Kind::Add:
            return eval_expr(R, expr->lhs()) + eval_expr(R, expr->rhs());
        case Expr::Kind::Sub:
            return eval_expr(R, expr->lhs()) - eval_expr(R, expr->rhs());
        case Expr::Kind::Mul:
            return eval_expr(R, expr->lhs()) * eval_expr(R, expr->rhs());
        case Expr::Kind::Pow: {
            FnValue base = eval_expr(R, expr->lhs());
            FnValue acc = R.constant_int(1);
            for (unsigned i = 0; i < expr->exponent(); ++i) acc = acc * base;
            return acc;
        }
    }
    throw InputError("unreachable");
}

FnValue eval_expr(const FuncRing& R, const std::string& text) {
    return eval_expr(R, parse_expression(text));
}

// -------------------------------------------------------------- predicates

std::uint64_t preimage(const FnValue& f, const MDescriptor& M) {
    if (f.size() > FuncRing::kMaxGroundSet) throw TooLarge("ground set too large for bitmask");
    ResidueRing rr = residue_ring(f.base(), M);
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (rr.in_ideal(f.at(i))) mask |= 1ULL << i;
    return mask;
}

bool is_M_unit_valued(const FnValue& f, const MDescriptor& M) {
    ResidueRing rr = residue_ring(f.base(), M);
    if (!rr.field())
        throw NotMaximal("D/" + M.to_string() + " is not a field");
    return preimage(f, M) == 0;
}

// --------------------------------------------------------------- ImageRing

FiniteRing::Tuple ImageRing::reduce_tuple(const FnValue& f) const {
    if (f.size() != ring->coord_count())
        throw GroundSetMismatch("function value over a different ground set");
    FiniteRing::Tuple t(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        t[i] = static_cast<std::uint16_t>(residue.quotient->index_of(residue.reduce(f.at(i))));
    return t;
}

std::uint32_t ImageRing::reduce(const FnValue& f) const {
    auto idx = ring->index_of(reduce_tuple(f));
    if (!idx)
        throw CheckFailed("reduced value is outside the image ring (not generated by R)");
    return *idx;
}

bool ImageRing::unit_valued(std::uint32_t index) const {
    const auto& t = ring->tuple(index);
    const std::uint64_t zero_idx = residue.quotient->index_of(residue.quotient->zero());
    for (auto c : t)
        if (c == zero_idx) return false;
    return true;
}

std::uint64_t ImageRing::zero_mask(std::uint32_t index) const {
    const auto& t = ring->tuple(index);
    const std::uint64_t zero_idx = residue.quotient->index_of(residue.quotient->zero());
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] == zero_idx) mask |= 1ULL << i;
    return mask;
}

ImageRing image_ring(const FuncRing& R, const MDescriptor& M, std::uint64_t cap) {
    ResidueRing rr = residue_ring(R.base(), M);
    if (!rr.finite()) throw InputError("image ring requires finite D/M");
    ImageRing img;
    img.residue = rr;

    std::vector<BaseRingPtr> coords(R.ground_size(), rr.quotient);
    std::vector<FiniteRing::Tuple> gens;
    gens.reserve(R.generators().size());
    for (const auto& [name, value] : R.generators()) {
        FiniteRing::Tuple t(value.size());
        for (std::size_t i = 0; i < value.size(); ++i)
            t[i] = static_cast<std::uint16_t>(rr.quotient->index_of(rr.reduce(value.at(i))));
        gens.push_back(std::move(t));
    }
    img.ring = FiniteRing::closure(std::move(coords), gens, cap);
    return img;
}

}  // namespace ufspec
