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

#include "ufspec/poly.hpp"

#include <sstream>

#include "ufspec/errors.hpp"
#include "ufspec/fpx.hpp"

namespace ufspec {

namespace {

void check_same(const BaseRingPtr& a, const BaseRingPtr& b) {
    if (!a || !b || !a->same_as(*b)) throw ParentMismatch("polynomial parents differ");
}

std::vector<RingElem> normalized(std::vector<RingElem> coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    return coeffs;
}

}  // namespace

// -------------------------------------------------------------------- Poly

Poly Poly::zero(BaseRingPtr parent) {
    Poly f;
    f.parent_ = std::move(parent);
    return f;
}

Poly Poly::constant(const RingElem& c) {
    Poly f;
    f.parent_ = c.parent();
    if (!c.is_zero()) f.coeffs_ = {c};
    return f;
}

Poly Poly::variable(BaseRingPtr parent) {
    Poly f;
    f.coeffs_ = {parent->zero(), parent->one()};
    f.parent_ = std::move(parent);
    return f;
}

Poly Poly::from_coeffs(BaseRingPtr parent, std::vector<RingElem> coeffs) {
    for (const auto& c : coeffs)
        if (!c.parent() || !c.parent()->same_as(*parent))
            throw ParentMismatch("coefficient belongs to a different ring");
    Poly f;
    f.parent_ = std::move(parent);
    f.coeffs_ = normalized(std::move(coeffs));
    return f;
}

Poly Poly::from_ints(BaseRingPtr parent, const std::vector<Int>& coeffs) {
    std::vector<RingElem> elems;
    elems.reserve(coeffs.size());
    for (const auto& c : coeffs) elems.push_back(parent->from_int(c));
    return from_coeffs(std::move(parent), std::move(elems));
}

RingElem Poly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : parent_->zero();
}

Poly Poly::operator+(const Poly& other) const {
    check_same(parent_, other.parent_);
    std::vector<RingElem> out(std::max(coeffs_.size(), other.coeffs_.size()), parent_->zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + other.coeff(i);
    return from_coeffs(parent_, std::move(out));
}

Poly Poly::operator-(const Poly& other) const {
    check_same(parent_, other.parent_);
    std::vector<RingElem> out(std::max(coeffs_.size(), other.coeffs_.size()), parent_->zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - other.coeff(i);
    return from_coeffs(parent_, std::move(out));
}

Poly Poly::operator*(const Poly& other) const {
    check_same(parent_, other.parent_);
    if (is_zero() || other.is_zero()) return zero(parent_);
    std::vector<RingElem> out(coeffs_.size() + other.coeffs_.size() - 1, parent_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] = out[i + j] + coeffs_[i] * other.coeffs_[j];
    return from_coeffs(parent_, std::move(out));
}

Poly Poly::scaled(const RingElem& c) const {
    std::vector<RingElem> out = coeffs_;
    for (auto& e : out) e = e * c;
    return from_coeffs(parent_, std::move(out));
}

bool Poly::operator==(const Poly& other) const {
    return parent_->same_as(*other.parent_) && coeffs_ == other.coeffs_;
}

RingElem Poly::eval(const RingElem& x) const {
    RingElem acc = parent_->zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::string Poly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool needs_coeff = i == 0 || !coeffs_[i].is_one();
        if (needs_coeff) os << coeffs_[i].to_string();
        if (i > 0) {
            if (needs_coeff) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly irreducible_poly(const Int& p, unsigned k) {
    if (!is_prime(p)) throw InputError("irreducible_poly requires a prime");
    if (k < 1) throw InputError("irreducible_poly requires degree >= 1");
    auto field = BaseRing::prime_field(p);
    auto raw = fpx::smallest_irreducible(p.convert_to<std::int64_t>(), k);
    std::vector<RingElem> coeffs;
    coeffs.reserve(raw.size());
    for (std::int64_t c : raw) coeffs.push_back(field->from_int(c));
    return Poly::from_coeffs(field, std::move(coeffs));
}

bool poly_is_irreducible(const Poly& f) {
    if (f.parent()->kind() != RingKind::PrimeField)
        throw InputError("irreducibility test implemented over prime fields only");
    std::vector<std::int64_t> raw;
    raw.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) raw.push_back(c.scalar().convert_to<std::int64_t>());
    return fpx::is_irreducible(raw, f.parent()->scalar_modulus().convert_to<std::int64_t>());
}

Poly lagrange_interpolate(const BaseRingPtr& field, const std::vector<RingElem>& nodes,
                          const std::vector<RingElem>& values) {
    if (!field->is_field()) throw InputError("interpolation requires a field");
    if (nodes.size() != values.size()) throw ShapeMismatch("nodes/values size mismatch");
    Poly acc = Poly::zero(field);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Poly basis = Poly::constant(field->one());
        RingElem denom = field->one();
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            basis = basis * (Poly::variable(field) - Poly::constant(nodes[j]));
            denom = denom * (nodes[i] - nodes[j]);
        }
        acc = acc + basis.scaled(values[i] * field->inverse(denom));
    }
    return acc;
}

// ------------------------------------------------------------------- Poly2

Poly2 Poly2::from_terms(BaseRingPtr parent,
                        std::vector<std::pair<Exponents, RingElem>> terms) {
    Poly2 s(parent);
    for (auto& [e, c] : terms) {
        if (!c.parent() || !c.parent()->same_as(*parent))
            throw ParentMismatch("coefficient belongs to a different ring");
        if (c.is_zero()) continue;
        auto it = s.terms_.find(e);
        if (it == s.terms_.end()) {
            s.terms_.emplace(e, std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) s.terms_.erase(it);
        }
    }
    return s;
}

RingElem Poly2::coeff(unsigned i, unsigned j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? parent_->zero() : it->second;
}

unsigned Poly2::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

Poly2 Poly2::operator+(const Poly2& other) const {
    check_same(parent_, other.parent_);
    std::vector<std::pair<Exponents, RingElem>> terms(terms_.begin(), terms_.end());
    terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
    return from_terms(parent_, std::move(terms));
}

Poly2 Poly2::operator*(const Poly2& other) const {
    check_same(parent_, other.parent_);
    std::vector<std::pair<Exponents, RingElem>> terms;
    terms.reserve(terms_.size() * other.terms_.size());
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_)
            terms.push_back({{e1.first + e2.first, e1.second + e2.second}, c1 * c2});
    return from_terms(parent_, std::move(terms));
}

RingElem Poly2::eval(const RingElem& a, const RingElem& b) const {
    if (!a.parent() || !a.parent()->same_as(*parent_) || !b.parent() ||
        !b.parent()->same_as(*parent_))
        throw ParentMismatch("evaluation points belong to a different ring");
    RingElem acc = parent_->zero();
    for (const auto& [e, c] : terms_)
        acc = acc + c * parent_->pow(a, e.first) * parent_->pow(b, e.second);
    return acc;
}

Poly2 Poly2::map_coeffs(const BaseRingPtr& target,
                        const std::function<RingElem(const RingElem&)>& f) const {
    std::vector<std::pair<Exponents, RingElem>> terms;
    terms.reserve(terms_.size());
    for (const auto& [e, c] : terms_) terms.push_back({e, f(c)});
    return from_terms(target, std::move(terms));
}

std::string Poly2::to_string(const std::string& x, const std::string& y) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const bool unit = c.is_one() && (e.first > 0 || e.second > 0);
        if (!unit) os << c.to_string();
        bool star = !unit;
        auto put = [&](const std::string& v, unsigned exp) {
            if (exp == 0) return;
            if (star) os << "*";
            star = true;
            os << v;
            if (exp > 1) os << "^" << exp;
        };
        put(x, e.first);
        put(y, e.second);
    }
    return os.str();
}

RingElem poly2_eval(const Poly2& s, const RingElem& a, const RingElem& b) {
    return s.eval(a, b);
}

Poly2 bivariate_interpolate(const BaseRingPtr& field, const std::vector<RingElem>& xs,
                            const std::vector<RingElem>& ys,
                            const std::function<RingElem(std::size_t, std::size_t)>& value) {
    if (!field->is_field()) throw InputError("interpolation requires a field");
    // Univariate Lagrange basis in each variable, then the tensor product.
    auto basis_for = [&](const std::vector<RingElem>& nodes, std::size_t i) {
        Poly b = Poly::constant(field->one());
        RingElem denom = field->one();
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            b = b * (Poly::variable(field) - Poly::constant(nodes[j]));
            denom = denom * (nodes[i] - nodes[j]);
        }
        return b.scaled(field->inverse(denom));
    };
    std::vector<std::pair<Poly2::Exponents, RingElem>> terms;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly bx = basis_for(xs, i);
        for (std::size_t j = 0; j < ys.size(); ++j) {
            RingElem v = value(i, j);
            if (v.is_zero()) continue;
            Poly by = basis_for(ys, j);
            for (unsigned a = 0; a < bx.coeffs().size(); ++a)
                for (unsigned b = 0; b < by.coeffs().size(); ++b)
                    terms.push_back({{a, b}, v * bx.coeffs()[a] * by.coeffs()[b]});
        }
    }
    return Poly2::from_terms(field, std::move(terms));
}

}  // namespace ufspec
