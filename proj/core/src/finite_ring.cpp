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

#include "ufspec/finite_ring.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "ufspec/errors.hpp"

namespace ufspec {

namespace {

constexpr std::uint64_t kMaxCoordSize = 65535;
constexpr std::size_t kEagerTableLimit = 2048;

}  // namespace

bool FiniteRing::homogeneous() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i]->same_as(*coords_[0])) return false;
    return true;
}

std::optional<std::uint32_t> FiniteRing::index_of(const Tuple& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

FiniteRing::Tuple FiniteRing::op_tuple(const Tuple& a, const Tuple& b, bool multiply) const {
    Tuple out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const CoordOps& ops = coord_ops_[coord_ops_of_[i]];
        const std::uint32_t q = ops.q;
        out[i] = multiply ? ops.mul[a[i] * q + b[i]] : ops.add[a[i] * q + b[i]];
    }
    return out;
}

std::uint32_t FiniteRing::add(std::uint32_t a, std::uint32_t b) const {
    if (!add_tab_.empty()) return add_tab_[a * elems_.size() + b];
    auto idx = index_of(op_tuple(elems_[a], elems_[b], false));
    if (!idx) throw CheckFailed("ring is not closed under addition");
    return *idx;
}

std::uint32_t FiniteRing::mul(std::uint32_t a, std::uint32_t b) const {
    if (!mul_tab_.empty()) return mul_tab_[a * elems_.size() + b];
    auto idx = index_of(op_tuple(elems_[a], elems_[b], true));
    if (!idx) throw CheckFailed("ring is not closed under multiplication");
    return *idx;
}

std::uint32_t FiniteRing::neg(std::uint32_t a) const {
    Tuple out(elems_[a].size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = coord_ops_[coord_ops_of_[i]].neg[elems_[a][i]];
    auto idx = index_of(out);
    if (!idx) throw CheckFailed("ring is not closed under negation");
    return *idx;
}

std::uint32_t FiniteRing::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::optional<std::uint32_t> FiniteRing::constant(std::uint64_t coord_elem_index) const {
    if (!homogeneous()) throw InputError("constants require homogeneous coordinates");
    Tuple t(coords_.size(), static_cast<std::uint16_t>(coord_elem_index));
    return index_of(t);
}

RingElem FiniteRing::coord_elem(std::uint32_t elem, std::size_t coord) const {
    return coords_[coord]->element(elems_[elem][coord]);
}

std::string FiniteRing::elem_to_string(std::uint32_t index) const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ",";
        os << coords_[i]->element(elems_[index][i]).to_string();
    }
    os << ")";
    return os.str();
}

void FiniteRing::build_coord_ops() {
    // Per-coordinate operation tables, shared between equal coordinate rings.
    if (!coord_ops_of_.empty()) return;
    coord_ops_of_.assign(coords_.size(), 0);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        std::size_t found = coord_ops_.size();
        for (std::size_t j = 0; j < i; ++j)
            if (coords_[i]->same_as(*coords_[j])) {
                found = coord_ops_of_[j];
                break;
            }
        if (found == coord_ops_.size()) {
            const std::uint64_t q = coords_[i]->size();
            if (q > kMaxCoordSize) throw TooLarge("coordinate ring too large");
            CoordOps ops;
            ops.q = static_cast<std::uint32_t>(q);
            ops.add.resize(q * q);
            ops.mul.resize(q * q);
            ops.neg.resize(q);
            std::vector<RingElem> elems;
            elems.reserve(q);
            for (std::uint64_t v = 0; v < q; ++v) elems.push_back(coords_[i]->element(v));
            for (std::uint64_t a = 0; a < q; ++a) {
                ops.neg[a] = static_cast<std::uint16_t>(coords_[i]->index_of(-elems[a]));
                for (std::uint64_t b = 0; b < q; ++b) {
                    ops.add[a * q + b] =
                        static_cast<std::uint16_t>(coords_[i]->index_of(elems[a] + elems[b]));
                    ops.mul[a * q + b] =
                        static_cast<std::uint16_t>(coords_[i]->index_of(elems[a] * elems[b]));
                }
            }
            coord_ops_.push_back(std::move(ops));
        }
        coord_ops_of_[i] = static_cast<std::uint32_t>(found);
    }
}

void FiniteRing::finalize() {
    build_coord_ops();
    std::sort(elems_.begin(), elems_.end());
    index_.clear();
    index_.reserve(elems_.size() * 2);
    for (std::uint32_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);

    Tuple zero(coords_.size()), one(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        zero[i] = static_cast<std::uint16_t>(coords_[i]->index_of(coords_[i]->zero()));
        one[i] = static_cast<std::uint16_t>(coords_[i]->index_of(coords_[i]->one()));
    }
    auto zi = index_of(zero), oi = index_of(one);
    if (!zi || !oi) throw CheckFailed("ring does not contain 0 and 1");
    zero_ = *zi;
    one_ = *oi;

    if (elems_.size() <= kEagerTableLimit) {
        const std::size_t n = elems_.size();
        add_tab_.resize(n * n);
        mul_tab_.resize(n * n);
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = a; b < n; ++b) {
                auto s = index_of(op_tuple(elems_[a], elems_[b], false));
                auto m = index_of(op_tuple(elems_[a], elems_[b], true));
                if (!s || !m) throw CheckFailed("ring is not closed under its operations");
                add_tab_[a * n + b] = add_tab_[b * n + a] = *s;
                mul_tab_[a * n + b] = mul_tab_[b * n + a] = *m;
            }
    }
}

FiniteRingPtr FiniteRing::closure(std::vector<BaseRingPtr> coords,
                                  const std::vector<Tuple>& generators, std::uint64_t cap) {
    if (coords.empty()) throw InputError("closure requires at least one coordinate");
    for (const auto& c : coords)
        if (!c->is_finite()) throw InputError("coordinate rings must be finite");

    auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
    ring->coords_ = std::move(coords);
    const std::size_t n = ring->coords_.size();

    std::unordered_map<Tuple, std::uint32_t, TupleHash> seen;
    std::vector<Tuple> list;
    std::deque<std::size_t> queue;
    auto push = [&](Tuple t) {
        if (seen.contains(t)) return;
        if (list.size() >= cap)
            throw TooLarge("ring closure exceeds cap of " + std::to_string(cap) + " elements");
        seen.emplace(t, static_cast<std::uint32_t>(list.size()));
        queue.push_back(list.size());
        list.push_back(std::move(t));
    };

    if (ring->homogeneous()) {
        const std::uint64_t q = ring->coords_[0]->size();
        if (q > kMaxCoordSize) throw TooLarge("coordinate ring too large");
        for (std::uint64_t c = 0; c < q; ++c) push(Tuple(n, static_cast<std::uint16_t>(c)));
    } else {
        Tuple zero(n), one(n);
        for (std::size_t i = 0; i < n; ++i) {
            zero[i] = static_cast<std::uint16_t>(ring->coords_[i]->index_of(ring->coords_[i]->zero()));
            one[i] = static_cast<std::uint16_t>(ring->coords_[i]->index_of(ring->coords_[i]->one()));
        }
        push(zero);
        push(one);
    }
    for (const auto& g : generators) {
        if (g.size() != n) throw ShapeMismatch("generator tuple has wrong arity");
        for (std::size_t i = 0; i < n; ++i)
            if (g[i] >= ring->coords_[i]->size())
                throw InputError("generator coordinate index out of range");
        push(g);
    }

    ring->build_coord_ops();
    while (!queue.empty()) {
        const std::size_t ia = queue.front();
        queue.pop_front();
        for (std::size_t ib = 0; ib < list.size(); ++ib) {
            // list may reallocate inside push; copy the operands first
            Tuple a = list[ia];
            Tuple b = list[ib];
            push(ring->op_tuple(a, b, false));
            push(ring->op_tuple(a, b, true));
        }
    }

    ring->elems_ = std::move(list);
    ring->finalize();
    return ring;
}

FiniteRingPtr FiniteRing::full(const BaseRingPtr& base) {
    if (!base->is_finite()) throw InputError("full ring requires a finite base ring");
    auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
    ring->coords_ = {base};
    const std::uint64_t q = base->size();
    if (q > kMaxCoordSize) throw TooLarge("base ring too large");
    for (std::uint64_t v = 0; v < q; ++v) ring->elems_.push_back({static_cast<std::uint16_t>(v)});
    ring->finalize();
    return ring;
}

FiniteRingPtr FiniteRing::product(const std::vector<FiniteRingPtr>& factors, std::uint64_t cap) {
    if (factors.empty()) throw InputError("product requires at least one factor");
    std::uint64_t total = 1;
    for (const auto& f : factors) {
        total *= f->size();
        if (total > cap) throw TooLarge("product exceeds cap");
    }
    auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
    for (const auto& f : factors)
        for (std::size_t i = 0; i < f->coord_count(); ++i)
            ring->coords_.push_back(f->coord_ring(i));

    ring->elems_.reserve(total);
    std::vector<std::uint32_t> counter(factors.size(), 0);
    while (true) {
        Tuple t;
        for (std::size_t fi = 0; fi < factors.size(); ++fi) {
            const Tuple& part = factors[fi]->tuple(counter[fi]);
            t.insert(t.end(), part.begin(), part.end());
        }
        ring->elems_.push_back(std::move(t));
        std::size_t fi = factors.size();
        while (fi-- > 0) {
            if (++counter[fi] < factors[fi]->size()) break;
            counter[fi] = 0;
            if (fi == 0) {
                ring->finalize();
                return ring;
            }
        }
    }
}

// ------------------------------------------------------------- FiniteIdeal

FiniteIdeal FiniteIdeal::unchecked(FiniteRingPtr parent, std::vector<std::uint32_t> members) {
    FiniteIdeal ideal;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    ideal.mask_.assign(parent->size(), false);
    for (auto m : members) ideal.mask_[m] = true;
    ideal.parent_ = std::move(parent);
    ideal.members_ = std::move(members);
    return ideal;
}

FiniteIdeal FiniteIdeal::from_members(FiniteRingPtr parent, std::vector<std::uint32_t> members) {
    FiniteIdeal ideal = unchecked(std::move(parent), std::move(members));
    const auto& ring = ideal.parent_;
    if (ideal.members_.empty() || !ideal.contains(ring->zero()))
        throw InputError("ideal must contain 0");
    for (auto a : ideal.members_) {
        for (auto b : ideal.members_)
            if (!ideal.contains(ring->add(a, b)))
                throw InputError("ideal is not closed under addition");
        for (std::uint32_t r = 0; r < ring->size(); ++r)
            if (!ideal.contains(ring->mul(a, r)))
                throw InputError("ideal is not closed under ring multiplication");
    }
    return ideal;
}

FiniteIdeal FiniteIdeal::generated_by(FiniteRingPtr parent,
                                      const std::vector<std::uint32_t>& generators) {
    const auto& ring = parent;
    std::vector<bool> mask(ring->size(), false);
    std::vector<std::uint32_t> members;
    std::deque<std::uint32_t> queue;
    auto push = [&](std::uint32_t x) {
        if (mask[x]) return;
        mask[x] = true;
        members.push_back(x);
        queue.push_back(x);
    };
    push(ring->zero());
    // r*g for all ring elements r covers the generators themselves (r = 1).
    for (auto g : generators)
        for (std::uint32_t r = 0; r < ring->size(); ++r) push(ring->mul(g, r));
    while (!queue.empty()) {
        const std::uint32_t a = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < members.size(); ++i) push(ring->add(a, members[i]));
    }
    return unchecked(parent, std::move(members));
}

bool FiniteIdeal::operator<(const FiniteIdeal& other) const {
    if (members_.size() != other.members_.size()) return members_.size() < other.members_.size();
    return members_ < other.members_;
}

FiniteIdeal FiniteIdeal::sum(const FiniteIdeal& other) const {
    if (parent_ != other.parent_) throw ParentMismatch("ideal sum requires the same parent ring");
    std::vector<bool> mask(parent_->size(), false);
    std::vector<std::uint32_t> members;
    for (auto a : members_)
        for (auto b : other.members_) {
            const std::uint32_t s = parent_->add(a, b);
            if (!mask[s]) {
                mask[s] = true;
                members.push_back(s);
            }
        }
    return unchecked(parent_, std::move(members));
}

}  // namespace ufspec
