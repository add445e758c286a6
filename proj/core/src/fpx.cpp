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

#include "ufspec/fpx.hpp"

#include <cassert>

#include "ufspec/errors.hpp"
#include "ufspec/integer.hpp"

namespace ufspec::fpx {

namespace {

std::int64_t mod_p(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

std::int64_t inv_p(std::int64_t v, std::int64_t p) {
    return ufspec::inverse_mod(Int(v), Int(p)).convert_to<std::int64_t>();
}

}  // namespace

Coeffs normalize(Coeffs f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Coeffs add(const Coeffs& f, const Coeffs& g, std::int64_t p) {
    Coeffs r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t v = (i < f.size() ? f[i] : 0) + (i < g.size() ? g[i] : 0);
        r[i] = mod_p(v, p);
    }
    return normalize(std::move(r));
}

Coeffs sub(const Coeffs& f, const Coeffs& g, std::int64_t p) {
    Coeffs r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t v = (i < f.size() ? f[i] : 0) - (i < g.size() ? g[i] : 0);
        r[i] = mod_p(v, p);
    }
    return normalize(std::move(r));
}

Coeffs mul(const Coeffs& f, const Coeffs& g, std::int64_t p) {
    if (f.empty() || g.empty()) return {};
    Coeffs r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] = mod_p(r[i + j] + f[i] * g[j], p);
    return normalize(std::move(r));
}

std::pair<Coeffs, Coeffs> divmod(Coeffs f, const Coeffs& monic, std::int64_t p) {
    assert(!monic.empty() && monic.back() == 1);
    const std::size_t d = monic.size() - 1;
    if (f.size() <= d) return {{}, normalize(std::move(f))};
    Coeffs q(f.size() - d, 0);
    for (std::size_t i = f.size(); i-- > d;) {
        std::int64_t c = mod_p(f[i], p);
        if (c == 0) continue;
        q[i - d] = c;
        for (std::size_t j = 0; j <= d; ++j)
            f[i - d + j] = mod_p(f[i - d + j] - c * monic[j], p);
    }
    return {normalize(std::move(q)), normalize(std::move(f))};
}

Coeffs rem(Coeffs f, const Coeffs& monic, std::int64_t p) {
    return divmod(std::move(f), monic, p).second;
}

Coeffs inverse_mod(const Coeffs& f, const Coeffs& modulus, std::int64_t p) {
    // Extended Euclid in F_p[t]; the modulus is irreducible, so any
    // nonzero f is invertible.
    Coeffs r0 = modulus, r1 = rem(f, modulus, p);
    if (r1.empty()) throw NotAUnit("zero has no inverse in the extension field");
    Coeffs s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // Make r1 monic for divmod, tracking the scale.
        std::int64_t lead = r1.back();
        if (lead != 1) {
            std::int64_t li = inv_p(lead, p);
            for (auto& c : r1) c = mod_p(c * li, p);
            for (auto& c : s1) c = mod_p(c * li, p);
        }
        auto [q, r2] = divmod(r0, r1, p);
        Coeffs s2 = sub(s0, mul(q, s1, p), p);
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(r2);
        s1 = std::move(s2);
    }
    // r0 is the (monic) gcd; it must be a nonzero constant = 1.
    if (r0.size() != 1)
        throw NotAUnit("element shares a factor with the modulus");
    return rem(std::move(s0), modulus, p);
}

bool is_irreducible(const Coeffs& f, std::int64_t p) {
    if (f.size() < 2) return false;  // constants are not irreducible
    const unsigned k = static_cast<unsigned>(f.size() - 1);
    if (k == 1) return true;
    for (unsigned d = 1; 2 * d <= k; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t v = 0; v < count; ++v) {
            Coeffs g = monic_from_value(v, d, p);
            if (rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

Coeffs monic_from_value(std::uint64_t value, unsigned k, std::int64_t p) {
    Coeffs f(k + 1, 0);
    for (unsigned i = 0; i < k; ++i) {
        f[i] = static_cast<std::int64_t>(value % static_cast<std::uint64_t>(p));
        value /= static_cast<std::uint64_t>(p);
    }
    f[k] = 1;
    return f;
}

Coeffs smallest_irreducible(std::int64_t p, unsigned k) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t v = 0; v < count; ++v) {
        Coeffs f = monic_from_value(v, k, p);
        if (is_irreducible(f, p)) return f;
    }
    throw CheckFailed("no irreducible polynomial found (unreachable)");
}

}  // namespace ufspec::fpx
