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

#include "ufspec/integer.hpp"

#include "ufspec/errors.hpp"

namespace ufspec {

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n > Int(1) << 31)
        throw InputError("primality test limited to candidates below 2^31, got " + n.str());
    std::uint64_t v = n.convert_to<std::uint64_t>();
    if (v % 2 == 0) return v == 2;
    for (std::uint64_t d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

unsigned valuation(Int n, const Int& p) {
    if (n == 0) throw InputError("valuation of 0 is undefined");
    if (n < 0) n = -n;
    unsigned m = 0;
    while (n % p == 0) {
        n /= p;
        ++m;
    }
    return m;
}

unsigned factorial_valuation(unsigned d, const Int& p) {
    unsigned total = 0;
    Int q = p;
    while (q <= d) {
        total += static_cast<unsigned>(Int(d / q).convert_to<std::uint64_t>());
        q *= p;
    }
    return total;
}

Int binomial(const Int& a, unsigned n) {
    // c stays integral throughout: after step i it equals C(a, i+1).
    Int c = 1;
    for (unsigned i = 0; i < n; ++i) {
        c *= a - i;
        c /= Int(i) + 1;
    }
    return c;
}

Int inverse_mod(const Int& a, const Int& m) {
    Int old_r = mod_floor(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw NotAUnit("no inverse of " + a.str() + " modulo " + m.str());
    return mod_floor(old_s, m);
}

Int pow_int(Int base, unsigned exp) {
    Int result = 1;
    while (exp > 0) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

}  // namespace ufspec
