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

#ifndef UFSPEC_INTEGER_HPP
#define UFSPEC_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace ufspec {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Canonical representative of a mod m, in [0, m). Requires m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

/// Deterministic primality by trial division. Intended for desk-scale
/// inputs (below 2^31); larger candidates are rejected.
bool is_prime(const Int& n);

/// p-adic valuation v_p(n) for n != 0.
unsigned valuation(Int n, const Int& p);

/// v_p(d!) via Legendre's formula.
unsigned factorial_valuation(unsigned d, const Int& p);

/// Binomial coefficient C(a, n) for arbitrary integer a (falling
/// factorial divided by n!; exact).
Int binomial(const Int& a, unsigned n);

/// Modular inverse of a mod m; throws NotAUnit when gcd(a, m) != 1.
Int inverse_mod(const Int& a, const Int& m);

Int pow_int(Int base, unsigned exp);

}  // namespace ufspec

#endif
