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

#ifndef UFSPEC_FPX_HPP
#define UFSPEC_FPX_HPP

#include <cstdint>
#include <vector>

namespace ufspec::fpx {

// Arithmetic in F_p[t] on raw coefficient vectors, low degree first,
// normalized (no trailing zeros; the zero polynomial is the empty vector).
// Coefficients are canonical representatives in [0, p).

using Coeffs = std::vector<std::int64_t>;

Coeffs normalize(Coeffs f);
Coeffs add(const Coeffs& f, const Coeffs& g, std::int64_t p);
Coeffs sub(const Coeffs& f, const Coeffs& g, std::int64_t p);
Coeffs mul(const Coeffs& f, const Coeffs& g, std::int64_t p);

/// Remainder of f modulo a monic divisor.
Coeffs rem(Coeffs f, const Coeffs& monic, std::int64_t p);

/// Quotient and remainder by a monic divisor.
std::pair<Coeffs, Coeffs> divmod(Coeffs f, const Coeffs& monic, std::int64_t p);

/// Inverse of f modulo a monic irreducible polynomial (extended Euclid).
Coeffs inverse_mod(const Coeffs& f, const Coeffs& modulus, std::int64_t p);

/// Irreducibility by trial division by every monic polynomial of degree
/// <= deg(f)/2.
bool is_irreducible(const Coeffs& f, std::int64_t p);

/// The first monic irreducible polynomial of degree k over F_p, in
/// increasing order of the coefficient value sum_i c_i p^i.
Coeffs smallest_irreducible(std::int64_t p, unsigned k);

/// Monic degree-k polynomial whose below-leading coefficients are the
/// base-p digits of `value` (c_i = digit i).
Coeffs monic_from_value(std::uint64_t value, unsigned k, std::int64_t p);

}  // namespace ufspec::fpx

#endif
