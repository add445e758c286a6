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

#ifndef UFSPEC_POLY_HPP
#define UFSPEC_POLY_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ufspec/base_ring.hpp"

namespace ufspec {

/// Univariate polynomial over a BaseRing, low degree first, normalized
/// (no trailing zero coefficients; the zero polynomial has none).
class Poly {
public:
    static Poly zero(BaseRingPtr parent);
    static Poly constant(const RingElem& c);
    static Poly variable(BaseRingPtr parent);
    static Poly from_coeffs(BaseRingPtr parent, std::vector<RingElem> coeffs);
    static Poly from_ints(BaseRingPtr parent, const std::vector<Int>& coeffs);

    const BaseRingPtr& parent() const { return parent_; }
    const std::vector<RingElem>& coeffs() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
    RingElem coeff(std::size_t i) const;

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly scaled(const RingElem& c) const;
    bool operator==(const Poly& other) const;

    RingElem eval(const RingElem& x) const;

    std::string to_string(const std::string& var = "t") const;

private:
    BaseRingPtr parent_;
    std::vector<RingElem> coeffs_;
};

/// The first monic irreducible polynomial of degree k over F_p, ordered by
/// the value sum_i c_i p^i of the below-leading coefficients (so t^2+t+1
/// for (2,2) and t^3+t+1 for (2,3)).
Poly irreducible_poly(const Int& p, unsigned k);

/// Trial-division irreducibility over a prime field.
bool poly_is_irreducible(const Poly& f);

/// Univariate Lagrange interpolation over a field: the unique polynomial
/// of degree < |nodes| with f(nodes[i]) = values[i]. Nodes must be
/// pairwise distinct.
Poly lagrange_interpolate(const BaseRingPtr& field, const std::vector<RingElem>& nodes,
                          const std::vector<RingElem>& values);

/// Bivariate polynomial sum c_ij x^i y^j; only nonzero coefficients are
/// stored, in lexicographic (i, j) order.
class Poly2 {
public:
    using Exponents = std::pair<unsigned, unsigned>;

    explicit Poly2(BaseRingPtr parent) : parent_(std::move(parent)) {}
    static Poly2 from_terms(BaseRingPtr parent,
                            std::vector<std::pair<Exponents, RingElem>> terms);

    const BaseRingPtr& parent() const { return parent_; }
    const std::map<Exponents, RingElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RingElem coeff(unsigned i, unsigned j) const;
    bool has_zero_constant_term() const { return coeff(0, 0).is_zero(); }
    unsigned total_degree() const;

    Poly2 operator+(const Poly2& other) const;
    Poly2 operator*(const Poly2& other) const;

    RingElem eval(const RingElem& a, const RingElem& b) const;

    /// Coefficient-wise image under `f` into `target` (used for lifting
    /// residue-field combiners to D and reducing them back).
    Poly2 map_coeffs(const BaseRingPtr& target,
                     const std::function<RingElem(const RingElem&)>& f) const;

    std::string to_string(const std::string& x = "x", const std::string& y = "y") const;

private:
    BaseRingPtr parent_;
    std::map<Exponents, RingElem> terms_;
};

/// Spec operation poly2_eval: sum c_ij a^i b^j.
RingElem poly2_eval(const Poly2& s, const RingElem& a, const RingElem& b);

/// Bivariate interpolation over a field on the grid xs x ys: the unique
/// polynomial of degree < |xs| in x and < |ys| in y with
/// s(xs[i], ys[j]) = value(i, j).
Poly2 bivariate_interpolate(const BaseRingPtr& field, const std::vector<RingElem>& xs,
                            const std::vector<RingElem>& ys,
                            const std::function<RingElem(std::size_t, std::size_t)>& value);

}  // namespace ufspec

#endif
