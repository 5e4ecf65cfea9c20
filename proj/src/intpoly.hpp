/*
   Copyright 2026 hyperspec contributors

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

#ifndef HYPERSPEC_INTPOLY_HPP
#define HYPERSPEC_INTPOLY_HPP

// Exact univariate polynomial arithmetic over arbitrary-precision integers,
// plus the factored characteristic-polynomial form used everywhere else in
// the library: an exact power of lambda times integer-polynomial bases in
// mu = lambda^k raised to big-integer exponents.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace hyperspec {

using Int = mpz_class;
using Rat = mpq_class;

/// Rational exponents (always canonical: lowest terms, denominator > 0;
/// mpq_class maintains this under arithmetic).
using RatExp = mpq_class;

inline bool is_integer(const Rat& q) { return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0; }

/// mpq_class(a, b) does not reduce; every ratio construction goes through
/// here so mpq_equal comparisons stay sound.
inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int to_integer(const Rat& q) {
    if (!is_integer(q)) throw assembly_error("expected integral value, got " + q.get_str());
    return q.get_num();
}

/// Expansion guard: refuses to materialize more coefficients than this.
struct ExpandBudget {
    std::size_t max_terms = 10'000'000;
};

/// Dense univariate polynomial with mpz coefficients, index = exponent.
/// The zero polynomial has an empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(const Int& constant);
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly(Int(1)); }
    /// c * x^e
    static IntPoly monomial(const Int& c, std::size_t e);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    /// Lowest exponent with nonzero coefficient; -1 for the zero polynomial.
    long valuation() const;
    const Int& leading() const;
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const std::vector<Int>& coeffs() const { return c_; }
    std::size_t term_count() const;

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const Int& s) const;

    /// x -> x^s (exponent stretch).
    IntPoly stretched(unsigned s) const;
    /// true when every exponent with nonzero coefficient is a multiple of s
    bool can_compress(unsigned s) const;
    /// inverse of stretched(); throws domain_error unless can_compress(s)
    IntPoly compressed(unsigned s) const;
    /// multiply by x^e
    IntPoly shifted_up(std::size_t e) const;
    /// divide by x^e; throws if any lower coefficient is nonzero
    IntPoly shifted_down(std::size_t e) const;

    /// gcd of all coefficients (nonnegative; 0 for the zero polynomial)
    Int content() const;

    std::string to_string(const std::string& var = "x") const;

   private:
    std::vector<Int> c_;
    void trim();
};

/// Exact product; deg(a*b) = deg a + deg b for nonzero inputs.
IntPoly mul_expand(const IntPoly& a, const IntPoly& b);

/// Exact power. Uses the binomial theorem when the base has two terms,
/// binary exponentiation otherwise. Refuses with budget_error when the
/// expanded coefficient count would exceed the budget.
IntPoly pow_expand(const IntPoly& a, const Int& e, const ExpandBudget& budget = {});

/// Exact quotient a / b; throws assembly_error when b does not divide a
/// over the integers.
IntPoly divexact(const IntPoly& a, const IntPoly& b);

IntPoly derivative(const IntPoly& a);

/// Primitive gcd over Z (primitive pseudo-remainder sequence); result has
/// positive leading coefficient.
IntPoly gcd_poly(const IntPoly& a, const IntPoly& b);

/// deg(p / gcd(p, p')): the number of distinct complex roots of p.
long distinct_root_count(const IntPoly& p);

/// Horner evaluation over the rationals.
Rat eval_exact(const IntPoly& p, const Rat& x);

/// Element of the quadratic extension Q[u] / (u^2 - s*u - r): value a + b*u.
/// Covers exact complex points with rational parts (u = i: r=-1, s=0),
/// roots of unity (u = primitive cube root: r=-1, s=-1) and square roots
/// of rationals (u = sqrt(d): r=d, s=0).
struct QuadExt {
    Rat a, b;
    Rat r, s;

    QuadExt(Rat a_, Rat b_, Rat r_, Rat s_)
        : a(std::move(a_)), b(std::move(b_)), r(std::move(r_)), s(std::move(s_)) {}

    bool is_rational() const { return b == 0; }

    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt inverse() const;
    QuadExt pow(const Int& e) const;
    bool operator==(const QuadExt& o) const { return a == o.a && b == o.b; }
};

/// Horner evaluation in a quadratic extension.
QuadExt eval_exact(const IntPoly& p, const QuadExt& x);

/// p(x) mod q, by Horner with reduced coefficients.
std::uint64_t eval_mod(const IntPoly& p, std::uint64_t x, std::uint64_t q);

/// Unique polynomial of degree <= d through the given points mod prime q
/// (Lagrange form). Duplicate abscissae or inconsistent extra points raise
/// domain_error.
std::vector<std::uint64_t> interpolate_mod(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points,
                                           std::size_t d, std::uint64_t q);

/// Same, packaged as an IntPoly with coefficients in [0, q).
IntPoly interpolate_mod_poly(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points, std::size_t d,
                             std::uint64_t q);

/// One factor of a FactoredCharPoly: base(lambda^scale) ^ exp.
/// scale == k means the base is a polynomial in mu = lambda^k (the normal
/// case); scale == 1 keeps the base in lambda itself, needed only for k=2
/// graph polynomials whose even/odd parts mix.
struct CharPolyFactor {
    IntPoly base;
    unsigned scale = 1;
    Int exp;

    bool operator==(const CharPolyFactor& o) const = default;
};

/// A characteristic polynomial kept in factored form:
///     lambda^lambda_exponent * prod_i base_i(lambda^scale_i)^exp_i.
/// lambda_exponent is carried as an exact rational; it must be a
/// nonnegative integer by the time a fully assembled characteristic
/// polynomial is expanded or serialized.
struct FactoredCharPoly {
    int k = 2;
    RatExp lambda_exponent = 0;
    std::vector<CharPolyFactor> factors;

    /// Normalizes bases (positive leading coefficient, mu-scale whenever
    /// the exponents allow), absorbs constants, merges equal bases, sorts
    /// by (degree, |constant term|, coefficients) and drops zero exponents.
    /// Throws assembly_error if a non-unit constant or a net sign other
    /// than +1 shows up: characteristic polynomials are monic.
    void canonicalize();

    /// Total degree in lambda: lambda_exponent + sum exp*scale*deg(base).
    Rat degree_lambda() const;

    /// Dense polynomial in lambda. Throws assembly_error on a fractional
    /// or negative lambda_exponent and budget_error past the term budget.
    IntPoly expand(const ExpandBudget& budget = {}) const;

    bool operator==(const FactoredCharPoly& o) const = default;
};

/// lambda^valuation * (rest), with the rest expressed in the coarsest
/// variable the exponents allow: mu = lambda^k if possible, else lambda.
/// Exactly one factor unless p is constant.
FactoredCharPoly factored_from_intpoly(const IntPoly& p, int k);

/// f(x) mod p straight from the factored form; huge exponents are reduced
/// via Fermat. Requires an integral lambda_exponent.
std::uint64_t eval_factored_mod(const FactoredCharPoly& f, std::uint64_t x, std::uint64_t p);

}  // namespace hyperspec

#endif
