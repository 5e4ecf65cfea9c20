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

#ifndef HYPERSPEC_MPREAL_HPP
#define HYPERSPEC_MPREAL_HPP

// Minimal RAII wrapper over MPFR binary floats at an explicit bit
// precision, plus a complex pair. Only the handful of operations the
// spectra module and the residual checks need.

#include <mpfr.h>

#include <string>
#include <utility>

#include "intpoly.hpp"

namespace hyperspec {

class Real {
   public:
    explicit Real(mpfr_prec_t prec = 200) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    Real& operator=(Real o) { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static Real of(long x, mpfr_prec_t prec) { Real r(prec); mpfr_set_si(r.v_, x, MPFR_RNDN); return r; }
    static Real of(const Int& x, mpfr_prec_t prec) { Real r(prec); mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN); return r; }
    static Real of(const Rat& x, mpfr_prec_t prec) { Real r(prec); mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN); return r; }
    static Real pi(mpfr_prec_t prec) { Real r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }

    friend Real operator+(const Real& a, const Real& b) { Real r(a.prec()); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, const Real& b) { Real r(a.prec()); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, const Real& b) { Real r(a.prec()); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, const Real& b) { Real r(a.prec()); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    Real abs() const { Real r(prec()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    Real cos() const { Real r(prec()); mpfr_cos(r.v_, v_, MPFR_RNDN); return r; }
    Real sin() const { Real r(prec()); mpfr_sin(r.v_, v_, MPFR_RNDN); return r; }
    Real sqrt() const { Real r(prec()); mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
    /// k-th root; requires a nonnegative operand for even k.
    Real rootn(unsigned long k) const { Real r(prec()); mpfr_rootn_ui(r.v_, v_, k, MPFR_RNDN); return r; }
    Real pow_ui(unsigned long e) const { Real r(prec()); mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN); return r; }

    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    friend bool operator<(const Real& a, const Real& b) { return a.cmp(b) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return a.cmp(b) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return a.cmp(b) <= 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Shortest faithful decimal rendering at this precision.
    std::string str() const {
        char* s = nullptr;
        // ~ prec * log10(2) significant digits
        int digits = static_cast<int>(static_cast<double>(prec()) * 0.30103) + 1;
        if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0) throw error("mpfr_asprintf failed");
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

   private:
    mpfr_t v_;
};

struct Cplx {
    Real re, im;

    explicit Cplx(mpfr_prec_t prec = 200) : re(prec), im(prec) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Real abs() const { return (re * re + im * im).sqrt(); }
};

/// Horner evaluation of an integer polynomial at a complex point.
inline Cplx eval_real(const IntPoly& p, const Cplx& x, mpfr_prec_t prec) {
    Cplx acc(prec);
    for (long i = p.degree(); i >= 0; --i) {
        acc = acc * x;
        acc.re = acc.re + Real::of(p.coeff(static_cast<std::size_t>(i)), prec);
    }
    return acc;
}

}  // namespace hyperspec

#endif
