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

#include "intpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fp64.hpp"

namespace hyperspec {

IntPoly::IntPoly(const Int& constant) {
    if (constant != 0) c_.push_back(constant);
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const Int& c, std::size_t e) {
    if (c == 0) return IntPoly();
    std::vector<Int> v(e + 1);
    v[e] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long IntPoly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<long>(i);
    return -1;
}

const Int& IntPoly::leading() const {
    if (c_.empty()) throw domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

std::size_t IntPoly::term_count() const {
    std::size_t n = 0;
    for (const Int& c : c_)
        if (c != 0) ++n;
    return n;
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i < c_.size()) v[i] += c_[i];
        if (i < o.c_.size()) v[i] += o.c_[i];
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i < c_.size()) v[i] += c_[i];
        if (i < o.c_.size()) v[i] -= o.c_[i];
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Int& s) const {
    if (s == 0) return IntPoly();
    std::vector<Int> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::stretched(unsigned s) const {
    if (s == 0) throw domain_error("stretch factor must be positive");
    if (s == 1 || is_zero()) return *this;
    std::vector<Int> v(s * (c_.size() - 1) + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * s] = c_[i];
    return IntPoly(std::move(v));
}

bool IntPoly::can_compress(unsigned s) const {
    if (s == 0) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0 && i % s != 0) return false;
    return true;
}

IntPoly IntPoly::compressed(unsigned s) const {
    if (!can_compress(s)) throw domain_error("exponents are not multiples of the compression factor");
    if (s == 1 || is_zero()) return *this;
    std::vector<Int> v(c_.size() / s + 1);
    for (std::size_t i = 0; i < c_.size(); i += s) v[i / s] = c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted_up(std::size_t e) const {
    if (is_zero() || e == 0) return *this;
    std::vector<Int> v(c_.size() + e);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i + e] = c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted_down(std::size_t e) const {
    if (e == 0 || is_zero()) return *this;
    if (c_.size() <= e) throw domain_error("shift exceeds degree");
    for (std::size_t i = 0; i < e; ++i)
        if (c_[i] != 0) throw domain_error("shift would drop a nonzero coefficient");
    return IntPoly(std::vector<Int>(c_.begin() + static_cast<long>(e), c_.end()));
}

Int IntPoly::content() const {
    Int g = 0;
    for (const Int& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Int& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0) out << a.get_str();
        if (i > 0) {
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

IntPoly mul_expand(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Int> v(ac.size() + bc.size() - 1);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) {
            if (bc[j] == 0) continue;
            mpz_addmul(v[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(v));
}

namespace {

void check_terms(const Int& terms, const ExpandBudget& budget) {
    if (terms > Int(static_cast<unsigned long>(budget.max_terms)))
        throw budget_error("expansion would need " + terms.get_str() + " coefficients (budget " +
                           std::to_string(budget.max_terms) + "); keep the factored form");
}

unsigned long to_ulong(const Int& e) {
    if (!e.fits_ulong_p()) throw budget_error("exponent too large: " + e.get_str());
    return e.get_ui();
}

}  // namespace

IntPoly pow_expand(const IntPoly& a, const Int& e, const ExpandBudget& budget) {
    if (e < 0) throw domain_error("negative exponent in pow_expand");
    if (e == 0) return IntPoly::one();
    if (a.is_zero()) return IntPoly();
    check_terms(Int(a.degree()) * e + 1, budget);
    unsigned long n = to_ulong(e);

    if (a.term_count() == 2) {
        // (p x^u + q x^w)^n via the binomial theorem
        std::size_t u = static_cast<std::size_t>(a.valuation());
        std::size_t w = static_cast<std::size_t>(a.degree());
        const Int p = a.coeff(u);
        const Int q = a.coeff(w);
        std::vector<Int> v(w * n + 1);
        Int binom, pp, qq;
        for (unsigned long i = 0; i <= n; ++i) {
            mpz_bin_uiui(binom.get_mpz_t(), n, i);
            mpz_pow_ui(pp.get_mpz_t(), p.get_mpz_t(), n - i);
            mpz_pow_ui(qq.get_mpz_t(), q.get_mpz_t(), i);
            v[u * (n - i) + w * i] = binom * pp * qq;
        }
        return IntPoly(std::move(v));
    }

    IntPoly acc = IntPoly::one();
    IntPoly sq = a;
    while (true) {
        if (n & 1) acc = mul_expand(acc, sq);
        n >>= 1;
        if (n == 0) break;
        sq = mul_expand(sq, sq);
    }
    return acc;
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw domain_error("division by the zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) throw assembly_error("exact division failed: degree too small");
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const auto& bc = b.coeffs();
    const Int& lead = b.leading();
    for (long i = a.degree() - b.degree(); i >= 0; --i) {
        Int& top = rem[static_cast<std::size_t>(i + b.degree())];
        if (top == 0) continue;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) throw assembly_error("exact division failed: leading coefficient does not divide");
        quot[static_cast<std::size_t>(i)] = q;
        for (std::size_t j = 0; j < bc.size(); ++j)
            mpz_submul(rem[static_cast<std::size_t>(i) + j].get_mpz_t(), q.get_mpz_t(), bc[j].get_mpz_t());
    }
    for (const Int& c : rem)
        if (c != 0) throw assembly_error("exact division failed: nonzero remainder");
    return IntPoly(std::move(quot));
}

IntPoly derivative(const IntPoly& a) {
    if (a.degree() <= 0) return IntPoly();
    std::vector<Int> v(static_cast<std::size_t>(a.degree()));
    for (std::size_t i = 1; i <= static_cast<std::size_t>(a.degree()); ++i)
        v[i - 1] = a.coeff(i) * Int(static_cast<unsigned long>(i));
    return IntPoly(std::move(v));
}

namespace {

IntPoly primitive_part(const IntPoly& a) {
    if (a.is_zero()) return a;
    IntPoly p = divexact(a, IntPoly(a.content()));
    return p.leading() < 0 ? -p : p;
}

// pseudo-remainder of a by b (lead(b)^(deg a - deg b + 1) * a mod b)
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    const Int& lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        long shift = r.degree() - b.degree();
        IntPoly t = (b * r.leading()).shifted_up(static_cast<std::size_t>(shift));
        r = r * lb - t;
    }
    return r;
}

}  // namespace

IntPoly gcd_poly(const IntPoly& a, const IntPoly& b) {
    IntPoly x = primitive_part(a);
    IntPoly y = primitive_part(b);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = primitive_part(pseudo_rem(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

long distinct_root_count(const IntPoly& p) {
    if (p.degree() <= 0) return 0;
    IntPoly g = gcd_poly(p, derivative(p));
    return p.degree() - g.degree();
}

Rat eval_exact(const IntPoly& p, const Rat& x) {
    Rat acc = 0;
    for (long i = p.degree(); i >= 0; --i) acc = acc * x + Rat(p.coeff(static_cast<std::size_t>(i)));
    return acc;
}

QuadExt QuadExt::operator+(const QuadExt& o) const { return {a + o.a, b + o.b, r, s}; }
QuadExt QuadExt::operator-(const QuadExt& o) const { return {a - o.a, b - o.b, r, s}; }

QuadExt QuadExt::operator*(const QuadExt& o) const {
    // (a1 + b1 u)(a2 + b2 u) with u^2 = r + s u
    return {a * o.a + b * o.b * r, a * o.b + b * o.a + b * o.b * s, r, s};
}

QuadExt QuadExt::inverse() const {
    // conjugate root is s - u; norm = (a + b u)(a + b(s - u)) = a^2 + a b s - b^2 r
    Rat norm = a * a + a * b * s - b * b * r;
    if (norm == 0) throw domain_error("element is not invertible in the quadratic extension");
    return {(a + b * s) / norm, -b / norm, r, s};
}

QuadExt QuadExt::pow(const Int& e) const {
    if (e < 0) throw domain_error("negative exponent in QuadExt::pow");
    unsigned long n = to_ulong(e);
    QuadExt acc(1, 0, r, s);
    QuadExt sq = *this;
    while (n) {
        if (n & 1) acc = acc * sq;
        sq = sq * sq;
        n >>= 1;
    }
    return acc;
}

QuadExt eval_exact(const IntPoly& p, const QuadExt& x) {
    QuadExt acc(0, 0, x.r, x.s);
    for (long i = p.degree(); i >= 0; --i)
        acc = acc * x + QuadExt(Rat(p.coeff(static_cast<std::size_t>(i))), 0, x.r, x.s);
    return acc;
}

std::uint64_t eval_mod(const IntPoly& p, std::uint64_t x, std::uint64_t q) {
    x %= q;
    std::uint64_t acc = 0;
    for (long i = p.degree(); i >= 0; --i) {
        std::uint64_t c = mpz_fdiv_ui(p.coeff(static_cast<std::size_t>(i)).get_mpz_t(), q);
        acc = fp::add(fp::mul(acc, x, q), c, q);
    }
    return acc;
}

std::vector<std::uint64_t> interpolate_mod(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points,
                                           std::size_t d, std::uint64_t q) {
    if (points.size() < d + 1) throw domain_error("interpolation needs at least d+1 points");
    if (q <= d + 1) throw domain_error("prime too small for the degree bound");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first % q == points[j].first % q) throw domain_error("duplicate abscissa");

    // master = prod_{i <= d} (x - x_i)
    std::vector<std::uint64_t> master(d + 2, 0);
    master[0] = 1;
    std::size_t len = 1;
    for (std::size_t i = 0; i <= d; ++i) {
        std::uint64_t nxi = fp::neg(points[i].first % q, q);
        for (std::size_t j = len; j >= 1; --j) master[j] = fp::add(master[j - 1], fp::mul(master[j], nxi, q), q);
        master[0] = fp::mul(master[0], nxi, q);
        ++len;
    }

    std::vector<std::uint64_t> result(d + 1, 0);
    std::vector<std::uint64_t> quot(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        std::uint64_t xi = points[i].first % q;
        std::uint64_t yi = points[i].second % q;
        // quot = master / (x - xi) by synthetic division
        quot[d] = master[d + 1];
        for (std::size_t j = d; j-- > 0;) quot[j] = fp::add(master[j + 1], fp::mul(xi, quot[j + 1], q), q);
        std::uint64_t denom = 0;
        for (std::size_t j = d + 1; j-- > 0;) denom = fp::add(fp::mul(denom, xi, q), quot[j], q);
        std::uint64_t w = fp::mul(yi, fp::inv(denom, q), q);
        for (std::size_t j = 0; j <= d; ++j) result[j] = fp::add(result[j], fp::mul(quot[j], w, q), q);
    }

    // consistency check on any extra points
    for (std::size_t i = d + 1; i < points.size(); ++i) {
        std::uint64_t xi = points[i].first % q;
        std::uint64_t acc = 0;
        for (std::size_t j = d + 1; j-- > 0;) acc = fp::add(fp::mul(acc, xi, q), result[j], q);
        if (acc != points[i].second % q) throw domain_error("inconsistent overdetermined interpolation input");
    }
    return result;
}

IntPoly interpolate_mod_poly(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points, std::size_t d,
                             std::uint64_t q) {
    auto r = interpolate_mod(points, d, q);
    std::vector<Int> v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) v[i] = Int(static_cast<unsigned long>(r[i]));
    return IntPoly(std::move(v));
}

void FactoredCharPoly::canonicalize() {
    if (k < 2) throw domain_error("uniformity k must be at least 2");
    int sign = 1;
    std::map<std::pair<unsigned, std::vector<Int>>, Int> merged;
    for (auto& f : factors) {
        if (f.exp == 0) continue;
        if (f.base.is_zero()) throw assembly_error("zero base in factored characteristic polynomial");
        IntPoly base = f.base;
        if (base.leading() < 0) {
            base = -base;
            if (mpz_odd_p(f.exp.get_mpz_t())) sign = -sign;
        }
        if (base.degree() == 0) {
            if (base.coeff(0) != 1) throw assembly_error("non-unit constant factor; the product is not monic");
            continue;
        }
        if (base.content() != 1) throw assembly_error("non-primitive base; the product is not monic");
        unsigned scale = f.scale;
        if (scale != 1 && scale != static_cast<unsigned>(k))
            throw assembly_error("factor scale must be 1 or k");
        if (scale == 1 && base.can_compress(static_cast<unsigned>(k))) {
            base = base.compressed(static_cast<unsigned>(k));
            scale = static_cast<unsigned>(k);
        }
        merged[{scale, base.coeffs()}] += f.exp;
    }
    if (sign != 1) throw assembly_error("net sign -1; the product is not monic");

    factors.clear();
    for (auto& [key, exp] : merged) {
        if (exp == 0) continue;
        if (exp < 0) throw assembly_error("negative factor exponent after merging");
        factors.push_back({IntPoly(key.second), key.first, exp});
    }
    std::sort(factors.begin(), factors.end(), [this](const CharPolyFactor& x, const CharPolyFactor& y) {
        bool xmu = x.scale == static_cast<unsigned>(k), ymu = y.scale == static_cast<unsigned>(k);
        if (xmu != ymu) return xmu;
        long dx = x.base.degree() * static_cast<long>(x.scale);
        long dy = y.base.degree() * static_cast<long>(y.scale);
        if (dx != dy) return dx < dy;
        Int cx = abs(x.base.coeff(0)), cy = abs(y.base.coeff(0));
        if (cx != cy) return cx < cy;
        return x.base.coeffs() < y.base.coeffs();
    });
}

Rat FactoredCharPoly::degree_lambda() const {
    Rat d = lambda_exponent;
    for (const auto& f : factors) d += Rat(f.exp * f.base.degree() * f.scale);
    return d;
}

IntPoly FactoredCharPoly::expand(const ExpandBudget& budget) const {
    if (!is_integer(lambda_exponent) || lambda_exponent < 0)
        throw assembly_error("lambda exponent " + lambda_exponent.get_str() + " is not a nonnegative integer");
    Rat deg = degree_lambda();
    check_terms(to_integer(deg) + 1, budget);

    IntPoly acc_mu = IntPoly::one();
    IntPoly acc_lambda = IntPoly::one();
    for (const auto& f : factors) {
        IntPoly powed = pow_expand(f.base, f.exp, budget);
        if (f.scale == static_cast<unsigned>(k))
            acc_mu = mul_expand(acc_mu, powed);
        else
            acc_lambda = mul_expand(acc_lambda, powed.stretched(f.scale));
    }
    IntPoly result = mul_expand(acc_mu.stretched(static_cast<unsigned>(k)), acc_lambda);
    result = result.shifted_up(static_cast<std::size_t>(to_ulong(to_integer(lambda_exponent))));
    if (!result.is_zero() && result.leading() != 1)
        throw assembly_error("expanded characteristic polynomial is not monic");
    return result;
}

namespace {

std::uint64_t pow_with_fermat(std::uint64_t base, const Int& e, std::uint64_t p) {
    if (e == 0) return 1;
    if (base == 0) return 0;
    std::uint64_t r = mpz_fdiv_ui(e.get_mpz_t(), p - 1);
    // a^(p-1) = 1, so e = 0 mod p-1 means exponent p-1, not 0
    if (r == 0) r = p - 1;
    return fp::pow(base, r, p);
}

}  // namespace

std::uint64_t eval_factored_mod(const FactoredCharPoly& f, std::uint64_t x, std::uint64_t p) {
    x %= p;
    Int lam = to_integer(f.lambda_exponent);
    if (lam < 0) throw assembly_error("negative lambda exponent");
    std::uint64_t acc = pow_with_fermat(x, lam, p);
    for (const auto& fac : f.factors) {
        std::uint64_t arg = fp::pow(x, fac.scale, p);
        std::uint64_t val = eval_mod(fac.base, arg, p);
        acc = fp::mul(acc, pow_with_fermat(val, fac.exp, p), p);
    }
    return acc;
}

FactoredCharPoly factored_from_intpoly(const IntPoly& p, int k) {
    if (p.is_zero()) throw domain_error("the zero polynomial is not a characteristic polynomial");
    FactoredCharPoly f;
    f.k = k;
    long val = p.valuation();
    f.lambda_exponent = Rat(static_cast<long>(val));
    IntPoly rest = p.shifted_down(static_cast<std::size_t>(val));
    if (rest.degree() > 0) f.factors.push_back({rest, 1, Int(1)});
    f.canonicalize();
    return f;
}

}  // namespace hyperspec
