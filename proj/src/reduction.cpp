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

#include "reduction.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "pathpoly.hpp"

namespace hyperspec {

namespace {

Int ipow(long base, long e) {
    if (e < 0) throw domain_error("negative exponent in ipow");
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return r;
}

Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// (k-1)^e for a possibly negative e, as an exact rational.
Rat signed_pow_km1(int k, long e) {
    Int p = ipow(k - 1, e < 0 ? -e : e);
    if (e >= 0) return Rat(p);
    return Rat(1) / Rat(p);
}

// z^zval * base(lambda^scale) with lambda = z^2; scale is k when the
// exponents allow mu = lambda^k, else 1.
struct ZDecomp {
    long zval = 0;
    IntPoly base;  // nonzero constant term, positive leading coefficient
    unsigned scale = 1;
    int sign = 1;  // -1 when the leading coefficient had to be flipped
};

ZDecomp decompose_z(const IntPoly& p, int k) {
    if (p.is_zero()) throw assembly_error("zero polynomial in an assembled product");
    ZDecomp d;
    d.zval = p.valuation();
    IntPoly rest = p.shifted_down(static_cast<std::size_t>(d.zval));
    if (!rest.can_compress(2))
        throw assembly_error("half powers of lambda do not cancel in the assembled product");
    IntPoly in_lambda = rest.compressed(2);
    if (in_lambda.can_compress(static_cast<unsigned>(k))) {
        d.base = in_lambda.compressed(static_cast<unsigned>(k));
        d.scale = static_cast<unsigned>(k);
    } else {
        d.base = in_lambda;
        d.scale = 1;
    }
    if (d.base.leading() < 0) {
        d.base = -d.base;
        d.sign = -1;
    }
    return d;
}

/// Accumulates a product of lambda powers, factored characteristic
/// polynomials and M-atoms, then clears denominators into a
/// FactoredCharPoly.
class Assembler {
   public:
    explicit Assembler(int k) : k_(k) {}

    void mul_lambda_power(const Rat& e) { zpow_ += 2 * e; }

    void mul_charpoly(const FactoredCharPoly& f, const Int& weight) {
        if (f.k != k_) throw domain_error("uniformity mismatch in assembly");
        zpow_ += 2 * f.lambda_exponent * Rat(weight);
        for (const auto& fac : f.factors) mul_base(fac.base, fac.scale, fac.exp * weight);
    }

    /// (num/den)^exp, polynomials in z
    void mul_fraction_z(const IntPoly& num, const IntPoly& den, const Int& exp) {
        mul_poly_z(num, exp);
        mul_poly_z(den, -exp);
    }

    void mul_poly_z(const IntPoly& p, const Int& exp) {
        if (exp == 0) return;
        ZDecomp d = decompose_z(p, k_);
        if (d.sign < 0 && mpz_odd_p(exp.get_mpz_t())) sign_ = -sign_;
        zpow_ += Rat(d.zval) * Rat(exp);
        if (d.base.degree() == 0) {
            if (d.base.coeff(0) != 1)
                throw assembly_error("non-unit constant in assembled product; result would not be monic");
            return;
        }
        if (d.base.content() != 1)
            throw assembly_error("non-primitive factor in assembled product; result would not be monic");
        mul_base(d.base, d.scale, exp);
    }

    FactoredCharPoly finish() {
        clear_denominators();
        if (sign_ != 1) throw assembly_error("assembled product has sign -1; not a characteristic polynomial");
        if (!is_integer(zpow_) || mpz_odd_p(to_integer(zpow_).get_mpz_t()) || zpow_ < 0)
            throw assembly_error("assembled lambda power " + Rat(zpow_ / 2).get_str() +
                                 " is not a nonnegative integer");
        FactoredCharPoly out;
        out.k = k_;
        out.lambda_exponent = zpow_ / 2;
        for (auto& [key, exp] : fac_) {
            if (exp == 0) continue;
            out.factors.push_back({IntPoly(key.second), key.first, exp});
        }
        out.canonicalize();
        return out;
    }

   private:
    using Key = std::pair<unsigned, std::vector<Int>>;

    int k_;
    Rat zpow_ = 0;
    int sign_ = 1;
    std::map<Key, Int> fac_;

    void mul_base(const IntPoly& base, unsigned scale, const Int& exp) {
        // normalize scale exactly like FactoredCharPoly::canonicalize
        IntPoly b = base;
        unsigned s = scale;
        if (s == 1 && b.can_compress(static_cast<unsigned>(k_))) {
            b = b.compressed(static_cast<unsigned>(k_));
            s = static_cast<unsigned>(k_);
        }
        fac_[{s, b.coeffs()}] += exp;
    }

    // A base with a negative net exponent must divide the positive part.
    // Identical bases have already cancelled through the exponent map, so
    // any survivor is searched for as an exact divisor of some positive
    // base (in z-representation); that base is then split and the walk
    // repeats. Required for soundness only; the constructive families
    // cancel key-by-key.
    void clear_denominators() {
        for (int round = 0; round < 256; ++round) {
            auto neg = std::find_if(fac_.begin(), fac_.end(), [](const auto& kv) { return kv.second < 0; });
            if (neg == fac_.end()) return;
            IntPoly d_z = IntPoly(neg->first.second).stretched(neg->first.first).stretched(2);
            bool split = false;
            for (auto& [key, exp] : fac_) {
                if (exp <= 0 || key == neg->first) continue;
                IntPoly p_z = IntPoly(key.second).stretched(key.first).stretched(2);
                if (p_z.degree() <= d_z.degree()) continue;
                IntPoly q_z;
                try {
                    q_z = divexact(p_z, d_z);
                } catch (const assembly_error&) {
                    continue;
                }
                Int e = exp;
                exp = 0;
                fac_[neg->first] += e;
                mul_poly_z(q_z, e);
                split = true;
                break;
            }
            if (!split)
                throw assembly_error("denominator " + IntPoly(neg->first.second).to_string("y") +
                                     " does not divide the assembled product");
        }
        throw assembly_error("denominator clearing did not terminate");
    }
};

MAtom reduce_atom(IntPoly num, IntPoly den, Int exp) {
    long v = std::min(num.valuation(), den.valuation());
    if (v > 0) {
        num = num.shifted_down(static_cast<std::size_t>(v));
        den = den.shifted_down(static_cast<std::size_t>(v));
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num.content().get_mpz_t(), den.content().get_mpz_t());
    if (g > 1) {
        num = divexact(num, IntPoly(g));
        den = divexact(den, IntPoly(g));
    }
    return {std::move(num), std::move(den), std::move(exp)};
}

}  // namespace

ReductionConstants reduction_constants(int k) {
    if (k < 2) throw domain_error("uniformity k must be at least 2");
    ReductionConstants c;
    c.k = k;
    c.k2 = ipow(k, k - 2);
    c.k1 = ipow(k - 1, k - 1) - c.k2;
    if (c.k1 < 0) throw assembly_error("negative origin multiplicity");
    return c;
}

Int charpoly_degree_for(int n_vertices, int k) {
    if (n_vertices < 0) throw domain_error("negative vertex count");
    if (n_vertices == 0) return 0;
    return Int(n_vertices) * ipow(k - 1, n_vertices - 1);
}

FactoredCharPoly single_edge_charpoly(int k) {
    auto c = reduction_constants(k);
    FactoredCharPoly f;
    f.k = k;
    f.lambda_exponent = Rat(Int(k) * ipow(k - 1, k - 1) - ipow(k, k - 1));
    std::vector<Int> mu_minus_1 = {Int(-1), Int(1)};
    f.factors.push_back({IntPoly(mu_minus_1), static_cast<unsigned>(k), c.k2});
    f.canonicalize();
    if (f.degree_lambda() != Rat(charpoly_degree_for(k, k)))
        throw assembly_error("single-edge degree check failed");
    return f;
}

ExponentTable a_exponents(int m, int k) {
    if (m < 1) throw domain_error("hyperpath length must be at least 1");
    auto c = reduction_constants(k);
    ExponentTable t;
    t.m = m;
    t.k = k;
    t.a.assign(static_cast<std::size_t>(m) + 1, Rat(0));

    t.a[static_cast<std::size_t>(m)] = Rat(ipow(c.k2, static_cast<unsigned long>(m)));
    for (int j = 1; j <= m - 1; ++j) {
        Rat v = Rat(Int(m - j + 1) * c.k1 + 2 * c.k2);
        v *= Rat(c.k1 * ipow(c.k2, static_cast<unsigned long>(j)));
        v *= signed_pow_km1(k, static_cast<long>(m - j - 2) * (k - 1));
        t.a[static_cast<std::size_t>(j)] = v;
    }
    Rat head = make_rat(2, k) * Rat(Int(m) * (k - 1) + 1) * Rat(ipow(k - 1, static_cast<long>(m) * (k - 1)));
    for (int r = 1; r <= m; ++r) head -= Rat(r + 1) * t.a[static_cast<std::size_t>(r)];
    t.a[0] = head;

    for (int j = 1; j <= m; ++j)
        if (!is_integer(t.a[static_cast<std::size_t>(j)]))
            throw assembly_error("internal consistency: a(" + std::to_string(j) + "," + std::to_string(m) +
                                 ") = " + t.a[static_cast<std::size_t>(j)].get_str() + " is not an integer");

    // degree identity: sum (j+1)(k/2) a(j,m) = n(k-1)^(n-1), n = m(k-1)+1
    Rat total = 0;
    for (int j = 0; j <= m; ++j) total += Rat(j + 1) * make_rat(k, 2) * t.a[static_cast<std::size_t>(j)];
    if (total != Rat(charpoly_degree_for(m * (k - 1) + 1, k)))
        throw assembly_error("internal consistency: exponent table degree identity failed");
    return t;
}

FactoredCharPoly hyperpath_charpoly(int m, int k) {
    ExponentTable t = a_exponents(m, k);
    FactoredCharPoly f;
    f.k = k;
    Rat lampow = 0;
    for (int j = 0; j <= m; ++j) {
        auto split = parity_split(path_charpoly_closed(j));
        lampow += make_rat(k, 2) * Rat(split.eps) * t.a[static_cast<std::size_t>(j)];
        if (split.h.degree() > 0)
            f.factors.push_back({split.h, static_cast<unsigned>(k), to_integer(t.a[static_cast<std::size_t>(j)])});
    }
    if (!is_integer(lampow) || lampow < 0)
        throw assembly_error("internal consistency: hyperpath lambda power " + lampow.get_str() +
                             " is not a nonnegative integer");
    f.lambda_exponent = lampow;
    f.canonicalize();
    if (f.degree_lambda() != Rat(charpoly_degree_for(m * (k - 1) + 1, k)))
        throw assembly_error("internal consistency: hyperpath degree identity failed");
    return f;
}

FactoredCharPoly charpoly_pow_shift(const FactoredCharPoly& base, const Int& w, const Rat& extra_lambda) {
    if (w < 0) throw domain_error("negative power of a characteristic polynomial");
    FactoredCharPoly out;
    out.k = base.k;
    out.lambda_exponent = base.lambda_exponent * Rat(w) + extra_lambda;
    for (const auto& fac : base.factors) out.factors.push_back({fac.base, fac.scale, fac.exp * w});
    out.canonicalize();
    return out;
}

FactoredCharPoly hyperpath_minus_pendant_charpoly(int m, int k) {
    if (m < 1) throw domain_error("hyperpath length must be at least 1");
    FactoredCharPoly base;
    if (m == 1) {
        // one-vertex hypergraph: phi = lambda
        base.k = k;
        base.lambda_exponent = 1;
    } else {
        base = hyperpath_charpoly(m - 1, k);
    }
    FactoredCharPoly out = charpoly_pow_shift(
        base, ipow(k - 1, k - 2), Rat(Int(k - 2) * ipow(k - 1, static_cast<long>(m) * (k - 1) - 1)));
    if (out.degree_lambda() != Rat(charpoly_degree_for(m * (k - 1), k)))
        throw assembly_error("internal consistency: pendant-removed hyperpath degree failed");
    return out;
}

MExpression m_expression_hyperpath(int m, int k) {
    if (m < 0) throw domain_error("hyperpath length must be at least 0");
    if (k < 2) throw domain_error("uniformity k must be at least 2");
    MExpression e;
    e.k = k;
    std::vector<Int> z2 = {Int(0), Int(0), Int(1)};
    if (m == 0) {
        e.atoms.push_back({IntPoly(z2), IntPoly::one(), Int(1)});
        return e;
    }
    auto c = reduction_constants(k);
    Int s_total = c.k1 + c.k2;  // (k-1)^(k-1)

    Int lead = c.k1 * ipow(s_total, static_cast<unsigned long>(m - 1));
    if (lead != 0) e.atoms.push_back({IntPoly(z2), IntPoly::one(), lead});

    auto path_at_zk = [&](long j) { return path_charpoly_closed(j).poly.stretched(static_cast<unsigned>(k)); };
    for (int j = 1; j <= m - 1; ++j) {
        Int exp = ipow(s_total, static_cast<unsigned long>(m - 1 - j)) * c.k1 *
                  ipow(c.k2, static_cast<unsigned long>(j));
        if (exp == 0) continue;
        IntPoly den = path_at_zk(j - 1).shifted_up(static_cast<std::size_t>(k - 2));
        e.atoms.push_back(reduce_atom(path_at_zk(j), std::move(den), exp));
    }
    IntPoly den = path_at_zk(m - 1).shifted_up(static_cast<std::size_t>(k - 2));
    e.atoms.push_back(reduce_atom(path_at_zk(m), std::move(den), ipow(c.k2, static_cast<unsigned long>(m))));
    return e;
}

MExpression translate_m(const MExpression& expr, unsigned t, unsigned max_t) {
    if (t > max_t)
        throw domain_error("translation parameter " + std::to_string(t) + " exceeds the bound " +
                           std::to_string(max_t));
    MExpression out;
    out.k = expr.k;
    std::size_t shift = 2 * static_cast<std::size_t>(expr.k - 1);  // lambda^(k-1) in z units
    for (const auto& atom : expr.atoms) {
        IntPoly num = atom.num.shifted_up(shift) - atom.den * Int(static_cast<long>(t));
        IntPoly den = atom.den.shifted_up(shift);
        out.atoms.push_back(reduce_atom(std::move(num), std::move(den), atom.exp));
    }
    return out;
}

Rat m_expression_eval(const MExpression& expr, const Rat& lambda) {
    QuadExt acc(1, 0, lambda, 0);  // u = sqrt(lambda)
    QuadExt u(0, 1, lambda, 0);
    for (const auto& atom : expr.atoms) {
        QuadExt num = eval_exact(atom.num, u);
        QuadExt den = eval_exact(atom.den, u);
        acc = acc * (num * den.inverse()).pow(atom.exp);
    }
    if (!acc.is_rational())
        throw assembly_error("M-expression value is irrational at lambda = " + lambda.get_str());
    return acc.a;
}

namespace {

MExpression combine_pendant_m(const MExpression& m_h, const MExpression& m_shifted, const Int& k1,
                              const Int& k2) {
    // M_{H_v}(., 0) = M_H(., 0)^K1 * M_H(., 1/lambda^(k-1))^K2, merged per atom
    std::map<std::pair<std::vector<Int>, std::vector<Int>>, Int> merged;
    auto add = [&](const MExpression& e, const Int& w) {
        if (w == 0) return;
        for (const auto& a : e.atoms) merged[{a.num.coeffs(), a.den.coeffs()}] += a.exp * w;
    };
    add(m_h, k1);
    add(m_shifted, k2);
    MExpression out;
    out.k = m_h.k;
    for (auto& [key, exp] : merged) {
        if (exp == 0) continue;
        out.atoms.push_back({IntPoly(key.first), IntPoly(key.second), exp});
    }
    return out;
}

}  // namespace

PendantResult attach_pendant(const MExpression& m_h, const FactoredCharPoly& phi_h_minus_v, int n, int k) {
    if (n < 1) throw domain_error("hypergraph must have at least one vertex");
    if (m_h.k != k || phi_h_minus_v.k != k) throw domain_error("uniformity mismatch");
    auto c = reduction_constants(k);
    MExpression shifted = translate_m(m_h, 1);

    Assembler asmb(k);
    asmb.mul_lambda_power(Rat(ipow(k - 1, n + k - 1)));
    asmb.mul_charpoly(phi_h_minus_v, ipow(k - 1, k));
    for (const auto& a : m_h.atoms) asmb.mul_fraction_z(a.num, a.den, a.exp * c.k1);
    for (const auto& a : shifted.atoms) asmb.mul_fraction_z(a.num, a.den, a.exp * c.k2);

    PendantResult r;
    r.charpoly = asmb.finish();
    if (r.charpoly.degree_lambda() != Rat(charpoly_degree_for(n + k - 1, k)))
        throw assembly_error("pendant attachment degree check failed");
    r.m_next = combine_pendant_m(m_h, shifted, c.k1, c.k2);
    return r;
}

FactoredCharPoly attach_pendant_multi(const MExpression& m_h, const FactoredCharPoly& phi_h_minus_v, int n,
                                      int k, int s) {
    if (s < 1) throw domain_error("need at least one pendant edge");
    if (n < 1) throw domain_error("hypergraph must have at least one vertex");
    if (m_h.k != k || phi_h_minus_v.k != k) throw domain_error("uniformity mismatch");
    auto c = reduction_constants(k);

    Assembler asmb(k);
    asmb.mul_lambda_power(Rat(Int(s) * ipow(k - 1, n + s * (k - 1))));
    asmb.mul_charpoly(phi_h_minus_v, ipow(k - 1, s * (k - 1) + 1));
    Int binom;
    for (int t = 0; t <= s; ++t) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(s), static_cast<unsigned long>(t));
        Int w = binom * ipow(c.k1, static_cast<unsigned long>(s - t)) * ipow(c.k2, static_cast<unsigned long>(t));
        if (w == 0) continue;
        MExpression mt = translate_m(m_h, static_cast<unsigned>(t));
        for (const auto& a : mt.atoms) asmb.mul_fraction_z(a.num, a.den, a.exp * w);
    }
    FactoredCharPoly out = asmb.finish();
    if (out.degree_lambda() != Rat(charpoly_degree_for(n + s * (k - 1), k)))
        throw assembly_error("multi-pendant attachment degree check failed");
    return out;
}

FactoredCharPoly hyperpath_charpoly_by_induction(int m, int k) {
    if (m < 1) throw domain_error("hyperpath length must be at least 1");
    FactoredCharPoly phi_prev;  // P_0: one vertex, phi = lambda
    phi_prev.k = k;
    phi_prev.lambda_exponent = 1;
    FactoredCharPoly empty;
    empty.k = k;
    FactoredCharPoly phi = attach_pendant(m_expression_hyperpath(0, k), empty, 1, k).charpoly;
    for (int mm = 1; mm < m; ++mm) {
        FactoredCharPoly minus = charpoly_pow_shift(
            phi_prev, ipow(k - 1, k - 2), Rat(Int(k - 2) * ipow(k - 1, static_cast<long>(mm) * (k - 1) - 1)));
        FactoredCharPoly next =
            attach_pendant(m_expression_hyperpath(mm, k), minus, mm * (k - 1) + 1, k).charpoly;
        phi_prev = std::move(phi);
        phi = std::move(next);
    }
    return phi;
}

FactoredCharPoly hyperstar_charpoly(int s, int k) {
    FactoredCharPoly empty;  // zero-vertex hypergraph: phi = 1
    empty.k = k;
    return attach_pendant_multi(m_expression_hyperpath(0, k), empty, 1, k, s);
}

FactoredCharPoly broom_charpoly(int m, int s, int k) {
    return attach_pendant_multi(m_expression_hyperpath(m, k), hyperpath_minus_pendant_charpoly(m, k),
                                m * (k - 1) + 1, k, s);
}

}  // namespace hyperspec
