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

#include "spectra.hpp"

#include <set>

#include "reduction.hpp"

namespace hyperspec {

Rat dedup_key(long j, long t) {
    if (t < 1 || t > j + 1) throw domain_error("eigenvalue index t out of range");
    Rat q(t, j + 2);
    q.canonicalize();
    Rat mirror = 1 - q;
    return q < mirror ? q : mirror;
}

std::vector<EigenvalueDescriptor> hyperpath_eigenvalues(int m, int k) {
    if (m < 1) throw domain_error("hyperpath length must be at least 1");
    if (k < 2) throw domain_error("uniformity k must be at least 2");

    std::set<EigenvalueDescriptor> out;
    FactoredCharPoly phi = hyperpath_charpoly(m, k);
    if (phi.lambda_exponent > 0) out.insert({Rat(1, 2), 0, k, true});

    // only lengths whose factor actually appears contribute roots; for
    // k = 2 that is j = m alone (every shorter factor has exponent 0),
    // which keeps the set equal to the root set of phi
    ExponentTable tbl = a_exponents(m, k);
    for (long j = 1; j <= m; ++j) {
        if (tbl.a[static_cast<std::size_t>(j)] == 0) continue;
        for (long t = 1; t <= j + 1; ++t) {
            Rat key = dedup_key(j, t);
            if (key == Rat(1, 2)) continue;  // 2cos = 0; collapses into the zero root
            for (int theta = 0; theta < k; ++theta) out.insert({key, theta, k, false});
        }
    }
    return {out.begin(), out.end()};
}

Real descriptor_modulus(const EigenvalueDescriptor& d, mpfr_prec_t prec) {
    if (d.is_zero) return Real(prec);
    Real angle = Real::pi(prec) * Real::of(d.q, prec);
    Real c = Real::of(2, prec) * angle.cos();
    return (c * c).rootn(static_cast<unsigned long>(d.k));
}

Cplx descriptor_value(const EigenvalueDescriptor& d, mpfr_prec_t prec) {
    Cplx v(prec);
    if (d.is_zero) return v;
    Real mod = descriptor_modulus(d, prec);
    Real phase = Real::of(2 * d.theta, prec) * Real::pi(prec) / Real::of(d.k, prec);
    v.re = mod * phase.cos();
    v.im = mod * phase.sin();
    return v;
}

Real spectral_radius_value(int m, int k, mpfr_prec_t prec) {
    if (m < 1) throw domain_error("hyperpath length must be at least 1");
    if (k < 2) throw domain_error("uniformity k must be at least 2");
    EigenvalueDescriptor d{Rat(1, m + 2), 0, k, false};
    return descriptor_modulus(d, prec);
}

RadiusResult spectral_radius(int m, int k, int precision_bits) {
    if (precision_bits < 32) throw domain_error("precision must be at least 32 bits");
    RadiusResult r;
    r.m = m;
    r.k = k;
    r.descriptor = {Rat(1, m + 2), 0, k, false};
    r.precision_bits = precision_bits;
    r.value = spectral_radius_value(m, k, precision_bits).str();
    return r;
}

long distinct_root_count_from_factors(const FactoredCharPoly& f) {
    long count = f.lambda_exponent > 0 ? 1 : 0;
    IntPoly prod = IntPoly::one();
    for (const auto& fac : f.factors) {
        if (fac.scale != static_cast<unsigned>(f.k))
            throw domain_error("root counting needs all bases in mu");
        if (fac.base.coeff(0) == 0)
            throw domain_error("root counting needs bases without zero roots");
        prod = mul_expand(prod, fac.base);
    }
    count += f.k * distinct_root_count(prod);
    return count;
}

}  // namespace hyperspec
