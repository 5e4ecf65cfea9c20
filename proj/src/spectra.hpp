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

#ifndef HYPERSPEC_SPECTRA_HPP
#define HYPERSPEC_SPECTRA_HPP

// Exact enumeration of the distinct eigenvalues of hyperpaths. Every
// nonzero eigenvalue is a k-th root of c^2 = 4cos^2(pi q) for a reduced
// angle fraction q, so a descriptor is (q canonicalized to min(q, 1-q),
// phase index theta in 0..k-1); theta = 0 is the principal positive real
// root. Zero membership is read off the factored characteristic
// polynomial (lambda power > 0), not from index ranges.

#include <string>
#include <vector>

#include "intpoly.hpp"
#include "mpreal.hpp"

namespace hyperspec {

struct EigenvalueDescriptor {
    Rat q;          // canonical angle over pi, in (0, 1/2]; 1/2 for the zero value
    int theta = 0;  // 0..k-1
    int k = 2;
    bool is_zero = false;

    bool operator==(const EigenvalueDescriptor& o) const {
        return is_zero == o.is_zero && (is_zero || (q == o.q && theta == o.theta));
    }
    bool operator<(const EigenvalueDescriptor& o) const {
        if (is_zero != o.is_zero) return is_zero;
        if (q != o.q) return q < o.q;
        return theta < o.theta;
    }
};

/// Canonical dedup key min(t/(j+2), 1 - t/(j+2)) in lowest terms; equal
/// keys mean equal |2cos(pi t/(j+2))| values (cos^2 is injective there).
Rat dedup_key(long j, long t);

/// All distinct eigenvalues of the k-uniform hyperpath of length m,
/// sorted (zero first, then by angle and phase).
std::vector<EigenvalueDescriptor> hyperpath_eigenvalues(int m, int k);

/// Complex value of a descriptor at the given precision.
Cplx descriptor_value(const EigenvalueDescriptor& d, mpfr_prec_t prec);

/// |value|: (2cos(pi q))^(2/k), or 0.
Real descriptor_modulus(const EigenvalueDescriptor& d, mpfr_prec_t prec);

struct RadiusResult {
    int m = 1;
    int k = 2;
    EigenvalueDescriptor descriptor;  // q = 1/(m+2), theta = 0
    std::string value;                // decimal rendering
    int precision_bits = 200;
};

/// Spectral radius (2cos(pi/(m+2)))^(2/k) of the hyperpath of length m.
RadiusResult spectral_radius(int m, int k, int precision_bits = 200);

/// Same value as a Real, for numeric comparisons.
Real spectral_radius_value(int m, int k, mpfr_prec_t prec);

/// Distinct-root count of the factored polynomial, computed from the
/// factor structure alone: one zero root if the lambda power is positive,
/// plus k distinct k-th roots per distinct root of the squarefree part of
/// the product of the mu-bases.
long distinct_root_count_from_factors(const FactoredCharPoly& f);

}  // namespace hyperspec

#endif
