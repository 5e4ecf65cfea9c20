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

#ifndef HYPERSPEC_PATHPOLY_HPP
#define HYPERSPEC_PATHPOLY_HPP

// Characteristic polynomials and eigenvalues of ordinary path graphs.
// These are the building blocks of every hyperpath closed form: the path
// polynomial of length j is
//     sum_q (-1)^q C(j+1-q, q) x^(j+1-2q),
// equivalently the three-term recurrence p_j = x p_{j-1} - p_{j-2} seeded
// with p_{-1} = 1, p_0 = x. Its roots are 2cos(pi t/(j+2)), t = 1..j+1.

#include <vector>

#include "intpoly.hpp"

namespace hyperspec {

/// Path polynomial of length j together with its length tag.
/// j = -1 is the empty path with polynomial 1.
struct PathPoly {
    long j = -1;
    IntPoly poly = IntPoly::one();
};

/// Closed-form coefficients. Throws domain_error for j < -1.
PathPoly path_charpoly_closed(long j);

/// Same polynomial by the three-term recurrence (j >= 1). Equals the
/// closed form exactly; kept separate so tests can pit one against the
/// other.
PathPoly path_charpoly_recurrence(long j);

/// Every exponent of a path polynomial shares the parity of j+1, so it
/// splits as x^eps * h(x^2) with eps = (j+1) mod 2 and deg h = floor((j+1)/2).
/// Throws assembly_error on a parity violation (corrupted input).
struct ParitySplit {
    int eps = 0;
    IntPoly h;
};
ParitySplit parity_split(const PathPoly& p);

/// The m+1 distinct path eigenvalues 2cos(pi t/(m+2)) as reduced angle
/// fractions t/(m+2), t = 1..m+1.
std::vector<Rat> path_eigenvalues(long m);

}  // namespace hyperspec

#endif
