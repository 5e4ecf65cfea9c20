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

#include "pathpoly.hpp"

namespace hyperspec {

PathPoly path_charpoly_closed(long j) {
    if (j < -1) throw domain_error("path length must be at least -1");
    if (j == -1) return {-1, IntPoly::one()};
    std::vector<Int> c(static_cast<std::size_t>(j) + 2);
    Int binom;
    for (long q = 0; 2 * q <= j + 1; ++q) {
        // (-1)^q C(j+1-q, q) at exponent j+1-2q
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j + 1 - q), static_cast<unsigned long>(q));
        c[static_cast<std::size_t>(j + 1 - 2 * q)] = (q % 2 == 0) ? binom : -binom;
    }
    return {j, IntPoly(std::move(c))};
}

PathPoly path_charpoly_recurrence(long j) {
    if (j < 1) throw domain_error("the recurrence needs length at least 1");
    IntPoly prev = IntPoly::one();                // length -1
    IntPoly cur = IntPoly::monomial(Int(1), 1);   // length 0
    for (long i = 1; i <= j; ++i) {
        IntPoly next = cur.shifted_up(1) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {j, cur};
}

ParitySplit parity_split(const PathPoly& p) {
    int eps = static_cast<int>((p.j + 1) % 2 + 2) % 2;
    if (p.j == -1) return {0, IntPoly::one()};
    for (std::size_t i = 0; i <= static_cast<std::size_t>(p.poly.degree()); ++i)
        if (p.poly.coeff(i) != 0 && static_cast<long>(i) % 2 != eps)
            throw assembly_error("exponent parity violation in path polynomial");
    IntPoly h = p.poly.shifted_down(static_cast<std::size_t>(eps)).compressed(2);
    return {eps, h};
}

std::vector<Rat> path_eigenvalues(long m) {
    if (m < 0) throw domain_error("path eigenvalues need m >= 0");
    std::vector<Rat> angles;
    angles.reserve(static_cast<std::size_t>(m) + 1);
    for (long t = 1; t <= m + 1; ++t) {
        Rat q(t, m + 2);
        q.canonicalize();
        angles.push_back(q);
    }
    return angles;
}

}  // namespace hyperspec
