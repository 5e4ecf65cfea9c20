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

#ifndef HYPERSPEC_ORACLE_HPP
#define HYPERSPEC_ORACLE_HPP

// Brute-force characteristic polynomials from first principles, used as
// ground truth against the closed forms. Two routes, neither of which
// touches the reduction module:
//   - k = 2: det(lambda I - A) by fraction-free (Bareiss) elimination
//     over integer polynomials;
//   - any k: the Macaulay resultant of the system
//     lambda x_i^(k-1) - sum x^(e \ i), evaluated as det(M)/det(M') at
//     word-prime sample points, interpolated in lambda, and lifted by CRT
//     until the coefficients are certified.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypergraph.hpp"
#include "intpoly.hpp"

namespace hyperspec {

struct OracleBudget {
    long max_dimension = 512;       // Macaulay matrix side
    int max_primes = 32;            // CRT primes per attempt
    int max_transform_attempts = 2; // random unimodular retries after the plain system fails
    std::uint64_t seed = 1;         // drives the retry transforms
};

enum class OracleMethod { matrix, macaulay };

struct CharPolyResult {
    IntPoly poly;
    OracleMethod method = OracleMethod::matrix;
    std::vector<std::uint64_t> primes_used;
    long sample_count = 0;
};

/// det(lambda I - A) for a graph (k = 2 only); exact.
CharPolyResult matrix_charpoly(const Hypergraph& h);

/// Exact integer determinant (Bareiss); exposed for tests.
Int bareiss_det(std::vector<std::vector<Int>> m);

/// The Macaulay matrix of a homogeneous system of n polynomials of degree
/// k-1 in n variables: rows and columns indexed by the monomials of degree
/// D = n(k-2)+1; the row of monomial x^a holds the coefficients of
/// (x^a / x_i^(k-1)) F_i where i is the smallest index with a_i >= k-1.
/// Entries are linear in lambda. The designated minor M' lives on the
/// monomials divisible by x_i^(k-1) for at least two i.
class MacaulayMatrix {
   public:
    MacaulayMatrix(const PolySystem& sys, long max_dimension);

    long dimension() const { return dim_; }
    long minor_dimension() const { return static_cast<long>(minor_rows_.size()); }

    /// det(M)(x) / det(M')(x) mod p; false when det(M')(x) = 0 mod p.
    /// Pure; safe to call concurrently across (x, p) pairs.
    bool ratio_mod(std::uint64_t x, std::uint64_t p, std::uint64_t& out) const;

   private:
    struct Entry {
        long col;
        Int c0;  // constant part
        Int c1;  // lambda part
    };
    long dim_ = 0;
    std::vector<std::vector<Entry>> rows_;
    std::vector<long> minor_index_;  // full index -> position in M', or -1
    std::vector<long> minor_rows_;   // row indices of M'
};

/// Resultant of the eigenvalue system by evaluation/interpolation/CRT.
/// Throws budget_error when the matrix would exceed the dimension budget
/// and oracle_error when no certified result could be obtained.
CharPolyResult macaulay_charpoly(const Hypergraph& h, const OracleBudget& budget = {});

/// Either route, picked by k.
CharPolyResult oracle_charpoly(const Hypergraph& h, const OracleBudget& budget = {});

struct CompareMismatch {
    long exponent = 0;
    std::string expected;  // oracle side
    std::string got;       // closed-form side
};

struct CompareReport {
    bool match = false;
    OracleMethod method = OracleMethod::matrix;
    long degree = 0;
    std::vector<std::uint64_t> primes;
    std::optional<CompareMismatch> first_mismatch;
};

/// Expand the closed form (or, past the expansion budget, compare residues
/// of interpolated factored evaluations) against the applicable oracle.
CompareReport oracle_compare(const FactoredCharPoly& closed, const Hypergraph& h,
                             const OracleBudget& budget = {}, const ExpandBudget& expand_budget = {});

/// Same comparison against an already computed oracle polynomial.
CompareReport compare_against(const FactoredCharPoly& closed, const CharPolyResult& oracle,
                              const ExpandBudget& expand_budget = {});

}  // namespace hyperspec

#endif
