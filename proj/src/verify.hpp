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

#ifndef HYPERSPEC_VERIFY_HPP
#define HYPERSPEC_VERIFY_HPP

// Self-check suites behind the CLI's `verify` subcommand: closed forms
// against the brute-force oracles, both hyperpath routes against each
// other, degree identities, and the spectral-radius limit.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hypergraph.hpp"
#include "intpoly.hpp"

namespace hyperspec {

struct VerifyOptions {
    std::uint64_t seed = 12345;
    long oracle_dimension_budget = 512;
};

struct VerifyOutcome {
    bool pass = true;
    std::vector<std::string> lines;
};

const std::vector<std::string>& verify_suite_names();

/// Runs one of: lemma2, theorem5-k2, hyperpath-vs-induction, oracle-small,
/// degree, radius-limit. Throws domain_error for an unknown name.
VerifyOutcome run_verify_suite(const std::string& suite, const VerifyOptions& opts = {});

/// Seeded random graph (k = 2) with n in [min_n, max_n], edge probability 1/2.
Hypergraph random_graph(std::mt19937_64& rng, int min_n, int max_n);

/// Pendant attachment on a graph through the reduction machinery (k = 2):
/// builds the M-expression phi_G / phi_{G-v} from the matrix oracle and
/// runs attach_pendant. The expansion must equal
/// lambda * phi_G - phi_{G-v}.
FactoredCharPoly pendant_charpoly_via_reduction(const Hypergraph& g, int v);

}  // namespace hyperspec

#endif
