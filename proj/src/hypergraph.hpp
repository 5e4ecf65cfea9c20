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

#ifndef HYPERSPEC_HYPERGRAPH_HPP
#define HYPERSPEC_HYPERGRAPH_HPP

// k-uniform hypergraphs with dense integer vertex labels, the family
// builders (hyperpaths, pendant attachments) and the homogeneous
// eigenvalue system lambda x_i^(k-1) - sum_{e at i} x^(e \ i).

#include <vector>

#include "intpoly.hpp"

namespace hyperspec {

struct Hypergraph {
    int k = 2;
    int n = 0;
    /// Each edge is a sorted k-subset of {0..n-1}; no duplicates.
    std::vector<std::vector<int>> edges;

    /// Number of edges incident to v.
    int degree(int v) const;
    int max_degree() const;
    /// Throws domain_error if any structural invariant is broken.
    void validate() const;
};

/// The k-uniform hyperpath of length m: the path on m edges with k-2
/// degree-one vertices added to each edge. n = m(k-1)+1, consecutive edges
/// share exactly one vertex.
Hypergraph build_hyperpath(int m, int k);

/// A fresh pendant edge at v: k-1 new vertices appended after the existing
/// ones, one new edge {v} + fresh.
Hypergraph add_pendant_edge(const Hypergraph& h, int v);

/// Remove v and every incident edge; remaining vertices relabeled
/// contiguously (labels above v shift down by one).
Hypergraph remove_vertex(const Hypergraph& h, int v);

/// Hyperstar: s pendant edges through one center vertex (vertex 0).
Hypergraph build_hyperstar(int s, int k);

/// Broom: the hyperpath of length m with s extra pendant edges attached at
/// its far pendant vertex.
Hypergraph build_broom(int m, int s, int k);

/// The pendant vertex of build_hyperpath(m, k) farthest from vertex 0,
/// i.e. the attachment point for extending the path.
int hyperpath_pendant_vertex(int m, int k);

/// One monomial of an eigenvalue-system polynomial: coeff * lambda^ldeg *
/// prod x_i^exps[i], with ldeg 0 or 1.
struct SysMonomial {
    Int coeff;
    std::vector<int> exps;
    int ldeg = 0;
};

/// The homogeneous system F_i = lambda x_i^(k-1) - sum_{e at i} x^(e \ i),
/// one polynomial per vertex, every monomial of total x-degree k-1.
struct PolySystem {
    int k = 2;
    int n = 0;
    std::vector<std::vector<SysMonomial>> polys;
};

PolySystem eigen_system(const Hypergraph& h);

/// Substitute x = U y for an integer matrix U (used by the oracle's
/// change-of-variables fallback). Degrees and lambda-linearity are
/// preserved; monomials with equal exponents are combined.
PolySystem substitute_linear(const PolySystem& sys, const std::vector<std::vector<Int>>& u);

/// Canonical relabeling by iterative degree refinement plus backtracking
/// search; returns true when g and h are isomorphic. Only intended for the
/// small structures the tests compare.
bool isomorphic(const Hypergraph& g, const Hypergraph& h);

}  // namespace hyperspec

#endif
