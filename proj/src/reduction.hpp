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

#ifndef HYPERSPEC_REDUCTION_HPP
#define HYPERSPEC_REDUCTION_HPP

// Pendant-edge reduction of k-uniform hypergraph characteristic
// polynomials. The single-edge variety contributes two multiplicity
// constants,
//     K1 = (k-1)^(k-1) - k^(k-2)   (the origin)
//     K2 = k^(k-2)                 (the nonzero points combined)
// and attaching a pendant edge at v multiplies the polynomial by a fixed
// lambda power, a power of phi_{H-v}, and two translates of the fraction
//     M_H(lambda, t/lambda^(k-1)),  M_H(lambda, 0) = phi_H / phi_{H-v}^(k-1).
// M-expressions are kept as products of rational-function atoms over
// z = lambda^(1/2), because the hyperpath factorization mixes half powers
// of lambda that only cancel across the whole product.

#include <vector>

#include "intpoly.hpp"

namespace hyperspec {

struct ReductionConstants {
    int k = 2;
    Int k1;  // multiplicity of the origin
    Int k2;  // total multiplicity of the nonzero variety points
};

ReductionConstants reduction_constants(int k);

/// One atom of an M-expression: (num(z) / den(z)) ^ exp with z = lambda^(1/2).
struct MAtom {
    IntPoly num;
    IntPoly den;
    Int exp;
};

/// Product of atoms, closed under the t-translation
/// value -> value - t/lambda^(k-1) applied per atom.
struct MExpression {
    int k = 2;
    std::vector<MAtom> atoms;
};

/// Characteristic polynomial of the one-edge k-uniform hypergraph:
/// lambda^(k(k-1)^(k-1) - k^(k-1)) * (mu - 1)^(k^(k-2)).
FactoredCharPoly single_edge_charpoly(int k);

/// Exponent table a(j, m) of the hyperpath factorization
///     phi = prod_j pathpoly_j(lambda^(k/2)) ^ a(j, m).
/// a(j, m) is integral for j >= 1 (asserted); a(0, m) is genuinely
/// rational and only the assembled lambda power must come out integral.
struct ExponentTable {
    int m = 1;
    int k = 2;
    std::vector<Rat> a;  // index j = 0..m
};

ExponentTable a_exponents(int m, int k);

/// Closed-form factored characteristic polynomial of the hyperpath of
/// length m; total degree n(k-1)^(n-1) with n = m(k-1)+1 (checked).
FactoredCharPoly hyperpath_charpoly(int m, int k);

/// phi of the hyperpath of length m with its far pendant vertex removed:
/// lambda^((k-2)(k-1)^(m(k-1)-1)) * phi_hyperpath(m-1)^((k-1)^(k-2)).
FactoredCharPoly hyperpath_minus_pendant_charpoly(int m, int k);

/// M-expression of the hyperpath of length m at its far pendant vertex.
/// m = 0 is the one-vertex hypergraph with M = lambda.
MExpression m_expression_hyperpath(int m, int k);

/// Per-atom translation (A, B) -> (lambda^(k-1) A - t B, lambda^(k-1) B),
/// i.e. subtracting t/lambda^(k-1) from every atom value. t = 0 is the
/// identity. Atoms are reduced by their common z power and content.
MExpression translate_m(const MExpression& expr, unsigned t, unsigned max_t = 64);

/// Value of the atom product at an exact rational lambda, computed in
/// Q(sqrt(lambda)); throws assembly_error if the half powers fail to
/// cancel. Intended for identity tests at random points.
Rat m_expression_eval(const MExpression& expr, const Rat& lambda);

struct PendantResult {
    FactoredCharPoly charpoly;  // phi of H with a pendant edge at v
    MExpression m_next;         // M_{H_v} at v: M_H(.,0)^K1 * M_H(.,1/lambda^(k-1))^K2
};

/// Pendant-edge reduction. Inputs describe the same hypergraph H and
/// vertex v: the M-expression's value must equal phi_H / phi_{H-v}^(k-1)
/// and n is H's vertex count. The assembled product must clear all
/// denominators (assembly_error otherwise) and has total degree
/// (n+k-1)(k-1)^(n+k-2) (checked).
PendantResult attach_pendant(const MExpression& m_h, const FactoredCharPoly& phi_h_minus_v, int n, int k);

/// s pendant edges at the same vertex in one step:
/// lambda^(s(k-1)^(n+s(k-1))) * phi_{H-v}^((k-1)^(s(k-1)+1))
///   * prod_{t=0..s} M_H(., t/lambda^(k-1)) ^ (C(s,t) K1^(s-t) K2^t).
/// s = 1 coincides with attach_pendant's polynomial exactly.
FactoredCharPoly attach_pendant_multi(const MExpression& m_h, const FactoredCharPoly& phi_h_minus_v, int n,
                                      int k, int s);

/// Hyperpath polynomial grown edge by edge through attach_pendant,
/// starting from the one-vertex hypergraph; each step feeds the previous
/// step's output back in. Must agree with hyperpath_charpoly exactly.
FactoredCharPoly hyperpath_charpoly_by_induction(int m, int k);

/// Hyperstar with s edges (s pendant edges on an isolated vertex).
FactoredCharPoly hyperstar_charpoly(int s, int k);

/// Broom: hyperpath of length m with s extra pendant edges at its far
/// pendant vertex.
FactoredCharPoly broom_charpoly(int m, int s, int k);

/// Expected characteristic polynomial degree n(k-1)^(n-1) for n vertices.
Int charpoly_degree_for(int n_vertices, int k);

/// base^w * lambda^extra, still factored. Handy for the disjoint-union
/// step phi_{H + isolated} = lambda^... * phi_H^(k-1)^#isolated.
FactoredCharPoly charpoly_pow_shift(const FactoredCharPoly& base, const Int& w, const Rat& extra_lambda);

}  // namespace hyperspec

#endif
