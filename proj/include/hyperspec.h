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

#ifndef HYPERSPEC_H
#define HYPERSPEC_H

/* C API of the hyperspec shared library: exact characteristic polynomials,
 * eigenvalues and spectral radii of k-uniform hypergraphs built from
 * pendant-edge attachments, plus brute-force oracles for cross-checking.
 *
 * Conventions:
 *  - every function returns an hs_status; results come back through out
 *    parameters;
 *  - strings returned through char** are heap-allocated; release them with
 *    hs_string_free;
 *  - opaque handles are released with their matching *_free function;
 *  - on failure, hs_last_error() returns a thread-local message;
 *  - budget parameters <= 0 select the built-in defaults
 *    (10^7 coefficients for expansion, 512 for the oracle matrix side).
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hs_status {
    HS_OK = 0,
    HS_ERR_ARGUMENT = 1, /* bad input or out-of-domain parameter */
    HS_ERR_BUDGET = 2,   /* refused: result would exceed a size budget */
    HS_ERR_ASSEMBLY = 3, /* factored product failed to assemble */
    HS_ERR_ORACLE = 4,   /* brute-force oracle could not certify */
    HS_ERR_VERIFY = 5,   /* a verification suite reported failures */
    HS_ERR_INTERNAL = 6
} hs_status;

typedef struct hs_hypergraph hs_hypergraph;
typedef struct hs_charpoly hs_charpoly;

const char* hs_version(void);
const char* hs_last_error(void);
void hs_string_free(char* s);

/* ---- hypergraphs ----------------------------------------------------- */

hs_status hs_hypergraph_hyperpath(int m, int k, hs_hypergraph** out);
hs_status hs_hypergraph_hyperstar(int s, int k, hs_hypergraph** out);
hs_status hs_hypergraph_broom(int m, int s, int k, hs_hypergraph** out);
/* {"k":int, "n":int, "edges":[[int,...],...]} */
hs_status hs_hypergraph_from_json(const char* json, hs_hypergraph** out);
hs_status hs_hypergraph_to_json(const hs_hypergraph* h, char** out);
void hs_hypergraph_free(hs_hypergraph* h);

/* ---- factored characteristic polynomials ----------------------------- */

hs_status hs_charpoly_hyperpath(int m, int k, hs_charpoly** out);
hs_status hs_charpoly_hyperstar(int s, int k, hs_charpoly** out);
hs_status hs_charpoly_broom(int m, int s, int k, hs_charpoly** out);
/* {"k":int, "lambda_exponent":{"num":str,"den":str},
 *  "factors":[{"base_mu":[str,...],"exp":str},...]} */
hs_status hs_charpoly_from_json(const char* json, hs_charpoly** out);
hs_status hs_charpoly_to_json(const hs_charpoly* cp, char** out);
hs_status hs_charpoly_to_latex(const hs_charpoly* cp, char** out);
hs_status hs_charpoly_to_text(const hs_charpoly* cp, char** out);
/* total degree in lambda, as a decimal string */
hs_status hs_charpoly_degree(const hs_charpoly* cp, char** out);
/* dense coefficients as a JSON array of decimal strings */
hs_status hs_charpoly_expand_json(const hs_charpoly* cp, long long max_terms, char** out);
void hs_charpoly_free(hs_charpoly* cp);

/* ---- spectra (hyperpaths) -------------------------------------------- */

/* JSON list of {"q":"t/d","theta":int,"zero":bool,"re":str,"im":str,
 * "modulus":str} */
hs_status hs_spectrum_hyperpath_json(int m, int k, int precision_bits, char** out);
hs_status hs_radius_hyperpath_json(int m, int k, int precision_bits, char** out);

/* ---- brute-force oracle ----------------------------------------------- */

/* {"coeffs":[str,...],"degree":int,"method":"matrix"|"macaulay",
 *  "primes":[str,...],"sample_count":int} */
hs_status hs_oracle_charpoly_json(const hs_hypergraph* h, long long max_dimension, char** out);
/* {"match":bool,"method":str,"degree":int,"primes":[...],
 *  "first_mismatch":null|{"exponent":int,"expected":str,"got":str}} */
hs_status hs_oracle_compare_json(const hs_charpoly* cp, const hs_hypergraph* h, long long max_dimension,
                                 long long max_terms, char** out);

/* ---- verification suites ---------------------------------------------- */

/* suite is one of: lemma2, theorem5-k2, hyperpath-vs-induction,
 * oracle-small, degree, radius-limit. Returns HS_OK when every check
 * passes, HS_ERR_VERIFY otherwise; the line-per-check report is returned
 * either way. */
hs_status hs_verify(const char* suite, unsigned long long seed, long long max_dimension, char** report);

#ifdef __cplusplus
}
#endif

#endif
