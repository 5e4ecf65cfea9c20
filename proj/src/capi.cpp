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

#include "hyperspec.h"

#include <cstring>
#include <string>

#include "json_io.hpp"
#include "oracle.hpp"
#include "reduction.hpp"
#include "spectra.hpp"
#include "verify.hpp"

struct hs_hypergraph {
    hyperspec::Hypergraph v;
};

struct hs_charpoly {
    hyperspec::FactoredCharPoly v;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
hs_status guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return HS_OK;
    } catch (const hyperspec::budget_error& e) {
        g_last_error = e.what();
        return HS_ERR_BUDGET;
    } catch (const hyperspec::assembly_error& e) {
        g_last_error = e.what();
        return HS_ERR_ASSEMBLY;
    } catch (const hyperspec::oracle_error& e) {
        g_last_error = e.what();
        return HS_ERR_ORACLE;
    } catch (const hyperspec::domain_error& e) {
        g_last_error = e.what();
        return HS_ERR_ARGUMENT;
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return HS_ERR_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HS_ERR_INTERNAL;
    }
}

hs_status need(bool ok, const char* message) {
    if (ok) return HS_OK;
    g_last_error = message;
    return HS_ERR_ARGUMENT;
}

hyperspec::ExpandBudget expand_budget(long long max_terms) {
    hyperspec::ExpandBudget b;
    if (max_terms > 0) b.max_terms = static_cast<std::size_t>(max_terms);
    return b;
}

hyperspec::OracleBudget oracle_budget(long long max_dimension) {
    hyperspec::OracleBudget b;
    if (max_dimension > 0) b.max_dimension = static_cast<long>(max_dimension);
    return b;
}

}  // namespace

extern "C" {

const char* hs_version(void) { return "hyperspec 1.0.0"; }

const char* hs_last_error(void) { return g_last_error.c_str(); }

void hs_string_free(char* s) { delete[] s; }

hs_status hs_hypergraph_hyperpath(int m, int k, hs_hypergraph** out) {
    if (auto st = need(out != nullptr, "null output handle")) return st;
    return guarded([&] { *out = new hs_hypergraph{hyperspec::build_hyperpath(m, k)}; });
}

hs_status hs_hypergraph_hyperstar(int s, int k, hs_hypergraph** out) {
    if (auto st = need(out != nullptr, "null output handle")) return st;
    return guarded([&] { *out = new hs_hypergraph{hyperspec::build_hyperstar(s, k)}; });
}

hs_status hs_hypergraph_broom(int m, int s, int k, hs_hypergraph** out) {
    if (auto st = need(out != nullptr, "null output handle")) return st;
    return guarded([&] { *out = new hs_hypergraph{hyperspec::build_broom(m, s, k)}; });
}

hs_status hs_hypergraph_from_json(const char* json_text, hs_hypergraph** out) {
    if (auto st = need(out != nullptr && json_text != nullptr, "null argument")) return st;
    return guarded(
        [&] { *out = new hs_hypergraph{hyperspec::hypergraph_from_json(hyperspec::json::parse(json_text))}; });
}

hs_status hs_hypergraph_to_json(const hs_hypergraph* h, char** out) {
    if (auto st = need(h != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] { *out = dup_string(hyperspec::hypergraph_to_json(h->v).dump()); });
}

void hs_hypergraph_free(hs_hypergraph* h) { delete h; }

hs_status hs_charpoly_hyperpath(int m, int k, hs_charpoly** out) {
    if (auto st = need(out != nullptr, "null output handle")) return st;
    return guarded([&] { *out = new hs_charpoly{hyperspec::hyperpath_charpoly(m, k)}; });
}

hs_status hs_charpoly_hyperstar(int s, int k, hs_charpoly** out) {
    if (auto st = need(out != nullptr, "null output handle")) return st;
    return guarded([&] { *out = new hs_charpoly{hyperspec::hyperstar_charpoly(s, k)}; });
}

hs_status hs_charpoly_broom(int m, int s, int k, hs_charpoly** out) {
    if (auto st = need(out != nullptr, "null output handle")) return st;
    return guarded([&] { *out = new hs_charpoly{hyperspec::broom_charpoly(m, s, k)}; });
}

hs_status hs_charpoly_from_json(const char* json_text, hs_charpoly** out) {
    if (auto st = need(out != nullptr && json_text != nullptr, "null argument")) return st;
    return guarded(
        [&] { *out = new hs_charpoly{hyperspec::charpoly_from_json(hyperspec::json::parse(json_text))}; });
}

hs_status hs_charpoly_to_json(const hs_charpoly* cp, char** out) {
    if (auto st = need(cp != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] { *out = dup_string(hyperspec::charpoly_to_json(cp->v).dump()); });
}

hs_status hs_charpoly_to_latex(const hs_charpoly* cp, char** out) {
    if (auto st = need(cp != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] { *out = dup_string(hyperspec::charpoly_to_latex(cp->v)); });
}

hs_status hs_charpoly_to_text(const hs_charpoly* cp, char** out) {
    if (auto st = need(cp != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] { *out = dup_string(hyperspec::charpoly_to_text(cp->v)); });
}

hs_status hs_charpoly_degree(const hs_charpoly* cp, char** out) {
    if (auto st = need(cp != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] { *out = dup_string(cp->v.degree_lambda().get_str()); });
}

hs_status hs_charpoly_expand_json(const hs_charpoly* cp, long long max_terms, char** out) {
    if (auto st = need(cp != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] {
        hyperspec::IntPoly p = cp->v.expand(expand_budget(max_terms));
        *out = dup_string(hyperspec::intpoly_to_json(p).dump());
    });
}

void hs_charpoly_free(hs_charpoly* cp) { delete cp; }

hs_status hs_spectrum_hyperpath_json(int m, int k, int precision_bits, char** out) {
    if (auto st = need(out != nullptr, "null output handle")) return st;
    return guarded([&] {
        int bits = precision_bits > 0 ? precision_bits : 200;
        if (bits < 32) throw hyperspec::domain_error("precision must be at least 32 bits");
        auto spec = hyperspec::hyperpath_eigenvalues(m, k);
        *out = dup_string(hyperspec::spectrum_to_json(spec, bits).dump());
    });
}

hs_status hs_radius_hyperpath_json(int m, int k, int precision_bits, char** out) {
    if (auto st = need(out != nullptr, "null output handle")) return st;
    return guarded([&] {
        int bits = precision_bits > 0 ? precision_bits : 200;
        *out = dup_string(hyperspec::radius_to_json(hyperspec::spectral_radius(m, k, bits)).dump());
    });
}

hs_status hs_oracle_charpoly_json(const hs_hypergraph* h, long long max_dimension, char** out) {
    if (auto st = need(h != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] {
        auto r = hyperspec::oracle_charpoly(h->v, oracle_budget(max_dimension));
        *out = dup_string(hyperspec::oracle_result_to_json(r).dump());
    });
}

hs_status hs_oracle_compare_json(const hs_charpoly* cp, const hs_hypergraph* h, long long max_dimension,
                                 long long max_terms, char** out) {
    if (auto st = need(cp != nullptr && h != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] {
        auto r = hyperspec::oracle_compare(cp->v, h->v, oracle_budget(max_dimension), expand_budget(max_terms));
        *out = dup_string(hyperspec::compare_report_to_json(r).dump());
    });
}

hs_status hs_verify(const char* suite, unsigned long long seed, long long max_dimension, char** report) {
    if (auto st = need(suite != nullptr && report != nullptr, "null argument")) return st;
    bool pass = false;
    hs_status st = guarded([&] {
        hyperspec::VerifyOptions opts;
        opts.seed = seed;
        if (max_dimension > 0) opts.oracle_dimension_budget = static_cast<long>(max_dimension);
        auto outcome = hyperspec::run_verify_suite(suite, opts);
        pass = outcome.pass;
        std::string text;
        for (const auto& line : outcome.lines) {
            text += line;
            text += '\n';
        }
        *report = dup_string(text);
    });
    if (st != HS_OK) return st;
    if (!pass) {
        g_last_error = std::string("verify suite '") + suite + "' reported failures";
        return HS_ERR_VERIFY;
    }
    return HS_OK;
}

}  // extern "C"
