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

// Command-line front end. Talks to the library exclusively through the C
// API in hyperspec.h.
//
// Exit codes: 0 success, 2 argument errors, 3 budget refusals,
// 4 verification failures, 1 anything else.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperspec.h"

namespace {

using nlohmann::json;

int exit_code_for(hs_status st) {
    switch (st) {
        case HS_OK:
            return 0;
        case HS_ERR_ARGUMENT:
            return 2;
        case HS_ERR_BUDGET:
            return 3;
        case HS_ERR_VERIFY:
            return 4;
        default:
            return 1;
    }
}

int fail(hs_status st) {
    const char* msg = hs_last_error();
    if (msg && *msg) std::cerr << "error: " << msg << "\n";
    return exit_code_for(st);
}

std::string take_string(char* s) {
    std::string out(s ? s : "");
    hs_string_free(s);
    return out;
}

struct FamilySelector {
    std::vector<int> hyperpath;  // m k
    std::vector<int> hyperstar;  // s k
    std::vector<int> broom;      // m s k
    std::string input_file;

    int count() const {
        return static_cast<int>(!hyperpath.empty()) + static_cast<int>(!hyperstar.empty()) +
               static_cast<int>(!broom.empty()) + static_cast<int>(!input_file.empty());
    }
};

void add_family_options(CLI::App* cmd, FamilySelector& sel, bool with_input) {
    cmd->add_option("--hyperpath", sel.hyperpath, "hyperpath of length M, uniformity K")
        ->expected(2)
        ->type_name("M K");
    cmd->add_option("--hyperstar", sel.hyperstar, "hyperstar with S edges, uniformity K")
        ->expected(2)
        ->type_name("S K");
    cmd->add_option("--broom", sel.broom, "hyperpath of length M with S pendant edges at its end, uniformity K")
        ->expected(3)
        ->type_name("M S K");
    if (with_input) cmd->add_option("--input", sel.input_file, "hypergraph JSON file")->type_name("FILE");
}

hs_status charpoly_from_selector(const FamilySelector& sel, hs_charpoly** cp) {
    if (!sel.hyperpath.empty()) return hs_charpoly_hyperpath(sel.hyperpath[0], sel.hyperpath[1], cp);
    if (!sel.hyperstar.empty()) return hs_charpoly_hyperstar(sel.hyperstar[0], sel.hyperstar[1], cp);
    return hs_charpoly_broom(sel.broom[0], sel.broom[1], sel.broom[2], cp);
}

// returns HS_OK or prints its own message and returns the failing status
hs_status hypergraph_from_selector(const FamilySelector& sel, hs_hypergraph** h) {
    if (!sel.input_file.empty()) {
        std::ifstream in(sel.input_file);
        if (!in) {
            std::cerr << "error: cannot read '" << sel.input_file << "'\n";
            return HS_ERR_ARGUMENT;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        return hs_hypergraph_from_json(buf.str().c_str(), h);
    }
    if (!sel.hyperpath.empty()) return hs_hypergraph_hyperpath(sel.hyperpath[0], sel.hyperpath[1], h);
    if (!sel.hyperstar.empty()) return hs_hypergraph_hyperstar(sel.hyperstar[0], sel.hyperstar[1], h);
    return hs_hypergraph_broom(sel.broom[0], sel.broom[1], sel.broom[2], h);
}

// dense rendering of a coefficient array (index = exponent), high terms first
std::string render_dense(const json& coeffs, bool latex) {
    std::ostringstream out;
    bool first = true;
    for (long i = static_cast<long>(coeffs.size()) - 1; i >= 0; --i) {
        std::string c = coeffs[static_cast<std::size_t>(i)].get<std::string>();
        if (c == "0") continue;
        bool negative = c[0] == '-';
        std::string mag = negative ? c.substr(1) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (latex ? (negative ? "-" : "+") : (negative ? " - " : " + "));
        }
        if (mag != "1" || i == 0) out << mag;
        if (i > 0) {
            out << (latex ? "\\lambda" : "lambda");
            if (i > 1) out << (latex ? "^{" + std::to_string(i) + "}" : "^" + std::to_string(i));
        }
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectra of k-uniform hypergraphs built from pendant-edge attachments"};
    app.require_subcommand(1);

    // charpoly
    auto* cmd_charpoly = app.add_subcommand("charpoly", "factored characteristic polynomial of a family member");
    FamilySelector charpoly_sel;
    add_family_options(cmd_charpoly, charpoly_sel, true);
    std::string format = "json";
    bool expand = false;
    long long budget = 0;
    cmd_charpoly->add_option("--format", format, "json | text | latex")->check(CLI::IsMember({"json", "text", "latex"}));
    cmd_charpoly->add_flag("--expand", expand, "also expand into dense coefficients");
    cmd_charpoly->add_option("--budget", budget, "expansion budget in coefficients");

    // spectrum
    auto* cmd_spectrum = app.add_subcommand("spectrum", "all distinct eigenvalues of a hyperpath");
    FamilySelector spectrum_sel;
    add_family_options(cmd_spectrum, spectrum_sel, false);
    int precision = 200;
    cmd_spectrum->add_option("--precision", precision, "bits for numeric rendering (default 200)");

    // radius
    auto* cmd_radius = app.add_subcommand("radius", "spectral radius of a hyperpath");
    FamilySelector radius_sel;
    add_family_options(cmd_radius, radius_sel, false);
    int radius_precision = 200;
    cmd_radius->add_option("--precision", radius_precision, "bits for numeric rendering (default 200)");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a named self-check suite");
    std::string suite;
    unsigned long long seed = 12345;
    long long verify_budget = 0;
    cmd_verify
        ->add_option("suite", suite,
                     "lemma2 | theorem5-k2 | hyperpath-vs-induction | oracle-small | degree | radius-limit")
        ->required();
    cmd_verify->add_option("--seed", seed, "seed for randomized sampling");
    cmd_verify->add_option("--budget", verify_budget, "oracle matrix dimension budget");

    // oracle
    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force characteristic polynomial");
    FamilySelector oracle_sel;
    add_family_options(cmd_oracle, oracle_sel, true);
    long long oracle_budget = 0;
    cmd_oracle->add_option("--budget", oracle_budget, "matrix dimension budget (default 512)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (cmd_charpoly->parsed()) {
        if (charpoly_sel.count() != 1) {
            std::cerr << "error: exactly one family selector is required\n";
            return 2;
        }
        if (!charpoly_sel.input_file.empty()) {
            std::cerr << "error: closed forms exist only for the built-in families; "
                         "run `oracle --input` for arbitrary hypergraphs\n";
            return 2;
        }
        hs_charpoly* cp = nullptr;
        if (hs_status st = charpoly_from_selector(charpoly_sel, &cp)) return fail(st);
        char* s = nullptr;
        std::string expanded_json;
        if (expand) {
            if (hs_status st = hs_charpoly_expand_json(cp, budget, &s)) {
                hs_charpoly_free(cp);
                return fail(st);
            }
            expanded_json = take_string(s);
        }
        hs_status st = HS_OK;
        if (format == "json")
            st = hs_charpoly_to_json(cp, &s);
        else if (format == "latex")
            st = hs_charpoly_to_latex(cp, &s);
        else
            st = hs_charpoly_to_text(cp, &s);
        if (st) {
            hs_charpoly_free(cp);
            return fail(st);
        }
        std::string main_out = take_string(s);
        hs_charpoly_free(cp);

        if (format == "json") {
            if (expand) {
                json combined;
                combined["factored"] = json::parse(main_out);
                combined["expanded"] = json::parse(expanded_json);
                std::cout << combined.dump() << "\n";
            } else {
                std::cout << main_out << "\n";
            }
        } else {
            std::cout << main_out << "\n";
            if (expand) std::cout << render_dense(json::parse(expanded_json), format == "latex") << "\n";
        }
        return 0;
    }

    if (cmd_spectrum->parsed() || cmd_radius->parsed()) {
        bool is_spectrum = cmd_spectrum->parsed();
        const FamilySelector& sel = is_spectrum ? spectrum_sel : radius_sel;
        if (sel.hyperpath.empty() || sel.count() != 1) {
            std::cerr << "error: " << (is_spectrum ? "spectrum" : "radius")
                      << " is available for --hyperpath only\n";
            return 2;
        }
        char* s = nullptr;
        hs_status st = is_spectrum
                           ? hs_spectrum_hyperpath_json(sel.hyperpath[0], sel.hyperpath[1], precision, &s)
                           : hs_radius_hyperpath_json(sel.hyperpath[0], sel.hyperpath[1], radius_precision, &s);
        if (st) return fail(st);
        std::cout << take_string(s) << "\n";
        return 0;
    }

    if (cmd_verify->parsed()) {
        char* report = nullptr;
        hs_status st = hs_verify(suite.c_str(), seed, verify_budget, &report);
        std::cout << take_string(report);
        if (st == HS_OK) {
            std::cout << "verify " << suite << ": PASS\n";
            return 0;
        }
        if (st == HS_ERR_VERIFY) {
            std::cout << "verify " << suite << ": FAIL\n";
            return 4;
        }
        return fail(st);
    }

    if (cmd_oracle->parsed()) {
        if (oracle_sel.count() != 1) {
            std::cerr << "error: exactly one family selector is required\n";
            return 2;
        }
        hs_hypergraph* h = nullptr;
        if (hs_status st = hypergraph_from_selector(oracle_sel, &h)) return fail(st);
        char* s = nullptr;
        hs_status st = hs_oracle_charpoly_json(h, oracle_budget, &s);
        hs_hypergraph_free(h);
        if (st) return fail(st);
        std::cout << take_string(s) << "\n";
        return 0;
    }

    return 2;
}
