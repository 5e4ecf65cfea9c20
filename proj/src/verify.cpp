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

#include "verify.hpp"

#include <sstream>

#include "mpreal.hpp"
#include "oracle.hpp"
#include "reduction.hpp"
#include "spectra.hpp"

namespace hyperspec {

namespace {

struct Checker {
    VerifyOutcome out;

    void check(bool ok, const std::string& what) {
        out.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
        if (!ok) out.pass = false;
    }
};

VerifyOutcome suite_lemma2(const VerifyOptions& opts) {
    Checker c;
    OracleBudget budget;
    budget.max_dimension = opts.oracle_dimension_budget;

    IntPoly closed3 = single_edge_charpoly(3).expand();
    CharPolyResult mac3 = macaulay_charpoly(build_hyperpath(1, 3), budget);
    c.check(closed3 == mac3.poly, "single edge k=3: closed form equals the Macaulay resultant (degree 12)");

    IntPoly closed2 = single_edge_charpoly(2).expand();
    CharPolyResult mat2 = matrix_charpoly(build_hyperpath(1, 2));
    c.check(closed2 == mat2.poly, "single edge k=2: closed form equals det(lambda I - A)");
    return c.out;
}

VerifyOutcome suite_theorem5_k2(const VerifyOptions& opts) {
    Checker c;
    std::mt19937_64 rng(opts.seed);
    for (int trial = 0; trial < 20; ++trial) {
        Hypergraph g = random_graph(rng, 2, 8);
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(g.n));
        IntPoly phi_g = matrix_charpoly(g).poly;
        IntPoly phi_gv = matrix_charpoly(remove_vertex(g, v)).poly;
        IntPoly want = phi_g.shifted_up(1) - phi_gv;  // lambda*phi_G - phi_{G-v}
        IntPoly got = pendant_charpoly_via_reduction(g, v).expand();
        IntPoly direct = matrix_charpoly(add_pendant_edge(g, v)).poly;
        std::ostringstream label;
        label << "graph " << trial << " (n=" << g.n << ", |E|=" << g.edges.size() << ", v=" << v << ")";
        c.check(got == want, label.str() + ": reduction equals lambda*phi_G - phi_{G-v}");
        c.check(direct == want, label.str() + ": matrix oracle agrees on the pendant graph");
    }
    return c.out;
}

VerifyOutcome suite_hyperpath_vs_induction(const VerifyOptions&) {
    Checker c;
    const std::vector<std::pair<int, int>> cases = {{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {4, 3}, {2, 4}};
    for (auto [m, k] : cases) {
        FactoredCharPoly closed = hyperpath_charpoly(m, k);
        FactoredCharPoly chained = hyperpath_charpoly_by_induction(m, k);
        std::ostringstream label;
        label << "hyperpath m=" << m << " k=" << k << ": closed form equals the pendant-edge chain";
        c.check(closed == chained, label.str());
    }
    return c.out;
}

VerifyOutcome suite_oracle_small(const VerifyOptions& opts) {
    Checker c;
    OracleBudget budget;
    budget.max_dimension = opts.oracle_dimension_budget;
    budget.seed = opts.seed;

    CompareReport r1 = oracle_compare(single_edge_charpoly(3), build_hyperpath(1, 3), budget);
    c.check(r1.match, "single edge k=3 vs Macaulay (15x15)");

    CompareReport r2 = oracle_compare(hyperpath_charpoly(2, 3), build_hyperpath(2, 3), budget);
    c.check(r2.match, "hyperpath m=2 k=3 vs Macaulay (210x210, degree 80)");

    std::mt19937_64 rng(opts.seed);
    for (int trial = 0; trial < 20; ++trial) {
        Hypergraph g = random_graph(rng, 2, 5);
        CharPolyResult mat = matrix_charpoly(g);
        CharPolyResult mac = macaulay_charpoly(g, budget);
        std::ostringstream label;
        label << "random graph " << trial << " (n=" << g.n << "): matrix and Macaulay routes agree";
        c.check(mat.poly == mac.poly, label.str());
    }
    return c.out;
}

VerifyOutcome suite_degree(const VerifyOptions&) {
    Checker c;
    auto expect = [&](const FactoredCharPoly& f, int n, const std::string& label) {
        c.check(f.degree_lambda() == Rat(charpoly_degree_for(n, f.k)), label + ": degree n(k-1)^(n-1)");
    };
    for (int k = 2; k <= 6; ++k) expect(single_edge_charpoly(k), k, "single edge k=" + std::to_string(k));
    for (int m = 1; m <= 6; ++m)
        expect(hyperpath_charpoly(m, 3), 2 * m + 1, "hyperpath m=" + std::to_string(m) + " k=3");
    expect(hyperpath_charpoly(3, 4), 10, "hyperpath m=3 k=4");
    for (int s = 1; s <= 4; ++s)
        expect(hyperstar_charpoly(s, 3), 1 + 2 * s, "hyperstar s=" + std::to_string(s) + " k=3");
    for (int m = 1; m <= 2; ++m)
        for (int s = 1; s <= 2; ++s)
            expect(broom_charpoly(m, s, 3), 2 * m + 1 + 2 * s,
                   "broom m=" + std::to_string(m) + " s=" + std::to_string(s) + " k=3");

    // monicity spot checks on expandable instances
    c.check(hyperpath_charpoly(2, 3).expand().leading() == 1, "hyperpath m=2 k=3 expands monic");
    c.check(hyperstar_charpoly(3, 3).expand().leading() == 1, "hyperstar s=3 k=3 expands monic");
    return c.out;
}

VerifyOutcome suite_radius_limit(const VerifyOptions&) {
    Checker c;
    const mpfr_prec_t prec = 200;

    RadiusResult r13 = spectral_radius(1, 3);
    c.check(r13.descriptor.q == Rat(1, 3), "radius m=1 k=3 carries the exact angle 1/3");
    Real v13 = spectral_radius_value(1, 3, prec);
    Real one = Real::of(1, prec);
    c.check((v13 - one).abs() * Real::of(10, prec).pow_ui(50) < one, "radius m=1 k=3 evaluates to 1");

    Real limit = Real::of(4, prec).rootn(3);
    Real v50 = spectral_radius_value(50, 3, prec);
    c.check((v50 - limit).abs() < Real::of(make_rat(2, 1000), prec), "|radius(50,3) - 4^(1/3)| < 0.002");

    bool monotone = true;
    Real prev = spectral_radius_value(1, 3, prec);
    for (int m = 2; m <= 200; ++m) {
        Real cur = spectral_radius_value(m, 3, prec);
        if (!(prev < cur)) {
            monotone = false;
            break;
        }
        prev = cur;
    }
    c.check(monotone, "radius increases strictly in m up to 200 (k=3)");
    c.check(prev < limit, "radius stays below the limit 4^(1/3)");
    return c.out;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {"lemma2",       "theorem5-k2", "hyperpath-vs-induction",
                                                   "oracle-small", "degree",      "radius-limit"};
    return names;
}

VerifyOutcome run_verify_suite(const std::string& suite, const VerifyOptions& opts) {
    if (suite == "lemma2") return suite_lemma2(opts);
    if (suite == "theorem5-k2") return suite_theorem5_k2(opts);
    if (suite == "hyperpath-vs-induction") return suite_hyperpath_vs_induction(opts);
    if (suite == "oracle-small") return suite_oracle_small(opts);
    if (suite == "degree") return suite_degree(opts);
    if (suite == "radius-limit") return suite_radius_limit(opts);
    throw domain_error("unknown verify suite '" + suite + "'");
}

Hypergraph random_graph(std::mt19937_64& rng, int min_n, int max_n) {
    Hypergraph g;
    g.k = 2;
    g.n = min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - min_n + 1));
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (rng() & 1) g.edges.push_back({i, j});
    return g;
}

FactoredCharPoly pendant_charpoly_via_reduction(const Hypergraph& g, int v) {
    if (g.k != 2) throw domain_error("graph pendant route requires k = 2");
    IntPoly phi_g = matrix_charpoly(g).poly;
    IntPoly phi_gv = matrix_charpoly(remove_vertex(g, v)).poly;
    MExpression m;
    m.k = 2;
    m.atoms.push_back({phi_g.stretched(2), phi_gv.stretched(2), Int(1)});
    return attach_pendant(m, factored_from_intpoly(phi_gv, 2), g.n, 2).charpoly;
}

}  // namespace hyperspec
