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

// End-to-end acceptance run: ten numbered criteria, one line each, exit 1
// if any fails. Tolerances and limits are pinned here, in code.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "mpreal.hpp"
#include "oracle.hpp"
#include "pathpoly.hpp"
#include "reduction.hpp"
#include "spectra.hpp"
#include "verify.hpp"

using namespace hyperspec;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what << std::endl;
    if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main() {
    // 1. single-edge closed form vs Macaulay oracle at k = 3, under 5 s
    try {
        auto t0 = Clock::now();
        IntPoly closed = single_edge_charpoly(3).expand();
        CharPolyResult oracle = macaulay_charpoly(build_hyperpath(1, 3));
        double dt = seconds_since(t0);
        bool ok = closed == oracle.poly && closed.degree() == 12 && dt < 5.0;
        std::ostringstream what;
        what << "single edge k=3 equals the Macaulay resultant, degree 12 (" << dt << " s)";
        report(1, ok, what.str());
    } catch (const std::exception& e) {
        report(1, false, std::string("exception: ") + e.what());
    }

    // 2. hyperpath m=2 k=3 closed form vs the 210x210 Macaulay oracle
    CharPolyResult p23_oracle;
    bool have_p23 = false;
    try {
        auto t0 = Clock::now();
        FactoredCharPoly closed = hyperpath_charpoly(2, 3);
        FactoredCharPoly expected;
        expected.k = 3;
        expected.lambda_exponent = 35;
        expected.factors.push_back({IntPoly(std::vector<Int>{Int(-1), Int(1)}), 3, Int(6)});
        expected.factors.push_back({IntPoly(std::vector<Int>{Int(-2), Int(1)}), 3, Int(9)});
        expected.canonicalize();

        p23_oracle = macaulay_charpoly(build_hyperpath(2, 3));
        have_p23 = true;
        double dt = seconds_since(t0);
        long per_prime = p23_oracle.sample_count / static_cast<long>(p23_oracle.primes_used.size());
        bool ok = closed == expected && closed.expand() == p23_oracle.poly &&
                  p23_oracle.poly.degree() == 80 && p23_oracle.primes_used.size() >= 2 && per_prime >= 81 &&
                  dt < 600.0;
        std::ostringstream what;
        what << "hyperpath m=2 k=3 equals lambda^35(mu-1)^6(mu-2)^9 and the Macaulay resultant ("
             << p23_oracle.primes_used.size() << " primes, " << p23_oracle.sample_count << " samples, " << dt
             << " s)";
        report(2, ok, what.str());
    } catch (const std::exception& e) {
        report(2, false, std::string("exception: ") + e.what());
    }

    // 3. k=2 degeneration: 20 seeded random graphs, random vertex
    try {
        std::mt19937_64 rng(12345);
        bool ok = true;
        for (int trial = 0; trial < 20; ++trial) {
            Hypergraph g = random_graph(rng, 2, 8);
            int v = static_cast<int>(rng() % static_cast<std::uint64_t>(g.n));
            IntPoly phi_g = matrix_charpoly(g).poly;
            IntPoly phi_gv = matrix_charpoly(remove_vertex(g, v)).poly;
            IntPoly want = phi_g.shifted_up(1) - phi_gv;
            if (pendant_charpoly_via_reduction(g, v).expand() != want) ok = false;
        }
        report(3, ok, "pendant reduction at k=2 equals lambda*phi_G - phi_{G-v} on 20 seeded graphs");
    } catch (const std::exception& e) {
        report(3, false, std::string("exception: ") + e.what());
    }

    // 4. induction consistency of the two hyperpath routes
    try {
        bool ok = true;
        const std::vector<std::pair<int, int>> cases = {{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {4, 3}, {2, 4}};
        for (auto [m, k] : cases)
            if (!(hyperpath_charpoly(m, k) == hyperpath_charpoly_by_induction(m, k))) ok = false;
        report(4, ok, "closed form equals the pendant-edge chain for (m,k) in {2,3,4}x{2,3} and (2,4)");
    } catch (const std::exception& e) {
        report(4, false, std::string("exception: ") + e.what());
    }

    // 5. multi-pendant consistency
    try {
        FactoredCharPoly empty3;
        empty3.k = 3;
        MExpression m0 = m_expression_hyperpath(0, 3);
        bool ok = attach_pendant_multi(m0, empty3, 1, 3, 2) == hyperpath_charpoly(2, 3);

        for (int k : {2, 3, 4}) {
            FactoredCharPoly empty;
            empty.k = k;
            MExpression m = m_expression_hyperpath(0, k);
            if (!(attach_pendant_multi(m, empty, 1, k, 1) == attach_pendant(m, empty, 1, k).charpoly))
                ok = false;
        }
        for (int m = 1; m <= 2; ++m) {
            MExpression me = m_expression_hyperpath(m, 3);
            FactoredCharPoly minus = hyperpath_minus_pendant_charpoly(m, 3);
            if (!(attach_pendant_multi(me, minus, 2 * m + 1, 3, 1) ==
                  attach_pendant(me, minus, 2 * m + 1, 3).charpoly))
                ok = false;
        }
        report(5, ok, "two pendant edges on a vertex equal the length-2 hyperpath; s=1 equals attach_pendant");
    } catch (const std::exception& e) {
        report(5, false, std::string("exception: ") + e.what());
    }

    // 6. degree identity across every produced polynomial
    try {
        bool ok = true;
        auto expect = [&ok](const FactoredCharPoly& f, int n) {
            if (f.degree_lambda() != Rat(charpoly_degree_for(n, f.k))) ok = false;
        };
        expect(single_edge_charpoly(3), 3);
        expect(single_edge_charpoly(2), 2);
        for (int m = 1; m <= 6; ++m) expect(hyperpath_charpoly(m, 3), 2 * m + 1);
        expect(hyperpath_charpoly(3, 4), 10);
        for (int k : {2, 3, 4}) expect(hyperstar_charpoly(2, k), 1 + 2 * (k - 1));
        expect(hyperstar_charpoly(3, 3), 7);
        expect(broom_charpoly(1, 2, 3), 7);
        // monic expansions where feasible
        if (hyperpath_charpoly(2, 3).expand().leading() != 1) ok = false;
        if (single_edge_charpoly(3).expand().leading() != 1) ok = false;
        if (hyperstar_charpoly(3, 3).expand().leading() != 1) ok = false;
        report(6, ok, "every produced polynomial is monic of degree n(k-1)^(n-1), up to (6,3) and (3,4)");
    } catch (const std::exception& e) {
        report(6, false, std::string("exception: ") + e.what());
    }

    // 7. spectrum soundness at 200 bits
    try {
        const mpfr_prec_t prec = 200;
        bool ok = true;
        for (auto [m, k] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {2, 2}, {3, 2}}) {
            FactoredCharPoly f = hyperpath_charpoly(m, k);
            IntPoly phi = f.expand();
            auto spec = hyperpath_eigenvalues(m, k);
            Real tol = Real::of(1, prec) / Real::of(10, prec).pow_ui(10);
            for (const auto& d : spec) {
                Cplx lam = descriptor_value(d, prec);
                Cplx val = eval_real(phi, lam, prec);
                Real scale = (Real::of(1, prec) + lam.abs()).pow_ui(static_cast<unsigned long>(phi.degree()));
                if (!(val.abs() < tol * scale)) ok = false;
            }
            if (static_cast<long>(spec.size()) != distinct_root_count_from_factors(f)) ok = false;
        }
        report(7, ok, "descriptors are roots (residual < 1e-10 scaled) and counts match the factor structure");
    } catch (const std::exception& e) {
        report(7, false, std::string("exception: ") + e.what());
    }

    // 8. spectral radius: exact value at (1,3), limit gap at m=50, monotone to 200
    try {
        const mpfr_prec_t prec = 200;
        RadiusResult r13 = spectral_radius(1, 3);
        bool ok = r13.descriptor.q == make_rat(1, 3) && r13.descriptor.theta == 0;
        Real v13 = spectral_radius_value(1, 3, prec);
        if (!((v13 - Real::of(1, prec)).abs().to_double() < 1e-40)) ok = false;

        Real limit = Real::of(4, prec).rootn(3);
        Real v50 = spectral_radius_value(50, 3, prec);
        if (!((v50 - limit).abs().to_double() < 0.002)) ok = false;

        Real prev = spectral_radius_value(1, 3, prec);
        for (int m = 2; m <= 200; ++m) {
            Real cur = spectral_radius_value(m, 3, prec);
            if (!(prev < cur)) ok = false;
            prev = cur;
        }
        report(8, ok, "radius(1,3) = 1 via angle 1/3; |radius(50,3) - 4^(1/3)| < 0.002; monotone to m=200");
    } catch (const std::exception& e) {
        report(8, false, std::string("exception: ") + e.what());
    }

    // 9. exponent-table integrity
    try {
        bool ok = true;
        for (int m = 1; m <= 10; ++m) {
            ExponentTable t = a_exponents(m, 3);
            for (int j = 1; j <= m; ++j)
                if (!is_integer(t.a[static_cast<std::size_t>(j)])) ok = false;
            Rat lampow = hyperpath_charpoly(m, 3).lambda_exponent;
            if (!is_integer(lampow) || lampow < 0) ok = false;
        }
        for (int k = 2; k <= 5; ++k) {
            for (int m = 1; m <= 10; ++m) {
                ExponentTable t = a_exponents(m, k);
                Rat total = 0;
                for (int j = 0; j <= m; ++j)
                    total += Rat(j + 1) * make_rat(k, 2) * t.a[static_cast<std::size_t>(j)];
                if (total != Rat(charpoly_degree_for(m * (k - 1) + 1, k))) ok = false;
            }
        }
        report(9, ok, "a(j,m) integral for j >= 1 (m <= 10, k=3); exact degree identity for m <= 10, k <= 5");
    } catch (const std::exception& e) {
        report(9, false, std::string("exception: ") + e.what());
    }

    // 10. negative control: any single factor-exponent corruption is caught
    try {
        bool ok = have_p23;
        if (have_p23) {
            FactoredCharPoly base = hyperpath_charpoly(2, 3);
            for (std::size_t i = 0; i < base.factors.size(); ++i) {
                for (int delta : {-1, 1}) {
                    FactoredCharPoly bad = base;
                    bad.factors[i].exp += delta;
                    CompareReport r = compare_against(bad, p23_oracle);
                    if (r.match || !r.first_mismatch.has_value()) ok = false;
                }
            }
            FactoredCharPoly bad_lambda = base;
            bad_lambda.lambda_exponent += 1;
            if (compare_against(bad_lambda, p23_oracle).match) ok = false;
        }
        report(10, ok, "corrupting any factor exponent of the (2,3) polynomial by 1 reports a mismatch");
    } catch (const std::exception& e) {
        report(10, false, std::string("exception: ") + e.what());
    }

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all 10 criteria passed" << std::endl;
    return 0;
}
