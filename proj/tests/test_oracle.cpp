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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fp64.hpp"
#include "json_io.hpp"
#include "oracle.hpp"
#include "pathpoly.hpp"
#include "reduction.hpp"
#include "verify.hpp"

using namespace hyperspec;

namespace {

IntPoly poly(std::initializer_list<long> coeffs) {
    std::vector<Int> v;
    for (long c : coeffs) v.emplace_back(c);
    return IntPoly(std::move(v));
}

}  // namespace

TEST_CASE("integer Bareiss determinants") {
    CHECK(bareiss_det({{Int(2)}}) == 2);
    CHECK(bareiss_det({{Int(1), Int(2)}, {Int(3), Int(4)}}) == -2);
    CHECK(bareiss_det({{Int(0), Int(1)}, {Int(1), Int(0)}}) == -1);
    CHECK(bareiss_det({{Int(2), Int(0), Int(1)}, {Int(0), Int(3), Int(0)}, {Int(1), Int(0), Int(2)}}) == 9);
}

TEST_CASE("matrix characteristic polynomials") {
    CHECK(matrix_charpoly(build_hyperpath(2, 2)).poly == poly({0, -2, 0, 1}));
    CHECK(matrix_charpoly(build_hyperpath(3, 2)).poly == poly({1, 0, -3, 0, 1}));

    Hypergraph edgeless;
    edgeless.k = 2;
    edgeless.n = 4;
    CHECK(matrix_charpoly(edgeless).poly == IntPoly::monomial(Int(1), 4));

    // independent route: the path recurrence
    for (int m = 1; m <= 8; ++m)
        CHECK(matrix_charpoly(build_hyperpath(m, 2)).poly == path_charpoly_closed(m).poly);

    CHECK_THROWS_AS(matrix_charpoly(build_hyperpath(1, 3)), domain_error);
}

TEST_CASE("Macaulay matrix shape") {
    MacaulayMatrix m13(eigen_system(build_hyperpath(1, 3)), 512);
    CHECK(m13.dimension() == 15);
    CHECK(m13.minor_dimension() == 3);

    MacaulayMatrix m23(eigen_system(build_hyperpath(2, 3)), 512);
    CHECK(m23.dimension() == 210);
    CHECK(m23.minor_dimension() == 130);

    // k=2: D = 1, all monomials reduced, the minor is empty
    MacaulayMatrix m22(eigen_system(build_hyperpath(2, 2)), 512);
    CHECK(m22.dimension() == 3);
    CHECK(m22.minor_dimension() == 0);
}

TEST_CASE("Macaulay resultant of the single edge") {
    CharPolyResult r = macaulay_charpoly(build_hyperpath(1, 3));
    IntPoly want;
    {
        std::vector<Int> v(13);
        v[12] = 1;
        v[9] = -3;
        v[6] = 3;
        v[3] = -1;
        want = IntPoly(std::move(v));
    }
    CHECK(r.poly == want);
    CHECK(r.poly == single_edge_charpoly(3).expand());
    CHECK(r.primes_used.size() >= 3);
    CHECK(r.method == OracleMethod::macaulay);
}

TEST_CASE("Macaulay agrees with the matrix route on graphs") {
    CHECK(macaulay_charpoly(build_hyperpath(2, 2)).poly == poly({0, -2, 0, 1}));

    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        Hypergraph g = random_graph(rng, 2, 6);
        CharPolyResult mat = matrix_charpoly(g);
        CharPolyResult mac = macaulay_charpoly(g);
        CHECK(mat.poly == mac.poly);
        CHECK(mac.poly.degree() == g.n);
        CHECK(mac.poly.leading() == 1);
    }
}

TEST_CASE("samples with a vanishing minor are signalled, not mangled") {
    // for the single edge the minor determinant is x^3, zero exactly at x = 0
    MacaulayMatrix mm(eigen_system(build_hyperpath(1, 3)), 512);
    const std::uint64_t p = fp::nth_prime_above_2_62(0);
    std::uint64_t out = 0;
    CHECK_FALSE(mm.ratio_mod(0, p, out));
    CHECK(mm.ratio_mod(1, p, out));
}

TEST_CASE("the oracle handles hypergraphs outside the closed-form families") {
    // three triangles of a 3-uniform clique fragment on four vertices
    Hypergraph h;
    h.k = 3;
    h.n = 4;
    h.edges = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}};
    h.validate();
    CharPolyResult r = macaulay_charpoly(h);
    CHECK(r.poly.degree() == 32);  // n(k-1)^(n-1)
    CHECK(r.poly.leading() == 1);

    // a wrong closed form is flagged against it
    CompareReport verdict = compare_against(single_edge_charpoly(3), r);
    CHECK_FALSE(verdict.match);
}

TEST_CASE("edgeless hypergraphs give pure lambda powers") {
    for (int n = 1; n <= 3; ++n) {
        Hypergraph h;
        h.k = 3;
        h.n = n;
        CharPolyResult r = macaulay_charpoly(h);
        Int deg = charpoly_degree_for(n, 3);
        CHECK(r.poly == IntPoly::monomial(Int(1), static_cast<std::size_t>(deg.get_ui())));
    }
}

TEST_CASE("resultant scaling in one polynomial") {
    // multiplying F_i by c multiplies the resultant by c^((k-1)^(n-1))
    PolySystem sys = eigen_system(build_hyperpath(1, 3));
    PolySystem scaled = sys;
    const Int c(7);
    for (auto& mono : scaled.polys[1]) mono.coeff *= c;

    MacaulayMatrix plain(sys, 512);
    MacaulayMatrix twisted(scaled, 512);
    const std::uint64_t p = fp::nth_prime_above_2_62(0);
    const std::uint64_t c4 = fp::pow(7, 4, p);  // (k-1)^(n-1) = 4
    for (std::uint64_t x : {2ull, 3ull, 5ull, 11ull, 20ull}) {
        std::uint64_t a = 0, b = 0;
        REQUIRE(plain.ratio_mod(x, p, a));
        REQUIRE(twisted.ratio_mod(x, p, b));
        CHECK(b == fp::mul(a, c4, p));
    }
}

TEST_CASE("resultant specialization when the last polynomial is a pure power") {
    // appending F_n = x_n^(k-1) raises the reduced resultant to the (k-1)-th power
    PolySystem sys = eigen_system(build_hyperpath(1, 3));  // 3 variables
    PolySystem extended = sys;
    extended.n = 4;
    for (auto& fi : extended.polys)
        for (auto& mono : fi) mono.exps.push_back(0);
    SysMonomial pure;
    pure.coeff = 1;
    pure.exps = {0, 0, 0, 2};
    pure.ldeg = 0;
    extended.polys.push_back({pure});

    MacaulayMatrix reduced(sys, 512);
    MacaulayMatrix ext(extended, 512);
    const std::uint64_t p = fp::nth_prime_above_2_62(1);
    for (std::uint64_t x : {2ull, 3ull, 7ull, 13ull}) {
        std::uint64_t a = 0, b = 0;
        REQUIRE(reduced.ratio_mod(x, p, a));
        REQUIRE(ext.ratio_mod(x, p, b));
        CHECK(b == fp::mul(a, a, p));
    }
}

TEST_CASE("unimodular change of variables preserves the resultant up to sign") {
    PolySystem sys = eigen_system(build_hyperpath(1, 3));
    std::vector<std::vector<Int>> u = {{Int(1), Int(1), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(1), Int(0), Int(1)}};
    PolySystem transformed = substitute_linear(sys, u);

    MacaulayMatrix plain(sys, 512);
    MacaulayMatrix moved(transformed, 4096);  // the transformed system is denser
    const std::uint64_t p = fp::nth_prime_above_2_62(0);
    int sign = 0;
    for (std::uint64_t x = 2; x <= 12; ++x) {
        std::uint64_t a = 0, b = 0;
        if (!plain.ratio_mod(x, p, a) || !moved.ratio_mod(x, p, b)) continue;
        int s = (a == b) ? 1 : (fp::neg(a, p) == b ? -1 : 0);
        REQUIRE(s != 0);
        if (sign == 0) sign = s;
        CHECK(s == sign);  // one consistent sign across samples
    }
    CHECK(sign != 0);
}

TEST_CASE("the oracle gives up loudly when no prime can certify") {
    OracleBudget strangled;
    strangled.max_primes = 0;
    CHECK_THROWS_AS(macaulay_charpoly(build_hyperpath(1, 3), strangled), oracle_error);
}

TEST_CASE("budget refusal reports the required dimension") {
    try {
        macaulay_charpoly(build_hyperpath(3, 3));  // needs 3003x3003
        FAIL("expected budget_error");
    } catch (const budget_error& e) {
        CHECK(std::string(e.what()).find("3003") != std::string::npos);
    }
}

TEST_CASE("oracle comparison verdicts") {
    Hypergraph h = build_hyperpath(1, 3);
    CompareReport ok = oracle_compare(single_edge_charpoly(3), h);
    CHECK(ok.match);
    CHECK_FALSE(ok.first_mismatch.has_value());

    // corrupted exponent: degree changes, mismatch reported at the top
    FactoredCharPoly bad = single_edge_charpoly(3);
    bad.factors[0].exp += 1;
    CompareReport broken = oracle_compare(bad, h);
    CHECK_FALSE(broken.match);
    REQUIRE(broken.first_mismatch.has_value());

    // same-degree corruption: first differing coefficient is identified
    FactoredCharPoly shuffled = single_edge_charpoly(3);
    shuffled.lambda_exponent -= 3;
    shuffled.factors[0].exp += 1;  // lambda^0 (mu-1)^4, still degree 12
    CompareReport subtle = oracle_compare(shuffled, h);
    CHECK_FALSE(subtle.match);
    REQUIRE(subtle.first_mismatch.has_value());
    CHECK(subtle.first_mismatch->exponent == 0);  // constant terms differ: 0 vs 1

    // modular comparison path when expansion is refused
    ExpandBudget tiny{4};
    CompareReport modular = oracle_compare(single_edge_charpoly(3), h, {}, tiny);
    CHECK(modular.match);
    CompareReport modular_bad = oracle_compare(shuffled, h, {}, tiny);
    CHECK_FALSE(modular_bad.match);
    REQUIRE(modular_bad.first_mismatch.has_value());
}

TEST_CASE("k=2 brooms agree with the matrix oracle") {
    // spiders: a path with s extra leaves at its end; exercises the
    // higher translates against an independent route
    for (int m = 1; m <= 3; ++m) {
        for (int s = 1; s <= 4; ++s) {
            IntPoly closed = broom_charpoly(m, s, 2).expand();
            IntPoly direct = matrix_charpoly(build_broom(m, s, 2)).poly;
            CHECK(closed == direct);
        }
    }
}

TEST_CASE("a broom with one extra edge is the longer hyperpath") {
    for (int k : {2, 3}) {
        for (int m = 1; m <= 3; ++m) CHECK(broom_charpoly(m, 1, k) == hyperpath_charpoly(m + 1, k));
    }
}

TEST_CASE("k=2 pendant reduction equals the Harary formula on random graphs") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        Hypergraph g = random_graph(rng, 2, 8);
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(g.n));
        IntPoly phi_g = matrix_charpoly(g).poly;
        IntPoly phi_gv = matrix_charpoly(remove_vertex(g, v)).poly;
        IntPoly want = phi_g.shifted_up(1) - phi_gv;
        FactoredCharPoly reduced = pendant_charpoly_via_reduction(g, v);
        CHECK(reduced.expand() == want);

        // factors may live in lambda itself at k=2; JSON must round-trip them
        json j = charpoly_to_json(reduced);
        CHECK(charpoly_from_json(j) == reduced);
    }
}
