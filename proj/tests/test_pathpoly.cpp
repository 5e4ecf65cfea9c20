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

#include "mpreal.hpp"
#include "pathpoly.hpp"

using namespace hyperspec;

namespace {

IntPoly poly(std::initializer_list<long> coeffs) {
    std::vector<Int> v;
    for (long c : coeffs) v.emplace_back(c);
    return IntPoly(std::move(v));
}

}  // namespace

TEST_CASE("closed-form path polynomials") {
    CHECK(path_charpoly_closed(-1).poly == IntPoly::one());
    CHECK(path_charpoly_closed(0).poly == poly({0, 1}));
    CHECK(path_charpoly_closed(2).poly == poly({0, -2, 0, 1}));
    CHECK_THROWS_AS(path_charpoly_closed(-2), domain_error);
}

TEST_CASE("recurrence matches the closed form") {
    CHECK(path_charpoly_recurrence(1).poly == poly({-1, 0, 1}));
    CHECK(path_charpoly_recurrence(3).poly == poly({1, 0, -3, 0, 1}));
    for (long j = 1; j <= 40; ++j) CHECK(path_charpoly_recurrence(j).poly == path_charpoly_closed(j).poly);
}

TEST_CASE("parity split and round-trip") {
    auto s2 = parity_split(path_charpoly_closed(2));
    CHECK(s2.eps == 1);
    CHECK(s2.h == poly({-2, 1}));
    auto s1 = parity_split(path_charpoly_closed(1));
    CHECK(s1.eps == 0);
    CHECK(s1.h == poly({-1, 1}));
    auto s0 = parity_split(path_charpoly_closed(0));
    CHECK(s0.eps == 1);
    CHECK(s0.h == IntPoly::one());

    for (long j = 0; j <= 40; ++j) {
        PathPoly p = path_charpoly_closed(j);
        auto s = parity_split(p);
        CHECK(s.h.degree() == (j + 1) / 2);
        IntPoly rebuilt = s.h.stretched(2).shifted_up(static_cast<std::size_t>(s.eps));
        CHECK(rebuilt == p.poly);
    }

    PathPoly corrupted{2, poly({1, -2, 0, 1})};  // even coefficient snuck into an odd polynomial
    CHECK_THROWS_AS(parity_split(corrupted), assembly_error);
}

TEST_CASE("path eigenvalue angles") {
    auto a2 = path_eigenvalues(2);
    REQUIRE(a2.size() == 3);
    CHECK(a2[0] == make_rat(1, 4));
    CHECK(a2[1] == make_rat(1, 2));
    CHECK(a2[2] == make_rat(3, 4));

    auto a0 = path_eigenvalues(0);
    REQUIRE(a0.size() == 1);
    CHECK(a0[0] == make_rat(1, 2));
}

TEST_CASE("each angle is a root of the path polynomial") {
    const mpfr_prec_t prec = 200;
    for (long m = 0; m <= 12; ++m) {
        IntPoly p = path_charpoly_closed(m).poly;
        for (const Rat& q : path_eigenvalues(m)) {
            Real lam = Real::of(2, prec) * (Real::pi(prec) * Real::of(q, prec)).cos();
            Cplx value = eval_real(p, Cplx{lam, Real(prec)}, prec);
            CHECK(value.abs().to_double() < 1e-12);
        }
    }
}

TEST_CASE("product over angles reproduces the polynomial numerically") {
    const mpfr_prec_t prec = 200;
    std::mt19937_64 rng(31);
    for (long m = 0; m <= 40; ++m) {
        IntPoly p = path_charpoly_closed(m).poly;
        auto angles = path_eigenvalues(m);
        for (int trial = 0; trial < 10; ++trial) {
            Rat x(static_cast<long>(rng() % 600) - 300, static_cast<long>(rng() % 20) + 1);
            x.canonicalize();
            Real xr = Real::of(x, prec);
            Real prod = Real::of(1, prec);
            for (const Rat& q : angles)
                prod = prod * (xr - Real::of(2, prec) * (Real::pi(prec) * Real::of(q, prec)).cos());
            Real direct = Real::of(eval_exact(p, x), prec);
            Real err = (prod - direct).abs();
            Real scale = direct.abs() + Real::of(1, prec);
            CHECK((err / scale).to_double() < 1e-9);
        }
    }
}
