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

#include "hypergraph.hpp"
#include "json_io.hpp"

using namespace hyperspec;

TEST_CASE("hyperpath construction") {
    Hypergraph h = build_hyperpath(2, 3);
    CHECK(h.n == 5);
    REQUIRE(h.edges.size() == 2);
    CHECK(h.edges[0] == std::vector<int>{0, 1, 2});
    CHECK(h.edges[1] == std::vector<int>{2, 3, 4});

    Hypergraph p1 = build_hyperpath(1, 2);
    CHECK(p1.n == 2);
    CHECK(p1.edges == std::vector<std::vector<int>>{{0, 1}});

    Hypergraph p34 = build_hyperpath(3, 4);
    CHECK(p34.n == 10);
    CHECK(p34.edges.size() == 3);
    CHECK(p34.edges[1][0] == 3);  // consecutive edges share exactly one vertex
    CHECK(p34.edges[2][0] == 6);

    for (int m = 1; m <= 50; ++m) {
        for (int k = 2; k <= 8; ++k) {
            Hypergraph g = build_hyperpath(m, k);
            g.validate();
            CHECK(g.n == m * (k - 1) + 1);
            CHECK(static_cast<int>(g.edges.size()) == m);
            for (std::size_t e = 1; e < g.edges.size(); ++e) {
                std::vector<int> shared;
                std::set_intersection(g.edges[e - 1].begin(), g.edges[e - 1].end(), g.edges[e].begin(),
                                      g.edges[e].end(), std::back_inserter(shared));
                CHECK(shared.size() == 1);
            }
            CHECK(g.max_degree() <= 2);
        }
    }

    CHECK_THROWS_AS(build_hyperpath(0, 3), domain_error);
    CHECK_THROWS_AS(build_hyperpath(2, 1), domain_error);
}

TEST_CASE("pendant edges") {
    Hypergraph edge = build_hyperpath(1, 3);
    Hypergraph grown = add_pendant_edge(edge, 2);
    CHECK(isomorphic(grown, build_hyperpath(2, 3)));

    Hypergraph star;
    star.k = 3;
    star.n = 1;
    for (int s = 0; s < 3; ++s) star = add_pendant_edge(star, 0);
    CHECK(isomorphic(star, build_hyperstar(3, 3)));
    CHECK(star.degree(0) == 3);
    for (int v = 1; v < star.n; ++v) CHECK(star.degree(v) == 1);

    CHECK_THROWS_AS(add_pendant_edge(edge, 5), domain_error);

    // a broom with one extra edge at the end is the longer hyperpath
    for (int k : {2, 3, 4})
        for (int m = 1; m <= 3; ++m) CHECK(isomorphic(build_broom(m, 1, k), build_hyperpath(m + 1, k)));
}

TEST_CASE("vertex removal") {
    Hypergraph edge = build_hyperpath(1, 3);
    Hypergraph r = remove_vertex(edge, 0);
    CHECK(r.n == 2);
    CHECK(r.edges.empty());

    Hypergraph p2 = build_hyperpath(2, 3);
    Hypergraph shared_removed = remove_vertex(p2, 2);
    CHECK(shared_removed.n == 4);
    CHECK(shared_removed.edges.empty());

    Hypergraph with_isolated = edge;
    with_isolated.n = 4;  // vertex 3 isolated
    Hypergraph dropped = remove_vertex(with_isolated, 3);
    CHECK(dropped.n == 3);
    CHECK(dropped.edges == edge.edges);

    CHECK_THROWS_AS(remove_vertex(edge, 3), domain_error);
}

TEST_CASE("pendant edge then removing a fresh vertex restores the original plus k-2 isolated") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        int k = 2 + static_cast<int>(rng() % 4);
        int m = 1 + static_cast<int>(rng() % 3);
        Hypergraph h = build_hyperpath(m, k);
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(h.n));
        Hypergraph grown = add_pendant_edge(h, v);
        int fresh = h.n + static_cast<int>(rng() % static_cast<std::uint64_t>(k - 1));
        Hypergraph back = remove_vertex(grown, fresh);

        Hypergraph expected = h;
        expected.n += k - 2;
        CHECK(isomorphic(back, expected));
    }
}

TEST_CASE("eigen systems") {
    Hypergraph edge = build_hyperpath(1, 3);
    PolySystem sys = eigen_system(edge);
    REQUIRE(sys.polys.size() == 3);
    for (int i = 0; i < 3; ++i) {
        const auto& fi = sys.polys[static_cast<std::size_t>(i)];
        REQUIRE(fi.size() == 2);
        CHECK(fi[0].ldeg == 1);
        CHECK(fi[0].coeff == 1);
        CHECK(fi[0].exps[static_cast<std::size_t>(i)] == 2);
        CHECK(fi[1].ldeg == 0);
        CHECK(fi[1].coeff == -1);
        CHECK(fi[1].exps[static_cast<std::size_t>(i)] == 0);
    }

    Hypergraph lonely;
    lonely.k = 3;
    lonely.n = 1;
    PolySystem alone = eigen_system(lonely);
    REQUIRE(alone.polys.size() == 1);
    REQUIRE(alone.polys[0].size() == 1);
    CHECK(alone.polys[0][0].ldeg == 1);

    // k=2 path: rows of lambda I - adjacency matrix
    Hypergraph p2 = build_hyperpath(2, 2);
    PolySystem msys = eigen_system(p2);
    CHECK(msys.polys[1].size() == 3);  // lambda x_1 - x_0 - x_2

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        int k = 2 + static_cast<int>(rng() % 4);
        Hypergraph h = build_hyperpath(1 + static_cast<int>(rng() % 3), k);
        PolySystem s = eigen_system(h);
        for (const auto& fi : s.polys) {
            for (const auto& mono : fi) {
                int total = 0;
                for (int e : mono.exps) total += e;
                CHECK(total == k - 1);  // homogeneous of degree k-1
            }
        }
    }
}

TEST_CASE("hypergraph JSON") {
    Hypergraph h = build_hyperpath(2, 3);
    json j = hypergraph_to_json(h);
    Hypergraph back = hypergraph_from_json(j);
    CHECK(back.k == h.k);
    CHECK(back.n == h.n);
    CHECK(back.edges == h.edges);
    CHECK(hypergraph_to_json(back).dump() == j.dump());

    json bad = {{"k", 3}, {"n", 2}, {"edges", {{0, 1, 1}}}};
    CHECK_THROWS_AS(hypergraph_from_json(bad), domain_error);
    json out_of_range = {{"k", 3}, {"n", 2}, {"edges", {{0, 1, 2}}}};
    CHECK_THROWS_AS(hypergraph_from_json(out_of_range), domain_error);

    // unsorted input edges are normalized on parse
    json unsorted = {{"k", 3}, {"n", 3}, {"edges", {{2, 0, 1}}}};
    CHECK(hypergraph_from_json(unsorted).edges[0] == std::vector<int>{0, 1, 2});
}
