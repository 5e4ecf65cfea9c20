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

#include "hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hyperspec {

int Hypergraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges)
        if (std::binary_search(e.begin(), e.end(), v)) ++d;
    return d;
}

int Hypergraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

void Hypergraph::validate() const {
    if (k < 2) throw domain_error("uniformity k must be at least 2");
    if (n < 0) throw domain_error("negative vertex count");
    std::set<std::vector<int>> seen;
    for (const auto& e : edges) {
        if (static_cast<int>(e.size()) != k) throw domain_error("edge size differs from k");
        if (!std::is_sorted(e.begin(), e.end())) throw domain_error("edge vertices must be sorted");
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw domain_error("repeated vertex in edge");
        if (e.front() < 0 || e.back() >= n) throw domain_error("edge vertex out of range");
        if (!seen.insert(e).second) throw domain_error("duplicate edge");
    }
}

Hypergraph build_hyperpath(int m, int k) {
    if (m < 1) throw domain_error("hyperpath length must be at least 1");
    if (k < 2) throw domain_error("uniformity k must be at least 2");
    Hypergraph h;
    h.k = k;
    h.n = m * (k - 1) + 1;
    for (int i = 0; i < m; ++i) {
        std::vector<int> e(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) e[static_cast<std::size_t>(j)] = i * (k - 1) + j;
        h.edges.push_back(std::move(e));
    }
    return h;
}

int hyperpath_pendant_vertex(int m, int k) { return m * (k - 1); }

Hypergraph add_pendant_edge(const Hypergraph& h, int v) {
    if (v < 0 || v >= h.n) throw domain_error("attachment vertex out of range");
    Hypergraph out = h;
    std::vector<int> e;
    e.push_back(v);
    for (int i = 0; i < h.k - 1; ++i) e.push_back(h.n + i);
    std::sort(e.begin(), e.end());
    out.n = h.n + h.k - 1;
    out.edges.push_back(std::move(e));
    return out;
}

Hypergraph remove_vertex(const Hypergraph& h, int v) {
    if (v < 0 || v >= h.n) throw domain_error("vertex out of range");
    Hypergraph out;
    out.k = h.k;
    out.n = h.n - 1;
    for (const auto& e : h.edges) {
        if (std::binary_search(e.begin(), e.end(), v)) continue;
        std::vector<int> shifted;
        shifted.reserve(e.size());
        for (int w : e) shifted.push_back(w > v ? w - 1 : w);
        out.edges.push_back(std::move(shifted));
    }
    return out;
}

Hypergraph build_hyperstar(int s, int k) {
    if (s < 1) throw domain_error("hyperstar needs at least one edge");
    if (k < 2) throw domain_error("uniformity k must be at least 2");
    Hypergraph h;
    h.k = k;
    h.n = 1;
    for (int i = 0; i < s; ++i) h = add_pendant_edge(h, 0);
    return h;
}

Hypergraph build_broom(int m, int s, int k) {
    Hypergraph h = build_hyperpath(m, k);
    int v = hyperpath_pendant_vertex(m, k);
    for (int i = 0; i < s; ++i) h = add_pendant_edge(h, v);
    return h;
}

PolySystem eigen_system(const Hypergraph& h) {
    h.validate();
    PolySystem sys;
    sys.k = h.k;
    sys.n = h.n;
    sys.polys.resize(static_cast<std::size_t>(h.n));
    for (int i = 0; i < h.n; ++i) {
        auto& fi = sys.polys[static_cast<std::size_t>(i)];
        SysMonomial lead;
        lead.coeff = 1;
        lead.exps.assign(static_cast<std::size_t>(h.n), 0);
        lead.exps[static_cast<std::size_t>(i)] = h.k - 1;
        lead.ldeg = 1;
        fi.push_back(std::move(lead));
        for (const auto& e : h.edges) {
            if (!std::binary_search(e.begin(), e.end(), i)) continue;
            SysMonomial m;
            m.coeff = -1;
            m.exps.assign(static_cast<std::size_t>(h.n), 0);
            for (int w : e)
                if (w != i) m.exps[static_cast<std::size_t>(w)] += 1;
            m.ldeg = 0;
            fi.push_back(std::move(m));
        }
    }
    return sys;
}

namespace {

using ExpMap = std::map<std::vector<int>, Int>;

// multiply an exponent map by one linear form sum_l row[l] y_l
ExpMap mul_linear(const ExpMap& acc, const std::vector<Int>& row) {
    ExpMap out;
    for (const auto& [exps, c] : acc) {
        for (std::size_t l = 0; l < row.size(); ++l) {
            if (row[l] == 0) continue;
            std::vector<int> e = exps;
            e[l] += 1;
            out[e] += c * row[l];
        }
    }
    return out;
}

}  // namespace

PolySystem substitute_linear(const PolySystem& sys, const std::vector<std::vector<Int>>& u) {
    if (static_cast<int>(u.size()) != sys.n) throw domain_error("substitution matrix size mismatch");
    PolySystem out;
    out.k = sys.k;
    out.n = sys.n;
    out.polys.resize(sys.polys.size());
    for (std::size_t i = 0; i < sys.polys.size(); ++i) {
        ExpMap parts[2];
        for (const auto& m : sys.polys[i]) {
            ExpMap term;
            term[std::vector<int>(static_cast<std::size_t>(sys.n), 0)] = m.coeff;
            for (std::size_t v = 0; v < m.exps.size(); ++v)
                for (int rep = 0; rep < m.exps[v]; ++rep) term = mul_linear(term, u[v]);
            for (auto& [exps, c] : term) parts[m.ldeg][exps] += c;
        }
        for (int ld = 0; ld <= 1; ++ld) {
            for (auto& [exps, c] : parts[ld]) {
                if (c == 0) continue;
                out.polys[i].push_back({c, exps, ld});
            }
        }
    }
    return out;
}

namespace {

bool try_extend(const Hypergraph& g, const Hypergraph& h, std::vector<int>& map, std::vector<bool>& used, int v,
                const std::set<std::vector<int>>& hedges) {
    if (v == g.n) {
        std::set<std::vector<int>> mapped;
        for (const auto& e : g.edges) {
            std::vector<int> me;
            me.reserve(e.size());
            for (int w : e) me.push_back(map[static_cast<std::size_t>(w)]);
            std::sort(me.begin(), me.end());
            mapped.insert(std::move(me));
        }
        return mapped == hedges;
    }
    for (int w = 0; w < h.n; ++w) {
        if (used[static_cast<std::size_t>(w)]) continue;
        if (g.degree(v) != h.degree(w)) continue;
        map[static_cast<std::size_t>(v)] = w;
        used[static_cast<std::size_t>(w)] = true;
        // every fully mapped edge must already exist in h
        bool ok = true;
        for (const auto& e : g.edges) {
            bool full = true;
            std::vector<int> me;
            for (int x : e) {
                if (map[static_cast<std::size_t>(x)] < 0 && x != v) {
                    full = false;
                    break;
                }
                me.push_back(map[static_cast<std::size_t>(x)]);
            }
            if (!full) continue;
            std::sort(me.begin(), me.end());
            if (!hedges.count(me)) {
                ok = false;
                break;
            }
        }
        if (ok && try_extend(g, h, map, used, v + 1, hedges)) return true;
        map[static_cast<std::size_t>(v)] = -1;
        used[static_cast<std::size_t>(w)] = false;
    }
    return false;
}

}  // namespace

bool isomorphic(const Hypergraph& g, const Hypergraph& h) {
    if (g.k != h.k || g.n != h.n || g.edges.size() != h.edges.size()) return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.n; ++v) dg.push_back(g.degree(v));
    for (int v = 0; v < h.n; ++v) dh.push_back(h.degree(v));
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    std::set<std::vector<int>> hedges(h.edges.begin(), h.edges.end());
    std::vector<int> map(static_cast<std::size_t>(g.n), -1);
    std::vector<bool> used(static_cast<std::size_t>(g.n), false);
    return try_extend(g, h, map, used, 0, hedges);
}

}  // namespace hyperspec
