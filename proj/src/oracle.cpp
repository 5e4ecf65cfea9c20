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

#include "oracle.hpp"

#include <map>
#include <random>

#include "fp64.hpp"
#include "reduction.hpp"

namespace hyperspec {

namespace {

std::uint64_t cached_prime(int i) {
    static std::vector<std::uint64_t> primes;
    while (static_cast<int>(primes.size()) <= i)
        primes.push_back(fp::nth_prime_above_2_62(static_cast<int>(primes.size())));
    return primes[static_cast<std::size_t>(i)];
}

// dense determinant mod p, in place
std::uint64_t det_mod(std::vector<std::uint64_t>& a, long dim, std::uint64_t p) {
    std::uint64_t det = 1;
    for (long c = 0; c < dim; ++c) {
        long pivot = -1;
        for (long r = c; r < dim; ++r) {
            if (a[static_cast<std::size_t>(r * dim + c)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != c) {
            for (long j = c; j < dim; ++j)
                std::swap(a[static_cast<std::size_t>(pivot * dim + j)], a[static_cast<std::size_t>(c * dim + j)]);
            det = fp::neg(det, p);
        }
        std::uint64_t d = a[static_cast<std::size_t>(c * dim + c)];
        det = fp::mul(det, d, p);
        std::uint64_t dinv = fp::inv(d, p);
        for (long r = c + 1; r < dim; ++r) {
            std::uint64_t f = fp::mul(a[static_cast<std::size_t>(r * dim + c)], dinv, p);
            if (f == 0) continue;
            const std::size_t rb = static_cast<std::size_t>(r * dim);
            const std::size_t cb = static_cast<std::size_t>(c * dim);
            for (long j = c; j < dim; ++j)
                a[rb + static_cast<std::size_t>(j)] =
                    fp::sub(a[rb + static_cast<std::size_t>(j)], fp::mul(f, a[cb + static_cast<std::size_t>(j)], p), p);
        }
    }
    return det;
}

}  // namespace

Int bareiss_det(std::vector<std::vector<Int>> m) {
    const long n = static_cast<long>(m.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (long c = 0; c < n - 1; ++c) {
        long pivot = -1;
        for (long r = c; r < n; ++r) {
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != c) {
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(c)]);
            sign = -sign;
        }
        for (long r = c + 1; r < n; ++r) {
            for (long j = c + 1; j < n; ++j) {
                Int t = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *
                            m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)] -
                        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
                            m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = t;
            }
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
        }
        prev = m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    }
    Int d = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return sign < 0 ? Int(-d) : d;
}

CharPolyResult matrix_charpoly(const Hypergraph& h) {
    h.validate();
    if (h.k != 2) throw domain_error("matrix route requires k = 2");
    const long n = h.n;
    CharPolyResult out;
    out.method = OracleMethod::matrix;
    if (n == 0) {
        out.poly = IntPoly::one();
        return out;
    }

    // Bareiss over integer polynomials on lambda I - A
    std::vector<std::vector<IntPoly>> m(static_cast<std::size_t>(n),
                                        std::vector<IntPoly>(static_cast<std::size_t>(n)));
    for (long i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
        IntPoly::monomial(Int(1), 1);
    for (const auto& e : h.edges) {
        m[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[1])] = IntPoly(Int(-1));
        m[static_cast<std::size_t>(e[1])][static_cast<std::size_t>(e[0])] = IntPoly(Int(-1));
    }

    IntPoly prev = IntPoly::one();
    int sign = 1;
    for (long c = 0; c < n - 1; ++c) {
        long pivot = -1;
        for (long r = c; r < n; ++r) {
            if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            out.poly = IntPoly();
            return out;  // cannot happen for lambda I - A, kept for generality
        }
        if (pivot != c) {
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(c)]);
            sign = -sign;
        }
        for (long r = c + 1; r < n; ++r) {
            for (long j = c + 1; j < n; ++j) {
                IntPoly t = mul_expand(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)],
                                       m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)]) -
                            mul_expand(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)],
                                       m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)]);
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = divexact(t, prev);
            }
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = IntPoly();
        }
        prev = m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    }
    IntPoly det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    out.poly = sign < 0 ? -det : det;
    return out;
}

namespace {

void enumerate_monomials(int n, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = total; v >= 0; --v) {
        cur.push_back(v);
        enumerate_monomials(n, total - v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

MacaulayMatrix::MacaulayMatrix(const PolySystem& sys, long max_dimension) {
    const int n = sys.n;
    const int k = sys.k;
    if (n < 1) throw domain_error("Macaulay matrix needs at least one variable");
    const int d = k - 1;
    const long D = static_cast<long>(n) * (k - 2) + 1;

    Int dim_check;
    mpz_bin_uiui(dim_check.get_mpz_t(), static_cast<unsigned long>(D + n - 1), static_cast<unsigned long>(n - 1));
    if (dim_check > max_dimension)
        throw budget_error("Macaulay matrix would be " + dim_check.get_str() + "x" + dim_check.get_str() +
                           " (budget " + std::to_string(max_dimension) + ")");

    std::vector<std::vector<int>> monos;
    std::vector<int> cur;
    enumerate_monomials(n, static_cast<int>(D), cur, monos);
    dim_ = static_cast<long>(monos.size());
    std::map<std::vector<int>, long> index;
    for (long i = 0; i < dim_; ++i) index[monos[static_cast<std::size_t>(i)]] = i;

    rows_.resize(static_cast<std::size_t>(dim_));
    minor_index_.assign(static_cast<std::size_t>(dim_), -1);
    for (long r = 0; r < dim_; ++r) {
        const auto& alpha = monos[static_cast<std::size_t>(r)];
        int cls = -1;
        int divisible = 0;
        for (int i = 0; i < n; ++i) {
            if (alpha[static_cast<std::size_t>(i)] >= d) {
                ++divisible;
                if (cls < 0) cls = i;
            }
        }
        if (cls < 0) throw error("degree bound broken: no reduction class");
        if (divisible >= 2) {
            minor_index_[static_cast<std::size_t>(r)] = static_cast<long>(minor_rows_.size());
            minor_rows_.push_back(r);
        }

        std::map<long, std::pair<Int, Int>> acc;
        for (const auto& mono : sys.polys[static_cast<std::size_t>(cls)]) {
            std::vector<int> gamma = alpha;
            gamma[static_cast<std::size_t>(cls)] -= d;
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                gamma[static_cast<std::size_t>(i)] += mono.exps[static_cast<std::size_t>(i)];
                if (gamma[static_cast<std::size_t>(i)] < 0) ok = false;
            }
            if (!ok) throw error("negative exponent in Macaulay row");
            long col = index.at(gamma);
            if (mono.ldeg == 0)
                acc[col].first += mono.coeff;
            else
                acc[col].second += mono.coeff;
        }
        for (auto& [col, cc] : acc) {
            if (cc.first == 0 && cc.second == 0) continue;
            rows_[static_cast<std::size_t>(r)].push_back({col, cc.first, cc.second});
        }
    }
}

bool MacaulayMatrix::ratio_mod(std::uint64_t x, std::uint64_t p, std::uint64_t& out) const {
    auto entry_value = [&](const Entry& e) {
        std::uint64_t c0 = mpz_fdiv_ui(e.c0.get_mpz_t(), p);
        std::uint64_t c1 = mpz_fdiv_ui(e.c1.get_mpz_t(), p);
        return fp::add(c0, fp::mul(x, c1, p), p);
    };
    const long dm = static_cast<long>(minor_rows_.size());

    // minor first: its vanishing invalidates the sample
    std::uint64_t det_minor = 1;
    if (dm > 0) {
        std::vector<std::uint64_t> b(static_cast<std::size_t>(dm * dm), 0);
        for (long i = 0; i < dm; ++i) {
            long r = minor_rows_[static_cast<std::size_t>(i)];
            for (const auto& e : rows_[static_cast<std::size_t>(r)]) {
                long mc = minor_index_[static_cast<std::size_t>(e.col)];
                if (mc < 0) continue;
                b[static_cast<std::size_t>(i * dm + mc)] = entry_value(e);
            }
        }
        det_minor = det_mod(b, dm, p);
        if (det_minor == 0) return false;
    }

    std::vector<std::uint64_t> a(static_cast<std::size_t>(dim_ * dim_), 0);
    for (long r = 0; r < dim_; ++r)
        for (const auto& e : rows_[static_cast<std::size_t>(r)])
            a[static_cast<std::size_t>(r * dim_ + e.col)] = entry_value(e);
    std::uint64_t det_full = det_mod(a, dim_, p);

    out = fp::mul(det_full, fp::inv(det_minor, p), p);
    return true;
}

namespace {

std::vector<std::vector<Int>> random_unimodular(int n, std::mt19937_64& rng) {
    std::vector<std::vector<Int>> u(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    if (n < 2) return u;
    // a few elementary row additions keep det = +-1 and entries small
    for (int step = 0; step < 2 * n; ++step) {
        int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (i == j) continue;
        Int s = (rng() & 1) ? 1 : -1;
        for (int c = 0; c < n; ++c)
            u[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] +=
                s * u[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
    }
    return u;
}

Int symmetric_lift(const Int& r, const Int& modulus) {
    Int half = modulus / 2;
    return r > half ? Int(r - modulus) : r;
}

}  // namespace

CharPolyResult macaulay_charpoly(const Hypergraph& h, const OracleBudget& budget) {
    h.validate();
    CharPolyResult out;
    out.method = OracleMethod::macaulay;
    if (h.n == 0) {
        out.poly = IntPoly::one();
        return out;
    }

    Int deg_expected = charpoly_degree_for(h.n, h.k);
    if (!deg_expected.fits_slong_p() || deg_expected.get_si() > budget.max_dimension)
        throw budget_error("resultant degree " + deg_expected.get_str() + " exceeds the dimension budget");
    const long dres = deg_expected.get_si();

    // coefficient bound: |eigenvalues| <= max degree by the row-sum bound,
    // so |c_j| <= C(dres, j) Delta^(dres-j) <= (1+Delta)^dres
    Int bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(1 + h.max_degree()),
                  static_cast<unsigned long>(dres));

    PolySystem base_sys = eigen_system(h);
    std::mt19937_64 rng(budget.seed);
    int next_prime = 0;
    long total_samples = 0;

    for (int attempt = 0; attempt <= budget.max_transform_attempts; ++attempt) {
        PolySystem sys = attempt == 0 ? base_sys : substitute_linear(base_sys, random_unimodular(h.n, rng));
        MacaulayMatrix mm(sys, budget.max_dimension);
        if (attempt == 0 && mm.dimension() - mm.minor_dimension() != dres)
            throw error("Macaulay dimension bookkeeping is wrong");

        Int modulus = 1;
        std::vector<Int> residues;
        std::vector<std::vector<Int>> lift_history;
        std::vector<Int> modulus_history;
        std::vector<std::uint64_t> primes_used;
        int consecutive_bad = 0;

        for (int pi = 0; pi < budget.max_primes; ++pi) {
            std::uint64_t p = cached_prime(next_prime++);
            const std::size_t want = static_cast<std::size_t>(dres) + 3;  // 2 consistency points
            std::vector<std::pair<std::uint64_t, std::uint64_t>> points;
            std::uint64_t x = 1;
            std::uint64_t tried = 0;
            const std::uint64_t max_tries = 4 * static_cast<std::uint64_t>(want) + 64;
            while (points.size() < want && tried < max_tries) {
                ++tried;
                std::uint64_t value = 0;
                if (mm.ratio_mod(x, p, value)) points.emplace_back(x, value);
                ++x;
            }
            total_samples += static_cast<long>(points.size());

            bool good = points.size() >= want;
            std::vector<std::uint64_t> interp;
            if (good) {
                try {
                    interp = interpolate_mod(points, static_cast<std::size_t>(dres), p);
                } catch (const domain_error&) {
                    good = false;
                }
            }
            if (good) {
                std::uint64_t lead = interp[static_cast<std::size_t>(dres)];
                if (lead == p - 1)
                    for (auto& c : interp) c = fp::neg(c, p);
                else if (lead != 1)
                    good = false;
            }
            if (!good) {
                if (++consecutive_bad >= 3) break;  // structural failure; change variables
                continue;
            }
            consecutive_bad = 0;
            primes_used.push_back(p);

            // CRT merge
            if (residues.empty()) residues.assign(static_cast<std::size_t>(dres) + 1, 0);
            Int pz(static_cast<unsigned long>(p));
            Int minv;
            if (modulus == 1) {
                for (std::size_t j = 0; j < residues.size(); ++j)
                    residues[j] = Int(static_cast<unsigned long>(interp[j]));
                modulus = pz;
            } else {
                mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
                for (std::size_t j = 0; j < residues.size(); ++j) {
                    Int rj = residues[j];
                    Int delta = (Int(static_cast<unsigned long>(interp[j])) - rj) % pz;
                    if (delta < 0) delta += pz;
                    residues[j] = rj + modulus * ((delta * minv) % pz);
                }
                modulus *= pz;
            }
            std::vector<Int> lift(residues.size());
            for (std::size_t j = 0; j < residues.size(); ++j) lift[j] = symmetric_lift(residues[j], modulus);
            lift_history.push_back(lift);
            modulus_history.push_back(modulus);

            // certified once two further primes reproduce a lift obtained
            // past twice the coefficient bound
            std::size_t hn = lift_history.size();
            if (hn >= 3 && lift_history[hn - 1] == lift_history[hn - 2] &&
                lift_history[hn - 2] == lift_history[hn - 3] && modulus_history[hn - 3] > 2 * bound) {
                IntPoly poly{std::vector<Int>(lift)};
                if (poly.degree() != dres || poly.leading() != 1)
                    throw oracle_error("certified resultant is not monic of the expected degree");
                out.poly = poly;
                out.primes_used = primes_used;
                out.sample_count = total_samples;
                return out;
            }
        }
        // fall through: next attempt with a change of variables
    }
    throw oracle_error("Macaulay oracle inconclusive: minor kept vanishing after variable-change retries");
}

CharPolyResult oracle_charpoly(const Hypergraph& h, const OracleBudget& budget) {
    return h.k == 2 ? matrix_charpoly(h) : macaulay_charpoly(h, budget);
}

namespace {

CompareReport compare_modular(const FactoredCharPoly& closed, const CharPolyResult& oracle,
                              CompareReport report) {
    const long deg = oracle.poly.degree();
    for (int pi = 0; pi < 2; ++pi) {
        std::uint64_t p = cached_prime(pi);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> closed_pts, oracle_pts;
        bool equal = true;
        for (long x = 1; x <= deg + 1; ++x) {
            std::uint64_t xc = static_cast<std::uint64_t>(x);
            std::uint64_t cv = eval_factored_mod(closed, xc, p);
            std::uint64_t ov = eval_mod(oracle.poly, xc, p);
            closed_pts.emplace_back(xc, cv);
            oracle_pts.emplace_back(xc, ov);
            if (cv != ov) equal = false;
        }
        if (!equal) {
            auto ci = interpolate_mod(closed_pts, static_cast<std::size_t>(deg), p);
            auto oi = interpolate_mod(oracle_pts, static_cast<std::size_t>(deg), p);
            for (std::size_t j = 0; j < ci.size(); ++j) {
                if (ci[j] != oi[j]) {
                    report.match = false;
                    report.first_mismatch = CompareMismatch{static_cast<long>(j),
                                                            std::to_string(oi[j]) + " (mod " + std::to_string(p) + ")",
                                                            std::to_string(ci[j]) + " (mod " + std::to_string(p) + ")"};
                    return report;
                }
            }
        }
    }
    report.match = true;
    return report;
}

}  // namespace

CompareReport compare_against(const FactoredCharPoly& closed, const CharPolyResult& oracle,
                              const ExpandBudget& expand_budget) {
    CompareReport report;
    report.method = oracle.method;
    report.degree = oracle.poly.degree();
    report.primes = oracle.primes_used;

    Rat closed_deg = closed.degree_lambda();
    if (closed_deg != Rat(static_cast<long>(oracle.poly.degree()))) {
        report.match = false;
        long e = std::max(oracle.poly.degree(),
                          is_integer(closed_deg) && to_integer(closed_deg).fits_slong_p()
                              ? to_integer(closed_deg).get_si()
                              : oracle.poly.degree());
        report.first_mismatch =
            CompareMismatch{e, oracle.poly.coeff(static_cast<std::size_t>(e)).get_str(),
                            closed_deg < Rat(static_cast<long>(e)) ? "0" : "1"};
        return report;
    }

    try {
        IntPoly expanded = closed.expand(expand_budget);
        for (long j = 0; j <= report.degree; ++j) {
            Int c = expanded.coeff(static_cast<std::size_t>(j));
            Int o = oracle.poly.coeff(static_cast<std::size_t>(j));
            if (c != o) {
                report.match = false;
                report.first_mismatch = CompareMismatch{j, o.get_str(), c.get_str()};
                return report;
            }
        }
        report.match = true;
        return report;
    } catch (const budget_error&) {
        return compare_modular(closed, oracle, report);
    }
}

CompareReport oracle_compare(const FactoredCharPoly& closed, const Hypergraph& h, const OracleBudget& budget,
                             const ExpandBudget& expand_budget) {
    return compare_against(closed, oracle_charpoly(h, budget), expand_budget);
}

}  // namespace hyperspec
