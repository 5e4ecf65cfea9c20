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

#include "json_io.hpp"

#include <sstream>

namespace hyperspec {

namespace {

Int int_from_string(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw domain_error("not a decimal integer: '" + s + "'");
    }
}

std::string render_term(const Int& coeff, long lambda_exp, bool latex, bool first) {
    std::ostringstream out;
    Int a = abs(coeff);
    if (first) {
        if (coeff < 0) out << "-";
    } else {
        out << (latex ? (coeff < 0 ? "-" : "+") : (coeff < 0 ? " - " : " + "));
    }
    if (a != 1 || lambda_exp == 0) out << a.get_str();
    if (lambda_exp > 0) {
        out << (latex ? "\\lambda" : "lambda");
        if (lambda_exp > 1) {
            if (latex)
                out << "^{" << lambda_exp << "}";
            else
                out << "^" << lambda_exp;
        }
    }
    return out.str();
}

std::string render_base(const IntPoly& base, unsigned scale, bool latex) {
    std::ostringstream out;
    bool first = true;
    for (long i = base.degree(); i >= 0; --i) {
        const Int c = base.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        out << render_term(c, i * static_cast<long>(scale), latex, first);
        first = false;
    }
    return out.str();
}

std::string render_exponent(const Int& e, bool latex) {
    std::ostringstream out;
    if (e == 1) return "";
    if (latex)
        out << "^{" << e.get_str() << "}";
    else
        out << "^" << e.get_str();
    return out.str();
}

std::string render_charpoly(const FactoredCharPoly& f, bool latex) {
    std::ostringstream out;
    bool empty = true;
    if (f.lambda_exponent != 0) {
        empty = false;
        out << (latex ? "\\lambda" : "lambda");
        if (f.lambda_exponent != 1) {
            if (latex)
                out << "^{" << f.lambda_exponent.get_str() << "}";
            else
                out << "^" << f.lambda_exponent.get_str();
        }
    }
    for (const auto& fac : f.factors) {
        if (!empty && !latex) out << " * ";
        empty = false;
        out << "(" << render_base(fac.base, fac.scale, latex) << ")" << render_exponent(fac.exp, latex);
    }
    if (empty) out << "1";
    return out.str();
}

}  // namespace

json intpoly_to_json(const IntPoly& p) {
    json arr = json::array();
    for (long i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(static_cast<std::size_t>(i)).get_str());
    return arr;
}

IntPoly intpoly_from_json(const json& j) {
    if (!j.is_array()) throw domain_error("polynomial JSON must be an array of decimal strings");
    std::vector<Int> c;
    c.reserve(j.size());
    for (const auto& v : j) c.push_back(int_from_string(v.get<std::string>()));
    return IntPoly(std::move(c));
}

json charpoly_to_json(const FactoredCharPoly& f) {
    json out;
    out["k"] = f.k;
    out["lambda_exponent"] = {{"num", f.lambda_exponent.get_num().get_str()},
                              {"den", f.lambda_exponent.get_den().get_str()}};
    json factors = json::array();
    for (const auto& fac : f.factors) {
        json jf;
        jf[fac.scale == static_cast<unsigned>(f.k) ? "base_mu" : "base_lambda"] = intpoly_to_json(fac.base);
        jf["exp"] = fac.exp.get_str();
        factors.push_back(std::move(jf));
    }
    out["factors"] = std::move(factors);
    return out;
}

FactoredCharPoly charpoly_from_json(const json& j) {
    FactoredCharPoly f;
    f.k = j.at("k").get<int>();
    if (f.k < 2) throw domain_error("uniformity k must be at least 2");
    const auto& le = j.at("lambda_exponent");
    Int num = int_from_string(le.at("num").get<std::string>());
    Int den = int_from_string(le.at("den").get<std::string>());
    if (den <= 0) throw domain_error("lambda exponent denominator must be positive");
    f.lambda_exponent = Rat(num) / Rat(den);
    for (const auto& jf : j.at("factors")) {
        CharPolyFactor fac;
        if (jf.contains("base_mu")) {
            fac.base = intpoly_from_json(jf.at("base_mu"));
            fac.scale = static_cast<unsigned>(f.k);
        } else {
            fac.base = intpoly_from_json(jf.at("base_lambda"));
            fac.scale = 1;
        }
        fac.exp = int_from_string(jf.at("exp").get<std::string>());
        if (fac.exp < 0) throw domain_error("negative factor exponent");
        f.factors.push_back(std::move(fac));
    }
    f.canonicalize();
    return f;
}

json hypergraph_to_json(const Hypergraph& h) {
    json out;
    out["k"] = h.k;
    out["n"] = h.n;
    out["edges"] = h.edges;
    return out;
}

Hypergraph hypergraph_from_json(const json& j) {
    Hypergraph h;
    h.k = j.at("k").get<int>();
    h.n = j.at("n").get<int>();
    for (const auto& je : j.at("edges")) {
        std::vector<int> e = je.get<std::vector<int>>();
        std::sort(e.begin(), e.end());
        h.edges.push_back(std::move(e));
    }
    h.validate();
    return h;
}

json spectrum_to_json(const std::vector<EigenvalueDescriptor>& spec, int precision_bits) {
    json out = json::array();
    for (const auto& d : spec) {
        json jd;
        jd["q"] = d.q.get_str();
        jd["theta"] = d.theta;
        jd["zero"] = d.is_zero;
        if (d.is_zero) {
            jd["re"] = "0";
            jd["im"] = "0";
            jd["modulus"] = "0";
        } else {
            Cplx v = descriptor_value(d, precision_bits);
            jd["re"] = v.re.str();
            jd["im"] = v.im.str();
            jd["modulus"] = descriptor_modulus(d, precision_bits).str();
        }
        out.push_back(std::move(jd));
    }
    return out;
}

json radius_to_json(const RadiusResult& r) {
    json out;
    out["m"] = r.m;
    out["k"] = r.k;
    out["q"] = r.descriptor.q.get_str();
    out["theta"] = r.descriptor.theta;
    out["zero"] = r.descriptor.is_zero;
    out["value"] = r.value;
    out["precision_bits"] = r.precision_bits;
    return out;
}

json oracle_result_to_json(const CharPolyResult& r) {
    json out;
    out["coeffs"] = intpoly_to_json(r.poly);
    out["degree"] = r.poly.degree();
    out["method"] = r.method == OracleMethod::matrix ? "matrix" : "macaulay";
    json primes = json::array();
    for (auto p : r.primes_used) primes.push_back(std::to_string(p));
    out["primes"] = std::move(primes);
    out["sample_count"] = r.sample_count;
    return out;
}

json compare_report_to_json(const CompareReport& r) {
    json out;
    out["match"] = r.match;
    out["method"] = r.method == OracleMethod::matrix ? "matrix" : "macaulay";
    out["degree"] = r.degree;
    json primes = json::array();
    for (auto p : r.primes) primes.push_back(std::to_string(p));
    out["primes"] = std::move(primes);
    if (r.first_mismatch) {
        out["first_mismatch"] = {{"exponent", r.first_mismatch->exponent},
                                 {"expected", r.first_mismatch->expected},
                                 {"got", r.first_mismatch->got}};
    } else {
        out["first_mismatch"] = nullptr;
    }
    return out;
}

std::string charpoly_to_latex(const FactoredCharPoly& f) { return render_charpoly(f, true); }

std::string charpoly_to_text(const FactoredCharPoly& f) { return render_charpoly(f, false); }

}  // namespace hyperspec
