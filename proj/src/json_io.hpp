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

#ifndef HYPERSPEC_JSON_IO_HPP
#define HYPERSPEC_JSON_IO_HPP

// Wire formats. All big integers travel as decimal strings; nlohmann's
// object keys serialize sorted, so dump() round-trips byte-identically.

#include <json.hpp>

#include "hypergraph.hpp"
#include "intpoly.hpp"
#include "oracle.hpp"
#include "spectra.hpp"

namespace hyperspec {

using json = nlohmann::json;

/// ["c0", "c1", ...] decimal strings, index = exponent; [] is zero.
json intpoly_to_json(const IntPoly& p);
IntPoly intpoly_from_json(const json& j);

/// {"k":.., "lambda_exponent":{"num":..,"den":..},
///  "factors":[{"base_mu":[..],"exp":..}, ...]}; a factor kept in lambda
/// itself (k=2 graph route) uses "base_lambda" instead of "base_mu".
json charpoly_to_json(const FactoredCharPoly& f);
FactoredCharPoly charpoly_from_json(const json& j);

/// {"k":.., "n":.., "edges":[[..],..]}
json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

json spectrum_to_json(const std::vector<EigenvalueDescriptor>& spec, int precision_bits);
json radius_to_json(const RadiusResult& r);
json oracle_result_to_json(const CharPolyResult& r);
json compare_report_to_json(const CompareReport& r);

std::string charpoly_to_latex(const FactoredCharPoly& f);
std::string charpoly_to_text(const FactoredCharPoly& f);

}  // namespace hyperspec

#endif
