// Copyright 2026 The groupcert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON documents: function descriptions in, reports out. Rationals travel as
// canonical strings; objects keep a fixed key order so output is diffable.

#ifndef GROUPCERT_JSON_IO_H_
#define GROUPCERT_JSON_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "groupcert/certify.h"
#include "groupcert/minimality.h"
#include "groupcert/oracle.h"
#include "groupcert/plf.h"

namespace groupcert {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

const char* ToolVersion();

// The document is not JSON or does not have the FunctionDocument shape.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FunctionDescription ParseFunctionDocument(std::string_view text);

Json FunctionToJson(const PeriodicPLF& phi);
// Pretty-printed with a trailing newline; byte-stable.
std::string SerializeFunction(const PeriodicPLF& phi);

Json RationalsToJson(const RatVector& v);
Json VectorsToJson(const std::vector<RatVector>& vs);
// Strict inverses; throw DocumentError on anything unexpected.
Rational RationalFromJson(const Json& j);
RatVector RationalsFromJson(const Json& j);
std::vector<RatVector> VectorsFromJson(const Json& j);

Json WitnessToJson(const ViolationWitness& w);
Json MinimalityToJson(const MinimalityReport& report);
Json CertificateToJson(const Certificate& cert);
Json OracleReportToJson(const OracleReport& report,
                        const std::optional<ViolationWitness>& grid_witness);
Json ValidationErrorToJson(const ValidationError& e);

// Cells with slope-class indices, for external plotting (k <= 2).
Json PlotData(const PeriodicPLF& phi);

// Lower-case hex SHA-256.
std::string Sha256Hex(std::string_view bytes);

// {"format", "tool", "version", "command", "input_sha256"} followed by
// `payload`'s keys.
Json ReportEnvelope(const std::string& command, std::string_view input_bytes,
                    const Json& payload);

}  // namespace groupcert

#endif  // GROUPCERT_JSON_IO_H_
