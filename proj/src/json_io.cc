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

#include "groupcert/json_io.h"

#include <openssl/evp.h>

#include <cstdio>
#include <exception>

namespace groupcert {
namespace {

const Json& Field(const Json& obj, const char* key) {
  if (!obj.is_object()) throw DocumentError("expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw DocumentError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

Json Nullable(const std::string& s) { return s.empty() ? Json() : Json(s); }

Json StatusToJson(const CheckResult& r) {
  Json j;
  j["passed"] = r.passed();
  j["mode"] = ToString(r.mode);
  j["witness"] = r.witness ? WitnessToJson(*r.witness) : Json();
  return j;
}

}  // namespace

const char* ToolVersion() { return GROUPCERT_VERSION; }

Rational RationalFromJson(const Json& j) {
  if (!j.is_string()) throw DocumentError("expected a rational string");
  try {
    return Rational::Parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
}

RatVector RationalsFromJson(const Json& j) {
  if (!j.is_array()) throw DocumentError("expected an array of rationals");
  RatVector out;
  for (const auto& x : j) out.push_back(RationalFromJson(x));
  return out;
}

std::vector<RatVector> VectorsFromJson(const Json& j) {
  if (!j.is_array()) throw DocumentError("expected an array of vectors");
  std::vector<RatVector> out;
  for (const auto& v : j) out.push_back(RationalsFromJson(v));
  return out;
}

Json RationalsToJson(const RatVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.ToString());
  return j;
}

Json VectorsToJson(const std::vector<RatVector>& vs) {
  Json j = Json::array();
  for (const auto& v : vs) j.push_back(RationalsToJson(v));
  return j;
}

FunctionDescription ParseFunctionDocument(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DocumentError("document must be an object");
  if (auto it = doc.find("format"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<int64_t>() != kFormatVersion) {
      throw DocumentError("unsupported format version");
    }
  }
  const Json& k = Field(doc, "k");
  if (!k.is_number_unsigned() || k.get<uint64_t>() == 0) {
    throw DocumentError("k must be a positive integer");
  }
  FunctionDescription out;
  out.k = k.get<size_t>();
  out.f = RationalsFromJson(Field(doc, "f"));
  const Json& cells = Field(doc, "cells");
  if (!cells.is_array()) throw DocumentError("cells must be an array");
  for (const auto& c : cells) {
    RawCell cell;
    cell.vertices = VectorsFromJson(Field(c, "vertices"));
    cell.gradient = RationalsFromJson(Field(c, "gradient"));
    cell.offset = RationalFromJson(Field(c, "offset"));
    out.cells.push_back(std::move(cell));
  }
  return out;
}

Json FunctionToJson(const PeriodicPLF& phi) {
  Json j;
  j["format"] = kFormatVersion;
  j["k"] = phi.k();
  j["f"] = RationalsToJson(phi.f());
  j["cells"] = Json::array();
  for (const auto& cell : phi.cells()) {
    Json c;
    c["vertices"] = VectorsToJson(cell.simplex.vertices());
    c["gradient"] = RationalsToJson(cell.gradient);
    c["offset"] = cell.offset.ToString();
    j["cells"].push_back(std::move(c));
  }
  return j;
}

std::string SerializeFunction(const PeriodicPLF& phi) {
  return FunctionToJson(phi).dump(2) + "\n";
}

Json WitnessToJson(const ViolationWitness& w) {
  Json j;
  j["kind"] = ToString(w.kind);
  j["points"] = VectorsToJson(w.points);
  j["lhs"] = w.lhs.ToString();
  j["rhs"] = w.rhs.ToString();
  j["description"] = w.Describe();
  return j;
}

Json MinimalityToJson(const MinimalityReport& report) {
  Json j;
  j["passed"] = report.passed();
  j["origin_and_nonnegativity"] = StatusToJson(report.origin_and_nonnegativity);
  j["symmetry"] = StatusToJson(report.symmetry);
  j["subadditivity"] = StatusToJson(report.subadditivity);
  return j;
}

Json CertificateToJson(const Certificate& cert) {
  Json j;
  j["verdict"] = ToString(cert.verdict);
  j["failed_stage"] = Nullable(cert.failed_stage);
  j["detail"] = cert.detail;
  j["k"] = cert.k;
  j["f"] = RationalsToJson(cert.f);
  j["gradients"] = VectorsToJson(cert.gradients);

  const HypothesisReport& h = cert.hypotheses;
  Json hyp;
  hyp["minimality"] = MinimalityToJson(h.minimality);
  hyp["slope_count"] = h.slope_count;
  hyp["slope_count_ok"] = h.slope_count_ok;
  hyp["genuinely_k_dimensional"] = h.genuinely_k_dimensional;
  hyp["origin_incidence"] = h.origin_incidence;
  j["hypotheses"] = std::move(hyp);

  if (cert.directions) {
    Json d;
    d["epsilon"] = cert.directions->epsilon.ToString();
    d["vectors"] = VectorsToJson(cert.directions->directions);
    d["witness_cells"] = cert.directions->witness_cells;
    j["directions"] = std::move(d);
  } else {
    j["directions"] = nullptr;
  }
  if (cert.anchors) {
    Json a;
    a["vectors"] = VectorsToJson(cert.anchors->anchors);
    a["lattice_points"] = VectorsToJson(cert.anchors->lattice_points);
    j["anchors"] = std::move(a);
  } else {
    j["anchors"] = nullptr;
  }
  j["mu"] = VectorsToJson(cert.mu);
  if (cert.system) {
    const SystemReport& s = *cert.system;
    Json sys;
    sys["kind"] = s.unique() ? "unique"
                  : s.kind == SolveReport::Kind::kNoSolution
                      ? "no-solution"
                      : "underdetermined";
    sys["unknowns"] = s.unknowns;
    sys["integral_equations"] = s.integral_equations;
    sys["direction_equations"] = s.direction_equations;
    sys["rank"] = s.rank;
    sys["nullspace_dimension"] = s.nullspace_dimension;
    sys["reformulated_unknowns"] = s.reformulated_unknowns;
    sys["reformulated_rank"] = s.reformulated_rank;
    sys["solution"] = VectorsToJson(s.solution);
    sys["matches_gradients"] = s.matches_gradients;
    j["system"] = std::move(sys);
  } else {
    j["system"] = nullptr;
  }
  return j;
}

Json OracleReportToJson(const OracleReport& report,
                        const std::optional<ViolationWitness>& grid_witness) {
  Json j;
  j["verdict"] = ToString(report.verdict);
  j["q"] = report.q;
  j["unknowns"] = report.unknowns;
  j["equations"] = report.equations;
  j["additive_pairs"] = report.additive_pairs;
  j["rank"] = report.rank;
  j["nullspace_dimension"] = report.nullspace_dimension;
  j["grid_minimality"] = grid_witness ? WitnessToJson(*grid_witness) : Json();
  if (report.perturbation) {
    const Perturbation& p = *report.perturbation;
    Json pj;
    pj["direction"] = RationalsToJson(p.direction);
    pj["epsilon"] = p.epsilon.ToString();
    pj["plus"] = RationalsToJson(p.plus);
    pj["minus"] = RationalsToJson(p.minus);
    pj["both_minimal"] = p.both_minimal;
    pj["extends_to_complex"] = p.extends_to_complex;
    j["perturbation"] = std::move(pj);
  } else {
    j["perturbation"] = nullptr;
  }
  return j;
}

Json ValidationErrorToJson(const ValidationError& e) {
  Json j;
  j["valid"] = false;
  j["error"] = ToString(e.kind());
  j["message"] = e.what();
  j["witness"] = e.witness() ? RationalsToJson(*e.witness()) : Json();
  return j;
}

Json PlotData(const PeriodicPLF& phi) {
  const SlopePartition partition = ComputeSlopePartition(phi);
  Json j;
  j["format"] = kFormatVersion;
  j["k"] = phi.k();
  j["f"] = RationalsToJson(phi.f());
  j["classes"] = Json::array();
  for (size_t i = 0; i < partition.size(); ++i) {
    Json c;
    c["index"] = i;
    c["gradient"] = RationalsToJson(partition.classes[i].gradient);
    c["cells"] = partition.classes[i].cells;
    j["classes"].push_back(std::move(c));
  }
  j["cells"] = Json::array();
  for (size_t i = 0; i < phi.cells().size(); ++i) {
    const AffineCell& cell = phi.cells()[i];
    Json c;
    c["class"] = partition.class_of_cell[i];
    c["vertices"] = VectorsToJson(cell.simplex.vertices());
    RatVector values;
    for (const auto& v : cell.simplex.vertices()) values.push_back(cell.ValueAt(v));
    c["values"] = RationalsToJson(values);
    j["cells"].push_back(std::move(c));
  }
  return j;
}

std::string Sha256Hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

Json ReportEnvelope(const std::string& command, std::string_view input_bytes,
                    const Json& payload) {
  Json j;
  j["format"] = kFormatVersion;
  j["tool"] = "groupcert";
  j["version"] = ToolVersion();
  j["command"] = command;
  j["input_sha256"] = Sha256Hex(input_bytes);
  for (const auto& [key, value] : payload.items()) j[key] = value;
  return j;
}

}  // namespace groupcert
