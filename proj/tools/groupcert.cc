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

// groupcert: command-line front end.
//
//   groupcert validate <file> [--json[=path]]
//   groupcert certify <file> [--json[=path]]
//   groupcert oracle <file> --q <int> [--json[=path]]
//   groupcert plot-data <file> [-o path]
//   groupcert gen <name> [--f r] [--target r,r] [--k n] [--q n] [--seed n]
//
// Exit codes: 0 success, 1 negative verdict, 2 invalid function,
// 64 malformed document or bad arguments, 65 grid mismatch, 66 unsupported.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "groupcert/catalog.h"
#include "groupcert/certify.h"
#include "groupcert/json_io.h"
#include "groupcert/oracle.h"
#include "groupcert/plf.h"

namespace {

using groupcert::Json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitMalformed = 64;
constexpr int kExitGridMismatch = 65;
constexpr int kExitUnsupported = 66;

// Failure that maps straight to an exit code.
struct Exit {
  int code;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    throw Exit{kExitMalformed};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "-" means standard output. Files are written to a sibling temporary and
// renamed into place.
void WriteOutput(const std::string& target, const std::string& text) {
  if (target == "-") {
    std::cout << text;
    return;
  }
  const std::string tmp = target + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "cannot write " << target << "\n";
      throw Exit{kExitMalformed};
    }
  }
  std::filesystem::rename(tmp, target);
}

void EmitJson(const std::string& target, const Json& j) {
  WriteOutput(target, j.dump(2) + "\n");
}

struct Loaded {
  std::string bytes;
  groupcert::PeriodicPLF phi;
};

// Parses and validates; reports problems on stderr (and as JSON to
// `json_target` when non-empty) before throwing the matching exit code.
Loaded Load(const std::string& path, const std::string& json_target,
            const std::string& command) {
  Loaded out;
  out.bytes = ReadFile(path);
  groupcert::FunctionDescription desc;
  try {
    desc = groupcert::ParseFunctionDocument(out.bytes);
  } catch (const groupcert::DocumentError& e) {
    std::cerr << path << ": malformed document: " << e.what() << "\n";
    throw Exit{kExitMalformed};
  }
  try {
    out.phi = groupcert::Validate(desc);
  } catch (const groupcert::ValidationError& e) {
    std::cerr << path << ": invalid function (" << groupcert::ToString(e.kind())
              << "): " << e.what() << "\n";
    if (e.witness()) {
      std::cerr << "  witness: " << groupcert::ToString(*e.witness()) << "\n";
    }
    if (!json_target.empty()) {
      EmitJson(json_target, groupcert::ReportEnvelope(
                                command, out.bytes,
                                groupcert::ValidationErrorToJson(e)));
    }
    throw Exit{kExitInvalid};
  }
  return out;
}

// Human-readable summaries move to stderr when the JSON report owns stdout.
std::ostream& SummaryStream(const std::string& json_target) {
  return json_target == "-" ? std::cerr : std::cout;
}

int RunValidate(const std::string& path, const std::string& json_target) {
  const Loaded in = Load(path, json_target, "validate");
  const auto partition = groupcert::ComputeSlopePartition(in.phi);
  std::cerr << path << ": valid, k = " << in.phi.k() << ", "
            << in.phi.cells().size() << " cells, " << partition.size()
            << " slope classes\n";
  if (!json_target.empty()) {
    Json payload;
    payload["valid"] = true;
    payload["k"] = in.phi.k();
    payload["cells"] = in.phi.cells().size();
    payload["slope_classes"] = partition.size();
    payload["natural_denominator"] = in.phi.NaturalDenominator();
    EmitJson(json_target,
             groupcert::ReportEnvelope("validate", in.bytes, payload));
  }
  return kExitOk;
}

int RunCertify(const std::string& path, const std::string& json_target) {
  const Loaded in = Load(path, json_target, "certify");
  std::ostream& out = SummaryStream(json_target);
  const groupcert::Certificate cert = groupcert::CertifyFacet(in.phi);
  out << "verdict: " << groupcert::ToString(cert.verdict) << "\n";
  if (!cert.failed_stage.empty()) {
    out << "failed stage: " << cert.failed_stage << "\n";
    out << "detail: " << cert.detail << "\n";
  }
  out << "gradients:";
  for (const auto& g : cert.gradients) {
    out << " " << groupcert::ToString(g);
  }
  out << "\n";
  if (!json_target.empty()) {
    Json payload;
    payload["certificate"] = groupcert::CertificateToJson(cert);
    EmitJson(json_target,
             groupcert::ReportEnvelope("certify", in.bytes, payload));
  }
  const bool ok = cert.verdict == groupcert::Verdict::kFacetCertified ||
                  cert.verdict == groupcert::Verdict::kGridVerified;
  return ok ? kExitOk : kExitNegative;
}

int RunOracle(const std::string& path, int64_t q,
              const std::string& json_target) {
  const Loaded in = Load(path, json_target, "oracle");
  std::ostream& out = SummaryStream(json_target);
  groupcert::OracleReport report;
  try {
    report = groupcert::OracleExtremality(in.phi, q);
  } catch (const groupcert::GridMismatch& e) {
    std::cerr << path << ": grid mismatch: " << e.what() << "\n";
    return kExitGridMismatch;
  }
  const auto witness =
      groupcert::OracleMinimality(groupcert::RestrictToGrid(in.phi, q));
  out << "q = " << q << ": " << groupcert::ToString(report.verdict)
            << ", rank " << report.rank << " of " << report.unknowns << "\n";
  if (witness) out << "grid minimality: " << witness->Describe() << "\n";
  if (report.perturbation) {
    const auto& p = *report.perturbation;
    out << "perturbation h = " << groupcert::ToString(p.direction)
              << "\n  epsilon " << p.epsilon << ", both minimal "
              << (p.both_minimal ? "yes" : "no") << ", affine on cells "
              << (p.extends_to_complex ? "yes" : "no") << "\n";
  }
  if (!json_target.empty()) {
    Json payload;
    payload["oracle"] = groupcert::OracleReportToJson(report, witness);
    EmitJson(json_target,
             groupcert::ReportEnvelope("oracle", in.bytes, payload));
  }
  return report.unique() ? kExitOk : kExitNegative;
}

int RunPlotData(const std::string& path, const std::string& out) {
  const Loaded in = Load(path, "", "plot-data");
  if (in.phi.k() > 2) {
    std::cerr << "plot-data supports k <= 2, got k = " << in.phi.k() << "\n";
    return kExitUnsupported;
  }
  EmitJson(out, groupcert::PlotData(in.phi));
  return kExitOk;
}

groupcert::RatVector ParseList(const std::string& text) {
  groupcert::RatVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(groupcert::Rational::Parse(item));
  }
  return out;
}

struct GenArgs {
  std::string name;
  std::string f;
  std::string target;
  size_t k = 1;
  int64_t q = 6;
  uint64_t seed = 1;
  std::string out = "-";
};

int RunGen(const GenArgs& a) {
  namespace catalog = groupcert::catalog;
  using groupcert::Rational;
  auto need_f = [&]() {
    if (a.f.empty()) throw groupcert::ContractViolation("--f is required");
    return Rational::Parse(a.f);
  };
  std::optional<groupcert::PeriodicPLF> phi;
  try {
    if (a.name == "gmi") {
      phi = catalog::Gmi(need_f());
    } else if (a.name == "wrong-peak") {
      phi = catalog::WrongPeak(need_f());
    } else if (a.name == "spike") {
      phi = catalog::Spike();
    } else if (a.name == "diagonal-lift") {
      const Rational f = a.f.empty() ? Rational(2, 5) : need_f();
      const groupcert::RatVector target =
          a.target.empty() ? groupcert::RatVector{f / 2, f / 2}
                           : ParseList(a.target);
      phi = catalog::DiagonalLift(catalog::Gmi(f), target);
    } else if (a.name == "triangle-lifting") {
      phi = catalog::TriangleLiftingFixture();
    } else if (a.name == "non-extreme-three-slope") {
      phi = catalog::NonExtremeThreeSlope();
    } else if (a.name == "zero") {
      phi = catalog::ConstantZero(a.k);
    } else if (a.name == "random") {
      phi = catalog::RandomPlf(a.k, a.q, a.seed);
    } else {
      std::cerr << "unknown fixture \"" << a.name << "\"\n";
      return kExitMalformed;
    }
  } catch (const groupcert::ContractViolation& e) {
    std::cerr << "gen " << a.name << ": " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gen " << a.name << ": " << e.what() << "\n";
    return kExitMalformed;
  }
  WriteOutput(a.out, groupcert::SerializeFunction(*phi));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Facet certification for (k+1)-slope functions of the infinite "
               "group relaxation"};
  app.set_version_flag("--version", groupcert::ToolVersion());
  app.require_subcommand(1);

  std::string path;
  std::string json_target;
  auto add_json = [&json_target](CLI::App* sub) {
    sub->add_option("--json", json_target,
                    "Write a JSON report (standard output when no path)")
        ->expected(0, 1)
        ->default_str("-");
  };

  CLI::App* validate = app.add_subcommand("validate", "Validate a function");
  validate->add_option("file", path, "Function document")->required();
  add_json(validate);

  CLI::App* certify = app.add_subcommand("certify", "Run the facet certifier");
  certify->add_option("file", path, "Function document")->required();
  add_json(certify);

  int64_t q = 0;
  CLI::App* oracle =
      app.add_subcommand("oracle", "Finite-group extremality oracle");
  oracle->add_option("file", path, "Function document")->required();
  oracle->add_option("--q", q, "Grid denominator")
      ->required()
      ->check(CLI::PositiveNumber);
  add_json(oracle);

  std::string plot_out = "-";
  CLI::App* plot = app.add_subcommand("plot-data", "Emit cells with classes");
  plot->add_option("file", path, "Function document")->required();
  plot->add_option("-o,--output", plot_out, "Output path");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Write a catalog fixture");
  gen->add_option("name", gen_args.name,
                  "gmi, wrong-peak, spike, diagonal-lift, triangle-lifting, "
                  "non-extreme-three-slope, zero, random")
      ->required();
  gen->add_option("--f", gen_args.f, "f for k = 1 fixtures");
  gen->add_option("--target", gen_args.target,
                  "Comma-separated f for diagonal-lift");
  gen->add_option("--k", gen_args.k, "Dimension for zero and random");
  gen->add_option("--q", gen_args.q, "Grid denominator for random");
  gen->add_option("--seed", gen_args.seed, "Seed for random");
  gen->add_option("-o,--output", gen_args.out, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (*validate) return RunValidate(path, json_target);
    if (*certify) return RunCertify(path, json_target);
    if (*oracle) return RunOracle(path, q, json_target);
    if (*plot) return RunPlotData(path, plot_out);
    if (*gen) return RunGen(gen_args);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitMalformed;
}
