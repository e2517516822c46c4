// Copyright 2026 The Authors.
//
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

// basecone: facet, Hilbert-series and Gorenstein verification for the
// one-parameter family of transversal polymatroid base cones.
//
//   basecone facets --n 4 --i 1
//   basecone verify --n 3..6
//   basecone export --n 4 --i 1 -o base.in
//
// Exit status is 0 iff the report passes overall.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "basecone/normaliz.hpp"
#include "basecone/verify.hpp"

namespace {

// "4" or "3..6"
void parse_n_range(const std::string& s, basecone::RunConfig& cfg) {
  auto pos = s.find("..");
  try {
    if (pos == std::string::npos) {
      cfg.n_min = cfg.n_max = std::stoi(s);
    } else {
      cfg.n_min = std::stoi(s.substr(0, pos));
      cfg.n_max = std::stoi(s.substr(pos + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected an integer or a range like 3..6");
  }
}

// "all" or an integer
std::optional<int> parse_selector(const std::string& s, const char* flag) {
  if (s == "all") return std::nullopt;
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    throw CLI::ValidationError(flag, "expected an integer or 'all'");
  }
}

void emit(const basecone::CommandReport& report, const basecone::RunConfig& cfg) {
  std::string body = basecone::render(report, cfg.format);
  if (cfg.out_path.empty()) {
    std::cout << body;
    return;
  }
  std::string path = basecone::resolve_output_path(cfg.out_path);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << body;
}

struct CliOptions {
  std::string n_spec;
  std::string i_spec = "all";
  std::string shift_spec;  // per-command default
  long long bound = 3;
  long long t_max = -1;
  long long dilations = 3;
  std::string format = "text";
  std::string out_path;
  bool unsafe = false;
  long long guard = basecone::kDefaultCompositionGuard;
};

void add_common(CLI::App* cmd, CliOptions& opt, const char* shift_default) {
  opt.shift_spec = shift_default;
  cmd->add_option("--n", opt.n_spec, "dimension n, a value or range like 3..6")->required();
  cmd->add_option("--i", opt.i_spec, "block parameter i (integer or 'all')");
  cmd->add_option("--shift", opt.shift_spec, "cyclic shift t (integer or 'all')");
  cmd->add_option("--bound", opt.bound, "degree bound T for canonical-module checks");
  cmd->add_option("--t-max", opt.t_max, "series check horizon (default n+4)");
  cmd->add_option("--dilations", opt.dilations, "max dilation for brute-force counts");
  cmd->add_option("--format", opt.format, "output format: text, json or csv");
  cmd->add_option("-o,--output", opt.out_path, "output file (stdout if omitted)");
  cmd->add_option("--guard", opt.guard, "composition enumeration guard");
  cmd->add_flag("--unsafe", opt.unsafe, "lift the desk-scale parameter guards");
}

basecone::RunConfig to_config(const CliOptions& opt) {
  basecone::RunConfig cfg;
  parse_n_range(opt.n_spec, cfg);
  cfg.i_select = parse_selector(opt.i_spec, "--i");
  cfg.shift_select = parse_selector(opt.shift_spec, "--shift");
  cfg.degree_bound = opt.bound;
  if (opt.t_max >= 0) cfg.t_max = opt.t_max;
  cfg.dilation_max = opt.dilations;
  cfg.format = basecone::parse_format(opt.format);
  cfg.out_path = opt.out_path;
  cfg.unsafe = opt.unsafe;
  cfg.composition_guard = opt.guard;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact facet, Hilbert and Gorenstein checks for transversal polymatroid base cones"};
  app.require_subcommand(1);

  CliOptions facets_opt, rays_opt, hilbert_opt, gorenstein_opt, verify_opt, export_opt;

  CLI::App* cmd_facets = app.add_subcommand("facets", "predicted vs oracle facet normals");
  add_common(cmd_facets, facets_opt, "0");
  CLI::App* cmd_rays = app.add_subcommand("rays", "predicted vs oracle extremal rays");
  add_common(cmd_rays, rays_opt, "0");
  CLI::App* cmd_hilbert = app.add_subcommand("hilbert", "Hilbert values, h-vector, series, a-invariant");
  add_common(cmd_hilbert, hilbert_opt, "0");
  CLI::App* cmd_gorenstein =
      app.add_subcommand("gorenstein", "canonical-module generators and shift identity");
  add_common(cmd_gorenstein, gorenstein_opt, "0");
  CLI::App* cmd_verify = app.add_subcommand("verify", "run every cross-check");
  add_common(cmd_verify, verify_opt, "all");
  CLI::App* cmd_export = app.add_subcommand("export", "write the base exponent matrix as a Normaliz file");
  add_common(cmd_export, export_opt, "0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    basecone::CommandReport report;
    if (cmd_facets->parsed()) {
      basecone::RunConfig cfg = to_config(facets_opt);
      report = basecone::run_facets(cfg);
      emit(report, cfg);
    } else if (cmd_rays->parsed()) {
      basecone::RunConfig cfg = to_config(rays_opt);
      report = basecone::run_rays(cfg);
      emit(report, cfg);
    } else if (cmd_hilbert->parsed()) {
      basecone::RunConfig cfg = to_config(hilbert_opt);
      report = basecone::run_hilbert(cfg);
      emit(report, cfg);
    } else if (cmd_gorenstein->parsed()) {
      basecone::RunConfig cfg = to_config(gorenstein_opt);
      report = basecone::run_gorenstein(cfg);
      emit(report, cfg);
    } else if (cmd_verify->parsed()) {
      basecone::RunConfig cfg = to_config(verify_opt);
      report = basecone::run_verify(cfg);
      emit(report, cfg);
    } else if (cmd_export->parsed()) {
      basecone::RunConfig cfg = to_config(export_opt);
      if (!cfg.i_select) throw std::invalid_argument("export requires an explicit --i value");
      if (!cfg.shift_select) throw std::invalid_argument("export requires a single --shift value");
      if (cfg.n_min != cfg.n_max) throw std::invalid_argument("export requires a single --n value");
      if (cfg.out_path.empty()) throw std::invalid_argument("export requires -o <path>");
      std::vector<basecone::CaseId> cases = basecone::expand_cases(cfg);
      basecone::Presentation p =
          basecone::build_presentation(cases[0].n, cases[0].i, cases[0].shift);
      basecone::BaseSet base = basecone::enumerate_base(p);
      std::string path = basecone::resolve_output_path(cfg.out_path);
      basecone::export_normaliz(base.elements(), path);
      std::cout << "wrote " << base.size() << " x " << p.n << " matrix to " << path << "\n";
      return 0;
    }
    return report.overall_pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
