// Copyright 2026 The listdec Authors
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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "listdec/codes.hpp"
#include "listdec/verify.hpp"

namespace {

using listdec::CodeSpec;
using listdec::Rat;
using listdec::SampleCfg;
using listdec::VerifyMode;
using listdec::VerifyReport;

// Exit codes: 0 all checks passed, 1 a verified property failed (the report
// is still written), 2 invalid input.
constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInvalid = 2;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kInvalid;
  }
  out << text;
  return kOk;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CodeSpec load_spec(const std::string& path) {
  auto text = read_file(path);
  if (!text) {
    listdec::fail(listdec::Errc::BadParameter, "cannot read " + path);
  }
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(*text);
  } catch (const nlohmann::json::exception& e) {
    listdec::fail(listdec::Errc::BadParameter,
                  path + " is not valid JSON: " + e.what());
  }
  CodeSpec spec = listdec::spec_from_json(parsed);
  if (auto violation = listdec::validate_spec(spec)) {
    listdec::fail(listdec::Errc::BadParameter, "invalid spec: " + *violation);
  }
  return spec;
}

struct GenArgs {
  std::string family;
  std::uint32_t p = 0;
  unsigned s = 1;
  unsigned n = 1;
  unsigned k = 1;
  std::string out;
};

int run_gen(const GenArgs& args) {
  listdec::FieldSpec field = listdec::FieldSpec::with_smallest_generator(args.p);
  CodeSpec spec{field,
                args.family == "frs" ? listdec::Family::kFrs
                                     : listdec::Family::kMult,
                args.s,
                args.n,
                args.k,
                args.family == "frs"
                    ? listdec::make_appropriate_alphas(field, args.s, args.n)
                    : listdec::make_distinct_alphas(field, args.n)};
  if (auto violation = listdec::validate_spec(spec)) {
    std::cerr << "error: " << *violation << "\n";
    return kInvalid;
  }
  return emit(listdec::spec_to_json(spec).dump(2) + "\n", args.out);
}

struct RunArgs {
  std::string spec_path;
  std::string theorem = "main";
  unsigned list_size = 1;
  std::string rho = "auto";
  std::string mode = "exhaustive";
  std::uint64_t count = 0;  // 0 means the per-theorem default
  unsigned workers = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool stable = false;
  std::string out;
};

std::uint64_t effective_count(const RunArgs& args) {
  if (args.count > 0) return args.count;
  if (args.theorem == "main" || args.theorem == "search") return 100000;
  if (args.theorem == "root-count" || args.theorem == "loss") return 200;
  if (args.theorem == "distinct") return 5000;
  if (args.theorem == "hasse") return 500;
  return 1000;  // wronskian
}

void maybe_warn_default_seed(const RunArgs& args, bool uses_rng) {
  if (uses_rng && !args.seed_given) {
    std::cerr << "notice: no --seed given; defaulting to 0\n";
  }
}

int finish(const VerifyReport& report, const RunArgs& args) {
  int rc = emit(listdec::report_to_json(report, args.stable).dump(2) + "\n",
                args.out);
  if (rc != kOk) return rc;
  return report.pass ? kOk : kViolation;
}

int run_verify(const RunArgs& args) {
  CodeSpec spec = load_spec(args.spec_path);
  if (args.theorem == "main") {
    VerifyMode mode = args.mode == "sampled" ? VerifyMode::kSampled
                                             : VerifyMode::kExhaustive;
    maybe_warn_default_seed(args, mode == VerifyMode::kSampled);
    Rat rho;
    if (args.rho == "auto") {
      rho = listdec::radius_bound(args.list_size, spec.s, spec.rate());
    } else if (auto parsed = Rat::parse(args.rho)) {
      rho = *parsed;
    } else {
      listdec::fail(listdec::Errc::BadParameter,
                    "--rho must be \"auto\" or a rational like 1/2");
    }
    SampleCfg cfg{effective_count(args), args.seed};
    return finish(listdec::verify_list_decodability(spec, args.list_size, rho,
                                                    mode, cfg, args.workers),
                  args);
  }
  maybe_warn_default_seed(args, true);
  std::uint64_t count = effective_count(args);
  if (args.theorem == "root-count") {
    return finish(
        listdec::sweep_root_count(spec, args.list_size, count, args.seed),
        args);
  }
  if (args.theorem == "loss") {
    return finish(
        listdec::sweep_loss_bound(spec, args.list_size, count, args.seed),
        args);
  }
  if (args.theorem == "distinct") {
    return finish(listdec::check_distinctness_lemma(spec, args.list_size + 1,
                                                    count, args.seed),
                  args);
  }
  if (args.theorem == "hasse") {
    return finish(listdec::sweep_hasse(spec.field, count, args.seed), args);
  }
  // wronskian
  return finish(
      listdec::sweep_wronskian(spec.field, 3, spec.k, count, args.seed), args);
}

int run_search(const RunArgs& args) {
  CodeSpec spec = load_spec(args.spec_path);
  VerifyMode mode = args.mode == "sampled" ? VerifyMode::kSampled
                                           : VerifyMode::kExhaustive;
  maybe_warn_default_seed(args, mode == VerifyMode::kSampled);
  SampleCfg cfg{effective_count(args), args.seed};
  return finish(
      listdec::search_worst(spec, args.list_size, mode, cfg, args.workers),
      args);
}

struct ParamsArgs {
  std::string eps;
  std::string rate;
  std::string out;
};

int run_params(const ParamsArgs& args) {
  auto eps = Rat::parse(args.eps);
  auto rate = Rat::parse(args.rate);
  if (!eps || !rate) {
    listdec::fail(listdec::Errc::BadParameter,
                  "--eps and --R must be rationals like 1/10");
  }
  listdec::CorollaryParams params = listdec::corollary_params(*eps, *rate);
  std::ostringstream table;
  table << "target: radius > 1 - R - eps with R = " << rate->str()
        << ", eps = " << eps->str() << "\n"
        << "minimal list size L = " << params.list_size
        << ", folding s_min = " << params.s_min
        << ", radius = " << params.rho.str() << "\n";
  for (const auto& setting : params.settings) {
    table << "setting (" << setting.name << "): L = " << setting.list_size;
    if (setting.feasible) {
      table << ", feasible, s_min = " << setting.s_min
            << ", radius = " << setting.rho.str() << "\n";
    } else {
      table << ", infeasible\n";
    }
  }
  std::cerr << table.str();
  return emit(listdec::params_to_json(params).dump(2) + "\n", args.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"list-decoding workbench for folded and derivative codes"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "emit a code spec as JSON");
  gen->add_option("--family", gen_args.family, "frs or mult")
      ->required()
      ->check(CLI::IsMember({"frs", "mult"}));
  gen->add_option("--p", gen_args.p, "field size (prime)")->required();
  gen->add_option("--s", gen_args.s, "folding / derivative order")->required();
  gen->add_option("--n", gen_args.n, "block count")->required();
  gen->add_option("--k", gen_args.k, "message dimension")->required();
  gen->add_option("--out", gen_args.out, "write JSON here instead of stdout");

  RunArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check a property of a code");
  verify->add_option("--spec", verify_args.spec_path, "spec JSON path")
      ->required();
  verify
      ->add_option("--theorem", verify_args.theorem,
                   "main, root-count, loss, distinct, hasse, or wronskian")
      ->check(CLI::IsMember(
          {"main", "root-count", "loss", "distinct", "hasse", "wronskian"}));
  verify->add_option("--L", verify_args.list_size,
                     "list size (tuple size minus one)");
  verify->add_option("--rho", verify_args.rho,
                     "radius for --theorem main: a rational or \"auto\"");
  verify->add_option("--mode", verify_args.mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify->add_option("--count", verify_args.count,
                     "samples / sweep instances (0 = per-theorem default)");
  verify->add_option("--workers", verify_args.workers,
                     "threads for the exhaustive subset scan");
  verify->add_option("--seed", verify_args.seed, "rng seed");
  verify->add_flag("--stable", verify_args.stable,
                   "zero out elapsed_ms for byte-stable output");
  verify->add_option("--out", verify_args.out,
                     "write the report here instead of stdout");

  RunArgs search_args;
  auto* search = app.add_subcommand(
      "search", "report the minimum average distance over message tuples");
  search->add_option("--spec", search_args.spec_path, "spec JSON path")
      ->required();
  search->add_option("--L", search_args.list_size, "list size")->required();
  search->add_option("--mode", search_args.mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  search->add_option("--count", search_args.count,
                     "samples in sampled mode (0 = default)");
  search->add_option("--workers", search_args.workers,
                     "threads for the exhaustive subset scan");
  search->add_option("--seed", search_args.seed, "rng seed");
  search->add_flag("--stable", search_args.stable,
                   "zero out elapsed_ms for byte-stable output");
  search->add_option("--out", search_args.out,
                     "write the report here instead of stdout");

  ParamsArgs params_args;
  auto* params = app.add_subcommand(
      "params", "smallest list size and folding for a target radius");
  params->add_option("--eps", params_args.eps, "radius slack (rational)")
      ->required();
  params->add_option("--R", params_args.rate, "code rate (rational)")
      ->required();
  params->add_option("--out", params_args.out,
                     "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  verify_args.seed_given = verify->count("--seed") > 0;
  search_args.seed_given = search->count("--seed") > 0;

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (search->parsed()) return run_search(search_args);
    return run_params(params_args);
  } catch (const listdec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvalid;
  }
}
