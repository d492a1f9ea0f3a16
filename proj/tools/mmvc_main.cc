// Copyright 2026 The MMVC Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// mmvc: command-line front end for the scheme, the evaluation server, the
// benchmark suite and the security experiments.
//
// Exit codes: 0 success, 1 verification reject, 2 usage error,
// 3 protocol or IO error.

#include <csignal>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <pthread.h>

#include "CLI11.hpp"
#include "mmvc/algebra/group.h"
#include "mmvc/algebra/rng.h"
#include "mmvc/bench/bench.h"
#include "mmvc/bench/figures.h"
#include "mmvc/common/error.h"
#include "mmvc/scheme/matrix.h"
#include "mmvc/scheme/mmvc.h"
#include "mmvc/security/harness.h"
#include "mmvc/security/strategies.h"
#include "mmvc/wire/codec.h"
#include "mmvc/wire/net.h"
#include "mmvc/wire/size_report.h"

namespace {

using namespace mmvc;

constexpr int kExitOk = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;
constexpr int kExitProtocol = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string group;  // empty: take the backend from the input files
  uint64_t a = 1, b = 1, m = 0, d = 0;
  uint64_t seed = 1;
  std::string in, out;
  std::string pk, ek, vk, vkx, enc;
  std::string matrix, input;
  std::string connect;
  uint16_t port = 0;
  std::string bind = "127.0.0.1";
  std::string csv;
  // bench
  size_t reps = 3;
  std::string scheme = "both";
  std::string sweep;
  std::string figures;
  uint64_t lp = 0, lg = 0;
  bool parallel = false;
  size_t unit_iterations = 200;
  // securitytest
  std::string strategy = "all";
  std::string variant = "standard";
  size_t q = 1;
  size_t trials = 1000;
  size_t threads = 1;
};

std::shared_ptr<const Group> GroupFor(const Options& o, BackendId fallback) {
  return MakeGroup(o.group.empty() ? fallback : ParseBackend(o.group));
}

const std::string& Require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing ") + flag);
  return value;
}

wire::KeyFile ReadTyped(const std::string& path, wire::MessageType type,
                        std::optional<BackendId>& backend) {
  wire::KeyFile f = wire::ReadKeyFile(path);
  if (f.type != type) {
    throw ProtocolError(path + ": expected " +
                        std::string(wire::MessageTypeName(type)) + ", found " +
                        std::string(wire::MessageTypeName(f.type)));
  }
  if (backend && *backend != f.backend) {
    throw ProtocolError(path + ": group backend mismatch");
  }
  backend = f.backend;
  return f;
}

void WriteTyped(const std::string& path, wire::MessageType type,
                const Group& group, wire::Bytes payload) {
  wire::WriteKeyFile(path, {type, group.description().backend,
                            std::move(payload)});
}

// Accepts literal text or @path.
std::string TextArgument(const std::string& value) {
  if (value.empty() || value[0] != '@') return value;
  std::ifstream in(value.substr(1));
  if (!in) throw ProtocolError("cannot read " + value.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Rows separated by ';' or newlines, entries by ',' or whitespace.
std::vector<std::vector<Scalar>> ParseRows(const Group& group,
                                           const std::string& text) {
  std::vector<std::vector<Scalar>> rows;
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ';') c = '\n';
    if (c == ',') c = ' ';
  }
  std::istringstream lines(normalized);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::vector<Scalar> row;
    std::string token;
    while (tokens >> token) {
      try {
        row.push_back(group.ParseScalar(token));
      } catch (const Error& e) {
        throw UsageError("bad scalar '" + token + "': " + e.what());
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

std::string JoinScalars(const Group& group, std::span<const Scalar> v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += group.ScalarToString(v[i]);
  }
  return s;
}

std::pair<std::string, uint16_t> ParseEndpoint(const std::string& s) {
  const auto colon = s.rfind(':');
  if (colon == std::string::npos) throw UsageError("expected host:port");
  const unsigned long port = std::stoul(s.substr(colon + 1));
  if (port == 0 || port > 65535) throw UsageError("bad port in " + s);
  return {s.substr(0, colon), static_cast<uint16_t>(port)};
}

std::vector<uint64_t> ParseList(const std::string& s) {
  std::vector<uint64_t> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoull(item));
    if (out.back() == 0) throw UsageError("values must be positive");
  }
  if (out.empty()) throw UsageError("empty value list");
  return out;
}

int CmdSetup(const Options& o) {
  if (o.d == 0) throw UsageError("--d must be positive");
  auto group = MakeGroup(ParseBackend(o.group.empty() ? "production" : o.group));
  Rng rng(o.seed);
  const PublicParams pk = Setup(group, o.d, rng);
  WriteTyped(Require(o.out, "--out"), wire::MessageType::kPublicParams,
             *group, wire::EncodePublicParams(pk));
  return kExitOk;
}

int CmdKeyGen(const Options& o) {
  std::optional<BackendId> backend;
  if (!o.group.empty()) backend = ParseBackend(o.group);
  const auto pk_file =
      ReadTyped(Require(o.pk, "--pk"), wire::MessageType::kPublicParams, backend);
  auto group = MakeGroup(*backend);
  const PublicParams pk = wire::DecodePublicParams(group, pk_file.payload);
  Rng rng(o.seed, 1);
  Matrix f;
  if (!o.matrix.empty()) {
    const auto rows = ParseRows(*group, TextArgument(o.matrix));
    if (rows.empty()) throw UsageError("empty matrix");
    std::vector<Scalar> entries;
    for (const auto& row : rows) {
      if (row.size() != pk.dimension()) {
        throw UsageError("matrix rows must have d = " +
                         std::to_string(pk.dimension()) + " entries");
      }
      entries.insert(entries.end(), row.begin(), row.end());
    }
    f = Matrix(rows.size(), pk.dimension(), std::move(entries));
  } else {
    if (o.m == 0) throw UsageError("--m or --matrix required");
    f = Matrix::Random(*group, o.m, pk.dimension(), rng);
  }
  const KeyPair keys = KeyGen(pk, f, rng);
  WriteTyped(Require(o.out, "--out"), wire::MessageType::kEvaluationKey,
             *group, wire::EncodeEvaluationKey(*group, keys.ek));
  WriteTyped(Require(o.vk, "--vk"), wire::MessageType::kFunctionKey, *group,
             wire::EncodeFunctionKey(*group, keys.vk));
  return kExitOk;
}

int CmdProbGen(const Options& o) {
  std::optional<BackendId> backend;
  if (!o.group.empty()) backend = ParseBackend(o.group);
  const auto pk_file =
      ReadTyped(Require(o.pk, "--pk"), wire::MessageType::kPublicParams, backend);
  auto group = MakeGroup(*backend);
  const PublicParams pk = wire::DecodePublicParams(group, pk_file.payload);
  std::vector<Scalar> x;
  if (!o.input.empty()) {
    auto rows = ParseRows(*group, TextArgument(o.input));
    for (auto& row : rows) x.insert(x.end(), row.begin(), row.end());
    if (x.size() != pk.dimension()) {
      throw UsageError("input must have d = " +
                       std::to_string(pk.dimension()) + " entries");
    }
  } else {
    Rng rng(o.seed, 2);
    x = RandomVector(*group, pk.dimension(), rng);
  }
  const InputEncoding enc = ProbGen(pk, x);
  WriteTyped(Require(o.out, "--out"), wire::MessageType::kEncoding, *group,
             wire::EncodeEncoding(*group, enc.x));
  WriteTyped(Require(o.vkx, "--vkx"), wire::MessageType::kInputKey, *group,
             wire::EncodeInputKey(*group, enc.vk_x));
  return kExitOk;
}

int CmdCompute(const Options& o) {
  std::optional<BackendId> backend;
  if (!o.group.empty()) backend = ParseBackend(o.group);
  const auto ek_file = ReadTyped(Require(o.ek, "--ek"),
                                 wire::MessageType::kEvaluationKey, backend);
  const auto enc_file =
      ReadTyped(Require(o.in, "--in"), wire::MessageType::kEncoding, backend);
  auto group = MakeGroup(*backend);
  const EvaluationKey ek = wire::DecodeEvaluationKey(*group, ek_file.payload);
  const auto x = wire::DecodeEncoding(*group, enc_file.payload);
  if (x.size() != ek.F.cols()) throw ProtocolError("d mismatch");
  ServerResponse resp;
  if (!o.connect.empty()) {
    const auto [host, port] = ParseEndpoint(o.connect);
    wire::Client client(group, host, port);
    const wire::FunctionId id = client.Register(ek);
    resp = client.Compute(id, x);
  } else {
    resp = Compute(*group, ek, x);
  }
  WriteTyped(Require(o.out, "--out"), wire::MessageType::kResponse, *group,
             wire::EncodeResponse(*group, resp));
  return kExitOk;
}

int CmdVerify(const Options& o) {
  std::optional<BackendId> backend;
  if (!o.group.empty()) backend = ParseBackend(o.group);
  const auto pk_file =
      ReadTyped(Require(o.pk, "--pk"), wire::MessageType::kPublicParams, backend);
  const auto vk_file =
      ReadTyped(Require(o.vk, "--vk"), wire::MessageType::kFunctionKey, backend);
  const auto vkx_file =
      ReadTyped(Require(o.vkx, "--vkx"), wire::MessageType::kInputKey, backend);
  const auto resp_file =
      ReadTyped(Require(o.in, "--in"), wire::MessageType::kResponse, backend);
  auto group = MakeGroup(*backend);
  const PublicParams pk = wire::DecodePublicParams(group, pk_file.payload);
  const auto vk = wire::DecodeFunctionKey(*group, vk_file.payload);
  const auto vk_x = wire::DecodeInputKey(*group, vkx_file.payload);
  const auto resp = wire::DecodeResponse(*group, resp_file.payload);
  if (resp.y.size() != vk.r.size()) throw ProtocolError("m mismatch");
  const auto y = Verify(pk, vk, vk_x, resp);
  if (!y) {
    std::cerr << "reject\n";
    return kExitReject;
  }
  std::cout << JoinScalars(*group, *y) << "\n";
  return kExitOk;
}

int CmdServe(const Options& o) {
  auto group = MakeGroup(ParseBackend(o.group.empty() ? "production" : o.group));
  // Deliver SIGINT/SIGTERM to a dedicated thread that stops the server.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  wire::Server server(group, o.port, o.bind);
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.Stop();
  });
  std::cout << "listening on " << server.port() << std::endl;
  server.Run();
  // Run() can also return on a listener failure; wake the waiter.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  return kExitOk;
}

void PrintCounters(std::ostream& os, bench::Scheme scheme,
                   const bench::SchemeResult& r) {
  os << "  " << bench::SchemeName(scheme) << " counters (rng add_p mul_p "
     << "mul_G exp_G):\n";
  for (bench::Phase p : bench::kAllPhases) {
    const auto& c = r.counters[static_cast<size_t>(p)];
    os << "    " << std::left << std::setw(8) << bench::PhaseName(p)
       << std::right << " " << c.rng << " " << c.add_p << " " << c.mul_p
       << " " << c.mul_g << " " << c.exp_g << "\n";
  }
  os << "    t_c=" << r.client_seconds() << "s t_s=" << r.server_seconds()
     << "s\n";
}

int CmdBench(const Options& o) {
  const BackendId backend =
      ParseBackend(o.group.empty() ? "production" : o.group);
  bench::BenchConfig cfg;
  cfg.dims = {o.a, o.b, o.m == 0 ? 1 : o.m, o.d == 0 ? 1 : o.d};
  cfg.backend = backend;
  cfg.repetitions = o.reps;
  cfg.scheme = bench::ParseSchemeChoice(o.scheme);
  cfg.seed = o.seed;
  cfg.parallel = o.parallel;
  if (cfg.repetitions < 3) throw UsageError("--reps must be at least 3");
  if (cfg.dims.a == 0 || cfg.dims.b == 0) {
    throw UsageError("--a and --b must be positive");
  }
  auto group = MakeGroup(backend);
  const uint64_t lp = o.lp ? o.lp : group->description().scalar_encoding_bits;
  const uint64_t lg =
      o.lg ? o.lg : group->description().element_encoding_bits;

  std::cout << "# seed=" << o.seed << " group=" << BackendName(backend)
            << " reps=" << cfg.repetitions << " lp=" << lp << " lg=" << lg
            << "\n";

  if (!o.figures.empty()) {
    bench::FigureGrid grid;
    grid.scalar_bits = o.lp ? o.lp : grid.scalar_bits;
    grid.element_bits = o.lg ? o.lg : grid.element_bits;
    Rng rng(o.seed, 3);
    const auto costs = bench::MeasureUnitCosts(*group, rng, o.unit_iterations);
    std::cout << "unit costs (s): rng=" << costs.rng << " add_p=" << costs.add_p
              << " mul_p=" << costs.mul_p << " mul_G=" << costs.mul_g
              << " exp_G=" << costs.exp_g << "\n";
    for (const auto& path :
         bench::EmitFigureSeries(grid, costs, o.figures, o.seed)) {
      std::cout << "wrote " << path.string() << "\n";
    }
    return kExitOk;
  }

  std::vector<std::pair<std::string, uint64_t>> points;
  char param = 0;
  if (!o.sweep.empty()) {
    const auto eq = o.sweep.find('=');
    if (eq != 1 || std::string("abmd").find(o.sweep[0]) == std::string::npos) {
      throw UsageError("--sweep expects <a|b|m|d>=v1,v2,...");
    }
    param = o.sweep[0];
    for (uint64_t v : ParseList(o.sweep.substr(2))) {
      points.emplace_back(std::string(1, param), v);
    }
  } else {
    points.emplace_back("base", 0);
  }

  std::ostringstream csv;
  csv << "# seed=" << o.seed << " group=" << BackendName(backend) << "\n";
  bench::WriteBenchCsvHeader(csv);
  for (const auto& [name, value] : points) {
    bench::BenchConfig point = cfg;
    if (param == 'a') point.dims.a = value;
    if (param == 'b') point.dims.b = value;
    if (param == 'm') point.dims.m = value;
    if (param == 'd') point.dims.d = value;
    bench::BenchReport report = bench::RunBench(point);
    report.sizes = wire::ComputeSizeReport(point.dims, lp, lg);
    const auto& w = point.dims;
    std::cout << "(a,b,m,d)=(" << w.a << "," << w.b << "," << w.m << ","
              << w.d << ") counters match the cost table\n";
    if (report.mmvc) PrintCounters(std::cout, bench::Scheme::kMmvc, *report.mmvc);
    if (report.fg12) PrintCounters(std::cout, bench::Scheme::kFg12, *report.fg12);
    if (report.mmvc && report.fg12) {
      std::cout << "  t_c2/t_c1=" << report.client_ratio()
                << " t_s2/t_s1=" << report.server_ratio() << "\n";
    }
    std::cout << "  c1=" << report.sizes.c1_mib()
              << " MiB c2=" << report.sizes.c2_mib()
              << " MiB s1=" << report.sizes.s1_kib()
              << " KiB s2=" << report.sizes.s2_kib() << " KiB\n";
    bench::WriteBenchCsvRow(csv, name, value, report);
  }
  if (!o.csv.empty()) {
    std::ofstream out(o.csv);
    if (!out) throw ProtocolError("cannot write " + o.csv);
    out << csv.str();
  } else {
    std::cout << csv.str();
  }
  return kExitOk;
}

int CmdSecurityTest(const Options& o) {
  security::ExperimentConfig cfg;
  cfg.group = MakeGroup(ParseBackend(o.group.empty() ? "toy" : o.group));
  cfg.q = o.q;
  cfg.trials = o.trials;
  cfg.m = o.m == 0 ? 1 : o.m;
  cfg.d = o.d == 0 ? 2 : o.d;
  cfg.seed = o.seed;
  if (o.variant == "standard") {
    cfg.variant = security::Variant::kStandard;
  } else if (o.variant == "random-tags") {
    cfg.variant = security::Variant::kRandomTags;
  } else {
    throw UsageError("--variant must be standard or random-tags");
  }
  if (cfg.q == 0 || cfg.trials == 0) {
    throw UsageError("--q and --trials must be positive");
  }

  std::vector<std::unique_ptr<security::Adversary>> strategies;
  if (o.strategy == "all") {
    strategies = security::AllStrategies();
  } else {
    try {
      strategies.push_back(security::MakeStrategy(o.strategy));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }

  std::ostringstream csv;
  csv << "# seed=" << o.seed << " group="
      << BackendName(cfg.group->description().backend) << "\n";
  csv << "strategy,variant,q,trials,successes,rate,bound,bound_sigma,"
         "within_bound\n";
  bool all_within = true;
  std::cout << "# seed=" << o.seed << " variant="
            << security::VariantName(cfg.variant) << " q=" << cfg.q
            << " trials=" << cfg.trials << "\n";
  for (const auto& adv : strategies) {
    const auto est = security::MeasureSuccess(cfg, *adv, o.threads);
    const bool ok = est.WithinBound();
    all_within = all_within && ok;
    csv << est.strategy << "," << security::VariantName(cfg.variant) << ","
        << cfg.q << "," << est.trials << "," << est.successes << ","
        << est.rate << "," << est.bound << "," << est.bound_sigma << ","
        << (ok ? "true" : "false") << "\n";
    std::cout << std::left << std::setw(16) << est.strategy << std::right
              << " " << est.successes << "/" << est.trials
              << " rate=" << est.rate << " bound=" << est.bound << " "
              << (ok ? "within bound" : "EXCEEDS BOUND") << "\n";
  }
  if (!o.csv.empty()) {
    std::ofstream out(o.csv);
    if (!out) throw ProtocolError("cannot write " + o.csv);
    out << csv.str();
  }
  return all_within ? kExitOk : kExitReject;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Verifiable outsourcing of matrix-vector products"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto group_opt = [&](CLI::App* c) {
    c->add_option("--group", o.group, "Group backend: production or toy")
        ->check(CLI::IsMember({"production", "toy"}));
  };
  auto seed_opt = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "Random seed");
  };

  auto* setup = app.add_subcommand("setup", "Generate public parameters");
  group_opt(setup);
  seed_opt(setup);
  setup->add_option("--d", o.d, "Input dimension")->required();
  setup->add_option("--out", o.out, "Public parameter file")->required();

  auto* keygen = app.add_subcommand("keygen", "Prepare a function F");
  group_opt(keygen);
  seed_opt(keygen);
  keygen->add_option("--pk,--in", o.pk, "Public parameter file")->required();
  keygen->add_option("--m", o.m, "Rows of a random F");
  keygen->add_option("--matrix", o.matrix,
                     "F as rows 'f11,f12;f21,f22' or @file");
  keygen->add_option("--out", o.out, "Evaluation key file (for the server)")
      ->required();
  keygen->add_option("--vk", o.vk, "Verification key file (kept private)")
      ->required();

  auto* probgen = app.add_subcommand("probgen", "Encode an input x");
  group_opt(probgen);
  seed_opt(probgen);
  probgen->add_option("--pk,--in", o.pk, "Public parameter file")->required();
  probgen->add_option("--x", o.input, "x as 'x1,x2,...' or @file");
  probgen->add_option("--out", o.out, "Encoding file (for the server)")
      ->required();
  probgen->add_option("--vkx", o.vkx, "Input verification key file")
      ->required();

  auto* compute = app.add_subcommand("compute", "Evaluate F x with a proof");
  group_opt(compute);
  compute->add_option("--ek", o.ek, "Evaluation key file")->required();
  compute->add_option("--in", o.in, "Encoding file")->required();
  compute->add_option("--out", o.out, "Response file")->required();
  compute->add_option("--connect", o.connect,
                      "Delegate to a server at host:port");

  auto* verify = app.add_subcommand("verify", "Check a response, print y");
  group_opt(verify);
  verify->add_option("--pk", o.pk, "Public parameter file")->required();
  verify->add_option("--vk", o.vk, "Verification key file")->required();
  verify->add_option("--vkx", o.vkx, "Input verification key file")
      ->required();
  verify->add_option("--in", o.in, "Response file")->required();

  auto* serve = app.add_subcommand("serve", "Run the evaluation server");
  group_opt(serve);
  serve->add_option("--port", o.port, "TCP port, 0 for ephemeral");
  serve->add_option("--bind", o.bind, "Listen address");

  auto* bench_cmd = app.add_subcommand("bench", "Benchmark both schemes");
  group_opt(bench_cmd);
  seed_opt(bench_cmd);
  bench_cmd->add_option("--a", o.a, "Number of functions");
  bench_cmd->add_option("--b", o.b, "Number of inputs");
  bench_cmd->add_option("--m", o.m, "Rows of each F");
  bench_cmd->add_option("--d", o.d, "Input dimension");
  bench_cmd->add_option("--reps", o.reps, "Timed repetitions (>= 3)");
  bench_cmd->add_option("--scheme", o.scheme, "mmvc, fg12 or both")
      ->check(CLI::IsMember({"mmvc", "fg12", "both"}));
  bench_cmd->add_option("--sweep", o.sweep,
                        "Vary one parameter, e.g. m=1,2,4,8");
  bench_cmd->add_option("--figures", o.figures,
                        "Write modelled figure series into this directory");
  bench_cmd->add_option("--unit-iterations", o.unit_iterations,
                        "Iterations per primitive when measuring unit costs");
  bench_cmd->add_option("--lp", o.lp, "Scalar size override in bits");
  bench_cmd->add_option("--lg", o.lg, "Element size override in bits");
  bench_cmd->add_option("--csv", o.csv, "CSV output path (default stdout)");
  bench_cmd->add_flag("--parallel", o.parallel,
                      "Run Compute tasks on all cores");

  auto* sec = app.add_subcommand("securitytest",
                                 "Estimate forgery rates of attack strategies");
  group_opt(sec);
  seed_opt(sec);
  sec->add_option("--strategy", o.strategy, "Strategy name or 'all'");
  sec->add_option("--variant", o.variant, "standard or random-tags");
  sec->add_option("--q", o.q, "Verification equations per trial");
  sec->add_option("--trials", o.trials, "Number of trials");
  sec->add_option("--m", o.m, "Rows of F");
  sec->add_option("--d", o.d, "Input dimension");
  sec->add_option("--threads", o.threads, "Worker threads");
  sec->add_option("--csv", o.csv, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*setup) return CmdSetup(o);
    if (*keygen) return CmdKeyGen(o);
    if (*probgen) return CmdProbGen(o);
    if (*compute) return CmdCompute(o);
    if (*verify) return CmdVerify(o);
    if (*serve) return CmdServe(o);
    if (*bench_cmd) return CmdBench(o);
    if (*sec) return CmdSecurityTest(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ProtocolError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitProtocol;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitProtocol;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitProtocol;
  }
  return kExitUsage;
}
