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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
//
// Usage: mmvc_acceptance <path to mmvc executable>

#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mmvc/bench/bench.h"
#include "mmvc/scheme/fg12.h"
#include "mmvc/scheme/matrix.h"
#include "mmvc/scheme/mmvc.h"
#include "mmvc/security/harness.h"
#include "mmvc/security/strategies.h"
#include "mmvc/wire/codec.h"
#include "mmvc/wire/net.h"
#include "mmvc/wire/size_report.h"

namespace {

using namespace mmvc;
namespace fs = std::filesystem;

struct Verdict {
  bool pass;
  std::string detail;
};

int failures = 0;

void Report(const std::string& name, const std::function<Verdict()>& check) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = check();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (!v.pass) ++failures;
  std::ostringstream line;
  line << (v.pass ? "PASS " : "FAIL ") << name << " (" << std::fixed
       << std::setprecision(1) << secs << " s): " << v.detail;
  std::cout << line.str() << std::endl;
}

const std::vector<uint64_t> kAB = {1, 2, 3};
const std::vector<uint64_t> kM = {1, 2, 5};
const std::vector<uint64_t> kD = {1, 4, 16};

template <typename Fn>
void ForGrid(Fn&& fn) {
  for (uint64_t a : kAB)
    for (uint64_t b : kAB)
      for (uint64_t m : kM)
        for (uint64_t d : kD) fn(wire::Workload{a, b, m, d});
}

std::string Dims(const wire::Workload& w) {
  std::ostringstream os;
  os << "(" << w.a << "," << w.b << "," << w.m << "," << w.d << ")";
  return os.str();
}

Verdict Completeness() {
  size_t ok_prod = 0, ok_toy = 0;
  auto run = [](BackendId id, size_t n, uint64_t seed) {
    auto g = MakeGroup(id);
    Rng rng(seed);
    size_t ok = 0;
    for (size_t t = 0; t < n; ++t) {
      const size_t m = 1 + rng.Uniform(8), d = 1 + rng.Uniform(8);
      const PublicParams pk = Setup(g, d, rng);
      const Matrix f = Matrix::Random(*g, m, d, rng);
      const auto x = RandomVector(*g, d, rng);
      const KeyPair keys = KeyGen(pk, f, rng);
      const InputEncoding enc = ProbGen(pk, x);
      const auto y = Verify(pk, keys.vk, enc.vk_x, Compute(*g, keys.ek, enc.x));
      if (y && *y == MatrixVector(*g, f, x)) ++ok;
    }
    return ok;
  };
  ok_prod = run(BackendId::kProduction, 100, 101);
  ok_toy = run(BackendId::kToy, 1000, 102);
  std::ostringstream os;
  os << ok_prod << "/100 production, " << ok_toy << "/1000 toy verified to Fx";
  return {ok_prod == 100 && ok_toy == 1000, os.str()};
}

Verdict CostTable() {
  auto g = MakeToyGroup();
  size_t points = 0, cells = 0;
  std::string first_error;
  ForGrid([&](const wire::Workload& w) {
    for (bench::Scheme s : {bench::Scheme::kMmvc, bench::Scheme::kFg12}) {
      const auto got = bench::CountOperations(s, w, g, 7);
      const auto mismatches = bench::CompareCounters(s, w, got);
      cells += 25;
      if (!mismatches.empty() && first_error.empty()) {
        first_error = Dims(w) + " " + mismatches[0].ToString();
      }
      points += mismatches.empty();
    }
  });
  std::ostringstream os;
  os << points << "/162 (point, scheme) pairs exact over " << cells
     << " cells";
  if (!first_error.empty()) os << "; first mismatch " << first_error;
  return {points == 162, os.str()};
}

// Values are reported to two decimals; compare in hundredths.
bool ReportedWithin(double value, double published) {
  return std::llabs(std::llround(value * 100) - std::llround(published * 100)) <=
         1;
}

Verdict SizeFormulas() {
  size_t exact = 0, total = 0;
  for (BackendId id : {BackendId::kToy, BackendId::kProduction}) {
    auto g = MakeGroup(id);
    Rng rng(55);
    ForGrid([&](const wire::Workload& w) {
      const auto got = wire::MeasureSizes(w, g, rng);
      const auto want = wire::ComputeSizeReport(w, *g);
      ++total;
      exact += got.mmvc == want.mmvc && got.fg12 == want.fg12;
    });
  }
  const auto r = wire::ComputeSizeReport({20, 20, 200, 20}, 2304, 832);
  const bool published = ReportedWithin(r.c1_mib(), 44.13) &&
                         ReportedWithin(r.c2_mib(), 59.92) &&
                         ReportedWithin(r.s1_kib(), 1132.67) &&
                         ReportedWithin(r.s2_kib(), 2252.03);
  std::ostringstream os;
  os << exact << "/" << total << " measured grid points exact; published "
     << std::fixed << std::setprecision(4) << "c1=" << r.c1_mib()
     << " MiB c2=" << r.c2_mib() << " MiB s1=" << r.s1_kib()
     << " KiB s2=" << r.s2_kib() << " KiB"
     << std::setprecision(2) << " (reported " << r.c1_mib() << " / "
     << r.c2_mib() << " / " << r.s1_kib() << " / " << r.s2_kib()
     << " vs 44.13 / 59.92 / 1132.67 / 2252.03)";
  return {exact == total && published, os.str()};
}

Verdict Soundness() {
  security::ExperimentConfig cfg;
  cfg.group = MakeToyGroup();
  cfg.variant = security::Variant::kRandomTags;
  cfg.q = 1;
  cfg.m = 2;
  cfg.d = 3;
  cfg.seed = 2026;
  cfg.trials = 100000;
  const auto ro = security::MeasureSuccess(cfg, *security::MakeRandomOffsetStrategy());
  const double p = 1.0 / 101;
  const double sigma = std::sqrt(p * (1 - p) / ro.trials);
  const bool ro_ok = std::fabs(ro.rate - p) <= 3 * sigma;
  std::ostringstream os;
  os << std::setprecision(5) << "random-offset " << ro.successes << "/"
     << ro.trials << " = " << ro.rate << " (1/101 = " << p << ", 3 sigma = "
     << 3 * sigma << ")";
  bool all_ok = ro_ok;
  for (size_t q : {1u, 5u}) {
    cfg.q = q;
    cfg.trials = 20000;
    for (const auto& adv : security::AllStrategies()) {
      const auto est = security::MeasureSuccess(cfg, *adv);
      if (!est.WithinBound()) {
        all_ok = false;
        os << "; " << adv->name() << " q=" << q << " rate " << est.rate
           << " exceeds bound " << est.bound;
      }
    }
  }
  if (all_ok) os << "; all 6 strategies within q/(p-q+1) + 3 sigma at q=1,5";
  return {ro_ok && all_ok, os.str()};
}

Verdict DeskScale() {
  bench::BenchConfig cfg;
  cfg.dims = {8, 8, 8, 64};
  cfg.backend = BackendId::kProduction;
  cfg.repetitions = 3;
  const auto r = bench::RunBench(cfg);
  const double m = 8;
  const double s = r.server_ratio(), c = r.client_ratio();
  const bool ok = s >= 0.7 * m && s <= 1.3 * m && c >= 0.5 * m;
  std::ostringstream os;
  os << std::setprecision(4) << "t_s2/t_s1 = " << s << " (band [5.6, 10.4]), "
     << "t_c2/t_c1 = " << c << " (>= 4); counters exact";
  return {ok, os.str()};
}

Verdict SingleRow() {
  auto g = MakeProductionGroup();
  Rng rng(303);
  size_t same = 0;
  for (int t = 0; t < 100; ++t) {
    const size_t d = 1 + rng.Uniform(8);
    const PublicParams pk = Setup(g, d, rng);
    const Matrix f = Matrix::Random(*g, 1, d, rng);
    const Scalar k = g->SampleScalar(rng), r1 = g->SampleScalar(rng);
    const EvaluationKey ek = DeriveEvaluationKey(pk, f, {k, {r1}});
    const auto fek = fg12::DeriveEvaluationKey(pk, f.row(0), {k, r1});
    const auto x = RandomVector(*g, d, rng);
    same += ek.W == fek.W &&
            Compute(*g, ek, x).V == fg12::Compute(*g, fek, x).V;
  }
  return {same == 100,
          std::to_string(same) + "/100 instances with identical W and V"};
}

struct ChildServer {
  pid_t pid = -1;
  uint16_t port = 0;
};

ChildServer SpawnServer(const std::string& cli) {
  int fds[2];
  if (pipe(fds) != 0) throw Error("pipe failed");
  const pid_t pid = fork();
  if (pid == 0) {
    dup2(fds[1], STDOUT_FILENO);
    close(fds[0]);
    close(fds[1]);
    execl(cli.c_str(), cli.c_str(), "serve", "--group", "production",
          "--port", "0", static_cast<char*>(nullptr));
    _exit(127);
  }
  close(fds[1]);
  FILE* out = fdopen(fds[0], "r");
  char line[128] = {};
  ChildServer s{pid, 0};
  if (fgets(line, sizeof line, out)) {
    unsigned port = 0;
    if (std::sscanf(line, "listening on %u", &port) == 1) {
      s.port = static_cast<uint16_t>(port);
    }
  }
  fclose(out);
  if (s.port == 0) {
    kill(pid, SIGKILL);
    waitpid(pid, nullptr, 0);
    throw Error("server did not report a port");
  }
  return s;
}

int RunCli(const std::string& cli, const std::string& args) {
  const int status = std::system((cli + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Verdict EndToEnd(const std::string& cli) {
  auto g = MakeProductionGroup();
  const fs::path dir = fs::temp_directory_path() / "mmvc_acceptance_e2e";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const ChildServer server = SpawnServer(cli);

  Rng rng(404);
  const PublicParams pk = Setup(g, 16, rng);
  const Matrix f = Matrix::Random(*g, 6, 16, rng);
  const KeyPair keys = KeyGen(pk, f, rng);
  size_t verified = 0;
  ServerResponse last;
  InputEncoding last_enc;
  {
    wire::Client client(g, "127.0.0.1", server.port);
    const wire::FunctionId id = client.Register(keys.ek);
    for (int i = 0; i < 50; ++i) {
      const auto x = RandomVector(*g, 16, rng);
      last_enc = ProbGen(pk, x);
      last = client.Compute(id, last_enc.x);
      const auto y = Verify(pk, keys.vk, last_enc.vk_x, last);
      verified += y && *y == MatrixVector(*g, f, x);
    }
  }

  auto write = [&](const char* name, wire::MessageType t, wire::Bytes payload) {
    wire::WriteKeyFile(dir / name, {t, BackendId::kProduction, std::move(payload)});
    return (dir / name).string();
  };
  const std::string pk_path =
      write("pk", wire::MessageType::kPublicParams, wire::EncodePublicParams(pk));
  const std::string vk_path = write("vk", wire::MessageType::kFunctionKey,
                                    wire::EncodeFunctionKey(*g, keys.vk));
  const std::string vkx_path = write("vkx", wire::MessageType::kInputKey,
                                     wire::EncodeInputKey(*g, last_enc.vk_x));
  const std::string good_path = write("resp", wire::MessageType::kResponse,
                                      wire::EncodeResponse(*g, last));
  ServerResponse corrupted = last;
  corrupted.y[0] = g->Add(corrupted.y[0], g->One());
  const std::string bad_path = write("bad", wire::MessageType::kResponse,
                                     wire::EncodeResponse(*g, corrupted));
  const std::string verify = "verify --pk " + pk_path + " --vk " + vk_path +
                             " --vkx " + vkx_path + " --in ";
  const int good_code = RunCli(cli, verify + good_path);
  const int bad_code = RunCli(cli, verify + bad_path);

  // The CLI as a network client against the same server process.
  const std::string ek_path = write("ek", wire::MessageType::kEvaluationKey,
                                    wire::EncodeEvaluationKey(*g, keys.ek));
  const std::string enc_path = write("enc", wire::MessageType::kEncoding,
                                     wire::EncodeEncoding(*g, last_enc.x));
  const int remote_code =
      RunCli(cli, "compute --ek " + ek_path + " --in " + enc_path + " --out " +
                      (dir / "remote").string() + " --connect 127.0.0.1:" +
                      std::to_string(server.port));
  const int remote_verify = RunCli(cli, verify + (dir / "remote").string());

  kill(server.pid, SIGTERM);
  int status = 0;
  waitpid(server.pid, &status, 0);
  const bool clean_exit = WIFEXITED(status) && WEXITSTATUS(status) == 0;
  fs::remove_all(dir);

  std::ostringstream os;
  os << verified << "/50 responses from the server process verified; "
     << "CLI verify exit " << good_code << " on the honest response, "
     << bad_code << " on the corrupted one; CLI remote compute exit "
     << remote_code << " then verify " << remote_verify
     << "; server shutdown " << (clean_exit ? "clean" : "unclean");
  return {verified == 50 && good_code == 0 && bad_code == 1 &&
              remote_code == 0 && remote_verify == 0 && clean_exit,
          os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: mmvc_acceptance <mmvc executable>\n";
    return 2;
  }
  const std::string cli = argv[1];
  Report("completeness", Completeness);
  Report("cost-table-exactness", CostTable);
  Report("size-formulas", SizeFormulas);
  Report("soundness-monte-carlo", Soundness);
  Report("desk-scale-speedup", DeskScale);
  Report("single-row-degeneracy", SingleRow);
  Report("end-to-end-process", [&] { return EndToEnd(cli); });
  std::cout << (failures == 0 ? "all criteria passed" : "criteria failed: ")
            << (failures == 0 ? "" : std::to_string(failures)) << std::endl;
  return failures == 0 ? 0 : 1;
}
