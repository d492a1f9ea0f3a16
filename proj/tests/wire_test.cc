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

#include <atomic>
#include <filesystem>
#include <thread>

#include <gtest/gtest.h>
#include <sodium.h>

#include "mmvc/wire/codec.h"
#include "mmvc/wire/net.h"
#include "mmvc/wire/size_report.h"
#include "test_util.h"

namespace mmvc::wire {
namespace {

// Runs fn and returns the ProtocolError message, or "" if nothing threw.
template <typename Fn>
std::string ProtocolMessage(Fn&& fn) {
  try {
    fn();
  } catch (const ProtocolError& e) {
    return e.what();
  }
  return "";
}

class WireTest : public ::testing::TestWithParam<BackendId> {
 protected:
  std::shared_ptr<const Group> group() const { return MakeGroup(GetParam()); }
};

INSTANTIATE_TEST_SUITE_P(Backends, WireTest,
                         ::testing::Values(BackendId::kToy,
                                           BackendId::kProduction),
                         [](const auto& info) {
                           return std::string(BackendName(info.param));
                         });

TEST(Frame, LayoutAndRoundTrip) {
  const Frame f{MessageType::kEncoding, {0xde, 0xad, 0xbe}};
  const Bytes bytes = EncodeFrame(f);
  const Bytes want = {'M', 'M', 'V', 'C', 1, 3, 0, 0, 0, 3, 0xde, 0xad, 0xbe};
  EXPECT_EQ(bytes, want);
  EXPECT_EQ(DecodeFrame(bytes), f);
  const auto [type, len] = DecodeFrameHeader(std::span(bytes).first(10));
  EXPECT_EQ(type, MessageType::kEncoding);
  EXPECT_EQ(len, 3u);
}

TEST(Frame, ErrorPaths) {
  Bytes good = EncodeFrame({MessageType::kResponse, {1, 2}});
  EXPECT_NE(ProtocolMessage([] { DecodeFrame({}); }).find("short read"),
            std::string::npos);
  Bytes bad_magic = good;
  bad_magic[0] = 'X';
  EXPECT_NE(ProtocolMessage([&] { DecodeFrame(bad_magic); })
                .find("protocol mismatch"),
            std::string::npos);
  Bytes bad_version = good;
  bad_version[4] = 2;
  EXPECT_NE(ProtocolMessage([&] { DecodeFrame(bad_version); })
                .find("protocol mismatch"),
            std::string::npos);
  Bytes bad_type = good;
  bad_type[5] = 42;
  EXPECT_NE(ProtocolMessage([&] { DecodeFrame(bad_type); })
                .find("unknown message type"),
            std::string::npos);
  Bytes truncated(good.begin(), good.end() - 1);
  EXPECT_NE(ProtocolMessage([&] { DecodeFrame(truncated); }).find("short read"),
            std::string::npos);
  Bytes trailing = good;
  trailing.push_back(0);
  EXPECT_NE(
      ProtocolMessage([&] { DecodeFrame(trailing); }).find("trailing bytes"),
      std::string::npos);
  Bytes huge = {'M', 'M', 'V', 'C', 1, 4, 0x7f, 0xff, 0xff, 0xff};
  EXPECT_NE(ProtocolMessage([&] { DecodeFrameHeader(huge); })
                .find("payload too large"),
            std::string::npos);
}

TEST_P(WireTest, TypedRoundTrips) {
  auto g = group();
  Rng rng(1);
  const PublicParams pk = mmvc::Setup(g, 4, rng);
  const KeyPair keys = KeyGen(pk, Matrix::Random(*g, 3, 4, rng), rng);
  const InputEncoding enc = ProbGen(pk, RandomVector(*g, 4, rng));
  const ServerResponse resp = Compute(*g, keys.ek, enc.x);

  const PublicParams pk2 = DecodePublicParams(g, EncodePublicParams(pk));
  EXPECT_EQ(pk2.g, pk.g);
  EXPECT_EQ(pk2.R, pk.R);
  EXPECT_EQ(DecodeEvaluationKey(*g, EncodeEvaluationKey(*g, keys.ek)),
            keys.ek);
  EXPECT_EQ(DecodeEncoding(*g, EncodeEncoding(*g, enc.x)), enc.x);
  EXPECT_EQ(DecodeResponse(*g, EncodeResponse(*g, resp)), resp);
  EXPECT_EQ(DecodeFunctionKey(*g, EncodeFunctionKey(*g, keys.vk)), keys.vk);
  EXPECT_EQ(DecodeInputKey(*g, EncodeInputKey(*g, enc.vk_x)), enc.vk_x);

  // Exact payload sizes: dimension header plus fixed-width fields.
  const size_t ls = g->scalar_bytes(), le = g->element_bytes();
  EXPECT_EQ(EncodePublicParams(pk).size(), 4 + 5 * le);
  EXPECT_EQ(EncodeEvaluationKey(*g, keys.ek).size(), 8 + 12 * ls + 4 * le);
  EXPECT_EQ(EncodeEncoding(*g, enc.x).size(), 4 + 4 * ls);
  EXPECT_EQ(EncodeResponse(*g, resp).size(), 4 + 3 * ls + le);
  EXPECT_EQ(EncodeFunctionKey(*g, keys.vk).size(), 4 + 4 * ls);
  EXPECT_EQ(EncodeInputKey(*g, enc.vk_x).size(), le);
}

TEST_P(WireTest, RejectsCorruptPayloads) {
  auto g = group();
  Rng rng(2);
  const PublicParams pk = mmvc::Setup(g, 2, rng);
  Bytes payload = EncodePublicParams(pk);
  // Overwrite R_1 with an invalid encoding.
  std::fill(payload.end() - g->element_bytes(), payload.end(), 0xff);
  EXPECT_NE(ProtocolMessage([&] { DecodePublicParams(g, payload); })
                .find("invalid element"),
            std::string::npos);
  EXPECT_NE(ProtocolMessage([&] { DecodePublicParams(g, {}); })
                .find("short read"),
            std::string::npos);
  const Bytes zero_dim = {0, 0, 0, 0};
  EXPECT_NE(ProtocolMessage([&] { DecodeEncoding(*g, zero_dim); })
                .find("empty dimension"),
            std::string::npos);
  Bytes enc = EncodeEncoding(*g, RandomVector(*g, 2, rng));
  enc.push_back(0);
  EXPECT_NE(
      ProtocolMessage([&] { DecodeEncoding(*g, enc); }).find("trailing bytes"),
      std::string::npos);
  // A scalar at or above p.
  Bytes big = {0, 0, 0, 1};
  big.resize(4 + g->scalar_bytes(), 0xff);
  EXPECT_NE(
      ProtocolMessage([&] { DecodeEncoding(*g, big); }).find("invalid scalar"),
      std::string::npos);
}

TEST(KeyFile, RoundTripAndValidation) {
  const auto dir = std::filesystem::temp_directory_path() / "mmvc_wire_test";
  std::filesystem::create_directories(dir);
  const KeyFile f{MessageType::kFunctionKey, BackendId::kToy, {9, 8, 7}};
  const Bytes bytes = EncodeKeyFile(f);
  EXPECT_EQ(bytes.size(), kFileHeaderBytes + 3);
  EXPECT_EQ(bytes[6], static_cast<uint8_t>(BackendId::kToy));
  WriteKeyFile(dir / "vk.bin", f);
  const KeyFile back = ReadKeyFile(dir / "vk.bin");
  EXPECT_EQ(back.type, f.type);
  EXPECT_EQ(back.backend, f.backend);
  EXPECT_EQ(back.payload, f.payload);
  Bytes bad = bytes;
  bad[1] = 'X';
  EXPECT_THROW(DecodeKeyFile(bad), ProtocolError);
  EXPECT_THROW(ReadKeyFile(dir / "missing.bin"), ProtocolError);
  std::filesystem::remove_all(dir);
}

TEST(FunctionId, IsSha256OfPayload) {
  const Bytes payload = {1, 2, 3, 4, 5};
  FunctionId want{};
  crypto_hash_sha256(want.data(), payload.data(), payload.size());
  EXPECT_EQ(ComputeFunctionId(payload), want);
  EXPECT_EQ(FunctionIdHex(want).size(), 64u);
}

TEST(Sizes, PublishedWorkloadValues) {
  const SizeReport r = ComputeSizeReport({20, 20, 200, 20}, 2304, 832);
  EXPECT_NEAR(r.c1_mib(), 44.13, 0.01);
  EXPECT_NEAR(r.c2_mib(), 59.92, 0.01);
  EXPECT_NEAR(r.s2_kib(), 2252.03, 0.01);
  // s^1 evaluates to 1132.65625 exactly.
  EXPECT_DOUBLE_EQ(r.s1_kib(), 1132.65625);
}

TEST(Sizes, ClosedFormsByHand) {
  // a=2, b=3, m=4, d=5 with l_p = 10, l_G = 100.
  const SizeReport r = ComputeSizeReport({2, 3, 4, 5}, 10, 100);
  EXPECT_EQ(r.mmvc.communication_bits(), (40 + 15 + 24) * 10 + (10 + 6) * 100);
  EXPECT_EQ(r.fg12.communication_bits(),
            (40 + 15 + 24) * 10 + (40 + 24) * 100);
  EXPECT_EQ(r.mmvc.storage_bits(), 2 * 5 * 10 + 3 * 100);
  EXPECT_EQ(r.fg12.storage_bits(), 16 * 10 + 3 * 100);
}

TEST_P(WireTest, MeasuredSizesMatchFormulas) {
  auto g = group();
  Rng rng(3);
  for (uint64_t a : {1, 2, 3}) {
    for (uint64_t b : {1, 2, 3}) {
      for (uint64_t m : {1, 2, 5}) {
        for (uint64_t d : {1, 4, 16}) {
          const Workload w{a, b, m, d};
          const MeasuredSizes got = MeasureSizes(w, g, rng);
          const SizeReport want = ComputeSizeReport(w, *g);
          EXPECT_EQ(got.mmvc, want.mmvc) << a << b << m << d;
          EXPECT_EQ(got.fg12, want.fg12) << a << b << m << d;
        }
      }
    }
  }
}

TEST(Server, HandlesRequestsDirectly) {
  auto g = MakeToyGroup();
  Rng rng(4);
  const PublicParams pk = mmvc::Setup(g, 3, rng);
  const KeyPair keys = KeyGen(pk, Matrix::Random(*g, 2, 3, rng), rng);
  Server server(g, 0);
  const Bytes ek_payload = EncodeEvaluationKey(*g, keys.ek);
  const Frame ack = server.Handle({MessageType::kEvaluationKey, ek_payload});
  ASSERT_EQ(ack.type, MessageType::kEvaluationKey);
  FunctionId id{};
  ASSERT_EQ(ack.payload.size(), id.size());
  std::copy(ack.payload.begin(), ack.payload.end(), id.begin());
  EXPECT_EQ(id, ComputeFunctionId(ek_payload));

  const InputEncoding enc = ProbGen(pk, RandomVector(*g, 3, rng));
  const Frame resp = server.Handle(
      {MessageType::kEncoding,
       MakeComputeRequest(id, EncodeEncoding(*g, enc.x))});
  ASSERT_EQ(resp.type, MessageType::kResponse);
  EXPECT_TRUE(Verify(pk, keys.vk, enc.vk_x, DecodeResponse(*g, resp.payload)));

  FunctionId other = id;
  other[0] ^= 1;
  const Frame err = server.Handle(
      {MessageType::kEncoding,
       MakeComputeRequest(other, EncodeEncoding(*g, enc.x))});
  EXPECT_EQ(err.type, MessageType::kError);
  EXPECT_NE(std::string(err.payload.begin(), err.payload.end())
                .find("unknown function"),
            std::string::npos);
  EXPECT_EQ(server.Handle({MessageType::kPublicParams, {}}).type,
            MessageType::kError);
  EXPECT_EQ(server.Handle({MessageType::kEvaluationKey, {0, 0}}).type,
            MessageType::kError);
}

TEST(Server, ConcurrentClientsOverTcp) {
  auto g = MakeToyGroup();
  Rng rng(5);
  const PublicParams pk = mmvc::Setup(g, 4, rng);
  Server server(g, 0);
  std::thread runner([&] { server.Run(); });

  constexpr int kClients = 10, kRequestsEach = 10;
  std::vector<KeyPair> keys;
  for (int c = 0; c < kClients; ++c) {
    keys.push_back(KeyGen(pk, Matrix::Random(*g, 1 + c % 3, 4, rng), rng));
  }
  std::vector<std::vector<Scalar>> inputs;
  for (int i = 0; i < kClients * kRequestsEach; ++i) {
    inputs.push_back(RandomVector(*g, 4, rng));
  }
  std::atomic<int> verified{0};
  std::vector<std::thread> clients;
  for (int c = 0; c < kClients; ++c) {
    clients.emplace_back([&, c] {
      Client client(g, "127.0.0.1", server.port());
      const FunctionId id = client.Register(keys[c].ek);
      for (int i = 0; i < kRequestsEach; ++i) {
        const auto& x = inputs[c * kRequestsEach + i];
        const InputEncoding enc = ProbGen(pk, x);
        const ServerResponse resp = client.Compute(id, enc.x);
        const auto y = Verify(pk, keys[c].vk, enc.vk_x, resp);
        if (y && *y == MatrixVector(*g, keys[c].ek.F, x)) ++verified;
      }
      FunctionId unknown{};
      EXPECT_THROW(client.Compute(unknown, inputs[0]), RemoteError);
    });
  }
  for (auto& t : clients) t.join();
  EXPECT_EQ(verified.load(), kClients * kRequestsEach);
  EXPECT_EQ(server.store().size(), static_cast<size_t>(kClients));
  server.Stop();
  runner.join();
}

}  // namespace
}  // namespace mmvc::wire
