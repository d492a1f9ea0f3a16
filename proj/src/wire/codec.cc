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

#include "mmvc/wire/codec.h"

#include <sodium.h>

#include <algorithm>
#include <fstream>
#include <iterator>

#include "mmvc/common/error.h"

namespace mmvc::wire {
namespace {

class Writer {
 public:
  explicit Writer(const Group* group) : group_(group) {}

  void U32(uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) {
      out_.push_back(static_cast<uint8_t>(v >> shift));
    }
  }
  void Dim(size_t v) {
    MMVC_ENFORCE(v <= UINT32_MAX, "dimension too large to encode");
    U32(static_cast<uint32_t>(v));
  }
  void Put(const Scalar& s) {
    size_t at = Grow(group_->scalar_bytes());
    group_->EncodeScalar(s, std::span(out_).subspan(at));
  }
  void Put(const GroupElement& e) {
    size_t at = Grow(group_->element_bytes());
    group_->EncodeElement(e, std::span(out_).subspan(at));
  }
  template <typename T>
  void PutAll(std::span<const T> items) {
    for (const auto& item : items) Put(item);
  }
  Bytes Take() { return std::move(out_); }

 private:
  size_t Grow(size_t n) {
    size_t at = out_.size();
    out_.resize(at + n);
    return at;
  }

  const Group* group_;
  Bytes out_;
};

class Reader {
 public:
  Reader(const Group* group, std::span<const uint8_t> in)
      : group_(group), in_(in) {}

  uint32_t U32() {
    auto b = Take(4);
    return (uint32_t{b[0]} << 24) | (uint32_t{b[1]} << 16) |
           (uint32_t{b[2]} << 8) | uint32_t{b[3]};
  }
  // Reads a dimension and checks that `count * width` more bytes exist.
  size_t Dim() { return U32(); }
  void Expect(size_t count, size_t width) {
    if (width != 0 && count > remaining() / width) {
      throw ProtocolError("short read");
    }
  }
  Scalar GetScalar() { return group_->DecodeScalar(Take(group_->scalar_bytes())); }
  GroupElement GetElement() {
    return group_->DecodeElement(Take(group_->element_bytes()));
  }
  std::vector<Scalar> Scalars(size_t n) {
    Expect(n, group_->scalar_bytes());
    std::vector<Scalar> v;
    v.reserve(n);
    for (size_t i = 0; i < n; ++i) v.push_back(GetScalar());
    return v;
  }
  std::vector<GroupElement> Elements(size_t n) {
    Expect(n, group_->element_bytes());
    std::vector<GroupElement> v;
    v.reserve(n);
    for (size_t i = 0; i < n; ++i) v.push_back(GetElement());
    return v;
  }
  void Finish() const {
    if (pos_ != in_.size()) throw ProtocolError("trailing bytes");
  }
  size_t remaining() const { return in_.size() - pos_; }

 private:
  std::span<const uint8_t> Take(size_t n) {
    if (remaining() < n) throw ProtocolError("short read");
    auto s = in_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

  const Group* group_;
  std::span<const uint8_t> in_;
  size_t pos_ = 0;
};

bool KnownType(uint8_t t) { return t >= 1 && t <= 7; }

void CheckMagic(std::span<const uint8_t> bytes) {
  if (bytes.size() < kMagic.size()) throw ProtocolError("short read");
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw ProtocolError("protocol mismatch");
  }
  if (bytes.size() < kMagic.size() + 1) throw ProtocolError("short read");
  if (bytes[4] != kVersion) throw ProtocolError("protocol mismatch");
}

}  // namespace

std::string_view MessageTypeName(MessageType t) {
  switch (t) {
    case MessageType::kPublicParams:
      return "PK";
    case MessageType::kEvaluationKey:
      return "EKF";
    case MessageType::kEncoding:
      return "ENC";
    case MessageType::kResponse:
      return "RESP";
    case MessageType::kError:
      return "ERR";
    case MessageType::kFunctionKey:
      return "VKF";
    case MessageType::kInputKey:
      return "VKX";
  }
  return "?";
}

Bytes EncodeFrame(const Frame& frame) {
  MMVC_ENFORCE(frame.payload.size() <= kMaxPayloadBytes, "payload too large");
  Bytes out(kMagic.begin(), kMagic.end());
  out.push_back(kVersion);
  out.push_back(static_cast<uint8_t>(frame.type));
  const auto len = static_cast<uint32_t>(frame.payload.size());
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<uint8_t>(len >> shift));
  }
  out.insert(out.end(), frame.payload.begin(), frame.payload.end());
  return out;
}

std::pair<MessageType, uint32_t> DecodeFrameHeader(
    std::span<const uint8_t> header) {
  CheckMagic(header);
  if (header.size() < kFrameHeaderBytes) throw ProtocolError("short read");
  if (!KnownType(header[5])) throw ProtocolError("unknown message type");
  const uint32_t len = (uint32_t{header[6]} << 24) |
                       (uint32_t{header[7]} << 16) |
                       (uint32_t{header[8]} << 8) | uint32_t{header[9]};
  if (len > kMaxPayloadBytes) throw ProtocolError("payload too large");
  return {static_cast<MessageType>(header[5]), len};
}

Frame DecodeFrame(std::span<const uint8_t> bytes) {
  auto [type, len] = DecodeFrameHeader(bytes);
  const auto body = bytes.subspan(kFrameHeaderBytes);
  if (body.size() < len) throw ProtocolError("short read");
  if (body.size() > len) throw ProtocolError("trailing bytes");
  return Frame{type, Bytes(body.begin(), body.end())};
}

Bytes EncodePublicParams(const PublicParams& pk) {
  Writer w(pk.group.get());
  w.Dim(pk.dimension());
  w.Put(pk.g);
  w.PutAll<GroupElement>(pk.R);
  return w.Take();
}

PublicParams DecodePublicParams(std::shared_ptr<const Group> group,
                                std::span<const uint8_t> payload) {
  Reader r(group.get(), payload);
  const size_t d = r.Dim();
  if (d == 0) throw ProtocolError("empty dimension");
  PublicParams pk;
  pk.g = r.GetElement();
  pk.R = r.Elements(d);
  r.Finish();
  if (pk.g == group->Identity()) throw ProtocolError("invalid element");
  pk.group = std::move(group);
  return pk;
}

Bytes EncodeEvaluationKey(const Group& group, const EvaluationKey& ek) {
  Writer w(&group);
  w.Dim(ek.F.rows());
  w.Dim(ek.F.cols());
  w.PutAll<Scalar>(ek.F.entries());
  w.PutAll<GroupElement>(ek.W);
  return w.Take();
}

EvaluationKey DecodeEvaluationKey(const Group& group,
                                  std::span<const uint8_t> payload) {
  Reader r(&group, payload);
  const size_t m = r.Dim();
  const size_t d = r.Dim();
  if (m == 0 || d == 0) throw ProtocolError("empty dimension");
  r.Expect(m, d * group.scalar_bytes());
  EvaluationKey ek;
  ek.F = Matrix(m, d, r.Scalars(m * d));
  ek.W = r.Elements(d);
  r.Finish();
  return ek;
}

Bytes EncodeEncoding(const Group& group, std::span<const Scalar> x) {
  Writer w(&group);
  w.Dim(x.size());
  w.PutAll<Scalar>(x);
  return w.Take();
}

std::vector<Scalar> DecodeEncoding(const Group& group,
                                   std::span<const uint8_t> payload) {
  Reader r(&group, payload);
  const size_t d = r.Dim();
  if (d == 0) throw ProtocolError("empty dimension");
  auto x = r.Scalars(d);
  r.Finish();
  return x;
}

Bytes EncodeResponse(const Group& group, const ServerResponse& resp) {
  Writer w(&group);
  w.Dim(resp.y.size());
  w.PutAll<Scalar>(resp.y);
  w.Put(resp.V);
  return w.Take();
}

ServerResponse DecodeResponse(const Group& group,
                              std::span<const uint8_t> payload) {
  Reader r(&group, payload);
  const size_t m = r.Dim();
  if (m == 0) throw ProtocolError("empty dimension");
  ServerResponse resp;
  resp.y = r.Scalars(m);
  resp.V = r.GetElement();
  r.Finish();
  return resp;
}

Bytes EncodeFunctionKey(const Group& group,
                        const FunctionVerificationKey& vk) {
  Writer w(&group);
  w.Dim(vk.r.size());
  w.Put(vk.k);
  w.PutAll<Scalar>(vk.r);
  return w.Take();
}

FunctionVerificationKey DecodeFunctionKey(const Group& group,
                                          std::span<const uint8_t> payload) {
  Reader r(&group, payload);
  const size_t m = r.Dim();
  if (m == 0) throw ProtocolError("empty dimension");
  FunctionVerificationKey vk;
  vk.k = r.GetScalar();
  vk.r = r.Scalars(m);
  r.Finish();
  return vk;
}

Bytes EncodeInputKey(const Group& group, const GroupElement& vk_x) {
  Writer w(&group);
  w.Put(vk_x);
  return w.Take();
}

GroupElement DecodeInputKey(const Group& group,
                            std::span<const uint8_t> payload) {
  Reader r(&group, payload);
  GroupElement e = r.GetElement();
  r.Finish();
  return e;
}

size_t DimensionHeaderBytes(MessageType t) {
  switch (t) {
    case MessageType::kEvaluationKey:
      return 8;
    case MessageType::kPublicParams:
    case MessageType::kEncoding:
    case MessageType::kResponse:
    case MessageType::kFunctionKey:
      return 4;
    case MessageType::kInputKey:
    case MessageType::kError:
      return 0;
  }
  return 0;
}

FunctionId ComputeFunctionId(std::span<const uint8_t> ek_payload) {
  EnsureSodium();
  FunctionId id;
  crypto_hash_sha256(id.data(), ek_payload.data(), ek_payload.size());
  return id;
}

std::string FunctionIdHex(const FunctionId& id) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string s;
  s.reserve(id.size() * 2);
  for (uint8_t b : id) {
    s.push_back(kHex[b >> 4]);
    s.push_back(kHex[b & 0xf]);
  }
  return s;
}

Bytes EncodeKeyFile(const KeyFile& file) {
  Bytes out(kMagic.begin(), kMagic.end());
  out.push_back(kVersion);
  out.push_back(static_cast<uint8_t>(file.type));
  out.push_back(static_cast<uint8_t>(file.backend));
  out.push_back(0);
  out.insert(out.end(), file.payload.begin(), file.payload.end());
  return out;
}

KeyFile DecodeKeyFile(std::span<const uint8_t> bytes) {
  CheckMagic(bytes);
  if (bytes.size() < kFileHeaderBytes) throw ProtocolError("short read");
  if (!KnownType(bytes[5])) throw ProtocolError("unknown message type");
  const uint8_t backend = bytes[6];
  if (backend != static_cast<uint8_t>(BackendId::kProduction) &&
      backend != static_cast<uint8_t>(BackendId::kToy)) {
    throw ProtocolError("protocol mismatch");
  }
  const auto body = bytes.subspan(kFileHeaderBytes);
  return KeyFile{static_cast<MessageType>(bytes[5]),
                 static_cast<BackendId>(backend),
                 Bytes(body.begin(), body.end())};
}

void WriteKeyFile(const std::filesystem::path& path, const KeyFile& file) {
  const Bytes bytes = EncodeKeyFile(file);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ProtocolError("cannot open " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw ProtocolError("cannot write " + path.string());
}

KeyFile ReadKeyFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProtocolError("cannot open " + path.string());
  Bytes bytes((std::istreambuf_iterator<char>(in)),
              std::istreambuf_iterator<char>());
  return DecodeKeyFile(bytes);
}

}  // namespace mmvc::wire
