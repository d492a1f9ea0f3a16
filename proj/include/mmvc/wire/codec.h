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

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "mmvc/scheme/mmvc.h"

// Canonical byte encodings of protocol objects and the frame format.
//
// Frame:   "MMVC" | version (1) | type (1) | payload_len (u32 BE) | payload
// Key file: "MMVC" | version (1) | type (1) | backend (1) | reserved (1) | payload
//
// Payloads list dimensions as u32 big-endian, then scalars, then group
// elements, each fixed width for the group backend:
//   PK    d | g R_1..R_d
//   EKF   m d | F (row-major) | W_1..W_d
//   ENC   d | x_1..x_d
//   RESP  m | y_1..y_m | V
//   VKF   m | k r_1..r_m
//   VKX   VK_x
//   ERR   UTF-8 message
namespace mmvc::wire {

using Bytes = std::vector<uint8_t>;

inline constexpr std::array<uint8_t, 4> kMagic = {'M', 'M', 'V', 'C'};
inline constexpr uint8_t kVersion = 1;
inline constexpr size_t kFrameHeaderBytes = 10;
inline constexpr size_t kFileHeaderBytes = 8;
inline constexpr uint32_t kMaxPayloadBytes = 256u << 20;

enum class MessageType : uint8_t {
  kPublicParams = 1,
  kEvaluationKey = 2,
  kEncoding = 3,
  kResponse = 4,
  kError = 5,
  // File-only types for the client's private keys.
  kFunctionKey = 6,
  kInputKey = 7,
};

std::string_view MessageTypeName(MessageType t);

struct Frame {
  MessageType type;
  Bytes payload;

  friend bool operator==(const Frame&, const Frame&) = default;
};

Bytes EncodeFrame(const Frame& frame);
// Parses one complete frame; the input must contain exactly one frame.
Frame DecodeFrame(std::span<const uint8_t> bytes);
// Parses and validates a 10-byte header, returning type and payload length.
std::pair<MessageType, uint32_t> DecodeFrameHeader(
    std::span<const uint8_t> header);

Bytes EncodePublicParams(const PublicParams& pk);
PublicParams DecodePublicParams(std::shared_ptr<const Group> group,
                                std::span<const uint8_t> payload);

Bytes EncodeEvaluationKey(const Group& group, const EvaluationKey& ek);
EvaluationKey DecodeEvaluationKey(const Group& group,
                                  std::span<const uint8_t> payload);

Bytes EncodeEncoding(const Group& group, std::span<const Scalar> x);
std::vector<Scalar> DecodeEncoding(const Group& group,
                                   std::span<const uint8_t> payload);

Bytes EncodeResponse(const Group& group, const ServerResponse& resp);
ServerResponse DecodeResponse(const Group& group,
                              std::span<const uint8_t> payload);

Bytes EncodeFunctionKey(const Group& group, const FunctionVerificationKey& vk);
FunctionVerificationKey DecodeFunctionKey(const Group& group,
                                          std::span<const uint8_t> payload);

Bytes EncodeInputKey(const Group& group, const GroupElement& vk_x);
GroupElement DecodeInputKey(const Group& group,
                            std::span<const uint8_t> payload);

// Bytes of a payload spent on dimension fields rather than on scalars and
// group elements.
size_t DimensionHeaderBytes(MessageType t);

// Content-derived function identifier: SHA-256 of the EKF payload.
using FunctionId = std::array<uint8_t, 32>;
FunctionId ComputeFunctionId(std::span<const uint8_t> ek_payload);
std::string FunctionIdHex(const FunctionId& id);

// Key files.
struct KeyFile {
  MessageType type;
  BackendId backend;
  Bytes payload;
};

Bytes EncodeKeyFile(const KeyFile& file);
KeyFile DecodeKeyFile(std::span<const uint8_t> bytes);
void WriteKeyFile(const std::filesystem::path& path, const KeyFile& file);
KeyFile ReadKeyFile(const std::filesystem::path& path);

}  // namespace mmvc::wire
