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

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <thread>
#include <vector>

#include "mmvc/common/error.h"
#include "mmvc/wire/codec.h"

namespace mmvc::wire {

// Error message carried back in an ERR frame.
class RemoteError : public mmvc::ProtocolError {
 public:
  using mmvc::ProtocolError::ProtocolError;
};

// Owns a socket descriptor.
class Socket {
 public:
  Socket() = default;
  explicit Socket(int fd) : fd_(fd) {}
  ~Socket();
  Socket(Socket&& o) noexcept : fd_(o.release()) {}
  Socket& operator=(Socket&& o) noexcept;
  Socket(const Socket&) = delete;
  Socket& operator=(const Socket&) = delete;

  int fd() const { return fd_; }
  bool valid() const { return fd_ >= 0; }
  int release() {
    int fd = fd_;
    fd_ = -1;
    return fd;
  }

 private:
  int fd_ = -1;
};

void WriteFrame(int fd, const Frame& frame);
// std::nullopt on a clean end of stream before the first header byte.
std::optional<Frame> ReadFrame(int fd);

// Registered evaluation keys by content-derived id. Last write wins.
class EvaluationKeyStore {
 public:
  void Register(const FunctionId& id, EvaluationKey ek);
  std::shared_ptr<const EvaluationKey> Find(const FunctionId& id) const;
  size_t size() const;

 private:
  mutable std::shared_mutex mu_;
  std::map<FunctionId, std::shared_ptr<const EvaluationKey>> keys_;
};

// Server half of the protocol:
//   EKF(payload)        -> EKF(function id)   key registered
//   ENC(id | encoding)  -> RESP(response)     Compute against key `id`
//   anything malformed  -> ERR(message)
// Each connection is served on its own thread.
class Server {
 public:
  // port 0 picks an ephemeral port; see port().
  Server(std::shared_ptr<const Group> group, uint16_t port,
         const std::string& bind_address = "127.0.0.1");
  ~Server();

  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  uint16_t port() const { return port_; }

  // Accept loop; returns after Stop().
  void Run();
  void Stop();

  // Pure request handler, also used directly by tests.
  Frame Handle(const Frame& request);

  const EvaluationKeyStore& store() const { return store_; }

 private:
  void ServeConnection(int fd);

  std::shared_ptr<const Group> group_;
  Socket listener_;
  uint16_t port_ = 0;
  std::atomic<bool> stopping_{false};
  EvaluationKeyStore store_;

  std::mutex conn_mu_;
  std::vector<int> open_fds_;
  std::vector<std::thread> workers_;
};

// Client half. One connection, requests are sequential.
class Client {
 public:
  Client(std::shared_ptr<const Group> group, const std::string& host,
         uint16_t port);

  FunctionId Register(const EvaluationKey& ek);
  ServerResponse Compute(const FunctionId& id, std::span<const Scalar> x);
  Frame RoundTrip(const Frame& request);

 private:
  std::shared_ptr<const Group> group_;
  Socket sock_;
};

Bytes MakeComputeRequest(const FunctionId& id, std::span<const uint8_t> enc);

}  // namespace mmvc::wire
