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

#include "mmvc/wire/net.h"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <iostream>

#include "mmvc/common/error.h"

namespace mmvc::wire {
namespace {

// Returns false if the stream ended before any byte was read.
bool ReadExact(int fd, std::span<uint8_t> out) {
  size_t done = 0;
  while (done < out.size()) {
    ssize_t n = ::recv(fd, out.data() + done, out.size() - done, 0);
    if (n == 0) {
      if (done == 0) return false;
      throw ProtocolError("short read");
    }
    if (n < 0) {
      if (errno == EINTR) continue;
      throw ProtocolError(std::string("recv: ") + std::strerror(errno));
    }
    done += static_cast<size_t>(n);
  }
  return true;
}

void WriteAll(int fd, std::span<const uint8_t> data) {
  size_t done = 0;
  while (done < data.size()) {
    ssize_t n = ::send(fd, data.data() + done, data.size() - done,
                       MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw ProtocolError(std::string("send: ") + std::strerror(errno));
    }
    done += static_cast<size_t>(n);
  }
}

Frame ErrorFrame(std::string_view msg) {
  return Frame{MessageType::kError, Bytes(msg.begin(), msg.end())};
}

}  // namespace

Socket::~Socket() {
  if (fd_ >= 0) ::close(fd_);
}

Socket& Socket::operator=(Socket&& o) noexcept {
  if (this != &o) {
    if (fd_ >= 0) ::close(fd_);
    fd_ = o.release();
  }
  return *this;
}

void WriteFrame(int fd, const Frame& frame) {
  WriteAll(fd, EncodeFrame(frame));
}

std::optional<Frame> ReadFrame(int fd) {
  std::array<uint8_t, kFrameHeaderBytes> header{};
  if (!ReadExact(fd, header)) return std::nullopt;
  auto [type, len] = DecodeFrameHeader(header);
  Frame frame{type, Bytes(len)};
  if (len > 0 && !ReadExact(fd, frame.payload)) {
    throw ProtocolError("short read");
  }
  return frame;
}

void EvaluationKeyStore::Register(const FunctionId& id, EvaluationKey ek) {
  auto ptr = std::make_shared<const EvaluationKey>(std::move(ek));
  std::unique_lock lock(mu_);
  keys_[id] = std::move(ptr);
}

std::shared_ptr<const EvaluationKey> EvaluationKeyStore::Find(
    const FunctionId& id) const {
  std::shared_lock lock(mu_);
  auto it = keys_.find(id);
  return it == keys_.end() ? nullptr : it->second;
}

size_t EvaluationKeyStore::size() const {
  std::shared_lock lock(mu_);
  return keys_.size();
}

Bytes MakeComputeRequest(const FunctionId& id, std::span<const uint8_t> enc) {
  Bytes out(id.begin(), id.end());
  out.insert(out.end(), enc.begin(), enc.end());
  return out;
}

Server::Server(std::shared_ptr<const Group> group, uint16_t port,
               const std::string& bind_address)
    : group_(std::move(group)) {
  listener_ = Socket(::socket(AF_INET, SOCK_STREAM, 0));
  if (!listener_.valid()) {
    throw ProtocolError(std::string("socket: ") + std::strerror(errno));
  }
  int one = 1;
  ::setsockopt(listener_.fd(), SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  if (::inet_pton(AF_INET, bind_address.c_str(), &addr.sin_addr) != 1) {
    throw ProtocolError("bad bind address " + bind_address);
  }
  if (::bind(listener_.fd(), reinterpret_cast<sockaddr*>(&addr),
             sizeof(addr)) != 0 ||
      ::listen(listener_.fd(), 64) != 0) {
    throw ProtocolError(std::string("bind/listen: ") + std::strerror(errno));
  }
  socklen_t len = sizeof(addr);
  ::getsockname(listener_.fd(), reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);
}

Server::~Server() {
  Stop();
  std::vector<std::thread> workers;
  {
    std::lock_guard lock(conn_mu_);
    workers.swap(workers_);
  }
  for (auto& t : workers) {
    if (t.joinable()) t.join();
  }
}

void Server::Stop() {
  if (stopping_.exchange(true)) return;
  ::shutdown(listener_.fd(), SHUT_RDWR);
  std::lock_guard lock(conn_mu_);
  for (int fd : open_fds_) ::shutdown(fd, SHUT_RDWR);
}

void Server::Run() {
  while (!stopping_) {
    int fd = ::accept(listener_.fd(), nullptr, nullptr);
    if (fd < 0) {
      if (stopping_) break;
      if (errno == EINTR || errno == ECONNABORTED) continue;
      std::cerr << "mmvc serve: accept: " << std::strerror(errno) << "\n";
      continue;
    }
    int one = 1;
    ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
    std::lock_guard lock(conn_mu_);
    if (stopping_) {
      ::close(fd);
      break;
    }
    open_fds_.push_back(fd);
    workers_.emplace_back([this, fd] { ServeConnection(fd); });
  }
}

void Server::ServeConnection(int fd) {
  Socket sock(fd);
  try {
    while (true) {
      std::optional<Frame> request;
      try {
        request = ReadFrame(fd);
      } catch (const ProtocolError& e) {
        // The stream cannot be resynchronised after a bad header.
        WriteFrame(fd, ErrorFrame(e.what()));
        break;
      }
      if (!request) break;
      WriteFrame(fd, Handle(*request));
    }
  } catch (const std::exception& e) {
    std::cerr << "mmvc serve: connection dropped: " << e.what() << "\n";
  }
  std::lock_guard lock(conn_mu_);
  open_fds_.erase(std::remove(open_fds_.begin(), open_fds_.end(), fd),
                  open_fds_.end());
}

Frame Server::Handle(const Frame& request) {
  try {
    switch (request.type) {
      case MessageType::kEvaluationKey: {
        EvaluationKey ek = DecodeEvaluationKey(*group_, request.payload);
        const FunctionId id = ComputeFunctionId(request.payload);
        store_.Register(id, std::move(ek));
        return Frame{MessageType::kEvaluationKey, Bytes(id.begin(), id.end())};
      }
      case MessageType::kEncoding: {
        if (request.payload.size() < FunctionId{}.size()) {
          throw ProtocolError("short read");
        }
        FunctionId id;
        std::copy_n(request.payload.begin(), id.size(), id.begin());
        const auto x = DecodeEncoding(
            *group_, std::span(request.payload).subspan(id.size()));
        auto ek = store_.Find(id);
        if (!ek) throw Error("unknown function");
        return Frame{MessageType::kResponse,
                     EncodeResponse(*group_, Compute(*group_, *ek, x))};
      }
      default:
        throw ProtocolError("unexpected message type " +
                            std::string(MessageTypeName(request.type)));
    }
  } catch (const Error& e) {
    return ErrorFrame(e.what());
  }
}

Client::Client(std::shared_ptr<const Group> group, const std::string& host,
               uint16_t port)
    : group_(std::move(group)) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  const std::string service = std::to_string(port);
  if (::getaddrinfo(host.c_str(), service.c_str(), &hints, &res) != 0 ||
      res == nullptr) {
    throw ProtocolError("cannot resolve " + host);
  }
  Socket s(::socket(res->ai_family, res->ai_socktype, res->ai_protocol));
  int rc = s.valid() ? ::connect(s.fd(), res->ai_addr, res->ai_addrlen) : -1;
  ::freeaddrinfo(res);
  if (rc != 0) {
    throw ProtocolError("cannot connect to " + host + ":" + service + ": " +
                        std::strerror(errno));
  }
  int one = 1;
  ::setsockopt(s.fd(), IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
  sock_ = std::move(s);
}

Frame Client::RoundTrip(const Frame& request) {
  WriteFrame(sock_.fd(), request);
  auto reply = ReadFrame(sock_.fd());
  if (!reply) throw ProtocolError("connection closed by server");
  if (reply->type == MessageType::kError) {
    throw RemoteError(std::string(reply->payload.begin(), reply->payload.end()));
  }
  return std::move(*reply);
}

FunctionId Client::Register(const EvaluationKey& ek) {
  Frame reply = RoundTrip(
      Frame{MessageType::kEvaluationKey, EncodeEvaluationKey(*group_, ek)});
  FunctionId id;
  if (reply.type != MessageType::kEvaluationKey ||
      reply.payload.size() != id.size()) {
    throw ProtocolError("protocol mismatch");
  }
  std::copy(reply.payload.begin(), reply.payload.end(), id.begin());
  return id;
}

ServerResponse Client::Compute(const FunctionId& id,
                               std::span<const Scalar> x) {
  Frame reply = RoundTrip(Frame{
      MessageType::kEncoding,
      MakeComputeRequest(id, EncodeEncoding(*group_, x))});
  if (reply.type != MessageType::kResponse) {
    throw ProtocolError("protocol mismatch");
  }
  return DecodeResponse(*group_, reply.payload);
}

}  // namespace mmvc::wire
