#pragma once

#include <stdexcept>
#include <string>

namespace inkdrop {

enum class ErrorKind {
  invalid_argument,
  config,
  io,
  stage,
  stale_cache,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace inkdrop
