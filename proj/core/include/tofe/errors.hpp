#pragma once

#include <stdexcept>
#include <string>

namespace tofe {

// One error class with a kind tag so callers (and the CLI exit-code mapping)
// can tell failure classes apart without a taxonomy of exception types.
enum class ErrorKind {
  config,           // invalid configuration or arguments
  shape,            // tensor/vector dimension mismatch
  step_index,       // timestep outside the schedule range
  contract,         // caller violated a documented precondition
  numeric,          // NaN/Inf or divergent computation
  missing_input,    // a required artifact does not exist yet
  io,               // generic I/O failure
  io_bad_magic,     // file does not start with the expected magic
  io_bad_version,   // file version not supported by this reader
  io_truncated,     // file ends before the declared payload
  io_hash_mismatch, // stored checksum does not match the payload
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind);

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace tofe
