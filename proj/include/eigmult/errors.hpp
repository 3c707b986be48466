#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eigmult {

// Bad argument for the requested operation (vertex out of range, family size too small, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input violates a documented precondition (e.g. a non-forest handed to a forest-only routine).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive search was asked to run above its configured size cap.
class CapExceededError : public std::length_error {
 public:
  CapExceededError(const std::string& what, int n, int cap)
      : std::length_error(what + ": n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap)),
        n_(n),
        cap_(cap) {}
  int n() const noexcept { return n_; }
  int cap() const noexcept { return cap_; }

 private:
  int n_;
  int cap_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Reading or writing a file failed; the message names the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction that must succeed mathematically did not. Always indicates a bug.
class SoundnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eigmult
