#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadgenus {

enum class ErrorKind {
  invalid_parameter,
  parse,
  invalid_embedding,
  invalid_surgery,
  invalid_link,
  no_partition,
  construction_failure,
  not_applicable,
  unsupported_family,
  verification_failure,
  budget_exceeded,
  internal,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::parse: return "parse-error";
    case ErrorKind::invalid_embedding: return "invalid-embedding";
    case ErrorKind::invalid_surgery: return "invalid-surgery";
    case ErrorKind::invalid_link: return "invalid-link";
    case ErrorKind::no_partition: return "no-partition";
    case ErrorKind::construction_failure: return "construction-failure";
    case ErrorKind::not_applicable: return "not-applicable";
    case ErrorKind::unsupported_family: return "unsupported-family";
    case ErrorKind::verification_failure: return "verification-failure";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::internal: return "internal-error";
  }
  return "unknown";
}

/// Every failure raised by the library carries a kind so the CLI can map it
/// onto a distinct exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::parse, what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace quadgenus
