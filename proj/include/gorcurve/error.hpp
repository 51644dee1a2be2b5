#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gorcurve {

enum class ErrorKind {
  ZeroOrNegativeEntry,
  TooFewEntries,
  NotCoprime,
  NegativeQuery,
  Overflow,
  CapacityExceeded,
  DegenerateAdjugate,
  PreconditionViolated,
  WrongShape,
  NotCoprimeAdjoint,
  ZeroVector,
  MixedSignVector,
  InconsistentClassification,
  AssertionFailure,
  NotBinomial,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroOrNegativeEntry: return "ZeroOrNegativeEntry";
    case ErrorKind::TooFewEntries: return "TooFewEntries";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NegativeQuery: return "NegativeQuery";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::DegenerateAdjugate: return "DegenerateAdjugate";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::WrongShape: return "WrongShape";
    case ErrorKind::NotCoprimeAdjoint: return "NotCoprimeAdjoint";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::MixedSignVector: return "MixedSignVector";
    case ErrorKind::InconsistentClassification: return "InconsistentClassification";
    case ErrorKind::AssertionFailure: return "AssertionFailure";
    case ErrorKind::NotBinomial: return "NotBinomial";
  }
  return "Unknown";
}

// Every failure in the library surfaces as this exception. `value` carries the
// numeric payload when the kind has one (the offending gcd for NotCoprime).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail, std::optional<std::int64_t> value = std::nullopt)
      : std::runtime_error(format(kind, detail, value)), kind_(kind), value_(value) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::int64_t> value() const noexcept { return value_; }

 private:
  static std::string format(ErrorKind kind, const std::string& detail,
                            std::optional<std::int64_t> value) {
    std::string out(to_string(kind));
    if (value) out += "(" + std::to_string(*value) + ")";
    if (!detail.empty()) out += ": " + detail;
    return out;
  }

  ErrorKind kind_;
  std::optional<std::int64_t> value_;
};

inline void ensure(bool condition, ErrorKind kind, const std::string& detail) {
  if (!condition) throw Error(kind, detail);
}

}  // namespace gorcurve
