#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace xmodlie {

/// Failure categories, doubling as CLI exit codes.
enum class ErrorKind : int {
  parse = 2,
  axiom = 3,
  classification = 4,
  internal = 5,
};

class XmodError : public std::runtime_error {
 public:
  XmodError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

/// One failed law: which axiom, at which basis indices, and optional detail.
struct Violation {
  std::string axiom;
  std::vector<long> where;
  std::string detail;

  std::string to_string() const {
    std::ostringstream os;
    os << axiom;
    if (!where.empty()) {
      os << " at (";
      for (std::size_t k = 0; k < where.size(); ++k) {
        if (k) os << ',';
        os << where[k];
      }
      os << ')';
    }
    if (!detail.empty()) os << ": " << detail;
    return os.str();
  }
};

/// Outcome of an axiom suite. Failure is a value, not an exception.
class Verdict {
 public:
  bool pass() const { return violations_.empty(); }
  explicit operator bool() const { return pass(); }

  void fail(std::string axiom, std::vector<long> where = {},
            std::string detail = {}) {
    violations_.push_back(
        {std::move(axiom), std::move(where), std::move(detail)});
  }

  void absorb(const Verdict& other) {
    violations_.insert(violations_.end(), other.violations_.begin(),
                       other.violations_.end());
  }

  const std::vector<Violation>& violations() const { return violations_; }

  std::string summary() const {
    if (pass()) return "pass";
    std::ostringstream os;
    for (std::size_t k = 0; k < violations_.size(); ++k) {
      if (k) os << "; ";
      os << violations_[k].to_string();
    }
    return os.str();
  }

  /// Throws an axiom-category error unless the verdict passes.
  void require(const std::string& context) const {
    if (!pass())
      throw XmodError(ErrorKind::axiom, context + ": " + summary());
  }

 private:
  std::vector<Violation> violations_;
};

/// A named failed condition with a witness, for operations whose
/// contract is "result or diagnostic".
struct Diagnostic {
  std::string condition;
  std::string witness;

  std::string to_string() const {
    return witness.empty() ? condition : condition + " [" + witness + "]";
  }
};

template <typename T>
class Expected {
 public:
  Expected(T value) : state_(std::move(value)) {}
  Expected(Diagnostic diag) : state_(std::move(diag)) {}

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  const T& operator*() const { return std::get<T>(state_); }
  T& operator*() { return std::get<T>(state_); }
  const T* operator->() const { return &std::get<T>(state_); }
  T* operator->() { return &std::get<T>(state_); }

  const Diagnostic& error() const { return std::get<Diagnostic>(state_); }

  /// Unwraps, converting a diagnostic into a thrown error of the given kind.
  const T& value_or_throw(ErrorKind kind = ErrorKind::axiom) const {
    if (!ok()) throw XmodError(kind, error().to_string());
    return std::get<T>(state_);
  }

 private:
  std::variant<T, Diagnostic> state_;
};

}  // namespace xmodlie
