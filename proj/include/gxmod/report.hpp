#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gxmod {

/// Element of a finite group, an index into its Cayley table.
using Elem = std::uint32_t;

/// Thrown when a table has the wrong shape or an out-of-range entry. Distinct
/// from an axiom failure, which is reported through a ValidationReport.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a construction is invoked on inputs that do not satisfy its
/// precondition. `condition()` names the failed condition.
class PreconditionError : public std::logic_error {
 public:
  PreconditionError(std::string condition, const std::string& what)
      : std::logic_error(what), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

struct Violation {
  std::string law;
  std::vector<Elem> witness;
  std::string detail;
};

/// Collects axiom violations with witnessing tuples. At most `cap` witnesses
/// are stored per law; `total()` still counts every violation seen.
class ValidationReport {
 public:
  static constexpr std::size_t kDefaultCap = 10;

  explicit ValidationReport(std::size_t cap = kDefaultCap) : cap_(cap) {}

  void add(std::string law, std::vector<Elem> witness, std::string detail = {}) {
    ++total_;
    std::size_t same = 0;
    for (const auto& v : violations_) {
      if (v.law == law) ++same;
    }
    if (same < cap_) {
      violations_.push_back({std::move(law), std::move(witness), std::move(detail)});
    }
  }

  /// Appends every violation of `other`, prefixing law names with `prefix.`.
  void merge(const ValidationReport& other, std::string_view prefix = {}) {
    for (const auto& v : other.violations_) {
      std::string law = prefix.empty() ? v.law : std::string(prefix) + "." + v.law;
      violations_.push_back({std::move(law), v.witness, v.detail});
    }
    total_ += other.total_;
  }

  bool ok() const noexcept { return total_ == 0; }
  explicit operator bool() const noexcept { return ok(); }

  std::size_t total() const noexcept { return total_; }
  const std::vector<Violation>& violations() const noexcept { return violations_; }

  bool has(std::string_view law) const {
    return find(law) != nullptr;
  }

  /// First stored violation of `law`, or nullptr.
  const Violation* find(std::string_view law) const {
    for (const auto& v : violations_) {
      if (v.law == law) return &v;
    }
    return nullptr;
  }

 private:
  std::size_t cap_;
  std::size_t total_ = 0;
  std::vector<Violation> violations_;
};

inline std::ostream& operator<<(std::ostream& os, const ValidationReport& r) {
  if (r.ok()) return os << "ok\n";
  for (const auto& v : r.violations()) {
    os << "  " << v.law << " (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      os << (i ? ", " : "") << v.witness[i];
    }
    os << ")";
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
  }
  if (r.total() > r.violations().size()) {
    os << "  ... " << (r.total() - r.violations().size()) << " more\n";
  }
  return os;
}

}  // namespace gxmod
