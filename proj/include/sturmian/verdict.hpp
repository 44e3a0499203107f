#pragma once

// Result of checking a universally quantified statement up to finite bounds.

#include <cstddef>
#include <optional>
#include <string>

namespace sturmian {

enum class VerdictStatus { Holds, Fails };

inline const char* to_string(VerdictStatus s) { return s == VerdictStatus::Holds ? "holds" : "fails"; }

struct Witness {
  /// Shift index (or factor length, for factor-based checks) where the check broke.
  std::size_t shift = 0;
  /// Index of the first differing letter in the failing comparison.
  std::size_t depth = 0;
  std::string expected;
  std::string found;
  std::string note;
};

struct BoundedVerdict {
  std::string check;
  VerdictStatus status = VerdictStatus::Holds;
  std::size_t K = 0;
  std::size_t L = 0;
  std::optional<std::size_t> P;
  std::optional<Witness> witness;
  /// Comparisons that stayed equal through depth L. Not violations.
  std::size_t undecided = 0;
  /// Every comparison required to be strict was decided strictly.
  bool all_decided_strict = true;
  std::string detail;

  bool holds() const { return status == VerdictStatus::Holds; }
  explicit operator bool() const { return holds(); }

  void fail(Witness w) {
    status = VerdictStatus::Fails;
    witness = std::move(w);
    all_decided_strict = false;
  }
};

}  // namespace sturmian
