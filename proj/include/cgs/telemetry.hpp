#pragma once

#include <atomic>
#include <cstdint>

namespace cgs {

// Global operation counters. Tests use these to pin down cost contracts
// (membership does exactly L lookups, queries never build new sets) and to
// verify that the instrumented change-operation checks never fired.
struct Telemetry {
  std::atomic<std::uint64_t> canonicalize_calls{0};
  std::atomic<std::uint64_t> binary_ops{0};
  std::atomic<std::uint64_t> union_many_calls{0};
  std::atomic<std::uint64_t> change_ops{0};
  std::atomic<std::uint64_t> membership_tests{0};
  std::atomic<std::uint64_t> transition_lookups{0};
  std::atomic<std::uint64_t> sets_serialized{0};
  std::atomic<std::uint64_t> sets_deserialized{0};
  // change-operation instrumentation: raw rewrites must preserve the state
  // count, canonicalization may only shrink it, and the accepted count must
  // be unchanged. Violations indicate an implementation bug.
  std::atomic<std::uint64_t> change_checks{0};
  std::atomic<std::uint64_t> change_violations{0};

  void reset() {
    canonicalize_calls = 0;
    binary_ops = 0;
    union_many_calls = 0;
    change_ops = 0;
    membership_tests = 0;
    transition_lookups = 0;
    sets_serialized = 0;
    sets_deserialized = 0;
    change_checks = 0;
    change_violations = 0;
  }
};

Telemetry& telemetry();

// Plain-value copy of the counters, convenient for before/after deltas.
struct TelemetrySnapshot {
  std::uint64_t canonicalize_calls = 0;
  std::uint64_t binary_ops = 0;
  std::uint64_t union_many_calls = 0;
  std::uint64_t change_ops = 0;
  std::uint64_t membership_tests = 0;
  std::uint64_t transition_lookups = 0;
  std::uint64_t change_checks = 0;
  std::uint64_t change_violations = 0;
};

TelemetrySnapshot telemetry_snapshot();

}  // namespace cgs
