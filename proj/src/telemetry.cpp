#include "cgs/telemetry.hpp"

namespace cgs {

Telemetry& telemetry() {
  static Telemetry instance;
  return instance;
}

TelemetrySnapshot telemetry_snapshot() {
  const Telemetry& t = telemetry();
  TelemetrySnapshot s;
  s.canonicalize_calls = t.canonicalize_calls.load();
  s.binary_ops = t.binary_ops.load();
  s.union_many_calls = t.union_many_calls.load();
  s.change_ops = t.change_ops.load();
  s.membership_tests = t.membership_tests.load();
  s.transition_lookups = t.transition_lookups.load();
  s.change_checks = t.change_checks.load();
  s.change_violations = t.change_violations.load();
  return s;
}

}  // namespace cgs
