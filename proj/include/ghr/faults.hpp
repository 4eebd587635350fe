#pragma once

namespace ghr {

/// Deliberate defects used by the fault-injection tests. Never enabled in
/// normal operation; scoped to the current thread.
struct FaultPlan {
  bool plus_prime_uses_max = false;    // inf over S replaced by sup
  bool h_scan_skips_z = false;         // h-condition scans only z = 0
  bool flip_left_composition = false;  // L composes as g(f(a)) instead of f(g(a))
};

namespace detail {
inline FaultPlan& active_faults() {
  thread_local FaultPlan plan;
  return plan;
}
}  // namespace detail

/// Installs a fault plan for the lifetime of the guard.
class ScopedFaults {
 public:
  explicit ScopedFaults(FaultPlan plan) : saved_(detail::active_faults()) { detail::active_faults() = plan; }
  ~ScopedFaults() { detail::active_faults() = saved_; }
  ScopedFaults(const ScopedFaults&) = delete;
  ScopedFaults& operator=(const ScopedFaults&) = delete;

 private:
  FaultPlan saved_;
};

}  // namespace ghr
