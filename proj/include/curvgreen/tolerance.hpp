#pragma once

namespace cg {

// Relative accuracy the precision fallback aims for. Thread-local, so
// concurrent callers with different targets do not interfere.
double current_target();

class TargetScope {
 public:
  explicit TargetScope(double target);
  ~TargetScope();
  TargetScope(const TargetScope&) = delete;
  TargetScope& operator=(const TargetScope&) = delete;

 private:
  double saved_;
};

}  // namespace cg
