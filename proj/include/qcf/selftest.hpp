#pragma once

// Convention anchors and the cross-module correspondence matrix.

#include <cstdint>
#include <string>
#include <vector>

namespace qcf {

struct SelfTestCheck {
  std::string name;
  // "anchor" or "correspondence"
  std::string group;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

struct SelfTestReport {
  std::vector<SelfTestCheck> checks;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] std::vector<std::string> failures() const;
};

// Anchors: delta-sifting, char-fn-coefficients, identity-kernel,
// trace-preservation-kernel, displacement-adjoint.
std::vector<SelfTestCheck> run_anchors();

// Nine Grassmann-side computations against their dense-matrix twins, each
// on `samples` random instances.
std::vector<SelfTestCheck> run_correspondence(std::uint64_t seed, int samples);

SelfTestReport run_selftest(std::uint64_t seed = 7, int samples = 25);

}  // namespace qcf
