#pragma once

// Phase-map sweep over canonical (theta, phi, q) channels.

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "qcf/gaussian.hpp"
#include "qcf/random.hpp"

namespace qcf {

// count points from min, step (max - min) / count; max itself is excluded.
struct AxisRange {
  double min = 0.0;
  double max = 0.0;
  int count = 1;

  [[nodiscard]] double at(int i) const { return min + (max - min) * i / count; }
};

struct SweepConfig {
  AxisRange theta;
  AxisRange phi;
  std::vector<double> q{1.0};
  int samples = 200;
  std::uint64_t seed = 0;

  [[nodiscard]] std::size_t size() const {
    return static_cast<std::size_t>(theta.count) * static_cast<std::size_t>(phi.count) * q.size();
  }
};

struct SweepRow {
  double theta = 0.0;
  double phi = 0.0;
  double q = 1.0;
  DegradabilityKind kind = DegradabilityKind::QZero;
  double residual = 0.0;
  double max_coherent_information = 0.0;
};

// Largest coherent information of the channel over `samples` random inputs;
// even draws are pure states, odd draws mixed.
double sampled_max_coherent_information(const KrausSet& k, int samples, std::mt19937_64& rng);

// One grid point; the generator is seeded from (seed, row), so rows do not
// depend on evaluation order.
SweepRow sweep_row(const SweepConfig& cfg, std::size_t row);

// Row order: theta outermost, then phi, then q.
std::vector<SweepRow> sweep_serial(const SweepConfig& cfg);
std::vector<SweepRow> sweep_parallel(const SweepConfig& cfg);

inline constexpr const char* kSweepCsvHeader = "theta,phi,q,verdict,residual,max_coherent_information";
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace qcf
