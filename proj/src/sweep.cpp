#include "qcf/sweep.hpp"

#include <cstdio>
#include <exception>
#include <ostream>

namespace qcf {

double sampled_max_coherent_information(const KrausSet& k, int samples, std::mt19937_64& rng) {
  double best = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) best = std::max(best, coherent_information(k, random_state(rng, s % 2 == 1)));
  return best;
}

SweepRow sweep_row(const SweepConfig& cfg, std::size_t row) {
  const std::size_t nq = cfg.q.size();
  const auto nphi = static_cast<std::size_t>(cfg.phi.count);
  const CanonicalParams p{cfg.theta.at(static_cast<int>(row / (nphi * nq))),
                          cfg.phi.at(static_cast<int>((row / nq) % nphi)), cfg.q[row % nq]};
  const auto verdict = degradability_classify(p);
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(row >> 32)};
  std::mt19937_64 rng(seq);
  return {p.theta, p.phi, p.q, verdict.kind, verdict.residual,
          sampled_max_coherent_information(dilation_kraus(p), cfg.samples, rng)};
}

std::vector<SweepRow> sweep_serial(const SweepConfig& cfg) {
  std::vector<SweepRow> rows(cfg.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = sweep_row(cfg, i);
  return rows;
}

std::vector<SweepRow> sweep_parallel(const SweepConfig& cfg) {
  const auto n = static_cast<std::ptrdiff_t>(cfg.size());
  std::vector<SweepRow> rows(cfg.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = sweep_row(cfg, static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(qcf_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kSweepCsvHeader << '\n';
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%s,%.17g,%.17g\n", r.theta, r.phi, r.q,
                  std::string(to_string(r.kind)).c_str(), r.residual, r.max_coherent_information);
    os << buf;
  }
}

}  // namespace qcf
