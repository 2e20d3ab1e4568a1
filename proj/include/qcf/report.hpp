#pragma once

// JSON channel specifications and analysis reports.

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qcf/gaussian.hpp"

namespace qcf {

using Json = nlohmann::ordered_json;

// Malformed input. `where` names the offending line or field.
class SpecError : public std::runtime_error {
 public:
  SpecError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  [[nodiscard]] const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// A cross-check came out above its tolerance; no report is produced.
class ResidualError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SpecKind { Kraus, Affine, GaussianCanonical };

struct ChannelSpec {
  SpecKind kind = SpecKind::Kraus;
  KrausSet kraus;
  AffineChannelData affine;
  CanonicalParams canonical;
  Json source;
};

ChannelSpec parse_spec(const Json& j);
ChannelSpec parse_spec_text(const std::string& text);

// Realized channel with both descriptions at hand.
struct Channel {
  KrausSet kraus;
  GreenFn green;
  std::optional<CanonicalParams> canonical;
};

// Validates (completeness or CP) and builds both descriptions.
Channel realize(const ChannelSpec& spec);

// Canonical parameters reproducing the kernel, when the affine data has the
// form diag(l1, l2, l1 l2), t = (0, 0, t3) and the rebuilt kernel agrees.
std::optional<CanonicalParams> match_canonical(const AffineChannelData& d, const GreenFn& g, double tol);

Json analyze(const ChannelSpec& spec, double tol);
// `first` acts first.
Json compose(const ChannelSpec& first, const ChannelSpec& second, double tol);
Json complement(const ChannelSpec& spec, double tol);

// One "path: value" line per leaf.
std::string render_text(const Json& report);

}  // namespace qcf
