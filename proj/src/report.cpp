#include "qcf/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace qcf {

namespace {

std::string field(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SpecError(key, "missing field");
  return j.at(key);
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw SpecError(where, "expected a number");
  return j.get<double>();
}

Complex complex_number(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw SpecError(where, "expected a complex number as [re, im]");
  return {number(j[0], field(where, 0)), number(j[1], field(where, 1))};
}

const Json& array_of(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || (n != 0 && j.size() != n)) {
    throw SpecError(where, n ? "expected an array of length " + std::to_string(n) : "expected an array");
  }
  return j;
}

Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json checked(double value, double tol) {
  if (!(value <= tol)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "residual %.3e exceeds tolerance %.3e", value, tol);
    throw ResidualError(buf);
  }
  return Json{{"value", value}, {"tolerance", tol}};
}

Json affine_json(const AffineChannelData& d) {
  Json t = Json::array();
  Json T = Json::array();
  for (int i = 0; i < 3; ++i) {
    t.push_back(d.t(i));
    Json row = Json::array();
    for (int j = 0; j < 3; ++j) row.push_back(d.T(i, j));
    T.push_back(row);
  }
  return Json{{"t", t}, {"T", T}};
}

Json canonical_json(const CanonicalParams& p) { return Json{{"theta", p.theta}, {"phi", p.phi}, {"q", p.q}}; }

Json gaussian_json(const GreenFn& g, double tol) {
  const auto p = detect_gaussian(g, tol);
  Json j{{"detected", p.has_value()}, {"tolerance", tol}};
  if (p) {
    j["a"] = complex_json(p->a);
    j["b"] = complex_json(p->b);
    j["c"] = p->c;
  }
  return j;
}

Json witness_json(const Witness& w) {
  return Json{{"theta_x", w.theta_x},
              {"phi_x", w.phi_x},
              {"cos2theta_x", std::cos(2 * w.theta_x)},
              {"cos2phi_x", std::cos(2 * w.phi_x)},
              {"q", w.q},
              {"family", w.family == IntermediateFamily::PureCanonical ? "pure_canonical" : "weak_complementary"},
              {"found_by_search", w.searched}};
}

Json cp_json(const Channel& c) {
  const auto oracle = cp_check(choi(c.kraus), kPsdTolerance);
  Json j;
  if (c.canonical) {
    const auto l = params_to_lambdas(*c.canonical);
    const double bound = std::sqrt(std::max(0.0, (1 - l.l1 * l.l1) * (1 - l.l2 * l.l2)));
    const bool verdict = gaussian_cp_check(l.l1, l.l2, l.t3);
    j = Json{{"method", "cond3"},  {"lambda1", l.l1},     {"lambda2", l.l2},
             {"t3", l.t3},         {"bound", bound},      {"cp", verdict},
             {"tolerance", kCpBoundTolerance}};
    if (verdict != oracle.psd) throw ResidualError("closed-form CP verdict disagrees with the Choi test");
  } else {
    j = Json{{"method", "choi"}, {"cp", oracle.psd}};
  }
  j["min_choi_eigenvalue"] = oracle.min_eigenvalue;
  j["choi_tolerance"] = kPsdTolerance;
  return j;
}

// Maximum coefficient distance of apply_green from the oracle path on a
// fixed operator basis.
double path_residual(const Channel& c) {
  const Complex I(0.0, 1.0);
  QubitOperator basis[4];
  basis[0] << 1, 0, 0, 0;
  basis[1] << 0, 0, 0, 1;
  basis[2] << 0.5, 0.5, 0.5, 0.5;
  basis[3] << 0.5, -0.5 * I, 0.5 * I, 0.5;
  double worst = 0.0;
  for (const auto& rho : basis) {
    worst = std::max(worst, apply_green(c.green, char_of(rho)).max_abs_diff(char_of(apply_channel(c.kraus, rho))));
  }
  return worst;
}

Json degradability_json(const CanonicalParams& p, const Channel& c) {
  const auto v = degradability_classify(p);
  Json j{{"kind", std::string(to_string(v.kind))}, {"residual", checked(v.residual, kDegradationTolerance)}};
  if (!is_pure_environment(p.q) && v.kind == DegradabilityKind::QZero) {
    j["note"] = "mixture of anti-degradable branches; no witness";
  }
  const auto env = dilation_weak_complementary(p);
  if (v.witness) {
    j["witness"] = witness_json(*v.witness);
    const auto kx = witness_kraus(*v.witness);
    j["witness"]["choi_min_eigenvalue"] = cp_check(choi(kx)).min_eigenvalue;
    j["witness"]["oracle_residual"] = checked(verify_degradation(c.kraus, env, kx), kDegradationTolerance);
  }
  if (v.anti_witness) {
    j["anti_witness"] = witness_json(*v.anti_witness);
    const auto kx = witness_kraus(*v.anti_witness);
    j["anti_witness"]["choi_min_eigenvalue"] = cp_check(choi(kx)).min_eigenvalue;
    j["anti_witness"]["oracle_residual"] = checked(verify_degradation(env, c.kraus, kx), kDegradationTolerance);
  }
  return j;
}

Json channel_report(const Channel& c, double tol) {
  const auto d = tT_from_kraus(c.kraus);
  Json j;
  j["affine"] = affine_json(d);
  j["gaussian"] = gaussian_json(c.green, tol);
  j["cp"] = cp_json(c);
  if (c.canonical) {
    j["canonical"] = canonical_json(*c.canonical);
    j["degradability"] = degradability_json(*c.canonical, c);
  }
  Json cross;
  cross["kernel_vs_kraus"] = checked(c.green.max_abs_diff(green_from_kraus(c.kraus)), tol);
  cross["trace_preservation"] = checked(c.green.trace_preservation_defect(), tol);
  cross["green_vs_oracle_path"] = checked(path_residual(c), tol);
  if (c.canonical) {
    cross["canonical_kernel"] = checked(c.green.max_abs_diff(canonical_to_green(*c.canonical)), tol);
  }
  j["cross_checks"] = cross;
  j["kernel"] = c.green.kernel.to_string();
  return j;
}

bool diagonal(const Matrix3& T, double tol) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j && std::abs(T(i, j)) > tol) return false;
    }
  }
  return true;
}

}  // namespace

ChannelSpec parse_spec(const Json& j) {
  if (!j.is_object()) throw SpecError("(root)", "expected a JSON object");
  const auto& kind = require(j, "kind");
  if (!kind.is_string()) throw SpecError("kind", "expected a string");
  ChannelSpec s;
  s.source = j;
  const auto k = kind.get<std::string>();
  if (k == "kraus") {
    s.kind = SpecKind::Kraus;
    const auto& ops = array_of(require(j, "operators"), 0, "operators");
    if (ops.empty()) throw SpecError("operators", "need at least one operator");
    for (std::size_t n = 0; n < ops.size(); ++n) {
      const auto where = field("operators", n);
      const auto& m = array_of(ops[n], 2, where);
      QubitOperator op;
      for (std::size_t r = 0; r < 2; ++r) {
        const auto& row = array_of(m[r], 2, field(where, r));
        for (std::size_t c = 0; c < 2; ++c) {
          op(static_cast<int>(r), static_cast<int>(c)) = complex_number(row[c], field(field(where, r), c));
        }
      }
      s.kraus.operators.push_back(op);
    }
  } else if (k == "tT") {
    s.kind = SpecKind::Affine;
    const auto& t = array_of(require(j, "t"), 3, "t");
    const auto& T = array_of(require(j, "T"), 3, "T");
    for (std::size_t i = 0; i < 3; ++i) {
      s.affine.t(static_cast<int>(i)) = number(t[i], field("t", i));
      const auto& row = array_of(T[i], 3, field("T", i));
      for (std::size_t c = 0; c < 3; ++c) {
        s.affine.T(static_cast<int>(i), static_cast<int>(c)) = number(row[c], field(field("T", i), c));
      }
    }
  } else if (k == "gaussian_canonical") {
    s.kind = SpecKind::GaussianCanonical;
    s.canonical.theta = number(require(j, "theta"), "theta");
    s.canonical.phi = number(require(j, "phi"), "phi");
    s.canonical.q = j.contains("q") ? number(j.at("q"), "q") : 1.0;
    if (s.canonical.q < 0.0 || s.canonical.q > 1.0) throw SpecError("q", "must lie in [0, 1]");
  } else {
    throw SpecError("kind", "unknown kind '" + k + "' (expected kraus, tT or gaussian_canonical)");
  }
  return s;
}

ChannelSpec parse_spec_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw SpecError("line " + std::to_string(line), "malformed JSON");
  }
  return parse_spec(j);
}

std::optional<CanonicalParams> match_canonical(const AffineChannelData& d, const GreenFn& g, double tol) {
  const double l1 = d.T(0, 0);
  const double l2 = d.T(1, 1);
  if (!diagonal(d.T, tol) || std::abs(d.t(0)) > tol || std::abs(d.t(1)) > tol) return std::nullopt;
  if (std::abs(d.T(2, 2) - l1 * l2) > tol || std::abs(l1) > 1 + tol || std::abs(l2) > 1 + tol) return std::nullopt;
  double alpha = std::acos(std::clamp(l1, -1.0, 1.0));
  const double beta = std::acos(std::clamp(l2, -1.0, 1.0));
  const double s = std::sin(alpha) * std::sin(beta);
  double q = 1.0;
  if (s > tol) {
    q = 0.5 * (1 - d.t(2) / s);
    if (q < 0.5) {
      alpha = -alpha;
      q = 1 - q;
    }
    if (q > 1 + tol) return std::nullopt;
    q = std::min(q, 1.0);
  } else if (std::abs(d.t(2)) > tol) {
    return std::nullopt;
  }
  const CanonicalParams p{(alpha + beta) / 2, (beta - alpha) / 2, q};
  if (canonical_to_green(p).max_abs_diff(g) > tol) return std::nullopt;
  return p;
}

Channel realize(const ChannelSpec& spec) {
  Channel c;
  switch (spec.kind) {
    case SpecKind::Kraus:
      spec.kraus.validate();
      c.kraus = spec.kraus;
      c.green = green_from_kraus(c.kraus);
      c.canonical = match_canonical(tT_from_kraus(c.kraus), c.green, kCoefficientTolerance * 100);
      break;
    case SpecKind::Affine:
      c.kraus = kraus_from_tT(spec.affine);
      c.green = diagonal(spec.affine.T, kCoefficientTolerance) ? green_from_tT(spec.affine) : green_from_kraus(c.kraus);
      c.canonical = match_canonical(spec.affine, c.green, kCoefficientTolerance * 100);
      break;
    case SpecKind::GaussianCanonical:
      c.kraus = dilation_kraus(spec.canonical);
      c.green = canonical_to_green(spec.canonical);
      c.canonical = spec.canonical;
      break;
  }
  return c;
}

Json analyze(const ChannelSpec& spec, double tol) {
  const auto c = realize(spec);
  Json j{{"operation", "analyze"}, {"input", spec.source}};
  j.update(channel_report(c, tol));
  return j;
}

Json compose(const ChannelSpec& first, const ChannelSpec& second, double tol) {
  const auto a = realize(first);
  const auto b = realize(second);
  Channel out;
  out.kraus = compose_kraus(b.kraus, a.kraus);
  out.green = compose_green(a.green, b.green);
  out.canonical = match_canonical(tT_from_kraus(out.kraus), out.green, kCoefficientTolerance * 100);
  Json j{{"operation", "compose"}, {"inputs", Json::array({first.source, second.source})}};
  j.update(channel_report(out, tol));
  const auto ga = detect_gaussian(a.green, tol);
  const auto gb = detect_gaussian(b.green, tol);
  const auto gout = detect_gaussian(out.green, tol);
  if (ga && gb && gout) {
    const auto law = compose_gaussian(*ga, *gb);
    j["gaussian_composition"] = Json{{"a", complex_json(law.a)},
                                     {"b", complex_json(law.b)},
                                     {"c", law.c},
                                     {"residual", checked(max_abs_diff(law, *gout), tol)}};
  }
  return j;
}

Json complement(const ChannelSpec& spec, double tol) {
  const auto c = realize(spec);
  Channel out;
  Json j{{"operation", "complement"}, {"input", spec.source}};
  if (spec.kind == SpecKind::GaussianCanonical) {
    const auto& p = spec.canonical;
    out.kraus = dilation_weak_complementary(p);
    out.green = complementary_green(p);
    if (is_pure_environment(p.q)) {
      out.canonical = complement_angles(p);
      j["substitution_identity"] = checked(out.green.max_abs_diff(canonical_to_green(*out.canonical)), tol);
    } else {
      out.canonical = match_canonical(tT_from_kraus(out.kraus), out.green, kCoefficientTolerance * 100);
    }
    if (!out.canonical) j["note"] = "weak complementary of a mixed-environment dilation is outside the canonical family";
  } else {
    out.kraus = complementary_of_kraus(c.kraus);
    out.green = green_from_kraus(out.kraus);
    out.canonical = match_canonical(tT_from_kraus(out.kraus), out.green, kCoefficientTolerance * 100);
  }
  j.update(channel_report(out, tol));
  return j;
}

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_structured())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], field(path, i), os);
  } else if (j.is_string()) {
    os << path << ": " << j.get<std::string>() << '\n';
  } else {
    os << path << ": " << j.dump() << '\n';
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  flatten(report, "", os);
  return os.str();
}


}  // namespace qcf
