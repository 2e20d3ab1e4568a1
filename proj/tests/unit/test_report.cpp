#include <gtest/gtest.h>

#include <functional>
#include <numbers>

#include "qcf/report.hpp"

namespace qcf {
namespace {

using std::numbers::pi;

ChannelSpec canonical(double theta, double phi, double q) {
  return parse_spec(Json{{"kind", "gaussian_canonical"}, {"theta", theta}, {"phi", phi}, {"q", q}});
}

ChannelSpec identity_spec() {
  return parse_spec_text(R"({"kind":"kraus","operators":[[[[1,0],[0,0]],[[0,0],[1,0]]]]})");
}

ChannelSpec dephasing_spec() {
  return parse_spec_text(R"({"kind":"tT","t":[0,0,0],"T":[[0,0,0],[0,0,0],[0,0,1]]})");
}

TEST(Report, ParseErrorsNameTheirLocation) {
  try {
    parse_spec_text("{\"kind\": \"kraus\",\n\"operators\": [\n");
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_EQ(e.where(), "line 3");
  }
  try {
    parse_spec_text(R"({"kind":"kraus","operators":[[[[1,0],[0,0]],[[0,0],[1]]]]})");
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_EQ(e.where(), "operators[0][1][1]");
  }
  EXPECT_THROW(parse_spec_text(R"({"kind":"other"})"), SpecError);
  EXPECT_THROW(parse_spec_text(R"({"theta":1})"), SpecError);
  EXPECT_THROW(parse_spec_text(R"({"kind":"gaussian_canonical","theta":1,"phi":0,"q":2})"), SpecError);
  EXPECT_THROW(parse_spec_text(R"({"kind":"tT","t":[0,0],"T":[[1,0,0],[0,1,0],[0,0,1]]})"), SpecError);
}

TEST(Report, ValidationFailuresCarryTheEigenvalue) {
  const auto bad = parse_spec_text(R"({"kind":"tT","t":[0,0,0.1],"T":[[1,0,0],[0,0.5,0],[0,0,0.5]]})");
  try {
    analyze(bad, 1e-10);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_LT(e.min_eigenvalue(), 0.0);
  }
  const auto incomplete = parse_spec_text(R"({"kind":"kraus","operators":[[[[1,0],[0,0]],[[0,0],[0.5,0]]]]})");
  EXPECT_THROW(analyze(incomplete, 1e-10), ValidationError);
}

TEST(Report, IdentityIsGaussianAndClassified) {
  const auto r = analyze(identity_spec(), 1e-10);
  EXPECT_TRUE(r["gaussian"]["detected"].get<bool>());
  EXPECT_DOUBLE_EQ(r["gaussian"]["a"][0].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(r["gaussian"]["b"][0].get<double>(), 0.0);
  EXPECT_DOUBLE_EQ(r["gaussian"]["c"].get<double>(), 0.0);
  EXPECT_EQ(r["degradability"]["kind"], "Degradable");
  EXPECT_EQ(r["cp"]["method"], "cond3");
}

TEST(Report, DephasingIsNotGaussian) {
  const auto r = analyze(dephasing_spec(), 1e-10);
  EXPECT_FALSE(r["gaussian"]["detected"].get<bool>());
  EXPECT_TRUE(r["cp"]["cp"].get<bool>());
  EXPECT_EQ(r["cp"]["method"], "choi");
  EXPECT_FALSE(r.contains("degradability"));
}

TEST(Report, CanonicalAnalysis) {
  const auto r = analyze(canonical(pi / 6, 0.0, 1.0), 1e-10);
  EXPECT_EQ(r["degradability"]["kind"], "Degradable");
  EXPECT_NEAR(r["degradability"]["witness"]["cos2theta_x"].get<double>(), 1.0 / 3.0, 1e-12);
  EXPECT_LT(r["degradability"]["residual"]["value"].get<double>(), 1e-10);
}

TEST(Report, EveryResidualCarriesItsTolerance) {
  const auto r = analyze(canonical(0.4, 0.9, 0.8), 1e-10);
  std::function<void(const Json&)> walk = [&](const Json& j) {
    if (!j.is_object()) return;
    if (j.contains("value")) EXPECT_TRUE(j.contains("tolerance")) << j.dump();
    for (const auto& [k, v] : j.items()) walk(v);
  };
  walk(r);
  EXPECT_TRUE(r["gaussian"].contains("tolerance"));
  EXPECT_TRUE(r["cp"].contains("tolerance"));
}

TEST(Report, Composition) {
  const auto x = canonical(0.3, 1.1, 0.9);
  const auto with_identity = compose(identity_spec(), x, 1e-10);
  const auto alone = analyze(x, 1e-10);
  EXPECT_EQ(with_identity["affine"], alone["affine"]);
  EXPECT_EQ(with_identity["kernel"], alone["kernel"]);

  const auto gg = compose(canonical(0.3, 1.1, 0.9), canonical(0.7, 0.2, 1.0), 1e-10);
  ASSERT_TRUE(gg.contains("gaussian_composition"));
  EXPECT_TRUE(gg["gaussian"]["detected"].get<bool>());

  const auto gn = compose(canonical(0.3, 1.1, 0.9), dephasing_spec(), 1e-10);
  EXPECT_FALSE(gn["gaussian"]["detected"].get<bool>());
  EXPECT_FALSE(gn.contains("gaussian_composition"));
}

TEST(Report, Complement) {
  const auto c = complement(canonical(pi / 6, 0.0, 1.0), 1e-10);
  EXPECT_NEAR(c["canonical"]["theta"].get<double>(), -pi / 6, 1e-15);
  EXPECT_NEAR(c["canonical"]["phi"].get<double>(), -pi / 2, 1e-15);
  EXPECT_EQ(c["degradability"]["kind"], "AntiDegradable");
  EXPECT_EQ(complement(canonical(pi / 4, pi / 4, 1.0), 1e-10)["degradability"]["kind"], "Both");
  const auto mixed = complement(canonical(pi / 6, pi / 8, 0.5), 1e-10);
  EXPECT_FALSE(mixed["gaussian"]["detected"].get<bool>());
  EXPECT_FALSE(mixed.contains("degradability"));
  // Kraus input goes through the oracle complementary.
  EXPECT_NO_THROW(complement(identity_spec(), 1e-10));
}

TEST(Report, DeterministicOutput) {
  const auto a = analyze(canonical(0.3, 2.0, 0.6), 1e-10).dump();
  const auto b = analyze(canonical(0.3, 2.0, 0.6), 1e-10).dump();
  EXPECT_EQ(a, b);
}

TEST(Report, ResidualGateIsHard) {
  EXPECT_THROW(analyze(canonical(0.3, 1.1, 0.9), 1e-30), ResidualError);
}

TEST(Report, TextRendering) {
  const auto text = render_text(analyze(identity_spec(), 1e-10));
  EXPECT_NE(text.find("gaussian.detected: true"), std::string::npos);
  EXPECT_NE(text.find("degradability.kind: Degradable"), std::string::npos);
}

}  // namespace
}  // namespace qcf
