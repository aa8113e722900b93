#include <gtest/gtest.h>

#include <map>
#include <set>

#include "lrinv/app/verify.hpp"

using namespace lrinv;
using namespace lrinv::app;

namespace {

std::set<int> criteria_of(const VerifyReport& r) {
  std::set<int> out;
  for (const auto& c : r.checks) out.insert(c.criterion);
  return out;
}

std::string failures_text(const VerifyReport& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.pass) s += c.name + " measured " + std::to_string(c.measured) + " " + c.note + "\n";
  return s;
}

SystemConfig electron_si() {
  return build_config(nlohmann::json{{"units", "si"}, {"m", "m_e"}, {"q", "-e"}, {"E", 1e3}, {"L", 1e-6}});
}

}  // namespace

TEST(Verify, EveryCriterionPassesInNaturalUnits) {
  const auto r = run_verify(natural_config());
  EXPECT_TRUE(r.all_pass()) << failures_text(r);
  EXPECT_EQ(criteria_of(r), (std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
}

TEST(Verify, EveryCriterionPassesForAnElectronInSiUnits) {
  const auto r = run_verify(electron_si());
  EXPECT_TRUE(r.all_pass()) << failures_text(r);
}

TEST(Verify, PassesWithAWeakerFieldAndMagneticField) {
  auto cfg = natural_config(Geometry::parallel_eb, 1.0);
  cfg.fields.electric = 0.5;
  const auto r = run_verify(cfg);
  EXPECT_TRUE(r.all_pass()) << failures_text(r);
}

TEST(Verify, FilterByGroupOrCriterion) {
  const auto cfg = natural_config();
  EXPECT_EQ(criteria_of(run_verify(cfg, {"symbolic"})), (std::set<int>{1, 2}));
  EXPECT_EQ(criteria_of(run_verify(cfg, {"2"})), (std::set<int>{2}));
  EXPECT_EQ(criteria_of(run_verify(cfg, {"8", "newton"})), (std::set<int>{8, 9}));
  for (const auto& c : run_verify(cfg, {"quantization"}).checks) EXPECT_EQ(c.group, "quantization");
}

TEST(Verify, KnownFilters) {
  for (const char* f : {"symbolic", "residual", "ladder", "resummation", "landau", "symmetry", "quantization", "newton",
                        "propagator", "1", "10"})
    EXPECT_TRUE(known_filter(f)) << f;
  for (const char* f : {"", "0", "11", "Symbolic", "all"}) EXPECT_FALSE(known_filter(f)) << f;
}

TEST(Verify, TamperedHamiltonianIsCaught) {
  auto cfg = natural_config();
  cfg.hamiltonian_1d_override = "px^2/(2*m) + q*E*x";
  const auto r = run_verify(cfg, {"symbolic"});
  EXPECT_FALSE(r.all_pass());
  std::size_t failed = 0;
  for (const auto& c : r.checks)
    if (!c.pass) {
      ++failed;
      EXPECT_EQ(c.criterion, 1);
      EXPECT_NE(c.name.find("H_1d"), std::string::npos) << c.name;
    }
  EXPECT_GE(failed, 1u);
}

TEST(Verify, ChecksAreNamedAndAnchored) {
  const auto r = run_verify(natural_config(), {"symbolic", "quantization", "newton"});
  std::map<std::string, int> seen;
  for (const auto& c : r.checks) {
    EXPECT_FALSE(c.name.empty());
    EXPECT_FALSE(c.anchor.empty()) << c.name;
    EXPECT_EQ(++seen[c.name], 1) << "duplicate " << c.name;
  }
}

TEST(Verify, ThrowingCheckIsRecordedAsFailure) {
  VerifyReport r;
  const std::set<std::string> none;
  app::detail::Suite s(none, r);
  s.add(3, "residual", "boom", "x", Relation::below, 1.0, []() -> double { throw DomainError("no grid"); });
  s.add(3, "residual", "nan", "x", Relation::below, 1.0, [] { return std::nan(""); });
  s.add(3, "residual", "edge", "x", Relation::at_most, 1.0, [] { return 1.0; });
  ASSERT_EQ(r.checks.size(), 3u);
  EXPECT_FALSE(r.checks[0].pass);
  EXPECT_EQ(r.checks[0].note, "no grid");
  EXPECT_FALSE(r.checks[1].pass);
  EXPECT_TRUE(r.checks[2].pass);
  EXPECT_EQ(r.failures(), 2u);
}

TEST(Scales, NaturalConfigHasUnitScales) {
  const auto s = scales_of(natural_config());
  EXPECT_DOUBLE_EQ(s.length, 1.0);
  EXPECT_DOUBLE_EQ(s.time, 1.0);
  EXPECT_DOUBLE_EQ(s.energy, 1.0);
  EXPECT_NEAR(s.magnetic_length, 1.0, 1e-15);
  EXPECT_NEAR(s.period, 2 * std::numbers::pi, 1e-14);
}
