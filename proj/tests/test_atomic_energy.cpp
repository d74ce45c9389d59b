#include "scott/atomic_energy.hpp"
#include "scott/errors.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

using namespace scott;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const TfSolution &tf() {
  static const TfSolution sol = solve_tf(1e-8);
  return sol;
}

std::string read(const std::string &path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("physical constants") {
  CHECK(PhysicalConstants{}.alpha == 7.2973525693e-3);
  CHECK_NOTHROW(PhysicalConstants{}.validate());
  CHECK_THROWS_AS(PhysicalConstants{0.0}.validate(), DomainError);
  CHECK_THROWS_AS(PhysicalConstants{0.01}.validate(), DomainError);
}

TEST_CASE("predict_energy") {
  const double etf = tf().e_tf_1();
  CHECK_THAT(predict_energy(1.0, Coupling(0.0), tf(), 1e-8).value,
             WithinAbs(etf + 0.5, 1e-15));
  CHECK_THAT(predict_energy(7.0, Coupling(0.0), tf(), 1e-8).value,
             WithinRel(etf * std::pow(7.0, 7.0 / 3.0) + 24.5, 1e-15));
  const double e1 = predict_energy(1.0, Coupling(0.001), tf(), 1e-8).value;
  CHECK_THAT(e1, WithinAbs(-0.268745, 1e-6));
  CHECK(e1 < etf + 0.5);
  const double a = PhysicalConstants{}.alpha;
  const double e100 = predict_energy(100.0, Coupling(100 * a), tf(), 1e-8).value;
  CHECK(std::isfinite(e100));
  CHECK(e100 < tf_energy(100.0, tf()).value + 0.5 * 1e4);
  CHECK_THROWS_AS(predict_energy(0.0, Coupling(0.1), tf(), 1e-8), DomainError);
}

TEST_CASE("ingest: basic and comments") {
  const auto r = ingest_energy_table("Z,E_total_Ha\n1,-0.5\n");
  REQUIRE(r.size() == 1);
  CHECK(r[0] == NistRecord{1, -0.5});
  const auto s = ingest_energy_table(
      "# c\n\nZ , E_total_Ha\r\n# mid\n3,-7.5\n 2 , -2.9 \n");
  REQUIRE(s.size() == 2);
  CHECK(s[0].Z == 2);
  CHECK(s[1].Z == 3);
  const auto ref = ingest_energy_table("Z,E_ref_Ha\n5,-24.6\n", "E_ref_Ha");
  CHECK(ref.size() == 1);
}

TEST_CASE("ingest: errors carry line numbers") {
  auto line_of = [](const std::string &text) -> std::size_t {
    try {
      ingest_energy_table(text);
    } catch (const ParseError &e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("Z,E_total_Ha\n2,abc\n") == 2);
  CHECK(line_of("Z,E_total_Ha\n1,-0.5\n1,-0.6\n") == 3);
  CHECK(line_of("# x\nZ,E_total_Ha\n1,0.5\n") == 3);
  CHECK(line_of("Z,E_total_Ha\n1,0\n") == 2);
  CHECK(line_of("Z,E_total_Ha\n1,-0.5,3\n") == 2);
  CHECK(line_of("Z,E_total_Ha\n0,-0.5\n") == 2);
  CHECK(line_of("Z,E_total_Ha\n1.5,-0.5\n") == 2);
  CHECK(line_of("Z,E_total_Ha\n1,nan\n") == 2);
  CHECK(line_of("Z,Energy\n1,-0.5\n") == 1);
  CHECK_THROWS_AS(ingest_energy_table(""), ParseError);
  CHECK_THROWS_WITH(ingest_energy_table("Z,E_total_Ha\n2,abc\n"),
                    ContainsSubstring("line 2"));
}

TEST_CASE("ingest: round trip") {
  const std::vector<NistRecord> recs = {
      {1, -0.5}, {2, -2.903724377034119}, {54, -7232.138363}, {92, -1.0 / 3.0}};
  const std::string text = format_energy_table(recs);
  CHECK(ingest_energy_table(text) == recs);
  CHECK(format_energy_table(ingest_energy_table(text)) == text);
  const auto sample = ingest_energy_table(read(SCOTT_TEST_DATA "/sample_nist.csv"));
  CHECK(sample.size() == 10);
  CHECK(ingest_energy_table(format_energy_table(sample)) == sample);
}

TEST_CASE("comparison table") {
  const std::vector<NistRecord> recs = {{2, -2.90339}, {1, -0.5}, {80, -18000.0},
                                        {140, -5e4}};
  const std::vector<NistRecord> ref = {{2, -2.9037}};
  const auto rows = comparison_table(recs, ref, PhysicalConstants{}, tf(),
                                     std::nullopt);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].Z == 1);
  CHECK(rows[1].Z == 2);
  const double a = PhysicalConstants{}.alpha;
  CHECK_THAT(rows[0].empirical_q, WithinAbs(0.268745, 1e-6));
  CHECK_THAT(rows[0].schwinger_q, WithinAbs(0.499955, 1e-6));
  CHECK(rows[0].gamma == a);
  REQUIRE(rows[0].model_q);
  CHECK_THAT(*rows[0].model_q,
             WithinAbs(0.5 + shift(Coupling(a), 1e-10).value, 1e-8));
  CHECK_FALSE(rows[0].reference_q);
  REQUIRE(rows[1].reference_q);
  CHECK_THAT(*rows[1].reference_q,
             WithinAbs((-2.9037 - tf_energy(2, tf()).value) / 4.0, 1e-14));
  CHECK_FALSE(rows[2].flagged);
  CHECK(rows[3].flagged);
  CHECK_FALSE(rows[3].model_q);
  CHECK(std::isfinite(rows[3].empirical_q));
}

TEST_CASE("model_q decreasing and close to Schwinger at small gamma") {
  std::vector<NistRecord> recs;
  for (int Z = 1; Z <= 130; ++Z) {
    recs.push_back({Z, -0.77 * std::pow(Z, 7.0 / 3.0)});
  }
  const auto rows =
      comparison_table(recs, std::nullopt, PhysicalConstants{}, tf(), 1e-8);
  double prev = 1.0;
  for (const auto &r : rows) {
    if (r.gamma >= 1.0) {
      CHECK(r.flagged);
      continue;
    }
    REQUIRE(r.model_q);
    CHECK(*r.model_q < prev);
    prev = *r.model_q;
    if (r.gamma <= 0.3) {
      CHECK(std::fabs(r.schwinger_q - *r.model_q) <=
            0.3 * std::pow(r.gamma, 4) + 1e-8);
    }
  }
}

TEST_CASE("comparison table is deterministic across threads") {
  std::vector<NistRecord> recs;
  for (int Z = 1; Z <= 136; Z += 3) {
    recs.push_back({Z, -0.7 * std::pow(Z, 7.0 / 3.0)});
  }
  const auto a =
      comparison_table(recs, std::nullopt, PhysicalConstants{}, tf(), std::nullopt, 1);
  const auto b =
      comparison_table(recs, std::nullopt, PhysicalConstants{}, tf(), std::nullopt, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].model_q == b[i].model_q);
    CHECK(a[i].empirical_q == b[i].empirical_q);
  }
}
