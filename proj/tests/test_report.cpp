#include <gtest/gtest.h>

#include "commlie/counts_gl.hpp"
#include "commlie/error.hpp"
#include "commlie/report.hpp"

using namespace commlie;

namespace {

std::vector<CountReport> sample() {
  auto s = QContext::symbolic();
  auto n2 = QContext::numeric(2);
  return {make_report(Family::gl, Kind::pairs, 2, Backend::gen_fn, commuting_pairs_gl(2, n2)),
          make_report(Family::gl, Kind::pairs, 2, Backend::gen_fn, commuting_pairs_gl(2, s)),
          make_report(Family::u, Kind::nilpotent_pairs, 3, Backend::oracle, n2.integer(352)),
          make_report(Family::sp, Kind::group_order, 1, Backend::class_sum, QContext::numeric(3).integer(24))};
}

}  // namespace

TEST(Report, EnumNames) {
  for (Family f : {Family::gl, Family::u, Family::sp}) EXPECT_EQ(parse_family(to_string(f)), f);
  for (Kind k : {Kind::pairs, Kind::nilpotent_pairs, Kind::class_size, Kind::orbit_size, Kind::group_order}) {
    EXPECT_EQ(parse_kind(to_string(k)), k);
  }
  for (Backend b : {Backend::class_sum, Backend::gen_fn, Backend::oracle}) EXPECT_EQ(parse_backend(to_string(b)), b);
  EXPECT_EQ(parse_kind("nilpairs"), Kind::nilpotent_pairs);
  EXPECT_THROW(parse_family("so"), UsageError);
}

TEST(Report, MakeReport) {
  auto r = sample();
  EXPECT_EQ(r[0].value, "88");
  EXPECT_EQ(r[0].q, "2");
  EXPECT_EQ(r[1].value, "q^6 + q^5 - q^3");
  EXPECT_EQ(r[1].q, "symbolic");
  auto half = QContext::numeric(2).rational(mpq_class(1, 2));
  EXPECT_THROW(make_report(Family::gl, Kind::pairs, 1, Backend::gen_fn, half), IntegralityError);
}

TEST(Report, JsonRoundTrip) {
  auto r = sample();
  std::string text = reports_to_json(r, R"({"command":"count"})");
  EXPECT_EQ(reports_from_json(text), r);
  EXPECT_EQ(text.rfind("{\n  \"meta\"", 0), 0u);
  EXPECT_NE(text.find("\"value\": \"88\""), std::string::npos);
  EXPECT_EQ(reports_to_json(r, R"({"command":"count"})"), text);
  EXPECT_THROW(reports_from_json("{not json"), UsageError);
}

TEST(Report, CsvRoundTrip) {
  auto r = sample();
  std::string text = reports_to_csv(r);
  EXPECT_EQ(text.substr(0, text.find('\n')), "family,kind,n,q,backend,value");
  EXPECT_NE(text.find("gl,pairs,2,2,gen_fn,88\n"), std::string::npos);
  EXPECT_EQ(reports_from_csv(text), r);
  EXPECT_THROW(reports_from_csv("bad header\n"), UsageError);
}
