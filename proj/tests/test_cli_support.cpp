#include <gtest/gtest.h>

#include <stdexcept>

#include "brittle/parallel.hpp"
#include "brittle/report.hpp"

using namespace brittle;

TEST(Report, ParameterJsonLayout) {
  Graph g = named::complete(4);
  ParameterReport r = edit_distance(classes::forests(), g);
  Json j = to_json(r, classes::forests(), g, false);
  EXPECT_EQ(j["parameter"], "e");
  EXPECT_EQ(j["class"], "forests");
  EXPECT_EQ(j["graph6"], "C~");
  EXPECT_EQ(j["value"], 3);
  EXPECT_EQ(j["certificate"]["kind"], "deleted-edges");
  EXPECT_EQ(j["certificate"]["edges"], Json::parse("[[0,1],[0,2],[1,2]]"));
  EXPECT_TRUE(j["elapsed_ms"].is_null());
  EXPECT_TRUE(to_json(r, classes::forests(), g, true)["elapsed_ms"].is_number());
  // Key order is fixed, so dumps are byte-stable.
  EXPECT_EQ(j.dump().rfind("{\"parameter\":\"e\",\"class\":\"forests\",\"graph6\":\"C~\",\"value\":3", 0), 0u);
}

TEST(Report, CertificateKinds) {
  Graph g = named::theta_fig3();
  auto c = classes::forests();
  EXPECT_EQ(to_json(edge_brittleness(c, g).certificate)["kind"], "vertex-partition");
  Json kappa = to_json(vertex_brittleness(c, g).certificate);
  EXPECT_EQ(kappa["kind"], "edge-partition");
  EXPECT_EQ(kappa["boundary"].size(), 2u);
  EXPECT_EQ(to_json(capacity(c, g).certificate)["kind"], "packing");
  EXPECT_EQ(certificate_summary(EditCertificate{{{0, 1}, {2, 3}}}), "delete {0-1 2-3}");
  EXPECT_EQ(certificate_summary(BoundaryCertificate{VertexSet::range(2), {{}, {}, {}}}), "Y={0,1} parts=3");
}

TEST(Report, TrapAndVerifyJson) {
  TrapRecord rec = canonical_record(named::complete(3), VertexSet::singleton(1), "K3", TrapStatus::trap);
  Json j = to_json(rec);
  EXPECT_EQ(j["j_graph6"], "Bw");
  EXPECT_EQ(j["s_vertices"].size(), 1u);
  EXPECT_EQ(j["status"], "trap");

  CheckResult ok("ok");
  ok.expect(true, "");
  CheckResult bad("bad");
  bad.expect(false, "broken");
  Json summary = verify_summary({ok, bad}, false);
  EXPECT_EQ(summary["passed"], false);
  EXPECT_EQ(summary["checks"][1]["failures"][0], "broken");
  std::string table = verify_table({ok, bad}, false);
  EXPECT_NE(table.find("FAILED: broken"), std::string::npos);
  EXPECT_NE(table.find("some checks FAILED"), std::string::npos);
  EXPECT_NE(verify_table({ok}, false).find("all checks passed"), std::string::npos);
}

TEST(Parallel, KeepsOrderAndPropagatesErrors) {
  for (int jobs : {1, 2, 8}) {
    auto out = parallel_map<int>(100, jobs, [](std::size_t i) { return static_cast<int>(i * i); });
    ASSERT_EQ(out.size(), 100u);
    for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], static_cast<int>(i * i));
  }
  EXPECT_TRUE(parallel_map<int>(0, 4, [](std::size_t) { return 1; }).empty());
  EXPECT_THROW(parallel_map<int>(10, 3,
                                 [](std::size_t i) -> int {
                                   if (i == 7) throw std::runtime_error("boom");
                                   return 0;
                                 }),
               std::runtime_error);
}
