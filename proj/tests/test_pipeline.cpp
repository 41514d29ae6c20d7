#include <cstdio>

#include "doctest.h"
#include "twistcert/error.hpp"
#include "twistcert/io.hpp"
#include "twistcert/pipeline.hpp"

using namespace twistcert;

TEST_CASE("presets") {
  auto names = preset_names();
  CHECK(names == std::vector<std::string>{"genus10", "genus17"});
  Preset p = load_preset("genus10");
  CHECK(p.r == 8);
  CHECK(p.mu == 16);
  CHECK(p.m1_upper == 20);
  CHECK(p.d == mpq_class(3, 4));
  CHECK(p.max_length == 3);
  CHECK(p.lambda_max == mpq_class(1223, 1000));
  Preset q = load_preset("genus17");
  CHECK(q.r == 7);
  CHECK(q.mu == 21);
  CHECK(q.lambda_max == mpq_class(969, 1000));
  // Sevennec's bound 2g + 3 is at least the bundled bound.
  CHECK(q.m1_upper <= 2 * q.genus + 3);
  CHECK_THROWS_AS(load_preset("genus11"), InputError);
}

TEST_CASE("resolution applies overrides") {
  RunConfig c;
  c.preset = "genus17";
  c.lambda_max = mpq_class(1, 2);
  ResolvedRun r = resolve(c);
  CHECK(r.params.lambda_max == mpq_class(1, 2));
  CHECK(r.params.mu == 21);
  CHECK(r.reference.has_value());
  CHECK(r.group_name == "T17.1");

  RunConfig custom;
  CHECK_THROWS_AS(resolve(custom), InputError);
  custom.relators_path = "/nonexistent/relators";
  CHECK_THROWS_AS(resolve(custom), InputError);
}

TEST_CASE("end-to-end certificate for genus 17") {
  RunConfig c;
  c.preset = "genus17";
  CertificationRun run = run_certification(c);
  const Certificate& cert = run.certificate;
  CHECK(cert.concluded);
  CHECK(cert.m1 == 21);
  CHECK(cert.genus == 17);
  CHECK(recheck_certificate(cert));
  int trivial = trivial_real_row(run.table.table);
  CHECK(cert.checks[static_cast<std::size_t>(trivial)].trivial);
  for (const auto& ch : cert.checks) {
    if (ch.real_degree < 21) CHECK(ch.verdict == Verdict::excluded);
    CHECK_FALSE(ch.label.empty());
  }
  CHECK(cert.input_digests.contains("classes"));

  // Identical configuration gives a byte-identical certificate, with any thread count.
  RunConfig threaded = c;
  threaded.threads = 3;
  CHECK(certificate_json(run_certification(threaded).certificate).dump() == certificate_json(cert).dump());
}

TEST_CASE("an absurd lambda bound is not certified") {
  RunConfig c;
  c.preset = "genus10";
  c.lambda_max = mpq_class(5);
  CertificationRun run = run_certification(c);
  CHECK_FALSE(run.certificate.concluded);
  bool failed = false;
  for (const auto& ch : run.certificate.checks) failed = failed || ch.verdict == Verdict::failed;
  CHECK(failed);
}

TEST_CASE("precomputed inputs are accepted") {
  RunConfig c;
  c.preset = "genus10";
  CertificationRun first = run_certification(c);
  TrianglePresentation t = build_presentation(2, 3, 8);
  write_file("pipeline_classes.tmp.json", classes_json(t, first.classes).dump());
  write_file("pipeline_table.tmp.json", character_table_json(first.table.table).dump());
  c.classes_path = "pipeline_classes.tmp.json";
  c.chartable_path = "pipeline_table.tmp.json";
  CertificationRun second = run_certification(c);
  CHECK(certificate_json(second.certificate).dump() == certificate_json(first.certificate).dump());
  std::remove("pipeline_classes.tmp.json");
  std::remove("pipeline_table.tmp.json");
}

TEST_CASE("custom relators need explicit trace parameters") {
  write_file("pipeline_psl.tmp", "name psl27\nsignature 2 3 7\n(xyxY)^4\n");
  RunConfig c;
  c.relators_path = "pipeline_psl.tmp";
  CHECK_THROWS_AS(resolve(c), InputError);
  c.d = mpq_class(3, 4);
  c.lambda_max = mpq_class(1);
  c.m1_upper = 9;
  ResolvedRun r = resolve(c);
  CHECK(r.params.max_length == 3);
  CHECK_FALSE(r.reference.has_value());
  // PSL(2,7) gives the genus 3 Klein quartic.
  GroupStage g = build_group(r);
  CHECK(g.cover.genus == 3);
  std::remove("pipeline_psl.tmp");
}
