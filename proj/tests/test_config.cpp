#include <filesystem>

#include "coanet/config.hpp"
#include "coanet/util.hpp"
#include "doctest.h"

using namespace coanet;
using config::PipelineConfig;

TEST_CASE("serialize and parse round trip") {
  PipelineConfig c;
  c.metadata_path = "meta.jsonl";
  c.topics_path = "topics.csv";
  c.out_dir = "out";
  c.from_date = Date{2020, 2, 1};
  c.to_date = Date{2021, 12, 31};
  c.seed = 99;
  c.threads = 2;
  c.disambig.similarity_threshold = 0.9;
  c.disambig.max_cluster = 80;
  c.metrics.robust_trials = 40;
  c.analysis.cutoff = 0.25;
  c.analysis.sensitivity_cutoffs = {0.1, 0.25};

  auto text = config::serialize(c);
  auto back = config::parse(text);
  CHECK(back.metadata_path == c.metadata_path);
  CHECK(back.topics_path == c.topics_path);
  CHECK(back.out_dir == c.out_dir);
  CHECK(back.from_date == c.from_date);
  CHECK(back.to_date == c.to_date);
  CHECK(back.seed == 99);
  CHECK(back.threads == 2);
  CHECK(back.disambig.similarity_threshold == doctest::Approx(0.9));
  CHECK(back.disambig.max_cluster == 80);
  CHECK(back.metrics.robust_trials == 40);
  CHECK(back.analysis.cutoff == doctest::Approx(0.25));
  CHECK(back.analysis.sensitivity_cutoffs == std::vector<double>{0.1, 0.25});
  // canonical form is a fixed point
  CHECK(config::serialize(back) == text);
}

TEST_CASE("parse accepts comments and blank lines") {
  auto c = config::parse(
      "# pipeline settings\n"
      "[input]\n"
      "metadata = m.jsonl\n"
      "topics = t.csv\n"
      "\n"
      "[run]\n"
      "seed = 7\n");
  CHECK(c.metadata_path == "m.jsonl");
  CHECK(c.seed == 7);
  // untouched options keep their defaults
  CHECK(c.disambig.similarity_threshold == doctest::Approx(0.95));
  CHECK(c.analysis.bootstrap_iterations == 10000);
}

TEST_CASE("unknown sections and keys carry the line number") {
  CHECK_THROWS_WITH_AS(config::parse("[nope]\nx = 1\n"), doctest::Contains("line 2"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(config::parse("[input]\nbogus = 1\n"), doctest::Contains("line 2"),
                       ValidationError);
  CHECK_THROWS_AS(config::parse("[input]\nmetadata\n"), ValidationError);
  CHECK_THROWS_AS(config::parse("metadata = x\n"), ValidationError);  // before any section
}

TEST_CASE("duplicate keys are rejected") {
  CHECK_THROWS_WITH_AS(config::parse("[run]\nseed = 1\nseed = 2\n"),
                       doctest::Contains("duplicate"), ValidationError);
}

TEST_CASE("malformed values are rejected") {
  CHECK_THROWS_AS(config::parse("[run]\nseed = banana\n"), ValidationError);
  CHECK_THROWS_AS(config::parse("[input]\nfrom = 2020-13-01\n"), ValidationError);
  CHECK_THROWS_AS(config::parse("[analysis]\ncutoffs = 0.2,oops\n"), ValidationError);
}

TEST_CASE("apply routes the same keys as the file parser") {
  PipelineConfig c;
  config::apply(c, "disambig", "jaccard", "0.6");
  CHECK(c.disambig.jaccard_threshold == doctest::Approx(0.6));
  config::apply(c, "metrics", "robust-fraction", "0.2");
  CHECK(c.metrics.robust_fraction == doctest::Approx(0.2));
  CHECK_THROWS_AS(config::apply(c, "metrics", "nope", "1"), ValidationError);
  CHECK_THROWS_AS(config::apply(c, "nope", "robust-fraction", "1"), ValidationError);
}

TEST_CASE("validate needs paths and sane ranges") {
  PipelineConfig c;
  CHECK_THROWS_AS(c.validate(), ValidationError);  // no paths
  c.metadata_path = "m.jsonl";
  c.topics_path = "t.csv";
  c.out_dir = "out";
  CHECK_NOTHROW(c.validate());

  c.from_date = Date{2022, 1, 1};
  c.to_date = Date{2021, 1, 1};
  CHECK_THROWS_AS(c.validate(), ValidationError);  // empty window
  c.from_date.reset();
  c.to_date.reset();

  c.analysis.cutoff = 0.6;
  CHECK_THROWS_AS(c.validate(), ValidationError);
}

TEST_CASE("stage options fan out seed and threads") {
  PipelineConfig c;
  c.seed = 42;
  c.threads = 3;
  auto d = c.disambig_options();
  auto m = c.metrics_options();
  auto a = c.analysis_options();
  CHECK(d.threads == 3);
  CHECK(m.threads == 3);
  CHECK(m.seed == derive_seed(42, 1));
  CHECK(a.seed == derive_seed(42, 2));
  CHECK(m.seed != a.seed);
  CHECK(m.seed != 42);
}

TEST_CASE("load and save work through files") {
  auto path = (std::filesystem::temp_directory_path() / "coanet_config.ini").string();
  PipelineConfig c;
  c.metadata_path = "m.jsonl";
  c.topics_path = "t.csv";
  c.out_dir = "out";
  c.seed = 5;
  config::save(path, c);
  auto back = config::load(path);
  CHECK(back.seed == 5);
  CHECK(back.metadata_path == "m.jsonl");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(config::load(path), DataError);
}
