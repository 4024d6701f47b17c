#include <filesystem>

#include "coanet/records.hpp"
#include "coanet/util.hpp"
#include "doctest.h"

using namespace coanet;

namespace {

PaperRecord sample() {
  PaperRecord rec;
  rec.paper_id = "2101.00001";
  rec.title = "A study";
  rec.abstract_text = "Text with \"quotes\".";
  rec.authors = {"Jane Doe", "J. Q. Public"};
  rec.categories = {"cs.DL", "cs.SI"};
  rec.date = Date{2021, 1, 2};
  rec.topic_id = 7;
  return rec;
}

}  // namespace

TEST_CASE("serialize and parse round trip") {
  auto rec = sample();
  PaperRecord back;
  auto err = parse_record_line(serialize_record(rec), back);
  CHECK(!err.has_value());
  CHECK(back == rec);

  rec.topic_id.reset();
  err = parse_record_line(serialize_record(rec), back);
  CHECK(!err.has_value());
  CHECK(!back.topic_id.has_value());
}

TEST_CASE("authors accept joined strings") {
  PaperRecord rec;
  auto parse = [&](const std::string& authors_json) {
    std::string line = R"({"id":"p1","authors":)" + authors_json +
                       R"(,"date":"2020-01-01"})";
    return parse_record_line(line, rec);
  };
  CHECK(!parse(R"("Ada Lovelace; Charles Babbage")").has_value());
  CHECK(rec.authors == std::vector<std::string>{"Ada Lovelace", "Charles Babbage"});
  CHECK(!parse(R"("Ada Lovelace and Charles Babbage")").has_value());
  CHECK(rec.authors == std::vector<std::string>{"Ada Lovelace", "Charles Babbage"});
  CHECK(!parse(R"(["One Author", "One Author", "Two Author"])").has_value());
  CHECK(rec.authors == std::vector<std::string>{"One Author", "Two Author"});
}

TEST_CASE("parse reports malformed lines") {
  PaperRecord rec;
  CHECK(parse_record_line("not json", rec).has_value());
  CHECK(parse_record_line("[1,2]", rec).has_value());
  CHECK(parse_record_line(R"({"id":"","authors":["A B"],"date":"2020-01-01"})", rec)
            .has_value());
  CHECK(parse_record_line(R"({"id":"x","authors":[],"date":"2020-01-01"})", rec)
            .has_value());
  CHECK(parse_record_line(R"({"id":"x","authors":["A B"],"date":"2020-13-01"})", rec)
            .has_value());
  CHECK(parse_record_line(R"({"id":"x","authors":["A B"]})", rec).has_value());
}

TEST_CASE("load_records is strict, save round trips") {
  auto dir = std::filesystem::temp_directory_path();
  auto path = (dir / "coanet_records_test.jsonl").string();

  std::vector<PaperRecord> recs = {sample()};
  recs[0].topic_id.reset();
  save_records(path, recs);
  CHECK(load_records(path) == recs);

  write_text_file(path, serialize_record(recs[0]) + "\nbroken\n");
  CHECK_THROWS_WITH_AS(load_records(path), doctest::Contains("2"), DataError);
  std::filesystem::remove(path);
}
