#include "doctest.h"

#include <filesystem>

#include "addcomp/complement.hpp"
#include "addcomp/greedy_builder.hpp"
#include "addcomp/report.hpp"
#include "addcomp/serialization.hpp"
#include "addcomp/verifier.hpp"

using namespace addcomp;

TEST_CASE("sequence json round trip") {
  auto seq = build_terms(8).seq;
  auto text = sequence_to_json(seq);
  CHECK(sequence_from_json(text) == seq);
  CHECK(sequence_to_json(sequence_from_json(text)) == text);
  CHECK(sequence_to_json(Sequence({1, 4, 130, 31591})) ==
        "{\"terms\":[\"1\",\"4\",\"130\",\"31591\"],\"growth_exponent\":4,\"growth_factor_rule\":\"linear\"}\n");
}

TEST_CASE("sequence json errors") {
  auto kind_of = [](std::string_view text) {
    try {
      sequence_from_json(text);
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("no error");
    return ErrorKind::cap;
  };
  CHECK(kind_of("not json") == ErrorKind::parse);
  CHECK(kind_of("{\"terms\":[1,4]}") == ErrorKind::parse);
  CHECK(kind_of("{\"terms\":[\"1\",\"x\"]}") == ErrorKind::parse);
  CHECK(kind_of("{\"terms\":[\"4\",\"1\"]}") == ErrorKind::precondition);
  CHECK(kind_of("{\"terms\":[\"1\",\"4\"],\"growth_factor_rule\":\"cubic\"}") == ErrorKind::parse);
}

TEST_CASE("blocks json round trip") {
  auto seq = build_terms(6).seq;
  auto blocks = build_blocks(seq, 4).blocks;
  auto text = blocks_to_json(blocks);
  CHECK(blocks_from_json(text) == blocks);
  CHECK(blocks_to_json(blocks_from_json(text)) == text);
  auto two = blocks_to_json(build_blocks(seq, 2).blocks);
  CHECK(two ==
        "{\"blocks\":[{\"k\":1,\"a_k\":\"1\",\"U_k\":[\"1\"],\"j_min\":\"3\",\"j_max\":\"8\"},"
        "{\"k\":2,\"a_k\":\"4\",\"U_k\":[\"1\",\"3\"],\"j_min\":\"1\",\"j_max\":\"97\"}]}\n");
  CHECK_THROWS_AS(blocks_from_json("{\"blocks\":[{\"k\":1}]}"), Error);
}

TEST_CASE("cover json") {
  CoverSolution s{{1, 3}, CoverKind::exact_minimum};
  CHECK(cover_to_json(s) == "{\"L\":2,\"translates\":[1,3]}");
}

TEST_CASE("files") {
  auto dir = std::filesystem::temp_directory_path() / "addcomp_test_files" / "nested";
  std::filesystem::remove_all(dir.parent_path());
  write_text_file(dir / "a.txt", "hello\n");
  CHECK(read_text_file(dir / "a.txt") == "hello\n");
  CHECK_THROWS_AS(read_text_file(dir / "missing.txt"), Error);
  std::filesystem::remove_all(dir.parent_path());
}

TEST_CASE("svg report is deterministic") {
  auto seq = build_terms(6).seq;
  auto blocks = build_blocks(seq, 3).blocks;
  auto reports = criterion_sweep(seq, blocks, default_sweep_points(seq, blocks));
  auto svg = criterion_svg(reports);
  CHECK(svg == criterion_svg(reports));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK_THROWS_AS(criterion_svg({}), Error);
}
