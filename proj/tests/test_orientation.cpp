#include <doctest.h>

#include <algorithm>

#include "pdiff/diffusion.hpp"
#include "pdiff/orientation.hpp"
#include "test_support.hpp"

using namespace pdiff;
using test::code_of;

namespace {

bool legal(const char* text) { return check_p2_orientation(parse_orientation(text)).legal; }

bool has_rule(const char* text, PatternRule rule) {
  const auto report = check_p2_orientation(parse_orientation(text));
  return std::any_of(report.violations.begin(), report.violations.end(),
                     [&](const PatternViolation& v) { return v.rule == rule; });
}

}  // namespace

TEST_CASE("forbidden patterns") {
  CHECK(legal("R"));
  CHECK(legal("L"));
  CHECK(legal("RL"));
  CHECK(legal("RFL"));
  CHECK(legal("LRRL"));

  CHECK_FALSE(legal("F"));
  CHECK(has_rule("F", PatternRule::FlatAtLeaf));
  CHECK(has_rule("RFFL", PatternRule::AdjacentFlats));
  CHECK(has_rule("FRL", PatternRule::FlatAtLeaf));
  CHECK(has_rule("RLF", PatternRule::FlatAtLeaf));
  CHECK(has_rule("LRFRL", PatternRule::FlatNotBookendedByDisagreeing));
  CHECK(has_rule("RRFL", PatternRule::AgreeingPairNotBookended));
  CHECK_FALSE(has_rule("RRFL", PatternRule::FlatNotBookendedByDisagreeing));
  CHECK(has_rule("RRL", PatternRule::AgreeingPairNotBookended));
  CHECK(has_rule("LRRR", PatternRule::AgreeingPairNotBookended));
  CHECK(has_rule("LRRFRL", PatternRule::AgreeingPairNotBookended));

  const auto report = check_p2_orientation(parse_orientation("RFFL"));
  const auto flats = std::find_if(report.violations.begin(), report.violations.end(),
                                  [](const PatternViolation& v) { return v.rule == PatternRule::AdjacentFlats; });
  REQUIRE(flats != report.violations.end());
  CHECK(flats->first_edge == 2);
  CHECK(flats->last_edge == 3);

  CHECK(code_of([] { check_p2_orientation(PathOrientation{}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("both sides of the contraction example are legal") {
  CHECK(legal("RLRRLRLR"));
  CHECK(legal("RLRLRL"));
}

TEST_CASE("fast and reporting checkers agree on every short orientation") {
  for (std::size_t m = 1; m <= 9; ++m) {
    std::vector<EdgeSense> senses(m, EdgeSense::Right);
    while (true) {
      const PathOrientation o(senses);
      CHECK(is_p2_orientation(o) == check_p2_orientation(o).legal);
      std::size_t i = m;
      while (i > 0 && senses[i - 1] == EdgeSense::Flat) senses[--i] = EdgeSense::Right;
      if (i == 0) break;
      senses[i - 1] = static_cast<EdgeSense>(static_cast<int>(senses[i - 1]) + 1);
    }
  }
}

TEST_CASE("R_n from enumeration and recurrence") {
  const std::vector<std::int64_t> known = {0, 2, 2, 4, 8, 14, 28, 52, 100, 190, 362};
  for (std::size_t n = 1; n <= known.size(); ++n) {
    CHECK(count_p2_orientations_recurrence(n) == known[n - 1]);
    CHECK(enumerate_p2_orientations(n).size() == static_cast<std::size_t>(known[n - 1]));
  }
  for (std::size_t n = 12; n <= 18; ++n) {
    CHECK(enumerate_p2_orientations(n).size() == static_cast<std::size_t>(count_p2_orientations_recurrence(n)));
  }
}

TEST_CASE("small enumerations") {
  const auto p2 = enumerate_p2_orientations(2);
  REQUIRE(p2.size() == 2);
  CHECK(to_string(p2[0]) == "R");
  CHECK(to_string(p2[1]) == "L");

  std::vector<std::string> p4;
  for (const auto& o : enumerate_p2_orientations(4)) p4.push_back(to_string(o));
  CHECK(p4 == std::vector<std::string>{"RLR", "RFL", "LRL", "LFR"});
  CHECK(enumerate_p2_orientations(1).empty());
}

TEST_CASE("parallel enumeration matches the serial filter") {
  for (std::size_t n = 1; n <= 13; ++n) CHECK(enumerate_p2_orientations(n) == enumerate_p2_orientations_serial(n));
}

TEST_CASE("enumeration ceiling") {
  Limits tight;
  tight.enumeration_max_n = 6;
  CHECK(enumerate_p2_orientations(6, tight).size() == 14);
  CHECK(code_of([&] { enumerate_p2_orientations(7, tight); }) == ErrorCode::CeilingExceeded);
  CHECK(code_of([&] { enumerate_p2_orientations_serial(7, tight); }) == ErrorCode::CeilingExceeded);
}

TEST_CASE("legality is preserved by flipping and mirroring") {
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto listed = enumerate_p2_orientations(n);
    for (const auto& o : listed) {
      CHECK(is_p2_orientation(o.flipped()));
      CHECK(is_p2_orientation(o.mirrored()));
      CHECK(is_p2_orientation(o.reversed()));
    }
  }
}

TEST_CASE("witness configurations") {
  CHECK(witness_configuration(parse_orientation("RL")) == Configuration{0, 1, 0});
  CHECK(witness_configuration(parse_orientation("RFL")) == Configuration{0, 1, 1, 0});
  CHECK(witness_configuration(parse_orientation("L")) == Configuration{0, -1});
  CHECK(code_of([] { witness_configuration(parse_orientation("RR")); }) == ErrorCode::IllegalOrientation);

  for (std::size_t n = 2; n <= 14; ++n) {
    const PathGraph path(n);
    for (const auto& o : enumerate_p2_orientations(n)) {
      const auto w = witness_configuration(o);
      const auto report = detect_period(path.graph(), w, 4);
      CHECK(report.preperiod == 0);
      CHECK(report.period == 2);
      CHECK(induced_orientation(path, w) == o);
    }
  }
}
