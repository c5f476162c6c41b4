#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "rps/combinatorics.hpp"
#include "rps/error.hpp"
#include "rps/pes.hpp"

using rps::BigCount;
using rps::FrameOfDiscernment;
using rps::PermutationEvent;

namespace {

std::vector<PermutationEvent> collect(const FrameOfDiscernment& frame,
                                      bool include_empty) {
  std::vector<PermutationEvent> events;
  for (const auto& event : rps::enumerate_events(frame, include_empty)) {
    events.push_back(event);
  }
  return events;
}

}  // namespace

TEST_CASE("frame construction validates labels") {
  CHECK_THROWS_AS(FrameOfDiscernment({}), rps::ValidationError);
  CHECK_THROWS_AS(FrameOfDiscernment({"X", "X"}), rps::ValidationError);
  CHECK_THROWS_AS(FrameOfDiscernment({"X", ""}), rps::ValidationError);

  const FrameOfDiscernment frame({"R", "B", "G"});
  CHECK(frame.size() == 3);
  CHECK(frame.index_of("B") == 1);
  CHECK_THROWS_AS(frame.index_of("Z"), rps::ValidationError);

  const auto generated = FrameOfDiscernment::of_size(3);
  CHECK(generated.labels() == std::vector<std::string>{"t1", "t2", "t3"});
}

TEST_CASE("permutation events reject repeated indices") {
  CHECK_THROWS_AS(PermutationEvent({0, 0}), rps::ValidationError);
  CHECK_THROWS_AS(PermutationEvent({1, 2, 1}), rps::ValidationError);
  const PermutationEvent event({2, 0});
  CHECK(event.cardinality() == 2);
  CHECK(event.valid_for(3));
  CHECK_FALSE(event.valid_for(2));
  CHECK(PermutationEvent().empty());
}

TEST_CASE("canonical order is cardinality-major then lexicographic") {
  const PermutationEvent empty;
  const PermutationEvent x({0});
  const PermutationEvent y({1});
  const PermutationEvent xy({0, 1});
  const PermutationEvent yx({1, 0});
  CHECK(empty < x);
  CHECK(x < y);
  CHECK(y < xy);
  CHECK(xy < yx);
}

TEST_CASE("enumeration of a two-element frame lists the five events in order") {
  const FrameOfDiscernment frame({"X", "Y"});
  const auto events = collect(frame, true);
  const std::vector<PermutationEvent> expected = {
      PermutationEvent(), PermutationEvent({0}), PermutationEvent({1}),
      PermutationEvent({0, 1}), PermutationEvent({1, 0})};
  CHECK(events == expected);
}

TEST_CASE("enumeration endpoints and counts for three elements") {
  const FrameOfDiscernment frame({"R", "B", "G"});
  const auto with_empty = collect(frame, true);
  CHECK(with_empty.size() == 16);

  const auto events = collect(frame, false);
  CHECK(events.size() == 15);
  CHECK(rps::event_to_string(events.front(), frame) == "(R)");
  CHECK(rps::event_to_string(events.back(), frame) == "(G,B,R)");
}

TEST_CASE("enumeration of a singleton frame") {
  const FrameOfDiscernment frame({"a"});
  const auto events = collect(frame, false);
  REQUIRE(events.size() == 1);
  CHECK(rps::event_to_string(events.front(), frame) == "(a)");
}

TEST_CASE("enumeration is duplicate-free, in-range, and correctly sized") {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto frame = FrameOfDiscernment::of_size(n);
    const auto events = collect(frame, true);

    CHECK(BigCount(events.size()) == rps::pes_size(n, true));
    CHECK(events.size() == collect(frame, false).size() + 1);

    const std::set<PermutationEvent> unique(events.begin(), events.end());
    CHECK(unique.size() == events.size());
    CHECK(std::is_sorted(events.begin(), events.end()));

    std::vector<std::size_t> per_cardinality(n + 1, 0);
    for (const auto& event : events) {
      CHECK(event.valid_for(n));
      per_cardinality[event.cardinality()] += 1;
    }
    for (unsigned i = 0; i <= n; ++i) {
      CHECK(BigCount(per_cardinality[i]) == rps::combinatorics::permutation_count(n, i));
    }
  }
}

TEST_CASE("forget_order projects onto the power set") {
  const FrameOfDiscernment frame({"X", "Y"});
  CHECK(rps::forget_order(PermutationEvent({1, 0})) == std::vector<unsigned>{0, 1});
  CHECK(rps::forget_order(PermutationEvent()).empty());
  CHECK(rps::forget_order(PermutationEvent({1, 2, 0})) ==
        std::vector<unsigned>{0, 1, 2});

  for (unsigned n = 1; n <= 6; ++n) {
    std::set<std::vector<unsigned>> image;
    for (const auto& event :
         rps::enumerate_events(FrameOfDiscernment::of_size(n), true)) {
      image.insert(rps::forget_order(event));
    }
    CHECK(BigCount(image.size()) == BigCount::pow2(n));
  }
}

TEST_CASE("pes_size closed form") {
  CHECK(rps::pes_size(3, true) == BigCount(16));
  CHECK(rps::pes_size(2, true) == BigCount(5));
  CHECK(rps::pes_size(10, true) == BigCount(9864101));
  CHECK(rps::pes_size(10, false) == BigCount(9864100));
  CHECK_THROWS_AS(rps::pes_size(0, true), std::domain_error);
}

TEST_CASE("event label round trips") {
  const FrameOfDiscernment frame({"R", "B", "G"});
  const PermutationEvent event = rps::event_from_labels({"G", "R"}, frame);
  CHECK(event.indices() == std::vector<unsigned>{2, 0});
  CHECK(rps::event_labels(event, frame) == std::vector<std::string>{"G", "R"});
  CHECK(rps::event_to_string(event, frame) == "(G,R)");
  CHECK(rps::event_to_string(PermutationEvent(), frame) == "()");
  CHECK_THROWS_AS(rps::event_from_labels({"R", "Z"}, frame), rps::ValidationError);
}

TEST_CASE("frames beyond the 64-element cursor are refused") {
  std::vector<std::string> labels;
  for (int k = 0; k < 65; ++k) labels.push_back("e" + std::to_string(k));
  const FrameOfDiscernment frame(labels);
  CHECK_THROWS_AS(rps::enumerate_events(frame, false), rps::CapacityError);
}
