#include "rps/pes.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "rps/combinatorics.hpp"
#include "rps/error.hpp"

namespace rps {

FrameOfDiscernment::FrameOfDiscernment(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  std::vector<std::string> violations;
  if (labels_.empty()) violations.push_back("frame must contain at least one element");
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty()) violations.push_back("frame labels must be non-empty");
    if (!seen.insert(label).second) {
      violations.push_back("duplicate frame label \"" + label + "\"");
    }
  }
  if (!violations.empty()) {
    throw ValidationError("invalid frame of discernment: " + violations.front(),
                          violations);
  }
}

std::size_t FrameOfDiscernment::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw ValidationError("unknown element label \"" + label + "\"");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

FrameOfDiscernment FrameOfDiscernment::of_size(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) labels.push_back("t" + std::to_string(k));
  return FrameOfDiscernment(std::move(labels));
}

PermutationEvent::PermutationEvent(std::vector<unsigned> indices)
    : indices_(std::move(indices)) {
  std::set<unsigned> seen(indices_.begin(), indices_.end());
  if (seen.size() != indices_.size()) {
    throw ValidationError("permutation event indices must be pairwise distinct");
  }
}

bool PermutationEvent::valid_for(std::size_t frame_size) const {
  return std::all_of(indices_.begin(), indices_.end(),
                     [frame_size](unsigned i) { return i < frame_size; });
}

std::strong_ordering PermutationEvent::operator<=>(const PermutationEvent& rhs) const {
  if (auto c = indices_.size() <=> rhs.indices_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(indices_.begin(), indices_.end(),
                                                rhs.indices_.begin(),
                                                rhs.indices_.end());
}

std::vector<std::string> event_labels(const PermutationEvent& event,
                                      const FrameOfDiscernment& frame) {
  std::vector<std::string> labels;
  labels.reserve(event.cardinality());
  for (unsigned i : event.indices()) labels.push_back(frame.label(i));
  return labels;
}

std::string event_to_string(const PermutationEvent& event,
                            const FrameOfDiscernment& frame) {
  std::string out = "(";
  bool first = true;
  for (unsigned i : event.indices()) {
    if (!first) out += ",";
    out += frame.label(i);
    first = false;
  }
  out += ")";
  return out;
}

PermutationEvent event_from_labels(const std::vector<std::string>& labels,
                                   const FrameOfDiscernment& frame) {
  std::vector<unsigned> indices;
  indices.reserve(labels.size());
  for (const auto& label : labels) {
    indices.push_back(static_cast<unsigned>(frame.index_of(label)));
  }
  return PermutationEvent(std::move(indices));
}

std::vector<unsigned> forget_order(const PermutationEvent& event) {
  std::vector<unsigned> subset = event.indices();
  std::sort(subset.begin(), subset.end());
  return subset;
}

BigCount pes_size(unsigned n, bool include_empty) {
  if (n == 0) throw std::domain_error("pes_size requires n >= 1");
  BigCount total = include_empty ? BigCount(1) : BigCount(0);
  for (unsigned i = 1; i <= n; ++i) total += combinatorics::permutation_count(n, i);
  return total;
}

EventRange::EventRange(const FrameOfDiscernment& frame, bool include_empty)
    : n_(static_cast<unsigned>(frame.size())), include_empty_(include_empty) {
  if (frame.size() > 64) {
    throw CapacityError("cannot enumerate events of a frame with more than 64 elements");
  }
}

EventRange::iterator::iterator(unsigned n, bool include_empty) : n_(n), done_(false) {
  if (include_empty) {
    current_ = PermutationEvent();  // cardinality 0
  } else {
    start_cardinality(1);
  }
}

void EventRange::iterator::start_cardinality(unsigned card) {
  if (card > n_) {
    done_ = true;
    current_ = PermutationEvent();
    return;
  }
  tuple_.resize(card);
  used_ = 0;
  for (unsigned p = 0; p < card; ++p) {
    tuple_[p] = p;
    used_ |= std::uint64_t{1} << p;
  }
  current_ = PermutationEvent(tuple_);
}

// Lexicographic successor among distinct-index tuples of the current length:
// walking from the back, bump a position to the smallest unused larger index
// and refill the tail with the smallest unused indices in ascending order.
bool EventRange::iterator::advance_within_cardinality() {
  const int card = static_cast<int>(tuple_.size());
  for (int p = card - 1; p >= 0; --p) {
    const unsigned v = tuple_[p];
    used_ &= ~(std::uint64_t{1} << v);
    unsigned next = v + 1;
    while (next < n_ && (used_ >> next & 1)) ++next;
    if (next >= n_) continue;  // this position is exhausted, pop it
    tuple_[p] = next;
    used_ |= std::uint64_t{1} << next;
    unsigned fill = 0;
    for (int q = p + 1; q < card; ++q) {
      while (used_ >> fill & 1) ++fill;
      tuple_[q] = fill;
      used_ |= std::uint64_t{1} << fill;
    }
    return true;
  }
  return false;
}

EventRange::iterator& EventRange::iterator::operator++() {
  if (done_) return *this;
  const unsigned card = static_cast<unsigned>(current_.cardinality());
  if (card == 0 || !advance_within_cardinality()) {
    start_cardinality(card + 1);
  } else {
    current_ = PermutationEvent(tuple_);
  }
  return *this;
}

EventRange enumerate_events(const FrameOfDiscernment& frame, bool include_empty) {
  return EventRange(frame, include_empty);
}

}  // namespace rps
