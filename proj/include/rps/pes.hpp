#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "rps/bigcount.hpp"

namespace rps {

/// Fixed set of mutually exclusive, exhaustive outcome labels. Labels must
/// be pairwise distinct and non-empty; the frame is immutable once built.
class FrameOfDiscernment {
 public:
  /// Throws ValidationError on an empty list, an empty label, or duplicates.
  explicit FrameOfDiscernment(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t index) const { return labels_.at(index); }

  /// Index of a label; throws ValidationError when the label is unknown.
  std::size_t index_of(const std::string& label) const;

  /// Convenience frame with generated labels t1..tn.
  static FrameOfDiscernment of_size(std::size_t n);

  bool operator==(const FrameOfDiscernment& rhs) const = default;

 private:
  std::vector<std::string> labels_;
};

/// Ordered tuple of distinct element indices into a frame; (X,Y) and (Y,X)
/// are different events. The empty tuple is the empty event.
class PermutationEvent {
 public:
  PermutationEvent() = default;  // the empty event
  /// Throws ValidationError if indices repeat.
  explicit PermutationEvent(std::vector<unsigned> indices);

  const std::vector<unsigned>& indices() const { return indices_; }
  std::size_t cardinality() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }

  /// True when every index refers into a frame of the given size.
  bool valid_for(std::size_t frame_size) const;

  bool operator==(const PermutationEvent& rhs) const = default;
  /// Canonical order: ascending cardinality, lexicographic by index tuple
  /// within a cardinality. Serialized output relies on this being stable.
  std::strong_ordering operator<=>(const PermutationEvent& rhs) const;

 private:
  std::vector<unsigned> indices_;
};

/// Labels of an event in tuple order.
std::vector<std::string> event_labels(const PermutationEvent& event,
                                      const FrameOfDiscernment& frame);

/// Event rendered as "(R,B)"; the empty event renders as "()".
std::string event_to_string(const PermutationEvent& event,
                            const FrameOfDiscernment& frame);

/// Event built from labels; throws ValidationError on unknown labels.
PermutationEvent event_from_labels(const std::vector<std::string>& labels,
                                   const FrameOfDiscernment& frame);

/// The underlying unordered index set of an event, sorted ascending.
std::vector<unsigned> forget_order(const PermutationEvent& event);

/// Exact size of the permutation event space: sum over i of n!/(n-i)!,
/// starting at i = 0 or i = 1 depending on include_empty.
BigCount pes_size(unsigned n, bool include_empty);

/// Lazy range over the permutation event space of a frame, in canonical
/// order. The space has ~e*n! members, so it is never materialized here;
/// callers that collect it are responsible for respecting their own caps.
class EventRange {
 public:
  /// Frames wider than 64 elements are refused (CapacityError): the cursor
  /// tracks used indices in a 64-bit mask, and a space that size could not
  /// be iterated anyway.
  EventRange(const FrameOfDiscernment& frame, bool include_empty);

  class iterator {
   public:
    using value_type = PermutationEvent;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;  // end
    iterator(unsigned n, bool include_empty);

    const PermutationEvent& operator*() const { return current_; }
    const PermutationEvent* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    bool operator==(const iterator& rhs) const {
      return done_ == rhs.done_ && (done_ || current_ == rhs.current_);
    }

   private:
    void start_cardinality(unsigned card);
    bool advance_within_cardinality();

    unsigned n_ = 0;
    bool done_ = true;
    std::uint64_t used_ = 0;
    std::vector<unsigned> tuple_;
    PermutationEvent current_;
  };

  iterator begin() const { return iterator(n_, include_empty_); }
  iterator end() const { return iterator(); }

 private:
  unsigned n_;
  bool include_empty_;
};

/// The permutation event space of a frame as a lazy range.
EventRange enumerate_events(const FrameOfDiscernment& frame, bool include_empty);

}  // namespace rps
