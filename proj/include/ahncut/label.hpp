#pragma once

#include <cassert>
#include <compare>
#include <string>

namespace ahncut {

// A label is either one of the K base labels (index 0..K-1) or the distinguished
// "free" label that auxiliary variables may take. The free label is not a base
// label: base-level variables can never hold it.
class Label {
 public:
  constexpr Label() : value_(0) {}

  static constexpr Label base(int index) {
    assert(index >= 0);
    return Label(index);
  }
  static constexpr Label free() { return Label(kFreeValue); }

  constexpr bool is_free() const { return value_ == kFreeValue; }
  constexpr int index() const {
    assert(!is_free());
    return value_;
  }

  // Dense index used by cost tables over the extended label set: base labels map
  // to their own index, the free label maps to num_labels (the last slot).
  constexpr int slot(int num_labels) const { return is_free() ? num_labels : value_; }

  static constexpr Label from_slot(int slot, int num_labels) {
    assert(slot >= 0 && slot <= num_labels);
    return slot == num_labels ? free() : base(slot);
  }

  friend constexpr bool operator==(Label a, Label b) = default;

 private:
  explicit constexpr Label(int v) : value_(v) {}
  static constexpr int kFreeValue = -1;
  int value_;
};

inline std::string to_string(Label l) { return l.is_free() ? "F" : std::to_string(l.index()); }

}  // namespace ahncut
