#pragma once

#include <cstdint>
#include <iterator>

#include "specbound/graph.hpp"

namespace specbound {

constexpr int kMaxEnumerationOrder = 7;
constexpr int kOverrideEnumerationOrder = 8;

// All 2^(n(n-1)/2) labeled graphs on n vertices. Graph index bit k is the k-th
// vertex pair in graph6 order (0,1),(0,2),(1,2),(0,3),...; graphs are produced
// in increasing index order.
class LabeledGraphs {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;

    iterator(const LabeledGraphs* owner, std::uint64_t index)
        : owner_(owner), index_(index) {}
    Graph operator*() const { return owner_->at(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    bool operator==(const iterator& other) const { return index_ == other.index_; }

   private:
    const LabeledGraphs* owner_;
    std::uint64_t index_;
  };

  LabeledGraphs(int n, bool allow_order_8 = false);

  int order() const noexcept { return n_; }
  std::uint64_t count() const noexcept { return std::uint64_t{1} << pairs_; }
  Graph at(std::uint64_t index) const;

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count()}; }

 private:
  int n_;
  int pairs_;
};

inline LabeledGraphs enumerate_labeled(int n, bool allow_order_8 = false) {
  return LabeledGraphs(n, allow_order_8);
}

}  // namespace specbound
