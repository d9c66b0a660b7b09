#pragma once

#include <cstdint>
#include <vector>

namespace colex {

// Ordered list over pre-registered entry ids with logarithmic positional
// queries and inserts, realized as a size-augmented treap with parent
// pointers. Entry ids double as node handles, so rank lookups need no map.
// Priorities are seeded deterministically; identical insert sequences yield
// identical structures.
class DynamicOrderList {
 public:
  using Entry = std::uint32_t;

  explicit DynamicOrderList(std::uint32_t capacity);

  std::uint32_t size() const { return size_; }
  bool contains(Entry e) const { return in_list_[e]; }

  // 1-based position of an inserted entry. O(log size).
  std::uint32_t rank(Entry e) const;

  // Inserts so that the entry ends up at the given 1-based position
  // (everything previously at >= position shifts right). O(log size).
  void insert_before(std::uint32_t position, Entry e);
  void insert_after(std::uint32_t position, Entry e) {
    insert_before(position + 1, e);
  }

  // Inserts by comparator descent: goes_before(existing) must be true for
  // exactly the entries the new one precedes, and the list must already be
  // ordered consistently with it. O(log size) node visits.
  template <class BeforePred>
  void insert_ordered(Entry e, BeforePred goes_before) {
    Entry cur = root_;
    Entry parent = kNil;
    bool left = false;
    while (cur != kNil) {
      parent = cur;
      left = goes_before(cur);
      cur = left ? nodes_[cur].left : nodes_[cur].right;
    }
    attach_leaf(parent, left, e);
  }

  std::vector<Entry> in_order() const;

  // rank() calls + inserts performed so far.
  std::uint64_t operations() const { return ops_; }

 private:
  static constexpr Entry kNil = static_cast<Entry>(-1);

  struct Node {
    Entry left = kNil;
    Entry right = kNil;
    Entry parent = kNil;
    std::uint32_t size = 0;
    std::uint64_t priority = 0;
  };

  std::uint32_t subtree_size(Entry e) const {
    return e == kNil ? 0 : nodes_[e].size;
  }
  void update_size(Entry e);
  void rotate_up(Entry e);
  void attach_leaf(Entry parent, bool as_left, Entry e);

  std::vector<Node> nodes_;
  std::vector<bool> in_list_;
  Entry root_ = kNil;
  std::uint32_t size_ = 0;
  std::uint64_t inserted_ = 0;
  mutable std::uint64_t ops_ = 0;
};

}  // namespace colex
