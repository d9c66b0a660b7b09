#include "colex/order_list.hpp"

#include <cassert>

namespace colex {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

DynamicOrderList::DynamicOrderList(std::uint32_t capacity)
    : nodes_(capacity), in_list_(capacity, false) {}

void DynamicOrderList::update_size(Entry e) {
  nodes_[e].size = 1 + subtree_size(nodes_[e].left) + subtree_size(nodes_[e].right);
}

void DynamicOrderList::rotate_up(Entry e) {
  Entry p = nodes_[e].parent;
  Entry g = nodes_[p].parent;
  if (nodes_[p].left == e) {
    nodes_[p].left = nodes_[e].right;
    if (nodes_[e].right != kNil) nodes_[nodes_[e].right].parent = p;
    nodes_[e].right = p;
  } else {
    nodes_[p].right = nodes_[e].left;
    if (nodes_[e].left != kNil) nodes_[nodes_[e].left].parent = p;
    nodes_[e].left = p;
  }
  nodes_[p].parent = e;
  nodes_[e].parent = g;
  if (g == kNil) {
    root_ = e;
  } else if (nodes_[g].left == p) {
    nodes_[g].left = e;
  } else {
    nodes_[g].right = e;
  }
  update_size(p);
  update_size(e);
}

void DynamicOrderList::attach_leaf(Entry parent, bool as_left, Entry e) {
  assert(!in_list_[e]);
  Node& node = nodes_[e];
  node = Node{};
  node.size = 1;
  node.priority = splitmix64(inserted_++);
  node.parent = parent;
  in_list_[e] = true;
  ++size_;
  ++ops_;

  if (parent == kNil) {
    root_ = e;
    return;
  }
  (as_left ? nodes_[parent].left : nodes_[parent].right) = e;
  for (Entry q = parent; q != kNil; q = nodes_[q].parent) ++nodes_[q].size;
  while (nodes_[e].parent != kNil &&
         node.priority < nodes_[nodes_[e].parent].priority) {
    rotate_up(e);
  }
}

std::uint32_t DynamicOrderList::rank(Entry e) const {
  assert(in_list_[e]);
  ++ops_;
  std::uint32_t pos = subtree_size(nodes_[e].left) + 1;
  Entry cur = e;
  while (nodes_[cur].parent != kNil) {
    Entry p = nodes_[cur].parent;
    if (nodes_[p].right == cur) pos += subtree_size(nodes_[p].left) + 1;
    cur = p;
  }
  return pos;
}

void DynamicOrderList::insert_before(std::uint32_t position, Entry e) {
  assert(position >= 1 && position <= size_ + 1);
  std::uint32_t k = position - 1;  // elements that stay before e
  Entry cur = root_;
  Entry parent = kNil;
  bool left = false;
  while (cur != kNil) {
    parent = cur;
    std::uint32_t l = subtree_size(nodes_[cur].left);
    if (k <= l) {
      left = true;
      cur = nodes_[cur].left;
    } else {
      k -= l + 1;
      left = false;
      cur = nodes_[cur].right;
    }
  }
  attach_leaf(parent, left, e);
}

std::vector<DynamicOrderList::Entry> DynamicOrderList::in_order() const {
  std::vector<Entry> out;
  out.reserve(size_);
  std::vector<Entry> stack;
  Entry cur = root_;
  while (cur != kNil || !stack.empty()) {
    while (cur != kNil) {
      stack.push_back(cur);
      cur = nodes_[cur].left;
    }
    cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    cur = nodes_[cur].right;
  }
  return out;
}

}  // namespace colex
