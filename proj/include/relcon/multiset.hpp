#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <vector>

namespace relcon {

// Finite multiset. Counts are kept positive so equality is structural.
template <class T, class Less = std::less<T>>
class FMultiset {
 public:
  using Counts = std::map<T, std::size_t, Less>;
  using const_iterator = typename Counts::const_iterator;

  FMultiset() = default;
  FMultiset(std::initializer_list<T> xs) {
    for (const auto& x : xs) add(x);
  }
  template <class It>
  FMultiset(It first, It last) {
    for (; first != last; ++first) add(*first);
  }
  static FMultiset from_vector(const std::vector<T>& xs) {
    return FMultiset(xs.begin(), xs.end());
  }

  void add(const T& x, std::size_t n = 1) {
    if (n == 0) return;
    counts_[x] += n;
  }
  // Removes up to n copies; returns how many were removed.
  std::size_t remove(const T& x, std::size_t n = 1) {
    auto it = counts_.find(x);
    if (it == counts_.end() || n == 0) return 0;
    std::size_t k = std::min(n, it->second);
    it->second -= k;
    if (it->second == 0) counts_.erase(it);
    return k;
  }

  std::size_t multiplicity(const T& x) const {
    auto it = counts_.find(x);
    return it == counts_.end() ? 0 : it->second;
  }
  bool contains(const T& x) const { return counts_.count(x) != 0; }
  bool empty() const { return counts_.empty(); }
  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& [_, c] : counts_) n += c;
    return n;
  }
  std::size_t distinct() const { return counts_.size(); }

  std::set<T, Less> support() const {
    std::set<T, Less> s;
    for (const auto& [x, _] : counts_) s.insert(x);
    return s;
  }
  // Elements with repetition, in element order.
  std::vector<T> elements() const {
    std::vector<T> v;
    for (const auto& [x, c] : counts_) v.insert(v.end(), c, x);
    return v;
  }

  const Counts& counts() const { return counts_; }
  const_iterator begin() const { return counts_.begin(); }
  const_iterator end() const { return counts_.end(); }

  friend bool operator==(const FMultiset& a, const FMultiset& b) { return a.counts_ == b.counts_; }
  friend bool operator!=(const FMultiset& a, const FMultiset& b) { return !(a == b); }
  // Total order used for canonical enumeration: by size, then lexicographically on elements.
  friend bool operator<(const FMultiset& a, const FMultiset& b) {
    std::size_t sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    auto ea = a.elements(), eb = b.elements();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end(), Less{});
  }

 private:
  Counts counts_;
};

enum class PointwiseOp { intersection, union_, sum, difference };

template <class T, class L>
FMultiset<T, L> pointwise(const FMultiset<T, L>& m, const FMultiset<T, L>& n, PointwiseOp op) {
  FMultiset<T, L> r;
  switch (op) {
    case PointwiseOp::sum:
      r = m;
      for (const auto& [x, c] : n) r.add(x, c);
      break;
    case PointwiseOp::difference:
      for (const auto& [x, c] : m) {
        std::size_t d = n.multiplicity(x);
        if (c > d) r.add(x, c - d);
      }
      break;
    case PointwiseOp::intersection:
      for (const auto& [x, c] : m) r.add(x, std::min(c, n.multiplicity(x)));
      break;
    case PointwiseOp::union_:
      r = m;
      for (const auto& [x, c] : n) {
        std::size_t have = m.multiplicity(x);
        if (c > have) r.add(x, c - have);
      }
      break;
  }
  return r;
}

template <class T, class L>
FMultiset<T, L> msum(const FMultiset<T, L>& m, const FMultiset<T, L>& n) {
  return pointwise(m, n, PointwiseOp::sum);
}
template <class T, class L>
FMultiset<T, L> mdiff(const FMultiset<T, L>& m, const FMultiset<T, L>& n) {
  return pointwise(m, n, PointwiseOp::difference);
}
template <class T, class L>
FMultiset<T, L> mintersect(const FMultiset<T, L>& m, const FMultiset<T, L>& n) {
  return pointwise(m, n, PointwiseOp::intersection);
}
template <class T, class L>
FMultiset<T, L> munion(const FMultiset<T, L>& m, const FMultiset<T, L>& n) {
  return pointwise(m, n, PointwiseOp::union_);
}

template <class T, class L>
bool submultiset(const FMultiset<T, L>& m, const FMultiset<T, L>& n) {
  for (const auto& [x, c] : m)
    if (c > n.multiplicity(x)) return false;
  return true;
}

// All submultisets of m, smallest first, in canonical order.
template <class T, class L>
std::vector<FMultiset<T, L>> submultisets(const FMultiset<T, L>& m) {
  std::vector<std::pair<T, std::size_t>> items(m.begin(), m.end());
  std::vector<FMultiset<T, L>> out;
  std::vector<std::size_t> pick(items.size(), 0);
  while (true) {
    FMultiset<T, L> s;
    for (std::size_t i = 0; i < items.size(); ++i) s.add(items[i].first, pick[i]);
    out.push_back(std::move(s));
    std::size_t i = 0;
    while (i < items.size() && pick[i] == items[i].second) pick[i++] = 0;
    if (i == items.size()) break;
    ++pick[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All multisets over `universe` with at most max_size elements: by size, then
// lexicographically in universe order.
template <class T, class L = std::less<T>>
std::vector<FMultiset<T, L>> all_multisets(const std::vector<T>& universe, std::size_t max_size) {
  std::vector<FMultiset<T, L>> out;
  std::vector<std::size_t> idx;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t left) {
    if (left == 0) {
      FMultiset<T, L> m;
      for (auto i : idx) m.add(universe[i]);
      out.push_back(std::move(m));
      return;
    }
    for (std::size_t i = from; i < universe.size(); ++i) {
      idx.push_back(i);
      rec(i, left - 1);
      idx.pop_back();
    }
  };
  for (std::size_t s = 0; s <= max_size; ++s) rec(0, s);
  return out;
}

}  // namespace relcon
