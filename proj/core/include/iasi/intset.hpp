#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace iasi {

/// Finite non-empty set of non-negative integers (a set-label).
class IntSet {
 public:
  using value_type = std::uint64_t;

  /// Sorts and removes duplicates; throws InvalidInput if empty.
  explicit IntSet(std::vector<value_type> elements);
  IntSet(std::initializer_list<value_type> elements);

  std::size_t size() const { return elems_.size(); }
  bool is_singleton() const { return elems_.size() == 1; }
  value_type min() const { return elems_.front(); }
  value_type max() const { return elems_.back(); }
  bool contains(value_type x) const;
  std::span<const value_type> elements() const { return elems_; }

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  /// Contiguous block {start, ..., start + count - 1}.
  static IntSet block(value_type start, std::size_t count);

  friend auto operator<=>(const IntSet&, const IntSet&) = default;

 private:
  std::vector<value_type> elems_;
};

/// {a + b : a in x, b in y}
IntSet sumset(const IntSet& x, const IntSet& y);

/// "{1,3,5}"
std::string to_string(const IntSet& s);

/// First `count` terms of the Mian-Chowla sequence 1, 2, 4, 8, 13, 21, ...
/// (greedy Sidon sequence: every pairwise sum a_i + a_j, i <= j, distinct).
std::vector<std::uint64_t> mian_chowla(std::size_t count);

}  // namespace iasi
