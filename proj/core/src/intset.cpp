#include "iasi/intset.hpp"

#include <algorithm>
#include <unordered_set>

#include "iasi/error.hpp"

namespace iasi {

IntSet::IntSet(std::vector<value_type> elements) : elems_(std::move(elements)) {
  if (elems_.empty()) throw InvalidInput("set-label must be non-empty");
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

IntSet::IntSet(std::initializer_list<value_type> elements)
    : IntSet(std::vector<value_type>(elements)) {}

bool IntSet::contains(value_type x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

IntSet IntSet::block(value_type start, std::size_t count) {
  if (count == 0) throw InvalidInput("block must have at least one element");
  std::vector<value_type> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = start + i;
  return IntSet(std::move(v));
}

IntSet sumset(const IntSet& x, const IntSet& y) {
  std::vector<IntSet::value_type> sums;
  sums.reserve(x.size() * y.size());
  for (auto a : x) {
    for (auto b : y) sums.push_back(a + b);
  }
  return IntSet(std::move(sums));
}

std::string to_string(const IntSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto x : s) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

std::vector<std::uint64_t> mian_chowla(std::size_t count) {
  std::vector<std::uint64_t> seq;
  std::unordered_set<std::uint64_t> sums;
  std::uint64_t candidate = 1;
  while (seq.size() < count) {
    bool ok = !sums.contains(2 * candidate);
    for (std::size_t i = 0; ok && i < seq.size(); ++i) {
      ok = !sums.contains(seq[i] + candidate);
    }
    if (ok) {
      for (auto a : seq) sums.insert(a + candidate);
      sums.insert(2 * candidate);
      seq.push_back(candidate);
    }
    ++candidate;
  }
  return seq;
}

}  // namespace iasi
