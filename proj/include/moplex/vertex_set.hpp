#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace moplex {

using Vertex = std::size_t;

// Subset of {0, ..., universe-1} stored as a bitset. Sets over different
// universes never compare equal; binary operations require equal universes.
class VertexSet {
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  using Words = boost::container::small_vector<Word, 2>;

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;

    Vertex operator*() const { return index_ * kWordBits + std::countr_zero(current_); }
    const_iterator& operator++() {
      current_ &= current_ - 1;
      settle();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const {
      return index_ == other.index_ && current_ == other.current_;
    }

   private:
    friend class VertexSet;
    const_iterator(const Words* words, std::size_t index) : words_(words), index_(index) {
      if (index_ < words_->size()) current_ = (*words_)[index_];
      settle();
    }
    void settle() {
      while (current_ == 0 && index_ < words_->size()) {
        ++index_;
        current_ = index_ < words_->size() ? (*words_)[index_] : 0;
      }
    }

    const Words* words_ = nullptr;
    std::size_t index_ = 0;
    Word current_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t universe);
  static VertexSet from_range(std::size_t universe, const std::vector<Vertex>& members);

  std::size_t universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear();

  std::size_t size() const;
  bool empty() const;
  /// Smallest member; the set must be non-empty.
  Vertex front() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  /// Complement within the universe.
  VertexSet operator~() const;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  /// Lexicographic order on the ascending member sequences.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

  const_iterator begin() const { return const_iterator(&words_, 0); }
  const_iterator end() const { return const_iterator(&words_, words_.size()); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }
  std::size_t hash() const;

 private:
  void require_same_universe(const VertexSet& other) const;
  void check(Vertex v) const;

  std::size_t universe_ = 0;
  Words words_;
};

}  // namespace moplex

template <>
struct std::hash<moplex::VertexSet> {
  std::size_t operator()(const moplex::VertexSet& s) const noexcept { return s.hash(); }
};
