#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>

namespace dstar {

// Set of vertex indices in [0, 64), one machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr int first() const { return std::countr_zero(bits_); }

  void add(int v) { bits_ |= std::uint64_t{1} << v; }
  void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;

  bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  // Iterates set bits in ascending order.
  class iterator {
   public:
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    bool operator==(const iterator& o) const { return rest_ == o.rest_; }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace dstar
