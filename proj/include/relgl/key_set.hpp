#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace relgl {

/// Open-addressing hash set of 64-bit matrix keys (linear probing, load factor <= 1/2).
class KeySet {
 public:
  static constexpr std::uint64_t kEmpty = std::numeric_limits<std::uint64_t>::max();

  KeySet() { slots_.assign(16, kEmpty); }

  std::size_t size() const noexcept { return size_; }

  bool contains(std::uint64_t key) const noexcept {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = hash(key) & mask;; i = (i + 1) & mask) {
      if (slots_[i] == key) return true;
      if (slots_[i] == kEmpty) return false;
    }
  }

  /// Returns true if the key was newly inserted.
  bool insert(std::uint64_t key) {
    if (2 * (size_ + 1) > slots_.size()) grow();
    return place(slots_, key);
  }

  void reserve(std::size_t n) {
    while (2 * n > slots_.size()) grow();
  }

 private:
  static std::uint64_t hash(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  bool place(std::vector<std::uint64_t>& slots, std::uint64_t key) {
    const std::size_t mask = slots.size() - 1;
    for (std::size_t i = hash(key) & mask;; i = (i + 1) & mask) {
      if (slots[i] == key) return false;
      if (slots[i] == kEmpty) {
        slots[i] = key;
        ++size_;
        return true;
      }
    }
  }

  void grow() {
    std::vector<std::uint64_t> next(slots_.size() * 2, kEmpty);
    size_ = 0;
    for (auto k : slots_)
      if (k != kEmpty) place(next, k);
    slots_.swap(next);
  }

  std::vector<std::uint64_t> slots_;
  std::size_t size_ = 0;
};

}  // namespace relgl
