#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>

#include "ugl/context.hpp"

namespace ugl {

// A product of basis generators, stored inline. The empty word is the
// multiplicative identity. 32 factors is comfortably above anything the
// desk-scale builders produce; construction checks the cap.
class Word {
 public:
  static constexpr std::size_t kMaxFactors = 32;

  Word() = default;

  static Word single(GenId g) {
    Word w;
    w.push_back(g);
    return w;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  GenId operator[](std::size_t i) const { return g_[i]; }

  void push_back(GenId g) {
    if (size_ >= kMaxFactors) throw std::length_error("Word: factor capacity exceeded");
    g_[size_++] = g;
  }

  friend Word concat(const Word& a, const Word& b) {
    if (a.size_ + b.size_ > kMaxFactors)
      throw std::length_error("Word: factor capacity exceeded");
    Word w = a;
    std::memcpy(w.g_.data() + w.size_, b.g_.data(), b.size_ * sizeof(GenId));
    w.size_ = static_cast<std::uint8_t>(a.size_ + b.size_);
    return w;
  }

  Word with_swapped(std::size_t i) const {  // swap factors i, i+1
    Word w = *this;
    std::swap(w.g_[i], w.g_[i + 1]);
    return w;
  }

  // replace the two factors at i, i+1 by a single generator
  Word with_pair_contracted(std::size_t i, GenId g) const {
    Word w;
    w.size_ = static_cast<std::uint8_t>(size_ - 1);
    std::memcpy(w.g_.data(), g_.data(), i * sizeof(GenId));
    w.g_[i] = g;
    std::memcpy(w.g_.data() + i + 1, g_.data() + i + 2, (size_ - i - 2) * sizeof(GenId));
    return w;
  }

  Word without_pair(std::size_t i) const {  // drop factors i, i+1
    Word w;
    w.size_ = static_cast<std::uint8_t>(size_ - 2);
    std::memcpy(w.g_.data(), g_.data(), i * sizeof(GenId));
    std::memcpy(w.g_.data() + i, g_.data() + i + 2, (size_ - i - 2) * sizeof(GenId));
    return w;
  }

  int parity(const Context& ctx) const {
    int p = 0;
    for (std::size_t i = 0; i < size_; ++i) p ^= ctx.gen_parity(g_[i]);
    return p;
  }

  bool contains_virtual(const Context& ctx) const {
    for (std::size_t i = 0; i < size_; ++i)
      if (ctx.gen_has_virtual(g_[i])) return true;
    return false;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.size_ == b.size_ &&
           std::memcmp(a.g_.data(), b.g_.data(), a.size_ * sizeof(GenId)) == 0;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) {  // length, then lexicographic
    if (a.size_ != b.size_) return a.size_ < b.size_;
    for (std::size_t i = 0; i < a.size_; ++i)
      if (a.g_[i] != b.g_[i]) return a.g_[i] < b.g_[i];
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < size_; ++i) {
      h ^= g_[i];
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 32));
  }

 private:
  std::array<GenId, kMaxFactors> g_{};
  std::uint8_t size_ = 0;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

}  // namespace ugl
