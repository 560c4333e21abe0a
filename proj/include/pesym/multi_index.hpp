#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>

namespace pesym {

/// Symmetric derivative multi-index. Slot semantics depend on the owning atom:
/// for jets the slots are independent-variable indices, for unknown-function
/// derivatives they are positions in the function's declared argument list.
/// Mixed partials are identified by construction (u_xy == u_yx).
class MultiIndex {
 public:
  static constexpr int kSlots = 24;

  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> slots) {
    for (int s : slots) increment(s);
  }

  int order(int slot) const { return orders_[check(slot)]; }
  int total() const {
    int t = 0;
    for (auto o : orders_) t += o;
    return t;
  }
  bool is_zero() const { return total() == 0; }

  void increment(int slot, int by = 1) {
    int v = orders_[check(slot)] + by;
    if (v < 0 || v > 255) throw std::overflow_error("MultiIndex: order out of range");
    orders_[slot] = static_cast<std::uint8_t>(v);
  }

  MultiIndex plus(int slot, int by = 1) const {
    MultiIndex m = *this;
    m.increment(slot, by);
    return m;
  }

  /// Componentwise m <= *this, i.e. *this is a derivative of m.
  bool dominates(const MultiIndex& m) const {
    for (int i = 0; i < kSlots; ++i)
      if (orders_[i] < m.orders_[i]) return false;
    return true;
  }

  MultiIndex minus(const MultiIndex& m) const {
    MultiIndex r;
    for (int i = 0; i < kSlots; ++i) {
      if (orders_[i] < m.orders_[i]) throw std::invalid_argument("MultiIndex::minus: not dominated");
      r.orders_[i] = static_cast<std::uint8_t>(orders_[i] - m.orders_[i]);
    }
    return r;
  }

  auto operator<=>(const MultiIndex&) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (int i = 0; i < kSlots; ++i)
      if (orders_[i] != 0) f(i, static_cast<int>(orders_[i]));
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto o : orders_) {
      h ^= o;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  static int check(int slot) {
    if (slot < 0 || slot >= kSlots) throw std::out_of_range("MultiIndex: slot out of range");
    return slot;
  }
  std::array<std::uint8_t, kSlots> orders_{};
};

}  // namespace pesym
