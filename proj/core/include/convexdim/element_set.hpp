#pragma once

#include <bit>
#include <compare>
#include <functional>
#include <cstdint>
#include <ostream>
#include <vector>

namespace convexdim {

/// Maximum ground-set size. Closed sets are stored as 32-bit masks.
inline constexpr int kMaxGroundSize = 20;

/// Subset of a ground set of at most kMaxGroundSize elements, as a bitmask.
class ElementSet {
  public:
    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}

    static constexpr ElementSet single(int e) { return ElementSet(std::uint32_t{1} << e); }
    static constexpr ElementSet full(int n) {
        return ElementSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
    }

    [[nodiscard]] constexpr std::uint32_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }
    [[nodiscard]] constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
    [[nodiscard]] constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
    [[nodiscard]] constexpr bool proper_subset_of(ElementSet other) const {
        return subset_of(other) && bits_ != other.bits_;
    }
    [[nodiscard]] constexpr bool comparable(ElementSet other) const {
        return subset_of(other) || other.subset_of(*this);
    }
    [[nodiscard]] constexpr ElementSet with(int e) const { return ElementSet(bits_ | (std::uint32_t{1} << e)); }
    [[nodiscard]] constexpr ElementSet without(int e) const { return ElementSet(bits_ & ~(std::uint32_t{1} << e)); }
    [[nodiscard]] constexpr int min_element() const { return std::countr_zero(bits_); }

    [[nodiscard]] std::vector<int> elements() const {
        std::vector<int> out;
        for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    template <typename F>
    constexpr void for_each(F&& f) const {
        for (std::uint32_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
    }

    friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
    friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
    friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
    constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
    constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
    friend constexpr bool operator==(ElementSet, ElementSet) = default;

  private:
    std::uint32_t bits_ = 0;
};

/// Canonical order: by size, then lexicographically by sorted element indices.
struct CanonicalLess {
    constexpr bool operator()(ElementSet a, ElementSet b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        const std::uint32_t diff = a.bits() ^ b.bits();
        if (diff == 0) return false;
        return (a.bits() & (diff & (~diff + 1))) != 0;
    }
};

/// Element indices, e.g. "{0,3}".
inline std::ostream& operator<<(std::ostream& os, ElementSet s) {
    os << '{';
    bool first = true;
    s.for_each([&](int e) {
        os << (first ? "" : ",") << e;
        first = false;
    });
    return os << '}';
}

struct ElementSetHash {
    std::size_t operator()(ElementSet s) const noexcept { return std::hash<std::uint32_t>{}(s.bits()); }
};

}  // namespace convexdim
