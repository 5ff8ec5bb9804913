#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace convexdim::detail {

/// Fixed-width bitset sized at runtime.
class BitRow {
  public:
    BitRow() = default;
    explicit BitRow(std::size_t bits) : words_((bits + 63) / 64, 0), bits_(bits) {}

    [[nodiscard]] std::size_t bits() const { return bits_; }
    [[nodiscard]] bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    [[nodiscard]] bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    [[nodiscard]] std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    [[nodiscard]] bool intersects(const BitRow& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    BitRow& operator&=(const BitRow& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    BitRow& operator|=(const BitRow& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// this &= ~o
    BitRow& subtract(const BitRow& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            for (std::uint64_t w = words_[i]; w != 0; w &= w - 1)
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }

    friend bool operator==(const BitRow&, const BitRow&) = default;

  private:
    std::vector<std::uint64_t> words_;
    std::size_t bits_ = 0;
};

}  // namespace convexdim::detail
