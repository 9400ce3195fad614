#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace oddramsey {

/// Fixed-length bit vector backed by 64-bit words. Used for adjacency rows,
/// vertex sets and GF(2) vectors.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void assign(std::size_t i, bool v) noexcept { v ? set(i) : reset(i); }

    void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const noexcept {
        return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
    }
    bool none() const noexcept { return !any(); }

    /// Index of the lowest set bit at or after `from`, or size() if none.
    std::size_t find_next(std::size_t from) const noexcept {
        if (from >= bits_) return bits_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w != 0) {
                std::size_t idx = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
                return idx < bits_ ? idx : bits_;
            }
            if (++wi >= words_.size()) return bits_;
            w = words_[wi];
        }
    }
    std::size_t find_first() const noexcept { return find_next(0); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w != 0) {
                f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
        return out;
    }

    DynBitset& operator&=(const DynBitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    DynBitset& operator|=(const DynBitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    DynBitset& operator^=(const DynBitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    /// this &= ~o
    DynBitset& subtract(const DynBitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
    friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
    friend DynBitset operator^(DynBitset a, const DynBitset& b) { return a ^= b; }

    std::size_t intersection_count(const DynBitset& o) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    bool operator==(const DynBitset& o) const = default;
    bool operator<(const DynBitset& o) const {
        return words_ < o.words_ || (words_ == o.words_ && bits_ < o.bits_);
    }

    std::size_t hash() const noexcept {
        std::size_t h = bits_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct DynBitsetHash {
    std::size_t operator()(const DynBitset& b) const noexcept { return b.hash(); }
};

}  // namespace oddramsey
