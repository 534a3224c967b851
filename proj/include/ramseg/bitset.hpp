#ifndef RAMSEG_BITSET_HPP
#define RAMSEG_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ramseg {

/// Fixed-size bit row used for adjacency and candidate sets.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    /// Sets bits [first, last).
    void set_range(std::size_t first, std::size_t last) {
        while (first < last && (first & 63) != 0) set(first++);
        while (first + 64 <= last) {
            words_[first >> 6] = ~std::uint64_t{0};
            first += 64;
        }
        while (first < last) set(first++);
    }

    void set_all() {
        set_range(0, size_);
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Index of the first set bit at or after `from`, or size() if none.
    std::size_t find_next(std::size_t from) const {
        if (from >= size_) return size_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return size_;
            w = words_[wi];
        }
    }
    std::size_t find_first() const { return find_next(0); }

    Bitset& operator&=(const Bitset& rhs) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= rhs.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& rhs) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= rhs.words_[i];
        return *this;
    }
    /// this &= ~rhs
    Bitset& subtract(const Bitset& rhs) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~rhs.words_[i];
        return *this;
    }
    void flip_all() {
        for (auto& w : words_) w = ~w;
        trim();
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void trim() {
        if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace ramseg

#endif
