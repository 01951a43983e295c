#pragma once

#include <cstdint>
#include <vector>

namespace genpos::detail {

// Fixed-size bit vector sized at construction.  The solver keeps one of
// these per vertex pair, so the footprint matters more than the API.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits)
        : nbits_(nbits), words_((static_cast<std::size_t>(nbits) + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { words_[w(i)] |= bit(i); }
    void reset(int i) { words_[w(i)] &= ~bit(i); }
    bool test(int i) const { return (words_[w(i)] & bit(i)) != 0; }

    void clear() { for (auto& x : words_) x = 0; }

    int count() const {
        int c = 0;
        for (auto x : words_) c += __builtin_popcountll(x);
        return c;
    }

    bool any() const {
        for (auto x : words_) if (x) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool operator==(const Bitset& o) const { return words_ == o.words_; }

    // First set bit at position >= from, or -1.
    int next(int from = 0) const {
        if (from >= nbits_) return -1;
        std::size_t wi = w(from);
        std::uint64_t cur = words_[wi] & (~0ULL << (from & 63));
        while (true) {
            if (cur) {
                int pos = static_cast<int>(wi * 64 + __builtin_ctzll(cur));
                return pos < nbits_ ? pos : -1;
            }
            if (++wi >= words_.size()) return -1;
            cur = words_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = next(0); i >= 0; i = next(i + 1)) f(i);
    }

private:
    static std::size_t w(int i) { return static_cast<std::size_t>(i) >> 6; }
    static std::uint64_t bit(int i) { return 1ULL << (i & 63); }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace genpos::detail
