// Minimal dynamic bitset on 64-bit words. Fixed size after construction.
#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace lgh {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(words_.begin(), words_.end(), uint64_t{0}); }

    std::size_t count() const {
        std::size_t c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    bool intersects(const BitVec& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    std::size_t count_and(const BitVec& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    BitVec& operator&=(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    BitVec& operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    // this &= ~o
    BitVec& andnot(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend BitVec operator&(BitVec a, const BitVec& b) { a &= b; return a; }
    friend BitVec operator|(BitVec a, const BitVec& b) { a |= b; return a; }

    bool operator==(const BitVec& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }

    // First set bit at or after `from`; size() if none.
    std::size_t find_next(std::size_t from) const {
        if (from >= nbits_) return nbits_;
        std::size_t w = from >> 6;
        uint64_t cur = words_[w] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return (w << 6) + std::countr_zero(cur);
            if (++w == words_.size()) return nbits_;
            cur = words_[w];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            uint64_t cur = words_[w];
            while (cur) {
                f((w << 6) + std::countr_zero(cur));
                cur &= cur - 1;
            }
        }
    }

    const std::vector<uint64_t>& words() const { return words_; }

private:
    std::size_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace lgh
