#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "lplab/errors.hpp"

namespace lplab {

/// Fixed-length binary word. Bit i of a length-n vector is position i of the
/// block-length-n string; lexicographic order follows the "0" < "1" string order.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVector from_string(const std::string& s) {
        BitVector v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.set(i, true);
            else if (s[i] != '0')
                throw parse_error("bit string must contain only 0/1");
        }
        return v;
    }

    static BitVector from_support(std::size_t n, const std::vector<int>& ones) {
        BitVector v(n);
        for (int i : ones) {
            if (i < 0 || static_cast<std::size_t>(i) >= n)
                throw structural_error("bit index out of range");
            v.set(i, true);
        }
        return v;
    }

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool b) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (b)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    std::size_t weight() const {
        std::size_t c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }

    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }

    BitVector& operator^=(const BitVector& o) {
        if (o.n_ != n_) throw structural_error("BitVector length mismatch");
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator!=(const BitVector& a, const BitVector& b) { return !(a == b); }

    /// Lexicographic on the bit string (position 0 first).
    friend bool operator<(const BitVector& a, const BitVector& b) {
        std::size_t nw = std::min(a.w_.size(), b.w_.size());
        for (std::size_t k = 0; k < nw; ++k) {
            uint64_t diff = a.w_[k] ^ b.w_[k];
            if (diff) {
                std::size_t bit = static_cast<std::size_t>(std::countr_zero(diff));
                return !((a.w_[k] >> bit) & 1u);  // 0 at first differing position sorts first
            }
        }
        return a.n_ < b.n_;
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    std::vector<int> ones() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (get(i)) out.push_back(static_cast<int>(i));
        return out;
    }

    /// Index of the lowest set bit, or -1 if zero.
    int lowest_set() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }

  private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace lplab
