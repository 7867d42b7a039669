#pragma once
// Small dynamic bitset used for faces, chains and reachability rows.
// std::bitset is fixed-width and boost::dynamic_bitset is not installed,
// so we keep a minimal word-vector set type with the handful of ops the
// complexes actually need.

#include <cstdint>
#include <vector>
#include <functional>
#include <bit>

namespace vartop {

struct Bits {
    std::vector<std::uint64_t> w;

    Bits() = default;
    explicit Bits(int nbits) : w((nbits + 63) / 64, 0) {}

    void ensure(int bit) {
        if (bit / 64 >= (int)w.size()) w.resize(bit / 64 + 1, 0);
    }
    void set(int i) { ensure(i); w[i / 64] |= 1ull << (i % 64); }
    void reset(int i) { if (i / 64 < (int)w.size()) w[i / 64] &= ~(1ull << (i % 64)); }
    bool test(int i) const {
        return i / 64 < (int)w.size() && (w[i / 64] >> (i % 64)) & 1;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (auto x : w) if (x) return true;
        return false;
    }
    bool subset_of(const Bits& o) const {
        for (size_t i = 0; i < w.size(); ++i) {
            std::uint64_t rhs = i < o.w.size() ? o.w[i] : 0;
            if (w[i] & ~rhs) return false;
        }
        return true;
    }
    bool intersects(const Bits& o) const {
        size_t n = std::min(w.size(), o.w.size());
        for (size_t i = 0; i < n; ++i) if (w[i] & o.w[i]) return true;
        return false;
    }
    int intersect_count(const Bits& o) const {
        size_t n = std::min(w.size(), o.w.size());
        int c = 0;
        for (size_t i = 0; i < n; ++i) c += std::popcount(w[i] & o.w[i]);
        return c;
    }
    Bits operator&(const Bits& o) const {
        Bits r;
        r.w.resize(std::min(w.size(), o.w.size()));
        for (size_t i = 0; i < r.w.size(); ++i) r.w[i] = w[i] & o.w[i];
        r.trim();
        return r;
    }
    Bits operator|(const Bits& o) const {
        Bits r;
        r.w.resize(std::max(w.size(), o.w.size()), 0);
        for (size_t i = 0; i < w.size(); ++i) r.w[i] = w[i];
        for (size_t i = 0; i < o.w.size(); ++i) r.w[i] |= o.w[i];
        return r;
    }
    Bits minus(const Bits& o) const {
        Bits r = *this;
        size_t n = std::min(w.size(), o.w.size());
        for (size_t i = 0; i < n; ++i) r.w[i] &= ~o.w[i];
        return r;
    }
    void operator|=(const Bits& o) {
        if (o.w.size() > w.size()) w.resize(o.w.size(), 0);
        for (size_t i = 0; i < o.w.size(); ++i) w[i] |= o.w[i];
    }
    // trailing zero words make equality/hash order-sensitive; strip them
    void trim() {
        while (!w.empty() && w.back() == 0) w.pop_back();
    }
    bool operator==(const Bits& o) const {
        size_t n = std::max(w.size(), o.w.size());
        for (size_t i = 0; i < n; ++i) {
            std::uint64_t a = i < w.size() ? w[i] : 0;
            std::uint64_t b = i < o.w.size() ? o.w[i] : 0;
            if (a != b) return false;
        }
        return true;
    }
    bool operator<(const Bits& o) const { // lexicographic on words, for canonical sorting
        size_t n = std::max(w.size(), o.w.size());
        for (size_t i = n; i-- > 0;) {
            std::uint64_t a = i < w.size() ? w[i] : 0;
            std::uint64_t b = i < o.w.size() ? o.w[i] : 0;
            if (a != b) return a < b;
        }
        return false;
    }
    template <class F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w.size(); ++i) {
            std::uint64_t x = w[i];
            while (x) {
                int b = std::countr_zero(x);
                f((int)(i * 64 + b));
                x &= x - 1;
            }
        }
    }
    std::vector<int> to_vector() const {
        std::vector<int> v;
        for_each([&](int i) { v.push_back(i); });
        return v;
    }
};

struct BitsHash {
    size_t operator()(const Bits& b) const {
        // FNV-1a over the meaningful words
        std::uint64_t h = 1469598103934665603ull;
        size_t n = b.w.size();
        while (n && b.w[n - 1] == 0) --n;
        for (size_t i = 0; i < n; ++i) {
            h ^= b.w[i];
            h *= 1099511628211ull;
        }
        return (size_t)h;
    }
};

} // namespace vartop
