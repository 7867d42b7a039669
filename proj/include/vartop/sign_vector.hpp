#pragma once
// Sign vectors in {-,0,+}^n up to global negation. A vector is kept in
// projective normal form: the first nonzero entry is +. Storage is two
// bitmasks over the positions (support and the subset of positive entries),
// which caps n at 32; every scale in this project is far below that.

#include "error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace vartop {

class SignVector {
public:
    SignVector() : n_(0), supp_(0), pos_(0) {}

    // entries: -1/0/+1 per position (any nonzero magnitude counts as its sign)
    static SignVector normalize(const std::vector<int>& raw) {
        if ((int)raw.size() > 32) throw Error("BadRange", "length > 32 unsupported");
        std::uint32_t supp = 0, pos = 0;
        for (size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] != 0) {
                supp |= 1u << i;
                if (raw[i] > 0) pos |= 1u << i;
            }
        }
        if (!supp) throw Error("AllZero", "sign vector must have a nonzero entry");
        SignVector v;
        v.n_ = (int)raw.size();
        v.supp_ = supp;
        v.pos_ = pos;
        v.renormalize();
        return v;
    }

    static SignVector parse(const std::string& s) {
        std::vector<int> raw;
        raw.reserve(s.size());
        for (char c : s) {
            if (c == '+') raw.push_back(1);
            else if (c == '-') raw.push_back(-1);
            else if (c == '0') raw.push_back(0);
            else throw Error("BadSignChar", std::string("unexpected '") + c + "'");
        }
        return normalize(raw);
    }

    int n() const { return n_; }
    std::uint32_t support() const { return supp_; }
    int entry(int i) const { // -1/0/+1 at position i (0-based)
        if (!(supp_ >> i & 1)) return 0;
        return (pos_ >> i & 1) ? 1 : -1;
    }
    int weight() const { return std::popcount(supp_); }

    int var() const {
        int last = 0, changes = 0;
        std::uint32_t s = supp_;
        while (s) {
            int i = std::countr_zero(s);
            s &= s - 1;
            int e = (pos_ >> i & 1) ? 1 : -1;
            if (last != 0 && e != last) ++changes;
            last = e;
        }
        return changes;
    }

    // maximum variation over completions of the zero entries by nonzero signs
    int varbar() const {
        std::vector<int> raw(n_);
        for (int i = 0; i < n_; ++i) raw[i] = entry(i);
        return varbar_raw(raw);
    }

    static int var_raw(const std::vector<int>& raw) {
        int last = 0, changes = 0;
        for (int e : raw) {
            if (e == 0) continue;
            int s = e > 0 ? 1 : -1;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    }

    static int varbar_raw(const std::vector<int>& raw) {
        // dp[s]: best variation count over completions of the prefix whose
        // last nonzero sign is s (0 = +, 1 = -); `empty` covers the prefix
        // with every entry (all zeros so far) left at zero. A zero entry may
        // take either sign or stay zero; staying zero never wins, but keeping
        // the option makes the recurrence uniform.
        const int NEG = -1 << 20;
        int dp[2] = {NEG, NEG};
        bool empty = true;
        for (int e : raw) {
            bool allowed[2] = {e >= 0, e <= 0}; // may become +, may become -
            int nd[2] = {e == 0 ? dp[0] : NEG, e == 0 ? dp[1] : NEG};
            for (int t = 0; t < 2; ++t) {
                if (!allowed[t]) continue;
                if (empty && 0 > nd[t]) nd[t] = 0;
                for (int s = 0; s < 2; ++s)
                    if (dp[s] != NEG && dp[s] + (s != t) > nd[t]) nd[t] = dp[s] + (s != t);
            }
            dp[0] = nd[0];
            dp[1] = nd[1];
            if (e != 0) empty = false;
        }
        return std::max({dp[0], dp[1], 0});
    }

    // a <. b : a is b with exactly one nonzero entry zeroed, projectively
    bool covered_by(const SignVector& b) const {
        if (n_ != b.n_) throw Error("LengthMismatch");
        if (weight() + 1 != b.weight()) return false;
        if (supp_ & ~b.supp_) return false;
        return leq(b);
    }

    // a <= b in the closure order: support(a) within support(b) and signs
    // agree on support(a) up to one global flip
    bool leq(const SignVector& b) const {
        if (n_ != b.n_) throw Error("LengthMismatch");
        if (supp_ & ~b.supp_) return false;
        std::uint32_t bp = b.pos_ & supp_;
        return bp == pos_ || bp == (supp_ & ~pos_);
    }

    // zero out position i (must be in the support); throws AllZero if that
    // was the last nonzero entry
    SignVector zeroed(int i) const {
        if (!(supp_ >> i & 1)) throw Error("NotInSupport");
        SignVector v = *this;
        v.supp_ &= ~(1u << i);
        v.pos_ &= ~(1u << i);
        if (!v.supp_) throw Error("AllZero", "zeroing the last nonzero entry");
        v.renormalize();
        return v;
    }

    // re-sign so that entry i is +; used by the pivot machinery, which fixes
    // signs at a chosen coordinate instead of at the first nonzero one
    SignVector pivoted(int i) const {
        if (!(supp_ >> i & 1)) throw Error("ZeroAtPivot");
        SignVector v = *this;
        if (!(v.pos_ >> i & 1)) v.pos_ = v.supp_ & ~v.pos_;
        return v;
    }

    std::string str() const {
        std::string s(n_, '0');
        for (int i = 0; i < n_; ++i) {
            int e = entry(i);
            if (e > 0) s[i] = '+';
            else if (e < 0) s[i] = '-';
        }
        return s;
    }

    bool operator==(const SignVector& o) const {
        return n_ == o.n_ && supp_ == o.supp_ && pos_ == o.pos_;
    }
    // weight-graded order; doubles as a topological order for the poset
    bool operator<(const SignVector& o) const {
        int wa = weight(), wb = o.weight();
        if (wa != wb) return wa < wb;
        if (supp_ != o.supp_) return supp_ < o.supp_;
        return pos_ < o.pos_;
    }

    std::uint64_t key() const { return (std::uint64_t)supp_ << 32 | pos_; }

    // all normalized sign vectors of length n with var <= m, sorted
    static std::vector<SignVector> enumerate(int n, int m) {
        if (n < 1 || n > 32) throw Error("BadRange", "need 1 <= n <= 32");
        std::vector<SignVector> out;
        std::vector<int> raw(n, 0);
        // walk all 3^n patterns; keep the normalized ones (first nonzero +)
        while (true) {
            bool nonzero = false, normal = false;
            for (int i = 0; i < n; ++i)
                if (raw[i] != 0) {
                    nonzero = true;
                    normal = raw[i] > 0;
                    break;
                }
            if (nonzero && normal && var_raw(raw) <= m) out.push_back(normalize(raw));
            int i = 0;
            for (; i < n; ++i) {
                if (raw[i] == 0) { raw[i] = 1; break; }
                if (raw[i] == 1) { raw[i] = -1; break; }
                raw[i] = 0;
            }
            if (i == n) break;
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    int n_;
    std::uint32_t supp_, pos_;

    void renormalize() {
        int first = std::countr_zero(supp_);
        if (!(pos_ >> first & 1)) pos_ = supp_ & ~pos_;
    }
};

} // namespace vartop
