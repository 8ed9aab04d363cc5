// chaindd: unsigned arbitrary-precision integers for solution counting.
//
// Counting satisfying assignments needs exact values up to 2^n with n in the
// thousands, so the counter cannot use machine words.  Only the operations
// the counting recurrences need are provided: add, subtract (a >= b),
// shift-left, and decimal formatting.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chaindd {

class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v) {
        if (v != 0) limbs_.push_back(v);
    }

    static BigUint pow2(std::uint64_t e) {
        BigUint r{1};
        r.shl_inplace(e);
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }

    bool fits_u64() const { return limbs_.size() <= 1; }

    std::uint64_t to_u64() const {
        if (limbs_.size() > 1) throw std::overflow_error("BigUint: value exceeds 64 bits");
        return limbs_.empty() ? 0 : limbs_[0];
    }

    BigUint& operator+=(const BigUint& o) {
        if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            carry += limbs_[i];
            if (i < o.limbs_.size()) carry += o.limbs_[i];
            limbs_[i] = static_cast<std::uint64_t>(carry);
            carry >>= 64;
        }
        if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
        return *this;
    }

    // Requires *this >= o.
    BigUint& operator-=(const BigUint& o) {
        if (cmp(o) < 0) throw std::underflow_error("BigUint: negative result");
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            unsigned __int128 sub = (i < o.limbs_.size() ? o.limbs_[i] : 0);
            sub += (borrow < 0 ? 1 : 0);
            if (limbs_[i] >= sub) {
                limbs_[i] -= static_cast<std::uint64_t>(sub);
                borrow = 0;
            } else {
                const unsigned __int128 top = static_cast<unsigned __int128>(1) << 64;
                limbs_[i] = static_cast<std::uint64_t>(top + limbs_[i] - sub);
                borrow = -1;
            }
        }
        trim();
        return *this;
    }

    void shl_inplace(std::uint64_t bits) {
        if (is_zero() || bits == 0) return;
        const std::size_t words = bits / 64;
        const unsigned rem = static_cast<unsigned>(bits % 64);
        std::vector<std::uint64_t> out(limbs_.size() + words + 1, 0);
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            out[i + words] |= rem ? (limbs_[i] << rem) : limbs_[i];
            if (rem) out[i + words + 1] |= limbs_[i] >> (64 - rem);
        }
        limbs_ = std::move(out);
        trim();
    }

    BigUint shl(std::uint64_t bits) const {
        BigUint r = *this;
        r.shl_inplace(bits);
        return r;
    }

    int cmp(const BigUint& o) const {
        if (limbs_.size() != o.limbs_.size())
            return limbs_.size() < o.limbs_.size() ? -1 : 1;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
        }
        return 0;
    }

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return a.cmp(b) != 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return a.cmp(b) <= 0; }

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::uint64_t> work = limbs_;
        std::string out;
        // Repeated long division by 10^19 (largest power of ten in a limb).
        constexpr std::uint64_t chunk = 10000000000000000000ull;
        while (!work.empty()) {
            unsigned __int128 rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                unsigned __int128 cur = (rem << 64) | work[i];
                work[i] = static_cast<std::uint64_t>(cur / chunk);
                rem = cur % chunk;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            std::string part = std::to_string(static_cast<std::uint64_t>(rem));
            if (!work.empty()) part.insert(0, 19 - part.size(), '0');
            out.insert(0, part);
        }
        return out;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint64_t> limbs_;  // little-endian base 2^64
};

}  // namespace chaindd
