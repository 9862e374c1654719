#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pgroup {

// Dense bit set over element indices 0..n-1. Groups stay small enough
// (hard cap 80000) that a flat word array is the right representation.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t universe() const { return n_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    // true iff o is a subset of *this
    bool contains(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (o.w_[i] & ~w_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
                f(static_cast<std::int32_t>((wi << 6) + b));
                w &= w - 1;
            }
        }
    }

    std::vector<std::int32_t> to_vector() const {
        std::vector<std::int32_t> v;
        v.reserve(count());
        for_each([&](std::int32_t i) { v.push_back(i); });
        return v;
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto w : w_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h ^ n_);
    }

    // Orders equal-sized sets by their ascending member lists: the set owning
    // the lowest index at the first point of difference comes first.
    static bool lex_less(const Bitset& a, const Bitset& b) {
        for (std::size_t i = 0; i < a.w_.size(); ++i) {
            std::uint64_t d = a.w_[i] ^ b.w_[i];
            if (d) return a.w_[i] & (d & ~(d - 1));
        }
        return false;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace pgroup
