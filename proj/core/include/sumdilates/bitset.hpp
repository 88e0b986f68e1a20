#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sumdilates {

/// Fixed-width dynamic bitset used for adjacency rows of bipartite graphs.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : words_) {
            if (w) return true;
        }
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~o.words_[i]) return false;
        }
        return true;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    /// popcount(a & b) without materializing the intersection.
    static std::size_t and_count(const Bitset& a, const Bitset& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
        }
        return c;
    }

    /// First set index at or after `from`; size() when exhausted.
    std::size_t next_set(std::size_t from) const {
        if (from >= nbits_) return nbits_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return nbits_;
            w = words_[wi];
        }
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each_set([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Compares two index sets as ascending sequences (a prefix sorts before its
/// extensions). Used for deterministic tie-breaking; both sets must have the
/// same width.
inline int set_compare(const Bitset& a, const Bitset& b) {
    const auto& aw = a.words();
    const auto& bw = b.words();
    for (std::size_t i = 0; i < aw.size(); ++i) {
        const std::uint64_t diff = aw[i] ^ bw[i];
        if (!diff) continue;
        const int bit = std::countr_zero(diff);
        const bool in_a = (aw[i] >> bit) & 1u;
        // idx = first index where membership differs. The set containing idx
        // is smaller iff the other set still has a later element; otherwise
        // the other set is a strict prefix and sorts first.
        const std::uint64_t mask_above = bit == 63 ? 0 : (~std::uint64_t(0) << (bit + 1));
        const auto& other = in_a ? bw : aw;
        bool other_has_later = (other[i] & mask_above) != 0;
        for (std::size_t j = i + 1; !other_has_later && j < aw.size(); ++j) {
            other_has_later = other[j] != 0;
        }
        if (in_a) return other_has_later ? -1 : 1;
        return other_has_later ? 1 : -1;
    }
    return 0;
}

} // namespace sumdilates
