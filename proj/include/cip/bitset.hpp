#ifndef CIP_BITSET_HPP
#define CIP_BITSET_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace cip {

// Fixed-capacity dynamic bitset used for adjacency rows and candidate sets
// in the clique search. Word-level ops only, no bounds checking in hot paths.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(w_.begin(), w_.end(), std::uint64_t{0}); }

    bool empty() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }

    void and_assign(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    }

    void or_assign(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    }

    void andnot_assign(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    }

    int and_count(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    // true iff every set bit of this is also set in o
    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // index of lowest set bit, -1 if none
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i) * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    // next set bit strictly after i, -1 if none
    int next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        std::size_t word = std::size_t(i) >> 6;
        std::uint64_t cur = w_[word] >> (i & 63);
        if (cur) return i + std::countr_zero(cur);
        for (++word; word < w_.size(); ++word)
            if (w_[word]) return int(word) * 64 + std::countr_zero(w_[word]);
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t word = 0; word < w_.size(); ++word) {
            std::uint64_t x = w_[word];
            while (x) {
                f(int(word) * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    bool operator==(const Bitset& o) const = default;

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace cip

#endif
