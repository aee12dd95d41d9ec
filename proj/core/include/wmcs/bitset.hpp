#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace wmcs {

/// Fixed-width dynamic bitset used for subsets of an indexed ground set.
/// Indices run from 0 to size()-1; iteration is always in ascending index
/// order, which is the canonical reporting order everywhere in the library.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    static Bitset full(std::size_t n) {
        Bitset b(n);
        for (std::size_t i = 0; i < n; ++i) b.set(i);
        return b;
    }
    static Bitset single(std::size_t n, std::size_t i) {
        Bitset b(n);
        b.set(i);
        return b;
    }
    static Bitset of(std::size_t n, std::initializer_list<std::size_t> idx) {
        Bitset b(n);
        for (auto i : idx) b.set(i);
        return b;
    }

    std::size_t size() const { return size_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t(1) << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }
    std::size_t count() const;

    /// Smallest set index, or size() when empty.
    std::size_t first() const { return next(0); }
    /// Smallest set index >= from, or size() when exhausted.
    std::size_t next(std::size_t from) const;

    bool is_subset_of(const Bitset& o) const;
    bool intersects(const Bitset& o) const;

    Bitset operator&(const Bitset& o) const;
    Bitset operator|(const Bitset& o) const;
    Bitset operator-(const Bitset& o) const;  // set difference
    Bitset complement() const;

    Bitset& operator&=(const Bitset& o);
    Bitset& operator|=(const Bitset& o);

    bool operator==(const Bitset& o) const { return size_ == o.size_ && words_ == o.words_; }
    /// Lexicographic on the word representation; a stable total order for
    /// canonical sorting of subset families.
    bool operator<(const Bitset& o) const;

    std::vector<std::size_t> indices() const;
    std::string to_string() const;  // e.g. "{0,3,5}"

    std::size_t hash() const;

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

/// Visits every subset of `universe` (including the empty set), ascending in
/// the induced word order. `fn` returns false to stop early; the function
/// returns false iff it was stopped.
bool for_each_subset(const Bitset& universe, const std::function<bool(const Bitset&)>& fn);

}  // namespace wmcs
