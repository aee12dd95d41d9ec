#include "wmcs/bitset.hpp"

#include <bit>

#include "wmcs/errors.hpp"

namespace wmcs {

std::size_t Bitset::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

std::size_t Bitset::next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] >> (from & 63);
    if (w) return from + std::countr_zero(w);
    for (++wi; wi < words_.size(); ++wi) {
        if (words_[wi]) return (wi << 6) + std::countr_zero(words_[wi]);
    }
    return size_;
}

bool Bitset::is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
}

bool Bitset::intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & o.words_[i]) return true;
    }
    return false;
}

Bitset Bitset::operator&(const Bitset& o) const {
    Bitset r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
}

Bitset Bitset::operator|(const Bitset& o) const {
    Bitset r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
}

Bitset Bitset::operator-(const Bitset& o) const {
    Bitset r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
    return r;
}

Bitset Bitset::complement() const {
    Bitset r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    // mask tail bits beyond size_
    std::size_t tail = size_ & 63;
    if (tail && !r.words_.empty()) {
        r.words_.back() &= (std::uint64_t(1) << tail) - 1;
    }
    return r;
}

Bitset& Bitset::operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

bool Bitset::operator<(const Bitset& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
    }
    return false;
}

std::vector<std::size_t> Bitset::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = first(); i < size_; i = next(i + 1)) out.push_back(i);
    return out;
}

std::string Bitset::to_string() const {
    std::string s = "{";
    bool sep = false;
    for (std::size_t i = first(); i < size_; i = next(i + 1)) {
        if (sep) s += ",";
        s += std::to_string(i);
        sep = true;
    }
    return s + "}";
}

std::size_t Bitset::hash() const {
    std::size_t h = size_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

bool for_each_subset(const Bitset& universe, const std::function<bool(const Bitset&)>& fn) {
    auto members = universe.indices();
    const std::size_t k = members.size();
    const std::size_t n = universe.size();
    if (k >= 32) throw SizeLimitError("subset enumeration over " + std::to_string(k) + " elements");
    // Enumerates by member rank so the cost is 2^|universe|, not 2^n.
    for (std::uint64_t mask = 0;; ++mask) {
        Bitset s(n);
        for (std::size_t b = 0; b < k; ++b) {
            if ((mask >> b) & 1) s.set(members[b]);
        }
        if (!fn(s)) return false;
        if (mask + 1 == (std::uint64_t(1) << k)) break;
    }
    return true;
}

}  // namespace wmcs
