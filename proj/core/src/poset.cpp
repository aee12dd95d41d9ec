#include "wmcs/poset.hpp"

#include <unordered_map>

#include "wmcs/rational.hpp"

namespace wmcs {

namespace {

std::unordered_map<std::string, std::size_t> index_labels(const std::vector<std::string>& labels) {
    std::unordered_map<std::string, std::size_t> idx;
    idx.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!idx.emplace(labels[i], i).second) {
            throw DuplicateLabelError("duplicate element label: " + labels[i]);
        }
    }
    return idx;
}

}  // namespace

void Poset::finalize() {
    const std::size_t n = labels_.size();
    down_.assign(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a) {
        if (!up_[a].test(a)) throw CycleError("order relation is not reflexive");
        for (std::size_t b = up_[a].first(); b < n; b = up_[a].next(b + 1)) {
            if (a != b && up_[b].test(a)) {
                throw CycleError("antisymmetry violated between '" + labels_[a] + "' and '" +
                                 labels_[b] + "'");
            }
            down_[b].set(a);
        }
    }
}

Poset Poset::from_relation(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& pairs,
                           std::size_t max_elements) {
    if (labels.size() > max_elements) {
        throw SizeLimitError("poset of " + std::to_string(labels.size()) +
                             " elements exceeds cap " + std::to_string(max_elements));
    }
    auto idx = index_labels(labels);
    const std::size_t n = labels.size();

    Poset p;
    p.labels_ = std::move(labels);
    p.up_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) p.up_[i].set(i);
    for (const auto& [a, b] : pairs) {
        auto ia = idx.find(a);
        auto ib = idx.find(b);
        if (ia == idx.end() || ib == idx.end()) {
            throw SchemaError("relation pair references unknown label: " + a + " <= " + b);
        }
        p.up_[ia->second].set(ib->second);
    }
    // transitive closure, word-parallel Warshall
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (p.up_[i].test(k)) p.up_[i] |= p.up_[k];
        }
    }
    p.finalize();
    return p;
}

Poset Poset::chain(std::vector<std::string> labels) {
    const std::size_t n = labels.size();
    Poset p;
    p.labels_ = std::move(labels);
    index_labels(p.labels_);  // duplicate check
    p.up_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) p.up_[i].set(j);
    }
    p.finalize();
    p.lattice_ = true;
    return p;
}

Poset Poset::antichain(std::vector<std::string> labels) {
    const std::size_t n = labels.size();
    Poset p;
    p.labels_ = std::move(labels);
    index_labels(p.labels_);
    p.up_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) p.up_[i].set(i);
    p.finalize();
    return p;
}

Poset Poset::product(const Poset& a, const Poset& b, std::size_t max_elements) {
    const std::size_t n = a.size() * b.size();
    if (n > max_elements || (b.size() != 0 && n / b.size() != a.size())) {
        throw SizeLimitError("product poset of " + std::to_string(a.size()) + "*" +
                             std::to_string(b.size()) + " elements exceeds cap " +
                             std::to_string(max_elements));
    }
    Poset p;
    p.labels_.reserve(n);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            p.labels_.push_back("(" + a.label(i) + "," + b.label(j) + ")");
        }
    }
    p.up_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            Bitset& row = p.up_[i * b.size() + j];
            const Bitset& ua = a.upset(i);
            const Bitset& ub = b.upset(j);
            for (std::size_t i2 = ua.first(); i2 < a.size(); i2 = ua.next(i2 + 1)) {
                for (std::size_t j2 = ub.first(); j2 < b.size(); j2 = ub.next(j2 + 1)) {
                    row.set(i2 * b.size() + j2);
                }
            }
        }
    }
    p.finalize();
    return p;
}

std::optional<std::size_t> Poset::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> Poset::join(std::size_t a, std::size_t b) const {
    Bitset uppers = up_[a] & up_[b];
    const std::size_t n = size();
    for (std::size_t c = uppers.first(); c < n; c = uppers.next(c + 1)) {
        if (uppers.is_subset_of(up_[c])) return c;  // c is below every common upper bound
    }
    return std::nullopt;
}

std::optional<std::size_t> Poset::meet(std::size_t a, std::size_t b) const {
    Bitset lowers = down_[a] & down_[b];
    const std::size_t n = size();
    for (std::size_t c = lowers.first(); c < n; c = lowers.next(c + 1)) {
        if (lowers.is_subset_of(down_[c])) return c;
    }
    return std::nullopt;
}

bool Poset::is_lattice() const {
    if (lattice_) return *lattice_;
    bool ok = true;
    for (std::size_t a = 0; a < size() && ok; ++a) {
        for (std::size_t b = a + 1; b < size() && ok; ++b) {
            ok = join(a, b).has_value() && meet(a, b).has_value();
        }
    }
    lattice_ = ok;
    return ok;
}

std::optional<std::size_t> Poset::top() const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (down_[i].count() == size()) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> Poset::bottom() const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (up_[i].count() == size()) return i;
    }
    return std::nullopt;
}

Poset Poset::dual() const {
    Poset d;
    d.labels_ = labels_;
    d.up_ = down_;
    d.down_ = up_;
    d.lattice_ = lattice_;
    return d;
}

Bitset Poset::subset_of(const std::vector<std::string>& labels) const {
    Bitset s(size());
    for (const auto& l : labels) {
        auto i = index_of(l);
        if (!i) throw SchemaError("unknown element label: " + l);
        s.set(*i);
    }
    return s;
}

Poset unit_grid_chain(long long den) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(den) + 1);
    for (long long k = 0; k <= den; ++k) labels.push_back(Rational(k, den).str());
    return Poset::chain(std::move(labels));
}

}  // namespace wmcs
