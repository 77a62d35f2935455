#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"

namespace domhg {

inline constexpr int kMaxGround = 64;

/// Subset of a ground set, one bit per element index.
class VertexSet {
public:
    constexpr VertexSet() noexcept = default;
    constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}

    static constexpr VertexSet single(int index) noexcept { return VertexSet{std::uint64_t{1} << index}; }

    /// The first `n` indices.
    static constexpr VertexSet prefix(int n) noexcept {
        return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr bool contains(int index) const noexcept { return (bits_ >> index) & 1u; }
    constexpr bool subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const noexcept { return (bits_ & other.bits_) != 0; }
    constexpr int first() const noexcept { return std::countr_zero(bits_); }
    constexpr int last() const noexcept { return 63 - std::countl_zero(bits_); }

    constexpr VertexSet with(int index) const noexcept { return VertexSet{bits_ | (std::uint64_t{1} << index)}; }
    constexpr VertexSet without(int index) const noexcept { return VertexSet{bits_ & ~(std::uint64_t{1} << index)}; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return VertexSet{a.bits_ | b.bits_}; }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return VertexSet{a.bits_ & b.bits_}; }
    /// Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return VertexSet{a.bits_ & ~b.bits_}; }
    VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }

    // Integer order of the bitmask. Hypergraph edges use CanonicalOrder instead.
    friend constexpr auto operator<=>(VertexSet, VertexSet) noexcept = default;

    /// Indices in ascending order.
    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
    }

private:
    std::uint64_t bits_ = 0;
};

/// Ascending cardinality, then ascending bitmask.
struct CanonicalOrder {
    constexpr bool operator()(VertexSet a, VertexSet b) const noexcept {
        const int sa = a.size(), sb = b.size();
        return sa != sb ? sa < sb : a.bits() < b.bits();
    }
};

/// Ordered universe of distinct labels. Copies share storage.
class GroundSet {
public:
    explicit GroundSet(std::vector<std::string> labels) {
        if (labels.empty() || labels.size() > static_cast<std::size_t>(kMaxGround))
            fail(ErrorKind::InvalidGround,
                 "ground set must have between 1 and 64 elements, got " + std::to_string(labels.size()));
        auto data = std::make_shared<Data>();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i].empty()) fail(ErrorKind::InvalidGround, "empty label");
            if (!data->index.emplace(labels[i], static_cast<int>(i)).second)
                fail(ErrorKind::DuplicateLabel, "label '" + labels[i] + "' appears twice");
        }
        data->labels = std::move(labels);
        data_ = std::move(data);
    }

    /// Labels "1".."n".
    static GroundSet range(int n) {
        if (n < 1 || n > kMaxGround) fail(ErrorKind::InvalidGround, "size out of range: " + std::to_string(n));
        std::vector<std::string> labels;
        for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
        return GroundSet(std::move(labels));
    }

    int size() const noexcept { return static_cast<int>(data_->labels.size()); }
    VertexSet full() const noexcept { return VertexSet::prefix(size()); }
    const std::string& label(int index) const { return data_->labels.at(static_cast<std::size_t>(index)); }
    const std::vector<std::string>& labels() const noexcept { return data_->labels; }

    std::optional<int> find(const std::string& label) const {
        auto it = data_->index.find(label);
        if (it == data_->index.end()) return std::nullopt;
        return it->second;
    }

    int index_of(const std::string& label) const {
        if (auto i = find(label)) return *i;
        fail(ErrorKind::OutOfGround, "label '" + label + "' is not in the ground set");
    }

    bool within(VertexSet s) const noexcept { return s.subset_of(full()); }

    void require_within(VertexSet s) const {
        if (!within(s)) fail(ErrorKind::OutOfGround, "set has bits outside a ground set of size " + std::to_string(size()));
    }

    /// The labels of `s`, in ground order, as a new ground set.
    GroundSet subset(VertexSet s) const {
        require_within(s);
        std::vector<std::string> out;
        s.for_each([&](int i) { out.push_back(label(i)); });
        return GroundSet(std::move(out));
    }

    /// Concatenation of label lists; labels must be pairwise disjoint.
    static GroundSet concat(const std::vector<GroundSet>& parts) {
        std::vector<std::string> out;
        for (const auto& p : parts) {
            for (const auto& l : p.labels()) {
                for (const auto& seen : out)
                    if (seen == l) fail(ErrorKind::OverlappingLabels, "label '" + l + "' occurs in two parts");
                out.push_back(l);
            }
        }
        return GroundSet(std::move(out));
    }

    /// Maps each index of `this` to the index of the same label in `target`.
    std::vector<int> mapping_into(const GroundSet& target) const {
        std::vector<int> map(static_cast<std::size_t>(size()));
        for (int i = 0; i < size(); ++i) {
            auto j = target.find(label(i));
            if (!j) fail(ErrorKind::GroundMismatch, "label '" + label(i) + "' missing from target ground");
            map[static_cast<std::size_t>(i)] = *j;
        }
        return map;
    }

    friend bool operator==(const GroundSet& a, const GroundSet& b) noexcept {
        return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
    }

private:
    struct Data {
        std::vector<std::string> labels;
        std::unordered_map<std::string, int> index;
    };
    std::shared_ptr<const Data> data_;
};

inline VertexSet remap(VertexSet s, const std::vector<int>& map) {
    VertexSet out;
    s.for_each([&](int i) { out = out.with(map[static_cast<std::size_t>(i)]); });
    return out;
}

/// Packs the bits of `s` that lie in `mask` into the low positions.
inline VertexSet compress(VertexSet s, VertexSet mask) {
    std::uint64_t out = 0;
    int pos = 0;
    mask.for_each([&](int i) {
        if (s.contains(i)) out |= std::uint64_t{1} << pos;
        ++pos;
    });
    return VertexSet{out};
}

}  // namespace domhg
