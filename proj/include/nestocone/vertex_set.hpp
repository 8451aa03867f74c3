#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace nestocone {

/// Ground-set elements are 1-based integers.
using Vertex = int;

inline constexpr int kMaxVertices = 63;

/**
 * A finite subset of {1, ..., 63} stored as a bitmask (bit v-1 holds v).
 *
 * Every combinatorial object in the library (tubes, blocks, roots) is a
 * VertexSet, so set algebra is a handful of word operations.
 */
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet from_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }
    static constexpr VertexSet singleton(Vertex v) { return from_bits(std::uint64_t{1} << (v - 1)); }
    /// {1, ..., n}
    static constexpr VertexSet range(int n) {
        return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    /// Throws InputError on elements outside [1, kMaxVertices].
    static VertexSet of(std::initializer_list<Vertex> vs);
    static VertexSet from_vector(const std::vector<Vertex>& vs);

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(Vertex v) const { return v >= 1 && v <= kMaxVertices && ((bits_ >> (v - 1)) & 1U); }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool strict_subset_of(VertexSet o) const { return subset_of(o) && bits_ != o.bits_; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    /// Smallest element; undefined on the empty set.
    constexpr Vertex min() const { return std::countr_zero(bits_) + 1; }
    constexpr Vertex max() const { return 64 - std::countl_zero(bits_); }

    constexpr VertexSet operator|(VertexSet o) const { return from_bits(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return from_bits(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return from_bits(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr VertexSet with(Vertex v) const { return *this | singleton(v); }
    constexpr VertexSet without(Vertex v) const { return *this - singleton(v); }

    template <class F>
    constexpr void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b) + 1);
    }

    std::vector<Vertex> to_vector() const;
    /// Compact label: "145" when all elements are single digits, "{1,4,10}" otherwise.
    std::string label() const;

    friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Canonical order: by size, then lexicographically on the sorted element list.
constexpr bool canonical_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    // Both sets agree below the lowest differing element; whoever owns it is smaller.
    return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct CanonicalLess {
    constexpr bool operator()(VertexSet a, VertexSet b) const { return canonical_less(a, b); }
};

void sort_canonical(std::vector<VertexSet>& sets);

}  // namespace nestocone

template <>
struct std::hash<nestocone::VertexSet> {
    std::size_t operator()(nestocone::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
