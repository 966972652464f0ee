#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace pathideal {

/// Largest vertex index a VertexSet can hold. Vertices are 1-based.
inline constexpr int kMaxVertices = 64;

/**
 * A set of 1-based vertex indices packed into one machine word.
 *
 * Vertex v lives in bit v-1. Iteration yields members in increasing order.
 * The ordering operator is the lexicographic order of the sorted member
 * lists, which is what the solvers use for tie-breaking.
 */
class VertexSet
{
public:
    class iterator
    {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
        constexpr iterator& operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int)
        {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr VertexSet(std::initializer_list<int> members)
    {
        for (int v : members)
            insert(v);
    }

    static constexpr VertexSet from_bits(std::uint64_t bits)
    {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }

    /// {1, ..., n}
    static constexpr VertexSet range(int n)
    {
        if (n <= 0)
            return {};
        if (n >= 64)
            return from_bits(~std::uint64_t{0});
        return from_bits((std::uint64_t{1} << n) - 1);
    }

    /// {lo, ..., hi}; empty when lo > hi.
    static constexpr VertexSet interval(int lo, int hi)
    {
        if (lo < 1)
            lo = 1;
        if (hi < lo)
            return {};
        return range(hi) - range(lo - 1);
    }

    template <typename Range>
    static VertexSet of(const Range& members)
    {
        VertexSet s;
        for (int v : members)
            s.insert(v);
        return s;
    }

    static constexpr bool valid_vertex(int v) { return v >= 1 && v <= kMaxVertices; }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const
    {
        return valid_vertex(v) && ((bits_ >> (v - 1)) & 1U) != 0;
    }
    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << (v - 1); }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << (v - 1)); }

    /// Smallest member; 0 when empty.
    constexpr int min() const { return empty() ? 0 : std::countr_zero(bits_) + 1; }
    /// Largest member; 0 when empty.
    constexpr int max() const { return empty() ? 0 : 64 - std::countl_zero(bits_); }

    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return from_bits(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return from_bits(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return from_bits(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator&=(VertexSet o)
    {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator-=(VertexSet o)
    {
        bits_ &= ~o.bits_;
        return *this;
    }

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

    constexpr bool operator==(const VertexSet&) const = default;

    /// Lexicographic comparison of the sorted member lists.
    friend constexpr bool operator<(VertexSet a, VertexSet b)
    {
        const std::uint64_t diff = a.bits_ ^ b.bits_;
        if (diff == 0)
            return false;
        const std::uint64_t low = diff & (~diff + 1);
        const std::uint64_t above = ~(low | (low - 1));
        if ((a.bits_ & low) != 0) {
            // a holds the first differing vertex; b is smaller only if it
            // stops before that position.
            return (b.bits_ & above) != 0;
        }
        return (a.bits_ & above) == 0;
    }
    friend constexpr bool operator>(VertexSet a, VertexSet b) { return b < a; }
    friend constexpr bool operator<=(VertexSet a, VertexSet b) { return !(b < a); }
    friend constexpr bool operator>=(VertexSet a, VertexSet b) { return !(a < b); }

    /// "{1,2,3}"
    std::string to_string() const
    {
        std::string out = "{";
        bool first = true;
        for (int v : *this) {
            if (!first)
                out += ',';
            out += std::to_string(v);
            first = false;
        }
        out += '}';
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

struct VertexSetHash
{
    std::size_t operator()(VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

/// Enumerates every subset of `universe` (including the empty set and the
/// universe itself) in increasing bit order.
template <typename Fn>
void for_each_subset(VertexSet universe, Fn&& fn)
{
    const std::uint64_t u = universe.bits();
    std::uint64_t s = 0;
    while (true) {
        fn(VertexSet::from_bits(s));
        if (s == u)
            break;
        s = (s - u) & u;
    }
}

} // namespace pathideal
