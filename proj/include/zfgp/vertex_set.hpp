#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace zfgp {

using Vertex = int;

/// Fixed-capacity vertex set over indices 0..63 backed by a single machine word.
class VertexSet {
public:
    static constexpr int kCapacity = 64;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }

    /// {0, 1, ..., n-1}
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static VertexSet from_range(const std::vector<Vertex>& vs) {
        VertexSet s;
        for (Vertex v : vs) s.insert(v);
        return s;
    }

    void insert(Vertex v) { bits_ |= bit(v); }
    void erase(Vertex v) { bits_ &= ~bit(v); }
    constexpr bool contains(Vertex v) const {
        return v >= 0 && v < kCapacity && ((bits_ >> v) & 1U) != 0;
    }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint64_t bits() const { return bits_; }

    /// Lowest member; -1 when empty.
    constexpr Vertex first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    constexpr bool operator==(const VertexSet&) const = default;

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for (Vertex v : *this) out.push_back(v);
        return out;
    }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    static std::uint64_t bit(Vertex v) {
        if (v < 0 || v >= kCapacity)
            throw std::out_of_range("vertex index " + std::to_string(v) + " outside set capacity");
        return std::uint64_t{1} << v;
    }

    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted member lists ({0,5} < {1,2}).
inline bool lex_less(VertexSet a, VertexSet b) {
    std::uint64_t x = a.bits(), y = b.bits();
    while (x != 0 && y != 0) {
        int i = std::countr_zero(x), j = std::countr_zero(y);
        if (i != j) return i < j;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

}  // namespace zfgp
