#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace strongdom {

// Subset of vertex ids, backed by a 64-bit mask. Every routine that hands
// sets around (solvers, predicates, replay) therefore works on graphs with
// at most 64 vertices; graph construction itself has no such cap.
struct VertexSet {
    std::uint64_t bits = 0;

    static constexpr int max_vertices = 64;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t raw) : bits(raw) {}

    static VertexSet of(std::initializer_list<int> ids) {
        VertexSet s;
        for (int v : ids) s.add(v);
        return s;
    }

    // All ids in [0, n).
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(int v) const { return (bits >> v) & 1u; }
    constexpr void add(int v) { bits |= std::uint64_t{1} << v; }
    constexpr void remove(int v) { bits &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet with(int v) const {
        VertexSet s = *this;
        s.add(v);
        return s;
    }
    constexpr VertexSet without(int v) const {
        VertexSet s = *this;
        s.remove(v);
        return s;
    }

    constexpr bool empty() const { return bits == 0; }
    int count() const { return std::popcount(bits); }

    constexpr bool subset_of(VertexSet other) const { return (bits & ~other.bits) == 0; }

    std::vector<int> to_vector() const {
        std::vector<int> ids;
        ids.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t b = bits; b != 0; b &= b - 1)
            ids.push_back(std::countr_zero(b));
        return ids;
    }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (int v : to_vector()) {
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
        }
        return out + "}";
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }
};

// Lexicographic order on the ascending id sequences of the two sets,
// e.g. {0,5} < {1,2} and {0} < {0,2}.
inline bool lex_less(VertexSet a, VertexSet b) {
    if (a.bits == b.bits) return false;
    int m = std::countr_zero(a.bits ^ b.bits);
    std::uint64_t above = (m == 63) ? 0 : (~std::uint64_t{0} << (m + 1));
    if (a.contains(m)) return (b.bits & above) != 0;
    return (a.bits & above) == 0;
}

} // namespace strongdom
