#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace balanced {

// Subset of the vertices {0, ..., n-1} of a graph, packed into a 64-bit
// mask. Everything measure-level in this library works on graphs with at
// most 64 vertices, which covers all supported constructions with room to
// spare; graph-level operations (parsing, distances, DOT) do not use it.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::uint64_t mask) : mask_(mask) {}

    static VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~0ULL : ((1ULL << n) - 1));
    }
    static VertexSet singleton(int v) { return VertexSet(1ULL << v); }
    static VertexSet from_vertices(const std::vector<int>& vs) {
        std::uint64_t m = 0;
        for (int v : vs) m |= 1ULL << v;
        return VertexSet(m);
    }

    std::uint64_t mask() const { return mask_; }
    bool empty() const { return mask_ == 0; }
    int size() const { return std::popcount(mask_); }
    bool contains(int v) const { return (mask_ >> v) & 1ULL; }
    int first() const { return std::countr_zero(mask_); }

    void insert(int v) { mask_ |= 1ULL << v; }
    void erase(int v) { mask_ &= ~(1ULL << v); }

    bool subset_of(const VertexSet& o) const { return (mask_ & ~o.mask_) == 0; }
    bool superset_of(const VertexSet& o) const { return o.subset_of(*this); }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask_ | b.mask_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & b.mask_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & ~b.mask_); }
    friend bool operator==(VertexSet a, VertexSet b) { return a.mask_ == b.mask_; }
    friend bool operator!=(VertexSet a, VertexSet b) { return a.mask_ != b.mask_; }
    friend bool operator<(VertexSet a, VertexSet b) { return a.mask_ < b.mask_; }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t m = mask_; m; m &= m - 1)
            out.push_back(std::countr_zero(m));
        return out;
    }

    // "{0,2,5}" — used in error messages and pretty output.
    std::string str() const {
        std::string s = "{";
        bool sep = false;
        for (int v : vertices()) {
            if (sep) s += ",";
            s += std::to_string(v);
            sep = true;
        }
        return s + "}";
    }

private:
    std::uint64_t mask_ = 0;
};

} // namespace balanced
