#ifndef BSV_BITS_HPP
#define BSV_BITS_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace bsv {

inline constexpr int kMaxVertices = 512;
inline constexpr int kRowWords = kMaxVertices / 64;

// Fixed-width set of vertex indices, one adjacency row or candidate set.
// Bits above the graph order must stay zero; all operations preserve that.
struct VertexSet {
    std::array<std::uint64_t, kRowWords> w{};

    static VertexSet full(int n) {
        VertexSet s;
        for (int i = 0; i < n; i++) s.set(i);
        return s;
    }
    static VertexSet of(std::initializer_list<int> xs) {
        VertexSet s;
        for (int x : xs) s.set(x);
        return s;
    }

    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kRowWords; i++)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    bool contains(const VertexSet& o) const {
        for (int i = 0; i < kRowWords; i++)
            if (o.w[i] & ~w[i]) return false;
        return true;
    }

    // Lowest set bit, or -1 when empty.
    int first() const {
        for (int i = 0; i < kRowWords; i++)
            if (w[i]) return i * 64 + std::countr_zero(w[i]);
        return -1;
    }
    // Lowest set bit strictly greater than i, or -1.
    int next(int i) const {
        i++;
        int wi = i >> 6;
        if (wi >= kRowWords) return -1;
        std::uint64_t cur = w[wi] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (cur) return wi * 64 + std::countr_zero(cur);
            if (++wi == kRowWords) return -1;
            cur = w[wi];
        }
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kRowWords; i++) w[i] &= o.w[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kRowWords; i++) w[i] |= o.w[i];
        return *this;
    }
    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < kRowWords; i++) w[i] &= ~o.w[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.w == b.w; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }
};

}  // namespace bsv

#endif
