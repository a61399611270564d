#ifndef CUBICCOVER_EDGE_SET_HPP
#define CUBICCOVER_EDGE_SET_HPP

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace cubiccover {

/// Fixed-width bit vector over edge indices.
///
/// Every subgraph the library handles (perfect matchings, cores, cycles,
/// uncovered sets) is an EdgeSet over the edge indices of one Graph. The
/// width is fixed so that the set algebra never allocates.
class EdgeSet {
public:
    static constexpr int capacity = 192;
    static constexpr int words = capacity / 64;

    constexpr EdgeSet() = default;

    static EdgeSet first_n(int n)
    {
        assert(n >= 0 && n <= capacity);
        EdgeSet s;
        for (int w = 0; w < words; ++w) {
            int lo = w * 64;
            if (n >= lo + 64)
                s.bits_[w] = ~std::uint64_t{0};
            else if (n > lo)
                s.bits_[w] = (std::uint64_t{1} << (n - lo)) - 1;
        }
        return s;
    }

    template <typename Range>
    static EdgeSet of(const Range& indices)
    {
        EdgeSet s;
        for (int i : indices)
            s.set(i);
        return s;
    }

    static EdgeSet of(std::initializer_list<int> indices)
    {
        EdgeSet s;
        for (int i : indices)
            s.set(i);
        return s;
    }

    void set(int i)
    {
        assert(i >= 0 && i < capacity);
        bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i)
    {
        assert(i >= 0 && i < capacity);
        bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    [[nodiscard]] bool test(int i) const
    {
        assert(i >= 0 && i < capacity);
        return (bits_[i >> 6] >> (i & 63)) & 1U;
    }

    [[nodiscard]] int count() const
    {
        int c = 0;
        for (auto w : bits_)
            c += std::popcount(w);
        return c;
    }
    [[nodiscard]] bool empty() const
    {
        for (auto w : bits_)
            if (w != 0)
                return false;
        return true;
    }
    [[nodiscard]] bool any() const { return !empty(); }

    /// Lowest member, or -1 when empty.
    [[nodiscard]] int first() const
    {
        for (int w = 0; w < words; ++w)
            if (bits_[w] != 0)
                return w * 64 + std::countr_zero(bits_[w]);
        return -1;
    }

    /// Lowest member strictly greater than i, or -1.
    [[nodiscard]] int next(int i) const
    {
        ++i;
        if (i >= capacity)
            return -1;
        int w = i >> 6;
        std::uint64_t cur = bits_[w] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (cur != 0)
                return w * 64 + std::countr_zero(cur);
            if (++w == words)
                return -1;
            cur = bits_[w];
        }
    }

    [[nodiscard]] bool subset_of(const EdgeSet& o) const
    {
        for (int w = 0; w < words; ++w)
            if ((bits_[w] & ~o.bits_[w]) != 0)
                return false;
        return true;
    }
    [[nodiscard]] bool intersects(const EdgeSet& o) const
    {
        for (int w = 0; w < words; ++w)
            if ((bits_[w] & o.bits_[w]) != 0)
                return true;
        return false;
    }

    EdgeSet& operator|=(const EdgeSet& o)
    {
        for (int w = 0; w < words; ++w)
            bits_[w] |= o.bits_[w];
        return *this;
    }
    EdgeSet& operator&=(const EdgeSet& o)
    {
        for (int w = 0; w < words; ++w)
            bits_[w] &= o.bits_[w];
        return *this;
    }
    EdgeSet& operator^=(const EdgeSet& o)
    {
        for (int w = 0; w < words; ++w)
            bits_[w] ^= o.bits_[w];
        return *this;
    }
    EdgeSet& operator-=(const EdgeSet& o)
    {
        for (int w = 0; w < words; ++w)
            bits_[w] &= ~o.bits_[w];
        return *this;
    }

    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
    friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
    friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }
    friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

    /// Ascending member list.
    [[nodiscard]] std::vector<int> indices() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int i = first(); i >= 0; i = next(i))
            out.push_back(i);
        return out;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (int w = 0; w < words; ++w) {
            std::uint64_t cur = bits_[w];
            while (cur != 0) {
                f(w * 64 + std::countr_zero(cur));
                cur &= cur - 1;
            }
        }
    }

    [[nodiscard]] std::size_t hash() const
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : bits_)
            h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
        return static_cast<std::size_t>(h);
    }

private:
    std::array<std::uint64_t, words> bits_{};
};

/// Lexicographic order on the ascending index sequences of two sets.
inline bool lex_less(const EdgeSet& a, const EdgeSet& b)
{
    int d = (a ^ b).first();
    if (d < 0)
        return false;
    // Below d the sequences agree. The set holding d is smaller unless the
    // other set has nothing above d, in which case the other one is a prefix.
    if (a.test(d))
        return b.next(d) >= 0;
    return a.next(d) < 0;
}

struct EdgeSetHash {
    std::size_t operator()(const EdgeSet& s) const { return s.hash(); }
};

} // namespace cubiccover

#endif
