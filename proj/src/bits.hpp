#pragma once

// Fixed-width bitset used by the solver hot loops. W is the number of 64-bit
// words; callers dispatch on the component size.

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "poc/graph.hpp"

namespace poc::detail {

template <std::size_t W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    void set(int i) { w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U; }

    int count() const
    {
        int c = 0;
        for (auto x : w)
            c += std::popcount(x);
        return c;
    }
    bool none() const
    {
        for (auto x : w)
            if (x)
                return false;
        return true;
    }
    bool any() const { return !none(); }

    /// Lowest set bit, -1 when empty.
    int first() const
    {
        for (std::size_t i = 0; i < W; ++i)
            if (w[i])
                return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w[i])));
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < W; ++i) {
            auto bits = w[i];
            while (bits) {
                f(static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
                bits &= bits - 1;
            }
        }
    }

    Bits operator&(const Bits& o) const
    {
        Bits r;
        for (std::size_t i = 0; i < W; ++i)
            r.w[i] = w[i] & o.w[i];
        return r;
    }
    Bits operator|(const Bits& o) const
    {
        Bits r;
        for (std::size_t i = 0; i < W; ++i)
            r.w[i] = w[i] | o.w[i];
        return r;
    }
    /// this \ o
    Bits minus(const Bits& o) const
    {
        Bits r;
        for (std::size_t i = 0; i < W; ++i)
            r.w[i] = w[i] & ~o.w[i];
        return r;
    }
    bool intersects(const Bits& o) const
    {
        for (std::size_t i = 0; i < W; ++i)
            if (w[i] & o.w[i])
                return true;
        return false;
    }
    friend bool operator==(const Bits&, const Bits&) = default;
};

template <std::size_t W>
std::vector<Bits<W>> load_rows(const Graph& g)
{
    std::vector<Bits<W>> rows(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        auto r = g.row(static_cast<int>(v));
        for (std::size_t i = 0; i < r.size() && i < W; ++i)
            rows[v].w[i] = r[i];
    }
    return rows;
}

template <std::size_t W>
Bits<W> full_bits(std::size_t n)
{
    Bits<W> b;
    for (std::size_t v = 0; v < n; ++v)
        b.set(static_cast<int>(v));
    return b;
}

template <std::size_t W>
VertexSet to_vertex_set(const Bits<W>& b, std::size_t n)
{
    return VertexSet::from_words(n, std::vector<std::uint64_t>(b.w.begin(), b.w.end()));
}

/// Calls f.template operator()<W>() with the smallest supported W that
/// holds n bits.
template <typename F>
decltype(auto) dispatch_width(std::size_t n, F&& f)
{
    if (n <= 64)
        return f.template operator()<1>();
    if (n <= 128)
        return f.template operator()<2>();
    if (n <= 256)
        return f.template operator()<4>();
    if (n <= 512)
        return f.template operator()<8>();
    throw GraphError("solver supports at most 512 vertices per component");
}

} // namespace poc::detail
