#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace udlab {

// Fixed-size bit set over vertex indices; word-parallel intersections drive
// the counting inner loops.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    std::size_t word_count() const { return w_.size(); }
    const std::uint64_t* words() const { return w_.data(); }
    std::uint64_t* words() { return w_.data(); }

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto x : w_)
            c += std::popcount(x);
        return c;
    }

    void fill()
    {
        for (auto& x : w_)
            x = ~std::uint64_t{0};
        trim();
    }

    // All indices strictly greater than i.
    static VertexSet above(std::size_t n, std::size_t i)
    {
        VertexSet s(n);
        for (std::size_t j = i + 1; j < n; ++j)
            s.set(j);
        return s;
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& subtract(const VertexSet& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= ~o.w_[i];
        return *this;
    }

    bool operator==(const VertexSet&) const = default;

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t x = w_[wi];
            while (x) {
                f(wi * 64 + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const
    {
        std::vector<std::size_t> out;
        for_each([&](std::size_t v) { out.push_back(v); });
        return out;
    }

private:
    void trim()
    {
        if (n_ % 64 && !w_.empty())
            w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

inline std::size_t intersection_count(const VertexSet& a, const VertexSet& b)
{
    std::size_t c = 0;
    const auto* x = a.words();
    const auto* y = b.words();
    for (std::size_t i = 0; i < a.word_count(); ++i)
        c += std::popcount(x[i] & y[i]);
    return c;
}

}  // namespace udlab
