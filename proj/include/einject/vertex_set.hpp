#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace einject {

using Vertex = std::uint32_t;

// Fixed-capacity bitset sized at runtime; one per adjacency row.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t capacity)
        : words_((capacity + 63) / 64, 0), capacity_(capacity) {}

    std::size_t capacity() const { return capacity_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    // true if (*this & o) has a member other than `skip`
    bool intersects_except(const VertexSet& o, std::size_t skip) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i] & o.words_[i];
            if (i == (skip >> 6)) w &= ~(std::uint64_t{1} << (skip & 63));
            if (w) return true;
        }
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& subtract(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    bool operator==(const VertexSet&) const = default;

    // Calls f(v) for members in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

private:
    std::vector<std::uint64_t> words_;
    std::size_t capacity_ = 0;
};

}  // namespace einject
