#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cq {

using Vertex = std::uint32_t;

/// Fixed-universe bit vector over vertex labels {0, ..., universe-1}.
/// All set algebra is exact; two sets from different universes never compare equal.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    VertexSet(std::size_t universe, std::initializer_list<Vertex> labels)
        : VertexSet(universe) {
        for (Vertex v : labels) set(v);
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    // Low 'universe' bits of 'mask'; convenience for universes <= 64.
    static VertexSet from_mask(std::uint64_t mask, std::size_t universe) {
        VertexSet s(universe);
        if (universe > 0) s.words_[0] = mask;
        s.trim();
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(Vertex v) const {
        return v < universe_ && (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void set(Vertex v) {
        check(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void reset(Vertex v) {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(*this);
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    bool operator==(const VertexSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // Smallest member >= from; universe() if none.
    Vertex next(Vertex from = 0) const {
        if (from >= universe_) return static_cast<Vertex>(universe_);
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] >> (from & 63);
        if (w) return from + static_cast<Vertex>(std::countr_zero(w));
        for (++wi; wi < words_.size(); ++wi)
            if (words_[wi]) return static_cast<Vertex>(wi * 64 + std::countr_zero(words_[wi]));
        return static_cast<Vertex>(universe_);
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f(static_cast<Vertex>(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> labels() const {
        std::vector<Vertex> out;
        out.reserve(count());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    // Valid only for universes <= 64.
    std::uint64_t to_mask() const {
        if (universe_ > 64) throw std::logic_error("VertexSet::to_mask: universe > 64");
        return words_.empty() ? 0 : words_[0];
    }

private:
    void check(Vertex v) const {
        if (v >= universe_) throw std::out_of_range("VertexSet: label " + std::to_string(v) +
                                                    " outside universe " + std::to_string(universe_));
    }
    void trim() {
        if (universe_ % 64 && !words_.empty())
            words_.back() &= (~std::uint64_t{0}) >> (64 - universe_ % 64);
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace cq
