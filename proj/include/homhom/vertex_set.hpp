#ifndef HOMHOM_VERTEX_SET_HPP
#define HOMHOM_VERTEX_SET_HPP

#include <cassert>
#include <cstdint>
#include <vector>

namespace homhom {

using Vertex = int;

// Fixed-universe bitset over vertices 0..n-1. Sized for graphs up to the
// power cap (a few thousand vertices); one word in the common small case.
class VertexSet {
public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool test(Vertex v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
    void set(Vertex v) { w_[v >> 6] |= uint64_t(1) << (v & 63); }
    void reset(Vertex v) { w_[v >> 6] &= ~(uint64_t(1) << (v & 63)); }

    void clear() {
        for (auto& x : w_) x = 0;
    }

    void fill() {
        for (auto& x : w_) x = ~uint64_t(0);
        trim();
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    bool none() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto x : w_) c += __builtin_popcountll(x);
        return c;
    }

    // Smallest member, or -1 when empty.
    Vertex first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return Vertex(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }

    // Smallest member > v, or -1.
    Vertex next(Vertex v) const {
        int i = (v + 1) >> 6;
        if (i >= (int)w_.size()) return -1;
        uint64_t word = w_[i] & (~uint64_t(0) << ((v + 1) & 63));
        while (true) {
            if (word) return Vertex(i * 64 + __builtin_ctzll(word));
            if (++i >= (int)w_.size()) return -1;
            word = w_[i];
        }
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        for (Vertex v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    void trim() {
        int r = n_ & 63;
        if (r && !w_.empty()) w_.back() &= (uint64_t(1) << r) - 1;
    }

    int n_;
    std::vector<uint64_t> w_;
};

} // namespace homhom

#endif
