#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace mci {

// Set of vertex indices over a fixed universe 0..n-1, stored as a bitset.
// Value semantics throughout; two sets may only be combined when they share
// the same universe size.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
        assert(universe >= 0);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.add(v);
        return s;
    }
    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    int universe() const { return n_; }
    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool contains(int v) const {
        assert(v >= 0 && v < n_);
        return (w_[v >> 6] >> (v & 63)) & 1u;
    }
    void add(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void remove(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // Smallest member, or -1 when empty.
    int first() const { return next(0); }

    // Smallest member >= from, or -1.
    int next(int from) const {
        if (from >= n_) return -1;
        std::size_t i = from >> 6;
        std::uint64_t w = w_[i] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
            if (++i >= w_.size()) return -1;
            w = w_[i];
        }
    }

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        const_iterator() = default;
        const_iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        const_iterator& operator++() {
            v_ = s_->next(v_ + 1);
            return *this;
        }
        const_iterator operator++(int) {
            auto c = *this;
            ++*this;
            return c;
        }
        friend bool operator==(const_iterator a, const_iterator b) { return a.v_ == b.v_; }
        friend bool operator!=(const_iterator a, const_iterator b) { return a.v_ != b.v_; }

    private:
        const VertexSet* s_ = nullptr;
        int v_ = -1;
    };

    const_iterator begin() const { return {this, first()}; }
    const_iterator end() const { return {this, -1}; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v : *this) out.push_back(v);
        return out;
    }

    // Lexicographic order on the ascending element sequence ({1} < {1,2} < {2}).
    static int lex_compare(const VertexSet& a, const VertexSet& b) {
        assert(a.n_ == b.n_);
        int x = a.first(), y = b.first();
        while (x != -1 && y != -1) {
            if (x != y) return x < y ? -1 : 1;
            x = a.next(x + 1);
            y = b.next(y + 1);
        }
        if (x == y) return 0;
        return x == -1 ? -1 : 1;
    }

    struct Hash {
        std::size_t operator()(const VertexSet& s) const {
            std::uint64_t h = 1469598103934665603ull;
            for (auto w : s.w_) {
                h ^= w;
                h *= 1099511628211ull;
            }
            return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(s.n_));
        }
    };

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace mci
