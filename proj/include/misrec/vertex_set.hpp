#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace misrec {

// Set of vertex ids over a fixed universe [0, n). Bitset-backed so that
// intersection/subset tests used by the oracle are word operations.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        assert(v >= 0 && v < universe_);
        return (words_[v >> 6] >> (v & 63)) & 1;
    }

    void insert(int v) {
        assert(v >= 0 && v < universe_);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        assert(v >= 0 && v < universe_);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s = full(universe_);
        return s -= *this;
    }

    bool operator==(const VertexSet&) const = default;

    // Smallest member, or -1 when empty.
    int min() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v : *this) out.push_back(v);
        return out;
    }

    // Forward iteration over members in ascending order.
    class iterator {
    public:
        iterator(const VertexSet* s, int pos) : set_(s), pos_(pos) { advance(); }
        int operator*() const { return pos_; }
        iterator& operator++() {
            ++pos_;
            advance();
            return *this;
        }
        bool operator!=(const iterator& o) const { return pos_ != o.pos_; }

    private:
        void advance() {
            const auto& w = set_->words_;
            while (pos_ < set_->universe_) {
                std::uint64_t rest = w[pos_ >> 6] >> (pos_ & 63);
                if (rest) {
                    pos_ += std::countr_zero(rest);
                    return;
                }
                pos_ = (pos_ | 63) + 1;
            }
            pos_ = set_->universe_;
        }
        const VertexSet* set_;
        int pos_;
    };

    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, universe_); }

private:
    void trim() {
        if (int r = universe_ & 63; r != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << r) - 1;
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace misrec
