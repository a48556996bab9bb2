#pragma once

#include "hilbforest/hilbert_poly.hpp"

#include <cstdint>
#include <iterator>
#include <string>
#include <utility>

namespace hilbforest {

/// A vertex of the Hilbert tree of codimension c: the Hilbert scheme of
/// subschemes of P^n with Hilbert polynomial hp, where n = c + deg hp.
class ForestNode {
public:
    ForestNode(int codim, AdmissiblePolynomial hp);
    static ForestNode root(int codim) { return ForestNode(codim, AdmissiblePolynomial::constant(1)); }
    static ForestNode at(int codim, const PathWord& path) { return ForestNode(codim, node_at(path)); }

    int codim() const noexcept { return codim_; }
    const AdmissiblePolynomial& hp() const noexcept { return hp_; }
    int ambient() const noexcept { return codim_ + hp_.degree(); }
    int height() const noexcept { return hp_.height(); }
    PathWord path() const { return path_from_root(hp_); }

    friend auto operator<=>(const ForestNode&, const ForestNode&) = default;

private:
    int codim_;
    AdmissiblePolynomial hp_;
};

/// (plus-child in the same P^n, lift-child in P^{n+1}).
std::pair<ForestNode, ForestNode> children(const ForestNode& node);

/// Height-k path whose i-th step (application order) is L exactly when bit
/// k-1-i of `index` is set.
PathWord path_for_index(int height, std::uint64_t index);

/// The 2^k vertices at height k of the codimension-c tree, in binary-path
/// order (index 0 is P^k(1), index 2^k - 1 is L^k(1)).
class HeightRange {
public:
    static constexpr int kMaxHeight = 40;

    HeightRange(int codim, int height);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = ForestNode;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const HeightRange* range, std::uint64_t index) : range_(range), index_(index) {}

        ForestNode operator*() const { return ForestNode::at(range_->codim_, path_for_index(range_->height_, index_)); }
        iterator& operator++() {
            ++index_;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++index_;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

    private:
        const HeightRange* range_ = nullptr;
        std::uint64_t index_ = 0;
    };

    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, size()); }
    std::uint64_t size() const noexcept { return std::uint64_t{1} << height_; }
    int codim() const noexcept { return codim_; }
    int height() const noexcept { return height_; }

private:
    int codim_;
    int height_;
};

inline HeightRange vertices_at_height(int codim, int height) { return HeightRange(codim, height); }

}  // namespace hilbforest
