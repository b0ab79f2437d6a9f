#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace veerkit::gf2 {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
    static BitVector unit(std::size_t n, std::size_t i) {
        BitVector v(n);
        v.set(i);
        return v;
    }

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    BitVector& operator^=(const BitVector& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    bool any() const;
    std::size_t count() const;
    // Index of the lowest set bit, or nullopt for the zero vector.
    std::optional<std::size_t> lowest() const;
    std::vector<std::size_t> support() const;
    bool operator==(const BitVector&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Row-echelon basis keyed by lowest set bit; supports incremental rank and membership.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t n) : rows_(n) {}
    // Returns true if v was independent of the current span.
    bool add(BitVector v);
    bool contains(BitVector v) const;
    std::size_t rank() const { return rank_; }

private:
    std::vector<std::optional<BitVector>> rows_;
    std::size_t rank_ = 0;
};

std::size_t rank(const std::vector<BitVector>& vectors);

// Kernel of the map sending the j-th basis vector of a `domain`-dimensional
// space to images[j]. Returned vectors live in the domain.
std::vector<BitVector> kernel(const std::vector<BitVector>& images, std::size_t domain);

}  // namespace veerkit::gf2
