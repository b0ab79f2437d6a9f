#include "veerkit/gf2.hpp"

#include <bit>

namespace veerkit::gf2 {

bool BitVector::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

std::size_t BitVector::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::optional<std::size_t> BitVector::lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return std::nullopt;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto word = words_[w];
        while (word) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

bool EchelonBasis::add(BitVector v) {
    while (auto p = v.lowest()) {
        if (!rows_[*p]) {
            rows_[*p] = std::move(v);
            ++rank_;
            return true;
        }
        v ^= *rows_[*p];
    }
    return false;
}

bool EchelonBasis::contains(BitVector v) const {
    while (auto p = v.lowest()) {
        if (!rows_[*p]) return false;
        v ^= *rows_[*p];
    }
    return true;
}

std::size_t rank(const std::vector<BitVector>& vectors) {
    if (vectors.empty()) return 0;
    EchelonBasis b(vectors.front().size());
    for (const auto& v : vectors) b.add(v);
    return b.rank();
}

std::vector<BitVector> kernel(const std::vector<BitVector>& images, std::size_t domain) {
    std::vector<BitVector> out;
    if (images.empty()) return out;
    std::size_t n = images.front().size();
    std::vector<std::optional<std::pair<BitVector, BitVector>>> rows(n);
    for (std::size_t j = 0; j < images.size(); ++j) {
        BitVector img = images[j];
        BitVector combo = BitVector::unit(domain, j);
        bool placed = false;
        while (auto p = img.lowest()) {
            if (!rows[*p]) {
                rows[*p] = std::make_pair(std::move(img), std::move(combo));
                placed = true;
                break;
            }
            img ^= rows[*p]->first;
            combo ^= rows[*p]->second;
        }
        if (!placed) out.push_back(std::move(combo));
    }
    return out;
}

}  // namespace veerkit::gf2
