#include "neighsum/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace neighsum {

SparseIntMatrix::SparseIntMatrix(std::int64_t size) : size_(size) {
    if (size < 0) throw std::invalid_argument("SparseIntMatrix: negative size");
}

SparseIntMatrix SparseIntMatrix::from_triplets(std::int64_t size, std::vector<Triplet> triplets) {
    SparseIntMatrix m(size);
    for (const Triplet& t : triplets) {
        if (t.row < 0 || t.row >= size || t.col < 0 || t.col >= size)
            throw std::invalid_argument("SparseIntMatrix: triplet index out of range");
    }
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<Triplet> merged;
    merged.reserve(triplets.size());
    for (Triplet& t : triplets) {
        if (!merged.empty() && merged.back().row == t.row && merged.back().col == t.col) {
            merged.back().value += t.value;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const Triplet& t) { return t.value == 0; });
    m.entries_ = std::move(merged);
    return m;
}

bool SparseIntMatrix::is_symmetric() const {
    auto find = [this](std::int64_t r, std::int64_t c) -> const Int* {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{r, c},
                                   [](const Triplet& t, const std::pair<std::int64_t, std::int64_t>& k) {
                                       return t.row != k.first ? t.row < k.first : t.col < k.second;
                                   });
        if (it == entries_.end() || it->row != r || it->col != c) return nullptr;
        return &it->value;
    };
    for (const Triplet& t : entries_) {
        const Int* mirror = find(t.col, t.row);
        if (mirror == nullptr || *mirror != t.value) return false;
    }
    return true;
}

bool SparseIntMatrix::operator==(const SparseIntMatrix& other) const {
    if (size_ != other.size_ || entries_.size() != other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const Triplet& a = entries_[i];
        const Triplet& b = other.entries_[i];
        if (a.row != b.row || a.col != b.col || a.value != b.value) return false;
    }
    return true;
}

}  // namespace neighsum
