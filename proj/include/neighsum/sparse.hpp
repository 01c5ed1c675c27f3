#pragma once

#include <cstdint>
#include <vector>

#include "neighsum/bigint.hpp"

namespace neighsum {

struct Triplet {
    std::int64_t row = 0;
    std::int64_t col = 0;
    Int value;
};

/// Square integer matrix in triplet form. After construction the triplet
/// list is sorted by (row, col) with duplicates merged and zeros dropped,
/// so two matrices are equal iff their triplet lists are equal.
class SparseIntMatrix {
public:
    explicit SparseIntMatrix(std::int64_t size);

    /// Builds a matrix from an arbitrary triplet list. Duplicate (row, col)
    /// pairs are summed; entries that cancel to zero are removed. The input
    /// order never influences the result.
    static SparseIntMatrix from_triplets(std::int64_t size, std::vector<Triplet> triplets);

    std::int64_t size() const { return size_; }
    const std::vector<Triplet>& entries() const { return entries_; }
    std::int64_t nonzeros() const { return static_cast<std::int64_t>(entries_.size()); }

    bool is_symmetric() const;
    bool operator==(const SparseIntMatrix& other) const;

private:
    std::int64_t size_;
    std::vector<Triplet> entries_;
};

}  // namespace neighsum
