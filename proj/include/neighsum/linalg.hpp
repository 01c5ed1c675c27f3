#pragma once

#include <cstdint>
#include <vector>

#include "neighsum/bigint.hpp"
#include "neighsum/sparse.hpp"

namespace neighsum {

/// Canonically normalized integer basis of a rational subspace: the vectors
/// are the reduced row echelon form of the span, each scaled to a primitive
/// integer vector (entry gcd 1) with positive leading entry, listed with
/// strictly increasing pivot columns. Equal subspaces yield identical bases.
struct KernelBasis {
    std::int64_t size = 0;
    std::vector<std::vector<Int>> vectors;

    std::int64_t dimension() const { return static_cast<std::int64_t>(vectors.size()); }
    bool operator==(const KernelBasis& other) const = default;
};

/// Exact rational kernel of a square integer matrix, canonically normalized.
/// Fraction-free sparse elimination over arbitrary-precision integers; no
/// floating point anywhere on this path.
KernelBasis kernel_basis(const SparseIntMatrix& m);

std::int64_t rank(const SparseIntMatrix& m);

/// Exact matrix-vector product.
std::vector<Int> apply(const SparseIntMatrix& m, const std::vector<Int>& v);

/// True iff v is a rational linear combination of the basis vectors.
bool in_span(const KernelBasis& basis, const std::vector<Int>& v);

/// Canonical form of the span of arbitrary integer vectors (dependent or
/// unordered input is fine). Two spans are equal iff their canonical forms
/// compare equal.
KernelBasis canonical_span(std::int64_t size, const std::vector<std::vector<Int>>& vectors);

}  // namespace neighsum
