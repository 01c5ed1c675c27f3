#pragma once

#include <string>
#include <vector>

#include "neighsum/bigint.hpp"
#include "neighsum/sparse.hpp"

namespace neighsum {

enum class Boundary { flat, periodic };
enum class Neighbourhood { moore, neumann };
enum class EquationMode { sum, average };

using MultiIndex = std::vector<long>;

/// Geometry descriptor for a board: cells per axis, per-axis boundary
/// behaviour, neighbourhood kind and the equation every cell must satisfy.
///
/// Constraints enforced on construction:
///  - every axis has length >= 1, and >= 3 when periodic (shorter periodic
///    axes would duplicate neighbour edges),
///  - average mode requires a Neumann neighbourhood on an all-periodic board.
struct BoardSpec {
    std::vector<long> dims;
    std::vector<Boundary> boundary;
    Neighbourhood neighbourhood = Neighbourhood::moore;
    EquationMode mode = EquationMode::sum;

    BoardSpec(std::vector<long> dims, std::vector<Boundary> boundary,
              Neighbourhood neighbourhood, EquationMode mode);

    static BoardSpec square(long n);
    static BoardSpec rect(long m, long n);
    static BoardSpec strip(long m);
    static BoardSpec torus(long m, long n);
    static BoardSpec neumann_square(long n);
    static BoardSpec neumann_rect(long m, long n);
    static BoardSpec harmonic_torus(long m, long n);
    static BoardSpec hypercube(long n, long d);

    long dimension() const { return static_cast<long>(dims.size()); }
    long cell_count() const;
    bool all_flat() const;
    bool all_periodic() const;
};

/// A finite board of integers with explicit dimensions, stored row-major
/// (axis 0 slowest). Rendering prints row 0 at the top.
struct IntGrid {
    std::vector<long> dims;
    std::vector<Int> cells;

    IntGrid() = default;
    explicit IntGrid(std::vector<long> dims);  // zero-filled
    IntGrid(std::vector<long> dims, std::vector<Int> cells);

    long cell_count() const { return static_cast<long>(cells.size()); }
    Int& at(const MultiIndex& cell);
    const Int& at(const MultiIndex& cell) const;
    Int& at(long i, long j);              // 2-D convenience
    const Int& at(long i, long j) const;

    bool operator==(const IntGrid& other) const = default;
};

/// One failed cell equation. `expected` is the neighbour sum the equation
/// demands; `actual` is the cell value (sum mode) or degree * value
/// (average mode), so the equation holds iff expected == actual.
struct Violation {
    MultiIndex cell;
    Int expected;
    Int actual;
};

/// All cells adjacent to `cell`: differing by at most 1 in every coordinate
/// (Moore) or by exactly 1 in exactly one coordinate (Neumann), wrapping on
/// periodic axes. The cell itself is never included and no duplicates occur.
std::vector<MultiIndex> neighbors(const BoardSpec& spec, const MultiIndex& cell);

/// The neighbour-sum operator built directly from the geometry: off-diagonal
/// (i, j) = 1 iff j neighbours i, diagonal -1 (sum mode) or -degree (average
/// mode). Indices follow the vectorization convention (axis 0 fastest).
SparseIntMatrix build_operator(const BoardSpec& spec);

/// The same operator assembled from per-axis band / circulant factors via
/// Kronecker products (Moore) or Kronecker sums (Neumann) with the constant
/// shift of the corresponding closed form. Supported: Moore in any dimension,
/// Neumann for d <= 2. Must equal build_operator() entry for entry.
SparseIntMatrix operator_kronecker_form(const BoardSpec& spec);

/// Column-stacking vectorization: axis 0 runs fastest. For 2-D boards this
/// stacks columns top-down, matching the operator index convention.
std::vector<Int> vectorize(const IntGrid& grid);
IntGrid devectorize(const std::vector<Int>& v, const std::vector<long>& dims);

/// Checks every cell equation directly from the neighbour relation, without
/// any matrix machinery. Empty result iff the board satisfies its spec.
std::vector<Violation> verify_board(const IntGrid& grid, const BoardSpec& spec);

std::string render_ascii(const IntGrid& grid);

/// Linear index in vectorization order (axis 0 fastest).
long linear_index(const MultiIndex& cell, const std::vector<long>& dims);
MultiIndex from_linear_index(long index, const std::vector<long>& dims);

/// Linear index in storage order (row-major, axis 0 slowest).
long row_major_index(const MultiIndex& cell, const std::vector<long>& dims);

}  // namespace neighsum
