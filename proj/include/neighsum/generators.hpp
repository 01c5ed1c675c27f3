#pragma once

#include <map>
#include <utility>
#include <vector>

#include "neighsum/grid.hpp"
#include "neighsum/linalg.hpp"

namespace neighsum {

/// First row and first column of a semi-infinite board. The two sequences
/// share the corner cell, so row_seq[0] must equal col_seq[0].
struct SequencePair {
    std::vector<Int> row_seq;
    std::vector<Int> col_seq;
};

/// The two full rows and two full columns that seed an infinite board.
/// Sequences are indexed over the nonzero integers; rows a (lower, global
/// row 1) and c (upper, global row 0) run left to right, columns b (right,
/// global column 1) and d (left, global column 0) run top to bottom, with
/// positive indices below/right of the centre block. The four centre cells
/// are shared: a[1]=b[1], a[-1]=d[1], c[1]=b[-1], c[-1]=d[-1].
struct CrossSpec {
    std::map<long, Int> a;
    std::map<long, Int> b;
    std::map<long, Int> c;
    std::map<long, Int> d;
};

/// Inclusive rectangle in the infinite board's internal indexing, where the
/// two seeded rows are 0 and 1 and the two seeded columns are 0 and 1.
struct WindowBounds {
    long row_lo = 0;
    long row_hi = 0;
    long col_lo = 0;
    long col_hi = 0;
};

/// The two standard solutions on an n x n board with 6 | (n+1):
/// K1(i,j) = u(i) w(j) with u the period-6 pattern (1,1,0,-1,-1,0,...) and
/// w the period-4 pattern (1,0,-1,0,...); K2 is the transpose of K1.
std::pair<IntGrid, IntGrid> standard_square_basis(long n);

/// Outer-product solution on an m x n board, period-4 pattern along the axis
/// with 2 | (len+1) and period-6 pattern along the axis with 3 | (len+1).
IntGrid rect_solution(long m, long n);

/// Toroidal solution: period-4 pattern (1,0,-1,0) along the axis divisible
/// by 4 and the doubled period-6 pattern (2,1,-1,-2,-1,1) along the axis
/// divisible by 6.
IntGrid torus_solution(long m, long n);

/// Exact kernel of the flat Neumann n x n operator. Empty when no solution
/// exists (not an error).
KernelBasis neumann_square_basis(long n);

/// Unique rows x cols window of the semi-infinite solution determined by the
/// given first row and first column: the equation centred at (r, c) forces
/// cell (r+1, c+1), filled in order of increasing r + c.
IntGrid fill_semi_infinite(const SequencePair& seqs, long rows, long cols);

/// Window of the infinite solution seeded by the cross: the two full rows
/// and columns come from the sequences, then each of the four quadrants is
/// forced cell by cell by the equations centred on the cross and on already
/// filled cells. Quadrants are mutually independent.
IntGrid fill_infinite(const CrossSpec& cross, const WindowBounds& window);

}  // namespace neighsum
