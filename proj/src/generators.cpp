#include "neighsum/generators.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "neighsum/existence.hpp"

namespace neighsum {

namespace {

// 1-based pattern values from the standard solutions.
long period6(long i) {
    static const long pattern[6] = {1, 1, 0, -1, -1, 0};
    return pattern[(i - 1) % 6];
}

long period4(long i) {
    static const long pattern[4] = {1, 0, -1, 0};
    return pattern[(i - 1) % 4];
}

long period4_cos(long i) {
    static const long pattern[4] = {1, 0, -1, 0};
    return pattern[(i - 1) % 4];
}

long period6_doubled(long i) {
    static const long pattern[6] = {2, 1, -1, -2, -1, 1};
    return pattern[(i - 1) % 6];
}

IntGrid outer_product(long m, long n, long (*row_pattern)(long), long (*col_pattern)(long)) {
    IntGrid grid({m, n});
    for (long i = 1; i <= m; ++i)
        for (long j = 1; j <= n; ++j)
            grid.at(i - 1, j - 1) = Int(row_pattern(i) * col_pattern(j));
    return grid;
}

}  // namespace

std::pair<IntGrid, IntGrid> standard_square_basis(long n) {
    if (n < 3 || (n + 1) % 6 != 0)
        throw std::invalid_argument("standard_square_basis: requires 6 | (n+1)");
    IntGrid k1 = outer_product(n, n, period6, period4);
    IntGrid k2 = outer_product(n, n, period4, period6);
    return {std::move(k1), std::move(k2)};
}

IntGrid rect_solution(long m, long n) {
    ExistenceVerdict verdict = exists_rect(m, n);
    if (!verdict.exists)
        throw std::invalid_argument("rect_solution: no solution exists for these sides");
    if ((m + 1) % 2 == 0 && (n + 1) % 3 == 0) return outer_product(m, n, period4, period6);
    return outer_product(m, n, period6, period4);
}

IntGrid torus_solution(long m, long n) {
    ExistenceVerdict verdict = exists_torus(m, n);
    if (!verdict.exists)
        throw std::invalid_argument("torus_solution: no solution exists for these sides");
    if (m % 4 == 0 && n % 6 == 0) return outer_product(m, n, period4_cos, period6_doubled);
    return outer_product(m, n, period6_doubled, period4_cos);
}

KernelBasis neumann_square_basis(long n) {
    if (n < 3) throw std::invalid_argument("neumann_square_basis: n must be at least 3");
    return kernel_basis(build_operator(BoardSpec::neumann_square(n)));
}

IntGrid fill_semi_infinite(const SequencePair& seqs, long rows, long cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("fill_semi_infinite: window must be nonempty");
    if (static_cast<long>(seqs.row_seq.size()) < cols)
        throw std::invalid_argument("fill_semi_infinite: row sequence shorter than the window");
    if (static_cast<long>(seqs.col_seq.size()) < rows)
        throw std::invalid_argument("fill_semi_infinite: column sequence shorter than the window");
    if (seqs.row_seq[0] != seqs.col_seq[0])
        throw std::invalid_argument("fill_semi_infinite: shared corner values differ");

    IntGrid grid({rows, cols});
    for (long j = 0; j < cols; ++j) grid.at(0, j) = seqs.row_seq[static_cast<std::size_t>(j)];
    for (long i = 0; i < rows; ++i) grid.at(i, 0) = seqs.col_seq[static_cast<std::size_t>(i)];

    // The equation centred at (r, c) forces cell (r+1, c+1); cells outside
    // the board (row or column -1) contribute nothing. Filling by increasing
    // r + c keeps every needed neighbour available.
    for (long s = 0; s <= rows + cols - 4; ++s) {
        for (long r = 0; r <= rows - 2; ++r) {
            long c = s - r;
            if (c < 0 || c > cols - 2) continue;
            Int others(0);
            for (long dr = -1; dr <= 1; ++dr) {
                for (long dc = -1; dc <= 1; ++dc) {
                    if ((dr == 0 && dc == 0) || (dr == 1 && dc == 1)) continue;
                    long rr = r + dr, cc = c + dc;
                    if (rr < 0 || cc < 0) continue;
                    others += grid.at(rr, cc);
                }
            }
            grid.at(r + 1, c + 1) = grid.at(r, c) - others;
        }
    }
    return grid;
}

namespace {

Int cross_lookup(const std::map<long, Int>& seq, long index, const char* name) {
    auto it = seq.find(index);
    if (it == seq.end())
        throw std::invalid_argument(std::string("fill_infinite: sequence ") + name +
                                    " does not cover index " + std::to_string(index));
    return it->second;
}

// Value of a cross cell. Rows 0 (sequence c) and 1 (sequence a) and columns
// 0 (sequence d) and 1 (sequence b) are seeded; sequence indices skip zero
// across the centre block.
Int cross_value(const CrossSpec& cross, long i, long j) {
    if (i == 0) return cross_lookup(cross.c, j >= 1 ? j : j - 1, "c");
    if (i == 1) return cross_lookup(cross.a, j >= 1 ? j : j - 1, "a");
    if (j == 0) return cross_lookup(cross.d, i >= 1 ? i : i - 1, "d");
    if (j == 1) return cross_lookup(cross.b, i >= 1 ? i : i - 1, "b");
    throw std::logic_error("cross_value: not a cross cell");
}

void validate_cross(const CrossSpec& cross) {
    const Int a1 = cross_lookup(cross.a, 1, "a");
    const Int b1 = cross_lookup(cross.b, 1, "b");
    const Int am1 = cross_lookup(cross.a, -1, "a");
    const Int d1 = cross_lookup(cross.d, 1, "d");
    const Int c1 = cross_lookup(cross.c, 1, "c");
    const Int bm1 = cross_lookup(cross.b, -1, "b");
    const Int cm1 = cross_lookup(cross.c, -1, "c");
    const Int dm1 = cross_lookup(cross.d, -1, "d");
    if (a1 != b1) throw std::invalid_argument("fill_infinite: corner constraint a[1] = b[1] violated");
    if (am1 != d1) throw std::invalid_argument("fill_infinite: corner constraint a[-1] = d[1] violated");
    if (c1 != bm1) throw std::invalid_argument("fill_infinite: corner constraint c[1] = b[-1] violated");
    if (cm1 != dm1) throw std::invalid_argument("fill_infinite: corner constraint c[-1] = d[-1] violated");
}

// One quadrant in local coordinates: cell (r, c) for r, c >= 1 maps to the
// global cell origin + r * row_step, origin + c * col_step. Local rows and
// columns -1 and 0 are the neighbouring cross lines. The equation centred at
// local (r-1, c-1) forces local (r, c); every neighbour it needs is either a
// cross cell or an earlier quadrant cell.
struct QuadrantFill {
    long row_origin, col_origin;  // global position of local (0, 0)
    long row_step, col_step;      // +1 or -1
    long rows, cols;              // local extent to fill
    const CrossSpec& cross;
    IntGrid values;               // local (1..rows, 1..cols), stored offset by 1

    QuadrantFill(long ro, long co, long rs, long cs, long nrows, long ncols,
                 const CrossSpec& cr)
        : row_origin(ro), col_origin(co), row_step(rs), col_step(cs),
          rows(nrows), cols(ncols), cross(cr), values({nrows + 1, ncols + 1}) {
        run();
    }

    Int get(long r, long c) const {
        if (r <= 0 || c <= 0)
            return cross_value(cross, row_origin + r * row_step, col_origin + c * col_step);
        return values.at(r, c);
    }

    void run() {
        for (long s = 0; s <= rows + cols - 2; ++s) {
            for (long r = 0; r <= rows - 1; ++r) {
                long c = s - r;
                if (c < 0 || c > cols - 1) continue;
                Int others(0);
                for (long dr = -1; dr <= 1; ++dr)
                    for (long dc = -1; dc <= 1; ++dc) {
                        if ((dr == 0 && dc == 0) || (dr == 1 && dc == 1)) continue;
                        others += get(r + dr, c + dc);
                    }
                values.at(r + 1, c + 1) = get(r, c) - others;
            }
        }
    }
};

}  // namespace

IntGrid fill_infinite(const CrossSpec& cross, const WindowBounds& window) {
    if (window.row_lo > window.row_hi || window.col_lo > window.col_hi)
        throw std::invalid_argument("fill_infinite: empty window");
    validate_cross(cross);

    // Quadrant extents needed to cover the window.
    const long north = std::max(0L, -window.row_lo);        // rows <= -1
    const long south = std::max(0L, window.row_hi - 1);     // rows >= 2
    const long west = std::max(0L, -window.col_lo);         // cols <= -1
    const long east = std::max(0L, window.col_hi - 1);      // cols >= 2

    // Local (r, c) -> global (origin + r*step): SE grows down-right from
    // (1, 1), SW down-left from (1, 0), NE up-right from (0, 1), NW up-left
    // from (0, 0).
    std::optional<QuadrantFill> se, sw, ne, nw;
    if (south > 0 && east > 0) se.emplace(1, 1, 1, 1, south, east, cross);
    if (south > 0 && west > 0) sw.emplace(1, 0, 1, -1, south, west, cross);
    if (north > 0 && east > 0) ne.emplace(0, 1, -1, 1, north, east, cross);
    if (north > 0 && west > 0) nw.emplace(0, 0, -1, -1, north, west, cross);

    IntGrid result({window.row_hi - window.row_lo + 1, window.col_hi - window.col_lo + 1});
    for (long i = window.row_lo; i <= window.row_hi; ++i) {
        for (long j = window.col_lo; j <= window.col_hi; ++j) {
            Int value;
            if (i == 0 || i == 1 || j == 0 || j == 1) {
                value = cross_value(cross, i, j);
            } else if (i >= 2 && j >= 2) {
                value = se->values.at(i - 1, j - 1);
            } else if (i >= 2 && j <= -1) {
                value = sw->values.at(i - 1, -j);
            } else if (i <= -1 && j >= 2) {
                value = ne->values.at(-i, j - 1);
            } else {
                value = nw->values.at(-i, -j);
            }
            result.at(i - window.row_lo, j - window.col_lo) = value;
        }
    }
    return result;
}

}  // namespace neighsum
