#include "neighsum/grid.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "neighsum/errors.hpp"

namespace neighsum {

BoardSpec::BoardSpec(std::vector<long> dims_, std::vector<Boundary> boundary_,
                     Neighbourhood neighbourhood_, EquationMode mode_)
    : dims(std::move(dims_)), boundary(std::move(boundary_)),
      neighbourhood(neighbourhood_), mode(mode_) {
    if (dims.empty()) throw std::invalid_argument("BoardSpec: dims must be nonempty");
    if (boundary.size() != dims.size())
        throw std::invalid_argument("BoardSpec: one boundary flag per axis required");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 1) throw std::invalid_argument("BoardSpec: axis lengths must be positive");
        if (boundary[i] == Boundary::periodic && dims[i] < 3)
            throw std::invalid_argument("BoardSpec: periodic axes need length >= 3");
    }
    if (mode == EquationMode::average &&
        (neighbourhood != Neighbourhood::neumann || !all_periodic()))
        throw std::invalid_argument(
            "BoardSpec: average mode requires a Neumann neighbourhood on an all-periodic board");
}

BoardSpec BoardSpec::square(long n) { return rect(n, n); }

BoardSpec BoardSpec::rect(long m, long n) {
    return BoardSpec({m, n}, {Boundary::flat, Boundary::flat},
                     Neighbourhood::moore, EquationMode::sum);
}

BoardSpec BoardSpec::strip(long m) {
    return BoardSpec({m}, {Boundary::flat}, Neighbourhood::moore, EquationMode::sum);
}

BoardSpec BoardSpec::torus(long m, long n) {
    return BoardSpec({m, n}, {Boundary::periodic, Boundary::periodic},
                     Neighbourhood::moore, EquationMode::sum);
}

BoardSpec BoardSpec::neumann_square(long n) { return neumann_rect(n, n); }

BoardSpec BoardSpec::neumann_rect(long m, long n) {
    return BoardSpec({m, n}, {Boundary::flat, Boundary::flat},
                     Neighbourhood::neumann, EquationMode::sum);
}

BoardSpec BoardSpec::harmonic_torus(long m, long n) {
    return BoardSpec({m, n}, {Boundary::periodic, Boundary::periodic},
                     Neighbourhood::neumann, EquationMode::average);
}

BoardSpec BoardSpec::hypercube(long n, long d) {
    if (d < 1) throw std::invalid_argument("BoardSpec: dimension must be positive");
    return BoardSpec(std::vector<long>(d, n), std::vector<Boundary>(d, Boundary::flat),
                     Neighbourhood::moore, EquationMode::sum);
}

long BoardSpec::cell_count() const {
    long total = 1;
    for (long len : dims) total *= len;
    return total;
}

bool BoardSpec::all_flat() const {
    return std::all_of(boundary.begin(), boundary.end(),
                       [](Boundary b) { return b == Boundary::flat; });
}

bool BoardSpec::all_periodic() const {
    return std::all_of(boundary.begin(), boundary.end(),
                       [](Boundary b) { return b == Boundary::periodic; });
}

IntGrid::IntGrid(std::vector<long> dims_) : dims(std::move(dims_)) {
    long total = 1;
    for (long len : dims) {
        if (len < 1) throw std::invalid_argument("IntGrid: axis lengths must be positive");
        total *= len;
    }
    cells.assign(static_cast<std::size_t>(total), Int(0));
}

IntGrid::IntGrid(std::vector<long> dims_, std::vector<Int> cells_)
    : dims(std::move(dims_)), cells(std::move(cells_)) {
    long total = 1;
    for (long len : dims) {
        if (len < 1) throw std::invalid_argument("IntGrid: axis lengths must be positive");
        total *= len;
    }
    if (static_cast<long>(cells.size()) != total)
        throw std::invalid_argument("IntGrid: cell count does not match dimensions");
}

Int& IntGrid::at(const MultiIndex& cell) {
    return cells[static_cast<std::size_t>(row_major_index(cell, dims))];
}

const Int& IntGrid::at(const MultiIndex& cell) const {
    return cells[static_cast<std::size_t>(row_major_index(cell, dims))];
}

Int& IntGrid::at(long i, long j) { return at(MultiIndex{i, j}); }
const Int& IntGrid::at(long i, long j) const { return at(MultiIndex{i, j}); }

long linear_index(const MultiIndex& cell, const std::vector<long>& dims) {
    if (cell.size() != dims.size()) throw std::invalid_argument("linear_index: rank mismatch");
    long idx = 0;
    long stride = 1;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (cell[i] < 0 || cell[i] >= dims[i])
            throw std::invalid_argument("linear_index: cell out of range");
        idx += cell[i] * stride;
        stride *= dims[i];
    }
    return idx;
}

MultiIndex from_linear_index(long index, const std::vector<long>& dims) {
    MultiIndex cell(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) {
        cell[i] = index % dims[i];
        index /= dims[i];
    }
    return cell;
}

long row_major_index(const MultiIndex& cell, const std::vector<long>& dims) {
    if (cell.size() != dims.size()) throw std::invalid_argument("row_major_index: rank mismatch");
    long idx = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (cell[i] < 0 || cell[i] >= dims[i])
            throw std::invalid_argument("row_major_index: cell out of range");
        idx = idx * dims[i] + cell[i];
    }
    return idx;
}

namespace {

// Offset vectors over {-1,0,1}^d in lexicographic order, zero excluded,
// restricted to single-axis steps for the Neumann neighbourhood.
void for_each_offset(const BoardSpec& spec, const std::function<void(const MultiIndex&)>& fn) {
    const long d = spec.dimension();
    MultiIndex off(d, -1);
    while (true) {
        long nonzero = 0;
        for (long v : off) nonzero += (v != 0);
        bool keep = nonzero > 0 &&
                    (spec.neighbourhood == Neighbourhood::moore || nonzero == 1);
        if (keep) fn(off);
        long axis = d - 1;
        while (axis >= 0 && off[axis] == 1) off[axis--] = -1;
        if (axis < 0) break;
        ++off[axis];
    }
}

}  // namespace

std::vector<MultiIndex> neighbors(const BoardSpec& spec, const MultiIndex& cell) {
    const long d = spec.dimension();
    if (static_cast<long>(cell.size()) != d)
        throw std::invalid_argument("neighbors: cell rank mismatch");
    for (long i = 0; i < d; ++i)
        if (cell[i] < 0 || cell[i] >= spec.dims[i])
            throw std::invalid_argument("neighbors: cell out of range");

    std::vector<MultiIndex> result;
    for_each_offset(spec, [&](const MultiIndex& off) {
        MultiIndex nb(d);
        for (long i = 0; i < d; ++i) {
            long v = cell[i] + off[i];
            if (spec.boundary[i] == Boundary::periodic) {
                v = (v + spec.dims[i]) % spec.dims[i];
            } else if (v < 0 || v >= spec.dims[i]) {
                return;
            }
            nb[i] = v;
        }
        result.push_back(std::move(nb));
    });
    return result;
}

SparseIntMatrix build_operator(const BoardSpec& spec) {
    const long size = spec.cell_count();
    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(size) * 9);
    for (long u = 0; u < size; ++u) {
        MultiIndex cell = from_linear_index(u, spec.dims);
        std::vector<MultiIndex> nbrs = neighbors(spec, cell);
        for (const MultiIndex& nb : nbrs)
            triplets.push_back({u, linear_index(nb, spec.dims), Int(1)});
        long diag = spec.mode == EquationMode::sum ? -1 : -static_cast<long>(nbrs.size());
        triplets.push_back({u, u, Int(diag)});
    }
    return SparseIntMatrix::from_triplets(size, std::move(triplets));
}

namespace {

SparseIntMatrix band_matrix(long len) {
    std::vector<Triplet> t;
    for (long i = 0; i < len; ++i)
        for (long j = std::max(0L, i - 1); j <= std::min(len - 1, i + 1); ++j)
            t.push_back({i, j, Int(1)});
    return SparseIntMatrix::from_triplets(len, std::move(t));
}

SparseIntMatrix circulant_matrix(long len) {
    std::vector<Triplet> t;
    for (long i = 0; i < len; ++i) {
        t.push_back({i, i, Int(1)});
        t.push_back({i, (i + 1) % len, Int(1)});
        t.push_back({i, (i + len - 1) % len, Int(1)});
    }
    return SparseIntMatrix::from_triplets(len, std::move(t));
}

SparseIntMatrix axis_factor(const BoardSpec& spec, long axis) {
    return spec.boundary[axis] == Boundary::flat ? band_matrix(spec.dims[axis])
                                                 : circulant_matrix(spec.dims[axis]);
}

SparseIntMatrix kron(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    std::vector<Triplet> t;
    t.reserve(a.entries().size() * b.entries().size());
    for (const Triplet& ta : a.entries())
        for (const Triplet& tb : b.entries())
            t.push_back({ta.row * b.size() + tb.row, ta.col * b.size() + tb.col,
                         ta.value * tb.value});
    return SparseIntMatrix::from_triplets(a.size() * b.size(), std::move(t));
}

SparseIntMatrix identity_matrix(long size) {
    std::vector<Triplet> t;
    for (long i = 0; i < size; ++i) t.push_back({i, i, Int(1)});
    return SparseIntMatrix::from_triplets(size, std::move(t));
}

void append_shifted_identity(std::vector<Triplet>& t, long size, long shift) {
    for (long i = 0; i < size; ++i) t.push_back({i, i, Int(shift)});
}

}  // namespace

SparseIntMatrix operator_kronecker_form(const BoardSpec& spec) {
    const long d = spec.dimension();
    const long size = spec.cell_count();

    if (spec.neighbourhood == Neighbourhood::moore) {
        // Linear index runs axis 0 fastest, so axis d-1 is the outer factor.
        SparseIntMatrix m = axis_factor(spec, d - 1);
        for (long axis = d - 2; axis >= 0; --axis) m = kron(m, axis_factor(spec, axis));
        std::vector<Triplet> t = m.entries();
        append_shifted_identity(t, size, -2);
        return SparseIntMatrix::from_triplets(size, std::move(t));
    }

    if (d > 2)
        throw UnsupportedSpecError(
            "operator_kronecker_form: Neumann boards supported only for d <= 2");

    // Kronecker sum of the axis factors, then the mode's constant shift:
    // sum mode removes d self-loops plus the cell itself, average mode
    // removes the self-loops plus degree * cell.
    std::vector<Triplet> t;
    if (d == 1) {
        t = axis_factor(spec, 0).entries();
    } else {
        SparseIntMatrix left = kron(axis_factor(spec, 1), identity_matrix(spec.dims[0]));
        SparseIntMatrix right = kron(identity_matrix(spec.dims[1]), axis_factor(spec, 0));
        t = left.entries();
        t.insert(t.end(), right.entries().begin(), right.entries().end());
    }
    long shift = spec.mode == EquationMode::sum ? -(d + 1) : -(3 * d);
    append_shifted_identity(t, size, shift);
    return SparseIntMatrix::from_triplets(size, std::move(t));
}

std::vector<Int> vectorize(const IntGrid& grid) {
    std::vector<Int> v(grid.cells.size());
    const long total = grid.cell_count();
    for (long idx = 0; idx < total; ++idx) {
        MultiIndex cell = from_linear_index(idx, grid.dims);
        v[static_cast<std::size_t>(idx)] = grid.at(cell);
    }
    return v;
}

IntGrid devectorize(const std::vector<Int>& v, const std::vector<long>& dims) {
    long total = 1;
    for (long len : dims) total *= len;
    if (static_cast<long>(v.size()) != total)
        throw std::invalid_argument("devectorize: length does not match dimensions");
    IntGrid grid(dims);
    for (long idx = 0; idx < total; ++idx)
        grid.at(from_linear_index(idx, dims)) = v[static_cast<std::size_t>(idx)];
    return grid;
}

std::vector<Violation> verify_board(const IntGrid& grid, const BoardSpec& spec) {
    if (grid.dims != spec.dims)
        throw std::invalid_argument("verify_board: grid dimensions do not match spec");
    std::vector<Violation> violations;
    const long total = grid.cell_count();
    for (long idx = 0; idx < total; ++idx) {
        MultiIndex cell = from_linear_index(idx, spec.dims);
        std::vector<MultiIndex> nbrs = neighbors(spec, cell);
        Int neighbour_sum(0);
        for (const MultiIndex& nb : nbrs) neighbour_sum += grid.at(nb);
        Int actual = spec.mode == EquationMode::sum
                         ? grid.at(cell)
                         : Int(grid.at(cell) * static_cast<long>(nbrs.size()));
        if (neighbour_sum != actual)
            violations.push_back({cell, neighbour_sum, actual});
    }
    return violations;
}

std::string render_ascii(const IntGrid& grid) {
    const long d = static_cast<long>(grid.dims.size());
    std::size_t width = 1;
    for (const Int& v : grid.cells) width = std::max(width, v.get_str().size());

    std::ostringstream out;
    auto pad = [&](const Int& v) {
        std::string s = v.get_str();
        return std::string(width - s.size(), ' ') + s;
    };

    if (d == 1) {
        for (long j = 0; j < grid.dims[0]; ++j)
            out << (j ? " " : "") << pad(grid.cells[static_cast<std::size_t>(j)]);
        out << '\n';
        return out.str();
    }

    // Render the last two axes as rows x columns; higher axes become slices.
    const long rows = grid.dims[d - 2];
    const long cols = grid.dims[d - 1];
    long slices = 1;
    for (long i = 0; i < d - 2; ++i) slices *= grid.dims[i];

    for (long s = 0; s < slices; ++s) {
        if (d > 2) {
            MultiIndex prefix(static_cast<std::size_t>(d - 2));
            long rem = s;
            for (long i = d - 3; i >= 0; --i) {
                prefix[static_cast<std::size_t>(i)] = rem % grid.dims[static_cast<std::size_t>(i)];
                rem /= grid.dims[static_cast<std::size_t>(i)];
            }
            out << "slice (";
            for (std::size_t i = 0; i < prefix.size(); ++i)
                out << (i ? "," : "") << prefix[i];
            out << "):\n";
        }
        for (long i = 0; i < rows; ++i) {
            for (long j = 0; j < cols; ++j) {
                std::size_t idx = static_cast<std::size_t>((s * rows + i) * cols + j);
                out << (j ? " " : "") << pad(grid.cells[idx]);
            }
            out << '\n';
        }
        if (s + 1 < slices) out << '\n';
    }
    return out.str();
}

}  // namespace neighsum
