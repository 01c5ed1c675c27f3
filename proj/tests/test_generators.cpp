#include "doctest.h"

#include <algorithm>
#include <random>

#include "neighsum/existence.hpp"
#include "neighsum/generators.hpp"
#include "neighsum/grid.hpp"
#include "neighsum/linalg.hpp"

using namespace neighsum;

namespace {

IntGrid grid2(std::vector<std::vector<long>> rows) {
    std::vector<Int> cells;
    for (const auto& row : rows)
        for (long v : row) cells.emplace_back(v);
    return IntGrid({static_cast<long>(rows.size()), static_cast<long>(rows[0].size())},
                   std::move(cells));
}

IntGrid transpose(const IntGrid& g) {
    IntGrid t({g.dims[1], g.dims[0]});
    for (long i = 0; i < g.dims[0]; ++i)
        for (long j = 0; j < g.dims[1]; ++j) t.at(j, i) = g.at(i, j);
    return t;
}

std::vector<Int> seq(std::vector<long> values) {
    std::vector<Int> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

// Reference fill in plain row-major order; the diagonal fill must agree
// (the recurrence forces each cell once, so every valid order coincides).
IntGrid fill_row_major(const SequencePair& seqs, long rows, long cols) {
    IntGrid g({rows, cols});
    for (long j = 0; j < cols; ++j) g.at(0, j) = seqs.row_seq[static_cast<std::size_t>(j)];
    for (long i = 0; i < rows; ++i) g.at(i, 0) = seqs.col_seq[static_cast<std::size_t>(i)];
    for (long i = 1; i < rows; ++i) {
        for (long j = 1; j < cols; ++j) {
            Int others(0);
            for (long dr = -1; dr <= 1; ++dr)
                for (long dc = -1; dc <= 1; ++dc) {
                    if ((dr == 0 && dc == 0) || (dr == 1 && dc == 1)) continue;
                    long rr = i - 1 + dr, cc = j - 1 + dc;
                    if (rr < 0 || cc < 0) continue;
                    others += g.at(rr, cc);
                }
            g.at(i, j) = g.at(i - 1, j - 1) - others;
        }
    }
    return g;
}

}  // namespace

TEST_CASE("standard square basis n=5 matches the displayed boards") {
    auto [k1, k2] = standard_square_basis(5);
    CHECK(k1 == grid2({{1, 0, -1, 0, 1},
                       {1, 0, -1, 0, 1},
                       {0, 0, 0, 0, 0},
                       {-1, 0, 1, 0, -1},
                       {-1, 0, 1, 0, -1}}));
    CHECK(k2 == grid2({{1, 1, 0, -1, -1},
                       {0, 0, 0, 0, 0},
                       {-1, -1, 0, 1, 1},
                       {0, 0, 0, 0, 0},
                       {1, 1, 0, -1, -1}}));
    CHECK(k2 == transpose(k1));
    CHECK(verify_board(k1, BoardSpec::square(5)).empty());
    CHECK(verify_board(k2, BoardSpec::square(5)).empty());
    CHECK_THROWS_AS(standard_square_basis(6), std::invalid_argument);
}

TEST_CASE("standard square basis spans the kernel") {
    for (long n : {5L, 11L, 17L}) {
        auto [k1, k2] = standard_square_basis(n);
        CHECK(verify_board(k1, BoardSpec::square(n)).empty());
        CHECK(verify_board(k2, BoardSpec::square(n)).empty());
        KernelBasis kernel = kernel_basis(build_operator(BoardSpec::square(n)));
        CHECK(canonical_span(n * n, {vectorize(k1), vectorize(k2)}) == kernel);

        // Every second column and every third row of K1 vanish.
        for (long j = 2; j <= n; j += 2)
            for (long i = 1; i <= n; ++i) CHECK(k1.at(i - 1, j - 1) == 0);
        for (long i = 3; i <= n; i += 3)
            for (long j = 1; j <= n; ++j) CHECK(k1.at(i - 1, j - 1) == 0);
    }
}

TEST_CASE("rect solutions") {
    IntGrid r35 = rect_solution(3, 5);
    CHECK(verify_board(r35, BoardSpec::rect(3, 5)).empty());
    CHECK(r35.at(0, 0) == 1);
    CHECK(r35 == grid2({{1, 1, 0, -1, -1}, {0, 0, 0, 0, 0}, {-1, -1, 0, 1, 1}}));

    CHECK(rect_solution(2, 3) == grid2({{1, 0, -1}, {1, 0, -1}}));
    CHECK(verify_board(rect_solution(2, 3), BoardSpec::rect(2, 3)).empty());
    CHECK_THROWS_AS(rect_solution(4, 4), std::invalid_argument);

    for (long m = 2; m <= 9; ++m)
        for (long n = 2; n <= 9; ++n)
            if (exists_rect(m, n).exists)
                CHECK(verify_board(rect_solution(m, n), BoardSpec::rect(m, n)).empty());
}

TEST_CASE("torus solutions") {
    CHECK(verify_board(torus_solution(4, 6), BoardSpec::torus(4, 6)).empty());
    CHECK(verify_board(torus_solution(6, 4), BoardSpec::torus(6, 4)).empty());
    CHECK(torus_solution(6, 4) == transpose(torus_solution(4, 6)));
    CHECK_THROWS_AS(torus_solution(5, 6), std::invalid_argument);
    for (long m : {4L, 8L, 12L})
        for (long n : {6L, 12L, 18L})
            CHECK(verify_board(torus_solution(m, n), BoardSpec::torus(m, n)).empty());
}

TEST_CASE("neumann square basis") {
    KernelBasis basis4 = neumann_square_basis(4);
    REQUIRE(basis4.dimension() == 2);
    IntGrid plus1 = grid2({{0, 1, 1, 0}, {-1, 0, 0, -1}, {-1, 0, 0, -1}, {0, 1, 1, 0}});
    IntGrid plus2 = grid2({{1, 0, 0, 1}, {1, -1, -1, 1}, {1, -1, -1, 1}, {1, 0, 0, 1}});
    CHECK(verify_board(plus1, BoardSpec::neumann_square(4)).empty());
    CHECK(verify_board(plus2, BoardSpec::neumann_square(4)).empty());
    CHECK(in_span(basis4, vectorize(plus1)));
    CHECK(in_span(basis4, vectorize(plus2)));
    CHECK(canonical_span(16, {vectorize(plus1), vectorize(plus2)}) == basis4);

    // Moore solutions double as Neumann solutions when 6 | (n+1).
    auto [k1, k2] = standard_square_basis(5);
    CHECK(verify_board(k1, BoardSpec::neumann_square(5)).empty());
    CHECK(verify_board(k2, BoardSpec::neumann_square(5)).empty());
    CHECK(neumann_square_basis(5).dimension() == 2);

    CHECK(neumann_square_basis(9).dimension() == 2);
    CHECK(neumann_square_basis(7).dimension() == 0);
}

TEST_CASE("semi-infinite fill reproduces the worked example") {
    SequencePair seqs{seq({2, 3, 5, 7, 11, 13}), seq({2, 3, 5, 8, 13, 21})};
    IntGrid window = fill_semi_infinite(seqs, 6, 6);

    // The unique solution from this first row and column. The last row and
    // column of the published figure disagree with the defining equation at
    // seven cells; the recurrence values below are the consistent ones.
    IntGrid expected = grid2({{2, 3, 5, 7, 11, 13},
                              {3, -4, -3, 2, -8, -3},
                              {5, -3, -16, 3, 3, -44},
                              {8, 1, 3, -15, 37, 31},
                              {13, -8, -1, 42, -86, 103},
                              {21, -9, -44, 29, 119, -432}});
    CHECK(window == expected);
    CHECK(window.at(1, 1) == -4);
    CHECK(window.at(1, 2) == -3);
    CHECK(window.at(2, 2) == -16);
    CHECK(window.at(3, 3) == -15);

    // Every equation whose full neighbourhood lies in the window holds.
    for (long r = 0; r <= 4; ++r) {
        for (long c = 0; c <= 4; ++c) {
            Int sum(0);
            for (long dr = -1; dr <= 1; ++dr)
                for (long dc = -1; dc <= 1; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    long rr = r + dr, cc = c + dc;
                    if (rr < 0 || cc < 0) continue;
                    sum += window.at(rr, cc);
                }
            CHECK(window.at(r, c) == sum);
        }
    }
}

TEST_CASE("semi-infinite fill properties") {
    SequencePair zeros{std::vector<Int>(8, Int(0)), std::vector<Int>(8, Int(0))};
    CHECK(fill_semi_infinite(zeros, 8, 8) == IntGrid({8, 8}));

    std::mt19937 rng(17);
    auto random_seqs = [&rng](long len) {
        SequencePair s{std::vector<Int>(static_cast<std::size_t>(len)),
                       std::vector<Int>(static_cast<std::size_t>(len))};
        for (auto& x : s.row_seq) x = static_cast<long>(rng() % 11) - 5;
        for (auto& x : s.col_seq) x = static_cast<long>(rng() % 11) - 5;
        s.col_seq[0] = s.row_seq[0];
        return s;
    };

    for (int trial = 0; trial < 5; ++trial) {
        SequencePair a = random_seqs(7);
        IntGrid window = fill_semi_infinite(a, 7, 7);
        CHECK(window == fill_row_major(a, 7, 7));

        // Interior equations hold by construction.
        for (long r = 0; r <= 5; ++r)
            for (long c = 0; c <= 5; ++c) {
                Int sum(0);
                for (long dr = -1; dr <= 1; ++dr)
                    for (long dc = -1; dc <= 1; ++dc) {
                        if (dr == 0 && dc == 0) continue;
                        long rr = r + dr, cc = c + dc;
                        if (rr < 0 || cc < 0) continue;
                        sum += window.at(rr, cc);
                    }
                CHECK(window.at(r, c) == sum);
            }

        // Superposition: the fill is linear in its input sequences.
        SequencePair b = random_seqs(7);
        SequencePair both{a.row_seq, a.col_seq};
        for (std::size_t i = 0; i < both.row_seq.size(); ++i) {
            both.row_seq[i] += b.row_seq[i];
            both.col_seq[i] += b.col_seq[i];
        }
        IntGrid wa = fill_semi_infinite(a, 7, 7);
        IntGrid wb = fill_semi_infinite(b, 7, 7);
        IntGrid wsum = fill_semi_infinite(both, 7, 7);
        for (std::size_t i = 0; i < wsum.cells.size(); ++i)
            CHECK(wsum.cells[i] == wa.cells[i] + wb.cells[i]);
    }

    SequencePair bad{seq({1, 2}), seq({2, 2})};
    CHECK_THROWS_AS(fill_semi_infinite(bad, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(fill_semi_infinite(zeros, 9, 4), std::invalid_argument);
}

namespace {

CrossSpec zero_cross(long extent) {
    CrossSpec cross;
    for (long i = 1; i <= extent; ++i) {
        for (auto* s : {&cross.a, &cross.b, &cross.c, &cross.d}) {
            (*s)[i] = 0;
            (*s)[-i] = 0;
        }
    }
    return cross;
}

}  // namespace

TEST_CASE("infinite fill") {
    // All-zero cross gives the all-zero window.
    IntGrid zero_window = fill_infinite(zero_cross(8), {-5, 6, -5, 6});
    CHECK(zero_window == IntGrid({12, 12}));

    // Invalid corners are rejected.
    CrossSpec bad = zero_cross(3);
    bad.a[1] = 1;  // a[1] != b[1]
    CHECK_THROWS_AS(fill_infinite(bad, {-2, 3, -2, 3}), std::invalid_argument);

    // A generic cross: window cells must satisfy the neighbour-sum property
    // wherever the full neighbourhood is inside the window.
    std::mt19937 rng(23);
    CrossSpec cross = zero_cross(10);
    for (auto* s : {&cross.a, &cross.b, &cross.c, &cross.d})
        for (auto& [idx, value] : *s) value = static_cast<long>(rng() % 9) - 4;
    cross.b[1] = cross.a[1];
    cross.d[1] = cross.a[-1];
    cross.b[-1] = cross.c[1];
    cross.d[-1] = cross.c[-1];

    WindowBounds bounds{-6, 7, -6, 7};
    IntGrid window = fill_infinite(cross, bounds);
    const long rows = bounds.row_hi - bounds.row_lo + 1;
    const long cols = bounds.col_hi - bounds.col_lo + 1;
    for (long r = 1; r + 1 < rows; ++r) {
        for (long c = 1; c + 1 < cols; ++c) {
            Int sum(0);
            for (long dr = -1; dr <= 1; ++dr)
                for (long dc = -1; dc <= 1; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    sum += window.at(r + dr, c + dc);
                }
            CHECK(window.at(r, c) == sum);
        }
    }

    // When the inner cross lines vanish, the south-east quadrant coincides
    // with the plain semi-infinite fill of the a/b sequences.
    CrossSpec quiet = zero_cross(10);
    for (long i = 2; i <= 10; ++i) {
        quiet.a[i] = static_cast<long>(rng() % 9) - 4;
        quiet.b[i] = static_cast<long>(rng() % 9) - 4;
    }
    quiet.a[1] = 3;
    quiet.b[1] = 3;
    IntGrid se = fill_infinite(quiet, {1, 8, 1, 8});
    SequencePair se_seqs{{}, {}};
    for (long i = 1; i <= 8; ++i) {
        se_seqs.row_seq.push_back(quiet.a.at(i));
        se_seqs.col_seq.push_back(quiet.b.at(i));
    }
    CHECK(se == fill_semi_infinite(se_seqs, 8, 8));
}
