#pragma once

#include <optional>
#include <string>
#include <vector>

#include "neighsum/grid.hpp"
#include "neighsum/linalg.hpp"

namespace neighsum {

/// Outcome of an existence question. When a family supports certificates,
/// `certificate` holds eigenvalue indices (p_1, ..., p_d) satisfying the
/// family's exact product or cosine-sum equation.
struct ExistenceVerdict {
    bool exists = false;
    std::string rule;
    std::optional<std::vector<long>> certificate;
};

struct CountRecord {
    long n = 0;
    long d = 0;
    long long count = 0;
};

/// Flat Moore n x n boards: solutions exist iff 6 | (n+1). Requires n >= 3.
ExistenceVerdict exists_square(long n);

/// Flat Moore m x n boards: 2 | (m+1) and 3 | (n+1), or vice versa. m, n >= 2.
ExistenceVerdict exists_rect(long m, long n);

/// One-dimensional strips of m cells: solutions exist iff m = 2 (mod 3).
ExistenceVerdict exists_strip(long m);

/// Toroidal Moore m x n boards: 4 | m and 6 | n, or vice versa. m, n >= 3.
ExistenceVerdict exists_torus(long m, long n);

/// Flat Neumann n x n boards: 5 | (n+1) or 6 | (n+1). n >= 3.
ExistenceVerdict exists_neumann_square(long n);

/// Independent existence check: enumerates eigenvalue index tuples and
/// confirms the defining equation exactly in a cyclotomic ring. Supports
/// 2-D specs of any boundary mix and d-dimensional all-flat Moore boards.
/// Returns the lexicographically first certificate, if any.
ExistenceVerdict spectral_search(const BoardSpec& spec);

/// Number of ordered eigenvalue index tuples satisfying the exact equation;
/// equals the kernel dimension of the board operator.
long kernel_dimension_via_spectra(const BoardSpec& spec);

/// Number of ordered tuples (p_1, ..., p_d) in [1, n]^d whose eigenvalue
/// product is exactly 2 on the flat Moore n^d board. Enumerates value
/// multisets with a floating-point discard filter, confirms survivors
/// exactly, and multiplies by multinomial coefficients. `threads` <= 0
/// resolves to NEIGHSUM_THREADS or the hardware concurrency.
CountRecord count_hypercube(long n, long d, int threads = 1);

/// Necessary condition for any n^d board: 3 | (n+1).
bool hypercube_necessary(long n);

/// Constructive d = 3 sufficient condition: certificates (2k, 3k, 3k) when
/// n+1 = 6k and (5k, 3k, 9k) when n+1 = 15k, both confirmed exactly.
ExistenceVerdict hypercube_d3_sufficient(long n);

/// Searches for moduli m_i | 2(n+1) with product of g(m_i) equal to 2 and
/// total length sum phi(m_i)/2 = d, following the sufficient-condition
/// decomposition over the prime factors of n+1. Empty result means the
/// search found no decomposition (not an error).
std::optional<std::vector<long>> sufficient_decomposition(long n, long d);

/// Kernel of the Neumann-average operator on an m x n torus. The harmonic
/// functions: expected to be exactly the span of the all-ones vector.
KernelBasis harmonic_torus_kernel(long m, long n);

struct RationalSolution {
    long N = 0;  // angle denominator: u = p/N, v = q/N in units of pi
    long p = 0;
    long q = 0;
};

/// Brute-force scan of (1 + 2cos(u pi))(1 + 2cos(v pi)) = 2 over rational
/// angles with denominator at most N_max, every hit confirmed exactly.
std::vector<RationalSolution> rational_solutions_scan(long N_max);

}  // namespace neighsum
