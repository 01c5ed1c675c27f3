#include "neighsum/existence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "neighsum/cyclotomic.hpp"
#include "neighsum/errors.hpp"

namespace neighsum {

namespace {

// Discard filter only: every survivor is confirmed exactly, and the true
// rounding error for products of at most six factors of magnitude <= 3
// stays below 1e-9, three orders of magnitude inside this tolerance.
constexpr double kPrefilterTolerance = 1e-6;

}  // namespace

ExistenceVerdict exists_square(long n) {
    if (n < 3) throw std::invalid_argument("exists_square: n must be at least 3");
    if ((n + 1) % 6 == 0)
        return {true, "6|(n+1)", std::vector<long>{(n + 1) / 3, (n + 1) / 2}};
    return {false, "6|(n+1)", std::nullopt};
}

ExistenceVerdict exists_rect(long m, long n) {
    if (m < 2 || n < 2) throw std::invalid_argument("exists_rect: sides must be at least 2");
    if ((m + 1) % 2 == 0 && (n + 1) % 3 == 0)
        return {true, "2|(m+1) & 3|(n+1)", std::vector<long>{(m + 1) / 2, (n + 1) / 3}};
    if ((m + 1) % 3 == 0 && (n + 1) % 2 == 0)
        return {true, "3|(m+1) & 2|(n+1)", std::vector<long>{(m + 1) / 3, (n + 1) / 2}};
    return {false, "2|(m+1) & 3|(n+1), or vice versa", std::nullopt};
}

ExistenceVerdict exists_strip(long m) {
    if (m < 2) throw std::invalid_argument("exists_strip: m must be at least 2");
    if (m % 3 == 2) return {true, "m=2 (mod 3)", std::vector<long>{(m + 1) / 3}};
    return {false, "m=2 (mod 3)", std::nullopt};
}

ExistenceVerdict exists_torus(long m, long n) {
    if (m < 3 || n < 3) throw std::invalid_argument("exists_torus: sides must be at least 3");
    if (m % 4 == 0 && n % 6 == 0)
        return {true, "4|m & 6|n", std::vector<long>{m / 4, n / 6}};
    if (m % 6 == 0 && n % 4 == 0)
        return {true, "6|m & 4|n", std::vector<long>{m / 6, n / 4}};
    return {false, "4|m & 6|n, or vice versa", std::nullopt};
}

ExistenceVerdict exists_neumann_square(long n) {
    if (n < 3) throw std::invalid_argument("exists_neumann_square: n must be at least 3");
    if ((n + 1) % 6 == 0) {
        long k = (n + 1) / 6;
        return {true, "6|(n+1)", std::vector<long>{3 * k, 2 * k}};
    }
    if ((n + 1) % 5 == 0) {
        long k = (n + 1) / 5;
        return {true, "5|(n+1)", std::vector<long>{k, 3 * k}};
    }
    return {false, "5|(n+1) or 6|(n+1)", std::nullopt};
}

namespace {

// Per-axis eigenvalue bookkeeping. A flat axis of length L has angles
// p*pi/(L+1) = 2*pi*p / (2(L+1)); a periodic axis has angles 2*pi*p / L.
struct AxisAngles {
    long len = 0;
    long conductor = 0;  // denominator of the angle as a fraction of 2*pi

    double two_cos(long p) const {
        return 2.0 * std::cos(2.0 * M_PI * static_cast<double>(p) /
                              static_cast<double>(conductor));
    }
};

AxisAngles axis_angles(const BoardSpec& spec, long axis) {
    AxisAngles a;
    a.len = spec.dims[axis];
    a.conductor = spec.boundary[axis] == Boundary::flat ? 2 * (a.len + 1) : a.len;
    return a;
}

// 1 + zeta^e + zeta^-e in the conductor-N ring; e may be 0 mod N (value 3).
CycloElement lambda_or_three(long N, long e) {
    e = ((e % N) + N) % N;
    if (e == 0) return CycloElement(N, Int(3));
    return lambda_element(N, e);
}

// zeta^e + zeta^-e in the conductor-N ring; e may be 0 mod N (value 2).
CycloElement two_cos_element(long N, long e) {
    e = ((e % N) + N) % N;
    if (e == 0) return CycloElement(N, Int(2));
    IntPoly p = IntPoly::monomial(e) + IntPoly::monomial(N - e);
    return CycloElement::from_poly(N, p);
}

struct SpectralProblem {
    const BoardSpec& spec;
    std::vector<AxisAngles> axes;
    long conductor = 0;  // lcm of the per-axis conductors

    explicit SpectralProblem(const BoardSpec& s) : spec(s) {
        const long d = s.dimension();
        bool moore = s.neighbourhood == Neighbourhood::moore;
        if (!(d <= 2 || (moore && s.all_flat())))
            throw UnsupportedSpecError(
                "spectral search supports 2-D boards and all-flat Moore boards");
        if (!moore && d > 2)
            throw UnsupportedSpecError("spectral search: Neumann boards need d <= 2");
        conductor = 1;
        for (long axis = 0; axis < d; ++axis) {
            axes.push_back(axis_angles(s, axis));
            conductor = std::lcm(conductor, axes.back().conductor);
        }
    }

    long exponent(long axis, long p) const {
        return p * (conductor / axes[static_cast<std::size_t>(axis)].conductor);
    }

    bool moore_product() const {
        return spec.neighbourhood == Neighbourhood::moore;
    }

    // Sum-of-2cos target for Neumann modes: eigenvalue equations
    //   sum (1 + 2cos) = d + 1   (sum mode)
    //   sum (1 + 2cos) = 3d      (average mode)
    long cos_sum_target() const {
        long d = spec.dimension();
        return spec.mode == EquationMode::sum ? 1 : 2 * d;
    }

    bool prefilter(const std::vector<long>& p) const {
        if (moore_product()) {
            double prod = 1.0;
            for (std::size_t i = 0; i < axes.size(); ++i)
                prod *= 1.0 + axes[i].two_cos(p[i]);
            return std::abs(prod - 2.0) < kPrefilterTolerance;
        }
        double sum = 0.0;
        for (std::size_t i = 0; i < axes.size(); ++i) sum += axes[i].two_cos(p[i]);
        return std::abs(sum - static_cast<double>(cos_sum_target())) < kPrefilterTolerance;
    }

    bool confirm(const std::vector<long>& p) const {
        if (moore_product()) {
            CycloElement prod(conductor, Int(1));
            for (std::size_t i = 0; i < axes.size(); ++i)
                prod = prod * lambda_or_three(conductor, exponent(static_cast<long>(i), p[i]));
            return prod.equals_integer(Int(2));
        }
        CycloElement sum(conductor, Int(0));
        for (std::size_t i = 0; i < axes.size(); ++i)
            sum = sum + two_cos_element(conductor, exponent(static_cast<long>(i), p[i]));
        return sum.equals_integer(Int(cos_sum_target()));
    }

    // Visits index tuples in lexicographic order until fn returns false.
    template <typename Fn>
    void enumerate(Fn&& fn) const {
        std::vector<long> p(axes.size(), 1);
        while (true) {
            if (!fn(p)) return;
            std::size_t axis = p.size();
            while (axis-- > 0) {
                if (p[axis] < axes[axis].len) {
                    ++p[axis];
                    std::fill(p.begin() + static_cast<long>(axis) + 1, p.end(), 1L);
                    break;
                }
                if (axis == 0) return;
            }
        }
    }
};

}  // namespace

ExistenceVerdict spectral_search(const BoardSpec& spec) {
    SpectralProblem problem(spec);
    ExistenceVerdict verdict{false, "spectral-exact", std::nullopt};
    problem.enumerate([&](const std::vector<long>& p) {
        if (problem.prefilter(p) && problem.confirm(p)) {
            verdict.exists = true;
            verdict.certificate = p;
            return false;
        }
        return true;
    });
    return verdict;
}

long kernel_dimension_via_spectra(const BoardSpec& spec) {
    SpectralProblem problem(spec);
    long count = 0;
    problem.enumerate([&](const std::vector<long>& p) {
        if (problem.prefilter(p) && problem.confirm(p)) ++count;
        return true;
    });
    return count;
}

namespace {

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("NEIGHSUM_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

long long multinomial(long d, const std::vector<long>& multiplicities) {
    long long result = 1;
    for (long i = 2; i <= d; ++i) result *= i;
    for (long m : multiplicities)
        for (long i = 2; i <= m; ++i) result /= i;
    return result;
}

// Counts ordered solutions with smallest index p1, enumerating value
// multisets p1 <= p2 <= ... <= pd. Product magnitudes are pruned with the
// suffix maximum of |lambda|; survivors of the double prefilter are
// confirmed exactly in the conductor ring.
class HypercubeCounter {
public:
    HypercubeCounter(long n, long d)
        : n_(n), d_(d), conductor_(2 * (n + 1)), lambda_(static_cast<std::size_t>(n) + 1),
          suffix_max_(static_cast<std::size_t>(n) + 2, 0.0),
          exact_(static_cast<std::size_t>(n) + 1) {
        for (long p = 1; p <= n; ++p)
            lambda_[static_cast<std::size_t>(p)] =
                1.0 + 2.0 * std::cos(M_PI * static_cast<double>(p) / static_cast<double>(n + 1));
        for (long p = n; p >= 1; --p)
            suffix_max_[static_cast<std::size_t>(p)] =
                std::max(std::abs(lambda_[static_cast<std::size_t>(p)]),
                         suffix_max_[static_cast<std::size_t>(p) + 1]);
        // p = 2(n+1)/3 is the exact zero eigenvalue; it can never contribute.
        zero_p_ = (2 * (n + 1)) % 3 == 0 ? 2 * (n + 1) / 3 : 0;
    }

    long long count_from(long p1) {
        long long total = 0;
        std::vector<long> tuple;
        tuple.reserve(static_cast<std::size_t>(d_));
        tuple.push_back(p1);
        if (p1 != zero_p_)
            descend(tuple, lambda_[static_cast<std::size_t>(p1)], total);
        return total;
    }

private:
    void descend(std::vector<long>& tuple, double product, long long& total) {
        if (static_cast<long>(tuple.size()) == d_) {
            if (std::abs(product - 2.0) < kPrefilterTolerance && confirm(tuple))
                total += orderings(tuple);
            return;
        }
        long remaining = d_ - static_cast<long>(tuple.size());
        for (long p = tuple.back(); p <= n_; ++p) {
            if (p == zero_p_) continue;
            double suffix = suffix_max_[static_cast<std::size_t>(p)];
            // Largest magnitude any continuation from indices >= p can reach.
            if (std::abs(product) * std::pow(suffix, static_cast<double>(remaining)) <
                2.0 - 1e-4)
                break;
            double lam = lambda_[static_cast<std::size_t>(p)];
            if (std::abs(product * lam) *
                    std::pow(suffix, static_cast<double>(remaining - 1)) <
                2.0 - 1e-4)
                continue;
            tuple.push_back(p);
            descend(tuple, product * lam, total);
            tuple.pop_back();
        }
    }

    bool confirm(const std::vector<long>& tuple) {
        CycloElement prod(conductor_, Int(1));
        for (long p : tuple) prod = prod * exact_lambda(p);
        return prod.equals_integer(Int(2));
    }

    const CycloElement& exact_lambda(long p) {
        auto& slot = exact_[static_cast<std::size_t>(p)];
        if (!slot) slot.emplace(lambda_element(conductor_, p));
        return *slot;
    }

    long long orderings(const std::vector<long>& tuple) const {
        std::vector<long> multiplicities;
        long run = 1;
        for (std::size_t i = 1; i < tuple.size(); ++i) {
            if (tuple[i] == tuple[i - 1]) {
                ++run;
            } else {
                multiplicities.push_back(run);
                run = 1;
            }
        }
        multiplicities.push_back(run);
        return multinomial(d_, multiplicities);
    }

    long n_;
    long d_;
    long conductor_;
    long zero_p_ = 0;
    std::vector<double> lambda_;
    std::vector<double> suffix_max_;
    std::vector<std::optional<CycloElement>> exact_;
};

}  // namespace

CountRecord count_hypercube(long n, long d, int threads) {
    if (n < 2) throw std::invalid_argument("count_hypercube: n must be at least 2");
    if (d < 2) throw std::invalid_argument("count_hypercube: d must be at least 2");
    cyclotomic_poly(2 * (n + 1));  // warm the shared cache before fan-out

    const int worker_count = std::min<long>(resolve_threads(threads), n);
    std::vector<long long> partial(static_cast<std::size_t>(worker_count), 0);
    auto work = [&](int w) {
        HypercubeCounter counter(n, d);
        long long sum = 0;
        for (long p1 = 1 + w; p1 <= n; p1 += worker_count) sum += counter.count_from(p1);
        partial[static_cast<std::size_t>(w)] = sum;
    };
    if (worker_count <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < worker_count; ++w) pool.emplace_back(work, w);
        for (std::thread& t : pool) t.join();
    }
    long long total = std::accumulate(partial.begin(), partial.end(), 0LL);
    return {n, d, total};
}

bool hypercube_necessary(long n) {
    if (n < 2) throw std::invalid_argument("hypercube_necessary: n must be at least 2");
    return (n + 1) % 3 == 0;
}

ExistenceVerdict hypercube_d3_sufficient(long n) {
    if (n < 2) throw std::invalid_argument("hypercube_d3_sufficient: n must be at least 2");
    auto confirmed = [&](std::vector<long> cert, const char* rule) -> ExistenceVerdict {
        long N = 2 * (n + 1);
        std::vector<long> exps;
        for (long p : cert) exps.push_back(p);  // angle p*pi/(n+1) = 2*pi*p/N
        if (!product_equals(N, exps, Int(2)))
            throw std::logic_error("hypercube_d3_sufficient: certificate failed confirmation");
        return {true, rule, std::move(cert)};
    };
    if ((n + 1) % 6 == 0) {
        long k = (n + 1) / 6;
        return confirmed({2 * k, 3 * k, 3 * k}, "6|(n+1)");
    }
    if ((n + 1) % 15 == 0) {
        long k = (n + 1) / 15;
        return confirmed({5 * k, 3 * k, 9 * k}, "15|(n+1)");
    }
    return {false, "6|(n+1) or 15|(n+1) (sufficient only)", std::nullopt};
}

std::optional<std::vector<long>> sufficient_decomposition(long n, long d) {
    if (n < 2) throw std::invalid_argument("sufficient_decomposition: n must be at least 2");
    if (d < 2) throw std::invalid_argument("sufficient_decomposition: d must be at least 2");
    const long m = n + 1;
    if (m % 3 != 0) return std::nullopt;

    auto verified = [&](std::vector<long> moduli) -> std::optional<std::vector<long>> {
        Int product(1);
        long length = 0;
        for (long mod : moduli) {
            product *= g_norm(mod);
            length += euler_phi(mod) / 2;
        }
        if (product != 2 || length != d)
            throw std::logic_error("sufficient_decomposition: verification failed");
        return moduli;
    };

    if (m % 2 == 0) {
        std::vector<long> moduli{6};
        moduli.insert(moduli.end(), static_cast<std::size_t>(d - 1), 4L);
        return verified(std::move(moduli));
    }

    // Odd primes p != 3 dividing n+1, with weight (p-1)/2. Primes congruent
    // to 7 mod 12 have g = -1 and must appear an even number of times.
    struct Factor {
        long prime;
        long weight;
        long modulus;
        long step;  // 1 for the g = +1 class, 2 for the g = -1 class
    };
    std::vector<Factor> factors;
    for (auto [p, e] : factorize(m)) {
        if (p == 3) continue;
        long weight = (p - 1) / 2;
        if (p % 12 == 7) {
            factors.push_back({p, weight, p, 2});
        } else {
            long modulus = p % 12 == 5 ? 2 * p : p;
            factors.push_back({p, weight, modulus, 1});
        }
    }

    // Exponents count modulus copies; class-2 factors step by 2 so they
    // always appear an even number of times.
    const long target = d - 1;
    std::vector<long> exponents(factors.size(), 0);
    std::function<bool(std::size_t, long)> search = [&](std::size_t i, long rest) -> bool {
        if (i == factors.size()) return rest == 0;
        const Factor& f = factors[i];
        for (long e = 0; e * f.weight <= rest; e += f.step) {
            exponents[i] = e;
            if (search(i + 1, rest - e * f.weight)) return true;
        }
        exponents[i] = 0;
        return false;
    };
    if (!search(0, target)) return std::nullopt;

    std::vector<long> moduli{6};
    for (std::size_t i = 0; i < factors.size(); ++i)
        moduli.insert(moduli.end(), static_cast<std::size_t>(exponents[i]), factors[i].modulus);
    return verified(std::move(moduli));
}

KernelBasis harmonic_torus_kernel(long m, long n) {
    if (m < 3 || n < 3)
        throw std::invalid_argument("harmonic_torus_kernel: sides must be at least 3");
    return kernel_basis(build_operator(BoardSpec::harmonic_torus(m, n)));
}

std::vector<RationalSolution> rational_solutions_scan(long N_max) {
    if (N_max < 1) throw std::invalid_argument("rational_solutions_scan: N_max must be positive");
    std::vector<RationalSolution> solutions;
    for (long N = 2; N <= N_max; ++N) {
        std::vector<double> lambda(static_cast<std::size_t>(N), 0.0);
        for (long p = 1; p < N; ++p)
            lambda[static_cast<std::size_t>(p)] =
                1.0 + 2.0 * std::cos(M_PI * static_cast<double>(p) / static_cast<double>(N));
        for (long p = 1; p < N; ++p) {
            for (long q = 1; q < N; ++q) {
                double prod = lambda[static_cast<std::size_t>(p)] *
                              lambda[static_cast<std::size_t>(q)];
                if (std::abs(prod - 2.0) >= kPrefilterTolerance) continue;
                if (product_equals(2 * N, {p, q}, Int(2)))
                    solutions.push_back({N, p, q});
            }
        }
    }
    return solutions;
}

}  // namespace neighsum
