#include "neighsum/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace neighsum {

IntPoly::IntPoly(std::vector<Int> coeffs_) : coeffs(std::move(coeffs_)) { trim(); }

IntPoly IntPoly::monomial(long degree, Int coefficient) {
    if (degree < 0) throw std::invalid_argument("IntPoly: negative degree");
    if (coefficient == 0) return IntPoly();
    std::vector<Int> c(static_cast<std::size_t>(degree) + 1, Int(0));
    c.back() = std::move(coefficient);
    IntPoly p;
    p.coeffs = std::move(c);
    return p;
}

void IntPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Int(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Int(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    r.trim();
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    IntPoly r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    r.trim();
    return r;
}

namespace {

void check_monic(const IntPoly& divisor) {
    if (divisor.is_zero() || divisor.coeffs.back() != 1)
        throw std::invalid_argument("polynomial division requires a monic divisor");
}

// Long division by a monic divisor; returns {quotient, remainder}.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& numerator, const IntPoly& divisor) {
    check_monic(divisor);
    IntPoly rem = numerator;
    const long dd = divisor.degree();
    if (dd == 0) return {numerator, IntPoly()};
    std::vector<Int> quot;
    if (rem.degree() >= dd) quot.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, Int(0));
    while (rem.degree() >= dd) {
        const long shift = rem.degree() - dd;
        Int lead = rem.coeffs.back();
        quot[static_cast<std::size_t>(shift)] = lead;
        for (long i = 0; i <= dd; ++i)
            rem.coeffs[static_cast<std::size_t>(shift + i)] -=
                lead * divisor.coeffs[static_cast<std::size_t>(i)];
        rem.trim();
    }
    IntPoly q;
    q.coeffs = std::move(quot);
    q.trim();
    return {std::move(q), std::move(rem)};
}

}  // namespace

IntPoly divide_exact_monic(const IntPoly& numerator, const IntPoly& divisor) {
    auto [quotient, remainder] = divmod_monic(numerator, divisor);
    if (!remainder.is_zero())
        throw std::invalid_argument("divide_exact_monic: division leaves a remainder");
    return quotient;
}

IntPoly mod_monic(const IntPoly& p, const IntPoly& divisor) {
    return divmod_monic(p, divisor).second;
}

std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
    std::vector<std::pair<long, int>> factors;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

long euler_phi(long n) {
    long phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

const IntPoly& cyclotomic_poly(long N) {
    if (N < 1) throw std::invalid_argument("cyclotomic_poly: N must be positive");
    static std::map<long, IntPoly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    // Iterative fill: Phi_N needs Phi_d for every proper divisor d of N.
    std::function<const IntPoly&(long)> get = [&](long n) -> const IntPoly& {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        IntPoly numerator = IntPoly::monomial(n) - IntPoly::monomial(0);
        for (long d = 1; d <= n / 2; ++d)
            if (n % d == 0) numerator = divide_exact_monic(numerator, get(d));
        return cache.emplace(n, std::move(numerator)).first->second;
    };
    return get(N);
}

CycloElement::CycloElement(long conductor, const Int& constant) : conductor_(conductor) {
    if (conductor < 1) throw std::invalid_argument("CycloElement: conductor must be positive");
    coeffs_.assign(static_cast<std::size_t>(euler_phi(conductor)), Int(0));
    coeffs_[0] = constant;
}

CycloElement CycloElement::from_poly(long conductor, const IntPoly& p) {
    CycloElement e(conductor, Int(0));
    IntPoly r = mod_monic(p, cyclotomic_poly(conductor));
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) e.coeffs_[i] = r.coeffs[i];
    return e;
}

CycloElement CycloElement::operator+(const CycloElement& other) const {
    if (conductor_ != other.conductor_)
        throw std::invalid_argument("CycloElement: conductor mismatch");
    CycloElement r(conductor_, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
    return r;
}

CycloElement CycloElement::operator-(const CycloElement& other) const {
    if (conductor_ != other.conductor_)
        throw std::invalid_argument("CycloElement: conductor mismatch");
    CycloElement r(conductor_, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] - other.coeffs_[i];
    return r;
}

CycloElement CycloElement::operator*(const CycloElement& other) const {
    if (conductor_ != other.conductor_)
        throw std::invalid_argument("CycloElement: conductor mismatch");
    IntPoly a, b;
    a.coeffs = coeffs_;
    a.trim();
    b.coeffs = other.coeffs_;
    b.trim();
    return from_poly(conductor_, a * b);
}

bool CycloElement::equals_integer(const Int& value) const {
    if (coeffs_[0] != value) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

CycloElement lambda_element(long N, long p) {
    if (p < 1 || p >= N)
        throw std::invalid_argument("lambda_element: exponent must satisfy 1 <= p < N");
    IntPoly poly = IntPoly::monomial(0) + IntPoly::monomial(p) + IntPoly::monomial(N - p);
    return CycloElement::from_poly(N, poly);
}

bool product_equals(long N, const std::vector<long>& exps, const Int& target) {
    if (exps.empty()) throw std::invalid_argument("product_equals: empty exponent list");
    CycloElement product(N, Int(1));
    for (long e : exps) product = product * lambda_element(N, e);
    return product.equals_integer(target);
}

Valuation Valuation::infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
}

Valuation Valuation::finite(Rat value) {
    if (value < 0) throw std::invalid_argument("Valuation: negative value");
    Valuation v;
    v.value_ = std::move(value);
    v.value_.canonicalize();
    return v;
}

const Rat& Valuation::value() const {
    if (infinite_) throw std::logic_error("Valuation: infinite value has no rational part");
    return value_;
}

Valuation Valuation::operator+(const Valuation& other) const {
    if (infinite_ || other.infinite_) return infinity();
    return finite(value_ + other.value_);
}

std::string Valuation::str() const {
    return infinite_ ? "inf" : value_.get_str();
}

Valuation valuation_eta(long m) {
    if (m < 1) throw std::invalid_argument("valuation_eta: m must be positive");
    if (m == 3) return Valuation::infinity();
    if (m % 3 == 0) {
        long q = m / 3;  // 1/2^k exactly when q = 2^(k+1)
        if (q >= 2 && (q & (q - 1)) == 0) {
            long k = 0;
            while ((q >> (k + 1)) > 1) ++k;
            return Valuation::finite(Rat(Int(1), Int(1) << k));
        }
    }
    return Valuation::finite(Rat(0));
}

Valuation valuation_omega(long l) {
    if (l < 1) throw std::invalid_argument("valuation_omega: l must be positive");
    if (l == 1) return Valuation::infinity();
    if ((l & (l - 1)) == 0) {
        long k = 0;
        while ((l >> (k + 1)) > 1) ++k;
        return Valuation::finite(Rat(Int(1), Int(1) << k));
    }
    return Valuation::finite(Rat(0));
}

EisensteinInt EisensteinInt::operator+(const EisensteinInt& other) const {
    return {a + other.a, b + other.b};
}

EisensteinInt EisensteinInt::operator*(const EisensteinInt& other) const {
    // (a + b z)(c + d z) with z^2 = -1 - z
    Int bd = b * other.b;
    return {a * other.a - bd, a * other.b + b * other.a - bd};
}

EisensteinInt EisensteinInt::operator-() const { return {-a, -b}; }

EisensteinInt EisensteinInt::zeta_power(long k) {
    switch (((k % 3) + 3) % 3) {
        case 0: return {Int(1), Int(0)};
        case 1: return {Int(0), Int(1)};
        default: return {Int(-1), Int(-1)};
    }
}

Int g_norm(long m) {
    if (m < 4) throw std::invalid_argument("g_norm: m must be at least 4");
    const IntPoly& phi = cyclotomic_poly(m);
    EisensteinInt zeta = EisensteinInt::zeta_power(1);
    EisensteinInt acc{Int(0), Int(0)};
    for (std::size_t i = phi.coeffs.size(); i-- > 0;) {
        acc = acc * zeta;
        acc.a += phi.coeffs[i];
    }
    long half_phi = euler_phi(m) / 2;
    acc = acc * EisensteinInt::zeta_power(-half_phi);
    if (half_phi % 2 != 0) acc = -acc;
    if (acc.b != 0) throw std::logic_error("g_norm: nonzero zeta component");
    return acc.a;
}

int legendre(const Int& a, const Int& p) {
    if (p <= 2 || mpz_odd_p(p.get_mpz_t()) == 0 ||
        mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("legendre: p must be an odd prime");
    Int exp = (p - 1) / 2;
    Int base = a % p;
    if (base < 0) base += p;
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    if (r == 0) return 0;
    if (r == 1) return 1;
    if (r == p - 1) return -1;
    throw std::logic_error("legendre: Euler criterion produced an unexpected residue");
}

}  // namespace neighsum
