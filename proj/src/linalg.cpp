#include "neighsum/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace neighsum {

std::vector<Int> apply(const SparseIntMatrix& m, const std::vector<Int>& v) {
    if (static_cast<std::int64_t>(v.size()) != m.size())
        throw std::invalid_argument("apply: vector length does not match matrix size");
    std::vector<Int> out(v.size(), Int(0));
    for (const Triplet& t : m.entries())
        out[static_cast<std::size_t>(t.row)] += t.value * v[static_cast<std::size_t>(t.col)];
    return out;
}

namespace {

// One matrix row as a sorted sparse vector of (column, value).
using SparseRow = std::vector<std::pair<std::int64_t, Int>>;

void strip_content(SparseRow& row) {
    Int g(0);
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

Int value_at(const SparseRow& row, std::int64_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::int64_t c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? it->second : Int(0);
}

// target := pv * target - tv * pivot, where pv is the pivot row's leading
// value and tv the target's value in the pivot column. The combination is
// integral by construction; the content is stripped afterwards to keep
// entry growth in check.
SparseRow eliminate_against(const SparseRow& target, const SparseRow& pivot,
                            const Int& pv, const Int& tv) {
    SparseRow out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
            out.emplace_back(target[i].first, Int(pv * target[i].second));
            ++i;
        } else if (i == target.size() || pivot[j].first < target[i].first) {
            out.emplace_back(pivot[j].first, Int(-tv * pivot[j].second));
            ++j;
        } else {
            Int v = pv * target[i].second - tv * pivot[j].second;
            if (v != 0) out.emplace_back(target[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    strip_content(out);
    return out;
}

struct Echelon {
    std::int64_t size = 0;
    std::vector<SparseRow> rows;          // one per pivot, leading columns increasing
    std::vector<std::int64_t> pivot_cols;
};

Echelon eliminate(const SparseIntMatrix& m) {
    const std::int64_t n = m.size();
    std::vector<SparseRow> rows;
    {
        SparseRow current;
        std::int64_t current_row = -1;
        for (const Triplet& t : m.entries()) {
            if (t.row != current_row) {
                if (!current.empty()) rows.push_back(std::move(current));
                current.clear();
                current_row = t.row;
            }
            current.emplace_back(t.col, t.value);
        }
        if (!current.empty()) rows.push_back(std::move(current));
    }
    for (SparseRow& r : rows) strip_content(r);

    std::vector<std::vector<std::size_t>> buckets(static_cast<std::size_t>(n));
    std::vector<bool> retired(rows.size(), false);
    for (std::size_t i = 0; i < rows.size(); ++i)
        buckets[static_cast<std::size_t>(rows[i].front().first)].push_back(i);

    Echelon result;
    result.size = n;
    for (std::int64_t c = 0; c < n; ++c) {
        std::vector<std::size_t> live;
        for (std::size_t id : buckets[static_cast<std::size_t>(c)])
            if (!retired[id] && !rows[id].empty() && rows[id].front().first == c)
                live.push_back(id);
        if (live.empty()) continue;

        std::size_t pivot = live[0];
        for (std::size_t id : live)
            if (rows[id].size() < rows[pivot].size() ||
                (rows[id].size() == rows[pivot].size() && id < pivot))
                pivot = id;

        const Int pv = rows[pivot].front().second;
        for (std::size_t id : live) {
            if (id == pivot) continue;
            const Int tv = rows[id].front().second;
            rows[id] = eliminate_against(rows[id], rows[pivot], pv, tv);
            if (rows[id].empty()) {
                retired[id] = true;
            } else {
                buckets[static_cast<std::size_t>(rows[id].front().first)].push_back(id);
            }
        }
        retired[pivot] = true;
        result.pivot_cols.push_back(c);
        result.rows.push_back(std::move(rows[pivot]));
    }
    return result;
}

std::vector<Int> to_primitive_int(const std::vector<Rat>& v) {
    Int denominator_lcm(1);
    for (const Rat& x : v)
        mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(),
                x.get_den().get_mpz_t());
    std::vector<Int> out(v.size());
    Int content(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(denominator_lcm);
        scaled.canonicalize();
        out[i] = scaled.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
    }
    if (content > 1)
        for (Int& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    for (const Int& x : out) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : out) y = -y;
        break;
    }
    return out;
}

}  // namespace

KernelBasis canonical_span(std::int64_t size, const std::vector<std::vector<Int>>& vectors) {
    std::vector<std::vector<Rat>> rows;
    for (const std::vector<Int>& v : vectors) {
        if (static_cast<std::int64_t>(v.size()) != size)
            throw std::invalid_argument("canonical_span: vector length mismatch");
        std::vector<Rat> row(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) row[i] = Rat(v[i]);
        rows.push_back(std::move(row));
    }

    // Reduced row echelon form over Q; unique for the row space.
    std::size_t next = 0;
    for (std::int64_t c = 0; c < size && next < rows.size(); ++c) {
        std::size_t found = rows.size();
        for (std::size_t r = next; r < rows.size(); ++r)
            if (rows[r][static_cast<std::size_t>(c)] != 0) { found = r; break; }
        if (found == rows.size()) continue;
        std::swap(rows[next], rows[found]);
        Rat inv = rows[next][static_cast<std::size_t>(c)];
        for (Rat& x : rows[next]) x /= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || rows[r][static_cast<std::size_t>(c)] == 0) continue;
            Rat factor = rows[r][static_cast<std::size_t>(c)];
            for (std::int64_t k = 0; k < size; ++k)
                rows[r][static_cast<std::size_t>(k)] -=
                    factor * rows[next][static_cast<std::size_t>(k)];
        }
        ++next;
    }
    rows.resize(next);

    KernelBasis basis;
    basis.size = size;
    for (const std::vector<Rat>& row : rows) basis.vectors.push_back(to_primitive_int(row));
    return basis;
}

KernelBasis kernel_basis(const SparseIntMatrix& m) {
    const std::int64_t n = m.size();
    Echelon ech = eliminate(m);

    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (std::int64_t c : ech.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<Int>> generators;
    for (std::int64_t f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Rat> x(static_cast<std::size_t>(n), Rat(0));
        x[static_cast<std::size_t>(f)] = 1;
        // Rows whose pivot exceeds f contribute nothing; solve the rest in
        // decreasing pivot order.
        for (std::size_t r = ech.rows.size(); r-- > 0;) {
            const std::int64_t p = ech.pivot_cols[r];
            if (p > f) continue;
            Rat s(0);
            const SparseRow& row = ech.rows[r];
            for (std::size_t k = 1; k < row.size(); ++k) {
                const Rat& xv = x[static_cast<std::size_t>(row[k].first)];
                if (xv != 0) s += Rat(row[k].second) * xv;
            }
            if (s != 0) {
                Rat pivot_val(row.front().second);
                x[static_cast<std::size_t>(p)] = -s / pivot_val;
            }
        }
        generators.push_back(to_primitive_int(x));
    }
    return canonical_span(n, generators);
}

std::int64_t rank(const SparseIntMatrix& m) {
    return static_cast<std::int64_t>(eliminate(m).pivot_cols.size());
}

bool in_span(const KernelBasis& basis, const std::vector<Int>& v) {
    if (static_cast<std::int64_t>(v.size()) != basis.size)
        throw std::invalid_argument("in_span: vector length does not match basis");
    std::vector<Rat> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = Rat(v[i]);
    for (const std::vector<Int>& b : basis.vectors) {
        std::size_t lead = 0;
        while (lead < b.size() && b[lead] == 0) ++lead;
        if (lead == b.size()) continue;
        Rat coef = w[lead] / Rat(b[lead]);
        if (coef == 0) continue;
        for (std::size_t i = lead; i < b.size(); ++i)
            if (b[i] != 0) w[i] -= coef * Rat(b[i]);
    }
    return std::all_of(w.begin(), w.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace neighsum
