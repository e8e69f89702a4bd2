#pragma once

// Independent reference implementations used only by the tests. None of these
// call into the library routine they are checking.

#include "cobalt/matrix.hpp"
#include "cobalt/polynomial.hpp"
#include "cobalt/ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using cobalt::Integer;
using cobalt::Rational;

/// Rank over Q by plain Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> rows)
{
    std::size_t rank = 0;
    std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0)
                continue;
            Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < ncols; ++k)
                rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Leibniz-expansion determinant of a small square integer matrix.
inline Integer leibniz_det(const std::vector<std::vector<Integer>>& m)
{
    std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Integer total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        Integer term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i)
            term *= m[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out)
{
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

/// Invariant factors from determinantal divisors: D_k = gcd of all k x k minors,
/// d_k = D_k / D_{k-1}. Only the nonzero ones are returned.
inline std::vector<Integer> determinantal_divisors(const cobalt::IntMatrix& m)
{
    std::vector<Integer> out;
    Integer prev = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        subsets(m.rows(), k, rs);
        subsets(m.cols(), k, cs);
        Integer g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                std::vector<std::vector<Integer>> minor(k, std::vector<Integer>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        minor[i][j] = m(r[i], c[j]);
                Integer d = leibniz_det(minor);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            }
        if (g == 0)
            break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

/// All exponent vectors of a polynomial ring with positive generator degrees
/// whose weighted degree is exactly `degree`, by exhaustive nested loops.
inline std::vector<std::vector<int>> exponent_vectors(const std::vector<int>& degrees, long degree)
{
    std::vector<std::vector<int>> out;
    if (degree < 0)
        return out;
    std::vector<int> e(degrees.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == degrees.size()) {
            long total = 0;
            for (std::size_t k = 0; k < e.size(); ++k)
                total += static_cast<long>(e[k]) * degrees[k];
            if (total == degree)
                out.push_back(e);
            return;
        }
        for (int x = 0; x <= degree; ++x) {
            e[i] = x;
            rec(i + 1);
        }
        e[i] = 0;
    };
    rec(0);
    return out;
}

/// Degree-d component of a graded polynomial ring (positive degrees, no
/// Laurent generators) by brute force: the full monomial-by-relation integer
/// matrix, rank over Q by elimination and torsion via determinantal divisors
/// when small enough, SNF otherwise.
struct ComponentOracle {
    long free_rank = 0;
    std::vector<Integer> torsion;
};

inline ComponentOracle brute_force_component(const cobalt::RingPresentation& ring, long degree)
{
    std::vector<int> degs = ring.degrees();
    auto cols = exponent_vectors(degs, degree);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < cols.size(); ++i)
        index[cols[i]] = i;
    cobalt::IntMatrix rows(0, cols.size());
    for (const auto& rel : ring.relations()) {
        long e = *ring.degree_of(rel);
        for (const auto& t : exponent_vectors(degs, degree - e)) {
            std::vector<Integer> row(cols.size());
            for (const auto& [m, c] : rel.terms()) {
                std::vector<int> ex = t;
                for (const auto& [g, k] : m.factors())
                    ex[static_cast<std::size_t>(g)] += k;
                row[index.at(ex)] += c.get_num();
            }
            rows.append_row(row);
        }
    }
    std::vector<std::vector<Rational>> q(rows.rows(), std::vector<Rational>(cols.size()));
    for (std::size_t r = 0; r < rows.rows(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            q[r][c] = rows(r, c);
    ComponentOracle out;
    std::size_t rank = rational_rank(q);
    out.free_rank = static_cast<long>(cols.size() - rank);
    std::vector<Integer> divs;
    if (rows.rows() <= 7 && cols.size() <= 7)
        divs = determinantal_divisors(rows);
    else
        divs = cobalt::smith_normal_form(rows).divisors;
    for (const auto& d : divs)
        if (d != 1)
            out.torsion.push_back(d);
    return out;
}

/// Random sparse polynomial over the given integer-degree generators.
inline cobalt::Polynomial random_polynomial(std::mt19937& rng, int ngens, int max_terms, int max_exp, bool laurent)
{
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> expo(laurent ? -max_exp : 0, max_exp);
    cobalt::Polynomial p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<int> e(static_cast<std::size_t>(ngens));
        for (auto& x : e)
            x = expo(rng);
        p.add_term(cobalt::Monomial::from_exponents(e), Rational(coeff(rng)));
    }
    return p;
}

/// Number of partitions by exhaustive enumeration of weakly decreasing lists.
inline long brute_partitions(int m)
{
    std::function<long(int, int)> count = [&](int rest, int cap) -> long {
        if (rest == 0)
            return 1;
        long total = 0;
        for (int part = std::min(rest, cap); part >= 1; --part)
            total += count(rest - part, part);
        return total;
    };
    return m < 0 ? 0 : count(m, m);
}

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}: the number of
/// semistandard fillings of nu/lambda with content mu whose reverse reading
/// word is a lattice word. Exhaustive backtracking.
inline long lr_coefficient(const std::vector<int>& lambda, const std::vector<int>& mu, const std::vector<int>& nu)
{
    auto part = [](const std::vector<int>& p, std::size_t i) { return i < p.size() ? p[i] : 0; };
    int sl = 0, sm = 0, sn = 0;
    for (int v : lambda)
        sl += v;
    for (int v : mu)
        sm += v;
    for (int v : nu)
        sn += v;
    if (sl + sm != sn)
        return 0;
    for (std::size_t i = 0; i < std::max(lambda.size(), nu.size()); ++i)
        if (part(lambda, i) > part(nu, i))
            return 0;
    // Cells in reading order: rows top to bottom, right to left.
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < nu.size(); ++r)
        for (int c = nu[r] - 1; c >= part(lambda, r); --c)
            cells.emplace_back(static_cast<int>(r), c);
    std::map<std::pair<int, int>, int> filling;
    std::vector<int> used(mu.size() + 1, 0);
    long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[idx];
        for (int v = 1; v <= static_cast<int>(mu.size()); ++v) {
            if (used[static_cast<std::size_t>(v)] >= mu[static_cast<std::size_t>(v - 1)])
                continue;
            // Lattice condition on the reading word so far.
            if (v > 1 && used[static_cast<std::size_t>(v)] + 1 > used[static_cast<std::size_t>(v - 1)])
                continue;
            // Row weakly increasing: the cell to the right was filled already.
            auto right = filling.find({r, c + 1});
            if (right != filling.end() && right->second < v)
                continue;
            // Column strictly increasing: the cell above is in lambda or filled.
            if (r > 0 && c >= part(lambda, static_cast<std::size_t>(r - 1))) {
                auto up = filling.find({r - 1, c});
                if (up != filling.end() && up->second >= v)
                    continue;
            }
            filling[{r, c}] = v;
            ++used[static_cast<std::size_t>(v)];
            rec(idx + 1);
            --used[static_cast<std::size_t>(v)];
            filling.erase({r, c});
        }
    };
    rec(0);
    return count;
}

} // namespace oracle
