#pragma once

#include "cobalt/polynomial.hpp"

#include <map>
#include <utility>
#include <vector>

namespace cobalt {

/// Power series sum_{k=0}^N c_k t^k with polynomial coefficients, truncated
/// at t^N. Arithmetic never looks past the truncation.
class TruncSeries {
public:
    explicit TruncSeries(int truncation = 0);
    static TruncSeries variable(int truncation);
    static TruncSeries constant(int truncation, const Polynomial& c);
    static TruncSeries from_coefficients(int truncation, std::vector<Polynomial> coeffs);

    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Polynomial& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    Polynomial& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<Polynomial>& coefficients() const { return coeffs_; }

    TruncSeries truncated(int n) const;
    bool is_zero() const;

    TruncSeries& operator+=(const TruncSeries& rhs);
    TruncSeries& operator-=(const TruncSeries& rhs);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(TruncSeries a, const Polynomial& c);
    bool operator==(const TruncSeries&) const = default;

    TruncSeries derivative() const;
    /// Termwise antiderivative with zero constant term (divides by k+1).
    TruncSeries integral() const;
    TruncSeries substitute_coefficients(std::span<const Polynomial> images) const;

private:
    std::vector<Polynomial> coeffs_;
};

/// Inverse of f modulo t^{N+1}. The constant term must be +-1, or any nonzero
/// rational when `base` is Q.
TruncSeries series_invert(const TruncSeries& f, int N, Base base = Base::Z);
/// f(g(t)) modulo t^{N+1}; g must have zero constant term.
TruncSeries series_compose(const TruncSeries& f, const TruncSeries& g, int N);
/// Functional inverse of f = t + ..., modulo t^{N+1}.
TruncSeries series_revert(const TruncSeries& f, int N);

/// Two-variable series sum a_{ij} x^i y^j truncated at total degree N, stored sparsely.
class BiSeries {
public:
    using Key = std::pair<int, int>;

    explicit BiSeries(int truncation = 0) : N_(truncation) {}
    /// f(x) or f(y) viewed as a two-variable series.
    static BiSeries in_x(const TruncSeries& f);
    static BiSeries in_y(const TruncSeries& f);

    int truncation() const { return N_; }
    const std::map<Key, Polynomial>& terms() const { return terms_; }
    Polynomial coefficient(int i, int j) const;
    void set(int i, int j, Polynomial value);
    void add(int i, int j, const Polynomial& value);
    bool operator==(const BiSeries&) const = default;

    BiSeries& operator+=(const BiSeries& rhs);
    BiSeries& operator-=(const BiSeries& rhs);
    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);

    BiSeries truncated(int n) const;
    /// f(W) for a one-variable series f, W with zero constant term.
    static BiSeries apply(const TruncSeries& f, const BiSeries& w);
    /// sum a_{ij} u^i v^j with u, v two-variable series without constant term.
    BiSeries substitute(const BiSeries& u, const BiSeries& v) const;
    /// sum a_{ij} x^i g(x)^j as a one-variable series.
    TruncSeries diagonal_substitute(const TruncSeries& g) const;
    BiSeries substitute_coefficients(std::span<const Polynomial> images) const;
    BiSeries swapped() const;

private:
    int N_;
    std::map<Key, Polynomial> terms_;
};

} // namespace cobalt
