#pragma once

#include "cobalt/scalar.hpp"

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cobalt {

/// Sparse Laurent monomial: (generator index, exponent) pairs sorted by index,
/// zero exponents never stored.
class Monomial {
public:
    using Factor = std::pair<int, int>;

    Monomial() = default;
    static Monomial generator(int gen, int exponent = 1);
    static Monomial from_exponents(std::span<const int> exponents);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    int exponent(int gen) const;
    /// Largest |exponent| over all factors.
    int max_abs_exponent() const;
    bool has_negative_exponent() const;

    long degree(std::span<const int> gen_degrees) const;
    Monomial operator*(const Monomial& rhs) const;
    Monomial inverse() const;
    /// Monomial with every generator index shifted by `offset`.
    Monomial shifted(int offset) const;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<Factor> factors_;
};

/// Graded-lex comparison over generator declaration order: higher degree first,
/// then larger exponent of the earliest generator first.
bool grlex_greater(const Monomial& a, const Monomial& b, std::span<const int> gen_degrees);

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(const Rational& c);
    Polynomial(long c) : Polynomial(Rational(c)) {}
    Polynomial(const Monomial& m, const Rational& c = 1);
    static Polynomial generator(int gen, int exponent = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    std::size_t size() const { return terms_.size(); }
    /// Largest generator index used, or -1.
    int max_generator() const;
    bool is_integral() const;
    bool uses_generator(int gen) const;

    /// Adams degree when every term has the same degree; nullopt for inhomogeneous
    /// polynomials. The zero polynomial is homogeneous of every degree and reports 0.
    std::optional<long> homogeneous_degree(std::span<const int> gen_degrees) const;
    /// Homogeneous component of the given degree.
    Polynomial component(long degree, std::span<const int> gen_degrees) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);
    void add_term(const Monomial& m, const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;
    bool operator==(const Polynomial&) const = default;

    Polynomial pow(unsigned exponent) const;
    /// Inverse of a single-term polynomial; throws otherwise.
    Polynomial unit_inverse() const;
    /// Ring substitution: generator g goes to images[g]. Generators with negative
    /// exponents require single-term images.
    Polynomial substitute(std::span<const Polynomial> images) const;
    Polynomial shifted(int offset) const;

    std::string to_string(std::span<const std::string> names) const;

private:
    TermMap terms_;
};

} // namespace cobalt
