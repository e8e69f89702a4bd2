#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace cobalt {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Base { Z, Q };

/// Ground ring of a computation: Z, Q, or the localization Z_(p).
///
/// Localization is modelled only through which integers count as units;
/// all stored values stay integers or rationals.
struct Scalars {
    Base base = Base::Z;
    std::optional<long> local_prime;

    bool is_unit(const Integer& d) const;
    /// Part of d that is not a unit: |d| for Z, 1 for Q, p^{v_p(d)} for Z_(p).
    Integer nonunit_part(const Integer& d) const;
    /// Whether a rational scalar belongs to the ground ring.
    bool contains(const Rational& q) const;
    std::string name() const;
};

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
Rational parse_rational(const std::string& text);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

} // namespace cobalt
