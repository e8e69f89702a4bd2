#include "cobalt/scalar.hpp"

#include "cobalt/error.hpp"

namespace cobalt {

bool Scalars::is_unit(const Integer& d) const
{
    if (d == 0)
        return false;
    if (base == Base::Q)
        return true;
    if (local_prime)
        return d % *local_prime != 0;
    return abs(d) == 1;
}

Integer Scalars::nonunit_part(const Integer& d) const
{
    if (base == Base::Q)
        return d == 0 ? Integer(0) : Integer(1);
    Integer a = abs(d);
    if (!local_prime || a == 0)
        return a;
    Integer part = 1;
    while (a % *local_prime == 0) {
        a /= *local_prime;
        part *= *local_prime;
    }
    return part;
}

bool Scalars::contains(const Rational& q) const
{
    if (base == Base::Q)
        return true;
    Integer den = q.get_den();
    if (local_prime)
        return den % *local_prime != 0;
    return den == 1;
}

std::string Scalars::name() const
{
    if (base == Base::Q)
        return "Q";
    if (local_prime)
        return "Z_(" + std::to_string(*local_prime) + ")";
    return "Z";
}

std::string to_string(const Integer& v) { return v.get_str(); }
std::string to_string(const Rational& v) { return v.get_str(); }

Rational parse_rational(const std::string& text)
{
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw Error(ErrorCode::SyntaxError, "not a rational number: '" + text + "'");
    q.canonicalize();
    return q;
}

} // namespace cobalt
