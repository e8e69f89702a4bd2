#include "cobalt/polynomial.hpp"

#include "cobalt/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace cobalt {

Monomial Monomial::generator(int gen, int exponent)
{
    Monomial m;
    if (exponent != 0)
        m.factors_.emplace_back(gen, exponent);
    return m;
}

Monomial Monomial::from_exponents(std::span<const int> exponents)
{
    Monomial m;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] != 0)
            m.factors_.emplace_back(static_cast<int>(i), exponents[i]);
    return m;
}

int Monomial::exponent(int gen) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{gen, 0},
                               [](const Factor& a, const Factor& b) { return a.first < b.first; });
    return (it != factors_.end() && it->first == gen) ? it->second : 0;
}

int Monomial::max_abs_exponent() const
{
    int best = 0;
    for (const auto& [g, e] : factors_)
        best = std::max(best, std::abs(e));
    return best;
}

bool Monomial::has_negative_exponent() const
{
    return std::any_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second < 0; });
}

long Monomial::degree(std::span<const int> gen_degrees) const
{
    long d = 0;
    for (const auto& [g, e] : factors_)
        d += static_cast<long>(e) * gen_degrees[static_cast<std::size_t>(g)];
    return d;
}

Monomial Monomial::operator*(const Monomial& rhs) const
{
    Monomial out;
    out.factors_.reserve(factors_.size() + rhs.factors_.size());
    auto a = factors_.begin();
    auto b = rhs.factors_.begin();
    while (a != factors_.end() || b != rhs.factors_.end()) {
        if (b == rhs.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0)
                out.factors_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return out;
}

Monomial Monomial::inverse() const
{
    Monomial out = *this;
    for (auto& f : out.factors_)
        f.second = -f.second;
    return out;
}

Monomial Monomial::shifted(int offset) const
{
    Monomial out = *this;
    for (auto& f : out.factors_)
        f.first += offset;
    return out;
}

bool grlex_greater(const Monomial& a, const Monomial& b, std::span<const int> gen_degrees)
{
    long da = a.degree(gen_degrees);
    long db = b.degree(gen_degrees);
    if (da != db)
        return da > db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < fa.size() || j < fb.size()) {
        int ga = i < fa.size() ? fa[i].first : 1 << 30;
        int gb = j < fb.size() ? fb[j].first : 1 << 30;
        int g = std::min(ga, gb);
        int ea = ga == g ? fa[i].second : 0;
        int eb = gb == g ? fb[j].second : 0;
        if (ea != eb)
            return ea > eb;
        if (ga == g)
            ++i;
        if (gb == g)
            ++j;
    }
    return false;
}

namespace {

Rational canonical(const Rational& c)
{
    Rational r = c;
    r.canonicalize();
    return r;
}

} // namespace

Polynomial::Polynomial(const Rational& c)
{
    if (c != 0)
        terms_.emplace(Monomial{}, canonical(c));
}

Polynomial::Polynomial(const Monomial& m, const Rational& c)
{
    if (c != 0)
        terms_.emplace(m, canonical(c));
}

Polynomial Polynomial::generator(int gen, int exponent) { return Polynomial(Monomial::generator(gen, exponent)); }

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit()); }

Rational Polynomial::constant_term() const { return coefficient(Monomial{}); }

Rational Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::max_generator() const
{
    int g = -1;
    for (const auto& [m, c] : terms_)
        if (!m.factors().empty())
            g = std::max(g, m.factors().back().first);
    return g;
}

bool Polynomial::is_integral() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

bool Polynomial::uses_generator(int gen) const
{
    return std::any_of(terms_.begin(), terms_.end(), [gen](const auto& t) { return t.first.exponent(gen) != 0; });
}

std::optional<long> Polynomial::homogeneous_degree(std::span<const int> gen_degrees) const
{
    if (terms_.empty())
        return 0;
    long d = terms_.begin()->first.degree(gen_degrees);
    for (const auto& [m, c] : terms_)
        if (m.degree(gen_degrees) != d)
            return std::nullopt;
    return d;
}

Polynomial Polynomial::component(long degree, std::span<const int> gen_degrees) const
{
    Polynomial out;
    for (const auto& [m, c] : terms_)
        if (m.degree(gen_degrees) == degree)
            out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, canonical(c));
    if (!inserted) {
        it->second += canonical(c);
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs)
{
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    const Rational k = canonical(c);
    for (auto& [m, v] : terms_)
        v *= k;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out;
    if (a.is_zero() || b.is_zero())
        return out;
    Rational prod;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            prod = ca * cb;
            out.add_term(ma * mb, prod);
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const
{
    Polynomial result(1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1u;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

Polynomial Polynomial::unit_inverse() const
{
    if (terms_.size() != 1)
        throw Error(ErrorCode::NonUnitConstantTerm, "only single-term polynomials are invertible here");
    const auto& [m, c] = *terms_.begin();
    return Polynomial(m.inverse(), 1 / c);
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const
{
    std::map<std::pair<int, int>, Polynomial> powers;
    auto power_of = [&](int g, int e) -> const Polynomial& {
        auto key = std::make_pair(g, e);
        auto it = powers.find(key);
        if (it != powers.end())
            return it->second;
        const Polynomial& img = images[static_cast<std::size_t>(g)];
        Polynomial value = e > 0 ? img.pow(static_cast<unsigned>(e))
                                 : img.unit_inverse().pow(static_cast<unsigned>(-e));
        return powers.emplace(key, std::move(value)).first->second;
    };
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (m.factors().size() > static_cast<std::size_t>(0) &&
            static_cast<std::size_t>(m.factors().back().first) >= images.size())
            throw Error(ErrorCode::InvalidArgument, "substitution is missing a generator image");
        Polynomial term(c);
        for (const auto& [g, e] : m.factors()) {
            term *= power_of(g, e);
            if (term.is_zero())
                break;
        }
        out += term;
    }
    return out;
}

Polynomial Polynomial::shifted(int offset) const
{
    Polynomial out;
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m.shifted(offset), c);
    return out;
}

std::string Polynomial::to_string(std::span<const std::string> names) const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
    std::vector<int> unit_degrees(static_cast<std::size_t>(max_generator() + 1), 1);
    std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
        long ta = 0;
        long tb = 0;
        for (const auto& f : a.first.factors())
            ta += std::abs(f.second);
        for (const auto& f : b.first.factors())
            tb += std::abs(f.second);
        if (ta != tb)
            return ta > tb;
        return grlex_greater(a.first, b.first, unit_degrees);
    });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : ordered) {
        Rational mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        bool unit_coeff = mag == 1;
        if (!unit_coeff || m.is_unit())
            out += mag.get_str();
        bool need_star = !unit_coeff;
        for (const auto& [g, e] : m.factors()) {
            if (need_star)
                out += "*";
            need_star = true;
            auto idx = static_cast<std::size_t>(g);
            out += idx < names.size() ? names[idx] : "g" + std::to_string(g);
            if (e < 0)
                out += "_inv";
            if (std::abs(e) != 1)
                out += "^" + std::to_string(std::abs(e));
        }
    }
    return out;
}

} // namespace cobalt
