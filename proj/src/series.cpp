#include "cobalt/series.hpp"

#include "cobalt/error.hpp"

#include <algorithm>

namespace cobalt {

TruncSeries::TruncSeries(int truncation)
{
    if (truncation < 0)
        throw Error(ErrorCode::InvalidArgument, "negative truncation");
    coeffs_.resize(static_cast<std::size_t>(truncation) + 1);
}

TruncSeries TruncSeries::variable(int truncation)
{
    TruncSeries s(truncation);
    if (truncation >= 1)
        s[1] = Polynomial(1);
    return s;
}

TruncSeries TruncSeries::constant(int truncation, const Polynomial& c)
{
    TruncSeries s(truncation);
    s[0] = c;
    return s;
}

TruncSeries TruncSeries::from_coefficients(int truncation, std::vector<Polynomial> coeffs)
{
    TruncSeries s(truncation);
    for (std::size_t k = 0; k < coeffs.size() && k <= static_cast<std::size_t>(truncation); ++k)
        s.coeffs_[k] = std::move(coeffs[k]);
    return s;
}

TruncSeries TruncSeries::truncated(int n) const
{
    TruncSeries out(n);
    for (int k = 0; k <= std::min(n, truncation()); ++k)
        out[k] = (*this)[k];
    return out;
}

bool TruncSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs)
{
    int n = std::min(truncation(), rhs.truncation());
    coeffs_.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        (*this)[k] += rhs[k];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs)
{
    int n = std::min(truncation(), rhs.truncation());
    coeffs_.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        (*this)[k] -= rhs[k];
    return *this;
}

namespace {

TruncSeries multiply(const TruncSeries& a, const TruncSeries& b, int n)
{
    TruncSeries out(n);
    for (int i = 0; i <= std::min(n, a.truncation()); ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; j <= std::min(n - i, b.truncation()); ++j) {
            if (b[j].is_zero())
                continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

} // namespace

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
{
    return multiply(a, b, std::min(a.truncation(), b.truncation()));
}

TruncSeries operator*(TruncSeries a, const Polynomial& c)
{
    for (auto& p : a.coeffs_)
        p *= c;
    return a;
}

TruncSeries TruncSeries::derivative() const
{
    TruncSeries out(std::max(0, truncation() - 1));
    for (int k = 1; k <= truncation(); ++k)
        out[k - 1] = (*this)[k] * Rational(k);
    return out;
}

TruncSeries TruncSeries::integral() const
{
    TruncSeries out(truncation() + 1);
    for (int k = 0; k <= truncation(); ++k)
        out[k + 1] = (*this)[k] * Rational(1, k + 1);
    return out;
}

TruncSeries TruncSeries::substitute_coefficients(std::span<const Polynomial> images) const
{
    TruncSeries out(truncation());
    for (int k = 0; k <= truncation(); ++k)
        out[k] = (*this)[k].substitute(images);
    return out;
}

TruncSeries series_invert(const TruncSeries& f, int N, Base base)
{
    if (N < 0)
        throw Error(ErrorCode::InvalidArgument, "negative truncation");
    const Polynomial& c0 = f[0];
    if (!c0.is_constant() || c0.is_zero())
        throw Error(ErrorCode::NonUnitConstantTerm, "constant term is not a scalar unit");
    Rational c = c0.constant_term();
    if (base == Base::Z && abs(c) != 1)
        throw Error(ErrorCode::NonUnitConstantTerm, "constant term " + c.get_str() + " is not a unit of Z");
    Rational inv = 1 / c;
    TruncSeries g(N);
    g[0] = Polynomial(inv);
    for (int k = 1; k <= N; ++k) {
        Polynomial acc;
        for (int i = 1; i <= std::min(k, f.truncation()); ++i)
            if (!f[i].is_zero() && !g[k - i].is_zero())
                acc += f[i] * g[k - i];
        g[k] = acc * (-inv);
    }
    return g;
}

TruncSeries series_compose(const TruncSeries& f, const TruncSeries& g, int N)
{
    if (!g[0].is_zero())
        throw Error(ErrorCode::NonzeroConstantInner, "inner series has a nonzero constant term");
    int top = std::min(N, f.truncation());
    TruncSeries r = TruncSeries::constant(N, f[top]);
    for (int k = top - 1; k >= 0; --k) {
        r = multiply(r, g, N);
        r[0] += f[k];
    }
    return r;
}

TruncSeries series_revert(const TruncSeries& f, int N)
{
    if (f.truncation() < 1 || !f[0].is_zero() || f[1] != Polynomial(1))
        throw Error(ErrorCode::BadLeadingCoefficient, "series must start with t");
    TruncSeries g = TruncSeries::variable(N);
    for (int k = 2; k <= N; ++k) {
        TruncSeries comp = series_compose(f, g.truncated(k), k);
        g[k] = -comp[k];
    }
    return g;
}

BiSeries BiSeries::in_x(const TruncSeries& f)
{
    BiSeries out(f.truncation());
    for (int k = 0; k <= f.truncation(); ++k)
        out.set(k, 0, f[k]);
    return out;
}

BiSeries BiSeries::in_y(const TruncSeries& f)
{
    BiSeries out(f.truncation());
    for (int k = 0; k <= f.truncation(); ++k)
        out.set(0, k, f[k]);
    return out;
}

Polynomial BiSeries::coefficient(int i, int j) const
{
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Polynomial() : it->second;
}

void BiSeries::set(int i, int j, Polynomial value)
{
    if (i + j > N_)
        return;
    if (value.is_zero())
        terms_.erase({i, j});
    else
        terms_[{i, j}] = std::move(value);
}

void BiSeries::add(int i, int j, const Polynomial& value)
{
    if (i + j > N_ || value.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace({i, j}, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

BiSeries& BiSeries::operator+=(const BiSeries& rhs)
{
    N_ = std::min(N_, rhs.N_);
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->first.first + it->first.second > N_ ? terms_.erase(it) : std::next(it);
    for (const auto& [k, v] : rhs.terms_)
        add(k.first, k.second, v);
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& rhs)
{
    N_ = std::min(N_, rhs.N_);
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->first.first + it->first.second > N_ ? terms_.erase(it) : std::next(it);
    for (const auto& [k, v] : rhs.terms_)
        add(k.first, k.second, -v);
    return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b)
{
    BiSeries out(std::min(a.N_, b.N_));
    for (const auto& [ka, va] : a.terms_) {
        int da = ka.first + ka.second;
        if (da > out.N_)
            continue;
        for (const auto& [kb, vb] : b.terms_) {
            if (da + kb.first + kb.second > out.N_)
                continue;
            out.add(ka.first + kb.first, ka.second + kb.second, va * vb);
        }
    }
    return out;
}

BiSeries BiSeries::truncated(int n) const
{
    BiSeries out(n);
    for (const auto& [k, v] : terms_)
        out.set(k.first, k.second, v);
    return out;
}

BiSeries BiSeries::apply(const TruncSeries& f, const BiSeries& w)
{
    if (!w.coefficient(0, 0).is_zero())
        throw Error(ErrorCode::NonzeroConstantInner, "inner series has a nonzero constant term");
    int N = w.truncation();
    int top = std::min(N, f.truncation());
    BiSeries r(N);
    r.set(0, 0, f[top]);
    for (int k = top - 1; k >= 0; --k) {
        r = r * w;
        r.add(0, 0, f[k]);
    }
    return r;
}

BiSeries BiSeries::substitute(const BiSeries& u, const BiSeries& v) const
{
    if (!u.coefficient(0, 0).is_zero() || !v.coefficient(0, 0).is_zero())
        throw Error(ErrorCode::NonzeroConstantInner, "substituted series must vanish at the origin");
    int N = std::min({N_, u.N_, v.N_});
    int max_i = 0;
    int max_j = 0;
    for (const auto& [k, val] : terms_) {
        max_i = std::max(max_i, k.first);
        max_j = std::max(max_j, k.second);
    }
    auto powers = [N](const BiSeries& s, int top) {
        std::vector<BiSeries> p;
        BiSeries one(N);
        one.set(0, 0, Polynomial(1));
        p.push_back(one);
        BiSeries base = s.truncated(N);
        for (int e = 1; e <= std::min(top, N); ++e)
            p.push_back(p.back() * base);
        return p;
    };
    auto up = powers(u, max_i);
    auto vp = powers(v, max_j);
    BiSeries out(N);
    for (const auto& [k, a] : terms_) {
        if (k.first + k.second > N)
            continue;
        BiSeries prod = up[static_cast<std::size_t>(k.first)] * vp[static_cast<std::size_t>(k.second)];
        for (const auto& [kk, c] : prod.terms_)
            out.add(kk.first, kk.second, a * c);
    }
    return out;
}

TruncSeries BiSeries::diagonal_substitute(const TruncSeries& g) const
{
    if (!g[0].is_zero())
        throw Error(ErrorCode::NonzeroConstantInner, "substituted series must vanish at the origin");
    int N = std::min(N_, g.truncation());
    int max_j = 0;
    for (const auto& [k, val] : terms_)
        max_j = std::max(max_j, k.second);
    std::vector<TruncSeries> gp;
    gp.push_back(TruncSeries::constant(N, Polynomial(1)));
    for (int e = 1; e <= std::min(max_j, N); ++e)
        gp.push_back(gp.back() * g.truncated(N));
    TruncSeries out(N);
    for (const auto& [k, a] : terms_) {
        if (k.first > N || k.second > N)
            continue;
        const TruncSeries& pw = gp[static_cast<std::size_t>(k.second)];
        for (int t = 0; t + k.first <= N; ++t)
            if (!pw[t].is_zero())
                out[t + k.first] += a * pw[t];
    }
    return out;
}

BiSeries BiSeries::substitute_coefficients(std::span<const Polynomial> images) const
{
    BiSeries out(N_);
    for (const auto& [k, v] : terms_)
        out.set(k.first, k.second, v.substitute(images));
    return out;
}

BiSeries BiSeries::swapped() const
{
    BiSeries out(N_);
    for (const auto& [k, v] : terms_)
        out.set(k.second, k.first, v);
    return out;
}

} // namespace cobalt
