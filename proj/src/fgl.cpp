#include "cobalt/fgl.hpp"

#include "cobalt/error.hpp"
#include "cobalt/parse.hpp"

#include <array>
#include <map>

namespace cobalt {

FormalGroupLaw::FormalGroupLaw(RingPtr ring, BiSeries series) : ring_(std::move(ring)), series_(std::move(series))
{
    if (!ring_)
        throw Error(ErrorCode::InvalidArgument, "formal group law without a coefficient ring");
}

StrictIso StrictIso::identity(RingPtr ring, int N) { return {std::move(ring), TruncSeries::variable(N)}; }

StrictIso StrictIso::from_coefficients(RingPtr ring, int N, const std::vector<Polynomial>& b)
{
    TruncSeries s = TruncSeries::variable(N);
    for (std::size_t i = 0; i < b.size() && static_cast<int>(i) + 2 <= N; ++i)
        s[static_cast<int>(i) + 2] = b[i];
    return {std::move(ring), s};
}

Polynomial StrictIso::b(int i) const { return i + 1 <= truncation() ? series[i + 1] : Polynomial(); }

StrictIso StrictIso::inverse() const { return {ring, series_revert(series, truncation())}; }

StrictIso compose(const StrictIso& psi, const StrictIso& phi)
{
    int N = std::min(psi.truncation(), phi.truncation());
    return {psi.ring, series_compose(psi.series, phi.series, N)};
}

namespace {

BiSeries linear_part(int N)
{
    BiSeries s(N);
    s.set(1, 0, Polynomial(1));
    s.set(0, 1, Polynomial(1));
    return s;
}

void require_truncation(int N)
{
    if (N < 1)
        throw Error(ErrorCode::InvalidArgument, "truncation must be at least 1");
}

} // namespace

FormalGroupLaw fgl_additive(RingPtr ring, int N)
{
    require_truncation(N);
    return FormalGroupLaw(std::move(ring), linear_part(N));
}

FormalGroupLaw fgl_multiplicative(RingPtr ring, int N, const Polynomial& beta)
{
    require_truncation(N);
    if (!beta.is_zero() && ring->degree_of(beta) != 1)
        throw Error(ErrorCode::MissingBeta, "beta must be homogeneous of degree 1");
    BiSeries s = linear_part(N);
    s.set(1, 1, -beta);
    return FormalGroupLaw(std::move(ring), s);
}

FormalGroupLaw fgl_multiplicative_scalar(RingPtr ring, int N, const Rational& beta)
{
    require_truncation(N);
    if (!ring->scalars().contains(beta))
        throw Error(ErrorCode::InvalidArgument, "beta = " + to_string(beta) + " is not in " + ring->scalars().name());
    BiSeries s = linear_part(N);
    s.set(1, 1, Polynomial(-beta));
    return FormalGroupLaw(std::move(ring), s);
}

FormalGroupLaw fgl_multiplicative(RingPtr ring, int N, const std::string& beta)
{
    auto idx = ring->find(beta);
    if (!idx || ring->degrees()[static_cast<std::size_t>(*idx)] != 1)
        throw Error(ErrorCode::MissingBeta, "ring has no degree-1 generator named '" + beta + "'");
    Polynomial b = Polynomial::generator(*idx);
    return fgl_multiplicative(std::move(ring), N, b);
}

RingPtr universal_log_ring(int N)
{
    std::vector<GenSpec> gens;
    for (int i = 1; i < N; ++i)
        gens.push_back({"m" + std::to_string(i), i, false});
    return make_ring(RingPresentation::free(Base::Q, std::move(gens)));
}

TruncSeries universal_log(int N)
{
    TruncSeries log = TruncSeries::variable(N);
    for (int i = 1; i < N; ++i)
        log[i + 1] = Polynomial::generator(i - 1);
    return log;
}

FormalGroupLaw fgl_universal_rational(int N)
{
    if (N < 2)
        throw Error(ErrorCode::InvalidArgument, "the universal rational law needs N >= 2");
    TruncSeries log = universal_log(N);
    TruncSeries exp = series_revert(log, N);
    BiSeries sum = BiSeries::in_x(log) + BiSeries::in_y(log);
    return FormalGroupLaw(universal_log_ring(N), BiSeries::apply(exp, sum));
}

RingPtr laurent_q_ring()
{
    static RingPtr ring = make_ring(RingPresentation(Scalars{Base::Q, {}}, {{"b", 1, true}}));
    return ring;
}

RingPtr laurent_z_ring()
{
    static RingPtr ring = make_ring(RingPresentation(Scalars{}, {{"b", 1, true}}));
    return ring;
}

namespace {

using TriKey = std::array<int, 3>;
using TriSeries = std::map<TriKey, Polynomial>;

void tri_add(TriSeries& t, const TriKey& k, const Polynomial& v)
{
    if (v.is_zero())
        return;
    auto [it, inserted] = t.try_emplace(k, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero())
            t.erase(it);
    }
}

std::vector<BiSeries> powers(const BiSeries& w, int top)
{
    BiSeries one(w.truncation());
    one.set(0, 0, Polynomial(1));
    std::vector<BiSeries> p{one};
    for (int e = 1; e <= top; ++e)
        p.push_back(p.back() * w);
    return p;
}

std::string key_string(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

} // namespace

Check fgl_check_axioms(const FormalGroupLaw& F)
{
    Check check{"fgl.axioms", "formal_group_law.axioms", true, {}, {}};
    const RingPresentation& ring = F.ring();
    int N = F.truncation();
    auto fail = [&](const std::string& axiom, nlohmann::json witness) {
        if (check.pass) {
            check.pass = false;
            witness["axiom"] = axiom;
            check.witness = witness;
        }
    };

    bool unit_ok = true;
    for (const auto& [k, v] : F.series().terms()) {
        auto [i, j] = k;
        if (i != 0 && j != 0)
            continue;
        Polynomial expect = (i + j == 1) ? Polynomial(1) : Polynomial();
        if (v != expect) {
            unit_ok = false;
            fail("unit", {{"coefficient", key_string(i, j)}, {"value", ring.format(v)}});
        }
    }
    for (auto [i, j] : {std::pair{1, 0}, std::pair{0, 1}})
        if (F.coefficient(i, j) != Polynomial(1)) {
            unit_ok = false;
            fail("unit", {{"coefficient", key_string(i, j)}, {"value", ring.format(F.coefficient(i, j))}});
        }

    bool comm_ok = true;
    bool graded_ok = true;
    for (const auto& [k, v] : F.series().terms()) {
        auto [i, j] = k;
        if (F.coefficient(j, i) != v) {
            comm_ok = false;
            fail("commutativity", {{"coefficient", key_string(i, j)}});
        }
        if (i + j >= 2) {
            auto deg = ring.degree_of(v);
            if (!deg || *deg != i + j - 1) {
                graded_ok = false;
                fail("grading", {{"coefficient", key_string(i, j)}, {"value", ring.format(v)}});
            }
        }
    }

    // F(F(x, y), z) and F(x, F(y, z)) as series in x, y, z.
    std::vector<BiSeries> wp = powers(F.series().truncated(N), N);
    TriSeries residual;
    for (const auto& [k, a] : F.series().terms()) {
        auto [i, j] = k;
        for (const auto& [kk, c] : wp[static_cast<std::size_t>(i)].terms())
            if (kk.first + kk.second + j <= N)
                tri_add(residual, {kk.first, kk.second, j}, a * c);
        for (const auto& [kk, c] : wp[static_cast<std::size_t>(j)].terms())
            if (i + kk.first + kk.second <= N)
                tri_add(residual, {i, kk.first, kk.second}, -(a * c));
    }
    bool assoc_ok = residual.empty();
    if (!assoc_ok) {
        const auto& [k, v] = *residual.begin();
        fail("associativity", {{"monomial", "x^" + std::to_string(k[0]) + " y^" + std::to_string(k[1]) + " z^" +
                                                 std::to_string(k[2])},
                               {"residual", ring.format(v)}});
    }
    check.details = {{"truncation", N},
                     {"unit", unit_ok},
                     {"commutativity", comm_ok},
                     {"associativity", assoc_ok},
                     {"grading", graded_ok}};
    return check;
}

FormalGroupLaw pushforward(const FormalGroupLaw& F, const StrictIso& phi)
{
    int N = std::min(F.truncation(), phi.truncation());
    TruncSeries inv = series_revert(phi.series.truncated(N), N);
    BiSeries inner = F.series().truncated(N).substitute(BiSeries::in_x(inv), BiSeries::in_y(inv));
    return FormalGroupLaw(F.ring_ptr(), BiSeries::apply(phi.series.truncated(N), inner));
}

bool is_strict_iso(const FormalGroupLaw& F, const FormalGroupLaw& G, const StrictIso& phi)
{
    int N = std::min({F.truncation(), G.truncation(), phi.truncation()});
    TruncSeries p = phi.series.truncated(N);
    BiSeries lhs = BiSeries::apply(p, F.series().truncated(N));
    BiSeries rhs = G.series().truncated(N).substitute(BiSeries::in_x(p), BiSeries::in_y(p));
    return lhs == rhs;
}

TruncSeries fgl_log(const FormalGroupLaw& F)
{
    if (F.ring().base() != Base::Q)
        throw Error(ErrorCode::NotQAlgebra, "logarithms need a Q-algebra, the ring is over " + F.ring().scalars().name());
    int N = F.truncation();
    TruncSeries dy(N - 1);
    for (int i = 0; i <= N - 1; ++i)
        dy[i] = F.coefficient(i, 1);
    return series_invert(dy, N - 1, Base::Q).integral();
}

StrictIso chern_exp(int N)
{
    require_truncation(N);
    TruncSeries s(N);
    Rational factorial = 1;
    for (int k = 1; k <= N; ++k) {
        factorial *= k;
        Rational c = Rational((k - 1) % 2 ? -1 : 1) / factorial;
        s[k] = Polynomial::generator(0, k - 1) * c;
    }
    return {laurent_q_ring(), s};
}

TruncSeries p_series(const FormalGroupLaw& F, long p, int N)
{
    if (p < 1)
        throw Error(ErrorCode::InvalidArgument, "p-series needs p >= 1");
    N = std::min(N, F.truncation());
    BiSeries f = F.series().truncated(N);
    TruncSeries g = TruncSeries::variable(N);
    for (long k = 2; k <= p; ++k)
        g = f.diagonal_substitute(g);
    return g;
}

long integer_power(long base, int exp)
{
    long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (1L << 40) / std::max(base, 1L))
            throw Error(ErrorCode::BoundExceeded, "p^h is too large");
        r *= base;
    }
    return r;
}

LandweberGenerators landweber_generators(const FormalGroupLaw& F, long p, int h)
{
    if (p < 2 || h < 0)
        throw Error(ErrorCode::InvalidArgument, "need a prime p and a height h >= 0");
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0)
            throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    long need = integer_power(p, h);
    if (F.truncation() < need)
        throw Error(ErrorCode::TruncationTooSmall, "height " + std::to_string(h) + " at p=" + std::to_string(p) +
                                                       " needs truncation " + std::to_string(need) + ", law has " +
                                                       std::to_string(F.truncation()));
    TruncSeries ps = p_series(F, p, static_cast<int>(need));
    LandweberGenerators out{p, h, {Polynomial(Rational(p))}};
    for (int n = 1; n <= h; ++n)
        out.v.push_back(ps[static_cast<int>(integer_power(p, n))]);
    return out;
}

FormalGroupLaw fgl_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object() || !doc.contains("ring"))
        throw Error(ErrorCode::SyntaxError, "formal group law document needs a \"ring\" entry");
    RingPtr ring = make_ring(presentation_from_json(doc["ring"]));
    int N = doc.value("truncation", 0);
    require_truncation(N);
    BiSeries s = linear_part(N);
    std::map<std::pair<int, int>, Polynomial> given;
    const auto coeffs = doc.value("coefficients", nlohmann::json::array());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const auto& c = coeffs[k];
        int i = c.at("i").get<int>();
        int j = c.at("j").get<int>();
        if (i < 0 || j < 0)
            throw Error(ErrorCode::SyntaxError, "coefficients[" + std::to_string(k) + "] has a negative index");
        try {
            given[{i, j}] = parse_expression(c.at("value").get<std::string>(), *ring);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SyntaxError)
                throw;
            std::string msg = e.what();
            throw Error(ErrorCode::SyntaxError, "coefficients[" + std::to_string(k) + "], " + msg.substr(msg.find(": ") + 2));
        }
    }
    for (const auto& [k, v] : given) {
        s.set(k.first, k.second, v);
        if (!given.count({k.second, k.first}))
            s.set(k.second, k.first, v);
    }
    return FormalGroupLaw(ring, s);
}

nlohmann::json fgl_to_json(const FormalGroupLaw& F)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [k, v] : F.series().terms()) {
        if (k.first + k.second < 2)
            continue;
        coeffs.push_back({{"i", k.first}, {"j", k.second}, {"value", F.ring().format(v)}});
    }
    return {{"truncation", F.truncation()}, {"coefficients", coeffs}};
}

nlohmann::json series_to_json(const RingPresentation& ring, const TruncSeries& s)
{
    nlohmann::json out = nlohmann::json::array();
    for (int k = 0; k <= s.truncation(); ++k)
        if (!s[k].is_zero())
            out.push_back({{"exponent", k}, {"value", ring.format(s[k])}});
    return out;
}

} // namespace cobalt
