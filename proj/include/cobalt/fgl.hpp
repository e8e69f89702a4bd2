#pragma once

#include "cobalt/report.hpp"
#include "cobalt/ring.hpp"
#include "cobalt/series.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cobalt {

/// Truncated two-variable series F(x, y) over a presented ring. The full
/// series is stored, including the linear part, so axioms are checked rather
/// than assumed.
class FormalGroupLaw {
public:
    FormalGroupLaw(RingPtr ring, BiSeries series);

    const RingPresentation& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    int truncation() const { return series_.truncation(); }
    const BiSeries& series() const { return series_; }
    /// Coefficient of x^i y^j.
    Polynomial coefficient(int i, int j) const { return series_.coefficient(i, j); }
    /// F(u, v) for series without constant term.
    BiSeries apply(const BiSeries& u, const BiSeries& v) const { return series_.substitute(u, v); }

private:
    RingPtr ring_;
    BiSeries series_;
};

/// phi(x) = x + sum_{i>=1} b_i x^{i+1}.
struct StrictIso {
    RingPtr ring;
    TruncSeries series;

    static StrictIso identity(RingPtr ring, int N);
    static StrictIso from_coefficients(RingPtr ring, int N, const std::vector<Polynomial>& b);
    int truncation() const { return series.truncation(); }
    /// b_i, the coefficient of x^{i+1}.
    Polynomial b(int i) const;
    StrictIso inverse() const;
};

/// psi o phi, applying phi first.
StrictIso compose(const StrictIso& psi, const StrictIso& phi);

FormalGroupLaw fgl_additive(RingPtr ring, int N);
/// x + y - beta x y where beta is the named degree-1 generator.
FormalGroupLaw fgl_multiplicative(RingPtr ring, int N, const std::string& beta = "b");
/// x + y - beta x y for an explicit beta (zero gives the additive law).
FormalGroupLaw fgl_multiplicative(RingPtr ring, int N, const Polynomial& beta);
/// x + y - beta x y for a scalar beta, an ungraded law in degree 0.
FormalGroupLaw fgl_multiplicative_scalar(RingPtr ring, int N, const Rational& beta);

/// Q[m_1..m_{N-1}], m_i in degree i.
RingPtr universal_log_ring(int N);
/// x + sum m_i x^{i+1} over universal_log_ring(N).
TruncSeries universal_log(int N);
/// exp(log x + log y) over universal_log_ring(N).
FormalGroupLaw fgl_universal_rational(int N);

/// Q[b, b^{-1}] with b in degree 1.
RingPtr laurent_q_ring();
RingPtr laurent_z_ring();

Check fgl_check_axioms(const FormalGroupLaw& F);

/// G(x, y) = phi(F(phi^{-1} x, phi^{-1} y)).
FormalGroupLaw pushforward(const FormalGroupLaw& F, const StrictIso& phi);
/// Whether phi(F(x, y)) == G(phi x, phi y) up to the truncation.
bool is_strict_iso(const FormalGroupLaw& F, const FormalGroupLaw& G, const StrictIso& phi);

/// Logarithm by integrating the invariant differential; NotQAlgebra over Z.
TruncSeries fgl_log(const FormalGroupLaw& F);

/// (1 - e^{-b x}) / b over laurent_q_ring().
StrictIso chern_exp(int N);

/// [p](x), iterating F(x, [k-1](x)).
TruncSeries p_series(const FormalGroupLaw& F, long p, int N);

struct LandweberGenerators {
    long p = 0;
    int height = 0;
    /// v_0 = p and v_n = coefficient of x^{p^n} in [p](x).
    std::vector<Polynomial> v;
};

LandweberGenerators landweber_generators(const FormalGroupLaw& F, long p, int h);

/// {"ring": presentation, "truncation": N, "coefficients": [{"i","j","value"}]}.
/// The linear part x + y is implicit; a missing (j, i) entry mirrors (i, j).
FormalGroupLaw fgl_from_json(const nlohmann::json& doc);
nlohmann::json fgl_to_json(const FormalGroupLaw& F);
nlohmann::json series_to_json(const RingPresentation& ring, const TruncSeries& s);

long integer_power(long base, int exp);

} // namespace cobalt
