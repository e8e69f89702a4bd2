#pragma once

#include "cobalt/fgl.hpp"
#include "cobalt/graded.hpp"
#include "cobalt/report.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cobalt {

/// Decides p == 0 in a presented ring, degree by degree, through the span of
/// the relation multiples. Rings without relations compare terms directly.
/// With finite components every monomial of the degree is used, so the test is
/// exact. Otherwise a zero found inside the exponent bound is a certificate and
/// a miss means "not certified".
class ZeroTest {
public:
    ZeroTest(RingPtr ring, int exponent_bound);
    bool is_zero(const Polynomial& p);
    bool equal(const Polynomial& a, const Polynomial& b) { return is_zero(a - b); }
    const RingPresentation& ring() const { return *ring_; }

private:
    struct Piece {
        std::unique_ptr<GradedPiece> piece;
        std::unique_ptr<LatticeQuotient> quotient;
    };
    RingPtr ring_;
    int bound_;
    bool finite_ = true;
    std::map<std::pair<long, int>, Piece> cache_;
};

/// Gamma^{tensor k} over A, presented by k copies of Gamma's generators. In
/// copy c >= 1 the generator eta_L(a) is eliminated in favour of eta_R(a) from
/// copy c - 1, which requires eta_L to send each generator of A to a distinct
/// generator of Gamma.
struct TensorPower {
    RingPtr ring;
    int copies = 0;
    /// inclusion[c][g]: image of Gamma generator g in copy c.
    std::vector<std::vector<Polynomial>> inclusion;
    /// For each generator of ring: (copy, Gamma generator).
    std::vector<std::pair<int, int>> origin;

    /// Images of ring's generators for the map that is f[c] on copy c.
    std::vector<Polynomial> map_images(const std::vector<std::vector<Polynomial>>& f) const;
};

struct HopfAlgebroidPresentation {
    RingPtr A;
    RingPtr Gamma;
    /// Images of A's generators in Gamma.
    std::vector<Polynomial> eta_L;
    std::vector<Polynomial> eta_R;
    /// Images of Gamma's generators in A.
    std::vector<Polynomial> counit;
    /// Gamma tensor_A Gamma and the images of Gamma's generators in it.
    std::shared_ptr<const TensorPower> square;
    std::vector<Polynomial> comult;
    /// Images of Gamma's generators in Gamma.
    std::optional<std::vector<Polynomial>> conjugation;
    int truncation = 0;
};

TensorPower tensor_power(const RingPtr& A, const RingPtr& Gamma, const std::vector<Polynomial>& eta_L,
                         const std::vector<Polynomial>& eta_R, int copies);

/// A = Q[m_1..m_{N-1}], Gamma = A[b_1..b_{N-1}] with log_L = log_R o b.
HopfAlgebroidPresentation mumu_rational_truncated(int N);

/// Gamma = A with every structure map the identity.
HopfAlgebroidPresentation trivial_hopf(RingPtr A);

/// Adds the copy-1 image of the named Gamma generator to its coproduct.
HopfAlgebroidPresentation corrupt_comultiplication(HopfAlgebroidPresentation H, const std::string& generator);

/// Well-definedness of every structure map, counit, unit compatibility,
/// coassociativity and, when present, the conjugation identities, each on
/// every generator.
Check verify_hopf_axioms(const HopfAlgebroidPresentation& H, int exponent_bound = 2);

struct InducedHopf {
    FormalGroupLaw law;
    HopfAlgebroidPresentation result;
    /// Coefficients of pushforward(F_L, b) - F_R, the defining relations.
    std::vector<Polynomial> relations;
};

/// Gamma' = A_L tensor Q[b] tensor A_R modulo pushforward(F_L, b) = F_R up to
/// degree N. Throws AxiomsFail when F is not a formal group law.
InducedHopf induced_hopf(const FormalGroupLaw& F, int N);

/// eta_L and eta_R agree after setting every b_i to zero.
Check verify_induced_collapse(const InducedHopf& H, int exponent_bound = 2);

struct PoincareComparison {
    std::vector<long> monomial_counts;
    std::vector<long> convolution;
};

/// Monomial counts of Q[m_1..] tensor Q[b_1..] by degree and the
/// self-convolution of partition counts, degrees 0..N.
PoincareComparison cooperations_poincare(int N);
Check verify_cooperations_poincare(int N);

nlohmann::json hopf_to_json(const HopfAlgebroidPresentation& H);

} // namespace cobalt
