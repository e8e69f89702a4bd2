#pragma once

#include "cobalt/matrix.hpp"
#include "cobalt/ring.hpp"

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cobalt {

struct MonomialEnumeration {
    /// Monomials of the requested degree with every |exponent| <= bound,
    /// sorted graded-lex descending.
    std::vector<Monomial> monomials;
    /// Some monomial of this degree was excluded by the bound.
    bool bound_active = false;
    /// The full set of monomials of this degree is infinite.
    bool infinite = false;
};

MonomialEnumeration enumerate_monomials(const RingPresentation& ring, long degree, int bound);

/// Whether every degree of the ring has finitely many monomials.
bool has_finite_components(const RingPresentation& ring);

struct GradedComponentReport {
    long degree = 0;
    long free_rank = 0;
    std::vector<Integer> torsion;
    /// Standard monomials over Q (not leading terms of the relation span).
    std::vector<Monomial> basis;
    bool truncated = false;
    /// InfiniteComponent condition: completeness cannot be certified.
    bool infinite = false;
};

GradedComponentReport graded_component(const RingPresentation& ring, long degree, int exponent_bound);

/// One entry per module generator.
using ModuleElement = std::vector<Polynomial>;

/// Degree-d piece of a graded module presented over a ring: columns are pairs
/// (ring monomial, module generator), rows are all multiples of ring relations
/// and module relations that land in degree d inside the exponent bound.
class GradedPiece {
public:
    GradedPiece(const RingPresentation& ring, std::span<const int> generator_degrees,
                std::span<const ModuleElement> relations, long degree, int bound);

    long degree() const { return degree_; }
    const std::vector<std::pair<Monomial, int>>& columns() const { return columns_; }
    const IntMatrix& relation_rows() const { return rows_; }
    bool truncated() const { return truncated_; }
    bool infinite() const { return infinite_; }

    std::optional<std::size_t> column_of(const Monomial& m, int gen) const;
    /// Coordinates of a module element of this degree; nullopt when a term falls
    /// outside the enumerated columns. Rational entries are cleared using
    /// ground-ring units, which is harmless for membership questions.
    std::optional<std::vector<Integer>> vectorize(const ModuleElement& element) const;
    ModuleElement element(std::span<const Integer> coords, int num_generators) const;

    LatticeQuotient quotient() const;

private:
    const RingPresentation* ring_;
    long degree_;
    std::vector<std::pair<Monomial, int>> columns_;
    std::map<std::pair<Monomial, int>, std::size_t> index_;
    IntMatrix rows_;
    bool truncated_ = false;
    bool infinite_ = false;
};

/// Clears denominators of a rational vector by a positive integer that is a
/// unit of the ground ring. Returns nullopt when that is impossible.
std::optional<std::vector<Integer>> clear_denominators(std::span<const Rational> w, const Scalars& s);

} // namespace cobalt
