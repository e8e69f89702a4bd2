#pragma once

#include "cobalt/polynomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cobalt {

struct GenSpec {
    std::string name;
    int adams_degree = 0;
    bool invertible = false;
};

/// Finitely presented commutative Adams-graded ring over Z, Q, or Z_(p).
///
/// Invertible generators are Laurent variables: their inverse is carried as a
/// negative exponent, which is the same as adjoining g^{-1} with g * g^{-1} = 1
/// and cancelling eagerly.
class RingPresentation {
public:
    RingPresentation() = default;
    RingPresentation(Scalars scalars, std::vector<GenSpec> generators,
                     std::vector<Polynomial> relations = {});

    static RingPresentation integers() { return {}; }
    static RingPresentation rationals();
    /// Polynomial ring on the given generators with no relations.
    static RingPresentation free(Base base, std::vector<GenSpec> generators);

    const Scalars& scalars() const { return scalars_; }
    Base base() const { return scalars_.base; }
    const std::vector<GenSpec>& generators() const { return generators_; }
    const std::vector<Polynomial>& relations() const { return relations_; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<std::string>& names() const { return names_; }
    int num_generators() const { return static_cast<int>(generators_.size()); }

    std::optional<int> find(const std::string& name) const;
    int index_of(const std::string& name) const;
    Polynomial generator(const std::string& name) const;

    std::optional<long> degree_of(const Polynomial& p) const;
    std::string format(const Polynomial& p) const { return p.to_string(names_); }

    /// Checks unique names, generator ranges, Laurent exponents only on invertible
    /// generators, integral coefficients for Z, and relation homogeneity.
    void validate() const;

    /// Same presentation with one more relation (used for quotient rings).
    RingPresentation with_relations(std::vector<Polynomial> extra) const;
    RingPresentation with_scalars(Scalars s) const;

private:
    Scalars scalars_;
    std::vector<GenSpec> generators_;
    std::vector<Polynomial> relations_;
    std::vector<int> degrees_;
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

inline RingPtr make_ring(RingPresentation r) { return std::make_shared<const RingPresentation>(std::move(r)); }

} // namespace cobalt
