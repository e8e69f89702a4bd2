#pragma once

#include "cobalt/report.hpp"
#include "cobalt/schur.hpp"

#include <json.hpp>

#include <memory>
#include <vector>

namespace cobalt {

/// coeff tensor R_{n,d}: a free coeff-module on the Schur classes.
class FreeModuleOnSchur {
public:
    /// One coeff-polynomial per Schur basis element.
    using Element = std::vector<Polynomial>;

    FreeModuleOnSchur(RingPtr coeff, std::shared_ptr<const GrassRing> grass);

    const RingPresentation& coeff() const { return *coeff_; }
    const RingPtr& coeff_ptr() const { return coeff_; }
    const GrassRing& grass() const { return *grass_; }
    std::size_t rank() const { return grass_->rank(); }

    Element basis_element(std::size_t i) const;
    /// Image of an integral R_{n,d} class.
    Element from_grass(std::span<const Integer> coords) const;
    Element product(const Element& a, const Element& b) const;
    const StructureConstants& structure_constants() const { return constants_; }

private:
    RingPtr coeff_;
    std::shared_ptr<const GrassRing> grass_;
    StructureConstants constants_;
};

FreeModuleOnSchur grassmann_cohomology(RingPtr coeff, int n, int d);

/// base[x]/(x^{r+1} + sum_i (-1)^i c_i x^{r+1-i}) with x in degree 1.
class ProjBundleRing {
public:
    /// Coefficients of 1, x, ..., x^r, each in the base ring.
    using Element = std::vector<Polynomial>;

    /// Throws DegreeMismatch unless every c_i is zero or homogeneous of degree i.
    ProjBundleRing(RingPtr base, std::vector<Polynomial> chern);

    const RingPresentation& base() const { return *base_; }
    const RingPtr& presentation() const { return presentation_; }
    int rank() const { return static_cast<int>(chern_.size()); }
    int module_rank() const { return rank() + 1; }
    const std::vector<Polynomial>& chern() const { return chern_; }
    /// Index of x among the generators of presentation().
    int x_index() const { return base_->num_generators(); }
    Polynomial x() const { return Polynomial::generator(x_index()); }
    const Polynomial& relation() const { return relation_; }

    /// Reduces every power x^k with k > r; p is over presentation().
    Element normal_form(const Polynomial& p) const;
    Polynomial to_polynomial(const Element& e) const;
    /// Row j is the normal form of x * x^j.
    std::vector<Element> multiplication_by_x() const;
    /// Element with x set to 0, a base polynomial.
    Polynomial zero_section(const Element& e) const { return e.empty() ? Polynomial() : e[0]; }

private:
    RingPtr base_;
    std::vector<Polynomial> chern_;
    RingPtr presentation_;
    Polynomial relation_;
};

ProjBundleRing projective_bundle(RingPtr base, std::vector<Polynomial> chern);

struct ThomClass {
    ProjBundleRing bundle;
    ProjBundleRing::Element th;
};

/// th = x^r + sum_i (-1)^i x_i x^{r-i} over R_{n,d} with r = n - d.
ThomClass thom_class(int n, int d);

/// Monic Thom class, restriction along f, zero-section value
/// (-1)^{n-d} x'_{n-d} over R_{n+1,d+1} and the Gysin square up to that sign.
Check verify_thom(int n, int d);
/// Multiplication by x is the companion matrix and the bundle ring over
/// R_{n,d} is a free Z-module of rank (r+1) C(n,d).
Check verify_projective_bundle(int n, int d);

nlohmann::json module_to_json(const FreeModuleOnSchur& M);
nlohmann::json bundle_element_to_json(const ProjBundleRing& B, const ProjBundleRing::Element& e);

} // namespace cobalt
