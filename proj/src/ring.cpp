#include "cobalt/ring.hpp"

#include "cobalt/error.hpp"

#include <set>

namespace cobalt {

RingPresentation::RingPresentation(Scalars scalars, std::vector<GenSpec> generators,
                                   std::vector<Polynomial> relations)
    : scalars_(std::move(scalars)), generators_(std::move(generators)), relations_(std::move(relations))
{
    for (const auto& g : generators_) {
        degrees_.push_back(g.adams_degree);
        names_.push_back(g.name);
    }
    validate();
}

RingPresentation RingPresentation::rationals() { return RingPresentation(Scalars{Base::Q, {}}, {}); }

RingPresentation RingPresentation::free(Base base, std::vector<GenSpec> generators)
{
    return RingPresentation(Scalars{base, {}}, std::move(generators));
}

std::optional<int> RingPresentation::find(const std::string& name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<int>(i);
    return std::nullopt;
}

int RingPresentation::index_of(const std::string& name) const
{
    auto idx = find(name);
    if (!idx)
        throw Error(ErrorCode::InvalidArgument, "unknown generator '" + name + "'");
    return *idx;
}

Polynomial RingPresentation::generator(const std::string& name) const { return Polynomial::generator(index_of(name)); }

std::optional<long> RingPresentation::degree_of(const Polynomial& p) const { return p.homogeneous_degree(degrees_); }

void RingPresentation::validate() const
{
    if (scalars_.local_prime && scalars_.base != Base::Z)
        throw Error(ErrorCode::InvalidArgument, "p-local flag requires base Z");
    if (scalars_.local_prime && *scalars_.local_prime < 2)
        throw Error(ErrorCode::InvalidArgument, "p-local flag needs a prime");
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (g.name.empty())
            throw Error(ErrorCode::InvalidArgument, "generator with empty name");
        if (!seen.insert(g.name).second)
            throw Error(ErrorCode::InvalidArgument, "duplicate generator name '" + g.name + "'");
    }
    for (std::size_t r = 0; r < relations_.size(); ++r) {
        const Polynomial& rel = relations_[r];
        if (rel.max_generator() >= num_generators())
            throw Error(ErrorCode::InvalidArgument, "relation " + std::to_string(r) + " uses an undeclared generator");
        for (const auto& [m, c] : rel.terms()) {
            for (const auto& [g, e] : m.factors())
                if (e < 0 && !generators_[static_cast<std::size_t>(g)].invertible)
                    throw Error(ErrorCode::InvalidArgument,
                                "negative exponent on non-invertible generator '" + names_[static_cast<std::size_t>(g)] + "'");
            if (!scalars_.contains(c))
                throw Error(ErrorCode::InvalidArgument,
                            "relation " + std::to_string(r) + " has coefficient " + c.get_str() + " outside " + scalars_.name());
        }
        if (!degree_of(rel)) {
            long d0 = rel.terms().begin()->first.degree(degrees_);
            for (const auto& [m, c] : rel.terms()) {
                if (m.degree(degrees_) != d0)
                    throw Error(ErrorCode::InhomogeneousRelation,
                                "relation '" + format(rel) + "': term '" + format(Polynomial(m, c)) + "' has degree " +
                                    std::to_string(m.degree(degrees_)) + ", expected " + std::to_string(d0));
            }
        }
    }
}

RingPresentation RingPresentation::with_relations(std::vector<Polynomial> extra) const
{
    std::vector<Polynomial> rels = relations_;
    for (auto& p : extra)
        if (!p.is_zero())
            rels.push_back(std::move(p));
    return RingPresentation(scalars_, generators_, std::move(rels));
}

RingPresentation RingPresentation::with_scalars(Scalars s) const { return RingPresentation(std::move(s), generators_, relations_); }

} // namespace cobalt
