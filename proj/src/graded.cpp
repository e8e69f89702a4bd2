#include "cobalt/graded.hpp"

#include "cobalt/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace cobalt {

bool has_finite_components(const RingPresentation& ring)
{
    const auto& gens = ring.generators();
    bool any_invertible = false;
    bool positive = false;
    bool negative = false;
    for (const auto& g : gens) {
        if (g.adams_degree == 0)
            return false;
        any_invertible = any_invertible || g.invertible;
        (g.adams_degree > 0 ? positive : negative) = true;
    }
    if (any_invertible && gens.size() > 1)
        return false;
    return !(positive && negative);
}

namespace {

struct Range {
    int lo;
    int hi;
};

void enumerate_rec(std::span<const int> degrees, std::span<const Range> ranges, std::span<const long> suffix_min,
                   std::span<const long> suffix_max, std::size_t idx, long remaining, std::vector<int>& exps,
                   std::vector<Monomial>& out)
{
    if (idx == degrees.size()) {
        if (remaining == 0)
            out.push_back(Monomial::from_exponents(exps));
        return;
    }
    if (remaining < suffix_min[idx] || remaining > suffix_max[idx])
        return;
    long deg = degrees[idx];
    for (int e = ranges[idx].lo; e <= ranges[idx].hi; ++e) {
        exps[idx] = e;
        enumerate_rec(degrees, ranges, suffix_min, suffix_max, idx + 1, remaining - e * deg, exps, out);
    }
    exps[idx] = 0;
}

std::vector<Monomial> enumerate_bounded(const RingPresentation& ring, long degree, int bound)
{
    std::size_t n = static_cast<std::size_t>(ring.num_generators());
    std::vector<Range> ranges(n);
    std::vector<long> smin(n + 1, 0);
    std::vector<long> smax(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        ranges[i] = {ring.generators()[i].invertible ? -bound : 0, bound};
    for (std::size_t i = n; i-- > 0;) {
        long a = static_cast<long>(ranges[i].lo) * ring.degrees()[i];
        long b = static_cast<long>(ranges[i].hi) * ring.degrees()[i];
        smin[i] = smin[i + 1] + std::min(a, b);
        smax[i] = smax[i + 1] + std::max(a, b);
    }
    std::vector<int> exps(n, 0);
    std::vector<Monomial> out;
    enumerate_rec(ring.degrees(), ranges, smin, smax, 0, degree, exps, out);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return grlex_greater(a, b, ring.degrees()); });
    return out;
}

} // namespace

MonomialEnumeration enumerate_monomials(const RingPresentation& ring, long degree, int bound)
{
    if (bound < 0)
        throw Error(ErrorCode::InvalidArgument, "exponent bound must be nonnegative");
    MonomialEnumeration result;
    if (!has_finite_components(ring)) {
        result.monomials = enumerate_bounded(ring, degree, bound);
        result.infinite = true;
        result.bound_active = true;
        return result;
    }
    int min_abs = 0;
    for (int d : ring.degrees())
        min_abs = min_abs == 0 ? std::abs(d) : std::min(min_abs, std::abs(d));
    int natural = min_abs == 0 ? 0 : static_cast<int>(std::labs(degree) / min_abs);
    if (natural <= bound) {
        result.monomials = enumerate_bounded(ring, degree, bound);
        return result;
    }
    auto all = enumerate_bounded(ring, degree, natural);
    for (auto& m : all) {
        if (m.max_abs_exponent() <= bound)
            result.monomials.push_back(std::move(m));
        else
            result.bound_active = true;
    }
    return result;
}

std::optional<std::vector<Integer>> clear_denominators(std::span<const Rational> w, const Scalars& s)
{
    Integer l = 1;
    for (const auto& q : w) {
        if (q.get_den() != 1) {
            if (!s.contains(q))
                return std::nullopt;
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        }
    }
    std::vector<Integer> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        Rational scaled = w[i] * l;
        out[i] = scaled.get_num();
    }
    return out;
}

GradedPiece::GradedPiece(const RingPresentation& ring, std::span<const int> generator_degrees,
                         std::span<const ModuleElement> relations, long degree, int bound)
    : ring_(&ring), degree_(degree)
{
    int ngen = static_cast<int>(generator_degrees.size());
    for (int g = 0; g < ngen; ++g) {
        auto mons = enumerate_monomials(ring, degree - generator_degrees[static_cast<std::size_t>(g)], bound);
        truncated_ = truncated_ || mons.bound_active;
        infinite_ = infinite_ || mons.infinite;
        for (auto& m : mons.monomials) {
            index_.emplace(std::make_pair(m, g), columns_.size());
            columns_.emplace_back(std::move(m), g);
        }
    }
    rows_ = IntMatrix(0, columns_.size());

    auto push_row = [&](const ModuleElement& elem) {
        auto vec = vectorize(elem);
        if (!vec) {
            truncated_ = true;
            return;
        }
        if (std::all_of(vec->begin(), vec->end(), [](const Integer& v) { return v == 0; }))
            return;
        rows_.append_row(*vec);
    };

    for (const auto& rel : ring.relations()) {
        long e = *ring.degree_of(rel);
        for (int g = 0; g < ngen; ++g) {
            auto mult = enumerate_monomials(ring, degree - generator_degrees[static_cast<std::size_t>(g)] - e, bound);
            truncated_ = truncated_ || mult.bound_active;
            for (const auto& t : mult.monomials) {
                ModuleElement elem(static_cast<std::size_t>(ngen));
                elem[static_cast<std::size_t>(g)] = Polynomial(t) * rel;
                push_row(elem);
            }
        }
    }
    for (const auto& rel : relations) {
        if (rel.size() != static_cast<std::size_t>(ngen))
            throw Error(ErrorCode::InvalidArgument, "module relation has the wrong number of entries");
        std::optional<long> e;
        for (int g = 0; g < ngen; ++g) {
            const Polynomial& p = rel[static_cast<std::size_t>(g)];
            if (p.is_zero())
                continue;
            auto pd = ring.degree_of(p);
            if (!pd)
                throw Error(ErrorCode::InhomogeneousRelation, "module relation entry '" + ring.format(p) + "'");
            long total = *pd + generator_degrees[static_cast<std::size_t>(g)];
            if (e && *e != total)
                throw Error(ErrorCode::InhomogeneousRelation, "module relation mixes degrees");
            e = total;
        }
        if (!e)
            continue;
        auto mult = enumerate_monomials(ring, degree - *e, bound);
        truncated_ = truncated_ || mult.bound_active;
        for (const auto& t : mult.monomials) {
            ModuleElement elem(static_cast<std::size_t>(ngen));
            for (int g = 0; g < ngen; ++g)
                elem[static_cast<std::size_t>(g)] = Polynomial(t) * rel[static_cast<std::size_t>(g)];
            push_row(elem);
        }
    }
}

std::optional<std::size_t> GradedPiece::column_of(const Monomial& m, int gen) const
{
    auto it = index_.find(std::make_pair(m, gen));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::vector<Integer>> GradedPiece::vectorize(const ModuleElement& element) const
{
    std::vector<Rational> w(columns_.size());
    for (std::size_t g = 0; g < element.size(); ++g) {
        for (const auto& [m, c] : element[g].terms()) {
            auto col = column_of(m, static_cast<int>(g));
            if (!col)
                return std::nullopt;
            w[*col] = c;
        }
    }
    auto cleared = clear_denominators(w, ring_->scalars());
    if (!cleared)
        throw Error(ErrorCode::InvalidArgument, "coefficient has a denominator that is not a unit of " +
                                                     ring_->scalars().name());
    return cleared;
}

ModuleElement GradedPiece::element(std::span<const Integer> coords, int num_generators) const
{
    ModuleElement out(static_cast<std::size_t>(num_generators));
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0)
            out[static_cast<std::size_t>(columns_[i].second)].add_term(columns_[i].first, Rational(coords[i]));
    return out;
}

LatticeQuotient GradedPiece::quotient() const { return LatticeQuotient(rows_, columns_.size(), ring_->scalars()); }

GradedComponentReport graded_component(const RingPresentation& ring, long degree, int exponent_bound)
{
    const int zero_degree[] = {0};
    GradedPiece piece(ring, zero_degree, {}, degree, exponent_bound);
    LatticeQuotient q = piece.quotient();

    GradedComponentReport report;
    report.degree = degree;
    report.free_rank = static_cast<long>(q.free_rank());
    report.torsion = q.torsion();
    report.truncated = piece.truncated();
    report.infinite = piece.infinite();

    // Columns are already in descending graded-lex order; echelon over Q marks
    // leading monomials, the rest are standard.
    const IntMatrix& rows = piece.relation_rows();
    std::size_t ncols = piece.columns().size();
    std::vector<std::vector<Rational>> work(rows.rows(), std::vector<Rational>(ncols));
    for (std::size_t r = 0; r < rows.rows(); ++r)
        for (std::size_t c = 0; c < ncols; ++c)
            work[r][c] = rows(r, c);
    std::vector<bool> leading(ncols, false);
    std::size_t next = 0;
    for (std::size_t c = 0; c < ncols && next < work.size(); ++c) {
        std::size_t p = next;
        while (p < work.size() && work[p][c] == 0)
            ++p;
        if (p == work.size())
            continue;
        std::swap(work[p], work[next]);
        for (std::size_t r = next + 1; r < work.size(); ++r) {
            if (work[r][c] == 0)
                continue;
            Rational f = work[r][c] / work[next][c];
            for (std::size_t k = c; k < ncols; ++k)
                work[r][k] -= f * work[next][k];
        }
        leading[c] = true;
        ++next;
    }
    for (std::size_t c = 0; c < ncols; ++c)
        if (!leading[c])
            report.basis.push_back(piece.columns()[c].first);
    return report;
}

} // namespace cobalt
