#include "cobalt/landweber.hpp"

#include "cobalt/error.hpp"
#include "cobalt/parse.hpp"

#include <algorithm>
#include <memory>

namespace cobalt {

ModulePresentation ModulePresentation::free_rank_one(RingPtr ring) { return {std::move(ring), {{"e", 0}}, {}}; }

std::vector<int> ModulePresentation::degrees() const
{
    std::vector<int> out;
    for (const auto& g : generators)
        out.push_back(g.adams_degree);
    return out;
}

void ModulePresentation::validate() const
{
    if (!ring)
        throw Error(ErrorCode::InvalidArgument, "module without a ring");
    for (std::size_t r = 0; r < relations.size(); ++r) {
        const auto& rel = relations[r];
        if (rel.size() != generators.size())
            throw Error(ErrorCode::InvalidArgument, "relations[" + std::to_string(r) + "] has " +
                                                        std::to_string(rel.size()) + " entries for " +
                                                        std::to_string(generators.size()) + " generators");
        std::optional<long> e;
        for (std::size_t g = 0; g < rel.size(); ++g) {
            if (rel[g].is_zero())
                continue;
            auto d = ring->degree_of(rel[g]);
            if (!d || (e && *e != *d + generators[g].adams_degree))
                throw Error(ErrorCode::InhomogeneousRelation, "relations[" + std::to_string(r) + "]");
            e = *d + generators[g].adams_degree;
        }
    }
}

ModulePresentation module_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object() || !doc.contains("ring"))
        throw Error(ErrorCode::SyntaxError, "module document needs a \"ring\" entry");
    RingPtr ring = make_ring(presentation_from_json(doc["ring"]));
    if (!doc.contains("generators"))
        return ModulePresentation::free_rank_one(ring);
    ModulePresentation M{ring, {}, {}};
    for (const auto& g : doc["generators"])
        M.generators.push_back({g.at("name").get<std::string>(), g.value("adams_degree", 0)});
    const auto rels = doc.value("relations", nlohmann::json::array());
    for (std::size_t r = 0; r < rels.size(); ++r) {
        ModuleElement rel;
        for (std::size_t g = 0; g < rels[r].size(); ++g) {
            try {
                rel.push_back(parse_expression(rels[r][g].get<std::string>(), *ring));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::SyntaxError)
                    throw;
                std::string msg = e.what();
                throw Error(ErrorCode::SyntaxError, "relations[" + std::to_string(r) + "][" + std::to_string(g) +
                                                        "], " + msg.substr(msg.find(": ") + 2));
            }
        }
        M.relations.push_back(std::move(rel));
    }
    M.validate();
    return M;
}

nlohmann::json module_to_json(const ModulePresentation& M)
{
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : M.generators)
        gens.push_back({{"name", g.name}, {"adams_degree", g.adams_degree}});
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& rel : M.relations) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& p : rel)
            row.push_back(M.ring->format(p));
        rels.push_back(row);
    }
    return {{"ring", presentation_to_json(*M.ring)}, {"generators", gens}, {"relations", rels}};
}

std::string status_name(StageStatus s)
{
    switch (s) {
    case StageStatus::Regular:
        return "regular";
    case StageStatus::Fails:
        return "fails";
    case StageStatus::QuotientVanishes:
        return "quotient_vanishes";
    case StageStatus::WindowInconclusive:
        return "window_inconclusive";
    }
    return "unknown";
}

std::string verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Exact:
        return "EXACT";
    case Verdict::Fails:
        return "FAILS";
    case Verdict::Inconclusive:
        return "INCONCLUSIVE";
    }
    return "unknown";
}

Verdict LandweberVerdict::verdict() const
{
    bool all_ok = true;
    for (const auto& s : stages) {
        if (s.status == StageStatus::Fails)
            return Verdict::Fails;
        if (s.status == StageStatus::WindowInconclusive)
            all_ok = false;
    }
    return all_ok ? Verdict::Exact : Verdict::Inconclusive;
}

namespace {

long target_degree(const RingPresentation& ring, const LandweberGenerators& v, int n)
{
    const Polynomial& vn = v.v[static_cast<std::size_t>(n)];
    if (vn.is_zero())
        return integer_power(v.p, n) - 1;
    auto d = ring.degree_of(vn);
    if (!d)
        throw Error(ErrorCode::DegreeMismatch, "v_" + std::to_string(n) + " = " + ring.format(vn) +
                                                   " is not homogeneous");
    return *d;
}

struct Piece {
    std::unique_ptr<GradedPiece> piece;
    std::unique_ptr<LatticeQuotient> quotient;
};

Piece build_piece(const ModulePresentation& M, std::span<const ModuleElement> relations, long degree, int bound)
{
    std::vector<int> degs = M.degrees();
    Piece out;
    out.piece = std::make_unique<GradedPiece>(*M.ring, degs, relations, degree, bound);
    if (out.piece->infinite())
        throw Error(ErrorCode::BoundExceeded, "degree " + std::to_string(degree) +
                                                  " of the module is infinitely generated over the ground ring");
    if (out.piece->truncated())
        throw Error(ErrorCode::BoundExceeded, "degree " + std::to_string(degree) + " needs exponents beyond " +
                                                  std::to_string(bound));
    out.quotient = std::make_unique<LatticeQuotient>(out.piece->quotient());
    return out;
}

/// Kernel of multiplication by v from Q(d) to Q(d + s), as a module element
/// that is nonzero in Q(d), or nullopt when the map is injective.
std::optional<std::vector<Integer>> kernel_witness(const ModulePresentation& M, const Polynomial& v,
                                                   const Piece& src, const Piece& dst)
{
    const auto& cols = src.piece->columns();
    std::size_t ns = cols.size();
    std::size_t nt = dst.piece->columns().size();
    const Scalars& scalars = M.ring->scalars();

    std::vector<std::vector<Rational>> rows(ns, std::vector<Rational>(nt));
    Integer common = 1;
    for (std::size_t i = 0; i < ns; ++i) {
        Polynomial image = Polynomial(cols[i].first) * v;
        for (const auto& [m, c] : image.terms()) {
            auto col = dst.piece->column_of(m, cols[i].second);
            if (!col)
                throw Error(ErrorCode::BoundExceeded, "product leaves the enumerated monomials of degree " +
                                                          std::to_string(dst.piece->degree()));
            rows[i][*col] = c;
            if (!scalars.contains(c))
                throw Error(ErrorCode::InvalidArgument, "coefficient " + to_string(c) + " is not in " +
                                                            scalars.name());
            mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den().get_mpz_t());
        }
    }
    IntMatrix A(ns, nt);
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = 0; j < nt; ++j)
            A(i, j) = Rational(rows[i][j] * common).get_num();

    const LatticeQuotient& qt = *dst.quotient;
    const SmithForm& sf = qt.smith();
    std::vector<std::size_t> conds;
    for (std::size_t j = sf.rank(); j < nt; ++j)
        conds.push_back(j);
    std::size_t nfree = conds.size();
    for (std::size_t c : qt.torsion_columns())
        conds.push_back(c);

    std::vector<std::vector<Integer>> kernel;
    if (conds.empty()) {
        for (std::size_t i = 0; i < ns; ++i) {
            std::vector<Integer> e(ns);
            e[i] = 1;
            kernel.push_back(std::move(e));
        }
    } else {
        IntMatrix AV = A * sf.right;
        std::size_t ntors = conds.size() - nfree;
        IntMatrix S(ns + ntors, conds.size());
        for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t k = 0; k < conds.size(); ++k)
                S(i, k) = AV(i, conds[k]);
        for (std::size_t t = 0; t < ntors; ++t)
            S(ns + t, nfree + t) = qt.torsion()[t];
        for (auto& full : integer_kernel(S.transposed()))
            kernel.emplace_back(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(ns));
    }
    for (auto& x : kernel)
        if (!src.quotient->contains(x))
            return x;
    return std::nullopt;
}

void require_window(Window w)
{
    if (w.lo > w.hi)
        throw Error(ErrorCode::WindowEmpty, "window " + std::to_string(w.lo) + ":" + std::to_string(w.hi));
}

} // namespace

LandweberVerdict check_regular_with(const ModulePresentation& M, const LandweberGenerators& v, Window window,
                                    int exponent_bound)
{
    require_window(window);
    M.validate();
    LandweberVerdict out{v.p, v.height, {}};
    std::vector<ModuleElement> relations = M.relations;
    std::size_t ngen = M.generators.size();
    bool vanished = false;

    for (int n = 0; n <= v.height; ++n) {
        StageResult stage;
        stage.n = n;
        stage.shift = target_degree(*M.ring, v, n);
        if (vanished) {
            stage.status = StageStatus::QuotientVanishes;
            out.stages.push_back(std::move(stage));
            continue;
        }
        std::map<long, Piece> pieces;
        bool all_zero = true;
        for (long d = window.lo; d <= window.hi; ++d) {
            Piece p = build_piece(M, relations, d, exponent_bound);
            all_zero = all_zero && p.quotient->is_zero();
            pieces.emplace(d, std::move(p));
        }
        if (all_zero) {
            vanished = true;
            stage.status = StageStatus::QuotientVanishes;
            out.stages.push_back(std::move(stage));
            continue;
        }
        const Polynomial& vn = v.v[static_cast<std::size_t>(n)];
        for (long d = window.lo; d <= window.hi && !stage.witness; ++d) {
            long e = d + stage.shift;
            if (e < window.lo || e > window.hi || pieces.at(d).quotient->is_zero())
                continue;
            stage.degrees_checked.push_back(d);
            if (auto x = kernel_witness(M, vn, pieces.at(d), pieces.at(e))) {
                stage.witness_degree = d;
                stage.witness = pieces.at(d).piece->element(*x, static_cast<int>(ngen));
            }
        }
        if (stage.witness)
            stage.status = StageStatus::Fails;
        else
            stage.status = stage.degrees_checked.empty() ? StageStatus::WindowInconclusive : StageStatus::Regular;
        out.stages.push_back(std::move(stage));

        if (!vn.is_zero())
            for (std::size_t g = 0; g < ngen; ++g) {
                ModuleElement rel(ngen);
                rel[g] = vn;
                relations.push_back(std::move(rel));
            }
    }
    return out;
}

LandweberVerdict check_regular(const ModulePresentation& M, const FormalGroupLaw& F, long p, int h, Window window,
                               int exponent_bound)
{
    require_window(window);
    if (!M.ring || M.ring->names() != F.ring().names() || M.ring->base() != F.ring().base())
        throw Error(ErrorCode::InvalidArgument, "the law and the module live over different rings");
    return check_regular_with(M, landweber_generators(F, p, h), window, exponent_bound);
}

std::map<long, LandweberVerdict> check_exact(const ModulePresentation& M, const FormalGroupLaw& F,
                                             const std::vector<long>& primes, int h, Window window,
                                             int exponent_bound)
{
    require_window(window);
    std::map<long, LandweberVerdict> out;
    for (long p : primes)
        out.emplace(p, check_regular(M, F, p, h, window, exponent_bound));
    return out;
}

Verdict overall_verdict(const std::map<long, LandweberVerdict>& verdicts)
{
    bool exact = true;
    for (const auto& [p, v] : verdicts) {
        Verdict x = v.verdict();
        if (x == Verdict::Fails)
            return Verdict::Fails;
        exact = exact && x == Verdict::Exact;
    }
    return exact ? Verdict::Exact : Verdict::Inconclusive;
}

LandweberGenerators perturb_generators(const RingPresentation& ring, const LandweberGenerators& v, std::mt19937& rng,
                                       int exponent_bound)
{
    LandweberGenerators out = v;
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int n = 1; n <= v.height; ++n) {
        long target = target_degree(ring, v, n);
        Polynomial lift = out.v[static_cast<std::size_t>(n)];
        for (int k = 0; k < n; ++k) {
            const Polynomial& vk = out.v[static_cast<std::size_t>(k)];
            if (vk.is_zero())
                continue;
            auto dk = ring.degree_of(vk);
            if (!dk)
                continue;
            auto mons = enumerate_monomials(ring, target - *dk, exponent_bound).monomials;
            if (mons.empty())
                continue;
            std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
            lift += Polynomial(mons[pick(rng)]) * vk * Rational(coef(rng));
        }
        out.v[static_cast<std::size_t>(n)] = lift;
    }
    return out;
}

std::vector<SuiteCase> builtin_cases()
{
    std::vector<SuiteCase> cases;
    RingPtr lz = laurent_z_ring();
    cases.push_back({"KGL coefficients Z[b,b^-1], multiplicative", ModulePresentation::free_rank_one(lz),
                     fgl_multiplicative(lz, 125), {2, 3, 5}, 3, {-8, 8}, 16, Verdict::Exact});

    RingPtr q = make_ring(RingPresentation::rationals());
    cases.push_back({"LQ coefficients Q, additive", ModulePresentation::free_rank_one(q), fgl_additive(q, 125),
                     {2, 3, 5}, 3, {0, 4}, 4, Verdict::Exact});

    RingPtr z = make_ring(RingPresentation::integers());
    cases.push_back({"Z, additive", ModulePresentation::free_rank_one(z), fgl_additive(z, 49), {2, 3, 5, 7}, 2,
                     {0, 48}, 4, Verdict::Fails, 1});

    for (long p : {2L, 3L, 5L, 7L}) {
        RingPtr zp = make_ring(RingPresentation(Scalars{Base::Z, {}}, {}, {Polynomial(Rational(p))}));
        cases.push_back({"Z/" + std::to_string(p) + ", additive", ModulePresentation::free_rank_one(zp),
                         fgl_additive(zp, static_cast<int>(p * p)), {p}, 2, {0, 0}, 4, Verdict::Fails, 0});
    }
    for (long p : {2L, 3L, 5L, 7L}) {
        RingPtr loc = make_ring(RingPresentation(Scalars{Base::Z, p}, {}, {}));
        cases.push_back({"Z_(" + std::to_string(p) + "), multiplicative with b = 1",
                         ModulePresentation::free_rank_one(loc),
                         fgl_multiplicative_scalar(loc, static_cast<int>(p * p), 1), {p}, 2, {0, 0}, 4,
                         Verdict::Exact});
    }
    return cases;
}

std::vector<SuiteRow> builtin_suite()
{
    std::vector<SuiteRow> rows;
    for (const auto& c : builtin_cases()) {
        SuiteRow row{c.name, check_exact(c.module, c.law, c.primes, c.height, c.window, c.exponent_bound),
                     Verdict::Inconclusive, c.expected};
        row.verdict = overall_verdict(row.verdicts);
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json verdict_to_json(const RingPresentation& ring, const LandweberVerdict& v)
{
    nlohmann::json stages = nlohmann::json::array();
    for (const auto& s : v.stages) {
        nlohmann::json j = {{"n", s.n}, {"status", status_name(s.status)}, {"shift", s.shift},
                            {"degrees_checked", s.degrees_checked}};
        if (s.witness_degree)
            j["witness_degree"] = *s.witness_degree;
        if (s.witness) {
            nlohmann::json w = nlohmann::json::array();
            for (const auto& p : *s.witness)
                w.push_back(ring.format(p));
            j["witness"] = w;
        }
        stages.push_back(j);
    }
    return {{"prime", v.prime}, {"height", v.height}, {"verdict", verdict_name(v.verdict())}, {"stages", stages}};
}

nlohmann::json verdicts_to_json(const RingPresentation& ring, const std::map<long, LandweberVerdict>& v)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [p, verdict] : v)
        out.push_back(verdict_to_json(ring, verdict));
    return out;
}

} // namespace cobalt
