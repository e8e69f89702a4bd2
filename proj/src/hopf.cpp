#include "cobalt/hopf.hpp"

#include "cobalt/cobordism.hpp"
#include "cobalt/error.hpp"
#include "cobalt/parse.hpp"

#include <algorithm>
#include <set>

namespace cobalt {

ZeroTest::ZeroTest(RingPtr ring, int exponent_bound) : ring_(std::move(ring)), bound_(exponent_bound)
{
    if (!ring_)
        throw Error(ErrorCode::InvalidArgument, "zero test without a ring");
    finite_ = has_finite_components(*ring_);
}

bool ZeroTest::is_zero(const Polynomial& p)
{
    if (p.is_zero())
        return true;
    if (ring_->relations().empty())
        return false;
    std::map<long, Polynomial> parts;
    for (const auto& [m, c] : p.terms())
        parts[m.degree(ring_->degrees())].add_term(m, c);
    static const int generator_degree[] = {0};
    for (const auto& [d, part] : parts) {
        int bound = finite_ ? std::max<long>(bound_, std::abs(d)) : bound_;
        for (const auto& [m, c] : part.terms())
            bound = std::max(bound, m.max_abs_exponent());
        auto key = std::make_pair(d, bound);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            Piece piece;
            piece.piece = std::make_unique<GradedPiece>(*ring_, generator_degree, std::span<const ModuleElement>(), d, bound);
            piece.quotient = std::make_unique<LatticeQuotient>(piece.piece->quotient());
            it = cache_.emplace(key, std::move(piece)).first;
        }
        auto coords = it->second.piece->vectorize(ModuleElement{part});
        if (!coords || !it->second.quotient->contains(*coords))
            return false;
    }
    return true;
}

std::vector<Polynomial> TensorPower::map_images(const std::vector<std::vector<Polynomial>>& f) const
{
    std::vector<Polynomial> out;
    out.reserve(origin.size());
    for (auto [c, g] : origin)
        out.push_back(f.at(static_cast<std::size_t>(c)).at(static_cast<std::size_t>(g)));
    return out;
}

TensorPower tensor_power(const RingPtr& A, const RingPtr& Gamma, const std::vector<Polynomial>& eta_L,
                         const std::vector<Polynomial>& eta_R, int copies)
{
    if (copies < 1)
        throw Error(ErrorCode::InvalidArgument, "tensor power needs at least one copy");
    int na = A->num_generators();
    int ng = Gamma->num_generators();
    if (static_cast<int>(eta_L.size()) != na || static_cast<int>(eta_R.size()) != na)
        throw Error(ErrorCode::InvalidArgument, "unit maps must assign every generator of A");
    std::vector<int> eliminated(static_cast<std::size_t>(ng), -1);
    for (int a = 0; a < na; ++a) {
        const Polynomial& img = eta_L[static_cast<std::size_t>(a)];
        int g = img.max_generator();
        if (img.size() != 1 || g < 0 || img != Polynomial::generator(g) ||
            eliminated[static_cast<std::size_t>(g)] != -1)
            throw Error(ErrorCode::InvalidArgument,
                        "left unit must send generator '" + A->names()[static_cast<std::size_t>(a)] +
                            "' to a distinct generator");
        eliminated[static_cast<std::size_t>(g)] = a;
    }

    TensorPower t;
    t.copies = copies;
    std::vector<GenSpec> gens;
    t.inclusion.assign(static_cast<std::size_t>(copies), std::vector<Polynomial>(static_cast<std::size_t>(ng)));
    for (int c = 0; c < copies; ++c) {
        auto& inc = t.inclusion[static_cast<std::size_t>(c)];
        for (int g = 0; g < ng; ++g) {
            int a = eliminated[static_cast<std::size_t>(g)];
            if (c > 0 && a >= 0) {
                inc[static_cast<std::size_t>(g)] =
                    eta_R[static_cast<std::size_t>(a)].substitute(t.inclusion[static_cast<std::size_t>(c - 1)]);
                continue;
            }
            GenSpec spec = Gamma->generators()[static_cast<std::size_t>(g)];
            spec.name += "[" + std::to_string(c) + "]";
            inc[static_cast<std::size_t>(g)] = Polynomial::generator(static_cast<int>(gens.size()));
            gens.push_back(spec);
            t.origin.emplace_back(c, g);
        }
    }
    std::vector<Polynomial> rels;
    std::set<Polynomial, bool (*)(const Polynomial&, const Polynomial&)> seen(
        [](const Polynomial& a, const Polynomial& b) { return a.terms() < b.terms(); });
    for (int c = 0; c < copies; ++c)
        for (const auto& r : Gamma->relations()) {
            Polynomial img = r.substitute(t.inclusion[static_cast<std::size_t>(c)]);
            if (!img.is_zero() && seen.insert(img).second)
                rels.push_back(img);
        }
    t.ring = make_ring(RingPresentation(Gamma->scalars(), std::move(gens), std::move(rels)));
    return t;
}

namespace {

std::vector<Polynomial> identity_images(int n)
{
    std::vector<Polynomial> out;
    for (int i = 0; i < n; ++i)
        out.push_back(Polynomial::generator(i));
    return out;
}

TruncSeries iso_series(int N, const std::vector<Polynomial>& images, int first)
{
    TruncSeries s = TruncSeries::variable(N);
    for (int i = 1; i < N; ++i)
        s[i + 1] = images[static_cast<std::size_t>(first + i - 1)];
    return s;
}

std::vector<Polynomial> composite(const std::vector<Polynomial>& outer_first, const std::vector<Polynomial>& then)
{
    std::vector<Polynomial> out;
    out.reserve(outer_first.size());
    for (const auto& p : outer_first)
        out.push_back(p.substitute(then));
    return out;
}

} // namespace

HopfAlgebroidPresentation mumu_rational_truncated(int N)
{
    if (N < 2)
        throw Error(ErrorCode::InvalidArgument, "the truncated Hopf algebroid needs N >= 2");
    int n = N - 1;
    HopfAlgebroidPresentation H;
    H.A = universal_log_ring(N);
    std::vector<GenSpec> gens = H.A->generators();
    for (int i = 1; i <= n; ++i)
        gens.push_back({"b" + std::to_string(i), i, false});
    H.Gamma = make_ring(RingPresentation::free(Base::Q, gens));
    H.truncation = n;

    std::vector<Polynomial> gamma_gens = identity_images(2 * n);
    TruncSeries b = iso_series(N, gamma_gens, n);
    TruncSeries b_inv = series_revert(b, N);
    TruncSeries log_R = series_compose(universal_log(N), b_inv, N);

    H.eta_L = identity_images(n);
    for (int i = 1; i <= n; ++i)
        H.eta_R.push_back(log_R[i + 1]);
    H.counit = identity_images(n);
    H.counit.resize(static_cast<std::size_t>(2 * n));

    H.square = std::make_shared<const TensorPower>(tensor_power(H.A, H.Gamma, H.eta_L, H.eta_R, 2));
    const auto& inc = H.square->inclusion;
    TruncSeries b0 = iso_series(N, inc[0], n);
    TruncSeries b1 = iso_series(N, inc[1], n);
    TruncSeries delta_b = series_compose(b1, b0, N);
    for (int i = 0; i < n; ++i)
        H.comult.push_back(inc[0][static_cast<std::size_t>(i)]);
    for (int i = 1; i <= n; ++i)
        H.comult.push_back(delta_b[i + 1]);

    std::vector<Polynomial> conj = H.eta_R;
    for (int i = 1; i <= n; ++i)
        conj.push_back(b_inv[i + 1]);
    H.conjugation = conj;
    return H;
}

HopfAlgebroidPresentation trivial_hopf(RingPtr A)
{
    HopfAlgebroidPresentation H;
    H.A = A;
    H.Gamma = A;
    int n = A->num_generators();
    H.eta_L = identity_images(n);
    H.eta_R = H.eta_L;
    H.counit = H.eta_L;
    H.square = std::make_shared<const TensorPower>(tensor_power(A, A, H.eta_L, H.eta_R, 2));
    H.comult = H.square->inclusion[0];
    H.conjugation = H.eta_L;
    for (const auto& g : A->generators())
        H.truncation = std::max(H.truncation, std::abs(g.adams_degree));
    return H;
}

HopfAlgebroidPresentation corrupt_comultiplication(HopfAlgebroidPresentation H, const std::string& generator)
{
    int g = H.Gamma->index_of(generator);
    H.comult[static_cast<std::size_t>(g)] += H.square->inclusion[1][static_cast<std::size_t>(g)];
    return H;
}

namespace {

struct AxiomRecorder {
    Check& check;
    nlohmann::json axioms = nlohmann::json::object();

    void record(const std::string& axiom, const RingPresentation& source, int gen, const RingPresentation& target,
                const Polynomial& residual, bool zero)
    {
        auto& entry = axioms[axiom];
        if (entry.is_null())
            entry = {{"checked", 0}, {"pass", true}};
        entry["checked"] = entry["checked"].get<long>() + 1;
        if (zero)
            return;
        entry["pass"] = false;
        if (check.pass) {
            check.pass = false;
            check.witness = {{"axiom", axiom},
                             {"generator", source.names()[static_cast<std::size_t>(gen)]},
                             {"degree", source.degrees()[static_cast<std::size_t>(gen)]},
                             {"residual", target.format(residual)}};
        }
    }
};

} // namespace

Check verify_hopf_axioms(const HopfAlgebroidPresentation& H, int exponent_bound)
{
    Check check{"hopf.axioms", "hopf_algebroid.axioms", true, {}, {}};
    AxiomRecorder rec{check};
    const RingPresentation& A = *H.A;
    const RingPresentation& G = *H.Gamma;
    const TensorPower& T2 = *H.square;
    int na = A.num_generators();
    int ng = G.num_generators();

    ZeroTest zA(H.A, exponent_bound);
    ZeroTest zG(H.Gamma, exponent_bound);
    ZeroTest z2(T2.ring, exponent_bound);
    TensorPower T3 = tensor_power(H.A, H.Gamma, H.eta_L, H.eta_R, 3);
    ZeroTest z3(T3.ring, exponent_bound);

    auto relations_map = [&](const std::string& axiom, const RingPresentation& source,
                             const std::vector<Polynomial>& images, const RingPresentation& target, ZeroTest& z) {
        auto& entry = rec.axioms[axiom];
        entry = {{"checked", 0}, {"pass", true}};
        for (const auto& r : source.relations()) {
            Polynomial img = r.substitute(images);
            entry["checked"] = entry["checked"].get<long>() + 1;
            if (z.is_zero(img))
                continue;
            entry["pass"] = false;
            if (check.pass) {
                check.pass = false;
                check.witness = {{"axiom", axiom},
                                 {"relation", source.format(r)},
                                 {"degree", source.degree_of(r).value_or(0)},
                                 {"residual", target.format(img)}};
            }
        }
    };
    auto compare = [&](const std::string& axiom, const RingPresentation& source, int count,
                       auto&& lhs_of, auto&& rhs_of, const RingPresentation& target, ZeroTest& z) {
        for (int g = 0; g < count; ++g) {
            Polynomial residual = lhs_of(g) - rhs_of(g);
            rec.record(axiom, source, g, target, residual, z.is_zero(residual));
        }
    };
    auto at = [](const std::vector<Polynomial>& v, int i) -> const Polynomial& {
        return v[static_cast<std::size_t>(i)];
    };

    relations_map("well_defined.eta_L", A, H.eta_L, G, zG);
    relations_map("well_defined.eta_R", A, H.eta_R, G, zG);
    relations_map("well_defined.counit", G, H.counit, A, zA);
    relations_map("well_defined.comult", G, H.comult, *T2.ring, z2);
    if (H.conjugation)
        relations_map("well_defined.conjugation", G, *H.conjugation, G, zG);

    std::vector<Polynomial> idA = identity_images(na);
    std::vector<Polynomial> idG = identity_images(ng);
    auto gen_A = [&](int a) { return Polynomial::generator(a); };
    auto gen_G = [&](int g) { return Polynomial::generator(g); };

    compare("counit.eta_L", A, na, [&](int a) { return at(H.eta_L, a).substitute(H.counit); }, gen_A, A, zA);
    compare("counit.eta_R", A, na, [&](int a) { return at(H.eta_R, a).substitute(H.counit); }, gen_A, A, zA);

    std::vector<Polynomial> eta_L_eps = composite(H.counit, H.eta_L);
    std::vector<Polynomial> eta_R_eps = composite(H.counit, H.eta_R);
    auto eps_left = T2.map_images({eta_L_eps, idG});
    auto eps_right = T2.map_images({idG, eta_R_eps});
    compare("counit.left", G, ng, [&](int g) { return at(H.comult, g).substitute(eps_left); }, gen_G, G, zG);
    compare("counit.right", G, ng, [&](int g) { return at(H.comult, g).substitute(eps_right); }, gen_G, G, zG);

    compare("unit_compatibility.eta_L", A, na, [&](int a) { return at(H.eta_L, a).substitute(H.comult); },
            [&](int a) { return at(H.eta_L, a).substitute(T2.inclusion[0]); }, *T2.ring, z2);
    compare("unit_compatibility.eta_R", A, na, [&](int a) { return at(H.eta_R, a).substitute(H.comult); },
            [&](int a) { return at(H.eta_R, a).substitute(T2.inclusion[1]); }, *T2.ring, z2);

    auto into_T3 = [&](int first, int second) {
        return T2.map_images({T3.inclusion[static_cast<std::size_t>(first)], T3.inclusion[static_cast<std::size_t>(second)]});
    };
    auto delta_01 = into_T3(0, 1);
    auto delta_12 = into_T3(1, 2);
    std::vector<Polynomial> delta_tensor_1 = T2.map_images({composite(H.comult, delta_01), T3.inclusion[2]});
    std::vector<Polynomial> one_tensor_delta = T2.map_images({T3.inclusion[0], composite(H.comult, delta_12)});
    compare("coassociativity", G, ng, [&](int g) { return at(H.comult, g).substitute(delta_tensor_1); },
            [&](int g) { return at(H.comult, g).substitute(one_tensor_delta); }, *T3.ring, z3);

    if (H.conjugation) {
        const auto& c = *H.conjugation;
        compare("conjugation.eta_L", A, na, [&](int a) { return at(H.eta_L, a).substitute(c); },
                [&](int a) { return at(H.eta_R, a); }, G, zG);
        compare("conjugation.eta_R", A, na, [&](int a) { return at(H.eta_R, a).substitute(c); },
                [&](int a) { return at(H.eta_L, a); }, G, zG);
        compare("conjugation.involution", G, ng, [&](int g) { return at(c, g).substitute(c); }, gen_G, G, zG);
        auto left = T2.map_images({c, idG});
        auto right = T2.map_images({idG, c});
        compare("conjugation.left_antipode", G, ng, [&](int g) { return at(H.comult, g).substitute(left); },
                [&](int g) { return at(eta_R_eps, g); }, G, zG);
        compare("conjugation.right_antipode", G, ng, [&](int g) { return at(H.comult, g).substitute(right); },
                [&](int g) { return at(eta_L_eps, g); }, G, zG);
    }

    check.details = {{"truncation", H.truncation},
                     {"generators", ng},
                     {"tensor_square_generators", T2.ring->num_generators()},
                     {"axioms", rec.axioms}};
    return check;
}

InducedHopf induced_hopf(const FormalGroupLaw& F, int N)
{
    if (N < 2 || N > F.truncation())
        throw Error(ErrorCode::TruncationTooSmall,
                    "induced Hopf algebroid needs 2 <= N <= " + std::to_string(F.truncation()));
    Check axioms = fgl_check_axioms(F);
    if (!axioms.pass)
        throw Error(ErrorCode::AxiomsFail, "the classifying law fails its axioms: " + to_json(axioms).dump());

    RingPtr A = F.ring_ptr();
    int na = A->num_generators();
    int n = N - 1;
    std::set<std::string> side_names;
    for (const auto& g : A->generators()) {
        side_names.insert(g.name + "_L");
        side_names.insert(g.name + "_R");
    }
    std::string letter = "b";
    for (std::string candidate : {"b", "s", "t", "u", "w"}) {
        bool clash = false;
        for (int i = 1; i <= n; ++i)
            clash = clash || side_names.count(candidate + std::to_string(i));
        if (!clash) {
            letter = candidate;
            break;
        }
    }

    std::vector<GenSpec> gens;
    for (auto g : A->generators()) {
        g.name += "_L";
        gens.push_back(g);
    }
    for (int i = 1; i <= n; ++i)
        gens.push_back({letter + std::to_string(i), i, false});
    for (auto g : A->generators()) {
        g.name += "_R";
        gens.push_back(g);
    }
    int r_offset = na + n;
    std::vector<Polynomial> to_L = identity_images(na);
    std::vector<Polynomial> to_R;
    for (int a = 0; a < na; ++a)
        to_R.push_back(Polynomial::generator(r_offset + a));

    std::vector<Polynomial> rels;
    for (const auto& r : A->relations()) {
        rels.push_back(r.substitute(to_L));
        rels.push_back(r.substitute(to_R));
    }
    RingPtr free_gamma = make_ring(RingPresentation(A->scalars(), gens, rels));
    std::vector<Polynomial> all = identity_images(free_gamma->num_generators());
    FormalGroupLaw F_L(free_gamma, F.series().truncated(N).substitute_coefficients(to_L));
    FormalGroupLaw F_R(free_gamma, F.series().truncated(N).substitute_coefficients(to_R));
    TruncSeries b = iso_series(N, all, na);
    BiSeries diff = pushforward(F_L, StrictIso{free_gamma, b}).series() - F_R.series();

    InducedHopf out{F, {}, {}};
    std::set<std::pair<int, int>> used;
    for (const auto& [key, value] : diff.terms()) {
        auto [i, j] = key;
        if (value.is_zero() || used.count({j, i}))
            continue;
        used.insert(key);
        out.relations.push_back(value);
        rels.push_back(value);
    }

    HopfAlgebroidPresentation& H = out.result;
    H.A = A;
    H.Gamma = make_ring(RingPresentation(A->scalars(), gens, rels));
    H.truncation = n;
    H.eta_L = to_L;
    H.eta_R = to_R;
    H.counit = identity_images(na);
    H.counit.resize(static_cast<std::size_t>(na + n));
    for (int a = 0; a < na; ++a)
        H.counit.push_back(Polynomial::generator(a));

    H.square = std::make_shared<const TensorPower>(tensor_power(H.A, H.Gamma, H.eta_L, H.eta_R, 2));
    const auto& inc = H.square->inclusion;
    TruncSeries delta_b = series_compose(iso_series(N, inc[1], na), iso_series(N, inc[0], na), N);
    for (int a = 0; a < na; ++a)
        H.comult.push_back(inc[0][static_cast<std::size_t>(a)]);
    for (int i = 1; i <= n; ++i)
        H.comult.push_back(delta_b[i + 1]);
    for (int a = 0; a < na; ++a)
        H.comult.push_back(inc[1][static_cast<std::size_t>(r_offset + a)]);

    TruncSeries b_inv = series_revert(b, N);
    std::vector<Polynomial> conj = to_R;
    for (int i = 1; i <= n; ++i)
        conj.push_back(b_inv[i + 1]);
    conj.insert(conj.end(), to_L.begin(), to_L.end());
    H.conjugation = conj;
    return out;
}

Check verify_induced_collapse(const InducedHopf& H, int exponent_bound)
{
    Check check{"hopf.induced_collapse", "hopf_algebroid.induced_collapse", true, {}, {}};
    const auto& P = H.result;
    int na = P.A->num_generators();
    std::vector<Polynomial> extra;
    for (int i = 0; i < P.truncation; ++i)
        extra.push_back(Polynomial::generator(na + i));
    RingPtr collapsed = make_ring(P.Gamma->with_relations(extra));
    ZeroTest z(collapsed, exponent_bound);
    for (int a = 0; a < na; ++a) {
        Polynomial residual = P.eta_L[static_cast<std::size_t>(a)] - P.eta_R[static_cast<std::size_t>(a)];
        if (!z.is_zero(residual)) {
            check.pass = false;
            check.witness = {{"generator", P.A->names()[static_cast<std::size_t>(a)]},
                             {"residual", collapsed->format(residual)}};
            break;
        }
    }
    check.details = {{"generators_checked", na}, {"relations", H.relations.size()}};
    return check;
}

PoincareComparison cooperations_poincare(int N)
{
    if (N < 0)
        throw Error(ErrorCode::InvalidArgument, "degree bound must be non-negative");
    std::vector<GenSpec> gens;
    for (int i = 1; i <= N; ++i)
        gens.push_back({"m" + std::to_string(i), i, false});
    for (int i = 1; i <= N; ++i)
        gens.push_back({"b" + std::to_string(i), i, false});
    RingPresentation ring = RingPresentation::free(Base::Q, gens);
    PoincareComparison out;
    for (int d = 0; d <= N; ++d) {
        out.monomial_counts.push_back(static_cast<long>(enumerate_monomials(ring, d, std::max(N, 1)).monomials.size()));
        long conv = 0;
        for (int k = 0; k <= d; ++k)
            conv += partition_count(k) * partition_count(d - k);
        out.convolution.push_back(conv);
    }
    return out;
}

Check verify_cooperations_poincare(int N)
{
    Check check{"hopf.cooperations_poincare(" + std::to_string(N) + ")", "hopf_algebroid.cooperations_poincare",
                true, {}, {}};
    PoincareComparison cmp = cooperations_poincare(N);
    for (std::size_t d = 0; d < cmp.monomial_counts.size(); ++d)
        if (cmp.monomial_counts[d] != cmp.convolution[d]) {
            check.pass = false;
            check.witness = {{"degree", d}, {"monomials", cmp.monomial_counts[d]}, {"convolution", cmp.convolution[d]}};
            break;
        }
    check.details = {{"degrees", N}, {"counts", cmp.monomial_counts}};
    return check;
}

namespace {

nlohmann::json assignment(const RingPresentation& source, const std::vector<Polynomial>& images,
                          const RingPresentation& target)
{
    nlohmann::json out = nlohmann::json::object();
    for (int g = 0; g < source.num_generators(); ++g)
        out[source.names()[static_cast<std::size_t>(g)]] = target.format(images[static_cast<std::size_t>(g)]);
    return out;
}

} // namespace

nlohmann::json hopf_to_json(const HopfAlgebroidPresentation& H)
{
    nlohmann::json out = {{"A", presentation_to_json(*H.A)},
                          {"Gamma", presentation_to_json(*H.Gamma)},
                          {"tensor_square", presentation_to_json(*H.square->ring)},
                          {"truncation", H.truncation},
                          {"eta_L", assignment(*H.A, H.eta_L, *H.Gamma)},
                          {"eta_R", assignment(*H.A, H.eta_R, *H.Gamma)},
                          {"counit", assignment(*H.Gamma, H.counit, *H.A)},
                          {"comult", assignment(*H.Gamma, H.comult, *H.square->ring)}};
    out["conjugation"] = H.conjugation ? assignment(*H.Gamma, *H.conjugation, *H.Gamma) : nlohmann::json();
    return out;
}

} // namespace cobalt
