#include "cobalt/oriented.hpp"

#include "cobalt/error.hpp"
#include "cobalt/graded.hpp"
#include "cobalt/parse.hpp"

namespace cobalt {

namespace {

std::string nd_label(int n, int d) { return "(" + std::to_string(n) + "," + std::to_string(d) + ")"; }

} // namespace

FreeModuleOnSchur::FreeModuleOnSchur(RingPtr coeff, std::shared_ptr<const GrassRing> grass)
    : coeff_(std::move(coeff)), grass_(std::move(grass)),
      constants_(cobalt::structure_constants(grass_->n(), grass_->d()))
{
}

FreeModuleOnSchur::Element FreeModuleOnSchur::basis_element(std::size_t i) const
{
    Element e(rank());
    e[i] = Polynomial(1);
    return e;
}

FreeModuleOnSchur::Element FreeModuleOnSchur::from_grass(std::span<const Integer> coords) const
{
    Element e(rank());
    for (std::size_t i = 0; i < coords.size(); ++i)
        e[i] = Polynomial(Rational(coords[i]));
    return e;
}

FreeModuleOnSchur::Element FreeModuleOnSchur::product(const Element& a, const Element& b) const
{
    Element out(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < rank(); ++j) {
            if (b[j].is_zero())
                continue;
            Polynomial ab = a[i] * b[j];
            for (std::size_t k = 0; k < rank(); ++k)
                if (constants_[i][j][k] != 0)
                    out[k] += ab * Rational(constants_[i][j][k]);
        }
    }
    return out;
}

FreeModuleOnSchur grassmann_cohomology(RingPtr coeff, int n, int d)
{
    if (!coeff)
        throw Error(ErrorCode::InvalidArgument, "missing coefficient ring");
    return FreeModuleOnSchur(std::move(coeff), grass_ring(n, d));
}

ProjBundleRing::ProjBundleRing(RingPtr base, std::vector<Polynomial> chern)
    : base_(std::move(base)), chern_(std::move(chern))
{
    if (!base_)
        throw Error(ErrorCode::InvalidArgument, "missing base ring");
    for (std::size_t i = 0; i < chern_.size(); ++i) {
        const Polynomial& c = chern_[i];
        if (c.is_zero())
            continue;
        auto deg = base_->degree_of(c);
        if (!deg || *deg != static_cast<long>(i) + 1)
            throw Error(ErrorCode::DegreeMismatch, "c_" + std::to_string(i + 1) + " = " + base_->format(c) +
                                                       " is not of degree " + std::to_string(i + 1));
    }
    std::vector<GenSpec> gens = base_->generators();
    std::string name = "x";
    while (base_->find(name))
        name += "'";
    gens.push_back({name, 1, false});

    int r = rank();
    relation_ = Polynomial::generator(x_index(), r + 1);
    for (int i = 1; i <= r; ++i) {
        Polynomial term = chern_[static_cast<std::size_t>(i - 1)] * Polynomial::generator(x_index(), r + 1 - i);
        relation_ += i % 2 ? -term : term;
    }
    std::vector<Polynomial> rels = base_->relations();
    rels.push_back(relation_);
    presentation_ = make_ring(RingPresentation(base_->scalars(), std::move(gens), std::move(rels)));
}

ProjBundleRing::Element ProjBundleRing::normal_form(const Polynomial& p) const
{
    int xi = x_index();
    std::map<int, Polynomial> by_power;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(xi);
        if (e < 0)
            throw Error(ErrorCode::InvalidArgument, "negative power of x");
        Monomial rest = e == 0 ? m : m * Monomial::generator(xi, -e);
        by_power[e].add_term(rest, c);
    }
    int r = rank();
    for (auto it = by_power.rbegin(); it != by_power.rend() && it->first > r;) {
        int k = it->first;
        Polynomial c = it->second;
        by_power.erase(k);
        // x^k = -x^{k-r-1} sum_i (-1)^i c_i x^{r+1-i}
        for (int i = 1; i <= r; ++i) {
            Polynomial term = c * chern_[static_cast<std::size_t>(i - 1)];
            by_power[k - i] += i % 2 ? term : -term;
        }
        it = by_power.rbegin();
    }
    Element out(static_cast<std::size_t>(r + 1));
    for (auto& [k, c] : by_power)
        out[static_cast<std::size_t>(k)] = std::move(c);
    return out;
}

Polynomial ProjBundleRing::to_polynomial(const Element& e) const
{
    Polynomial out;
    for (std::size_t k = 0; k < e.size(); ++k)
        out += e[k] * Polynomial::generator(x_index(), static_cast<int>(k));
    return out;
}

std::vector<ProjBundleRing::Element> ProjBundleRing::multiplication_by_x() const
{
    std::vector<Element> rows;
    for (int j = 0; j <= rank(); ++j)
        rows.push_back(normal_form(Polynomial::generator(x_index(), j + 1)));
    return rows;
}

ProjBundleRing projective_bundle(RingPtr base, std::vector<Polynomial> chern)
{
    return ProjBundleRing(std::move(base), std::move(chern));
}

ThomClass thom_class(int n, int d)
{
    if (d < 0 || d >= n)
        throw Error(ErrorCode::InvalidArgument, "Thom class needs 0 <= d < n, got " + nd_label(n, d));
    auto grass = grass_ring(n, d);
    RingPtr base = make_ring(grass->presentation());
    int r = n - d;
    std::vector<Polynomial> chern;
    for (int i = 1; i <= r; ++i)
        chern.push_back(Polynomial::generator(i - 1));
    ProjBundleRing bundle(base, chern);
    ProjBundleRing::Element th(static_cast<std::size_t>(r + 1));
    th[static_cast<std::size_t>(r)] = Polynomial(1);
    for (int i = 1; i <= r; ++i)
        th[static_cast<std::size_t>(r - i)] = chern[static_cast<std::size_t>(i - 1)] * Rational(i % 2 ? -1 : 1);
    return {std::move(bundle), std::move(th)};
}

Check verify_thom(int n, int d)
{
    Check check{"oriented.thom" + nd_label(n, d), "oriented.zero_section_identity", true, {}, {}};
    int r = n - d;
    ThomClass low = thom_class(n, d);
    ThomClass high = thom_class(n + 1, d + 1);
    auto lg = grass_ring(n, d);
    auto hg = grass_ring(n + 1, d + 1);
    auto fail = [&](const std::string& what, nlohmann::json w) {
        if (check.pass) {
            check.pass = false;
            w["identity"] = what;
            check.witness = w;
        }
    };

    bool monic = low.th[static_cast<std::size_t>(r)] == Polynomial(1) && high.th[static_cast<std::size_t>(r)] == Polynomial(1);
    if (!monic)
        fail("monic", {});

    SchurMap f = map_f(n, d);
    for (int k = 0; k <= r; ++k) {
        auto src = hg->coordinates(high.th[static_cast<std::size_t>(k)]);
        auto img = row_times(src, f.matrix);
        if (img != lg->coordinates(low.th[static_cast<std::size_t>(k)]))
            fail("restriction", {{"power", k}});
    }

    Polynomial z = high.bundle.zero_section(high.th);
    Polynomial expected = Polynomial::generator(r - 1) * Rational(r % 2 ? -1 : 1);
    bool zero_ok = hg->coordinates(z) == hg->coordinates(expected);
    if (!zero_ok)
        fail("zero_section", {{"value", hg->presentation().format(z)}, {"expected", hg->presentation().format(expected)}});

    SchurMap iota = map_iota(n, d);
    int sign = r % 2 ? -1 : 1;
    std::size_t gysin_checked = 0;
    for (std::size_t i = 0; i < lg->rank(); ++i) {
        const Partition& a = lg->basis()[i];
        auto idx = hg->index_of(a);
        if (!idx) {
            fail("gysin", {{"partition", a.to_string()}});
            continue;
        }
        auto lhs = hg->coordinates(z * hg->schur(*idx));
        auto row = iota.matrix.row(i);
        std::vector<Integer> rhs(row.begin(), row.end());
        for (auto& v : rhs)
            v *= sign;
        if (lhs != rhs)
            fail("gysin", {{"partition", a.to_string()}});
        ++gysin_checked;
    }
    check.details = {{"r", r},
                     {"sign", sign},
                     {"thom_class", bundle_element_to_json(low.bundle, low.th)},
                     {"zero_section", hg->presentation().format(z)},
                     {"monic", monic},
                     {"zero_section_ok", zero_ok},
                     {"gysin_partitions_checked", gysin_checked}};
    return check;
}

Check verify_projective_bundle(int n, int d)
{
    Check check{"oriented.projective_bundle" + nd_label(n, d), "oriented.projective_bundle_basis", true, {}, {}};
    ThomClass t = thom_class(n, d);
    const ProjBundleRing& B = t.bundle;
    int r = B.rank();
    auto rows = B.multiplication_by_x();
    for (int j = 0; j <= r; ++j) {
        ProjBundleRing::Element expect(static_cast<std::size_t>(r + 1));
        if (j < r) {
            expect[static_cast<std::size_t>(j + 1)] = Polynomial(1);
        } else {
            for (int i = 1; i <= r; ++i)
                expect[static_cast<std::size_t>(r + 1 - i)] =
                    B.chern()[static_cast<std::size_t>(i - 1)] * Rational(i % 2 ? 1 : -1);
        }
        if (rows[static_cast<std::size_t>(j)] != expect && check.pass) {
            check.pass = false;
            check.witness = {{"identity", "companion"}, {"row", j}};
        }
    }

    auto grass = grass_ring(n, d);
    long total = 0;
    bool torsion_free = true;
    int top = grass->top_degree() + r;
    for (int k = 0; k <= top + 1; ++k) {
        auto comp = graded_component(*B.presentation(), k, top + 1);
        total += comp.free_rank;
        torsion_free = torsion_free && comp.torsion.empty() && !comp.truncated;
    }
    long expected = static_cast<long>((r + 1) * grass->rank());
    if ((total != expected || !torsion_free) && check.pass) {
        check.pass = false;
        check.witness = {{"identity", "free_rank"}, {"rank", total}, {"expected", expected}};
    }
    check.details = {{"r", r}, {"z_rank", total}, {"expected_rank", expected}, {"torsion_free", torsion_free},
                     {"relation", B.presentation()->format(B.relation())}};
    return check;
}

nlohmann::json module_to_json(const FreeModuleOnSchur& M)
{
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& a : M.grass().basis())
        basis.push_back(a.to_string());
    nlohmann::json table = nlohmann::json::array();
    const auto& c = M.structure_constants();
    for (std::size_t i = 0; i < M.rank(); ++i)
        for (std::size_t j = i; j < M.rank(); ++j) {
            nlohmann::json terms = nlohmann::json::array();
            for (std::size_t k = 0; k < M.rank(); ++k)
                if (c[i][j][k] != 0)
                    terms.push_back({{"partition", M.grass().basis()[k].to_string()}, {"coefficient", integer_json(c[i][j][k])}});
            if (!terms.empty())
                table.push_back({{"a", basis[i]}, {"b", basis[j]}, {"product", terms}});
        }
    return {{"coeff", presentation_to_json(M.coeff())},
            {"n", M.grass().n()},
            {"d", M.grass().d()},
            {"rank", M.rank()},
            {"basis", basis},
            {"products", table}};
}

nlohmann::json bundle_element_to_json(const ProjBundleRing& B, const ProjBundleRing::Element& e)
{
    return B.presentation()->format(B.to_polynomial(e));
}

} // namespace cobalt
