#include "cobalt/schur.hpp"

#include "cobalt/error.hpp"
#include "cobalt/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>

namespace cobalt {

Partition::Partition(std::vector<int> p) : parts(std::move(p))
{
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1]))
            throw Error(ErrorCode::InvalidArgument, "parts must be weakly decreasing and nonnegative");
    }
}

int Partition::size() const
{
    int s = 0;
    for (int p : parts)
        s += p;
    return s;
}

bool Partition::fits(int rows, int cols) const { return length() <= rows && (parts.empty() || parts[0] <= cols); }

Partition Partition::complement(int rows, int cols) const
{
    std::vector<int> out(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i)
        out[static_cast<std::size_t>(i)] = cols - part(rows - 1 - i);
    return Partition(std::move(out));
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

std::vector<Partition> box_partitions(int rows, int cols)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int cap) -> void {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == rows)
            return;
        for (int p = 1; p <= cap; ++p) {
            cur.push_back(p);
            self(self, p);
            cur.pop_back();
        }
    };
    if (rows >= 0 && cols >= 0)
        rec(rec, cols);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.parts > b.parts;
    });
    return out;
}

int grass_max_n()
{
    if (const char* env = std::getenv("COBALT_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0 && v <= 64)
            return static_cast<int>(v);
    }
    return 8;
}

namespace {

void check_nd(int n, int d)
{
    if (d < 0 || n < d)
        throw Error(ErrorCode::InvalidArgument, "need 0 <= d <= n, got n=" + std::to_string(n) + ", d=" + std::to_string(d));
    if (n > grass_max_n())
        throw Error(ErrorCode::BoundExceeded,
                    "n=" + std::to_string(n) + " exceeds the size limit " + std::to_string(grass_max_n()));
}

} // namespace

RingPresentation grass_presentation(int n, int d)
{
    check_nd(n, d);
    int m = n - d;
    std::vector<GenSpec> gens;
    std::vector<Polynomial> f{Polynomial(1)};
    for (int i = 1; i <= m; ++i) {
        gens.push_back({"x" + std::to_string(i), i, false});
        f.push_back(Polynomial::generator(i - 1));
    }
    TruncSeries s = series_invert(TruncSeries::from_coefficients(n, f), n);
    std::vector<Polynomial> rels;
    for (int j = d + 1; j <= n; ++j)
        if (!s[j].is_zero())
            rels.push_back(s[j]);
    return RingPresentation(Scalars{}, std::move(gens), std::move(rels));
}

Polynomial schur_poly(const Partition& a, int n, int d)
{
    if (!a.fits(d, n - d))
        throw Error(ErrorCode::PartitionOutOfBox,
                    a.to_string() + " does not fit the " + std::to_string(d) + "x" + std::to_string(n - d) + " box");
    int m = n - d;
    auto entry = [&](int r, int c) -> Polynomial {
        int i = a.part(r) - r + c;
        if (i == 0)
            return Polynomial(1);
        if (i < 0 || i > m)
            return Polynomial();
        return Polynomial::generator(i - 1);
    };
    // Row-by-row Laplace expansion over column subsets.
    std::size_t masks = std::size_t{1} << d;
    std::vector<Polynomial> dp(masks);
    dp[0] = Polynomial(1);
    for (std::size_t mask = 0; mask < masks; ++mask) {
        if (dp[mask].is_zero())
            continue;
        int r = __builtin_popcountll(mask);
        if (r == d)
            continue;
        for (int c = 0; c < d; ++c) {
            if (mask & (std::size_t{1} << c))
                continue;
            Polynomial e = entry(r, c);
            if (e.is_zero())
                continue;
            int above = __builtin_popcountll(mask >> (c + 1));
            Polynomial term = dp[mask] * e;
            if (above % 2)
                term = -term;
            dp[mask | (std::size_t{1} << c)] += term;
        }
    }
    return dp[masks - 1];
}

GrassRing::GrassRing(int n, int d) : n_(n), d_(d), ring_(make_ring(grass_presentation(n, d)))
{
    basis_ = box_partitions(d, n - d);
    for (const auto& a : basis_)
        schur_.push_back(schur_poly(a, n, d));
    int top = top_degree();
    degree_start_.assign(static_cast<std::size_t>(top) + 2, 0);
    for (int k = 0; k <= top + 1; ++k)
        degree_start_[static_cast<std::size_t>(k)] = static_cast<std::size_t>(
            std::count_if(basis_.begin(), basis_.end(), [k](const Partition& a) { return a.size() < k; }));

    const int gen_degree[] = {0};
    int bound = top + num_vars();
    for (int k = 0; k <= top + num_vars(); ++k) {
        auto piece = std::make_unique<GradedPiece>(*ring_, gen_degree, std::span<const ModuleElement>{}, k, bound);
        auto q = std::make_unique<LatticeQuotient>(piece->quotient());
        if (piece->truncated())
            throw Error(ErrorCode::IllFormed, "exponent bound active in degree " + std::to_string(k));
        if (k > top) {
            if (!q->is_zero())
                throw Error(ErrorCode::IllFormed, "R_{n,d} does not vanish in degree " + std::to_string(k));
            continue;
        }
        auto [lo, hi] = degree_range(k);
        if (!q->torsion().empty() || q->free_rank() != hi - lo)
            throw Error(ErrorCode::IllFormed, "degree " + std::to_string(k) + " is not free of the expected rank");
        IntMatrix s(0, hi - lo);
        for (std::size_t i = lo; i < hi; ++i)
            s.append_row(q->free_coordinates(*piece->vectorize({schur_[i]})));
        Degree entry;
        entry.schur_inverse = s.rows() == 0 ? IntMatrix() : unimodular_inverse(s);
        entry.piece = std::move(piece);
        entry.quotient = std::move(q);
        degrees_.push_back(std::move(entry));
    }
}

std::pair<std::size_t, std::size_t> GrassRing::degree_range(int k) const
{
    if (k < 0 || k > top_degree())
        return {0, 0};
    return {degree_start_[static_cast<std::size_t>(k)], degree_start_[static_cast<std::size_t>(k) + 1]};
}

std::optional<std::size_t> GrassRing::index_of(const Partition& a) const
{
    auto [lo, hi] = degree_range(a.size());
    for (std::size_t i = lo; i < hi; ++i)
        if (basis_[i] == a)
            return i;
    return std::nullopt;
}

std::vector<Integer> GrassRing::coordinates(const Polynomial& p) const
{
    if (!p.is_integral())
        throw Error(ErrorCode::InvalidArgument, "Schur coordinates need integral coefficients");
    if (p.max_generator() >= num_vars())
        throw Error(ErrorCode::InvalidArgument, "polynomial uses a variable outside x_1..x_{n-d}");
    std::map<long, Polynomial> parts;
    for (const auto& [m, c] : p.terms()) {
        if (m.has_negative_exponent())
            throw Error(ErrorCode::InvalidArgument, "negative exponent in R_{n,d}");
        parts[m.degree(ring_->degrees())].add_term(m, c);
    }
    std::vector<Integer> out(basis_.size());
    for (const auto& [k, comp] : parts) {
        if (k > top_degree())
            continue;
        const Degree& deg = degrees_[static_cast<std::size_t>(k)];
        auto vec = deg.piece->vectorize({comp});
        if (!vec)
            throw Error(ErrorCode::IllFormed, "term outside the enumerated monomials");
        auto free = deg.quotient->free_coordinates(*vec);
        auto coords = row_times(free, deg.schur_inverse);
        auto [lo, hi] = degree_range(static_cast<int>(k));
        for (std::size_t i = lo; i < hi; ++i)
            out[i] = coords[i - lo];
    }
    return out;
}

bool GrassRing::is_zero(const Polynomial& p) const
{
    auto c = coordinates(p);
    return std::all_of(c.begin(), c.end(), [](const Integer& v) { return v == 0; });
}

Polynomial GrassRing::element(std::span<const Integer> coords) const
{
    Polynomial out;
    for (std::size_t i = 0; i < coords.size() && i < schur_.size(); ++i)
        if (coords[i] != 0)
            out += schur_[i] * Rational(coords[i]);
    return out;
}

std::vector<Integer> GrassRing::product(std::size_t a, std::size_t b) const { return coordinates(schur_[a] * schur_[b]); }

std::shared_ptr<const GrassRing> grass_ring(int n, int d)
{
    check_nd(n, d);
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const GrassRing>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{n, d}];
    if (!slot)
        slot = std::make_shared<const GrassRing>(n, d);
    return slot;
}

namespace {

SchurMap substitution_map(std::shared_ptr<const GrassRing> source, std::shared_ptr<const GrassRing> target,
                          const std::vector<Polynomial>& images, const std::string& name)
{
    for (const auto& rel : source->presentation().relations()) {
        if (!target->is_zero(rel.substitute(images)))
            throw Error(ErrorCode::IllFormed, name + " does not send relation " + source->presentation().format(rel) +
                                                  " into the target ideal");
    }
    SchurMap map{source, target, IntMatrix(0, target->rank()), 0};
    for (std::size_t i = 0; i < source->rank(); ++i)
        map.matrix.append_row(target->coordinates(source->schur(i).substitute(images)));
    if (source->rank() == 0)
        map.matrix = IntMatrix(0, target->rank());
    return map;
}

void require_proper(int n, int d)
{
    if (d >= n)
        throw Error(ErrorCode::InvalidArgument, "the maps need d < n");
}

} // namespace

SchurMap map_pi(int n, int d)
{
    require_proper(n, d);
    auto source = grass_ring(n + 1, d + 1);
    auto target = grass_ring(n, d + 1);
    std::vector<Polynomial> images;
    for (int i = 0; i < n - d; ++i)
        images.push_back(i < n - d - 1 ? Polynomial::generator(i) : Polynomial());
    return substitution_map(source, target, images, "pi");
}

SchurMap map_f(int n, int d)
{
    require_proper(n, d);
    auto source = grass_ring(n + 1, d + 1);
    auto target = grass_ring(n, d);
    std::vector<Polynomial> images;
    for (int i = 0; i < n - d; ++i)
        images.push_back(Polynomial::generator(i));
    return substitution_map(source, target, images, "f");
}

SchurMap map_iota(int n, int d)
{
    require_proper(n, d);
    auto source = grass_ring(n, d);
    auto target = grass_ring(n + 1, d + 1);
    SchurMap map{source, target, IntMatrix(source->rank(), target->rank()), n - d};
    for (std::size_t i = 0; i < source->rank(); ++i) {
        std::vector<int> parts{n - d};
        const auto& a = source->basis()[i].parts;
        parts.insert(parts.end(), a.begin(), a.end());
        auto j = target->index_of(Partition(parts));
        if (!j)
            throw Error(ErrorCode::IllFormed, "prepended partition leaves the box");
        map.matrix(i, *j) = 1;
    }
    return map;
}

StructureConstants structure_constants(int n, int d)
{
    auto ring = grass_ring(n, d);
    StructureConstants c(ring->rank(), std::vector<std::vector<Integer>>(ring->rank()));
    for (std::size_t a = 0; a < ring->rank(); ++a)
        for (std::size_t b = 0; b < ring->rank(); ++b)
            c[a][b] = b < a ? c[b][a] : ring->product(a, b);
    return c;
}

namespace {

/// Row echelon form over Q, each row normalized with pivot 1.
struct Echelon {
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> pivots;
    /// Combination of the inserted vectors that produced each row.
    std::vector<std::vector<Rational>> combos;
    std::size_t inserted = 0;

    /// Reduces v against the rows; `combo` receives the multiples subtracted.
    void reduce(std::vector<Rational>& v, std::vector<Rational>* combo) const
    {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Rational f = v[pivots[r]];
            if (f == 0)
                continue;
            for (std::size_t k = 0; k < v.size(); ++k)
                if (rows[r][k] != 0)
                    v[k] -= f * rows[r][k];
            if (combo)
                for (std::size_t k = 0; k < combos[r].size(); ++k)
                    (*combo)[k] += f * combos[r][k];
        }
    }

    void insert(std::vector<Rational> v, std::size_t total)
    {
        std::vector<Rational> combo(total);
        reduce(v, &combo);
        for (auto& c : combo)
            c = -c;
        combo[inserted++] = 1;
        auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
        if (it == v.end())
            return;
        std::size_t p = static_cast<std::size_t>(it - v.begin());
        Rational lead = v[p];
        for (auto& q : v)
            q /= lead;
        for (auto& q : combo)
            q /= lead;
        // Keep rows fully reduced so that reduce() needs a single pass.
        for (std::size_t r = 0; r < rows.size(); ++r) {
            Rational f = rows[r][p];
            if (f == 0)
                continue;
            for (std::size_t k = 0; k < v.size(); ++k)
                rows[r][k] -= f * v[k];
            for (std::size_t k = 0; k < total; ++k)
                combos[r][k] -= f * combo[k];
        }
        rows.push_back(std::move(v));
        pivots.push_back(p);
        combos.push_back(std::move(combo));
    }
};

} // namespace

std::optional<std::vector<Rational>> solve_modulo(const std::vector<std::vector<Rational>>& relations,
                                                  const std::vector<std::vector<Rational>>& basis,
                                                  const std::vector<Rational>& target)
{
    Echelon rel;
    for (const auto& r : relations)
        rel.insert(r, relations.size());
    Echelon span;
    for (const auto& b : basis) {
        std::vector<Rational> v = b;
        rel.reduce(v, nullptr);
        span.insert(std::move(v), basis.size());
    }
    std::vector<Rational> v = target;
    rel.reduce(v, nullptr);
    std::vector<Rational> combo(basis.size());
    span.reduce(v, &combo);
    if (std::any_of(v.begin(), v.end(), [](const Rational& q) { return q != 0; }))
        return std::nullopt;
    return combo;
}

StructureConstants structure_constants_by_expansion(int n, int d)
{
    auto ring = grass_ring(n, d);
    const RingPresentation& pres = ring->presentation();
    RingPresentation free_ring(pres.scalars(), pres.generators());
    int top = ring->top_degree();
    int max_degree = 2 * top;

    std::vector<std::vector<Monomial>> monomials(static_cast<std::size_t>(max_degree) + 1);
    std::vector<std::map<Monomial, std::size_t>> index(monomials.size());
    for (int k = 0; k <= max_degree; ++k) {
        monomials[static_cast<std::size_t>(k)] = enumerate_monomials(free_ring, k, k).monomials;
        for (std::size_t i = 0; i < monomials[static_cast<std::size_t>(k)].size(); ++i)
            index[static_cast<std::size_t>(k)][monomials[static_cast<std::size_t>(k)][i]] = i;
    }
    auto to_vector = [&](const Polynomial& p, int k) {
        std::vector<Rational> v(monomials[static_cast<std::size_t>(k)].size());
        for (const auto& [m, c] : p.terms())
            v[index[static_cast<std::size_t>(k)].at(m)] = c;
        return v;
    };
    std::vector<std::vector<std::vector<Rational>>> relation_rows(monomials.size());
    for (int k = 0; k <= max_degree; ++k)
        for (const auto& rel : pres.relations()) {
            long e = *pres.degree_of(rel);
            if (e > k)
                continue;
            for (const auto& t : monomials[static_cast<std::size_t>(k - e)])
                relation_rows[static_cast<std::size_t>(k)].push_back(to_vector(Polynomial(t) * rel, k));
        }

    std::size_t rank = ring->rank();
    StructureConstants c(rank, std::vector<std::vector<Integer>>(rank, std::vector<Integer>(rank)));
    for (std::size_t a = 0; a < rank; ++a)
        for (std::size_t b = a; b < rank; ++b) {
            int k = ring->basis()[a].size() + ring->basis()[b].size();
            auto [lo, hi] = ring->degree_range(k);
            std::vector<std::vector<Rational>> basis;
            for (std::size_t i = lo; i < hi; ++i)
                basis.push_back(to_vector(ring->schur(i), k));
            auto sol = solve_modulo(relation_rows[static_cast<std::size_t>(k)], basis,
                                    to_vector(ring->schur(a) * ring->schur(b), k));
            if (!sol)
                throw Error(ErrorCode::IllFormed, "product is not in the Schur span");
            for (std::size_t i = lo; i < hi; ++i) {
                const Rational& q = (*sol)[i - lo];
                if (q.get_den() != 1)
                    throw Error(ErrorCode::IllFormed, "non-integral structure constant");
                c[a][b][i] = q.get_num();
            }
            c[b][a] = c[a][b];
        }
    return c;
}

IntMatrix pairing_gram(int n, int d)
{
    auto ring = grass_ring(n, d);
    std::size_t r = ring->rank();
    std::size_t top = r - 1;
    IntMatrix g(r, r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            auto [lo, hi] = ring->degree_range(ring->basis()[a].size() + ring->basis()[b].size());
            if (top < lo || top >= hi)
                continue;
            g(a, b) = ring->product(a, b)[top];
        }
    return g;
}

nlohmann::json coordinates_to_json(const GrassRing& ring, std::span<const Integer> coords)
{
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0)
            out.push_back({{"partition", ring.basis()[i].to_string()}, {"coefficient", integer_json(coords[i])}});
    return out;
}

namespace {

std::string nd_label(int n, int d) { return "(" + std::to_string(n) + "," + std::to_string(d) + ")"; }

Integer binomial(int n, int k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Sub-block of rows [r0,r1) and columns [c0,c1).
IntMatrix block(const IntMatrix& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1)
{
    IntMatrix out(r1 - r0, c1 - c0);
    for (std::size_t r = r0; r < r1; ++r)
        for (std::size_t c = c0; c < c1; ++c)
            out(r - r0, c - c0) = m(r, c);
    return out;
}

/// First row of `a` not in the row span of `b`, if any.
std::optional<std::size_t> first_outside(const IntMatrix& a, const IntMatrix& b, std::size_t dim)
{
    LatticeQuotient q(b, dim, Scalars{});
    for (std::size_t r = 0; r < a.rows(); ++r)
        if (!q.contains(a.row(r)))
            return r;
    return std::nullopt;
}

} // namespace

Check verify_rank(int n, int d)
{
    Check check{"grass.rank" + nd_label(n, d), "grassmannian.free_rank", false, {}, {}};
    auto ring = grass_ring(n, d);
    Integer expected = binomial(n, d);
    check.details = {{"rank", ring->rank()}, {"expected", integer_json(expected)}};
    check.pass = Integer(static_cast<unsigned long>(ring->rank())) == expected;
    return check;
}

Check verify_complex(int n, int d)
{
    Check check{"grass.complex" + nd_label(n, d), "grassmannian.exact_sequence", true, {}, {}};
    SchurMap pi = map_pi(n, d);
    SchurMap iota = map_iota(n, d);
    const GrassRing& mid = *pi.source;
    const GrassRing& low = *iota.source;
    int shift = n - d;

    IntMatrix composite = iota.matrix * pi.matrix;
    if (!composite.is_zero()) {
        check.pass = false;
        check.witness = {{"reason", "pi o iota != 0"}};
        return check;
    }
    Polynomial xnd = Polynomial::generator(n - d - 1);
    nlohmann::json per_degree = nlohmann::json::array();
    for (int k = 0; k <= mid.top_degree(); ++k) {
        auto [lo, hi] = mid.degree_range(k);
        auto [tlo, thi] = pi.target->degree_range(k);
        std::size_t dim = hi - lo;
        IntMatrix pk = block(pi.matrix, lo, hi, tlo, thi);
        IntMatrix kernel(0, dim);
        if (thi > tlo) {
            for (const auto& v : integer_kernel(pk.transposed()))
                kernel.append_row(v);
        } else {
            kernel = IntMatrix::identity(dim);
        }
        IntMatrix image(0, dim);
        auto [slo, shi] = low.degree_range(k - shift);
        if (k - shift >= 0)
            for (std::size_t i = slo; i < shi; ++i)
                image.append_row(std::span<const Integer>(iota.matrix.row(i).data() + lo, dim));
        IntMatrix ideal(0, dim);
        auto [blo, bhi] = mid.degree_range(k - shift);
        if (k - shift >= 0)
            for (std::size_t i = blo; i < bhi; ++i) {
                auto c = mid.coordinates(xnd * mid.schur(i));
                ideal.append_row(std::span<const Integer>(c.data() + lo, dim));
            }
        const std::pair<const char*, std::optional<std::size_t>> tests[] = {
            {"ker(pi) in im(iota)", first_outside(kernel, image, dim)},
            {"im(iota) in ker(pi)", first_outside(image, kernel, dim)},
            {"ker(pi) in (x_{n-d})", first_outside(kernel, ideal, dim)},
            {"(x_{n-d}) in ker(pi)", first_outside(ideal, kernel, dim)},
        };
        for (const auto& [label, bad] : tests) {
            if (bad && check.pass) {
                check.pass = false;
                check.witness = {{"degree", k}, {"reason", label}};
            }
        }
        per_degree.push_back({{"degree", k}, {"kernel_rank", kernel.rows()}, {"image_rank", image.rows()}});
    }
    check.details = {{"degrees", per_degree}};
    return check;
}

Check verify_eq1(int n, int d)
{
    Check check{"grass.eq1" + nd_label(n, d), "grassmannian.restriction_identity", true, {}, {}};
    SchurMap f = map_f(n, d);
    std::size_t count = 0;
    for (std::size_t j = 0; j < f.target->rank(); ++j) {
        const Partition& a = f.target->basis()[j];
        auto i = f.source->index_of(a);
        bool ok = i.has_value();
        if (ok)
            for (std::size_t c = 0; c < f.target->rank(); ++c)
                ok = ok && f.matrix(*i, c) == (c == j ? 1 : 0);
        ++count;
        if (!ok && check.pass) {
            check.pass = false;
            check.witness = {{"partition", a.to_string()}};
        }
    }
    check.details = {{"partitions_checked", count}};
    return check;
}

Check verify_eq2(int n, int d)
{
    Check check{"grass.eq2" + nd_label(n, d), "grassmannian.gysin_identity", true, {}, {}};
    SchurMap iota = map_iota(n, d);
    const GrassRing& big = *iota.target;
    Polynomial xnd = Polynomial::generator(n - d - 1);
    for (std::size_t i = 0; i < iota.source->rank(); ++i) {
        const Partition& a = iota.source->basis()[i];
        auto rhs = big.coordinates(xnd * schur_poly(a, n + 1, d + 1));
        auto lhs = iota.matrix.row(i);
        if (!std::equal(lhs.begin(), lhs.end(), rhs.begin()) && check.pass) {
            check.pass = false;
            check.witness = {{"partition", a.to_string()},
                             {"iota", coordinates_to_json(big, lhs)},
                             {"product", coordinates_to_json(big, rhs)}};
        }
    }
    check.details = {{"partitions_checked", iota.source->rank()}, {"square_sign", (n - d) % 2 ? -1 : 1}};
    return check;
}

Check verify_pairing(int n, int d)
{
    Check check{"grass.pairing" + nd_label(n, d), "grassmannian.perfect_pairing", true, {}, {}};
    auto ring = grass_ring(n, d);
    IntMatrix g = pairing_gram(n, d);
    Integer det = determinant(g);
    check.details = {{"determinant", integer_json(det)}};
    if (abs(det) != 1) {
        check.pass = false;
        check.witness = {{"reason", "determinant is not a unit"}};
        return check;
    }
    for (std::size_t a = 0; a < ring->rank(); ++a)
        for (std::size_t b = 0; b < ring->rank(); ++b) {
            bool complement = ring->basis()[b] == ring->basis()[a].complement(d, n - d);
            if (g(a, b) != (complement ? 1 : 0) && check.pass) {
                check.pass = false;
                check.witness = {{"a", ring->basis()[a].to_string()},
                                 {"b", ring->basis()[b].to_string()},
                                 {"value", integer_json(g(a, b))}};
            }
        }
    return check;
}

Check verify_structure_constants(int n, int d)
{
    Check check{"grass.structure_constants" + nd_label(n, d), "grassmannian.schur_products", true, {}, {}};
    auto ring = grass_ring(n, d);
    auto c = structure_constants(n, d);
    auto e = structure_constants_by_expansion(n, d);
    std::size_t nonzero = 0;
    for (std::size_t a = 0; a < ring->rank(); ++a)
        for (std::size_t b = 0; b < ring->rank(); ++b)
            for (std::size_t k = 0; k < ring->rank(); ++k) {
                nonzero += c[a][b][k] != 0;
                bool ok = c[a][b][k] == e[a][b][k] && c[a][b][k] >= 0;
                if (!ok && check.pass) {
                    check.pass = false;
                    check.witness = {{"a", ring->basis()[a].to_string()},
                                     {"b", ring->basis()[b].to_string()},
                                     {"e", ring->basis()[k].to_string()},
                                     {"coordinates", integer_json(c[a][b][k])},
                                     {"expansion", integer_json(e[a][b][k])}};
                }
            }
    check.details = {{"rank", ring->rank()}, {"nonzero_constants", nonzero}};
    return check;
}

} // namespace cobalt
