#include "oracles.hpp"

#include "cobalt/error.hpp"
#include "cobalt/graded.hpp"
#include "cobalt/matrix.hpp"
#include "cobalt/parse.hpp"
#include "cobalt/series.hpp"

#include <doctest.h>

#include <random>

using namespace cobalt;

namespace {

Polynomial x(int i, int e = 1) { return Polynomial::generator(i, e); }

RingPresentation ring_x123()
{
    return RingPresentation::free(Base::Z, {{"x1", 1, false}, {"x2", 2, false}, {"x3", 3, false}});
}

void check_error(ErrorCode code, auto&& fn)
{
    try {
        fn();
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == code);
    }
}

} // namespace

TEST_CASE("series_invert on the elementary series")
{
    TruncSeries f = TruncSeries::from_coefficients(3, {1, x(0), x(1), x(2)});
    TruncSeries s = series_invert(f, 3);
    CHECK(s[0] == Polynomial(1));
    CHECK(s[1] == -x(0));
    CHECK(s[2] == x(0, 2) - x(1));
    CHECK(s[3] == -x(0, 3) + Rational(2) * x(0) * x(1) - x(2));
    TruncSeries prod = f * s;
    for (int k = 1; k <= 3; ++k)
        CHECK(prod[k].is_zero());
    for (int k = 1; k <= 3; ++k)
        CHECK(s[k].homogeneous_degree(ring_x123().degrees()) == k);
}

TEST_CASE("series_invert: trivial and geometric cases")
{
    TruncSeries one = TruncSeries::constant(5, 1);
    CHECK(series_invert(one, 5) == one);

    TruncSeries f = TruncSeries::from_coefficients(4, {1, x(0)});
    TruncSeries s = series_invert(f, 4);
    for (int k = 0; k <= 4; ++k)
        CHECK(s[k] == Polynomial(x(0, k)) * Rational(k % 2 ? -1 : 1));

    check_error(ErrorCode::NonUnitConstantTerm, [] { series_invert(TruncSeries::constant(3, 2), 3); });
    check_error(ErrorCode::NonUnitConstantTerm, [] { series_invert(TruncSeries::constant(3, x(0)), 3); });
    CHECK(series_invert(TruncSeries::constant(2, 2), 2, Base::Q)[0] == Polynomial(Rational(1, 2)));
}

TEST_CASE("series_compose examples")
{
    TruncSeries f = TruncSeries::from_coefficients(2, {0, 1, 1});
    TruncSeries g = TruncSeries::from_coefficients(2, {0, 2});
    CHECK(series_compose(f, g, 2) == TruncSeries::from_coefficients(2, {0, 2, 4}));

    TruncSeries arb = TruncSeries::from_coefficients(4, {3, x(0), x(1) + 1, -x(2), x(0, 4)});
    TruncSeries arb0 = TruncSeries::from_coefficients(4, {0, x(0), x(1) + 1, -x(2), x(0, 4)});
    CHECK(series_compose(arb, TruncSeries::variable(4), 4) == arb);
    CHECK(series_compose(TruncSeries::variable(4), arb0, 4) == arb0);
    check_error(ErrorCode::NonzeroConstantInner, [&] { series_compose(f, arb, 4); });
}

TEST_CASE("series_revert examples")
{
    CHECK(series_revert(TruncSeries::variable(5), 5) == TruncSeries::variable(5));

    TruncSeries f = TruncSeries::from_coefficients(3, {0, 1, 1});
    TruncSeries g = series_revert(f, 3);
    CHECK(g == TruncSeries::from_coefficients(3, {0, 1, -1, 2}));
    CHECK(series_compose(f, g, 3) == TruncSeries::variable(3));
    CHECK(series_compose(g, f, 3) == TruncSeries::variable(3));

    Polynomial b = x(0);
    TruncSeries log = TruncSeries::from_coefficients(3, {0, 1, b * Rational(1, 2), b.pow(2) * Rational(1, 3)});
    TruncSeries exp = series_revert(log, 3);
    CHECK(exp == TruncSeries::from_coefficients(3, {0, 1, b * Rational(-1, 2), b.pow(2) * Rational(1, 6)}));
    CHECK(series_compose(log, exp, 3) == TruncSeries::variable(3));

    check_error(ErrorCode::BadLeadingCoefficient,
                [] { series_revert(TruncSeries::from_coefficients(3, {0, 2}), 3); });
}

TEST_CASE("property: inverse and reversion round trips")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int N = 1 + trial % 7;
        std::vector<Polynomial> c{1};
        std::vector<Polynomial> c0{0, 1};
        for (int k = 1; k <= N; ++k) {
            c.push_back(oracle::random_polynomial(rng, 3, 3, 2, false));
            if (k >= 2)
                c0.push_back(oracle::random_polynomial(rng, 3, 3, 2, false));
        }
        TruncSeries f = TruncSeries::from_coefficients(N, c);
        TruncSeries prod = f * series_invert(f, N);
        CHECK(prod == TruncSeries::constant(N, 1));

        TruncSeries h = TruncSeries::from_coefficients(N, c0);
        TruncSeries r = series_revert(h, N);
        CHECK(series_compose(r, h, N) == TruncSeries::variable(N));
        CHECK(series_compose(h, r, N) == TruncSeries::variable(N));
    }
}

TEST_CASE("property: ring axioms on random polynomials")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        bool laurent = trial % 2 == 1;
        Polynomial p = oracle::random_polynomial(rng, 3, 4, 3, laurent);
        Polynomial q = oracle::random_polynomial(rng, 3, 4, 3, laurent);
        Polynomial r = oracle::random_polynomial(rng, 3, 4, 3, laurent);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK(p * (q * r) == (p * q) * r);
        CHECK(p + q == q + p);
        CHECK(p - p == Polynomial());
        CHECK(p * Polynomial(1) == p);
    }
    CHECK(x(0) * x(0, -1) == Polynomial(1));
}

TEST_CASE("smith_normal_form examples")
{
    auto snf = smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}}));
    CHECK(snf.divisors == std::vector<Integer>{2, 4});

    auto id = smith_normal_form(IntMatrix::identity(4));
    CHECK(id.divisors == std::vector<Integer>(4, 1));

    CHECK(smith_normal_form(IntMatrix(3, 2)).divisors.empty());
    CHECK(smith_normal_form(IntMatrix(0, 0)).divisors.empty());
}

TEST_CASE("property: SNF transforms, chain and determinantal divisors")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 80; ++trial) {
        IntMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                m(r, c) = trial % 3 == 0 ? entry(rng) * 6 : entry(rng);
        auto snf = smith_normal_form(m);
        IntMatrix d = snf.left * m * snf.right;
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t c = 0; c < d.cols(); ++c)
                CHECK(d(r, c) == (r == c && r < snf.rank() ? snf.divisors[r] : Integer(0)));
        for (std::size_t k = 0; k + 1 < snf.rank(); ++k)
            CHECK(snf.divisors[k + 1] % snf.divisors[k] == 0);
        CHECK(abs(determinant(snf.left)) == 1);
        CHECK(abs(determinant(snf.right)) == 1);
        CHECK(snf.right * snf.right_inv == IntMatrix::identity(m.cols()));
        CHECK(snf.divisors == oracle::determinantal_divisors(m));
        if (m.rows() == m.cols()) {
            Integer prod = 1;
            for (const auto& v : snf.divisors)
                prod *= v;
            Integer det = determinant(m);
            CHECK(abs(det) == (snf.rank() == m.rows() ? prod : Integer(0)));
        }
    }
}

TEST_CASE("integer kernel and lattice quotient")
{
    IntMatrix m = IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}});
    auto ker = integer_kernel(m);
    CHECK(ker.size() == 2);
    for (const auto& v : ker) {
        Integer s = v[0] + 2 * v[1] + 3 * v[2];
        CHECK(s == 0);
    }

    LatticeQuotient q(IntMatrix::from_rows({{2, 0}, {0, 3}}), 2, Scalars{});
    CHECK(q.free_rank() == 0);
    CHECK(q.torsion() == std::vector<Integer>{6});
    std::vector<Integer> w{2, 3};
    CHECK(q.contains(w));
    std::vector<Integer> w2{1, 0};
    CHECK_FALSE(q.contains(w2));

    LatticeQuotient local(IntMatrix::from_rows({{2, 0}, {0, 3}}), 2, Scalars{Base::Z, 3});
    CHECK(local.torsion() == std::vector<Integer>{3});
    CHECK(local.contains(w2));
    LatticeQuotient rational(IntMatrix::from_rows({{2, 0}, {0, 3}}), 2, Scalars{Base::Q, {}});
    CHECK(rational.is_zero());
}

TEST_CASE("graded_component examples")
{
    RingPresentation r21(Scalars{}, {{"x1", 1, false}}, {x(0, 2)});
    auto c1 = graded_component(r21, 1, 4);
    CHECK(c1.free_rank == 1);
    CHECK(c1.basis == std::vector<Monomial>{Monomial::generator(0)});
    CHECK_FALSE(c1.truncated);
    CHECK(graded_component(r21, 2, 4).free_rank == 0);

    RingPresentation laurent(Scalars{}, {{"b", 1, true}});
    auto c5 = graded_component(laurent, 5, 6);
    CHECK(c5.free_rank == 1);
    CHECK(c5.basis == std::vector<Monomial>{Monomial::generator(0, 5)});
    CHECK(graded_component(laurent, -3, 6).basis == std::vector<Monomial>{Monomial::generator(0, -3)});

    RingPresentation z = RingPresentation::integers();
    CHECK(graded_component(z, 0, 1).free_rank == 1);
    CHECK(graded_component(z, 2, 1).free_rank == 0);

    RingPresentation torsion(Scalars{}, {{"x", 1, false}}, {x(0, 2) * Rational(4)});
    auto t = graded_component(torsion, 3, 5);
    CHECK(t.free_rank == 0);
    CHECK(t.torsion == std::vector<Integer>{4});

    auto bounded = graded_component(ring_x123(), 6, 2);
    CHECK(bounded.truncated);

    RingPresentation deg0(Scalars{}, {{"u", 0, false}});
    CHECK(graded_component(deg0, 0, 3).infinite);
}

TEST_CASE("property: graded_component agrees with the brute-force oracle")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> ngen(1, 3);
    std::uniform_int_distribution<int> gdeg(1, 3);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<GenSpec> gens;
        int n = ngen(rng);
        for (int i = 0; i < n; ++i)
            gens.push_back({"g" + std::to_string(i), gdeg(rng), false});
        RingPresentation free_ring(Scalars{}, gens);
        std::vector<Polynomial> rels;
        for (int k = 0; k < 2; ++k) {
            long d = 1 + static_cast<long>(rng() % 4);
            auto mons = enumerate_monomials(free_ring, d, 8).monomials;
            Polynomial rel;
            for (const auto& m : mons)
                rel.add_term(m, Rational(coeff(rng)));
            if (!rel.is_zero())
                rels.push_back(rel);
        }
        RingPresentation ring(Scalars{}, gens, rels);
        for (long d = 0; d <= 6; ++d) {
            auto report = graded_component(ring, d, 6);
            auto expect = oracle::brute_force_component(ring, d);
            CHECK_FALSE(report.truncated);
            CHECK(report.free_rank == expect.free_rank);
            CHECK(report.torsion == expect.torsion);
            CHECK(report.basis.size() >= static_cast<std::size_t>(report.free_rank));
        }
    }
}

TEST_CASE("parse_presentation")
{
    auto laurent = parse_presentation(
        R"({"base":"Z","generators":[{"name":"b","adams_degree":1,"invertible":true}],"relations":[]})");
    CHECK(laurent.num_generators() == 1);
    CHECK(laurent.generators()[0].invertible);
    CHECK(laurent.relations().empty());

    check_error(ErrorCode::InhomogeneousRelation, [] {
        parse_presentation(
            R"({"base":"Z","generators":[{"name":"b","adams_degree":1,"invertible":false}],"relations":["b^2 - b"]})");
    });

    auto r42 = parse_presentation(R"({"base":"Z","generators":[{"name":"x1","adams_degree":1},
        {"name":"x2","adams_degree":2}],"relations":["x1^3 - 2*x1*x2"]})");
    CHECK(r42.degree_of(r42.relations()[0]) == 3);

    check_error(ErrorCode::SyntaxError, [] {
        parse_presentation(R"({"base":"Z","generators":[{"name":"x","adams_degree":1}],"relations":["x/2"]})");
    });
    check_error(ErrorCode::SyntaxError, [] {
        parse_presentation(R"({"base":"Z","generators":[{"name":"x","adams_degree":1}],"relations":["x*y"]})");
    });
    check_error(ErrorCode::SyntaxError, [] { parse_presentation("{\"base\": \"Z\",\n \"generators\": [}"); });

    try {
        parse_presentation(R"({"generators":[{"name":"x","adams_degree":1}],"relations":["x + y"]})");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("relations[0], line 1, column 5") != std::string::npos);
    }
    try {
        parse_presentation("{\"base\": \"Z\",\n \"generators\": [}");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("expression formatting round trips through the parser")
{
    RingPresentation ring(Scalars{}, {{"b", 1, true}, {"x", 2, false}});
    std::mt19937 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p = oracle::random_polynomial(rng, 1, 4, 3, true) +
                       oracle::random_polynomial(rng, 2, 3, 2, false);
        CHECK(parse_expression(ring.format(p), ring) == p);
    }
}
