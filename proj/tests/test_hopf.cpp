#include "oracles.hpp"

#include "cobalt/error.hpp"
#include "cobalt/hopf.hpp"

#include <doctest.h>

using namespace cobalt;

namespace {

Polynomial gen(const RingPresentation& r, const std::string& name) { return r.generator(name); }

// Coefficient of x^{k} in a series given as a dense vector over Q.
std::vector<Rational> compose_numeric(const std::vector<Rational>& f, const std::vector<Rational>& g, int N)
{
    std::vector<Rational> out(static_cast<std::size_t>(N + 1), 0);
    std::vector<Rational> power(static_cast<std::size_t>(N + 1), 0);
    power[0] = 1;
    for (int k = 0; k <= N; ++k) {
        for (int i = 0; i <= N; ++i)
            out[static_cast<std::size_t>(i)] += f[static_cast<std::size_t>(k)] * power[static_cast<std::size_t>(i)];
        std::vector<Rational> next(static_cast<std::size_t>(N + 1), 0);
        for (int i = 0; i <= N; ++i)
            for (int j = 0; i + j <= N; ++j)
                next[static_cast<std::size_t>(i + j)] += power[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];
        power = next;
    }
    return out;
}

} // namespace

TEST_CASE("mumu_rational_truncated examples")
{
    auto H = mumu_rational_truncated(3);
    const auto& G = *H.Gamma;
    CHECK(H.eta_R[0] == gen(G, "m1") - gen(G, "b1"));
    CHECK(H.eta_L[0] == gen(G, "m1"));
    for (std::size_t a = 0; a < H.eta_L.size(); ++a) {
        CHECK(H.eta_L[a].substitute(H.counit) == Polynomial::generator(static_cast<int>(a)));
        CHECK(H.eta_R[a].substitute(H.counit) == Polynomial::generator(static_cast<int>(a)));
    }
    const auto& T = *H.square->ring;
    CHECK(H.comult[static_cast<std::size_t>(G.index_of("b1"))] == gen(T, "b1[0]") + gen(T, "b1[1]"));
    CHECK_THROWS_AS(mumu_rational_truncated(1), Error);
}

TEST_CASE("property: comultiplication of b agrees with numeric series composition")
{
    // Evaluate b(0) and b(1) at random rationals and compose directly.
    const int N = 6;
    auto H = mumu_rational_truncated(N);
    const auto& T = *H.square->ring;
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial> values(static_cast<std::size_t>(T.num_generators()));
        std::vector<Rational> b0(N + 1, 0), b1(N + 1, 0);
        b0[1] = b1[1] = 1;
        for (int g = 0; g < T.num_generators(); ++g) {
            Rational v(dist(rng), 1 + (dist(rng) + 5) % 3);
            v.canonicalize();
            values[static_cast<std::size_t>(g)] = Polynomial(v);
            const std::string& name = T.names()[static_cast<std::size_t>(g)];
            if (name[0] == 'b') {
                int i = std::stoi(name.substr(1, name.find('[') - 1));
                (name.find("[0]") != std::string::npos ? b0 : b1)[static_cast<std::size_t>(i + 1)] = v;
            }
        }
        auto composed = compose_numeric(b1, b0, N);
        for (int i = 1; i < N; ++i) {
            Polynomial d = H.comult[static_cast<std::size_t>(H.Gamma->index_of("b" + std::to_string(i)))];
            CHECK(d.substitute(values) == Polynomial(composed[static_cast<std::size_t>(i + 1)]));
        }
    }
}

TEST_CASE("property: Hopf axioms hold identically for N <= 6")
{
    for (int N = 2; N <= 6; ++N) {
        auto c = verify_hopf_axioms(mumu_rational_truncated(N));
        INFO("N = ", N, " ", to_json(c).dump());
        CHECK(c.pass);
        CHECK(c.details["axioms"].size() >= 14);
    }
}

TEST_CASE("a corrupted comultiplication fails with a degree-2 witness")
{
    auto c = verify_hopf_axioms(corrupt_comultiplication(mumu_rational_truncated(4), "b2"));
    CHECK_FALSE(c.pass);
    REQUIRE(c.witness);
    CHECK((*c.witness)["degree"] == 2);
    CHECK((*c.witness)["generator"] == "b2");
    CHECK((*c.witness)["axiom"] == "counit.left");
}

TEST_CASE("trivial Hopf algebroids pass")
{
    CHECK(verify_hopf_axioms(trivial_hopf(make_ring(RingPresentation::integers()))).pass);
    CHECK(verify_hopf_axioms(trivial_hopf(laurent_q_ring())).pass);
    CHECK(verify_hopf_axioms(trivial_hopf(universal_log_ring(4))).pass);
}

TEST_CASE("induced Hopf algebroid of the multiplicative law")
{
    auto F = fgl_multiplicative(laurent_q_ring(), 4);
    auto I = induced_hopf(F, 3);
    const auto& G = *I.result.Gamma;
    ZeroTest z(I.result.Gamma, 2);
    CHECK(z.is_zero(gen(G, "b_R") - gen(G, "b_L") + Polynomial(2) * gen(G, "b1")));
    CHECK_FALSE(z.is_zero(gen(G, "b1")));
    // The first relation is the x y coefficient of pushforward(F_L, b) - F_R.
    CHECK(I.relations.front() == gen(G, "b_R") - gen(G, "b_L") + Polynomial(2) * gen(G, "b1"));
    CHECK(verify_induced_collapse(I).pass);
    auto c = verify_hopf_axioms(I.result);
    INFO(to_json(c).dump());
    CHECK(c.pass);
}

TEST_CASE("induced Hopf algebroid of the additive law over Q")
{
    auto I = induced_hopf(fgl_additive(make_ring(RingPresentation::rationals()), 5), 5);
    const auto& G = *I.result.Gamma;
    CHECK(G.num_generators() == 4);
    ZeroTest z(I.result.Gamma, 2);
    for (int i = 1; i <= 4; ++i)
        CHECK(z.is_zero(gen(G, "b" + std::to_string(i))));
    CHECK(verify_induced_collapse(I).pass);
    CHECK(verify_hopf_axioms(I.result).pass);
}

TEST_CASE("induced Hopf algebroid of the universal rational law")
{
    auto I = induced_hopf(fgl_universal_rational(4), 4);
    CHECK(verify_induced_collapse(I).pass);
    CHECK(verify_hopf_axioms(I.result).pass);
}

TEST_CASE("induced_hopf rejects a law that fails its axioms")
{
    RingPtr q = make_ring(RingPresentation::rationals());
    BiSeries s(3);
    s.set(1, 0, Polynomial(1));
    s.set(0, 1, Polynomial(1));
    s.set(2, 0, Polynomial(1));
    try {
        induced_hopf(FormalGroupLaw(q, s), 3);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AxiomsFail);
    }
}

TEST_CASE("cooperations_poincare examples and partition convolution to degree 12")
{
    auto p = cooperations_poincare(12);
    CHECK(p.monomial_counts[0] == 1);
    CHECK(p.monomial_counts[1] == 2);
    CHECK(p.monomial_counts[2] == 5);
    for (int d = 0; d <= 12; ++d) {
        long conv = 0;
        for (int k = 0; k <= d; ++k)
            conv += oracle::brute_partitions(k) * oracle::brute_partitions(d - k);
        CHECK(p.monomial_counts[static_cast<std::size_t>(d)] == conv);
    }
    CHECK(verify_cooperations_poincare(12).pass);
}

TEST_CASE("hopf JSON")
{
    auto j = hopf_to_json(mumu_rational_truncated(3));
    CHECK(j["eta_R"]["m1"] == "m1 - b1");
    CHECK(j["counit"]["b1"] == "0");
    CHECK(j["truncation"] == 2);
    CHECK(j["comult"]["b1"] == "b1[0] + b1[1]");
}
