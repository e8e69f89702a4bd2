#include "oracles.hpp"

#include "cobalt/error.hpp"
#include "cobalt/landweber.hpp"
#include "cobalt/parse.hpp"

#include <doctest.h>

#include <random>

using namespace cobalt;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

RingPtr integers() { return make_ring(RingPresentation::integers()); }

std::vector<StageStatus> statuses(const LandweberVerdict& v)
{
    std::vector<StageStatus> out;
    for (const auto& s : v.stages)
        out.push_back(s.status);
    return out;
}

/// Z^2 / (rows of m) as a module over Z with both generators in degree 0.
ModulePresentation z_module(const std::vector<std::vector<long>>& m)
{
    ModulePresentation M{integers(), {{"g1", 0}, {"g2", 0}}, {}};
    for (const auto& row : m)
        M.relations.push_back({Polynomial(row[0]), Polynomial(row[1])});
    return M;
}

} // namespace

TEST_CASE("KGL coefficients are exact through height 3")
{
    RingPtr lz = laurent_z_ring();
    auto M = ModulePresentation::free_rank_one(lz);
    auto F = fgl_multiplicative(lz, 125);
    for (long p : {2L, 3L, 5L}) {
        auto v = check_regular(M, F, p, 3, {-8, 8}, 16);
        CHECK(v.verdict() == Verdict::Exact);
        CHECK(statuses(v) == std::vector{StageStatus::Regular, StageStatus::Regular, StageStatus::QuotientVanishes,
                                         StageStatus::QuotientVanishes});
        CHECK(v.stages[1].shift == p - 1);
        CHECK(v.stages[1].degrees_checked.size() == static_cast<std::size_t>(17 - (p - 1)));
    }
}

TEST_CASE("Z with the additive law fails at v_1 with witness 1")
{
    auto M = ModulePresentation::free_rank_one(integers());
    auto F = fgl_additive(integers(), 49);
    for (long p : {2L, 3L, 5L, 7L}) {
        auto v = check_regular(M, F, p, 2, {0, 48}, 4);
        CHECK(v.verdict() == Verdict::Fails);
        CHECK(v.stages[0].status == StageStatus::Regular);
        REQUIRE(v.stages[1].status == StageStatus::Fails);
        CHECK(v.stages[1].witness_degree == 0);
        REQUIRE(v.stages[1].witness);
        CHECK((*v.stages[1].witness)[0] == Polynomial(1));
    }
}

TEST_CASE("Q with the additive law is exact")
{
    RingPtr q = make_ring(RingPresentation::rationals());
    auto v = check_regular(ModulePresentation::free_rank_one(q), fgl_additive(q, 8), 2, 3, {0, 4}, 4);
    CHECK(v.verdict() == Verdict::Exact);
    CHECK(v.stages[0].status == StageStatus::Regular);
    for (int n = 1; n <= 3; ++n)
        CHECK(v.stages[static_cast<std::size_t>(n)].status == StageStatus::QuotientVanishes);
}

TEST_CASE("Z/p fails at stage 0 and Z_(p) multiplicative is exact")
{
    for (long p : {2L, 3L, 5L}) {
        RingPtr zp = make_ring(RingPresentation(Scalars{Base::Z, {}}, {}, {Polynomial(p)}));
        auto v = check_regular(ModulePresentation::free_rank_one(zp), fgl_additive(zp, 25), p, 1, {0, 0}, 4);
        CHECK(v.stages[0].status == StageStatus::Fails);
        CHECK(v.verdict() == Verdict::Fails);

        RingPtr loc = make_ring(RingPresentation(Scalars{Base::Z, p}, {}, {}));
        auto F = fgl_multiplicative_scalar(loc, static_cast<int>(p * p), 1);
        auto w = check_regular(ModulePresentation::free_rank_one(loc), F, p, 2, {0, 0}, 4);
        CHECK(statuses(w) ==
              std::vector{StageStatus::Regular, StageStatus::Regular, StageStatus::QuotientVanishes});
        CHECK(w.verdict() == Verdict::Exact);

        auto u = check_regular(ModulePresentation::free_rank_one(integers()),
                               fgl_multiplicative_scalar(integers(), static_cast<int>(p * p), 1), p, 2, {0, 0},
                               4);
        CHECK(u.verdict() == Verdict::Exact);
    }
}

TEST_CASE("check_exact combines primes")
{
    RingPtr lz = laurent_z_ring();
    auto M = ModulePresentation::free_rank_one(lz);
    auto all = check_exact(M, fgl_multiplicative(lz, 27), {2, 3}, 2, {-5, 5}, 8);
    CHECK(all.size() == 2);
    CHECK(overall_verdict(all) == Verdict::Exact);

    auto z = check_exact(ModulePresentation::free_rank_one(integers()), fgl_additive(integers(), 9), {2, 3}, 1,
                         {0, 4}, 2);
    CHECK(overall_verdict(z) == Verdict::Fails);
}

TEST_CASE("window handling")
{
    RingPtr lz = laurent_z_ring();
    auto M = ModulePresentation::free_rank_one(lz);
    auto F = fgl_multiplicative(lz, 8);
    CHECK(code_of([&] { check_regular(M, F, 2, 1, {3, 2}, 8); }) == ErrorCode::WindowEmpty);
    CHECK(code_of([&] { check_regular(M, F, 2, 1, {-10, 10}, 4); }) == ErrorCode::BoundExceeded);

    auto narrow = check_regular(M, F, 2, 1, {0, 0}, 4);
    CHECK(narrow.stages[0].status == StageStatus::Regular);
    CHECK(narrow.stages[1].status == StageStatus::WindowInconclusive);
    CHECK(narrow.verdict() == Verdict::Inconclusive);
}

TEST_CASE("property: enlarging the window never turns a certified stage into a failure")
{
    RingPtr lz = laurent_z_ring();
    auto F = fgl_multiplicative(lz, 27);
    auto M = ModulePresentation::free_rank_one(lz);
    for (long p : {2L, 3L}) {
        std::vector<StageStatus> prev;
        for (long w = 0; w <= 6; ++w) {
            auto v = check_regular(M, F, p, 3, {-w, w}, 8);
            auto cur = statuses(v);
            for (std::size_t i = 0; i < prev.size(); ++i) {
                if (prev[i] == StageStatus::Regular || prev[i] == StageStatus::QuotientVanishes)
                    CHECK(cur[i] == prev[i]);
                CHECK(cur[i] != StageStatus::Fails);
            }
            prev = cur;
        }
    }
}

TEST_CASE("property: verdicts do not depend on the lift of v_n")
{
    std::mt19937 rng(2024);
    for (const auto& c : builtin_cases()) {
        for (long p : c.primes) {
            auto base = landweber_generators(c.law, p, c.height);
            auto ref = check_regular_with(c.module, base, c.window, c.exponent_bound);
            for (int trial = 0; trial < 3; ++trial) {
                auto lifted = perturb_generators(*c.module.ring, base, rng, c.exponent_bound);
                auto v = check_regular_with(c.module, lifted, c.window, c.exponent_bound);
                CHECK(statuses(v) == statuses(ref));
            }
        }
    }
}

TEST_CASE("property: p and v_1 = 0 on finite Z-modules agree with the order of the group")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> entry(-6, 6);
    auto F = fgl_additive(integers(), 7);
    int tested = 0;
    while (tested < 40) {
        std::vector<std::vector<long>> m{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}};
        long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if (det == 0)
            continue;
        ++tested;
        auto M = z_module(m);
        std::vector<std::vector<Integer>> im{{m[0][0], m[0][1]}, {m[1][0], m[1][1]}};
        Integer order = abs(oracle::leibniz_det(im));
        for (long p : {2L, 3L, 5L, 7L}) {
            auto v = check_regular(M, F, p, 1, {0, 6}, 2);
            bool p_divides = order % p == 0;
            if (order == 1) {
                CHECK(v.stages[0].status == StageStatus::QuotientVanishes);
            } else {
                CHECK((v.stages[0].status == StageStatus::Fails) == p_divides);
                if (!p_divides)
                    CHECK(v.stages[1].status == StageStatus::QuotientVanishes);
            }
        }
    }
}

TEST_CASE("builtin suite matches the expected verdicts")
{
    auto rows = builtin_suite();
    auto cases = builtin_cases();
    REQUIRE(rows.size() == 11);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        INFO(r.name);
        CHECK(r.verdict == r.expected);
        if (cases[i].expected_fail_stage < 0)
            continue;
        for (const auto& [p, v] : r.verdicts) {
            auto failing = std::find_if(v.stages.begin(), v.stages.end(),
                                        [](const StageResult& s) { return s.status == StageStatus::Fails; });
            REQUIRE(failing != v.stages.end());
            CHECK(failing->n == cases[i].expected_fail_stage);
        }
    }
}

TEST_CASE("module JSON")
{
    auto doc = parse_json_text(R"({"ring": {"base": "Z", "generators": [{"name": "b", "adams_degree": 1,
        "invertible": true}]}, "generators": [{"name": "e", "adams_degree": 0}, {"name": "f", "adams_degree": 1}],
        "relations": [["b", "-1"]]})");
    auto M = module_from_json(doc);
    CHECK(M.generators.size() == 2);
    CHECK(M.relations[0][0] == M.ring->generator("b"));
    auto back = module_from_json(module_to_json(M));
    CHECK(back.relations == M.relations);

    auto bad = parse_json_text(R"({"ring": {"base": "Z", "generators": [{"name": "b", "adams_degree": 1}]},
        "generators": [{"name": "e", "adams_degree": 0}], "relations": [["b +"]]})");
    try {
        module_from_json(bad);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SyntaxError);
        CHECK(std::string(e.what()).find("relations[0][0]") != std::string::npos);
    }
    auto inhomog = parse_json_text(R"({"ring": {"base": "Z", "generators": [{"name": "b", "adams_degree": 1}]},
        "generators": [{"name": "e", "adams_degree": 0}, {"name": "f", "adams_degree": 0}],
        "relations": [["b", "1"]]})");
    CHECK(code_of([&] { module_from_json(inhomog); }) == ErrorCode::InhomogeneousRelation);

    auto ring_only = module_from_json(parse_json_text(R"({"ring": {"base": "Q"}})"));
    CHECK(ring_only.generators.size() == 1);
}

TEST_CASE("free module of rank 2 with a shifted generator")
{
    RingPtr lz = laurent_z_ring();
    ModulePresentation M{lz, {{"e", 0}, {"f", 3}}, {}};
    auto v = check_regular(M, fgl_multiplicative(lz, 9), 3, 2, {-6, 6}, 12);
    CHECK(v.verdict() == Verdict::Exact);

    ModulePresentation N{lz, {{"e", 0}}, {{Polynomial(lz->generator("b")) - Polynomial(1)}}};
    CHECK(code_of([&] { N.validate(); }) == ErrorCode::InhomogeneousRelation);
}
