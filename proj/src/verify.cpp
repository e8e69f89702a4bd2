#include "cobalt/verify.hpp"

#include "cobalt/cobordism.hpp"
#include "cobalt/fgl.hpp"
#include "cobalt/hopf.hpp"
#include "cobalt/landweber.hpp"
#include "cobalt/oriented.hpp"
#include "cobalt/schur.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace cobalt {

bool Criterion::checks_pass() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool SuiteOutcome::pass() const
{
    return within_budget && std::all_of(criteria.begin(), criteria.end(), [](const Criterion& c) { return c.pass(); });
}

namespace {

using Clock = std::chrono::steady_clock;

void grass_ranks(Criterion& c)
{
    for (int n = 0; n <= 7; ++n)
        for (int d = 0; d <= n; ++d)
            c.checks.push_back(verify_rank(n, d));
}

void exact_sequences(Criterion& c)
{
    for (int n = 1; n <= 6; ++n)
        for (int d = 0; d < n; ++d)
            c.checks.push_back(verify_complex(n, d));
}

void schur_identities(Criterion& c)
{
    for (int n = 1; n <= 6; ++n)
        for (int d = 0; d < n; ++d) {
            c.checks.push_back(verify_eq1(n, d));
            c.checks.push_back(verify_eq2(n, d));
        }
}

void structure_constants_fixture(Criterion& c)
{
    for (int n = 0; n <= 5; ++n)
        for (int d = 0; d <= n; ++d)
            c.checks.push_back(verify_structure_constants(n, d));

    auto g = grass_ring(4, 2);
    std::size_t one = *g->index_of(Partition({1}));
    std::vector<Integer> expect(g->rank(), 0);
    expect[*g->index_of(Partition({2}))] = 1;
    expect[*g->index_of(Partition({1, 1}))] = 1;
    auto got = g->product(one, one);
    Check pieri{"grass.pieri(4,2)", "grassmannian.pieri", got == expect, {}, {}};
    pieri.details = {{"product", coordinates_to_json(*g, got)}};
    c.checks.push_back(pieri);
}

void pairings(Criterion& c)
{
    for (int n = 0; n <= 6; ++n)
        for (int d = 0; d <= n; ++d)
            c.checks.push_back(verify_pairing(n, d));
}

void formal_group_laws(Criterion& c)
{
    auto named = [](Check check, const std::string& name) {
        check.name = name;
        return check;
    };
    RingPtr z = make_ring(RingPresentation::integers());
    c.checks.push_back(named(fgl_check_axioms(fgl_additive(z, 8)), "fgl.axioms(additive,8)"));
    c.checks.push_back(named(fgl_check_axioms(fgl_multiplicative(laurent_z_ring(), 8)), "fgl.axioms(multiplicative,8)"));
    c.checks.push_back(named(fgl_check_axioms(fgl_universal_rational(8)), "fgl.axioms(universal-q,8)"));

    const int N = 10;
    StrictIso phi = chern_exp(N);
    FormalGroupLaw add = fgl_additive(laurent_q_ring(), N);
    FormalGroupLaw mult = fgl_multiplicative(laurent_q_ring(), N);
    bool pushed = pushforward(add, phi).series() == mult.series();
    bool iso = is_strict_iso(add, mult, phi);
    Check chern{"fgl.chern_exp(10)", "formal_group_law.chern_exponential", pushed && iso, {}, {}};
    chern.details = {{"truncation", N}, {"pushforward_equal", pushed}, {"strict_iso", iso}};
    c.checks.push_back(chern);
}

std::vector<int> statuses(const LandweberVerdict& v)
{
    std::vector<int> out;
    for (const auto& s : v.stages)
        out.push_back(static_cast<int>(s.status));
    return out;
}

void landweber_suite(Criterion& c, const VerifyOptions& options)
{
    std::mt19937 rng(static_cast<std::mt19937::result_type>(options.seed));
    for (const auto& sc : builtin_cases()) {
        auto verdicts = check_exact(sc.module, sc.law, sc.primes, sc.height, sc.window, sc.exponent_bound);
        Verdict overall = overall_verdict(verdicts);
        Check row{"landweber.suite(" + sc.name + ")", "landweber.exactness", overall == sc.expected, {}, {}};
        if (sc.expected_fail_stage >= 0)
            for (const auto& [p, v] : verdicts) {
                auto failing = std::find_if(v.stages.begin(), v.stages.end(),
                                            [](const StageResult& s) { return s.status == StageStatus::Fails; });
                if (failing == v.stages.end() || failing->n != sc.expected_fail_stage) {
                    row.pass = false;
                    row.witness = {{"prime", p}, {"expected_fail_stage", sc.expected_fail_stage}};
                }
            }
        row.details = {{"verdict", verdict_name(overall)},
                       {"expected", verdict_name(sc.expected)},
                       {"primes", verdicts_to_json(*sc.module.ring, verdicts)}};
        c.checks.push_back(row);

        Check stable{"landweber.perturbation(" + sc.name + ")", "landweber.lift_independence", true, {}, {}};
        long trials = 0;
        for (long p : sc.primes) {
            auto base = landweber_generators(sc.law, p, sc.height);
            auto ref = statuses(check_regular_with(sc.module, base, sc.window, sc.exponent_bound));
            for (int t = 0; t < options.perturbations; ++t) {
                auto lifted = perturb_generators(*sc.module.ring, base, rng, sc.exponent_bound);
                auto got = statuses(check_regular_with(sc.module, lifted, sc.window, sc.exponent_bound));
                ++trials;
                if (got != ref && stable.pass) {
                    stable.pass = false;
                    nlohmann::json lifts = nlohmann::json::array();
                    for (const auto& v : lifted.v)
                        lifts.push_back(sc.module.ring->format(v));
                    stable.witness = {{"prime", p}, {"trial", t}, {"lifts", lifts}};
                }
            }
        }
        stable.details = {{"trials", trials}, {"seed", options.seed}};
        c.checks.push_back(stable);
    }
}

void thom_classes(Criterion& c)
{
    for (int n = 1; n <= 6; ++n)
        for (int d = 0; d < n; ++d)
            c.checks.push_back(verify_thom(n, d));
}

void hopf_algebroids(Criterion& c)
{
    for (int N = 2; N <= 6; ++N) {
        Check check = verify_hopf_axioms(mumu_rational_truncated(N));
        check.name = "hopf.axioms(" + std::to_string(N) + ")";
        c.checks.push_back(check);
    }
    Check corrupted = verify_hopf_axioms(corrupt_comultiplication(mumu_rational_truncated(6), "b2"));
    bool detected = !corrupted.pass && corrupted.witness && (*corrupted.witness)["degree"] == 2;
    Check control{"hopf.negative_control(b2)", "hopf_algebroid.axioms", detected, {}, {}};
    control.details = {{"corrupted_report_pass", corrupted.pass}};
    if (corrupted.witness)
        control.details["detected_by"] = *corrupted.witness;
    c.checks.push_back(control);
    c.checks.push_back(verify_cooperations_poincare(12));
}

void cobordism_tables(Criterion& c)
{
    TableWindow w{-10, 10, -5, 5};
    for (auto [r1, r2] : {std::pair{1L, 0L}, std::pair{0L, 1L}, std::pair{2L, 1L}})
        c.checks.push_back(verify_number_field_corollary(r1, r2, w));
    for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L})
        c.checks.push_back(verify_finite_field_table(q, w));
}

} // namespace

std::vector<Criterion> run_acceptance(const VerifyOptions& options, const CriterionCallback& done)
{
    struct Spec {
        int id;
        const char* title;
        double budget_s;
        std::function<void(Criterion&)> run;
    };
    const std::vector<Spec> specs = {
        {1, "Grassmannian ranks are binomial for 0 <= d <= n <= 7", 10, grass_ranks},
        {2, "image of iota equals kernel of pi for 0 <= d < n <= 6", 30, exact_sequences},
        {3, "Schur restriction identities for 0 <= d < n <= 6", 10, schur_identities},
        {4, "structure constants match the expansion oracle for n <= 5, Pieri fixture", 0,
         structure_constants_fixture},
        {5, "pairing Gram matrices are unimodular and anti-diagonal for n <= 6", 0, pairings},
        {6, "formal group law axioms to degree 8, Chern exponential to degree 10", 20, formal_group_laws},
        {7, "Landweber suite with seeded lift perturbations", 60,
         [&](Criterion& c) { landweber_suite(c, options); }},
        {8, "Thom class zero-section identity for 0 <= d < n <= 6", 0, thom_classes},
        {9, "Hopf algebroid axioms for N <= 6, negative control, cooperations Poincare series", 60,
         hopf_algebroids},
        {10, "rational cobordism tables of number fields and finite fields", 5, cobordism_tables},
    };
    std::vector<Criterion> out;
    for (const auto& s : specs) {
        Criterion c{s.id, s.title, s.budget_s, {}, 0};
        auto t0 = Clock::now();
        try {
            s.run(c);
        } catch (const std::exception& e) {
            c.checks.push_back({"criterion." + std::to_string(s.id), "acceptance.exception", false, {},
                                nlohmann::json{{"error", e.what()}}});
        }
        c.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
        if (done)
            done(c);
        out.push_back(std::move(c));
    }
    return out;
}

SuiteOutcome verify_all(const VerifyOptions& options, const CriterionCallback& done)
{
    auto t0 = Clock::now();
    SuiteOutcome out;
    out.criteria = run_acceptance(options, done);
    out.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
    out.within_budget = out.elapsed_s <= options.total_budget_s;
    return out;
}

Report verify_all_report(const SuiteOutcome& outcome, const VerifyOptions& options, bool timing)
{
    Report report;
    report.command = "verify-all";
    report.options = {{"seed", options.seed},
                      {"perturbations", options.perturbations},
                      {"total_budget_s", options.total_budget_s}};
    nlohmann::json criteria = nlohmann::json::array();
    for (const auto& c : outcome.criteria) {
        nlohmann::json j = {{"id", c.id},
                            {"title", c.title},
                            {"pass", c.pass()},
                            {"checks", c.checks.size()},
                            {"checks_pass", c.checks_pass()},
                            {"within_budget", c.within_budget()}};
        if (c.budget_s > 0)
            j["budget_s"] = c.budget_s;
        if (timing)
            j["elapsed_ms"] = c.elapsed_s * 1000;
        criteria.push_back(j);
        report.checks.insert(report.checks.end(), c.checks.begin(), c.checks.end());
        if (!c.within_budget())
            report.checks.push_back({"criterion." + std::to_string(c.id) + ".budget", "acceptance.budget", false,
                                     {{"budget_s", c.budget_s}}, std::nullopt});
    }
    if (!outcome.within_budget)
        report.checks.push_back({"suite.budget", "acceptance.budget", false,
                                 {{"budget_s", options.total_budget_s}}, std::nullopt});
    report.result = {{"criteria", criteria}, {"pass", outcome.pass()}};
    if (timing)
        report.timing_ms = outcome.elapsed_s * 1000;
    return report;
}

} // namespace cobalt
