#include "cobalt/cobordism.hpp"
#include "cobalt/error.hpp"
#include "cobalt/fgl.hpp"
#include "cobalt/hopf.hpp"
#include "cobalt/landweber.hpp"
#include "cobalt/oriented.hpp"
#include "cobalt/parse.hpp"
#include "cobalt/schur.hpp"
#include "cobalt/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace cobalt;

namespace {

struct Globals {
    std::optional<unsigned long> seed;
    std::string output = "json";
    bool timing = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

long parse_long(const std::string& s, const std::string& what)
{
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size())
        throw UsageError("bad integer '" + s + "' in " + what);
    return v;
}

std::pair<long, long> parse_range(const std::string& s, const std::string& what)
{
    // The separator is the first ':' after a possible leading sign.
    auto colon = s.find(':', 1);
    if (colon == std::string::npos)
        throw UsageError(what + " must look like lo:hi, got '" + s + "'");
    return {parse_long(s.substr(0, colon), what), parse_long(s.substr(colon + 1), what)};
}

std::vector<long> parse_list(const std::string& s, const std::string& what)
{
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_long(item, what));
    if (out.empty())
        throw UsageError(what + " is empty");
    return out;
}

int emit(Report& report, const Globals& g, std::chrono::steady_clock::time_point start)
{
    if (g.timing)
        report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << report.to_json().dump(2) << "\n";
    return report.all_pass() ? 0 : 1;
}

void require_json(const Globals& g, const std::string& command)
{
    if (g.output != "json")
        throw UsageError("--output " + g.output + " is not available for " + command);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with formal group laws, Grassmannians and cobordism tables", "cobalt"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Seed for randomized property checks");
    app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--timing", g.timing, "Include wall-clock timings in the report");

    int grass_n = 0, grass_d = 0;
    std::string grass_verify;
    auto* grass = app.add_subcommand("grass", "Schur basis and checks for R_{n,d}");
    grass->add_option("--n", grass_n)->required();
    grass->add_option("--d", grass_d)->required();
    grass->add_option("--verify", grass_verify)
        ->check(CLI::IsMember({"all", "rank", "complex", "eq1", "eq2", "pairing", "lr"}));

    std::string fgl_law;
    int fgl_N = 0;
    bool fgl_check = false;
    std::optional<long> fgl_pseries;
    std::vector<long> fgl_landweber;
    auto* fgl = app.add_subcommand("fgl", "Formal group law coefficients and checks");
    fgl->add_option("--law", fgl_law, "additive, multiplicative, universal-q or a JSON file")->required();
    fgl->add_option("--N", fgl_N, "Truncation degree")->required();
    fgl->add_flag("--check", fgl_check, "Check the axioms");
    fgl->add_option("--p-series", fgl_pseries, "Emit [p](x)");
    fgl->add_option("--landweber", fgl_landweber, "Emit v_0..v_h for P H")->expected(2);

    std::string lw_module, lw_law = "multiplicative", lw_primes = "2,3,5", lw_window = "-10:10";
    int lw_height = 3, lw_bound = 8;
    bool lw_suite = false;
    auto* lw = app.add_subcommand("landweber", "Regularity of (p, v_1, ..., v_h) on a module");
    lw->add_option("--module", lw_module, "Module presentation JSON");
    lw->add_option("--law", lw_law, "multiplicative, additive or a JSON file");
    lw->add_option("--primes", lw_primes);
    lw->add_option("--height", lw_height);
    lw->add_option("--window", lw_window, "Degree window lo:hi");
    lw->add_option("--bound", lw_bound, "Exponent bound for Laurent generators");
    lw->add_flag("--suite", lw_suite, "Run the built-in suite instead of a module");

    std::string or_coeff;
    int or_n = 0, or_d = 0;
    bool or_thom = false;
    auto* oriented = app.add_subcommand("oriented", "Grassmannian cohomology over a coefficient ring");
    oriented->add_option("--coeff", or_coeff, "Coefficient ring presentation JSON (default Z)");
    oriented->add_option("--n", or_n)->required();
    oriented->add_option("--d", or_d)->required();
    oriented->add_flag("--thom", or_thom, "Verify the Thom class of the tautological bundle");

    int hopf_N = 0;
    std::string hopf_induced;
    auto* hopf = app.add_subcommand("hopf", "Truncated rational Hopf algebroids");
    hopf->add_option("--N", hopf_N, "Truncation degree")->required();
    hopf->add_option("--induced", hopf_induced, "Formal group law JSON for the induced Hopf algebroid");

    std::string cob_field = "Q", cob_window = "-10:10,-5:5";
    bool cob_verify = false;
    auto* cob = app.add_subcommand("cobordism", "Rational algebraic cobordism of a field");
    cob->add_option("--field", cob_field, "Q, F<q> or number:r1,r2");
    cob->add_option("--window", cob_window, "p range and q range, plo:phi,qlo:qhi");
    cob->add_flag("--verify", cob_verify, "Compare with the closed form");

    auto* all = app.add_subcommand("verify-all", "Run the full acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        Report report;
        if (*grass) {
            require_json(g, "grass");
            report.command = "grass";
            report.options = {{"n", grass_n}, {"d", grass_d}, {"verify", grass_verify}};
            if (grass_d < 0 || grass_d > grass_n)
                throw Error(ErrorCode::InvalidArgument, "need 0 <= d <= n");
            auto ring = grass_ring(grass_n, grass_d);
            nlohmann::json basis = nlohmann::json::array();
            for (const auto& a : ring->basis())
                basis.push_back(a.to_string());
            report.result = {{"rank", ring->rank()},
                             {"basis", basis},
                             {"presentation", presentation_to_json(ring->presentation())}};
            auto want = [&](const std::string& k) { return grass_verify == "all" || grass_verify == k; };
            if (want("rank"))
                report.checks.push_back(verify_rank(grass_n, grass_d));
            if (grass_d < grass_n) {
                if (want("complex"))
                    report.checks.push_back(verify_complex(grass_n, grass_d));
                if (want("eq1"))
                    report.checks.push_back(verify_eq1(grass_n, grass_d));
                if (want("eq2"))
                    report.checks.push_back(verify_eq2(grass_n, grass_d));
            }
            if (want("pairing"))
                report.checks.push_back(verify_pairing(grass_n, grass_d));
            if (want("lr"))
                report.checks.push_back(verify_structure_constants(grass_n, grass_d));
            return emit(report, g, start);
        }

        if (*fgl) {
            require_json(g, "fgl");
            report.command = "fgl";
            report.options = {{"law", fgl_law}, {"N", fgl_N}, {"check", fgl_check}};
            std::optional<FormalGroupLaw> F;
            if (fgl_law == "additive")
                F = fgl_additive(make_ring(RingPresentation::integers()), fgl_N);
            else if (fgl_law == "multiplicative")
                F = fgl_multiplicative(laurent_z_ring(), fgl_N);
            else if (fgl_law == "universal-q")
                F = fgl_universal_rational(fgl_N);
            else
                F = fgl_from_json(read_json_file(fgl_law));
            report.result = fgl_to_json(*F);
            report.result["ring"] = presentation_to_json(F->ring());
            if (fgl_check)
                report.checks.push_back(fgl_check_axioms(*F));
            if (fgl_pseries) {
                report.options["p_series"] = *fgl_pseries;
                report.result["p_series"] = series_to_json(F->ring(), p_series(*F, *fgl_pseries, F->truncation()));
            }
            if (!fgl_landweber.empty()) {
                report.options["landweber"] = fgl_landweber;
                auto v = landweber_generators(*F, fgl_landweber[0], static_cast<int>(fgl_landweber[1]));
                nlohmann::json gens = nlohmann::json::array();
                for (const auto& x : v.v)
                    gens.push_back(F->ring().format(x));
                report.result["landweber"] = {{"prime", v.p}, {"height", v.height}, {"v", gens}};
            }
            return emit(report, g, start);
        }

        if (*lw) {
            require_json(g, "landweber");
            report.command = "landweber";
            if (lw_suite) {
                if (!lw_module.empty())
                    throw UsageError("--suite takes no --module");
                report.options = {{"suite", true}};
                nlohmann::json rows = nlohmann::json::array();
                for (const auto& c : builtin_cases()) {
                    auto verdicts = check_exact(c.module, c.law, c.primes, c.height, c.window, c.exponent_bound);
                    Verdict v = overall_verdict(verdicts);
                    rows.push_back({{"name", c.name},
                                    {"verdict", verdict_name(v)},
                                    {"expected", verdict_name(c.expected)},
                                    {"primes", verdicts_to_json(*c.module.ring, verdicts)}});
                    report.checks.push_back({"landweber.suite(" + c.name + ")", "landweber.exactness",
                                             v == c.expected, {{"verdict", verdict_name(v)}}, std::nullopt});
                }
                report.result = {{"rows", rows}};
                return emit(report, g, start);
            }
            if (lw_module.empty())
                throw UsageError("landweber needs --module or --suite");
            auto primes = parse_list(lw_primes, "--primes");
            auto [lo, hi] = parse_range(lw_window, "--window");
            report.options = {{"module", lw_module}, {"law", lw_law},   {"primes", primes},
                              {"height", lw_height}, {"window", {lo, hi}}, {"bound", lw_bound}};
            ModulePresentation M = module_from_json(read_json_file(lw_module));
            long top = 0;
            for (long p : primes)
                top = std::max(top, integer_power(p, lw_height));
            int N = static_cast<int>(top) + 1;
            std::optional<FormalGroupLaw> F;
            if (lw_law == "multiplicative")
                F = fgl_multiplicative(M.ring, N);
            else if (lw_law == "additive")
                F = fgl_additive(M.ring, N);
            else
                F = fgl_from_json(read_json_file(lw_law));
            auto verdicts = check_exact(M, *F, primes, lw_height, {lo, hi}, lw_bound);
            Verdict v = overall_verdict(verdicts);
            report.result = {{"verdict", verdict_name(v)}, {"primes", verdicts_to_json(*M.ring, verdicts)}};
            report.checks.push_back({"landweber.exact", "landweber.exactness", v == Verdict::Exact,
                                     {{"verdict", verdict_name(v)}}, std::nullopt});
            return emit(report, g, start);
        }

        if (*oriented) {
            require_json(g, "oriented");
            report.command = "oriented";
            report.options = {{"coeff", or_coeff.empty() ? "Z" : or_coeff}, {"n", or_n}, {"d", or_d}, {"thom", or_thom}};
            RingPtr coeff = or_coeff.empty() ? make_ring(RingPresentation::integers())
                                             : make_ring(presentation_from_json(read_json_file(or_coeff)));
            auto M = grassmann_cohomology(coeff, or_n, or_d);
            report.result = module_to_json(M);
            if (or_thom) {
                ThomClass t = thom_class(or_n, or_d);
                report.result["thom_class"] = bundle_element_to_json(t.bundle, t.th);
                report.checks.push_back(verify_thom(or_n, or_d));
                report.checks.push_back(verify_projective_bundle(or_n, or_d));
            }
            return emit(report, g, start);
        }

        if (*hopf) {
            require_json(g, "hopf");
            report.command = "hopf";
            report.options = {{"N", hopf_N}};
            if (hopf_induced.empty()) {
                auto H = mumu_rational_truncated(hopf_N);
                report.result = hopf_to_json(H);
                report.checks.push_back(verify_hopf_axioms(H));
            } else {
                report.options["induced"] = hopf_induced;
                auto I = induced_hopf(fgl_from_json(read_json_file(hopf_induced)), hopf_N);
                report.result = hopf_to_json(I.result);
                nlohmann::json rels = nlohmann::json::array();
                for (const auto& r : I.relations)
                    rels.push_back(I.result.Gamma->format(r));
                report.result["relations"] = rels;
                report.checks.push_back(verify_hopf_axioms(I.result));
                report.checks.push_back(verify_induced_collapse(I));
            }
            return emit(report, g, start);
        }

        if (*cob) {
            FieldDescriptor k = FieldDescriptor::parse(cob_field);
            auto comma = cob_window.find(',');
            if (comma == std::string::npos)
                throw UsageError("--window must look like plo:phi,qlo:qhi");
            auto [plo, phi] = parse_range(cob_window.substr(0, comma), "--window");
            auto [qlo, qhi] = parse_range(cob_window.substr(comma + 1), "--window");
            TableWindow w{plo, phi, qlo, qhi};
            auto table = mgl_rational_table(k, w);
            std::optional<Check> check;
            if (cob_verify)
                check = k.kind == FieldDescriptor::Kind::FiniteField ? verify_finite_field_table(k.q, w)
                                                                      : verify_number_field_corollary(k.r1, k.r2, w);
            if (g.output == "csv") {
                std::cout << table_csv(w, table);
                if (check && !check->pass)
                    std::cerr << "cobalt: " << to_json(*check).dump() << "\n";
                return check && !check->pass ? 1 : 0;
            }
            report.command = "cobordism";
            report.options = {{"field", k.name()}, {"window", cob_window}, {"verify", cob_verify}};
            report.result = table_json(k, w, table);
            if (check)
                report.checks.push_back(*check);
            return emit(report, g, start);
        }

        if (*all) {
            require_json(g, "verify-all");
            VerifyOptions options;
            if (g.seed)
                options.seed = *g.seed;
            auto outcome = verify_all(options);
            report = verify_all_report(outcome, options, g.timing);
            report.timing_ms.reset();
            return emit(report, g, start);
        }
    } catch (const UsageError& e) {
        std::cerr << "cobalt: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "cobalt: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "cobalt: malformed document: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
