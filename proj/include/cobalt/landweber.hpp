#pragma once

#include "cobalt/fgl.hpp"
#include "cobalt/graded.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cobalt {

struct ModuleGenerator {
    std::string name;
    int adams_degree = 0;
};

/// Graded module over a presented ring: generators with degrees and relations
/// given as one ring element per generator.
struct ModulePresentation {
    RingPtr ring;
    std::vector<ModuleGenerator> generators;
    std::vector<ModuleElement> relations;

    /// The ring as a module over itself, on one generator in degree 0.
    static ModulePresentation free_rank_one(RingPtr ring);
    std::vector<int> degrees() const;
    /// Checks entry counts and homogeneity of every relation.
    void validate() const;
};

/// {"ring": presentation, "generators": [{"name","adams_degree"}],
///  "relations": [[expr per generator], ...]}. Without "generators" the
/// module is the ring itself.
ModulePresentation module_from_json(const nlohmann::json& doc);
nlohmann::json module_to_json(const ModulePresentation& M);

enum class StageStatus { Regular, Fails, QuotientVanishes, WindowInconclusive };

std::string status_name(StageStatus s);

struct StageResult {
    int n = 0;
    StageStatus status = StageStatus::WindowInconclusive;
    /// Degree in which v_n acts, the degree of v_n or p^n - 1 when v_n = 0.
    long shift = 0;
    std::vector<long> degrees_checked;
    std::optional<long> witness_degree;
    /// Nonzero class of Q_n killed by v_n, one entry per module generator.
    std::optional<ModuleElement> witness;
};

enum class Verdict { Exact, Fails, Inconclusive };

std::string verdict_name(Verdict v);

struct LandweberVerdict {
    long prime = 0;
    int height = 0;
    std::vector<StageResult> stages;
    Verdict verdict() const;
};

struct Window {
    long lo = 0;
    long hi = 0;
};

/// Regularity of (v_0, ..., v_h) on M for explicit lifts v.
LandweberVerdict check_regular_with(const ModulePresentation& M, const LandweberGenerators& v, Window window,
                                    int exponent_bound);

/// Regularity of (p, v_1, ..., v_h) with v_n read off [p](x) of F.
LandweberVerdict check_regular(const ModulePresentation& M, const FormalGroupLaw& F, long p, int h, Window window,
                               int exponent_bound);

std::map<long, LandweberVerdict> check_exact(const ModulePresentation& M, const FormalGroupLaw& F,
                                             const std::vector<long>& primes, int h, Window window,
                                             int exponent_bound);

/// EXACT when every prime is; FAILS when some prime fails.
Verdict overall_verdict(const std::map<long, LandweberVerdict>& verdicts);

/// v_n + sum_{k<n} c t v_k with random small c and random monomials t of the
/// matching degree, so the lift changes only by an element of I_n.
LandweberGenerators perturb_generators(const RingPresentation& ring, const LandweberGenerators& v, std::mt19937& rng,
                                       int exponent_bound);

struct SuiteCase {
    std::string name;
    ModulePresentation module;
    FormalGroupLaw law;
    std::vector<long> primes;
    int height = 0;
    Window window;
    int exponent_bound = 0;
    /// Verdict the case is expected to produce.
    Verdict expected = Verdict::Exact;
    /// For failing cases, the stage at which every prime fails; -1 otherwise.
    int expected_fail_stage = -1;
};

/// KGL coefficients, LQ coefficients, Z additive, Z/p and Z_(p) multiplicative.
std::vector<SuiteCase> builtin_cases();

struct SuiteRow {
    std::string name;
    std::map<long, LandweberVerdict> verdicts;
    Verdict verdict = Verdict::Inconclusive;
    Verdict expected = Verdict::Exact;
};

std::vector<SuiteRow> builtin_suite();

nlohmann::json verdict_to_json(const RingPresentation& ring, const LandweberVerdict& v);
nlohmann::json verdicts_to_json(const RingPresentation& ring, const std::map<long, LandweberVerdict>& v);

} // namespace cobalt
