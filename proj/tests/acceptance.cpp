#include "cobalt/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv)
{
    cobalt::VerifyOptions options;
    if (argc > 1)
        options.seed = std::strtoul(argv[1], nullptr, 10);
    auto outcome = cobalt::verify_all(options, [](const cobalt::Criterion& c) {
        std::string budget = c.budget_s > 0 ? std::to_string(static_cast<int>(c.budget_s)) + " s" : "suite";
        std::size_t failed = 0;
        for (const auto& check : c.checks)
            failed += check.pass ? 0 : 1;
        std::printf("%s criterion %d: %s [%zu checks, %zu failed, %.2f s, budget %s]\n", c.pass() ? "PASS" : "FAIL",
                    c.id, c.title.c_str(), c.checks.size(), failed, c.elapsed_s, budget.c_str());
        for (const auto& check : c.checks)
            if (!check.pass)
                std::printf("    failed: %s\n", check.name.c_str());
        std::fflush(stdout);
    });
    std::printf("%s suite: %.2f s of %.0f s budget\n", outcome.pass() ? "PASS" : "FAIL", outcome.elapsed_s,
                options.total_budget_s);
    return outcome.pass() ? 0 : 1;
}
