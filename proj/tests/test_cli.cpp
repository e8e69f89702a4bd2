#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cobalt(const std::string& args)
{
    std::string cmd = std::string(COBALT_BIN) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(COBALT_DATA) + "/" + name; }

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST_CASE("grass reports the Schur basis and checks")
{
    auto r = cobalt("grass --n 4 --d 2 --verify all");
    CHECK(r.code == 0);
    auto j = json_of(r);
    CHECK(j["schema"] == 1);
    CHECK(j["result"]["rank"] == 6);
    CHECK(j["checks"].size() == 6);
    CHECK_FALSE(j.contains("timing_ms"));
    CHECK(json_of(cobalt("grass --n 4 --d 2 --timing")).contains("timing_ms"));
}

TEST_CASE("fgl coefficients, p-series and Landweber generators")
{
    auto r = cobalt("fgl --law multiplicative --N 4 --check --p-series 2 --landweber 2 1");
    CHECK(r.code == 0);
    auto j = json_of(r);
    CHECK(j["result"]["coefficients"][0]["value"] == "-b");
    CHECK(j["result"]["p_series"][1]["value"] == "-b");
    CHECK(j["result"]["landweber"]["v"][1] == "-b");
    CHECK(j["checks"][0]["pass"] == true);
}

TEST_CASE("landweber exit codes follow the verdict")
{
    auto kgl = cobalt("landweber --module " + data("kgl_module.json") +
                      " --law multiplicative --primes 2,3 --height 2 --window -6:6 --bound 12");
    CHECK(kgl.code == 0);
    CHECK(json_of(kgl)["result"]["verdict"] == "EXACT");

    auto z = cobalt("landweber --module " + data("z_module.json") + " --law additive --primes 2 --height 1 --window 0:2");
    CHECK(z.code == 1);
    CHECK(json_of(z)["result"]["verdict"] == "FAILS");

    CHECK(cobalt("landweber --suite").code == 0);
}

TEST_CASE("input errors exit with code 2")
{
    CHECK(cobalt("landweber --module " + data("broken.json")).code == 2);
    CHECK(cobalt("oriented --coeff " + data("inhomogeneous_ring.json") + " --n 2 --d 1").code == 2);
    CHECK(cobalt("landweber --module " + data("missing.json")).code == 2);
    CHECK(cobalt("grass --n 2 --d 1 --bogus").code == 2);
    CHECK(cobalt("grass --n 2").code == 2);
    CHECK(cobalt("").code == 2);
    CHECK(cobalt("cobordism --field R").code == 2);
    CHECK(cobalt("cobordism --window 1:0,0:0").code == 2);
    CHECK(cobalt("verify-all --output csv").code == 2);
}

TEST_CASE("oriented over a Laurent coefficient ring with the Thom check")
{
    auto r = cobalt("oriented --coeff " + data("laurent_q_ring.json") + " --n 3 --d 1 --thom");
    CHECK(r.code == 0);
    auto j = json_of(r);
    CHECK(j["result"]["rank"] == 3);
    CHECK(j["checks"].size() == 2);
}

TEST_CASE("hopf and the induced Hopf algebroid")
{
    auto r = cobalt("hopf --N 3");
    CHECK(r.code == 0);
    CHECK(json_of(r)["result"]["eta_R"]["m1"] == "m1 - b1");

    auto induced = cobalt("hopf --N 3 --induced " + data("multiplicative_q.json"));
    CHECK(induced.code == 0);
    auto j = json_of(induced);
    CHECK(j["result"]["relations"][0] == "-b_L + 2*b1 + b_R");
    CHECK(j["checks"].size() == 2);
}

TEST_CASE("cobordism CSV and JSON")
{
    auto csv = cobalt("cobordism --field Q --window -2:1,-1:1 --output csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.substr(0, csv.out.find('\n')) == "p\\q,-1,0,1");
    auto j = json_of(cobalt("cobordism --field number:2,1 --verify"));
    CHECK(j["pass"] == true);
    CHECK(j["result"]["field"] == "number:2,1");
}

TEST_CASE("verify-all is byte-identical for a fixed seed")
{
    auto a = cobalt("verify-all --seed 42");
    auto b = cobalt("verify-all --seed 42");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = json_of(a);
    CHECK(j["result"]["criteria"].size() == 10);
    CHECK(j["options"]["seed"] == 42);
}
