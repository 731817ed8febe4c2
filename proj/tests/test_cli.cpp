// Spawns the command-line tool (path in argv[1]) and checks its contract:
// output shape, exit codes, and determinism of structured reports.
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"

namespace {

int failures = 0;

#define REQUIRE(cond)                                                       \
    do {                                                                    \
        if (!(cond)) {                                                      \
            std::printf("[FAIL] %s:%d: %s\n", __FILE__, __LINE__, #cond);   \
            ++failures;                                                     \
        }                                                                   \
    } while (0)

struct RunResult {
    int code;
    std::string out;
};

std::string qcf;

RunResult run(const std::string& args) {
    std::string cmd = qcf + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

nlohmann::json strip_ms(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    for (auto& item : arr) item.erase("ms");
    return arr;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::printf("usage: %s <path-to-qcf>\n", argv[0]);
        return 2;
    }
    qcf = argv[1];

    {  // catalog listing
        RunResult r = run("list");
        REQUIRE(r.code == 0);
        REQUIRE(contains(r.out, "III.16.38.RR"));
        REQUIRE(contains(r.out, "III.16.12"));
        REQUIRE(contains(r.out, "L.I.6.4.2"));
        int lines = 0;
        for (char c : r.out) lines += c == '\n';
        REQUIRE(lines == 31);
    }

    {  // structured verification output with exact schema
        RunResult r = run("verify --entry III.16.16 --json");
        REQUIRE(r.code == 0);
        nlohmann::json arr = nlohmann::json::parse(r.out);
        REQUIRE(arr.is_array());
        REQUIRE(arr.size() == 5);
        for (const auto& item : arr) {
            REQUIRE(item["entry"] == "III.16.16");
            REQUIRE(item["backend"] == "exact");
            REQUIRE(item["status"] == "pass");
            REQUIRE(item["params"].contains("lambda"));
            REQUIRE(item["params"].contains("q"));
            REQUIRE(item.contains("ms"));
        }
    }

    {  // reports are deterministic apart from timings
        RunResult a = run("verify --entry III.16.13 --json");
        RunResult b = run("verify --entry III.16.13 --json");
        REQUIRE(a.code == 0);
        REQUIRE(b.code == 0);
        REQUIRE(strip_ms(a.out) == strip_ms(b.out));
    }

    {  // pattern selection
        RunResult r = run("verify V.32");
        REQUIRE(r.code == 0);
        REQUIRE(contains(r.out, "V.32.18"));
        REQUIRE(contains(r.out, "V.32.22"));
        REQUIRE(contains(r.out, "5 checks: 5 pass"));
    }

    {  // exit codes: unknown entry, usage, help
        REQUIRE(run("verify --entry no.such.entry").code == 66);
        REQUIRE(run("verify --entry").code == 64);
        REQUIRE(run("frobnicate").code == 64);
        REQUIRE(run("--help").code == 0);
        REQUIRE(run("verify --help").code == 0);
    }

    {  // a starved depth budget is inconclusive, not pass or fail
        RunResult r = run("verify --entry L.I.6.5.2 --max-depth 4");
        REQUIRE(r.code == 2);
        REQUIRE(contains(r.out, "INCONCLUSIVE"));
    }

    {  // option overrides reach the engine
        RunResult r = run("verify --entry III.16.38.RR --order 20 --json");
        REQUIRE(r.code == 0);
        nlohmann::json arr = nlohmann::json::parse(r.out);
        REQUIRE(arr[0]["order"] == 20);
    }

    {  // report file writing
        RunResult r = run("verify --entry III.16.16 --json --out /tmp/qcf_report.json");
        REQUIRE(r.code == 0);
        FILE* f = fopen("/tmp/qcf_report.json", "r");
        REQUIRE(f != nullptr);
        if (f) {
            std::string text;
            char buf[4096];
            std::size_t n;
            while ((n = fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, n);
            fclose(f);
            REQUIRE(nlohmann::json::parse(text).size() == 5);
            remove("/tmp/qcf_report.json");
        }
    }

    {  // expansion recovers the ladder of the first catalog fraction
        RunResult r = run("expand --entry III.16.38.RR --depth 5");
        REQUIRE(r.code == 0);
        REQUIRE(contains(r.out, "term  5: 1 * q^5"));
        REQUIRE(contains(r.out, "reconstruction agrees"));
    }

    {  // evaluation across backends
        RunResult exact = run("eval --entry III.16.16");
        REQUIRE(exact.code == 0);
        REQUIRE(contains(exact.out, "exactly equal: yes"));

        RunResult special = run("eval --entry III.16.39.cor.i");
        REQUIRE(special.code == 0);
        REQUIRE(contains(special.out, "closed form: 1.045077716158131508"));

        RunResult numeric = run("eval --entry III.16.12 --q 1/3");
        REQUIRE(numeric.code == 0);
        REQUIRE(contains(numeric.out, "max |difference|"));
    }

    if (failures == 0) {
        std::printf("[PASS] command-line contract: all checks passed\n");
        return 0;
    }
    std::printf("[FAIL] command-line contract: %d check(s) failed\n", failures);
    return 1;
}
