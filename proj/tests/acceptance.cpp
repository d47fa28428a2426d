// Acceptance driver: one PASS/FAIL line per criterion.
// Usage: acceptance <ribbonlab-cli> <property-suite-binary>
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <ribbonlab/cli.hpp>
#include <ribbonlab/io.hpp>
#include <ribbonlab/ribbonlab.hpp>

#include "oracle.hpp"

using namespace ribbonlab;
using io::json;
namespace fs = std::filesystem;

namespace
{

std::string cli_path;
std::string property_path;
fs::path work;
int failures = 0;

struct Outcome {
    int code = -1;
    std::string out;
    double seconds = 0;
};

Outcome sh(const std::string &cmd)
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    FILE *p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (p == nullptr) {
        return o;
    }
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) {
        o.out.append(buf, n);
    }
    const int status = pclose(p);
    o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return o;
}

Outcome cli(const std::string &args)
{
    return sh("\"" + cli_path + "\" " + args);
}

std::string file(const std::string &name)
{
    return (work / name).string();
}

void report(int id, const std::string &name, bool ok, const std::string &detail)
{
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << " " << name << ": " << detail << std::endl;
    if (!ok) {
        ++failures;
    }
}

void schur_soundness()
{
    bool ok = true;
    std::ostringstream d;
    const std::string window = "--t-lo -4 --t-hi 4 --u-lo -8 --u-hi 8 --m-t 2 --m-u 2";
    for (int m = 0; m <= 3; ++m) {
        const auto pair = file("p2_" + std::to_string(m) + ".json");
        const auto b = cli("build p2-line --twist " + std::to_string(m) + " " + window + " -o " + pair);
        const auto c = cli("check " + pair);
        d << "m=" << m << " exit " << c.code << " (" << c.seconds << "s); ";
        ok = ok && b.code == 0 && c.code == 0 && c.seconds < 10.0;
    }
    auto j = io::read_file(file("p2_0.json"));
    for (auto &lv : j["A"]["levels"]) {
        if (lv["b"] == 0) {
            lv["rows"].push_back(json::array({json{{"field", "Q"}, {"coeffs", json::array({json::array({1, "1/1"})})}}}));
        }
    }
    j["A"]["generators"].push_back(json::array({json{{"terms", json::array({json::array({1, 0, "1/1"})})}}}));
    io::write_file(file("p2_injected.json"), j);
    const auto bad = cli("check " + file("p2_injected.json"));
    d << "injected u^1 t^0 exit " << bad.code;
    ok = ok && bad.code == 1;
    report(1, "Schur-pair soundness", ok, d.str());
}

void level_indices()
{
    bool ok = true;
    std::ostringstream d;
    const auto w = Window2D::make(-4, 4, -12, 12, 2, 2);
    int checked = 0;
    for (int m = 0; m <= 3; ++m) {
        for (const auto &li : level_index_table(GeometricDatum::make(ExampleKind::p2_line, m), w)) {
            if (li.b < -3 || li.b >= 4) {
                continue;
            }
            const bool good = li.index_W && *li.index_W == m - li.b + 1 &&
                              *li.index_W == oracle::h0_p1(m - li.b) - oracle::h1_p1(m - li.b);
            if (!good) {
                ok = false;
                d << "m=" << m << " b=" << li.b << " status " << li.status_W << "; ";
            }
            ++checked;
        }
    }
    d << checked << " levels, window u in [-12,12)";
    report(2, "level Fredholm indices", ok && checked == 28, d.str());
}

void hilbert_reconstruction()
{
    bool ok = true;
    std::ostringstream d;
    const auto pair = file("p2_0.json");
    const auto h1 = cli("report hilbert " + pair + " --j 1 --max-n 6");
    const auto h2 = cli("report hilbert " + pair + " --j 2 --max-n 6");
    if (h1.code != 0 || h2.code != 0) {
        report(3, "Hilbert reconstruction", false, "exit codes " + std::to_string(h1.code) + ", " +
                                                       std::to_string(h2.code));
        return;
    }
    const auto j1 = json::parse(h1.out);
    const auto j2 = json::parse(h2.out);
    for (int n = 0; n <= 6; ++n) {
        ok = ok && j1["table"][static_cast<std::size_t>(n)] == n + 1;
        ok = ok && j2["table"][static_cast<std::size_t>(n)] == 2 * n + 1;
    }
    ok = ok && j1["point_ideal"]["pass"] == true;
    d << "j=1 " << j1["table"].dump() << ", j=2 " << j2["table"].dump() << ", point ideal jumps "
      << j1["point_ideal"]["jumps"].dump();
    report(3, "Hilbert reconstruction", ok, d.str());
}

void cohomology()
{
    bool ok = true;
    std::ostringstream d;
    for (int deg = -6; deg <= 6; ++deg) {
        const auto c = cech_line_bundle(deg, 8);
        ok = ok && c.h0 == oracle::h0_p1(deg) && c.h1 == oracle::h1_p1(deg);
    }
    d << "line bundles d in [-6,6] at B=8 " << (ok ? "exact" : "mismatch") << "; ";
    for (const int i : {2, 5}) {
        const auto r = cli("report cohomology --example p2-line --max-i " + std::to_string(i) + " --bound 8");
        if (r.code != 0) {
            ok = false;
            d << "i=" << i << " exit " << r.code << "; ";
            continue;
        }
        const auto j = json::parse(r.out);
        const long want_h1 = i == 2 ? 1 : 10;
        ok = ok && j["h0"] == 1 && j["h1"] == want_h1 && j["block_levelwise_agree"] == true &&
             j["transition_surjective"] == true;
        d << "i=" << i << " (" << j["h0"] << "," << j["h1"] << ") ";
    }
    report(4, "cohomology", ok, d.str());
}

void picard()
{
    const auto r = cli("report picard --max-i 5 --bound 8");
    bool ok = r.code == 0;
    std::string detail = "exit " + std::to_string(r.code);
    if (ok) {
        const auto j = json::parse(r.out);
        ok = j["dimensions"] == json::array({0, 1, 3, 6, 10}) && j["d"] == -1;
        detail = "dims " + j["dimensions"].dump() + ", d = " + j["d"].dump();
    }
    report(5, "Picard", ok, detail);
}

void order_groups()
{
    bool ok = true;
    std::ostringstream d;
    const std::vector<std::pair<std::string, long>> cases{{"p2-line", 1}, {"even-variant", 2}, {"nilpotent", 0}};
    for (const auto &[name, want] : cases) {
        const auto r = cli("report order-group --example " + name);
        if (r.code != 0) {
            ok = false;
            d << name << " exit " << r.code << "; ";
            continue;
        }
        const auto j = json::parse(r.out);
        ok = ok && j["d"] == want;
        d << name << " d=" << j["d"] << "; ";
    }
    report(6, "order group", ok, d.str());
}

void noncoherent()
{
    const auto r = cli("report demo-noncoherent --max-k 5 --degree-bound 8");
    bool ok = r.code == 0;
    std::string detail = "exit " + std::to_string(r.code);
    if (ok) {
        const auto j = json::parse(r.out);
        const auto dims = j["dims"].get<std::vector<long>>();
        ok = dims.size() == 5;
        for (std::size_t i = 1; ok && i < dims.size(); ++i) {
            ok = dims[i] - dims[i - 1] == dims[1] - dims[0] && dims[i] > dims[i - 1];
        }
        detail = "dims " + j["dims"].dump();
    }
    report(7, "non-Noetherian chain", ok, detail);
}

void properties()
{
    const auto r = sh("\"" + property_path + "\" --gtest_brief=1");
    std::ostringstream d;
    d << "property suite exit " << r.code << " in " << r.seconds << "s";
    report(8, "property suites", r.code == 0 && r.seconds < 120.0, d.str());
}

} // namespace

int main(int argc, char **argv)
{
    if (argc < 3) {
        std::cerr << "usage: acceptance <ribbonlab-cli> <property-suite>\n";
        return 2;
    }
    cli_path = argv[1];
    property_path = argv[2];
    work = fs::temp_directory_path() / "ribbonlab_acceptance";
    fs::create_directories(work);
    unsetenv("RIBBONLAB_FIELD");

    schur_soundness();
    level_indices();
    hilbert_reconstruction();
    cohomology();
    picard();
    order_groups();
    noncoherent();
    properties();

    fs::remove_all(work);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
