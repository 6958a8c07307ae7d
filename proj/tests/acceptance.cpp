// Acceptance suite: one pass/fail line per criterion, exact arithmetic, no
// tolerances. Exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "exdiv/chain.hpp"
#include "exdiv/divisor.hpp"
#include "exdiv/filtration.hpp"
#include "exdiv/gauss.hpp"
#include "exdiv/sweep.hpp"

namespace fs = std::filesystem;
using namespace exdiv;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(EXDIV_CLI_PATH) + " " + args;
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

SweepConfig full_config() {
    SweepConfig config;
    config.l_max = 12;
    config.m_max = 4096;
    config.jobs = std::max(1u, std::thread::hardware_concurrency());
    return config;
}

ValueSequence random_subadditive(std::mt19937& rng, int bound) {
    std::vector<LexValue> values;
    std::vector<Int> v(static_cast<size_t>(bound) + 1);
    for (int m = 1; m <= bound; ++m) {
        Int best = std::uniform_int_distribution<long>(0, 2L * m + 4)(rng);
        for (int i = 1; i + i <= m; ++i)
            best = std::min(best, Int(v[static_cast<size_t>(i)] + v[static_cast<size_t>(m - i)]));
        v[static_cast<size_t>(m)] = best;
        values.emplace_back(best);
    }
    return ValueSequence(std::move(values), false);
}

const CheckSummary* find_check(const SweepReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

void criteria_1_to_4() {
    SweepConfig config = full_config();
    const auto start = Clock::now();
    const SweepReport sweep = run_verify_sweep(config);
    const double elapsed = seconds_since(start);

    const CheckSummary* closed_form = find_check(sweep, "closed_form_vs_matrix");
    report(1, "closed forms equal matrix oracle for l<=12, m<=4096",
           closed_form && closed_form->failures == 0 && elapsed < 30.0,
           std::to_string(closed_form ? closed_form->total : 0) + " cells, " +
               std::to_string(elapsed) + " s sweep");

    const CheckSummary* antinef = find_check(sweep, "antinef");
    report(2, "-D(l)_m is nef for l<=12, m<=4096", antinef && antinef->failures == 0,
           std::to_string(antinef ? antinef->total : 0) + " divisors");

    const CheckSummary* pullback_check = find_check(sweep, "pullback_stability");
    report(3, "pullback of D(a)_m equals D(b)_m for m < 2^(a-1)",
           pullback_check && pullback_check->failures == 0,
           std::to_string(pullback_check ? pullback_check->total : 0) + " triples");

    const CheckSummary* positivity = find_check(sweep, "positivity");
    report(4, "(-D(l)_m . E_n) > 0 for m > 2^n, with zero witnesses below the threshold",
           positivity && positivity->failures == 0,
           std::to_string(positivity ? positivity->total : 0) + " checks");
}

void criterion_5() {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 10 && ok; ++n)
        for (long m = 1; m <= 512; ++m) {
            const CrossCheckResult r = coefficient_cross_check(n, m);
            if (!r.ok || r.coefficient != ceil_div(Int(m) * (pow2(n) - 1), pow2(n - 1))) {
                ok = false;
                detail = "n=" + std::to_string(n) + " m=" + std::to_string(m);
                break;
            }
        }
    report(5, "divisor coefficients stabilize to ceil(m(2^n-1)/2^(n-1)) for n<=10, m<=512", ok,
           detail);
}

void criterion_6() {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 10 && ok; ++n) {
        const long period = pow2(n - 1).convert_to<long>();
        const int bound = static_cast<int>(std::max(64L, 8 * period));
        const ValueSequence seq = composite_value_sequence(n, bound);
        const GammaReport r = gamma(seq);
        const RatPair expected{Rat(pow2(n) - 1, pow2(n - 1)), Rat(0)};
        if (!(r.gamma == expected) || r.status != GammaReport::Status::kAttained ||
            r.witness != period) {
            ok = false;
            detail = "n=" + std::to_string(n);
            break;
        }
        for (long k = 1; k * period <= bound; ++k) {
            const LexValue& v = seq.value(static_cast<int>(k * period));
            if (Rat(v.first, k * period) != expected.first || v.second != 0) {
                ok = false;
                detail = "n=" + std::to_string(n) + " multiple k=" + std::to_string(k);
                break;
            }
        }
        if (center_criterion(seq).kind != CenterStatus::Kind::kHasCenter) {
            ok = false;
            detail = "n=" + std::to_string(n) + " center";
        }
    }
    report(6, "gamma of the composite sequence is ((2^n-1)/2^(n-1), 0), attained at 2^(n-1)", ok,
           detail);
}

void criterion_7() {
    const fs::path out = fs::temp_directory_path() / "exdiv_accept_cert20.json";
    const auto start = Clock::now();
    const int rc = run_cli("--output " + out.string() + " certify --n 20 2> /dev/null");
    const double elapsed = seconds_since(start);

    bool ok = (rc == 0) && elapsed < 10.0;
    std::string detail = std::to_string(elapsed) + " s";
    if (ok) {
        const auto j = nlohmann::json::parse(slurp(out));
        CertificateReport cert;
        cert.N = j.at("N").get<int>();
        cert.m = Int(j.at("m").get<long long>());
        cert.l = j.at("l").get<int>();
        for (const auto& v : j.at("intersections")) cert.intersections.emplace_back(v.get<long long>());
        for (const auto& w : j.at("distinguishing_witnesses"))
            cert.witnesses.push_back({w.at("a").get<int>(), w.at("b").get<int>(),
                                      w.at("m").get<int>(), Int(w.at("va").get<long long>()),
                                      Int(w.at("vb").get<long long>())});
        ok = cert.intersections.size() == 20 && cert.witnesses.size() == 190 &&
             verify_certificate(cert);
        detail += ", 20 positivity witnesses, " + std::to_string(cert.witnesses.size()) +
                  " pairwise witnesses";
    }
    report(7, "certify --n 20 emits a matrix-oracle-verified certificate in < 10 s", ok, detail);
}

void criterion_8() {
    std::mt19937 rng(20240801);
    bool mult_ok = true;
    for (int trial = 0; trial < 1000 && mult_ok; ++trial) {
        const GaussPolynomial f = random_gauss_polynomial(rng, 4, 3);
        const GaussPolynomial g = random_gauss_polynomial(rng, 4, 3);
        mult_ok = gauss_multiplicativity_check(f, g);
    }

    bool ext_ok = true;
    for (int trial = 0; trial < 100 && ext_ok; ++trial) {
        const int bound = std::uniform_int_distribution<int>(1, 64)(rng);
        const ValueSequence a = random_subadditive(rng, bound);
        for (int n = 0; n <= bound && ext_ok; ++n) {
            Int brute;
            bool first = true;
            for (int i = 0; i <= n; ++i) {
                const Int candidate = (i == 0 ? Int(0) : a.value(i).first) + (n - i);
                if (first || candidate < brute) {
                    brute = candidate;
                    first = false;
                }
            }
            ext_ok = (extended_ideal_value(a, n) == brute);
        }
    }
    report(8, "Gauss multiplicativity on 1000 seeded pairs; extended-ideal values match brute force",
           mult_ok && ext_ok);
}

void criterion_9() {
    bool ok = is_negative_definite(BlowupChain::standard_chain(12).intersection_form());
    for (int l = 1; l <= 12 && ok; ++l)
        ok = is_negative_definite(BlowupChain::standard_chain(l).intersection_form());
    std::mt19937 rng(20240801);
    for (int trial = 0; trial < 50 && ok; ++trial) {
        const int length = std::uniform_int_distribution<int>(1, 12)(rng);
        std::vector<int> parents(static_cast<size_t>(length), 0);
        for (int i = 1; i < length; ++i)
            parents[static_cast<size_t>(i)] = std::uniform_int_distribution<int>(0, i)(rng);
        ok = is_negative_definite(BlowupChain(std::move(parents)).intersection_form());
    }
    report(9, "principal-minor negative definiteness for standard and 50 random chains, length <= 12",
           ok);
}

void criterion_10() {
    const fs::path tsv1 = fs::temp_directory_path() / "exdiv_accept_jobs1.tsv";
    const fs::path tsv8 = fs::temp_directory_path() / "exdiv_accept_jobs8.tsv";
    const fs::path json1 = fs::temp_directory_path() / "exdiv_accept_jobs1.json";
    const fs::path json8 = fs::temp_directory_path() / "exdiv_accept_jobs8.json";
    bool ok = run_cli("--jobs 1 --output " + tsv1.string() + " verify 2> /dev/null") == 0 &&
              run_cli("--jobs 8 --output " + tsv8.string() + " verify 2> /dev/null") == 0 &&
              run_cli("--jobs 1 --format json --output " + json1.string() +
                      " verify 2> /dev/null") == 0 &&
              run_cli("--jobs 8 --format json --output " + json8.string() +
                      " verify 2> /dev/null") == 0;
    ok = ok && slurp(tsv1) == slurp(tsv8) && slurp(json1) == slurp(json8);
    report(10, "full verify reports are byte-identical for --jobs 1 and --jobs 8", ok);
}

}  // namespace

int main() {
    criteria_1_to_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::cout << (g_failures == 0 ? "all acceptance criteria passed"
                                  : std::to_string(g_failures) + " criteria failed")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
