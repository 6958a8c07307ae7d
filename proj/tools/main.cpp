// exdiv: verification front end for the blowup-chain divisor family, its
// valuation filtrations, and the distinct-components certificate.
//
// Subcommands: chain, verify, certify, gamma, gauss.
// Exit codes: 0 success, 1 check failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "exdiv/chain.hpp"
#include "exdiv/divisor.hpp"
#include "exdiv/filtration.hpp"
#include "exdiv/gauss.hpp"
#include "exdiv/sweep.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsageError = 2;

struct GlobalOptions {
    std::string output;
    std::string format = "tsv";
    int jobs = 1;
    unsigned seed = 20240801;
};

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void emit(const GlobalOptions& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + opts.output);
    out << text;
}

std::string form_tsv(const exdiv::IntMatrix& form) {
    std::ostringstream os;
    for (Eigen::Index i = 0; i < form.rows(); ++i) {
        for (Eigen::Index j = 0; j < form.cols(); ++j)
            os << form(i, j) << (j + 1 < form.cols() ? '\t' : '\n');
    }
    return os.str();
}

int cmd_chain(const GlobalOptions& opts, const std::string& preset, int length,
              const std::string& file) {
    exdiv::BlowupChain chain = [&] {
        if (!file.empty()) return exdiv::BlowupChain::from_json(load_json(file));
        if (preset != "paper" && preset != "standard") throw std::invalid_argument("unknown preset: " + preset);
        return exdiv::BlowupChain::standard_chain(length);
    }();
    const exdiv::IntMatrix& form = chain.intersection_form();
    if (opts.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (Eigen::Index i = 0; i < form.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (Eigen::Index j = 0; j < form.cols(); ++j)
                row.push_back(form(i, j).convert_to<long long>());
            rows.push_back(row);
        }
        emit(opts, nlohmann::json{{"command", "chain"},
                                  {"length", chain.length()},
                                  {"parents", chain.parents()},
                                  {"negative_definite", exdiv::is_negative_definite(form)},
                                  {"form", rows}}
                       .dump(2) +
                       "\n");
    } else {
        emit(opts, form_tsv(form));
    }
    return kOk;
}

int cmd_verify(const GlobalOptions& opts, int l_max, long m_max, const std::string& family_file) {
    exdiv::SweepConfig config;
    config.l_max = l_max;
    config.m_max = m_max;
    config.jobs = opts.jobs;
    exdiv::SweepReport report = exdiv::run_verify_sweep(config);

    if (!family_file.empty()) {
        const exdiv::QDivisor family = exdiv::qdivisor_from_json(load_json(family_file));
        const exdiv::IntMatrix form =
            exdiv::BlowupChain::standard_chain(family.level).intersection_form();
        report.checks.push_back(exdiv::family_nef_sweep(family, form, m_max));
    }

    for (const auto& c : report.checks) {
        std::cerr << c.name << ": " << (c.total - c.failures) << "/" << c.total << " passed";
        if (c.failures > 0) std::cerr << "  first counterexample " << c.first_counterexample;
        std::cerr << "\n";
    }
    std::cerr << "total comparisons: " << report.total_comparisons() << "\n";

    if (opts.format == "json") {
        nlohmann::json j = report.to_json();
        j["command"] = "verify";
        j["config"] = {{"l_max", l_max}, {"m_max", m_max}};
        emit(opts, j.dump(2) + "\n");
    } else {
        std::ostringstream rows;
        exdiv::write_equivalence_tsv(config, rows);
        emit(opts, rows.str());
    }
    return report.passed() ? kOk : kCheckFailure;
}

int cmd_certify(const GlobalOptions& opts, int n_components) {
    const exdiv::CertificateReport cert = exdiv::distinct_components_certificate(n_components);
    if (!exdiv::verify_certificate(cert)) {
        std::cerr << "certificate failed matrix-oracle re-verification\n";
        return kCheckFailure;
    }
    emit(opts, cert.to_json().dump(2) + "\n");
    std::cerr << "certified " << cert.N
              << " distinct one-dimensional components at truncation (m=" << cert.m
              << ", l=" << cert.l << "); " << cert.witnesses.size()
              << " pairwise distinguishing witnesses\n";
    return kOk;
}

int cmd_gamma(const GlobalOptions& opts, const std::string& file, int preset_n, int bound) {
    const exdiv::ValueSequence seq = [&] {
        if (!file.empty()) return exdiv::ValueSequence::from_json(load_json(file));
        if (preset_n < 1) throw std::invalid_argument("gamma: need --file or --preset-n");
        return exdiv::composite_value_sequence(preset_n, bound);
    }();
    exdiv::GammaReport report;
    try {
        report = exdiv::gamma(seq);
    } catch (const exdiv::SubadditivityViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailure;
    }
    nlohmann::json j = exdiv::to_json(report);
    const exdiv::CenterStatus center = (report.status == exdiv::GammaReport::Status::kAttained)
                                           ? exdiv::CenterStatus{exdiv::CenterStatus::Kind::kHasCenter,
                                                                 report.witness}
                                           : exdiv::CenterStatus{
                                                 exdiv::CenterStatus::Kind::kUnknownUpTo,
                                                 report.bound};
    j["command"] = "gamma";
    j["center"] = (center.kind == exdiv::CenterStatus::Kind::kHasCenter)
                      ? nlohmann::json{{"status", "has_center"}, {"witness", center.witness}}
                      : nlohmann::json{{"status", "unknown_up_to"}, {"bound", center.witness}};
    if (opts.format == "json") {
        emit(opts, j.dump(2) + "\n");
    } else {
        std::ostringstream rows;
        rows << "m\tvalue\n";
        for (const auto& [m, value] : report.trace) {
            rows << m << '\t' << exdiv::rat_to_string(value.first);
            if (report.pair_valued) rows << ',' << exdiv::rat_to_string(value.second);
            rows << '\n';
        }
        emit(opts, rows.str());
    }
    if (!opts.output.empty())
        std::cerr << "gamma = " << j["gamma"].dump() << " "
                  << (report.status == exdiv::GammaReport::Status::kAttained
                          ? "Attained(" + std::to_string(report.witness) + ")"
                          : "NotAttainedUpTo(" + std::to_string(report.bound) + ")")
                  << "\n";
    return kOk;
}

int cmd_gauss(const GlobalOptions& opts, const std::string& file, int spot_checks) {
    nlohmann::json out = nlohmann::json::array();
    if (!file.empty()) {
        const nlohmann::json doc = load_json(file);
        const nlohmann::json& polys = doc.is_array() ? doc : doc.at("polynomials");
        for (const auto& p : polys) {
            const exdiv::GaussPolynomial f = exdiv::GaussPolynomial::from_json(p);
            const auto w = exdiv::gauss_value(f);
            out.push_back({{"value", w ? nlohmann::json(w->convert_to<long long>())
                                       : nlohmann::json("infinity")},
                           {"zero_polynomial", !w.has_value()}});
        }
    }
    long long failures = 0;
    if (spot_checks > 0) {
        std::mt19937 rng(opts.seed);
        for (int i = 0; i < spot_checks; ++i) {
            const auto f = exdiv::random_gauss_polynomial(rng, 4, 3);
            const auto g = exdiv::random_gauss_polynomial(rng, 4, 3);
            if (!exdiv::gauss_multiplicativity_check(f, g)) ++failures;
        }
        if (!opts.output.empty())
            std::cerr << "multiplicativity spot-checks: " << (spot_checks - failures) << "/"
                      << spot_checks << " passed (seed " << opts.seed << ")\n";
    }
    emit(opts, nlohmann::json{{"command", "gauss"},
                              {"values", out},
                              {"spot_checks", spot_checks},
                              {"spot_check_failures", failures}}
                   .dump(2) +
                   "\n");
    return failures == 0 ? kOk : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of blowup-chain divisor families and filtrations"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--output", opts.output, "write the report to this file instead of stdout");
    app.add_option("--format", opts.format, "report format")
        ->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--jobs", opts.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);
    app.add_option("--seed", opts.seed, "seed for randomized spot-checks");

    auto* chain = app.add_subcommand("chain", "print the intersection form of a blowup chain");
    std::string chain_preset = "paper";
    int chain_length = 5;
    std::string chain_file;
    chain->add_option("--preset", chain_preset, "chain preset name");
    chain->add_option("--length", chain_length, "preset chain length")->check(CLI::PositiveNumber);
    chain->add_option("--file", chain_file, "chain description JSON");

    auto* verify = app.add_subcommand("verify", "run the divisor-family property sweeps");
    int l_max = 12;
    long m_max = 4096;
    std::string family_file;
    verify->add_option("--l-max", l_max, "maximum chain level")->check(CLI::PositiveNumber);
    verify->add_option("--m-max", m_max, "maximum multiple m")->check(CLI::PositiveNumber);
    verify->add_option("--family", family_file,
                       "JSON Q-divisor; additionally sweep nefness of its round-up family");

    auto* certify = app.add_subcommand("certify", "emit the distinct-components certificate");
    int n_components = 0;
    certify->add_option("--n", n_components, "number of components to certify (>= 2)")
        ->required();

    auto* gamma_cmd = app.add_subcommand("gamma", "infimum analysis of a value sequence");
    std::string gamma_file;
    int preset_n = 0;
    int gamma_bound = 64;
    gamma_cmd->add_option("--file", gamma_file, "value sequence JSON");
    gamma_cmd->add_option("--preset-n", preset_n, "composite-valuation preset for curve n");
    gamma_cmd->add_option("--bound", gamma_bound, "truncation bound M")
        ->check(CLI::PositiveNumber);

    auto* gauss_cmd = app.add_subcommand("gauss", "Gauss valuation of polynomials");
    std::string gauss_file;
    int spot_checks = 0;
    gauss_cmd->add_option("--file", gauss_file, "polynomials JSON");
    gauss_cmd->add_option("--pairs", spot_checks, "random multiplicativity spot-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsageError;
    }

    try {
        if (chain->parsed()) return cmd_chain(opts, chain_preset, chain_length, chain_file);
        if (verify->parsed()) return cmd_verify(opts, l_max, m_max, family_file);
        if (certify->parsed()) return cmd_certify(opts, n_components);
        if (gamma_cmd->parsed()) return cmd_gamma(opts, gamma_file, preset_n, gamma_bound);
        if (gauss_cmd->parsed()) return cmd_gauss(opts, gauss_file, spot_checks);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
