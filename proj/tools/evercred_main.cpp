// evercred: scenario runner and public verifier for the commitment-augmented
// anonymous-credential voting simulation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "evercred/scenario.hpp"

using namespace evercred;

static std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

static void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

int main(int argc, char** argv) {
    CLI::App app{"commitment-augmented anonymous-credential e-voting simulator"};
    app.require_subcommand(1);

    // --- run ----------------------------------------------------------------
    auto* run = app.add_subcommand("run", "run a scenario end to end");
    std::string scenario = "honest";
    std::string config_path, out_path, config_dump_path;
    size_t voters = 10, choices = 3;
    uint64_t seed = 1;
    bool baseline = false;
    std::string mode = "direct", twofa = "off", revote = "forbidden", profile = "test-small";
    run->add_option("scenario", scenario,
                    "honest | clash | cross-voting | stuffing-matrix | everlasting-privacy");
    run->add_option("--config", config_path, "scenario definition file (JSON)");
    auto* opt_voters = run->add_option("--voters", voters, "number of voters");
    auto* opt_choices = run->add_option("--choices", choices, "codebook size");
    auto* opt_mode = run->add_option("--mode", mode, "direct | passcode")
                         ->check(CLI::IsMember({"direct", "passcode"}));
    auto* opt_2fa = run->add_option("--2fa", twofa, "on | off")
                        ->check(CLI::IsMember({"on", "off"}));
    auto* opt_revote = run->add_option("--revote", revote, "forbidden | last-counts")
                           ->check(CLI::IsMember({"forbidden", "last-counts"}));
    auto* opt_profile = run->add_option("--profile", profile, "test-small | production")
                            ->check(CLI::IsMember({"test-small", "production"}));
    auto* opt_seed = run->add_option("--seed", seed, "deterministic seed");
    auto* opt_baseline = run->add_flag("--baseline-anon-creds", baseline,
                                       "plain anonymous credentials (no reference check)");
    run->add_option("--out", out_path, "also write the report to this file");
    run->add_option("--dump-config", config_dump_path, "write the effective config as JSON");

    // --- verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "publicly verify registry + ballot box files");
    std::string registry_path, ballots_path, verify_out;
    bool allow_revote = false;
    verify->add_option("--registry", registry_path, "registry board export")->required();
    verify->add_option("--ballots", ballots_path, "ballot box export")->required();
    verify->add_flag("--allow-revote", allow_revote, "skip the duplicate-reference check");
    verify->add_option("--out", verify_out, "also write the report to this file");

    // --- scan -----------------------------------------------------------------
    auto* scan = app.add_subcommand("scan", "scan published artifacts for identity leakage");
    std::string scan_registry, scan_ballots;
    std::vector<std::string> scan_vids;
    std::string scan_profile = "test-small";
    scan->add_option("--registry", scan_registry)->required();
    scan->add_option("--ballots", scan_ballots)->required();
    scan->add_option("--vids", scan_vids, "voter identifiers to scan for")->delimiter(',');
    scan->add_option("--profile", scan_profile, "test-small | production");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            ScenarioConfig config;
            if (!config_path.empty()) config = ScenarioConfig::from_json(read_file(config_path));
            if (run->count("scenario") || config_path.empty()) config.scenario = scenario;
            if (*opt_voters) config.voters = voters;
            if (*opt_choices) config.choices = choices;
            if (*opt_mode)
                config.mode =
                    mode == "passcode" ? CredentialMode::passcode : CredentialMode::direct;
            if (*opt_2fa) config.second_factor = twofa == "on";
            if (*opt_revote)
                config.revote = revote == "last-counts" ? RevotePolicy::last_counts
                                                        : RevotePolicy::forbidden;
            if (*opt_profile) config.profile = profile_from_name(profile);
            if (*opt_seed) config.seed = seed;
            if (*opt_baseline) config.baseline = baseline;
            ScenarioResult result = run_scenario(config);
            std::cout << result.report;
            if (!out_path.empty()) write_file(out_path, result.report);
            if (!config_dump_path.empty()) write_file(config_dump_path, config.to_json());
            return result.ok ? 0 : 1;
        }
        if (*verify) {
            VerificationReport report = verify_eligibility(
                read_file(registry_path), read_file(ballots_path), !allow_revote);
            std::cout << report.to_text();
            if (!verify_out.empty()) write_file(verify_out, report.to_text());
            return report.clean() ? 0 : 1;
        }
        if (*scan) {
            GroupParams params = profile_params(profile_from_name(scan_profile));
            LeakReport report = scan_privacy_leakage(read_file(scan_registry),
                                                     read_file(scan_ballots), scan_vids, {},
                                                     params);
            std::cout << report.to_text();
            return report.clean() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
