#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "littlewood/demo.hpp"
#include "littlewood/scenario.hpp"
#include "littlewood/version.hpp"

namespace {

using namespace littlewood;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    Json doc;
    in >> doc;
    return doc;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

std::optional<Rational> parse_opt_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return rat_parse(text);
}

int cmd_run(const std::string& scenario_path, const std::string& eps, int ladder, int accuracy,
            int cap, bool verify, const std::string& out_path, const std::string& csv_path,
            const std::string& density, int depth) {
    RunFlags flags;
    flags.epsilon = parse_opt_rational(eps);
    if (ladder > 0) flags.ladder = ladder;
    if (accuracy > 0) flags.accuracy = accuracy;
    if (cap > 0) flags.cap = cap;
    if (depth > 0) flags.depth = depth;
    flags.grid_density = parse_opt_rational(density);
    flags.verify = verify;
    flags.want_csv = !csv_path.empty();

    RunResult result = run_scenario(load_json(scenario_path), flags);
    if (result.exit_code != kExitOk && result.document.is_null()) {
        std::cerr << "error: " << result.diagnostic << "\n";
        return result.exit_code;
    }
    std::string doc = result.document.dump(2) + "\n";
    if (!out_path.empty()) {
        write_file(out_path, doc);
        std::cout << "certificate written to " << out_path << "\n";
    } else {
        std::cout << doc;
    }
    if (result.report) {
        std::string verdict = result.report->at("verdict").get<std::string>();
        if (!out_path.empty()) {
            std::string report_path = out_path + ".report.json";
            write_file(report_path, result.report->dump(2) + "\n");
            std::cout << "report written to " << report_path << "\n";
        }
        std::cout << "verification: " << verdict << " (" << result.timing_ms << " ms)\n";
    }
    if (!csv_path.empty()) {
        if (result.csv_rows.empty()) {
            std::cerr << "error: no decay curve for this task\n";
            return kExitInputError;
        }
        write_file(csv_path, csv_text(result));
        std::cout << result.csv_kind << " written to " << csv_path << "\n";
    }
    if (result.exit_code != kExitOk) std::cerr << "error: " << result.diagnostic << "\n";
    return result.exit_code;
}

int cmd_verify(const std::string& scenario_path, const std::string& cert_path,
               const std::string& density, int depth) {
    VerifyOptions opts;
    opts.grid_density = parse_opt_rational(density);
    if (depth > 0) opts.depth = depth;
    try {
        VerificationReport report = verify_document(load_json(scenario_path), load_json(cert_path),
                                                    opts);
        std::cout << report_to_json(report).dump(2) << "\n";
        return report.verdict() ? kExitOk : kExitVerifyFailed;
    } catch (const IterationCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIterationCap;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates for the nearly-principles of real analysis"};
    app.set_version_flag("--version", std::string("littlewood ") + littlewood::kVersion);
    app.require_subcommand(1);

    std::string scenario_path, cert_path, eps, out_path, csv_path, density;
    int ladder = 0, accuracy = 0, cap = 0, depth = 0;
    bool verify = false, inject = false;

    CLI::App* run = app.add_subcommand("run", "run a scenario file and emit a certificate");
    run->add_option("scenario", scenario_path, "scenario JSON file")->required();
    run->add_option("--epsilon", eps, "override epsilon (p/q)");
    run->add_option("--ladder", ladder, "override the Egoroff ladder depth");
    run->add_option("--accuracy", accuracy, "override the Lusin accuracy N");
    run->add_option("--cap", cap, "override the iteration cap");
    run->add_flag("--verify", verify, "verify the certificate with the oracle");
    run->add_option("--out", out_path, "write the certificate document here");
    run->add_option("--csv", csv_path, "write the decay table here");
    run->add_option("--grid-density", density, "oracle grid density (p/q)");
    run->add_option("--depth", depth, "oracle tail-sampling depth");

    CLI::App* ver = app.add_subcommand("verify", "verify a certificate document");
    ver->add_option("cert", cert_path, "certificate JSON file")->required();
    ver->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    ver->add_option("--grid-density", density, "oracle grid density (p/q)");
    ver->add_option("--depth", depth, "oracle tail-sampling depth");

    CLI::App* demo = app.add_subcommand("demo", "run and verify the built-in corpus");
    demo->add_option("--grid-density", density, "oracle grid density (p/q)");
    demo->add_option("--depth", depth, "oracle tail-sampling depth");
    demo->add_flag("--inject-mutation", inject,
                   "corrupt one certificate first (verifier self-test)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return cmd_run(scenario_path, eps, ladder, accuracy, cap, verify, out_path, csv_path,
                           density, depth);
        if (ver->parsed()) return cmd_verify(scenario_path, cert_path, density, depth);
        littlewood::VerifyOptions opts;
        opts.grid_density = parse_opt_rational(density);
        if (depth > 0) opts.depth = depth;
        return littlewood::run_demo(opts, inject, std::cout);
    } catch (const littlewood::IterationCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return littlewood::kExitIterationCap;
    } catch (const littlewood::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return littlewood::kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return littlewood::kExitInputError;
    }
}
