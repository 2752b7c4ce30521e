#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "boxspec/cli.hpp"

namespace {

void print_error(const boxspec::cli::CliError& e) {
    nlohmann::json j;
    j["code"] = e.exit_code;
    j["message"] = e.what();
    if (!e.pointer.empty()) j["pointer"] = e.pointer;
    std::cerr << j.dump() << "\n";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw boxspec::cli::CliError(2, "cannot open config file \"" + path + "\"");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

boxspec::Bidegree parse_pq(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw boxspec::cli::CliError(2, "--pq expects P,Q (e.g. 0,1)");
    try {
        std::size_t used = 0;
        const int p = std::stoi(text.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument("");
        const std::string rest = text.substr(comma + 1);
        const int q = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
        if (p < 0 || q < 0) throw std::invalid_argument("");
        return {p, q};
    } catch (const std::exception&) {
        throw boxspec::cli::CliError(2, "--pq expects nonnegative integers P,Q");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boxspec: spectra of the complex Laplacian on product domains"};
    app.require_subcommand(1);

    std::string config_path;
    std::string pq_text;
    boxspec::cli::CommandOptions opts;
    int q_value = 0;
    int bessel_n = 0, bessel_k = 0;
    double cutoff_override = 0.0;
    std::string format_override;

    auto add_config = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--config", config_path, "job configuration JSON file");
        if (required) o->required();
    };
    auto add_overrides = [&](CLI::App* sub) {
        sub->add_option("--cutoff", cutoff_override, "override the config cutoff");
        sub->add_option("--format", format_override, "json or csv");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "total-degree product spectrum");
    add_config(spectrum, true);
    add_overrides(spectrum);

    CLI::App* bidegree = app.add_subcommand("bidegree", "product spectrum at one bidegree");
    add_config(bidegree, true);
    add_overrides(bidegree);
    bidegree->add_option("--pq", pq_text, "target bidegree P,Q")->required();

    CLI::App* gap = app.add_subcommand("gap", "closed-range / spectral-gap verdict");
    add_config(gap, true);
    gap->add_option("--cutoff", cutoff_override, "override the config cutoff");

    CLI::App* kunneth = app.add_subcommand("kunneth", "harmonic-space dimension table");
    add_config(kunneth, true);
    kunneth->add_option("--cutoff", cutoff_override, "override the config cutoff");

    CLI::App* enumerate = app.add_subcommand("enumerate", "labeled eigenstructure of box_q");
    add_config(enumerate, true);
    add_overrides(enumerate);
    enumerate->add_option("--q", q_value, "form degree q")->required();

    CLI::App* bessel = app.add_subcommand("bessel", "positive zero j_{n,k}");
    bessel->add_option("--n", bessel_n, "Bessel order")->required();
    bessel->add_option("--k", bessel_k, "zero rank, 1-based")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the brute-force oracle checks");
    verify->add_option("--suite", opts.suite, "kronecker, fd, bessel, box0 or all");
    verify->add_option("--seed", opts.seed, "seed for the randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        boxspec::cli::CliError err(2, e.what());
        print_error(err);
        return 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();

        auto given = [&](const char* flag) {
            const CLI::Option* o = sub->get_option_no_throw(flag);
            return o != nullptr && o->count() > 0;
        };
        if (given("--pq")) opts.pq = parse_pq(pq_text);
        if (given("--q")) opts.q = q_value;
        if (given("--n")) opts.bessel_n = bessel_n;
        if (given("--k")) opts.bessel_k = bessel_k;
        if (given("--cutoff")) opts.cutoff = cutoff_override;
        if (given("--format")) opts.format = format_override;

        std::optional<boxspec::cli::JobConfig> config;
        if (given("--config")) config = boxspec::cli::parse_config(slurp(config_path));

        boxspec::cli::CommandResult result = boxspec::cli::run_command(
            name, config ? &*config : nullptr, opts);
        std::cout << result.output;
        return result.exit_code;
    } catch (const boxspec::cli::CliError& e) {
        print_error(e);
        return e.exit_code;
    } catch (const std::exception& e) {
        print_error(boxspec::cli::CliError(2, e.what()));
        return 2;
    }
}
