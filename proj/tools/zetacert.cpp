#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "zc/errors.hpp"

#ifndef ZETACERT_VERSION
#define ZETACERT_VERSION "0.0.0"
#endif

namespace {

using zc::cli::Json;

int emit_error(const std::string& type, const std::string& message, int code) {
    Json err{{"error", {{"type", type}, {"message", message}, {"exit_code", code}}}};
    std::cerr << err.dump(2) << '\n';
    return code;
}

std::string utc_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

Json provenance(const zc::cli::RunConfig& cfg) {
    Json p{{"tool", "zetacert"}, {"version", ZETACERT_VERSION}, {"command", cfg.command}};
    Json params;
    if (cfg.command != "criterion") params["a"] = cfg.a;
    if (cfg.r) params["r"] = *cfg.r;
    if (cfg.command == "forms") params["n"] = cfg.n;
    if (!cfg.ns.empty()) params["n_range"] = cfg.ns;
    if (!cfg.in_path.empty()) params["in"] = cfg.in_path;
    params["digits"] = cfg.digits;
    p["parameters"] = params;
    return p;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw zc::InputError("cannot write " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    zc::cli::RunConfig cfg;
    CLI::App app{"zetacert: linear forms in zeta values, saddle constants and criterion checks"};
    app.require_subcommand(1);
    std::string format = "json";
    int r_value = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--digits", cfg.digits, "working precision in decimal digits (default: ZETACERT_DIGITS)");
        sub->add_option("--out", cfg.out_path, "artifact path; <out>.meta.json receives the timestamp");
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };
    auto* forms = app.add_subcommand("forms", "exact linear forms with structural and denominator checks");
    forms->add_option("--a", cfg.a)->required();
    forms->add_option("--r", r_value)->required();
    forms->add_option("--n", cfg.n)->required();
    common(forms);

    auto* asym = app.add_subcommand("asymptotics", "saddle-point constants and assumption checks");
    asym->add_option("--a", cfg.a)->required();
    auto* asym_r = asym->add_option("--r", r_value, "defaults to r(a)");
    common(asym);

    auto* rank = app.add_subcommand("rank-bound", "rank lower bound arithmetic for the zeta family");
    rank->add_option("--a", cfg.a)->required();
    common(rank);

    auto* rates = app.add_subcommand("rates", "empirical decay rates of S_n and S''_n");
    std::string n_range;
    rates->add_option("--a", cfg.a)->required();
    rates->add_option("--r", r_value)->required();
    rates->add_option("--n", n_range, "range such as 20..40 or a comma list")->required();
    common(rates);

    auto* criterion = app.add_subcommand("criterion", "run checks from an instance file");
    criterion->add_option("--in", cfg.in_path)->required();
    common(criterion);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error("usage_error", e.what(), 2);
    }

    try {
        zc::cli::Outcome out;
        cfg.format = format == "csv" ? zc::cli::Format::Csv : zc::cli::Format::Json;
        if (forms->parsed()) {
            cfg.command = "forms";
            cfg.r = r_value;
            out = zc::cli::cmd_forms(cfg);
        } else if (asym->parsed()) {
            cfg.command = "asymptotics";
            if (asym_r->count()) cfg.r = r_value;
            out = zc::cli::cmd_asymptotics(cfg);
        } else if (rank->parsed()) {
            cfg.command = "rank-bound";
            out = zc::cli::cmd_rank_bound(cfg);
        } else if (rates->parsed()) {
            cfg.command = "rates";
            cfg.r = r_value;
            cfg.ns = zc::cli::parse_n_range(n_range);
            out = zc::cli::cmd_rates(cfg);
        } else {
            cfg.command = "criterion";
            out = zc::cli::cmd_criterion(cfg);
        }
        if (cfg.format == zc::cli::Format::Csv && out.csv.empty())
            throw zc::InputError(cfg.command + " has no CSV form");

        for (const auto& w : out.warnings) std::cerr << "warning: " << w << '\n';
        std::string text;
        if (cfg.format == zc::cli::Format::Csv) {
            text = out.csv;
        } else {
            Json doc{{"provenance", provenance(cfg)}};
            for (auto& [k, v] : out.artifact.items()) doc[k] = v;
            text = doc.dump(2) + "\n";
        }
        if (cfg.out_path.empty()) {
            std::cout << text;
        } else {
            write_text(cfg.out_path, text);
            Json meta{{"artifact", cfg.out_path}, {"created", utc_now()}, {"provenance", provenance(cfg)}};
            write_text(cfg.out_path + ".meta.json", meta.dump(2) + "\n");
        }
        return out.pass ? 0 : 1;
    } catch (const zc::InputError& e) {
        return emit_error("input_error", e.what(), 2);
    } catch (const zc::NumericError& e) {
        return emit_error("numeric_error", e.what(), 3);
    } catch (const std::exception& e) {
        return emit_error("internal_error", e.what(), 3);
    }
}
