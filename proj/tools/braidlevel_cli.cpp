// braidlevel command-line front end. Talks to the core exclusively through
// the C API in braidlevel.h.

#include <braidlevel.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyMismatch = 1;
constexpr int kExitInvalid = 2;

struct StringDeleter {
    void operator()(char* s) const { braidlevel_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct SpecDeleter {
    void operator()(braidlevel_spec* s) const { braidlevel_spec_free(s); }
};
using SpecHandle = std::unique_ptr<braidlevel_spec, SpecDeleter>;

int fail(int code) {
    std::cerr << "error: " << braidlevel_last_error() << "\n";
    return code == BRAIDLEVEL_ERR_VERIFY ? kExitVerifyMismatch : kExitInvalid;
}

SpecHandle parse_spec_or_exit(const std::string& text, int& rc) {
    braidlevel_spec* raw = nullptr;
    const int code = braidlevel_spec_parse(text.c_str(), &raw);
    if (code != BRAIDLEVEL_OK) {
        rc = fail(code);
        return nullptr;
    }
    rc = kExitOk;
    return SpecHandle(raw);
}

uint64_t cap_from_env() {
    if (const char* env = std::getenv("BRAIDLEVEL_CAP")) {
        try {
            return std::stoull(env);
        } catch (...) {
            std::cerr << "warning: ignoring malformed BRAIDLEVEL_CAP\n";
        }
    }
    return 0;  // engine defaults
}

std::string census_as_csv(const std::string& json_text) {
    const auto doc = nlohmann::json::parse(json_text);
    std::string out = "n,l,value,method\n";
    const auto& r = doc["r"];
    for (std::size_t l = 0; l < r.size(); ++l)
        out += std::to_string(doc["n"].get<unsigned>()) + "," + std::to_string(l) + "," +
               r[l].get<std::string>() + "," + doc["method"].get<std::string>() + "\n";
    return out;
}

std::string census_as_text(const std::string& json_text) {
    const auto doc = nlohmann::json::parse(json_text);
    std::string out = "census  n=" + std::to_string(doc["n"].get<unsigned>()) +
                      "  method=" + doc["method"].get<std::string>() + "\n";
    const auto& r = doc["r"];
    for (std::size_t l = 0; l < r.size(); ++l)
        out += "  r_" + std::to_string(l) + " = " + r[l].get<std::string>() + "\n";
    out += "  total = " + doc["total"].get<std::string>() + "\n";
    return out;
}

std::string charpoly_as_text(const std::string& json_text) {
    const auto doc = nlohmann::json::parse(json_text);
    std::string out = "chi coefficients (t^0 upward), method=" +
                      doc["method"].get<std::string>() + ":";
    for (const auto& c : doc["coeffs"]) out += " " + c.get<std::string>();
    out += "\n";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact region/level census, characteristic polynomials, and root "
                 "reports for deformed braid arrangements"};
    app.require_subcommand(1);

    std::string spec_text, method, format = "json";
    int level = -1;
    uint64_t cap = cap_from_env();
    int jobs = 4;
    unsigned max_n = 4;
    uint64_t max_regions = 1000;
    bool strict_441 = false;

    auto add_common = [&](CLI::App* cmd, bool spec_required) {
        auto* opt = cmd->add_option("--spec", spec_text, "arrangement spec, e.g. n=3;A={1,2}");
        if (spec_required) opt->required();
        cmd->add_option("--cap", cap, "search-space cap (0 = engine default)");
        cmd->add_option("--jobs", jobs, "worker threads");
    };

    auto* census = app.add_subcommand("census", "region counts by level");
    add_common(census, true);
    census->add_option("--method", method, "digraph | geometric");
    census->add_option("--format", format, "json | csv | text");

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
    add_common(charpoly, true);
    charpoly->add_option("--method", method, "ff | whitney | closed | census");
    charpoly->add_option("--format", format, "json | text");

    auto* levels = app.add_subcommand("levels", "level table as CSV");
    add_common(levels, true);
    levels->add_option("--method", method, "census | closed | formula");
    levels->add_option("--l", level, "restrict to one level");
    levels->add_flag("--strict-44-1", strict_441,
                     "evaluate the printed extended-Linial formula verbatim");

    auto* roots = app.add_subcommand("roots", "real-root report for chi");
    add_common(roots, true);

    auto* verify = app.add_subcommand("verify", "run the identity checks");
    add_common(verify, false);
    verify->add_option("--max-n", max_n, "sweep dimension bound (without --spec)");

    auto* sample = app.add_subcommand("sample", "one witness point per region");
    add_common(sample, true);
    sample->add_option("--max-regions", max_regions, "list at most this many regions (0 = all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help lands here too and must keep exiting 0.
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    const auto format_ok = [&](std::initializer_list<const char*> allowed) {
        for (const char* f : allowed)
            if (format == f) return true;
        std::cerr << "error: unsupported --format '" << format << "' for this verb\n";
        return false;
    };

    int rc = kExitOk;
    SpecHandle spec;
    if (!spec_text.empty()) {
        spec = parse_spec_or_exit(spec_text, rc);
        if (!spec) return rc;
    }

    char* raw = nullptr;
    if (census->parsed()) {
        if (!format_ok({"json", "csv", "text"})) return kExitInvalid;
        const int code = braidlevel_census_json(spec.get(), method.empty() ? nullptr : method.c_str(),
                                                cap, jobs, &raw);
        if (code != BRAIDLEVEL_OK) return fail(code);
        ApiString json(raw);
        if (format == "csv")
            std::cout << census_as_csv(json.get());
        else if (format == "text")
            std::cout << census_as_text(json.get());
        else
            std::cout << json.get() << "\n";
        return kExitOk;
    }
    if (charpoly->parsed()) {
        if (!format_ok({"json", "text"})) return kExitInvalid;
        const int code = braidlevel_charpoly_json(
            spec.get(), method.empty() ? nullptr : method.c_str(), cap, jobs, &raw);
        if (code != BRAIDLEVEL_OK) return fail(code);
        ApiString json(raw);
        if (format == "text")
            std::cout << charpoly_as_text(json.get());
        else
            std::cout << json.get() << "\n";
        return kExitOk;
    }
    if (levels->parsed()) {
        const int code = braidlevel_levels_csv(spec.get(), method.empty() ? nullptr : method.c_str(),
                                               level, cap, jobs, strict_441 ? 1 : 0, &raw);
        if (code != BRAIDLEVEL_OK) return fail(code);
        ApiString csv(raw);
        std::cout << csv.get();
        return kExitOk;
    }
    if (roots->parsed()) {
        const int code = braidlevel_roots_json(spec.get(), cap, jobs, &raw);
        if (code != BRAIDLEVEL_OK) return fail(code);
        ApiString json(raw);
        std::cout << json.get() << "\n";
        return kExitOk;
    }
    if (sample->parsed()) {
        const int code = braidlevel_sample_json(spec.get(), cap, max_regions, &raw);
        if (code != BRAIDLEVEL_OK) return fail(code);
        ApiString json(raw);
        std::cout << json.get() << "\n";
        return kExitOk;
    }
    if (verify->parsed()) {
        const int code = spec ? braidlevel_verify_spec(spec.get(), cap, jobs, &raw)
                              : braidlevel_verify_sweep(static_cast<int>(max_n), cap, jobs, &raw);
        ApiString report(raw);
        if (report) std::cout << report.get();
        if (code == BRAIDLEVEL_OK) {
            std::cout << "verify: all checks passed\n";
            return kExitOk;
        }
        if (code == BRAIDLEVEL_ERR_VERIFY) {
            std::cout << "verify: MISMATCH\n";
            return kExitVerifyMismatch;
        }
        return fail(code);
    }
    return kExitInvalid;
}
