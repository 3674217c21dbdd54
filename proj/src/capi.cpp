#include "braidlevel.h"

#include "arrangement.hpp"
#include "charpoly.hpp"
#include "digraph.hpp"
#include "error.hpp"
#include "geomoracle.hpp"
#include "jsonio.hpp"
#include "levels.hpp"
#include "roots.hpp"
#include "verify.hpp"

#include <cstring>

using namespace braidlevel;

extern "C" struct braidlevel_spec {
    arrangement::ArrangementSpec spec;
};

namespace {

thread_local std::string g_last_error;

int code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidInput: return BRAIDLEVEL_ERR_INVALID;
    case ErrorKind::CapExceeded: return BRAIDLEVEL_ERR_CAP;
    case ErrorKind::Internal: return BRAIDLEVEL_ERR_INTERNAL;
    }
    return BRAIDLEVEL_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
int guard(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        g_last_error = e.what();
        return code_for(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return BRAIDLEVEL_ERR_INTERNAL;
    }
}

BigInt cap_or(uint64_t cap, BigInt fallback) {
    return cap == 0 ? fallback : BigInt(static_cast<unsigned long>(cap));
}

unsigned jobs_or(int jobs) { return jobs <= 0 ? 1u : static_cast<unsigned>(jobs); }

digraph::LevelCensus census_for(const arrangement::ArrangementSpec& spec,
                                const std::string& method, uint64_t cap, int jobs) {
    if (method == "geometric")
        return geom::geometric_census(spec, cap_or(cap, geom::default_geometric_cap()),
                                      jobs_or(jobs));
    if (method == "digraph" || method.empty())
        return digraph::enumerate_census(spec, cap_or(cap, digraph::default_census_cap()),
                                         jobs_or(jobs));
    throw Error(ErrorKind::InvalidInput, "unknown census method '" + method + "'");
}

charpoly::CharPolyResult charpoly_for(const arrangement::ArrangementSpec& spec,
                                      const std::string& method, uint64_t cap, int jobs) {
    if (method == "ff" || method == "finite_field")
        return charpoly::charpoly_finite_field(spec, cap_or(cap, charpoly::default_ff_cap()),
                                               jobs_or(jobs));
    if (method == "whitney")
        return charpoly::charpoly_whitney(spec, cap_or(cap, charpoly::default_whitney_cap()));
    if (method == "closed") {
        const auto& offs = spec.offsets;
        if (offs.empty() || !spec.offsets_integer() || offs.front() > 0 || offs.back() < 0 ||
            BigInt(offs.size()) != offs.back().get_num() - offs.front().get_num() + 1)
            throw Error(ErrorKind::InvalidInput,
                        "closed form needs contiguous integer offsets containing 0");
        return charpoly::charpoly_closed_interval(spec.n, BigInt(-offs.front().get_num()).get_ui(),
                                            offs.back().get_num().get_ui());
    }
    if (method == "census") {
        const auto census =
            digraph::enumerate_census(spec, cap_or(cap, digraph::default_census_cap()),
                                      jobs_or(jobs));
        return charpoly::charpoly_from_census(census, spec);
    }
    if (method.empty()) {
        // Default: finite field, falling back to the census route when the
        // point count is capped out.
        try {
            return charpoly::charpoly_finite_field(spec, cap_or(cap, charpoly::default_ff_cap()),
                                                   jobs_or(jobs));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CapExceeded) throw;
            return charpoly_for(spec, "census", cap, jobs);
        }
    }
    throw Error(ErrorKind::InvalidInput, "unknown charpoly method '" + method + "'");
}

} // namespace

extern "C" {

const char* braidlevel_version(void) { return "1.0.0"; }

const char* braidlevel_last_error(void) { return g_last_error.c_str(); }

void braidlevel_string_free(char* s) { std::free(s); }

int braidlevel_spec_parse(const char* text, braidlevel_spec** out) {
    if (!text || !out) {
        g_last_error = "null argument";
        return BRAIDLEVEL_ERR_NULLARG;
    }
    return guard([&] {
        auto parsed = arrangement::parse_spec(text);
        *out = new braidlevel_spec{std::move(parsed)};
        return BRAIDLEVEL_OK;
    });
}

void braidlevel_spec_free(braidlevel_spec* spec) { delete spec; }

int braidlevel_spec_to_string(const braidlevel_spec* spec, char** out) {
    if (!spec || !out) {
        g_last_error = "null argument";
        return BRAIDLEVEL_ERR_NULLARG;
    }
    *out = dup_string(spec->spec.to_string());
    return BRAIDLEVEL_OK;
}

int braidlevel_spec_dimension(const braidlevel_spec* spec) {
    return spec ? static_cast<int>(spec->spec.n) : -1;
}

int braidlevel_census_json(const braidlevel_spec* spec, const char* method, uint64_t cap,
                           int jobs, char** json_out) {
    if (!spec || !json_out) {
        g_last_error = "null argument";
        return BRAIDLEVEL_ERR_NULLARG;
    }
    return guard([&] {
        const auto census = census_for(spec->spec, method ? method : "", cap, jobs);
        *json_out = dup_string(io::census_json(census, spec->spec));
        return BRAIDLEVEL_OK;
    });
}

int braidlevel_charpoly_json(const braidlevel_spec* spec, const char* method, uint64_t cap,
                             int jobs, char** json_out) {
    if (!spec || !json_out) {
        g_last_error = "null argument";
        return BRAIDLEVEL_ERR_NULLARG;
    }
    return guard([&] {
        const auto result = charpoly_for(spec->spec, method ? method : "", cap, jobs);
        *json_out = dup_string(io::charpoly_json(result));
        return BRAIDLEVEL_OK;
    });
}

int braidlevel_levels_csv(const braidlevel_spec* spec, const char* method, int level,
                          uint64_t cap, int jobs, int strict_441, char** csv_out) {
    if (!spec || !csv_out) {
        g_last_error = "null argument";
        return BRAIDLEVEL_ERR_NULLARG;
    }
    return guard([&] {
        const auto& sp = spec->spec;
        const std::string want = method ? method : "";
        std::vector<io::LevelRow> rows;
        auto want_method = [&](const char* name) { return want.empty() || want == name; };
        auto add_level = [&](unsigned l, const std::string& value, const char* name) {
            if (level < 0 || static_cast<unsigned>(level) == l)
                rows.push_back({sp.n, l, value, name});
        };

        if (want_method("census")) {
            const auto census = census_for(sp, "digraph", cap, jobs);
            for (unsigned l = 0; l <= sp.n; ++l)
                add_level(l, int_to_string(census.counts[l]), "census");
        }
        const auto& offs = sp.offsets;
        const bool interval_like = !offs.empty() && sp.offsets_integer() && offs.front() <= 0 &&
                                   offs.back() >= 0 &&
                                   BigInt(offs.size()) ==
                                       offs.back().get_num() - offs.front().get_num() + 1;
        if (want_method("closed") && interval_like) {
            const unsigned long a = BigInt(-offs.front().get_num()).get_ui();
            const unsigned long b = offs.back().get_num().get_ui();
            for (unsigned l = 0; l <= sp.n; ++l)
                add_level(l, int_to_string(levels::rl_closed_interval(sp.n, l, a, b)), "closed");
        }
        if (want_method("formula") && sp.preset_tag && sp.preset_b) {
            const unsigned long b = *sp.preset_b;
            std::optional<levels::Family> family;
            switch (*sp.preset_tag) {
            case arrangement::Preset::Shi: family = levels::Family::Shi; break;
            case arrangement::Preset::Catalan: family = levels::Family::Catalan; break;
            case arrangement::Preset::Linial: family = levels::Family::Linial; break;
            default: break;
            }
            if (family) {
                for (unsigned l = 0; l <= sp.n; ++l) {
                    if (strict_441 && *family == levels::Family::Linial)
                        add_level(l, rat_to_string(levels::rl_linial_printed(sp.n, l, b)),
                                  "formula-printed");
                    else
                        add_level(l, int_to_string(levels::rl_family(*family, sp.n, l, b)),
                                  "formula");
                }
            }
        }
        if (rows.empty())
            throw Error(ErrorKind::InvalidInput,
                        "no applicable level method for this spec/selection");
        *csv_out = dup_string(io::levels_csv(rows));
        return BRAIDLEVEL_OK;
    });
}

int braidlevel_roots_json(const braidlevel_spec* spec, uint64_t cap, int jobs, char** json_out) {
    if (!spec || !json_out) {
        g_last_error = "null argument";
        return BRAIDLEVEL_ERR_NULLARG;
    }
    return guard([&] {
        const auto chi = charpoly_for(spec->spec, "", cap, jobs);
        const auto report = roots::analyze(chi.poly);
        *json_out = dup_string(io::roots_json(spec->spec, report));
        return BRAIDLEVEL_OK;
    });
}

int braidlevel_sample_json(const braidlevel_spec* spec, uint64_t cap, uint64_t max_regions,
                           char** json_out) {
    if (!spec || !json_out) {
        g_last_error = "null argument";
        return BRAIDLEVEL_ERR_NULLARG;
    }
    return guard([&] {
        const auto& sp = spec->spec;
        std::vector<io::SampleRegion> regions;
        bool truncated = false;
        BigInt total(0);
        digraph::for_each_region(sp, cap_or(cap, digraph::default_census_cap()),
                                 [&](const std::vector<int>& choices, unsigned lvl) {
                                     total += 1;
                                     if (max_regions != 0 && regions.size() >= max_regions) {
                                         truncated = true;
                                         return true;  // keep counting the total
                                     }
                                     const auto d = digraph::digraph_from_choices(sp, choices);
                                     regions.push_back({choices, lvl, digraph::sample_point(d)});
                                     return true;
                                 });
        *json_out = dup_string(io::sample_json(sp, regions, total, truncated));
        return BRAIDLEVEL_OK;
    });
}

int braidlevel_verify_spec(const braidlevel_spec* spec, uint64_t cap, int jobs,
                           char** report_out) {
    if (!spec || !report_out) {
        g_last_error = "null argument";
        return BRAIDLEVEL_ERR_NULLARG;
    }
    return guard([&] {
        verify::Options opts;
        opts.cap = cap_or(cap, opts.cap);
        opts.jobs = jobs_or(jobs);
        std::string report;
        const bool ok = verify::verify_spec(spec->spec, opts, report);
        *report_out = dup_string(report);
        if (!ok) {
            g_last_error = "verification found mismatches";
            return BRAIDLEVEL_ERR_VERIFY;
        }
        return BRAIDLEVEL_OK;
    });
}

int braidlevel_verify_sweep(int max_n, uint64_t cap, int jobs, char** report_out) {
    if (!report_out) {
        g_last_error = "null argument";
        return BRAIDLEVEL_ERR_NULLARG;
    }
    return guard([&] {
        verify::Options opts;
        opts.cap = cap_or(cap, opts.cap);
        opts.jobs = jobs_or(jobs);
        if (max_n > 0) opts.max_n = static_cast<unsigned>(max_n);
        std::string report;
        const bool ok = verify::verify_sweep(opts, report);
        *report_out = dup_string(report);
        if (!ok) {
            g_last_error = "verification found mismatches";
            return BRAIDLEVEL_ERR_VERIFY;
        }
        return BRAIDLEVEL_OK;
    });
}

} // extern "C"
