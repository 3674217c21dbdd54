// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every expected value and tolerance is pinned here; all checks are
// bit-exact.

#include "arrangement.hpp"
#include "charpoly.hpp"
#include "digraph.hpp"
#include "geomoracle.hpp"
#include "levels.hpp"
#include "polyalg.hpp"
#include "roots.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <vector>

using namespace braidlevel;
using arrangement::make_preset;
using arrangement::make_spec;
using arrangement::Preset;
using polyalg::RatPoly;

namespace {

std::vector<Rat> rats(std::initializer_list<long> xs) {
    std::vector<Rat> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

RatPoly make_poly(std::initializer_list<long> coeffs) {
    std::vector<Rat> v;
    for (long c : coeffs) v.emplace_back(c);
    return RatPoly(std::move(v));
}

std::vector<BigInt> counts(std::initializer_list<long> xs) {
    std::vector<BigInt> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

// Shared sweep results for criteria 2 and 9: every nonempty A in [-2,2],
// n = 1..4.
struct SweepEntry {
    arrangement::ArrangementSpec spec;
    digraph::LevelCensus census;
    charpoly::CharPolyResult chi;  // finite-field route
};

std::vector<SweepEntry>& sweep_entries() {
    static std::vector<SweepEntry> entries;
    return entries;
}

std::optional<std::pair<unsigned long, unsigned long>> interval_params(
    const arrangement::ArrangementSpec& spec) {
    const auto& offs = spec.offsets;
    if (offs.empty() || !spec.offsets_integer()) return std::nullopt;
    if (offs.front() > 0 || offs.back() < 0) return std::nullopt;
    if (BigInt(offs.size()) != offs.back().get_num() - offs.front().get_num() + 1)
        return std::nullopt;
    return std::make_pair(BigInt(-offs.front().get_num()).get_ui(),
                          offs.back().get_num().get_ui());
}

bool criterion1_worked_example() {
    const auto spec = make_spec(3, rats({1, 2}));
    const auto census = digraph::enumerate_census(spec);
    bool ok = census.counts == counts({0, 6, 6, 6}) && census.total() == 18;

    const RatPoly expected = make_poly({0, 11, -6, 1});
    ok &= charpoly::charpoly_finite_field(spec).poly == expected;
    ok &= charpoly::charpoly_whitney(spec).poly == expected;
    ok &= charpoly::charpoly_from_census(census, spec).poly == expected;
    ok &= charpoly::charpoly_from_census(geom::geometric_census(spec), spec).poly == expected;

    const auto bc = polyalg::to_basis(expected, polyalg::Basis::Binomial);
    ok &= bc.coeffs ==
          std::vector<Rat>{Rat(0), Rat(6), Rat(-6), Rat(6)};
    return ok;
}

bool criterion2_cross_method() {
    bool ok = true;
    auto& entries = sweep_entries();
    entries.clear();
    for (unsigned mask = 1; mask < 32; ++mask) {
        std::vector<Rat> offsets;
        for (unsigned bit = 0; bit < 5; ++bit)
            if (mask & (1u << bit)) offsets.emplace_back(static_cast<long>(bit) - 2);
        for (unsigned n = 1; n <= 4; ++n) {
            const auto spec = make_spec(n, offsets);
            SweepEntry entry{spec, digraph::enumerate_census(spec, digraph::default_census_cap(), 2),
                             charpoly::charpoly_finite_field(spec, charpoly::default_ff_cap(), 2)};
            const auto whitney = charpoly::charpoly_whitney(spec, BigInt(1) << 31);
            const auto from_census = charpoly::charpoly_from_census(entry.census, spec);
            ok &= entry.chi.poly == whitney.poly;
            ok &= entry.chi.poly == from_census.poly;
            if (const auto ab = interval_params(spec))
                ok &= entry.chi.poly ==
                      charpoly::charpoly_closed_interval(n, ab->first, ab->second).poly;
            entries.push_back(std::move(entry));
        }
    }
    return ok;
}

bool criterion3_digraph_vs_geometric() {
    bool ok = true;
    for (unsigned mask = 1; mask < 32; ++mask) {
        if (__builtin_popcount(mask) > 3) continue;
        std::vector<Rat> offsets;
        for (unsigned bit = 0; bit < 5; ++bit)
            if (mask & (1u << bit)) offsets.emplace_back(static_cast<long>(bit) - 2);
        for (unsigned n = 1; n <= 4; ++n) {
            const auto spec = make_spec(n, offsets);
            const auto dig = digraph::enumerate_census(spec, digraph::default_census_cap(), 2);
            const auto geo = geom::geometric_census(spec, geom::default_geometric_cap(), 2);
            ok &= dig.counts == geo.counts;
        }
    }
    return ok;
}

bool criterion4_convolutions() {
    bool ok = true;
    const unsigned N = 5;
    for (auto offsets : {rats({0, 1}), rats({-1, 0, 1}), rats({1, 2})}) {
        std::vector<digraph::LevelCensus> censuses;
        for (unsigned i = 0; i <= N; ++i) {
            arrangement::ArrangementSpec spec;
            if (i > 0) spec = make_spec(i, offsets);
            censuses.push_back(digraph::enumerate_census(spec, digraph::default_census_cap(), 4));
        }
        levels::R1Table table;
        table.offsets = offsets;
        table.values.assign(N + 1, BigInt(0));
        for (unsigned i = 1; i <= N; ++i) table.values[i] = censuses[i].counts[1];

        for (unsigned n = 0; n <= N; ++n)
            for (unsigned l = 0; l <= n; ++l) {
                ok &= levels::rl_from_r1(n, l, table) == censuses[n].counts[l];
                for (unsigned k = 0; k <= l; ++k)
                    ok &= levels::convolution_identity_check(n, l, k, censuses);
            }
        for (unsigned l = 0; l <= N; ++l) {
            const auto rl = levels::egf_truncated(l, N, table);
            for (unsigned k = 0; k <= l; ++k) {
                const auto prod = levels::egf_mul(levels::egf_truncated(k, N, table),
                                                  levels::egf_truncated(l - k, N, table), N);
                ok &= rl.coeffs == prod.coeffs;
            }
            for (unsigned n = 0; n <= N; ++n)
                ok &= levels::egf_value(rl, n) ==
                      (l < censuses[n].counts.size() ? censuses[n].counts[l] : BigInt(0));
        }
    }
    return ok;
}

bool criterion5_level_formulas() {
    bool ok = true;
    // the named values
    ok &= levels::rl_family(levels::Family::Shi, 3, 1, 1) == 4;
    ok &= levels::rl_family(levels::Family::Shi, 3, 2, 1) == 6;
    ok &= levels::rl_family(levels::Family::Shi, 3, 3, 1) == 6;
    ok &= levels::rl_family(levels::Family::Catalan, 3, 1, 1) == 12;
    ok &= levels::rl_family(levels::Family::Catalan, 3, 2, 1) == 12;
    ok &= levels::rl_family(levels::Family::Catalan, 3, 3, 1) == 6;
    ok &= levels::rl_family(levels::Family::Linial, 3, 1, 1) == 1;
    ok &= levels::rl_family(levels::Family::Linial, 3, 2, 1) == 0;
    ok &= levels::rl_family(levels::Family::Linial, 3, 3, 1) == 6;
    BigInt catalan_total(0), linial_total(0);
    for (unsigned l = 1; l <= 3; ++l) {
        catalan_total += levels::rl_family(levels::Family::Catalan, 3, l, 1);
        linial_total += levels::rl_family(levels::Family::Linial, 3, l, 1);
    }
    ok &= catalan_total == 30 && linial_total == 7;

    // the printed extended-Linial formula is non-integral here: a documented
    // finding, so its demonstration is part of the PASS
    ok &= levels::rl_linial_printed(3, 1, 1) == make_rat(20, 8);
    ok &= !is_integer(levels::rl_linial_printed(3, 1, 1));

    // Theorem 4.3 and the family formulas against censuses for n <= 4
    for (unsigned n = 2; n <= 4; ++n) {
        for (unsigned long b = 0; b <= 2; ++b)
            for (unsigned long a = 0; a <= b; ++a) {
                const auto census = digraph::enumerate_census(make_preset(Preset::Interval, n, a, b),
                                                              digraph::default_census_cap(), 2);
                for (unsigned l = 0; l <= n; ++l)
                    ok &= levels::rl_closed_ab(n, l, a, b) == census.counts[l];
            }
        for (unsigned long b = 1; b <= 2; ++b) {
            const std::map<levels::Family, Preset> presets{
                {levels::Family::Shi, Preset::Shi},
                {levels::Family::Catalan, Preset::Catalan},
                {levels::Family::Linial, Preset::Linial}};
            for (const auto& [family, preset] : presets) {
                const auto census = digraph::enumerate_census(make_preset(preset, n, {}, b),
                                                              digraph::default_census_cap(), 2);
                for (unsigned l = 0; l <= n; ++l)
                    ok &= levels::rl_family(family, n, l, b) == census.counts[l];
            }
        }
    }
    return ok;
}

bool criterion6_shift_identities() {
    bool ok = true;
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned long b = 0; b <= 3; ++b)
            for (unsigned long a = 0; a <= b; ++a) ok &= charpoly::shift_identity_check(n, a, b);
        for (unsigned long b = 1; b <= 3; ++b) ok &= charpoly::linial_shift_identity_check(n, b);
    }
    return ok;
}

bool criterion7_root_structure() {
    bool ok = true;
    for (unsigned n = 2; n <= 5; ++n) {
        for (unsigned long b = 0; b <= 4; ++b)
            for (unsigned long a = 0; a <= b; ++a)
                if (b - a >= n - 1) {
                    const auto v = roots::verify_root_structure(n, a, b, roots::RootFamily::Interval);
                    ok &= v.within_hypotheses && v.verdict;
                }
        for (unsigned long b = std::max<unsigned long>(1, n - 2); b <= 4; ++b) {
            const auto v = roots::verify_root_structure(n, 0, b, roots::RootFamily::PositiveRange);
            ok &= v.within_hypotheses && v.verdict;
        }
    }
    for (unsigned n = 2; n <= 6; ++n)
        for (unsigned long b = 0; b <= 4; ++b) ok &= roots::symmetry_identity_check(n, b);
    return ok;
}

bool criterion8_scale_smoke() {
    const auto spec = make_preset(Preset::Shi, 6, {}, 1);
    const auto census = digraph::enumerate_census(spec, digraph::default_census_cap(), 4);
    bool ok = census.total() == 16807;  // 7^5 = (n+1)^(n-1)

    const auto chi = charpoly::charpoly_finite_field(spec, BigInt("1000000000000"), 4);
    // t(t-6)^5
    const RatPoly expected =
        RatPoly::monomial(1) * make_poly({-6, 1}) * make_poly({-6, 1}) * make_poly({-6, 1}) *
        make_poly({-6, 1}) * make_poly({-6, 1});
    ok &= chi.poly == expected;
    return ok;
}

bool criterion9_zaslavsky_everywhere() {
    bool ok = !sweep_entries().empty();
    for (const auto& entry : sweep_entries()) {
        const auto [total, bounded] = charpoly::zaslavsky_counts(entry.chi);
        ok &= total == entry.census.total();
        ok &= bounded == entry.census.counts[1];
    }
    return ok;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        double budget_seconds;  // 0 = no stated budget
        std::function<bool()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "paper worked example: census (0,6,6,6), chi four ways, binomial basis", 1,
         criterion1_worked_example},
        {2, "cross-method chi equality, all nonempty A in [-2,2], n<=4", 600,
         criterion2_cross_method},
        {3, "digraph census == geometric census, |A|<=3 in [-2,2], n<=4", 900,
         criterion3_digraph_vs_geometric},
        {4, "convolution and R_l = R_k R_(l-k) identities at N=5", 0, criterion4_convolutions},
        {5, "level formulas reproduce censuses; printed Linial form non-integral", 0,
         criterion5_level_formulas},
        {6, "shift identities, n<=4, 0<=a<=b<=3 (single-offset 1<=b<=3)", 0,
         criterion6_shift_identities},
        {7, "root structure within hypotheses; symmetry identity n<=6", 0,
         criterion7_root_structure},
        {8, "Shi(1) n=6 census total 7^5 and chi = t(t-6)^5 by finite field", 60,
         criterion8_scale_smoke},
        {9, "Zaslavsky consistency of every computed chi", 0, criterion9_zaslavsky_everywhere},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = criterion.run();
        } catch (const std::exception& e) {
            note = std::string("  [exception: ") + e.what() + "]";
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && criterion.budget_seconds > 0 && secs > criterion.budget_seconds) {
            ok = false;
            note = "  [over time budget]";
        }
        std::printf("%s  %d. %s  (%.1fs)%s\n", ok ? "PASS" : "FAIL", criterion.id,
                    criterion.label, secs, note.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
