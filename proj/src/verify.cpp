#include "verify.hpp"

#include "charpoly.hpp"
#include "combinat.hpp"
#include "digraph.hpp"
#include "error.hpp"
#include "geomoracle.hpp"
#include "levels.hpp"
#include "polyalg.hpp"
#include "roots.hpp"

#include <functional>

namespace braidlevel::verify {

namespace {

class Reporter {
public:
    explicit Reporter(std::string& out) : out_(out) {}

    void check(const std::string& what, bool ok) {
        out_ += ok ? "ok:       " : "MISMATCH: ";
        out_ += what;
        out_ += '\n';
        all_ok_ &= ok;
    }

    void skip(const std::string& what, const std::string& why) {
        out_ += "skipped:  " + what + " (" + why + ")\n";
    }

    bool all_ok() const { return all_ok_; }

private:
    std::string& out_;
    bool all_ok_ = true;
};

bool same_poly(const charpoly::CharPolyResult& a, const charpoly::CharPolyResult& b) {
    return a.poly == b.poly;
}

// Contiguous integer offsets containing 0 are exactly the [-a,b] interval
// family the closed forms cover.
std::optional<std::pair<unsigned long, unsigned long>> interval_params(
    const arrangement::ArrangementSpec& spec) {
    if (spec.offsets.empty() || !spec.offsets_integer()) return std::nullopt;
    const BigInt lo = spec.offsets.front().get_num();
    const BigInt hi = spec.offsets.back().get_num();
    if (lo > 0 || hi < 0) return std::nullopt;
    if (BigInt(spec.offsets.size()) != hi - lo + 1) return std::nullopt;
    for (std::size_t i = 0; i + 1 < spec.offsets.size(); ++i)
        if (spec.offsets[i + 1] - spec.offsets[i] != 1) return std::nullopt;
    return std::make_pair(BigInt(-lo).get_ui(), hi.get_ui());
}

} // namespace

bool verify_spec(const arrangement::ArrangementSpec& spec, const Options& opts,
                 std::string& report) {
    Reporter rep(report);
    const std::string tag = spec.to_string();

    const auto census = digraph::enumerate_census(spec, opts.cap, opts.jobs);
    const auto interval = interval_params(spec);

    // Geometric oracle against the digraph census.
    {
        const BigInt space =
            pow_int(BigInt(spec.offsets.size() + 1), digraph::pair_count(spec.n));
        const BigInt geo_cap = std::min(opts.cap, geom::default_geometric_cap());
        if (space <= geo_cap) {
            const auto geo = geom::geometric_census(spec, geo_cap, opts.jobs);
            rep.check(tag + ": digraph census == geometric census", census == geo);
        } else {
            rep.skip(tag + ": geometric census", "search space over cap");
        }
    }

    // Characteristic polynomial by every applicable route.
    const auto from_census = charpoly::charpoly_from_census(census, spec);
    try {
        const auto ff = charpoly::charpoly_finite_field(spec, opts.cap, opts.jobs);
        rep.check(tag + ": finite_field == from_census", same_poly(ff, from_census));
    } catch (const Error& e) {
        rep.skip(tag + ": finite_field", e.what());
    }
    try {
        const auto whitney = charpoly::charpoly_whitney(spec, opts.cap);
        rep.check(tag + ": whitney == from_census", same_poly(whitney, from_census));
    } catch (const Error& e) {
        rep.skip(tag + ": whitney", e.what());
    }
    if (interval) {
        const auto closed = charpoly::charpoly_closed_interval(spec.n, interval->first, interval->second);
        rep.check(tag + ": closed_ab == from_census", same_poly(closed, from_census));
    }

    // Zaslavsky evaluations against the census.
    {
        const auto [total, bounded] = charpoly::zaslavsky_counts(from_census);
        rep.check(tag + ": (-1)^n chi(-1) == census total", total == census.total());
        if (spec.n >= 1)
            rep.check(tag + ": (-1)^(n-1) chi(1) == census r_1", bounded == census.counts[1]);
    }

    // Binomial-basis coefficients are the signed level counts.
    {
        const auto bc = polyalg::to_basis(from_census.poly, polyalg::Basis::Binomial);
        bool ok = true;
        for (unsigned l = 0; l <= spec.n; ++l) {
            const Rat expect = (spec.n - l) % 2 == 0 ? Rat(census.counts[l]) : Rat(-census.counts[l]);
            const Rat got = l < bc.coeffs.size() ? bc.coeffs[l] : Rat(0);
            ok &= got == expect;
        }
        rep.check(tag + ": binomial-basis coefficients == signed level counts", ok);
    }

    // Census is invariant under negating the offsets.
    {
        const auto neg = digraph::enumerate_census(spec.negated(), opts.cap, opts.jobs);
        rep.check(tag + ": census invariant under A -> -A", census.counts == neg.counts);
    }

    // Region-by-region structure checks, capped to keep verify interactive.
    if (census.total() <= 20000) {
        bool round_trip = true;
        bool samples_ok = true;
        bool lem2_ok = true;
        const Rat bound_scale = spec.max_abs_offset();
        digraph::for_each_region(spec, opts.cap, [&](const std::vector<int>& choices, unsigned) {
            const auto d = digraph::digraph_from_choices(spec, choices);
            const auto [parts, comps] = digraph::decompose(d);
            round_trip &= digraph::compose(parts, comps, spec) == d;
            const auto x = digraph::sample_point(d);
            samples_ok &= digraph::region_to_digraph(spec, x) == d;
            for (const auto& part : parts) {
                const Rat limit = Rat(BigInt(part.size()) * BigInt(part.size())) * bound_scale;
                for (std::size_t u = 0; u < part.size(); ++u)
                    for (std::size_t v = u + 1; v < part.size(); ++v)
                        lem2_ok &= abs(x[part[u] - 1] - x[part[v] - 1]) <= limit;
            }
            return round_trip && samples_ok && lem2_ok;
        });
        rep.check(tag + ": compose/decompose round trip", round_trip);
        rep.check(tag + ": sample points return to their regions", samples_ok);
        rep.check(tag + ": strong-component diameter bound on samples", lem2_ok);
    } else {
        rep.skip(tag + ": region-by-region checks", "too many regions");
    }

    // Convolution identities need the censuses of the smaller arrangements.
    if (spec.n >= 1) {
        std::vector<digraph::LevelCensus> censuses;
        for (unsigned i = 0; i <= spec.n; ++i) {
            arrangement::ArrangementSpec sub;
            if (i == 0) {
                sub.n = 0;
            } else {
                sub = arrangement::make_spec(i, spec.offsets);
            }
            censuses.push_back(digraph::enumerate_census(sub, opts.cap, opts.jobs));
        }
        bool conv_ok = true;
        for (unsigned l = 0; l <= spec.n; ++l)
            for (unsigned k = 0; k <= l; ++k)
                conv_ok &= levels::convolution_identity_check(spec.n, l, k, censuses);
        rep.check(tag + ": r_l == binom convolution of r_k and r_(l-k), all l,k", conv_ok);

        levels::R1Table table;
        table.offsets = spec.offsets;
        table.values.assign(spec.n + 1, BigInt(0));
        for (unsigned i = 1; i <= spec.n; ++i) table.values[i] = censuses[i].counts[1];
        bool egf_ok = true;
        for (unsigned l = 1; l <= spec.n; ++l) {
            const auto series = levels::egf_truncated(l, spec.n, table);
            for (unsigned i = 0; i <= spec.n; ++i)
                egf_ok &= levels::egf_value(series, i) ==
                          (l < censuses[i].counts.size() ? censuses[i].counts[l] : BigInt(0));
        }
        rep.check(tag + ": census levels == coefficients of R_1^l", egf_ok);

        bool mult_ok = true;
        for (unsigned l = 1; l <= spec.n; ++l) {
            BigInt via_table = levels::rl_from_r1(spec.n, l, table);
            mult_ok &= via_table == censuses[spec.n].counts[l];
        }
        rep.check(tag + ": r_l == multinomial convolution of r_1", mult_ok);

        if (interval) {
            bool closed_ok = true;
            for (unsigned l = 0; l <= spec.n; ++l)
                closed_ok &= levels::rl_closed_interval(spec.n, l, interval->first, interval->second) ==
                             census.counts[l];
            rep.check(tag + ": closed level formula == census", closed_ok);
        }
    }

    return rep.all_ok();
}

bool verify_sweep(const Options& opts, std::string& report) {
    Reporter rep(report);
    const unsigned N = opts.max_n;

    // Cross-method agreement for every small offset set in [-3,3].
    {
        bool all = true;
        const long window = 3;
        std::vector<long> values;
        for (long v = -window; v <= window; ++v) values.push_back(v);
        const std::size_t subsets = std::size_t(1) << values.size();
        for (std::size_t mask = 1; mask < subsets; ++mask) {
            if (static_cast<unsigned>(__builtin_popcountll(mask)) > 4) continue;
            std::vector<Rat> offsets;
            for (std::size_t b = 0; b < values.size(); ++b)
                if (mask & (std::size_t(1) << b)) offsets.emplace_back(values[b]);
            for (unsigned n = 1; n <= N; ++n) {
                const auto spec = arrangement::make_spec(n, offsets);
                const auto census = digraph::enumerate_census(spec, opts.cap, opts.jobs);
                const auto fc = charpoly::charpoly_from_census(census, spec);
                const auto ff = charpoly::charpoly_finite_field(spec, opts.cap, opts.jobs);
                const auto wh = charpoly::charpoly_whitney(spec, opts.cap);
                all &= same_poly(fc, ff) && same_poly(fc, wh);
                const auto [total, bounded] = charpoly::zaslavsky_counts(fc);
                all &= total == census.total() && bounded == census.counts[1];
            }
        }
        rep.check("cross-method chi and Zaslavsky counts, |A|<=4 in [-3,3], n<=" +
                      std::to_string(N),
                  all);
    }

    // Digraph vs geometric census at reduced scale.
    {
        bool all = true;
        const long window = 2;
        std::vector<long> values;
        for (long v = -window; v <= window; ++v) values.push_back(v);
        const std::size_t subsets = std::size_t(1) << values.size();
        for (std::size_t mask = 1; mask < subsets; ++mask) {
            if (static_cast<unsigned>(__builtin_popcountll(mask)) > 2) continue;
            std::vector<Rat> offsets;
            for (std::size_t b = 0; b < values.size(); ++b)
                if (mask & (std::size_t(1) << b)) offsets.emplace_back(values[b]);
            for (unsigned n = 1; n <= std::min(N, 3u); ++n) {
                const auto spec = arrangement::make_spec(n, offsets);
                all &= digraph::enumerate_census(spec, opts.cap, opts.jobs) ==
                       geom::geometric_census(spec, opts.cap, opts.jobs);
            }
        }
        rep.check("digraph census == geometric census, |A|<=2 in [-2,2], n<=3", all);
    }

    // Shift identities.
    {
        bool all = true;
        for (unsigned n = 1; n <= N; ++n)
            for (unsigned long b = 0; b <= 3; ++b)
                for (unsigned long a = 0; a <= b; ++a) all &= charpoly::shift_identity_check(n, a, b);
        rep.check("interval shift identity, n<=" + std::to_string(N) + ", 0<=a<=b<=3", all);

        bool all1 = true;
        for (unsigned n = 1; n <= N; ++n)
            for (unsigned long b = 1; b <= 3; ++b) all1 &= charpoly::linial_shift_identity_check(n, b);
        rep.check("single-offset shift identity, n<=" + std::to_string(N) + ", 1<=b<=3", all1);
    }

    // Closed level formulas against the census.
    {
        bool all = true;
        for (unsigned n = 2; n <= N; ++n)
            for (unsigned long b = 0; b <= 2; ++b)
                for (unsigned long a = 0; a <= b; ++a) {
                    const auto spec =
                        arrangement::make_preset(arrangement::Preset::Interval, n, a, b);
                    const auto census = digraph::enumerate_census(spec, opts.cap, opts.jobs);
                    for (unsigned l = 0; l <= n; ++l)
                        all &= levels::rl_closed_ab(n, l, a, b) == census.counts[l];
                }
        rep.check("triple-sum level formula == census, n<=" + std::to_string(N) + ", a<=b<=2",
                  all);
    }

    // Family formulas against their interval translations.
    {
        bool all = true;
        for (unsigned n = 2; n <= N; ++n)
            for (unsigned long b = 1; b <= 2; ++b)
                for (unsigned l = 0; l <= n; ++l) {
                    all &= levels::rl_family(levels::Family::Shi, n, l, b) ==
                           levels::rl_closed_ab(n, l, b - 1, b);
                    all &= levels::rl_family(levels::Family::Catalan, n, l, b) ==
                           levels::rl_closed_ab(n, l, b, b);
                    if (b >= 2)
                        all &= levels::rl_family(levels::Family::Linial, n, l, b) ==
                               levels::rl_closed_ab(n, l, b - 2, b);
                }
        rep.check("family formulas == interval translation, n<=" + std::to_string(N), all);

        bool linial_ok = true;
        for (unsigned n = 2; n <= N; ++n) {
            const auto spec = arrangement::make_preset(arrangement::Preset::Linial, n, {}, 1);
            const auto census = digraph::enumerate_census(spec, opts.cap, opts.jobs);
            for (unsigned l = 0; l <= n; ++l)
                linial_ok &= levels::rl_family(levels::Family::Linial, n, l, 1) == census.counts[l];
        }
        rep.check("corrected Linial formula == census at b=1", linial_ok);
    }

    // Root structure and symmetry.
    {
        bool all = true;
        for (unsigned n = 2; n <= std::max(N, 5u); ++n) {
            for (unsigned long b = 0; b <= 4; ++b)
                for (unsigned long a = 0; a <= b; ++a)
                    if (b - a >= n - 1)
                        all &= roots::verify_root_structure(n, a, b, roots::RootFamily::Interval)
                                   .verdict;
            for (unsigned long b = std::max<unsigned long>(1, n >= 2 ? n - 2 : 1); b <= 4; ++b)
                all &= roots::verify_root_structure(n, 0, b, roots::RootFamily::PositiveRange)
                           .verdict;
        }
        rep.check("root structure within hypotheses, n<=" + std::to_string(std::max(N, 5u)), all);

        bool sym = true;
        for (unsigned n = 2; n <= 6; ++n)
            for (unsigned long b = 0; b <= 4; ++b) sym &= roots::symmetry_identity_check(n, b);
        rep.check("reduced polynomial symmetry about n(b+1)/2, n<=6, b<=4", sym);
    }

    // Truncated exponential-sequence identity for three families.
    {
        bool all = true;
        all &= charpoly::esa_identity_check({Rat(0), Rat(1)}, 4, opts.cap);
        all &= charpoly::esa_identity_check({Rat(-1), Rat(0), Rat(1)}, 4, opts.cap);
        all &= charpoly::esa_identity_check({Rat(1), Rat(2)}, 4, opts.cap);
        rep.check("truncated (-t)-power generating identity, N=4", all);
    }

    return rep.all_ok();
}

} // namespace braidlevel::verify
