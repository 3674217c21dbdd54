#include "roots.hpp"

#include "arrangement.hpp"
#include "charpoly.hpp"
#include "error.hpp"

#include <algorithm>

namespace braidlevel::roots {

using polyalg::RatPoly;

namespace {

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    RatPoly square_free = p;
    const RatPoly g = polyalg::poly_gcd(p, p.derivative());
    if (g.degree() > 0) square_free = p.divmod(g).first;
    std::vector<RatPoly> chain{square_free, square_free.derivative()};
    while (!chain.back().is_zero()) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        chain.push_back(-(a.divmod(b).second));
    }
    chain.pop_back();
    return chain;
}

int sign_at(const RatPoly& f, const std::optional<Rat>& x, bool plus_infinity) {
    if (f.is_zero()) return 0;
    if (!x) {
        const int lead = sgn(f.leading());
        if (plus_infinity) return lead;
        return f.degree() % 2 == 0 ? lead : -lead;
    }
    return sgn(f.eval(*x));
}

unsigned variations(const std::vector<RatPoly>& chain, const std::optional<Rat>& x,
                    bool plus_infinity) {
    unsigned var = 0;
    int prev = 0;
    for (const auto& f : chain) {
        const int s = sign_at(f, x, plus_infinity);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

} // namespace

unsigned sturm_count(const RatPoly& p, const std::optional<Rat>& lo,
                     const std::optional<Rat>& hi) {
    if (p.is_zero())
        throw Error(ErrorKind::InvalidInput, "Sturm count of the zero polynomial");
    if (lo && hi && !(*lo < *hi)) return 0;
    const auto chain = sturm_chain(p);
    const unsigned vlo = variations(chain, lo, false);
    const unsigned vhi = variations(chain, hi, true);
    return vlo - vhi;
}

namespace {

std::vector<BigInt> divisors(BigInt z) {
    z = abs(z);
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= z; ++d) {
        if (z % d == 0) {
            out.push_back(d);
            out.push_back(z / d);
        }
    }
    return out;
}

} // namespace

std::vector<std::pair<Rat, unsigned>> rational_roots(const polyalg::RatPoly& p) {
    if (p.is_zero())
        throw Error(ErrorKind::InvalidInput, "rational roots of the zero polynomial");
    std::vector<std::pair<Rat, unsigned>> roots;
    RatPoly work = p;

    // Strip t^k first so the constant term is usable for candidates.
    unsigned mult0 = 0;
    while (work.degree() >= 1 && work.coeff(0) == 0) {
        work = work.divmod(RatPoly::monomial(1)).first;
        ++mult0;
    }
    if (mult0 > 0) roots.emplace_back(Rat(0), mult0);
    if (work.degree() >= 1) {
        // Clear denominators: candidates are p/q with p | constant, q | lead.
        BigInt denom_lcm(1);
        for (const auto& c : work.coeffs()) denom_lcm = lcm(denom_lcm, c.get_den());
        const Rat scale(denom_lcm);
        BigInt constant = Rat(work.coeff(0) * scale).get_num();
        BigInt leading = Rat(work.leading() * scale).get_num();
        std::vector<Rat> candidates;
        for (const auto& pdiv : divisors(constant))
            for (const auto& qdiv : divisors(leading)) {
                const Rat r = make_rat(pdiv, qdiv);
                candidates.push_back(r);
                candidates.push_back(-r);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& r : candidates) {
            unsigned mult = 0;
            const RatPoly factor(std::vector<Rat>{-r, Rat(1)});
            while (work.degree() >= 1 && work.eval(r) == 0) {
                work = work.divmod(factor).first;
                ++mult;
            }
            if (mult > 0) roots.emplace_back(r, mult);
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

RootReport analyze(const polyalg::RatPoly& p) {
    RootReport report;
    report.poly = p;
    report.real_root_count = p.degree() < 1 ? 0 : sturm_count(p, std::nullopt, std::nullopt);
    report.certified_roots = rational_roots(p);
    if (p.degree() >= 1) {
        std::optional<Rat> prev;
        for (const auto& [root, mult] : report.certified_roots) {
            report.interval_counts.push_back({prev, root, sturm_count(p, prev, root)});
            prev = root;
        }
        report.interval_counts.push_back(
            {prev, std::nullopt, sturm_count(p, prev, std::nullopt)});
    }
    return report;
}

RootVerdict verify_root_structure(unsigned n, unsigned long a, unsigned long b,
                                  RootFamily family) {
    if (n < 2)
        throw Error(ErrorKind::InvalidInput, "root structure check requires n >= 2");
    RatPoly chi;
    Rat second_root;
    bool within;
    if (family == RootFamily::Interval) {
        if (a > b) throw Error(ErrorKind::InvalidInput, "interval family requires a <= b");
        chi = charpoly::charpoly_closed_ab(n, a, b).poly;
        second_root = make_rat(BigInt(n) * (a + b + 1), BigInt(2));
        within = b >= a + n - 1;
    } else {
        if (b < 1) throw Error(ErrorKind::InvalidInput, "positive-range family requires b >= 1");
        std::vector<Rat> range;
        for (unsigned long v = 1; v <= b; ++v) range.emplace_back(v);
        // The subset-space precheck is far above what the consistent-subset
        // walk actually visits at this scale; lift it for the sweep sizes.
        chi = charpoly::charpoly_whitney(arrangement::make_spec(n, std::move(range)),
                                         BigInt(1) << 62)
                  .poly;
        second_root = make_rat(BigInt(n) * b, BigInt(2));
        within = b + 2 >= n;
    }

    RootVerdict out;
    out.report = analyze(chi);
    out.within_hypotheses = within;
    if (!within) out.note = "outside theorem hypotheses";

    unsigned mult0 = 0;
    RatPoly rest = chi;
    while (rest.degree() >= 1 && rest.coeff(0) == 0) {
        rest = rest.divmod(RatPoly::monomial(1)).first;
        ++mult0;
    }
    if (n % 2 == 1) {
        out.verdict = mult0 == 1 && out.report.real_root_count == 1 &&
                      sturm_count(rest, std::nullopt, std::nullopt) == 0;
    } else {
        unsigned mult2 = 0;
        const RatPoly factor(std::vector<Rat>{-second_root, Rat(1)});
        while (rest.degree() >= 1 && rest.eval(second_root) == 0) {
            rest = rest.divmod(factor).first;
            ++mult2;
        }
        out.verdict = mult0 == 1 && mult2 == 1 && out.report.real_root_count == 2 &&
                      (rest.degree() < 1 || sturm_count(rest, std::nullopt, std::nullopt) == 0);
    }
    return out;
}

bool symmetry_identity_check(unsigned n, unsigned long b) {
    if (n < 1)
        throw Error(ErrorKind::InvalidInput, "symmetry check requires n >= 1");
    const RatPoly reduced =
        charpoly::reduced_charpoly(charpoly::charpoly_closed_ab(n, 0, b).poly);
    const RatPoly mirrored = reduced.compose_affine(Rat(-1), Rat(BigInt(n) * (b + 1)));
    return n % 2 == 1 ? mirrored == reduced : mirrored == -reduced;
}

} // namespace braidlevel::roots
