#include "charpoly.hpp"

#include "combinat.hpp"
#include "error.hpp"

#include <algorithm>
#include <array>
#include <thread>

namespace braidlevel::charpoly {

using polyalg::RatPoly;

void validate_charpoly(const CharPolyResult& r) {
    const unsigned n = r.spec.n;
    if (r.poly.degree() != static_cast<long>(n) || r.poly.leading() != 1)
        throw Error(ErrorKind::Internal,
                    "characteristic polynomial (" + r.method + ") is not monic of degree " +
                        std::to_string(n));
    if (n >= 1 && r.poly.coeff(0) != 0)
        throw Error(ErrorKind::Internal, "t does not divide the characteristic polynomial");
    for (unsigned i = 0; i <= n; ++i) {
        const Rat c = r.poly.coeff(i);
        if (!is_integer(c))
            throw Error(ErrorKind::Internal, "non-integer characteristic coefficient");
        const bool nonneg = (n - i) % 2 == 0 ? c >= 0 : c <= 0;
        if (!nonneg)
            throw Error(ErrorKind::Internal, "characteristic coefficients do not alternate");
    }
}

namespace {

// ---------------------------------------------------------------------------
// Finite-field point counting.

// Residue subset of Z_q as a fixed-width bitset; q <= 256 covers every prime
// the cap can realistically admit.
struct ResidueMask {
    std::array<std::uint64_t, 4> w{};

    void set(unsigned bit) { w[bit >> 6] |= std::uint64_t(1) << (bit & 63); }
    unsigned popcount() const {
        unsigned c = 0;
        for (auto x : w) c += static_cast<unsigned>(__builtin_popcountll(x));
        return c;
    }
};

class PointCounter {
public:
    PointCounter(std::uint64_t q, const std::vector<long>& offsets_mod_q) : q_(q) {
        if (q > 256)
            throw Error(ErrorKind::CapExceeded,
                        "finite-field prime " + std::to_string(q) + " out of supported range");
        for (long a : offsets_mod_q) {
            const std::uint64_t residue = ((-a) % static_cast<long>(q) + q) % q;
            neg_offsets_.push_back(residue);
        }
        std::sort(neg_offsets_.begin(), neg_offsets_.end());
        neg_offsets_.erase(std::unique(neg_offsets_.begin(), neg_offsets_.end()),
                           neg_offsets_.end());
    }

    // #points of (Z_q)^n with x_i - x_j not congruent to any offset, i < j.
    // Translation invariance pins x_1 = 0 and multiplies by q; the remaining
    // coordinates are walked depth-first, pruning on the forbidden-residue
    // mask (every later vertex sees the same mask, since all pairs share A).
    BigInt count(unsigned n, unsigned jobs) const {
        if (n == 0) return 1;
        BigInt total;
        if (n == 1) {
            total = 1;
        } else {
            ResidueMask root;
            add_translates(root, 0);
            if (n == 2) {
                total = allowed_count(root);
            } else {
                std::vector<std::uint64_t> firsts = allowed_list(root);
                jobs = std::max(1u, jobs);
                std::vector<unsigned long long> partial(jobs, 0);
                auto worker = [&](unsigned wkr) {
                    for (std::size_t t = wkr; t < firsts.size(); t += jobs) {
                        ResidueMask mask = root;
                        add_translates(mask, firsts[t]);
                        partial[wkr] += dfs(mask, 3, n);
                    }
                };
                if (jobs == 1) {
                    worker(0);
                } else {
                    std::vector<std::thread> threads;
                    for (unsigned wkr = 0; wkr < jobs; ++wkr) threads.emplace_back(worker, wkr);
                    for (auto& th : threads) th.join();
                }
                unsigned long long sum = 0;
                for (auto p : partial) sum += p;
                total = BigInt(static_cast<unsigned long>(sum));
            }
        }
        return BigInt(static_cast<unsigned long>(q_)) * total;
    }

private:
    unsigned long long dfs(const ResidueMask& forbidden, unsigned level, unsigned n) const {
        if (level == n) return allowed_count(forbidden);
        unsigned long long sum = 0;
        for (std::uint64_t r : allowed_list(forbidden)) {
            ResidueMask mask = forbidden;
            add_translates(mask, r);
            sum += dfs(mask, level + 1, n);
        }
        return sum;
    }

    void add_translates(ResidueMask& mask, std::uint64_t x) const {
        // Forbid x - a for every offset a, i.e. x + (-a mod q).
        for (std::uint64_t na : neg_offsets_) {
            std::uint64_t bit = x + na;
            if (bit >= q_) bit -= q_;
            mask.set(static_cast<unsigned>(bit));
        }
    }

    unsigned allowed_count(const ResidueMask& forbidden) const {
        return static_cast<unsigned>(q_) - forbidden.popcount();
    }

    std::vector<std::uint64_t> allowed_list(const ResidueMask& forbidden) const {
        std::vector<std::uint64_t> out;
        out.reserve(allowed_count(forbidden));
        for (std::uint64_t r = 0; r < q_; ++r)
            if (!(forbidden.w[r >> 6] & (std::uint64_t(1) << (r & 63)))) out.push_back(r);
        return out;
    }

    std::uint64_t q_;
    std::vector<std::uint64_t> neg_offsets_;
};

} // namespace

CharPolyResult charpoly_finite_field(const arrangement::ArrangementSpec& spec, const BigInt& cap,
                                     unsigned jobs) {
    CharPolyResult result;
    result.method = "finite_field";
    result.spec = spec;
    if (spec.n == 0) {
        result.poly = RatPoly::constant(Rat(1));
        return result;
    }

    const auto normalized = arrangement::normalize_integer(spec);
    const auto& offsets = normalized.spec.offsets;
    std::vector<long> offs;
    offs.reserve(offsets.size());
    BigInt max_abs(0);
    for (const auto& a : offsets) {
        BigInt z = a.get_num();
        if (!z.fits_slong_p())
            throw Error(ErrorKind::CapExceeded, "offsets too large for finite-field counting");
        offs.push_back(z.get_si());
        max_abs = std::max(max_abs, BigInt(abs(z)));
    }

    // Validity bound: primes must exceed n*(2*max|a| + 2) + 1 so the residue
    // picture of the intersection data matches the rational one; one extra
    // prime re-checks the interpolation.
    const BigInt bound = BigInt(spec.n) * (2 * max_abs + 2) + 1;
    std::vector<std::uint64_t> primes;
    std::uint64_t q = bound.get_ui();
    for (unsigned i = 0; i < spec.n + 2; ++i) {
        q = next_prime_above(q);
        primes.push_back(q);
        const BigInt points = pow_int(BigInt(static_cast<unsigned long>(q)), spec.n);
        // The second bound keeps the per-prime tallies inside 64 bits.
        if (points > cap || points > (BigInt(1) << 62))
            throw Error(ErrorKind::CapExceeded,
                        "finite-field enumeration needs " + int_to_string(points) +
                            " points for q=" + std::to_string(q) + ", over cap " +
                            int_to_string(cap) + "; raise the cap or use whitney/closed");
    }

    std::vector<std::pair<Rat, Rat>> samples;
    for (unsigned i = 0; i < spec.n + 1; ++i) {
        const BigInt c = PointCounter(primes[i], offs).count(spec.n, jobs);
        samples.emplace_back(Rat(static_cast<unsigned long>(primes[i])), Rat(c));
    }
    result.poly = polyalg::lagrange_interpolate(samples);

    const std::uint64_t vq = primes[spec.n + 1];
    const BigInt expected = PointCounter(vq, offs).count(spec.n, jobs);
    if (result.poly.eval(Rat(static_cast<unsigned long>(vq))) != Rat(expected))
        throw Error(ErrorKind::Internal,
                    "finite-field verification prime disagrees with the interpolation");
    validate_charpoly(result);
    return result;
}

namespace {

// ---------------------------------------------------------------------------
// Whitney sum: union-find with rational potentials and rollback.

class OffsetDsu {
public:
    explicit OffsetDsu(unsigned n) : parent_(n + 1), size_(n + 1, 1), pot_(n + 1, Rat(0)) {
        for (unsigned v = 0; v <= n; ++v) parent_[v] = v;
    }

    // Potential of v relative to its root (x_v - x_root).
    std::pair<unsigned, Rat> find(unsigned v) const {
        Rat acc(0);
        while (parent_[v] != v) {
            acc += pot_[v];
            v = parent_[v];
        }
        return {v, acc};
    }

    // Imposes x_i - x_j = c. Returns: 1 merged, 0 already implied, -1 conflict.
    int impose(unsigned i, unsigned j, const Rat& c) {
        auto [ri, pi] = find(i);
        auto [rj, pj] = find(j);
        if (ri == rj) return (pi - pj == c) ? 0 : -1;
        if (size_[ri] < size_[rj]) {
            // attach ri under rj: x_ri - x_rj = -(pi - pj - c)
            log_.push_back(ri);
            parent_[ri] = rj;
            pot_[ri] = pj - pi + c;
            size_[rj] += size_[ri];
        } else {
            log_.push_back(rj);
            parent_[rj] = ri;
            pot_[rj] = pi - pj - c;
            size_[ri] += size_[rj];
        }
        return 1;
    }

    std::size_t mark() const { return log_.size(); }

    void rollback(std::size_t mark) {
        while (log_.size() > mark) {
            const unsigned child = log_.back();
            log_.pop_back();
            size_[parent_[child]] -= size_[child];
            parent_[child] = child;
            pot_[child] = 0;
        }
    }

private:
    std::vector<unsigned> parent_;
    std::vector<unsigned> size_;
    std::vector<Rat> pot_;
    std::vector<unsigned> log_;
};

class WhitneyAccumulator {
public:
    WhitneyAccumulator(unsigned n, const std::vector<arrangement::Hyperplane>& planes)
        : planes_(planes), dsu_(n), coeffs_(n + 1, BigInt(0)) {}

    std::vector<BigInt> run(unsigned n) {
        walk(0, 0, n);
        return std::move(coeffs_);
    }

private:
    // Every call site corresponds to one consistent subset; inconsistent
    // supersets are skipped, which drops exactly the empty-intersection
    // terms of the sum.
    void walk(std::size_t next, unsigned included, unsigned components) {
        coeffs_[components] += (included % 2 == 0) ? 1 : -1;
        for (std::size_t h = next; h < planes_.size(); ++h) {
            const auto& hp = planes_[h];
            const int rc = dsu_.impose(hp.i, hp.j, hp.offset);
            if (rc < 0) continue;
            if (rc == 0) {
                walk(h + 1, included + 1, components);
            } else {
                const std::size_t m = dsu_.mark() - 1;
                walk(h + 1, included + 1, components - 1);
                dsu_.rollback(m);
            }
        }
    }

    const std::vector<arrangement::Hyperplane>& planes_;
    OffsetDsu dsu_;
    std::vector<BigInt> coeffs_;
};

} // namespace

CharPolyResult charpoly_whitney(const arrangement::ArrangementSpec& spec, const BigInt& cap) {
    CharPolyResult result;
    result.method = "whitney";
    result.spec = spec;
    const auto planes = arrangement::hyperplanes(spec);
    const BigInt space = BigInt(1) << planes.size();
    if (space > cap)
        throw Error(ErrorKind::CapExceeded,
                    "whitney subset space 2^" + std::to_string(planes.size()) + " exceeds cap " +
                        int_to_string(cap) + "; raise the cap to proceed");
    WhitneyAccumulator acc(spec.n, planes);
    std::vector<Rat> coeffs;
    for (const auto& c : acc.run(spec.n)) coeffs.emplace_back(c);
    result.poly = RatPoly(std::move(coeffs));
    validate_charpoly(result);
    return result;
}

CharPolyResult charpoly_closed_ab(unsigned n, unsigned long a, unsigned long b) {
    if (a > b)
        throw Error(ErrorKind::InvalidInput, "closed form requires a <= b");
    CharPolyResult result;
    result.method = "closed_ab";
    result.spec = arrangement::make_preset(arrangement::Preset::Interval, n, a, b);
    if (n == 0) {
        result.poly = RatPoly::constant(Rat(1));
        return result;
    }
    if (n == 1) {
        result.poly = RatPoly::monomial(1);
        return result;
    }
    const RatPoly ff = polyalg::falling_factorial_poly(n - 1);
    RatPoly sum;
    for (unsigned long k = 1; k <= n - 1; ++k) {
        const BigInt weight = combinat::eulerian(n - 1, k);
        const Rat shift = -Rat(BigInt(a) * (n - k) + BigInt(b) * k + 1);
        sum = sum + ff.compose_affine(Rat(1), shift) * Rat(weight);
    }
    result.poly = RatPoly::monomial(1) * sum * make_rat(BigInt(1), factorial(n - 1));
    validate_charpoly(result);
    return result;
}

CharPolyResult charpoly_closed_interval(unsigned n, unsigned long a, unsigned long b) {
    if (a <= b) return charpoly_closed_ab(n, a, b);
    CharPolyResult mirrored = charpoly_closed_ab(n, b, a);
    std::vector<Rat> offsets;
    for (long v = -static_cast<long>(a); v <= static_cast<long>(b); ++v) offsets.emplace_back(v);
    mirrored.spec = arrangement::make_spec(n, std::move(offsets));
    return mirrored;
}

CharPolyResult charpoly_from_census(const digraph::LevelCensus& census,
                                    const arrangement::ArrangementSpec& spec) {
    if (census.n != spec.n)
        throw Error(ErrorKind::InvalidInput, "census and spec dimension mismatch");
    CharPolyResult result;
    result.method = "from_census";
    result.spec = spec;
    polyalg::BasisCoeffs bc;
    bc.basis = polyalg::Basis::Binomial;
    bc.coeffs.reserve(census.counts.size());
    for (std::size_t l = 0; l < census.counts.size(); ++l) {
        const bool negate = (census.n - l) % 2 == 1;
        bc.coeffs.emplace_back(negate ? -census.counts[l] : census.counts[l]);
    }
    result.poly = polyalg::from_basis(bc);
    validate_charpoly(result);
    return result;
}

CharPolyResult charpoly_from_census(const digraph::LevelCensus& census) {
    arrangement::ArrangementSpec spec;
    spec.n = census.n;
    return charpoly_from_census(census, spec);
}

std::pair<BigInt, BigInt> zaslavsky_counts(const CharPolyResult& r) {
    const Rat at_minus1 = r.poly.eval(Rat(-1));
    const Rat at_plus1 = r.poly.eval(Rat(1));
    Rat total = r.spec.n % 2 == 0 ? at_minus1 : -at_minus1;
    Rat bounded = r.spec.n % 2 == 1 ? at_plus1 : -at_plus1;
    if (!is_integer(total) || !is_integer(bounded))
        throw Error(ErrorKind::Internal, "non-integer Zaslavsky evaluation");
    return {total.get_num(), bounded.get_num()};
}

polyalg::RatPoly reduced_charpoly(const polyalg::RatPoly& chi) {
    auto [quot, rem] = chi.divmod(RatPoly::monomial(1));
    if (!rem.is_zero())
        throw Error(ErrorKind::InvalidInput, "t does not divide the polynomial");
    return quot;
}

bool shift_identity_check(unsigned n, unsigned long a, unsigned long b) {
    if (a > b)
        throw Error(ErrorKind::InvalidInput, "shift identity requires a <= b");
    if (n == 0) return true;
    const auto lhs =
        charpoly_finite_field(arrangement::make_preset(arrangement::Preset::Interval, n, a, b));
    const auto rhs =
        charpoly_whitney(arrangement::make_preset(arrangement::Preset::Interval, n, 0, b - a),
                         BigInt(1) << 62);
    const RatPoly shifted =
        reduced_charpoly(rhs.poly).compose_affine(Rat(1), -Rat(BigInt(a) * n));
    return reduced_charpoly(lhs.poly) == shifted;
}

bool linial_shift_identity_check(unsigned n, unsigned long b) {
    if (b < 1)
        throw Error(ErrorKind::InvalidInput, "positive-range identity requires b >= 1");
    if (n == 0) return true;
    std::vector<Rat> range;  // [b] means {1,...,b}
    for (unsigned long v = 1; v <= b; ++v) range.emplace_back(v);
    const auto lhs =
        charpoly_whitney(arrangement::make_spec(n, std::move(range)), BigInt(1) << 62);
    const auto rhs =
        charpoly_finite_field(arrangement::make_preset(arrangement::Preset::Interval, n, 0, b + 1));
    const RatPoly shifted = reduced_charpoly(rhs.poly).compose_affine(Rat(1), Rat(BigInt(n)));
    return reduced_charpoly(lhs.poly) == shifted;
}

namespace {

// Truncated series with polynomial (in t) coefficients.
using PolySeries = std::vector<RatPoly>;

PolySeries series_mul(const PolySeries& a, const PolySeries& b, unsigned N) {
    PolySeries out(N + 1);
    for (unsigned i = 0; i <= N; ++i)
        for (unsigned j = 0; i + j <= N; ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

} // namespace

bool esa_identity_check(const std::vector<Rat>& offsets, unsigned N, const BigInt& census_cap) {
    // r(B_n^A) totals and chi_n for n = 0..N.
    std::vector<BigInt> totals;
    PolySeries lhs(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        arrangement::ArrangementSpec spec =
            n == 0 ? arrangement::ArrangementSpec{} : arrangement::make_spec(n, offsets);
        spec.n = n;
        const auto census = digraph::enumerate_census(spec, census_cap);
        totals.push_back(census.total());
        const auto chi = n == 0 ? charpoly_from_census(census, spec)
                                : charpoly_finite_field(spec);
        lhs[n] = chi.poly * make_rat(BigInt(1), factorial(n));
    }

    // S(x) = sum (-1)^n r_n x^n / n!; log term by term, then exp(-t log S).
    std::vector<Rat> s(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        Rat c = make_rat(totals[n], factorial(n));
        s[n] = n % 2 == 0 ? c : -c;
    }
    std::vector<Rat> logs(N + 1, Rat(0));  // log S, constant term 0 since S(0)=1
    {
        std::vector<Rat> u(s);
        u[0] = 0;
        std::vector<Rat> upow(N + 1, Rat(0));
        upow[0] = 1;  // u^0
        for (unsigned k = 1; k <= N; ++k) {
            // upow <- upow * u, truncated
            std::vector<Rat> next(N + 1, Rat(0));
            for (unsigned i = 0; i <= N; ++i)
                for (unsigned j = 0; i + j <= N; ++j) next[i + j] += upow[i] * u[j];
            upow = std::move(next);
            const Rat sign = k % 2 == 1 ? Rat(1) : Rat(-1);
            for (unsigned i = 0; i <= N; ++i) logs[i] += sign * upow[i] / Rat(static_cast<long>(k));
        }
    }

    // exp(P) with P = -t * log S (zero constant term).
    PolySeries p(N + 1);
    for (unsigned i = 0; i <= N; ++i) p[i] = RatPoly::monomial(1, -logs[i]);
    PolySeries rhs(N + 1);
    rhs[0] = RatPoly::constant(Rat(1));
    PolySeries ppow(N + 1);
    ppow[0] = RatPoly::constant(Rat(1));
    for (unsigned k = 1; k <= N; ++k) {
        ppow = series_mul(ppow, p, N);
        for (unsigned i = 0; i <= N; ++i)
            rhs[i] = rhs[i] + ppow[i] * make_rat(BigInt(1), factorial(k));
    }

    for (unsigned i = 0; i <= N; ++i)
        if (!(lhs[i] == rhs[i])) return false;
    return true;
}

} // namespace braidlevel::charpoly
