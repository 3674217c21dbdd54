#include "levels.hpp"

#include "charpoly.hpp"
#include "combinat.hpp"
#include "error.hpp"

namespace braidlevel::levels {

R1Table make_r1_table(const std::vector<Rat>& offsets, unsigned N, const BigInt& cap,
                      unsigned jobs) {
    R1Table table;
    table.offsets = offsets;
    table.values.assign(N + 1, BigInt(0));
    bool integer_offsets = true;
    for (const auto& a : offsets) integer_offsets &= is_integer(a);
    for (unsigned n = 1; n <= N; ++n) {
        if (n == 1) {
            table.values[1] = 1;
            continue;
        }
        const auto spec = arrangement::make_spec(n, offsets);
        const auto chi = integer_offsets
                             ? charpoly::charpoly_finite_field(spec, cap, jobs)
                             : charpoly::charpoly_from_census(digraph::enumerate_census(spec, cap, jobs),
                                                              spec);
        table.values[n] = charpoly::zaslavsky_counts(chi).second;
    }
    return table;
}

BigInt rl_from_r1(unsigned n, unsigned l, const R1Table& table) {
    if (n > table.max_n() && n > 0)
        throw Error(ErrorKind::InvalidInput,
                    "r1 table covers n <= " + std::to_string(table.max_n()) +
                        ", needed " + std::to_string(n));
    BigInt sum(0);
    combinat::for_each_composition(n, l, [&](const std::vector<unsigned long>& parts) {
        BigInt term = combinat::multinomial(n, parts);
        for (unsigned long p : parts) term *= table.values[p];
        sum += term;
        return true;
    });
    return sum;
}

namespace {

BigInt census_count(const digraph::LevelCensus& c, unsigned l) {
    return l < c.counts.size() ? c.counts[l] : BigInt(0);
}

} // namespace

bool convolution_identity_check(unsigned n, unsigned l, unsigned k,
                                const std::vector<digraph::LevelCensus>& censuses) {
    if (k > l)
        throw Error(ErrorKind::InvalidInput, "convolution requires k <= l");
    if (censuses.size() <= n)
        throw Error(ErrorKind::InvalidInput, "censuses for 0..n required");
    for (unsigned i = 0; i <= n; ++i)
        if (censuses[i].n != i)
            throw Error(ErrorKind::InvalidInput, "censuses must be indexed by n");
    BigInt rhs(0);
    for (unsigned i = 0; i <= n; ++i)
        rhs += combinat::binomial(n, i) * census_count(censuses[i], k) *
               census_count(censuses[n - i], l - k);
    return census_count(censuses[n], l) == rhs;
}

namespace {

// Shared n <= 1 conventions: B_0 has one region of level 0, B_1 one region
// of level 1; every closed formula below has an empty or degenerate sum
// there.
bool small_n_convention(unsigned n, unsigned l, BigInt& out) {
    if (n == 0) {
        out = l == 0 ? 1 : 0;
        return true;
    }
    if (n == 1) {
        out = l == 1 ? 1 : 0;
        return true;
    }
    return false;
}

Rat sign_pm(unsigned parity) { return parity % 2 == 0 ? Rat(1) : Rat(-1); }

} // namespace

BigInt rl_closed_ab(unsigned n, unsigned l, unsigned long a, unsigned long b) {
    if (a > b)
        throw Error(ErrorKind::InvalidInput, "closed form requires a <= b");
    BigInt small;
    if (small_n_convention(n, l, small)) return small;
    if (l == 0 || l > n) return 0;

    Rat sum(0);
    for (unsigned long k = 1; k <= n - 1; ++k) {
        const BigInt base = BigInt(a) * (n - k) + BigInt(b) * k + 1;
        const BigInt eul = combinat::eulerian(n - 1, k);
        if (eul == 0) continue;
        for (unsigned long j = 0; j <= n - 1; ++j) {
            const BigInt s2 = combinat::stirling_second(j + 1, l);
            if (s2 == 0) continue;
            BigInt inner(0);
            for (unsigned long i = j; i <= n - 1; ++i)
                inner += combinat::binomial(i, j) * combinat::stirling_first_unsigned(n - 1, i) *
                         pow_int(base, i - j);
            // (-1)^{l-1-j} == (-1)^{l+1+j}
            sum += sign_pm(l + 1 + j) * Rat(eul * s2 * inner);
        }
    }
    sum *= make_rat(factorial(l), factorial(n - 1));
    if (!is_integer(sum) || sum < 0)
        throw Error(ErrorKind::Internal, "level-count closed form produced a non-count");
    return sum.get_num();
}

BigInt rl_closed_interval(unsigned n, unsigned l, unsigned long a, unsigned long b) {
    return a <= b ? rl_closed_ab(n, l, a, b) : rl_closed_ab(n, l, b, a);
}

Rat rl_linial_printed(unsigned n, unsigned l, unsigned long b) {
    if (b < 1)
        throw Error(ErrorKind::InvalidInput, "family formulas require b >= 1");
    BigInt small;
    if (small_n_convention(n, l, small)) return Rat(small);
    Rat sum(0);
    for (unsigned long j = 0; j <= n - 1; ++j) {
        const BigInt s2 = combinat::stirling_second(j + 1, l);
        if (s2 == 0) continue;
        BigInt inner(0);
        for (unsigned long i = 0; i <= n; ++i)
            inner += combinat::binomial(n, i) * pow_int(BigInt(b - 1) * n + i, n - 1 - j);
        sum += sign_pm(l + 1 + j) * Rat(s2 * inner);
    }
    return sum * make_rat(factorial(l), pow_int(BigInt(2), n));
}

BigInt rl_family(Family family, unsigned n, unsigned l, unsigned long b) {
    if (b < 1)
        throw Error(ErrorKind::InvalidInput, "family formulas require b >= 1");
    BigInt small;
    if (small_n_convention(n, l, small)) return small;
    if (l == 0 || l > n) return 0;

    Rat sum(0);
    switch (family) {
    case Family::Linial:
        // Corrected form: the binomial expansion of t(t-c)^{n-1} carries a
        // binom(n-1,j) that the printed formula lacks (invisible at n = 2).
        for (unsigned long j = 0; j <= n - 1; ++j) {
            const BigInt s2 = combinat::stirling_second(j + 1, l);
            if (s2 == 0) continue;
            BigInt inner(0);
            for (unsigned long i = 0; i <= n; ++i)
                inner += combinat::binomial(n, i) * pow_int(BigInt(b - 1) * n + i, n - 1 - j);
            sum += sign_pm(l + 1 + j) * Rat(s2 * combinat::binomial(n - 1, j) * inner);
        }
        sum *= make_rat(factorial(l), pow_int(BigInt(2), n));
        break;
    case Family::Shi:
        for (unsigned long i = 0; i < l; ++i)
            sum += sign_pm(i) * Rat(combinat::binomial(l - 1, i) *
                                    pow_int(BigInt(b) * n - i - 1, n - 1));
        sum *= Rat(static_cast<unsigned long>(l));
        break;
    case Family::Catalan: {
        const unsigned long top = (b + 1) * n - l;
        sum = Rat(factorial(n) * BigInt(b) * l * combinat::binomial(top, b * n)) / Rat(top);
        break;
    }
    }
    if (!is_integer(sum) || sum < 0)
        throw Error(ErrorKind::Internal, "level-count family formula produced a non-count");
    return sum.get_num();
}

EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b, unsigned N) {
    EgfSeries out;
    out.coeffs.assign(N + 1, Rat(0));
    for (unsigned i = 0; i < a.coeffs.size() && i <= N; ++i)
        for (unsigned j = 0; j < b.coeffs.size() && i + j <= N; ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return out;
}

EgfSeries egf_r1(const R1Table& table, unsigned N) {
    if (table.max_n() < N)
        throw Error(ErrorKind::InvalidInput, "r1 table does not cover the truncation order");
    EgfSeries s;
    s.coeffs.assign(N + 1, Rat(0));
    for (unsigned n = 1; n <= N; ++n) s.coeffs[n] = make_rat(table.values[n], factorial(n));
    return s;
}

EgfSeries egf_truncated(unsigned l, unsigned N, const R1Table& table) {
    EgfSeries acc;
    acc.coeffs.assign(N + 1, Rat(0));
    acc.coeffs[0] = 1;
    const EgfSeries r1 = egf_r1(table, N);
    for (unsigned i = 0; i < l; ++i) acc = egf_mul(acc, r1, N);
    return acc;
}

BigInt egf_value(const EgfSeries& s, unsigned n) {
    if (n >= s.coeffs.size())
        throw Error(ErrorKind::InvalidInput, "series truncated below requested order");
    const Rat v = s.coeffs[n] * Rat(factorial(n));
    if (!is_integer(v))
        throw Error(ErrorKind::Internal, "series coefficient is not an integral count");
    return v.get_num();
}

} // namespace braidlevel::levels
