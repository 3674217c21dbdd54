#include "geomoracle.hpp"

#include "error.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace braidlevel::geom {

namespace {

// One inequality coeffs . x (< or <=) rhs over variables 1..n (index 0 in
// the coefficient vector is unused).
struct Row {
    std::vector<Rat> coeffs;
    Rat rhs;
    bool strict = false;
};

// Scale to a canonical positive multiple so duplicates collide.
void normalize_row(Row& r) {
    for (const auto& c : r.coeffs) {
        if (c != 0) {
            Rat scale = abs(c);
            for (auto& x : r.coeffs) x /= scale;
            r.rhs /= scale;
            return;
        }
    }
}

bool constant_row_infeasible(const Row& r) {
    return r.strict ? r.rhs <= 0 : r.rhs < 0;
}

bool is_constant(const Row& r) {
    return std::all_of(r.coeffs.begin(), r.coeffs.end(), [](const Rat& c) { return c == 0; });
}

// Keeps one row per coefficient pattern: the smaller rhs wins, and at equal
// rhs the strict one does.
class RowSet {
public:
    bool add(Row r) {  // returns false on a constant contradiction
        if (is_constant(r)) return !constant_row_infeasible(r);
        normalize_row(r);
        auto [it, inserted] = best_.try_emplace(r.coeffs, std::make_pair(r.rhs, r.strict));
        if (!inserted) {
            auto& [rhs, strict] = it->second;
            if (r.rhs < rhs || (r.rhs == rhs && r.strict && !strict)) {
                rhs = r.rhs;
                strict = r.strict;
            }
        }
        return true;
    }

    std::vector<Row> rows() const {
        std::vector<Row> out;
        out.reserve(best_.size());
        for (const auto& [coeffs, rs] : best_) out.push_back({coeffs, rs.first, rs.second});
        return out;
    }

private:
    std::map<std::vector<Rat>, std::pair<Rat, bool>> best_;
};

std::vector<Row> rows_from_system(const StrictSystem& s) {
    std::vector<Row> rows;
    for (const auto& c : s.constraints) {
        if (c.i >= c.j || c.j > s.n)
            throw Error(ErrorKind::InvalidInput, "strict system requires 1 <= i < j <= n");
        if (c.lower && c.upper && !(*c.lower < *c.upper))
            throw Error(ErrorKind::InvalidInput, "strict system requires lower < upper");
        if (c.lower) {  // lower < x_i - x_j  =>  -x_i + x_j < -lower
            Row r{std::vector<Rat>(s.n + 1, Rat(0)), -*c.lower, true};
            r.coeffs[c.i] = -1;
            r.coeffs[c.j] = 1;
            rows.push_back(std::move(r));
        }
        if (c.upper) {  // x_i - x_j < upper
            Row r{std::vector<Rat>(s.n + 1, Rat(0)), *c.upper, true};
            r.coeffs[c.i] = 1;
            r.coeffs[c.j] = -1;
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

bool fm_feasible_rows(std::vector<Row> rows, unsigned n, const std::vector<unsigned>& order) {
    for (unsigned v : order) {
        std::vector<Row> uppers, lowers;
        RowSet next;
        for (auto& r : rows) {
            if (is_constant(r)) {
                if (constant_row_infeasible(r)) return false;
                continue;
            }
            const Rat& c = r.coeffs[v];
            if (c > 0)
                uppers.push_back(std::move(r));
            else if (c < 0)
                lowers.push_back(std::move(r));
            else if (!next.add(std::move(r)))
                return false;
        }
        for (const auto& up : uppers)
            for (const auto& lo : lowers) {
                // up: p.x (<|<=) r1 with p_v > 0; lo: q.x (<|<=) r2, q_v < 0.
                const Rat a = -lo.coeffs[v];  // > 0
                const Rat b = up.coeffs[v];   // > 0
                Row combined;
                combined.coeffs.resize(n + 1, Rat(0));
                for (unsigned u = 1; u <= n; ++u)
                    combined.coeffs[u] = a * up.coeffs[u] + b * lo.coeffs[u];
                combined.rhs = a * up.rhs + b * lo.rhs;
                combined.strict = up.strict || lo.strict;
                if (!next.add(std::move(combined))) return false;
            }
        rows = next.rows();
    }
    for (const auto& r : rows)
        if (constant_row_infeasible(r)) return false;
    return true;
}

std::vector<unsigned> ascending_order(unsigned n) {
    std::vector<unsigned> order(n);
    for (unsigned v = 0; v < n; ++v) order[v] = v + 1;
    return order;
}

// Cone rows g.x <= 0 obtained by weakening the finite bounds to >=/<= 0.
std::vector<Row> cone_rows(const StrictSystem& s) {
    std::vector<Row> rows;
    for (const auto& c : s.constraints) {
        if (c.lower) {  // x_i - x_j >= 0  =>  -x_i + x_j <= 0
            Row r{std::vector<Rat>(s.n + 1, Rat(0)), Rat(0), false};
            r.coeffs[c.i] = -1;
            r.coeffs[c.j] = 1;
            rows.push_back(std::move(r));
        }
        if (c.upper) {  // x_i - x_j <= 0
            Row r{std::vector<Rat>(s.n + 1, Rat(0)), Rat(0), false};
            r.coeffs[c.i] = 1;
            r.coeffs[c.j] = -1;
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

unsigned rank_of(std::vector<std::vector<Rat>> m) {
    unsigned rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            const Rat f = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

} // namespace

StrictSystem system_from_choices(const arrangement::ArrangementSpec& spec,
                                 const std::vector<int>& choices) {
    const auto pairs = digraph::lex_pairs(spec.n);
    if (choices.size() != pairs.size())
        throw Error(ErrorKind::InvalidInput, "choice vector has wrong length");
    const int m = static_cast<int>(spec.offsets.size());
    StrictSystem s;
    s.n = spec.n;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const int k = choices[p];
        if (k < 0 || k > m)
            throw Error(ErrorKind::InvalidInput, "choice index out of range");
        StrictSystem::Constraint c;
        c.i = pairs[p].first;
        c.j = pairs[p].second;
        if (k > 0) c.lower = spec.offsets[static_cast<std::size_t>(k) - 1];
        if (k < m) c.upper = spec.offsets[static_cast<std::size_t>(k)];
        s.constraints.push_back(std::move(c));
    }
    return s;
}

bool fm_feasible(const StrictSystem& s) {
    return fm_feasible_rows(rows_from_system(s), s.n, ascending_order(s.n));
}

bool fm_feasible_with_order(const StrictSystem& s, const std::vector<unsigned>& order) {
    if (order.size() != s.n)
        throw Error(ErrorKind::InvalidInput, "elimination order must be a permutation of 1..n");
    return fm_feasible_rows(rows_from_system(s), s.n, order);
}

unsigned recession_cone_dim(const StrictSystem& s) {
    if (!fm_feasible(s))
        throw Error(ErrorKind::InvalidInput, "recession cone of an infeasible system");
    const auto cone = cone_rows(s);
    const auto order = ascending_order(s.n);
    std::vector<std::vector<Rat>> equalities;
    for (std::size_t r = 0; r < cone.size(); ++r) {
        // g.x <= 0 is an implicit equality iff the cone has no point with
        // g.x < 0; probe by appending the strict reversal -g.x < 0... i.e.
        // g.x < 0 itself, kept strict.
        std::vector<Row> probe = cone;
        probe[r].strict = true;
        if (!fm_feasible_rows(std::move(probe), s.n, order))
            equalities.push_back(std::vector<Rat>(cone[r].coeffs.begin() + 1, cone[r].coeffs.end()));
    }
    return s.n - rank_of(std::move(equalities));
}

digraph::LevelCensus geometric_census(const arrangement::ArrangementSpec& spec, const BigInt& cap,
                                      unsigned jobs) {
    digraph::LevelCensus census;
    census.n = spec.n;
    census.method = "geometric";
    census.counts.assign(spec.n + 1, BigInt(0));
    if (spec.n == 0) {
        census.counts[0] = 1;
        return census;
    }

    const std::size_t pairs = digraph::pair_count(spec.n);
    const BigInt space = pow_int(BigInt(spec.offsets.size() + 1), pairs);
    if (space > cap || !space.fits_ulong_p())
        throw Error(ErrorKind::CapExceeded,
                    "geometric census search space " + int_to_string(space) + " exceeds cap " +
                        int_to_string(cap) + "; raise the cap to proceed");
    const std::size_t total = space.get_ui();
    const unsigned m = static_cast<unsigned>(spec.offsets.size());

    jobs = std::max(1u, jobs);
    std::vector<std::vector<BigInt>> partials(jobs, std::vector<BigInt>(spec.n + 1, BigInt(0)));
    auto worker = [&](unsigned w) {
        std::vector<int> choices(pairs);
        for (std::size_t t = w; t < total; t += jobs) {
            std::size_t rest = t;
            for (std::size_t p = pairs; p-- > 0;) {
                choices[p] = static_cast<int>(rest % (m + 1));
                rest /= m + 1;
            }
            const StrictSystem sys = system_from_choices(spec, choices);
            if (!fm_feasible(sys)) continue;
            partials[w][recession_cone_dim(sys)] += 1;
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& th : threads) th.join();
    }
    for (const auto& part : partials)
        for (std::size_t l = 0; l <= spec.n; ++l) census.counts[l] += part[l];
    return census;
}

} // namespace braidlevel::geom
