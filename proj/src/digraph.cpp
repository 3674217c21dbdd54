#include "digraph.hpp"

#include "error.hpp"

#include <algorithm>
#include <optional>
#include <thread>

namespace braidlevel::digraph {

BigInt LevelCensus::total() const {
    BigInt t(0);
    for (const auto& c : counts) t += c;
    return t;
}

bool operator==(const LevelCensus& a, const LevelCensus& b) {
    return a.n == b.n && a.counts == b.counts;
}

std::size_t pair_count(unsigned n) { return n < 2 ? 0 : std::size_t(n) * (n - 1) / 2; }

std::vector<std::pair<unsigned, unsigned>> lex_pairs(unsigned n) {
    std::vector<std::pair<unsigned, unsigned>> out;
    out.reserve(pair_count(n));
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j) out.emplace_back(i, j);
    return out;
}

std::size_t pair_index(unsigned i, unsigned j, unsigned n) {
    // Pairs (i,*) occupy a block of length n-i starting after the blocks of
    // all smaller i.
    return std::size_t(i - 1) * n - std::size_t(i) * (i + 1) / 2 + j - 1;
}

namespace {

void append_choice_edges(std::vector<Edge>& edges, unsigned i, unsigned j, int k,
                         const std::vector<Rat>& offsets) {
    const int m = static_cast<int>(offsets.size());
    if (k < 0 || k > m)
        throw Error(ErrorKind::InvalidInput,
                    "choice index " + std::to_string(k) + " out of range 0.." + std::to_string(m));
    if (k > 0) edges.push_back({i, j, offsets[static_cast<std::size_t>(k) - 1]});
    if (k < m) edges.push_back({j, i, -offsets[static_cast<std::size_t>(k)]});
}

// Tarjan over an explicit adjacency structure; components come out in
// reverse topological order of the condensation and are flipped before
// returning.
class SccFinder {
public:
    explicit SccFinder(unsigned n) : n_(n), adj_(n + 1) {}

    void add_edge(unsigned u, unsigned v) { adj_[u].push_back(v); }
    void clear_edges() {
        for (auto& a : adj_) a.clear();
    }

    // comp_of[v] gives the component id; ids increase along the topological
    // order of the condensation.
    std::vector<std::vector<unsigned>> run(std::vector<unsigned>* comp_of_out = nullptr) {
        index_.assign(n_ + 1, 0);
        low_.assign(n_ + 1, 0);
        on_stack_.assign(n_ + 1, false);
        stack_.clear();
        comps_.clear();
        counter_ = 0;
        for (unsigned v = 1; v <= n_; ++v)
            if (index_[v] == 0) strongconnect(v);
        std::reverse(comps_.begin(), comps_.end());
        if (comp_of_out) {
            comp_of_out->assign(n_ + 1, 0);
            for (std::size_t c = 0; c < comps_.size(); ++c)
                for (unsigned v : comps_[c]) (*comp_of_out)[v] = static_cast<unsigned>(c);
        }
        return comps_;
    }

private:
    void strongconnect(unsigned v) {
        index_[v] = low_[v] = ++counter_;
        stack_.push_back(v);
        on_stack_[v] = true;
        for (unsigned w : adj_[v]) {
            if (index_[w] == 0) {
                strongconnect(w);
                low_[v] = std::min(low_[v], low_[w]);
            } else if (on_stack_[w]) {
                low_[v] = std::min(low_[v], index_[w]);
            }
        }
        if (low_[v] == index_[v]) {
            std::vector<unsigned> comp;
            for (;;) {
                unsigned w = stack_.back();
                stack_.pop_back();
                on_stack_[w] = false;
                comp.push_back(w);
                if (w == v) break;
            }
            std::sort(comp.begin(), comp.end());
            comps_.push_back(std::move(comp));
        }
    }

    unsigned n_;
    std::vector<std::vector<unsigned>> adj_;
    std::vector<unsigned> index_, low_;
    std::vector<bool> on_stack_;
    std::vector<unsigned> stack_;
    std::vector<std::vector<unsigned>> comps_;
    unsigned counter_ = 0;
};

// Karp maximum-cycle-mean test restricted to one strongly connected piece.
// Returns true iff some directed cycle inside it has weight sum >= 0, i.e.
// max mean >= 0. Divisions are avoided: min_k (d_N - d_k)/(N-k) >= 0 is
// equivalent to d_N >= d_k for every finite d_k.
bool karp_has_ascending_cycle(const std::vector<unsigned>& verts,
                              const std::vector<Edge>& edges) {
    if (edges.empty()) return false;
    const std::size_t N = verts.size();
    std::vector<int> local(*std::max_element(verts.begin(), verts.end()) + 1, -1);
    for (std::size_t i = 0; i < N; ++i) local[verts[i]] = static_cast<int>(i);

    using Row = std::vector<std::optional<Rat>>;
    std::vector<Row> d(N + 1, Row(N));
    d[0][0] = Rat(0);  // arbitrary source: verts[0]
    for (std::size_t k = 1; k <= N; ++k) {
        for (const auto& e : edges) {
            const int u = local[e.from], v = local[e.to];
            if (!d[k - 1][u]) continue;
            Rat cand = *d[k - 1][u] + e.weight;
            if (!d[k][v] || cand > *d[k][v]) d[k][v] = std::move(cand);
        }
    }
    for (std::size_t v = 0; v < N; ++v) {
        if (!d[N][v]) continue;
        bool all_below = true;
        for (std::size_t k = 0; k < N; ++k) {
            if (d[k][v] && *d[k][v] > *d[N][v]) {
                all_below = false;
                break;
            }
        }
        if (all_below) return true;
    }
    return false;
}

std::vector<Edge> edges_within(const std::vector<Edge>& edges, const std::vector<bool>& member) {
    std::vector<Edge> out;
    for (const auto& e : edges)
        if (member[e.from] && member[e.to]) out.push_back(e);
    return out;
}

} // namespace

WeightedDigraph::WeightedDigraph(unsigned n, std::vector<Rat> offsets, std::vector<int> choices)
    : n_(n), offsets_(std::move(offsets)), choices_(std::move(choices)) {
    if (choices_.size() != pair_count(n_))
        throw Error(ErrorKind::InvalidInput, "choice vector has wrong length");
    auto pairs = lex_pairs(n_);
    for (std::size_t p = 0; p < pairs.size(); ++p)
        append_choice_edges(edges_, pairs[p].first, pairs[p].second, choices_[p], offsets_);
}

WeightedDigraph digraph_from_choices(const arrangement::ArrangementSpec& spec,
                                     const std::vector<int>& choices) {
    return WeightedDigraph(spec.n, spec.offsets, choices);
}

bool is_m_acyclic(const WeightedDigraph& d) {
    SccFinder scc(d.n());
    for (const auto& e : d.edges()) scc.add_edge(e.from, e.to);
    for (const auto& comp : scc.run()) {
        if (comp.size() < 2) continue;
        std::vector<bool> member(d.n() + 1, false);
        for (unsigned v : comp) member[v] = true;
        if (karp_has_ascending_cycle(comp, edges_within(d.edges(), member))) return false;
    }
    return true;
}

std::vector<std::vector<unsigned>> strong_components(const WeightedDigraph& d) {
    SccFinder scc(d.n());
    for (const auto& e : d.edges()) scc.add_edge(e.from, e.to);
    return scc.run();
}

unsigned level(const WeightedDigraph& d) {
    return static_cast<unsigned>(strong_components(d).size());
}

namespace {

// Depth-first walk of the pair-choice tree with incremental pruning: after
// assigning a pair, any new ascending cycle must pass through one of the new
// edges, hence lies in the strong component now joining i and j. Everything
// else was checked at the parent.
class CensusWalker {
public:
    CensusWalker(unsigned n, const std::vector<Rat>& offsets)
        : n_(n), offsets_(offsets), pairs_(lex_pairs(n)), scc_(n) {}

    // Runs the subtree below the given choice prefix. Returns level counts.
    // visit, when set, is called at each leaf with (choices, level); a false
    // return stops the walk.
    std::vector<BigInt> run(const std::vector<int>& prefix,
                            const std::function<bool(const std::vector<int>&, unsigned)>* visit) {
        counts_.assign(n_ + 1, BigInt(0));
        visit_ = visit;
        stop_ = false;
        edges_.clear();
        choices_.assign(pairs_.size(), -1);
        // Replay the prefix with the same pruning as the walk itself; an
        // invalid prefix contributes nothing.
        for (std::size_t p = 0; p < prefix.size(); ++p) {
            const std::size_t before = edges_.size();
            append_choice_edges(edges_, pairs_[p].first, pairs_[p].second, prefix[p], offsets_);
            choices_[p] = prefix[p];
            if (creates_ascending(pairs_[p].first, pairs_[p].second)) {
                edges_.resize(before);
                return counts_;
            }
        }
        if (prefix.size() == pairs_.size()) {
            record_leaf();
            return counts_;
        }
        descend(prefix.size());
        return counts_;
    }

private:
    void descend(std::size_t depth) {
        const auto [i, j] = pairs_[depth];
        const int m = static_cast<int>(offsets_.size());
        for (int k = 0; k <= m && !stop_; ++k) {
            const std::size_t before = edges_.size();
            append_choice_edges(edges_, i, j, k, offsets_);
            choices_[depth] = k;
            if (!creates_ascending(i, j)) {
                if (depth + 1 == pairs_.size())
                    record_leaf();
                else
                    descend(depth + 1);
            }
            edges_.resize(before);
        }
        choices_[depth] = -1;
    }

    void record_leaf() {
        const unsigned lvl = scc_count();
        counts_[lvl] += 1;
        if (visit_ && *visit_ && !(*visit_)(choices_, lvl)) stop_ = true;
    }

    unsigned scc_count() {
        scc_.clear_edges();
        for (const auto& e : edges_) scc_.add_edge(e.from, e.to);
        return static_cast<unsigned>(scc_.run().size());
    }

    bool creates_ascending(unsigned i, unsigned j) {
        scc_.clear_edges();
        for (const auto& e : edges_) scc_.add_edge(e.from, e.to);
        std::vector<unsigned> comp_of;
        auto comps = scc_.run(&comp_of);
        if (comp_of[i] != comp_of[j]) return false;
        const auto& comp = comps[comp_of[i]];
        if (comp.size() < 2) return false;
        std::vector<bool> member(n_ + 1, false);
        for (unsigned v : comp) member[v] = true;
        return karp_has_ascending_cycle(comp, edges_within(edges_, member));
    }

    unsigned n_;
    const std::vector<Rat>& offsets_;
    std::vector<std::pair<unsigned, unsigned>> pairs_;
    SccFinder scc_;
    std::vector<Edge> edges_;
    std::vector<int> choices_;
    std::vector<BigInt> counts_;
    const std::function<bool(const std::vector<int>&, unsigned)>* visit_ = nullptr;
    bool stop_ = false;
};

void check_census_cap(const arrangement::ArrangementSpec& spec, const BigInt& cap) {
    const BigInt space = pow_int(BigInt(spec.offsets.size() + 1),
                                 static_cast<unsigned long>(pair_count(spec.n)));
    if (space > cap)
        throw Error(ErrorKind::CapExceeded,
                    "census search space " + int_to_string(space) + " exceeds cap " +
                        int_to_string(cap) + "; raise the cap to proceed");
}

LevelCensus trivial_census(unsigned n, std::string method) {
    LevelCensus c;
    c.n = n;
    c.counts.assign(n + 1, BigInt(0));
    c.method = std::move(method);
    // One region: all of R^n, of level n; for n = 0 the convention r_0 = 1.
    c.counts[n] = 1;
    return c;
}

} // namespace

LevelCensus enumerate_census(const arrangement::ArrangementSpec& spec, const BigInt& cap,
                             unsigned jobs) {
    if (spec.n <= 1) return trivial_census(spec.n, "digraph");
    check_census_cap(spec, cap);

    const unsigned m = static_cast<unsigned>(spec.offsets.size());
    // Tasks = choice prefixes over the first two pairs; workers take tasks
    // round-robin and the partial censuses add up in any order.
    const std::size_t prefix_len = std::min<std::size_t>(2, pair_count(spec.n));
    std::size_t task_count = 1;
    for (std::size_t p = 0; p < prefix_len; ++p) task_count *= m + 1;

    jobs = std::max(1u, jobs);
    std::vector<std::vector<BigInt>> results(task_count);
    auto worker = [&](unsigned w) {
        CensusWalker walker(spec.n, spec.offsets);
        for (std::size_t t = w; t < task_count; t += jobs) {
            std::vector<int> prefix(prefix_len);
            std::size_t rest = t;
            for (std::size_t p = prefix_len; p-- > 0;) {
                prefix[p] = static_cast<int>(rest % (m + 1));
                rest /= m + 1;
            }
            results[t] = walker.run(prefix, nullptr);
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& th : threads) th.join();
    }

    LevelCensus census;
    census.n = spec.n;
    census.method = "digraph";
    census.counts.assign(spec.n + 1, BigInt(0));
    for (const auto& part : results)
        for (std::size_t l = 0; l < part.size(); ++l) census.counts[l] += part[l];
    return census;
}

void for_each_region(const arrangement::ArrangementSpec& spec, const BigInt& cap,
                     const std::function<bool(const std::vector<int>&, unsigned)>& visit) {
    if (spec.n <= 1) {
        visit({}, spec.n);
        return;
    }
    check_census_cap(spec, cap);
    CensusWalker walker(spec.n, spec.offsets);
    walker.run({}, &visit);
}

WeightedDigraph compose(const std::vector<std::vector<unsigned>>& parts,
                        const std::vector<WeightedDigraph>& components,
                        const arrangement::ArrangementSpec& spec) {
    if (parts.size() != components.size())
        throw Error(ErrorKind::InvalidInput, "compose: one component per part required");
    if (spec.offsets.empty())
        throw Error(ErrorKind::InvalidInput, "compose: empty offset set");
    std::vector<unsigned> part_of(spec.n + 1, 0);
    std::vector<bool> seen(spec.n + 1, false);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (unsigned v : parts[p]) {
            if (v < 1 || v > spec.n || seen[v])
                throw Error(ErrorKind::InvalidInput, "compose: parts are not a partition of [n]");
            seen[v] = true;
            part_of[v] = static_cast<unsigned>(p);
        }
        if (components[p].n() != parts[p].size())
            throw Error(ErrorKind::InvalidInput,
                        "compose: component is not on the declared vertex set");
        if (components[p].offsets() != spec.offsets)
            throw Error(ErrorKind::InvalidInput, "compose: component offsets differ from spec");
        if (strong_components(components[p]).size() != 1)
            throw Error(ErrorKind::InvalidInput, "compose: component is not strongly connected");
        if (!is_m_acyclic(components[p]))
            throw Error(ErrorKind::InvalidInput, "compose: component is not m-acyclic");
    }
    for (unsigned v = 1; v <= spec.n; ++v)
        if (!seen[v])
            throw Error(ErrorKind::InvalidInput, "compose: parts are not a partition of [n]");

    const int m = static_cast<int>(spec.offsets.size());
    std::vector<int> choices(pair_count(spec.n), -1);
    // Within-part choices come from the component through the
    // order-preserving relabeling; cross pairs follow the earlier-part rule.
    for (std::size_t p = 0; p < parts.size(); ++p) {
        std::vector<unsigned> sorted_part = parts[p];
        std::sort(sorted_part.begin(), sorted_part.end());
        const unsigned np = static_cast<unsigned>(sorted_part.size());
        for (unsigned a = 1; a <= np; ++a)
            for (unsigned b = a + 1; b <= np; ++b)
                choices[pair_index(sorted_part[a - 1], sorted_part[b - 1], spec.n)] =
                    components[p].choice(a, b);
    }
    for (unsigned i = 1; i <= spec.n; ++i)
        for (unsigned j = i + 1; j <= spec.n; ++j) {
            if (part_of[i] == part_of[j]) continue;
            // Earlier part points at later part: i->j with a_m when the part
            // of i comes first (choice m), else j->i with -a_1 (choice 0).
            choices[pair_index(i, j, spec.n)] = part_of[i] < part_of[j] ? m : 0;
        }

    WeightedDigraph out(spec.n, spec.offsets, choices);
    if (strong_components(out).size() != parts.size() || !is_m_acyclic(out))
        throw Error(ErrorKind::Internal, "compose produced an inconsistent digraph");
    return out;
}

std::pair<std::vector<std::vector<unsigned>>, std::vector<WeightedDigraph>>
decompose(const WeightedDigraph& d) {
    if (!is_m_acyclic(d))
        throw Error(ErrorKind::InvalidInput, "decompose requires an m-acyclic digraph");
    auto parts = strong_components(d);
    std::vector<WeightedDigraph> comps;
    comps.reserve(parts.size());
    for (const auto& part : parts) {
        const unsigned np = static_cast<unsigned>(part.size());
        std::vector<int> choices(pair_count(np));
        for (unsigned a = 1; a <= np; ++a)
            for (unsigned b = a + 1; b <= np; ++b)
                choices[pair_index(a, b, np)] = d.choice(part[a - 1], part[b - 1]);
        comps.emplace_back(np, d.offsets(), std::move(choices));
    }
    return {std::move(parts), std::move(comps)};
}

std::vector<Rat> sample_point(const WeightedDigraph& d) {
    const unsigned n = d.n();
    if (n == 0) return {};

    // Slack small enough that adding it to every edge keeps all cycle sums
    // negative: cycle sums are integer combinations of the offsets, hence
    // multiples of 1/D for D the lcm of their denominators, so a negative
    // cycle is at most -1/D and gains at most n*delta.
    BigInt den_lcm(1);
    for (const auto& a : d.offsets()) den_lcm = lcm(den_lcm, a.get_den());
    const Rat delta = make_rat(BigInt(1), den_lcm * (static_cast<long>(n) + 1));

    // Bellman-Ford longest-path potentials for x_u >= x_v + w + delta.
    std::vector<Rat> x(n + 1, Rat(0));
    bool changed = true;
    for (unsigned round = 0; round <= n && changed; ++round) {
        changed = false;
        for (const auto& e : d.edges()) {
            Rat need = x[e.to] + e.weight + delta;
            if (x[e.from] < need) {
                x[e.from] = std::move(need);
                changed = true;
            }
        }
    }
    if (changed)
        throw Error(ErrorKind::InvalidInput, "sample_point requires an m-acyclic digraph");
    for (const auto& e : d.edges())
        if (!(x[e.from] - x[e.to] > e.weight))
            throw Error(ErrorKind::Internal, "sample point violates its region constraints");
    return std::vector<Rat>(x.begin() + 1, x.end());
}

WeightedDigraph region_to_digraph(const arrangement::ArrangementSpec& spec,
                                  const std::vector<Rat>& x) {
    if (x.size() != spec.n)
        throw Error(ErrorKind::InvalidInput, "point dimension mismatch");
    std::vector<int> choices(pair_count(spec.n));
    for (unsigned i = 1; i <= spec.n; ++i)
        for (unsigned j = i + 1; j <= spec.n; ++j) {
            const Rat diff = x[i - 1] - x[j - 1];
            int k = 0;
            for (const auto& a : spec.offsets) {
                if (diff == a)
                    throw Error(ErrorKind::InvalidInput,
                                "point lies on hyperplane x_" + std::to_string(i) + " - x_" +
                                    std::to_string(j) + " = " + rat_to_string(a));
                if (a < diff) ++k;
            }
            choices[pair_index(i, j, spec.n)] = k;
        }
    return digraph_from_choices(spec, choices);
}

} // namespace braidlevel::digraph
