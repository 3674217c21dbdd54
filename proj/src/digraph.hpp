#pragma once

#include "arrangement.hpp"
#include "numeric.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace braidlevel::digraph {

// Region counts by level; counts[l] = number of regions of level l.
struct LevelCensus {
    unsigned n = 0;
    std::vector<BigInt> counts;  // size n+1
    std::string method;          // digraph | geometric | formula | charpoly
    BigInt total() const;
};

bool operator==(const LevelCensus& a, const LevelCensus& b);

std::size_t pair_count(unsigned n);
// Unordered pairs {i<j} of [n] in lexicographic order; all choice vectors
// and serializations index pairs this way.
std::vector<std::pair<unsigned, unsigned>> lex_pairs(unsigned n);
std::size_t pair_index(unsigned i, unsigned j, unsigned n);

struct Edge {
    unsigned from = 0;
    unsigned to = 0;
    Rat weight;  // encodes x_from - x_to > weight
};

// A region's combinatorial encoding: for each pair {i<j} the index k of the
// open interval of A containing x_i - x_j (k = 0 is below a_1, k = m above
// a_m). The edge set follows from the choices:
//   k = 0:       single edge j->i with weight -a_1
//   0 < k < m:   edge i->j weight a_k and edge j->i weight -a_{k+1}
//   k = m:       single edge i->j with weight a_m
// so every digraph built here is valid by construction.
class WeightedDigraph {
public:
    WeightedDigraph() = default;
    WeightedDigraph(unsigned n, std::vector<Rat> offsets, std::vector<int> choices);

    unsigned n() const { return n_; }
    const std::vector<Rat>& offsets() const { return offsets_; }
    const std::vector<int>& choices() const { return choices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int choice(unsigned i, unsigned j) const { return choices_[pair_index(i, j, n_)]; }

    bool operator==(const WeightedDigraph& o) const {
        return n_ == o.n_ && offsets_ == o.offsets_ && choices_ == o.choices_;
    }

private:
    unsigned n_ = 0;
    std::vector<Rat> offsets_;
    std::vector<int> choices_;
    std::vector<Edge> edges_;
};

WeightedDigraph digraph_from_choices(const arrangement::ArrangementSpec& spec,
                                     const std::vector<int>& choices);

// True iff no directed cycle has non-negative weight sum, decided exactly by
// a Karp maximum-cycle-mean test per strong component.
bool is_m_acyclic(const WeightedDigraph& d);

// Strongly connected components, in the topological order of the
// condensation (unique for valid digraphs: every cross pair is joined by an
// edge).
std::vector<std::vector<unsigned>> strong_components(const WeightedDigraph& d);

// Level of the corresponding region = number of strong components.
// Requires d valid and m-acyclic.
unsigned level(const WeightedDigraph& d);

inline BigInt default_census_cap() { return BigInt(100000000); }  // 1e8

// Counts valid m-acyclic digraphs by number of strong components, walking
// the pair-choice tree in lexicographic pair order with incremental
// ascending-cycle pruning. Splitting across jobs merges partial censuses by
// component-wise addition, so the result is independent of the degree.
LevelCensus enumerate_census(const arrangement::ArrangementSpec& spec,
                             const BigInt& cap = default_census_cap(), unsigned jobs = 1);

// Calls visit(choices, level) for every valid m-acyclic digraph, in
// lexicographic choice order.
void for_each_region(const arrangement::ArrangementSpec& spec, const BigInt& cap,
                     const std::function<bool(const std::vector<int>&, unsigned)>& visit);

// Ordered-partition composition: components are given on local vertex sets
// [|parts[i]|] (order-preserving relabeling of parts[i]); cross edges get
// weight a_m forward (smaller label first) and -a_1 backward.
WeightedDigraph compose(const std::vector<std::vector<unsigned>>& parts,
                        const std::vector<WeightedDigraph>& components,
                        const arrangement::ArrangementSpec& spec);

// Inverse of compose: strong components in condensation order, cross edges
// discarded, each component relabeled to its own [n_i].
std::pair<std::vector<std::vector<unsigned>>, std::vector<WeightedDigraph>>
decompose(const WeightedDigraph& d);

// A rational point strictly inside the region encoded by d, built from
// longest-path potentials with slack 1/(D*(n+1)), D the lcm of the offset
// denominators.
std::vector<Rat> sample_point(const WeightedDigraph& d);

// Encodes the region containing x; errors if x lies on a hyperplane.
WeightedDigraph region_to_digraph(const arrangement::ArrangementSpec& spec,
                                  const std::vector<Rat>& x);

} // namespace braidlevel::digraph
