#pragma once

#include "arrangement.hpp"
#include "charpoly.hpp"
#include "digraph.hpp"
#include "roots.hpp"

#include <string>
#include <vector>

namespace braidlevel::io {

// All JSON documents carry {"schema":"braidlevel/1"}. Counts and
// coefficients are decimal strings so that re-parsing reproduces the exact
// values; small structural integers stay JSON numbers.

std::string census_json(const digraph::LevelCensus& census,
                        const arrangement::ArrangementSpec& spec);

std::string charpoly_json(const charpoly::CharPolyResult& result);

std::string digraph_json(const digraph::WeightedDigraph& d);

std::string roots_json(const arrangement::ArrangementSpec& spec, const roots::RootReport& report);

struct SampleRegion {
    std::vector<int> choices;
    unsigned level = 0;
    std::vector<Rat> point;
};
std::string sample_json(const arrangement::ArrangementSpec& spec,
                        const std::vector<SampleRegion>& regions, const BigInt& total,
                        bool truncated);

// Level tables: columns n, l, value, method (RFC-style quoting).
struct LevelRow {
    unsigned n = 0;
    unsigned l = 0;
    std::string value;
    std::string method;
};
std::string levels_csv(const std::vector<LevelRow>& rows);

} // namespace braidlevel::io
