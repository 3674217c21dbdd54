#pragma once

#include "numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace braidlevel::arrangement {

enum class Preset { Braid, Shi, Catalan, Semiorder, Linial, Interval };

std::string preset_name(Preset p);

// The deformed braid arrangement on n coordinates with offset set A:
// hyperplanes x_i - x_j = a for all 1 <= i < j <= n, a in A.
struct ArrangementSpec {
    unsigned n = 0;
    std::vector<Rat> offsets;  // strictly increasing
    std::optional<Preset> preset_tag;
    std::optional<unsigned long> preset_a;
    std::optional<unsigned long> preset_b;

    std::size_t m() const { return offsets.size(); }
    bool offsets_integer() const;
    Rat max_abs_offset() const;
    // Canonical "n=...;A={...}" form (presets expand).
    std::string to_string() const;
    // Same census and characteristic polynomial, offsets negated.
    ArrangementSpec negated() const;
};

struct Hyperplane {
    unsigned i = 0;  // 1-based, i < j
    unsigned j = 0;
    Rat offset;
};

// braid -> {0}; shi(b) -> [-b+1,b]; catalan(b) -> [-b,b]; linial(b) -> [-b+2,b];
// semiorder(b) -> {-b..-1} u {1..b}; interval(a,b) -> [-a,b].
ArrangementSpec make_preset(Preset preset, unsigned n,
                            std::optional<unsigned long> a = std::nullopt,
                            std::optional<unsigned long> b = std::nullopt);

ArrangementSpec make_spec(unsigned n, std::vector<Rat> offsets);

// All m*C(n,2) hyperplanes, pairs in lexicographic (i,j) order.
std::vector<Hyperplane> hyperplanes(const ArrangementSpec& spec);

// Scales the offsets by the lcm of their denominators. x -> scale*x is a
// linear isomorphism of the arrangement, so census and characteristic
// polynomial are unchanged.
struct NormalizedSpec {
    ArrangementSpec spec;
    Rat scale;
};
NormalizedSpec normalize_integer(const ArrangementSpec& spec);

// Grammar:  spec := "n=" NAT ";" body
//           body := "A={" INT_OR_RAT ("," INT_OR_RAT)* "}" | "preset=" NAME params
//           NAME := braid|shi|catalan|semiorder|linial|interval
//           params := (";a=" NAT)? (";b=" NAT)?
// Whitespace is ignored everywhere. Errors carry the offending position.
ArrangementSpec parse_spec(const std::string& text);

} // namespace braidlevel::arrangement
