#include "jsonio.hpp"

#include <json.hpp>

#include <sstream>

namespace braidlevel::io {

using nlohmann::json;

namespace {

json offsets_json(const arrangement::ArrangementSpec& spec) {
    json a = json::array();
    for (const auto& q : spec.offsets) a.push_back(rat_to_string(q));
    return a;
}

json base_doc(const std::string& kind, const arrangement::ArrangementSpec& spec) {
    json doc;
    doc["schema"] = "braidlevel/1";
    doc["kind"] = kind;
    doc["n"] = spec.n;
    doc["A"] = offsets_json(spec);
    return doc;
}

} // namespace

std::string census_json(const digraph::LevelCensus& census,
                        const arrangement::ArrangementSpec& spec) {
    json doc = base_doc("census", spec);
    json r = json::array();
    for (const auto& c : census.counts) r.push_back(int_to_string(c));
    doc["r"] = r;
    doc["total"] = int_to_string(census.total());
    doc["method"] = census.method;
    return doc.dump();
}

std::string charpoly_json(const charpoly::CharPolyResult& result) {
    json doc = base_doc("charpoly", result.spec);
    doc["method"] = result.method;
    doc["basis"] = "power";
    doc["coeffs"] = polyalg::coeff_strings(result.poly);
    return doc.dump();
}

std::string digraph_json(const digraph::WeightedDigraph& d) {
    json doc;
    doc["n"] = d.n();
    doc["choices"] = d.choices();
    return doc.dump();
}

std::string roots_json(const arrangement::ArrangementSpec& spec,
                       const roots::RootReport& report) {
    json doc = base_doc("roots", spec);
    doc["poly"] = polyalg::coeff_strings(report.poly);
    doc["real_root_count"] = report.real_root_count;
    json certified = json::array();
    for (const auto& [root, mult] : report.certified_roots)
        certified.push_back({{"root", rat_to_string(root)}, {"multiplicity", mult}});
    doc["certified_roots"] = certified;
    json intervals = json::array();
    for (const auto& ic : report.interval_counts)
        intervals.push_back({{"lo", ic.lo ? rat_to_string(*ic.lo) : "-inf"},
                             {"hi", ic.hi ? rat_to_string(*ic.hi) : "+inf"},
                             {"count", ic.count}});
    doc["interval_counts"] = intervals;
    return doc.dump();
}

std::string sample_json(const arrangement::ArrangementSpec& spec,
                        const std::vector<SampleRegion>& regions, const BigInt& total,
                        bool truncated) {
    json doc = base_doc("sample", spec);
    json list = json::array();
    for (const auto& region : regions) {
        json x = json::array();
        for (const auto& v : region.point) x.push_back(rat_to_string(v));
        list.push_back({{"choices", region.choices}, {"level", region.level}, {"x", x}});
    }
    doc["regions"] = list;
    doc["total"] = int_to_string(total);
    doc["truncated"] = truncated;
    return doc.dump();
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string levels_csv(const std::vector<LevelRow>& rows) {
    std::ostringstream out;
    out << "n,l,value,method\n";
    for (const auto& row : rows)
        out << row.n << ',' << row.l << ',' << csv_field(row.value) << ','
            << csv_field(row.method) << '\n';
    return out.str();
}

} // namespace braidlevel::io
