#include "arrangement.hpp"

#include "error.hpp"

#include <algorithm>
#include <cctype>

namespace braidlevel::arrangement {

std::string preset_name(Preset p) {
    switch (p) {
    case Preset::Braid: return "braid";
    case Preset::Shi: return "shi";
    case Preset::Catalan: return "catalan";
    case Preset::Semiorder: return "semiorder";
    case Preset::Linial: return "linial";
    case Preset::Interval: return "interval";
    }
    return "?";
}

bool ArrangementSpec::offsets_integer() const {
    return std::all_of(offsets.begin(), offsets.end(),
                       [](const Rat& q) { return is_integer(q); });
}

Rat ArrangementSpec::max_abs_offset() const {
    Rat best(0);
    for (const auto& q : offsets) {
        Rat a = abs(q);
        if (a > best) best = a;
    }
    return best;
}

std::string ArrangementSpec::to_string() const {
    std::string out = "n=" + std::to_string(n) + ";A={";
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        if (i) out += ",";
        out += rat_to_string(offsets[i]);
    }
    out += "}";
    return out;
}

ArrangementSpec ArrangementSpec::negated() const {
    ArrangementSpec out;
    out.n = n;
    out.offsets.reserve(offsets.size());
    for (auto it = offsets.rbegin(); it != offsets.rend(); ++it) out.offsets.push_back(-*it);
    return out;
}

namespace {

void check_offsets(const std::vector<Rat>& offsets) {
    for (std::size_t i = 0; i + 1 < offsets.size(); ++i) {
        if (offsets[i] == offsets[i + 1])
            throw Error(ErrorKind::InvalidInput,
                        "duplicate offset " + rat_to_string(offsets[i]));
        if (offsets[i] > offsets[i + 1])
            throw Error(ErrorKind::Internal, "offsets not sorted");
    }
}

std::vector<Rat> integer_range(long lo, long hi) {
    std::vector<Rat> out;
    for (long v = lo; v <= hi; ++v) out.emplace_back(v);
    return out;
}

} // namespace

ArrangementSpec make_spec(unsigned n, std::vector<Rat> offsets) {
    std::sort(offsets.begin(), offsets.end());
    // Duplicates are rejected, not silently dropped: the offsets must be
    // distinct, and deduplication would hide a user error.
    check_offsets(offsets);
    ArrangementSpec spec;
    spec.n = n;
    spec.offsets = std::move(offsets);
    return spec;
}

ArrangementSpec make_preset(Preset preset, unsigned n,
                            std::optional<unsigned long> a,
                            std::optional<unsigned long> b) {
    auto need_b = [&]() -> long {
        if (!b) throw Error(ErrorKind::InvalidInput,
                            "preset '" + preset_name(preset) + "' requires parameter b");
        if (*b < 1) throw Error(ErrorKind::InvalidInput,
                                "preset '" + preset_name(preset) + "' requires b >= 1");
        return static_cast<long>(*b);
    };

    ArrangementSpec spec;
    switch (preset) {
    case Preset::Braid:
        spec = make_spec(n, {Rat(0)});
        break;
    case Preset::Shi:
        spec = make_spec(n, integer_range(-need_b() + 1, need_b()));
        break;
    case Preset::Catalan:
        spec = make_spec(n, integer_range(-need_b(), need_b()));
        break;
    case Preset::Linial:
        spec = make_spec(n, integer_range(-need_b() + 2, need_b()));
        break;
    case Preset::Semiorder: {
        const long bb = need_b();
        std::vector<Rat> offsets;
        for (long v = -bb; v <= -1; ++v) offsets.emplace_back(v);
        for (long v = 1; v <= bb; ++v) offsets.emplace_back(v);
        spec = make_spec(n, std::move(offsets));
        break;
    }
    case Preset::Interval: {
        if (!a || !b)
            throw Error(ErrorKind::InvalidInput, "preset 'interval' requires parameters a and b");
        if (*a > *b)
            throw Error(ErrorKind::InvalidInput,
                        "interval preset requires a <= b (got a=" + std::to_string(*a) +
                            ", b=" + std::to_string(*b) + ")");
        spec = make_spec(n, integer_range(-static_cast<long>(*a), static_cast<long>(*b)));
        break;
    }
    }
    spec.preset_tag = preset;
    spec.preset_a = a;
    spec.preset_b = b;
    return spec;
}

std::vector<Hyperplane> hyperplanes(const ArrangementSpec& spec) {
    std::vector<Hyperplane> out;
    if (spec.n < 2) return out;
    out.reserve(spec.offsets.size() * spec.n * (spec.n - 1) / 2);
    for (unsigned i = 1; i <= spec.n; ++i)
        for (unsigned j = i + 1; j <= spec.n; ++j)
            for (const auto& a : spec.offsets) out.push_back({i, j, a});
    return out;
}

NormalizedSpec normalize_integer(const ArrangementSpec& spec) {
    BigInt l(1);
    for (const auto& q : spec.offsets) l = lcm(l, q.get_den());
    if (l == 1) return {spec, Rat(1)};
    ArrangementSpec out;
    out.n = spec.n;
    out.offsets.reserve(spec.offsets.size());
    const Rat scale(l);
    for (const auto& q : spec.offsets) out.offsets.push_back(q * scale);
    return {std::move(out), scale};
}

namespace {

class SpecParser {
public:
    explicit SpecParser(const std::string& raw) {
        // Whitespace-insensitive: strip it up front, remembering original
        // positions for error messages.
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (!std::isspace(static_cast<unsigned char>(raw[i]))) {
                text_ += raw[i];
                pos_map_.push_back(i);
            }
        }
        pos_map_.push_back(raw.size());
    }

    ArrangementSpec parse() {
        expect("n=");
        const unsigned long n = parse_nat();
        expect(";");
        ArrangementSpec spec;
        if (peek("A={")) {
            pos_ += 3;
            std::vector<Rat> offsets;
            offsets.push_back(parse_rational());
            while (peek(",")) {
                ++pos_;
                offsets.push_back(parse_rational());
            }
            expect("}");
            std::sort(offsets.begin(), offsets.end());
            for (std::size_t i = 0; i + 1 < offsets.size(); ++i)
                if (offsets[i] == offsets[i + 1])
                    fail("duplicate offset " + rat_to_string(offsets[i]));
            spec = make_spec(static_cast<unsigned>(n), std::move(offsets));
        } else if (peek("preset=")) {
            pos_ += 7;
            const std::string name = parse_name();
            std::optional<unsigned long> a, b;
            while (pos_ < text_.size()) {
                if (peek(";a=")) {
                    pos_ += 3;
                    a = parse_nat();
                } else if (peek(";b=")) {
                    pos_ += 3;
                    b = parse_nat();
                } else {
                    fail("expected ';a=' or ';b='");
                }
            }
            spec = make_preset(parse_preset_name(name), static_cast<unsigned>(n), a, b);
        } else {
            fail("expected 'A={' or 'preset='");
        }
        if (pos_ != text_.size()) fail("trailing input");
        return spec;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        const std::size_t orig = pos_map_[std::min(pos_, pos_map_.size() - 1)];
        throw Error(ErrorKind::InvalidInput,
                    "spec syntax error at position " + std::to_string(orig) + ": " + what);
    }

    bool peek(const std::string& s) const { return text_.compare(pos_, s.size(), s) == 0; }

    void expect(const std::string& s) {
        if (!peek(s)) fail("expected '" + s + "'");
        pos_ += s.size();
    }

    unsigned long parse_nat() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a natural number");
        return std::stoul(text_.substr(start, pos_ - start));
    }

    Rat parse_rational() {
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
            ++pos_;
        if (pos_ == start) fail("expected an integer or rational");
        try {
            return parse_rat(text_.substr(start, pos_ - start));
        } catch (const Error& e) {
            pos_ = start;
            fail(e.what());
        }
    }

    std::string parse_name() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a preset name");
        return text_.substr(start, pos_ - start);
    }

    Preset parse_preset_name(const std::string& name) {
        if (name == "braid") return Preset::Braid;
        if (name == "shi") return Preset::Shi;
        if (name == "catalan") return Preset::Catalan;
        if (name == "semiorder") return Preset::Semiorder;
        if (name == "linial") return Preset::Linial;
        if (name == "interval") return Preset::Interval;
        fail("unknown preset '" + name + "'");
    }

    std::string text_;
    std::vector<std::size_t> pos_map_;
    std::size_t pos_ = 0;
};

} // namespace

ArrangementSpec parse_spec(const std::string& text) { return SpecParser(text).parse(); }

} // namespace braidlevel::arrangement
