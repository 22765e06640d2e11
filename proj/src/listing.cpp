#include "enumorder/listing.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace eo {

Listing::Listing(std::vector<Value> values, std::string name)
    : values_(std::move(values)), name_(std::move(name)) {
    std::unordered_map<Value, std::size_t> seen;
    seen.reserve(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 1)
            throw Error("listing values must be >= 1");
        auto [it, inserted] = seen.emplace(values_[i], i + 1);
        if (!inserted)
            throw DuplicateValue(values_[i], it->second, i + 1);
    }
}

Value Listing::at(std::size_t pos) const {
    if (pos < 1 || pos > values_.size())
        throw OutOfRange("position " + std::to_string(pos) +
                         " out of range for listing of length " +
                         std::to_string(values_.size()));
    return values_[pos - 1];
}

std::set<Value> Listing::value_set() const {
    return {values_.begin(), values_.end()};
}

Listing Listing::prefix(std::size_t n) const {
    if (n > values_.size())
        throw OutOfRange("prefix length " + std::to_string(n) +
                         " exceeds listing length " + std::to_string(values_.size()));
    return Listing({values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(n)},
                   name_);
}

OrderPattern::OrderPattern(std::vector<std::size_t> ranks) : ranks_(std::move(ranks)) {
    std::vector<bool> hit(ranks_.size(), false);
    for (std::size_t r : ranks_) {
        if (r < 1 || r > ranks_.size() || hit[r - 1])
            throw Error("ranks are not a permutation of {1..n}");
        hit[r - 1] = true;
    }
}

std::string OrderPattern::key() const {
    std::string out;
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ranks_[i]);
    }
    return out;
}

std::string_view to_string(Monotonicity m) {
    switch (m) {
        case Monotonicity::Increasing: return "Increasing";
        case Monotonicity::Decreasing: return "Decreasing";
        case Monotonicity::Neither: return "Neither";
        case Monotonicity::Trivial: return "Trivial";
    }
    return "?";
}

namespace {

// Splits the newline format into (line_number, token) pairs, dropping
// blank lines and '#' comments.
std::vector<std::pair<std::size_t, std::string>> tokenize_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++lineno;
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::size_t b = line.find_first_not_of(" \t");
        if (b == std::string_view::npos) continue;
        std::size_t e = line.find_last_not_of(" \t");
        line = line.substr(b, e - b + 1);
        if (line.front() == '#') continue;
        out.emplace_back(lineno, std::string(line));
    }
    return out;
}

Value parse_value(std::size_t lineno, const std::string& token) {
    Value v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(lineno, "expected a decimal integer, got '" + token + "'");
    if (v < 1)
        throw ParseError(lineno, "values must be >= 1, got '" + token + "'");
    return v;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Listing parse_listing(std::string_view text, std::string name) {
    std::vector<Value> values;
    for (const auto& [lineno, token] : tokenize_lines(text))
        values.push_back(parse_value(lineno, token));
    return Listing(std::move(values), std::move(name));
}

Listing load_listing(const std::filesystem::path& path) {
    return parse_listing(read_file(path), path.filename().string());
}

FiniteSet parse_finite_set(std::string_view text) {
    FiniteSet s;
    for (const auto& [lineno, token] : tokenize_lines(text))
        s.elements.insert(parse_value(lineno, token));
    return s;
}

FiniteSet load_finite_set(const std::filesystem::path& path) {
    return parse_finite_set(read_file(path));
}

OrderPattern order_pattern(const Listing& h) {
    const auto& v = h.values();
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<std::size_t> ranks(v.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
        ranks[idx[r]] = r + 1;
    return OrderPattern(std::move(ranks));
}

Monotonicity is_monotonic(const Listing& h) {
    const auto& v = h.values();
    if (v.size() <= 1) return Monotonicity::Trivial;
    bool inc = true, dec = true;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i - 1] >= v[i]) inc = false;
        if (v[i - 1] <= v[i]) dec = false;
    }
    if (inc) return Monotonicity::Increasing;
    if (dec) return Monotonicity::Decreasing;
    return Monotonicity::Neither;
}

Listing drop_prefix(const Listing& h, std::size_t m) {
    if (m > h.size())
        throw OutOfRange("cannot drop " + std::to_string(m) +
                         " positions from a listing of length " +
                         std::to_string(h.size()));
    const auto& v = h.values();
    return Listing({v.begin() + static_cast<std::ptrdiff_t>(m), v.end()}, h.name());
}

Listing prepend(const Listing& p, const Listing& h) {
    auto hs = h.value_set();
    for (Value v : p.values())
        if (hs.count(v))
            throw ValueCollision(v);
    std::vector<Value> out = p.values();
    out.insert(out.end(), h.values().begin(), h.values().end());
    return Listing(std::move(out), h.name());
}

Listing compose_transport(const Listing& h, const Listing& h_ref,
                          const Listing& g_ref) {
    if (h_ref.size() != g_ref.size())
        throw LengthMismatch();
    if (h.value_set() != h_ref.value_set())
        throw SetMismatch();
    std::unordered_map<Value, std::size_t> pos_in_ref;
    pos_in_ref.reserve(h_ref.size());
    for (std::size_t k = 0; k < h_ref.size(); ++k)
        pos_in_ref[h_ref.values()[k]] = k;
    std::vector<Value> out;
    out.reserve(h.size());
    for (Value v : h.values())
        out.push_back(g_ref.values()[pos_in_ref.at(v)]);
    return Listing(std::move(out));
}

FiniteSet symmetric_difference(const FiniteSet& a, const FiniteSet& b) {
    FiniteSet out;
    std::set_symmetric_difference(a.elements.begin(), a.elements.end(),
                                  b.elements.begin(), b.elements.end(),
                                  std::inserter(out.elements, out.elements.end()));
    return out;
}

bool almost_equal(const FiniteSet& a, const FiniteSet& b, std::size_t budget) {
    return symmetric_difference(a, b).elements.size() <= budget;
}

Listing sorted_listing(const FiniteSet& a) {
    return Listing({a.elements.begin(), a.elements.end()});
}

}  // namespace eo
