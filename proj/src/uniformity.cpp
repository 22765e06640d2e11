#include "enumorder/uniformity.hpp"

#include <algorithm>

namespace eo {

std::string_view to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Uniform: return "Uniform";
        case VerdictKind::NotUniform: return "NotUniform";
        case VerdictKind::Truncated: return "Truncated";
    }
    return "?";
}

UniformityVerdict uniform_prefix(const Listing& h, const Listing& g) {
    const std::size_t len = std::min(h.size(), g.size());
    const auto& hv = h.values();
    const auto& gv = g.values();
    if (order_pattern(h.prefix(len)) == order_pattern(g.prefix(len))) {
        VerdictKind kind = (h.size() == g.size()) ? VerdictKind::Uniform
                                                  : VerdictKind::Truncated;
        return {kind, len, std::nullopt};
    }
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j)
            if ((hv[i] < hv[j]) != (gv[i] < gv[j]))
                return {VerdictKind::NotUniform, len, std::make_pair(i + 1, j + 1)};
    return {VerdictKind::Uniform, len, std::nullopt};  // unreachable
}

DiscordanceSet discordant_pairs(const Listing& h, const Listing& g,
                                std::size_t m, std::size_t n) {
    if (m > h.size())
        throw OutOfRange("shift m = " + std::to_string(m) + " exceeds length " +
                         std::to_string(h.size()));
    if (n > g.size())
        throw OutOfRange("shift n = " + std::to_string(n) + " exceeds length " +
                         std::to_string(g.size()));
    DiscordanceSet out{m, n, std::min(h.size() - m, g.size() - n), {}};
    const auto& hv = h.values();
    const auto& gv = g.values();
    for (std::size_t i = 1; i <= out.overlap; ++i)
        for (std::size_t j = i + 1; j <= out.overlap; ++j)
            if ((hv[i + m - 1] < hv[j + m - 1]) != (gv[i + n - 1] < gv[j + n - 1]))
                out.pairs.emplace(i, j);
    return out;
}

std::optional<Type2Witness> type2_search(const Listing& h, const Listing& g,
                                         std::size_t max_m, std::size_t max_n,
                                         std::size_t min_overlap) {
    max_m = std::min(max_m, h.size());
    max_n = std::min(max_n, g.size());
    for (std::size_t sum = 0; sum <= max_m + max_n; ++sum) {
        for (std::size_t m = 0; m <= std::min(sum, max_m); ++m) {
            std::size_t n = sum - m;
            if (n > max_n) continue;
            std::size_t overlap = std::min(h.size() - m, g.size() - n);
            if (overlap < min_overlap) continue;
            if (discordant_pairs(h, g, m, n).pairs.empty())
                return Type2Witness{m, n, overlap};
        }
    }
    return std::nullopt;
}

std::pair<bool, std::optional<std::pair<Listing, Listing>>>
sets_uniform_finite(const FiniteSet& a, const FiniteSet& b) {
    if (a.elements.size() != b.elements.size())
        return {false, std::nullopt};
    return {true, std::make_pair(sorted_listing(a), sorted_listing(b))};
}

std::map<std::string, std::vector<std::string>>
classify_corpus(const std::vector<Listing>& listings, std::size_t prefix_len) {
    for (const auto& h : listings)
        if (h.size() < prefix_len)
            throw TooShort(h.name(), h.size(), prefix_len);
    std::map<std::string, std::vector<std::string>> groups;
    for (const auto& h : listings)
        groups[order_pattern(h.prefix(prefix_len)).key()].push_back(h.name());
    for (auto& [key, names] : groups)
        std::sort(names.begin(), names.end());
    return groups;
}

}  // namespace eo
