#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "enumorder/listing.hpp"

namespace eo {

enum class VerdictKind { Uniform, NotUniform, Truncated };

std::string_view to_string(VerdictKind k);

/// Result of comparing two listings on their common prefix.
/// Truncated means uniform on the common prefix of unequal-length inputs.
struct UniformityVerdict {
    VerdictKind kind;
    std::size_t compared_length;
    // Lexicographically least discordant pair (i < j), present iff NotUniform.
    std::optional<std::pair<std::size_t, std::size_t>> witness;

    bool uniform() const { return kind != VerdictKind::NotUniform; }
};

/// Index pairs on which the m-/n-shifted listings disagree in order.
struct DiscordanceSet {
    std::size_t m;
    std::size_t n;
    std::size_t overlap;
    std::set<std::pair<std::size_t, std::size_t>> pairs;
};

/// Shift pair making two listings uniform after dropping prefixes.
struct Type2Witness {
    std::size_t m;
    std::size_t n;
    std::size_t overlap;
};

/// Compares on L = min(|h|, |g|): Uniform iff the L-prefixes share an order
/// pattern; NotUniform carries the least discordant pair; Truncated marks a
/// uniform verdict reached on unequal lengths.
UniformityVerdict uniform_prefix(const Listing& h, const Listing& g);

/// All (i, j), i < j <= overlap, where the shifted listings order-disagree.
/// Throws OutOfRange if a shift exceeds its listing's length.
DiscordanceSet discordant_pairs(const Listing& h, const Listing& g,
                                std::size_t m, std::size_t n);

/// Smallest-(m+n) shift pair (ties: smallest m) whose shifted prefixes are
/// uniform with overlap >= min_overlap; nullopt if none within the bounds.
std::optional<Type2Witness> type2_search(const Listing& h, const Listing& g,
                                         std::size_t max_m, std::size_t max_n,
                                         std::size_t min_overlap);

/// Finite sets are uniform iff equal cardinality; the sorted listings witness it.
std::pair<bool, std::optional<std::pair<Listing, Listing>>>
sets_uniform_finite(const FiniteSet& a, const FiniteSet& b);

/// Buckets listings by the order pattern of their prefix_len-prefix.
/// Keys are pattern strings; groups are name lists sorted ascending.
/// Throws TooShort for any listing shorter than prefix_len.
std::map<std::string, std::vector<std::string>>
classify_corpus(const std::vector<Listing>& listings, std::size_t prefix_len);

}  // namespace eo
