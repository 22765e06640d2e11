#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "enumorder/errors.hpp"

namespace eo {

using Value = std::uint64_t;

/// A finite prefix of an enumeration: distinct values >= 1, positions 1-based.
class Listing {
public:
    Listing() = default;

    /// Throws DuplicateValue / Error if the invariants fail.
    explicit Listing(std::vector<Value> values, std::string name = {});

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    /// 1-based positional access. Throws OutOfRange.
    Value at(std::size_t pos) const;

    const std::vector<Value>& values() const { return values_; }
    const std::string& name() const { return name_; }

    std::set<Value> value_set() const;

    /// The length-n prefix as a listing. Throws OutOfRange if n > size().
    Listing prefix(std::size_t n) const;

    friend bool operator==(const Listing& a, const Listing& b) {
        return a.values_ == b.values_;
    }

private:
    std::vector<Value> values_;
    std::string name_;
};

/// A finite set of naturals >= 1.
struct FiniteSet {
    std::set<Value> elements;

    friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
};

/// Rank vector of a listing; the canonical key of its uniformity class.
class OrderPattern {
public:
    /// ranks must be a permutation of {1..n}.
    explicit OrderPattern(std::vector<std::size_t> ranks);

    const std::vector<std::size_t>& ranks() const { return ranks_; }

    /// Comma-joined ranks, e.g. "4,1,2,3,5". Empty pattern renders as "".
    std::string key() const;

    friend bool operator==(const OrderPattern&, const OrderPattern&) = default;

private:
    std::vector<std::size_t> ranks_;
};

enum class Monotonicity { Increasing, Decreasing, Neither, Trivial };

std::string_view to_string(Monotonicity m);

/// Parses the newline format: one decimal integer per line, '#' comments,
/// blank lines ignored. Values must be >= 1 and distinct.
Listing parse_listing(std::string_view text, std::string name = {});
Listing load_listing(const std::filesystem::path& path);

/// Same line format, order-insensitive; duplicates collapse silently.
FiniteSet parse_finite_set(std::string_view text);
FiniteSet load_finite_set(const std::filesystem::path& path);

/// ranks[i] = |{ j : values[j] <= values[i] }|, 1-based.
OrderPattern order_pattern(const Listing& h);

Monotonicity is_monotonic(const Listing& h);

/// The listing i -> h(i + m). Throws OutOfRange if m > length.
Listing drop_prefix(const Listing& h, std::size_t m);

/// Emits p's values first, then h's. Throws ValueCollision on overlap.
Listing prepend(const Listing& p, const Listing& h);

/// Transport of g_ref along the positional match of h against h_ref:
/// output g with g(i) = g_ref(k) where h_ref(k) = h(i).
/// Throws SetMismatch / LengthMismatch.
Listing compose_transport(const Listing& h, const Listing& h_ref,
                          const Listing& g_ref);

FiniteSet symmetric_difference(const FiniteSet& a, const FiniteSet& b);

/// True iff |symmetric_difference(a, b)| <= budget.
bool almost_equal(const FiniteSet& a, const FiniteSet& b, std::size_t budget);

/// The unique strictly increasing listing of a.
Listing sorted_listing(const FiniteSet& a);

}  // namespace eo
