#pragma once

#include <memory>
#include <string>
#include <vector>

#include "enumorder/listing.hpp"

namespace eo {

/// Persistent BST of (step, value) nodes grown in enumeration order.
/// Insertion returns a new tree; snapshots share structure.
class Tobst {
public:
    struct Node {
        std::size_t step;
        Value value;
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
    };
    using NodePtr = std::shared_ptr<const Node>;

    Tobst() = default;

    /// Leaf insertion by value comparison. step must equal size() + 1.
    /// Throws DuplicateValue / StepGap.
    Tobst insert(std::size_t step, Value value) const;

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    const NodePtr& root() const { return root_; }

    /// In-order values; strictly increasing by the BST invariant.
    std::vector<Value> in_order_values() const;

private:
    Tobst(NodePtr root, std::size_t size) : root_(std::move(root)), size_(size) {}

    NodePtr root_;
    std::size_t size_ = 0;
};

enum class SpineKind { RightSpine, LeftSpine, Both, Neither };

std::string_view to_string(SpineKind k);

/// Canonical ordered-shape encoding: node -> "(" + left + "," + right + ")",
/// absent child -> empty string, empty tree -> "".
struct TobstShape {
    std::string encoding;

    friend bool operator==(const TobstShape&, const TobstShape&) = default;
};

/// Snapshots after inserting (1,h(1)) .. (i,h(i)), for i = 1..|h|.
std::vector<Tobst> tobst_build(const Listing& h);

TobstShape shape_encode(const Tobst& t);

/// Ordered-shape equality of the step-i snapshots. Throws OutOfRange.
bool isomorphic_at_step(const Listing& h, const Listing& g, std::size_t i);

/// True iff the snapshots are isomorphic at every step 1..|h|.
/// Throws LengthMismatch when |h| != |g|.
bool uniform_via_tobst(const Listing& h, const Listing& g);

SpineKind spine_kind(const Tobst& t);

/// DOT digraph with nodes labeled "step:value" and edges labeled L/R,
/// emitted in preorder.
std::string export_dot(const Tobst& t);

}  // namespace eo
