#include "enumorder/tobst.hpp"

#include <functional>
#include <sstream>

namespace eo {

namespace {

Tobst::NodePtr insert_node(const Tobst::NodePtr& node, std::size_t step, Value value) {
    if (!node)
        return std::make_shared<Tobst::Node>(Tobst::Node{step, value, nullptr, nullptr});
    if (value == node->value)
        throw DuplicateValue(value, node->step, step);
    if (value < node->value)
        return std::make_shared<Tobst::Node>(
            Tobst::Node{node->step, node->value, insert_node(node->left, step, value),
                        node->right});
    return std::make_shared<Tobst::Node>(
        Tobst::Node{node->step, node->value, node->left,
                    insert_node(node->right, step, value)});
}

}  // namespace

Tobst Tobst::insert(std::size_t step, Value value) const {
    if (step != size_ + 1)
        throw StepGap(size_ + 1, step);
    return Tobst(insert_node(root_, step, value), size_ + 1);
}

std::vector<Value> Tobst::in_order_values() const {
    std::vector<Value> out;
    out.reserve(size_);
    std::function<void(const NodePtr&)> walk = [&](const NodePtr& n) {
        if (!n) return;
        walk(n->left);
        out.push_back(n->value);
        walk(n->right);
    };
    walk(root_);
    return out;
}

std::string_view to_string(SpineKind k) {
    switch (k) {
        case SpineKind::RightSpine: return "RightSpine";
        case SpineKind::LeftSpine: return "LeftSpine";
        case SpineKind::Both: return "Both";
        case SpineKind::Neither: return "Neither";
    }
    return "?";
}

std::vector<Tobst> tobst_build(const Listing& h) {
    std::vector<Tobst> snapshots;
    snapshots.reserve(h.size());
    Tobst t;
    for (std::size_t i = 1; i <= h.size(); ++i) {
        t = t.insert(i, h.at(i));
        snapshots.push_back(t);
    }
    return snapshots;
}

TobstShape shape_encode(const Tobst& t) {
    std::string out;
    std::function<void(const Tobst::NodePtr&)> enc = [&](const Tobst::NodePtr& n) {
        if (!n) return;
        out += '(';
        enc(n->left);
        out += ',';
        enc(n->right);
        out += ')';
    };
    enc(t.root());
    return TobstShape{std::move(out)};
}

bool isomorphic_at_step(const Listing& h, const Listing& g, std::size_t i) {
    if (i > h.size() || i > g.size())
        throw OutOfRange("step " + std::to_string(i) + " exceeds a listing length");
    auto hs = tobst_build(h.prefix(i));
    auto gs = tobst_build(g.prefix(i));
    Tobst ht = hs.empty() ? Tobst{} : hs.back();
    Tobst gt = gs.empty() ? Tobst{} : gs.back();
    return shape_encode(ht) == shape_encode(gt);
}

bool uniform_via_tobst(const Listing& h, const Listing& g) {
    if (h.size() != g.size())
        throw LengthMismatch();
    auto hs = tobst_build(h);
    auto gs = tobst_build(g);
    for (std::size_t i = 0; i < hs.size(); ++i)
        if (shape_encode(hs[i]) != shape_encode(gs[i]))
            return false;
    return true;
}

SpineKind spine_kind(const Tobst& t) {
    if (t.size() <= 1)
        return SpineKind::Both;
    bool has_left = false, has_right = false;
    std::function<void(const Tobst::NodePtr&)> walk = [&](const Tobst::NodePtr& n) {
        if (!n) return;
        if (n->left) has_left = true;
        if (n->right) has_right = true;
        walk(n->left);
        walk(n->right);
    };
    walk(t.root());
    if (!has_left && has_right) return SpineKind::RightSpine;
    if (!has_right && has_left) return SpineKind::LeftSpine;
    return SpineKind::Neither;
}

std::string export_dot(const Tobst& t) {
    std::ostringstream out;
    out << "digraph tobst {\n";
    // Preorder ids, then nodes, then edges, all in preorder.
    std::size_t next_id = 0;
    std::function<void(const Tobst::NodePtr&)> nodes = [&](const Tobst::NodePtr& n) {
        if (!n) return;
        out << "  n" << next_id++ << " [label=\"" << n->step << ":" << n->value
            << "\"];\n";
        nodes(n->left);
        nodes(n->right);
    };
    nodes(t.root());
    next_id = 0;
    std::function<std::size_t(const Tobst::NodePtr&)> edges =
        [&](const Tobst::NodePtr& n) -> std::size_t {
        std::size_t id = next_id++;
        if (n->left) {
            out << "  n" << id << " -> n" << next_id << " [label=\"L\"];\n";
            edges(n->left);
        }
        if (n->right) {
            out << "  n" << id << " -> n" << next_id << " [label=\"R\"];\n";
            edges(n->right);
        }
        return id;
    };
    if (t.root()) edges(t.root());
    out << "}\n";
    return out.str();
}

}  // namespace eo
