#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ksieve/graph.hpp"

namespace ksieve {

/// Non-empty finite set of non-negative integers, stored sorted.
class SetLabel {
public:
    using Element = std::uint64_t;

    /// Sorts and deduplicates; throws DomainError when empty.
    explicit SetLabel(std::vector<Element> elements);
    SetLabel(std::initializer_list<Element> elements) : SetLabel(std::vector<Element>(elements)) {}

    static SetLabel singleton(Element x) { return SetLabel({x}); }

    const std::vector<Element>& elements() const { return elements_; }
    /// Set-indexing number.
    std::size_t size() const { return elements_.size(); }
    bool is_singleton() const { return elements_.size() == 1; }
    Element max() const { return elements_.back(); }

    auto operator<=>(const SetLabel&) const = default;

private:
    std::vector<Element> elements_;
};

/// {a + b : a in A, b in B}.
SetLabel sumset(const SetLabel& a, const SetLabel& b);

std::string to_string(const SetLabel& label);

/// Vertex set-labels. Edge labels are never stored: they are always the
/// sumset of the endpoint labels, recomputed on demand.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::vector<SetLabel> per_vertex);

    void assign(Vertex v, SetLabel label) { labels_.insert_or_assign(v, std::move(label)); }
    bool has(Vertex v) const { return labels_.contains(v); }
    /// Throws DomainError when v is unlabelled.
    const SetLabel& at(Vertex v) const;
    const std::map<Vertex, SetLabel>& vertex_labels() const { return labels_; }

    SetLabel edge_label(const Edge& e) const { return sumset(at(e.u), at(e.v)); }
    /// Aligned with g.edges().
    std::vector<SetLabel> edge_labels(const Graph& g) const;

    /// Throws DomainError naming the first vertex of g without a label.
    void require_covers(const Graph& g) const;

    friend bool operator==(const Labeling&, const Labeling&) = default;

private:
    std::map<Vertex, SetLabel> labels_;
};

/// Vertex labels pairwise distinct and induced edge labels pairwise distinct.
bool is_iasi(const Graph& g, const Labeling& lab);

/// IASI where |f(u)+f(v)| = max(|f(u)|,|f(v)|) on every edge. The
/// cardinality rule and the "some endpoint is a singleton" rule are both
/// evaluated; disagreement is a logic_error.
bool is_weak_iasi(const Graph& g, const Labeling& lab);

/// Edges whose label is a singleton. Computed for any covering labeling;
/// use validate() to see whether the labeling is actually weak.
std::size_t mono_indexed_edge_count(const Graph& g, const Labeling& lab);

struct LabelingReport {
    bool iasi = false;
    bool weak = false;
    std::size_t mono_edges = 0;
    std::size_t mono_vertices = 0;
    std::vector<Edge> mono_edge_list;
};

LabelingReport validate(const Graph& g, const Labeling& lab);

/// Witness weak IASI in which exactly the vertices of `nonsingleton` carry
/// 2-element labels. Throws DomainError unless `nonsingleton` is independent.
Labeling synthesize_labeling(const Graph& g, const VertexSet& nonsingleton);

// {"vertex_labels": {"0": [1], "1": [2, 5], ...}}
nlohmann::json labeling_to_json(const Labeling& lab);
/// Throws FormatError on malformed input; any "edge_labels" key is ignored.
Labeling labeling_from_json(const nlohmann::json& j);

/// DOT with set-labels on vertices; mono-indexed edges are dashed.
std::string labeled_dot(const Graph& g, const Labeling& lab);

} // namespace ksieve
