#include "ksieve/iasi.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ksieve/errors.hpp"
#include "ksieve/io.hpp"

namespace ksieve {

using nlohmann::json;

SetLabel::SetLabel(std::vector<Element> elements) : elements_(std::move(elements))
{
    if (elements_.empty())
        throw DomainError("set-label must be non-empty");
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

SetLabel sumset(const SetLabel& a, const SetLabel& b)
{
    std::vector<SetLabel::Element> out;
    out.reserve(a.size() * b.size());
    for (auto x : a.elements())
        for (auto y : b.elements())
            out.push_back(x + y);
    return SetLabel(std::move(out));
}

std::string to_string(const SetLabel& label)
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < label.size(); ++i)
        out << (i ? "," : "") << label.elements()[i];
    out << '}';
    return out.str();
}

Labeling::Labeling(std::vector<SetLabel> per_vertex)
{
    for (Vertex v = 0; v < per_vertex.size(); ++v)
        labels_.emplace(v, std::move(per_vertex[v]));
}

const SetLabel& Labeling::at(Vertex v) const
{
    auto it = labels_.find(v);
    if (it == labels_.end())
        throw DomainError("vertex " + std::to_string(v) + " has no set-label");
    return it->second;
}

std::vector<SetLabel> Labeling::edge_labels(const Graph& g) const
{
    std::vector<SetLabel> out;
    out.reserve(g.size());
    for (const Edge& e : g.edges())
        out.push_back(edge_label(e));
    return out;
}

void Labeling::require_covers(const Graph& g) const
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (!has(v))
            throw DomainError("vertex " + std::to_string(v) + " has no set-label");
}

namespace {

template <typename Range>
bool pairwise_distinct(const Range& items)
{
    std::set<SetLabel> seen;
    for (const auto& x : items)
        if (!seen.insert(x).second)
            return false;
    return true;
}

} // namespace

bool is_iasi(const Graph& g, const Labeling& lab)
{
    lab.require_covers(g);
    std::vector<SetLabel> vertex;
    for (Vertex v = 0; v < g.order(); ++v)
        vertex.push_back(lab.at(v));
    return pairwise_distinct(vertex) && pairwise_distinct(lab.edge_labels(g));
}

bool is_weak_iasi(const Graph& g, const Labeling& lab)
{
    if (!is_iasi(g, lab))
        return false;
    bool by_cardinality = true;
    bool by_endpoint = true;
    for (const Edge& e : g.edges()) {
        const SetLabel& a = lab.at(e.u);
        const SetLabel& b = lab.at(e.v);
        by_cardinality = by_cardinality && sumset(a, b).size() == std::max(a.size(), b.size());
        by_endpoint = by_endpoint && (a.is_singleton() || b.is_singleton());
    }
    if (by_cardinality != by_endpoint)
        throw std::logic_error("weak IASI characterisations disagree");
    return by_cardinality;
}

std::size_t mono_indexed_edge_count(const Graph& g, const Labeling& lab)
{
    lab.require_covers(g);
    return std::count_if(g.edges().begin(), g.edges().end(),
                         [&](const Edge& e) { return lab.edge_label(e).is_singleton(); });
}

LabelingReport validate(const Graph& g, const Labeling& lab)
{
    LabelingReport report;
    report.iasi = is_iasi(g, lab);
    report.weak = is_weak_iasi(g, lab);
    for (const Edge& e : g.edges())
        if (lab.edge_label(e).is_singleton())
            report.mono_edge_list.push_back(e);
    report.mono_edges = report.mono_edge_list.size();
    for (Vertex v = 0; v < g.order(); ++v)
        report.mono_vertices += lab.at(v).is_singleton();
    return report;
}

Labeling synthesize_labeling(const Graph& g, const VertexSet& nonsingleton)
{
    if (nonsingleton.size() != g.order())
        throw DomainError("non-singleton set has the wrong universe size");
    for (const Edge& e : g.edges())
        if (nonsingleton.test(e.u) && nonsingleton.test(e.v))
            throw DomainError("non-singleton vertices " + std::to_string(e.u) + " and " + std::to_string(e.v) +
                              " are adjacent");

    // Vertices in index order; each takes the smallest base value that keeps
    // every label assigned so far injective. Two-element labels use a fresh
    // spread per vertex, so they never coincide with each other.
    Labeling lab;
    std::set<SetLabel> vertex_used;
    std::set<SetLabel> edge_used;
    SetLabel::Element spread = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const bool wide = nonsingleton.test(v);
        if (wide)
            ++spread;
        std::vector<Vertex> done;
        for (Vertex w : members(g.neighbors(v)))
            if (w < v)
                done.push_back(w);

        for (SetLabel::Element base = 0;; ++base) {
            SetLabel candidate = wide ? SetLabel{base, base + spread} : SetLabel::singleton(base);
            if (vertex_used.contains(candidate))
                continue;
            std::vector<SetLabel> new_edges;
            bool clash = false;
            for (Vertex w : done) {
                SetLabel sum = sumset(candidate, lab.at(w));
                clash = edge_used.contains(sum) ||
                        std::find(new_edges.begin(), new_edges.end(), sum) != new_edges.end();
                if (clash)
                    break;
                new_edges.push_back(std::move(sum));
            }
            if (clash)
                continue;
            vertex_used.insert(candidate);
            edge_used.insert(new_edges.begin(), new_edges.end());
            lab.assign(v, std::move(candidate));
            break;
        }
    }

    if (!is_weak_iasi(g, lab))
        throw std::logic_error("synthesized labeling failed weak IASI verification");
    return lab;
}

json labeling_to_json(const Labeling& lab)
{
    json labels = json::object();
    for (const auto& [v, label] : lab.vertex_labels())
        labels[std::to_string(v)] = label.elements();
    return json{{"vertex_labels", std::move(labels)}};
}

Labeling labeling_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("vertex_labels") || !j.at("vertex_labels").is_object())
        throw FormatError("labeling JSON must contain a \"vertex_labels\" object");
    Labeling lab;
    for (const auto& [key, value] : j.at("vertex_labels").items()) {
        Vertex v = 0;
        try {
            std::size_t used = 0;
            v = std::stoull(key, &used);
            if (used != key.size())
                throw std::invalid_argument(key);
        }
        catch (const std::exception&) {
            throw FormatError("labeling JSON: vertex key \"" + key + "\" is not an index");
        }
        if (!value.is_array() || value.empty())
            throw FormatError("labeling JSON: label of vertex " + key + " must be a non-empty array");
        std::vector<SetLabel::Element> elems;
        for (const json& x : value) {
            if (!x.is_number_unsigned())
                throw FormatError("labeling JSON: label elements must be non-negative integers");
            elems.push_back(x.get<SetLabel::Element>());
        }
        lab.assign(v, SetLabel(std::move(elems)));
    }
    return lab;
}

std::string labeled_dot(const Graph& g, const Labeling& lab)
{
    DotStyle style;
    style.vertex_label = [&](Vertex v) {
        return lab.has(v) ? std::to_string(v) + " " + to_string(lab.at(v)) : std::string();
    };
    style.edge_attributes = [&](const Edge& e) {
        if (!lab.has(e.u) || !lab.has(e.v))
            return std::string();
        SetLabel sum = lab.edge_label(e);
        std::string attrs = "label=\"" + to_string(sum) + "\"";
        if (sum.is_singleton())
            attrs += ", style=dashed";
        return attrs;
    };
    return to_dot(g, style);
}

} // namespace ksieve
