#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcgraph/errors.hpp"
#include "lcgraph/plain_graph.hpp"
#include "lcgraph/poset.hpp"

namespace lcg {

/// Per-component descriptor: size, common vertex color (or non-uniform),
/// common pairwise edge color (or non-uniform), completeness. A size-1
/// component is vacuously edge-uniform with its edge color unset.
struct ComponentSummary {
    int size = 0;
    std::optional<int> vertex_color;  // nullopt = not vertex-uniform
    std::optional<int> edge_color;    // nullopt = not edge-uniform, or unset
    bool edge_color_unset = false;
    bool complete = false;

    bool vertex_uniform() const { return vertex_color.has_value(); }
    bool edge_uniform() const { return edge_color.has_value() || edge_color_unset; }
    bool uniform() const { return vertex_uniform() && edge_uniform(); }
};

/// Finite L-colored graph, optionally directed and/or with loops. Vertex
/// colors and the full n*n edge color matrix live over a shared poset.
/// Immutable after construction; all operations are const.
class ColoredStructure {
public:
    /// edge_colors is row-major n*n. Without loops the diagonal must be the
    /// bottom color (LoopError); without directed the matrix must be
    /// symmetric (AsymmetryError). Vertex names default to "0", "1", ...
    ColoredStructure(std::shared_ptr<const Poset> poset, std::vector<int> vertex_colors,
                     std::vector<int> edge_colors, bool directed = false, bool loops = false,
                     std::vector<std::string> vertex_names = {});

    int size() const { return n_; }
    const Poset& poset() const { return *poset_; }
    const std::shared_ptr<const Poset>& poset_ptr() const { return poset_; }
    bool directed() const { return directed_; }
    bool loops_allowed() const { return loops_; }

    int vertex_color(int v) const { return vertex_color_[v]; }
    int edge_color(int u, int v) const { return edge_color_[u * n_ + v]; }
    const std::vector<int>& vertex_colors() const { return vertex_color_; }
    const std::vector<int>& edge_colors() const { return edge_color_; }

    const std::string& vertex_name(int v) const { return names_[v]; }
    std::optional<int> vertex_index(std::string_view name) const;

    /// Induced substructure on the given vertices (deduplicated, renumbered
    /// in ascending original order; names are carried over, so the index map
    /// back is recoverable from them). Also available via original_indices().
    ColoredStructure induced(std::span<const int> vertices) const;
    /// Ascending original indices the last induced() call preserves: the
    /// sorted, deduplicated subset used to build this structure — identity
    /// for structures not created by induced().
    const std::vector<int>& original_indices() const { return original_; }

    /// Connected components: classes of the reflexive-transitive closure of
    /// the nonzero-edge relation (symmetrized for directed structures).
    /// Classes are sorted internally and ordered by least vertex.
    std::vector<std::vector<int>> components() const;
    ComponentSummary summarize_component(std::span<const int> component) const;

    /// G^(alpha): substructure induced by the vertices of color alpha.
    /// Throws EmptySliceError when no vertex has that color.
    ColoredStructure vertex_slice(int alpha) const;

    /// G_(alpha): plain graph keeping exactly the alpha-colored edges.
    /// Only defined for undirected loopless structures (FlagError).
    PlainGraph edge_slice(int alpha) const;

    bool is_vertex_uniform() const { return common_vertex_color().has_value(); }
    std::optional<int> common_vertex_color() const;
    bool is_complete() const;

private:
    std::shared_ptr<const Poset> poset_;
    int n_;
    std::vector<int> vertex_color_;
    std::vector<int> edge_color_;
    bool directed_;
    bool loops_;
    std::vector<std::string> names_;
    std::vector<int> original_;
};

/// Lifts a plain graph over a poset: vertices get the bottom color, edges the
/// top color. The usual lift target is chain2.
ColoredStructure from_plain(const PlainGraph& g, std::shared_ptr<const Poset> poset);

}  // namespace lcg
