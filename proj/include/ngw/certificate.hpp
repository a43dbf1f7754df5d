#pragma once

#include <ngw/graph.hpp>

#include <variant>
#include <vector>

namespace ngw {

// Vertices in elimination order.
struct EliminationOrdering {
    std::vector<int> order;
};

// Linear layout; its vertex separation number is the width.
struct VertexLayout {
    std::vector<int> order;
};

// A host k-tree on the vertices of the input graph, given by its seed clique
// and the attachment clique of every later vertex. The embedding is the
// identity on vertex labels.
struct KTreeHost {
    enum class Shape { caterpillar, linear, two_sided };

    Shape shape = Shape::caterpillar;
    int k = 0;
    std::vector<int> seed;
    struct Step {
        int vertex;
        VertexSet attach;
    };
    std::vector<Step> steps;
};

// Pairwise adjacent, vertex-disjoint connected branch sets of a clique minor.
struct BranchSets {
    std::vector<VertexSet> sets;
};

struct CliqueWitness {
    VertexSet members = 0;
};

// colors[v] in 0..k-1.
struct Coloring {
    std::vector<int> colors;
};

using WidthCertificate =
    std::variant<EliminationOrdering, VertexLayout, KTreeHost, BranchSets, CliqueWitness, Coloring>;

struct WidthResult {
    int value = 0;
    WidthCertificate certificate;
};

} // namespace ngw
