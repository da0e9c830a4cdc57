#pragma once

#include <rado/graph.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace rado
{
    /// Graph with an ordered list of disjoint parts covering all vertices.
    /// Empty parts are allowed.
    struct PartitionedGraph
    {
        Graph graph;
        std::vector<std::vector<Vertex>> parts;

        PartitionedGraph() = default;
        PartitionedGraph(Graph g, std::vector<std::vector<Vertex>> parts);

        /// Whole graph as a single part.
        static auto single_part(Graph g) -> PartitionedGraph;

        [[nodiscard]] auto part_of(Vertex v) const -> std::size_t;
        [[nodiscard]] auto part_set(std::size_t i) const -> VertexSet;

        friend auto operator==(const PartitionedGraph &, const PartitionedGraph &) -> bool = default;
    };

    /// Graph with an ordered list of distinct distinguished vertices.
    struct ConstantGraph
    {
        Graph graph;
        std::vector<Vertex> constants;

        ConstantGraph() = default;
        ConstantGraph(Graph g, std::vector<Vertex> constants);

        friend auto operator==(const ConstantGraph &, const ConstantGraph &) -> bool = default;
    };

    /// n singleton parts for the constants, then 2^n parts indexed by the
    /// adjacency pattern toward the constants (bit i set iff adjacent to
    /// constant i), ascending. Empty pattern parts are kept.
    auto associate_partitioned(const ConstantGraph & cg) -> PartitionedGraph;

    /// Index of the pattern part a non-constant vertex falls into.
    auto pattern_index(const ConstantGraph & cg, Vertex v) -> std::size_t;

    auto find_part_embeddings(const PartitionedGraph & pattern, const PartitionedGraph & host, std::size_t limit,
        bool order_preserving = false) -> std::vector<Embedding>;

    auto find_const_embeddings(const ConstantGraph & pattern, const ConstantGraph & host, std::size_t limit)
        -> std::vector<Embedding>;

    auto part_constraints(const PartitionedGraph & pattern, const PartitionedGraph & host, bool order_preserving = false)
        -> EmbeddingConstraints;
    auto constant_constraints(const ConstantGraph & pattern, const ConstantGraph & host) -> EmbeddingConstraints;

    [[nodiscard]] auto is_part_embedding(const PartitionedGraph & pattern, const PartitionedGraph & host, const Embedding & e) -> bool;
    [[nodiscard]] auto is_const_embedding(const ConstantGraph & pattern, const ConstantGraph & host, const Embedding & e) -> bool;

    /// Graph text format plus "part <i>: v1 v2 ..." lines. Vertices not named
    /// in any part line land in part 0 when no part lines are present.
    void write_partitioned(std::ostream & out, const PartitionedGraph & pg);
    auto read_partitioned(std::istream & in) -> PartitionedGraph;
    auto load_partitioned(const std::string & path) -> PartitionedGraph;

    /// Graph text format plus one "const: c1 c2 ..." line.
    void write_constant(std::ostream & out, const ConstantGraph & cg);
    auto read_constant(std::istream & in) -> ConstantGraph;
}
