#pragma once

#include <strongdiff/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace strongdiff
{
    enum class Family
    {
        Path,
        Cycle,
        Star,
        Complete,
        Empty,
        CompleteBipartite,
        SubdividedStar,
        Corona,
        Union,
        FamilyG,
        FigureA,
        FigureB,
        RandomGnp,
        RandomTree
    };

    enum class SupportLayout
    {
        Path,
        None,
        Complete
    };

    /**
     * A recipe for one graph. Canonical text forms:
     *
     *   path:N  cycle:N  star:R  complete:N  empty:N  bipartite:A,B  substar:R
     *   corona(G1,G2)  union(G1,G2)  family-g:L1,L2,...[,supports=path|none|complete]
     *   figure-a  figure-b  gnp:n=N,p=P,seed=S  tree:n=N,seed=S
     *
     * Numbering: stars and subdivided stars have centre 0; a corona lists the
     * G1 vertices first and then the copies of G2 in order; family-g lists
     * the supports first, then each support's leaves.
     */
    struct FamilySpec
    {
        Family family = Family::Path;
        std::vector<std::size_t> params;
        double probability = 0.0;
        std::uint64_t seed = 0;
        std::vector<FamilySpec> operands;
        SupportLayout supports = SupportLayout::Path;

        friend auto operator==(const FamilySpec &, const FamilySpec &) -> bool = default;
    };

    auto parse_family_spec(std::string_view text) -> FamilySpec;
    auto to_string(const FamilySpec & spec) -> std::string;
    auto generate(const FamilySpec & spec) -> Graph;

    auto path_graph(std::size_t n) -> Graph;
    auto cycle_graph(std::size_t n) -> Graph;
    auto star_graph(std::size_t leaves) -> Graph;
    auto complete_graph(std::size_t n) -> Graph;
    auto complete_bipartite_graph(std::size_t a, std::size_t b) -> Graph;
    auto subdivided_star(std::size_t r) -> Graph;
    auto corona(const Graph & g1, const Graph & g2) -> Graph;
    auto family_g_member(const std::vector<std::size_t> & leaves_per_support, SupportLayout layout = SupportLayout::Path) -> Graph;
    auto figure_a() -> Graph;
    auto figure_b() -> Graph;

    /// Vertex labels of the figure graphs, indexed by vertex.
    auto figure_a_labels() -> const std::vector<std::string> &;
    auto figure_b_labels() -> const std::vector<std::string> &;
    auto figure_a_vertex(std::string_view label) -> Vertex;
    auto figure_b_vertex(std::string_view label) -> Vertex;

    /// Family of graphs of order >= 3 whose vertices split into leaves and
    /// supports, with every support adjacent to at least two leaves.
    auto is_family_g(const Graph & g) -> bool;

    /// Literal check of conditions A.1-A.4 at every maximum-degree vertex.
    /// Throws NotATree for non-trees and InvalidArgument for order < 3.
    auto is_family_t(const Graph & t) -> bool;

    /// 64-bit splitmix generator; streams are reproducible per seed.
    class SplitMix64
    {
        public:
            explicit SplitMix64(std::uint64_t seed) : _state(seed) {}

            auto next() -> std::uint64_t;
            /// Uniform in [0, bound), bound >= 1.
            auto below(std::uint64_t bound) -> std::uint64_t;
            /// Uniform in [0, 1) with 53 bits.
            auto unit() -> double;

        private:
            std::uint64_t _state;
    };

    auto random_gnp(std::size_t n, double p, std::uint64_t seed) -> Graph;
    /// Uniform labelled tree via a random Pruefer sequence.
    auto random_tree(std::size_t n, std::uint64_t seed) -> Graph;

    auto pruefer_decode(std::size_t n, const std::vector<std::size_t> & sequence) -> Graph;

    /// AHU encoding rooted at the centre (minimum over both centres).
    auto canonical_tree_code(const Graph & t) -> std::string;

    /**
     * Streams trees on n <= 12 vertices by walking every Pruefer sequence.
     * For n <= 9 the stream yields one tree per isomorphism class (first
     * labelled representative met); beyond that every labelled tree.
     */
    class TreeStream
    {
        public:
            explicit TreeStream(std::size_t n);
            ~TreeStream();
            TreeStream(TreeStream &&) noexcept;
            auto operator=(TreeStream &&) noexcept -> TreeStream &;

            auto next() -> std::optional<Graph>;

        private:
            struct State;
            std::unique_ptr<State> _state;
    };

    auto enumerate_trees(std::size_t n) -> std::vector<Graph>;

    /// Canonical adjacency code for order <= 11: the minimum upper-triangle
    /// bit string over labellings compatible with colour refinement.
    auto canonical_code(const Graph & g) -> std::uint64_t;
    auto graph_from_code(std::size_t n, std::uint64_t code) -> Graph;

    /// One canonical representative per isomorphism class, order n <= 8.
    auto enumerate_graphs(std::size_t n, bool connected_only) -> std::vector<Graph>;

    /// A graph together with where it came from.
    struct SourcedGraph
    {
        std::string source;
        Graph graph;
        std::optional<FamilySpec> spec;
    };

    /**
     * Expands a stream description into graphs. Besides single FamilySpec
     * texts this accepts:
     *
     *   gnp:...,count=K / tree:...,count=K   K graphs with seeds S, S+1, ...
     *   trees:n=A[-B]                        TreeStream for each order
     *   graphs:n=A[-B][,connected]           enumerate_graphs for each order
     *   corpus:mixed                         mixed_corpus()
     *
     * Several descriptions may be joined with ';'. count_override and
     * seed_override replace the count/seed of random families.
     */
    auto expand_stream(std::string_view text, std::optional<std::size_t> count_override = std::nullopt,
            std::optional<std::uint64_t> seed_override = std::nullopt) -> std::vector<SourcedGraph>;

    /// Random graphs n <= 10, trees n <= 9, coronas, family-g members, the
    /// figure graphs, K_{2,r} for r <= 5, stars, paths and cycles up to 12.
    auto mixed_corpus(std::uint64_t seed = 1) -> std::vector<SourcedGraph>;
}
