#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace strongdiff
{
    using Vertex = std::size_t;

    /**
     * A subset of the vertex range {0, ..., universe-1} of some graph, stored as
     * a packed bitset. Universes of up to 64 vertices fit in one machine word,
     * which is the representation the solvers work with (see mask()).
     */
    class VertexSet
    {
        public:
            VertexSet() = default;
            explicit VertexSet(std::size_t universe);
            VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
            VertexSet(std::size_t universe, std::span<const Vertex> members);

            static auto full(std::size_t universe) -> VertexSet;
            static auto from_mask(std::size_t universe, std::uint64_t mask) -> VertexSet;

            auto universe() const noexcept -> std::size_t { return _universe; }
            auto size() const noexcept -> std::size_t;
            auto empty() const noexcept -> bool;

            auto contains(Vertex v) const -> bool;
            auto insert(Vertex v) -> void;
            auto erase(Vertex v) -> void;

            auto members() const -> std::vector<Vertex>;

            /// Requires universe() <= 64.
            auto mask() const -> std::uint64_t;

            auto words() const noexcept -> std::span<const std::uint64_t> { return _words; }

            auto operator|=(const VertexSet & other) -> VertexSet &;
            auto operator&=(const VertexSet & other) -> VertexSet &;
            auto operator-=(const VertexSet & other) -> VertexSet &;

            auto intersects(const VertexSet & other) const -> bool;
            auto is_subset_of(const VertexSet & other) const -> bool;
            auto complement() const -> VertexSet;

            template <typename F>
            auto for_each(F && f) const -> void
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w) {
                    auto bits = _words[w];
                    while (bits) {
                        f(Vertex(w * 64 + std::countr_zero(bits)));
                        bits &= bits - 1;
                    }
                }
            }

            friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

            /// Lexicographic order on the membership bit string b_0 b_1 ... b_{n-1};
            /// only meaningful between sets over the same universe.
            friend auto lex_less(const VertexSet & a, const VertexSet & b) -> bool;

        private:
            auto check_vertex(Vertex v) const -> void;
            auto check_same_universe(const VertexSet & other) const -> void;

            std::size_t _universe = 0;
            std::vector<std::uint64_t> _words;
    };

    auto operator|(VertexSet a, const VertexSet & b) -> VertexSet;
    auto operator&(VertexSet a, const VertexSet & b) -> VertexSet;
    auto operator-(VertexSet a, const VertexSet & b) -> VertexSet;

    /// Lexicographic order on single-word membership strings, bit i standing for
    /// vertex i: the lower-indexed vertex is the more significant position.
    constexpr auto mask_lex_less(std::uint64_t a, std::uint64_t b) noexcept -> bool
    {
        if (a == b)
            return false;
        auto first_difference = (a ^ b) & (~(a ^ b) + 1);
        return ! (a & first_difference);
    }
}
