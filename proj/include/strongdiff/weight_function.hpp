#pragma once

#include <strongdiff/vertex_set.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace strongdiff
{
    /**
     * A map V -> {0, 1, 2}, i.e. a candidate Roman or Italian dominating
     * function f(V0, V1, V2). Its weight is |V1| + 2|V2|.
     */
    class WeightFunction
    {
        public:
            WeightFunction() = default;
            explicit WeightFunction(std::size_t order);
            explicit WeightFunction(std::vector<std::uint8_t> weights);

            /// The function with V1 = ones and V2 = twos; the sets must be disjoint.
            static auto from_levels(const VertexSet & ones, const VertexSet & twos) -> WeightFunction;

            auto order() const noexcept -> std::size_t { return _weights.size(); }
            auto weight() const noexcept -> std::size_t { return _weight; }
            auto operator[](Vertex v) const -> std::uint8_t;
            auto weights() const noexcept -> std::span<const std::uint8_t> { return _weights; }

            /// V0, V1 or V2.
            auto level(std::uint8_t value) const -> VertexSet;

            friend auto operator==(const WeightFunction &, const WeightFunction &) -> bool = default;

            /// Lexicographic order on the weight string f(0) f(1) ... f(n-1).
            friend auto lex_less(const WeightFunction & a, const WeightFunction & b) -> bool
            {
                return a._weights < b._weights;
            }

        private:
            std::vector<std::uint8_t> _weights;
            std::size_t _weight = 0;
    };
}
