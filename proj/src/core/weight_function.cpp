#include <strongdiff/weight_function.hpp>
#include <strongdiff/error.hpp>

#include <string>

namespace strongdiff
{
    WeightFunction::WeightFunction(std::size_t order) :
        _weights(order, 0)
    {
    }

    WeightFunction::WeightFunction(std::vector<std::uint8_t> weights) :
        _weights(std::move(weights))
    {
        for (auto w : _weights) {
            if (w > 2)
                throw InvalidArgument("weight " + std::to_string(w) + " outside {0,1,2}");
            _weight += w;
        }
    }

    auto WeightFunction::from_levels(const VertexSet & ones, const VertexSet & twos) -> WeightFunction
    {
        if (ones.universe() != twos.universe())
            throw InvalidArgument("levels over different universes");
        if (ones.intersects(twos))
            throw InvalidArgument("V1 and V2 overlap");
        std::vector<std::uint8_t> weights(ones.universe(), 0);
        ones.for_each([&] (Vertex v) { weights[v] = 1; });
        twos.for_each([&] (Vertex v) { weights[v] = 2; });
        return WeightFunction(std::move(weights));
    }

    auto WeightFunction::operator[](Vertex v) const -> std::uint8_t
    {
        if (v >= _weights.size())
            throw InvalidVertex("vertex " + std::to_string(v) + " outside weight function");
        return _weights[v];
    }

    auto WeightFunction::level(std::uint8_t value) const -> VertexSet
    {
        VertexSet result(_weights.size());
        for (Vertex v = 0 ; v < _weights.size() ; ++v)
            if (_weights[v] == value)
                result.insert(v);
        return result;
    }
}
