#include <strongdiff/vertex_set.hpp>
#include <strongdiff/error.hpp>

#include <algorithm>
#include <string>

namespace strongdiff
{
    namespace
    {
        auto word_count(std::size_t universe) -> std::size_t
        {
            return (universe + 63) / 64;
        }

        auto tail_mask(std::size_t universe) -> std::uint64_t
        {
            auto r = universe % 64;
            return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
        }
    }

    VertexSet::VertexSet(std::size_t universe) :
        _universe(universe),
        _words(word_count(universe), 0)
    {
    }

    VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) :
        VertexSet(universe, std::span<const Vertex>(members.begin(), members.size()))
    {
    }

    VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) :
        VertexSet(universe)
    {
        for (auto v : members)
            insert(v);
    }

    auto VertexSet::full(std::size_t universe) -> VertexSet
    {
        VertexSet result(universe);
        std::fill(result._words.begin(), result._words.end(), ~std::uint64_t{0});
        if (! result._words.empty())
            result._words.back() &= tail_mask(universe);
        return result;
    }

    auto VertexSet::from_mask(std::size_t universe, std::uint64_t mask) -> VertexSet
    {
        if (universe > 64)
            throw InvalidArgument("from_mask needs a universe of at most 64 vertices");
        if (universe < 64 && (mask >> universe) != 0)
            throw InvalidVertex("mask has bits outside the vertex range");
        VertexSet result(universe);
        if (universe > 0)
            result._words[0] = mask;
        return result;
    }

    auto VertexSet::size() const noexcept -> std::size_t
    {
        std::size_t result = 0;
        for (auto w : _words)
            result += std::popcount(w);
        return result;
    }

    auto VertexSet::empty() const noexcept -> bool
    {
        return std::all_of(_words.begin(), _words.end(), [] (auto w) { return w == 0; });
    }

    auto VertexSet::check_vertex(Vertex v) const -> void
    {
        if (v >= _universe)
            throw InvalidVertex("vertex " + std::to_string(v) + " outside range 0.." + std::to_string(_universe));
    }

    auto VertexSet::check_same_universe(const VertexSet & other) const -> void
    {
        if (other._universe != _universe)
            throw InvalidArgument("vertex sets over different universes");
    }

    auto VertexSet::contains(Vertex v) const -> bool
    {
        check_vertex(v);
        return (_words[v / 64] >> (v % 64)) & 1;
    }

    auto VertexSet::insert(Vertex v) -> void
    {
        check_vertex(v);
        _words[v / 64] |= std::uint64_t{1} << (v % 64);
    }

    auto VertexSet::erase(Vertex v) -> void
    {
        check_vertex(v);
        _words[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }

    auto VertexSet::members() const -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        result.reserve(size());
        for_each([&] (Vertex v) { result.push_back(v); });
        return result;
    }

    auto VertexSet::mask() const -> std::uint64_t
    {
        if (_universe > 64)
            throw InvalidArgument("mask() needs a universe of at most 64 vertices");
        return _words.empty() ? 0 : _words[0];
    }

    auto VertexSet::operator|=(const VertexSet & other) -> VertexSet &
    {
        check_same_universe(other);
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] |= other._words[i];
        return *this;
    }

    auto VertexSet::operator&=(const VertexSet & other) -> VertexSet &
    {
        check_same_universe(other);
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] &= other._words[i];
        return *this;
    }

    auto VertexSet::operator-=(const VertexSet & other) -> VertexSet &
    {
        check_same_universe(other);
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] &= ~other._words[i];
        return *this;
    }

    auto VertexSet::intersects(const VertexSet & other) const -> bool
    {
        check_same_universe(other);
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            if (_words[i] & other._words[i])
                return true;
        return false;
    }

    auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
    {
        check_same_universe(other);
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            if (_words[i] & ~other._words[i])
                return false;
        return true;
    }

    auto VertexSet::complement() const -> VertexSet
    {
        return full(_universe) - *this;
    }

    auto lex_less(const VertexSet & a, const VertexSet & b) -> bool
    {
        a.check_same_universe(b);
        for (std::size_t i = 0 ; i < a._words.size() ; ++i)
            if (a._words[i] != b._words[i])
                return mask_lex_less(a._words[i], b._words[i]);
        return false;
    }

    auto operator|(VertexSet a, const VertexSet & b) -> VertexSet
    {
        return a |= b;
    }

    auto operator&(VertexSet a, const VertexSet & b) -> VertexSet
    {
        return a &= b;
    }

    auto operator-(VertexSet a, const VertexSet & b) -> VertexSet
    {
        return a -= b;
    }
}
