#include <strongdiff/error.hpp>

namespace strongdiff
{
    SizeGuardExceeded::SizeGuardExceeded(std::size_t order, std::size_t guard) :
        Error("graph order " + std::to_string(order) + " exceeds size guard " + std::to_string(guard)),
        _order(order),
        _guard(guard)
    {
    }

    EmptyGraph::EmptyGraph() :
        Error("invariant requested on the empty graph")
    {
    }

    UnknownTheorem::UnknownTheorem(const std::string & id) :
        Error("unknown theorem id '" + id + "'")
    {
    }

    ParseError::ParseError(const std::string & message, std::size_t offset, std::size_t line) :
        Error(message),
        _offset(offset),
        _line(line)
    {
    }
}
