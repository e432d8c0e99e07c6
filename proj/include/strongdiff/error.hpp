#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strongdiff
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class InvalidVertex : public Error
    {
        public:
            using Error::Error;
    };

    class InvalidArgument : public Error
    {
        public:
            using Error::Error;
    };

    class InvalidGraph : public Error
    {
        public:
            using Error::Error;
    };

    /// Raised when an invariant is requested on a graph where it has no meaning,
    /// e.g. semitotal domination on a graph with an isolated vertex.
    class UndefinedInvariant : public Error
    {
        public:
            using Error::Error;
    };

    class SizeGuardExceeded : public Error
    {
        public:
            SizeGuardExceeded(std::size_t order, std::size_t guard);

            auto order() const noexcept -> std::size_t { return _order; }
            auto guard() const noexcept -> std::size_t { return _guard; }

        private:
            std::size_t _order;
            std::size_t _guard;
    };

    class EmptyGraph : public Error
    {
        public:
            EmptyGraph();
    };

    class InvalidSpec : public Error
    {
        public:
            using Error::Error;
    };

    class NotATree : public Error
    {
        public:
            using Error::Error;
    };

    class UnknownTheorem : public Error
    {
        public:
            explicit UnknownTheorem(const std::string & id);
    };

    /// Parse failure carrying either a byte offset (graph6) or a 1-based line
    /// number (edge lists); the unused one is zero.
    class ParseError : public Error
    {
        public:
            ParseError(const std::string & message, std::size_t offset, std::size_t line);

            auto offset() const noexcept -> std::size_t { return _offset; }
            auto line() const noexcept -> std::size_t { return _line; }

        private:
            std::size_t _offset;
            std::size_t _line;
    };
}
