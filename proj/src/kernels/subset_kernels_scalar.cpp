#include <strongdiff/kernels/subset_kernels.hpp>

#include <bit>

namespace strongdiff::kernels::scalar
{
    auto coverage(std::span<const std::uint64_t> adjacency, std::span<const std::uint64_t> masks,
            std::span<std::uint64_t> once, std::span<std::uint64_t> twice) -> void
    {
        for (std::size_t i = 0 ; i < masks.size() ; ++i) {
            std::uint64_t seen_once = 0, seen_twice = 0;
            for (auto bits = masks[i] ; bits ; bits &= bits - 1) {
                auto row = adjacency[std::countr_zero(bits)];
                seen_twice |= seen_once & row;
                seen_once |= row;
            }
            once[i] = seen_once;
            twice[i] = seen_twice;
        }
    }

    auto weak_members(std::span<const std::uint64_t> adjacency, std::span<const std::uint64_t> masks,
            std::span<const std::uint64_t> privates, std::span<std::uint64_t> weak) -> void
    {
        for (std::size_t i = 0 ; i < masks.size() ; ++i) {
            std::uint64_t result = 0;
            for (auto bits = masks[i] ; bits ; bits &= bits - 1) {
                auto v = std::countr_zero(bits);
                if (adjacency[v] & privates[i])
                    result |= std::uint64_t{1} << v;
            }
            weak[i] = result;
        }
    }
}
