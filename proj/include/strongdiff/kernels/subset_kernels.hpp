#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

/**
 * Batched neighbourhood-coverage kernels over single-word vertex sets
 * (graphs of at most 64 vertices). Each kernel evaluates many candidate sets
 * against one adjacency table; the exhaustive oracles stream all 2^n subsets
 * through them.
 *
 * Every kernel exists as a scalar reference and, where the target supports it,
 * an AVX2 variant. active() picks one at runtime; setting the environment
 * variable STRONGDIFF_SIMD to "scalar" forces the reference path.
 */
namespace strongdiff::kernels
{
    /// once[i] = N(masks[i]); twice[i] = vertices with at least two neighbours in masks[i].
    using CoverageFn = void (*)(std::span<const std::uint64_t> adjacency,
            std::span<const std::uint64_t> masks,
            std::span<std::uint64_t> once,
            std::span<std::uint64_t> twice);

    /// weak[i] = members v of masks[i] with N(v) meeting privates[i].
    using WeakMembersFn = void (*)(std::span<const std::uint64_t> adjacency,
            std::span<const std::uint64_t> masks,
            std::span<const std::uint64_t> privates,
            std::span<std::uint64_t> weak);

    struct KernelTable
    {
        std::string_view name;
        CoverageFn coverage;
        WeakMembersFn weak_members;
    };

    auto scalar_table() -> const KernelTable &;

    /// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
    auto avx2_table() -> const KernelTable *;

    auto active() -> const KernelTable &;

    namespace scalar
    {
        auto coverage(std::span<const std::uint64_t> adjacency, std::span<const std::uint64_t> masks,
                std::span<std::uint64_t> once, std::span<std::uint64_t> twice) -> void;
        auto weak_members(std::span<const std::uint64_t> adjacency, std::span<const std::uint64_t> masks,
                std::span<const std::uint64_t> privates, std::span<std::uint64_t> weak) -> void;
    }

#if defined(STRONGDIFF_HAVE_AVX2)
    namespace avx2
    {
        auto coverage(std::span<const std::uint64_t> adjacency, std::span<const std::uint64_t> masks,
                std::span<std::uint64_t> once, std::span<std::uint64_t> twice) -> void;
        auto weak_members(std::span<const std::uint64_t> adjacency, std::span<const std::uint64_t> masks,
                std::span<const std::uint64_t> privates, std::span<std::uint64_t> weak) -> void;
    }
#endif
}
