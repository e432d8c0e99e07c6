#include <strongdiff/kernels/subset_kernels.hpp>

#include <immintrin.h>

namespace strongdiff::kernels::avx2
{
    // Lanes hold candidate sets; the vertex loop runs over the whole adjacency
    // table and selects row v in the lanes whose set contains v.

    auto coverage(std::span<const std::uint64_t> adjacency, std::span<const std::uint64_t> masks,
            std::span<std::uint64_t> once, std::span<std::uint64_t> twice) -> void
    {
        auto n = adjacency.size();
        std::size_t i = 0;
        for ( ; i + 8 <= masks.size() ; i += 8) {
            auto m0 = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(masks.data() + i));
            auto m1 = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(masks.data() + i + 4));
            auto o0 = _mm256_setzero_si256(), o1 = _mm256_setzero_si256();
            auto t0 = _mm256_setzero_si256(), t1 = _mm256_setzero_si256();
            for (std::size_t v = 0 ; v < n ; ++v) {
                auto bit = _mm256_set1_epi64x(static_cast<long long>(std::uint64_t{1} << v));
                auto row = _mm256_set1_epi64x(static_cast<long long>(adjacency[v]));
                auto x0 = _mm256_and_si256(_mm256_cmpeq_epi64(_mm256_and_si256(m0, bit), bit), row);
                auto x1 = _mm256_and_si256(_mm256_cmpeq_epi64(_mm256_and_si256(m1, bit), bit), row);
                t0 = _mm256_or_si256(t0, _mm256_and_si256(o0, x0));
                t1 = _mm256_or_si256(t1, _mm256_and_si256(o1, x1));
                o0 = _mm256_or_si256(o0, x0);
                o1 = _mm256_or_si256(o1, x1);
            }
            _mm256_storeu_si256(reinterpret_cast<__m256i *>(once.data() + i), o0);
            _mm256_storeu_si256(reinterpret_cast<__m256i *>(once.data() + i + 4), o1);
            _mm256_storeu_si256(reinterpret_cast<__m256i *>(twice.data() + i), t0);
            _mm256_storeu_si256(reinterpret_cast<__m256i *>(twice.data() + i + 4), t1);
        }
        if (i < masks.size())
            scalar::coverage(adjacency, masks.subspan(i), once.subspan(i), twice.subspan(i));
    }

    auto weak_members(std::span<const std::uint64_t> adjacency, std::span<const std::uint64_t> masks,
            std::span<const std::uint64_t> privates, std::span<std::uint64_t> weak) -> void
    {
        auto n = adjacency.size();
        auto zero = _mm256_setzero_si256();
        std::size_t i = 0;
        for ( ; i + 8 <= masks.size() ; i += 8) {
            auto m0 = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(masks.data() + i));
            auto m1 = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(masks.data() + i + 4));
            auto p0 = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(privates.data() + i));
            auto p1 = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(privates.data() + i + 4));
            auto w0 = _mm256_setzero_si256(), w1 = _mm256_setzero_si256();
            for (std::size_t v = 0 ; v < n ; ++v) {
                auto bit = _mm256_set1_epi64x(static_cast<long long>(std::uint64_t{1} << v));
                auto row = _mm256_set1_epi64x(static_cast<long long>(adjacency[v]));
                auto in0 = _mm256_cmpeq_epi64(_mm256_and_si256(m0, bit), bit);
                auto in1 = _mm256_cmpeq_epi64(_mm256_and_si256(m1, bit), bit);
                auto hit0 = _mm256_andnot_si256(_mm256_cmpeq_epi64(_mm256_and_si256(p0, row), zero), in0);
                auto hit1 = _mm256_andnot_si256(_mm256_cmpeq_epi64(_mm256_and_si256(p1, row), zero), in1);
                w0 = _mm256_or_si256(w0, _mm256_and_si256(hit0, bit));
                w1 = _mm256_or_si256(w1, _mm256_and_si256(hit1, bit));
            }
            _mm256_storeu_si256(reinterpret_cast<__m256i *>(weak.data() + i), w0);
            _mm256_storeu_si256(reinterpret_cast<__m256i *>(weak.data() + i + 4), w1);
        }
        if (i < masks.size())
            scalar::weak_members(adjacency, masks.subspan(i), privates.subspan(i), weak.subspan(i));
    }
}
