#include <strongdiff/kernels/subset_kernels.hpp>

#include <cstdlib>
#include <string_view>

namespace strongdiff::kernels
{
    auto scalar_table() -> const KernelTable &
    {
        static const KernelTable table{"scalar", &scalar::coverage, &scalar::weak_members};
        return table;
    }

    auto avx2_table() -> const KernelTable *
    {
#if defined(STRONGDIFF_HAVE_AVX2)
        static const KernelTable table{"avx2", &avx2::coverage, &avx2::weak_members};
        static const bool supported = __builtin_cpu_supports("avx2");
        return supported ? &table : nullptr;
#else
        return nullptr;
#endif
    }

    auto active() -> const KernelTable &
    {
        static const KernelTable & selected = [] () -> const KernelTable & {
            auto forced = std::getenv("STRONGDIFF_SIMD");
            if (forced && std::string_view(forced) == "scalar")
                return scalar_table();
            if (auto t = avx2_table())
                return *t;
            return scalar_table();
        }();
        return selected;
    }
}
