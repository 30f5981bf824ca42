// Measures how the evolution period T(N) of the triangle graph moves with the
// modulus, then checks the dyadic doubling anchored at N = 4.

#include <cstdio>

#include "circat/circat.hpp"

int main() {
    using namespace circat;

    GeneratingVector g = parse_bit_string("011");
    for (const PeriodResult& r : period_sweep_moduli(g, 2, 32, 100000))
        std::printf("N = %2lld  T = %llu\n", static_cast<long long>(r.modulus),
                    static_cast<unsigned long long>(r.period));

    ScalingCheck check = scaling_law_check(stride_vector(4, 2, true), 6);
    const char* verdict = check.verdict == LawVerdict::holds       ? "holds"
                          : check.verdict == LawVerdict::violated ? "violated"
                                                                  : "indeterminate";
    std::printf("dyadic doubling for the self-loop stride-2 square: %s\n", verdict);
    for (const PeriodResult& r : check.measurements)
        std::printf("  N = %2lld  T = %llu\n", static_cast<long long>(r.modulus),
                    static_cast<unsigned long long>(r.period));
    return 0;
}
