// Generated by gen_oeis_fixtures.py. Do not edit by hand.
#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace whanoi::fixtures {

struct OeisPrefix {
  std::string_view id;
  int offset;  // OEIS index of values[0]
  std::array<std::int64_t, 12> values;
  std::string_view note;
};

inline constexpr std::array<OeisPrefix, 27> kOeisPrefixes{{
    {"A000225", 0, {0, 1, 3, 7, 15, 31, 63, 127, 255, 511, 1023, 2047}, "classical transfer cost 2^n-1"},
    {"A001045", 0, {0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341, 683}, "Jacobsthal"},
    {"A078008", 0, {1, 0, 2, 2, 6, 10, 22, 42, 86, 170, 342, 682}, "Jacobsthal forward differences"},
    {"A000975", 0, {0, 1, 2, 5, 10, 21, 42, 85, 170, 341, 682, 1365}, "Lichtenberg"},
    {"A000295", 0, {0, 0, 1, 4, 11, 26, 57, 120, 247, 502, 1013, 2036}, "Eulerian 2^n-n-1; natural masses t_n = A000295(n+1)"},
    {"A003462", 0, {0, 1, 4, 13, 40, 121, 364, 1093, 3280, 9841, 29524, 88573}, "(3^n-1)/2"},
    {"A024023", 0, {0, 2, 8, 26, 80, 242, 728, 2186, 6560, 19682, 59048, 177146}, "3^n-1; linear Hanoi middle distance"},
    {"A000340", 0, {1, 5, 18, 58, 179, 543, 1636, 4916, 14757, 44281, 132854, 398574}, "linear Hanoi massive d_{n,0} = A000340(n-1)"},
    {"A008776", 0, {2, 6, 18, 54, 162, 486, 1458, 4374, 13122, 39366, 118098, 354294}, "2*3^n; threshold a_m = A008776(m-1)"},
    {"A008466", 0, {0, 0, 1, 3, 8, 19, 43, 94, 201, 423, 880, 1815}, "binary words containing 11; Fibonacci costs t_n = A008466(n+1)"},
    {"A045883", 0, {0, 1, 3, 9, 23, 57, 135, 313, 711, 1593, 3527, 7737}, "Jacobsthal disc costs"},
    {"A094706", 0, {0, 1, 4, 13, 38, 105, 280, 729, 1866, 4717, 11812, 29365}, "Pell disc costs"},
    {"A000337", 0, {0, 1, 5, 17, 49, 129, 321, 769, 1793, 4097, 9217, 20481}, "Mersenne disc costs"},
    {"A047520", 0, {0, 1, 6, 21, 58, 141, 318, 685, 1434, 2949, 5998, 12117}, "quadratic disc costs"},
    {"A213575", 0, {0, 1, 10, 47, 158, 441, 1098, 2539, 5590, 11909, 24818, 50967}, "cubic disc costs"},
    {"A084639", 0, {0, 1, 4, 9, 20, 41, 84, 169, 340, 681, 1364, 2729}, "heavy middle peg d_{n,0}"},
    {"A167030", 1, {0, 0, 2, 4, 10, 20, 42, 84, 170, 340, 682, 1364}, "2*l(k-2); heavy middle d_{n,1} = A167030(n+2)"},
    {"A178420", 1, {0, 1, 3, 8, 18, 39, 81, 166, 336, 677, 1359, 2724}, "partial sums of Lichtenberg; d_{n,0} = A178420(n+1)"},
    {"A081254", 1, {1, 3, 6, 13, 26, 53, 106, 213, 426, 853, 1706, 3413}, "consecutive w=0: z_n = A081254(n+1)"},
    {"A084170", 0, {1, 2, 6, 12, 26, 52, 106, 212, 426, 852, 1706, 3412}, "consecutive w=0: y_n"},
    {"A101622", 0, {0, 1, 6, 13, 30, 61, 126, 253, 510, 1021, 2046, 4093}, "consecutive w=1: d_{n,0}"},
    {"A000918", 1, {0, 2, 6, 14, 30, 62, 126, 254, 510, 1022, 2046, 4094}, "2^k-2; consecutive w=1: d_{n,1} = A000918(n+1)"},
    {"A141023", 1, {0, 3, 6, 15, 30, 63, 126, 255, 510, 1023, 2046, 4095}, "consecutive w=1: d_{n,2} = A141023(n+1)"},
    {"A102301", 0, {1, 4, 13, 36, 93, 228, 541, 1252, 2845, 6372, 14109, 30948}, "Lichtenberg disc costs t_n = A102301(n-1)"},
    {"A140429", 1, {1, 3, 9, 27, 81, 243, 729, 2187, 6561, 19683, 59049, 177147}, "fast middle d_{n,0} = 3^(n-1), n >= 1"},
    {"A048473", 0, {1, 5, 17, 53, 161, 485, 1457, 4373, 13121, 39365, 118097, 354293}, "fast middle d_{n,1} = A048473(n-1)"},
    {"A001787", 0, {0, 1, 4, 12, 32, 80, 192, 448, 1024, 2304, 5120, 11264}, "n*2^(n-1); geometric r=2"},
}};

}  // namespace whanoi::fixtures
