#pragma once

// Golden data shared by the acceptance harness and `reproduce paper --check`:
// exact renderings of the four Koszul weight tables, the nonzero-cohomology
// summary, and the cited Weyl dimensions / Segre coefficients / class
// expansions that every run must reproduce verbatim.

#include <array>
#include <utility>
#include <vector>

#include "grassbwb/common.hpp"

namespace grassbwb::fixtures {

inline constexpr const char* kTableSym2uH =
    "wedge^p Sym^3 U (x) Sym^2 U (H)\n"
    "w'' = (0,0,0,0) in every row\n"
    "p  w'       w+rho           l(w)  mult\n"
    "0  (1,-1)   (7,4,4,3,2,1)   -1    1\n"
    "1  (1,-4)   (7,1,4,3,2,1)   -1    1\n"
    "1  (0,-3)   (6,2,4,3,2,1)   -1    1\n"
    "1  (-1,-2)  (5,3,4,3,2,1)   -1    1\n"
    "2  (0,-6)   (6,-1,4,3,2,1)  4     1\n"
    "2  (-1,-5)  (5,0,4,3,2,1)   4     1\n"
    "2  (-2,-4)  (4,1,4,3,2,1)   -1    2\n"
    "3  (-2,-7)  (4,-2,4,3,2,1)  -1    1\n"
    "3  (-3,-6)  (3,-1,4,3,2,1)  -1    1\n"
    "3  (-4,-5)  (2,0,4,3,2,1)   -1    1\n"
    "4  (-5,-7)  (1,-2,4,3,2,1)  -1    1\n";

inline constexpr const char* kTableQdualH =
    "wedge^p Sym^3 U (x) Q* (H)\n"
    "w'' = (0,-1,-1,-1) in every row\n"
    "p  w'       w+rho           l(w)  mult\n"
    "0  (0,0)    (6,5,4,2,1,0)   0     1\n"
    "1  (0,-3)   (6,2,4,2,1,0)   -1    1\n"
    "2  (-1,-5)  (5,0,4,2,1,0)   -1    1\n"
    "2  (-3,-3)  (3,2,4,2,1,0)   -1    1\n"
    "3  (-3,-6)  (3,-1,4,2,1,0)  5     1\n"
    "4  (-6,-6)  (0,-1,4,2,1,0)  -1    1\n";

inline constexpr const char* kTableSym2uM2H =
    "wedge^p Sym^3 U (x) Sym^2 U (-2H)\n"
    "w'' = (0,0,0,0) in every row\n"
    "p  w'        w+rho            l(w)  mult\n"
    "0  (-2,-4)   (4,1,4,3,2,1)    -1    1\n"
    "1  (-2,-7)   (4,-2,4,3,2,1)   -1    1\n"
    "1  (-3,-6)   (3,-1,4,3,2,1)   -1    1\n"
    "1  (-4,-5)   (2,0,4,3,2,1)    -1    1\n"
    "2  (-3,-9)   (3,-4,4,3,2,1)   -1    1\n"
    "2  (-4,-8)   (2,-3,4,3,2,1)   -1    1\n"
    "2  (-5,-7)   (1,-2,4,3,2,1)   -1    2\n"
    "3  (-5,-10)  (1,-5,4,3,2,1)   -1    1\n"
    "3  (-6,-9)   (0,-4,4,3,2,1)   8     1\n"
    "3  (-7,-8)   (-1,-3,4,3,2,1)  8     1\n"
    "4  (-8,-10)  (-2,-5,4,3,2,1)  8     1\n";

inline constexpr const char* kTableQdualM2H =
    "wedge^p Sym^3 U (x) Q* (-2H)\n"
    "w'' = (3,2,2,2) in every row\n"
    "p  w'       w+rho           l(w)  mult\n"
    "0  (0,0)    (6,5,7,5,4,3)   -1    1\n"
    "1  (0,-3)   (6,2,7,5,4,3)   5     1\n"
    "2  (-1,-5)  (5,0,7,5,4,3)   -1    1\n"
    "2  (-3,-3)  (3,2,7,5,4,3)   -1    1\n"
    "3  (-3,-6)  (3,-1,7,5,4,3)  -1    1\n"
    "4  (-6,-6)  (0,-1,7,5,4,3)  8     1\n";

inline constexpr const char* kNonzeroSummary =
    "H^4(G(2,6), wedge^2 Sym^3 U (x) Sym^2 U (H)) = C^36\n"
    "H^0(G(2,6), Q* (H)) = C^20\n"
    "H^5(G(2,6), wedge^3 Sym^3 U (x) Q* (H)) = C^1\n"
    "H^8(G(2,6), wedge^3 Sym^3 U (x) Sym^2 U (-2H)) = C^126\n"
    "H^8(G(2,6), wedge^4 Sym^3 U (x) Sym^2 U (-2H)) = C^1134\n"
    "H^5(G(2,6), Sym^3 U (x) Q* (-2H)) = C^1\n"
    "H^8(G(2,6), wedge^4 Sym^3 U (x) Q* (-2H)) = C^560\n";

// The seven dominant GL(6) weights whose Weyl dimensions feed the
// nonzero-cohomology summary, paired with the expected dimensions.
inline const std::vector<std::pair<Weight, i64>>& cited_weyl_dimensions() {
    static const std::vector<std::pair<Weight, i64>> table = {
        {{0, -1, -1, -1, -1, -2}, 35},
        {{-1, -1, -1, -1, -1, -1}, 1},
        {{-2, -2, -2, -2, -2, -5}, 56},
        {{-2, -2, -2, -2, -3, -4}, 70},
        {{-2, -2, -2, -2, -4, -6}, 1134},
        {{1, 0, 0, 0, -2, -2}, 560},
        {{0, 0, 0, -1, -1, -1}, 20},
    };
    return table;
}

// Displayed Segre coefficients of Q^vee - Sym^2 U, as class expressions in
// the special Schubert classes (index = Segre degree).
inline constexpr std::array<const char*, 6> kSegreDisplayed = {
    "1",
    "-2*s1",
    "4*s1^2 - 5*s2",
    "s1*s2 + s3",
    "2*s2^2 - 4*s1*s3 + 2*s4",
    "-4*s2*s3 + 4*s1*s4",
};

// The top Chern class of Sym^3 U* in the two displayed forms.
inline constexpr const char* kClassFQuadraticForm = "27*s2^2 - 9*s1*s3 - 18*s4";
inline constexpr const char* kClassFBasisForm = "18*s[3,1] + 27*s[2,2]";

}  // namespace grassbwb::fixtures
