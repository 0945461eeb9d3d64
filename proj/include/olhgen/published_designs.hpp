#pragma once

#include "olhgen/matrix.hpp"

namespace olhgen::published {

/// 16-run, 16-factor Latin hypercube (doubled units). Its first 12 columns
/// form an orthogonal Latin hypercube OLH(16, 12); the last
/// four only complete the Latin hypercube.
inline IntMatrix lh16x16() {
    return IntMatrix{
        {-15, 5, 9, -3, 7, 11, -11, 7, -9, 3, -15, 5, 11, -11, 7, -7},
        {-13, 1, 1, 13, -7, -11, 11, -7, -1, -13, -13, 1, 13, 5, 5, -3},
        {-11, 7, -7, -11, 13, -1, -1, -13, 9, -3, 15, -5, -5, 11, -7, 7},
        {-9, 3, -15, 5, -13, 1, 1, 13, 1, 13, 13, -1, -13, -5, -5, 3},
        {-7, -11, 11, -7, 11, -7, 7, 11, 5, 15, -3, -9, -9, 3, 9, 11},
        {-5, -15, 3, 9, -11, 7, -7, -11, 13, -1, -1, -13, -1, 9, 11, 15},
        {-3, -9, -5, -15, 1, 13, 13, -1, -5, -15, 3, 9, 1, 7, -11, -11},
        {-1, -13, -13, 1, -1, -13, -13, 1, -13, 1, 1, 13, 9, -9, -9, -15},
        {1, 13, 13, -1, -9, 3, -15, 5, 11, -7, 7, 11, -7, -7, -15, -9},
        {3, 9, 5, 15, 9, -3, 15, -5, 3, 9, 5, 15, -15, -13, -13, -13},
        {5, 15, -3, -9, -3, -9, -5, -15, -11, 7, -7, -11, 15, -3, 15, 9},
        {7, 11, -11, 7, 3, 9, 5, 15, -3, -9, -5, -15, 7, 15, 13, 13},
        {9, -3, 15, -5, -5, -15, 3, 9, -7, -11, 11, -7, 5, 13, -3, 5},
        {11, -7, 7, 11, 5, 15, -3, -9, -15, 5, 9, -3, 3, -1, -1, 1},
        {13, -1, -1, -13, -15, 5, 9, -3, 7, 11, -11, 7, -11, -15, 3, -5},
        {15, -5, -9, 3, 15, -5, -9, 3, 15, -5, -9, 3, -3, 1, 1, -1},
    };
}

/// 16-run, 15-factor nearly orthogonal Latin hypercube (doubled units).
inline IntMatrix nolh16x15() {
    return IntMatrix{
        {-15, 15, -13, 13, -5, -13, 5, 3, -1, 5, -7, 5, -9, -9, 5},
        {-13, -15, -3, 3, 7, 3, 15, -11, 13, -5, 7, -13, -7, -3, -3},
        {-11, -9, -5, -11, -15, 13, -5, 11, -9, 9, 9, 3, -5, -1, -11},
        {-9, -1, 9, -15, -11, 1, -1, -13, 5, -1, -15, 7, 1, 3, 15},
        {-7, 1, -7, 7, 15, 15, -13, 9, -5, -13, -3, -1, -1, 7, 13},
        {-5, 13, 11, -5, 9, -7, -3, -9, -13, 11, 13, -9, -3, 13, 1},
        {-3, -5, 13, 15, -9, -9, -11, 1, 7, -9, 15, 11, 9, 1, -1},
        {-1, -11, 3, -7, 11, -15, 13, 15, -7, -3, -9, 9, 7, 9, -5},
        {1, 3, -9, -3, -1, -5, -15, -1, 11, 3, -11, -15, 15, 5, -15},
        {3, -3, 15, 11, 3, 9, 1, -7, -15, 1, -13, -3, 3, -15, -9},
        {5, 9, 7, -1, 5, 11, 9, 13, 15, 15, 5, 1, 11, -7, 9},
        {7, 7, -1, -13, 13, -1, -7, -5, 9, -7, 3, 15, -13, -11, -13},
        {9, 5, -11, -9, -7, -3, 7, -3, -11, -15, 11, -7, 13, -13, 7},
        {11, 11, 5, 5, -13, 7, 11, 5, 3, -11, -5, -5, -11, 15, -7},
        {13, -7, -15, 9, 1, 5, 3, -15, -3, 13, 1, 13, 5, 11, 3},
        {15, -13, 1, 1, -3, -11, -9, 7, 1, 7, -1, -11, -15, -5, 11},
    };
}

}  // namespace olhgen::published
