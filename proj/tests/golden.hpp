#pragma once

// Generator windows transcribed by hand from the explicit descriptions of s_0, s_1, s_2.

#include "awg/zperm.hpp"

#include <string>
#include <vector>

namespace awg::testing {

struct GoldenWindow {
    PermFamily family;
    int n;
    int generator;
    std::string text;
};

inline const std::vector<GoldenWindow>& golden_windows() {
    static const std::vector<GoldenWindow> all{
        // s_0: 1 -> 0, interior fixed, n -> n + 1; s_i = (i, i+1)
        {PermFamily::A, 3, 0, "A 3 3\n1 -> 0\n2 -> 2\n3 -> 4\n"},
        {PermFamily::A, 3, 1, "A 3 3\n1 -> 2\n2 -> 1\n3 -> 3\n"},
        {PermFamily::A, 3, 2, "A 3 3\n1 -> 1\n2 -> 3\n3 -> 2\n"},
        {PermFamily::A, 4, 0, "A 4 4\n1 -> 0\n2 -> 2\n3 -> 3\n4 -> 5\n"},
        // s_0: j fixed for j < n, n -> n + 1; s_1 = (1, -1); s_2 = (1, 2)(-1, -2)
        {PermFamily::C, 2, 0, "C 2 5\n-2 -> -3\n-1 -> -1\n0 -> 0\n1 -> 1\n2 -> 3\n"},
        {PermFamily::C, 2, 1, "C 2 5\n-2 -> -2\n-1 -> 1\n0 -> 0\n1 -> -1\n2 -> 2\n"},
        {PermFamily::C, 2, 2, "C 2 5\n-2 -> -1\n-1 -> -2\n0 -> 0\n1 -> 2\n2 -> 1\n"},
        {PermFamily::C, 3, 0, "C 3 7\n-3 -> -4\n-2 -> -2\n-1 -> -1\n0 -> 0\n1 -> 1\n2 -> 2\n3 -> 4\n"},
        // alternative C: s_0 sends n to n + 2, n + 1 is fixed
        {PermFamily::CAlt, 2, 0, "Calt 2 6\n-2 -> -4\n-1 -> -1\n0 -> 0\n1 -> 1\n2 -> 4\n3 -> 3\n"},
        {PermFamily::CAlt, 2, 1, "Calt 2 6\n-2 -> -2\n-1 -> 1\n0 -> 0\n1 -> -1\n2 -> 2\n3 -> 3\n"},
        {PermFamily::CAlt, 2, 2, "Calt 2 6\n-2 -> -1\n-1 -> -2\n0 -> 0\n1 -> 2\n2 -> 1\n3 -> 3\n"},
        // B and D: s_0 = (n-1, n+1)(n, n+2); B s_1 = (1, -1); D s_1 = (1, -2)(2, -1)
        {PermFamily::B, 3, 0, "B 3 7\n-3 -> -5\n-2 -> -4\n-1 -> -1\n0 -> 0\n1 -> 1\n2 -> 4\n3 -> 5\n"},
        {PermFamily::B, 3, 1, "B 3 7\n-3 -> -3\n-2 -> -2\n-1 -> 1\n0 -> 0\n1 -> -1\n2 -> 2\n3 -> 3\n"},
        {PermFamily::B, 3, 2, "B 3 7\n-3 -> -3\n-2 -> -1\n-1 -> -2\n0 -> 0\n1 -> 2\n2 -> 1\n3 -> 3\n"},
        {PermFamily::D, 4, 0, "D 4 9\n-4 -> -6\n-3 -> -5\n-2 -> -2\n-1 -> -1\n0 -> 0\n1 -> 1\n2 -> 2\n3 -> 5\n4 -> 6\n"},
        {PermFamily::D, 4, 1, "D 4 9\n-4 -> -4\n-3 -> -3\n-2 -> 1\n-1 -> 2\n0 -> 0\n1 -> -2\n2 -> -1\n3 -> 3\n4 -> 4\n"},
        {PermFamily::D, 4, 2, "D 4 9\n-4 -> -4\n-3 -> -3\n-2 -> -1\n-1 -> -2\n0 -> 0\n1 -> 2\n2 -> 1\n3 -> 3\n4 -> 4\n"},
        // G2: 1 -> 6, 2 -> 7, 3 -> 13; s_1 = (1, 2)(-1, -2); s_2 = (1, -1)(2, 3)(-2, -3)
        {PermFamily::G, 2, 0, "G 2 8\n-3 -> -13\n-2 -> -7\n-1 -> -6\n0 -> 0\n1 -> 6\n2 -> 7\n3 -> 13\n4 -> 4\n"},
        {PermFamily::G, 2, 1, "G 2 8\n-3 -> -3\n-2 -> -1\n-1 -> -2\n0 -> 0\n1 -> 2\n2 -> 1\n3 -> 3\n4 -> 4\n"},
        {PermFamily::G, 2, 2, "G 2 8\n-3 -> -2\n-2 -> -3\n-1 -> 1\n0 -> 0\n1 -> -1\n2 -> 3\n3 -> 2\n4 -> 4\n"},
    };
    return all;
}

}  // namespace awg::testing
