#include "hjarcs/tables.hpp"

namespace hjarcs {

const std::vector<Table1Cell>& table1_cells() {
  // bold entries (unique maximal arc) carry counts 1/1; a subscript s means
  // s nondegenerate classes and s total; s(t) means s nondegenerate, t total
  static const std::vector<Table1Cell> cells = {
      // k = 2
      {"Z4", 2, 2, 7, 1, 1, false, true},
      {"S22", 2, 2, 6, 2, 2, false, true},
      {"Z8", 2, 2, 10, 1, 1, false, true},
      {"H8", 2, 2, 10, 5, 5, false, false},
      {"S23", 2, 2, 10, 5, 5, false, false},
      {"Z9", 2, 2, 9, 3, 3, false, true},
      {"S32", 2, 2, 9, 4, 4, false, true},
      {"G42", 2, 2, 21, 1, 1, false, false},
      {"S42", 2, 2, 18, 6, 6, false, false},
      {"T4", 2, 2, 18, 1, 1, false, false},
      {"Z16", 2, 2, 16, -1, -1, true, false},
      {"I16", 2, 2, 22, 1, 1, false, false},
      {"J16", 2, 2, 22, 1, 1, false, false},
      {"K16", 2, 2, 19, 5, 5, false, false},
      {"S24", 2, 2, 19, 1, 1, false, false},
      {"Z4", 2, 3, 10, 8, 8, false, true},
      {"S22", 2, 3, 10, 8, 8, false, true},
      {"Z8", 2, 3, 21, 1, 1, false, false},
      {"H8", 2, 3, 18, 93, 93, false, false},
      {"S23", 2, 3, 18, 93, 93, false, false},
      {"Z9", 2, 3, 19, 3, 3, false, false},
      {"S32", 2, 3, 18, 255, 255, false, false},
      {"Z4", 2, 4, 16, 3, 3, false, true},
      {"S22", 2, 4, 16, 3, 3, false, true},
      {"Z4", 2, 5, 22, 1, 1, false, true},
      {"S22", 2, 5, 22, 1, 1, false, true},
      {"Z4", 2, 6, 28, 1, 1, false, true},
      {"S22", 2, 6, 28, 1, 1, false, true},
      // k = 3
      {"Z4", 3, 3, 8, 1, 1, false, true},
      {"S22", 3, 3, 6, 1, 2, false, true},
      {"Z8", 3, 3, 8, 57, 68, false, false},
      {"H8", 3, 3, 9, 1, 1, false, false},
      {"S23", 3, 3, 9, 1, 1, false, false},
      {"Z9", 3, 3, 10, 1, 1, false, false},
      {"S32", 3, 3, 10, 1, 1, false, false},
      {"Z4", 3, 4, 10, 25, 25, false, false},
      {"S22", 3, 4, 11, 1, 1, false, false},
      {"Z4", 3, 5, 16, 2, 2, false, false},
      {"S22", 3, 5, 16, 2, 2, false, false},
      // k = 4
      {"Z4", 4, 4, 6, 5, 17, false, false},
      {"S22", 4, 4, 6, 5, 17, false, false},
      {"Z4", 4, 5, 11, 4, 4, false, false},
      {"S22", 4, 5, 11, 6, 6, false, false},
  };
  return cells;
}

namespace {

using WE = std::vector<std::pair<int64_t, int64_t>>;

}  // namespace

const std::vector<AppendixArc>& appendix_arcs() {
  static const std::vector<AppendixArc> arcs = {
      {"z4_7_2", "Z4", 2, 7, 2, 168, 6, 2, 14, 6, 6, false,
       WE{{0, 1}, {6, 42}, {8, 7}, {10, 14}},
       "ring=Z4\ndim=2\n"
       "(1:0:0)\n(0:1:0)\n(0:0:1)\n(1:1:1)\n(2:1:3)\n(1:2:3)\n(1:3:2)\n",
       "the best linear binary [14,6] code has minimum distance 5"},

      {"z4_22_5", "Z4", 2, 22, 5, 1536, 20, 2, 44, 6, 20, false,
       WE{{0, 1}, {20, 6}, {22, 48}, {24, 6}, {28, 2}, {32, 1}},
       "ring=Z4\ndim=2\n"
       "(1:0:0)\n(0:1:0)\n(0:0:1)\n(1:1:1)\n(0:1:1)\n(1:0:1)\n(1:1:0)\n"
       "(1:2:2)\n(2:1:2)\n(2:2:1)\n(1:3:3)\n(2:1:3)\n(1:2:3)\n(1:3:2)\n"
       "(1:2:0)\n(2:1:0)\n(2:0:1)\n(1:3:1)\n(1:0:2)\n(0:1:2)\n(0:2:1)\n"
       "(1:1:3)\n",
       "there is a linear binary [44,6,21] code"},

      {"s22_22_5", "S22", 2, 22, 5, 1536, 20, 2, 44, 6, 20, true,
       WE{{0, 1}, {20, 6}, {22, 48}, {24, 6}, {28, 2}, {32, 1}},
       "ring=S22\ndim=2\n"
       "(1:0:0)\n(0:1:0)\n(0:0:1)\n(1:1:1)\n(0:1:1)\n(1:0:1)\n(1:X:X)\n"
       "(X:1:X)\n(X:X:1)\n(1:X+1:X+1)\n(X:1:X+1)\n(1:X:X+1)\n"
       "(1:X:0)\n(X:1:0)\n(X:0:1)\n(1:X+1:1)\n(1:X+1:0)\n"
       "(1:0:X)\n(0:1:X)\n(0:X:1)\n(1:1:X+1)\n(1:1:X)\n",
       "same parameters as the Z4 (22,5) arc"},

      {"z4_8_3", "Z4", 3, 8, 3, 1344, 6, 2, 16, 8, 6, false,
       WE{{0, 1}, {6, 112}, {8, 30}, {10, 112}, {16, 1}},
       "ring=Z4\ndim=3\n"
       "(1:0:0:0)\n(0:1:0:0)\n(0:0:1:0)\n(0:0:0:1)\n(1:3:3:2)\n"
       "(2:1:3:3)\n(1:2:1:3)\n(1:1:2:1)\n",
       "the best linear binary [16,8] code has minimum distance 5"},

      {"s22_11_4", "S22", 3, 11, 4, 24, 8, 2, 22, 8, 8, true,
       WE{{0, 1}, {8, 54}, {10, 76}, {12, 72}, {14, 48}, {16, 1}, {18, 4}},
       "ring=S22\ndim=3\n"
       "(1:0:0:0)\n(0:1:0:0)\n(0:0:1:0)\n(0:0:0:1)\n(1:1:1:1)\n"
       "(X:1:X+1:X)\n(1:X:X+1:X+1)\n(1:X:1:X)\n"
       "(1:X+1:0:X)\n(1:X+1:X+1:0)\n(0:1:X:X+1)\n",
       "optimal"},

      {"z8_10_2", "Z8", 2, 10, 2, 8, 6, 2, 40, 9, 12, false,
       WE{{0, 1}, {12, 4}, {16, 70}, {18, 128}, {20, 168}, {22, 32}, {24, 72}, {26, 32}, {28, 4}, {32, 1}},
       "ring=Z8\ndim=2\n"
       "(1:0:0)\n(0:1:0)\n(0:0:1)\n(1:1:1)\n(2:1:3)\n(4:1:5)\n(1:5:4)\n"
       "(6:1:2)\n(1:7:2)\n(1:3:5)\n",
       "there is a linear binary [40,9,16] code"},

      {"z8_21_3", "Z8", 2, 21, 3, 168, 18, 2, 84, 9, 36, false,
       WE{{0, 1}, {36, 14}, {38, 168}, {42, 196}, {44, 42}, {48, 7}, {50, 84}},
       "ring=Z8\ndim=2\n"
       "(1:0:0)\n(0:1:0)\n(1:2:2)\n(2:2:1)\n(2:1:3)\n(1:2:1)\n(1:1:3)\n"
       "(1:1:2)\n(1:5:5)\n(1:5:4)\n(1:7:6)\n(6:1:5)\n(4:1:7)\n(6:1:0)\n"
       "(1:7:1)\n(0:4:1)\n(1:0:5)\n(2:1:6)\n(1:2:7)\n(1:0:6)\n(0:6:1)\n",
       "there is a linear binary [84,9,38] code"},

      {"h8_9_3", "H8", 3, 9, 3, 12, 5, 2, 36, 12, 10, false,
       WE{{0, 1}, {10, 12}, {12, 166}, {14, 504}, {16, 873}, {18, 908}, {20, 1020},
          {22, 468}, {24, 110}, {26, 24}, {28, 6}, {30, 4}},
       "ring=H8\ndim=3\n"
       "(1:0:0:0)\n(0:1:0:0)\n(0:0:1:0)\n(0:0:0:1)\n(1:X:X+1:X)\n"
       "(X:X:1:X+1)\n(1:X+3:2:X+2)\n(2:1:X+3:X+3)\n(1:2:X+3:X+1)\n",
       "there is a linear binary [36,12,12] code"},

      {"s23_9_3", "S23", 3, 9, 3, 12, 5, 2, 36, 12, 10, true,
       WE{{0, 1}, {10, 12}, {12, 166}, {14, 504}, {16, 873}, {18, 908}, {20, 1020},
          {22, 468}, {24, 110}, {26, 24}, {28, 6}, {30, 4}},
       "ring=S23\ndim=3\n"
       "(1:0:0:0)\n(0:1:0:0)\n(0:0:1:0)\n(0:0:0:1)\n(1:X:X+1:X)\n"
       "(X^2+X:1:X^2+X+1:X^2+X)\n(1:X^2+X+1:X^2:X^2+X)\n"
       "(1:X^2:X^2+X+1:X^2+X+1)\n(X^2:1:X+1:X^2+X+1)\n",
       "same parameters as the H8 (9,3) arc"},

      {"z9_10_3", "Z9", 3, 10, 3, 10, 15, 3, 30, 8, 15, false,
       WE{{0, 1}, {15, 720}, {18, 1680}, {21, 3240}, {24, 900}, {27, 20}},
       "ring=Z9\ndim=3\n"
       "(1:0:0:0)\n(0:1:0:0)\n(0:0:1:0)\n(0:0:0:1)\n(1:1:1:1)\n"
       "(1:3:2:4)\n(1:4:3:2)\n(1:2:8:3)\n(3:1:8:2)\n(1:8:4:5)\n",
       "no better linear ternary [30,8] code exists"},

      {"s32_10_3", "S32", 3, 10, 3, 10, 15, 3, 30, 8, 15, true,
       WE{{0, 1}, {15, 720}, {18, 1680}, {21, 3240}, {24, 900}, {27, 20}},
       "ring=S32\ndim=3\n"
       "(1:0:0:0)\n(0:1:0:0)\n(0:0:1:0)\n(0:0:0:1)\n(1:1:1:1)\n"
       "(1:X:X+2:X+1)\n(1:X+2:2:2X)\n(1:2X+2:2X+1:X+2)\n"
       "(1:2X+1:X:2X+2)\n(2X:1:X+2:2X+2)\n",
       "optimal"},

      {"g42_21_2", "G42", 2, 21, 2, 126, 60, 4, 84, 6, 60, false,
       WE{{0, 1}, {60, 2520}, {64, 63}, {68, 1512}},
       "ring=G42\ndim=2\n"
       "(1:0:0)\n(0:1:0)\n(0:0:1)\n(1:1:1)\n(1:3:3a)\n(2:1:3a)\n(1:3a:2a+2)\n"
       "(1:a+3:2a)\n(1:2:a+1)\n(1:2a+3:2)\n(1:2a+2:3)\n(2a+2:1:3a+3)\n"
       "(1:a:3a+1)\n(1:3a+3:a+2)\n(2a:1:3)\n(1:2a+1:3a+3)\n(1:a+2:a)\n"
       "(1:3a+1:2a+3)\n(1:2a:3a+2)\n(1:a+1:a+3)\n(1:3a+2:2a+1)\n",
       "the best known linear quaternary [84,6] code has minimum distance 59"},

      {"t4_18_2", "T4", 2, 18, 2, 96, 48, 4, 72, 6, 48, true,
       WE{{0, 1}, {48, 12}, {50, 864}, {51, 960}, {52, 96}, {54, 576}, {56, 144},
          {58, 864}, {59, 576}, {64, 3}},
       "ring=T4\ndim=2\n"
       "(1:0:0)\n(0:1:0)\n(0:0:1)\n(1:1:1)\n(1:X+1:X+a)\n(1:X+a:X)\n"
       "(1:X:aX+1)\n(1:X+(a+1):a)\n(aX:1:X+1)\n(1:aX:aX+a)\n"
       "(1:aX+a:(a+1)X+a)\n(1:aX+(a+1):(a+1)X+1)\n"
       "(1:(a+1)X+a:X+1)\n(1:(a+1)X+1:aX+(a+1))\n"
       "(1:(a+1)X+(a+1):aX)\n((a+1)X:1:aX+a)\n"
       "(1:a+1:X+(a+1))\n(1:a:(a+1)X+(a+1))\n",
       "there is a linear quaternary [72,6,50] code"},
  };
  return arcs;
}

}  // namespace hjarcs
