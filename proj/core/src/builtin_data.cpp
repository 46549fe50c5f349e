#include "builtin_data.hpp"

namespace oneshot::detail {

const std::vector<LabelledRay3>& ck31_rays() {
  static const std::vector<LabelledRay3> rays = {
      {"1", {-1, 2, 1}},  {"2", {-1, 2, 0}},  {"3", {0, 2, 1}},   {"4", {-1, 2, -1}},
      {"5", {0, 2, 0}},   {"6", {1, 2, 1}},   {"7", {0, 2, -1}},  {"8", {1, 2, 0}},
      {"9", {1, 2, -1}},  {"10", {0, 2, -2}}, {"11", {2, 2, 0}},  {"12", {2, 2, -2}},
      {"13", {-1, 1, -2}},{"14", {0, 1, -2}}, {"15", {-1, 0, -2}},{"16", {0, 0, -2}},
      {"17", {-1, -1, -2}},{"18", {0, -1, -2}},{"19", {0, -2, -2}},{"20", {2, 1, -1}},
      {"21", {2, 1, 0}},  {"22", {2, 0, -1}}, {"23", {2, 0, 0}},  {"24", {2, -1, -1}},
      {"25", {2, -1, 0}}, {"26", {2, -2, 0}}, {"27", {2, 0, -2}}, {"28", {2, -2, -2}},
      {"29", {2, 2, 2}},  {"30", {2, 0, 2}},  {"31", {2, -2, 2}},
  };
  return rays;
}

const std::vector<std::vector<int>>& ck31_adjacency() {
  static const std::vector<std::vector<int>> adj = {
      {12, 14, 21, 30},
      {16, 20, 21},
      {13, 14, 23},
      {18, 21, 27, 29},
      {15, 16, 22, 23, 27, 30},
      {14, 25, 27, 31},
      {17, 18, 23},
      {16, 24, 25},
      {18, 25, 28, 30},
      {19, 23, 24, 28, 29},
      {13, 16, 26, 28, 31},
      {1, 17, 19, 26, 30},
      {3, 11, 22, 28},
      {1, 3, 6, 23},
      {5, 20, 22, 24},
      {2, 5, 8, 11, 21, 23, 25, 26},
      {7, 12, 22, 26},
      {4, 7, 9, 23},
      {10, 12, 20, 23, 31},
      {2, 15, 19, 31},
      {1, 2, 4, 16},
      {5, 13, 15, 17},
      {3, 5, 7, 10, 14, 16, 18, 19},
      {8, 10, 15, 29},
      {6, 8, 9, 16},
      {11, 12, 16, 17, 29},
      {4, 5, 6, 29, 30, 31},
      {9, 10, 11, 13, 30},
      {4, 10, 24, 26, 27},
      {1, 5, 9, 12, 27, 28},
      {6, 11, 19, 20, 27},
  };
  return adj;
}

const std::vector<std::array<int, 3>>& ck31_complete_bases() {
  static const std::vector<std::array<int, 3>> bases = {
      {1, 12, 30}, {2, 16, 21}, {3, 14, 23}, {4, 27, 29},  {5, 15, 22},  {5, 16, 23},
      {5, 27, 30}, {6, 27, 31}, {7, 18, 23}, {8, 16, 25},  {9, 28, 30},  {10, 19, 23},
      {10, 24, 29},{11, 13, 28},{11, 16, 26},{12, 17, 26}, {19, 20, 31},
  };
  return bases;
}

const std::vector<std::array<int, 2>>& ck31_incomplete_bases() {
  static const std::vector<std::array<int, 2>> bases = {
      {1, 14},  {1, 21},  {2, 20},  {3, 13},  {4, 18},  {4, 21},  {6, 14},
      {6, 25},  {7, 17},  {8, 24},  {9, 18},  {9, 25},  {10, 28}, {11, 31},
      {12, 19}, {13, 22}, {15, 20}, {15, 24}, {17, 22}, {26, 29},
  };
  return bases;
}

const std::vector<LabelledRay3>& ck_stage1_vectors() {
  static const std::vector<LabelledRay3> rays = {
      {"32", {4, -4, -8}},  {"33", {-5, -1, 2}},  {"34", {-4, -4, 8}},  {"35", {-1, -2, -5}},
      {"36", {5, 2, -1}},   {"37", {-1, -5, -2}}, {"38", {1, -5, 2}},   {"39", {-1, -2, 5}},
      {"40", {-8, -4, -4}}, {"41", {5, -1, -2}},  {"42", {-5, 2, -1}},  {"43", {2, 5, -1}},
      {"44", {-2, 1, -5}},  {"45", {1, -2, -5}},  {"46", {-2, -1, -5}}, {"47", {-5, -2, -1}},
      {"48", {-5, 2, 1}},   {"49", {8, -4, 4}},   {"50", {-1, 2, -5}},  {"51", {-2, 5, 1}},
  };
  return rays;
}

const std::vector<std::array<int, 3>>& ck_stage1_new_bases() {
  static const std::vector<std::array<int, 3>> bases = {
      {1, 14, 47}, {1, 21, 50}, {2, 20, 46}, {3, 13, 33},  {4, 18, 36},
      {4, 21, 45}, {6, 14, 48}, {6, 25, 39}, {7, 17, 41},  {8, 24, 44},
      {9, 18, 42}, {9, 25, 35}, {10, 28, 40},{11, 31, 32}, {12, 19, 49},
      {13, 22, 37},{15, 20, 51},{15, 24, 43},{17, 22, 38}, {26, 29, 34},
  };
  return bases;
}

const std::vector<std::array<int, 2>>& ck_stage2_incomplete() {
  static const std::vector<std::array<int, 2>> bases = {{2, 40}, {3, 34}, {7, 32}, {8, 49}};
  return bases;
}

const std::vector<LabelledRay3>& ck_stage2_vectors() {
  static const std::vector<LabelledRay3> rays = {
      {"52", {20, 4, 8}}, {"53", {-20, 4, -8}}, {"54", {8, 4, -20}}, {"55", {8, -4, -20}},
  };
  return rays;
}

const std::vector<std::array<int, 3>>& ck_stage2_new_bases() {
  static const std::vector<std::array<int, 3>> bases = {
      {2, 40, 54}, {3, 34, 53}, {7, 32, 52}, {8, 49, 55}};
  return bases;
}

const std::vector<LabelledRay4>& peres24_rays() {
  // 4 axis rays, 12 of type e_i +- e_j, 8 of type (1,s2,s3,s4).
  static const std::vector<LabelledRay4> rays = {
      {"1", {1, 0, 0, 0}},   {"2", {0, 1, 0, 0}},   {"3", {0, 0, 1, 0}},   {"4", {0, 0, 0, 1}},
      {"5", {1, 1, 0, 0}},   {"6", {1, -1, 0, 0}},  {"7", {1, 0, 1, 0}},   {"8", {1, 0, -1, 0}},
      {"9", {1, 0, 0, 1}},   {"10", {1, 0, 0, -1}}, {"11", {0, 1, 1, 0}},  {"12", {0, 1, -1, 0}},
      {"13", {0, 1, 0, 1}},  {"14", {0, 1, 0, -1}}, {"15", {0, 0, 1, 1}},  {"16", {0, 0, 1, -1}},
      {"17", {1, 1, 1, 1}},  {"18", {1, 1, 1, -1}}, {"19", {1, 1, -1, 1}}, {"20", {1, 1, -1, -1}},
      {"21", {1, -1, 1, 1}}, {"22", {1, -1, 1, -1}},{"23", {1, -1, -1, 1}},{"24", {1, -1, -1, -1}},
  };
  return rays;
}

}  // namespace oneshot::detail
