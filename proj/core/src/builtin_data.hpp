#pragma once

#include <array>
#include <string>
#include <vector>

namespace oneshot::detail {

struct LabelledRay3 {
  const char* label;
  std::array<int, 3> v;
};

struct LabelledRay4 {
  const char* label;
  std::array<int, 4> v;
};

// Conway-Kochen 31-vector set, labels and coordinates in published order.
const std::vector<LabelledRay3>& ck31_rays();

// Expected orthogonality lists for the 31 rays (sorted, by label).
const std::vector<std::vector<int>>& ck31_adjacency();

const std::vector<std::array<int, 3>>& ck31_complete_bases();   // 17 triples of labels
const std::vector<std::array<int, 2>>& ck31_incomplete_bases(); // 20 pairs of labels

// Completion vectors 32..51 and the bases they complete.
const std::vector<LabelledRay3>& ck_stage1_vectors();
const std::vector<std::array<int, 3>>& ck_stage1_new_bases();   // 20 triples

// Stage-2 data: incomplete pairs among the 51, vectors 52..55, new bases.
const std::vector<std::array<int, 2>>& ck_stage2_incomplete();
const std::vector<LabelledRay3>& ck_stage2_vectors();
const std::vector<std::array<int, 3>>& ck_stage2_new_bases();

// Peres 24-ray set in dimension 4 (integer coordinates).
const std::vector<LabelledRay4>& peres24_rays();

}  // namespace oneshot::detail
