#pragma once

#include <string>
#include <vector>

namespace grove {

// Injective, edge-preserving map from a pattern tree into a host digraph.
// map[p] is the host image of pattern vertex p.
struct TreeEmbedding {
  std::vector<int> map;
};

// Serialized certificate: line 1 "<anchor_label> <image of pattern vertex 0>",
// then one "p -> h" line per pattern vertex, ascending.
std::string to_text(const TreeEmbedding& e, const std::string& anchor_label);

// A centre plus vertex-disjoint directed in-rays of uniform length.
struct SpiderCertificate {
  int center = -1;
  int ray_length = 0;
  std::vector<std::vector<int>> rays;  // outermost vertex first; centre excluded

  // Maps onto the spider(ray_length, rays.size()) vertex numbering.
  TreeEmbedding to_embedding() const;
};

std::string to_text(const SpiderCertificate& c);

}  // namespace grove
