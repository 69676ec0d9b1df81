#include "grove/embedding.hpp"

namespace grove {

std::string to_text(const TreeEmbedding& e, const std::string& anchor_label) {
  std::string s = anchor_label + " " + std::to_string(e.map.empty() ? -1 : e.map[0]) + "\n";
  for (std::size_t p = 0; p < e.map.size(); ++p)
    s += std::to_string(p) + " -> " + std::to_string(e.map[p]) + "\n";
  return s;
}

TreeEmbedding SpiderCertificate::to_embedding() const {
  // spider(k, l) numbering: centre 0; ray j occupies j*k+1 .. j*k+k, outermost
  // first.
  TreeEmbedding e;
  const int k = ray_length;
  e.map.assign(1 + static_cast<std::size_t>(k) * rays.size(), -1);
  e.map[0] = center;
  for (std::size_t j = 0; j < rays.size(); ++j)
    for (int i = 0; i < k; ++i) e.map[j * k + 1 + i] = rays[j][i];
  return e;
}

std::string to_text(const SpiderCertificate& c) {
  return to_text(c.to_embedding(), "center");
}

}  // namespace grove
