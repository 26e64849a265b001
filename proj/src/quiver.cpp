#include "palg/quiver.hpp"

#include <set>

namespace palg {

GradedQuiver::GradedQuiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                           std::vector<std::string> central_vars)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)), centrals_(std::move(central_vars)) {
  std::set<std::string> names;
  for (const auto& v : vertices_)
    if (!names.insert("e" + v).second) throw std::invalid_argument("duplicate vertex name " + v);
  for (const auto& a : arrows_) {
    if (!names.insert(a.name).second) throw std::invalid_argument("duplicate name " + a.name);
    if (a.src < 0 || a.src >= int(vertices_.size()) || a.dst < 0 || a.dst >= int(vertices_.size()))
      throw std::invalid_argument("arrow " + a.name + " has undeclared endpoint");
  }
  for (const auto& c : centrals_)
    if (!names.insert(c).second) throw std::invalid_argument("duplicate name " + c);
}

int GradedQuiver::vertex_index(const std::string& name) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return int(i);
  return -1;
}

int GradedQuiver::arrow_index(const std::string& name) const {
  for (size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return int(i);
  return -1;
}

int GradedQuiver::central_index(const std::string& name) const {
  for (size_t i = 0; i < centrals_.size(); ++i)
    if (centrals_[i] == name) return int(i);
  return -1;
}

int GradedQuiver::letter_src(int l) const {
  if (letter_is_arrow(l)) return arrows_[l].src;
  return (l - int(arrows_.size())) % int(vertices_.size());
}

int GradedQuiver::letter_dst(int l) const {
  if (letter_is_arrow(l)) return arrows_[l].dst;
  return letter_src(l);
}

int GradedQuiver::letter_degree(int l) const { return letter_is_arrow(l) ? arrows_[l].degree : 0; }

int GradedQuiver::central_letter(int var, int vertex) const {
  return int(arrows_.size()) + var * int(vertices_.size()) + vertex;
}

int GradedQuiver::letter_central_var(int l) const {
  if (letter_is_arrow(l)) return -1;
  return (l - int(arrows_.size())) / int(vertices_.size());
}

std::string GradedQuiver::letter_name(int l) const {
  if (letter_is_arrow(l)) return arrows_[l].name;
  return centrals_[letter_central_var(l)] + "@" + vertices_[letter_src(l)];
}

bool GradedQuiver::operator==(const GradedQuiver& o) const {
  if (vertices_ != o.vertices_ || centrals_ != o.centrals_) return false;
  if (arrows_.size() != o.arrows_.size()) return false;
  for (size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow &a = arrows_[i], &b = o.arrows_[i];
    if (a.name != b.name || a.src != b.src || a.dst != b.dst || a.degree != b.degree) return false;
  }
  return true;
}

QuiverPtr make_quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                      std::vector<std::string> central_vars) {
  return std::make_shared<GradedQuiver>(std::move(vertices), std::move(arrows),
                                        std::move(central_vars));
}

}  // namespace palg
