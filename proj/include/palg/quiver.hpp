// Graded quivers with declared central variables.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "palg/scalar.hpp"

namespace palg {

struct Arrow {
  std::string name;
  int src = 0;
  int dst = 0;
  int degree = 0;
};

/// A finite graded quiver over the semisimple vertex base, together with a
/// list of central variables. Central variables behave as commuting scalars
/// in the public element interface; the rewriting engine realizes each one
/// as a family of degree-0 loops, one per vertex (letter ids below).
class GradedQuiver {
 public:
  GradedQuiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
               std::vector<std::string> central_vars);

  size_t num_vertices() const { return vertices_.size(); }
  size_t num_arrows() const { return arrows_.size(); }
  size_t num_centrals() const { return centrals_.size(); }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<std::string>& central_vars() const { return centrals_; }

  int vertex_index(const std::string& name) const;  // -1 if absent
  int arrow_index(const std::string& name) const;
  int central_index(const std::string& name) const;

  // Letter id space for the rewriting engine: arrows get ids [0, A);
  // the central loop of variable c at vertex v gets id A + c*V + v.
  int letter_count() const { return int(arrows_.size() + centrals_.size() * vertices_.size()); }
  bool letter_is_arrow(int l) const { return l < int(arrows_.size()); }
  int letter_src(int l) const;
  int letter_dst(int l) const;
  int letter_degree(int l) const;
  int central_letter(int var, int vertex) const;
  int letter_central_var(int l) const;  // -1 for arrows
  std::string letter_name(int l) const;

  bool operator==(const GradedQuiver& o) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::string> centrals_;
};

using QuiverPtr = std::shared_ptr<const GradedQuiver>;

QuiverPtr make_quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                      std::vector<std::string> central_vars);

}  // namespace palg
