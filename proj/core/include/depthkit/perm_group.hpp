#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace depthkit {

// Bijection of {0, ..., degree-1}. Cycle notation at the text boundary is
// 1-based. Products compose right to left: (p * q)(x) = p(q(x)).
class Permutation {
 public:
  explicit Permutation(std::size_t degree);  // identity
  explicit Permutation(std::vector<std::uint32_t> images);

  // "(1 2)(3 4)", "()" for the identity.
  static Permutation parse_cycles(std::string const& text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t x) const { return images_[x]; }
  std::vector<std::uint32_t> const& images() const noexcept { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(Permutation const& rhs) const;

  std::string to_cycles() const;

  auto operator<=>(Permutation const&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

using ElementSet = boost::dynamic_bitset<>;

// Finite permutation group with its elements enumerated once. Elements are
// sorted by image vector, so index 0 is always the identity; the Cayley
// table is precomputed.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 5040;

  // Closure of the generators. Throws ResourceError past max_order elements.
  static PermGroup generate(std::size_t degree, std::vector<Permutation> generators,
                            std::size_t max_order = kDefaultMaxOrder);

  static PermGroup symmetric(std::size_t degree);
  static PermGroup alternating(std::size_t degree);
  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::vector<Permutation> const& generators() const noexcept { return generators_; }
  std::vector<Permutation> const& elements() const noexcept { return elements_; }
  Permutation const& element(std::size_t i) const { return elements_[i]; }

  static constexpr std::size_t identity() noexcept { return 0; }
  std::optional<std::size_t> index_of(Permutation const& p) const;
  bool contains(Permutation const& p) const { return index_of(p).has_value(); }

  std::size_t product(std::size_t a, std::size_t b) const {
    return table_[a * elements_.size() + b];
  }
  std::size_t inverse(std::size_t a) const { return inverses_[a]; }
  std::size_t conjugate(std::size_t g, std::size_t h) const {  // g h g^-1
    return product(product(g, h), inverses_[g]);
  }

  bool is_subgroup_of(PermGroup const& g) const;

  // Indices (in *this) of the elements of a subgroup. Throws ValidationError
  // if sub is not contained in *this.
  ElementSet embed(PermGroup const& sub) const;

  // Subgroup generated by a set of elements of *this.
  PermGroup subgroup(ElementSet const& elements) const;

  ElementSet conjugate_set(std::size_t g, ElementSet const& s) const;
  ElementSet centralizer(ElementSet const& s) const;

 private:
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Permutation> elements);

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::map<Permutation, std::size_t> index_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverses_;
};

// N_G(H) = {g in G : g H g^-1 = H}. Throws ValidationError unless H <= G.
PermGroup normalizer(PermGroup const& g, PermGroup const& h);

bool is_normal(PermGroup const& g, PermGroup const& h);

// Group pair text format:
//   degree k
//   <generators of H, one per line, cycle notation>
//   ---
//   <generators of G>
//   level N          (optional; used by the tower command)
// '#' starts a comment. An empty block denotes the trivial group.
struct GroupSpec {
  std::size_t degree = 0;
  std::vector<Permutation> subgroup_generators;
  std::vector<Permutation> group_generators;
  std::optional<std::size_t> level;
};

GroupSpec parse_group_spec(std::string const& text);
GroupSpec read_group_spec_file(std::string const& path);

struct GroupPair {
  PermGroup group;
  PermGroup subgroup;
};

// Enumerates both groups and checks H <= G. max_order guards |G|.
GroupPair build_pair(GroupSpec const& spec, std::size_t max_order);

}  // namespace depthkit
