#include "depthkit/perm_group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "depthkit/errors.hpp"

namespace depthkit {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw ValidationError("permutation images are not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::parse_cycles(std::string const& text, std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> moved(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') {
      throw ParseError("expected '(' in cycle notation: '" + text + "'");
    }
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError("malformed cycle in '" + text + "'");
      unsigned long point = std::stoul(text.substr(start, i - start));
      if (point < 1 || point > degree) {
        throw ParseError("point " + std::to_string(point) + " outside 1.." +
                         std::to_string(degree));
      }
      cycle.push_back(static_cast<std::uint32_t>(point - 1));
    }
    for (auto p : cycle) {
      if (moved[p]) {
        throw ParseError("point " + std::to_string(p + 1) +
                         " appears twice; cycles must be disjoint");
      }
      moved[p] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip_ws();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    inv[images_[x]] = static_cast<std::uint32_t>(x);
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(Permutation const& rhs) const {
  if (degree() != rhs.degree()) throw ValidationError("degree mismatch in product");
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[x] = images_[rhs.images_[x]];
  return Permutation(std::move(out));
}

std::string Permutation::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    os << '(';
    std::size_t y = x;
    bool first = true;
    do {
      seen[y] = true;
      os << (first ? "" : " ") << y + 1;
      first = false;
      y = images_[y];
    } while (y != x);
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<Permutation> elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  std::size_t const n = elements_.size();
  table_.resize(n * n);
  inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table_[a * n + b] = index_.at(elements_[a] * elements_[b]);
    }
    inverses_[a] = index_.at(elements_[a].inverse());
  }
}

PermGroup PermGroup::generate(std::size_t degree, std::vector<Permutation> generators,
                              std::size_t max_order) {
  if (degree == 0) throw ValidationError("permutation degree must be positive");
  for (auto const& g : generators) {
    if (g.degree() != degree) throw ValidationError("generator degree mismatch");
  }
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> frontier{Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (auto const& x : frontier) {
      for (auto const& g : generators) {
        Permutation y = g * x;
        if (seen.insert(y).second) {
          if (seen.size() > max_order) {
            throw ResourceError("group order exceeds the limit of " +
                                std::to_string(max_order));
          }
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return PermGroup(degree, std::move(generators),
                   std::vector<Permutation>(seen.begin(), seen.end()));
}

PermGroup PermGroup::symmetric(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    gens.push_back(Permutation::parse_cycles("(1 2)", degree));
    std::string cycle = "(";
    for (std::size_t i = 1; i <= degree; ++i) cycle += std::to_string(i) + " ";
    cycle.back() = ')';
    gens.push_back(Permutation::parse_cycles(cycle, degree));
  }
  return generate(degree, std::move(gens));
}

PermGroup PermGroup::alternating(std::size_t degree) {
  std::vector<Permutation> gens;
  for (std::size_t k = 3; k <= degree; ++k) {
    gens.push_back(Permutation::parse_cycles(
        "(1 2 " + std::to_string(k) + ")", degree));
  }
  return generate(degree, std::move(gens));
}

PermGroup PermGroup::trivial(std::size_t degree) { return generate(degree, {}); }

std::optional<std::size_t> PermGroup::index_of(Permutation const& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool PermGroup::is_subgroup_of(PermGroup const& g) const {
  if (degree_ != g.degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](Permutation const& p) { return g.contains(p); });
}

ElementSet PermGroup::embed(PermGroup const& sub) const {
  if (!sub.is_subgroup_of(*this)) {
    throw ValidationError("H is not a subgroup of G");
  }
  ElementSet set(order());
  for (auto const& p : sub.elements()) set.set(*index_of(p));
  return set;
}

PermGroup PermGroup::subgroup(ElementSet const& elements) const {
  // Greedy generating set: add an element whenever it is not yet generated.
  std::vector<Permutation> gens;
  ElementSet generated(order());
  generated.set(identity());
  for (std::size_t i = elements.find_first(); i != ElementSet::npos;
       i = elements.find_next(i)) {
    if (generated.test(i)) continue;
    gens.push_back(elements_[i]);
    std::vector<std::size_t> stack;
    for (std::size_t j = generated.find_first(); j != ElementSet::npos;
         j = generated.find_next(j)) {
      stack.push_back(j);
    }
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (auto const& gp : gens) {
        std::size_t y = product(*index_of(gp), x);
        if (!generated.test(y)) {
          generated.set(y);
          stack.push_back(y);
        }
      }
    }
  }
  if ((generated & ~elements).any()) {
    throw ValidationError("element set is not closed under multiplication");
  }
  std::vector<Permutation> elems;
  for (std::size_t i = generated.find_first(); i != ElementSet::npos;
       i = generated.find_next(i)) {
    elems.push_back(elements_[i]);
  }
  return PermGroup(degree_, std::move(gens), std::move(elems));
}

ElementSet PermGroup::conjugate_set(std::size_t g, ElementSet const& s) const {
  ElementSet out(order());
  for (std::size_t h = s.find_first(); h != ElementSet::npos; h = s.find_next(h)) {
    out.set(conjugate(g, h));
  }
  return out;
}

ElementSet PermGroup::centralizer(ElementSet const& s) const {
  ElementSet out(order());
  for (std::size_t g = 0; g < order(); ++g) {
    bool commutes = true;
    for (std::size_t h = s.find_first(); h != ElementSet::npos && commutes;
         h = s.find_next(h)) {
      commutes = product(g, h) == product(h, g);
    }
    if (commutes) out.set(g);
  }
  return out;
}

PermGroup normalizer(PermGroup const& g, PermGroup const& h) {
  ElementSet const hs = g.embed(h);
  ElementSet n(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (g.conjugate_set(x, hs) == hs) n.set(x);
  }
  return g.subgroup(n);
}

bool is_normal(PermGroup const& g, PermGroup const& h) {
  return normalizer(g, h).order() == g.order();
}

}  // namespace depthkit
