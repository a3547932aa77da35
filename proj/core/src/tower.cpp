#include "depthkit/tower.hpp"

#include <algorithm>
#include <sstream>

#include "depthkit/errors.hpp"

namespace depthkit {

TowerElement::TowerElement(std::size_t level) : level_(level) {
  if (level == 0) throw ValidationError("tower levels start at 1");
}

void TowerElement::add_normal(Word const& word, Rational const& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TowerElement& TowerElement::operator+=(TowerElement const& rhs) {
  if (rhs.level_ != level_) throw ValidationError("adding tower elements of different levels");
  for (auto const& [w, c] : rhs.terms_) add_normal(w, c);
  return *this;
}

TowerElement& TowerElement::operator-=(TowerElement const& rhs) {
  if (rhs.level_ != level_) throw ValidationError("subtracting tower elements of different levels");
  for (auto const& [w, c] : rhs.terms_) add_normal(w, -c);
  return *this;
}

TowerElement& TowerElement::operator*=(Rational const& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

Tower::Tower(FrobeniusSystem system)
    : system_(std::make_shared<FrobeniusSystem const>(std::move(system))) {}

void Tower::add_word(TowerElement& out, Word word, Rational const& coeff) const {
  auto const& g = *system_->group();
  std::size_t carry = PermGroup::identity();
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    auto [coset, h] = system_->decompose(g.product(carry, word[k]));
    word[k] = system_->coset_reps()[coset];
    carry = h;
  }
  word.back() = g.product(carry, word.back());
  out.add_normal(word, coeff);
}

void Tower::add_tensor(TowerElement& out, std::vector<GroupAlgebraElement> const& factors,
                       Rational const& coeff) const {
  using Iter = GroupAlgebraElement::Terms::const_iterator;
  std::vector<Iter> pos;
  for (auto const& f : factors) {
    if (f.is_zero()) return;
    pos.push_back(f.terms().begin());
  }
  Word word(factors.size());
  for (;;) {
    Rational c = coeff;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      word[k] = pos[k]->first;
      c *= pos[k]->second;
    }
    add_word(out, word, c);
    std::size_t k = factors.size();
    while (k > 0) {
      --k;
      if (++pos[k] != factors[k].terms().end()) break;
      pos[k] = factors[k].terms().begin();
      if (k == 0) return;
    }
  }
}

void Tower::add_with_middle(TowerElement& out, std::span<std::size_t const> prefix,
                            GroupAlgebraElement const& middle,
                            std::span<std::size_t const> suffix,
                            Rational const& coeff) const {
  Word word;
  word.reserve(prefix.size() + 1 + suffix.size());
  word.insert(word.end(), prefix.begin(), prefix.end());
  word.push_back(0);
  word.insert(word.end(), suffix.begin(), suffix.end());
  std::size_t const slot = prefix.size();
  for (auto const& [g, c] : middle.terms()) {
    word[slot] = g;
    add_word(out, word, coeff * c);
  }
}

TowerElement Tower::normalize(std::vector<GroupAlgebraElement> const& factors) const {
  TowerElement out(factors.size());
  add_tensor(out, factors, 1);
  return out;
}

TowerElement Tower::normalize_word(Word const& word) const {
  TowerElement out(word.size());
  add_word(out, word, 1);
  return out;
}

TowerElement Tower::from_ring(GroupAlgebraElement const& r) const { return normalize({r}); }

std::vector<Word> Tower::basis(std::size_t level) const {
  if (level == 0) throw ValidationError("tower levels start at 1");
  auto const& reps = system_->coset_reps();
  std::size_t const order = system_->group()->order();
  std::vector<Word> out;
  Word word(level, 0);
  std::vector<std::size_t> idx(level, 0);
  for (;;) {
    for (std::size_t k = 0; k + 1 < level; ++k) word[k] = reps[idx[k]];
    word[level - 1] = idx[level - 1];
    out.push_back(word);
    std::size_t k = level;
    for (;;) {
      if (k == 0) return out;
      --k;
      std::size_t const limit = (k + 1 == level) ? order : reps.size();
      if (++idx[k] < limit) break;
      idx[k] = 0;
    }
  }
}

// Even level 2n:
//   r_1..r_{n-1} (x) r_n E(r_{n+1} E(... E(r_{2n} t_1) t_2 ...) t_n) (x) t_{n+1}..t_{2n}
// Odd level 2n+1:
//   r_1..r_n (x) r_{n+1} E(r_{n+2} ... E(r_{2n+1} t_1) ... t_n) t_{n+1} (x) t_{n+2}..t_{2n+1}
void Tower::multiply_words(TowerElement& out, Word const& r, Word const& t,
                           Rational const& coeff) const {
  auto const& g = *system_->group();
  std::size_t const len = r.size();
  std::size_t const n = len / 2;
  GroupAlgebraElement acc = system_->one();
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t const r_idx = len - k;
    acc = system_->expectation(acc.left_mul(r[r_idx]).right_mul(t[k - 1]));
    if (acc.is_zero()) return;
  }
  std::span<std::size_t const> const rs(r);
  std::span<std::size_t const> const ts(t);
  if (len % 2 == 0) {
    add_with_middle(out, rs.first(n - 1), acc.left_mul(r[n - 1]), ts.subspan(n), coeff);
  } else {
    GroupAlgebraElement middle = acc.left_mul(r[n]).right_mul(t[n]);
    add_with_middle(out, rs.first(n), middle, ts.subspan(n + 1), coeff);
  }
  (void)g;
}

TowerElement Tower::multiply(TowerElement const& a, TowerElement const& b) const {
  if (a.level() != b.level()) {
    throw ValidationError("multiplying tower elements of levels " +
                          std::to_string(a.level()) + " and " + std::to_string(b.level()));
  }
  TowerElement out(a.level());
  for (auto const& [r, x] : a.terms()) {
    for (auto const& [t, y] : b.terms()) multiply_words(out, r, t, x * y);
  }
  return out;
}

TowerElement Tower::product(TowerElement const& a, TowerElement const& b) const {
  std::size_t const level = std::max(a.level(), b.level());
  return multiply(include_to(a, level), include_to(b, level));
}

TowerElement Tower::unit(std::size_t level) const {
  TowerElement out(level);
  std::size_t const n = level / 2;
  bool const odd = level % 2 == 1;
  auto const& xs = system_->x();
  auto const& ys = system_->y();
  std::vector<std::size_t> idx(n, 0);
  std::vector<GroupAlgebraElement> factors;
  for (;;) {
    factors.clear();
    for (std::size_t k = 0; k < n; ++k) factors.push_back(xs[idx[k]]);
    if (odd) factors.push_back(system_->one());
    for (std::size_t k = n; k-- > 0;) factors.push_back(ys[idx[k]]);
    add_tensor(out, factors, 1);
    std::size_t k = n;
    for (;;) {
      if (k == 0) return out;
      --k;
      if (++idx[k] < xs.size()) break;
      idx[k] = 0;
    }
  }
}

TowerElement Tower::include(TowerElement const& a) const {
  std::size_t const level = a.level();
  TowerElement out(level + 1);
  auto const& xs = system_->x();
  auto const& ys = system_->y();
  for (auto const& [word, c] : a.terms()) {
    if (level % 2 == 1) {
      // r_1..r_{n-1} (x) r_n x_i (x) y_i (x) r_{n+1}..r_{2n-1}, level 2n-1
      std::size_t const n = (level + 1) / 2;
      std::vector<GroupAlgebraElement> factors;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        factors.clear();
        for (std::size_t k = 0; k + 1 < n; ++k) factors.push_back(system_->element(word[k]));
        factors.push_back(system_->element(word[n - 1]) * xs[i]);
        factors.push_back(ys[i]);
        for (std::size_t k = n; k < level; ++k) factors.push_back(system_->element(word[k]));
        add_tensor(out, factors, c);
      }
    } else {
      // r_1..r_n (x) 1 (x) r_{n+1}..r_{2n}
      std::size_t const n = level / 2;
      Word w(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(n));
      w.push_back(PermGroup::identity());
      w.insert(w.end(), word.begin() + static_cast<std::ptrdiff_t>(n), word.end());
      add_word(out, std::move(w), c);
    }
  }
  return out;
}

TowerElement Tower::include_to(TowerElement const& a, std::size_t level) const {
  if (level < a.level()) throw ValidationError("cannot include into a lower level");
  TowerElement out = a;
  while (out.level() < level) out = include(out);
  return out;
}

TowerElement Tower::cond_exp(TowerElement const& a) const {
  if (a.level() < 2) throw ValidationError("conditional expectation needs level >= 2");
  std::size_t const m = a.level() - 1;
  std::size_t const n = m / 2;
  TowerElement out(m);
  auto const& g = *system_->group();
  for (auto const& [word, c] : a.terms()) {
    std::span<std::size_t const> const ws(word);
    if (m % 2 == 0) {
      // r_1..r_{n-1} (x) r_n E(r_{n+1}) (x) r_{n+2}..r_{2n+1}
      GroupAlgebraElement middle = system_->expectation(word[n]).left_mul(word[n - 1]);
      add_with_middle(out, ws.first(n - 1), middle, ws.subspan(n + 1), c);
    } else {
      // r_1..r_n (x) r_{n+1} r_{n+2} (x) r_{n+3}..r_{2n+2}
      Word w(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(n));
      w.push_back(g.product(word[n], word[n + 1]));
      w.insert(w.end(), word.begin() + static_cast<std::ptrdiff_t>(n + 2), word.end());
      add_word(out, std::move(w), c);
    }
  }
  return out;
}

TowerElement Tower::tl_generator(std::size_t n) const {
  if (n == 0) throw ValidationError("Temperley-Lieb generators start at e_1");
  auto const& xs = system_->x();
  auto const& ys = system_->y();
  std::size_t const half = n / 2;
  bool const even = n % 2 == 0;
  std::size_t const sums = even ? half + 1 : half;
  TowerElement out(n + 1);
  std::vector<std::size_t> idx(sums, 0);
  std::vector<GroupAlgebraElement> factors;
  for (;;) {
    factors.clear();
    for (std::size_t k = 0; k < half; ++k) factors.push_back(xs[idx[k]]);
    if (even) {
      // ... (x) y_{i_n} x_{i_{n+1}} (x) y_{i_{n+1}} (x) y_{i_{n-1}} ... y_{i_1}
      factors.push_back(ys[idx[half - 1]] * xs[idx[half]]);
      factors.push_back(ys[idx[half]]);
      for (std::size_t k = half - 1; k-- > 0;) factors.push_back(ys[idx[k]]);
    } else {
      factors.push_back(system_->one());
      factors.push_back(system_->one());
      for (std::size_t k = half; k-- > 0;) factors.push_back(ys[idx[k]]);
    }
    add_tensor(out, factors, 1);
    std::size_t k = sums;
    for (;;) {
      if (k == 0) return out;
      --k;
      if (++idx[k] < xs.size()) break;
      idx[k] = 0;
    }
  }
}

TowerElement Tower::bimodule_action(TowerElement const& x, TowerElement const& a,
                                    Side side) const {
  std::size_t const m = x.level();
  std::size_t const n = a.level();
  if (m >= n) throw ValidationError("bimodule action needs a lower-level ring");
  TowerElement out(n);
  for (auto const& [word, c] : a.terms()) {
    if (side == Side::Left) {
      Word head(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(m));
      TowerElement head_el(m);
      head_el.add_normal(head, 1);  // prefixes of normal words are normal up to the last slot
      TowerElement prod = multiply(x, head_el);
      for (auto const& [w, d] : prod.terms()) {
        Word full = w;
        full.insert(full.end(), word.begin() + static_cast<std::ptrdiff_t>(m), word.end());
        add_word(out, std::move(full), c * d);
      }
    } else {
      Word tail(word.end() - static_cast<std::ptrdiff_t>(m), word.end());
      TowerElement tail_el = normalize_word(tail);
      TowerElement prod = multiply(tail_el, x);
      for (auto const& [w, d] : prod.terms()) {
        Word full(word.begin(), word.end() - static_cast<std::ptrdiff_t>(m));
        full.insert(full.end(), w.begin(), w.end());
        add_word(out, std::move(full), c * d);
      }
    }
  }
  return out;
}

TowerElement Tower::tensor(TowerElement const& a, TowerElement const& b) const {
  TowerElement out(a.level() + b.level());
  for (auto const& [u, x] : a.terms()) {
    for (auto const& [v, y] : b.terms()) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      add_word(out, std::move(w), x * y);
    }
  }
  return out;
}

std::vector<TowerElement> Tower::dual_x(std::size_t n) const {
  TowerElement const one = unit(n);
  std::vector<TowerElement> out;
  for (auto const& xi : system_->x()) out.push_back(tensor(from_ring(xi), one));
  return out;
}

std::vector<TowerElement> Tower::dual_y(std::size_t n) const {
  TowerElement const one = unit(n);
  std::vector<TowerElement> out;
  for (auto const& yi : system_->y()) out.push_back(tensor(one, from_ring(yi)));
  return out;
}

TowerElement Tower::change_coordinates(TowerElement const& a,
                                       CentralizerElement const& d) const {
  std::size_t const level = a.level();
  // First slot that receives d^-1 (0-based): n for level 2n, n+1 for 2n+1.
  std::size_t const first = level % 2 == 0 ? level / 2 : level / 2 + 1;
  TowerElement out(level);
  std::vector<GroupAlgebraElement> factors;
  for (auto const& [word, c] : a.terms()) {
    factors.clear();
    for (std::size_t k = 0; k < level; ++k) {
      GroupAlgebraElement f = system_->element(word[k]);
      factors.push_back(k >= first ? d.inverse() * f : std::move(f));
    }
    add_tensor(out, factors, c);
  }
  return out;
}

std::string Tower::to_string(TowerElement const& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  auto const& g = *system_->group();
  bool first = true;
  for (auto const& [w, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c << "*[";
    for (std::size_t k = 0; k < w.size(); ++k) {
      os << (k ? " | " : "") << g.element(w[k]).to_cycles();
    }
    os << ']';
  }
  return os.str();
}

}  // namespace depthkit
