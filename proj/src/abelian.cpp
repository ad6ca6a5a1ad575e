#include "cayint/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "cayint/errors.hpp"

namespace cayint {

namespace {

int mod(std::int64_t v, int n) {
  auto r = v % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

}  // namespace

std::string AbElement::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ',';
    os << coords[i];
  }
  return os.str();
}

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  strides_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size(); i-- > 0;) {
    if (factors_[i] < 2) throw StructuralError("abelian group factors must be >= 2");
    strides_[i] = order_;
    if (order_ > (1 << 20) / factors_[i]) throw StructuralError("abelian group too large");
    order_ *= factors_[i];
    exponent_ = std::lcm(exponent_, factors_[i]);
  }
}

void AbelianGroup::validate(const AbElement& a) const {
  if (a.coords.size() != factors_.size()) {
    throw StructuralError("element has " + std::to_string(a.coords.size()) + " coordinates, group rank is " +
                          std::to_string(factors_.size()));
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (a.coords[i] < 0 || a.coords[i] >= factors_[i]) {
      throw StructuralError("coordinate " + std::to_string(i) + " out of range in (" + a.to_string() + ")");
    }
  }
}

AbElement AbelianGroup::element(int index) const {
  if (index < 0 || index >= order_) throw StructuralError("element index out of range");
  AbElement a{std::vector<int>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i) a.coords[i] = (index / strides_[i]) % factors_[i];
  return a;
}

int AbelianGroup::index(const AbElement& a) const {
  validate(a);
  int idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx += a.coords[i] * strides_[i];
  return idx;
}

AbElement AbelianGroup::mul(const AbElement& a, const AbElement& b) const {
  validate(a);
  validate(b);
  AbElement r{std::vector<int>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i) r.coords[i] = (a.coords[i] + b.coords[i]) % factors_[i];
  return r;
}

AbElement AbelianGroup::inverse(const AbElement& a) const { return power(a, -1); }

AbElement AbelianGroup::power(const AbElement& a, std::int64_t k) const {
  validate(a);
  AbElement r{std::vector<int>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    r.coords[i] = mod(static_cast<std::int64_t>(a.coords[i]) * mod(k, factors_[i]), factors_[i]);
  }
  return r;
}

int AbelianGroup::mul(int a, int b) const {
  int idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int ca = (a / strides_[i]) % factors_[i];
    const int cb = (b / strides_[i]) % factors_[i];
    idx += ((ca + cb) % factors_[i]) * strides_[i];
  }
  return idx;
}

int AbelianGroup::inverse(int a) const { return power(a, -1); }

int AbelianGroup::power(int a, std::int64_t k) const {
  int idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int ca = (a / strides_[i]) % factors_[i];
    idx += mod(static_cast<std::int64_t>(ca) * mod(k, factors_[i]), factors_[i]) * strides_[i];
  }
  return idx;
}

int AbelianGroup::element_order(const AbElement& a) const {
  validate(a);
  int ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int n = factors_[i];
    ord = std::lcm(ord, n / std::gcd(n, a.coords[i]));
  }
  return ord;
}

IndexSet AbelianGroup::all() const {
  IndexSet s(static_cast<std::size_t>(order_));
  std::iota(s.begin(), s.end(), 0);
  return s;
}

AbElement ab_mul(const AbelianGroup& group, const AbElement& a, const AbElement& b) { return group.mul(a, b); }

int element_order(const AbelianGroup& group, const AbElement& a) { return group.element_order(a); }

// ---------------------------------------------------------------------------

Automorphism::Automorphism(const AbelianGroup& group, std::vector<AbElement> generator_images)
    : group_(group), images_(std::move(generator_images)) {
  const auto& n = group.factors();
  if (images_.size() != n.size()) {
    throw StructuralError("automorphism needs " + std::to_string(n.size()) + " generator images, got " +
                          std::to_string(images_.size()));
  }
  for (std::size_t i = 0; i < n.size(); ++i) {
    group.validate(images_[i]);
    if (n[i] % group.element_order(images_[i]) != 0) {
      throw StructuralError("generator " + std::to_string(i) + " image (" + images_[i].to_string() +
                            ") has order not dividing " + std::to_string(n[i]));
    }
  }
  table_.resize(static_cast<std::size_t>(group.order()));
  std::vector<bool> hit(table_.size(), false);
  for (int idx = 0; idx < group.order(); ++idx) {
    const auto a = group.element(idx);
    auto img = group.identity();
    for (std::size_t i = 0; i < n.size(); ++i) img = group.mul(img, group.power(images_[i], a.coords[i]));
    const int j = group.index(img);
    if (hit[static_cast<std::size_t>(j)]) throw StructuralError("automorphism is not bijective");
    hit[static_cast<std::size_t>(j)] = true;
    table_[static_cast<std::size_t>(idx)] = j;
  }
  inversion_ = true;
  for (int idx = 0; idx < group.order(); ++idx) {
    if (table_[static_cast<std::size_t>(idx)] != group.inverse(idx)) {
      inversion_ = false;
      break;
    }
  }
}

Automorphism Automorphism::identity(const AbelianGroup& group) { return power_map(group, 1); }

Automorphism Automorphism::inversion(const AbelianGroup& group) { return power_map(group, -1); }

Automorphism Automorphism::power_map(const AbelianGroup& group, std::int64_t r) {
  if (std::gcd(mod(r, group.exponent()), group.exponent()) != 1) {
    throw PreconditionError("power map a -> a^" + std::to_string(r) + " is not invertible");
  }
  std::vector<AbElement> images;
  for (int i = 0; i < group.rank(); ++i) {
    auto e = group.identity();
    e.coords[static_cast<std::size_t>(i)] = 1;
    images.push_back(group.power(e, r));
  }
  return Automorphism(group, std::move(images));
}

AbElement Automorphism::apply(const AbElement& a) const { return group_.element(apply(group_.index(a))); }

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool Automorphism::is_involution() const {
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[static_cast<std::size_t>(table_[i])] != static_cast<int>(i)) return false;
  }
  return true;
}

IndexSet subgroup_B(const AbelianGroup& group, const Automorphism& f) {
  std::vector<bool> in(static_cast<std::size_t>(group.order()), false);
  for (int a = 0; a < group.order(); ++a) in[static_cast<std::size_t>(group.mul(f.apply(a), group.inverse(a)))] = true;
  IndexSet b;
  for (int i = 0; i < group.order(); ++i) {
    if (in[static_cast<std::size_t>(i)]) b.push_back(i);
  }
  return b;
}

bool is_subgroup(const AbelianGroup& group, const IndexSet& subset) {
  if (subset.empty()) return false;
  std::vector<bool> in(static_cast<std::size_t>(group.order()), false);
  for (int s : subset) {
    if (s < 0 || s >= group.order()) return false;
    in[static_cast<std::size_t>(s)] = true;
  }
  if (!in[0]) return false;
  for (int s : subset) {
    for (int t : subset) {
      if (!in[static_cast<std::size_t>(group.mul(s, group.inverse(t)))]) return false;
    }
  }
  return true;
}

Quotient quotient(const AbelianGroup& group, const IndexSet& subgroup) {
  if (!is_subgroup(group, subgroup)) throw StructuralError("quotient: B is not a subgroup");
  Quotient q;
  q.coset_of.assign(static_cast<std::size_t>(group.order()), -1);
  for (int a = 0; a < group.order(); ++a) {
    if (q.coset_of[static_cast<std::size_t>(a)] >= 0) continue;
    IndexSet coset;
    for (int b : subgroup) coset.push_back(group.mul(a, b));
    std::sort(coset.begin(), coset.end());
    for (int c : coset) q.coset_of[static_cast<std::size_t>(c)] = static_cast<int>(q.cosets.size());
    q.cosets.push_back(std::move(coset));
  }
  q.index = static_cast<int>(q.cosets.size());
  return q;
}

// ---------------------------------------------------------------------------

std::int64_t Character::exponent_at(const AbelianGroup& group, const AbElement& a, int m) const {
  group.validate(a);
  const auto& n = group.factors();
  if (exponents.size() != n.size()) throw StructuralError("character rank mismatch");
  if (m % group.exponent() != 0) throw StructuralError("ring order must be a multiple of the group exponent");
  std::int64_t t = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    t += static_cast<std::int64_t>(exponents[i]) * a.coords[i] * (m / n[i]);
    t %= m;
  }
  return t;
}

CycloInt Character::value(const AbelianGroup& group, const AbElement& a, int m) const {
  return CycloInt::root(m, exponent_at(group, a, m));
}

std::vector<int> Character::table(const AbelianGroup& group, int m) const {
  std::vector<int> t(static_cast<std::size_t>(group.order()));
  for (int i = 0; i < group.order(); ++i) t[static_cast<std::size_t>(i)] = static_cast<int>(exponent_at(group, group.element(i), m));
  return t;
}

std::string Character::to_string() const { return AbElement{exponents}.to_string(); }

std::vector<Character> characters(const AbelianGroup& group) {
  // The dual group has the same factor shape, so its index order is the
  // lexicographic order on exponent vectors.
  std::vector<Character> out;
  out.reserve(static_cast<std::size_t>(group.order()));
  for (int i = 0; i < group.order(); ++i) out.push_back(Character{group.element(i).coords});
  return out;
}

std::vector<Character> characters_nontrivial_on_B(const AbelianGroup& group, const IndexSet& subgroup) {
  std::vector<Character> out;
  const int m = group.exponent();
  for (auto& chi : characters(group)) {
    const bool nontrivial = std::any_of(subgroup.begin(), subgroup.end(), [&](int b) {
      return chi.exponent_at(group, group.element(b), m) != 0;
    });
    if (nontrivial) out.push_back(std::move(chi));
  }
  return out;
}

CycloInt character_sum(const std::vector<int>& table, const IndexSet& subset, int m) {
  CycloInt sum(m);
  for (int s : subset) sum.add_root(table[static_cast<std::size_t>(s)]);
  return sum;
}

// ---------------------------------------------------------------------------

std::vector<Atom> atoms(const AbelianGroup& group) {
  std::map<IndexSet, std::size_t> by_subgroup;
  std::vector<Atom> out;
  for (int a = 0; a < group.order(); ++a) {
    IndexSet generated;
    int p = 0;
    do {
      generated.push_back(p);
      p = group.mul(p, a);
    } while (p != 0);
    std::sort(generated.begin(), generated.end());
    auto [it, inserted] = by_subgroup.try_emplace(std::move(generated), out.size());
    if (inserted) out.push_back(Atom{a, {}});
    out[it->second].members.push_back(a);
  }
  return out;
}

bool in_boolean_algebra(const AbelianGroup& group, const IndexSet& subset) {
  std::vector<bool> in(static_cast<std::size_t>(group.order()), false);
  for (int s : subset) in[static_cast<std::size_t>(s)] = true;
  for (const auto& atom : atoms(group)) {
    const bool first = in[static_cast<std::size_t>(atom.members.front())];
    for (int m : atom.members) {
      if (in[static_cast<std::size_t>(m)] != first) return false;
    }
  }
  return true;
}

IndexSet set_power(const AbelianGroup& group, const IndexSet& subset, std::int64_t j) {
  IndexSet out;
  out.reserve(subset.size());
  for (int s : subset) out.push_back(group.power(s, j));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool power_closure_check(const AbelianGroup& group, const IndexSet& subset, std::int64_t j) {
  if (std::gcd(mod(j, group.exponent()), group.exponent()) != 1) {
    throw PreconditionError("power_closure_check: j=" + std::to_string(j) + " is not coprime to the exponent " +
                            std::to_string(group.exponent()));
  }
  IndexSet sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  return set_power(group, sorted, j) == sorted;
}

}  // namespace cayint
