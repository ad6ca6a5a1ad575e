#include "cayint/extension.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>

#include "cayint/errors.hpp"

namespace cayint {

ExtGroup::ExtGroup(AbelianGroup base, Automorphism twist, AbElement y, std::string spec)
    : base_(std::move(base)), twist_(std::move(twist)), y_(std::move(y)), spec_(std::move(spec)) {
  if (base_.order() < 3) throw StructuralError("|A| must be at least 3");
  if (2 * base_.order() > kMaxOrder) {
    throw StructuralError("|G| = " + std::to_string(2 * base_.order()) + " exceeds the supported maximum " +
                          std::to_string(kMaxOrder));
  }
  if (twist_.table().size() != static_cast<std::size_t>(base_.order())) {
    throw StructuralError("automorphism does not act on A");
  }
  if (!twist_.is_involution()) throw StructuralError("f must satisfy f(f(a)) = a");
  if (twist_.is_identity()) throw StructuralError("f = identity gives an abelian group");
  y_index_ = base_.index(y_);
  if (twist_.apply(y_index_) != y_index_) throw StructuralError("f must fix y = (" + y_.to_string() + ")");

  b_ = subgroup_B(base_, twist_);
  m_ = std::lcm(4, 2 * base_.exponent());
  if (spec_.empty()) spec_ = "<unnamed>";

  const int n = order();
  const int na = base_.order();
  const auto& f = twist_.table();
  mul_.resize(static_cast<std::size_t>(n * n));
  inv_.resize(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    const int ga = g % na;
    const bool gx = g >= na;
    for (int h = 0; h < n; ++h) {
      const int ha = h % na;
      const bool hx = h >= na;
      int r;
      if (!gx && !hx) {
        r = base_.mul(ga, ha);
      } else if (!gx && hx) {
        r = na + base_.mul(f[static_cast<std::size_t>(ga)], ha);
      } else if (gx && !hx) {
        r = na + base_.mul(ga, ha);
      } else {
        r = base_.mul(base_.mul(y_index_, f[static_cast<std::size_t>(ga)]), ha);
      }
      mul_[static_cast<std::size_t>(g * n + h)] = r;
    }
    if (!gx) {
      inv_[static_cast<std::size_t>(g)] = base_.inverse(ga);
    } else {
      inv_[static_cast<std::size_t>(g)] =
          na + base_.mul(base_.inverse(y_index_), f[static_cast<std::size_t>(base_.inverse(ga))]);
    }
  }
}

int ExtGroup::index(const ExtElement& g) const {
  if (g.flag != 0 && g.flag != 1) throw StructuralError("element flag must be 0 or 1");
  return g.flag * base_.order() + base_.index(g.a);
}

ExtElement ExtGroup::element(int g) const {
  if (g < 0 || g >= order()) throw StructuralError("group element index out of range");
  return ExtElement{flag_of(g), base_.element(a_part(g))};
}

ExtElement ExtGroup::mul(const ExtElement& g, const ExtElement& h) const { return element(mul(index(g), index(h))); }

ExtElement ExtGroup::inverse(const ExtElement& g) const { return element(inverse(index(g))); }

std::string ExtGroup::label(int g) const {
  const int a = a_part(g);
  const bool x = flag_of(g) == 1;
  std::string body;
  if (base_.rank() == 1) {
    if (a == 1) {
      body = "a";
    } else if (a > 1) {
      body = "a^" + std::to_string(a);
    }
  } else if (a != 0) {
    body = "(" + base_.element(a).to_string() + ")";
  }
  if (x) return body.empty() ? "x" : "x*" + body;
  return body.empty() ? "1" : body;
}

ExtElement ext_mul(const ExtGroup& group, const ExtElement& g, const ExtElement& h) { return group.mul(g, h); }

ExtElement ext_inv(const ExtGroup& group, const ExtElement& g) { return group.inverse(g); }

// ---------------------------------------------------------------------------
// Text parsing

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() {
    skip_ws();
    return pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  std::string identifier() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek_integer() {
    skip_ws();
    return pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' || text_[pos_] == '+');
  }

  std::int64_t integer() {
    skip_ws();
    const auto start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = start;
      fail("expected an integer");
    }
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<std::int32_t>::max() - 9) / 10) {
        pos_ = start;
        fail("integer too large");
      }
      v = v * 10 + (text_[pos_++] - '0');
    }
    return negative ? -v : v;
  }

  [[noreturn]] void fail(const std::string& reason) { throw ParseError(pos_, reason); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& reason) { throw ParseError(at, reason); }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<int> parse_factors(Cursor& in) {
  std::vector<int> factors;
  do {
    const auto at = in.pos();
    const auto n = in.integer();
    if (n < 2) in.fail_at(at, "cyclic factor must be >= 2");
    factors.push_back(static_cast<int>(n));
  } while (in.accept('x'));
  return factors;
}

std::vector<int> parse_coords(Cursor& in) {
  std::vector<int> coords;
  do {
    coords.push_back(static_cast<int>(in.integer()));
  } while (in.accept(','));
  return coords;
}

AbElement reduce_coords(const AbelianGroup& group, std::vector<int> coords, Cursor& in, std::size_t at) {
  if (static_cast<int>(coords.size()) != group.rank()) {
    in.fail_at(at, "expected " + std::to_string(group.rank()) + " coordinates, got " + std::to_string(coords.size()));
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const int n = group.factors()[i];
    coords[i] = ((coords[i] % n) + n) % n;
  }
  return AbElement{std::move(coords)};
}

int power_of_two_exponent(std::int64_t m) {
  int k = 0;
  while (m > 1 && m % 2 == 0) {
    m /= 2;
    ++k;
  }
  return m == 1 ? k : -1;
}

std::string normalize(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

template <typename Fn>
ExtGroup build(Cursor& in, std::size_t at, Fn&& fn) {
  try {
    return fn();
  } catch (const StructuralError& e) {
    in.fail_at(at, e.what());
  } catch (const PreconditionError& e) {
    in.fail_at(at, e.what());
  }
}

}  // namespace

ExtGroup parse_group(std::string_view text) {
  Cursor in(text);
  const std::string spec = normalize(text);
  const auto name_at = in.pos();
  const std::string name = in.identifier();
  in.expect('(');
  const auto args_at = in.pos();

  if (name == "dihedral") {
    const auto n = in.integer();
    in.expect(')');
    in.expect_end();
    if (n % 2 != 0 || n < 6) in.fail_at(args_at, "dihedral(N) needs an even group order N >= 6");
    return build(in, args_at, [&] {
      AbelianGroup a({static_cast<int>(n / 2)});
      return ExtGroup(a, Automorphism::inversion(a), a.identity(), spec);
    });
  }

  if (name == "semidihedral" || name == "modular") {
    const auto m = in.integer();
    in.expect(')');
    in.expect_end();
    if (power_of_two_exponent(m) < 3) in.fail_at(args_at, name + "(M) needs M = |A| a power of two, M >= 8");
    const std::int64_t s = name == "semidihedral" ? m / 2 - 1 : m / 2 + 1;
    return build(in, args_at, [&] {
      AbelianGroup a({static_cast<int>(m)});
      return ExtGroup(a, Automorphism::power_map(a, s), a.identity(), spec);
    });
  }

  if (name == "dicyclic") {
    const auto factors = parse_factors(in);
    in.expect(';');
    const auto y_at = in.pos();
    auto coords = parse_coords(in);
    in.expect(')');
    in.expect_end();
    AbelianGroup a(factors);
    const auto y = reduce_coords(a, std::move(coords), in, y_at);
    if (a.element_order(y) != 2) in.fail_at(y_at, "dicyclic needs y of order 2");
    return build(in, args_at, [&] { return ExtGroup(a, Automorphism::inversion(a), y, spec); });
  }

  if (name == "generic") {
    const auto factors = parse_factors(in);
    AbelianGroup a(factors);
    in.expect(';');
    if (!in.accept_word("f")) in.fail("expected 'f='");
    in.expect('=');
    in.expect('[');
    const auto f_at = in.pos();
    std::vector<AbElement> images;
    if (in.peek('[')) {
      do {
        const auto row_at = in.pos();
        in.expect('[');
        auto row = parse_coords(in);
        in.expect(']');
        images.push_back(reduce_coords(a, std::move(row), in, row_at));
      } while (in.accept(','));
    } else {
      const auto diag = parse_coords(in);
      if (static_cast<int>(diag.size()) != a.rank()) {
        in.fail_at(f_at, "f needs one exponent per cyclic factor");
      }
      for (int i = 0; i < a.rank(); ++i) {
        auto e = a.identity();
        e.coords[static_cast<std::size_t>(i)] = 1;
        images.push_back(a.power(e, diag[static_cast<std::size_t>(i)]));
      }
    }
    in.expect(']');
    in.expect(';');
    if (!in.accept_word("y")) in.fail("expected 'y='");
    in.expect('=');
    const auto y_at = in.pos();
    auto coords = parse_coords(in);
    in.expect(')');
    in.expect_end();
    const auto y = reduce_coords(a, std::move(coords), in, y_at);
    return build(in, f_at, [&] { return ExtGroup(a, Automorphism(a, std::move(images)), y, spec); });
  }

  in.fail_at(name_at, "unknown group family '" + name + "'");
}

// ---------------------------------------------------------------------------
// Connection sets

const char* to_string(SetKind kind) {
  switch (kind) {
    case SetKind::undirected:
      return "undirected";
    case SetKind::directed:
      return "directed";
    case SetKind::mixed:
      return "mixed";
  }
  return "?";
}

SetKind kind_of(const ConnectionSet& cs) {
  if (cs.undirected()) return SetKind::undirected;
  if (cs.directed()) return SetKind::directed;
  return SetKind::mixed;
}

namespace {

void check_mask_range(const ExtGroup& group, Mask mask) {
  const int bits = group.order() - 1;
  if (bits < 64 && (mask >> bits) != 0) {
    throw PreconditionError("mask has bits outside G\\{1} (|G| = " + std::to_string(group.order()) + ")");
  }
}

bool has(Mask mask, int g) { return g > 0 && ((mask >> (g - 1)) & 1U) != 0; }

}  // namespace

std::vector<int> elements_of(const ExtGroup& group, Mask mask) {
  check_mask_range(group, mask);
  std::vector<int> out;
  for (int g = 1; g < group.order(); ++g) {
    if (has(mask, g)) out.push_back(g);
  }
  return out;
}

Mask mask_of(const ExtGroup& group, const std::vector<int>& elements) {
  Mask mask = 0;
  for (int g : elements) {
    if (g < 0 || g >= group.order()) throw PreconditionError("element index out of range");
    if (g == 0) throw PreconditionError("the identity cannot belong to a connection set");
    mask |= Mask{1} << (g - 1);
  }
  return mask;
}

Mask inverse_mask(const ExtGroup& group, Mask mask) {
  Mask out = 0;
  for (int g : elements_of(group, mask)) out |= Mask{1} << (group.inverse(g) - 1);
  return out;
}

ConnectionSet split_connection_set(const ExtGroup& group, Mask mask) {
  check_mask_range(group, mask);
  ConnectionSet cs;
  cs.mask = mask;
  for (int g = 1; g < group.order(); ++g) {
    if (!has(mask, g)) continue;
    const bool antisymmetric = !has(mask, group.inverse(g));
    const int a = group.a_part(g);
    if (group.flag_of(g) == 0) {
      (antisymmetric ? cs.T1 : cs.S1).push_back(a);
    } else {
      (antisymmetric ? cs.T2 : cs.S2).push_back(a);
    }
  }
  return cs;
}

Mask mask_of(const ExtGroup& group, const ConnectionSet& parts) {
  std::vector<int> elements;
  for (int a : parts.S1) elements.push_back(a);
  for (int a : parts.T1) elements.push_back(a);
  for (int a : parts.S2) elements.push_back(group.with_x(a));
  for (int a : parts.T2) elements.push_back(group.with_x(a));
  return mask_of(group, elements);
}

std::vector<int> parse_set(const ExtGroup& group, std::string_view text) {
  Cursor in(text);
  std::vector<int> out;
  if (in.at_end()) return out;
  const auto& base = group.base();
  do {
    const auto item_at = in.pos();
    int flag = 0;
    int a = 0;
    bool any = false;
    if (in.accept('x')) {
      flag = 1;
      any = true;
      if (!in.accept('*')) {
        out.push_back(group.with_x(0));
        continue;
      }
    }
    if (in.peek('(')) {
      in.expect('(');
      const auto at = in.pos();
      auto coords = parse_coords(in);
      in.expect(')');
      a = base.index(reduce_coords(base, std::move(coords), in, at));
      any = true;
    } else if (in.accept('a')) {
      if (base.rank() != 1) in.fail_at(item_at, "use coordinate tuples (c1,...) for a non-cyclic A");
      std::int64_t k = 1;
      if (in.accept('^')) k = in.integer();
      a = base.power(1, k);
      any = true;
    } else if (in.peek_integer()) {
      const auto at = in.pos();
      if (in.integer() != 1) in.fail_at(at, "only 1 may be written as a bare integer");
      a = 0;
      any = true;
    }
    if (!any) in.fail("expected an element");
    const int g = flag * base.order() + a;
    if (g == 0) in.fail_at(item_at, "the identity cannot belong to a connection set");
    out.push_back(g);
  } while (in.accept(','));
  in.expect_end();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cayint
