#include "nimgroup/group_spec.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "nimgroup/error.hpp"

namespace nimgroup {

GroupSpec cyclic(std::size_t n) { return {spec::Cyclic{n}}; }
GroupSpec dihedral(std::size_t n) { return {spec::Dihedral{n}}; }
GroupSpec quaternion8() { return {spec::Quaternion8{}}; }
GroupSpec heisenberg(std::size_t p) { return {spec::Heisenberg{p}}; }
GroupSpec product(GroupSpec left, GroupSpec right) {
  return {spec::Product{std::make_shared<const GroupSpec>(std::move(left)),
                        std::make_shared<const GroupSpec>(std::move(right))}};
}
GroupSpec semidirect(std::size_t m, std::size_t k, std::size_t alpha) {
  return {spec::Semidirect{m, k, alpha}};
}
GroupSpec frobenius(std::size_t p, std::optional<std::size_t> r) { return {spec::Frobenius{p, r}}; }
GroupSpec table_spec(std::string text, std::string source) {
  return {spec::Table{std::move(text), std::move(source)}};
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::size_t mod_pow(std::size_t base, std::size_t exp, std::size_t mod) {
  if (mod == 1) return 0;
  std::uint64_t result = 1;
  std::uint64_t b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::size_t>(result);
}

std::size_t multiplicative_order(std::size_t a, std::size_t m) {
  if (m == 1) return 1;
  if (std::gcd(a % m, m) != 1) return 0;
  std::size_t k = 1;
  std::uint64_t x = a % m;
  while (x != 1) {
    x = x * (a % m) % m;
    ++k;
  }
  return k;
}

std::size_t smallest_primitive_root(std::size_t p) {
  for (std::size_t r = 1; r < p; ++r) {
    if (multiplicative_order(r, p) == p - 1) return r;
  }
  throw Error(ErrorCode::NotPrime, std::to_string(p) + " has no primitive root");
}

std::vector<std::size_t> distinct_prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::size_t table_order(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  while (is >> tok && tok.front() == '#') std::getline(is, tok);
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw Error(ErrorCode::BadTableFormat, "missing order token");
  }
  return n;
}

// Order implied by the spec, computed without building anything.
std::size_t spec_order(const GroupSpec& s) {
  struct V {
    std::size_t operator()(const spec::Cyclic& c) const { return c.n; }
    std::size_t operator()(const spec::Dihedral& d) const { return sat_mul(2, d.n); }
    std::size_t operator()(const spec::Quaternion8&) const { return 8; }
    std::size_t operator()(const spec::Heisenberg& h) const { return sat_mul(h.p, sat_mul(h.p, h.p)); }
    std::size_t operator()(const spec::Product& p) const {
      return sat_mul(spec_order(*p.left), spec_order(*p.right));
    }
    std::size_t operator()(const spec::Semidirect& s) const { return sat_mul(s.m, s.k); }
    std::size_t operator()(const spec::Frobenius& f) const {
      return f.p == 0 ? 0 : sat_mul(f.p, f.p - 1);
    }
    std::size_t operator()(const spec::Table& t) const { return table_order(t.text); }
  };
  return std::visit(V{}, s.value);
}

void require_positive(std::size_t v, const char* what) {
  if (v == 0) throw Error(ErrorCode::BadParameter, std::string(what) + " must be positive");
}

FiniteGroup make_cyclic(std::size_t n) {
  require_positive(n, "cyclic order");
  std::vector<Element> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Element>((i + j) % n);
  }
  return validate_group(n, std::move(t), Element{0}, {}, "Z" + std::to_string(n));
}

FiniteGroup make_dihedral(std::size_t n) {
  require_positive(n, "dihedral n");
  // element r^i s^f has index f*n + i; r^i s^f * r^j s^g = r^(i + (-1)^f j) s^(f+g)
  const std::size_t order = 2 * n;
  std::vector<Element> t(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t f = x / n, i = x % n;
    labels[x] = (f == 0 ? "r" : "s") + std::to_string(i);
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t g = y / n, j = y % n;
      const std::size_t rot = f == 0 ? (i + j) % n : (i + n - j) % n;
      t[x * order + y] = static_cast<Element>(((f + g) % 2) * n + rot);
    }
  }
  return validate_group(order, std::move(t), Element{0}, std::move(labels), "D" + std::to_string(n));
}

FiniteGroup make_quaternion8() {
  // unit u in {1,i,j,k}, sign s; index 2u + s
  struct Signed {
    int sign;
    int unit;
  };
  static constexpr std::array<std::array<Signed, 4>, 4> mul{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  std::vector<Element> t(64);
  for (std::size_t x = 0; x < 8; ++x) {
    for (std::size_t y = 0; y < 8; ++y) {
      const Signed p = mul[x / 2][y / 2];
      const std::size_t sign = (x % 2 + y % 2 + static_cast<std::size_t>(p.sign)) % 2;
      t[x * 8 + y] = static_cast<Element>(2 * static_cast<std::size_t>(p.unit) + sign);
    }
  }
  return validate_group(8, std::move(t), Element{0}, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "Q8");
}

FiniteGroup make_heisenberg(std::size_t p) {
  if (p < 2) throw Error(ErrorCode::BadParameter, "heisenberg modulus must be at least 2");
  const std::size_t n = p * p * p;
  std::vector<Element> t(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t a = x / (p * p), b = (x / p) % p, c = x % p;
    labels[x] = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      const std::size_t ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
      t[x * n + y] = static_cast<Element>(ra * p * p + rb * p + rc);
    }
  }
  return validate_group(n, std::move(t), Element{0}, std::move(labels), "Heis(" + std::to_string(p) + ")");
}

FiniteGroup make_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Element> t(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xi = static_cast<Element>(x / nb), xj = static_cast<Element>(x % nb);
    labels[x] = "(" + a.label(xi) + "," + b.label(xj) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const auto yi = static_cast<Element>(y / nb), yj = static_cast<Element>(y % nb);
      t[x * n + y] = static_cast<Element>(a.op(xi, yi) * nb + b.op(xj, yj));
    }
  }
  return validate_group(n, std::move(t), Element{0}, std::move(labels), a.name() + "x" + b.name());
}

FiniteGroup make_semidirect(std::size_t m, std::size_t k, std::size_t alpha, std::string name) {
  require_positive(m, "semidirect m");
  require_positive(k, "semidirect k");
  if (std::gcd(alpha % m, m) != 1 && m != 1) {
    throw Error(ErrorCode::BadAction, "gcd(" + std::to_string(alpha) + ", " + std::to_string(m) + ") != 1");
  }
  if (mod_pow(alpha, k, m) != 1 % m) {
    throw Error(ErrorCode::BadAction, std::to_string(alpha) + "^" + std::to_string(k) +
                                          " is not 1 mod " + std::to_string(m));
  }
  std::vector<std::size_t> power(k);
  for (std::size_t j = 0; j < k; ++j) power[j] = mod_pow(alpha, j, m);
  const std::size_t n = m * k;
  std::vector<Element> t(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t i = x / k, j = x % k;
    labels[x] = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t i2 = y / k, j2 = y % k;
      const std::size_t ri = (i + i2 * power[j]) % m, rj = (j + j2) % k;
      t[x * n + y] = static_cast<Element>(ri * k + rj);
    }
  }
  return validate_group(n, std::move(t), Element{0}, std::move(labels), std::move(name));
}

FiniteGroup make_frobenius(std::size_t p, std::optional<std::size_t> r) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p < 3) throw Error(ErrorCode::BadParameter, "Frobenius family needs p >= 3");
  std::size_t root = 0;
  if (r) {
    if (multiplicative_order(*r, p) != p - 1) {
      throw Error(ErrorCode::NotPrimitiveRoot, std::to_string(*r) + " has multiplicative order " +
                                                   std::to_string(multiplicative_order(*r, p)) +
                                                   " mod " + std::to_string(p) + ", need " +
                                                   std::to_string(p - 1));
    }
    root = *r;
  } else {
    root = smallest_primitive_root(p);
  }
  return make_semidirect(p, p - 1, root, "F" + std::to_string(p));
}

FiniteGroup build_unchecked(const GroupSpec& s) {
  struct V {
    FiniteGroup operator()(const spec::Cyclic& c) const { return make_cyclic(c.n); }
    FiniteGroup operator()(const spec::Dihedral& d) const { return make_dihedral(d.n); }
    FiniteGroup operator()(const spec::Quaternion8&) const { return make_quaternion8(); }
    FiniteGroup operator()(const spec::Heisenberg& h) const { return make_heisenberg(h.p); }
    FiniteGroup operator()(const spec::Product& p) const {
      return make_product(build_unchecked(*p.left), build_unchecked(*p.right));
    }
    FiniteGroup operator()(const spec::Semidirect& s) const {
      return make_semidirect(s.m, s.k, s.alpha,
                             "Z" + std::to_string(s.m) + ":Z" + std::to_string(s.k) + "(" +
                                 std::to_string(s.alpha) + ")");
    }
    FiniteGroup operator()(const spec::Frobenius& f) const { return make_frobenius(f.p, f.r); }
    FiniteGroup operator()(const spec::Table& t) const { return parse_cayley_table(t.text, t.source); }
  };
  return std::visit(V{}, s.value);
}

}  // namespace

FiniteGroup build_group(const GroupSpec& spec) {
  const std::size_t n = spec_order(spec);
  if (n > kMaxOrder) {
    throw Error(ErrorCode::OrderCapExceeded,
                "order " + (n == kSaturated ? std::string("(overflow)") : std::to_string(n)) +
                    " exceeds cap " + std::to_string(kMaxOrder));
  }
  return build_unchecked(spec);
}

std::vector<std::string> group_warnings(const GroupSpec& s) {
  std::vector<std::string> out;
  if (const auto* f = std::get_if<spec::Frobenius>(&s.value)) {
    if (f->p >= 3 && f->p < 5 && is_prime(f->p)) {
      out.push_back("frobenius:" + std::to_string(f->p) +
                    " is below the p >= 5 range of the Frobenius family results");
    }
  } else if (const auto* p = std::get_if<spec::Product>(&s.value)) {
    for (const auto& side : {p->left, p->right}) {
      auto inner = group_warnings(*side);
      out.insert(out.end(), inner.begin(), inner.end());
    }
  }
  return out;
}

std::string to_text(const GroupSpec& s) {
  struct V {
    std::string operator()(const spec::Cyclic& c) const { return "cyclic:" + std::to_string(c.n); }
    std::string operator()(const spec::Dihedral& d) const { return "dihedral:" + std::to_string(d.n); }
    std::string operator()(const spec::Quaternion8&) const { return "q8"; }
    std::string operator()(const spec::Heisenberg& h) const { return "heisenberg:" + std::to_string(h.p); }
    std::string operator()(const spec::Product& p) const {
      return "product:" + to_text(*p.left) + "," + to_text(*p.right);
    }
    std::string operator()(const spec::Semidirect& s) const {
      return "semidirect:" + std::to_string(s.m) + ":" + std::to_string(s.k) + ":" + std::to_string(s.alpha);
    }
    std::string operator()(const spec::Frobenius& f) const {
      return "frobenius:" + std::to_string(f.p) + (f.r ? ":" + std::to_string(*f.r) : "");
    }
    std::string operator()(const spec::Table& t) const { return "file:" + t.source; }
  };
  return std::visit(V{}, s.value);
}

bool operator==(const GroupSpec& a, const GroupSpec& b) {
  if (a.value.index() != b.value.index()) return false;
  struct V {
    const GroupSpec& other;
    bool operator()(const spec::Cyclic& c) const { return c.n == std::get<spec::Cyclic>(other.value).n; }
    bool operator()(const spec::Dihedral& d) const { return d.n == std::get<spec::Dihedral>(other.value).n; }
    bool operator()(const spec::Quaternion8&) const { return true; }
    bool operator()(const spec::Heisenberg& h) const {
      return h.p == std::get<spec::Heisenberg>(other.value).p;
    }
    bool operator()(const spec::Product& p) const {
      const auto& o = std::get<spec::Product>(other.value);
      return *p.left == *o.left && *p.right == *o.right;
    }
    bool operator()(const spec::Semidirect& s) const {
      const auto& o = std::get<spec::Semidirect>(other.value);
      return s.m == o.m && s.k == o.k && s.alpha == o.alpha;
    }
    bool operator()(const spec::Frobenius& f) const {
      const auto& o = std::get<spec::Frobenius>(other.value);
      return f.p == o.p && f.r == o.r;
    }
    bool operator()(const spec::Table& t) const { return t.text == std::get<spec::Table>(other.value).text; }
  };
  return std::visit(V{b}, a.value);
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse_all() {
    GroupSpec s = parse_spec();
    if (pos_ != text_.size()) fail("unexpected trailing text '" + std::string(text_.substr(pos_)) + "'");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, "at position " + std::to_string(pos_) + ": " + msg);
  }

  bool accept(std::string_view lit) {
    if (text_.substr(pos_, lit.size()) == lit) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t number() {
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      const std::size_t digit = static_cast<std::size_t>(text_[pos_] - '0');
      if (value > (kSaturated - digit) / 10) fail("number too large");
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) {
      pos_ = start;
      fail("expected a number");
    }
    return value;
  }

  GroupSpec parse_spec() {
    const std::size_t start = pos_;
    std::size_t colon = text_.find(':', pos_);
    std::size_t comma = text_.find(',', pos_);
    std::size_t end = std::min({colon, comma, text_.size()});
    const std::string tag(text_.substr(pos_, end - pos_));
    if (tag == "q8") {
      pos_ = end;
      return quaternion8();
    }
    if (end == text_.size() || text_[end] != ':') {
      fail(tag.empty() ? "expected a group tag" : "unknown or incomplete group tag '" + tag + "'");
    }
    pos_ = end + 1;
    if (tag == "cyclic") return cyclic(number());
    if (tag == "dihedral") return dihedral(number());
    if (tag == "heisenberg") return heisenberg(number());
    if (tag == "frobenius") {
      const std::size_t p = number();
      std::optional<std::size_t> r;
      if (accept(":")) r = number();
      return frobenius(p, r);
    }
    if (tag == "semidirect") {
      const std::size_t m = number();
      expect(':');
      const std::size_t k = number();
      expect(':');
      const std::size_t a = number();
      return semidirect(m, k, a);
    }
    if (tag == "product") {
      GroupSpec left = parse_spec();
      expect(',');
      GroupSpec right = parse_spec();
      return product(std::move(left), std::move(right));
    }
    if (tag == "file") {
      const std::size_t path_end = std::min(text_.find(',', pos_), text_.size());
      const std::string path(text_.substr(pos_, path_end - pos_));
      if (path.empty()) fail("expected a file path");
      std::ifstream in(path);
      if (!in) fail("cannot open '" + path + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      pos_ = path_end;
      return table_spec(buf.str(), path);
    }
    pos_ = start;
    fail("unknown group tag '" + tag + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse_all(); }

}  // namespace nimgroup
