#include "capcone/hclass.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace capcone {

namespace {

void check_n(int n, const char* what) {
  if (n < kMinBalls || n > kMaxBalls) {
    throw math_error(std::string(what) + ": ball count " + std::to_string(n) +
                     " outside [" + std::to_string(kMinBalls) + ", " +
                     std::to_string(kMaxBalls) + "]");
  }
}

void check_same_n(int nx, int ny, const char* what) {
  if (nx != ny) {
    throw math_error(std::string(what) + ": dimension mismatch (n=" +
                     std::to_string(nx) + " vs n=" + std::to_string(ny) + ")");
  }
}

void check_index(int i, int n, const char* what) {
  if (i < 1 || i > n) {
    throw math_error(std::string(what) + ": index " + std::to_string(i) +
                     " outside 1.." + std::to_string(n));
  }
}

}  // namespace

HClass::HClass(long long a0_, std::vector<long long> coeffs)
    : n(static_cast<int>(coeffs.size())), a0(a0_), a(std::move(coeffs)) {
  check_n(n, "HClass");
}

HClass operator+(const HClass& x, const HClass& y) {
  check_same_n(x.n, y.n, "HClass+");
  HClass out = x;
  out.a0 += y.a0;
  for (int i = 0; i < x.n; ++i) out.a[i] += y.a[i];
  return out;
}

HClass operator-(const HClass& x, const HClass& y) { return x + (-y); }

HClass operator-(const HClass& x) { return -1 * x; }

HClass operator*(long long s, const HClass& x) {
  HClass out = x;
  out.a0 *= s;
  for (auto& v : out.a) v *= s;
  return out;
}

PDClass::PDClass(Rat c0_, std::vector<Rat> coeffs)
    : n(static_cast<int>(coeffs.size())), c0(std::move(c0_)), c(std::move(coeffs)) {
  check_n(n, "PDClass");
}

PDClass pd_of(const HClass& cls) {
  std::vector<Rat> c(cls.a.begin(), cls.a.end());
  return PDClass(Rat(cls.a0), std::move(c));
}

PDClass operator+(const PDClass& x, const PDClass& y) {
  check_same_n(x.n, y.n, "PDClass+");
  PDClass out = x;
  out.c0 += y.c0;
  for (int i = 0; i < x.n; ++i) out.c[i] += y.c[i];
  return out;
}

PDClass operator*(const Rat& s, const PDClass& x) {
  PDClass out = x;
  out.c0 *= s;
  for (auto& v : out.c) v *= s;
  return out;
}

CapacityVector::CapacityVector(std::vector<Rat> entries) : delta(std::move(entries)) {
  check_n(static_cast<int>(delta.size()), "CapacityVector");
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (delta[i] <= 0) {
      throw math_error("CapacityVector: entry " + std::to_string(i + 1) + " = " +
                       format_rational(delta[i]) + " is not strictly positive");
    }
  }
}

PDClass CapacityVector::pd() const { return PDClass(Rat(1), delta); }

HClass line_class(int n) {
  check_n(n, "line_class");
  HClass out;
  out.n = n;
  out.a0 = 1;
  out.a.assign(n, 0);
  return out;
}

HClass e_class(int i, int n) {
  check_n(n, "e_class");
  check_index(i, n, "e_class");
  HClass out;
  out.n = n;
  out.a0 = 0;
  out.a.assign(n, 0);
  out.a[i - 1] = -1;  // Ei = 0*L - (-1)*Ei
  return out;
}

const HClass& d9_class() {
  static const HClass d9(3, std::vector<long long>(9, 1));
  return d9;
}

HClass d9_generalized(int n, const std::vector<int>& excluded) {
  if (n < 9) throw math_error("d9_generalized: requires n >= 9");
  check_n(n, "d9_generalized");
  if (static_cast<int>(excluded.size()) != n - 9) {
    throw math_error("d9_generalized: |I| must equal n - 9");
  }
  std::vector<long long> a(n, 1);
  std::vector<int> seen;
  for (int i : excluded) {
    check_index(i, n, "d9_generalized");
    if (std::find(seen.begin(), seen.end(), i) != seen.end()) {
      throw math_error("d9_generalized: repeated index in I");
    }
    seen.push_back(i);
    a[i - 1] = 0;
  }
  return HClass(3, std::move(a));
}

HClass rijk_class(int i, int j, int k) {
  if (i == j || j == k || i == k) throw math_error("rijk_class: indices must be distinct");
  HClass out = line_class(9);
  for (int t : {i, j, k}) {
    check_index(t, 9, "rijk_class");
    out.a[t - 1] = 1;
  }
  return out;
}

HClass rij_class(int i, int j) {
  if (i == j) throw math_error("rij_class: indices must be distinct");
  check_index(i, 9, "rij_class");
  check_index(j, 9, "rij_class");
  HClass out;
  out.a[i - 1] = -1;
  out.a[j - 1] = 1;
  return out;
}

long long intersect(const HClass& x, const HClass& y) {
  check_same_n(x.n, y.n, "intersect");
  long long s = x.a0 * y.a0;
  for (int i = 0; i < x.n; ++i) s -= x.a[i] * y.a[i];
  return s;
}

Rat pairing(const PDClass& form, const HClass& cls) {
  check_same_n(form.n, cls.n, "pairing");
  Rat s = form.c0 * cls.a0;
  for (int i = 0; i < form.n; ++i) s -= form.c[i] * cls.a[i];
  return s;
}

Rat area(const CapacityVector& delta, const HClass& cls) {
  check_same_n(delta.n(), cls.n, "area");
  Rat s(cls.a0);
  for (int i = 0; i < cls.n; ++i) s -= delta.delta[i] * cls.a[i];
  return s;
}

Rat area(const PDClass& form, const HClass& cls) { return pairing(form, cls); }

ClassInvariants class_invariants(const HClass& cls) {
  ClassInvariants out;
  out.self_int = intersect(cls, cls);
  if (cls.n != 9) return out;

  const long long c1 = 3 * cls.a0 - std::accumulate(cls.a.begin(), cls.a.end(), 0LL);
  out.c1 = c1;
  out.k = Rat(out.self_int + c1, 2);
  out.k_integral = (denominator(*out.k) == 1);
  // 1 + (A.A - c1)/2; the difference is even for every integer class, since
  // a0(a0-3) and ai(ai-1) are even.
  out.genus_defect = 1 + (out.self_int - c1) / 2;
  out.codim = 2 - 2 * c1;
  return out;
}

HClass reflect(const HClass& root, const HClass& cls) {
  if (intersect(root, root) != -2) {
    throw math_error("reflect: class " + format_class(root) +
                     " has self-intersection != -2");
  }
  return cls + intersect(root, cls) * root;
}

const SimpleRoots& simple_roots() {
  static const SimpleRoots data = [] {
    SimpleRoots s;
    s.r[0] = rijk_class(1, 2, 3);
    for (int i = 1; i <= 8; ++i) s.r[i] = rij_class(i, i + 1);
    s.d9 = d9_class();
    return s;
  }();
  return data;
}

namespace {

template <typename C, typename V>
bool reduced_impl(const V& a0, const C& a) {
  if (a.size() != 9) throw math_error("is_reduced: requires n == 9");
  for (int i = 0; i + 1 < 9; ++i) {
    if (a[i] < a[i + 1]) return false;
  }
  if (a[8] <= 0) return false;
  return a0 >= a[0] + a[1] + a[2];
}

}  // namespace

bool is_reduced(const HClass& cls) { return reduced_impl(cls.a0, cls.a); }
bool is_reduced(const PDClass& cls) { return reduced_impl(cls.c0, cls.c); }

std::string format_class(const HClass& cls) {
  std::ostringstream os;
  os << '(' << cls.a0 << ';';
  for (int i = 0; i < cls.n; ++i) os << (i ? "," : "") << cls.a[i];
  os << ')';
  return os.str();
}

std::string format_class(const PDClass& cls) {
  std::ostringstream os;
  os << '(' << format_rational(cls.c0) << ';';
  for (int i = 0; i < cls.n; ++i) os << (i ? "," : "") << format_rational(cls.c[i]);
  os << ')';
  return os.str();
}

std::string format_capacities(const CapacityVector& delta) {
  std::ostringstream os;
  for (int i = 0; i < delta.n(); ++i) os << (i ? "," : "") << format_rational(delta.delta[i]);
  return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

PDClass parse_pd_class(const std::string& text) {
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw std::invalid_argument("class literal must look like (a0;a1,...,an): '" + text + "'");
  }
  const std::string inner = text.substr(open + 1, close - open - 1);
  const auto semi = inner.find(';');
  if (semi == std::string::npos) {
    throw std::invalid_argument("class literal is missing ';': '" + text + "'");
  }
  const Rat c0 = parse_rational(inner.substr(0, semi));
  std::vector<Rat> c;
  for (const auto& part : split(inner.substr(semi + 1), ',')) {
    c.push_back(parse_rational(part));
  }
  if (static_cast<int>(c.size()) < kMinBalls || static_cast<int>(c.size()) > kMaxBalls) {
    throw std::invalid_argument("class literal has unsupported rank: '" + text + "'");
  }
  return PDClass(c0, std::move(c));
}

HClass parse_h_class(const std::string& text) {
  const PDClass p = parse_pd_class(text);
  if (denominator(p.c0) != 1) {
    throw std::invalid_argument("integer class expected, got '" + text + "'");
  }
  std::vector<long long> a;
  for (const auto& v : p.c) {
    if (denominator(v) != 1) {
      throw std::invalid_argument("integer class expected, got '" + text + "'");
    }
    a.push_back(static_cast<long long>(numerator(v)));
  }
  return HClass(static_cast<long long>(numerator(p.c0)), std::move(a));
}

CapacityVector parse_capacities(const std::string& text) {
  std::vector<Rat> d;
  for (const auto& part : split(text, ',')) d.push_back(parse_rational(part));
  return CapacityVector(std::move(d));
}

}  // namespace capcone
