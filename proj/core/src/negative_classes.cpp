#include "capcone/negative_classes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace capcone {

namespace {

// Lexicographic k-subsets of {1..9}.
std::vector<std::vector<int>> subsets_of_size(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    out.push_back(idx);
    int p = k - 1;
    while (p >= 0 && idx[p] == 9 - (k - 1 - p)) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

HClass sum_over(long long a0, const std::vector<int>& I, long long extra_at = 0, int where = 0) {
  std::vector<long long> a(9, 0);
  for (int i : I) a[i - 1] = 1;
  if (where) a[where - 1] = extra_at;
  return HClass(a0, std::move(a));
}

}  // namespace

RootClass RootClass::make(RootKind kind, int i, int j, int k, long long m) {
  RootClass out;
  out.kind = kind;
  out.i = i;
  out.j = j;
  out.k = k;
  out.m = m;
  auto in_range = [](int t) { return t >= 1 && t <= 9; };
  switch (kind) {
    case RootKind::PlusRijk:
    case RootKind::MinusRijk: {
      if (!(in_range(i) && in_range(j) && in_range(k) && i < j && j < k)) {
        throw math_error("RootClass: r_ijk indices must satisfy 1 <= i < j < k <= 9");
      }
      const long long min_m = (kind == RootKind::PlusRijk) ? 0 : 1;
      if (m < min_m) {
        throw math_error("RootClass: level m = " + std::to_string(m) + " below " +
                         std::to_string(min_m) + " for " + root_kind_name(kind));
      }
      const HClass r = rijk_class(i, j, k);
      out.cls = (kind == RootKind::PlusRijk ? r : -r) + m * d9_class();
      break;
    }
    case RootKind::Rij: {
      if (!(in_range(i) && in_range(j) && i != j)) {
        throw math_error("RootClass: r_ij indices must be distinct and in 1..9");
      }
      if (m < 1) {
        throw math_error("RootClass: level m = " + std::to_string(m) +
                         " below 1 for r_ij");
      }
      out.k = 0;
      out.cls = rij_class(i, j) + m * d9_class();
      break;
    }
  }
  return out;
}

std::string root_kind_name(RootKind kind) {
  switch (kind) {
    case RootKind::PlusRijk: return "+r_ijk";
    case RootKind::MinusRijk: return "-r_ijk";
    case RootKind::Rij: return "r_ij";
  }
  return "?";
}

std::string format_root(const RootClass& root) {
  std::ostringstream os;
  switch (root.kind) {
    case RootKind::PlusRijk:
      os << "+r(" << root.i << root.j << root.k << ")";
      break;
    case RootKind::MinusRijk:
      os << "-r(" << root.i << root.j << root.k << ")";
      break;
    case RootKind::Rij:
      os << "r(" << root.i << "," << root.j << ")";
      break;
  }
  os << "+" << root.m << "D9";
  return os.str();
}

std::string family_name(Family family) {
  switch (family) {
    case Family::F1a: return "F1a";
    case Family::F1b: return "F1b";
    case Family::F1c: return "F1c";
    case Family::F2a: return "F2a";
    case Family::F2b: return "F2b";
    case Family::F2c: return "F2c";
    case Family::Exceptional: return "Exceptional";
    case Family::NotNegativeWall: return "NotNegativeWall";
  }
  return "?";
}

const std::vector<HClass>& enumerate_le_minus3() {
  static const std::vector<HClass> all = [] {
    std::vector<HClass> out;
    for (int k = 4; k <= 9; ++k) {
      for (const auto& I : subsets_of_size(k)) out.push_back(sum_over(1, I));
    }
    for (int k = 7; k <= 9; ++k) {
      for (const auto& I : subsets_of_size(k)) out.push_back(sum_over(2, I));
    }
    std::vector<int> all9(9);
    std::iota(all9.begin(), all9.end(), 1);
    for (int i = 1; i <= 9; ++i) out.push_back(sum_over(3, all9, 2, i));
    return out;
  }();
  return all;
}

std::shared_ptr<const std::vector<RootClass>> enumerate_neg2_roots(long long max_m) {
  if (max_m < 0) throw math_error("enumerate_neg2_roots: negative level bound");

  static std::mutex mu;
  static std::map<long long, std::shared_ptr<const std::vector<RootClass>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(max_m); it != cache.end()) return it->second;
  }

  auto out = std::make_shared<std::vector<RootClass>>();
  const auto triples = subsets_of_size(3);
  for (long long m = 0; m <= max_m; ++m) {
    for (const auto& t : triples) {
      out->push_back(RootClass::make(RootKind::PlusRijk, t[0], t[1], t[2], m));
    }
    if (m >= 1) {
      for (const auto& t : triples) {
        out->push_back(RootClass::make(RootKind::MinusRijk, t[0], t[1], t[2], m));
      }
      for (int i = 1; i <= 9; ++i) {
        for (int j = 1; j <= 9; ++j) {
          if (i != j) out->push_back(RootClass::make(RootKind::Rij, i, j, 0, m));
        }
      }
    }
  }

  std::shared_ptr<const std::vector<RootClass>> shared = std::move(out);
  std::lock_guard<std::mutex> lock(mu);
  cache[max_m] = shared;
  return shared;
}

const std::vector<HClass>& elementary_root_classes() {
  static const std::vector<HClass> all = [] {
    std::vector<HClass> out;
    for (const auto& t : subsets_of_size(3)) out.push_back(rijk_class(t[0], t[1], t[2]));
    for (int i = 1; i <= 9; ++i) {
      for (int j = 1; j <= 9; ++j) {
        if (i != j) out.push_back(rij_class(i, j));
      }
    }
    return out;
  }();
  return all;
}

namespace {

// Non-increasing integer solutions of sum = target_sum, sum of squares =
// target_sq, entries in [0, max_entry], expanded to all distinct
// permutations.
void exceptional_solutions(long long a0, std::vector<HClass>& out) {
  const long long target_sum = 3 * a0 - 1;
  const long long target_sq = a0 * a0 + 1;
  if (target_sum < 0) return;

  std::vector<long long> cur(9, 0);
  std::vector<std::vector<long long>> multisets;

  auto rec = [&](auto&& self, int pos, long long prev, long long sum, long long sq) -> void {
    if (pos == 9) {
      if (sum == target_sum && sq == target_sq) multisets.push_back(cur);
      return;
    }
    const int slots = 9 - pos;
    for (long long v = std::min(prev, target_sum - sum); v >= 0; --v) {
      const long long s2 = sum + v, q2 = sq + v * v;
      if (q2 > target_sq) continue;
      // remaining entries are <= v each
      if (s2 + (slots - 1) * v < target_sum) break;
      if (q2 + (slots - 1) * v * v < target_sq) continue;
      cur[pos] = v;
      self(self, pos + 1, v, s2, q2);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, a0 == 0 ? 0 : a0, 0, 0);

  for (auto ms : multisets) {
    std::sort(ms.begin(), ms.end());
    do {
      out.push_back(HClass(a0, ms));
    } while (std::next_permutation(ms.begin(), ms.end()));
  }
}

}  // namespace

std::shared_ptr<const std::vector<HClass>> enumerate_exceptional(long long max_a0) {
  if (max_a0 < 0) throw math_error("enumerate_exceptional: negative bound");

  static std::mutex mu;
  static std::map<long long, std::shared_ptr<const std::vector<HClass>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(max_a0); it != cache.end()) return it->second;
  }

  auto out = std::make_shared<std::vector<HClass>>();
  for (int i = 1; i <= 9; ++i) out->push_back(e_class(i));  // the only a0 = 0 cases
  for (long long a0 = 1; a0 <= max_a0; ++a0) {
    std::vector<HClass> level;
    exceptional_solutions(a0, level);
    std::sort(level.begin(), level.end());
    out->insert(out->end(), level.begin(), level.end());
  }

  std::shared_ptr<const std::vector<HClass>> shared = std::move(out);
  std::lock_guard<std::mutex> lock(mu);
  cache[max_a0] = shared;
  return shared;
}

namespace {

FamilyTag classify_root(const HClass& cls) {
  FamilyTag tag;
  const long long a0 = cls.a0;
  const long long res = ((a0 % 3) + 3) % 3;

  if (res == 1) {  // r_ijk + m D9 has a0 = 3m + 1
    const long long m = (a0 - 1) / 3;
    if (m < 0) return tag;
    std::vector<int> I;
    for (int i = 0; i < 9; ++i) {
      if (cls.a[i] == m + 1) I.push_back(i + 1);
      else if (cls.a[i] != m) return tag;
    }
    if (I.size() != 3) return tag;
    tag.family = Family::F2a;
    tag.indices = I;
    tag.m = m;
    tag.root = RootClass::make(RootKind::PlusRijk, I[0], I[1], I[2], m);
    return tag;
  }
  if (res == 2) {  // -r_ijk + m D9 has a0 = 3m - 1
    const long long m = (a0 + 1) / 3;
    if (m < 1) return tag;
    std::vector<int> I;
    for (int i = 0; i < 9; ++i) {
      if (cls.a[i] == m - 1) I.push_back(i + 1);
      else if (cls.a[i] != m) return tag;
    }
    if (I.size() != 3) return tag;
    tag.family = Family::F2b;
    tag.indices = I;
    tag.m = m;
    tag.root = RootClass::make(RootKind::MinusRijk, I[0], I[1], I[2], m);
    return tag;
  }
  // Ei - Ej + m D9 has a0 = 3m, stored m-1 at i and m+1 at j
  const long long m = a0 / 3;
  if (m < 1) return tag;
  int i = 0, j = 0;
  for (int t = 0; t < 9; ++t) {
    if (cls.a[t] == m - 1 && !i) i = t + 1;
    else if (cls.a[t] == m + 1 && !j) j = t + 1;
    else if (cls.a[t] != m) return tag;
  }
  if (!i || !j) return tag;
  tag.family = Family::F2c;
  tag.indices = {i, j};
  tag.m = m;
  tag.root = RootClass::make(RootKind::Rij, i, j, 0, m);
  return tag;
}

}  // namespace

FamilyTag classify_negative(const HClass& cls) {
  if (cls.n != 9) throw math_error("classify_negative: requires n == 9");
  FamilyTag tag;  // NotNegativeWall by default

  const long long sq = intersect(cls, cls);
  if (sq >= 0) return tag;
  const long long c1 = *class_invariants(cls).c1;

  if (sq == -1) {
    if (c1 == 1) tag.family = Family::Exceptional;
    return tag;
  }
  if (sq == -2) {
    if (c1 != 0) return tag;
    return classify_root(cls);
  }

  // square <= -3: match the three finite families exactly
  if (cls.a0 == 1 || cls.a0 == 2) {
    std::vector<int> I;
    for (int i = 0; i < 9; ++i) {
      if (cls.a[i] == 1) I.push_back(i + 1);
      else if (cls.a[i] != 0) return tag;
    }
    const std::size_t min_size = (cls.a0 == 1) ? 4 : 7;
    if (I.size() < min_size) return tag;
    tag.family = (cls.a0 == 1) ? Family::F1a : Family::F1b;
    tag.indices = I;
    return tag;
  }
  if (cls.a0 == 3) {
    int two_at = 0;
    for (int i = 0; i < 9; ++i) {
      if (cls.a[i] == 2 && !two_at) two_at = i + 1;
      else if (cls.a[i] != 1) return tag;
    }
    if (!two_at) return tag;
    tag.family = Family::F1c;
    tag.indices = {two_at};
    return tag;
  }
  return tag;
}

bool is_positive_root(const HClass& cls) {
  if (cls.n != 9) return false;
  const Family f = classify_negative(cls).family;
  return f == Family::F2a || f == Family::F2b || f == Family::F2c;
}

}  // namespace capcone
