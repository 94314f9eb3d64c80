#include "frobmark/kchar.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "frobmark/error.hpp"

namespace frobmark {
namespace {

constexpr int kMaxMemoK = 9;  // 6 bits per element (|G| <= 64) plus a 4-bit length

std::uint64_t pack(std::span<const int> tuple) {
  std::uint64_t key = tuple.size();
  for (int h : tuple) key = (key << 6U) | static_cast<std::uint64_t>(h);
  return key;
}

constexpr std::size_t kMaxTuple = 16;

}  // namespace

std::string tuple_string(std::span<const int> tuple) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < tuple.size(); ++i) os << (i ? "," : "") << tuple[i];
  os << ')';
  return os.str();
}

KCharacter::KCharacter(ClassFunction chi, Memo memo) : chi_(std::move(chi)), memo_(memo) {
  if (memo_ == Memo::Auto) memo_ = is_trace_like(chi_) ? Memo::Sorted : Memo::Exact;
}

Cyclo KCharacter::operator()(std::span<const int> tuple) {
  if (tuple.empty()) return Cyclo(1);
  if (tuple.size() > kMaxTuple) throw Error(ErrorKind::SizeLimit, "k-character arity above 16");
  for (int h : tuple) {
    if (h < 0 || h >= chi_.order()) throw Error(ErrorKind::InvalidParameter, "element index out of range");
  }
  if (tuple.size() == 1) return chi_(tuple[0]);
  if (memo_ == Memo::None || tuple.size() > static_cast<std::size_t>(kMaxMemoK)) return compute(tuple);

  std::array<int, kMaxTuple> buf{};
  std::copy(tuple.begin(), tuple.end(), buf.begin());
  std::span<int> key_tuple(buf.data(), tuple.size());
  if (memo_ == Memo::Sorted) std::sort(key_tuple.begin(), key_tuple.end());
  const std::uint64_t key = pack(key_tuple);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  Cyclo value = compute(key_tuple);
  cache_.emplace(key, value);
  return value;
}

Cyclo KCharacter::compute(std::span<const int> tuple) {
  const auto& g = *chi_.group;
  const int h0 = tuple[0];
  const auto rest = tuple.subspan(1);
  Cyclo value = chi_(h0);
  if (!value.is_zero()) value *= (*this)(rest);

  std::array<int, kMaxTuple> buf{};
  std::copy(rest.begin(), rest.end(), buf.begin());
  std::span<const int> shifted(buf.data(), rest.size());
  for (std::size_t j = 0; j < rest.size(); ++j) {
    buf[j] = g.mul(h0, rest[j]);
    value -= (*this)(shifted);
    buf[j] = rest[j];
  }
  return value;
}

Cyclo kchar_recursive(const ClassFunction& chi, std::span<const int> tuple) {
  if (tuple.empty()) throw Error(ErrorKind::InvalidParameter, "k-character of an empty tuple");
  KCharacter k(chi);
  return k(tuple);
}

Cyclo kchar_cyclic(const ClassFunction& chi, std::span<const int> tuple) {
  const int k = static_cast<int>(tuple.size());
  if (k == 0) throw Error(ErrorKind::InvalidParameter, "k-character of an empty tuple");
  if (k > kMaxCyclicK) {
    throw Error(ErrorKind::SizeLimit, "cyclic-sum k-character limited to k <= " + std::to_string(kMaxCyclicK));
  }
  const auto& g = *chi.group;
  std::array<int, kMaxCyclicK> perm{};
  std::iota(perm.begin(), perm.begin() + k, 0);
  Cyclo total;
  do {
    std::array<bool, kMaxCyclicK> seen{};
    Cyclo term(1);
    int cycles = 0;
    for (int start = 0; start < k && !term.is_zero(); ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      ++cycles;
      // cycle (i1 i2 .. im) with sigma(i1) = i2: chi(h_i1 h_i2 .. h_im)
      int product = 0;
      for (int i = start; !seen[static_cast<std::size_t>(i)]; i = perm[static_cast<std::size_t>(i)]) {
        seen[static_cast<std::size_t>(i)] = true;
        product = g.mul(product, tuple[static_cast<std::size_t>(i)]);
      }
      term *= chi(product);
    }
    if (term.is_zero()) continue;
    if ((k - cycles) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + k));
  return total;
}

Verdict kchar_symmetry_check(const ClassFunction& chi, int k, const CoverageOptions& opts) {
  Verdict v{"kchar-symmetry"};
  v.details["k"] = k;
  if (k < 1) throw Error(ErrorKind::InvalidParameter, "symmetry check needs k >= 1");
  KCharacter chik(chi, KCharacter::Memo::Exact);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::vector<int> permuted(static_cast<std::size_t>(k));
  v.mode = for_each_tuple(chi.order(), k, opts, [&](std::span<const int> t) {
    const Cyclo base = chik(t);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      for (std::size_t i = 0; i < perm.size(); ++i) permuted[i] = t[static_cast<std::size_t>(perm[i])];
      if (!(chik(permuted) == base)) {
        v.fail(tuple_string(t) + " vs " + tuple_string(permuted));
        return false;
      }
    }
    ++v.checked;
    return true;
  });
  return v;
}

Verdict vanishing_check(const ClassFunction& chi, int j, const CoverageOptions& opts) {
  const int n = chi.degree();
  if (j <= n) {
    throw Error(ErrorKind::InvalidParameter, "vanishing applies to j > dim = " + std::to_string(n));
  }
  if (j > kMaxMemoK) throw Error(ErrorKind::SizeLimit, "vanishing check limited to j <= 9");
  Verdict v{"vanishing"};
  v.details["dim"] = n;
  v.details["j"] = j;
  KCharacter chij(chi);
  v.mode = for_each_tuple(chi.order(), j, opts, [&](std::span<const int> t) {
    const Cyclo value = chij(t);
    if (!value.is_zero()) {
      v.fail(tuple_string(t) + " -> " + value.str());
      return false;
    }
    ++v.checked;
    return true;
  });
  return v;
}

Verdict kchar_equivalence_check(const ClassFunction& chi, int k, const CoverageOptions& opts) {
  if (k < 1) throw Error(ErrorKind::InvalidParameter, "equivalence check needs k >= 1");
  Verdict v{"kchar-equivalence"};
  v.details["k"] = k;
  KCharacter rec(chi, KCharacter::Memo::Exact);
  v.mode = for_each_tuple(chi.order(), k, opts, [&](std::span<const int> t) {
    const Cyclo a = rec(t);
    const Cyclo b = kchar_cyclic(chi, t);
    if (!(a == b)) {
      v.fail(tuple_string(t) + ": recursion " + a.str() + " vs cyclic " + b.str());
      return false;
    }
    ++v.checked;
    return true;
  });
  return v;
}

Verdict explicit_formula_check(const ClassFunction& chi, const CoverageOptions& opts) {
  Verdict v{"explicit-chi2-chi3"};
  const auto& g = *chi.group;
  KCharacter rec(chi, KCharacter::Memo::Exact);
  const std::string mode2 = for_each_tuple(g.order(), 2, opts, [&](std::span<const int> t) {
    const int a = t[0], b = t[1];
    const Cyclo closed = chi(a) * chi(b) - chi(g.mul(a, b));
    if (!(rec(t) == closed)) {
      v.fail("chi2" + tuple_string(t));
      return false;
    }
    ++v.checked;
    return true;
  });
  const std::string mode3 = for_each_tuple(g.order(), 3, opts, [&](std::span<const int> t) {
    const int a = t[0], b = t[1], c = t[2];
    const Cyclo closed = chi(a) * chi(b) * chi(c) - chi(a) * chi(g.mul(b, c)) - chi(b) * chi(g.mul(a, c)) -
                         chi(c) * chi(g.mul(a, b)) + chi(g.mul(g.mul(a, b), c)) + chi(g.mul(g.mul(a, c), b));
    if (!(rec(t) == closed)) {
      v.fail("chi3" + tuple_string(t));
      return false;
    }
    ++v.checked;
    return true;
  });
  v.mode = mode2 == mode3 ? mode2 : "mixed";
  return v;
}

Verdict identity_reduction_check(const ClassFunction& chi, int j, const CoverageOptions& opts) {
  const int n = chi.degree();
  if (j < 0 || j >= n + 2) {
    throw Error(ErrorKind::InvalidParameter, "identity reduction needs 0 <= j < dim + 2");
  }
  Verdict v{"identity-reduction"};
  v.details["dim"] = n;
  v.details["j"] = j;
  if (j == 0) {
    v.mode = "exact";
    v.checked = 1;
    if (!(chi(0) == Cyclo(n))) v.fail("chi(e) = " + chi(0).str());
    return v;
  }
  KCharacter rec(chi);
  std::vector<int> with_e(static_cast<std::size_t>(j) + 1, 0);
  const Cyclo scale(n - j);
  v.mode = for_each_tuple(chi.order(), j, opts, [&](std::span<const int> t) {
    std::copy(t.begin(), t.end(), with_e.begin() + 1);
    const Cyclo lhs = rec(with_e);
    const Cyclo rhs = scale * rec(t);
    if (!(lhs == rhs)) {
      v.fail(tuple_string(t) + ": " + lhs.str() + " vs " + rhs.str());
      return false;
    }
    ++v.checked;
    return true;
  });
  return v;
}

}  // namespace frobmark
