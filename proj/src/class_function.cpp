#include "frobmark/class_function.hpp"

#include <algorithm>
#include <numeric>

#include "frobmark/error.hpp"

namespace frobmark {

int ClassFunction::degree() const {
  const Cyclo& e = values.at(0);
  if (!e.is_rational() || !e.to_rat().is_integer() || e.to_rat().sign() <= 0) {
    throw Error(ErrorKind::InvalidParameter, "chi(e) = " + e.str() + " is not a positive integer degree");
  }
  return static_cast<int>(e.to_rat().num().get_si());
}

std::optional<std::pair<int, int>> trace_like_violation(const ClassFunction& chi) {
  const auto& g = *chi.group;
  for (int a = 0; a < g.order(); ++a) {
    for (int b = a + 1; b < g.order(); ++b) {
      if (!(chi(g.mul(a, b)) == chi(g.mul(b, a)))) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

bool is_trace_like(const ClassFunction& chi) { return !trace_like_violation(chi).has_value(); }

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  if (!(*a.group == *b.group)) throw Error(ErrorKind::InvalidParameter, "class functions on different groups");
  ClassFunction out{a.group, a.values};
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

ClassFunction trivial_character(GroupPtr group) {
  const auto n = static_cast<std::size_t>(group->order());
  return ClassFunction{std::move(group), std::vector<Cyclo>(n, Cyclo(1))};
}

ClassFunction MatrixRep::character() const {
  ClassFunction chi{group, {}};
  chi.values.reserve(mats.size());
  for (const auto& m : mats) chi.values.push_back(trace(m));
  return chi;
}

void validate_rep(const MatrixRep& rep) {
  const auto& g = *rep.group;
  if (static_cast<int>(rep.mats.size()) != g.order()) {
    throw Error(ErrorKind::ValidationError, "representation needs one matrix per element");
  }
  for (const auto& m : rep.mats) {
    if (m.rows() != rep.dim || m.cols() != rep.dim) throw Error(ErrorKind::ValidationError, "matrix shape mismatch");
  }
  if (!(rep.mats[0] == identity<Cyclo>(rep.dim))) {
    throw Error(ErrorKind::ValidationError, "identity element does not map to the identity matrix");
  }
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      if (!(multiply(rep.mats[static_cast<std::size_t>(a)], rep.mats[static_cast<std::size_t>(b)]) ==
            rep.mats[static_cast<std::size_t>(g.mul(a, b))])) {
        throw Error(ErrorKind::ValidationError,
                    "homomorphism fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  }
}

MatrixRep rep_from_generators(GroupPtr group, const std::vector<int>& generators,
                              const std::vector<CycloMatrix>& images) {
  if (generators.size() != images.size() || images.empty()) {
    throw Error(ErrorKind::InvalidParameter, "generator/image count mismatch");
  }
  const int n = group->order();
  const auto dim = static_cast<int>(images[0].rows());
  MatrixRep rep{group, dim, std::vector<CycloMatrix>(static_cast<std::size_t>(n))};
  std::vector<bool> known(static_cast<std::size_t>(n), false);
  rep.mats[0] = identity<Cyclo>(dim);
  known[0] = true;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (std::size_t i = 0; i < generators.size(); ++i) {
        const int y = group->mul(x, generators[i]);
        if (known[static_cast<std::size_t>(y)]) continue;
        rep.mats[static_cast<std::size_t>(y)] = multiply(rep.mats[static_cast<std::size_t>(x)], images[i]);
        known[static_cast<std::size_t>(y)] = true;
        next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  if (std::find(known.begin(), known.end(), false) != known.end()) {
    throw Error(ErrorKind::ValidationError, "generators do not generate the group");
  }
  validate_rep(rep);
  return rep;
}

MatrixRep rep_from_linear_character(const ClassFunction& chi) {
  MatrixRep rep{chi.group, 1, {}};
  for (const auto& v : chi.values) {
    CycloMatrix m(1, 1);
    m(0, 0) = v;
    rep.mats.push_back(std::move(m));
  }
  validate_rep(rep);
  return rep;
}

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b) {
  if (!(*a.group == *b.group)) throw Error(ErrorKind::InvalidParameter, "direct sum of representations of different groups");
  const int d = a.dim + b.dim;
  MatrixRep rep{a.group, d, {}};
  for (std::size_t g = 0; g < a.mats.size(); ++g) {
    CycloMatrix m = CycloMatrix::Constant(d, d, Cyclo(0));
    m.topLeftCorner(a.dim, a.dim) = a.mats[g];
    m.bottomRightCorner(b.dim, b.dim) = b.mats[g];
    rep.mats.push_back(std::move(m));
  }
  return rep;
}

namespace {

// Standard (n-1)-dim representation of S_n on the sum-zero vectors, basis
// v_i = e_i - e_{n-1}; element ordering matches make_symmetric.
MatrixRep standard_symmetric_rep(int n) {
  auto group = std::make_shared<const FiniteGroup>(make_symmetric(n));
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  MatrixRep rep{group, n - 1, {}};
  do {
    CycloMatrix m = CycloMatrix::Constant(n - 1, n - 1, Cyclo(0));
    const int last = p[static_cast<std::size_t>(n - 1)];
    for (int i = 0; i < n - 1; ++i) {
      const int gi = p[static_cast<std::size_t>(i)];
      if (gi < n - 1) m(gi, i) += Cyclo(1);
      if (last < n - 1) m(last, i) -= Cyclo(1);
    }
    rep.mats.push_back(std::move(m));
  } while (std::next_permutation(p.begin(), p.end()));
  validate_rep(rep);
  return rep;
}

CycloMatrix mat2(const Cyclo& a, const Cyclo& b, const Cyclo& c, const Cyclo& d) {
  CycloMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

MatrixRep builtin_matrix_rep(const std::string& group_name) {
  if (group_name == "S3") return standard_symmetric_rep(3);
  if (group_name == "S4") return standard_symmetric_rep(4);
  if (group_name == "D4") {
    auto group = std::make_shared<const FiniteGroup>(make_dihedral(4));
    // r = index 1 (rotation by a quarter turn), s = index 4 (reflection)
    return rep_from_generators(group, {1, 4}, {mat2(0, -1, 1, 0), mat2(1, 0, 0, -1)});
  }
  if (group_name == "Q8") {
    auto group = std::make_shared<const FiniteGroup>(make_quaternion());
    const Cyclo i = zeta(4, 1);
    return rep_from_generators(group, {1, 4}, {mat2(i, 0, 0, -i), mat2(0, 1, -1, 0)});
  }
  throw Error(ErrorKind::InvalidParameter, "no shipped matrix representation for '" + group_name + "'");
}

}  // namespace frobmark
