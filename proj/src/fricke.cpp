#include "frobmark/fricke.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "frobmark/error.hpp"

namespace frobmark {

Mat2 mat2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  Mat2 m;
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

Mat2 m_identity() { return mat2(1, 0, 0, 1); }

Mat2 m_mul(const Mat2& a, const Mat2& b) {
  return mat2(a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
              a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1));
}

Rat m_det(const Mat2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

Rat m_tr(const Mat2& a) { return a(0, 0) + a(1, 1); }

Mat2 m_inv(const Mat2& a) {
  const Rat d = m_det(a);
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "singular 2x2 matrix " + m_str(a));
  const Mat2 adj = mat2(a(1, 1), -a(0, 1), -a(1, 0), a(0, 0));
  if (d == Rat(1)) return adj;
  const Rat s = Rat(1) / d;
  return mat2(adj(0, 0) * s, adj(0, 1) * s, adj(1, 0) * s, adj(1, 1) * s);
}

bool is_unimodular(const Mat2& a) { return m_det(a) == Rat(1); }

std::string m_str(const Mat2& a) {
  return "[[" + a(0, 0).str() + "," + a(0, 1).str() + "],[" + a(1, 0).str() + "," + a(1, 1).str() + "]]";
}

nlohmann::json identity_to_json(const IdentityCheck& c) {
  nlohmann::json j{{"identity", c.identity}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}, {"pass", c.pass}};
  if (!c.witness.empty()) j["witness"] = c.witness;
  if (!c.steps.empty()) {
    j["steps"] = nlohmann::json::array();
    for (const auto& s : c.steps) j["steps"].push_back(identity_to_json(s));
  }
  return j;
}

namespace {

void require_unimodular(const Mat2& a, const char* name) {
  if (!is_unimodular(a)) {
    throw Error(ErrorKind::PreconditionError, std::string(name) + " is not unimodular: " + m_str(a));
  }
}

IdentityCheck equation(std::string name, Rat lhs, Rat rhs, const std::string& witness) {
  IdentityCheck c{std::move(name), std::move(lhs), std::move(rhs)};
  c.pass = c.lhs == c.rhs;
  if (!c.pass) c.witness = witness;
  return c;
}

std::string pair_witness(const Mat2& a, const Mat2& b) { return "A=" + m_str(a) + " B=" + m_str(b); }

// Folds step results into the parent check.
void absorb(IdentityCheck& parent, IdentityCheck step) {
  if (!step.pass) {
    if (parent.pass) parent.witness = step.identity + ": " + step.witness;
    parent.pass = false;
  }
  parent.steps.push_back(std::move(step));
}

}  // namespace

IdentityCheck skein_check(const Mat2& x, const Mat2& y) {
  require_unimodular(x, "X");
  require_unimodular(y, "Y");
  return equation("skein", m_tr(m_mul(x, y)) + m_tr(m_mul(x, m_inv(y))), m_tr(x) * m_tr(y),
                  "X=" + m_str(x) + " Y=" + m_str(y));
}

IdentityCheck fricke_check(const Mat2& a, const Mat2& b) {
  require_unimodular(a, "A");
  require_unimodular(b, "B");
  const Mat2 ai = m_inv(a);
  const Mat2 bi = m_inv(b);
  const Mat2 c = m_mul(a, b);
  const Mat2 aba = m_mul(c, ai);
  const Rat ta = m_tr(a), tb = m_tr(b), tc = m_tr(c);
  const Rat comm = m_tr(m_mul(aba, bi));
  const Rat abab = m_tr(m_mul(aba, b));
  const Rat a2 = m_tr(m_mul(a, a));
  const std::string w = pair_witness(a, b);

  IdentityCheck out = equation("fricke", ta * ta + tb * tb + tc * tc, ta * tb * tc + comm + Rat(2), w);
  // tr(ABA^-1) tr(B) equals (tr B)^2 since ABA^-1 is conjugate to B
  absorb(out, equation("skein X=ABA^-1, Y=B", abab + comm, m_tr(aba) * tb, w));
  absorb(out, equation("conjugation tr(ABA^-1) trB = (trB)^2", m_tr(aba) * tb, tb * tb, w));
  absorb(out, equation("skein X=AB, Y=A^-1B", abab + m_tr(m_mul(m_mul(c, bi), a)), tc * m_tr(m_mul(ai, b)), w));
  absorb(out, equation("skein tr(A^-1B) = -tr(AB) + trA trB", m_tr(m_mul(ai, b)), -tc + ta * tb, w));
  absorb(out, equation("tr(ABA^-1B) = -tr(A^2) - (trC)^2 + trA trB trC", abab, -a2 - tc * tc + ta * tb * tc, w));
  absorb(out, equation("tr(A^2) = (trA)^2 - 2", a2, ta * ta - Rat(2), w));
  return out;
}

Rat chi3_trace(const Mat2& x, const Mat2& y, const Mat2& z) {
  const Rat tx = m_tr(x), ty = m_tr(y), tz = m_tr(z);
  return tx * ty * tz - tx * m_tr(m_mul(y, z)) - ty * m_tr(m_mul(x, z)) - tz * m_tr(m_mul(x, y)) +
         m_tr(m_mul(m_mul(x, y), z)) + m_tr(m_mul(m_mul(x, z), y));
}

IdentityCheck chi3_bridge_check(const Mat2& a, const Mat2& b) {
  require_unimodular(a, "a");
  require_unimodular(b, "b");
  const Mat2 A = m_mul(a, b);
  const Mat2 B = m_inv(a);
  const Mat2 C = m_inv(b);
  const std::string w = "a=" + m_str(a) + " b=" + m_str(b);
  IdentityCheck out = equation("chi3 bridge", chi3_trace(A, B, C), Rat(0), w);
  const Rat ta = m_tr(a), tb = m_tr(b), tc = m_tr(A);
  const Rat comm = m_tr(m_mul(m_mul(A, B), C));
  absorb(out, equation("chi(A)chi(B)chi(C) = chi(a)chi(b)chi(c)", m_tr(A) * m_tr(B) * m_tr(C), ta * tb * tc, w));
  absorb(out, equation("chi(A)chi(BC) = chi(c)^2", m_tr(A) * m_tr(m_mul(B, C)), tc * tc, w));
  absorb(out, equation("chi(B)chi(AC) = chi(a)^2", m_tr(B) * m_tr(m_mul(A, C)), ta * ta, w));
  absorb(out, equation("chi(C)chi(AB) = chi(b)^2", m_tr(C) * m_tr(m_mul(A, B)), tb * tb, w));
  absorb(out, equation("chi(ABC) = chi(aba^-1b^-1)", comm, m_tr(m_mul(m_mul(m_mul(a, b), B), C)), w));
  absorb(out, equation("chi(ACB) = chi(e) = 2", m_tr(m_mul(m_mul(A, C), B)), Rat(2), w));
  // the six terms reassemble into the Fricke identity
  absorb(out, equation("fricke form", ta * tb * tc - ta * ta - tb * tb - tc * tc + comm + Rat(2), Rat(0), w));
  return out;
}

TraceTriple fricke_traces(const Mat2& a, const Mat2& b) {
  const Mat2 c = m_mul(a, b);
  return {m_tr(a), m_tr(b), m_tr(c), m_tr(m_mul(m_mul(c, m_inv(a)), m_inv(b)))};
}

Rat surface_eval(const Rat& x, const Rat& y, const Rat& z, const Rat& jc) {
  return x * x + y * y + z * z - x * y * z - (jc + Rat(2));
}

Rat surface_eval(const TraceTriple& t) { return surface_eval(t.x, t.y, t.z, t.jc); }

Rat markov_surface_eval(const Rat& x, const Rat& y, const Rat& z) { return x * x + y * y + z * z - x * y * z; }

TraceTriple markov_lift(const MarkovTriple& t) {
  return {Rat(Int(3 * t.x())), Rat(Int(3 * t.y())), Rat(Int(3 * t.z())), Rat(-2)};
}

TraceTriple action_S(const TraceTriple& t) { return {t.y, t.x, t.x * t.y - t.z, t.jc}; }

TraceTriple action_TS(const TraceTriple& t) { return {t.y, t.z, t.x, t.jc}; }

double boundary_length(const Rat& jc) {
  if (jc > Rat(-2)) {
    throw Error(ErrorKind::DomainError, "boundary length needs j_c <= -2 (got " + jc.str() + ")");
  }
  return 2.0 * std::acosh(-jc.to_double() / 2.0);
}

namespace {

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Mat2 word_from_stream(int length, std::uint64_t& state) {
  static const Mat2 gens[4] = {mat2(1, 1, 0, 1), mat2(1, 0, 1, 1), mat2(1, -1, 0, 1), mat2(1, 0, -1, 1)};
  Mat2 m = m_identity();
  for (int i = 0; i < length; ++i) m = m_mul(m, gens[splitmix(state) % 4]);
  return m;
}

}  // namespace

Mat2 random_sl2z_word(int length, std::uint64_t seed) {
  if (length < 0) throw Error(ErrorKind::InvalidParameter, "word length must be >= 0");
  std::uint64_t state = seed;
  return word_from_stream(length, state);
}

std::vector<Verdict> fricke_suite(const FrickeSuiteOptions& opts) {
  if (opts.word_length < 0) throw Error(ErrorKind::InvalidParameter, "word length must be >= 0");
  Verdict skein{"skein", true, "sampled"};
  Verdict fricke{"fricke", true, "sampled"};
  Verdict bridge{"chi3-bridge", true, "sampled"};
  Verdict general{"chi3-general", true, "sampled"};
  std::uint64_t state = opts.seed;
  for (std::uint64_t i = 0; i < opts.samples; ++i) {
    const Mat2 a = word_from_stream(opts.word_length, state);
    const Mat2 b = word_from_stream(opts.word_length, state);
    const Mat2 c = word_from_stream(opts.word_length, state);
    for (auto [v, r] : {std::pair{&skein, skein_check(a, b)}, std::pair{&fricke, fricke_check(a, b)},
                        std::pair{&bridge, chi3_bridge_check(a, b)}}) {
      ++v->checked;
      if (!r.pass) v->fail("sample " + std::to_string(i) + ": " + r.witness);
    }
    ++general.checked;
    const Rat g = chi3_trace(a, b, c);
    if (!g.is_zero()) {
      general.fail("sample " + std::to_string(i) + ": chi3 = " + g.str() + " at " + m_str(a) + ", " + m_str(b) +
                   ", " + m_str(c));
    }
  }
  std::vector<Verdict> out{skein, fricke, bridge, general};
  for (auto& v : out) {
    v.details["seed"] = opts.seed;
    v.details["word_length"] = opts.word_length;
  }
  return out;
}

}  // namespace frobmark
