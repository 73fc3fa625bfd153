#include "waring/binary.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "waring/veronese.hpp"

namespace waring {

BinaryForm::BinaryForm(int d, std::vector<Scalar> coeffs)
    : d_(d), field_(coeffs.empty() ? FieldSpec::rational() : coeffs[0].field()),
      coeffs_(std::move(coeffs)) {
  if (d_ < 0 || coeffs_.size() != static_cast<std::size_t>(d_ + 1))
    fail(ErrorCode::DimensionMismatch, "binary form needs d+1 coefficients");
}

BinaryForm BinaryForm::from_coeffs(const std::vector<Scalar>& coeffs) {
  if (coeffs.empty()) fail(ErrorCode::InvalidArgument, "empty coefficients");
  return BinaryForm(static_cast<int>(coeffs.size()) - 1, coeffs);
}

BinaryForm BinaryForm::from_homogeneous(const HomogeneousForm& f) {
  if (f.r() != 1)
    fail(ErrorCode::DimensionMismatch, "not a binary form (r != 1)");
  std::vector<Scalar> coeffs(f.degree() + 1, Scalar::zero(f.field()));
  for (const auto& [exps, c] : f.terms()) coeffs[exps[1]] = c;
  return BinaryForm(f.degree(), std::move(coeffs));
}

HomogeneousForm BinaryForm::to_homogeneous() const {
  HomogeneousForm f(1, d_, field_);
  for (int i = 0; i <= d_; ++i)
    if (!coeffs_[i].is_zero()) f.set_coeff({d_ - i, i}, coeffs_[i]);
  return f;
}

bool BinaryForm::is_zero() const { return vec_is_zero(coeffs_); }

Scalar BinaryForm::evaluate(const Scalar& x, const Scalar& y) const {
  Scalar acc = Scalar::zero(field_);
  std::vector<Scalar> xpow(d_ + 1, Scalar::one(field_));
  for (int i = 1; i <= d_; ++i) xpow[i] = xpow[i - 1] * x;
  Scalar yp = Scalar::one(field_);
  for (int i = 0; i <= d_; ++i) {
    acc += coeffs_[i] * xpow[d_ - i] * yp;
    yp *= y;
  }
  return acc;
}

Scalar BinaryForm::evaluate(const ProjPoint& p) const {
  if (p.coords().size() != 2)
    fail(ErrorCode::DimensionMismatch, "expected a point of P^1");
  return evaluate(p.coords()[0], p.coords()[1]);
}

BinaryForm BinaryForm::operator+(const BinaryForm& rhs) const {
  if (d_ != rhs.d_) fail(ErrorCode::DimensionMismatch, "degree mismatch");
  return BinaryForm(d_, vec_add(coeffs_, rhs.coeffs_));
}

BinaryForm BinaryForm::scaled(const Scalar& c) const {
  return BinaryForm(d_, vec_scale(c, coeffs_));
}

BinaryForm BinaryForm::operator*(const BinaryForm& rhs) const {
  std::vector<Scalar> out(d_ + rhs.d_ + 1, Scalar::zero(field_));
  for (int i = 0; i <= d_; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (int j = 0; j <= rhs.d_; ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return BinaryForm(d_ + rhs.d_, std::move(out));
}

bool BinaryForm::operator==(const BinaryForm& rhs) const {
  return d_ == rhs.d_ && field_ == rhs.field_ && coeffs_ == rhs.coeffs_;
}

bool BinaryForm::proportional_to(const BinaryForm& rhs) const {
  if (d_ != rhs.d_) return false;
  int lead = -1;
  for (int i = 0; i <= d_; ++i)
    if (!coeffs_[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) return rhs.is_zero();
  if (rhs.coeffs_[lead].is_zero()) return false;
  Scalar ratio = rhs.coeffs_[lead] / coeffs_[lead];
  for (int i = 0; i <= d_; ++i)
    if (coeffs_[i] * ratio != rhs.coeffs_[i]) return false;
  return true;
}

std::string BinaryForm::to_string() const { return to_homogeneous().to_string(); }

BinaryForm contract(const BinaryForm& f, const BinaryForm& g) {
  int d = f.degree(), k = g.degree();
  if (k > d) fail(ErrorCode::DimensionMismatch, "contraction degree exceeds d");
  std::vector<Scalar> out(d - k + 1, Scalar::zero(f.field()));
  for (int u = 0; u <= d - k; ++u)
    for (int v = 0; v <= k; ++v) out[u] += g.coeff(v) * f.coeff(u + v);
  return BinaryForm(d - k, std::move(out));
}

Matrix catalecticant(const BinaryForm& f, int k) {
  int d = f.degree();
  if (k < 0 || k > d)
    fail(ErrorCode::InvalidArgument, "catalecticant degree out of range");
  Matrix m(d - k + 1, k + 1, f.field());
  for (int u = 0; u <= d - k; ++u)
    for (int v = 0; v <= k; ++v) m.at(u, v) = f.coeff(u + v);
  return m;
}

std::vector<BinaryForm> apolar_system(const BinaryForm& f, int k) {
  int d = f.degree();
  std::vector<BinaryForm> out;
  if (k == d + 1) {
    // Every form of degree d+1 contracts f to degree -1: no conditions.
    for (int v = 0; v <= k; ++v) {
      std::vector<Scalar> c(k + 1, Scalar::zero(f.field()));
      c[v] = Scalar::one(f.field());
      out.emplace_back(k, std::move(c));
    }
    return out;
  }
  for (const auto& v : kernel_basis(catalecticant(f, k)))
    out.emplace_back(k, v);
  return out;
}

int border_rank(const BinaryForm& f) {
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "zero form");
  int d = f.degree();
  for (int k = 1; k <= (d + 2) / 2; ++k)
    if (!apolar_system(f, k).empty()) return k;
  fail(ErrorCode::InvalidArgument, "no apolar form up to floor((d+2)/2)");
}

// ---------------------------------------------------------------------------
// Univariate helpers: u(z) = g(1, z), coefficient i on z^i. The point (0:1)
// is a root of g of multiplicity deg(g) - deg_z(u).
// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<Scalar>;  // dense, may carry trailing zeros

int poly_deg(const Poly& u) {
  for (int i = static_cast<int>(u.size()) - 1; i >= 0; --i)
    if (!u[i].is_zero()) return i;
  return -1;
}

Poly poly_trim(Poly u) {
  u.resize(poly_deg(u) + 1);
  return u;
}

Poly poly_derivative(const Poly& u, const FieldSpec& field) {
  Poly out;
  for (std::size_t i = 1; i < u.size(); ++i)
    out.push_back(u[i] * Scalar::from_int(static_cast<long long>(i), field));
  return poly_trim(std::move(out));
}

Scalar poly_eval(const Poly& u, const Scalar& z) {
  Scalar acc = Scalar::zero(z.field());
  for (int i = poly_deg(u); i >= 0; --i) acc = acc * z + u[i];
  return acc;
}

// Remainder of a by b (b nonzero).
Poly poly_rem(Poly a, const Poly& b, const FieldSpec& field) {
  int db = poly_deg(b);
  Scalar lead_inv = b[db].inverse();
  int da = poly_deg(a);
  while (da >= db) {
    Scalar q = a[da] * lead_inv;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= q * b[j];
    a[da] = Scalar::zero(field);  // guard against inexact cancellation noise
    da = poly_deg(a);
  }
  a.resize(da + 1);
  return a;
}

Poly poly_gcd(Poly a, Poly b, const FieldSpec& field) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (poly_deg(b) >= 0) {
    Poly r = poly_rem(a, b, field);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod,
                 const FieldSpec& field) {
  Poly prod(a.size() + b.size(), Scalar::zero(field));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  return poly_rem(std::move(prod), mod, field);
}

// z^p mod u, for the rational-root census over F_p.
Poly poly_pow_z(std::uint64_t p, const Poly& mod, const FieldSpec& field) {
  Poly acc{Scalar::one(field)};
  Poly base{Scalar::zero(field), Scalar::one(field)};
  base = poly_rem(base, mod, field);
  while (p) {
    if (p & 1) acc = poly_mulmod(acc, base, mod, field);
    base = poly_mulmod(base, base, mod, field);
    p >>= 1;
  }
  return acc;
}

int infinity_multiplicity(const BinaryForm& g) {
  return g.degree() - poly_deg(g.coeffs());
}

// Decides split & square-free over F_p without extracting roots.
bool fp_is_split_square_free(const BinaryForm& g) {
  const FieldSpec& field = g.field();
  const std::uint64_t p = field.p();
  int s = g.degree();
  if (s == 0) return false;
  int m_inf = infinity_multiplicity(g);
  if (m_inf > 1) return false;
  Poly u = poly_trim(g.coeffs());
  int du = poly_deg(u);
  if (du <= 0) return m_inf == 1 && s == 1;
  if (du >= 2) {
    Poly d = poly_derivative(u, field);
    if (poly_deg(poly_gcd(u, d, field)) != 0) return false;
  }
  if (du == 1) return true;
  if (p <= 4096) {
    int roots = 0;
    for (std::uint64_t l = 0; l < p; ++l) {
      if (poly_eval(u, Scalar::from_int(static_cast<long long>(l), field))
              .is_zero())
        ++roots;
    }
    return roots == du;
  }
  // u square-free: it splits into distinct rational linear factors iff
  // z^p = z mod u.
  Poly zp = poly_pow_z(p, u, field);
  Poly z{Scalar::zero(field), Scalar::one(field)};
  z = poly_rem(z, u, field);
  return poly_trim(zp) == poly_trim(z);
}

std::optional<std::vector<ProjPoint>> fp_split_nodes(const BinaryForm& g) {
  if (!fp_is_split_square_free(g)) return std::nullopt;
  const FieldSpec& field = g.field();
  std::vector<ProjPoint> nodes;
  if (infinity_multiplicity(g) == 1)
    nodes.push_back(ProjPoint::normalize(
        {Scalar::zero(field), Scalar::one(field)}));
  Poly u = poly_trim(g.coeffs());
  for (std::uint64_t l = 0; l < field.p(); ++l) {
    Scalar z = Scalar::from_int(static_cast<long long>(l), field);
    if (poly_eval(u, z).is_zero())
      nodes.push_back(ProjPoint::normalize({Scalar::one(field), z}));
  }
  return nodes;
}

// Divisors of |n| via trial division; nullopt when a large factor resists.
std::optional<std::vector<BigInt>> divisors_of(BigInt n) {
  if (n < 0) n = -n;
  if (n == 0) return std::nullopt;
  std::map<BigInt, int> factors;
  for (BigInt q = 2; q * q <= n && q < 1000000; ++q) {
    while (n % q == 0) {
      ++factors[q];
      n /= q;
    }
  }
  if (n > 1) {
    if (n >= BigInt(1000000) * BigInt(1000000)) return std::nullopt;
    ++factors[n];
  }
  std::vector<BigInt> divs{1};
  for (const auto& [q, e] : factors) {
    std::size_t base = divs.size();
    BigInt qp = 1;
    for (int i = 1; i <= e; ++i) {
      qp *= q;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * qp);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::optional<std::vector<ProjPoint>> rat_split_nodes(const BinaryForm& g) {
  const FieldSpec field = FieldSpec::rational();
  int s = g.degree();
  int m_inf = infinity_multiplicity(g);
  if (m_inf > 1) return std::nullopt;
  std::vector<ProjPoint> nodes;
  if (m_inf == 1)
    nodes.push_back(
        ProjPoint::normalize({Scalar::zero(field), Scalar::one(field)}));
  Poly u = poly_trim(g.coeffs());
  int du = poly_deg(u);
  if (du != s - m_inf) return std::nullopt;  // unreachable; keeps intent clear
  if (du >= 2) {
    Poly der = poly_derivative(u, field);
    if (poly_deg(poly_gcd(u, der, field)) != 0) return std::nullopt;
  }
  // Strip roots at z = 0.
  if (du >= 1 && u[0].is_zero()) {
    nodes.push_back(
        ProjPoint::normalize({Scalar::one(field), Scalar::zero(field)}));
    u.erase(u.begin());
    du = poly_deg(u);
    if (du >= 0 && u[0].is_zero()) return std::nullopt;  // double root at 0
  }
  while (du >= 1) {
    // Clear denominators, then hunt a rational root p/q with p | c0, q | lead.
    BigInt l = 1;
    for (const Scalar& c : u)
      l = boost::multiprecision::lcm(
          l, boost::multiprecision::denominator(c.rational_value()));
    std::vector<BigInt> w(du + 1);
    for (int i = 0; i <= du; ++i) {
      const BigRat& q = u[i].rational_value();
      w[i] = boost::multiprecision::numerator(q) *
             (l / boost::multiprecision::denominator(q));
    }
    auto dn = divisors_of(w[0]);
    auto dl = divisors_of(w[du]);
    if (!dn || !dl) return std::nullopt;
    bool found = false;
    for (const BigInt& num : *dn) {
      for (const BigInt& den : *dl) {
        if (boost::multiprecision::gcd(num, den) != 1) continue;
        for (int sign = 0; sign < 2 && !found; ++sign) {
          BigRat cand(sign ? -num : num, den);
          Scalar z = Scalar::from_rational(cand, field);
          if (poly_eval(u, z).is_zero()) {
            nodes.push_back(
                ProjPoint::normalize({Scalar::one(field), z}));
            // Deflate by (z - cand).
            Poly q(du, Scalar::zero(field));
            Scalar carry = Scalar::zero(field);
            for (int i = du; i >= 1; --i) {
              carry = u[i] + carry * z;
              q[i - 1] = carry;
            }
            u = poly_trim(std::move(q));
            du = poly_deg(u);
            found = true;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;  // an irrational factor remains
  }
  return nodes;
}

}  // namespace

bool is_square_free(const BinaryForm& g) {
  if (g.is_zero()) return false;
  if (infinity_multiplicity(g) > 1) return false;
  Poly u = poly_trim(g.coeffs());
  if (poly_deg(u) < 2) return true;
  Poly d = poly_derivative(u, g.field());
  return poly_deg(poly_gcd(u, d, g.field())) == 0;
}

std::optional<std::vector<ProjPoint>> split_nodes(const BinaryForm& g) {
  if (g.is_zero() || g.degree() == 0) return std::nullopt;
  if (g.field().is_prime()) return fp_split_nodes(g);
  return rat_split_nodes(g);
}

std::vector<ProjPoint> projective_line_points(const FieldSpec& field) {
  if (!field.is_prime())
    fail(ErrorCode::InvalidArgument, "P^1 enumeration needs a finite field");
  std::vector<ProjPoint> pts;
  pts.push_back(
      ProjPoint::normalize({Scalar::zero(field), Scalar::one(field)}));
  for (std::uint64_t l = 0; l < field.p(); ++l)
    pts.push_back(ProjPoint::normalize(
        {Scalar::one(field), Scalar::from_int(static_cast<long long>(l), field)}));
  return pts;
}

// ---------------------------------------------------------------------------
// Rank analysis.
// ---------------------------------------------------------------------------

namespace {

constexpr std::uint64_t kEnumCap = 65536;
constexpr std::uint64_t kSampleFloor = 16384;
constexpr std::uint64_t kSampleCeil = 2000000;

// Projective member count (p^m - 1)/(p - 1), saturating at `cap + 1`.
std::uint64_t projective_count(std::uint64_t p, std::size_t m,
                               std::uint64_t cap) {
  std::uint64_t total = 0, layer = 1;
  for (std::size_t i = 0; i < m; ++i) {
    total += layer;
    if (total > cap) return cap + 1;
    if (layer > cap) return cap + 1;
    layer *= p;
  }
  return total;
}

BinaryForm combine(const std::vector<BinaryForm>& sys,
                   const std::vector<Scalar>& coeffs) {
  BinaryForm acc = sys[0].scaled(coeffs[0]);
  for (std::size_t i = 1; i < sys.size(); ++i)
    acc = acc + sys[i].scaled(coeffs[i]);
  return acc;
}

// Visits every projective member of the system in a fixed canonical order
// (leading coefficient 1, remaining coordinates in odometer order);
// stops early when fn returns false.
void for_each_member(const std::vector<BinaryForm>& sys,
                     const FieldSpec& field,
                     const std::function<bool(const BinaryForm&)>& fn) {
  const std::uint64_t p = field.p();
  const std::size_t m = sys.size();
  std::vector<Scalar> coeffs(m, Scalar::zero(field));
  for (std::size_t lead = 0; lead < m; ++lead) {
    for (auto& c : coeffs) c = Scalar::zero(field);
    coeffs[lead] = Scalar::one(field);
    std::vector<std::uint64_t> odo(m - lead - 1, 0);
    bool done = false;
    while (!done) {
      for (std::size_t i = 0; i < odo.size(); ++i)
        coeffs[lead + 1 + i] =
            Scalar::from_int(static_cast<long long>(odo[i]), field);
      if (!fn(combine(sys, coeffs))) return;
      done = true;
      for (std::size_t i = 0; i < odo.size(); ++i) {
        if (++odo[i] < p) {
          done = false;
          break;
        }
        odo[i] = 0;
      }
    }
  }
}

std::uint64_t factorial_capped(int n, std::uint64_t cap) {
  std::uint64_t acc = 1;
  for (int i = 2; i <= n; ++i) {
    acc *= static_cast<std::uint64_t>(i);
    if (acc >= cap) return cap;
  }
  return acc;
}

// Searches the linear system for a split square-free member. Exhaustive when
// the projective member count is small; otherwise deterministic sampling
// tuned to the 1/s! density of split forms.
std::optional<BinaryForm> find_split_member(const std::vector<BinaryForm>& sys,
                                            int s, const FieldSpec& field) {
  if (sys.empty()) return std::nullopt;
  if (sys.size() == 1)
    return split_nodes(sys[0]) ? std::optional<BinaryForm>(sys[0])
                               : std::nullopt;
  if (field.is_prime()) {
    std::uint64_t count = projective_count(field.p(), sys.size(), kEnumCap);
    std::optional<BinaryForm> hit;
    if (count <= kEnumCap) {
      for_each_member(sys, field, [&](const BinaryForm& g) {
        if (!g.is_zero() && fp_is_split_square_free(g)) {
          hit = g;
          return false;
        }
        return true;
      });
      return hit;
    }
    std::uint64_t draws =
        std::max(kSampleFloor,
                 std::min(kSampleCeil, 48 * factorial_capped(s, kSampleCeil)));
    Rng rng(0x5eedull ^ static_cast<std::uint64_t>(s));
    for (std::uint64_t k = 0; k < draws; ++k) {
      std::vector<Scalar> coeffs;
      coeffs.reserve(sys.size());
      for (std::size_t i = 0; i < sys.size(); ++i)
        coeffs.push_back(Scalar::from_int(
            static_cast<long long>(rng.below(field.p())), field));
      bool all_zero = true;
      for (const auto& c : coeffs) all_zero = all_zero && c.is_zero();
      if (all_zero) continue;
      BinaryForm g = combine(sys, coeffs);
      if (!g.is_zero() && fp_is_split_square_free(g)) return g;
    }
    return std::nullopt;
  }
  // Rational field: bounded deterministic search over small combinations.
  Rng rng(0x517e);
  for (int k = 0; k < 4096; ++k) {
    std::vector<Scalar> coeffs;
    coeffs.reserve(sys.size());
    bool all_zero = true;
    for (std::size_t i = 0; i < sys.size(); ++i) {
      long long c = static_cast<long long>(rng.below(9)) - 4;
      all_zero = all_zero && c == 0;
      coeffs.push_back(Scalar::from_int(c, field));
    }
    if (all_zero) continue;
    BinaryForm g = combine(sys, coeffs);
    if (!g.is_zero() && split_nodes(g)) return g;
  }
  return std::nullopt;
}

}  // namespace

BinaryAnalysis sylvester_analyze(const BinaryForm& f) {
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "zero form");
  const FieldSpec& field = f.field();
  const int d = f.degree();
  const int t = border_rank(f);
  BinaryForm apolar_low = apolar_system(f, t)[0];
  for (int s = t; s <= d + 1; ++s) {
    std::vector<BinaryForm> sys = apolar_system(f, s);
    if (sys.empty()) continue;
    std::optional<BinaryForm> witness = find_split_member(sys, s, field);
    if (!witness) continue;
    auto nodes = split_nodes(*witness);
    return BinaryAnalysis{f,
                          t,
                          s,
                          apolar_low,
                          static_cast<int>(sys.size()) - 1,
                          *witness,
                          *nodes};
  }
  fail(ErrorCode::NonSplitApolar,
       "no split square-free apolar form found in any degree; over the "
       "rationals switch to a prime field");
}

BinaryDecomposition decompose_with_witness(const BinaryForm& f,
                                           const BinaryForm& witness) {
  auto nodes_opt = split_nodes(witness);
  if (!nodes_opt)
    fail(ErrorCode::NoSplitWitness, "witness is not split square-free");
  PointSet nodes(*nodes_opt);
  VeroneseSpace line(1, f.degree());
  auto weights = in_span(f.coeffs(), nodes, line);
  if (!weights)
    fail(ErrorCode::NoSplitWitness,
         "witness roots do not span the form (witness not apolar?)");
  for (const Scalar& w : *weights)
    if (w.is_zero())
      fail(ErrorCode::NotMinimalCertificate,
           "zero weight: a proper subset already spans the form");
  return BinaryDecomposition{f.degree(), nodes, *weights};
}

BinaryDecomposition sylvester_decompose(const BinaryForm& f) {
  BinaryAnalysis a = sylvester_analyze(f);
  return decompose_with_witness(f, a.witness);
}

bool BinaryDecomposition::verify_against(const BinaryForm& f) const {
  if (nodes.size() != weights.size() || nodes.empty()) return false;
  const FieldSpec& field = f.field();
  std::vector<Scalar> acc(f.degree() + 1, Scalar::zero(field));
  VeroneseSpace line(1, f.degree());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (weights[i].is_zero()) return false;
    AmbientVector img = veronese_map(nodes[i], line);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += weights[i] * img[j];
  }
  return acc == f.coeffs();
}

std::vector<BinaryDecomposition> decomposition_family(const BinaryForm& f,
                                                      std::size_t count,
                                                      std::uint64_t seed) {
  BinaryAnalysis a = sylvester_analyze(f);
  if (!a.family_infinite()) return {decompose_with_witness(f, a.witness)};
  if (count == 0) return {};
  const FieldSpec& field = f.field();
  std::vector<BinaryForm> sys = apolar_system(f, a.rank);
  std::vector<BinaryDecomposition> out;

  if (sys.size() == 2 && field.is_prime() && field.p() + 1 <= 200000) {
    // Pencil: enumerate the full rational pool once, in canonical order, and
    // let the seed pick a contiguous slice. Distinct seeds then yield
    // disjoint batches until the pool wraps around.
    std::vector<BinaryForm> pool;
    for_each_member(sys, field, [&](const BinaryForm& g) {
      if (!g.is_zero() && fp_is_split_square_free(g)) pool.push_back(g);
      return true;
    });
    if (pool.empty())
      fail(ErrorCode::FamilyEmpty, "no rational member of the apolar pencil");
    std::size_t m = pool.size();
    std::size_t take = std::min(count, m);
    std::size_t start = static_cast<std::size_t>((seed * count) % m);
    for (std::size_t j = 0; j < take; ++j)
      out.push_back(decompose_with_witness(f, pool[(start + j) % m]));
    return out;
  }

  // Rejection sampling from the full system.
  Rng rng(seed);
  std::set<PointSet> seen;
  const std::size_t max_draws = 64 * count;
  for (std::size_t k = 0; k < max_draws && out.size() < count; ++k) {
    std::vector<Scalar> coeffs;
    coeffs.reserve(sys.size());
    bool all_zero = true;
    for (std::size_t i = 0; i < sys.size(); ++i) {
      Scalar c = field.is_prime()
                     ? Scalar::from_int(
                           static_cast<long long>(rng.below(field.p())), field)
                     : Scalar::from_int(
                           static_cast<long long>(rng.below(19)) - 9, field);
      all_zero = all_zero && c.is_zero();
      coeffs.push_back(c);
    }
    if (all_zero) continue;
    BinaryForm g = combine(sys, coeffs);
    if (g.is_zero() || !split_nodes(g)) continue;
    BinaryDecomposition dec = decompose_with_witness(f, g);
    if (seen.insert(dec.nodes).second) out.push_back(std::move(dec));
  }
  if (out.empty())
    fail(ErrorCode::FamilyEmpty, "sampling cap exhausted with no member");
  return out;
}

BinaryForm project_from_nodes(const BinaryForm& f, const PointSet& e) {
  if (e.empty()) return f;
  const FieldSpec& field = f.field();
  if (f.degree() - static_cast<int>(e.size()) < 2)
    fail(ErrorCode::InvalidArgument, "projection target degree below 2");
  BinaryForm g(1, {e[0].coords()[1], -e[0].coords()[0]});
  for (std::size_t i = 1; i < e.size(); ++i)
    g = g * BinaryForm(1, {e[i].coords()[1], -e[i].coords()[0]});
  BinaryForm proj = contract(f, g);
  if (proj.is_zero())
    fail(ErrorCode::DegenerateProjection,
         "contraction by the node product annihilates the form");
  return proj;
}

}  // namespace waring
