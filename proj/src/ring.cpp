#include "polycyc/ring.hpp"

#include "polycyc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polycyc {

std::strong_ordering operator<=>(const RingElem& a, const RingElem& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

// Dense polynomials over F_p as ascending coefficient vectors; only used to
// select and validate moduli before a GaloisRing exists.
using FpPoly = std::vector<std::uint64_t>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t n) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw MathError("element is not invertible");
  if (t < 0) t += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(t);
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, std::uint64_t p) {
  trim(a);
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return fp_mod(std::move(c), m, p);
}

FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& m, std::uint64_t p) {
  FpPoly result{1};
  base = fp_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = fp_mulmod(result, base, m, p);
    base = fp_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod f, by k successive p-th powers.
FpPoly frobenius_power(const FpPoly& f, unsigned k, std::uint64_t p) {
  FpPoly x = fp_mod(FpPoly{0, 1}, f, p);
  for (unsigned i = 0; i < k; ++i) x = fp_powmod(x, p, f, p);
  return x;
}

// Rabin's test for a monic f of degree m over F_p.
bool fp_irreducible(const FpPoly& f, std::uint64_t p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  if (m == 1) return true;
  FpPoly top = frobenius_power(f, m, p);
  FpPoly x = fp_mod(FpPoly{0, 1}, f, p);
  if (top != x) return false;
  for (unsigned d = 2; d <= m; ++d) {
    if (m % d != 0 || !is_prime(d)) continue;
    FpPoly h = frobenius_power(f, m / d, p);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    FpPoly g = fp_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

struct GaloisRing::Data {
  unsigned p = 0, r = 0, m = 0;
  Coeff q = 0;
  std::vector<Coeff> modulus;
  std::vector<Coeff> p_pow;              // p^0 .. p^r
  std::vector<CoeffVec> reduction;        // y^{m+k}, k in [0, m-1)
  std::shared_ptr<const Data> residue;    // null when r == 1
};

GaloisRing::GaloisRing(unsigned p, unsigned r, unsigned m) {
  if (!is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  if (r < 1 || m < 1) throw PreconditionError("r and m must be positive");
  std::vector<Coeff> modulus;
  if (m == 1) {
    modulus = {0, 1};
  } else {
    const std::uint64_t count = ipow(p, m);
    for (std::uint64_t t = 0; t < count; ++t) {
      FpPoly cand(m + 1, 0);
      std::uint64_t v = t;
      for (unsigned i = 0; i < m; ++i) {
        cand[i] = v % p;
        v /= p;
      }
      cand[m] = 1;
      if (cand[0] == 0) continue;
      if (fp_irreducible(cand, p)) {
        modulus.assign(cand.begin(), cand.end());
        break;
      }
    }
  }
  init(p, r, std::move(modulus));
}

GaloisRing::GaloisRing(unsigned p, unsigned r, std::vector<Coeff> modulus) {
  if (!is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  if (r < 1) throw PreconditionError("r must be positive");
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw PreconditionError("modulus must be monic of degree >= 1");
  }
  if (modulus.size() == 2) {
    modulus = {0, 1};
  } else {
    FpPoly red(modulus.begin(), modulus.end());
    for (auto& c : red) c %= p;
    if (!fp_irreducible(red, p)) {
      throw PreconditionError("modulus is not irreducible modulo p");
    }
  }
  init(p, r, std::move(modulus));
}

void GaloisRing::init(unsigned p, unsigned r, std::vector<Coeff> modulus) {
  auto d = std::make_shared<Data>();
  d->p = p;
  d->r = r;
  d->m = static_cast<unsigned>(modulus.size() - 1);
  const std::uint64_t q = ipow(p, r);
  if (q >= (1ULL << 31) || q / ipow(p, r - 1) != p) {
    throw PreconditionError("p^r must be below 2^31");
  }
  d->q = static_cast<Coeff>(q);
  d->p_pow.resize(r + 1);
  for (unsigned k = 0; k <= r; ++k) d->p_pow[k] = static_cast<Coeff>(ipow(p, k));
  for (auto& c : modulus) c %= d->q;
  d->modulus = std::move(modulus);

  // y^m = -(h_0 + ... + h_{m-1} y^{m-1}); successive powers by shifting.
  const unsigned m = d->m;
  if (m > 1) {
    CoeffVec cur(m);
    for (unsigned i = 0; i < m; ++i) cur[i] = (d->q - d->modulus[i]) % d->q;
    d->reduction.push_back(cur);
    for (unsigned k = 1; k + 1 < m; ++k) {
      CoeffVec next(m, 0);
      const std::uint64_t top = cur[m - 1];
      for (unsigned i = m - 1; i > 0; --i) next[i] = cur[i - 1];
      next[0] = 0;
      for (unsigned i = 0; i < m; ++i) {
        next[i] = static_cast<Coeff>((next[i] + top * d->reduction[0][i]) % d->q);
      }
      d->reduction.push_back(next);
      cur = next;
    }
  }
  if (r > 1) {
    std::vector<Coeff> red = d->modulus;
    for (auto& c : red) c %= p;
    GaloisRing field(p, 1, std::move(red));
    d->residue = field.d_;
  }
  d_ = std::move(d);
}

unsigned GaloisRing::p() const { return d_->p; }
unsigned GaloisRing::nilpotency() const { return d_->r; }
unsigned GaloisRing::degree() const { return d_->m; }
Coeff GaloisRing::characteristic() const { return d_->q; }
const std::vector<Coeff>& GaloisRing::modulus() const { return d_->modulus; }

std::optional<std::uint64_t> GaloisRing::cardinality() const {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d_->m; ++i) {
    if (total > UINT64_MAX / d_->q) return std::nullopt;
    total *= d_->q;
  }
  return total;
}

bool operator==(const GaloisRing& a, const GaloisRing& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->p == b.d_->p && a.d_->r == b.d_->r && a.d_->modulus == b.d_->modulus;
}

std::string GaloisRing::name() const {
  std::ostringstream os;
  if (d_->m == 1) {
    os << "Z_" << d_->q;
  } else {
    os << "GR(" << d_->q << "," << d_->m << ")";
  }
  return os.str();
}

RingElem GaloisRing::zero() const { return RingElem(CoeffVec(d_->m, 0)); }

RingElem GaloisRing::one() const {
  CoeffVec c(d_->m, 0);
  c[0] = 1 % d_->q;
  return RingElem(std::move(c));
}

RingElem GaloisRing::from_int(std::int64_t v) const {
  CoeffVec c(d_->m, 0);
  const auto q = static_cast<std::int64_t>(d_->q);
  c[0] = static_cast<Coeff>(((v % q) + q) % q);
  return RingElem(std::move(c));
}

RingElem GaloisRing::generator() const {
  if (d_->m == 1) return neg(from_int(d_->modulus[0]));
  CoeffVec c(d_->m, 0);
  c[1] = 1;
  return RingElem(std::move(c));
}

RingElem GaloisRing::from_coeffs(std::span<const std::int64_t> coords) const {
  if (coords.size() != d_->m) {
    throw PreconditionError("element of " + name() + " needs " + std::to_string(d_->m) +
                            " coordinates");
  }
  CoeffVec c(d_->m);
  const auto q = static_cast<std::int64_t>(d_->q);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    c[i] = static_cast<Coeff>(((coords[i] % q) + q) % q);
  }
  return RingElem(std::move(c));
}

bool GaloisRing::contains(const RingElem& a) const {
  if (a.size() != d_->m) return false;
  return std::all_of(a.coeffs().begin(), a.coeffs().end(), [&](Coeff c) { return c < d_->q; });
}

RingElem GaloisRing::add(const RingElem& a, const RingElem& b) const {
  RingElem c = a;
  add_assign(c, b);
  return c;
}

RingElem GaloisRing::sub(const RingElem& a, const RingElem& b) const {
  RingElem c = a;
  sub_assign(c, b);
  return c;
}

void GaloisRing::add_assign(RingElem& a, const RingElem& b) const {
  const Coeff q = d_->q;
  for (unsigned i = 0; i < d_->m; ++i) {
    Coeff s = a.coeffs()[i] + b[i];
    a.coeffs()[i] = s >= q ? s - q : s;
  }
}

void GaloisRing::sub_assign(RingElem& a, const RingElem& b) const {
  const Coeff q = d_->q;
  for (unsigned i = 0; i < d_->m; ++i) {
    Coeff x = a.coeffs()[i];
    a.coeffs()[i] = x >= b[i] ? x - b[i] : x + q - b[i];
  }
}

RingElem GaloisRing::neg(const RingElem& a) const {
  RingElem c = a;
  for (auto& x : c.coeffs()) x = x == 0 ? 0 : d_->q - x;
  return c;
}

RingElem GaloisRing::mul(const RingElem& a, const RingElem& b) const {
  const unsigned m = d_->m;
  const std::uint64_t q = d_->q;
  if (m == 1) {
    return RingElem(CoeffVec{static_cast<Coeff>(std::uint64_t{a[0]} * b[0] % q)});
  }
  boost::container::small_vector<std::uint64_t, 8> prod(2 * m - 1, 0);
  for (unsigned i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % q;
    }
  }
  for (unsigned k = 0; k + 1 < m; ++k) {
    const std::uint64_t c = prod[m + k];
    if (c == 0) continue;
    const CoeffVec& red = d_->reduction[k];
    for (unsigned i = 0; i < m; ++i) prod[i] = (prod[i] + c * red[i]) % q;
  }
  CoeffVec out(m);
  for (unsigned i = 0; i < m; ++i) out[i] = static_cast<Coeff>(prod[i]);
  return RingElem(std::move(out));
}

void GaloisRing::add_mul(RingElem& a, const RingElem& b, const RingElem& c) const {
  if (d_->m == 1) {
    const std::uint64_t q = d_->q;
    a.coeffs()[0] = static_cast<Coeff>((a[0] + std::uint64_t{b[0]} * c[0]) % q);
    return;
  }
  add_assign(a, mul(b, c));
}

RingElem GaloisRing::scale(const RingElem& a, std::int64_t k) const {
  const auto q = static_cast<std::int64_t>(d_->q);
  const auto kk = static_cast<std::uint64_t>(((k % q) + q) % q);
  RingElem c = a;
  for (auto& x : c.coeffs()) x = static_cast<Coeff>(x * kk % d_->q);
  return c;
}

RingElem GaloisRing::pow(RingElem a, std::uint64_t e) const {
  RingElem result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    e >>= 1;
    if (e > 0) a = mul(a, a);
  }
  return result;
}

bool GaloisRing::is_zero(const RingElem& a) const {
  return std::all_of(a.coeffs().begin(), a.coeffs().end(), [](Coeff c) { return c == 0; });
}

bool GaloisRing::is_one(const RingElem& a) const { return a == one(); }

bool GaloisRing::is_unit(const RingElem& a) const {
  return std::any_of(a.coeffs().begin(), a.coeffs().end(),
                     [&](Coeff c) { return c % d_->p != 0; });
}

unsigned GaloisRing::valuation(const RingElem& a) const {
  unsigned v = d_->r;
  for (Coeff c : a.coeffs()) {
    if (c == 0) continue;
    unsigned k = 0;
    while (c % d_->p == 0) {
      c /= d_->p;
      ++k;
    }
    v = std::min(v, k);
  }
  return v;
}

RingElem GaloisRing::invert(const RingElem& u) const {
  if (!is_unit(u)) throw MathError("element " + to_string(u) + " of " + name() + " is not a unit");
  RingElem v;
  if (d_->m == 1) {
    v = from_int(static_cast<std::int64_t>(inv_mod(u[0] % d_->p, d_->p)));
  } else {
    const GaloisRing field = residue_field();
    const RingElem ubar = residue(u);
    const std::uint64_t order = *field.cardinality();
    v = lift(field.pow(ubar, order - 2));
  }
  const RingElem two = from_int(2);
  for (unsigned prec = 1; prec < d_->r; prec *= 2) {
    v = mul(v, sub(two, mul(u, v)));
  }
  if (!is_one(mul(u, v))) throw MathError("inverse lifting failed");
  return v;
}

RingElem GaloisRing::divide_by_p_power(const RingElem& a, unsigned k) const {
  RingElem c = a;
  const Coeff pk = d_->p_pow[k];
  for (auto& x : c.coeffs()) {
    if (x % pk != 0) throw PreconditionError("element not divisible by p^k");
    x /= pk;
  }
  return c;
}

RingElem GaloisRing::reduce_mod_p_power(const RingElem& a, unsigned k) const {
  RingElem c = a;
  const Coeff pk = d_->p_pow[k];
  for (auto& x : c.coeffs()) x %= pk;
  return c;
}

RingElem GaloisRing::exact_quotient(const RingElem& a, const RingElem& b) const {
  const unsigned vb = valuation(b);
  if (vb == d_->r) {
    if (!is_zero(a)) throw MathError("division by zero");
    return zero();
  }
  if (valuation(a) < vb) throw MathError("divisor does not divide dividend");
  const RingElem unit = divide_by_p_power(b, vb);
  return mul(divide_by_p_power(a, vb), invert(unit));
}

GaloisRing GaloisRing::residue_field() const {
  if (!d_->residue) return *this;
  GaloisRing f = *this;
  f.d_ = d_->residue;
  return f;
}

FieldElem GaloisRing::residue(const RingElem& a) const {
  RingElem c = a;
  for (auto& x : c.coeffs()) x %= d_->p;
  return c;
}

RingElem GaloisRing::lift(const FieldElem& a) const {
  if (a.size() != d_->m) throw PreconditionError("residue element has wrong degree");
  return a;
}

RingElem GaloisRing::element_at(std::uint64_t index) const {
  CoeffVec c(d_->m);
  for (unsigned i = 0; i < d_->m; ++i) {
    c[i] = static_cast<Coeff>(index % d_->q);
    index /= d_->q;
  }
  return RingElem(std::move(c));
}

std::uint64_t GaloisRing::index_of(const RingElem& a) const {
  std::uint64_t idx = 0;
  for (std::size_t i = a.size(); i-- > 0;) idx = idx * d_->q + a[i];
  return idx;
}

std::vector<RingElem> GaloisRing::elements() const {
  const auto n = cardinality();
  if (!n || *n > (1ULL << 24)) throw PreconditionError("ring too large to enumerate");
  std::vector<RingElem> out;
  out.reserve(*n);
  for (std::uint64_t i = 0; i < *n; ++i) out.push_back(element_at(i));
  return out;
}

std::vector<RingElem> GaloisRing::units() const {
  std::vector<RingElem> out;
  for (auto& a : elements()) {
    if (is_unit(a)) out.push_back(std::move(a));
  }
  return out;
}

RingElem GaloisRing::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<Coeff> dist(0, d_->q - 1);
  CoeffVec c(d_->m);
  for (auto& x : c) x = dist(rng);
  return RingElem(std::move(c));
}

std::string GaloisRing::to_string(const RingElem& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << a[i];
    } else {
      if (a[i] != 1) os << a[i];
      os << "y";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

ModularIntegers::ModularIntegers(std::uint64_t modulus) : modulus_(modulus) {
  if (modulus < 2 || modulus >= (1ULL << 32)) {
    throw PreconditionError("modulus must lie in [2, 2^32)");
  }
}

ModularIntegers::Element ModularIntegers::from_int(std::int64_t v) const {
  const auto m = static_cast<std::int64_t>(modulus_);
  return static_cast<Element>(((v % m) + m) % m);
}

ModularIntegers::Element ModularIntegers::add(Element a, Element b) const {
  return (a + b) % modulus_;
}

ModularIntegers::Element ModularIntegers::sub(Element a, Element b) const {
  return (a + modulus_ - b) % modulus_;
}

ModularIntegers::Element ModularIntegers::mul(Element a, Element b) const {
  return a * b % modulus_;
}

ModularIntegers::Element ModularIntegers::pow(Element a, std::uint64_t e) const {
  Element r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool ModularIntegers::is_unit(Element a) const { return std::gcd(a, modulus_) == 1; }

}  // namespace polycyc
