#include "shintani/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>
#include <unordered_map>

namespace shintani {

namespace {

std::atomic<long> g_cap{kDefaultConductorCap};

struct Ctx {
  long N = 1;
  long phi = 1;
  // Φ_N = x^phi + Σ c x^i over the nonzero lower coefficients.
  std::vector<std::pair<long, long>> low;
  std::vector<long> primes;
};

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

int moebius(long n) {
  int m = 1;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  if (n > 1) m = -m;
  return m;
}

std::unique_ptr<Ctx> build_ctx(long N) {
  auto c = std::make_unique<Ctx>();
  c->N = N;
  c->primes = prime_factors(N);
  std::vector<Integer> poly{1};
  std::vector<long> divs;
  for (long d = 1; d <= N; ++d)
    if (N % d == 0) divs.push_back(d);
  for (long d : divs)
    if (moebius(N / d) == 1) {
      std::vector<Integer> next(poly.size() + d, 0);
      for (size_t k = 0; k < poly.size(); ++k) {
        next[k + d] += poly[k];
        next[k] -= poly[k];
      }
      poly = std::move(next);
    }
  for (long d : divs)
    if (moebius(N / d) == -1) {
      size_t qdeg = poly.size() - 1 - d;
      std::vector<Integer> q(qdeg + 1, 0);
      for (size_t k = 0; k <= qdeg; ++k) {
        q[k] = -poly[k];
        if (k >= static_cast<size_t>(d)) q[k] += q[k - d];
      }
      poly = std::move(q);
    }
  c->phi = static_cast<long>(poly.size()) - 1;
  for (long i = 0; i < c->phi; ++i)
    if (poly[i] != 0) c->low.emplace_back(i, poly[i].get_si());
  return c;
}

const Ctx& context(long N) {
  static std::mutex mu;
  static std::unordered_map<long, std::unique_ptr<Ctx>> cache;
  thread_local const Ctx* last = nullptr;
  if (last && last->N == N) return *last;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it == cache.end()) it = cache.emplace(N, build_ctx(N)).first;
  last = it->second.get();
  return *last;
}

void check_cap(long N) {
  if (N > g_cap.load())
    throw ConductorOverflow("conductor " + std::to_string(N) + " exceeds cap " +
                            std::to_string(g_cap.load()));
}

// Reduces a in place modulo Φ_N; the result has length φ(N).
void reduce(const Ctx& c, std::vector<Integer>& a) {
  for (long t = static_cast<long>(a.size()) - 1; t >= c.phi; --t) {
    if (a[t] == 0) continue;
    mpz_ptr top = a[t].get_mpz_t();
    for (auto [i, ci] : c.low) {
      mpz_ptr dst = a[t - c.phi + i].get_mpz_t();
      if (ci > 0)
        mpz_submul_ui(dst, top, static_cast<unsigned long>(ci));
      else
        mpz_addmul_ui(dst, top, static_cast<unsigned long>(-ci));
    }
    a[t] = 0;
  }
  a.resize(c.phi, Integer(0));
}

long inverse_mod(long a, long m) {
  if (m == 1) return 0;
  long t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
  while (nr != 0) {
    long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return ((t % m) + m) % m;
}

void normalize_content(std::vector<Integer>& num, Integer& den) {
  if (den < 0) {
    den = -den;
    for (auto& x : num) x = -x;
  }
  Integer g = den;
  for (const auto& x : num) {
    if (g == 1) break;
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g != 1) {
    den /= g;
    for (auto& x : num)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

// Raises a reduced vector at conductor M to conductor N (M | N).
std::vector<Integer> raise(const std::vector<Integer>& v, long M, long N) {
  const Ctx& c = context(N);
  long step = N / M;
  std::vector<Integer> out(std::max<long>(c.phi, static_cast<long>(v.size() - 1) * step + 1), 0);
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out[i * step] = v[i];
  reduce(c, out);
  return out;
}

bool try_lower(long& N, std::vector<Integer>& num, Integer& den, long p) {
  long M = N / p;
  if (M % p == 0) {
    for (size_t i = 0; i < num.size(); ++i)
      if (num[i] != 0 && i % p != 0) return false;
    std::vector<Integer> out(num.size() / p);
    for (size_t j = 0; j < out.size(); ++j) out[j] = std::move(num[j * p]);
    num = std::move(out);
    N = M;
    return true;
  }
  // p exactly divides N: compare x with its relative trace down to Q(ζ_M).
  long s = inverse_mod(p, M);
  long t = inverse_mod(M % p, p);
  std::vector<Integer> y(M, 0);
  for (size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    long alpha = M == 1 ? 0 : static_cast<long>((s * static_cast<long>(i)) % M);
    long beta = (t * static_cast<long>(i)) % p;
    if (beta == 0)
      mpz_addmul_ui(y[alpha].get_mpz_t(), num[i].get_mpz_t(), static_cast<unsigned long>(p - 1));
    else
      y[alpha] -= num[i];
  }
  reduce(context(M), y);
  std::vector<Integer> back = raise(y, M, N);
  for (size_t i = 0; i < num.size(); ++i) {
    Integer scaled = num[i] * (p - 1);
    if (back[i] != scaled) return false;
  }
  num = std::move(y);
  den *= (p - 1);
  N = M;
  normalize_content(num, den);
  return true;
}

}  // namespace

void set_conductor_cap(long cap) {
  if (cap < 1) throw MathError("conductor cap must be positive");
  g_cap.store(cap);
}

long conductor_cap() { return g_cap.load(); }

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

long euler_phi(long N) { return context(N).phi; }

CycNum CycNum::from_group_ring(long N, std::vector<Integer> v, Integer den) {
  check_cap(N);
  const Ctx& c = context(N);
  if (static_cast<long>(v.size()) > N) {
    for (size_t i = N; i < v.size(); ++i)
      if (v[i] != 0) v[i % N] += v[i];
    v.resize(N);
  }
  reduce(c, v);
  normalize_content(v, den);
  CycNum r;
  bool zero = true;
  bool rational = true;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      zero = false;
      if (i > 0) rational = false;
    }
  if (zero) return r;
  if (rational) {
    r.num_ = {v[0]};
    r.den_ = den;
    return r;
  }
  bool changed = true;
  while (changed && N > 1) {
    changed = false;
    for (long p : context(N).primes)
      if (try_lower(N, v, den, p)) {
        changed = true;
        break;
      }
  }
  r.N_ = N;
  r.num_ = std::move(v);
  r.den_ = std::move(den);
  return r;
}

CycNum CycNum::root_of_unity(const Rational& q) {
  Rational f = q - Rational(floor_q(q));
  long N = f.get_den().get_si();
  check_cap(N);
  long k = f.get_num().get_si();
  std::vector<Integer> v(N, 0);
  v[k] = 1;
  return from_group_ring(N, std::move(v), 1);
}

CycNum CycNum::from_coefficients(long N, const std::vector<Rational>& c) {
  if (N < 1) throw MathError("conductor must be positive");
  check_cap(N);
  Integer den = 1;
  for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> v(std::max<size_t>(c.size(), 1), 0);
  for (size_t i = 0; i < c.size(); ++i) v[i] = c[i].get_num() * (den / c[i].get_den());
  return from_group_ring(N, std::move(v), den);
}

std::vector<Rational> CycNum::coefficients() const {
  std::vector<Rational> out(num_.size());
  for (size_t i = 0; i < num_.size(); ++i) {
    out[i] = Rational(num_[i], den_);
    out[i].canonicalize();
  }
  return out;
}

std::vector<Rational> CycNum::coefficients_at(long M) const {
  if (M % N_ != 0) throw MathError("coefficients_at: target is not a multiple of the conductor");
  std::vector<Integer> v = raise(num_, N_, M);
  std::vector<Rational> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    out[i] = Rational(v[i], den_);
    out[i].canonicalize();
  }
  return out;
}

Rational CycNum::rational_value() const {
  if (N_ != 1) throw MathError("rational_value: element is not rational");
  Rational r = frac(num_[0], den_);
  return r;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.num_) x = -x;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  long L = lcm_long(N_, o.N_);
  check_cap(L);
  Integer D;
  mpz_lcm(D.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
  Integer fa = D / den_, fb = D / o.den_;
  if (N_ == o.N_) {
    std::vector<Integer> v(num_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = num_[i] * fa + o.num_[i] * fb;
    return *this = from_group_ring(L, std::move(v), D);
  }
  std::vector<Integer> v(L, 0);
  long sa = L / N_, sb = L / o.N_;
  for (size_t i = 0; i < num_.size(); ++i)
    if (num_[i] != 0) mpz_addmul(v[i * sa].get_mpz_t(), num_[i].get_mpz_t(), fa.get_mpz_t());
  for (size_t j = 0; j < o.num_.size(); ++j)
    if (o.num_[j] != 0) mpz_addmul(v[j * sb].get_mpz_t(), o.num_[j].get_mpz_t(), fb.get_mpz_t());
  return *this = from_group_ring(L, std::move(v), D);
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const Rational& c) {
  if (c == 0) return *this = CycNum();
  if (c == 1) return *this;
  for (auto& x : num_) x *= c.get_num();
  den_ *= c.get_den();
  normalize_content(num_, den_);
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (a.is_zero() || b.is_zero()) return CycNum();
  if (a.N_ == 1) return b * frac(a.num_[0], a.den_);
  if (b.N_ == 1) return a * frac(b.num_[0], b.den_);
  long L = lcm_long(a.N_, b.N_);
  check_cap(L);
  Integer den = a.den_ * b.den_;
  if (a.N_ == b.N_) {
    std::vector<Integer> v(a.num_.size() + b.num_.size() - 1, 0);
    for (size_t i = 0; i < a.num_.size(); ++i) {
      if (a.num_[i] == 0) continue;
      for (size_t j = 0; j < b.num_.size(); ++j)
        if (b.num_[j] != 0)
          mpz_addmul(v[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
    return CycNum::from_group_ring(L, std::move(v), den);
  }
  std::vector<Integer> v(L, 0);
  long sa = L / a.N_, sb = L / b.N_;
  for (size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    long base = static_cast<long>(i) * sa % L;
    for (size_t j = 0; j < b.num_.size(); ++j) {
      if (b.num_[j] == 0) continue;
      long idx = base + static_cast<long>(j) * sb;
      if (idx >= L) idx -= L;
      mpz_addmul(v[idx].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  return CycNum::from_group_ring(L, std::move(v), den);
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

CycNum CycNum::inv() const {
  if (is_zero()) throw MathError("inversion of zero");
  if (N_ == 1) return CycNum(frac(den_, num_[0]));
  // Solve (multiplication-by-num matrix)·y = e_0 over Q.
  const Ctx& c = context(N_);
  long phi = c.phi;
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
  std::vector<Integer> col = num_;
  for (long k = 0; k < phi; ++k) {
    for (long i = 0; i < phi; ++i) m[i][k] = col[i];
    col.insert(col.begin(), Integer(0));
    reduce(c, col);
  }
  m[0][phi] = 1;
  for (long k = 0; k < phi; ++k) {
    long p = k;
    while (m[p][k] == 0) ++p;
    std::swap(m[p], m[k]);
    Rational piv = m[k][k];
    for (long j = k; j <= phi; ++j) m[k][j] /= piv;
    for (long r = 0; r < phi; ++r) {
      if (r == k || m[r][k] == 0) continue;
      Rational f = m[r][k];
      for (long j = k; j <= phi; ++j) m[r][j] -= f * m[k][j];
    }
  }
  std::vector<Rational> y(phi);
  for (long i = 0; i < phi; ++i) y[i] = m[i][phi] * den_;
  return from_coefficients(N_, y);
}

std::size_t CycNum::hash() const {
  auto mix = [](std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  };
  std::size_t h = static_cast<std::size_t>(N_);
  h = mix(h, mpz_get_ui(den_.get_mpz_t()));
  for (const auto& x : num_)
    h = mix(h, mpz_get_ui(x.get_mpz_t()) ^ static_cast<std::size_t>(mpz_sgn(x.get_mpz_t()) + 1));
  return h;
}

std::complex<double> CycNum::approx() const {
  std::complex<double> s = 0;
  for (size_t i = 0; i < num_.size(); ++i)
    s += num_[i].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / N_);
  return s / den_.get_d();
}

namespace {

// Kronecker substitution: a polynomial with integer coefficients packed as
// Σ c_e 2^{b·e}, positive and negative parts kept in separate limb buffers.
struct Packed {
  std::vector<mp_limb_t> pos, neg;
};

void or_shifted(std::vector<mp_limb_t>& buf, mpz_srcptr c, size_t bit) {
  size_t n = mpz_size(c);
  const mp_limb_t* p = mpz_limbs_read(c);
  size_t w = bit / GMP_NUMB_BITS;
  unsigned s = bit % GMP_NUMB_BITS;
  for (size_t i = 0; i < n; ++i) {
    buf[w + i] |= p[i] << s;
    if (s) buf[w + i + 1] |= p[i] >> (GMP_NUMB_BITS - s);
  }
}

void limbs_to_mpz(mpz_ptr z, const std::vector<mp_limb_t>& buf) {
  size_t n = buf.size();
  while (n && buf[n - 1] == 0) --n;
  mp_limb_t* d = mpz_limbs_write(z, n ? n : 1);
  std::copy(buf.begin(), buf.begin() + n, d);
  mpz_limbs_finish(z, static_cast<mp_size_t>(n));
}

// Signed value of a packed polynomial with exponents (i·stride) for the nonzero c_i.
void pack(mpz_ptr out, const std::vector<Integer>& c, long stride, size_t b, size_t len_bits) {
  std::vector<mp_limb_t> pos(len_bits / GMP_NUMB_BITS + 2, 0), neg(pos.size(), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    int sg = sgn(c[i]);
    if (sg == 0) continue;
    or_shifted(sg > 0 ? pos : neg, c[i].get_mpz_t(), b * static_cast<size_t>(i * stride));
  }
  Integer m;
  limbs_to_mpz(out, pos);
  limbs_to_mpz(m.get_mpz_t(), neg);
  mpz_sub(out, out, m.get_mpz_t());
}

size_t max_bits(const std::vector<Integer>& c) {
  size_t b = 0;
  for (const auto& x : c)
    if (x != 0) b = std::max(b, mpz_sizeinbase(x.get_mpz_t(), 2));
  return b;
}

size_t nonzeros(const std::vector<Integer>& c) {
  return static_cast<size_t>(std::count_if(c.begin(), c.end(), [](const Integer& x) { return x != 0; }));
}

}  // namespace

CycAccum::CycAccum(long L) : L_(L), acc_(L, 0) {
  check_cap(L);
}

void CycAccum::rescale_to(const Integer& den) {
  if (den == den_) return;
  Integer f = den / den_;
  for (auto& x : acc_)
    if (x != 0) x *= f;
  den_ = den;
}

void CycAccum::add(const CycNum& x) { add(x, Rational(1)); }

void CycAccum::add(const CycNum& x, const Rational& c) {
  if (x.is_zero() || c == 0) return;
  if (L_ % x.N_ != 0) throw MathError("CycAccum: conductor does not divide the modulus");
  Integer tden = x.den_ * c.get_den();
  Integer D;
  mpz_lcm(D.get_mpz_t(), den_.get_mpz_t(), tden.get_mpz_t());
  rescale_to(D);
  Integer f = D / tden * c.get_num();
  long s = L_ / x.N_;
  for (size_t i = 0; i < x.num_.size(); ++i)
    if (x.num_[i] != 0) mpz_addmul(acc_[i * s].get_mpz_t(), x.num_[i].get_mpz_t(), f.get_mpz_t());
  empty_ = false;
}

void CycAccum::add_shifted(const CycNum& x, long shift) {
  if (x.is_zero()) return;
  if (L_ % x.N_ != 0) throw MathError("CycAccum: conductor does not divide the modulus");
  Integer D;
  mpz_lcm(D.get_mpz_t(), den_.get_mpz_t(), x.den_.get_mpz_t());
  rescale_to(D);
  Integer f = D / x.den_;
  long s = L_ / x.N_;
  long base = ((shift % L_) + L_) % L_;
  for (size_t i = 0; i < x.num_.size(); ++i) {
    if (x.num_[i] == 0) continue;
    long idx = (base + static_cast<long>(i) * s) % L_;
    mpz_addmul(acc_[idx].get_mpz_t(), x.num_[i].get_mpz_t(), f.get_mpz_t());
  }
  empty_ = false;
}

void CycAccum::addmul(const CycNum& x, const CycNum& y) {
  if (x.is_zero() || y.is_zero()) return;
  if (L_ % x.N_ != 0 || L_ % y.N_ != 0)
    throw MathError("CycAccum: conductor does not divide the modulus");
  Integer tden = x.den_ * y.den_;
  Integer D;
  mpz_lcm(D.get_mpz_t(), den_.get_mpz_t(), tden.get_mpz_t());
  rescale_to(D);
  Integer f = D / tden;
  size_t nx = nonzeros(x.num_), ny = nonzeros(y.num_);
  if (nx * ny >= 256) {
    addmul_kronecker(x, y, f);
  } else {
    addmul_schoolbook(x, y, f);
  }
  empty_ = false;
}

void CycAccum::addmul_schoolbook(const CycNum& x, const CycNum& y, const Integer& f) {
  long sx = L_ / x.N_, sy = L_ / y.N_;
  std::vector<long> ypos;
  std::vector<const Integer*> yval;
  for (size_t j = 0; j < y.num_.size(); ++j)
    if (y.num_[j] != 0) {
      ypos.push_back(static_cast<long>(j) * sy);
      yval.push_back(&y.num_[j]);
    }
  Integer xi;
  for (size_t i = 0; i < x.num_.size(); ++i) {
    if (x.num_[i] == 0) continue;
    xi = x.num_[i];
    if (f != 1) xi *= f;
    long base = static_cast<long>(i) * sx % L_;
    for (size_t k = 0; k < ypos.size(); ++k) {
      long idx = base + ypos[k];
      if (idx >= L_) idx -= L_;
      mpz_addmul(acc_[idx].get_mpz_t(), xi.get_mpz_t(), yval[k]->get_mpz_t());
    }
  }
}

// One big-integer product in place of nx·ny coefficient products.
void CycAccum::addmul_kronecker(const CycNum& x, const CycNum& y, const Integer& f) {
  long N = lcm_long(x.N_, y.N_);
  long ex = N / x.N_, ey = N / y.N_, out_stride = L_ / N;
  size_t bx = max_bits(x.num_) + (f != 1 ? mpz_sizeinbase(f.get_mpz_t(), 2) : 0);
  size_t by = max_bits(y.num_);
  size_t nmin = std::min(nonzeros(x.num_), nonzeros(y.num_));
  size_t b = bx + by + mpz_sizeinbase(Integer(nmin).get_mpz_t(), 2) + 1;
  size_t K = static_cast<size_t>(2 * N - 1);
  Integer X, Y, Z;
  if (f != 1) {
    std::vector<Integer> xs(x.num_.size());
    for (size_t i = 0; i < xs.size(); ++i)
      if (x.num_[i] != 0) xs[i] = x.num_[i] * f;
    pack(X.get_mpz_t(), xs, ex, b, b * N);
  } else {
    pack(X.get_mpz_t(), x.num_, ex, b, b * N);
  }
  pack(Y.get_mpz_t(), y.num_, ey, b, b * N);
  Z = X * Y;
  // Offset every digit by 2^{b-1} so all digits are nonnegative.
  std::vector<mp_limb_t> off(b * K / GMP_NUMB_BITS + 2, 0);
  for (size_t k = 0; k < K; ++k) {
    size_t bit = b * k + b - 1;
    off[bit / GMP_NUMB_BITS] |= mp_limb_t(1) << (bit % GMP_NUMB_BITS);
  }
  Integer O;
  limbs_to_mpz(O.get_mpz_t(), off);
  Z += O;
  Integer half, digit;
  mpz_setbit(half.get_mpz_t(), b - 1);
  size_t zn = mpz_size(Z.get_mpz_t());
  const mp_limb_t* zp = mpz_limbs_read(Z.get_mpz_t());
  std::vector<mp_limb_t> tmp(b / GMP_NUMB_BITS + 2);
  for (size_t k = 0; k < K; ++k) {
    size_t bit = b * k, w = bit / GMP_NUMB_BITS;
    unsigned s = bit % GMP_NUMB_BITS;
    size_t nl = (b + s + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
    std::fill(tmp.begin(), tmp.end(), 0);
    for (size_t i = 0; i < nl && w + i < zn; ++i) tmp[i] = zp[w + i];
    if (s) mpn_rshift(tmp.data(), tmp.data(), static_cast<mp_size_t>(nl), s);
    size_t top = b / GMP_NUMB_BITS;
    if (b % GMP_NUMB_BITS) tmp[top] &= (mp_limb_t(1) << (b % GMP_NUMB_BITS)) - 1;
    for (size_t i = top + 1; i < tmp.size(); ++i) tmp[i] = 0;
    limbs_to_mpz(digit.get_mpz_t(), tmp);
    if (digit == half) continue;
    long idx = static_cast<long>(k % static_cast<size_t>(N)) * out_stride;
    mpz_add(acc_[idx].get_mpz_t(), acc_[idx].get_mpz_t(), digit.get_mpz_t());
    mpz_sub(acc_[idx].get_mpz_t(), acc_[idx].get_mpz_t(), half.get_mpz_t());
  }
}

CycNum CycAccum::finish() const {
  if (empty_) return CycNum();
  return CycNum::from_group_ring(L_, acc_, den_);
}

}  // namespace shintani
