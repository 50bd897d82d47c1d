#include "rotren/rotation_number.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace rotren {

namespace {

constexpr long long kCoeffCap = 1'000'000'000;

// Working form of an eventually periodic CF tail [0; pre..., (per...)].
struct CF {
  std::vector<long long> pre;
  std::vector<long long> per;
};

long long pop_head(CF& cf) {
  if (!cf.pre.empty()) {
    long long h = cf.pre.front();
    cf.pre.erase(cf.pre.begin());
    return h;
  }
  long long h = cf.per.front();
  std::rotate(cf.per.begin(), cf.per.begin() + 1, cf.per.end());
  return h;
}

void push_head(CF& cf, long long h) { cf.pre.insert(cf.pre.begin(), h); }

bool repeats_with(const std::vector<long long>& per, size_t d) {
  for (size_t i = d; i < per.size(); ++i) {
    if (per[i] != per[i - d]) return false;
  }
  return true;
}

// Shortest-preperiod, minimal-period form. Unique for a given coefficient
// sequence, which is what makes exact equality of quadratics a vector
// comparison.
void normalize(CF& cf) {
  for (size_t d = 1; d < cf.per.size(); ++d) {
    if (cf.per.size() % d == 0 && repeats_with(cf.per, d)) {
      cf.per.resize(d);
      break;
    }
  }
  while (!cf.pre.empty() && cf.pre.back() == cf.per.back()) {
    cf.pre.pop_back();
    std::rotate(cf.per.begin(), cf.per.end() - 1, cf.per.end());
  }
}

// CF of 1-x from the CF of x, for irrational x in (0,1):
//   [0;b1,b2,...] -> [0;1,b1-1,b2,...]   if b1 > 1
//   [0;1,b2,b3,...] -> [0;b2+1,b3,...]   if b1 = 1
CF complement_of(CF cf) {
  long long b1 = pop_head(cf);
  if (b1 > 1) {
    push_head(cf, b1 - 1);
    push_head(cf, 1);
  } else {
    long long b2 = pop_head(cf);
    push_head(cf, b2 + 1);
  }
  normalize(cf);
  return cf;
}

// Euclidean CF of p/q in (0,1), lowest terms: the quotient sequence of
// gcd(q,p). Ends with a coefficient >= 2.
std::vector<long long> cf_of_rational(long long p, long long q) {
  std::vector<long long> cf;
  long long x = q, y = p;
  while (y != 0) {
    cf.push_back(x / y);
    long long r = x % y;
    x = y;
    y = r;
  }
  return cf;
}

// Backward evaluation of a finite CF [0;a1,...,ak] as an exact fraction.
std::pair<long long, long long> rational_of_cf(const std::vector<long long>& cf) {
  long long n = 1, d = cf.back();
  for (size_t i = cf.size() - 1; i-- > 0;) {
    long long nn = d;
    long long dd = cf[i] * d + n;
    n = nn;
    d = dd;
  }
  return {n, d};
}

long long mod_inverse(long long p, long long q) {
  long long r0 = q, r1 = p, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long k = r0 / r1;
    long long r2 = r0 - k * r1;
    long long t2 = t0 - k * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  return ((t0 % q) + q) % q;
}

void validate_coeffs(const std::vector<long long>& v, const char* what) {
  for (long long c : v) {
    if (c < 1 || c > kCoeffCap) {
      throw DomainError(std::string(what) + " coefficients must lie in [1, 1e9]");
    }
  }
}

long long parse_ll(std::string_view s, size_t& pos) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
  if (ec != std::errc() || ptr == s.data() + pos) {
    throw ParseError("expected an integer in rotation-number literal");
  }
  pos = static_cast<size_t>(ptr - s.data());
  return v;
}

}  // namespace

RotationNumber RotationNumber::zero() { return RotationNumber(); }

RotationNumber RotationNumber::rational(long long p, long long q) {
  if (q < 1) throw DomainError("rational rotation number needs q >= 1");
  if (p < 0 || p >= q) throw DomainError("rotation numbers live in [0,1)");
  long long g = std::gcd(p, q);
  RotationNumber r;
  r.rational_ = true;
  r.p_ = p / g;
  r.q_ = p == 0 ? 1 : q / g;
  return r;
}

RotationNumber RotationNumber::quadratic(std::vector<long long> preperiod,
                                         std::vector<long long> period,
                                         Side side) {
  if (period.empty()) throw DomainError("quadratic rotation number needs a nonempty period");
  validate_coeffs(preperiod, "preperiod");
  validate_coeffs(period, "period");
  CF cf{std::move(preperiod), std::move(period)};
  normalize(cf);
  RotationNumber r;
  r.rational_ = false;
  r.side_ = side;
  r.pre_ = std::move(cf.pre);
  r.per_ = std::move(cf.per);
  return r;
}

long long RotationNumber::num() const {
  if (!rational_) throw DomainError("num() called on a quadratic rotation number");
  return p_;
}

long long RotationNumber::den() const {
  if (!rational_) throw DomainError("den() called on a quadratic rotation number");
  return q_;
}

Side RotationNumber::side() const {
  if (rational_) throw DomainError("side() called on a rational rotation number");
  return side_;
}

const std::vector<long long>& RotationNumber::preperiod() const {
  if (rational_) throw DomainError("preperiod() called on a rational rotation number");
  return pre_;
}

const std::vector<long long>& RotationNumber::period() const {
  if (rational_) throw DomainError("period() called on a rational rotation number");
  return per_;
}

RotationNumber RotationNumber::canonical() const {
  if (rational_ || side_ == Side::direct) return *this;
  CF converted = complement_of(CF{pre_, per_});
  return quadratic(std::move(converted.pre), std::move(converted.per), Side::direct);
}

double RotationNumber::value() const {
  if (rational_) return static_cast<double>(p_) / static_cast<double>(q_);
  constexpr int kDepth = 64;
  long long coeff[kDepth];
  size_t n_pre = pre_.size();
  for (int i = 0; i < kDepth; ++i) {
    coeff[i] = static_cast<size_t>(i) < n_pre
                   ? pre_[static_cast<size_t>(i)]
                   : per_[(static_cast<size_t>(i) - n_pre) % per_.size()];
  }
  double x = 0.0;
  for (int i = kDepth - 1; i >= 0; --i) {
    x = 1.0 / (static_cast<double>(coeff[i]) + x);
  }
  return side_ == Side::complement ? 1.0 - x : x;
}

std::string RotationNumber::str() const {
  if (rational_) {
    if (p_ == 0) return "0";
    return std::to_string(p_) + "/" + std::to_string(q_);
  }
  std::string out = side_ == Side::complement ? "1-[0;" : "[0;";
  for (long long c : pre_) {
    out += std::to_string(c);
    out += ',';
  }
  out += '(';
  for (size_t i = 0; i < per_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(per_[i]);
  }
  out += ")]";
  return out;
}

bool RotationNumber::operator==(const RotationNumber& other) const {
  if (rational_ != other.rational_) return false;
  if (rational_) return p_ == other.p_ && q_ == other.q_;
  if (side_ == other.side_) return pre_ == other.pre_ && per_ == other.per_;
  RotationNumber a = canonical();
  RotationNumber b = other.canonical();
  return a.pre_ == b.pre_ && a.per_ == b.per_;
}

RotationNumber RotationNumber::parse(std::string_view text) {
  size_t lo = text.find_first_not_of(" \t");
  size_t hi = text.find_last_not_of(" \t");
  if (lo == std::string_view::npos) throw ParseError("empty rotation-number literal");
  std::string_view s = text.substr(lo, hi - lo + 1);

  if (s == "0") return zero();

  if (s.find('[') == std::string_view::npos) {
    size_t pos = 0;
    long long p = parse_ll(s, pos);
    if (pos >= s.size() || s[pos] != '/') throw ParseError("expected p/q rational literal");
    ++pos;
    long long q = parse_ll(s, pos);
    if (pos != s.size()) throw ParseError("trailing characters after rational literal");
    if (q < 1 || p < 0 || p >= q) throw ParseError("rational literal must satisfy 0 <= p < q");
    return rational(p, q);
  }

  Side side = Side::direct;
  size_t pos = 0;
  if (s.rfind("1-", 0) == 0) {
    side = Side::complement;
    pos = 2;
  }
  if (s.substr(pos, 3) != "[0;") throw ParseError("quadratic literal must start with [0;");
  pos += 3;

  std::vector<long long> pre, per;
  bool in_period = false, period_closed = false;
  while (pos < s.size() && s[pos] != ']') {
    if (s[pos] == '(') {
      if (in_period || period_closed) throw ParseError("unexpected '(' in quadratic literal");
      in_period = true;
      ++pos;
      continue;
    }
    if (s[pos] == ')') {
      if (!in_period || per.empty()) throw ParseError("unexpected ')' in quadratic literal");
      in_period = false;
      period_closed = true;
      ++pos;
      continue;
    }
    if (s[pos] == ',') {
      ++pos;
      continue;
    }
    long long c = parse_ll(s, pos);
    if (period_closed) throw ParseError("coefficients after the period group");
    (in_period ? per : pre).push_back(c);
  }
  if (pos >= s.size() || s[pos] != ']' || pos + 1 != s.size()) {
    throw ParseError("quadratic literal must end with )]");
  }
  if (!period_closed) throw ParseError("quadratic literal needs a (period) group");
  for (long long c : pre) {
    if (c < 1 || c > kCoeffCap) throw ParseError("CF coefficients must lie in [1, 1e9]");
  }
  for (long long c : per) {
    if (c < 1 || c > kCoeffCap) throw ParseError("CF coefficients must lie in [1, 1e9]");
  }
  return quadratic(std::move(pre), std::move(per), side);
}

RotationNumber prime_renormalize(const RotationNumber& theta) {
  if (theta.is_rational()) {
    long long p = theta.num(), q = theta.den();
    if (p == 0) return RotationNumber::zero();
    if (2 * p < q) return RotationNumber::rational(p, q - p);
    if (2 * p == q) return RotationNumber::zero();
    return RotationNumber::rational(2 * p - q, p);
  }
  return cf_prime_step(theta).canonical();
}

RotationNumber cf_prime_step(const RotationNumber& theta) {
  if (theta.is_rational()) {
    if (theta.is_zero()) return RotationNumber::zero();
    std::vector<long long> cf = cf_of_rational(theta.num(), theta.den());
    if (cf[0] > 1) {
      cf[0] -= 1;
      if (cf.size() == 1 && cf[0] == 1) return RotationNumber::zero();  // value 1 = 0 mod 1
      auto [n, d] = rational_of_cf(cf);
      return RotationNumber::rational(n, d);
    }
    cf.erase(cf.begin());
    auto [n, d] = rational_of_cf(cf);
    return RotationNumber::rational(d - n, d);
  }

  CF cf{theta.preperiod(), theta.period()};
  Side side = theta.side();
  long long a1 = pop_head(cf);
  if (a1 > 1) {
    push_head(cf, a1 - 1);
  } else {
    side = side == Side::direct ? Side::complement : Side::direct;
  }
  return RotationNumber::quadratic(std::move(cf.pre), std::move(cf.per), side);
}

OrbitSignature orbit_signature(const RotationNumber& theta, int max_steps) {
  if (max_steps < 1) throw DomainError("orbit_signature needs max_steps >= 1");
  OrbitSignature sig;
  std::vector<RotationNumber> seen;
  RotationNumber cur = theta.canonical();
  for (int step = 0; step <= max_steps; ++step) {
    if (cur.is_zero()) {
      sig.kind = OrbitSignature::Kind::fixed;
      sig.steps_to_fixed = step;
      return sig;
    }
    for (size_t i = 0; i < seen.size(); ++i) {
      if (seen[i] == cur) {
        sig.kind = OrbitSignature::Kind::periodic;
        sig.preperiod = static_cast<int>(i);
        sig.period = step - static_cast<int>(i);
        return sig;
      }
    }
    seen.push_back(cur);
    cur = prime_renormalize(cur);
  }
  return sig;
}

bool is_bounded_type(const RotationNumber& theta, long long bound) {
  if (bound < 1) throw DomainError("is_bounded_type needs bound >= 1");
  if (theta.is_rational()) {
    throw DomainError("is_bounded_type applies to irrational rotation numbers only");
  }
  RotationNumber direct = theta.canonical();
  auto max_coeff = [](const CF& cf) {
    long long m = 0;
    for (long long c : cf.pre) m = std::max(m, c);
    for (long long c : cf.per) m = std::max(m, c);
    return m;
  };
  CF direct_cf{direct.preperiod(), direct.period()};
  if (max_coeff(direct_cf) <= bound) return true;
  return max_coeff(complement_of(direct_cf)) <= bound;
}

int fast_step_count(const RotationNumber& theta) {
  if (theta.is_zero()) throw DomainError("fast_step_count is undefined at 0");
  if (theta.is_rational()) {
    long long p = theta.num(), q = theta.den();
    long long mp = std::min(p, q - p);
    if (mp == 1) return static_cast<int>(q - 1);  // degenerate branch: 1/m or 1-1/m
    return static_cast<int>(q / mp);
  }
  RotationNumber can = theta.canonical();
  CF cf{can.preperiod(), can.period()};
  long long a1 = pop_head(cf);
  if (a1 >= 2) return static_cast<int>(a1);
  // theta > 1/2: the short side is the complement, whose CF starts with a2+1.
  long long a2 = pop_head(cf);
  return static_cast<int>(a2 + 1);
}

RotationNumber fast_renormalize(const RotationNumber& theta) {
  int n = fast_step_count(theta);
  RotationNumber cur = theta;
  for (int i = 0; i < n; ++i) cur = prime_renormalize(cur);
  return cur;
}

ReturnTimes return_times(long long p, long long q) {
  if (q < 3) throw DomainError("return_times needs q >= 3");
  if (p < 1 || p >= q || std::gcd(p, q) != 1) {
    throw DomainError("return_times needs p/q in lowest terms with 1 <= p < q");
  }
  long long b = mod_inverse(p, q);
  return ReturnTimes{q - b, b};
}

std::vector<Convergent> convergents(const RotationNumber& theta, long long q_max) {
  if (q_max < 1) throw DomainError("convergents needs q_max >= 1");
  RotationNumber can = theta.canonical();

  std::vector<long long> finite;
  const std::vector<long long>* pre = nullptr;
  const std::vector<long long>* per = nullptr;
  if (can.is_rational()) {
    if (can.is_zero()) return {};
    finite = cf_of_rational(can.num(), can.den());
  } else {
    pre = &can.preperiod();
    per = &can.period();
  }
  auto coeff_at = [&](size_t i, bool& ok) -> long long {
    if (can.is_rational()) {
      ok = i < finite.size();
      return ok ? finite[i] : 0;
    }
    ok = true;
    if (i < pre->size()) return (*pre)[i];
    return (*per)[(i - pre->size()) % per->size()];
  };

  std::vector<Convergent> out;
  // Seeds h_{-1}/k_{-1} = 1/0 and h_0/k_0 = 0/1 (a0 = 0 already absorbed).
  __int128 h2 = 1, h1 = 0, k2 = 0, k1 = 1;
  for (size_t n = 0;; ++n) {
    bool ok = false;
    long long a = coeff_at(n, ok);
    if (!ok) break;
    __int128 h = static_cast<__int128>(a) * h1 + h2;
    __int128 k = static_cast<__int128>(a) * k1 + k2;
    if (k > q_max) break;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    if (h > 0 && h < k) {
      Convergent c;
      c.p = static_cast<long long>(h);
      c.q = static_cast<long long>(k);
      // odd-indexed convergents of [0;a1,a2,...] sit above theta
      c.side = n % 2 == 0 ? ApproachSide::right : ApproachSide::left;
      out.push_back(c);
    }
  }
  return out;
}

std::vector<PrimeFactor> anti_prime_factorize(long long p, long long q) {
  if (q < 3) throw DomainError("anti_prime_factorize needs q >= 3");
  if (p < 1 || p >= q || std::gcd(p, q) != 1) {
    throw DomainError("anti_prime_factorize needs p/q in lowest terms with 1 <= p < q");
  }
  std::vector<PrimeFactor> out;
  while (q > 3) {
    if (2 * p < q) {
      out.push_back(PrimeFactor::p13);
      q -= p;
    } else {
      out.push_back(PrimeFactor::p23);
      long long np = 2 * p - q;
      q = p;
      p = np;
    }
  }
  out.push_back(p == 1 ? PrimeFactor::p13 : PrimeFactor::p23);
  return out;
}

}  // namespace rotren
