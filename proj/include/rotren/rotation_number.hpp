#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rotren/errors.hpp"

namespace rotren {

// Which side of the unit interval a stored continued fraction describes.
// A complement-side number stores the CF of (1 - theta); this is the natural
// output form of the renormalization step on expansions starting with 1.
enum class Side { direct, complement };

// Exact rotation number in [0,1): either a reduced rational p/q or a
// quadratic irrational held as an eventually periodic continued fraction
// [0; pre..., (per...)] plus a Side flag.
//
// Values are immutable after construction. Quadratic forms are normalized on
// construction (minimal period, shortest preperiod) but keep their Side;
// operator== compares the numbers themselves, not their representations.
class RotationNumber {
 public:
  RotationNumber() = default;  // zero

  static RotationNumber zero();
  static RotationNumber rational(long long p, long long q);
  static RotationNumber quadratic(std::vector<long long> preperiod,
                                  std::vector<long long> period,
                                  Side side = Side::direct);

  // Accepts "0", "p/q", and "[0;a1,...,(b1,...,bk)]" with an optional "1-"
  // prefix for complement-side forms. Throws ParseError on anything else.
  static RotationNumber parse(std::string_view text);

  bool is_rational() const { return rational_; }
  bool is_zero() const { return rational_ && p_ == 0; }

  long long num() const;  // rational only
  long long den() const;

  Side side() const;  // quadratic only
  const std::vector<long long>& preperiod() const;
  const std::vector<long long>& period() const;

  // Direct-side representation of the same number, in canonical form
  // (shortest preperiod, minimal period). Identity on rationals.
  RotationNumber canonical() const;

  // Double approximation. The CF is truncated at depth 64 and evaluated
  // backward, so the truncation error is below 2^-64 for bounded-type
  // numbers; rationals evaluate exactly as p/q.
  double value() const;

  std::string str() const;

  bool operator==(const RotationNumber& other) const;
  bool operator!=(const RotationNumber& other) const { return !(*this == other); }

 private:
  bool rational_ = true;
  long long p_ = 0, q_ = 1;          // rational payload
  Side side_ = Side::direct;         // quadratic payload
  std::vector<long long> pre_, per_;
};

// First-return times of the order-q cycle: the unique a, b in {1,...,q-1}
// with p*a = -1 (mod q) and p*b = +1 (mod q); always a + b = q.
struct ReturnTimes {
  long long a = 0;
  long long b = 0;
};

// One convergent p/q of a rotation number, tagged with the side it
// approximates from (left: p/q < theta, right: p/q > theta).
enum class ApproachSide { left, right };

struct Convergent {
  long long p = 0;
  long long q = 1;
  ApproachSide side = ApproachSide::left;
};

// The two base factors of the prime factorization of a rational rotation
// number: the 1/3-type and 2/3-type three-cycles.
enum class PrimeFactor { p13, p23 };

// Eventual behaviour of a rotation number under repeated renormalization.
struct OrbitSignature {
  enum class Kind { fixed, periodic, not_detected };

  Kind kind = Kind::not_detected;
  int steps_to_fixed = 0;  // kind == fixed: steps until the orbit hits 0
  int preperiod = 0;       // kind == periodic
  int period = 0;          // kind == periodic
};

// One step of the renormalization operator
//   theta -> theta/(1-theta)      for theta in [0, 1/2],
//   theta -> (2*theta-1)/theta    for theta in [1/2, 1),
// taken mod 1 (so 1/2 maps to 0). Exact on both rationals and quadratics.
RotationNumber prime_renormalize(const RotationNumber& theta);

// The same step computed purely as a continued-fraction rewrite:
//   [0;a1,a2,...] -> [0;a1-1,a2,...]        if a1 > 1
//   [0;a1,a2,...] -> 1 - [0;a2,a3,...]      if a1 = 1
// and symmetrically on complement-side forms. Agrees exactly with
// prime_renormalize but follows an independent code path for rationals.
RotationNumber cf_prime_step(const RotationNumber& theta);

// Detects the eventual orbit behaviour under prime_renormalize by exact
// equality of canonical forms. Rationals always reach the fixed point 0.
OrbitSignature orbit_signature(const RotationNumber& theta, int max_steps = 1000);

// True iff some side's CF expansion of theta has all coefficients <= bound.
// The two-sided reading makes the class invariant under renormalization.
// Rejects rationals (their expansions terminate).
bool is_bounded_type(const RotationNumber& theta, long long bound);

// Number of renormalization steps composed by one first-return step at the
// fundamental sector: with [0;m1,m2,...] the CF of min(theta, 1-theta),
// returns m1 - 1 when that expansion is exactly [0;m1] (theta = 1/m or
// 1 - 1/m, where one return branch degenerates) and m1 otherwise.
// Validated against the circle-module first-return oracle.
int fast_step_count(const RotationNumber& theta);

// fast_step_count(theta) steps of prime_renormalize in one call.
RotationNumber fast_renormalize(const RotationNumber& theta);

// Return times of the q-cycle combinatorics for p/q. Requires q >= 3 and
// gcd(p, q) = 1.
ReturnTimes return_times(long long p, long long q);

// All CF convergents p_n/q_n of theta with 0 < p_n < q_n <= q_max, in
// increasing q_n, each tagged with its approach side.
std::vector<Convergent> convergents(const RotationNumber& theta, long long q_max);

// Factorization of the q-cycle of p/q into base three-cycles: peels one
// factor per renormalization step until the orbit reaches a three-cycle.
// Requires q >= 3 and gcd(p, q) = 1.
std::vector<PrimeFactor> anti_prime_factorize(long long p, long long q);

}  // namespace rotren
