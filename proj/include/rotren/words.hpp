#pragma once

#include <string>
#include <vector>

#include "rotren/rotation_number.hpp"

namespace rotren {

enum class Letter : char { A = 'A', B = 'B' };

// Accumulated jump counts: for j > 0, nu/mu/kappa count the +1/-1/0
// increments over {1,...,j}; for j < 0 they are the negated counts over
// {j+1,...,0}; all three vanish at j = 0. Always nu + mu + kappa = j.
struct JumpStats {
  long long nu = 0;
  long long mu = 0;
  long long kappa = 0;
};

// q-periodic two-letter itinerary of the order-q cycle of the rotation by
// p/q. It is the unique q-periodic word with
//   word[0] = A, word[-1] = B, word[-p-1] = A, word[-p] = B,
// and word[j+p] = word[j] whenever j mod q is neither -p nor -p-1.
// Concretely word[i] = A exactly when i = j*p (mod q) for some 0 <= j < a,
// and word[i] = B exactly when i = -1 + j*p (mod q) for some 0 <= j < b,
// where (a, b) = return_times(p, q).
//
// from_letters() wraps an arbitrary periodic word (no cycle metadata) so the
// jump statistics below can also be evaluated on degenerate inputs.
class RotationWord {
 public:
  static RotationWord build(long long p, long long q);
  static RotationWord from_letters(std::vector<Letter> letters);

  long long q() const { return static_cast<long long>(letters_.size()); }
  bool has_cycle_data() const { return has_cycle_; }
  long long p() const;
  ReturnTimes times() const;

  Letter at(long long i) const;  // q-periodic lookup at any integer index
  const std::vector<Letter>& letters() const { return letters_; }
  std::string str() const;

 private:
  void build_tables();

  std::vector<Letter> letters_;
  bool has_cycle_ = false;
  long long p_ = 0;
  ReturnTimes times_{};
  // per-period prefix counts over {1..r}, r in [0, q]
  std::vector<long long> nu_pref_, mu_pref_, kappa_pref_;

  friend JumpStats jump_stats(const RotationWord&, long long);
};

// Jump increment at index j, read off the letter pair (word[j-1], word[j]):
// 0 for (A,B) and (B,A), +1 for (B,B), -1 for (A,A).
int jump(const RotationWord& word, long long j);

// O(1) per query; the per-period tables are built with the word.
JumpStats jump_stats(const RotationWord& word, long long j);

// Net vertical displacement accumulated from index 0 to k: nu(k) - mu(k).
long long total_jump(const RotationWord& word, long long k);

// True iff the word contains an adjacent unequal pair (cyclically), i.e.
// both letters occur. Such words have zero-jump pairs in both directions.
bool is_mixed(const RotationWord& word);

// Verifies that |kappa| grows without bound along both directions:
// with z zero-jumps per period the check is z >= 1 together with
// kappa(horizon) >= horizon*z/q - q and kappa(-horizon) <= -horizon*z/q + q.
// All-A or all-B words fail (kappa is identically 0).
bool kappa_divergence_check(const RotationWord& word, long long horizon);

}  // namespace rotren
