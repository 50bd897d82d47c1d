#include "rotren/words.hpp"

#include <numeric>

namespace rotren {

RotationWord RotationWord::build(long long p, long long q) {
  ReturnTimes rt = return_times(p, q);  // validates q >= 3, gcd(p,q) = 1
  RotationWord w;
  w.letters_.assign(static_cast<size_t>(q), Letter::A);
  std::vector<char> assigned(static_cast<size_t>(q), 0);
  long long pos = 0;
  for (long long j = 0; j < rt.a; ++j) {
    w.letters_[static_cast<size_t>(pos)] = Letter::A;
    assigned[static_cast<size_t>(pos)] += 1;
    pos = (pos + p) % q;
  }
  pos = q - 1;
  for (long long j = 0; j < rt.b; ++j) {
    w.letters_[static_cast<size_t>(pos)] = Letter::B;
    assigned[static_cast<size_t>(pos)] += 1;
    pos = (pos + p) % q;
  }
  for (char c : assigned) {
    if (c != 1) throw DomainError("rotation word construction did not partition the cycle");
  }
  w.has_cycle_ = true;
  w.p_ = p;
  w.times_ = rt;
  w.build_tables();
  return w;
}

RotationWord RotationWord::from_letters(std::vector<Letter> letters) {
  if (letters.empty()) throw DomainError("rotation word needs at least one letter");
  RotationWord w;
  w.letters_ = std::move(letters);
  w.build_tables();
  return w;
}

void RotationWord::build_tables() {
  long long q = this->q();
  nu_pref_.assign(static_cast<size_t>(q) + 1, 0);
  mu_pref_.assign(static_cast<size_t>(q) + 1, 0);
  kappa_pref_.assign(static_cast<size_t>(q) + 1, 0);
  for (long long r = 1; r <= q; ++r) {
    int inc = jump(*this, r);
    nu_pref_[static_cast<size_t>(r)] = nu_pref_[static_cast<size_t>(r - 1)] + (inc == 1);
    mu_pref_[static_cast<size_t>(r)] = mu_pref_[static_cast<size_t>(r - 1)] + (inc == -1);
    kappa_pref_[static_cast<size_t>(r)] = kappa_pref_[static_cast<size_t>(r - 1)] + (inc == 0);
  }
}

long long RotationWord::p() const {
  if (!has_cycle_) throw DomainError("word carries no cycle data");
  return p_;
}

ReturnTimes RotationWord::times() const {
  if (!has_cycle_) throw DomainError("word carries no cycle data");
  return times_;
}

Letter RotationWord::at(long long i) const {
  long long q = this->q();
  long long r = i % q;
  if (r < 0) r += q;
  return letters_[static_cast<size_t>(r)];
}

std::string RotationWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(static_cast<char>(l));
  return s;
}

int jump(const RotationWord& word, long long j) {
  Letter prev = word.at(j - 1);
  Letter cur = word.at(j);
  if (prev != cur) return 0;
  return cur == Letter::B ? 1 : -1;
}

JumpStats jump_stats(const RotationWord& word, long long j) {
  long long q = word.q();
  auto at_nonneg = [&](long long r) {
    long long t = r / q, rem = r % q;
    JumpStats s;
    s.nu = t * word.nu_pref_[static_cast<size_t>(q)] + word.nu_pref_[static_cast<size_t>(rem)];
    s.mu = t * word.mu_pref_[static_cast<size_t>(q)] + word.mu_pref_[static_cast<size_t>(rem)];
    s.kappa =
        t * word.kappa_pref_[static_cast<size_t>(q)] + word.kappa_pref_[static_cast<size_t>(rem)];
    return s;
  };
  if (j >= 0) return at_nonneg(j);
  // Counts over {j+1..0}, negated. Shift the window right by a whole number
  // of periods so it becomes {1..Kq-m} inside {1..Kq}.
  long long m = -j;
  long long big = ((m + q - 1) / q) * q;
  JumpStats whole = at_nonneg(big);
  JumpStats head = at_nonneg(big - m);
  return JumpStats{head.nu - whole.nu, head.mu - whole.mu, head.kappa - whole.kappa};
}

long long total_jump(const RotationWord& word, long long k) {
  JumpStats s = jump_stats(word, k);
  return s.nu - s.mu;
}

bool is_mixed(const RotationWord& word) {
  bool saw_a = false, saw_b = false;
  for (Letter l : word.letters()) {
    saw_a |= l == Letter::A;
    saw_b |= l == Letter::B;
  }
  return saw_a && saw_b;
}

bool kappa_divergence_check(const RotationWord& word, long long horizon) {
  if (horizon < 1) throw DomainError("kappa_divergence_check needs horizon >= 1");
  long long q = word.q();
  long long z = jump_stats(word, q).kappa;
  if (z < 1) return false;
  long long lower = horizon * z / q - q;
  if (jump_stats(word, horizon).kappa < lower) return false;
  if (jump_stats(word, -horizon).kappa > -lower) return false;
  return true;
}

}  // namespace rotren
