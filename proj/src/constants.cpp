#include "hyperid/constants.hpp"

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <vector>

namespace hyperid::constants {

namespace {

std::mutex g_mutex;

Real cached(int kind, unsigned n, mpfr_prec_t bits, void (*fill)(mpfr_ptr, unsigned)) {
  static std::map<std::tuple<int, unsigned, mpfr_prec_t>, Real> cache;
  std::lock_guard<std::mutex> lock(g_mutex);
  auto key = std::make_tuple(kind, n, bits);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Real r(bits);
  fill(r.raw(), n);
  return cache.emplace(key, std::move(r)).first->second;
}

// Exact Bernoulli numbers via the defining recurrence
//   sum_{j=0}^{m} C(m+1, j) B_j = 0,  B_0 = 1,
// computed once in rational arithmetic and extended on demand.
class BernoulliTable {
 public:
  mpq_class get(unsigned m) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (b_.empty()) {
      b_.emplace_back(1);
      b_.emplace_back(-1, 2);
    }
    mpz_class binom;
    while (b_.size() <= m) {
      unsigned k = static_cast<unsigned>(b_.size());
      if (k % 2 == 1) {
        b_.emplace_back(0);
        continue;
      }
      mpq_class acc(0);
      for (unsigned j = 0; j < k; ++j) {
        if (j % 2 == 1 && j != 1) continue;
        mpz_bin_uiui(binom.get_mpz_t(), k + 1, j);
        acc += mpq_class(binom) * b_[j];
      }
      acc /= -(static_cast<long>(k) + 1);
      acc.canonicalize();
      b_.push_back(acc);
    }
    return b_[m];
  }

 private:
  std::mutex mutex_;
  std::vector<mpq_class> b_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable t;
  return t;
}

}  // namespace

Real pi(mpfr_prec_t bits) {
  return cached(0, 0, bits, [](mpfr_ptr o, unsigned) { mpfr_const_pi(o, MPFR_RNDN); });
}

Real sqrt_pi(mpfr_prec_t bits) {
  return cached(1, 0, bits, [](mpfr_ptr o, unsigned) {
    mpfr_const_pi(o, MPFR_RNDN);
    mpfr_sqrt(o, o, MPFR_RNDN);
  });
}

Real log_2pi(mpfr_prec_t bits) {
  return cached(2, 0, bits, [](mpfr_ptr o, unsigned) {
    mpfr_const_pi(o, MPFR_RNDN);
    mpfr_mul_ui(o, o, 2, MPFR_RNDN);
    mpfr_log(o, o, MPFR_RNDN);
  });
}

Real euler_gamma(mpfr_prec_t bits) {
  return cached(3, 0, bits, [](mpfr_ptr o, unsigned) { mpfr_const_euler(o, MPFR_RNDN); });
}

Real zeta(unsigned n, mpfr_prec_t bits) {
  return cached(4, n, bits, [](mpfr_ptr o, unsigned k) { mpfr_zeta_ui(o, k, MPFR_RNDN); });
}

Real bernoulli_2n(unsigned n, mpfr_prec_t bits) {
  mpq_class q = bernoulli_table().get(2 * n);
  Real r(bits);
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

}  // namespace hyperid::constants
