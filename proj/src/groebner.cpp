#include "logcy/groebner.hpp"

namespace logcy::poly {

namespace {

void enumerate(std::size_t var, std::int64_t budget, Monomial& current, std::int64_t weight,
               const std::vector<Monomial>& leading, const MonomialOrder& ord,
               std::vector<std::size_t>& counts) {
  if (var == current.size()) {
    for (const auto& lm : leading) {
      if (lm.divides(current)) return;
    }
    ++counts[static_cast<std::size_t>(weight)];
    return;
  }
  const std::int64_t w = ord.scaled_weights()[var];
  for (std::uint32_t e = 0; weight + w * static_cast<std::int64_t>(e) <= budget; ++e) {
    current.e[var] = e;
    enumerate(var + 1, budget, current, weight + w * e, leading, ord, counts);
  }
  current.e[var] = 0;
}

}  // namespace

std::map<Rational, std::size_t> standard_monomial_counts(const std::vector<Monomial>& leading,
                                                         const MonomialOrder& ord,
                                                         const Rational& bound) {
  if (ord.size() == 0) throw InputError("weight vector is empty");
  for (const auto& w : ord.weights()) {
    if (sgn(w) <= 0) throw InputError("weights must be positive");
  }
  std::map<Rational, std::size_t> out;
  if (sgn(bound) < 0) return out;
  Rational scaled = bound * ord.scale();
  Integer floor_budget;
  mpz_fdiv_q(floor_budget.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  if (!floor_budget.fits_slong_p() || floor_budget > 100000) throw InputError("weight bound too large");
  const std::int64_t budget = floor_budget.get_si();
  std::vector<std::size_t> counts(static_cast<std::size_t>(budget) + 1, 0);
  Monomial current(ord.size());
  enumerate(0, budget, current, 0, leading, ord, counts);
  for (std::int64_t w = 0; w <= budget; ++w) {
    out[make_rational(Integer(static_cast<long>(w)), ord.scale())] = counts[static_cast<std::size_t>(w)];
  }
  return out;
}

}  // namespace logcy::poly
