#include "aplab/diagnostics.hpp"

#include "aplab/errors.hpp"

namespace aplab {

Colour PeriodicZColouring::at(long long n) const {
  const long long r = ((n % p) + p) % p;
  return colours[static_cast<std::size_t>(r)];
}

std::vector<Gap> find_gaps(const PeriodicZColouring& c, long long window_lo, long long window_hi) {
  if (c.p < 1 || c.colours.size() != static_cast<std::size_t>(c.p))
    throw InvalidParameter("find_gaps: malformed colouring");
  if (window_lo > window_hi) throw InvalidParameter("find_gaps: empty window");
  std::vector<Gap> out;
  long long prev_red = 0;
  bool have_prev = false;
  for (long long n = window_lo; n <= window_hi; ++n) {
    if (c.at(n) != Colour::Red) continue;
    if (have_prev) out.push_back(Gap{prev_red, n});
    prev_red = n;
    have_prev = true;
  }
  return out;
}

bool is_table(const std::set<long long>& reds, long long d, long long ell, long long m,
              long long k) {
  if (d < 1 || ell < 1 || m < 1 || k < 1)
    throw InvalidParameter("is_table: parameters must be positive");
  if (!reds.count(-ell * d) || !reds.count(m * d)) return false;
  long long prev = -ell;
  for (long long n = -ell + 1; n <= m; ++n) {
    if (!reds.count(n * d)) continue;
    // Consecutive red multiples n and prev: gap width (n - prev) steps.
    if ((n - prev) * (k + 1) > m + ell) return false;
    prev = n;
  }
  return true;
}

BigInt red_count_bound(long long m, long long k) {
  if (m < 1 || k < 1) throw InvalidParameter("red_count_bound: parameters must be positive");
  const Rational ratio = make_rational(static_cast<long>(k + 1), static_cast<long>(k));
  const Rational target(static_cast<long>(m));
  Rational power(1);
  unsigned long c = 0;
  while (power < target) {
    power *= ratio;
    ++c;
  }
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(k + 1), c);
  return 3 * result - 1;
}

std::pair<Rational, Rational> ladder_case_range(int case_id) {
  switch (case_id) {
    case 2: return {make_rational(1, 4), make_rational(5, 16)};
    case 3: return {make_rational(5, 16), make_rational(7, 20)};
    case 4: return {make_rational(7, 20), make_rational(2, 5)};
    default: throw InvalidParameter("ladder_case_range: case id must be 2, 3 or 4");
  }
}

Ladder build_ladder(int case_id, const Rational& anchor, const Rational& d) {
  const auto [lo, hi] = ladder_case_range(case_id);
  if (d < lo || d > hi)
    throw OutOfRange("build_ladder: difference " + fraction_str(d) + " outside [" +
                     fraction_str(lo) + ", " + fraction_str(hi) + "]");
  Ladder ladder;
  ladder.case_id = case_id;
  ladder.anchor = anchor;
  ladder.diff = d;
  const Rational& a = anchor;
  const Rational one(1);
  const Rational half = make_rational(1, 2);
  switch (case_id) {
    case 2:
      ladder.terms = {a,          a + 4 * d - one, a + d,      a + 5 * d - one,
                      a + 2 * d,  a + 6 * d - one, a + 3 * d,  a + one};
      break;
    case 3:
      ladder.terms = {a,          a + 5 * d - one - half, a + d, a + 3 * d - half,
                      a + 2 * d,  a + 4 * d - half,       a + one};
      break;
    default:
      ladder.terms = {a,          a + 3 * d - one, a + 6 * d - 2 * one, a + d,     a + 4 * d - one,
                      a + 7 * d - 2 * one, a + 2 * d,  a + 5 * d - one, a + one};
      break;
  }
  return ladder;
}

bool verify_ladder(const std::vector<Rational>& terms) {
  if (terms.size() < 2) return false;
  const Rational quarter = make_rational(1, 4);
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    const Rational diff = terms[i + 1] - terms[i];
    if (diff < 0 || diff > quarter) return false;
  }
  return terms.back() - terms.front() == 1;
}

bool ladder_hits_blue_arc(const std::vector<Rational>& terms) {
  const Rational lo = make_rational(1, 2);
  const Rational hi = make_rational(3, 4);
  for (const auto& t : terms) {
    const Rational r = normalize_mod1(t);
    if (lo <= r && r <= hi) return true;
  }
  return false;
}

}  // namespace aplab
