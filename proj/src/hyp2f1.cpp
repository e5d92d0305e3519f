#include "dirac_rm/hyp2f1.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "dirac_rm/errors.hpp"

namespace dirac_rm {

namespace {

constexpr int kMaxTerms = 100000;
constexpr double kRelativeCutoff = 1e-16;
constexpr int kQuietTermsRequired = 3;

void check_pole(cplx c) {
  if (detail::is_nonpositive_integer(c)) {
    throw PoleInC("2F1 lower parameter c is a non-positive integer");
  }
}

}  // namespace

namespace detail {

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

Hyp2F1Result hyp2f1_series(cplx a, cplx b, cplx c, double z) {
  check_pole(c);
  cplx sum{1.0, 0.0};
  cplx compensation{0.0, 0.0};
  cplx term{1.0, 0.0};
  int quiet = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double kd = static_cast<double>(k);
    const double previous = std::abs(term);
    term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * z;
    if (k > 0 && k % 1000 == 0 && previous > 0.0) {
      // Lower bound on the terms still needed; give up early when even
      // that exceeds the cap.
      const double ratio = std::min(std::abs(term) / previous, std::abs(z));
      const double target = kRelativeCutoff * std::abs(sum);
      if (ratio < 1.0 && std::abs(term) > target && target > 0.0) {
        const double remaining = std::log(target / std::abs(term)) / std::log(ratio);
        if (kd + remaining > kMaxTerms) {
          throw NoConvergence("2F1 series cannot converge within 1e5 terms");
        }
      }
    }
    const cplx y = term - compensation;
    const cplx t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
    if (std::abs(term) <= kRelativeCutoff * std::abs(sum)) {
      if (++quiet >= kQuietTermsRequired) return {sum, k + 1, false};
    } else {
      quiet = 0;
    }
  }
  throw NoConvergence("2F1 series did not converge within 1e5 terms");
}

Hyp2F1Result hyp2f1_pfaff(cplx a, cplx b, cplx c, double x) {
  // Keep a terminating parameter in the first slot so the transformed
  // series stays a polynomial.
  if (is_nonpositive_integer(b) && !is_nonpositive_integer(a)) std::swap(a, b);
  const double z = x / (x - 1.0);
  Hyp2F1Result inner = hyp2f1_series(a, c - b, c, z);
  inner.value *= std::exp(-a * std::log(1.0 - x));
  inner.continued = x < -1.0;
  return inner;
}

}  // namespace detail

Hyp2F1Result hyp2f1_detailed(const Hyp2F1Args& args) {
  check_pole(args.c);
  if (!(args.x <= 0.0)) {
    throw InvalidArgument("2F1 evaluator supports x <= 0 only");
  }
  if (args.x == 0.0) return {cplx{1.0, 0.0}, 0, false};
  if (args.x > -0.5) return detail::hyp2f1_series(args.a, args.b, args.c, args.x);
  return detail::hyp2f1_pfaff(args.a, args.b, args.c, args.x);
}

cplx hyp2f1(const Hyp2F1Args& args) { return hyp2f1_detailed(args).value; }

cplx hyp2f1_derivative(const Hyp2F1Args& args) {
  check_pole(args.c);
  const cplx scale = args.a * args.b / args.c;
  if (scale == cplx{0.0, 0.0}) return scale;
  return scale * hyp2f1({args.a + 1.0, args.b + 1.0, args.c + 1.0, args.x});
}

}  // namespace dirac_rm
