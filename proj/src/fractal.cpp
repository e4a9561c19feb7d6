#include "sumset/fractal.hpp"

#include <stdexcept>
#include <string>

namespace sumset {

namespace {

constexpr long kCellCap = 1000000;  // (k+1)^depth limit

}  // namespace

FractalSpec::FractalSpec(long base_, long digit_, long depth_)
    : base(base_), digit(digit_), depth(depth_) {
  if (base < 3) throw std::invalid_argument("fractal base N must be >= 3, got " + std::to_string(base));
  if (digit < 0 || digit > base - 1)
    throw std::invalid_argument("digit cap k must lie in [0, N-1], got k = " + std::to_string(digit) +
                                " for N = " + std::to_string(base));
  if (depth < 1) throw std::invalid_argument("depth must be >= 1, got " + std::to_string(depth));
  long cells = 1;
  for (long j = 0; j < depth; ++j) {
    cells *= digit + 1;
    if (cells > kCellCap)
      throw std::invalid_argument("depth " + std::to_string(depth) + " with k = " +
                                  std::to_string(digit) + " exceeds the cell cap of 10^6");
  }
}

std::vector<Rational> fractal_cell_origins(const FractalSpec& s) {
  std::vector<Rational> xs{Rational(0)};
  Rational unit(1);
  for (long level = 1; level <= s.depth; ++level) {
    unit /= s.base;  // N^{-level}
    std::vector<Rational> next;
    next.reserve(xs.size() * static_cast<std::size_t>(s.digit + 1));
    for (const Rational& x : xs)
      for (long d = 0; d <= s.digit; ++d) next.push_back(x + Rational(d) * unit);
    xs = std::move(next);
  }
  // Prefix-major generation yields a sorted list; distinctness holds because
  // consecutive level-(d-1) origins differ by at least N^{-(d-1)} > k N^{-d}.
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i - 1] < xs[i])) throw std::logic_error("fractal cell origins not strictly increasing");
  return xs;
}

CompactSet1D fractal_cover(const FractalSpec& s) {
  const Rational cell = pow_int(Rational(1, s.base), s.depth);
  const std::vector<Rational> xs = fractal_cell_origins(s);
  std::vector<Interval> parts;
  parts.reserve(xs.size());
  for (const Rational& x : xs) parts.emplace_back(x, x + cell);
  return CompactSet1D(std::move(parts));
}

CompactSet1D fractal_endpoints(const FractalSpec& s) {
  return CompactSet1D::points(fractal_cell_origins(s));
}

Rational fractal_measure(const FractalSpec& s) {
  return pow_int(Rational(s.digit + 1, s.base), s.depth);
}

Rational fractal_diameter_limit(long base, long digit) {
  FractalSpec check(base, digit, 1);  // reuse the parameter validation
  return Rational(digit, base - 1);
}

Rational fractal_diameter_at_depth(long base, long digit, long depth) {
  FractalSpec s(base, digit, depth);
  const Rational cell = pow_int(Rational(1, base), depth);
  return Rational(digit) * (1 - cell) / Rational(base - 1) + cell;
}

FractalSumCheck fractal_sum_check(long base, long k, long l, long depth) {
  if (k < 0 || l < 0 || k + l > base - 1)
    throw std::invalid_argument("digit overflow: need k + l <= N-1, got k = " + std::to_string(k) +
                                ", l = " + std::to_string(l) + ", N = " + std::to_string(base));
  FractalSpec sk(base, k, depth), sl(base, l, depth), skl(base, k + l, depth);
  FractalSumCheck out{};
  out.endpoints_equal =
      minkowski_sum(fractal_endpoints(sk), fractal_endpoints(sl)) == fractal_endpoints(skl);
  out.cover_contains =
      minkowski_sum(fractal_cover(sk), fractal_cover(sl)).contains(fractal_cover(skl));
  return out;
}

}  // namespace sumset
