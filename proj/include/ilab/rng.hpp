#ifndef ILAB_RNG_HPP
#define ILAB_RNG_HPP

#include <cstdint>
#include <random>

#include "ilab/form.hpp"

namespace ilab {

/// Seeded random source. Backed by std::mt19937_64 (fully specified by the
/// standard), with all derived values computed from raw 64-bit draws so
/// streams are identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : gen_(seed) {}

  static constexpr const char* name() { return "mt19937_64"; }

  std::uint64_t raw() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [lo, hi] (small ranges; modulo bias negligible and
  /// deterministic either way).
  long rangeInt(long lo, long hi) {
    return lo + static_cast<long>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Small random rational with numerator in [-9, 9] and denominator in [1, 4].
  Rational smallRational() {
    Rational r(rangeInt(-9, 9), rangeInt(1, 4));
    r.canonicalize();
    return r;
  }

  /// Random exact form with small rational coefficients on every basis
  /// multi-index (some may be zero).
  FormQ rationalForm(int dim, int grade) {
    FormQ f(dim, grade);
    for (IndexMask m = 0; m < (IndexMask{1} << dim); ++m)
      if (maskGrade(m) == grade) f.set(m, ExactReal(smallRational()));
    return f;
  }

  /// Unit vector on S^{n-1} (normalized Gaussian-free construction:
  /// rejection sampling on the cube, portable).
  std::vector<double> unitVector(int dim) {
    while (true) {
      std::vector<double> v(dim);
      double norm2 = 0;
      for (double& c : v) {
        c = uniform(-1.0, 1.0);
        norm2 += c * c;
      }
      if (norm2 > 1e-4 && norm2 <= 1.0) {
        double inv = 1.0 / std::sqrt(norm2);
        for (double& c : v) c *= inv;
        return v;
      }
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ilab

#endif  // ILAB_RNG_HPP
