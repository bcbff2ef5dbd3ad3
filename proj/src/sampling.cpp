#include <random>

#include "tdpair/errors.hpp"
#include "tdpair/tdcore.hpp"
#include "tdpair/verify.hpp"

namespace tdpair {

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  // Modulo mapping instead of std::uniform_int_distribution, whose output is
  // not specified across standard library implementations.
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
  }

  FieldElement rational(int bound) { return FieldElement(Rational(integer(-bound, bound), integer(1, bound))); }

  FieldElement nonzero(int bound) {
    for (;;) {
      FieldElement v = rational(bound);
      if (!v.is_zero()) return v;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

TDParameters random_valid_parameters(const Shape& shape, std::uint64_t seed, int bound) {
  if (bound < 4) throw InvalidParameters("sampling bound must be at least 4, got " + std::to_string(bound));
  Draw draw(seed);
  for (int attempt = 0; attempt < kSamplingRetryBudget; ++attempt) {
    TDParameters p{shape, draw.rational(bound), draw.rational(bound), draw.nonzero(bound), draw.nonzero(bound),
                   draw.rational(bound), draw.rational(bound), {}};
    for (std::size_t k = 0; k < shape.size(); ++k) p.a.push_back(draw.rational(bound));
    if (validate_parameters(p).passed()) return p;
  }
  throw SamplingExhausted("no valid parameter set for shape " + shape.to_string() + " within " +
                          std::to_string(kSamplingRetryBudget) + " draws at bound " + std::to_string(bound));
}

}  // namespace tdpair
