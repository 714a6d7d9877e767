#include "grafock/properties.hpp"

#include <cmath>

#include "grafock/conjugation.hpp"
#include "grafock/element.hpp"
#include "grafock/errors.hpp"
#include "grafock/fock.hpp"
#include "grafock/oracles.hpp"
#include "grafock/random_elements.hpp"
#include "grafock/weights.hpp"

namespace grafock::properties {

namespace {

double max_coeff_delta(const GrassmannElement& a, const GrassmannElement& b) {
  double worst = 0.0;
  const GrassmannElement d = a - b;
  for (const auto& t : d.terms()) worst = std::max(worst, std::abs(t.coeff));
  return worst;
}

InvariantResult checked(std::string name, long long samples, double worst,
                        double tolerance) {
  InvariantResult r;
  r.name = std::move(name);
  r.samples = samples;
  r.worst = worst;
  r.tolerance = tolerance;
  r.pass = worst <= tolerance;
  return r;
}

}  // namespace

std::vector<InvariantResult> run_algebra_suite(const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::vector<InvariantResult> out;

  {  // associativity on random triples in Lambda_10
    const long long n = std::max<long long>(1, opt.samples / 10);
    RandomElementSpec spec{.generator_count = 10, .max_terms = 24};
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const auto z = random_element(rng, spec);
      const auto w = random_element(rng, spec);
      const auto r = random_element(rng, spec);
      worst = std::max(worst,
                       max_coeff_delta(multiply(multiply(z, w), r),
                                       multiply(z, multiply(w, r))));
    }
    out.push_back(checked("algebra/associativity", n, worst, 1e-12));
  }

  {  // i_n i_m + i_m i_n = 0, exactly
    double worst = 0.0;
    long long count = 0;
    for (int n = 1; n <= 10; ++n)
      for (int m = 1; m <= 10; ++m) {
        const auto in = GrassmannElement::generator(n);
        const auto im = GrassmannElement::generator(m);
        worst = std::max(worst, p_norm(multiply(in, im) + multiply(im, in), 1));
        ++count;
      }
    out.push_back(checked("algebra/anticommutation", count, worst, 0.0));
  }

  {  // index_product vs bubble-sort oracle, exhaustive in Lambda_4
    long long mismatches = 0;
    for (std::uint64_t a = 0; a < 16; ++a)
      for (std::uint64_t b = 0; b < 16; ++b) {
        const auto fast =
            index_product(MultiIndex::from_bits(a), MultiIndex::from_bits(b));
        oracles::SeqIndex seq;
        for (int g : MultiIndex::from_bits(a).generators()) seq.gens.push_back(g);
        for (int g : MultiIndex::from_bits(b).generators()) seq.gens.push_back(g);
        if (oracles::naive_sign_sort(seq) != fast) ++mismatches;
      }
    out.push_back(checked("algebra/sign-oracle-exhaustive", 256,
                          static_cast<double>(mismatches), 0.0));
  }

  {  // v^2 = 0 exactly for odd v
    double worst = 0.0;
    for (long long i = 0; i < opt.samples; ++i) {
      const auto v = random_element(
          rng, {.generator_count = 10, .max_terms = 12, .odd_only = true});
      worst = std::max(worst, p_norm(multiply(v, v), 1));
    }
    out.push_back(checked("algebra/odd-square-zero", opt.samples, worst, 0.0));
  }

  {  // product of N+1 soul elements of Lambda_N vanishes exactly
    const long long n = std::max<long long>(1, opt.samples / 100);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      GrassmannElement prod = GrassmannElement::scalar(1.0);
      for (int k = 0; k < 7; ++k)
        prod = multiply(prod, random_element(rng, {.generator_count = 6,
                                                   .max_terms = 8,
                                                   .soul_only = true}));
      worst = std::max(worst, p_norm(prod, 1));
    }
    out.push_back(checked("algebra/soul-nilpotency", n, worst, 0.0));
  }

  {  // inverse round-trip on invertible elements
    const long long n = std::max<long long>(1, opt.samples / 10);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      auto z = random_element(rng, {.generator_count = 8, .max_terms = 10});
      z = z + GrassmannElement::scalar(2.0);  // keep the body well away from 0
      worst = std::max(
          worst,
          max_coeff_delta(multiply(z, invert(z)), GrassmannElement::scalar(1.0)));
    }
    out.push_back(checked("algebra/inverse-roundtrip", n, worst, 1e-12));
  }

  return out;
}

std::vector<InvariantResult> run_conjugation_suite(const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed + 1);
  std::vector<InvariantResult> out;
  const RandomElementSpec spec{.generator_count = 8, .max_terms = 12};
  constexpr ConjugationId all[] = {ConjugationId::I,  ConjugationId::D1,
                                   ConjugationId::D2, ConjugationId::D3,
                                   ConjugationId::D4, ConjugationId::D5,
                                   ConjugationId::D6, ConjugationId::D7};

  {  // each dagger is an involution (exact)
    const long long n = std::max<long long>(1, opt.samples / 10);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const auto z = random_element(rng, spec);
      for (ConjugationId c : all)
        worst = std::max(worst, max_coeff_delta(conjugate(conjugate(z, c), c), z));
    }
    out.push_back(checked("conjugations/involution", n * 8, worst, 0.0));
  }

  {  // product behavior: D2, D3 homomorphisms; D1, D7 antihomomorphisms
    const long long n = std::max<long long>(1, opt.samples / 10);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const auto z = random_element(rng, spec);
      const auto w = random_element(rng, spec);
      const auto zw = multiply(z, w);
      for (ConjugationId c : {ConjugationId::D2, ConjugationId::D3})
        worst = std::max(worst, max_coeff_delta(conjugate(zw, c),
                                                multiply(conjugate(z, c),
                                                         conjugate(w, c))));
      for (ConjugationId c : {ConjugationId::D1, ConjugationId::D7})
        worst = std::max(worst, max_coeff_delta(conjugate(zw, c),
                                                multiply(conjugate(w, c),
                                                         conjugate(z, c))));
    }
    out.push_back(checked("conjugations/product-laws", n * 4, worst, 0.0));
  }

  {  // pairwise commuting and the composition table is (Z/2)^3
    double worst = 0.0;
    std::mt19937_64 local(opt.seed + 2);
    const auto z = random_element(local, spec);
    for (ConjugationId a : all)
      for (ConjugationId b : all) {
        worst = std::max(worst, max_coeff_delta(conjugate(conjugate(z, a), b),
                                                conjugate(conjugate(z, b), a)));
        const ConjugationId ab = compose(a, b);
        if (conjugation_mask(ab) != (conjugation_mask(a) ^ conjugation_mask(b)))
          worst = std::max(worst, 1.0);
        worst = std::max(worst, max_coeff_delta(conjugate(conjugate(z, a), b),
                                                conjugate(z, ab)));
      }
    out.push_back(checked("conjugations/group-table", 64, worst, 0.0));
  }

  {  // z z^dag3 = z^dag3 z for every z
    const long long n = std::max<long long>(1, opt.samples / 10);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const auto z = random_element(rng, spec);
      const auto zc = conjugate(z, ConjugationId::D3);
      worst = std::max(worst, max_coeff_delta(multiply(z, zc), multiply(zc, z)));
    }
    out.push_back(checked("conjugations/dag3-central", n, worst, 1e-12));
  }

  {  // worked values preserved
    const auto i1 = GrassmannElement::generator(1);
    const auto i2 = GrassmannElement::generator(2);
    const auto i3 = GrassmannElement::generator(3);
    const auto i4 = GrassmannElement::generator(4);
    const auto z = multiply(multiply(i1, i2), i3) - i4;
    const auto expected_z = 2.0 * multiply(multiply(multiply(i1, i2), i3), i4);
    double worst =
        max_coeff_delta(multiply(z, conjugate(z, ConjugationId::D1)), expected_z);
    const auto r = GrassmannElement::scalar(1.0) + multiply(i1, i2) + i3;
    const auto expected_r = GrassmannElement::scalar(1.0) + 2.0 * multiply(i1, i2);
    worst = std::max(
        worst, max_coeff_delta(multiply(r, conjugate(r, ConjugationId::D3)),
                               expected_r));
    out.push_back(checked("conjugations/worked-values", 2, worst, 0.0));
  }

  {  // <w,z> = <z^dag2, w^dag2>
    const long long n = std::max<long long>(1, opt.samples / 10);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const auto z = random_element(rng, spec);
      const auto w = random_element(rng, spec);
      worst = std::max(worst,
                       std::abs(inner_product(w, z) -
                                inner_product(conjugate(z, ConjugationId::D2),
                                              conjugate(w, ConjugationId::D2))));
    }
    out.push_back(checked("conjugations/inner-product-dag2", n, worst, 0.0));
  }

  return out;
}

std::vector<InvariantResult> run_norm_suite(const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed + 3);
  std::vector<InvariantResult> out;
  const RandomElementSpec spec{.generator_count = 10, .max_terms = 32};

  double worst1 = 0.0, worst_p[2] = {0.0, 0.0}, worst_swapped = 0.0;
  for (long long i = 0; i < opt.samples; ++i) {
    const auto z = random_element(rng, spec);
    const auto w = random_element(rng, spec);
    const auto zw = multiply(z, w);
    {
      const double lhs = p_norm(zw, 1);
      const double rhs = p_norm(z, 1) * p_norm(w, 1);
      worst1 = std::max(worst1, (lhs - rhs) / std::max(rhs, 1e-300));
    }
    for (int p = 2; p <= 3; ++p) {
      double lhs = std::pow(p_norm(zw, p), p);
      double rhs = std::pow(p_norm(z, 1), p) * p_norm(w, 1 << (p - 1));
      for (int k = 1; k <= p - 1; ++k) rhs *= p_norm(w, 1 << k);
      worst_p[p - 2] = std::max(worst_p[p - 2], (lhs - rhs) / std::max(rhs, 1e-300));
      // swapped variant
      double rhs_swapped = std::pow(p_norm(w, 1), p) * p_norm(z, 1 << (p - 1));
      for (int k = 1; k <= p - 1; ++k) rhs_swapped *= p_norm(z, 1 << k);
      worst_swapped =
          std::max(worst_swapped, (lhs - rhs_swapped) / std::max(rhs_swapped, 1e-300));
    }
  }
  out.push_back(checked("norms/one-norm-submultiplicative", opt.samples, worst1, 1e-9));
  out.push_back(checked("norms/p-norm-inequality-p2", opt.samples, worst_p[0], 1e-9));
  out.push_back(checked("norms/p-norm-inequality-p3", opt.samples, worst_p[1], 1e-9));
  out.push_back(checked("norms/p-norm-inequality-swapped", opt.samples, worst_swapped,
                        1e-9));

  {  // <z,z> = ||z||_2^2
    const long long n = std::max<long long>(1, opt.samples / 10);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const auto z = random_element(rng, spec);
      const double n2 = p_norm(z, 2);
      worst = std::max(worst, std::abs(inner_product(z, z).real() - n2 * n2));
    }
    out.push_back(checked("norms/inner-product-two-norm", n, worst, 1e-12));
  }

  return out;
}

std::vector<InvariantResult> run_vage_suite(const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed + 4);
  std::vector<InvariantResult> out;
  const WeightSystem w = WeightSystem::linear(opt.lambda, 64);
  // Surface the growth precondition before running anything.
  (void)vage_constant(1, w, VageMode::tail_bounded);

  {  // subset sum = product identity, enumerated for G <= 15
    double worst = 0.0;
    for (int g = 1; g <= 15; ++g) {
      const WeightSystem ws = WeightSystem::linear(opt.lambda, g);
      for (int d = 1; d <= 2; ++d) {
        double direct = 0.0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g); ++bits)
          direct += std::exp(-2.0 * d * ws.log_weight(MultiIndex::from_bits(bits)));
        const double via_product = std::pow(vage_constant(d, ws, VageMode::truncated), 2);
        worst = std::max(worst, std::abs(direct - via_product) / direct);
      }
    }
    out.push_back(checked("vage/weight-sum-product-identity", 30, worst, 1e-12));
  }

  {  // truncated constant never exceeds the closed tail bound
    double worst = 0.0;
    for (int d = 1; d <= 4; ++d)
      worst = std::max(worst, vage_constant(d, w, VageMode::truncated) -
                                  vage_constant(d, w, VageMode::tail_bounded));
    out.push_back(checked("vage/truncated-below-tail-bound", 4, worst, 0.0));
  }

  const RandomElementSpec spec{.generator_count = 8, .max_terms = 16};
  {  // Vage inequality, both orientations, (p,q) in {(1,0),(2,1),(3,1)}
    double worst = 0.0, worst_sw = 0.0;
    const int pq[3][2] = {{1, 0}, {2, 1}, {3, 1}};
    for (long long i = 0; i < opt.samples; ++i) {
      const auto f = random_element(rng, spec);
      const auto g = random_element(rng, spec);
      for (const auto& [p, q] : pq) {
        const VageReport r = check_vage(f, g, p, q, w);
        worst = std::max(worst, (r.lhs - r.rhs) / std::max(r.rhs, 1e-300));
        // swapped corollary: ||fg||_-p <= C ||f||_-p ||g||_-q
        const double lhs = weighted_norm(multiply(f, g), p, w);
        const double rhs =
            r.constant * weighted_norm(f, p, w) * weighted_norm(g, q, w);
        worst_sw = std::max(worst_sw, (lhs - rhs) / std::max(rhs, 1e-300));
      }
    }
    out.push_back(checked("vage/inequality", opt.samples * 3, worst, 1e-9));
    out.push_back(checked("vage/inequality-swapped", opt.samples * 3, worst_sw, 1e-9));
  }

  {  // ||f^n||_{-p-2} <= C_2^{n-1} ||f||_{-p}^n
    const long long count = std::max<long long>(1, opt.samples / 10);
    const double c2 = vage_constant(2, w, VageMode::truncated);
    double worst = 0.0;
    for (long long i = 0; i < count; ++i) {
      const auto f = random_element(rng, spec);
      const double base = weighted_norm(f, 1, w);
      GrassmannElement power = f;
      for (int n = 2; n <= 6; ++n) {
        power = multiply(power, f);
        const double lhs = weighted_norm(power, 3, w);
        const double rhs = std::pow(c2, n - 1) * std::pow(base, n);
        worst = std::max(worst, (lhs - rhs) / std::max(rhs, 1e-300));
      }
    }
    out.push_back(checked("vage/power-bound", count * 5, worst, 1e-9));
  }

  {  // monotone in p, limit |body|
    const long long count = std::max<long long>(1, opt.samples / 10);
    const int ps[] = {0, 1, 2, 4, 8, 16};
    double worst = 0.0;
    for (long long i = 0; i < count; ++i) {
      const auto f = random_element(rng, spec);
      const auto norms = norm_limit_check(f, w, ps);
      for (std::size_t k = 1; k < norms.size(); ++k)
        worst = std::max(worst, norms[k] - norms[k - 1]);
      worst = std::max(worst, std::abs(norms.back() - std::abs(f.body())));
    }
    out.push_back(checked("vage/norm-monotone-limit", count, worst, 1e-9));
  }

  {  // distribution-space inverse agrees with the exact route
    const long long count = std::max<long long>(1, opt.samples / 10);
    double worst = 0.0;
    for (long long i = 0; i < count; ++i) {
      auto f = random_element(rng, spec) + GrassmannElement::scalar(3.0);
      const auto inv = invert_distribution(f, 1, w);
      worst = std::max(worst, p_norm(multiply(f, inv) -
                                         GrassmannElement::scalar(1.0), 2));
    }
    out.push_back(checked("vage/invert-roundtrip", count, worst, 1e-10));
  }

  return out;
}

std::vector<InvariantResult> run_operator_suite(const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed + 5);
  std::vector<InvariantResult> out;
  const RandomElementSpec spec{.generator_count = 8, .max_terms = 12};

  {  // <M*_f g, h> = <g, M_f h>
    const long long n = std::max<long long>(1, opt.samples / 10);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const auto f = random_element(rng, spec);
      const auto g = random_element(rng, spec);
      const auto h = random_element(rng, spec);
      worst = std::max(worst, std::abs(inner_product(left_derivative(f, g), h) -
                                       inner_product(g, left_multiply(f, h))));
    }
    out.push_back(checked("operators/adjoint-identity", n, worst, 1e-12));
  }

  {  // matrix of M*_f equals the conjugate transpose of the matrix of M_f
    double worst = 0.0;
    long long count = 0;
    for (int N = 1; N <= 6; ++N) {
      const auto f =
          random_element(rng, {.generator_count = N, .max_terms = 8});
      const auto a = operator_matrix(OperatorExpr::left_mul(f), N);
      const auto b = operator_matrix(OperatorExpr::left_deriv(f), N);
      const auto at = a.conjugate_transpose();
      for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c)
          worst = std::max(worst, std::abs(at.at(r, c) - b.at(r, c)));
      ++count;
    }
    out.push_back(checked("operators/matrix-adjoint-oracle", count, worst, 0.0));
  }

  {  // Berezin annihilation: no i_n factor, zero integral; linear otherwise
    const long long n = std::max<long long>(1, opt.samples / 10);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      // elements over generators 1..6 never contain i_7
      auto f = random_element(rng, {.generator_count = 6, .max_terms = 10});
      worst = std::max(worst, p_norm(berezin_integral(MultiIndex::of({7}), f), 1));
    }
    out.push_back(checked("operators/berezin-annihilation", n, worst, 0.0));
  }

  {  // <T_f 1, T_g 1> = <f, g> for soul-only f, g
    const long long n = std::max<long long>(1, opt.samples / 10);
    const auto one = GrassmannElement::scalar(1.0);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const auto f = random_element(
          rng, {.generator_count = 8, .max_terms = 12, .soul_only = true});
      const auto g = random_element(
          rng, {.generator_count = 8, .max_terms = 12, .soul_only = true});
      worst = std::max(worst, std::abs(inner_product(t_apply(f, one), t_apply(g, one)) -
                                       inner_product(f, g)));
    }
    out.push_back(checked("operators/tf1-inner-product", n, worst, 1e-12));
  }

  {  // ||T_f g||_{-p} <= 2 C_{p-q} ||f||_{-q} ||g||_{+p}
    const long long n = std::max<long long>(1, opt.samples / 10);
    const WeightSystem w = WeightSystem::linear(1.0, 64);
    const int p = 2, q = 1;
    const double c = vage_constant(p - q, w, VageMode::truncated);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const auto f = random_element(rng, spec);
      const auto g = random_element(rng, spec);
      const double lhs = weighted_norm(t_apply(f, g), p, w);
      const double rhs =
          2.0 * c * weighted_norm(f, q, w) * weighted_norm(g, -p, w);
      worst = std::max(worst, (lhs - rhs) / std::max(rhs, 1e-300));
    }
    out.push_back(checked("operators/t-norm-bound", n, worst, 1e-9));
  }

  return out;
}

std::vector<InvariantResult> run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "algebra") return run_algebra_suite(opt);
  if (name == "conjugations") return run_conjugation_suite(opt);
  if (name == "norms") return run_norm_suite(opt);
  if (name == "vage") return run_vage_suite(opt);
  if (name == "operators") return run_operator_suite(opt);
  if (name == "all") {
    std::vector<InvariantResult> out;
    for (const char* s : {"algebra", "conjugations", "norms", "vage", "operators"}) {
      auto rs = run_suite(s, opt);
      out.insert(out.end(), rs.begin(), rs.end());
    }
    return out;
  }
  throw Error("UnknownSuite", "no suite named '" + name + "'");
}

}  // namespace grafock::properties
