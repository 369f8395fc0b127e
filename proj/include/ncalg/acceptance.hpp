#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ncalg/constructions.hpp"
#include "ncalg/embeddings.hpp"
#include "ncalg/numerics.hpp"
#include "ncalg/random.hpp"
#include "ncalg/structure.hpp"

namespace ncalg::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// shared presentations

inline Presentation weyl_like() {
  return Presentation("A", {{"x"}, {"y"}},
                      {FreeElement::monomial(Word{0, 1}) - FreeElement::monomial(Word{1, 0}) - FreeElement::letter(0)});
}

/// The same relation with x, y paired with starred partners.
inline Presentation weyl_like_star() {
  return Presentation("As", {{"x", GeneratorKind::star_pair}, {"y", GeneratorKind::star_pair}},
                      {FreeElement::monomial(Word{0, 2}) - FreeElement::monomial(Word{2, 0}) - FreeElement::letter(0)});
}

inline Presentation z2_selfadjoint() {
  return Presentation("Z2s", {{"s", GeneratorKind::self_adjoint}},
                      {FreeElement::monomial(Word{0, 0}) - FreeElement::one()});
}

inline Presentation free_on(std::vector<std::string> names) {
  std::string name = "F" + std::to_string(names.size());
  std::vector<Generator> gens;
  for (auto& n : names) gens.push_back({std::move(n)});
  return Presentation(name, std::move(gens), {});
}

inline Presentation braid() {
  return Presentation("B3", {{"x"}, {"y"}},
                      {FreeElement::monomial(Word{0, 1, 0}) - FreeElement::monomial(Word{1, 0, 1})});
}

namespace detail {

template <class F>
CriterionResult timed(int id, double limit, std::string title, F body) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail += std::string(r.detail.empty() ? "" : "; ") + "exception: " + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0.0 && r.seconds >= limit) {
    r.pass = false;
    r.detail += "; over the " + std::to_string(static_cast<int>(limit)) + " s budget";
  }
  return r;
}

/// Words over {s, s'} of each length with no letter repeated consecutively.
inline std::vector<std::size_t> alternating_census(std::size_t max_len) {
  std::vector<std::size_t> counts(max_len + 1, 0);
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      bool ok = true;
      for (std::size_t k = 1; k < len; ++k) ok = ok && (((bits >> k) & 1) != ((bits >> (k - 1)) & 1));
      counts[len] += ok ? 1 : 0;
    }
  }
  return counts;
}

}  // namespace detail

inline CriterionResult criterion_1() {
  return detail::timed(1, 1.0, "x^n y - y x^n = n x^n, n = 1..10", [](CriterionResult& r) {
    Algebra a = complete_algebra(weyl_like(), 12);
    std::size_t ok = 0;
    for (long n = 1; n <= 10; ++n) {
      FreeElement xn = FreeElement::monomial(Word(std::vector<Letter>(static_cast<std::size_t>(n), 0)));
      FreeElement y = FreeElement::letter(1);
      ok += a.canonical(xn * y - y * xn - xn * Scalar(n)).is_zero() ? 1 : 0;
    }
    r.detail = std::to_string(ok) + "/10 reduce to 0, " + std::to_string(a.system.rules().size()) + " rule(s)";
    r.pass = ok == 10;
  });
}

inline CriterionResult criterion_2() {
  return detail::timed(2, 0.0, "D(C[Z2]) basis census, lengths 0..12", [](CriterionResult& r) {
    Algebra d = complete_algebra(dz2_presentation(), 12);
    std::vector<std::size_t> counts(13, 0);
    for (const auto& w : basis_words(d.system, 12)) ++counts[w.length()];
    auto oracle = detail::alternating_census(12);
    std::ostringstream os;
    for (std::size_t k = 0; k < counts.size(); ++k) os << (k ? "," : "") << counts[k];
    bool shape = counts[0] == 1;
    for (std::size_t k = 1; k < counts.size(); ++k) shape = shape && counts[k] == 2;
    r.detail = "counts " + os.str();
    r.pass = shape && counts == oracle && d.system.is_complete();
  });
}

inline CriterionResult criterion_3(std::uint64_t seed) {
  return detail::timed(3, 30.0, "orderedness on 200 random tuples", [seed](CriterionResult& r) {
    Algebra d = complete_algebra(star_double(free_on({"x", "y"})).presentation, 6);
    Rng rng(seed);
    std::uniform_int_distribution<std::size_t> len(1, 4);
    std::size_t ok = 0;
    for (int t = 0; t < 200; ++t) {
      std::vector<FreeElement> xs;
      std::size_t n = len(rng);
      for (std::size_t k = 0; k < n; ++k) xs.push_back(random_element(rng, d.letter_count(), 3));
      std::size_t deg = 0;
      for (const auto& x : xs) deg = std::max(deg, x.degree());
      SquareSumReport rep = sum_of_star_squares(d, xs);
      ok += (!rep.is_zero && rep.degree == 2 * deg) ? 1 : 0;
    }
    r.detail = std::to_string(ok) + "/200";
    r.pass = ok == 200;
  });
}

inline CriterionResult criterion_4(std::uint64_t seed) {
  return detail::timed(4, 0.0, "no non-scalar algebraically bounded element", [seed](CriterionResult& r) {
    Algebra d = complete_algebra(star_double(free_on({"x", "y"})).presentation, 6);
    Rng rng(seed + 1);
    std::uniform_int_distribution<std::size_t> len(0, 3);
    std::size_t ok = 0;
    for (int t = 0; t < 100; ++t) {
      std::vector<FreeElement> xs{random_nonscalar(rng, d.letter_count(), 3)};
      std::size_t extra = len(rng);
      for (std::size_t k = 0; k < extra; ++k) xs.push_back(random_element(rng, d.letter_count(), 3));
      std::shuffle(xs.begin(), xs.end(), rng);
      ok += boundedness_test(d, xs) ? 0 : 1;
    }
    std::size_t scalar_ok = 0;
    for (int t = 0; t < 20; ++t) {
      // (a lambda, b mu) with a^2 + b^2 = 1, |lambda| = |mu| = 1
      Scalar ab = random_unit_scalar(rng);
      Scalar a = ab.re(), b = ab.im();
      std::vector<FreeElement> xs{FreeElement::scalar(a * random_unit_scalar(rng)),
                                  FreeElement::scalar(b * random_unit_scalar(rng))};
      scalar_ok += boundedness_test(d, xs) ? 1 : 0;
    }
    r.detail = std::to_string(ok) + "/100 non-scalar tuples rejected, " + std::to_string(scalar_ok) +
               "/20 unit scalar tuples accepted";
    r.pass = ok == 100 && scalar_ok == 20;
  });
}

inline CriterionResult criterion_5(std::uint64_t seed) {
  return detail::timed(5, 0.0, "no non-scalar unitary, projection or partial isometry", [seed](CriterionResult& r) {
    Algebra d = complete_algebra(star_double(free_on({"x", "y"})).presentation, 9);
    Rng rng(seed + 2);
    std::size_t ok = 0;
    for (int t = 0; t < 200; ++t)
      ok += isometry_classify(d, random_nonscalar(rng, d.letter_count(), 3)).kind == IsometryKind::none ? 1 : 0;
    std::size_t unit_ok = 0;
    for (int t = 0; t < 20; ++t)
      unit_ok += isometry_classify(d, FreeElement::scalar(random_unit_scalar(rng))).kind == IsometryKind::unitary;
    r.detail = std::to_string(ok) + "/200 none, " + std::to_string(unit_ok) + "/20 unitary";
    r.pass = ok == 200 && unit_ok == 20;
  });
}

inline CriterionResult criterion_6() {
  return detail::timed(6, 0.0, "gamma embedding into A (*) D(C[Z])", [](CriterionResult& r) {
    bool pass = true;
    std::ostringstream os;
    for (const Presentation& a : {z2_selfadjoint(), weyl_like_star()}) {
      GammaEmbedding ge = gamma_embed(a, 12);
      std::size_t words = 0, roundtrip = 0;
      for (const auto& w : fock_basis(underlying_plain(a), 4, "^")) {
        ++words;
        FreeElement f = FreeElement::monomial(w);
        roundtrip += gamma_inverse(ge, ge.map.apply(f)) == ge.map.source().canonical(f) ? 1 : 0;
      }
      InjectivityReport inj = injectivity_certificate(ge.map, 4);
      GeneratorMap z = z_embed(4);
      bool z_ok = true;
      for (const auto& rel : z.source().presentation.relators()) {
        // each relator is (unit word) - 1; its image's unit word must reduce to 1
        FreeElement word_part = rel + FreeElement::one();
        z_ok = z_ok && z.apply_canonical(word_part) == FreeElement::one();
      }
      bool ok = roundtrip == words && inj.injective_at_bound() && z_ok && ge.map.star_compatible();
      pass = pass && ok;
      os << (os.tellp() > 0 ? "; " : "") << a.name() << ": roundtrip " << roundtrip << "/" << words << ", rank " << inj.rank << "/"
         << inj.basis_words << (z_ok ? ", z relators -> e" : ", z relator FAILED");
    }
    r.detail = os.str();
    r.pass = pass;
  });
}

inline CriterionResult criterion_7(std::uint64_t seed) {
  return detail::timed(7, 0.0, "psi o psi = id and psi(x#) = x* on D(C[Z2]) * D(C[Z2])*", [seed](CriterionResult& r) {
    Presentation a = dz2_presentation();
    TwoInvolutions ctx = two_involutions(a);
    Algebra alg = complete_algebra(ctx.dbl.presentation, 8);
    Rng rng(seed + 3);
    std::size_t inv_ok = 0, swap_ok = 0;
    for (int t = 0; t < 100; ++t) {
      FreeElement f = random_element(rng, alg.letter_count(), 4, 5);
      inv_ok += alg.canonical(psi(ctx, psi(ctx, f))) == alg.canonical(f) ? 1 : 0;
      swap_ok += alg.canonical(psi(ctx, sharp_involution(ctx, f))) == alg.canonical(second_involution(ctx, f)) ? 1 : 0;
    }
    r.detail = "psi^2 = id " + std::to_string(inv_ok) + "/100, psi(x#) = x* " + std::to_string(swap_ok) + "/100";
    r.pass = inv_ok == 100 && swap_ok == 100;
  });
}

inline CriterionResult criterion_8() {
  return detail::timed(8, 0.0, "D(D(A)) relator correspondence with D(A) (*) D(A*)", [](CriterionResult& r) {
    std::ostringstream os;
    bool pass = true;
    for (const Presentation& p : {free_on({"x"}), group_algebra_z2(), weyl_like()}) {
      DoubleDoubleReport rep = double_double(p, 8);
      pass = pass && rep.verified() && !rep.trust_bound;
      os << (os.tellp() > 0 ? "; " : "") << p.name() << ": " << rep.relators_checked << " relators";
    }
    r.detail = os.str();
    r.pass = pass;
  });
}

inline std::vector<Scalar> criterion_9_lambdas() {
  return {Scalar::rational(1, 10), Scalar::rational(3, 20), Scalar::rational(1, 5), Scalar::rational(1, 4),
          Scalar::rational(3, 10)};
}

inline CriterionResult criterion_9(std::uint64_t seed) {
  return detail::timed(9, 5.0, "dz2 representations and faithfulness at bound 8", [seed](CriterionResult& r) {
    Rng rng(seed + 4);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) worst = std::max(worst, dz2_rep(random_disc(rng)).max_relator_residual());
    FaithfulnessReport f = faithfulness_certificate(8, criterion_9_lambdas());
    std::ostringstream os;
    os << "max relator residual " << worst << ", numerical rank " << f.numerical_rank << "/" << f.basis_words
       << " (sigma_min/sigma_max " << f.sigma_ratio_min << ", threshold " << f.threshold << "), exact rank "
       << f.exact_rank << "/" << f.basis_words;
    r.detail = os.str();
    r.pass = worst <= tol::relator_residual && f.basis_words == 17 && f.full_rank();
  });
}

inline CriterionResult criterion_10(std::uint64_t seed) {
  return detail::timed(10, 0.0, "C B^dagger C^-1 = A for 100 random (S, T)", [seed](CriterionResult& r) {
    Rng rng(seed + 5);
    std::uniform_int_distribution<int> dim(1, 6), coin(0, 4);
    std::size_t ok = 0, nonscalar_cases = 0;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      Eigen::Index n = dim(rng);
      MatrixC s = random_disc_matrix(rng, n, n) + 2.0 * MatrixC::Identity(n, n);
      MatrixC tm = MatrixC::Zero(n, n);
      bool degenerate = coin(rng) == 0;
      Complex common = random_disc(rng) * 4.0;
      for (Eigen::Index i = 0; i < n; ++i) tm(i, i) = degenerate ? common : random_disc(rng) * 4.0;
      SimilarityWitness w = nonisometric_witness(s, tm);
      worst = std::max(worst, w.residual / w.residual_bound);
      nonscalar_cases += w.distinct_t ? 1 : 0;
      ok += w.contract_holds() ? 1 : 0;
    }
    std::ostringstream os;
    os << ok << "/100 within bound (worst residual/bound " << worst << "), " << nonscalar_cases
       << " cases with distinct T entries";
    r.detail = os.str();
    r.pass = ok == 100;
  });
}

inline CriterionResult criterion_11(std::uint64_t seed) {
  return detail::timed(11, 0.0, "block witnesses for |phi| |phi^-1| >= 1/|c|", [seed](CriterionResult& r) {
    Rng rng(seed + 6);
    std::uniform_int_distribution<int> dim(1, 3);
    std::size_t ok = 0, total = 0;
    double slack = 1e300;
    for (double c : {1.0, 0.5, 0.1}) {
      for (int t = 0; t < 20; ++t) {
        MatrixC y = random_disc_matrix(rng, dim(rng), dim(rng));
        VcWitness w = vc_bound_witness(c, y);
        ++total;
        ok += w.certified ? 1 : 0;
        slack = std::min(slack, w.witness_product - w.target);
      }
    }
    std::ostringstream os;
    os << ok << "/" << total << " certified, min(product - 1/|c|) = " << slack;
    r.detail = os.str();
    r.pass = ok == total;
  });
}

inline CriterionResult criterion_12(std::uint64_t seed) {
  return detail::timed(12, 0.0, "reduction idempotent, linear, strategy-independent, ideal membership",
                       [seed](CriterionResult& r) {
    struct Case {
      Algebra alg;
      std::size_t deg;
    };
    std::vector<Case> cases;
    cases.push_back({complete_algebra(weyl_like(), 8), 4});
    cases.push_back({complete_algebra(dz2_presentation(), 8), 4});
    cases.push_back({complete_algebra(weyl_like_star(), 8), 4});
    cases.push_back({complete_algebra(braid(), 7), 4});
    Rng rng(seed + 7);
    std::size_t checks = 0, failures = 0;
    bool saw_truncated = false;
    for (const auto& c : cases) {
      const Algebra& a = c.alg;
      saw_truncated = saw_truncated || !a.system.is_complete();
      std::size_t bound = a.system.trust_bound().value_or(c.deg + 4);
      for (int t = 0; t < 50; ++t) {
        FreeElement f = random_element(rng, a.letter_count(), c.deg);
        FreeElement g = random_element(rng, a.letter_count(), c.deg);
        Scalar al = random_scalar(rng), be = random_scalar(rng);
        FreeElement rf = a.canonical(f), rg = a.canonical(g);
        failures += a.canonical(rf) == rf ? 0 : 1;
        failures += a.canonical(f * al + g * be) == rf * al + rg * be ? 0 : 1;
        failures += reduce_randomized(a.system, f, rng) == rf ? 0 : 1;
        for (const auto& rel : a.presentation.relators()) {
          if (rel.degree() >= bound) continue;
          std::size_t room = bound - rel.degree();
          Word left = random_word(rng, a.letter_count(), 0, room / 2);
          Word right = random_word(rng, a.letter_count(), 0, room - left.length());
          failures += a.canonical(rel.sandwich(left, right) * random_scalar(rng)).is_zero() ? 0 : 1;
          ++checks;
        }
        checks += 3;
      }
    }
    r.detail = std::to_string(checks) + " checks, " + std::to_string(failures) + " failures" +
               (saw_truncated ? ", includes a truncated system" : "");
    r.pass = failures == 0;
  });
}

inline constexpr std::uint64_t default_seed = 20240601;

inline std::vector<CriterionResult> run_all(std::uint64_t seed = default_seed) {
  return {criterion_1(),      criterion_2(),      criterion_3(seed),  criterion_4(seed),
          criterion_5(seed),  criterion_6(),      criterion_7(seed),  criterion_8(),
          criterion_9(seed),  criterion_10(seed), criterion_11(seed), criterion_12(seed)};
}

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.title << " -- " << r.detail << " ["
     << r.seconds << " s]";
  return os.str();
}

}  // namespace ncalg::acceptance
