/*
  Acceptance suite: runs every criterion at its stated tolerance and prints
  one pass/fail line per criterion.  Exits nonzero if any criterion fails.
*/

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "affpav/grasstools.hpp"
#include "affpav/hecke.hpp"
#include "affpav/oracle.hpp"
#include "affpav/paving.hpp"

using namespace affpav;
using rootdata::RootDatum;
using rootdata::RootDatumPtr;
using rootdata::Vec;
using weyl::multiply;
using weyl::simple_affine;
using weyl::WeylElement;

namespace {

struct Criterion {
  int number;
  std::string name;
  bool passed = true;
  std::string detail;
  void fail(const std::string& msg) {
    passed = false;
    if (detail.empty()) detail = msg;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<int> random_word(std::mt19937& rng, int alphabet, int len) {
  std::vector<int> w;
  for (int i = 0; i < len; ++i) w.push_back(static_cast<int>(rng() % alphabet));
  return w;
}

WeylElement random_element(const RootDatum& rd, std::mt19937& rng, int max_len,
                           const std::vector<WeylElement>& omega) {
  WeylElement x = omega[rng() % omega.size()];
  for (int i = 0, n = rng() % (max_len + 1); i < n; ++i)
    x = multiply(x, simple_affine(rd, rng() % (rd.rank() + 1)));
  return x;
}

Vec sum_of_simple_coroots(const RootDatum& rd) {
  Vec mu(rd.rank(), 0);
  for (int j = 0; j < rd.rank(); ++j)
    mu[j] = rd.simple_root(1).cov[j] + rd.simple_root(2).cov[j];
  return mu;
}

// ---------------------------------------------------------------------------

Criterion criterion1() {
  Criterion c{1, "B2-adjoint spherical triple product: c^0 = q^5 - q via route A and route B, < 60 s each"};
  auto rd = RootDatum::parse("B2:adjoint");
  weyl::ParabolicData pd = weyl::parabolic_data(*rd, {1, 2});
  WeylElement tmu = weyl::translation(*rd, sum_of_simple_coroots(*rd));
  PolyQ expect = PolyQ::monomial(5) - PolyQ::monomial(1);

  auto t0 = std::chrono::steady_clock::now();
  PolyQ route_a =
      paving::parahoric_fiber({tmu, tmu, tmu}, pd, WeylElement::identity(*rd)).value.value();
  double ta = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  PolyQ route_b = hecke::convolution_value({tmu, tmu, tmu}, pd, WeylElement::identity(*rd));
  double tb = seconds_since(t0);

  if (!(route_a == expect)) c.fail("route A returned " + route_a.to_string());
  if (!(route_b == expect)) c.fail("route B returned " + route_b.to_string());
  if (ta >= 60.0) c.fail("route A took too long");
  if (tb >= 60.0) c.fail("route B took too long");
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << "route A " << ta << " s, route B " << tb << " s";
  c.detail = os.str();
  return c;
}

Criterion criterion2() {
  Criterion c{2, "quadratic relation T_s T_s = (q-1) T_s + q T_e for all s in S_aff"};
  for (const char* spec : {"A1:sc", "A2:sc", "B2:adjoint"}) {
    auto rd = RootDatum::parse(spec);
    for (int i = 0; i <= rd->rank(); ++i) {
      WeylElement s = simple_affine(*rd, i);
      hecke::HeckeElement lhs =
          hecke::hecke_product(hecke::HeckeElement::basis(s), hecke::HeckeElement::basis(s));
      hecke::HeckeElement rhs(*rd);
      rhs.add_term(s, PolyQ::q_pow_times_qm1_pow(0, 1));
      rhs.add_term(WeylElement::identity(*rd), PolyQ::monomial(1));
      if (!(lhs == rhs))
        c.fail(std::string(spec) + " letter " + std::to_string(i));
    }
  }
  return c;
}

Criterion criterion3() {
  Criterion c{3, "mass identities on 210 random words, r <= 12: sum G q^l = q^r, sum F q^l = (q+1)^r"};
  std::mt19937 rng(1001);
  int done = 0;
  for (const char* spec : {"A1:sc", "A2:sc", "B2:adjoint"}) {
    auto rd = RootDatum::parse(spec);
    for (int k = 0; k < 70; ++k) {
      int r = 1 + static_cast<int>(rng() % 12);
      std::vector<int> word = random_word(rng, rd->rank() + 1, r);
      paving::Distribution g =
          paving::iwahori_distribution(*rd, word, paving::Mode::Uncompactified);
      PolyQ mass_g;
      for (const auto& [v, val] : g.values)
        mass_g += val.value().shifted(static_cast<int>(weyl::length(v)));
      if (!(mass_g == PolyQ::monomial(r))) c.fail(std::string(spec) + ": G mass failed");
      paving::Distribution f =
          paving::iwahori_distribution(*rd, word, paving::Mode::Compactified);
      PolyQ mass_f, expect(1), qp1 = PolyQ(1) + PolyQ::monomial(1);
      for (const auto& [v, val] : f.values)
        mass_f += val.value().shifted(static_cast<int>(weyl::length(v)));
      for (int i = 0; i < r; ++i) expect *= qp1;
      if (!(mass_f == expect)) c.fail(std::string(spec) + ": F mass failed");
      ++done;
    }
  }
  c.detail = std::to_string(done) + " words";
  return c;
}

Criterion criterion4() {
  Criterion c{4, "q = 1: G is the word-product indicator, F counts subwords (2^r enumeration)"};
  std::mt19937 rng(1002);
  int done = 0;
  for (const char* spec : {"A1:sc", "A2:sc", "B2:adjoint"}) {
    auto rd = RootDatum::parse(spec);
    for (int k = 0; k < 40; ++k) {
      int r = 1 + static_cast<int>(rng() % 12);
      std::vector<int> word = random_word(rng, rd->rank() + 1, r);
      WeylElement full = weyl::from_word(*rd, word);
      paving::Distribution g =
          paving::iwahori_distribution(*rd, word, paving::Mode::Uncompactified);
      for (const auto& [v, val] : g.values)
        if (!(val.value().eval_at_one() == (v == full ? BigInt(1) : BigInt(0))))
          c.fail(std::string(spec) + ": G at q=1");
      std::unordered_map<WeylElement, long long, weyl::WeylHash> counts;
      for (unsigned mask = 0; mask < (1u << r); ++mask) {
        WeylElement prod = WeylElement::identity(*rd);
        for (int i = 0; i < r; ++i)
          if (mask & (1u << i)) prod = multiply(prod, simple_affine(*rd, word[i]));
        ++counts[prod];
      }
      paving::Distribution f =
          paving::iwahori_distribution(*rd, word, paving::Mode::Compactified);
      long long covered = 0;
      for (const auto& [v, val] : f.values) {
        if (!(val.value().eval_at_one() == BigInt(counts[v])))
          c.fail(std::string(spec) + ": F at q=1");
        covered += counts[v];
      }
      if (covered != (1LL << r)) c.fail(std::string(spec) + ": F support misses subwords");
      ++done;
    }
  }
  c.detail = std::to_string(done) + " words";
  return c;
}

Criterion criterion5() {
  Criterion c{5, "subword sum: F_r(v) = sum over J of G(s_J; v) on 60 random words, r <= 8"};
  std::mt19937 rng(1003);
  int done = 0;
  for (const char* spec : {"A1:sc", "A2:sc", "B2:adjoint"}) {
    auto rd = RootDatum::parse(spec);
    for (int k = 0; k < 20; ++k) {
      int r = 1 + static_cast<int>(rng() % 8);
      std::vector<int> word = random_word(rng, rd->rank() + 1, r);
      std::unordered_map<WeylElement, PolyQ, weyl::WeylHash> total;
      for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < r; ++i)
          if (mask & (1u << i)) sub.push_back(word[i]);
        paving::Distribution g =
            paving::iwahori_distribution(*rd, sub, paving::Mode::Uncompactified);
        for (const auto& [v, val] : g.values) total[v] += val.value();
      }
      paving::Distribution f =
          paving::iwahori_distribution(*rd, word, paving::Mode::Compactified);
      size_t nonzero = 0;
      for (const auto& [v, val] : f.values) {
        if (!(total[v] == val.value())) c.fail(std::string(spec) + ": subword sum");
        if (!val.is_zero()) ++nonzero;
      }
      size_t total_nonzero = 0;
      for (const auto& [v, val] : total)
        if (!val.is_zero()) ++total_nonzero;
      if (nonzero != total_nonzero) c.fail(std::string(spec) + ": support mismatch");
      ++done;
    }
  }
  c.detail = std::to_string(done) + " words";
  return c;
}

Criterion criterion6() {
  Criterion c{6, "oracle equivalence: SL2/SL3 matrix counts = paving values at q = p, < 5 min"};
  auto t0 = std::chrono::steady_clock::now();
  oracle::SuiteReport rep = oracle::suite_bott_samelson(/*full=*/true);
  double dt = seconds_since(t0);
  if (!rep.passed) c.fail(rep.detail);
  if (dt >= 300.0) c.fail("suite exceeded 5 minutes");
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << rep.checks << " comparisons in " << dt << " s";
  c.detail = os.str();
  return c;
}

Criterion criterion7and8(Criterion& c8) {
  Criterion c{7, "route A = route B on 108 random parahoric tuples (r <= 3, l <= 6)"};
  std::mt19937 rng(1004);
  int tuples = 0;
  for (const char* spec : {"A1:sc", "A2:adjoint", "B2:adjoint"}) {
    auto rd = RootDatum::parse(spec);
    auto omega = weyl::omega_elements(*rd);
    std::vector<std::vector<int>> subsets = {{}, {1}};
    {
      std::vector<int> sph;
      for (int i = 1; i <= rd->rank(); ++i) sph.push_back(i);
      subsets.push_back(sph);
    }
    for (const auto& gens : subsets) {
      weyl::ParabolicData pd = weyl::parabolic_data(*rd, gens);
      for (int k = 0; k < 12; ++k) {
        int r = 1 + static_cast<int>(rng() % 3);
        std::vector<WeylElement> tuple;
        for (int i = 0; i < r; ++i) tuple.push_back(random_element(*rd, rng, 6, omega));
        std::vector<bool> closed;
        for (int i = 0; i < r; ++i) closed.push_back(rng() % 4 == 0);
        std::vector<WeylElement> points{WeylElement::identity(*rd),
                                        random_element(*rd, rng, 5, omega)};
        {
          WeylElement d = WeylElement::identity(*rd);
          for (const auto& w : tuple) d = weyl::demazure(d, w);
          points.push_back(d);
        }
        for (const WeylElement& x : points) {
          PolyQ a = paving::parahoric_fiber(tuple, pd, x, closed).value.value();
          PolyQ b = hecke::convolution_value(tuple, pd, x, closed);
          if (!(a == b)) c.fail(std::string(spec) + ": route mismatch");
          if (!a.nonneg_in_q_minus_one())
            c8.fail(std::string(spec) + ": fiber value not in Z>=0[q-1]");
        }
        // structure constants of the first two factors, same sample family
        if (r >= 2) {
          hecke::StructureConstantTable tab =
              hecke::structure_constants(tuple[0], tuple[1], pd);
          for (const auto& [v, cc] : tab.constants)
            if (!cc.nonneg_in_q_minus_one())
              c8.fail(std::string(spec) + ": structure constant not in Z>=0[q-1]");
        }
        ++tuples;
      }
    }
  }
  // compactified Iwahori fibers land in Z>=0[q]
  std::mt19937 rng2(1005);
  for (const char* spec : {"A1:sc", "A2:sc", "B2:adjoint"}) {
    auto rd = RootDatum::parse(spec);
    for (int k = 0; k < 30; ++k) {
      std::vector<int> word = random_word(rng2, rd->rank() + 1, 1 + rng2() % 8);
      paving::Distribution f =
          paving::iwahori_distribution(*rd, word, paving::Mode::Compactified);
      for (const auto& [v, val] : f.values) {
        if (!val.pure_affine()) c8.fail("compactified fiber produced a Gm factor");
        if (!val.value().nonneg_coeffs()) c8.fail("compactified fiber not in Z>=0[q]");
      }
    }
  }
  c.detail = std::to_string(tuples) + " tuples, 3 base points each";
  c8.detail = "same samples + 90 compactified words";
  return c;
}

Criterion criterion9() {
  Criterion c{9, "bruhat_leq = subword test for all pairs l <= 8 (A1, A2); Demazure associativity on 10^4 triples"};
  for (auto spec : {std::make_pair('A', 1), std::make_pair('A', 2)}) {
    auto rd = RootDatum::make(spec.first, spec.second, rootdata::Isogeny::SimplyConnected);
    std::vector<WeylElement> ball = oracle::length_ball(*rd, 8);
    long long pairs = 0;
    for (const WeylElement& y : ball) {
      // literal 2^l subword closure of one reduced word of y
      weyl::ReducedWord wy = weyl::reduced_word(y);
      std::set<WeylElement> closure;
      for (unsigned mask = 0; mask < (1u << wy.letters.size()); ++mask) {
        WeylElement prod = wy.omega_part;
        for (size_t i = 0; i < wy.letters.size(); ++i)
          if (mask & (1u << i))
            prod = multiply(prod, simple_affine(*rd, wy.letters[i]));
        closure.insert(prod);
      }
      for (const WeylElement& x : ball) {
        ++pairs;
        if (weyl::bruhat_leq(x, y) != (closure.count(x) == 1)) {
          c.fail("bruhat mismatch in " + std::string(1, spec.first) +
                 std::to_string(spec.second));
          break;
        }
      }
      if (!c.passed) break;
    }
    if (!c.passed) break;
  }
  if (c.passed) {
    auto rd = RootDatum::parse("B2:adjoint");
    auto omega = weyl::omega_elements(*rd);
    std::mt19937 rng(1006);
    for (int k = 0; k < 10000; ++k) {
      WeylElement x = random_element(*rd, rng, 5, omega);
      WeylElement y = random_element(*rd, rng, 5, omega);
      WeylElement z = random_element(*rd, rng, 5, omega);
      if (!(weyl::demazure(weyl::demazure(x, y), z) == weyl::demazure(x, weyl::demazure(y, z)))) {
        c.fail("Demazure associativity failed");
        break;
      }
    }
  }
  return c;
}

Criterion criterion10() {
  Criterion c{10, "MV suite: nonvanishing iff lambda in Omega(mu), nu-independence, extreme case = 1"};
  {  // A1:sc, P = B, mu = alpha^vee and 2 alpha^vee
    auto rd = RootDatum::parse("A1:sc");
    grass::ParabolicChoice B = grass::make_parabolic(*rd, {});
    for (long long m = 1; m <= 2; ++m) {
      Vec mu{m};
      std::set<Vec> omega_mu;
      for (const Vec& v : grass::omega_set(*rd, mu)) omega_mu.insert(v);
      for (long long t = -m - 2; t <= m + 2; ++t) {
        Vec lam{t};
        Vec nu1 = grass::find_nu_adapted(*rd, mu, B, lam, 0);
        Vec nu2 = grass::find_nu_adapted(*rd, mu, B, lam, 1);
        PolyQ v1 = grass::mv_intersection_with_nu(*rd, mu, lam, B, nu1).value.value();
        PolyQ v2 = grass::mv_intersection_with_nu(*rd, mu, lam, B, nu2).value.value();
        if (!(v1 == v2)) c.fail("A1 nu-dependence at lambda=" + std::to_string(t));
        if (v1.is_zero() == (omega_mu.count(lam) == 1))
          c.fail("A1 nonvanishing mismatch at lambda=" + std::to_string(t));
      }
    }
    PolyQ extreme = grass::mv_intersection(*rd, Vec{1}, Vec{-1}, B).fiber.value.value();
    if (!(extreme == PolyQ(1))) c.fail("A1 extreme case returned " + extreme.to_string());
  }
  {  // B2:adjoint, P = B, mu = alpha_1^vee + alpha_2^vee
    auto rd = RootDatum::parse("B2:adjoint");
    grass::ParabolicChoice B = grass::make_parabolic(*rd, {});
    Vec mu = sum_of_simple_coroots(*rd);
    std::set<Vec> omega_mu;
    for (const Vec& v : grass::omega_set(*rd, mu)) omega_mu.insert(v);
    for (long long a = -3; a <= 3; ++a)
      for (long long b = -3; b <= 3; ++b) {
        Vec lam{a, b};
        Vec nu1 = grass::find_nu_adapted(*rd, mu, B, lam, 0);
        PolyQ v1 = grass::mv_intersection_with_nu(*rd, mu, lam, B, nu1).value.value();
        if (v1.is_zero() == (omega_mu.count(lam) == 1)) {
          c.fail("B2 nonvanishing mismatch");
          break;
        }
        if (omega_mu.count(lam)) {
          Vec nu2 = grass::find_nu_adapted(*rd, mu, B, lam, 1);
          PolyQ v2 = grass::mv_intersection_with_nu(*rd, mu, lam, B, nu2).value.value();
          if (!(v1 == v2)) c.fail("B2 nu-dependence");
        }
      }
    c.detail = "A1 box [-4,4] (mu = a, 2a), B2 box [-3,3]^2, two nu witnesses each";
  }
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  auto t0 = std::chrono::steady_clock::now();
  results.push_back(criterion1());
  results.push_back(criterion2());
  results.push_back(criterion3());
  results.push_back(criterion4());
  results.push_back(criterion5());
  results.push_back(criterion6());
  {
    Criterion c8{8, "positivity: fibers and constants in Z>=0[q-1]; compactified fibers in Z>=0[q]"};
    results.push_back(criterion7and8(c8));
    results.push_back(std::move(c8));
  }
  results.push_back(criterion9());
  results.push_back(criterion10());

  int failures = 0;
  for (const Criterion& c : results) {
    std::printf("criterion %2d: %s — %s%s%s\n", c.number, c.passed ? "PASS" : "FAIL",
                c.name.c_str(), c.detail.empty() ? "" : " — ", c.detail.c_str());
    failures += !c.passed;
  }
  std::printf("acceptance: %zu criteria, %d failed, total %.1f s\n", results.size(),
              failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
