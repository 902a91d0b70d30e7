#include <cmath>
#include <complex>

#include "doctest.h"
#include "gdd/label.hpp"

using namespace gdd;

namespace {

// floating-point evaluation at zeta_N = exp(2*pi*i/N)
std::complex<double> eval(const Label& l, int n) {
  const double arg = 2.0 * M_PI * static_cast<double>(l.exponent()) / n;
  std::complex<double> v = std::polar(1.0, arg);
  if (l.negative()) v = -v;
  return v;
}

}  // namespace

TEST_CASE("label basics and normalization") {
  const auto g = ParamOrder::generic();
  const auto n4 = ParamOrder::finite(4);

  CHECK(Label::one(g).is_one());
  CHECK(Label::minus_one(g).is_minus_one());
  CHECK_FALSE(Label::make(g, true, 1).is_one());

  // q * q^{-1} = 1 at N=4
  CHECK((Label::q(n4) * Label::q_pow(n4, -1)).is_one());
  // (-q)(-q) = q^2 generically
  CHECK(Label::make(g, true, 1) * Label::make(g, true, 1) == Label::q_pow(g, 2));
  // exponent arithmetic mod 3: q^2 * q^2 = q at N=3
  const auto n3 = ParamOrder::finite(3);
  CHECK(Label::q_pow(n3, 2) * Label::q_pow(n3, 2) == Label::q(n3));

  // even-N alias: -q^e = q^{e + N/2}
  CHECK(Label::make(n4, true, 1) == Label::q_pow(n4, 3));
  // value -1 is sign -1, exponent 0 after normalization
  const Label m = Label::q_pow(n4, 2);
  CHECK(m.is_minus_one());
  CHECK(m.negative());
  CHECK(m.exponent() == 0);

  CHECK_THROWS_AS(ParamOrder::finite(2), LabelError);
  CHECK_THROWS_AS((void)(Label::q(n4) * Label::q(n3)), LabelError);
}

TEST_CASE("pow and inverses") {
  const auto g = ParamOrder::generic();
  const auto n5 = ParamOrder::finite(5);
  CHECK(Label::minus_one(g).pow(2).is_one());
  CHECK(Label::q(n5).pow(5).is_one());
  CHECK(Label::make(g, true, 1).pow(3) == Label::make(g, true, 3));
  CHECK(Label::q_pow(g, -7).pow(0).is_one());
  for (int e = -6; e <= 6; ++e) {
    CHECK((Label::q_pow(n5, e) * Label::q_pow(n5, e).inverse()).is_one());
  }
}

TEST_CASE("multiplicative order") {
  CHECK(*Label::minus_one(ParamOrder::generic()).multiplicative_order() == 2);
  const auto n6 = ParamOrder::finite(6);
  CHECK(*Label::q_pow(n6, 2).multiplicative_order() == 3);
  CHECK_FALSE(Label::q(ParamOrder::generic()).multiplicative_order().has_value());
  CHECK(*Label::one(n6).multiplicative_order() == 1);
  CHECK(*Label::make(n6, true, 1).multiplicative_order() == 3);  // -q = z6^4
}

TEST_CASE("q-number vanishing") {
  const auto g = ParamOrder::generic();
  CHECK(Label::minus_one(g).qnumber_is_zero(2));  // 1 + (-1)
  const auto n3 = ParamOrder::finite(3);
  CHECK(Label::q(n3).qnumber_is_zero(3));  // 1 + z3 + z3^2
  CHECK_FALSE(Label::q(g).qnumber_is_zero(2));
  CHECK(Label::q(g).qnumber_is_zero(0));
  CHECK_FALSE(Label::one(g).qnumber_is_zero(5));
}

TEST_CASE("grammar round trip") {
  const auto n12 = ParamOrder::finite(12);
  const auto g = ParamOrder::generic();
  for (const char* s : {"1", "-1", "q", "-q", "q^-3", "-q^2", "q^11"}) {
    for (const auto& ord : {n12, g}) {
      const auto l = Label::parse(s, ord);
      REQUIRE(l.has_value());
      const auto back = Label::parse(l->str(), ord);
      REQUIRE(back.has_value());
      CHECK(*back == *l);
    }
  }
  CHECK_FALSE(Label::parse("q^", g).has_value());
  CHECK_FALSE(Label::parse("2", g).has_value());
  CHECK_FALSE(Label::parse("qq", g).has_value());
  CHECK_FALSE(Label::parse("q^2x", g).has_value());
}

TEST_CASE("normalization is idempotent and display is minimal") {
  for (int n : {3, 4, 5, 6, 7, 8, 12}) {
    const auto ord = ParamOrder::finite(n);
    for (int s = 0; s < 2; ++s) {
      for (long long e = -2 * n; e <= 2 * n; ++e) {
        const Label l = Label::make(ord, s == 1, e);
        const Label renorm = Label::make(ord, l.negative(), l.exponent());
        CHECK(renorm == l);
        CHECK(std::abs(l.exponent()) <= n / 2);
      }
    }
  }
}

TEST_CASE("finite label group is cyclic of order lcm(2, N)") {
  for (int n : {3, 4, 5, 6, 7, 8, 9, 10, 11, 12}) {
    const auto ord = ParamOrder::finite(n);
    const int m = ord.group_order();
    // generator: -q for odd N (order 2n), q for ... use element of max order
    std::vector<Label> all;
    for (int s = 0; s < 2; ++s)
      for (int e = 0; e < n; ++e) all.push_back(Label::make(ord, s == 1, e));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    CHECK(static_cast<int>(all.size()) == m);
    // group axioms: closure and inverses (associativity is inherited)
    const Label id = Label::one(ord);
    bool has_gen = false;
    for (const Label& x : all) {
      CHECK((x * x.inverse()).is_one());
      if (*x.multiplicative_order() == m) has_gen = true;
      for (const Label& y : all)
        CHECK(std::binary_search(all.begin(), all.end(), x * y));
    }
    CHECK(has_gen);
    CHECK((id * id).is_one());
  }
}

TEST_CASE("predicates agree with a floating-point oracle") {
  for (int n : {3, 4, 5, 6, 7, 8, 9, 10, 11, 12}) {
    const auto ord = ParamOrder::finite(n);
    for (int s = 0; s < 2; ++s) {
      for (long long e = -2 * n; e <= 2 * n; ++e) {
        const Label l = Label::make(ord, s == 1, e);
        // reference value computed directly from the raw (sign, exp)
        std::complex<double> raw =
            std::polar(1.0, 2.0 * M_PI * static_cast<double>(e) / n);
        if (s) raw = -raw;
        CHECK(std::abs(raw - eval(l, n)) < 1e-9);

        CHECK(l.is_one() == (std::abs(raw - 1.0) < 1e-9));
        CHECK(l.is_minus_one() == (std::abs(raw + 1.0) < 1e-9));

        const auto d = l.multiplicative_order();
        REQUIRE(d.has_value());
        std::complex<double> p = 1.0;
        long long first_one = -1;
        for (long long k = 1; k <= 2 * ord.group_order(); ++k) {
          p *= raw;
          if (std::abs(p - 1.0) < 1e-9) {
            first_one = k;
            break;
          }
        }
        CHECK(first_one == *d);

        for (long long m = 0; m <= 2 * n + 2; ++m) {
          std::complex<double> sum = 0.0, term = 1.0;
          for (long long k = 0; k < m; ++k) {
            sum += term;
            term *= raw;
          }
          CHECK(l.qnumber_is_zero(m) == (std::abs(sum) < 1e-9));
        }
      }
    }
  }
}
