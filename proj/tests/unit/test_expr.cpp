#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "darboux/expr.hpp"
#include "oracles.hpp"

using darboux::Jet1;
using darboux::Jet2;
using darboux::ParseError;
using darboux::expr::Expr;

namespace {

double value_of(const std::string& text, std::vector<std::string> vars = {}, std::vector<double> at = {}) {
  return Expr::parse(text, std::move(vars)).value(at);
}

std::size_t parse_error_position(const std::string& text, std::vector<std::string> vars = {"u", "v"}) {
  try {
    (void)Expr::parse(text, std::move(vars));
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no ParseError for '" << text << "'");
  return std::string::npos;
}

// Random expression text over u, v. Functions get arguments that keep them in
// their domains so evaluation always succeeds.
std::string random_tree(std::mt19937_64& g, int depth, int max_constant = 99) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 14);
  const auto sub = [&] { return random_tree(g, depth - 1, max_constant); };
  switch (pick(g)) {
    case 0: return "u";
    case 1: return "v";
    case 2: {
      std::uniform_int_distribution<int> whole(0, max_constant), frac(0, 99);
      return std::to_string(whole(g)) + "." + std::to_string(frac(g));
    }
    case 3: return "pi";
    case 4: return "(" + sub() + " + " + sub() + ")";
    case 5: return "(" + sub() + " - " + sub() + ")";
    case 6: return sub() + " * " + sub();
    case 7: return sub() + " / (2 + sin(" + sub() + "))";
    case 8: return "-" + sub();
    case 9: return "(1.5 + cos(" + sub() + "))^2";
    case 10: return "exp(0.1 * " + sub() + ")";
    case 11: return "log(1 + (" + sub() + ")^2)";
    case 12: return "sqrt(2 + tanh(" + sub() + "))";
    case 13: return "atan2(" + sub() + ", 3 + sinh(0.1*" + sub() + ")^2)";
    default: return "atan(" + sub() + ")";
  }
}

}  // namespace

TEST_SUITE("expr") {
  TEST_CASE("precedence and associativity") {
    CHECK(value_of("2 + 3 * 4") == 14.0);
    CHECK(value_of("2 ^ 3 ^ 2") == 512.0);
    CHECK(value_of("-2^2") == -4.0);
    CHECK(value_of("(-2)^2") == 4.0);
    CHECK(value_of("8 / 4 / 2") == 1.0);
    CHECK(value_of("10 - 4 - 3") == 3.0);
    CHECK(value_of("2 * -3") == -6.0);
    CHECK(value_of("2 ^ -1") == 0.5);
    CHECK(value_of("1.5e2 + .5") == 150.5);
  }

  TEST_CASE("constants and shadowing") {
    CHECK(value_of("pi") == std::numbers::pi);
    CHECK(value_of("e") == std::numbers::e);
    CHECK(value_of("e", {"e"}, {2.0}) == 2.0);
    CHECK(value_of("pi * t", {"t", "pi"}, {1.0, 3.0}) == 3.0);
  }

  TEST_CASE("functions") {
    CHECK(value_of("atan2(1, -1)") == doctest::Approx(3 * std::numbers::pi / 4));
    CHECK(value_of("sqrt(16) + log(e) + exp(0) + tan(0) + sinh(0) + cosh(0)") == doctest::Approx(7.0));
  }

  TEST_CASE("positioned parse errors") {
    CHECK(parse_error_position("u + foo(1)") == 4);
    CHECK(parse_error_position("u + w") == 4);
    CHECK(parse_error_position("atan2(u)") == 0);
    CHECK(parse_error_position("sin(u, v)") == 0);
    CHECK(parse_error_position("u v") == 2);
    CHECK(parse_error_position("") == 0);
    CHECK(parse_error_position("   ") == 0);
    CHECK(parse_error_position("u + ") == 4);
    CHECK(parse_error_position("(u + v") == 6);
    CHECK(parse_error_position("u $ v") == 2);
    CHECK(parse_error_position("1 + 1e999") == 4);
    CHECK(parse_error_position("sin + 1") == 0);

    std::string deep(300, '(');
    deep += "u" + std::string(300, ')');
    CHECK(parse_error_position(deep) <= 300);
    std::string ok(90, '(');
    ok += "u" + std::string(90, ')');
    CHECK_NOTHROW(Expr::parse(ok, {"u"}));
  }

  TEST_CASE("unknown identifier lists the allowed variables") {
    try {
      (void)Expr::parse("u + w", {"u", "v"});
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("'w'") != std::string::npos);
      CHECK(msg.find("{u, v}") != std::string::npos);
    }
  }

  TEST_CASE("evaluation errors carry the span of the failing sub-expression") {
    const Expr ex = Expr::parse("1 + log(u - 1)", {"u"});
    try {
      (void)ex.value(std::array<double, 1>{0.5});
      FAIL("expected EvalError");
    } catch (const darboux::EvalError& e) {
      CHECK(e.span().begin == 4);
      CHECK(e.span().end == 14);
      CHECK(std::string(e.what()).find("log(u - 1)") != std::string::npos);
    }
    const Expr div = Expr::parse("u / (v - v)", {"u", "v"});
    try {
      (void)div.value(std::array<double, 2>{1.0, 2.0});
      FAIL("expected EvalError");
    } catch (const darboux::EvalError& e) {
      CHECK(e.span().begin == 0);
      CHECK(e.span().end == 11);
    }
  }

  TEST_CASE("binding count must match") {
    const Expr ex = Expr::parse("u + v", {"u", "v"});
    CHECK_THROWS_AS(ex.value(std::array<double, 1>{1.0}), darboux::Error);
  }

  TEST_CASE("log(1 + u^2 + v^2) partials against finite differences") {
    const Expr ex = Expr::parse("log(1 + u^2 + v^2)", {"u", "v"});
    const auto f = [](double u, double v) { return std::log(1 + u * u + v * v); };
    auto g = oracle::rng(3);
    for (int i = 0; i < 50; ++i) {
      const double u = oracle::uniform(g, -2, 2), v = oracle::uniform(g, -2, 2);
      const std::array<Jet2, 2> in{Jet2::variable_u(u), Jet2::variable_v(v)};
      const Jet2 j = ex.eval<Jet2>(in);
      const oracle::Partials p = oracle::partials(f, u, v);
      CHECK(oracle::close(j.value(), p.value, 1e-14, 1e-15));
      CHECK(oracle::close(j.du(), p.du, 1e-5, 1e-7));
      CHECK(oracle::close(j.dv(), p.dv, 1e-5, 1e-7));
      CHECK(oracle::close(j.duu(), p.duu, 1e-5, 1e-7));
      CHECK(oracle::close(j.duv(), p.duv, 1e-5, 1e-7));
      CHECK(oracle::close(j.dvv(), p.dvv, 1e-5, 1e-7));
    }
  }

  TEST_CASE("printing round-trips to a structurally equal tree") {
    auto g = oracle::rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
      const std::string text = random_tree(g, 4);
      INFO(text);
      const Expr a = Expr::parse(text, {"u", "v"});
      const Expr b = Expr::parse(a.to_string(), {"u", "v"});
      CHECK(darboux::expr::structurally_equal(a.root(), b.root()));
      CHECK(b.to_string() == a.to_string());
      const std::array<double, 2> at{oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1)};
      const double va = a.value(at), vb = b.value(at);
      CHECK((va == vb || (std::isnan(va) && std::isnan(vb))));
    }
  }

  // The absolute floor is widened by the oracle's own rounding noise, which at
  // these steps exceeds 1e-7 once |f| is of order one.
  TEST_CASE("jet coefficients of random expressions agree with finite differences") {
    constexpr double h = 1e-5, H = 1e-4, h3 = 2e-2;
    auto g = oracle::rng(4242);
    for (int trial = 0; trial < 400; ++trial) {
      const Expr ex = Expr::parse(random_tree(g, 3, 2), {"u", "v"});
      const double u = oracle::uniform(g, -1, 1), v = oracle::uniform(g, -1, 1);
      const auto f = [&](double a, double b) { return ex.value(std::array<double, 2>{a, b}); };
      const std::array<Jet2, 2> in{Jet2::variable_u(u), Jet2::variable_v(v)};
      const Jet2 j = ex.eval<Jet2>(in);
      const oracle::Partials p = oracle::partials(f, u, v, h, H);
      const double n1 = oracle::fd_noise(p.value, h, 1), n2 = oracle::fd_noise(p.value, H, 2);
      INFO(ex.source() << " at " << u << ", " << v);
      CHECK(oracle::close(j.value(), p.value, 1e-14, 1e-15));
      CHECK(oracle::fd_close(j.du(), p.du, 1e-5, 1e-7, n1));
      CHECK(oracle::fd_close(j.dv(), p.dv, 1e-5, 1e-7, n1));
      CHECK(oracle::fd_close(j.duu(), p.duu, 1e-5, 1e-7, n2));
      CHECK(oracle::fd_close(j.duv(), p.duv, 1e-5, 1e-7, n2));
      CHECK(oracle::fd_close(j.dvv(), p.dvv, 1e-5, 1e-7, n2));

      const Jet1 t = ex.eval<Jet1>(std::array<Jet1, 2>{Jet1::variable(u), Jet1(v)});
      const auto fu = [&](double a) { return f(a, v); };
      CHECK(oracle::fd_close(t[1], oracle::d1(fu, u, h), 1e-5, 1e-7, n1));
      CHECK(oracle::fd_close(t[2], oracle::d2(fu, u, H), 1e-5, 1e-7, n2));
      CHECK(oracle::fd_close(t[3], oracle::d3(fu, u, h3), 1e-5, 1e-7,
                             oracle::fd_noise(p.value, 0.25 * h3, 3)));
    }
  }

  TEST_CASE("random bytes only ever raise ParseError") {
    auto g = oracle::rng(99);
    const std::string alphabet = "uvt0123456789.eE+-*/^(),  sincoexplgqrtahpi$#\t";
    std::uniform_int_distribution<std::size_t> len(0, 24);
    std::uniform_int_distribution<int> byte(0, 255);
    std::uniform_int_distribution<std::size_t> from(0, alphabet.size() - 1);
    int parsed = 0;
    for (int trial = 0; trial < 5000; ++trial) {
      std::string text;
      const std::size_t n = len(g);
      for (std::size_t i = 0; i < n; ++i)
        text += trial % 2 ? static_cast<char>(byte(g)) : alphabet[from(g)];
      try {
        const Expr ex = Expr::parse(text, {"u", "v"});
        ++parsed;
        CHECK(ex.to_string().size() > 0);
      } catch (const ParseError& e) {
        CHECK(e.position() <= text.size());
      } catch (...) {
        FAIL("non-ParseError exception for input of length " << text.size());
      }
    }
    CHECK(parsed > 0);
  }
}
