// The whole library is pure values and pure functions; this exercises that
// claim by racing independent evaluations against serial reference results.

#include "derivkit/bell.hpp"
#include "derivkit/closed_forms.hpp"
#include "derivkit/oracle.hpp"

#include <doctest.h>

#include <thread>
#include <vector>

using namespace derivkit;

TEST_CASE("independent (family, order, point) cells evaluate safely in parallel") {
  struct Cell {
    unsigned n;
    Rational point;
    BasisValue closed;
    BasisValue jet;
    Int bell;
  };

  const FuncPtr arcsinf = fx::arcsin(fx::var());
  auto work = [&arcsinf](unsigned worker) {
    Cell c;
    c.n = 3 + worker % 9;
    c.point = Rational(1 + static_cast<long>(worker % 5), 7);
    c.closed = evaluate_at(arcsin_nth(c.n), c.point).value;
    c.jet = nth_derivative_via_jet(*arcsinf, c.point, c.n);
    c.bell = bell_ones(10 + worker % 4, 3 + worker % 3);
    return c;
  };

  std::vector<Cell> serial(16);
  for (unsigned w = 0; w < serial.size(); ++w) serial[w] = work(w);

  std::vector<Cell> parallel(serial.size());
  std::vector<std::thread> threads;
  threads.reserve(parallel.size());
  for (unsigned w = 0; w < parallel.size(); ++w)
    threads.emplace_back([&parallel, &work, w] { parallel[w] = work(w); });
  for (auto& t : threads) t.join();

  for (unsigned w = 0; w < serial.size(); ++w) {
    CHECK(parallel[w].closed == serial[w].closed);
    CHECK(parallel[w].jet == serial[w].jet);
    CHECK(parallel[w].closed == parallel[w].jet);
    CHECK(parallel[w].bell == serial[w].bell);
  }
}
