#include <chrono>
#include <cstdio>
#include <random>

#include "racg/hyperbolicity.hpp"
#include "racg/morse_thue.hpp"

using namespace racg;

namespace {

double ms(std::chrono::steady_clock::time_point a,
          std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

void row(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-28s %10.1f ms %10.1f ms %7.2fx  %s\n", name, serial, parallel,
              serial / parallel, equal ? "results equal" : "MISMATCH");
}

// same commutation graph as the hexagon group under fresh names, so the
// thin-triangle cache cannot serve the second measurement
Presentation renamed_hexagon() {
  std::vector<std::string> names{"t1", "t2", "t3", "t4", "t5", "t6"};
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < 6; ++i)
    pairs.emplace_back(names[i], names[(i + 1) % 6]);
  return Presentation(names, pairs, {0, 1, 0, 1, 0, 1});
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  std::printf("%-28s %13s %13s %8s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    Presentation p = hexagon_group();
    auto t0 = clock::now();
    Ball a = ball_serial(p, 8);
    auto t1 = clock::now();
    Ball b = ball(p, 8);
    auto t2 = clock::now();
    row("ball enumeration R=8", ms(t0, t1), ms(t1, t2),
        a.elements == b.elements);
  }

  {
    std::mt19937_64 rng(3);
    std::vector<std::uint8_t> seq = mt_prefix(1 << 17);
    auto t0 = clock::now();
    auto a = find_cube(seq);
    auto t1 = clock::now();
    auto b = find_cube_parallel(seq);
    auto t2 = clock::now();
    row("cube-free scan 2^17 bits", ms(t0, t1), ms(t1, t2),
        a.has_value() == b.has_value());
  }

  {
    Presentation serial_p = hexagon_group();
    Presentation parallel_p = renamed_hexagon();
    auto t0 = clock::now();
    std::size_t a = measure_ch_serial(serial_p, 3);
    auto t1 = clock::now();
    std::size_t b = measure_ch(parallel_p, 3);
    auto t2 = clock::now();
    row("thin triangles ball(3)", ms(t0, t1), ms(t1, t2), a == b);
  }
  return 0;
}
