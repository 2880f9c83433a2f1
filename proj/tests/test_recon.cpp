#include <doctest.h>
#include <omp.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>

#include "tat/errors.hpp"
#include "tat/forward.hpp"
#include "tat/recon.hpp"

using namespace tat;

namespace {

const TimeGrid kGrid(1024, 2.0 / 1024);

std::vector<Signal> projections(const Phantom& ph, const SphereRule& rule) {
  std::vector<Signal> out;
  for (const auto& d : rule.directions) out.push_back({"", "point", kGrid, sample_spherical(ph, d, kGrid)});
  return out;
}

}  // namespace

TEST_CASE("volume grid geometry and validation") {
  VolumeGrid v;
  v.a = 0.4;
  v.m = 17;
  CHECK(v.h() == doctest::Approx(0.05));
  CHECK(v.coord(0) == doctest::Approx(-0.4));
  CHECK(v.coord(16) == doctest::Approx(0.4));
  CHECK(v.index(1, 0, 0) == 17u * 17u);
  CHECK_NOTHROW(v.validate(1.0));
  v.a = 0.6;
  CHECK_THROWS_AS(v.validate(1.0), ConfigError);
}

TEST_CASE("reconstruction of a centered ball recovers the amplitude at the center") {
  const Phantom ph{{{Vec3::Zero(), 0.25, 1.0}}};
  const auto rule = lebedev(302);
  const auto v = spherical_backprojection(rule, projections(ph, rule), 0.4, 33);
  const auto e = volume_error(v, ph);
  CHECK(e.center_error < 0.02);
  CHECK(e.rel_l2 < 0.35);
  CHECK(e.outside_fraction < 0.1);
}

TEST_CASE("reconstruction is linear in the amplitude") {
  const auto rule = lebedev(110);
  const Phantom a{{{Vec3(0.05, 0.0, 0.0), 0.2, 1.0}}};
  Phantom b = a;
  b.balls[0].amplitude = -2.5;
  const auto va = spherical_backprojection(rule, projections(a, rule), 0.3, 16);
  const auto vb = spherical_backprojection(rule, projections(b, rule), 0.3, 16);
  for (size_t i = 0; i < va.values.size(); ++i)
    CHECK(vb.values[i] == doctest::Approx(-2.5 * va.values[i]).scale(1e-12));
}

TEST_CASE("translation equivariance: shifting the ball by whole voxels shifts the image") {
  const double a = 0.4;
  const int m = 33;
  const double h = 2 * a / (m - 1);
  const Phantom p0{{{Vec3::Zero(), 0.2, 1.0}}};
  const Phantom p1{{{Vec3(3 * h, 0.0, 0.0), 0.2, 1.0}}};
  double prev = 1.0;
  for (int points : {302, 590}) {
    const auto rule = lebedev(points);
    const auto v0 = spherical_backprojection(rule, projections(p0, rule), a, m);
    const auto v1 = spherical_backprojection(rule, projections(p1, rule), a, m);
    double num = 0.0, den = 0.0, num_in = 0.0, den_in = 0.0;
    for (int i = 4; i < m - 4; ++i)
      for (int j = 4; j < m - 4; ++j)
        for (int k = 4; k < m - 4; ++k) {
          const double x = v0.values[v0.index(i, j, k)], y = v1.values[v1.index(i + 3, j, k)];
          num += (x - y) * (x - y);
          den += x * x;
          if (v0.point(i, j, k).norm() < 0.2 - 2 * h) {
            num_in += (x - y) * (x - y);
            den_in += x * x;
          }
        }
    // the detectors stay put, so only the ball interior is exactly equivariant; streaks fade with the rule
    CHECK(std::sqrt(num_in / den_in) < 0.01);
    const double all = std::sqrt(num / den);
    CHECK(all < 0.6 * prev);
    prev = all;
  }
}

TEST_CASE("grid convergence over two refinement steps") {
  const Phantom ph{{{Vec3::Zero(), 0.25, 1.0}}};
  double prev = 1e300;
  for (auto [points, m] : {std::pair{110, 17}, std::pair{302, 33}, std::pair{590, 65}}) {
    const auto rule = lebedev(points);
    const double e = volume_error(spherical_backprojection(rule, projections(ph, rule), 0.4, m), ph).rel_l2;
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("serial and parallel backprojection are identical") {
  const auto rule = lebedev(110);
  const Phantom ph{{{Vec3(0.1, -0.05, 0.08), 0.25, 1.0}}};
  const auto proj = projections(ph, rule);
  BackprojectionOptions serial;
  serial.parallel = false;
  const auto a = spherical_backprojection(rule, proj, 0.4, 20, serial);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  const auto b = spherical_backprojection(rule, proj, 0.4, 20);
  omp_set_num_threads(saved);
  CHECK(a.values == b.values);
}

TEST_CASE("backprojection rejects a time window that misses the volume") {
  const auto rule = lebedev(110);
  const TimeGrid short_grid(64, 1.0 / 64);
  std::vector<Signal> proj(rule.directions.size(), Signal{"", "point", short_grid, std::vector<double>(64, 0.0)});
  CHECK_THROWS_AS(spherical_backprojection(rule, proj, 0.4, 16), ConfigError);
}

TEST_CASE("planar recovery re-indexes columns to signed offsets") {
  const TimeGrid g(8, 0.25);
  const std::vector<Vec3> normals = {Vec3::UnitZ(), Vec3::UnitX()};
  std::vector<Signal> sols(2, Signal{"", "planar", g, {0, 1, 2, 3, 4, 5, 6, 7}});
  const auto rec = planar_projection_recovery(normals, sols, 1.0);
  REQUIRE(rec.size() == 16);
  CHECK(rec[0].offset == doctest::Approx(1.0));
  CHECK(rec[4].offset == doctest::Approx(0.0));
  CHECK(rec[7].offset == doctest::Approx(-0.75));
  CHECK(rec[9].normal == Vec3::UnitX());
  CHECK_THROWS_AS(planar_projection_recovery({Vec3::UnitZ()}, sols, 1.0), ConfigError);
}

TEST_CASE("volume binary layout") {
  VolumeGrid v;
  v.a = 0.3;
  v.m = 8;
  v.values.resize(512);
  for (int i = 0; i < 512; ++i) v.values[i] = i * 0.5;
  const auto path = std::filesystem::temp_directory_path() / "tat_volume.bin";
  write_volume_binary(v, path.string());
  std::ifstream f(path, std::ios::binary);
  char magic[4];
  double a;
  std::int64_t m;
  f.read(magic, 4);
  f.read(reinterpret_cast<char*>(&a), sizeof a);
  f.read(reinterpret_cast<char*>(&m), sizeof m);
  std::vector<double> vals(512);
  f.read(reinterpret_cast<char*>(vals.data()), 512 * sizeof(double));
  CHECK(std::string(magic, 4) == "TATV");
  CHECK(a == 0.3);
  CHECK(m == 8);
  CHECK(vals == v.values);
  std::filesystem::remove(path);
}
