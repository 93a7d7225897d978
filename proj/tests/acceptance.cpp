// Acceptance run: one PASS/FAIL line per criterion.
//
// usage: acceptance <path-to-tqft-cli> <samples-dir>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "tqft/tqft.hpp"

using namespace tqft;

namespace {

const std::vector<std::string> kClosed{"S3_2tet", "S3_bd4simplex", "S2xS1", "T3_6tet", "L(2,1)", "L(3,1)", "L(4,1)"};

struct Line {
  int id;
  bool pass;
  std::string summary;
};

class Clock {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string secs(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << " s";
  return out.str();
}

std::vector<FiniteGroup> small_groups(std::vector<std::string>& names) {
  std::vector<FiniteGroup> out;
  for (const std::string& n : preset_group_names()) {
    FiniteGroup g = preset_group(n);
    if (g.order() > 8) continue;
    names.push_back(n);
    out.push_back(std::move(g));
  }
  return out;
}

// Criteria 1 and 3 share the same cases.
std::pair<Line, Line> oracle_and_measure() {
  Clock clock;
  std::vector<std::string> names;
  const auto groups = small_groups(names);
  int cases = 0;
  std::string bad1, bad3;
  for (const std::string& m : kClosed) {
    const Manifold man = preset_manifold(m);
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const Cochain w = zero_cochain(3, groups[i]);
      const PhaseSum z = partition_closed(man.complex, groups[i], w);
      const PhaseSum oracle(partition_counting_oracle(*man.pi1, groups[i]));
      const PhaseSum classes = partition_groupoid(man.complex, groups[i], w).value;
      if (z != oracle && bad1.empty()) bad1 = m + " " + names[i] + ": " + z.str() + " vs " + oracle.str();
      if (z != classes && bad3.empty()) bad3 = m + " " + names[i] + ": " + z.str() + " vs " + classes.str();
      ++cases;
    }
  }
  const double t = clock.seconds();
  const bool fast = t < 60;
  Line l1{1, bad1.empty() && fast,
          std::to_string(cases) + " cases, state sum = |Hom(pi1, G)|/|G|, " + secs(t) + (bad1.empty() ? "" : "; " + bad1)};
  Line l3{3, bad3.empty(), std::to_string(cases) + " cases, coloring sum = class sum" + (bad3.empty() ? "" : "; " + bad3)};
  return {l1, l3};
}

Line normalization() {
  std::string bad;
  int cases = 0;
  for (const std::string& n : preset_group_names()) {
    const FiniteGroup g = preset_group(n);
    const Cochain w = zero_cochain(3, g);
    for (const std::string m : {"S3_2tet", "S3_bd4simplex", "BallUnionBall"}) {
      const PhaseSum z = partition_closed(preset_manifold(m).complex, g, w);
      if (z != PhaseSum(Rational(1, g.order())) && bad.empty()) bad = m + " " + n + " = " + z.str();
      ++cases;
    }
    const PhaseSum z = partition_closed(preset_manifold("S2xS1").complex, g, w);
    if (z != PhaseSum::one() && bad.empty()) bad = "S2xS1 " + n + " = " + z.str();
    ++cases;
  }
  return {2, bad.empty(), std::to_string(cases) + " cases, Z(S3) = 1/|G|, Z(S2xS1) = 1" + (bad.empty() ? "" : "; " + bad)};
}

std::string first_failure(const verify::SuiteReport& r) {
  for (const auto& c : r.checks)
    if (!c.pass) return "; first failure: " + c.name + " " + c.detail.dump();
  return "";
}

Line from_suite(int id, const verify::SuiteReport& r, const std::string& what, double t, double limit) {
  const bool fast = limit <= 0 || t < limit;
  return {id, r.pass() && fast,
          std::to_string(r.checks.size()) + " checks, " + what + ", " + secs(t) + first_failure(r)};
}

Line verlinde() {
  Clock clock;
  const verify::SuiteReport r = verify::verlinde_suite();
  // Cyclic twisted torus sectors must also number exactly n^2.
  std::string bad;
  for (int n = 2; n <= 4; ++n)
    for (int p = 0; p < n * n; ++p) {
      const int dim = hilbert_space(1, cyclic_group(n), cyclic_cocycle(n, p)).dim();
      if (dim != n * n && bad.empty()) bad = "; Z/" + std::to_string(n) + " p=" + std::to_string(p) + " dim " + std::to_string(dim);
    }
  Line l = from_suite(7, r, "dim E(Y) = Z(Y x S1)", clock.seconds(), 0);
  l.pass = l.pass && bad.empty();
  l.summary += bad;
  return l;
}

Line lens_separation() {
  std::string bad;
  int cases = 0;
  for (int k = 2; k <= 6; ++k) {
    const DeltaComplex3 x = preset_manifold("L(" + std::to_string(k) + ",1)").complex;
    for (int n = 2; n <= 5; ++n) {
      const StateSum s(x, cyclic_group(n));
      for (int p = 0; p < n; ++p) {
        const PhaseSum a = s.evaluate(cyclic_cocycle(n, p)), b = s.evaluate(cyclic_cocycle(n, p + n * n));
        if (a != b && bad.empty()) bad = "period fails at k=" + std::to_string(k) + " n=" + std::to_string(n);
        ++cases;
      }
      const PhaseSum zero = s.evaluate(cyclic_cocycle(n, 0));
      if (zero != PhaseSum(Rational(std::gcd(k, n), n)) && bad.empty())
        bad = "p=0 value " + zero.str() + " at k=" + std::to_string(k) + " n=" + std::to_string(n);
    }
  }
  const DeltaComplex3 l2 = preset_manifold("L(2,1)").complex;
  const PhaseSum z0 = partition_closed(l2, cyclic_group(2), cyclic_cocycle(2, 0));
  const PhaseSum z1 = partition_closed(l2, cyclic_group(2), cyclic_cocycle(2, 1));
  if (z0 == z1 && bad.empty()) bad = "L(2,1) Z/2 p=1 equals p=0";

  // Regression fixtures from the first state-sum computation.
  const PhaseSum e3(PhaseQ(1, 3)), e4(PhaseQ(1, 4));
  const auto lz = [](int k, int n, int p) {
    return partition_closed(preset_manifold("L(" + std::to_string(k) + ",1)").complex, cyclic_group(n), cyclic_cocycle(n, p));
  };
  const std::vector<std::pair<PhaseSum, PhaseSum>> fixtures{
      {lz(2, 2, 1), PhaseSum()},
      {lz(3, 3, 1), PhaseSum(Rational(1, 3)) + e3 * Rational(2, 3)},
      {lz(3, 3, 2), PhaseSum(Rational(-1, 3)) - e3 * Rational(2, 3)},
      {lz(2, 4, 1), PhaseSum()},
      {lz(2, 4, 2), PhaseSum(Rational(1, 2))},
      {lz(4, 4, 1), PhaseSum(Rational(1, 2)) + e4 * Rational(1, 2)},
      {lz(4, 4, 2), PhaseSum()},
      {lz(4, 4, 3), PhaseSum(Rational(1, 2)) - e4 * Rational(1, 2)},
  };
  for (std::size_t i = 0; i < fixtures.size(); ++i)
    if (fixtures[i].first != fixtures[i].second && bad.empty())
      bad = "fixture " + std::to_string(i) + " is " + fixtures[i].first.str();
  return {8, bad.empty(),
          std::to_string(cases) + " period checks, gcd(k,n)/n at p=0, L(2,1) Z/2: " + z0.str() + " vs " + z1.str() + ", " +
              std::to_string(fixtures.size()) + " fixtures" + (bad.empty() ? "" : "; " + bad)};
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

Line determinism(const std::string& cli, const std::string& samples) {
  const std::vector<std::string> commands{
      "z --manifold T3_6tet --group Z/2 --cocycle cyclic:2:1",
      "z --manifold 'L(4,1)' --group Z/4 --cocycle " + samples + "/cocycle_z4_p1.json",
      "z --manifold " + samples + "/s3_2tet.json --group S3",
      "hilbert --genus 1 --group S3",
      "hilbert --surface T2 --group Z/3 --cocycle cyclic:3:1",
      "euler " + samples + "/clutched_sphere_d2.json",
      "euler " + samples + "/half_disk.json",
      "verify euler --seed 7",
      "verify coboundary --seed 3",
  };
  std::string bad;
  for (const std::string& c : commands) {
    const std::string full = "'" + cli + "' " + c + " 2>/dev/null";
    int s1 = 0, s2 = 0;
    const std::string a = run_capture(full, s1), b = run_capture(full, s2);
    if ((a != b || s1 != 0 || s2 != 0 || a.empty()) && bad.empty()) bad = c;
  }
  return {10, bad.empty(),
          std::to_string(commands.size()) + " commands run twice, byte-identical JSON" + (bad.empty() ? "" : "; differs: " + bad)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <tqft-cli> <samples-dir>\n";
    return 2;
  }
  const std::string cli = argv[1], samples = argv[2];
  std::vector<Line> lines;
  try {
    auto [l1, l3] = oracle_and_measure();
    lines.push_back(l1);
    lines.push_back(normalization());
    lines.push_back(l3);
    {
      Clock c;
      const auto r = verify::coboundary_suite(20251016, 50);
      lines.push_back(from_suite(4, r, "Z(w + d beta) = Z(w)", c.seconds(), 0));
    }
    {
      Clock c;
      const auto r = verify::triangulation_suite();
      lines.push_back(from_suite(5, r, "S3_2tet = S3_bd4simplex = Ball u Ball", c.seconds(), 0));
    }
    {
      Clock c;
      const auto r = verify::gluing_suite();
      lines.push_back(from_suite(6, r, "glued = boundary sum = pairing", c.seconds(), 120));
    }
    lines.push_back(verlinde());
    lines.push_back(lens_separation());
    {
      Clock c;
      const auto r = verify::euler_suite(20251016, 100);
      lines.push_back(from_suite(9, r, "clutching, difference, gluing, reversal", c.seconds(), 10));
    }
    lines.push_back(determinism(cli, samples));
  } catch (const Error& e) {
    std::cout << "acceptance aborted: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  }
  bool all = true;
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.id < b.id; });
  for (const Line& l : lines) {
    all = all && l.pass;
    std::cout << "criterion " << l.id << ": " << (l.pass ? "PASS" : "FAIL") << "  " << l.summary << "\n";
  }
  return all ? 0 : 1;
}
