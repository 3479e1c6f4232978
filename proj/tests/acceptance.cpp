/* Acceptance suite: one line per criterion, PASS or FAIL, nonzero exit
 * if anything fails.  Budgeted criteria also fail when they run over
 * their time limit. */

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "burnside/algebra.hpp"
#include "burnside/bar.hpp"
#include "burnside/deformation.hpp"
#include "burnside/fixtures.hpp"
#include "burnside/hull.hpp"
#include "burnside/module.hpp"
#include "burnside/observables.hpp"
#include "burnside/poset.hpp"

namespace {

using namespace burnside;
using R = Rational;

using Grid = std::vector<std::vector<std::size_t>>;

struct Check {
  bool ok = true;
  std::string note;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!note.empty()) note += "; ";
    note += what;
  }
};

int failures = 0;

template <class F>
void criterion(int num, const std::string& name, double budget_seconds, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.note = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_seconds > 0 && secs > budget_seconds) {
    c.ok = false;
    c.note += (c.note.empty() ? "" : "; ");
    c.note += "over the time budget";
  }
  if (!c.ok) ++failures;
  std::printf("%s criterion %d: %s (%.1f s)%s%s\n", c.ok ? "PASS" : "FAIL", num, name.c_str(),
              secs, c.note.empty() ? "" : " -- ", c.note.c_str());
  std::fflush(stdout);
}

FinDimAlgebra<R> fixture_algebra(const std::string& name) {
  if (name == "k" || name == "m2") return fixtures::algebra<R>(name);
  return incidence_algebra<R>(fixtures::poset(name)).algebra;
}

ModuleFamily<R> fixture_family(const FinDimAlgebra<R>& a, const std::string& name) {
  if (name == "k" || name == "m2") return {simple_factors(a, regular_module(a))[0]};
  auto inc = incidence_algebra<R>(fixtures::poset(name));
  return simple_modules(inc);
}

Grid ext_dims(const FinDimAlgebra<R>& a, const ModuleFamily<R>& fam, std::size_t n) {
  const std::size_t r = fam.size();
  Grid out(r, std::vector<std::size_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out[i][j] = ext(a, fam, i, j, n).dimension;
  return out;
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(BURNSIDE_KIT_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

void criterion_hereditary(Check& c) {
  auto inc = incidence_algebra<R>(fixtures::poset("hereditary"));
  auto fam = simple_modules(inc);
  auto h = compute_hull(inc.algebra, fam);
  const Grid want = {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
  c.expect(h.quotient_dims == want, "H dimension table is off");
  c.expect(h.relations.empty(), "unexpected relations");
  auto obs = build_observables(inc.algebra, fam, h);
  c.expect(obs.dim() == 7 && inc.algebra.dim() == 7, "dimension 7 = 7 fails");
  c.expect(rank(eta(inc.algebra, obs, h)) == 7, "eta is not bijective");
}

void criterion_diamond(Check& c) {
  auto inc = incidence_algebra<R>(fixtures::poset("diamond"));
  auto fam = simple_modules(inc);
  const auto& a = inc.algebra;

  const Grid e1 = ext_dims(a, fam, 1);
  const Grid e2 = ext_dims(a, fam, 2);
  c.expect(e1 == Grid{{0, 1, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}},
           "Ext^1 support is off");
  c.expect(e2 == Grid{{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
           "Ext^2 support is off");

  auto x12 = ext(a, fam, 0, 1, 1), x24 = ext(a, fam, 1, 3, 1);
  auto x13 = ext(a, fam, 0, 2, 1), x34 = ext(a, fam, 2, 3, 1);
  auto ext2 = ext(a, fam, 0, 3, 2);
  c.expect(!vec_is_zero(ext2.decompose(cup(x12.reps[0], x24.reps[0]))),
           "cup through M_2 vanishes");
  c.expect(!vec_is_zero(ext2.decompose(cup(x13.reps[0], x34.reps[0]))),
           "cup through M_3 vanishes");

  auto h = compute_hull(a, fam, 3);
  std::size_t deg2_at_14 = 0;
  for (const auto& m : h.monomials)
    if (m.source == 0 && m.target == 3 && m.degree() == 2) ++deg2_at_14;
  c.expect(deg2_at_14 == 2, "wrong number of degree-2 monomials at (1,4)");
  c.expect(h.relations.size() == 1 && h.relations[0].source == 0 && h.relations[0].target == 3,
           "expected exactly one relation at (1,4)");
  const Grid want = {{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
  c.expect(h.quotient_dims == want, "H dimension table is off");

  auto obs = build_observables(a, fam, h);
  c.expect(obs.dim() == 9 && a.dim() == 9, "dimension 9 = 9 fails");
  c.expect(rank(eta(a, obs, h)) == 9, "eta is not bijective");
}

void criterion_oracle(Check& c) {
  for (const auto& name : fixtures::poset_names()) {
    auto p = fixtures::poset(name);
    auto inc = incidence_algebra<R>(p);
    auto fam = simple_modules(inc);
    const auto table = ext_oracle(p);
    c.expect(ext_dims(inc.algebra, fam, 1) == table.ext1, name + ": Ext^1 disagrees");
    c.expect(ext_dims(inc.algebra, fam, 2) == table.ext2, name + ": Ext^2 disagrees");
  }
}

void criterion_burnside(Check& c) {
  std::vector<std::string> names = fixtures::poset_names();
  names.push_back("k");
  names.push_back("m2");
  for (const auto& name : names) {
    auto a = fixture_algebra(name);
    auto fam = fixture_family(a, name);
    std::size_t target = 0;
    for (const auto& m : fam) target += m.dim * m.dim;
    const auto rep = verify_burnside(a, fam);
    c.expect(rep.hypothesis, name + ": hypothesis should hold");
    c.expect(rep.rho.surjective && rep.rho.image_dim == target,
             name + ": rho should be surjective of rank " + std::to_string(target));
  }
  auto base = fixtures::base_field_algebra<R>();
  ModuleFamily<R> doubled = {direct_sum(regular_module(base), regular_module(base))};
  const auto rep = verify_burnside(base, doubled);
  c.expect(!rep.hypothesis && !rep.end_scalar[0], "negative control: hypothesis should fail");
  c.expect(!rep.rho.surjective, "negative control: rho should not be surjective");
}

void criterion_gbt(Check& c) {
  std::vector<std::string> names = fixtures::poset_names();
  names.push_back("k");
  names.push_back("m2");
  for (const auto& name : names) {
    auto a = fixture_algebra(name);
    auto fam = fixture_family(a, name);
    const auto rep = verify_gbt(a, fam);
    c.expect(rep.eta_bijective, name + ": eta is not bijective");
    c.expect(rep.dim_a == rep.dim_obs, name + ": dimension mismatch");
    c.expect(!rep.gr_iso.empty() && rep.gr_iso[0], name + ": gr_0 not iso");
    c.expect(rep.gr_iso.size() < 2 || rep.gr_iso[1], name + ": gr_1 not iso");
  }
}

void criterion_closure(Check& c) {
  auto inc = incidence_algebra<R>(fixtures::poset("diamond"));
  auto fam = simple_modules(inc);
  ModuleFamily<R> ends = {fam[0], fam[3]};

  const auto rep = closure_check(inc.algebra, ends, 4);
  c.expect(rep.dim_b == 2, "B should be two-dimensional");
  c.expect(rep.eta_b_bijective, "eta_B is not bijective");
  c.expect(rep.semisimple_quotient_matches, "B/rad B does not match the endomorphism sum");

  auto ha = compute_hull(inc.algebra, ends, 4);
  auto obs = build_observables(inc.algebra, ends, ha);
  auto fam_b = observable_modules(obs);
  auto simples_b = simples_of(obs.base);
  c.expect(simples_b.size() == fam_b.size(), "family is not the full simple-B family");
  for (const auto& s : simples_b) {
    bool matched = false;
    for (const auto& m : fam_b)
      matched = matched || (s.dim == m.dim && hom_A(obs.base, s, m).dim() > 0);
    c.expect(matched, "a simple B-module is missing from the family");
  }

  const auto rep2 = closure_check(obs.base, fam_b, 4);
  c.expect(rep2.dim_a == rep.dim_b && rep2.dim_b == rep.dim_c && rep2.dim_c == rep.dim_c,
           "dimensions drift on the second pass");
  c.expect(rep2.hull_dims == rep.hull_dims, "hull table drifts on the second pass");
}

void criterion_deformation(Check& c) {
  for (const auto& name : fixtures::poset_names()) {
    auto inc = incidence_algebra<R>(fixtures::poset(name));
    auto fam = simple_modules(inc);
    const std::size_t r = fam.size();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        auto d0 = differential_matrix(inc.algebra, fam, i, j, 0);
        auto d1 = differential_matrix(inc.algebra, fam, i, j, 1);
        auto d2 = differential_matrix(inc.algebra, fam, i, j, 2);
        c.expect((d1 * d0).is_zero() && (d2 * d1).is_zero(), name + ": d after d is not zero");
      }
    c.expect(tangent_dimensions(inc.algebra, fam) == ext_dims(inc.algebra, fam, 1),
             name + ": tangent dimensions disagree with Ext^1");
  }

  /* versality on the diamond over every square-zero ring with at most
   * two radical elements */
  auto inc = incidence_algebra<R>(fixtures::poset("diamond"));
  auto fam = simple_modules(inc);
  auto h = compute_hull(inc.algebra, fam, 3);
  const std::size_t r = fam.size(), na = inc.algebra.dim();
  std::vector<Subspace<R>> cocycles(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      cocycles[i * r + j] = kernel(differential_matrix(inc.algebra, fam, i, j, 1));
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) positions.emplace_back(i, j);

  std::size_t rings = 0;
  auto probe = [&](const std::vector<std::pair<std::size_t, std::size_t>>& shape) {
    TestRingSpec<R> spec;
    spec.points = r;
    spec.positions = shape;
    auto ring = make_test_ring(spec);
    ++rings;
    auto mixed = trivial_deformation(inc.algebra, fam, ring);
    for (std::size_t u = 0; u < shape.size(); ++u) {
      const auto& z = cocycles[shape[u].first * r + shape[u].second];
      for (std::size_t cc = 0; cc < z.dim(); ++cc) {
        auto probe_def = trivial_deformation(inc.algebra, fam, ring);
        for (std::size_t b = 0; b < na; ++b)
          probe_def.radical_part[b][u].at(0, 0) = z.basis.at(cc, b);
        versal_map(inc.algebra, fam, h, probe_def);
      }
      if (z.dim() > 0)
        for (std::size_t b = 0; b < na; ++b)
          mixed.radical_part[b][u].at(0, 0) = z.basis.at(z.dim() - 1, b);
    }
    versal_map(inc.algebra, fam, h, mixed);
  };
  for (std::size_t p = 0; p < positions.size(); ++p) {
    probe({positions[p]});
    for (std::size_t q = p; q < positions.size(); ++q) probe({positions[p], positions[q]});
  }
  c.expect(rings == 16 + 136, "ring enumeration is incomplete");
}

void criterion_determinism(Check& c) {
  const std::vector<std::string> commands = {
      "hull fixture:diamond --json",
      "ext fixture:crown --oracle --json",
      "radical fixture:chain4 --json",
      "verify gbt fixture:hereditary --json",
      "verify closure fixture:diamond --members 1,4 --max-degree 4 --json",
      "fixtures m2",
  };
  for (const auto& cmd : commands) {
    const std::string first = run_cli(cmd);
    const std::string second = run_cli(cmd);
    c.expect(!first.empty(), cmd + ": no output");
    c.expect(first == second, cmd + ": runs differ");
  }
}

}  // namespace

int main() {
  criterion(1, "hereditary moduli and observables", 10.0, criterion_hereditary);
  criterion(2, "diamond moduli, cups, relation", 30.0, criterion_diamond);
  criterion(3, "combinatorial oracle matches the cochain computation", 0.0, criterion_oracle);
  criterion(4, "joint-action surjectivity suite", 0.0, criterion_burnside);
  criterion(5, "recovery of the algebra across the catalog", 120.0, criterion_gbt);
  criterion(6, "closure and idempotence on the diamond subfamily", 0.0, criterion_closure);
  criterion(7, "deformation functor properties", 0.0, criterion_deformation);
  criterion(8, "byte-identical reports", 0.0, criterion_determinism);
  if (failures == 0) std::printf("all 8 criteria pass\n");
  return failures == 0 ? 0 : 1;
}
