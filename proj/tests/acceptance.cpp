// One line per acceptance criterion; exit status is nonzero when any of 1-9 fails.

#include "bgg/bggcore.hpp"
#include "bgg/error.hpp"
#include "cr_pattern.hpp"

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

using namespace bgg;

namespace {

struct Case {
  std::string label;
  std::vector<int> sigma;
  std::string module;  // trivial, fundamental, adjoint
  ContextPtr ctx;
  std::string name() const {
    std::string s = label + "/{";
    for (std::size_t i = 0; i < sigma.size(); ++i) s += (i ? "," : "") + std::to_string(sigma[i]);
    return s + "} " + module;
  }
};

AlgebraPtr make(const std::string& label, std::vector<int> sigma) {
  auto c = CartanMatrix::from_label(label);
  return build_graded_algebra(c, make_parabolic(c.rank(), sigma));
}

std::vector<Case> battery() {
  std::vector<Case> out;
  for (auto [label, sigma] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"A1", {1}}, {"A2", {1}}, {"A2", {1, 2}}, {"A3", {1, 3}}, {"A3", {2}}, {"B2", {1}}}) {
    auto g = make(label, sigma);
    const int rank = g->rank();
    Weight trivial(rank, 0), fund(rank, 0);
    fund[0] = 1;
    Weight adjoint = g->rs.to_weight(g->rs.highest());
    for (auto [kind, w] : std::vector<std::pair<std::string, Weight>>{{"trivial", trivial}, {"fundamental", fund}, {"adjoint", adjoint}})
      out.push_back({label, sigma, kind, make_context(g, w)});
  }
  return out;
}

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  " << what;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
}

std::string seconds_since(std::chrono::steady_clock::time_point t0) {
  auto s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << s << "s";
  return os.str();
}

bool all_true(const std::map<std::string, bool>& m, const std::vector<std::string>& keys, std::string& bad, const std::string& who) {
  bool ok = true;
  for (const auto& k : keys) {
    auto it = m.find(k);
    if (it == m.end() || !it->second) {
      ok = false;
      if (bad.empty()) bad = who + ": " + k + (it == m.end() ? " (missing)" : "");
    }
  }
  return ok;
}

int find_label(const BGGContext& ctx, int level, const Weight& w) {
  const auto& comps = ctx.coh[level].components;
  for (int i = 0; i < static_cast<int>(comps.size()); ++i)
    if (comps[i].label.coords == w) return i;
  return -1;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Case> cases;
  try {
    cases = battery();
  } catch (const Error& e) {
    std::cout << "battery construction failed: " << e.what() << std::endl;
    return 1;
  }

  // complex-level identities, exhaustive on rank <= 2 and sampled on rank 3
  std::vector<std::map<std::string, bool>> complex_checks;
  for (const auto& c : cases) {
    std::optional<Sampling> sample;
    if (c.ctx->g->rank() >= 3) sample = Sampling{20260101u, 100};
    complex_checks.push_back(verify_complex(*c.ctx, sample));
  }

  {
    std::string bad;
    bool ok = true;
    for (std::size_t i = 0; i < cases.size(); ++i)
      ok = all_true(complex_checks[i], {"del squared vanishes", "codifferential squared vanishes", "codifferential is adjoint to del"}, bad,
                    cases[i].name()) && ok;
    report(1, ok, "nilpotency and adjointness on the battery", bad.empty() ? std::to_string(cases.size()) + " cases" : bad);
  }
  {
    std::string bad;
    bool ok = true;
    for (std::size_t i = 0; i < cases.size(); ++i)
      ok = all_true(complex_checks[i], {"Hodge dimensions add up", "harmonic forms are closed and coclosed"}, bad, cases[i].name()) && ok;
    report(2, ok, "Hodge dimension count and harmonic = closed and coclosed", bad.empty() ? std::to_string(cases.size()) + " cases" : bad);
  }
  {
    const Case* cr = nullptr;
    for (const auto& c : cases)
      if (c.label == "A3" && c.sigma == std::vector<int>{1, 3} && c.module == "trivial") cr = &c;
    std::vector<int> harm, chain, comps;
    for (int n = 0; n <= cr->ctx->cc.top; ++n) {
      harm.push_back(cr->ctx->hodge[n].dim_harmonic);
      chain.push_back(cr->ctx->cc.dim(n));
      comps.push_back(static_cast<int>(cr->ctx->coh[n].components.size()));
    }
    bool ok = harm == std::vector<int>{1, 4, 5, 5, 4, 1} && chain == std::vector<int>{1, 5, 10, 10, 5, 1} &&
              comps == std::vector<int>{1, 2, 3, 3, 2, 1};
    auto str = [](const std::vector<int>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s;
    };
    report(3, ok, "A3/{1,3} trivial: column dimensions and multiplicities",
           "harmonic " + str(harm) + "; chains " + str(chain) + "; components " + str(comps));
  }
  {
    auto t = std::chrono::steady_clock::now();
    auto g = make("A3", {1, 3});
    bool ok = true;
    std::string detail;
    int arrows = 0, certified = 0;
    for (auto [a, b, c] : std::vector<std::array<int, 3>>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}}) {
      std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
      BGGDiagram D;
      try {
        D = build_bgg_diagram(g, cr_pattern::module_weight(a, b, c));
      } catch (const Error& e) {
        ok = false;
        detail = tag + ": " + e.what();
        continue;
      }
      const BGGContext& ctx = *D.ctx;
      auto pat = cr_pattern::pattern(a, b, c);
      std::vector<std::vector<int>> pos(pat.rows.size());
      bool shape = true;
      for (int n = 0; n < static_cast<int>(pat.rows.size()); ++n) {
        if (ctx.coh[n].components.size() != pat.rows[n].size()) shape = false;
        for (const auto& w : pat.rows[n]) pos[n].push_back(find_label(ctx, n, w));
        for (int p : pos[n]) shape = shape && p >= 0;
      }
      if (!shape) {
        ok = false;
        if (detail.empty()) detail = tag + ": cohomology does not match the pattern's nodes";
        continue;
      }
      std::set<std::tuple<int, int, int>> expected;
      for (const auto& ar : pat.arrows) {
        int from = pos[ar.row][ar.from], to = pos[ar.row + 1][ar.to];
        expected.emplace(ar.row, from, to);
        int want = ar.order >= 0 ? ar.order : operator_order(ctx, ar.row, from, ar.row + 1, to);
        bool found = false;
        for (const auto& x : D.arrows)
          if (x.from_level == ar.row && x.from_idx == from && x.to_idx == to) {
            found = true;
            if (x.order != want) {
              ok = false;
              if (detail.empty()) detail = tag + ": wrong order on an arrow out of row " + std::to_string(ar.row);
            }
          }
        if (!found) {
          ok = false;
          if (detail.empty()) detail = tag + ": missing arrow out of row " + std::to_string(ar.row);
        }
      }
      for (const auto& x : D.arrows) {
        ++arrows;
        certified += x.certified;
        if (!expected.count({x.from_level, x.from_idx, x.to_idx})) {
          ok = false;
          if (detail.empty()) detail = tag + ": extra arrow out of row " + std::to_string(x.from_level);
        }
      }
    }
    if (detail.empty())
      detail = std::to_string(arrows) + " arrows over 5 weights, " + std::to_string(certified) + " certified as p-homomorphisms, " + seconds_since(t);
    report(4, ok, "orders of the CR-pattern operators for (a,b,c) in {000,100,010,001,101}", detail);
  }
  {
    BGGDiagram D = build_bgg_diagram(make("A3", {1, 3}), {0, 0, 0});
    bool ok = D.arrows.size() == 19;
    int middle = 0;
    for (const auto& a : D.arrows) {
      if (a.from_level == 2) {
        ok = ok && a.order == 2;
        ++middle;
      } else {
        ok = ok && a.order == 1;
      }
    }
    ok = ok && middle == 7;
    report(5, ok, "trivial coefficients: middle column second order, the rest first order",
           std::to_string(middle) + " middle arrows of " + std::to_string(D.arrows.size()));
  }
  {
    auto g = make("A1", {1});
    bool ok = true;
    std::string detail;
    for (int m = 0; m <= 5; ++m) {
      auto ctx = make_context(g, {m});
      GeneratedSubmodule gs = generate_submodule(ctx, 0, 0);
      auto arrows = bgg_operator(gs);
      auto checks = verify_component(gs, compose_splitter(gs));
      bool here = arrows.size() == 1 && arrows[0].order == m + 1 && checks["composite is a harmonic lift"] &&
                  checks["composite splits the projection"] && checks["twisted derivative of the splitting is coclosed"] &&
                  checks["operator is a p-homomorphism"];
      if (!here && detail.empty()) detail = "m=" + std::to_string(m);
      ok = ok && here;
    }
    report(6, ok, "sl2: one operator of order m+1, harmonic lift, coclosed twisted derivative (m=0..5)", detail);
  }
  {
    auto t = std::chrono::steady_clock::now();
    const std::vector<std::string> keys = {"splitting lifts the footpoint",
                                           "equivariance defect of each splitting step",
                                           "distinguished jets form a submodule",
                                           "splitting steps are equivariant on distinguished jets",
                                           "distinguished jets are compatible across the filtration"};
    bool ok = true;
    std::string bad;
    int comps = 0, skipped = 0, contain = 0;
    for (const auto& c : cases)
      for (int n = 0; n < c.ctx->levels(); ++n)
        for (int k = 0; k < static_cast<int>(c.ctx->coh[n].components.size()); ++k) {
          GeneratedSubmodule gs = generate_submodule(c.ctx, n, k);
          std::map<std::string, bool> checks;
          try {
            checks = verify_component(gs, compose_splitter(gs));
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::DimensionOverBudget) throw;
            ++skipped;
            continue;
          }
          ++comps;
          std::string who = c.name() + " H" + std::to_string(n) + "[" + std::to_string(k) + "]";
          ok = all_true(checks, keys, bad, who) && ok;
          if (gs.r >= 1) {
            auto it = checks.find("second-order distinguished jets map into the next level");
            if (it != checks.end()) {
              ++contain;
              if (!it->second) {
                ok = false;
                if (bad.empty()) bad = who + ": second-order containment";
              }
            }
          }
          for (const auto& [name, v] : checks)
            if (!v) {
              ok = false;
              if (bad.empty()) bad = who + ": " + name;
            }
        }
    report(7, ok, "splitting-operator identities on every battery component",
           bad.empty() ? std::to_string(comps) + " components, " + std::to_string(skipped) + " over budget, containment checked on " +
                             std::to_string(contain) + ", " + seconds_since(t)
                       : bad);
  }
  {
    std::string bad;
    bool ok = true;
    for (std::size_t i = 0; i < cases.size(); ++i)
      ok = all_true(complex_checks[i], {"codifferential of a wedge", "equivariance defect of del"}, bad, cases[i].name()) && ok;
    report(8, ok, "wedge formula for the codifferential and the defect of del",
           bad.empty() ? "exhaustive on A1, A2; 100 seeded choices each on A3" : bad);
  }
  {
    // calibration: on sl2 the zeroth cohomology is the dual of V, labelled by m with eigenvalue -m/2
    auto g = make("A1", {1});
    bool calibrated = true;
    for (int m = 0; m <= 3; ++m) {
      auto ctx = make_context(g, {m});
      calibrated = calibrated && ctx->component(0, 0).label.coords == Weight{m} &&
                   ctx->component(0, 0).label.e_eigenvalue == Rational(-m, 2);
    }
    std::string bad;
    bool ok = calibrated;
    for (std::size_t i = 0; i < cases.size(); ++i)
      ok = all_true(complex_checks[i], {"cohomology matches the Weyl group prediction"}, bad, cases[i].name()) && ok;
    report(9, ok, "cohomology labels and eigenvalues agree with the Weyl group prediction",
           !calibrated ? "calibration on A1 failed" : bad.empty() ? std::to_string(cases.size()) + " cases" : bad);
  }
  std::cout << "criterion 10: INFO  analytic statements (resolutions, de Rham cohomology) are out of scope; 1-9 replace them" << std::endl;
  std::cout << "total " << seconds_since(t0) << ", " << failures << " failing" << std::endl;
  return failures == 0 ? 0 : 1;
}
