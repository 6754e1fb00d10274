// Copyright 2026 The aplab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>

#include "aplab/bohr.hpp"
#include "aplab/density.hpp"
#include "aplab/error.hpp"
#include "aplab/group.hpp"
#include "aplab/harmonic.hpp"
#include "aplab/increment.hpp"
#include "aplab/record.hpp"
#include "aplab/rng.hpp"
#include "oracles.hpp"

namespace aplab::verify {
namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(const char* format, double a = 0, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c, d);
  return buf;
}

// Runs `body`, timing it and converting exceptions into a failed result.
CriterionResult timed(std::string id, std::string title, double budget_seconds,
                      const std::function<void(CriterionResult&)>& body) {
  CriterionResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  r.pass = true;
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail += (r.detail.empty() ? "" : "; ") + std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_seconds > 0 && r.seconds > budget_seconds) {
    r.pass = false;
    r.detail += fmt("; runtime %.1f s exceeds %.0f s", r.seconds, budget_seconds);
  }
  return r;
}

void fail(CriterionResult& r, const std::string& why) {
  if (r.pass) r.detail = why;  // keep the first failure
  r.pass = false;
}

GFunc random_function(const Group& g, std::uint64_t seed, std::uint64_t stream) {
  const CounterRng rng(seed, stream);
  GFunc f(g, Side::kPhysical);
  for (Index x = 0; x < g.order(); ++x) {
    f[x] = cplx(2.0 * rng.uniform_at(2 * x) - 1.0, 2.0 * rng.uniform_at(2 * x + 1) - 1.0);
  }
  return f;
}

SubsetG nonempty_random_set(const Group& g, double alpha, std::uint64_t seed) {
  for (std::uint64_t s = seed;; s += 0x1000) {
    SubsetG a = random_set(g, alpha, s);
    if (!a.empty()) return a;
  }
}

SubsetG doubled(const SubsetG& a) {
  std::vector<Index> m;
  for (Index x : a.members()) m.push_back(a.group().scale(2, x));
  return SubsetG(a.group(), std::move(m));
}

std::vector<Group> harmonic_groups() {
  std::vector<Group> out;
  for (std::uint32_t q = 2; q * q <= 4096; ++q) {
    if (!is_prime(q)) continue;
    std::uint32_t order = q;
    for (std::uint32_t n = 2; order * q <= 4096; ++n) {
      order *= q;
      out.push_back(Group::vector_space(q, n));
    }
  }
  for (std::uint32_t n = 1; n <= 64; ++n) out.push_back(Group::cyclic(n));
  for (std::uint32_t n = 65; n <= 4096; ++n) {
    const bool pow2 = (n & (n - 1)) == 0;
    const bool sampled_prime = is_prime(n) && (n < 512 || n % 40 == 3 || n > 4080);
    const bool composite = n % 291 == 0 || n == 729 || n == 2187 || n == 3125 || n == 4095 ||
                           n == 1000 || n == 2310 || n == 3000;
    if (pow2 || sampled_prime || composite) out.push_back(Group::cyclic(n));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

CriterionResult harmonic_identities(const SuiteOptions& o) {
  return timed("C1", "harmonic identities on groups with |G| <= 4096", 60.0, [&](CriterionResult& r) {
    const auto groups = harmonic_groups();
    double worst = 0.0;
    std::size_t checks = 0;
    for (const Group& g : groups) {
      for (int i = 0; i < 100; ++i) {
        const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
        const GFunc f = random_function(g, seed, g.order() * 2 + 0);
        const GFunc h = random_function(g, seed, g.order() * 2 + 1);
        const GFunc fh = dft(f);
        const GFunc hh = dft(h);
        double err = max_abs_diff(idft(fh), f);
        double energy = 0.0, spectral = 0.0;
        for (Index x = 0; x < g.order(); ++x) {
          energy += std::norm(f[x]);
          spectral += std::norm(fh[x]);
        }
        energy /= static_cast<double>(g.order());
        err = std::max(err, std::abs(spectral - energy) / std::max(1.0, energy));
        GFunc prod = fh;
        for (Index x = 0; x < g.order(); ++x) prod[x] *= hh[x];
        err = std::max(err, max_abs_diff(dft(convolve(f, h)), prod));
        err = std::max(err, max_abs_diff(diff_convolve(f, h), convolve(f, reflect_conj(h))));
        if (g.order() <= 256 && i < 3) {
          err = std::max(err, max_abs_diff(convolve(f, h), oracle::direct_convolve(f, h)));
          err = std::max(err, max_abs_diff(fh, oracle::naive_dft(f)));
        }
        worst = std::max(worst, err);
        ++checks;
        if (err > 1e-9) {
          fail(r, g.descriptor() + fmt(": identity error %.3g", err));
        }
      }
    }
    if (r.pass) {
      r.detail = std::to_string(groups.size()) + " groups, " + std::to_string(checks) +
                 " functions, max error " + fmt("%.2e", worst);
    }
  });
}

CriterionResult counting(const SuiteOptions& o) {
  return timed("C2", "3AP counts vs brute force; Behrend sets progression-free", 120.0,
               [&](CriterionResult& r) {
    std::size_t sets = 0;
    for (const char* desc : {"z:101", "z:1009", "v:3:6"}) {
      const Group g = make_group(desc);
      for (int i = 0; i < 50; ++i) {
        const double alpha = 0.02 + 0.48 * (i % 10) / 9.0;
        const SubsetG a = random_set(g, alpha, o.seed + 7919 * static_cast<std::uint64_t>(i));
        const ThreeAPReport rep = count_3aps(a);
        const std::uint64_t brute = oracle::brute_3aps(a);
        ++sets;
        if (rep.raw_triples != brute || rep.raw_triples - rep.nontrivial_triples != a.size()) {
          fail(r, std::string(desc) + ": count " + std::to_string(rep.raw_triples) +
                      " vs brute " + std::to_string(brute));
        }
      }
    }
    std::string sizes;
    for (std::uint32_t n : {100u, 1000u, 10000u}) {
      const SubsetG b = behrend_set(n);
      const ThreeAPReport rep = count_3aps(b);
      const std::uint64_t direct = oracle::integer_3aps(b.members());
      const bool in_range = b.members().front() >= 1 && b.members().back() <= n;
      sizes += (sizes.empty() ? "" : ",") + std::to_string(b.size());
      if (rep.nontrivial_triples != 0 || direct != 0 || !in_range) {
        fail(r, "Behrend N=" + std::to_string(n) + " has progressions");
      }
    }
    if (r.pass) {
      r.detail = std::to_string(sets) + " random sets exact; Behrend sizes " + sizes;
    }
  });
}

CriterionResult key_cancellation(const SuiteOptions& o) {
  return timed("C3", "sum |F^| <= 1/alpha on random triples", 0.0, [&](CriterionResult& r) {
    const char* descs[] = {"z:97", "z:128", "z:1009", "v:3:4", "v:5:3", "v:7:3", "z:4093", "v:3:7"};
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const Group g = make_group(descs[i % 8]);
      const std::uint64_t s = o.seed + 104729 * static_cast<std::uint64_t>(i);
      const CounterRng rng(s, 0xc3);
      auto density = [&](int j) { return 0.02 + 0.58 * rng.uniform_at(static_cast<std::uint64_t>(j)); };
      const SubsetG a = nonempty_random_set(g, density(0), s + 1);
      const SubsetG a1 = nonempty_random_set(g, density(1), s + 2);
      const SubsetG a2 = nonempty_random_set(g, density(2), s + 3);
      const GFunc mu_a = normalized_measure(a);
      const GFunc f = convolve(diff_convolve(normalized_measure(a1), normalized_measure(a2)),
                               diff_convolve(mu_a, mu_a));
      const double l1 = l1_fourier(f);
      worst = std::max(worst, l1 * a.density());
      if (l1 > 1.0 / a.density() + 1e-9) {
        fail(r, g.descriptor() + fmt(": sum |F^| = %.12g > 1/alpha = %.12g", l1, 1.0 / a.density()));
      }
    }
    if (r.pass) r.detail = fmt("200/200 pass; max alpha * sum |F^| = %.6f", worst);
  });
}

CriterionResult lemma_ffq(const SuiteOptions& o) {
  return timed("C4", "subspace bootstrap on planted F_3^5 / F_5^4 instances", 600.0,
               [&](CriterionResult& r) {
    double min_margin = 1e300, ratio_sum = 0.0, ratio_max = 0.0;
    int passed = 0;
    for (int i = 0; i < 50; ++i) {
      const Group g = make_group(i % 2 ? "v:5:4" : "v:3:5");
      const double eps = (i / 2) % 2 ? 0.1 : 0.05;
      const double noise = 0.025 * (i % 3);
      const std::size_t codim0 = 1 + (i / 4) % 2;
      const PlantedInstance inst =
          planted_instance(g, codim0, noise, eps, o.seed + 1000 * static_cast<std::uint64_t>(i));
      const HypothesisReport hyp = check_hypotheses(inst.a, inst.a1, inst.a2, inst.s, eps, FfqAmbient{});
      if (!hyp.ok) {
        fail(r, "instance " + std::to_string(i) + ": hypotheses fail");
        continue;
      }
      BootstrapOptions opts;
      opts.seed = inst.seed;
      std::optional<BootstrapResult> run;
      try {
        run = bootstrap_ffq(inst.a, inst.a1, inst.a2, inst.s, eps, opts);
      } catch (const Error& e) {
        fail(r, "instance " + std::to_string(i) + ": " + e.what());
        continue;
      }
      const BootstrapResult& b = *run;
      const std::vector<Index> v = b.subspace->elements();
      const double witness = oracle::coset_sup(inst.a, v);
      const ChainReport& c = b.chain;
      const GFunc mu_x_hat = oracle::naive_dft(normalized_measure(b.x));
      std::vector<Index> delta;
      for (Index gamma = 0; gamma < g.order(); ++gamma) {
        if (std::abs(mu_x_hat[gamma]) >= 0.5 * (1.0 - 1e-12)) delta.push_back(gamma);
      }
      const bool ok = witness >= 1.0 + eps / 2.0 - 1e-9 &&
                      std::abs(witness - b.witness_sup) <= 1e-9 &&
                      c.inner_s >= 1.0 - 2.0 * eps - 1e-9 &&
                      c.inner_corr >= 1.0 + eps - 1e-9 && c.ap_defect <= eps + 1e-9 &&
                      c.max_translation_defect <= eps / 2.0 + 1e-9 &&
                      c.l1_fourier_f <= 1.0 / b.alpha + 1e-9 &&
                      b.codim_or_rank == oracle::gauss_rank(g, delta);
      if (!ok) {
        fail(r, "instance " + std::to_string(i) + fmt(": witness %.12g", witness));
        continue;
      }
      ++passed;
      min_margin = std::min(min_margin, witness - (1.0 + eps / 2.0));
      ratio_sum += b.bound.ratio;
      ratio_max = std::max(ratio_max, b.bound.ratio);
      r.records.push_back(to_json_line(bootstrap_record(i, "bootstrap-ffq", b, inst.seed)));
    }
    r.detail = std::to_string(passed) + "/50 pass" +
               fmt("; min witness margin %.4f; codim/(lo^2 lo lo) mean %.4f max %.4f", min_margin,
                   ratio_sum / std::max(1, passed), ratio_max);
  });
}

CriterionResult lemma_bohr(const SuiteOptions& o) {
  return timed("C5", "Bohr bootstrap on planted Z/2003, Z/4093 instances", 900.0,
               [&](CriterionResult& r) {
    int passed = 0;
    double rank_ratio_max = 0.0, log_size_min = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Group g = Group::cyclic(i % 2 ? 4093 : 2003);
      const std::size_t rank = static_cast<std::size_t>(i % 3);
      const double eps = (i / 3) % 2 ? 0.08 : 0.05;
      const double noise = (i / 2) % 2 ? 0.05 : 0.0;
      const PlantedBohrInstance inst = planted_bohr_instance(
          g, rank, noise, eps, o.seed + 1000 * static_cast<std::uint64_t>(i));
      BootstrapOptions opts;
      opts.seed = inst.seed;
      std::optional<BootstrapResult> run;
      try {
        run = bootstrap_bohr(inst.a, inst.a1, inst.a2, inst.shift, inst.s, inst.b, inst.b1,
                           inst.b2, eps, opts);
      } catch (const Error& e) {
        fail(r, "instance " + std::to_string(i) + ": " + e.what());
        continue;
      }
      const BootstrapResult& b = *run;
      const BohrSet& b3 = *b.bohr;
      const double witness = oracle::coset_sup(inst.a, b3.elements().members()) * inst.b.density();
      const bool regular = oracle::fine_grid_regular(b3).regular;
      const bool ok = witness >= 1.0 + eps / 4.0 - 1e-9 &&
                      std::abs(witness - b.witness_sup) <= 1e-9 && regular &&
                      oracle::bohr_membership_matches(b3) &&
                      b3.elements().is_subset_of(inst.b2.elements());
      if (!ok) {
        fail(r, "instance " + std::to_string(i) +
                    fmt(": witness %.12g regular %.0f", witness, regular ? 1.0 : 0.0));
        continue;
      }
      ++passed;
      rank_ratio_max = std::max(rank_ratio_max, b.bound.ratio);
      log_size_min = std::min(log_size_min, b.bound.log_size_ratio);
      r.records.push_back(to_json_line(bootstrap_record(i, "bootstrap-bohr", b, inst.seed)));
    }
    r.detail = std::to_string(passed) + "/20 pass" +
               fmt("; max rank/(d + lo^2 lo lo) %.3f; min log(|B'''|/|B''|) %.3f", rank_ratio_max,
                   log_size_min);
  });
}

CriterionResult dichotomy(const SuiteOptions& o) {
  return timed("C6", "increment step dichotomy on F_q^n", 0.0, [&](CriterionResult& r) {
    const Group g = make_group("v:3:5");
    const double eps = 0.5;
    // A = V0 of codimension 2, C its complement: counts vanish, so an increment is forced.
    const std::vector<Index> constraints = {1, 3};
    const Subspace v0 = Subspace::annihilator(g, constraints);
    const SubsetG a(g, v0.elements());
    SiftConfig sc;
    sc.seed = o.seed;
    const FfqStepResult inc = increment_step_ffq(a, set_complement(a), eps, sc);
    const auto* step = std::get_if<FfqIncrement>(&inc);
    if (!step) {
      fail(r, "V0 / complement fixture did not give an increment");
    } else {
      const double witness = oracle::coset_sup(a, step->v.elements()) * a.density();
      if (witness < (1.0 + eps / 64.0) * a.density() - 1e-12 ||
          std::abs(witness - step->witness) > 1e-12) {
        fail(r, fmt("increment witness %.12g below (1+eps/64) alpha", witness));
      }
    }
    const SubsetG full = SubsetG::full(g);
    if (!std::holds_alternative<CountsMatch>(increment_step_ffq(full, full, eps, sc))) {
      fail(r, "A = C = G did not give counts-match");
    }
    const Group g4 = make_group("v:3:4");
    int matches = 0;
    for (int i = 0; i < 100; ++i) {
      const SubsetG ra = nonempty_random_set(g4, 0.45, o.seed + static_cast<std::uint64_t>(i));
      SiftConfig c2;
      c2.seed = o.seed + static_cast<std::uint64_t>(i);
      try {
        if (std::holds_alternative<CountsMatch>(increment_step_ffq(ra, full.group() == g4 ? full : SubsetG::full(g4), 0.1, c2))) {
          ++matches;
        }
      } catch (const SiftFailure&) {
        // Counted as a non-match.
      }
    }
    if (matches < 90) fail(r, "random fixtures: counts-match rate " + std::to_string(matches) + "%");
    if (r.pass) {
      r.detail = "increment branch on V0/complement; counts-match on A = C = G; random alpha=0.45 "
                 "counts-match rate " + std::to_string(matches) + "/100";
    }
  });
}

CriterionResult iteration(const SuiteOptions& o) {
  return timed("C7", "iterated increments terminate within the step bound", 0.0,
               [&](CriterionResult& r) {
    int passed = 0;
    std::size_t max_steps_seen = 0;
    for (int i = 0; i < 20; ++i) {
      const Group g = make_group(i % 2 ? "v:5:4" : "v:3:5");
      const std::uint64_t seed = o.seed + 31 * static_cast<std::uint64_t>(i);
      const PlantedInstance inst = planted_instance(g, 2, 0.05, 0.1, seed);
      const double eps = 0.5;
      const std::size_t bound = iteration_step_bound(inst.a.density(), eps);
      SiftConfig sc;
      sc.seed = seed;
      const IncrementTrace t =
          iterate_ffq(inst.a, doubled(inst.a), eps, static_cast<int>(bound), sc);
      bool ok = t.outcome == TraceOutcome::kCountsMatch && t.steps.size() <= bound;
      for (std::size_t s = 0; s < t.steps.size(); ++s) {
        const TraceStep& st = t.steps[s];
        if (st.kind == "increment") {
          ok = ok && st.witness >= (1.0 + eps / 64.0) * st.alpha - 1e-12;
          if (s + 1 < t.steps.size()) ok = ok && t.steps[s + 1].alpha > st.alpha;
        }
      }
      if (!ok) {
        fail(r, "seed " + std::to_string(seed) + ": outcome " + std::string(to_string(t.outcome)) +
                    " after " + std::to_string(t.steps.size()) + " steps");
        continue;
      }
      ++passed;
      max_steps_seen = std::max(max_steps_seen, t.steps.size());
      for (const Record& rec : trace_records(t, seed)) r.records.push_back(to_json_line(rec));
    }
    r.detail = std::to_string(passed) + "/20 terminate; longest trace " +
               std::to_string(max_steps_seen) + " steps";
  });
}

CriterionResult bohr_suite(const SuiteOptions& o) {
  return timed("C8", "regular Bohr sets on Z/4093", 0.0, [&](CriterionResult& r) {
    const Group g = Group::cyclic(4093);
    int passed = 0;
    for (int i = 0; i < 20; ++i) {
      const CounterRng rng(o.seed + static_cast<std::uint64_t>(i), 0xb8);
      const std::size_t rank = 1 + static_cast<std::size_t>(i % 3);
      std::vector<Index> freqs;
      std::uint64_t ctr = 0;
      while (freqs.size() < rank) {
        const auto f = static_cast<Index>(1 + rng.at(ctr++) % 4092);
        if (std::find(freqs.begin(), freqs.end(), f) == freqs.end()) freqs.push_back(f);
      }
      const double rho = 0.3 + 1.2 * rng.uniform_at(ctr++);
      const BohrSet b = bohr_set(g, freqs, rho);
      const BohrSet reg = find_regular(b);
      bool ok = reg.regularity() == Regularity::kRegular && is_regular(reg).regular &&
                oracle::fine_grid_regular(reg).regular && oracle::bohr_membership_matches(reg) &&
                reg.scale() >= 0.5 && reg.scale() <= 1.0 &&
                reg.elements().is_subset_of(b.elements()) &&
                shrink(reg, 0.5).elements().is_subset_of(reg.elements());
      // Join with three random frequencies at a narrower width.
      std::vector<Index> delta;
      for (int j = 0; j < 3; ++j) delta.push_back(static_cast<Index>(rng.at(ctr++) % 4093));
      const double rho_new = 0.1 + 0.3 * rng.uniform_at(ctr++);
      const BohrSet joined = bohr_join(reg, delta, rho_new);
      ok = ok && joined.elements().is_subset_of(reg.elements());
      for (Index t : joined.elements().members()) {
        for (Index gamma : delta) {
          const double angle = 2.0 * 3.14159265358979323846 * g.pairing(gamma, t) / 4093.0;
          ok = ok && std::abs(std::polar(1.0, angle) - 1.0) <= rho_new + 1e-12;
        }
      }
      // Size is monotone in the width.
      std::size_t prev = 0;
      for (int j = 1; j <= 16; ++j) {
        const std::size_t sz = bohr_set(g, freqs, 2.0 * j / 16).size();
        ok = ok && sz >= prev && sz >= 1;
        prev = sz;
      }
      if (!ok) {
        fail(r, "set " + std::to_string(i) + ": " + reg.descriptor());
        continue;
      }
      ++passed;
    }
    r.detail = std::to_string(passed) + "/20 regular sets verified on the 256-point grid";
  });
}

CriterionResult determinism(const SuiteOptions& o) {
  return timed("C9", "record streams are byte-identical across reruns", 0.0,
               [&](CriterionResult& r) {
    const char* prev = std::getenv("APLAB_THREADS");
    const std::optional<std::string> saved = prev ? std::optional<std::string>(prev) : std::nullopt;
    auto streams = [&] {
      std::vector<std::string> out;
      for (auto* fn : {&lemma_ffq, &lemma_bohr, &iteration}) {
        const CriterionResult c = fn(o);
        if (!c.pass) throw Error(ErrorKind::kInternalAssertion, c.id + " failed: " + c.detail);
        out.insert(out.end(), c.records.begin(), c.records.end());
      }
      return out;
    };
    setenv("APLAB_THREADS", "1", 1);
    const auto first = streams();
    if (saved) {
      setenv("APLAB_THREADS", saved->c_str(), 1);
    } else {
      unsetenv("APLAB_THREADS");
    }
    const auto second = streams();
    if (first.empty() || first != second) {
      fail(r, "record streams differ between runs");
    } else {
      r.detail = std::to_string(first.size()) + " records identical across two runs";
    }
  });
}

CriterionResult group_invariants(const SuiteOptions& o) {
  return timed("grp", "character and subspace invariants", 0.0, [&](CriterionResult& r) {
    for (const char* desc : {"z:97", "z:256", "v:3:4", "v:5:3", "v:2:8", "v:7:2"}) {
      const Group g = make_group(desc);
      double worst = 0.0;
      for (Index gamma = 0; gamma < g.order(); ++gamma) {
        for (Index x = 0; x < g.order(); ++x) {
          const cplx cx = char_eval(g, gamma, x);
          for (Index y = 0; y < g.order(); ++y) {
            worst = std::max(worst, std::abs(char_eval(g, gamma, g.add(x, y)) -
                                             cx * char_eval(g, gamma, y)));
          }
        }
      }
      if (worst > 1e-12) fail(r, std::string(desc) + fmt(": multiplicativity error %.3g", worst));
    }
    for (const char* desc : {"v:3:4", "v:5:3", "v:2:6", "v:7:2", "v:3:6"}) {
      const Group g = make_group(desc);
      for (int i = 0; i < 100; ++i) {
        const CounterRng rng(o.seed + static_cast<std::uint64_t>(i), 0x6e);
        std::vector<Index> delta;
        const auto m = 1 + rng.at(0) % (g.n() + 1);
        for (std::uint64_t j = 0; j < m; ++j) delta.push_back(static_cast<Index>(rng.at(j + 1) % g.order()));
        const Subspace v = Subspace::annihilator(g, delta);
        const std::size_t rank = oracle::gauss_rank(g, delta);
        bool ok = v.codim() == rank && span_dim(g, delta) == rank;
        for (Index x : v.elements()) {
          for (Index d : delta) ok = ok && g.pairing(d, x) == 0;
        }
        if (!ok) fail(r, std::string(desc) + ": annihilator codim mismatch");
      }
    }
    const Group z12 = Group::cyclic(35);
    const SubsetG s = random_set(z12, 0.4, o.seed);
    for (std::int64_t k : {1, 2, 3, 4, 6, 8, 9, 11, -1}) {
      if (dilate_set(k, s).size() != s.size()) fail(r, "dilate changed size");
    }
    if (r.pass) r.detail = "multiplicativity exhaustive; 500 annihilators; dilates";
  });
}

// ---------------------------------------------------------------------------

std::vector<std::string> suite_names() {
  return {"harmonic", "density", "increment", "bohr", "grp", "determinism", "all"};
}

bool is_suite(const std::string& name) {
  const auto names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CriterionResult> run_suite(const std::string& name, const SuiteOptions& o,
                                       const std::function<void(const CriterionResult&)>& report) {
  using Fn = CriterionResult (*)(const SuiteOptions&);
  std::vector<Fn> fns;
  if (name == "harmonic") fns = {&harmonic_identities, &key_cancellation};
  if (name == "density") fns = {&counting};
  if (name == "increment") fns = {&lemma_ffq, &lemma_bohr, &dichotomy, &iteration};
  if (name == "bohr") fns = {&bohr_suite};
  if (name == "grp") fns = {&group_invariants};
  if (name == "determinism") fns = {&determinism};
  if (name == "all") {
    fns = {&harmonic_identities, &counting,  &key_cancellation, &lemma_ffq,       &lemma_bohr,
           &dichotomy,           &iteration, &bohr_suite,       &determinism,     &group_invariants};
  }
  if (fns.empty()) throw Error(ErrorKind::kInvalidArgument, "unknown suite '" + name + "'");
  std::vector<CriterionResult> out;
  for (Fn fn : fns) {
    out.push_back(fn(o));
    if (report) report(out.back());
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof(head), "[%s] %-4s", r.pass ? "PASS" : "FAIL", r.id.c_str());
  char tail[48];
  std::snprintf(tail, sizeof(tail), "  (%.2f s)", r.seconds);
  return std::string(head) + " " + r.title + tail + "  " + r.detail;
}

}  // namespace aplab::verify
