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

#include "aplab/increment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "aplab/parallel.hpp"
#include "aplab/rng.hpp"

namespace aplab {
namespace {

constexpr std::uint64_t kSiftStream = 0x51f7;
constexpr std::uint64_t kTranslationStream = 0x7a45;

void require_nonempty(const SubsetG& s, const char* name) {
  if (s.empty()) {
    throw Error(ErrorKind::kEmptySet, std::string(name) + " must be nonempty");
  }
}

void require_vector_space(const Group& g, const char* op) {
  if (!g.is_vector_space()) {
    throw Error(ErrorKind::kUnsupportedKind,
                std::string(op) + " needs F_q^n; got " + g.descriptor());
  }
}

void require_cyclic_group(const Group& g, const char* op) {
  if (!g.is_cyclic()) {
    throw Error(ErrorKind::kUnsupportedKind,
                std::string(op) + " needs Z/N; got " + g.descriptor());
  }
}

SubsetG negated(const SubsetG& s) {
  std::vector<Index> out;
  out.reserve(s.size());
  for (Index x : s.members()) out.push_back(s.group().neg(x));
  return SubsetG(s.group(), std::move(out));
}

// f * mu_X^{(k)} given the k-th power of mu_X^.
GFunc smooth(const GFunc& xk_hat, const GFunc& f) {
  GFunc fh = dft(f);
  for (Index i = 0; i < fh.size(); ++i) fh[i] *= xk_hat[i];
  return idft(fh);
}

GFunc power_transform(const SubsetG& x, int k) {
  GFunc h = dft(normalized_measure(x));
  for (Index i = 0; i < h.size(); ++i) {
    cplx p = 1.0;
    for (int j = 0; j < k; ++j) p *= h[i];
    h[i] = p;
  }
  return h;
}

double translation_defect(const GFunc& h, Index t) {
  const Group& g = h.group();
  double worst = 0.0;
  for (Index x = 0; x < h.size(); ++x) {
    worst = std::max(worst, std::abs(h[g.add(x, t)] - h[x]));
  }
  return worst;
}

struct TranslationCheck {
  double worst = 0.0;
  std::size_t checked = 0;
};

// Exhaustive over `ts` when small enough, otherwise a deterministic sample.
TranslationCheck check_translations(const GFunc& h, std::span<const Index> ts,
                                    const BootstrapOptions& options) {
  std::vector<Index> chosen;
  if (ts.size() <= options.exhaustive_translation_limit) {
    chosen.assign(ts.begin(), ts.end());
  } else {
    CounterRng rng(options.seed, kTranslationStream);
    for (std::size_t i = 0; i < options.translation_samples; ++i) {
      chosen.push_back(ts[rng.below(ts.size())]);
    }
  }
  std::vector<double> defects(chosen.size());
  parallel_for(chosen.size(), [&](std::size_t i) {
    defects[i] = translation_defect(h, chosen[i]);
  });
  TranslationCheck out;
  out.checked = chosen.size();
  for (double d : defects) out.worst = std::max(out.worst, d);
  return out;
}

double re_inner(const GFunc& f, const GFunc& g) { return inner(f, g).real(); }

void require_regular(const BohrSet& b, const char* name) {
  if (b.regularity() == Regularity::kRegular) return;
  if (b.regularity() == Regularity::kUnknown && is_regular(b).regular) return;
  throw Error(ErrorKind::kContract, std::string(name) + " is not a regular Bohr set");
}

std::size_t max_rank(const BohrSet& a, const BohrSet& b, const BohrSet& c) {
  return std::max({a.rank(), b.rank(), c.rank()});
}

// Pair counts r(x) = #{(a1, a2) : a1 - a2 = x}, exact.
std::vector<std::uint64_t> difference_counts(const SubsetG& a1, const SubsetG& a2) {
  const Group& g = a1.group();
  std::vector<std::uint64_t> counts(g.order(), 0);
  if (a1.size() * a2.size() <= 16 * g.order()) {
    for (Index x : a1.members()) {
      for (Index y : a2.members()) ++counts[g.sub(x, y)];
    }
    return counts;
  }
  // |G| (1_A1 o 1_A2)(x) is the integer count; round the transform output.
  const GFunc c = diff_convolve(indicator(a1), indicator(a2));
  const double order = static_cast<double>(g.order());
  for (Index x = 0; x < g.order(); ++x) {
    counts[x] = static_cast<std::uint64_t>(std::llround(c[x].real() * order));
  }
  return counts;
}

}  // namespace

// ---------------------------------------------------------------------------

SubsetG almost_period_set(const GFunc& f0, const SubsetG& domain, double eps_step) {
  if (f0.side() != Side::kPhysical) {
    throw Error(ErrorKind::kInvalidArgument, "almost periods need a physical-side function");
  }
  require_same_group(f0.group(), domain.group());
  if (!(eps_step > 0.0)) throw Error(ErrorKind::kDomain, "eps_step must be positive");
  require_nonempty(domain, "almost-period domain");
  const auto d = domain.members();
  std::vector<std::uint8_t> keep(d.size(), 0);
  parallel_for(d.size(), [&](std::size_t i) {
    keep[i] = translation_defect(f0, d[i]) <= eps_step ? 1 : 0;
  });
  std::vector<Index> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (keep[i]) out.push_back(d[i]);
  }
  return SubsetG(domain.group(), std::move(out));
}

double verify_linf_ap(const SubsetG& x, int k, const GFunc& f0) {
  require_same_group(x.group(), f0.group());
  require_nonempty(x, "X");
  if (k < 1) throw Error(ErrorKind::kDomain, "k must be at least 1");
  return max_abs_diff(smooth(power_transform(x, k), f0), f0);
}

// ---------------------------------------------------------------------------

double sift_inner_product(const SubsetG& a1, const SubsetG& a2, const SubsetG& s) {
  require_same_group(a1.group(), a2.group());
  require_same_group(a1.group(), s.group());
  require_nonempty(a1, "A1");
  require_nonempty(a2, "A2");
  const auto counts = difference_counts(a1, a2);
  std::uint64_t hits = 0;
  for (Index x : s.members()) hits += counts[x];
  return static_cast<double>(hits) /
         (static_cast<double>(a1.size()) * static_cast<double>(a2.size()));
}

HypothesisReport check_hypotheses(const SubsetG& a, const SubsetG& a1,
                                  const SubsetG& a2, const SubsetG& s, double eps,
                                  const Ambient& ambient) {
  const Group& g = a.group();
  require_same_group(g, a1.group());
  require_same_group(g, a2.group());
  require_same_group(g, s.group());
  require_nonempty(a, "A");
  const auto* bohr = std::get_if<BohrAmbient>(&ambient);
  const double eps_max = bohr ? 0.1 : 0.125;
  if (!(eps > 0.0 && eps < eps_max)) {
    throw Error(ErrorKind::kDomain, bohr ? "eps must lie in (0, 1/10)"
                                         : "eps must lie in (0, 1/8)");
  }
  HypothesisReport r;
  double mu_b = 1.0;
  if (bohr) {
    if (!bohr->b || !bohr->b1 || !bohr->b2) {
      throw Error(ErrorKind::kInvalidArgument, "Bohr ambient needs B, B', B''");
    }
    mu_b = bohr->b->density();
    r.alpha = static_cast<double>(a.size()) / static_cast<double>(bohr->b->size());
    r.alpha1 = static_cast<double>(a1.size()) / static_cast<double>(bohr->b1->size());
    r.alpha2 = static_cast<double>(a2.size()) / static_cast<double>(bohr->b2->size());
    r.size_ok = s.size() <= 2 * bohr->b1->size();
    r.corr_threshold = 1.0 + 2.0 * eps;
  } else {
    r.alpha = a.density();
    r.alpha1 = a1.density();
    r.alpha2 = a2.density();
    r.corr_threshold = 1.0 + 4.0 * eps;
  }
  if (s.empty() || a1.empty() || a2.empty()) {
    r.ok = false;
    return r;
  }
  r.inner_product = sift_inner_product(a1, a2, s);
  const GFunc mu_a = normalized_measure(a);
  const GFunc corr = diff_convolve(mu_a, mu_a);
  double lowest = std::numeric_limits<double>::infinity();
  for (Index x : s.members()) lowest = std::min(lowest, corr[x].real() * mu_b);
  r.min_corr_on_s = lowest;
  r.ok = r.inner_product >= 1.0 - eps && r.min_corr_on_s >= r.corr_threshold && r.size_ok;
  return r;
}

InnerDiscrepancy inner_discrepancy(const SubsetG& a, const SubsetG& a1, const SubsetG& a2) {
  require_same_group(a.group(), a1.group());
  require_same_group(a.group(), a2.group());
  const GFunc mu_a = normalized_measure(a);
  const GFunc corr = diff_convolve(mu_a, mu_a);
  const GFunc m1 = normalized_measure(a1);
  const GFunc m2 = normalized_measure(a2);
  return {re_inner(diff_convolve(m1, m1), corr), re_inner(diff_convolve(m2, m2), corr)};
}

// ---------------------------------------------------------------------------

int k_for_ffq(double eps, double alpha) {
  if (!(eps > 0.0) || !(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::kDomain, "k_for_ffq needs eps > 0 and alpha in (0, 1]");
  }
  return std::max(2, static_cast<int>(std::ceil(std::log2(4.0 / (eps * alpha)))) + 1);
}

int k_for_bohr(double eps, double alpha) {
  if (!(eps > 0.0) || !(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::kDomain, "k_for_bohr needs eps > 0 and alpha in (0, 1]");
  }
  const double margin = (eps / 4.0 - eps / 10.0) * alpha;
  return std::max(2, static_cast<int>(std::ceil(std::log2(2.0 / margin))));
}

BootstrapResult bootstrap_ffq(const SubsetG& a, const SubsetG& a1, const SubsetG& a2,
                              const SubsetG& s, double eps,
                              const BootstrapOptions& options) {
  const Group& g = a.group();
  require_vector_space(g, "bootstrap_ffq");
  require_nonempty(a1, "A1");
  require_nonempty(a2, "A2");
  require_nonempty(s, "S");
  const HypothesisReport hyp = check_hypotheses(a, a1, a2, s, eps, FfqAmbient{});
  if (!hyp.ok) {
    throw Error(ErrorKind::kContract,
                "hypotheses fail: <mu_A1 o mu_A2, 1_S> = " + std::to_string(hyp.inner_product) +
                    ", min over S of mu_A o mu_A = " + std::to_string(hyp.min_corr_on_s));
  }
  const double alpha = hyp.alpha;
  const int k = k_for_ffq(eps, alpha);
  const double eps_step = eps / k;

  const GFunc mu_a = normalized_measure(a);
  const GFunc corr = diff_convolve(mu_a, mu_a);
  const GFunc g12 = diff_convolve(normalized_measure(a1), normalized_measure(a2));
  // <h, 1_S> = (h * 1_{-S})(0), so F0 carries the reflected set.
  const GFunc f0 = convolve(g12, indicator(negated(s)));

  SubsetG x = almost_period_set(f0, SubsetG::full(g), eps_step);
  if (x.empty()) {
    throw Error(ErrorKind::kBootstrapFailure, "almost-period set is empty");
  }
  const GFunc xk_hat = power_transform(x, k);

  BootstrapResult r{.x = x};
  r.k_used = k;
  r.eps_step = eps_step;
  r.alpha = alpha;
  r.alpha1 = hyp.alpha1;
  r.alpha2 = hyp.alpha2;
  ChainReport& c = r.chain;

  c.ap_defect = max_abs_diff(smooth(xk_hat, f0), f0);
  require_at_most("||mu_X^(k) * F0 - F0||_inf", c.ap_defect, eps);

  const GFunc h0 = smooth(xk_hat, g12);
  c.inner_s = re_inner(h0, indicator(s));
  c.inner_s_bound = 1.0 - 2.0 * eps;
  require_at_least("<mu_X^(k) * mu_A1 o mu_A2, 1_S>", c.inner_s, c.inner_s_bound);
  c.inner_corr = re_inner(h0, corr);
  c.inner_corr_bound = 1.0 + eps;
  require_at_least("<mu_X^(k) * mu_A1 o mu_A2, mu_A o mu_A>", c.inner_corr,
                   c.inner_corr_bound);

  const SpectrumSet delta = spectrum(normalized_measure(x), 0.5);
  r.spectrum_size = delta.size();
  Subspace v = Subspace::annihilator(g, delta.members);
  r.codim_or_rank = v.codim();

  const GFunc f = convolve(g12, corr);
  c.l1_fourier_f = l1_fourier(f);
  c.l1_bound = 1.0 / alpha;
  require_at_most("sum |F^|", c.l1_fourier_f, c.l1_bound);

  const std::vector<Index> v_elems = v.elements();
  const TranslationCheck tc = check_translations(smooth(xk_hat, f), v_elems, options);
  c.max_translation_defect = tc.worst;
  c.translations_checked = tc.checked;
  c.translation_bound = eps / 2.0;
  require_at_most("translation defect on V", c.max_translation_defect, c.translation_bound);

  const SubsetG v_set(g, v_elems);
  const GFunc mu_v = normalized_measure(v_set);
  c.inner_smoothed = re_inner(convolve(mu_v, h0), corr);
  c.inner_smoothed_bound = 1.0 + eps / 2.0;
  require_at_least("<mu_V * mu_X^(k) * mu_A1 o mu_A2, mu_A o mu_A>", c.inner_smoothed,
                   c.inner_smoothed_bound);

  r.witness_sup = sup_norm(convolve(mu_v, mu_a));
  r.witness_bound = 1.0 + eps / 2.0;
  require_at_least("||mu_V * mu_A||_inf", r.witness_sup, r.witness_bound);

  BoundReport& b = r.bound;
  b.measured = static_cast<double>(v.codim());
  b.reference = lo(alpha) * lo(alpha) * lo(hyp.alpha1) * lo(hyp.alpha2);
  b.ratio = b.measured / b.reference;
  b.x_log_density = std::log(x.density());
  b.x_log_reference = -static_cast<double>(k) * k * lo(hyp.alpha1) * lo(hyp.alpha2) /
                      (eps * eps);
  r.subspace = std::move(v);
  return r;
}

BootstrapResult bootstrap_bohr(const SubsetG& a, const SubsetG& a1, const SubsetG& a2,
                               Index shift, const SubsetG& s, const BohrSet& b,
                               const BohrSet& b1, const BohrSet& b2, double eps,
                               const BootstrapOptions& options) {
  const Group& g = a.group();
  require_cyclic_group(g, "bootstrap_bohr");
  require_same_group(g, b.group());
  require_same_group(g, b1.group());
  require_same_group(g, b2.group());
  require_nonempty(a1, "A1");
  require_nonempty(a2, "A2");
  require_nonempty(s, "S");
  if (!g.contains(shift)) throw Error(ErrorKind::kInvalidArgument, "shift not in group");
  if (!a.is_subset_of(b.elements())) throw Error(ErrorKind::kContract, "A is not inside B");
  if (!a1.is_subset_of(b1.elements())) throw Error(ErrorKind::kContract, "A1 is not inside B'");
  if (!a2.shifted(shift).is_subset_of(b2.elements())) {
    throw Error(ErrorKind::kContract, "A2 is not inside B'' - x");
  }
  require_regular(b, "B");
  require_regular(b1, "B'");
  require_regular(b2, "B''");
  const HypothesisReport hyp =
      check_hypotheses(a, a1, a2, s, eps, BohrAmbient{&b, &b1, &b2, shift});
  if (!hyp.size_ok) throw Error(ErrorKind::kContract, "|S| exceeds 2|B'|");
  if (!hyp.ok) {
    throw Error(ErrorKind::kContract,
                "hypotheses fail: <mu_A1 o mu_A2, 1_S> = " + std::to_string(hyp.inner_product) +
                    ", min over S of mu(B) mu_A o mu_A = " +
                    std::to_string(hyp.min_corr_on_s));
  }
  const double alpha = hyp.alpha;
  const double inv_mu_b = 1.0 / b.density();
  const int k = k_for_bohr(eps, alpha);
  const double eps_step = eps / (4.0 * k);
  const std::size_t d = max_rank(b, b1, b2);
  const BohrSet dom = d == 0 ? b2 : find_regular(shrink(b2, 1.0 / (100.0 * d)));

  const GFunc mu_a = normalized_measure(a);
  const GFunc corr = diff_convolve(mu_a, mu_a);
  const GFunc g12 = diff_convolve(normalized_measure(a1), normalized_measure(a2));
  const GFunc f0 = convolve(g12, indicator(negated(s)));

  SubsetG x = almost_period_set(f0, dom.elements(), eps_step);
  if (x.empty()) {
    throw Error(ErrorKind::kBootstrapFailure, "almost-period set is empty");
  }
  const GFunc xk_hat = power_transform(x, k);

  BootstrapResult r{.x = x};
  r.k_used = k;
  r.eps_step = eps_step;
  r.alpha = alpha;
  r.alpha1 = hyp.alpha1;
  r.alpha2 = hyp.alpha2;
  ChainReport& c = r.chain;

  c.ap_defect = max_abs_diff(smooth(xk_hat, f0), f0);
  require_at_most("||mu_X^(k) * F0 - F0||_inf", c.ap_defect, eps / 4.0);

  const GFunc h0 = smooth(xk_hat, g12);
  c.inner_s = re_inner(h0, indicator(s));
  c.inner_s_bound = 1.0 - 1.25 * eps;
  require_at_least("<mu_X^(k) * mu_A1 o mu_A2, 1_S>", c.inner_s, c.inner_s_bound);
  c.inner_corr = re_inner(h0, corr);
  c.inner_corr_bound = (1.0 + eps / 2.0) * inv_mu_b;
  require_at_least("<mu_X^(k) * mu_A1 o mu_A2, mu_A o mu_A>", c.inner_corr,
                   c.inner_corr_bound);

  const SpectrumSet delta = spectrum(normalized_measure(x), 0.5);
  r.spectrum_size = delta.size();
  const double join_width = eps * alpha / 10.0;
  BohrSet b3 = find_regular(bohr_join(dom, delta.members, join_width));
  r.codim_or_rank = b3.rank();
  if (!b3.elements().is_subset_of(b2.elements())) {
    throw Error(ErrorKind::kInternalAssertion, "B''' is not inside B''");
  }
  double worst_chord = 0.0;
  for (Index gamma : delta.members) {
    for (Index t : b3.elements().members()) worst_chord = std::max(worst_chord, chord(g, gamma, t));
  }
  require_at_most("max |gamma(t) - 1| over Delta x B'''", worst_chord, join_width);

  const GFunc f = convolve(g12, corr);
  c.l1_fourier_f = l1_fourier(f);
  c.l1_bound = inv_mu_b / alpha;
  require_at_most("sum |F^|", c.l1_fourier_f, c.l1_bound);

  const TranslationCheck tc =
      check_translations(smooth(xk_hat, f), b3.elements().members(), options);
  c.max_translation_defect = tc.worst;
  c.translations_checked = tc.checked;
  c.translation_bound = eps / 4.0 * inv_mu_b;
  require_at_most("translation defect on B'''", c.max_translation_defect,
                  c.translation_bound);

  const GFunc mu_b3 = normalized_measure(b3.elements());
  c.inner_smoothed = re_inner(convolve(mu_b3, h0), corr);
  c.inner_smoothed_bound = (1.0 + eps / 4.0) * inv_mu_b;
  require_at_least("<mu_B''' * mu_X^(k) * mu_A1 o mu_A2, mu_A o mu_A>", c.inner_smoothed,
                   c.inner_smoothed_bound);

  r.witness_sup = sup_norm(convolve(mu_b3, mu_a)) * b.density();
  r.witness_bound = 1.0 + eps / 4.0;
  require_at_least("||mu_B''' * mu_A||_inf mu(B)", r.witness_sup, r.witness_bound);

  BoundReport& br = r.bound;
  const double shape = lo(alpha) * lo(alpha) * lo(hyp.alpha1) * lo(hyp.alpha2);
  br.measured = static_cast<double>(b3.rank());
  br.reference = static_cast<double>(d) + shape;
  br.ratio = br.measured / br.reference;
  const double l_arg =
      d == 0 ? 1.0
             : std::min(1.0, alpha / (static_cast<double>(d) * lo(hyp.alpha1) * lo(hyp.alpha2)));
  br.log_size_ratio = std::log(static_cast<double>(b3.size()) / static_cast<double>(b2.size()));
  br.log_size_reference = -lo(l_arg) * (static_cast<double>(d) + shape);
  br.x_log_density = std::log(static_cast<double>(x.size()) / static_cast<double>(dom.size()));
  br.x_log_reference = -static_cast<double>(k) * k * lo(hyp.alpha1) * lo(hyp.alpha2) /
                       (eps * eps);
  r.bohr = std::move(b3);
  return r;
}

// ---------------------------------------------------------------------------

std::string_view to_string(SiftStrategy s) {
  switch (s) {
    case SiftStrategy::kPlantedBypass: return "planted-bypass";
    case SiftStrategy::kRandomTranslate: return "random-translate";
    case SiftStrategy::kExhaustive: return "exhaustive";
  }
  return "unknown";
}

SiftStrategy parse_sift_strategy(std::string_view text) {
  if (text == "planted-bypass" || text == "planted") return SiftStrategy::kPlantedBypass;
  if (text == "random-translate" || text == "random") return SiftStrategy::kRandomTranslate;
  if (text == "exhaustive") return SiftStrategy::kExhaustive;
  throw Error(ErrorKind::kInvalidArgument, "unknown sift strategy '" + std::string(text) + "'");
}

namespace {

struct Candidate {
  std::vector<Index> a1;
  std::vector<Index> a2;
  Index shift = 0;
  double achieved = -1.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  bool valid = false;
};

// Qualifying candidates first, ranked by min density; otherwise by achieved.
bool better(const Candidate& c, const Candidate& best, double target) {
  if (!c.valid) return false;
  if (!best.valid) return true;
  const bool cq = c.achieved >= target;
  const bool bq = best.achieved >= target;
  if (cq != bq) return cq;
  if (cq) {
    const double cm = std::min(c.alpha1, c.alpha2);
    const double bm = std::min(best.alpha1, best.alpha2);
    if (cm != bm) return cm > bm;
  }
  return c.achieved > best.achieved;
}

SiftResult to_result(const Group& g, Candidate c, SiftStrategy strategy) {
  SiftResult r{.a1 = SubsetG(g, std::move(c.a1)), .a2 = SubsetG(g, std::move(c.a2))};
  r.shift = c.shift;
  r.achieved = c.achieved;
  r.alpha1 = c.alpha1;
  r.alpha2 = c.alpha2;
  r.strategy = std::string(to_string(strategy));
  return r;
}

// {x in A : x + s in A} = A cap (A - s).
std::vector<Index> overlap(const SubsetG& a, Index s) {
  std::vector<Index> out;
  for (Index x : a.members()) {
    if (a.contains(a.group().add(x, s))) out.push_back(x);
  }
  return out;
}

std::vector<Index> distinct_differences(const SubsetG& a) {
  const Group& g = a.group();
  std::vector<std::uint8_t> seen(g.order(), 0);
  for (Index x : a.members()) {
    for (Index y : a.members()) seen[g.sub(x, y)] = 1;
  }
  std::vector<Index> out;
  for (Index x = 0; x < g.order(); ++x) {
    if (seen[x]) out.push_back(x);
  }
  return out;
}

Candidate pick(std::vector<Candidate>& cands, double target) {
  Candidate best;
  for (auto& c : cands) {
    if (better(c, best, target)) best = std::move(c);
  }
  return best;
}

}  // namespace

SiftResult sift(const SubsetG& a, const SubsetG& s, double eps_prime,
                const SiftConfig& config) {
  const Group& g = a.group();
  require_same_group(g, s.group());
  require_nonempty(a, "A");
  require_nonempty(s, "S");
  const double target = 1.0 - eps_prime;
  const double order = static_cast<double>(g.order());
  Candidate best;

  switch (config.strategy) {
    case SiftStrategy::kPlantedBypass: {
      if (!config.planted_a1 || !config.planted_a2) {
        throw Error(ErrorKind::kInvalidArgument, "planted bypass needs fixture sets A1, A2");
      }
      const SubsetG& p1 = *config.planted_a1;
      const SubsetG& p2 = *config.planted_a2;
      best.a1.assign(p1.members().begin(), p1.members().end());
      best.a2.assign(p2.members().begin(), p2.members().end());
      best.shift = config.planted_shift;
      best.achieved = sift_inner_product(p1, p2, s);
      best.alpha1 = p1.density();
      best.alpha2 = p2.density();
      best.valid = true;
      break;
    }
    case SiftStrategy::kRandomTranslate: {
      const int trials = std::max(1, config.trials);
      std::vector<Candidate> cands(static_cast<std::size_t>(trials));
      const CounterRng rng(config.seed, kSiftStream);
      const auto m = a.members();
      parallel_for(cands.size(), [&](std::size_t i) {
        Index sh = 0, th = 0;
        if (i > 0) {
          // Differences of two members of A, so both candidates are nonempty.
          auto draw = [&](std::uint64_t ctr) { return m[rng.at(ctr) % m.size()]; };
          sh = g.sub(draw(4 * i), draw(4 * i + 1));
          th = g.sub(draw(4 * i + 2), draw(4 * i + 3));
        }
        Candidate& c = cands[i];
        c.a1 = overlap(a, sh);
        c.a2 = overlap(a, th);
        const SubsetG s1(g, c.a1), s2(g, c.a2);
        c.achieved = sift_inner_product(s1, s2, s);
        c.alpha1 = static_cast<double>(c.a1.size()) / order;
        c.alpha2 = static_cast<double>(c.a2.size()) / order;
        c.valid = true;
      });
      best = pick(cands, target);
      break;
    }
    case SiftStrategy::kExhaustive: {
      if (g.order() > (std::size_t{1} << 10)) {
        throw Error(ErrorKind::kSizeLimit, "exhaustive sift needs |G| <= 1024");
      }
      const std::vector<Index> diffs = distinct_differences(a);
      std::vector<std::vector<Index>> parts(diffs.size());
      for (std::size_t j = 0; j < diffs.size(); ++j) parts[j] = overlap(a, diffs[j]);
      std::vector<Candidate> per_s(diffs.size());
      const GFunc ind_s = indicator(s);
      parallel_for(diffs.size(), [&](std::size_t i) {
        const SubsetG s1(g, parts[i]);
        // hits(y) = #{a1 in A1 : a1 - y in S} = |G| (1_A1 o 1_S)(y).
        const GFunc conv = diff_convolve(indicator(s1), ind_s);
        std::vector<double> hits(g.order());
        for (Index y = 0; y < g.order(); ++y) hits[y] = std::round(conv[y].real() * order);
        std::vector<Candidate> row(diffs.size());
        for (std::size_t j = 0; j < diffs.size(); ++j) {
          double total = 0.0;
          for (Index y : parts[j]) total += hits[y];
          Candidate& c = row[j];
          c.achieved = total / (static_cast<double>(parts[i].size()) *
                                static_cast<double>(parts[j].size()));
          c.alpha1 = static_cast<double>(parts[i].size()) / order;
          c.alpha2 = static_cast<double>(parts[j].size()) / order;
          c.valid = true;
        }
        std::size_t arg = 0;
        for (std::size_t j = 1; j < row.size(); ++j) {
          if (better(row[j], row[arg], target)) arg = j;
        }
        per_s[i] = row[arg];
        per_s[i].a1 = parts[i];
        per_s[i].a2 = parts[arg];
      });
      best = pick(per_s, target);
      // Report the exact pair count rather than the rounded transform.
      best.achieved = sift_inner_product(SubsetG(g, best.a1), SubsetG(g, best.a2), s);
      break;
    }
  }
  SiftResult r = to_result(g, std::move(best), config.strategy);
  if (r.achieved < target) {
    throw SiftFailure("sift reached " + std::to_string(r.achieved) + " < target " +
                          std::to_string(target),
                      std::move(r));
  }
  return r;
}

// ---------------------------------------------------------------------------

FfqStepResult increment_step_ffq(const SubsetG& a, const SubsetG& c, double eps,
                                 const SiftConfig& sift_config,
                                 const BootstrapOptions& options) {
  const Group& g = a.group();
  require_vector_space(g, "increment_step_ffq");
  require_same_group(g, c.group());
  if (g.q() % 2 == 0) throw Error(ErrorKind::kUnsupportedKind, "q must be odd");
  if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorKind::kDomain, "eps must lie in (0, 1)");
  require_nonempty(a, "A");
  require_nonempty(c, "C");

  const GFunc mu_a = normalized_measure(a);
  const double value = re_inner(convolve(mu_a, mu_a), normalized_measure(c));
  if (std::abs(value - 1.0) <= eps) return CountsMatch{value};

  const GFunc corr = diff_convolve(mu_a, mu_a);
  std::vector<Index> s_members;
  for (Index x = 0; x < g.order(); ++x) {
    if (corr[x].real() >= 1.0 + eps / 8.0) s_members.push_back(x);
  }
  const SubsetG s(g, std::move(s_members));
  if (s.empty()) {
    SiftResult empty{.a1 = a, .a2 = a};
    empty.strategy = std::string(to_string(sift_config.strategy));
    throw SiftFailure("S = {mu_A o mu_A >= 1 + eps/8} is empty", std::move(empty));
  }
  SiftResult sr = sift(a, s, eps / 32.0, sift_config);
  BootstrapResult boot = bootstrap_ffq(a, sr.a1, sr.a2, s, eps / 32.0, options);
  Subspace v = *boot.subspace;
  const GFunc smoothed = convolve(indicator(a), normalized_measure(SubsetG(g, v.elements())));
  Index x0 = 0;
  double best = -1.0;
  for (Index x = 0; x < g.order(); ++x) {
    if (smoothed[x].real() > best) {
      best = smoothed[x].real();
      x0 = x;
    }
  }
  // Exact value |A cap (x0 + V)| / |V| at the chosen coset.
  const std::vector<Index> v_elems = v.elements();
  std::size_t hits = 0;
  for (Index e : v_elems) hits += a.contains(g.add(x0, e)) ? 1 : 0;
  const double witness = static_cast<double>(hits) / static_cast<double>(v_elems.size());
  require_at_least("||1_A * mu_V||_inf", witness, (1.0 + eps / 64.0) * a.density());
  return FfqIncrement{value, std::move(v), x0, witness, std::move(boot), std::move(sr)};
}

std::string_view to_string(TraceOutcome o) {
  switch (o) {
    case TraceOutcome::kCountsMatch: return "counts-match";
    case TraceOutcome::kIncrementFound: return "increment-found";
    case TraceOutcome::kExhausted: return "exhausted";
  }
  return "unknown";
}

std::size_t iteration_step_bound(double alpha0, double eps) {
  if (!(alpha0 > 0.0 && alpha0 <= 1.0) || !(eps > 0.0)) {
    throw Error(ErrorKind::kDomain, "step bound needs alpha0 in (0, 1] and eps > 0");
  }
  return static_cast<std::size_t>(std::ceil(std::log(1.0 / alpha0) / std::log1p(eps / 64.0)));
}

namespace {

// {coords of v in V : base + v in set}, as a subset of F_q^{dim V}.
SubsetG localize(const SubsetG& set, const Subspace& v, const std::vector<Index>& v_elems,
                 Index base, const Group& target) {
  const Group& g = set.group();
  std::vector<Index> out;
  for (Index e : v_elems) {
    if (set.contains(g.add(base, e))) out.push_back(target.encode(v.basis_coords(e)));
  }
  return SubsetG(target, std::move(out));
}

}  // namespace

IncrementTrace iterate_ffq(const SubsetG& a, const SubsetG& c, double eps, int max_steps,
                           const SiftConfig& sift_config, const BootstrapOptions& options) {
  if (max_steps < 1) throw Error(ErrorKind::kInvalidArgument, "max_steps must be >= 1");
  require_vector_space(a.group(), "iterate_ffq");
  require_nonempty(a, "A");
  const double alpha0 = a.density();
  IncrementTrace trace;
  trace.outcome = TraceOutcome::kIncrementFound;
  SubsetG cur_a = a;
  SubsetG cur_c = c;
  std::size_t codim = 0;
  std::size_t increments = 0;
  for (int step = 1; step <= max_steps; ++step) {
    SiftConfig cfg = sift_config;
    cfg.seed = sift_config.seed + static_cast<std::uint64_t>(step - 1);
    if (step > 1 && cfg.strategy == SiftStrategy::kPlantedBypass) {
      // Fixture sets live in the original coordinates.
      cfg.strategy = SiftStrategy::kRandomTranslate;
      cfg.planted_a1.reset();
      cfg.planted_a2.reset();
    }
    BootstrapOptions opts = options;
    opts.seed = options.seed + static_cast<std::uint64_t>(step - 1);
    const double alpha = cur_a.density();
    FfqStepResult res = increment_step_ffq(cur_a, cur_c, eps, cfg, opts);
    if (const auto* cm = std::get_if<CountsMatch>(&res)) {
      trace.steps.push_back({step, "counts-match", codim, 0, alpha, cm->value, std::nullopt});
      trace.outcome = TraceOutcome::kCountsMatch;
      break;
    }
    auto& inc = std::get<FfqIncrement>(res);
    const double new_alpha = inc.witness;
    require_at_least("density increment factor", new_alpha / alpha, 1.0 + eps / 64.0);
    codim += inc.v.codim();
    ++increments;
    trace.steps.push_back({step, "increment", codim, inc.bootstrap.k_used, alpha, new_alpha,
                           inc.bootstrap.bound.ratio});
    require_at_most("increment steps", static_cast<double>(increments),
                    static_cast<double>(iteration_step_bound(alpha0, eps)), 0.0);
    if (inc.v.dim() == 0) {
      trace.note = "localized to a single point";
      break;
    }
    const Group& g = cur_a.group();
    const Group next = Group::vector_space(g.q(), static_cast<std::uint32_t>(inc.v.dim()));
    const std::vector<Index> v_elems = inc.v.elements();
    SubsetG next_a = localize(cur_a, inc.v, v_elems, inc.x0, next);
    SubsetG next_c = localize(cur_c, inc.v, v_elems, g.scale(2, inc.x0), next);
    if (next_c.empty()) {
      trace.outcome = TraceOutcome::kExhausted;
      trace.note = "C has no points on the localized coset";
      break;
    }
    cur_a = std::move(next_a);
    cur_c = std::move(next_c);
  }
  return trace;
}

// ---------------------------------------------------------------------------

namespace {

struct IntCandidateContext {
  const SubsetG& a;
  const SubsetG& kb1;
  const SubsetG& kb2;
  const GFunc& corr;
  double threshold;
};

// A1 = (A cap (s + kB')) - s, A2 = (A cap (s + t + kB'')) - s, x = -t.
// Achieved counts pairs whose difference meets the correlation threshold,
// which is <mu_A1 o mu_A2, 1_S> for S = {x in A1 - A2 : corr >= threshold}.
Candidate int_candidate(const IntCandidateContext& ctx, Index s, Index t) {
  const Group& g = ctx.a.group();
  Candidate c;
  for (Index x : ctx.a.members()) {
    const Index y = g.sub(x, s);
    if (ctx.kb1.contains(y)) c.a1.push_back(y);
    if (ctx.kb2.contains(g.sub(y, t))) c.a2.push_back(y);
  }
  c.shift = g.neg(t);
  std::sort(c.a1.begin(), c.a1.end());
  std::sort(c.a2.begin(), c.a2.end());
  if (c.a1.empty() || c.a2.empty()) return c;
  std::uint64_t hits = 0;
  for (Index x : c.a1) {
    for (Index y : c.a2) {
      if (ctx.corr[g.sub(x, y)].real() >= ctx.threshold) ++hits;
    }
  }
  c.achieved = static_cast<double>(hits) /
               (static_cast<double>(c.a1.size()) * static_cast<double>(c.a2.size()));
  c.alpha1 = static_cast<double>(c.a1.size()) / static_cast<double>(ctx.kb1.size());
  c.alpha2 = static_cast<double>(c.a2.size()) / static_cast<double>(ctx.kb2.size());
  c.valid = true;
  return c;
}

}  // namespace

IntStepResult increment_step_int(const SubsetG& a, const BohrSet& b, const BohrSet& b1,
                                 const BohrSet& b2, const IntStepParams& params,
                                 const SiftConfig& sift_config,
                                 const BootstrapOptions& options) {
  const Group& g = a.group();
  require_cyclic_group(g, "increment_step_int");
  require_same_group(g, b.group());
  require_same_group(g, b1.group());
  require_same_group(g, b2.group());
  if (params.p < 1) throw Error(ErrorKind::kDomain, "p must be >= 1");
  const double eps = params.eps;
  if (!(eps > 0.0 && eps < 0.4)) throw Error(ErrorKind::kDomain, "eps must lie in (0, 2/5)");
  require_nonempty(a, "A");
  const BohrSet kb1 = dilate(b1, params.k);
  const BohrSet kb2 = dilate(b2, params.k);
  if (!a.is_subset_of(b.elements())) throw Error(ErrorKind::kContract, "A is not inside B");
  require_regular(b, "B");
  require_regular(b1, "B'");
  require_regular(b2, "B''");
  const std::size_t d = max_rank(b, b1, b2);
  const SubsetG nest = d == 0 ? b1.elements()
                              : shrink(b1, params.nesting_c / static_cast<double>(d)).elements();
  if (!b2.elements().is_subset_of(nest)) {
    throw Error(ErrorKind::kContract, "B'' is not inside B'_{c/d}");
  }

  const double inv_mu_b = 1.0 / b.density();
  const GFunc m1 = normalized_measure(kb1.elements());
  const GFunc m2 = normalized_measure(kb2.elements());
  const GFunc raw = convolve(diff_convolve(m1, m1), diff_convolve(m2, m2));
  std::vector<double> weights(g.order());
  for (Index x = 0; x < g.order(); ++x) weights[x] = std::max(0.0, raw[x].real());
  const GFunc mu = GFunc::from_real(g, weights);
  const GFunc mu_a = normalized_measure(a);
  const GFunc corr = diff_convolve(mu_a, mu_a);
  const double norm = weighted_norm(corr, params.p, mu);
  const double threshold = (1.0 + eps) * inv_mu_b;
  if (norm < threshold) return NoViolation{norm, threshold};

  const double target = 1.0 - eps / 4.0;
  const IntCandidateContext ctx{a, kb1.elements(), kb2.elements(), corr,
                                (1.0 + eps / 2.0) * inv_mu_b};
  Candidate best;
  switch (sift_config.strategy) {
    case SiftStrategy::kPlantedBypass: {
      if (!sift_config.planted_a1 || !sift_config.planted_a2) {
        throw Error(ErrorKind::kInvalidArgument, "planted bypass needs fixture sets A1, A2");
      }
      const SubsetG& p1 = *sift_config.planted_a1;
      const SubsetG& p2 = *sift_config.planted_a2;
      require_nonempty(p1, "A1");
      require_nonempty(p2, "A2");
      best.a1.assign(p1.members().begin(), p1.members().end());
      best.a2.assign(p2.members().begin(), p2.members().end());
      best.shift = sift_config.planted_shift;
      std::uint64_t hits = 0;
      for (Index x : best.a1) {
        for (Index y : best.a2) hits += corr[g.sub(x, y)].real() >= ctx.threshold ? 1 : 0;
      }
      best.achieved = static_cast<double>(hits) / (static_cast<double>(p1.size()) * p2.size());
      best.alpha1 = static_cast<double>(p1.size()) / static_cast<double>(kb1.size());
      best.alpha2 = static_cast<double>(p2.size()) / static_cast<double>(kb2.size());
      best.valid = true;
      break;
    }
    case SiftStrategy::kRandomTranslate: {
      const int trials = std::max(1, sift_config.trials);
      std::vector<Candidate> cands(static_cast<std::size_t>(trials));
      const CounterRng rng(sift_config.seed, kSiftStream);
      const auto am = a.members();
      const auto m1s = kb1.elements().members();
      const auto m2s = kb2.elements().members();
      parallel_for(cands.size(), [&](std::size_t i) {
        Index sh = 0, th = 0;
        if (i > 0) {
          // s = a - b' and t = a' - s - b'' keep both candidates nonempty.
          const Index x1 = am[rng.at(4 * i) % am.size()];
          const Index y1 = m1s[rng.at(4 * i + 1) % m1s.size()];
          const Index x2 = am[rng.at(4 * i + 2) % am.size()];
          const Index y2 = m2s[rng.at(4 * i + 3) % m2s.size()];
          sh = g.sub(x1, y1);
          th = g.sub(g.sub(x2, sh), y2);
        }
        cands[i] = int_candidate(ctx, sh, th);
      });
      best = pick(cands, target);
      break;
    }
    case SiftStrategy::kExhaustive: {
      if (g.order() > (std::size_t{1} << 10)) {
        throw Error(ErrorKind::kSizeLimit, "exhaustive sift needs |G| <= 1024");
      }
      std::vector<Candidate> per_s(g.order());
      parallel_for(g.order(), [&](std::size_t si) {
        Candidate row_best;
        for (Index t = 0; t < g.order(); ++t) {
          Candidate c = int_candidate(ctx, static_cast<Index>(si), t);
          if (better(c, row_best, target)) row_best = std::move(c);
        }
        per_s[si] = std::move(row_best);
      });
      best = pick(per_s, target);
      break;
    }
  }
  if (!best.valid) {
    return OracleIncomplete{norm, SiftResult{.a1 = SubsetG(g), .a2 = SubsetG(g)},
                            "no sift candidate with nonempty A1, A2"};
  }
  SiftResult sr = to_result(g, std::move(best), sift_config.strategy);
  if (sr.achieved < target) {
    const std::string msg = "sift reached " + std::to_string(sr.achieved) + " < target " +
                            std::to_string(target);
    return OracleIncomplete{norm, std::move(sr), msg};
  }
  std::vector<std::uint8_t> in_s(g.order(), 0);
  for (Index x : sr.a1.members()) {
    for (Index y : sr.a2.members()) {
      const Index diff = g.sub(x, y);
      if (corr[diff].real() >= ctx.threshold) in_s[diff] = 1;
    }
  }
  std::vector<Index> s_members;
  for (Index x = 0; x < g.order(); ++x) {
    if (in_s[x]) s_members.push_back(x);
  }
  const SubsetG s(g, std::move(s_members));
  BootstrapResult boot =
      bootstrap_bohr(a, sr.a1, sr.a2, sr.shift, s, b, kb1, kb2, eps / 4.0, options);
  const double witness = boot.witness_sup;
  require_at_least("||mu_B''' * mu_A||_inf mu(B)", witness, 1.0 + eps / 16.0);
  BohrSet b3 = *boot.bohr;
  BoundReport pb;
  const double la = lo(boot.alpha);
  const double p = static_cast<double>(params.p);
  pb.measured = static_cast<double>(b3.rank());
  pb.reference = static_cast<double>(d) + la * la * la * la * p * p;
  pb.ratio = pb.measured / pb.reference;
  pb.log_size_ratio = std::log(static_cast<double>(b3.size()) / static_cast<double>(kb2.size()));
  pb.log_size_reference = -(static_cast<double>(d) * la + std::pow(la, 5) * p * p);
  return IntIncrement{norm, std::move(b3), witness, std::move(boot), std::move(sr), pb};
}

}  // namespace aplab
