#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdim/cyclic_structure.hpp"
#include "sdim/error.hpp"
#include "sdim/group.hpp"
#include "sdim/group_spec.hpp"
#include "sdim/number_theory.hpp"
#include "sdim/power_graph.hpp"
#include "sdim/strong_resolving.hpp"

namespace sdim {

// omega(R_G): sigma_n for cyclic G; otherwise the maximum of alpha_p over the
// prime divisors, joined for non-CP groups by sigma_{|M|} + 1 over the maximal
// cyclic subgroups of non-prime-power order.
inline std::size_t omega_reduced_group(const Group& g, const MaximalCyclicFamily& fam) {
  const std::uint64_t n = g.order();
  if (is_cyclic(g)) return static_cast<std::size_t>(sigma(n));
  int best = 0;
  for (std::uint64_t p : factorize(n).primes()) best = std::max(best, alpha_p(g, fam, p));
  for (std::size_t i : fam.mixed) best = std::max(best, sigma(fam.all[i].order()) + 1);
  return static_cast<std::size_t>(best);
}

inline std::size_t omega_reduced_group(const Group& g) {
  if (g.order() < 2) throw Error(ErrorKind::InvalidSpec, "omega(R_G) needs |G| >= 2");
  return omega_reduced_group(g, maximal_cyclic_subgroups(g));
}

struct ClosedForm {
  Method tag;
  std::size_t value;
};

// Every closed form that applies to g, most specific first. Cyclicity and the
// p-group property are read off the table; the family formulas need the spec.
inline std::vector<ClosedForm> closed_forms(const Group& g, const MaximalCyclicFamily& fam) {
  std::vector<ClosedForm> out;
  const std::uint64_t n = g.order();
  if (n < 2) return out;
  const auto f = factorize(n);
  const bool cyclic = is_cyclic(g);
  const GroupSpec& spec = g.spec();

  if (cyclic) {
    if (f.is_prime_power())
      out.push_back({Method::ClosedFormCyclicPrimePower, n - 1});
    else
      out.push_back({Method::ClosedFormCyclic, n - static_cast<std::size_t>(sigma(f))});
    return out;
  }
  if (spec.is<spec::ElementaryAbelian>()) out.push_back({Method::ClosedFormElementaryAbelian, n - 2});
  if (spec.is<spec::Dihedral>()) {
    std::uint64_t m = spec.as<spec::Dihedral>().order / 2;
    out.push_back({Method::ClosedFormDihedral, 2 * m - (static_cast<std::size_t>(sigma(m)) + 1)});
  }
  if (spec.is<spec::GeneralizedQuaternion>()) {
    std::uint64_t m = spec.as<spec::GeneralizedQuaternion>().order / 4;
    out.push_back({Method::ClosedFormQuaternion, 4 * m - (static_cast<std::size_t>(sigma(2 * m)) + 1)});
  }
  if (auto orders = cyclic_factor_orders(spec); orders && !f.is_prime_power()) {
    auto d = invariant_factors(*orders);
    std::uint64_t product = 1;
    for (auto di : d) product *= di;
    out.push_back({Method::ClosedFormAbelian, product - (static_cast<std::size_t>(sigma(d.back())) + 1)});
  }
  if (f.is_prime_power()) {
    int max_s = 0;
    for (const auto& ca : chain_analysis(g, fam, f.factors.front().prime)) max_s = std::max(max_s, ca.s);
    out.push_back({Method::ClosedFormPGroup, n - static_cast<std::size_t>(max_s)});
  }
  return out;
}

struct SdimGroupOptions {
  bool witness = true;
};

// sdim(Gamma_G) = n - omega(R_G). Every applicable closed form, and the
// reduction on the power graph when a witness is requested, must agree.
inline SdimResult sdim_group(const Group& g, const SdimGroupOptions& options = {}) {
  const std::size_t n = g.order();
  SdimResult r;
  if (n == 1) {
    r.value = 0;
    r.omega_reduced = 1;
    r.method = Method::ClosedFormCyclicPrimePower;
    r.witness = std::vector<Vertex>{};
    r.verified = true;
    r.note = "sigma_1 = 1 by convention";
    return r;
  }
  const auto fam = maximal_cyclic_subgroups(g);
  const std::size_t omega = omega_reduced_group(g, fam);
  r.omega_reduced = omega;
  r.value = n - omega;
  r.method = Method::GroupTheorem;

  const auto forms = closed_forms(g, fam);
  for (const auto& cf : forms) {
    if (cf.value != r.value)
      throw Error(ErrorKind::InternalInconsistency, std::string(to_string(cf.tag)) + " gives " +
                                                        std::to_string(cf.value) + " but the general theorem gives " +
                                                        std::to_string(r.value) + " for " + to_string(g.spec()));
  }
  if (!forms.empty()) {
    r.method = forms.front().tag;
    r.closed_form = forms.front().tag;
  }

  if (options.witness) {
    SdimResult red = sdim_via_reduction(power_graph(g));
    if (red.value != r.value)
      throw Error(ErrorKind::InternalInconsistency, "reduction gives " + std::to_string(red.value) +
                                                        " but the general theorem gives " + std::to_string(r.value) +
                                                        " for " + to_string(g.spec()));
    r.witness = std::move(red.witness);
    r.verified = red.verified && r.witness->size() == r.value;
  }
  return r;
}

struct CyclicCliqueWitness {
  std::vector<std::uint64_t> orders;
  std::vector<Element> elements;  // residues in Z_n
};

// Order sequence p_m, p_m^2, ..., p_m^{r_m}, p_{m-1} p_m^{r_m}, ..., n of
// length sigma_n, realised by the residue n/d for each order d; each residue
// is a multiple (power) of the next. For prime powers sigma_n = 1 and the
// single element has order p.
inline CyclicCliqueWitness clique_witness_cyclic(std::uint64_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidSpec, "clique_witness_cyclic needs n >= 2");
  const auto f = factorize(n);
  CyclicCliqueWitness w;
  if (f.is_prime_power()) {
    w.orders.push_back(f.factors.front().prime);
  } else {
    std::uint64_t d = 1;
    for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it)
      for (int k = 0; k < it->exponent; ++k) {
        d *= it->prime;
        w.orders.push_back(d);
      }
  }
  for (auto d : w.orders) w.elements.push_back(static_cast<Element>(n / d));
  return w;
}

// The clique {x_0, ..., x_lambda, c_{s'}, ..., c_s} built on an M_i attaining
// alpha_p, where x_j is the element of order p^j inside <c_{s'}>.
inline std::vector<Element> clique_witness_alpha_p(const Group& g, const MaximalCyclicFamily& fam, std::uint64_t p) {
  if (fam.of_prime(p).empty()) throw Error(ErrorKind::EmptyFamily, "no maximal cyclic " + std::to_string(p) + "-subgroups");
  const auto analyses = chain_analysis(g, fam, p);
  const ChainAnalysis* best = &analyses.front();
  for (const auto& ca : analyses)
    if (ca.alpha_term() > best->alpha_term()) best = &ca;

  const auto s_prime = static_cast<std::size_t>(best->s_prime);
  const Element c = best->chain_generators[s_prime - 1];
  const int e = *exact_log(best->chain[s_prime - 1].order(), p);
  std::vector<Element> out;
  for (int j = 0; j <= best->lambda_exp; ++j) out.push_back(g.power(c, ipow(p, e - j)));
  for (std::size_t u = s_prime - 1; u < best->chain_generators.size(); ++u) out.push_back(best->chain_generators[u]);
  return out;
}

inline std::vector<Element> clique_witness_alpha_p(const Group& g, std::uint64_t p) {
  return clique_witness_alpha_p(g, maximal_cyclic_subgroups(g), p);
}

enum class NMinusTwoClass { CyclicPQ, GeneralizedQuaternion2Group, TrivialIntersectionCP };

inline std::string_view to_string(NMinusTwoClass c) {
  switch (c) {
    case NMinusTwoClass::CyclicPQ: return "i";
    case NMinusTwoClass::GeneralizedQuaternion2Group: return "ii";
    case NMinusTwoClass::TrivialIntersectionCP: return "iii";
  }
  return "?";
}

struct NMinusTwoClassification {
  bool matches = false;
  std::optional<NMinusTwoClass> label;
};

// Structural test for sdim(Gamma_G) = n - 2:
//   (i)   cyclic of order pq, p != q primes;
//   (ii)  generalised quaternion 2-group: order 2^m (m >= 3), noncyclic, one involution;
//   (iii) noncyclic CP-group whose maximal cyclic subgroups meet pairwise trivially.
inline NMinusTwoClassification classify_n_minus_2(const Group& g) {
  const std::uint64_t n = g.order();
  if (n < 2) return {};
  const auto f = factorize(n);
  if (is_cyclic(g)) {
    if (f.factors.size() == 2 && f.factors[0].exponent == 1 && f.factors[1].exponent == 1)
      return {true, NMinusTwoClass::CyclicPQ};
    return {};
  }
  if (f.is_prime_power() && f.factors.front().prime == 2 && f.factors.front().exponent >= 3) {
    std::size_t involutions = 0;
    for (Element x = 0; x < n; ++x)
      if (element_order(g, x) == 2) ++involutions;
    if (involutions == 1) return {true, NMinusTwoClass::GeneralizedQuaternion2Group};
  }
  if (!is_cp_group(g)) return {};
  const auto fam = maximal_cyclic_subgroups(g);
  for (std::size_t i = 0; i < fam.all.size(); ++i)
    for (std::size_t j = i + 1; j < fam.all.size(); ++j)
      if (fam.all[i].members.intersection_count(fam.all[j].members) != 1) return {};
  return {true, NMinusTwoClass::TrivialIntersectionCP};
}

}  // namespace sdim
