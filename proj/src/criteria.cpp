#include "frobcrit/criteria.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "frobcrit/error.hpp"
#include "frobcrit/registry.hpp"

namespace frobcrit {

std::string to_string(SurjectivitySource s) {
  switch (s) {
    case SurjectivitySource::Auto: return "auto";
    case SurjectivitySource::DonkinRegistry: return "donkin-registry";
    case SurjectivitySource::LargeP: return "large-p";
    case SurjectivitySource::UserAsserted: return "user-asserted";
    case SurjectivitySource::None: return "none";
  }
  return "none";
}

std::string to_string(TriState t) {
  switch (t) {
    case TriState::Holds: return "holds";
    case TriState::Fails: return "fails";
    case TriState::Unknown: return "unknown";
  }
  return "unknown";
}

SurjectivitySource parse_surjectivity_source(std::string_view text) {
  for (auto s : {SurjectivitySource::Auto, SurjectivitySource::DonkinRegistry,
                 SurjectivitySource::LargeP, SurjectivitySource::UserAsserted,
                 SurjectivitySource::None})
    if (text == to_string(s)) return s;
  throw Error("unknown surjectivity source '" + std::string(text) +
              "' (expected auto, donkin-registry, large-p, user-asserted or none)");
}

TriState parse_tristate(std::string_view text) {
  for (auto t : {TriState::Holds, TriState::Fails, TriState::Unknown})
    if (text == to_string(t)) return t;
  throw Error("unknown tri-state '" + std::string(text) + "' (expected holds, fails or unknown)");
}

bool CriterionReport::has_conclusion(std::string_view tag) const {
  return std::any_of(conclusions.begin(), conclusions.end(),
                     [&](const Conclusion& c) { return c.tag == tag; });
}

namespace {

void require_valid(const Embedding& emb) {
  auto problems = validate(emb);
  if (problems.empty()) return;
  std::string msg = "invalid embedding " + emb.label() + ":";
  for (const auto& p : problems) msg += " " + p + ";";
  msg.pop_back();
  throw Error(msg);
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw Error("characteristic p must be prime, got " + std::to_string(p));
}

IndexSet sorted_unique(IndexSet J) {
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  return J;
}

std::string set_string(const IndexSet& J) {
  std::string s = "{";
  for (std::size_t i = 0; i < J.size(); ++i) s += (i ? "," : "") + std::to_string(J[i] + 1);
  return s + "}";
}

}  // namespace

std::int64_t lemma53_min_p(const Embedding& emb) {
  require_valid(emb);
  const auto& h = emb.h();
  if (h.num_positive_roots() == 0) return 0;
  const Weight rho = rho_h(emb);
  bool any = false;
  Rational best = 0;
  for (std::size_t i = 0; i < emb.g().rank(); ++i) {
    const Weight shifted = rho + restrict(emb, emb.g().fundamental_weight(i));
    for (const auto& beta : h.positive_roots()) {
      auto v = h.cartan_pairing(shifted, beta);
      if (!any || v > best) best = v;
      any = true;
    }
  }
  return ceil(best);
}

SurjectivityVerdict resolve_surjectivity(const Embedding& emb, std::int64_t p,
                                         SurjectivitySource source) {
  SurjectivityVerdict v;
  const bool try_donkin =
      source == SurjectivitySource::Auto || source == SurjectivitySource::DonkinRegistry;
  const bool try_large =
      source == SurjectivitySource::Auto || source == SurjectivitySource::LargeP;

  if (try_donkin) {
    auto d = lookup_donkin(emb, p);
    if (d.yes) {
      v.status = TriState::Holds;
      v.source = to_string(SurjectivitySource::DonkinRegistry);
      v.reason = d.citation;
      return v;
    }
  }
  if (try_large) {
    auto bound = lemma53_min_p(emb);
    if (p >= bound) {
      v.status = TriState::Holds;
      v.source = to_string(SurjectivitySource::LargeP);
      v.reason = "p = " + std::to_string(p) + " >= " + std::to_string(bound) +
                 ", the largest pairing <rho_H + omega_i|T_H, beta^vee>";
      return v;
    }
  }
  if (source == SurjectivitySource::UserAsserted) {
    v.status = TriState::Holds;
    v.source = to_string(source);
    v.reason = "asserted by the caller";
    return v;
  }
  v.reason = source == SurjectivitySource::None
                 ? "no certificate requested"
                 : "no certificate found (" + to_string(source) + ") at p = " + std::to_string(p);
  return v;
}

InducedSplittingHypotheses thm41_hypotheses(const Embedding& emb, const Weight& lambda,
                                            std::int64_t p, SurjectivitySource source) {
  require_valid(emb);
  require_prime(p);
  emb.g().check_rank(lambda, "thm41_hypotheses");
  if (!is_dominant(lambda))
    throw Error("weight " + to_string(lambda) + " is not dominant for G");

  InducedSplittingHypotheses r;
  const Weight restricted = restrict(emb, lambda);
  const Weight rho = rho_h(emb);
  r.splitting_weight = Rational(2 * (p - 1)) * rho - restricted;
  r.splitting_dominant = is_dominant(r.splitting_weight);
  r.canonical_weight = Rational(p - 1) * rho - restricted;
  r.canonical_dominant = is_dominant(r.canonical_weight);
  r.surjectivity = resolve_surjectivity(emb, p, source);

  // lambda = (p-1) rho_J exactly when each coordinate is 0 or p-1.
  IndexSet J;
  bool steinberg = true;
  for (std::size_t i = 0; i < lambda.rank(); ++i) {
    if (lambda[i] == Rational(p - 1)) J.push_back(static_cast<int>(i));
    else if (lambda[i] != 0) steinberg = false;
  }
  r.base_splitting = steinberg ? "(p-1)rho_J-splitting of P_J/B with J = " + set_string(J)
                               : "assumed";
  return r;
}

CriterionReport check_main(const CriterionInput& input) {
  const auto& emb = input.embedding;
  require_valid(emb);
  require_prime(input.p);
  const auto& g = emb.g();
  g.check_index_set(input.J);
  const IndexSet J = sorted_unique(input.J);
  const auto p = input.p;

  CriterionReport r{.input = input};
  r.input.J = J;
  const Weight rho = rho_h(emb);
  r.restricted_rho_J = restrict(emb, g.rho_J(J));
  r.test_weight = Rational(2) * rho - r.restricted_rho_J;
  r.dominance = is_dominant(r.test_weight);
  r.regular = is_regular_dominant(r.test_weight);
  r.canonical_dominance = is_dominant(rho - r.restricted_rho_J);
  r.surjectivity = resolve_surjectivity(emb, p, input.surjectivity_source);
  r.twist_detected = detect_twist(emb, p);
  r.lemma53_min_p = lemma53_min_p(emb);

  const bool full = J == g.all_indices();
  if (input.lie_separability) {
    r.lie_separability = *input.lie_separability;
    r.lie_reason = "supplied by the caller";
  } else if (full) {
    r.lie_separability = TriState::Holds;
    r.lie_reason = "J = I";
  } else if (r.twist_detected) {
    r.lie_separability = TriState::Fails;
    r.lie_reason = "restriction factors through a Frobenius twist at p = " + std::to_string(p);
  } else {
    r.lie_separability = TriState::Unknown;
    r.lie_reason = "not decidable from the character lattice";
  }

  auto tri = [](bool b) { return b ? TriState::Holds : TriState::Fails; };
  std::map<std::string, TriState> status{
      {"dominance", tri(r.dominance)},
      {"regular", tri(r.regular)},
      {"canonical_dominance", tri(r.canonical_dominance)},
      {"surjectivity", r.surjectivity.status},
      {"lie_separability", r.lie_separability},
  };

  const std::string pm1 = std::to_string(p - 1);
  const std::string Js = set_string(J);
  auto make_labels = [&](Conclusion& c, const IndexSet& K) {
    c.orbit_count = g.weyl_order(K);
    for (auto& w : enumerate_prefix(g, K, input.label_limit)) c.orbit_labels.push_back(w.word());
    c.labels_truncated = c.orbit_count > c.orbit_labels.size();
  };

  struct Candidate {
    const char* tag;
    const char* theorem;
    std::string statement;
    std::vector<std::string> hypotheses;
    bool requires_full;
  };
  std::vector<Candidate> candidates{
      {tags::kSplitPJ, "induced-flag-splitting",
       "P_J/B with J = " + Js + " admits a Frobenius M_H(" + pm1 +
           "(2rho_H - rho_J|T_H))-splitting compatible with the closures of H B w B/B, w in W_J",
       {"dominance", "surjectivity"}, false},
      {tags::kGloballyFRegular, "induced-flag-regularity",
       "the closures of H B w B/B in P_J/B, w in W_J, are globally F-regular",
       {"dominance", "regular", "surjectivity"}, false},
      {tags::kCanonicalSplit, "canonical-splitting",
       "P_J/B with J = " + Js + " admits a B_H-canonical Frobenius splitting",
       {"canonical_dominance", "surjectivity"}, false},
      {tags::kCor72HPJ, "orbit-closure-splitting",
       "the closure of H P_J/B in G/B is Frobenius split compatibly with its H-orbit closures, "
       "which are normal and Cohen-Macaulay",
       {"dominance", "surjectivity", "lie_separability"}, false},
      {tags::kGloballyFRegular, "orbit-closure-regularity",
       "the closure of H P_J/B in G/B and its H-orbit closures are globally F-regular",
       {"dominance", "regular", "surjectivity", "lie_separability"}, false},
      {tags::kCor73Flag, "full-flag-splitting",
       "G/B admits a Frobenius M_H(" + pm1 +
           "(2rho_H - rho|T_H))-splitting compatible with all H-orbit closures H B w B/B",
       {"dominance", "surjectivity"}, true},
      {tags::kCohomologyVanishing, "full-flag-vanishing",
       "H^i(X, L) = 0 for i > 0, every H-orbit closure X in G/B and every ample line bundle L",
       {"dominance", "surjectivity"}, true},
  };

  for (auto& cand : candidates) {
    if (cand.requires_full && !full) continue;
    std::vector<std::string> pending;
    bool failed = false;
    for (const auto& hyp : cand.hypotheses) {
      auto s = status.at(hyp);
      if (s == TriState::Fails) failed = true;
      if (s == TriState::Unknown) pending.push_back(hyp);
    }
    if (failed) continue;
    Conclusion c;
    c.theorem = cand.theorem;
    c.hypotheses = cand.hypotheses;
    if (cand.requires_full) c.hypotheses.push_back("J = I");
    if (pending.empty()) {
      c.tag = cand.tag;
      c.statement = cand.statement;
    } else {
      c.tag = tags::kConditional;
      c.statement = std::string(cand.tag) + " (conditional): " + cand.statement;
      c.conditional_on = pending;
    }
    make_labels(c, J);
    r.conclusions.push_back(std::move(c));
  }

  if (r.has_conclusion(tags::kSplitPJ)) r.divisor = divisor_weights(r);
  return r;
}

ConjugatedBorelResult conjugated_borel_detail(const Embedding& emb, const WeylElement& x,
                                              const IndexSet& J) {
  require_valid(emb);
  const auto& g = emb.g();
  const auto& h = emb.h();
  g.check_index_set(J);
  if (x.rank() != g.rank()) throw Error("conjugating element has the wrong rank");

  const auto& hroots = h.positive_roots();
  const auto& lifts = emb.root_lifts();
  const WeylElement xinv = x.inverse(g);

  // The positive system of H picked out by x(R^+): beta or -beta per H root.
  std::set<IntVec> positive;
  for (std::size_t k = 0; k < hroots.size(); ++k) {
    if (lifts[k].empty()) throw Error("B_x ∩ H not Borel: root without a lift");
    std::optional<bool> sign;
    for (const auto& gamma : lifts[k]) {
      auto img = act_on_root(g, xinv, gamma);
      bool pos = std::any_of(img.begin(), img.end(), [](auto c) { return c > 0; });
      if (sign && *sign != pos) throw Error("B_x ∩ H not Borel");
      sign = pos;
    }
    IntVec beta = hroots[k];
    if (!*sign)
      for (auto& c : beta) c = -c;
    positive.insert(beta);
  }

  // Reflect the system back to R_H^+; the reflections compose to u = w_H^-1.
  Word applied;
  for (std::size_t step = 0;; ++step) {
    int neg = -1;
    for (std::size_t j = 0; j < h.rank() && neg < 0; ++j) {
      IntVec e(h.rank(), 0);
      e[j] = -1;
      if (positive.count(e)) neg = static_cast<int>(j);
    }
    if (neg < 0) break;
    if (step > hroots.size()) throw Error("B_x ∩ H not Borel: positive system does not reduce");
    std::set<IntVec> next;
    for (auto beta : positive) {
      std::int64_t pair = 0;
      for (std::size_t k = 0; k < h.rank(); ++k) pair += h.cartan(neg, k) * beta[k];
      beta[neg] -= pair;
      next.insert(std::move(beta));
    }
    positive = std::move(next);
    applied.push_back(neg);
  }
  for (const auto& beta : positive)
    if (std::any_of(beta.begin(), beta.end(), [](auto c) { return c < 0; }))
      throw Error("B_x ∩ H not Borel: not a positive system");

  const WeylElement u = WeylElement::from_word(h, Word(applied.rbegin(), applied.rend()));
  const Weight moved = u.act(restrict(emb, x.act(g.rho_J(J))));
  ConjugatedBorelResult out;
  out.test_weight = Rational(2) * rho_h(emb) - moved;
  out.dominant = is_dominant(out.test_weight);
  out.regular = is_regular_dominant(out.test_weight);
  return out;
}

bool conjugated_borel_check(const Embedding& emb, const WeylElement& x, const IndexSet& J) {
  return conjugated_borel_detail(emb, x, J).dominant;
}

DivisorData divisor_weights(const CriterionReport& report) {
  if (!report.has_conclusion(tags::kSplitPJ))
    throw Error("divisor requested for a report without SPLIT_PJ");
  const auto& in = report.input;
  DivisorData d;
  d.weight = Rational(in.p - 1) * in.embedding.g().rho_J(in.J);
  d.multiplicity = in.p - 1;
  d.J = in.J;
  return d;
}

}  // namespace frobcrit
