#include "frobcrit/charalg.hpp"

#include <algorithm>
#include <set>

#include "frobcrit/error.hpp"

namespace frobcrit {

namespace {

void require_dominant_integral(const Weight& lambda, const char* what) {
  if (!lambda.is_integral())
    throw Error(std::string(what) + ": weight " + to_string(lambda) + " is not integral");
  if (!is_dominant(lambda))
    throw Error(std::string(what) + ": weight " + to_string(lambda) + " is not dominant");
}

IntVec add(IntVec a, const IntVec& b, std::int64_t scale = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  return a;
}

bool nonnegative(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x >= 0; });
}

Rational height(const RootSystem& rs, const Weight& w) {
  Rational h = 0;
  for (const auto& q : rs.to_simple_coords(w)) h += q;
  return h;
}

}  // namespace

IntVec dominant_representative(const RootSystem& rs, IntVec mu) {
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if (mu[i] < 0) {
        auto c = mu[i];
        for (std::size_t k = 0; k < mu.size(); ++k) mu[k] -= c * rs.cartan(k, i);
        moved = true;
        break;
      }
    }
  }
  return mu;
}

std::vector<IntVec> weyl_orbit(const RootSystem& rs, const IntVec& dominant) {
  std::set<IntVec> seen{dominant};
  std::vector<IntVec> out{dominant};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      auto c = out[k][i];
      if (c == 0) continue;
      IntVec next = out[k];
      for (std::size_t j = 0; j < next.size(); ++j) next[j] -= c * rs.cartan(j, i);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

std::uint64_t weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  require_dominant_integral(lambda, "weyl_dimension");
  Rational dim = 1;
  auto shifted = lambda + rs.rho();
  for (const auto& beta : rs.positive_roots()) {
    dim *= rs.cartan_pairing(shifted, beta) / rs.cartan_pairing(rs.rho(), beta);
  }
  if (dim.denominator() != 1) throw Error("Weyl dimension formula gave a non-integer");
  return static_cast<std::uint64_t>(dim.numerator());
}

DominantCharacter freudenthal(const RootSystem& rs, const Weight& lambda) {
  rs.check_rank(lambda, "freudenthal");
  require_dominant_integral(lambda, "freudenthal");
  const IntVec top = lambda.to_int();

  std::vector<IntVec> root_weights;
  for (const auto& beta : rs.positive_roots()) root_weights.push_back(rs.root_to_weight_coords(beta));

  // Dominant weights below lambda are connected to it by subtracting
  // positive roots without leaving the dominant chamber.
  std::set<IntVec> dominant{top};
  std::vector<IntVec> order{top};
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const auto& a : root_weights) {
      IntVec next = add(order[k], a, -1);
      if (nonnegative(next) && dominant.insert(next).second) order.push_back(std::move(next));
    }
  }
  std::vector<std::pair<Rational, IntVec>> by_depth;
  for (auto& mu : order) by_depth.emplace_back(height(rs, Weight(add(top, mu, -1))), mu);
  std::sort(by_depth.begin(), by_depth.end());

  // Integer forms: (nu, beta) = sum_j c_j d_j nu_j for beta = sum_j c_j alpha_j.
  const auto& roots = rs.positive_roots();
  const std::size_t n = rs.rank();
  auto pair_root = [&](const IntVec& nu, const IntVec& beta) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += beta[j] * rs.symmetrizer(j) * nu[j];
    return s;
  };

  DominantCharacter ch;
  ch.highest_weight = lambda;
  for (const auto& [depth, mu] : by_depth) {
    if (depth == 0) {
      ch.multiplicities[mu] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (std::size_t r = 0; r < root_weights.size(); ++r) {
      for (std::int64_t k = 1;; ++k) {
        IntVec nu = add(mu, root_weights[r], k);
        auto it = ch.multiplicities.find(dominant_representative(rs, nu));
        if (it == ch.multiplicities.end()) break;
        sum += pair_root(nu, roots[r]) * it->second;
      }
    }
    // |lambda+rho|^2 - |mu+rho|^2 = (lambda + mu + 2 rho, lambda - mu)
    IntVec gap(n), both(n);
    auto simple = rs.to_simple_coords(Weight(add(top, mu, -1)));
    for (std::size_t j = 0; j < n; ++j) {
      gap[j] = simple[j].numerator();
      both[j] = top[j] + mu[j] + 2;
    }
    const std::int64_t denom = pair_root(both, gap);
    if (denom <= 0) throw Error("freudenthal: non-positive norm difference");
    if ((2 * sum) % denom != 0 || sum < 0) throw Error("freudenthal: non-integral multiplicity");
    if (sum > 0) ch.multiplicities[mu] = 2 * sum / denom;
  }
  ch.dimension = weyl_dimension(rs, lambda);
  return ch;
}

Character full_character(const RootSystem& rs, const DominantCharacter& ch) {
  Character out;
  for (const auto& [mu, m] : ch.multiplicities)
    for (auto& w : weyl_orbit(rs, mu)) out[w] += m;
  return out;
}

Character branch(const Embedding& emb, const Weight& lambda) {
  emb.g().check_rank(lambda, "branch");
  require_dominant_integral(lambda, "branch");
  const auto& h = emb.h();

  Character restricted;
  for (const auto& [mu, m] : full_character(emb.g(), freudenthal(emb.g(), lambda))) {
    auto r = restrict(emb, Weight(mu));
    if (!r.is_integral())
      throw Error("branch: restriction " + to_string(r) + " of weight " + to_string(Weight(mu)) +
                  " is not integral for H");
    restricted[r.to_int()] += m;
  }

  // Straighten each weight under the dot action: reflect nu + rho_H into the
  // dominant chamber, picking up a sign per reflection. Walls contribute 0.
  Character out;
  for (const auto& [nu, m] : restricted) {
    IntVec v = nu;
    for (auto& x : v) x += 1;
    std::int64_t sign = 1;
    bool wall = false;
    for (;;) {
      auto it = std::find_if(v.begin(), v.end(), [](auto x) { return x <= 0; });
      if (it == v.end()) break;
      if (*it == 0) {
        wall = true;
        break;
      }
      const auto i = static_cast<std::size_t>(it - v.begin());
      const auto c = v[i];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * h.cartan(k, i);
      sign = -sign;
    }
    if (wall) continue;
    for (auto& x : v) x -= 1;
    out[v] += sign * m;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::vector<SurjectivityScanRow> fundamental_weight_surjectivity_scan(const Embedding& emb) {
  std::vector<SurjectivityScanRow> rows;
  for (std::size_t i = 0; i < emb.g().rank(); ++i) {
    SurjectivityScanRow row;
    row.index = i;
    auto omega = emb.g().fundamental_weight(i);
    row.restricted = restrict(emb, omega);
    row.branching = branch(emb, omega);
    if (auto it = row.branching.find(row.restricted.to_int()); it != row.branching.end())
      row.top_multiplicity = it->second;
    row.multiplicity_one = row.top_multiplicity == 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace frobcrit
