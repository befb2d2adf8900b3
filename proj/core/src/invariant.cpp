#include "kaestner/invariant.hpp"

#include <array>
#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>
#include <utility>

namespace kaestner {

namespace {

constexpr int kFree = -1;

class ColoringSearch {
 public:
  ColoringSearch(const Diagram& d, const ParityBiquandle& pb)
      : d_(d), pb_(pb), n_(static_cast<int>(pb.size())), color_(d.semiarcs().size(), kFree),
        incident_(d.semiarcs().size()) {
    const auto& cs = d.crossings();
    for (std::size_t c = 0; c < cs.size(); ++c) {
      for (std::size_t s : cs[c].semiarc) incident_[s].push_back(c);
    }
    // Inverse of the sideways map (x, y) -> (x under y, y over x), per parity.
    const auto n = static_cast<std::uint32_t>(n_);
    for (int p = 0; p < 2; ++p) {
      const OpPair& ops = pb.ops(p);
      sideways_inv_[p].resize(static_cast<std::size_t>(n) * n);
      for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t y = 0; y < n; ++y) {
          sideways_inv_[p][ops.under(x, y) * n + ops.over(y, x)] = {static_cast<int>(x), static_cast<int>(y)};
        }
      }
    }
  }

  // Calls `leaf` with the 0-based colors of every complete coloring.
  void run(const std::function<void(const std::vector<int>&)>& leaf) { descend(leaf); }

 private:
  bool assign(std::size_t s, int v, std::vector<std::size_t>& trail) {
    color_[s] = v;
    trail.push_back(s);
    std::size_t head = trail.size() - 1;
    while (head < trail.size()) {
      const std::size_t changed = trail[head++];
      for (std::size_t c : incident_[changed]) {
        if (!settle(c, trail)) return false;
      }
    }
    return true;
  }

  // Forces the colors of crossing c when two known ends determine it.
  bool settle(std::size_t c, std::vector<std::size_t>& trail) {
    const DiagramCrossing& dc = d_.crossings()[c];
    const OpPair& ops = pb_.ops(dc.parity);
    const auto& e = dc.semiarc;
    auto col = [&](CrossingEnd end) { return color_[e[static_cast<std::size_t>(end)]]; };
    const int ui = col(CrossingEnd::UnderIn), uo = col(CrossingEnd::UnderOut);
    const int oi = col(CrossingEnd::OverIn), oo = col(CrossingEnd::OverOut);
    int x = kFree, y = kFree;
    if (dc.sign == Sign::Positive) {
      if (ui != kFree && oo != kFree) {
        x = ui;
        y = oo;
      } else if (ui != kFree && oi != kFree) {
        x = ui;
        y = static_cast<int>(ops.alpha_inv(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(oi)));
      } else if (uo != kFree && oo != kFree) {
        y = oo;
        x = static_cast<int>(ops.beta_inv(static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(uo)));
      } else if (uo != kFree && oi != kFree) {
        std::tie(x, y) = sideways_inv_[dc.parity][static_cast<std::size_t>(uo * n_ + oi)];
      }
    } else {
      if (uo != kFree && oi != kFree) {
        x = uo;
        y = oi;
      } else if (ui != kFree && oi != kFree) {
        y = oi;
        x = static_cast<int>(ops.beta_inv(static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(ui)));
      } else if (uo != kFree && oo != kFree) {
        x = uo;
        y = static_cast<int>(ops.alpha_inv(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(oo)));
      } else if (ui != kFree && oo != kFree) {
        std::tie(x, y) = sideways_inv_[dc.parity][static_cast<std::size_t>(ui * n_ + oo)];
      }
    }
    if (x == kFree) return true;
    const auto ux = static_cast<std::uint32_t>(x), uy = static_cast<std::uint32_t>(y);
    const int under = static_cast<int>(ops.under(ux, uy));
    const int over = static_cast<int>(ops.over(uy, ux));
    std::array<int, 4> want{};
    if (dc.sign == Sign::Positive) {
      want = {x, under, over, y};
    } else {
      want = {under, x, y, over};
    }
    for (std::size_t k = 0; k < 4; ++k) {
      int& slot = color_[e[k]];
      if (slot == kFree) {
        slot = want[k];
        trail.push_back(e[k]);
      } else if (slot != want[k]) {
        return false;
      }
    }
    return true;
  }

  // Next semiarc to branch on: the free semiarc completing the most
  // crossings that already know one strand, so the choice propagates;
  // else any free semiarc.
  std::size_t pick() const {
    std::size_t best = color_.size();
    int best_score = 0;
    for (std::size_t s = 0; s < color_.size(); ++s) {
      if (color_[s] != kFree) continue;
      int score = 0;
      for (std::size_t c : incident_[s]) {
        const auto& e = d_.crossings()[c].semiarc;
        const bool under_known = color_[e[0]] != kFree || color_[e[1]] != kFree;
        const bool over_known = color_[e[2]] != kFree || color_[e[3]] != kFree;
        const bool s_under = e[0] == s || e[1] == s;
        if ((s_under && over_known) || (!s_under && under_known)) ++score;
      }
      if (best == color_.size() || score > best_score) {
        best = s;
        best_score = score;
      }
    }
    return best;
  }

  void descend(const std::function<void(const std::vector<int>&)>& leaf) {
    const std::size_t s = pick();
    if (s == color_.size()) {
      leaf(color_);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      std::vector<std::size_t> trail;
      if (assign(s, v, trail)) descend(leaf);
      for (std::size_t t : trail) color_[t] = kFree;
    }
  }

  const Diagram& d_;
  const ParityBiquandle& pb_;
  int n_;
  std::vector<int> color_;
  std::vector<std::vector<std::size_t>> incident_;
  std::array<std::vector<std::pair<int, int>>, 2> sideways_inv_;
};

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void join(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

std::uint32_t node(std::size_t crossing, CrossingEnd end) {
  return static_cast<std::uint32_t>(4 * crossing + static_cast<std::size_t>(end));
}

// Union-find with only the semiarc edges joined.
UnionFind semiarc_skeleton(const Diagram& d) {
  UnionFind uf(4 * d.crossings().size());
  for (const auto& s : d.semiarcs()) {
    if (!s.closed) uf.join(node(s.from.crossing, s.from.end), node(s.to.crossing, s.to.end));
  }
  return uf;
}

std::size_t loops_with(UnionFind uf, const Diagram& d, std::uint64_t disoriented_mask) {
  const std::size_t n = d.crossings().size();
  for (std::size_t c = 0; c < n; ++c) {
    if (((disoriented_mask >> c) & 1) == 0) {
      uf.join(node(c, CrossingEnd::UnderIn), node(c, CrossingEnd::OverOut));
      uf.join(node(c, CrossingEnd::OverIn), node(c, CrossingEnd::UnderOut));
    } else {
      uf.join(node(c, CrossingEnd::UnderIn), node(c, CrossingEnd::OverIn));
      uf.join(node(c, CrossingEnd::UnderOut), node(c, CrossingEnd::OverOut));
    }
  }
  std::size_t roots = 0;
  for (std::uint32_t v = 0; v < 4 * n; ++v) roots += uf.find(v) == v;
  return roots + d.closed_loops();
}

void check_state_sum_size(const Diagram& d) {
  if (d.crossings().size() > kMaxStateSumCrossings) {
    throw ValidationError("state sum over " + std::to_string(d.crossings().size()) +
                          " crossings exceeds the limit of " +
                          std::to_string(kMaxStateSumCrossings));
  }
}

// Loop count of every state, indexed by disoriented mask.
std::vector<std::uint16_t> all_state_loops(const Diagram& d) {
  check_state_sum_size(d);
  const UnionFind base = semiarc_skeleton(d);
  const std::uint64_t states = std::uint64_t{1} << d.crossings().size();
  std::vector<std::uint16_t> out(states);
  for (std::uint64_t s = 0; s < states; ++s) {
    out[s] = static_cast<std::uint16_t>(loops_with(base, d, s));
  }
  return out;
}

// Residues of the oriented and disoriented coefficient of every crossing.
struct CrossingCoefficients {
  std::vector<std::uint64_t> oriented, disoriented;
};

CrossingCoefficients coefficients(const Diagram& d, const Coloring& col, const KaestnerBracket& kb) {
  if (!is_coloring(d, kb.structure(), col)) {
    throw ValidationError("coloring does not satisfy the crossing relations of the bracket's structure");
  }
  CrossingCoefficients cc;
  for (const auto& c : d.crossings()) {
    auto at = [&](CrossingEnd e) {
      return static_cast<std::uint32_t>(col.colors[c.semiarc[static_cast<std::size_t>(e)]] - 1);
    };
    const std::uint32_t x = c.sign == Sign::Positive ? at(CrossingEnd::UnderIn) : at(CrossingEnd::UnderOut);
    const std::uint32_t y = c.sign == Sign::Positive ? at(CrossingEnd::OverOut) : at(CrossingEnd::OverIn);
    cc.oriented.push_back(kb.coefficient(c.parity, true, c.sign, x, y));
    cc.disoriented.push_back(kb.coefficient(c.parity, false, c.sign, x, y));
  }
  return cc;
}

std::uint64_t state_sum(const Diagram& d, const std::vector<std::uint16_t>& loops,
                        const std::vector<std::uint64_t>& delta_pow, const CrossingCoefficients& cc,
                        const ModularRing& ring) {
  const std::size_t n = d.crossings().size();
  // Coefficient products of each half of the crossings are tabulated, so a
  // state costs one multiplication.
  const std::size_t lo = n / 2;
  const std::size_t hi = n - lo;
  std::vector<std::uint64_t> lo_prod(std::size_t{1} << lo), hi_prod(std::size_t{1} << hi);
  auto fill = [&](std::vector<std::uint64_t>& out, std::size_t offset, std::size_t count) {
    for (std::size_t m = 0; m < out.size(); ++m) {
      std::uint64_t v = 1 % ring.modulus();
      for (std::size_t k = 0; k < count; ++k) {
        v = ring.mul(v, ((m >> k) & 1) ? cc.disoriented[offset + k] : cc.oriented[offset + k]);
      }
      out[m] = v;
    }
  };
  fill(lo_prod, 0, lo);
  fill(hi_prod, lo, hi);
  std::uint64_t total = 0;
  for (std::uint64_t s = 0; s < loops.size(); ++s) {
    const std::uint64_t p = ring.mul(lo_prod[s & ((std::uint64_t{1} << lo) - 1)], hi_prod[s >> lo]);
    total = ring.add(total, ring.mul(delta_pow[loops[s]], p));
  }
  return total;
}

std::vector<std::uint64_t> delta_powers(const ModularRing& ring, std::uint64_t delta, std::size_t max) {
  std::vector<std::uint64_t> out(max + 1);
  out[0] = 1 % ring.modulus();
  for (std::size_t i = 1; i <= max; ++i) out[i] = ring.mul(out[i - 1], delta);
  return out;
}

std::uint64_t writhe_factor(const Diagram& d, const KaestnerBracket& kb) {
  const auto e = static_cast<std::int64_t>(d.negative_count()) - static_cast<std::int64_t>(d.positive_count());
  return kb.ring().pow(kb.w().value(), e);
}

}  // namespace

std::vector<Coloring> enumerate_colorings(const Diagram& diagram, const ParityBiquandle& pb) {
  std::vector<Coloring> out;
  ColoringSearch search(diagram, pb);
  search.run([&](const std::vector<int>& c) {
    Coloring col;
    col.colors.reserve(c.size());
    for (int v : c) col.colors.push_back(v + 1);
    out.push_back(std::move(col));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_colorings(const Diagram& diagram, const ParityBiquandle& pb) {
  std::uint64_t count = 0;
  ColoringSearch search(diagram, pb);
  search.run([&](const std::vector<int>&) { ++count; });
  return count;
}

bool is_coloring(const Diagram& diagram, const ParityBiquandle& pb, const Coloring& c) {
  if (c.colors.size() != diagram.semiarcs().size()) return false;
  for (int v : c.colors) {
    if (v < 1 || static_cast<std::size_t>(v) > pb.size()) return false;
  }
  for (const auto& dc : diagram.crossings()) {
    auto at = [&](CrossingEnd e) { return c.colors[dc.semiarc[static_cast<std::size_t>(e)]]; };
    const int x = dc.sign == Sign::Positive ? at(CrossingEnd::UnderIn) : at(CrossingEnd::UnderOut);
    const int y = dc.sign == Sign::Positive ? at(CrossingEnd::OverOut) : at(CrossingEnd::OverIn);
    const CrossingColors want = crossing_from_index(pb, dc.parity, dc.sign, x, y);
    if (want.under_in != at(CrossingEnd::UnderIn) || want.under_out != at(CrossingEnd::UnderOut) ||
        want.over_in != at(CrossingEnd::OverIn) || want.over_out != at(CrossingEnd::OverOut)) {
      return false;
    }
  }
  return true;
}

std::size_t state_loops(const Diagram& diagram, const SmoothingState& state) {
  const std::size_t n = diagram.crossings().size();
  if (state.oriented.size() != n) {
    throw ValidationError("smoothing state covers " + std::to_string(state.oriented.size()) +
                          " crossings, diagram has " + std::to_string(n));
  }
  UnionFind uf = semiarc_skeleton(diagram);
  for (std::size_t c = 0; c < n; ++c) {
    if (state.oriented[c]) {
      uf.join(node(c, CrossingEnd::UnderIn), node(c, CrossingEnd::OverOut));
      uf.join(node(c, CrossingEnd::OverIn), node(c, CrossingEnd::UnderOut));
    } else {
      uf.join(node(c, CrossingEnd::UnderIn), node(c, CrossingEnd::OverIn));
      uf.join(node(c, CrossingEnd::UnderOut), node(c, CrossingEnd::OverOut));
    }
  }
  std::size_t roots = 0;
  for (std::uint32_t v = 0; v < 4 * n; ++v) roots += uf.find(v) == v;
  return roots + diagram.closed_loops();
}

std::vector<RingElement> state_contributions(const Diagram& diagram, const Coloring& coloring,
                                             const KaestnerBracket& kb) {
  const ModularRing& ring = kb.ring();
  const auto cc = coefficients(diagram, coloring, kb);
  const auto loops = all_state_loops(diagram);
  std::vector<RingElement> out;
  out.reserve(loops.size());
  for (std::uint64_t s = 0; s < loops.size(); ++s) {
    std::uint64_t v = ring.pow(kb.delta().value(), loops[s]);
    for (std::size_t c = 0; c < diagram.crossings().size(); ++c) {
      v = ring.mul(v, ((s >> c) & 1) ? cc.disoriented[c] : cc.oriented[c]);
    }
    out.emplace_back(ring, v);
  }
  return out;
}

RingElement beta(const Diagram& diagram, const Coloring& coloring, const KaestnerBracket& kb) {
  const ModularRing& ring = kb.ring();
  const auto loops = all_state_loops(diagram);
  const auto dp = delta_powers(ring, kb.delta().value(), 2 * diagram.crossings().size() + diagram.closed_loops() + 1);
  const auto cc = coefficients(diagram, coloring, kb);
  return RingElement(ring, ring.mul(writhe_factor(diagram, kb), state_sum(diagram, loops, dp, cc, ring)));
}

void InvariantPolynomial::add(const RingElement& exponent, std::uint64_t multiplicity) {
  if (exponent.modulus() != modulus_) throw RingMismatch("exponent ring differs from polynomial ring");
  if (multiplicity) terms_[exponent.value()] += multiplicity;
}

std::uint64_t InvariantPolynomial::total() const noexcept {
  std::uint64_t t = 0;
  for (const auto& [e, m] : terms_) t += m;
  return t;
}

std::string InvariantPolynomial::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, m] : terms_) {
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += std::to_string(m);
    } else {
      if (m != 1) out += std::to_string(m);
      out += "u^" + std::to_string(e);
    }
  }
  return out;
}

InvariantPolynomial phi(const Diagram& diagram, const KaestnerBracket& kb) {
  const ModularRing& ring = kb.ring();
  const auto loops = all_state_loops(diagram);
  const auto dp = delta_powers(ring, kb.delta().value(), 2 * diagram.crossings().size() + diagram.closed_loops() + 1);
  const std::uint64_t wf = writhe_factor(diagram, kb);
  InvariantPolynomial poly(ring.modulus());
  ColoringSearch search(diagram, kb.structure());
  Coloring col;
  search.run([&](const std::vector<int>& c) {
    col.colors.assign(c.begin(), c.end());
    for (int& v : col.colors) ++v;
    const auto cc = coefficients(diagram, col, kb);
    poly.add(RingElement(ring, ring.mul(wf, state_sum(diagram, loops, dp, cc, ring))));
  });
  return poly;
}

InvariantPolynomial phi(const GaussCode& code, const KaestnerBracket& kb) {
  return phi(build_diagram(code), kb);
}

InvariantPolynomial phi(const GaussCode& code, const BiquandleBracket& bb) {
  const Diagram d = build_diagram(code);
  // Parity-blind tables make every crossing read the even coefficients.
  return phi(d, bb.as_kaestner());
}

Classification classify(const std::vector<NamedCode>& codes, const KaestnerBracket& kb) {
  Classification out;
  for (const auto& entry : codes) {
    try {
      const auto poly = phi(parse_gauss(entry.code), kb);
      out.classes[poly.render()].push_back(entry.name);
    } catch (const Error& e) {
      out.errors.emplace_back(entry.name, e.what());
    }
  }
  return out;
}

}  // namespace kaestner
