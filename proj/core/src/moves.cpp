#include "kaestner/moves.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace kaestner {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ValidationError("Rng::below needs a positive bound");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

namespace {

using Components = std::vector<GaussCode::Component>;

std::size_t insert_index(const GaussCode::Component& c, std::size_t semiarc) {
  return c.empty() ? 0 : semiarc + 1;
}

void check_gap(const GaussCode& code, Gap gap) {
  if (gap.component >= code.component_count()) {
    throw MoveError("gap component " + std::to_string(gap.component) + " out of range");
  }
  const auto k = code.components()[gap.component].size();
  if (gap.semiarc >= std::max<std::size_t>(k, 1)) {
    throw MoveError("gap semiarc " + std::to_string(gap.semiarc) + " out of range");
  }
}

GaussCode remove_labels(const GaussCode& code, std::initializer_list<int> labels) {
  Components comps = code.components();
  for (auto& c : comps) {
    std::erase_if(c, [&](const Token& t) {
      return std::find(labels.begin(), labels.end(), t.label) != labels.end();
    });
  }
  return GaussCode(std::move(comps));
}

// Adjacent position pairs. On a two-token component the pairs at 0 and 1
// hold the same tokens but are different semiarcs.
std::vector<PairRef> adjacent_pairs(const GaussCode& code) {
  std::vector<PairRef> out;
  const auto& comps = code.components();
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const auto k = comps[ci].size();
    if (k < 2) continue;
    for (std::size_t i = 0; i < k; ++i) out.push_back({ci, i});
  }
  return out;
}

std::pair<const Token&, const Token&> tokens(const GaussCode& code, PairRef p) {
  const auto& c = code.components()[p.component];
  return {c[p.index], c[(p.index + 1) % c.size()]};
}

int sgn(Sign s) { return static_cast<int>(s); }

std::pair<int, int> ordered(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

}  // namespace

std::vector<Gap> gaps(const GaussCode& code) {
  std::vector<Gap> out;
  const auto& comps = code.components();
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const auto k = std::max<std::size_t>(comps[ci].size(), 1);
    for (std::size_t g = 0; g < k; ++g) out.push_back({ci, g});
  }
  return out;
}

GaussCode r1_insert(const GaussCode& code, Gap gap, bool over_first, Sign sign) {
  check_gap(code, gap);
  const int a = code.max_label() + 1;
  Components comps = code.components();
  auto& c = comps[gap.component];
  const Token o{a, Strand::Over, sign};
  const Token u{a, Strand::Under, sign};
  const auto at = c.begin() + static_cast<std::ptrdiff_t>(insert_index(c, gap.semiarc));
  if (over_first) {
    c.insert(at, {o, u});
  } else {
    c.insert(at, {u, o});
  }
  return GaussCode(std::move(comps));
}

std::vector<int> r1_delete_candidates(const GaussCode& code) {
  std::set<int> out;
  for (const auto& c : code.components()) {
    const auto k = c.size();
    for (std::size_t i = 0; i < k && k >= 2; ++i) {
      if (c[i].label == c[(i + 1) % k].label) out.insert(c[i].label);
    }
  }
  return {out.begin(), out.end()};
}

GaussCode r1_delete(const GaussCode& code, int label) {
  if (!code.has_label(label)) throw MoveError("unknown crossing label " + std::to_string(label));
  const auto cands = r1_delete_candidates(code);
  if (!std::binary_search(cands.begin(), cands.end(), label)) {
    throw MoveError("instances of crossing " + std::to_string(label) + " are not adjacent");
  }
  return remove_labels(code, {label});
}

GaussCode r2_insert(const GaussCode& code, Gap over_gap, Gap under_gap, bool antiparallel,
                    Sign sign) {
  check_gap(code, over_gap);
  check_gap(code, under_gap);
  const int a = code.max_label() + 1;
  const int b = a + 1;
  const std::vector<Token> over{{a, Strand::Over, sign}, {b, Strand::Over, flip(sign)}};
  const std::vector<Token> under =
      antiparallel ? std::vector<Token>{{b, Strand::Under, flip(sign)}, {a, Strand::Under, sign}}
                   : std::vector<Token>{{a, Strand::Under, sign}, {b, Strand::Under, flip(sign)}};
  Components comps = code.components();
  auto put = [&](std::size_t ci, std::size_t pos, const std::vector<Token>& toks) {
    auto& c = comps[ci];
    c.insert(c.begin() + static_cast<std::ptrdiff_t>(pos), toks.begin(), toks.end());
  };
  const auto p_over = insert_index(comps[over_gap.component], over_gap.semiarc);
  const auto p_under = insert_index(comps[under_gap.component], under_gap.semiarc);
  if (over_gap.component == under_gap.component) {
    // Insert at the later index first so the earlier index stays valid. On a
    // shared gap the over pair ends up first.
    if (p_over <= p_under) {
      put(under_gap.component, p_under, under);
      put(over_gap.component, p_over, over);
    } else {
      put(over_gap.component, p_over, over);
      put(under_gap.component, p_under, under);
    }
  } else {
    put(over_gap.component, p_over, over);
    put(under_gap.component, p_under, under);
  }
  return GaussCode(std::move(comps));
}

std::vector<std::pair<int, int>> r2_delete_candidates(const GaussCode& code) {
  std::set<std::pair<int, int>> overs;
  std::set<std::pair<int, int>> unders;
  for (const auto& p : adjacent_pairs(code)) {
    const auto [s, t] = tokens(code, p);
    if (s.label == t.label || s.strand != t.strand) continue;
    const auto key = ordered(s.label, t.label);
    if (s.strand == Strand::Over) {
      if (s.sign != t.sign) overs.insert(key);
    } else {
      unders.insert(key);
    }
  }
  std::vector<std::pair<int, int>> out;
  std::set_intersection(overs.begin(), overs.end(), unders.begin(), unders.end(),
                        std::back_inserter(out));
  return out;
}

GaussCode r2_delete(const GaussCode& code, int label1, int label2) {
  for (int l : {label1, label2}) {
    if (!code.has_label(l)) throw MoveError("unknown crossing label " + std::to_string(l));
  }
  const auto cands = r2_delete_candidates(code);
  if (!std::binary_search(cands.begin(), cands.end(), ordered(label1, label2))) {
    throw MoveError("crossings " + std::to_string(label1) + " and " + std::to_string(label2) +
                    " do not form a removable bigon");
  }
  return remove_labels(code, {label1, label2});
}

std::vector<R3Site> r3_candidates(const GaussCode& code) {
  const auto pairs = adjacent_pairs(code);
  std::vector<PairRef> tops, middles, bottoms;
  for (const auto& p : pairs) {
    const auto [s, t] = tokens(code, p);
    if (s.label == t.label) continue;
    if (s.strand == Strand::Over && t.strand == Strand::Over) {
      tops.push_back(p);
    } else if (s.strand == Strand::Under && t.strand == Strand::Under) {
      bottoms.push_back(p);
    } else {
      middles.push_back(p);
    }
  }
  std::vector<R3Site> out;
  for (const auto& tp : tops) {
    const auto [t0, t1] = tokens(code, tp);
    for (const auto& mp : middles) {
      const auto [m0, m1] = tokens(code, mp);
      const Token& m_over = m0.strand == Strand::Over ? m0 : m1;
      const Token& m_under = m0.strand == Strand::Over ? m1 : m0;
      if (m_under.label != t0.label && m_under.label != t1.label) continue;
      const int tm = m_under.label;
      const int tb = tm == t0.label ? t1.label : t0.label;
      const int mb = m_over.label;
      if (mb == tm || mb == tb) continue;
      for (const auto& bp : bottoms) {
        const auto [b0, b1] = tokens(code, bp);
        if (ordered(b0.label, b1.label) != ordered(mb, tb)) continue;
        // Reference orders: top (tb, tm), middle (mb, tm), bottom (mb, tb).
        const int f_top = t0.label != tb;
        const int f_mid = m0.label != mb;
        const int f_bot = b0.label != mb;
        auto parity_sign = [](int flips) { return flips % 2 == 0 ? 1 : -1; };
        const int v_tm = sgn(code.sign_of(tm)) * parity_sign(f_top + f_mid);
        const int v_tb = sgn(code.sign_of(tb)) * parity_sign(f_top + f_bot);
        const int v_mb = sgn(code.sign_of(mb)) * parity_sign(f_mid + f_bot);
        if (v_tm == v_tb && v_tb == v_mb) out.push_back({tp, mp, bp, tm, tb, mb});
      }
    }
  }
  return out;
}

GaussCode r3_apply(const GaussCode& code, const R3Site& site) {
  Components comps = code.components();
  for (const auto& p : {site.top, site.middle, site.bottom}) {
    auto& c = comps[p.component];
    std::swap(c[p.index], c[(p.index + 1) % c.size()]);
  }
  return GaussCode(std::move(comps));
}

GaussCode r3_apply(const GaussCode& code, int label1, int label2, int label3) {
  std::array<int, 3> want{label1, label2, label3};
  std::sort(want.begin(), want.end());
  for (const auto& site : r3_candidates(code)) {
    std::array<int, 3> have{site.top_middle, site.top_bottom, site.middle_bottom};
    std::sort(have.begin(), have.end());
    if (have == want) return r3_apply(code, site);
  }
  throw MoveError("crossings " + std::to_string(label1) + ", " + std::to_string(label2) + ", " +
                  std::to_string(label3) + " do not form a triangle admitting a third move");
}

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Insert:
      return "r1-insert";
    case MoveKind::R1Delete:
      return "r1-delete";
    case MoveKind::R2Insert:
      return "r2-insert";
    case MoveKind::R2Delete:
      return "r2-delete";
    case MoveKind::R3:
      return "r3";
  }
  return "unknown";
}

MoveRecord random_move(const GaussCode& code, Rng& rng, const RandomMoveOptions& options) {
  const auto n = code.crossing_count();
  const bool cap_ok1 = !options.max_crossings || n + 1 <= *options.max_crossings;
  const bool cap_ok2 = !options.max_crossings || n + 2 <= *options.max_crossings;
  const auto r1d = r1_delete_candidates(code);
  const auto r2d = r2_delete_candidates(code);
  const auto r3 = r3_candidates(code);

  std::vector<MoveKind> kinds;
  if (cap_ok1) kinds.push_back(MoveKind::R1Insert);
  if (!r1d.empty()) kinds.push_back(MoveKind::R1Delete);
  if (cap_ok2) kinds.push_back(MoveKind::R2Insert);
  if (!r2d.empty()) kinds.push_back(MoveKind::R2Delete);
  if (!r3.empty()) kinds.push_back(MoveKind::R3);
  if (kinds.empty()) return {MoveKind::R1Insert, {}, code};

  const MoveKind kind = kinds[rng.below(kinds.size())];
  const int fresh = code.max_label() + 1;
  switch (kind) {
    case MoveKind::R1Insert: {
      const auto g = gaps(code);
      const Gap gap = g[rng.below(g.size())];
      const bool over_first = rng.coin();
      const Sign sign = rng.coin() ? Sign::Positive : Sign::Negative;
      return {kind, {fresh}, r1_insert(code, gap, over_first, sign)};
    }
    case MoveKind::R1Delete: {
      const int label = r1d[rng.below(r1d.size())];
      return {kind, {label}, r1_delete(code, label)};
    }
    case MoveKind::R2Insert: {
      const auto g = gaps(code);
      const Gap over_gap = g[rng.below(g.size())];
      const Gap under_gap = g[rng.below(g.size())];
      const bool antiparallel = rng.coin();
      const Sign sign = rng.coin() ? Sign::Positive : Sign::Negative;
      return {kind, {fresh, fresh + 1}, r2_insert(code, over_gap, under_gap, antiparallel, sign)};
    }
    case MoveKind::R2Delete: {
      const auto [a, b] = r2d[rng.below(r2d.size())];
      return {kind, {a, b}, r2_delete(code, a, b)};
    }
    case MoveKind::R3: {
      const auto& site = r3[rng.below(r3.size())];
      return {kind, {site.top_middle, site.top_bottom, site.middle_bottom}, r3_apply(code, site)};
    }
  }
  return {kind, {}, code};
}

GaussCode random_moves(const GaussCode& code, std::uint64_t seed, std::size_t count,
                       const RandomMoveOptions& options) {
  Rng rng(seed);
  GaussCode current = code;
  for (std::size_t i = 0; i < count; ++i) current = random_move(current, rng, options).result;
  return current;
}

GaussCode random_code(Rng& rng, std::size_t crossings) {
  std::vector<Token> toks;
  toks.reserve(2 * crossings);
  for (std::size_t i = 0; i < crossings; ++i) {
    const int label = static_cast<int>(i) + 1;
    const Sign sign = rng.coin() ? Sign::Positive : Sign::Negative;
    toks.push_back({label, Strand::Over, sign});
    toks.push_back({label, Strand::Under, sign});
  }
  // Fisher-Yates with the platform-independent bounded draw.
  for (std::size_t i = toks.size(); i > 1; --i) {
    std::swap(toks[i - 1], toks[rng.below(i)]);
  }
  return GaussCode(std::vector<GaussCode::Component>{std::move(toks)}).canonical();
}

}  // namespace kaestner
