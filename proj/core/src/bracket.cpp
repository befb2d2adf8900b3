#include "kaestner/bracket.hpp"

#include <array>
#include <sstream>

namespace kaestner {

namespace {

void check_coeff_table(const CoeffTable& t, const std::string& name, std::size_t n,
                       std::uint64_t modulus) {
  if (t.size() != n) {
    throw ValidationError("table " + name + " has " + std::to_string(t.size()) +
                          " rows, expected " + std::to_string(n));
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (t[r].size() != n) {
      throw ValidationError("table " + name + " row " + std::to_string(r + 1) + " has " +
                            std::to_string(t[r].size()) + " entries, expected " +
                            std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (t[r][c] >= modulus) {
        throw ValidationError("table " + name + " entry [" + std::to_string(r + 1) + "][" +
                              std::to_string(c + 1) + "] = " + std::to_string(t[r][c]) +
                              " is not a residue mod " + std::to_string(modulus));
      }
    }
  }
}

std::string cell_name(const std::string& table, std::size_t x, std::size_t y) {
  return table + "[" + std::to_string(x + 1) + "][" + std::to_string(y + 1) + "]";
}

void collect_non_units(const CoeffTable& t, const std::string& name, const ModularRing& ring,
                       std::vector<Violation>& out) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = 0; y < t.size(); ++y) {
      if (!ring.is_unit(t[x][y])) {
        out.push_back({"unit entries",
                       {static_cast<int>(x + 1), static_cast<int>(y + 1)},
                       cell_name(name, x, y) + " = " + std::to_string(t[x][y]) + " is not a unit"});
      }
    }
  }
}

// -A^-1 B - A B^-1
std::uint64_t delta_of(const ModularRing& r, std::uint64_t a, std::uint64_t b) {
  return r.neg(r.add(r.mul(r.inverse(a), b), r.mul(a, r.inverse(b))));
}

// Per-matching sum of one side. Coefficient lookup through `coef(cell,
// oriented)` on raw residues.
template <class Coef>
std::map<Matching, std::uint64_t> expand_side(const ModularRing& ring, std::uint64_t delta,
                                              const std::array<Cell, 3>& cells, R3Side side,
                                              const Coef& coef) {
  std::map<Matching, std::uint64_t> out;
  const auto& states = r3_states(side);
  for (int s = 0; s < 8; ++s) {
    std::uint64_t v = ring.pow(delta, states[s].loops);
    for (int c = 0; c < 3; ++c) v = ring.mul(v, coef(cells[c], ((s >> c) & 1) == 0));
    auto& slot = out[states[s].matching];
    slot = ring.add(slot, v);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

struct RawTables {
  std::size_t n;
  const KaestnerBracketTables& t;
  std::uint64_t operator()(const Cell& c, bool oriented) const {
    const CoeffTable& tab = c.parity ? (oriented ? t.A1 : t.B1) : (oriented ? t.A0 : t.B0);
    return tab[c.x][c.y];
  }
};

std::string describe_difference(const std::map<Matching, std::uint64_t>& l,
                                const std::map<Matching, std::uint64_t>& r) {
  std::map<Matching, std::pair<std::uint64_t, std::uint64_t>> all;
  for (const auto& [m, v] : l) all[m].first = v;
  for (const auto& [m, v] : r) all[m].second = v;
  for (const auto& [m, lr] : all) {
    if (lr.first != lr.second) {
      return "matching " + to_string(m) + ": left " + std::to_string(lr.first) + ", right " +
             std::to_string(lr.second);
    }
  }
  return "";
}

void check_r3(const ParityBiquandle& pb, const KaestnerBracketTables& tables, std::uint64_t delta,
              const std::array<int, 3>& parities, std::vector<Violation>& out) {
  const ModularRing ring(tables.modulus);
  const std::size_t n = pb.size();
  const RawTables coef{n, tables};
  const std::string rule = "R3 (a,b,c)=(" + std::to_string(parities[0]) + "," +
                           std::to_string(parities[1]) + "," + std::to_string(parities[2]) + ")";
  R3Instance inst;
  inst.parities = parities;
  for (std::size_t x = 1; x <= n; ++x) {
    for (std::size_t y = 1; y <= n; ++y) {
      for (std::size_t z = 1; z <= n; ++z) {
        inst.colors = {static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)};
        const auto l = expand_side(ring, delta, r3_cells(pb, inst, R3Side::Left), R3Side::Left, coef);
        const auto r =
            expand_side(ring, delta, r3_cells(pb, inst, R3Side::Right), R3Side::Right, coef);
        if (l != r) {
          out.push_back({rule, {inst.colors[0], inst.colors[1], inst.colors[2]},
                         describe_difference(l, r)});
        }
      }
    }
  }
}

void check_shape(std::size_t n, const KaestnerBracketTables& t) {
  if (t.modulus < 2) throw ValidationError("ring modulus must be at least 2");
  check_coeff_table(t.A0, "A0", n, t.modulus);
  check_coeff_table(t.B0, "B0", n, t.modulus);
  check_coeff_table(t.A1, "A1", n, t.modulus);
  check_coeff_table(t.B1, "B1", n, t.modulus);
}

// Shared body of both verifiers. `odd` selects the Kaestner checks.
BracketReport verify_impl(const ParityBiquandle& pb, const KaestnerBracketTables& t, bool odd) {
  const ModularRing ring(t.modulus);
  BracketReport rep;
  collect_non_units(t.A0, "A0", ring, rep.violations);
  collect_non_units(t.B0, "B0", ring, rep.violations);
  if (odd) {
    collect_non_units(t.A1, "A1", ring, rep.violations);
    collect_non_units(t.B1, "B1", ring, rep.violations);
  }
  if (!rep.violations.empty()) return rep;

  const Derivation d = derive_w_delta(t.A0, t.B0, ring);
  if (!d.ok()) {
    rep.violations.push_back({"w/delta derivation", d.witness, d.failure});
    return rep;
  }
  rep.w = d.w;
  rep.delta = d.delta;
  const std::uint64_t delta = d.delta->value();

  check_r3(pb, t, delta, {0, 0, 0}, rep.violations);
  if (!odd) return rep;

  for (std::size_t x = 0; x < t.A1.size(); ++x) {
    for (std::size_t y = 0; y < t.A1.size(); ++y) {
      const std::uint64_t v = delta_of(ring, t.A1[x][y], t.B1[x][y]);
      if (v != delta) {
        rep.violations.push_back({"odd delta condition",
                                  {static_cast<int>(x + 1), static_cast<int>(y + 1)},
                                  "-A1^-1 B1 - A1 B1^-1 = " + std::to_string(v) + " at " +
                                      cell_name("A1/B1", x, y) + ", expected delta = " +
                                      std::to_string(delta)});
      }
    }
  }
  for (const auto& triple : r3_parity_triples()) {
    if (triple == std::array<int, 3>{0, 0, 0}) continue;
    check_r3(pb, t, delta, triple, rep.violations);
  }
  return rep;
}

std::string summarize(const BracketReport& r) {
  std::string msg;
  const std::size_t shown = std::min<std::size_t>(r.violations.size(), 3);
  for (std::size_t i = 0; i < shown; ++i) {
    if (i) msg += "; ";
    msg += r.violations[i].rule + " (" + r.violations[i].detail + ")";
  }
  if (r.violations.size() > shown) {
    msg += "; and " + std::to_string(r.violations.size() - shown) + " more";
  }
  return msg;
}

}  // namespace

Derivation derive_w_delta(const CoeffTable& A, const CoeffTable& B, const ModularRing& ring) {
  const std::size_t n = A.size();
  if (n == 0) throw ValidationError("coefficient tables are empty");
  check_coeff_table(A, "A", n, ring.modulus());
  check_coeff_table(B, "B", n, ring.modulus());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (const auto* t : {&A, &B}) {
        if (!ring.is_unit((*t)[x][y])) {
          throw ValidationError(cell_name(t == &A ? "A" : "B", x, y) + " = " +
                                std::to_string((*t)[x][y]) + " is not a unit in Z" +
                                std::to_string(ring.modulus()));
        }
      }
    }
  }
  Derivation d;
  // -A^2 B^-1 on the diagonal
  auto w_at = [&](std::size_t x) {
    return ring.neg(ring.mul(ring.mul(A[x][x], A[x][x]), ring.inverse(B[x][x])));
  };
  const std::uint64_t w = w_at(0);
  for (std::size_t x = 1; x < n; ++x) {
    if (w_at(x) != w) {
      d.failure = "w differs: " + std::to_string(w) + " at (1,1), " + std::to_string(w_at(x)) +
                  " at (" + std::to_string(x + 1) + "," + std::to_string(x + 1) + ")";
      d.witness = {static_cast<int>(x + 1), static_cast<int>(x + 1)};
      return d;
    }
  }
  const std::uint64_t delta = delta_of(ring, A[0][0], B[0][0]);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::uint64_t v = delta_of(ring, A[x][y], B[x][y]);
      if (v != delta) {
        d.failure = "delta differs: " + std::to_string(delta) + " at (1,1), " + std::to_string(v) +
                    " at (" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")";
        d.witness = {static_cast<int>(x + 1), static_cast<int>(y + 1)};
        return d;
      }
    }
  }
  d.w = RingElement(ring, w);
  d.delta = RingElement(ring, delta);
  return d;
}

std::pair<TangleExpression, TangleExpression> expand_r3_sides(const ParityBiquandle& pb,
                                                              const KaestnerBracketTables& tables,
                                                              const RingElement& delta,
                                                              const R3Instance& inst) {
  const std::size_t n = pb.size();
  check_shape(n, tables);
  if (delta.modulus() != tables.modulus) throw RingMismatch("delta is not in the bracket's ring");
  bool allowed = false;
  for (const auto& t : r3_parity_triples()) allowed = allowed || t == inst.parities;
  if (!allowed) throw ValidationError("parity triple is not one of the allowed patterns");
  for (int c : inst.colors) {
    if (c < 1 || static_cast<std::size_t>(c) > n) {
      throw ValidationError("color " + std::to_string(c) + " is outside 1.." + std::to_string(n));
    }
  }
  const ModularRing ring(tables.modulus);
  const RawTables coef{n, tables};
  auto convert = [&](const std::map<Matching, std::uint64_t>& m) {
    TangleExpression e;
    for (const auto& [k, v] : m) e.emplace(k, RingElement(ring, v));
    return e;
  };
  return {convert(expand_side(ring, delta.value(), r3_cells(pb, inst, R3Side::Left),
                              R3Side::Left, coef)),
          convert(expand_side(ring, delta.value(), r3_cells(pb, inst, R3Side::Right),
                              R3Side::Right, coef))};
}

BracketReport verify_biquandle_bracket(const Biquandle& structure,
                                       const BiquandleBracketTables& tables) {
  const auto kt = KaestnerBracketTables::parity_blind(tables);
  check_shape(structure.size(), kt);
  return verify_impl(ParityBiquandle::from_biquandle(structure), kt, false);
}

BracketReport verify_kaestner_bracket(const ParityBiquandle& structure,
                                      const KaestnerBracketTables& tables) {
  check_shape(structure.size(), tables);
  return verify_impl(structure, tables, true);
}

KaestnerBracket::KaestnerBracket(ParityBiquandle s, KaestnerBracketTables t, const RingElement& w,
                                 const RingElement& d)
    : structure_(std::move(s)), tables_(std::move(t)), ring_(tables_.modulus), w_(w), delta_(d) {
  const std::size_t n = structure_.size();
  coeff_.resize(8 * n * n);
  for (int p = 0; p < 2; ++p) {
    for (int kind = 0; kind < 2; ++kind) {
      const CoeffTable& tab = p ? (kind ? tables_.B1 : tables_.A1) : (kind ? tables_.B0 : tables_.A0);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          const std::size_t base = ((static_cast<std::size_t>(p) * 2 + kind) * 2) * n * n;
          coeff_[base + x * n + y] = tab[x][y];
          coeff_[base + n * n + x * n + y] = ring_.inverse(tab[x][y]);
        }
      }
    }
  }
}

KaestnerBracket KaestnerBracket::from_tables(const ParityBiquandle& structure,
                                             const KaestnerBracketTables& tables) {
  const BracketReport r = verify_kaestner_bracket(structure, tables);
  if (!r.passed()) throw ValidationError("not a Kaestner bracket: " + summarize(r));
  return KaestnerBracket(structure, tables, *r.w, *r.delta);
}

BiquandleBracket BiquandleBracket::from_tables(const Biquandle& structure,
                                               const BiquandleBracketTables& tables) {
  const BracketReport r = verify_biquandle_bracket(structure, tables);
  if (!r.passed()) throw ValidationError("not a biquandle bracket: " + summarize(r));
  // The parity-blind extension satisfies the mixed families because they
  // coincide with the even family.
  return BiquandleBracket(tables,
                          KaestnerBracket::from_tables(ParityBiquandle::from_biquandle(structure),
                                                       KaestnerBracketTables::parity_blind(tables)));
}

}  // namespace kaestner
