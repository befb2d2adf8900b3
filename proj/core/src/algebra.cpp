#include "kaestner/algebra.hpp"

#include <array>
#include <map>

namespace kaestner {

namespace {

// 0-based flat copy of a validated table.
struct Flat {
  std::size_t n = 0;
  std::vector<std::uint32_t> v;
  std::uint32_t operator()(std::uint32_t x, std::uint32_t y) const { return v[x * n + y]; }
};

std::size_t check_table(const Table& t, const char* name, std::size_t expected_n = 0) {
  const std::size_t n = t.size();
  if (n == 0) throw ValidationError(std::string("table ") + name + " is empty");
  if (expected_n && n != expected_n) {
    throw ValidationError(std::string("table ") + name + " has " + std::to_string(n) +
                          " rows, expected " + std::to_string(expected_n));
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (t[r].size() != n) {
      throw ValidationError(std::string("table ") + name + " row " + std::to_string(r + 1) +
                            " has " + std::to_string(t[r].size()) + " entries, expected " +
                            std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (t[r][c] < 1 || static_cast<std::size_t>(t[r][c]) > n) {
        throw ValidationError(std::string("table ") + name + " entry [" + std::to_string(r + 1) +
                              "][" + std::to_string(c + 1) + "] = " + std::to_string(t[r][c]) +
                              " is outside 1.." + std::to_string(n));
      }
    }
  }
  return n;
}

Flat flatten(const Table& t) {
  Flat f;
  f.n = t.size();
  f.v.reserve(f.n * f.n);
  for (const auto& row : t) {
    for (int e : row) f.v.push_back(static_cast<std::uint32_t>(e - 1));
  }
  return f;
}

int one(std::uint32_t e) { return static_cast<int>(e) + 1; }

// Every collision of the column maps x -> x op y, for each fixed y.
void check_columns(const Flat& t, const std::string& rule, std::vector<Violation>& out) {
  const std::size_t n = t.n;
  for (std::uint32_t y = 0; y < n; ++y) {
    std::vector<int> first(n, -1);
    for (std::uint32_t x = 0; x < n; ++x) {
      const auto v = t(x, y);
      if (first[v] < 0) {
        first[v] = static_cast<int>(x);
      } else {
        out.push_back({rule,
                       {one(y), first[v] + 1, one(x)},
                       "elements " + std::to_string(first[v] + 1) + " and " + std::to_string(one(x)) +
                           " share image " + std::to_string(one(v)) + " for y = " +
                           std::to_string(one(y))});
      }
    }
  }
}

// S(x, y) = (y ⊴ x, x ⊵ y).
void check_sideways(const Flat& u, const Flat& o, const std::string& rule,
                    std::vector<Violation>& out) {
  const std::size_t n = u.n;
  std::vector<std::int64_t> first(n * n, -1);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::size_t img = o(y, x) * n + u(x, y);
      const auto here = static_cast<std::int64_t>(x * n + y);
      if (first[img] < 0) {
        first[img] = here;
      } else {
        const auto px = static_cast<std::uint32_t>(first[img] / static_cast<std::int64_t>(n));
        const auto py = static_cast<std::uint32_t>(first[img] % static_cast<std::int64_t>(n));
        out.push_back({rule,
                       {one(px), one(py), one(x), one(y)},
                       "pairs (" + std::to_string(one(px)) + "," + std::to_string(one(py)) + ") and (" +
                           std::to_string(one(x)) + "," + std::to_string(one(y)) +
                           ") have the same image"});
      }
    }
  }
}

void check_law(std::size_t n, const std::string& rule, std::vector<Violation>& out,
               const auto& lhs, const auto& rhs) {
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      for (std::uint32_t z = 0; z < n; ++z) {
        const auto l = lhs(x, y, z);
        const auto r = rhs(x, y, z);
        if (l != r) {
          out.push_back({rule,
                         {one(x), one(y), one(z)},
                         "left side " + std::to_string(one(l)) + ", right side " +
                             std::to_string(one(r))});
        }
      }
    }
  }
}

void verify_even(const Flat& u, const Flat& o, const std::string& prefix,
                 std::vector<Violation>& out) {
  const std::size_t n = u.n;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (u(x, x) != o(x, x)) {
      out.push_back({prefix + "idempotence",
                     {one(x)},
                     "x ⊵ x = " + std::to_string(one(u(x, x))) + " but x ⊴ x = " +
                         std::to_string(one(o(x, x)))});
    }
  }
  check_columns(o, prefix + "alpha bijective", out);
  check_columns(u, prefix + "beta bijective", out);
  check_sideways(u, o, prefix + "sideways bijective", out);
  // (x⊵y)⊵(z⊵y) = (x⊵z)⊵(y⊴z)
  check_law(
      n, prefix + "exchange law 1", out,
      [&](auto x, auto y, auto z) { return u(u(x, y), u(z, y)); },
      [&](auto x, auto y, auto z) { return u(u(x, z), o(y, z)); });
  // (x⊵y)⊴(z⊵y) = (x⊴z)⊵(y⊴z)
  check_law(
      n, prefix + "exchange law 2", out,
      [&](auto x, auto y, auto z) { return o(u(x, y), u(z, y)); },
      [&](auto x, auto y, auto z) { return u(o(x, z), o(y, z)); });
  // (x⊴y)⊴(z⊴y) = (x⊴z)⊴(y⊵z)
  check_law(
      n, prefix + "exchange law 3", out,
      [&](auto x, auto y, auto z) { return o(o(x, y), o(z, y)); },
      [&](auto x, auto y, auto z) { return o(o(x, z), u(y, z)); });
}

std::string summarize(const Report& r) {
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

void check_element(const ParityBiquandle& pb, int e, const char* what) {
  if (e < 1 || static_cast<std::size_t>(e) > pb.size()) {
    throw ValidationError(std::string(what) + " = " + std::to_string(e) + " is outside 1.." +
                          std::to_string(pb.size()));
  }
}

void check_parity(int parity) {
  if (parity != 0 && parity != 1) {
    throw ValidationError("parity must be 0 or 1, got " + std::to_string(parity));
  }
}

}  // namespace

Report verify_biquandle(const BiquandleTables& tables) {
  const std::size_t n = check_table(tables.utr, "utr");
  check_table(tables.otr, "otr", n);
  Report r;
  verify_even(flatten(tables.utr), flatten(tables.otr), "", r.violations);
  return r;
}

Report verify_parity_biquandle(const ParityTables& tables) {
  const std::size_t n = check_table(tables.utr0, "utr0");
  check_table(tables.otr0, "otr0", n);
  check_table(tables.utr1, "utr1", n);
  check_table(tables.otr1, "otr1", n);
  const std::array<Flat, 2> u{flatten(tables.utr0), flatten(tables.utr1)};
  const std::array<Flat, 2> o{flatten(tables.otr0), flatten(tables.otr1)};

  Report r;
  verify_even(u[0], o[0], "even ", r.violations);
  check_columns(o[1], "odd alpha bijective", r.violations);
  check_columns(u[1], "odd beta bijective", r.violations);
  check_sideways(u[1], o[1], "odd sideways bijective", r.violations);

  constexpr std::array<std::array<int, 3>, 3> triples{{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};
  for (const auto& [a, b, c] : triples) {
    const std::string tag = " (a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + ")";
    // (z⊴ᵃy)⊴ᵇ(x⊴ᶜy) = (z⊴ᵇx)⊴ᵃ(y⊵ᶜx)
    check_law(
        n, "mixed law 1" + tag, r.violations,
        [&](auto x, auto y, auto z) { return o[b](o[a](z, y), o[c](x, y)); },
        [&](auto x, auto y, auto z) { return o[a](o[b](z, x), u[c](y, x)); });
    // (x⊴ᵃy)⊵ᵇ(z⊴ᶜy) = (x⊵ᵇz)⊴ᵃ(y⊵ᶜz)
    check_law(
        n, "mixed law 2" + tag, r.violations,
        [&](auto x, auto y, auto z) { return u[b](o[a](x, y), o[c](z, y)); },
        [&](auto x, auto y, auto z) { return o[a](u[b](x, z), u[c](y, z)); });
    // (y⊵ᵃx)⊵ᵇ(z⊴ᶜx) = (y⊵ᵇz)⊵ᵃ(x⊵ᶜz)
    check_law(
        n, "mixed law 3" + tag, r.violations,
        [&](auto x, auto y, auto z) { return u[b](u[a](y, x), o[c](z, x)); },
        [&](auto x, auto y, auto z) { return u[a](u[b](y, z), u[c](x, z)); });
  }
  return r;
}

OpPair::OpPair(const Table& utr, const Table& otr) {
  n_ = check_table(utr, "utr");
  check_table(otr, "otr", n_);
  const Flat u = flatten(utr);
  const Flat o = flatten(otr);
  utr_ = u.v;
  otr_ = o.v;
  const auto none = static_cast<std::uint32_t>(n_);
  alpha_inv_.assign(n_ * n_, none);
  beta_inv_.assign(n_ * n_, none);
  for (std::uint32_t x = 0; x < n_; ++x) {
    for (std::uint32_t y = 0; y < n_; ++y) {
      alpha_inv_[x * n_ + o(y, x)] = y;
      beta_inv_[y * n_ + u(x, y)] = x;
    }
  }
  for (std::size_t i = 0; i < n_ * n_; ++i) {
    if (alpha_inv_[i] == none || beta_inv_[i] == none) {
      throw ValidationError("operation columns are not bijective");
    }
  }
}

Biquandle Biquandle::from_tables(const BiquandleTables& tables) {
  const Report r = verify_biquandle(tables);
  if (!r.passed()) throw ValidationError("not a biquandle: " + summarize(r));
  OpPair ops(tables.utr, tables.otr);
  return Biquandle(tables, std::move(ops));
}

ParityBiquandle ParityBiquandle::from_tables(const ParityTables& tables) {
  const Report r = verify_parity_biquandle(tables);
  if (!r.passed()) throw ValidationError("not a parity biquandle: " + summarize(r));
  OpPair even(tables.utr0, tables.otr0);
  OpPair odd(tables.utr1, tables.otr1);
  return ParityBiquandle(tables, std::move(even), std::move(odd));
}

ParityBiquandle ParityBiquandle::from_biquandle(const Biquandle& b) {
  return ParityBiquandle(ParityTables::parity_blind(b.tables()), b.ops(), b.ops());
}

CrossingColors solve_crossing(const ParityBiquandle& pb, int parity, Sign sign, int under_in,
                              int over_in) {
  check_parity(parity);
  check_element(pb, under_in, "under_in");
  check_element(pb, over_in, "over_in");
  const OpPair& ops = pb.ops(parity);
  const auto ui = static_cast<std::uint32_t>(under_in - 1);
  const auto oi = static_cast<std::uint32_t>(over_in - 1);
  std::uint32_t x, y;
  if (sign == Sign::Positive) {
    x = ui;
    y = ops.alpha_inv(x, oi);
  } else {
    y = oi;
    x = ops.beta_inv(y, ui);
  }
  return crossing_from_index(pb, parity, sign, one(x), one(y));
}

CrossingColors crossing_from_index(const ParityBiquandle& pb, int parity, Sign sign, int x, int y) {
  check_parity(parity);
  check_element(pb, x, "x");
  check_element(pb, y, "y");
  const OpPair& ops = pb.ops(parity);
  const auto x0 = static_cast<std::uint32_t>(x - 1);
  const auto y0 = static_cast<std::uint32_t>(y - 1);
  CrossingColors c;
  c.x = x;
  c.y = y;
  if (sign == Sign::Positive) {
    c.under_in = x;
    c.under_out = one(ops.under(x0, y0));
    c.over_in = one(ops.over(y0, x0));
    c.over_out = y;
  } else {
    c.under_in = one(ops.under(x0, y0));
    c.under_out = x;
    c.over_in = y;
    c.over_out = one(ops.over(y0, x0));
  }
  return c;
}

Biquandle alexander_biquandle(std::uint64_t modulus, std::int64_t t, std::int64_t s) {
  const ModularRing ring(modulus);
  const RingElement te = ring.element(t);
  const RingElement se = ring.element(s);
  if (!te.is_unit()) {
    throw ValidationError("t = " + std::to_string(te.value()) + " is not a unit in Z" +
                          std::to_string(modulus));
  }
  if (!se.is_unit()) {
    throw ValidationError("s = " + std::to_string(se.value()) + " is not a unit in Z" +
                          std::to_string(modulus));
  }
  const RingElement diff = se - te;
  BiquandleTables tb;
  tb.utr.assign(modulus, std::vector<int>(modulus));
  tb.otr.assign(modulus, std::vector<int>(modulus));
  for (std::uint64_t x = 0; x < modulus; ++x) {
    for (std::uint64_t y = 0; y < modulus; ++y) {
      const RingElement xe(ring, x);
      const RingElement ye(ring, y);
      tb.utr[x][y] = static_cast<int>((te * xe + diff * ye).value()) + 1;
      tb.otr[x][y] = static_cast<int>((se * xe).value()) + 1;
    }
  }
  return Biquandle::from_tables(tb);
}

}  // namespace kaestner
