#include "kaestner/gauss.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kaestner {

namespace {

struct LabelInfo {
  int count = 0;
  int overs = 0;
  int unders = 0;
  bool sign_mismatch = false;
  Sign first_sign = Sign::Positive;
};

std::string join_labels(const std::vector<int>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(labels[i]);
  }
  return out;
}

void validate(const std::vector<GaussCode::Component>& components) {
  std::map<int, LabelInfo> info;
  for (const auto& comp : components) {
    for (const auto& t : comp) {
      if (t.label <= 0) {
        throw ValidationError("crossing labels must be positive, got " + std::to_string(t.label));
      }
      auto& li = info[t.label];
      if (li.count == 0) {
        li.first_sign = t.sign;
      } else if (li.first_sign != t.sign) {
        li.sign_mismatch = true;
      }
      ++li.count;
      (t.strand == Strand::Over ? li.overs : li.unders)++;
    }
  }
  std::vector<int> unpaired, repeated, same_strand, mismatched;
  for (const auto& [label, li] : info) {
    if (li.count == 1) {
      unpaired.push_back(label);
    } else if (li.count > 2) {
      repeated.push_back(label);
    } else if (li.overs != 1) {
      same_strand.push_back(label);
    } else if (li.sign_mismatch) {
      mismatched.push_back(label);
    }
  }
  std::vector<std::string> problems;
  if (!unpaired.empty()) problems.push_back("unpaired labels (occur once): " + join_labels(unpaired));
  if (!repeated.empty()) problems.push_back("labels occurring more than twice: " + join_labels(repeated));
  if (!same_strand.empty()) {
    problems.push_back("labels without exactly one over and one under occurrence: " +
                       join_labels(same_strand));
  }
  if (!mismatched.empty()) problems.push_back("labels with mismatched signs: " + join_labels(mismatched));
  if (!problems.empty()) {
    std::string msg = "invalid Gauss code: ";
    for (std::size_t i = 0; i < problems.size(); ++i) {
      if (i) msg += "; ";
      msg += problems[i];
    }
    throw ValidationError(msg);
  }
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace

GaussCode::GaussCode() : components_(1) {}

GaussCode::GaussCode(std::vector<Component> components) : components_(std::move(components)) {
  if (components_.empty()) throw ValidationError("a Gauss code needs at least one component");
  validate(components_);
}

std::size_t GaussCode::crossing_count() const noexcept {
  std::size_t tokens = 0;
  for (const auto& c : components_) tokens += c.size();
  return tokens / 2;
}

std::vector<int> GaussCode::labels() const {
  std::vector<int> out;
  for (const auto& c : components_) {
    for (const auto& t : c) {
      if (t.strand == Strand::Over) out.push_back(t.label);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool GaussCode::has_label(int label) const {
  for (const auto& c : components_) {
    for (const auto& t : c) {
      if (t.label == label) return true;
    }
  }
  return false;
}

std::array<TokenRef, 2> GaussCode::occurrences(int label) const {
  std::array<TokenRef, 2> out{};
  int found = 0;
  for (std::size_t ci = 0; ci < components_.size(); ++ci) {
    for (std::size_t i = 0; i < components_[ci].size(); ++i) {
      if (components_[ci][i].label == label) out[found++] = TokenRef{ci, i};
    }
  }
  if (found != 2) throw ValidationError("unknown crossing label " + std::to_string(label));
  return out;
}

Sign GaussCode::sign_of(int label) const { return at(occurrences(label)[0]).sign; }

int GaussCode::max_label() const {
  int m = 0;
  for (const auto& c : components_) {
    for (const auto& t : c) m = std::max(m, t.label);
  }
  return m;
}

GaussCode GaussCode::canonical() const {
  std::map<int, int> relabel;
  auto comps = components_;
  for (auto& c : comps) {
    for (auto& t : c) {
      auto [it, inserted] = relabel.try_emplace(t.label, static_cast<int>(relabel.size()) + 1);
      t.label = it->second;
    }
  }
  return GaussCode(std::move(comps));
}

GaussCode parse_gauss(std::string_view text) {
  std::vector<GaussCode::Component> comps(1);
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && is_space(text[i])) ++i;
  };

  // After a separator a token must follow, except that ";" may close an
  // empty component.
  bool expect_token = false;
  skip_ws();
  while (i < n) {
    const char c = text[i];
    if (c == ';') {
      if (expect_token) throw ParseError("expected token after ','", i);
      comps.emplace_back();
      ++i;
      skip_ws();
      continue;
    }
    if (c != 'O' && c != 'U') {
      throw ParseError(std::string("expected 'O' or 'U', found '") + c + "'", i);
    }
    if (!comps.back().empty() && !expect_token) {
      throw ParseError("expected ',' or ';' between tokens", i);
    }
    Token tok;
    tok.strand = c == 'O' ? Strand::Over : Strand::Under;
    ++i;
    if (i >= n || text[i] < '1' || text[i] > '9') {
      throw ParseError("expected crossing label (positive integer without leading zero)", i);
    }
    long long label = 0;
    while (i < n && text[i] >= '0' && text[i] <= '9') {
      label = label * 10 + (text[i] - '0');
      if (label > 1'000'000'000) throw ParseError("crossing label too large", i);
      ++i;
    }
    tok.label = static_cast<int>(label);
    if (i >= n || (text[i] != '+' && text[i] != '-')) {
      throw ParseError("expected crossing sign '+' or '-'", i);
    }
    tok.sign = text[i] == '+' ? Sign::Positive : Sign::Negative;
    ++i;
    comps.back().push_back(tok);
    expect_token = false;
    skip_ws();
    if (i < n && text[i] == ',') {
      expect_token = true;
      ++i;
      skip_ws();
      if (i >= n) throw ParseError("expected token after ','", i);
    }
  }
  if (expect_token) throw ParseError("expected token after ','", i);
  return GaussCode(std::move(comps));
}

std::string format_gauss(const GaussCode& code) {
  std::ostringstream os;
  const auto& comps = code.components();
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    if (ci) os << ';';
    for (std::size_t i = 0; i < comps[ci].size(); ++i) {
      const auto& t = comps[ci][i];
      if (i) os << ',';
      os << (t.strand == Strand::Over ? 'O' : 'U') << t.label
         << (t.sign == Sign::Positive ? '+' : '-');
    }
  }
  return os.str();
}

std::string serialize_gauss(const GaussCode& code) { return format_gauss(code.canonical()); }

int parity(const GaussCode& code, int label) {
  const auto occ = code.occurrences(label);
  if (occ[0].component != occ[1].component) return 0;
  const std::size_t between = occ[1].index - occ[0].index - 1;
  return static_cast<int>(between % 2);
}

std::size_t Diagram::crossing_index(int label) const {
  auto it = std::lower_bound(crossings_.begin(), crossings_.end(), label,
                             [](const DiagramCrossing& c, int l) { return c.label < l; });
  if (it == crossings_.end() || it->label != label) {
    throw ValidationError("unknown crossing label " + std::to_string(label));
  }
  return static_cast<std::size_t>(it - crossings_.begin());
}

Diagram build_diagram(const GaussCode& code) {
  Diagram d;
  const auto labels = code.labels();
  d.crossings_.resize(labels.size());
  for (std::size_t k = 0; k < labels.size(); ++k) {
    d.crossings_[k].label = labels[k];
    d.crossings_[k].sign = code.sign_of(labels[k]);
    d.crossings_[k].parity = parity(code, labels[k]);
    if (d.crossings_[k].sign == Sign::Positive) {
      ++d.positive_;
    } else {
      ++d.negative_;
    }
  }
  d.components_ = code.component_count();

  const auto& comps = code.components();
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& comp = comps[ci];
    const std::size_t m = comp.size();
    if (m == 0) {
      Semiarc s;
      s.component = ci;
      s.closed = true;
      d.semiarcs_.push_back(s);
      ++d.closed_loops_;
      continue;
    }
    const std::size_t base = d.semiarcs_.size();
    for (std::size_t k = 0; k < m; ++k) {
      const Token& here = comp[k];
      const Token& next = comp[(k + 1) % m];
      Semiarc s;
      s.component = ci;
      s.from = EndRef{d.crossing_index(here.label),
                      here.strand == Strand::Over ? CrossingEnd::OverOut : CrossingEnd::UnderOut};
      s.to = EndRef{d.crossing_index(next.label),
                    next.strand == Strand::Over ? CrossingEnd::OverIn : CrossingEnd::UnderIn};
      d.semiarcs_.push_back(s);
    }
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t id = base + k;
      const Semiarc& s = d.semiarcs_[id];
      d.crossings_[s.from.crossing].semiarc[static_cast<std::size_t>(s.from.end)] = id;
      d.crossings_[s.to.crossing].semiarc[static_cast<std::size_t>(s.to.end)] = id;
    }
  }
  return d;
}

}  // namespace kaestner
