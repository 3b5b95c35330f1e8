#include "hrht/reductions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>

namespace hrht {

auto Mono3SatFormula::occurrences() const -> std::vector<int> {
  std::vector<int> occ(static_cast<std::size_t>(std::max(num_vars, 0)), 0);
  for (const auto& c : clauses)
    for (int x : c)
      if (x >= 0 && x < num_vars) ++occ[static_cast<std::size_t>(x)];
  return occ;
}

void validate(const Mono3SatFormula& f) {
  if (f.num_vars < 0) throw FormulaError("negative variable count");
  for (std::size_t s = 0; s < f.clauses.size(); ++s) {
    const auto& c = f.clauses[s];
    for (int x : c)
      if (x < 0 || x >= f.num_vars)
        throw FormulaError("clause " + std::to_string(s + 1) + ": variable " + std::to_string(x + 1) +
                           " out of range");
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
      throw FormulaError("clause " + std::to_string(s + 1) + ": repeated variable");
  }
}

namespace {

auto split_words(std::string_view line) -> std::vector<std::string_view> {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

auto to_int(std::string_view word, int line) -> int {
  int value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size())
    throw FormulaError("line " + std::to_string(line) + ": expected integer, got '" +
                       std::string(word) + "'");
  return value;
}

}  // namespace

auto parse_sat(std::string_view text) -> Mono3SatFormula {
  Mono3SatFormula f;
  bool header = false;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (!words.empty()) {
      if (!header) {
        if (words.size() != 2 || words[0] != "mono3sat")
          throw FormulaError("line " + std::to_string(number) + ": expected 'mono3sat <variables>'");
        f.num_vars = to_int(words[1], number);
        if (f.num_vars < 0) throw FormulaError("line " + std::to_string(number) + ": negative variable count");
        header = true;
      } else {
        if (words.size() != 3)
          throw FormulaError("line " + std::to_string(number) + ": a clause has exactly three variables");
        std::array<int, 3> c{};
        for (std::size_t i = 0; i < 3; ++i) {
          const int x = to_int(words[i], number);
          if (x < 1 || x > f.num_vars)
            throw FormulaError("line " + std::to_string(number) + ": variable " + std::to_string(x) +
                               " out of range");
          c[i] = x - 1;
        }
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
          throw FormulaError("line " + std::to_string(number) + ": repeated variable in clause");
        f.clauses.push_back(c);
      }
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (!header) throw FormulaError("missing 'mono3sat' header");
  return f;
}

auto serialize_sat(const Mono3SatFormula& f) -> std::string {
  std::ostringstream os;
  os << "mono3sat " << f.num_vars << '\n';
  for (const auto& c : f.clauses) os << c[0] + 1 << ' ' << c[1] + 1 << ' ' << c[2] + 1 << '\n';
  return os.str();
}

auto satisfies(const Mono3SatFormula& f, const Assignment& x, SatMode mode) -> bool {
  for (const auto& c : f.clauses) {
    int t = 0;
    for (int v : c) t += x.at(static_cast<std::size_t>(v)) ? 1 : 0;
    if (mode == SatMode::one_in_three ? t != 1 : (t == 0 || t == 3)) return false;
  }
  return true;
}

auto sat_solutions(const Mono3SatFormula& f, SatMode mode) -> std::vector<Assignment> {
  validate(f);
  if (f.num_vars > 24) throw FormulaError("too many variables for exhaustive search");
  std::vector<Assignment> out;
  const auto n = static_cast<std::size_t>(f.num_vars);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Assignment x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1u;
    if (satisfies(f, x, mode)) out.push_back(std::move(x));
  }
  return out;
}

namespace {

auto label(char role, int a, int b = 0) -> std::string {
  std::string s(1, role);
  s += std::to_string(a);
  if (b > 0) s += "_" + std::to_string(b);
  return s;
}

// Residents and hospitals recorded with their lists before building.
struct Draft {
  std::vector<std::string> resident_names;
  std::vector<VertexOrigin> resident_origin;
  std::vector<std::string> hospital_names;
  std::vector<VertexOrigin> hospital_origin;
  std::vector<std::vector<int>> resident_list;
  std::vector<std::vector<std::vector<int>>> hospital_list;

  int resident(std::string name, VertexOrigin o) {
    resident_names.push_back(std::move(name));
    resident_origin.push_back(std::move(o));
    resident_list.emplace_back();
    return static_cast<int>(resident_names.size()) - 1;
  }
  int hospital(std::string name, VertexOrigin o) {
    hospital_names.push_back(std::move(name));
    hospital_origin.push_back(std::move(o));
    hospital_list.emplace_back();
    return static_cast<int>(hospital_names.size()) - 1;
  }

  Instance build() const {
    InstanceBuilder b;
    for (const auto& n : resident_names) b.add_resident(n);
    for (const auto& n : hospital_names) b.add_hospital(n, 1);
    for (std::size_t r = 0; r < resident_list.size(); ++r) {
      std::vector<Hospital> list;
      for (int h : resident_list[r]) list.emplace_back(h);
      b.set_preferences(Resident{static_cast<int>(r)}, std::move(list));
    }
    for (std::size_t h = 0; h < hospital_list.size(); ++h) {
      std::vector<std::vector<Resident>> groups;
      for (const auto& g : hospital_list[h]) {
        if (g.empty()) continue;
        std::vector<Resident> grp;
        for (int r : g) grp.emplace_back(r);
        groups.push_back(std::move(grp));
      }
      b.set_preferences(Hospital{static_cast<int>(h)}, std::move(groups));
    }
    return std::move(b).build();
  }
};

}  // namespace

auto gen_mincost_instance(const Mono3SatFormula& f) -> GadgetOutput {
  validate(f);
  const auto occ = f.occurrences();
  for (std::size_t p = 0; p < occ.size(); ++p)
    if (occ[p] > 3)
      throw FormulaError("variable " + std::to_string(p + 1) + " occurs " + std::to_string(occ[p]) +
                         " times; at most 3 allowed");
  const int beta = f.num_vars;
  const int alpha = static_cast<int>(f.clauses.size());

  Draft d;
  std::vector<int> a(static_cast<std::size_t>(beta));
  std::vector<int> v(static_cast<std::size_t>(beta));
  std::vector<int> w(static_cast<std::size_t>(alpha));
  for (int p = 0; p < beta; ++p) a[static_cast<std::size_t>(p)] = d.resident(label('a', p + 1), {"a", p, -1, -1});
  std::vector<std::array<int, 3>> b(static_cast<std::size_t>(alpha));
  std::vector<std::array<int, 2>> dd(static_cast<std::size_t>(alpha));
  for (int s = 0; s < alpha; ++s) {
    const auto& c = f.clauses[static_cast<std::size_t>(s)];
    for (std::size_t t = 0; t < 3; ++t)
      b[static_cast<std::size_t>(s)][t] = d.resident(label('b', c[t] + 1, s + 1), {"b", c[t], s, -1});
    for (int t = 0; t < 2; ++t)
      dd[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] =
          d.resident(label('d', t + 1, s + 1), {"d", -1, s, t});
  }
  for (int p = 0; p < beta; ++p) v[static_cast<std::size_t>(p)] = d.hospital(label('v', p + 1), {"v", p, -1, -1});
  for (int s = 0; s < alpha; ++s) w[static_cast<std::size_t>(s)] = d.hospital(label('w', s + 1), {"w", -1, s, -1});

  for (int p = 0; p < beta; ++p) {
    const auto up = static_cast<std::size_t>(p);
    d.resident_list[static_cast<std::size_t>(a[up])] = {v[up]};
    d.hospital_list[static_cast<std::size_t>(v[up])] = {{a[up]}, {}};
  }
  for (int s = 0; s < alpha; ++s) {
    const auto us = static_cast<std::size_t>(s);
    const auto& c = f.clauses[us];
    auto& wl = d.hospital_list[static_cast<std::size_t>(w[us])];
    wl = {{}, {}};
    for (std::size_t t = 0; t < 3; ++t) {
      const int br = b[us][t];
      const int vp = v[static_cast<std::size_t>(c[t])];
      d.resident_list[static_cast<std::size_t>(br)] = {vp, w[us]};
      d.hospital_list[static_cast<std::size_t>(vp)][1].push_back(br);
      wl[0].push_back(br);
    }
    for (int dr : dd[us]) {
      d.resident_list[static_cast<std::size_t>(dr)] = {w[us]};
      wl[1].push_back(dr);
    }
  }

  GadgetOutput out;
  out.document.instance = d.build();
  out.document.costs.assign(static_cast<std::size_t>(beta + alpha), std::nullopt);
  for (int p = 0; p < beta; ++p) out.document.costs[static_cast<std::size_t>(v[static_cast<std::size_t>(p)])] = 0;
  for (int s = 0; s < alpha; ++s) out.document.costs[static_cast<std::size_t>(w[static_cast<std::size_t>(s)])] = 1;
  out.resident_origin = d.resident_origin;
  out.hospital_origin = d.hospital_origin;

  std::vector<std::vector<Hospital>> hm;
  for (int h : v) hm.push_back({Hospital{h}});
  for (int h : w) hm.push_back({Hospital{h}});
  out.hospital_master_list = std::move(hm);

  // All b-residents form one tie: w's first group mixes b's of different variables.
  std::vector<std::vector<Resident>> rm;
  for (int r : a) rm.push_back({Resident{r}});
  std::vector<Resident> all_b;
  for (const auto& bs : b)
    for (int r : bs) all_b.emplace_back(r);
  if (!all_b.empty()) rm.push_back(std::move(all_b));
  for (const auto& ds : dd) rm.push_back({Resident{ds[0]}, Resident{ds[1]}});
  out.resident_master_list = std::move(rm);
  return out;
}

auto gen_cap12_instance(const Mono3SatFormula& f, bool resident_perfect) -> GadgetOutput {
  validate(f);
  const auto occ = f.occurrences();
  for (std::size_t p = 0; p < occ.size(); ++p)
    if (occ[p] != 4)
      throw FormulaError("variable " + std::to_string(p + 1) + " occurs " + std::to_string(occ[p]) +
                         " times; exactly 4 required");
  const int alpha = static_cast<int>(f.clauses.size());
  const auto ua = static_cast<std::size_t>(alpha);

  // occurrence list of each variable in clause order, and the position of
  // (variable, clause) within it
  std::vector<std::vector<int>> occ_list(static_cast<std::size_t>(f.num_vars));
  for (int s = 0; s < alpha; ++s)
    for (int x : f.clauses[static_cast<std::size_t>(s)]) occ_list[static_cast<std::size_t>(x)].push_back(s);
  auto position = [&](int x, int s) {
    const auto& l = occ_list[static_cast<std::size_t>(x)];
    return static_cast<std::size_t>(std::find(l.begin(), l.end(), s) - l.begin());
  };
  auto next_clause = [&](int x, int s) { return occ_list[static_cast<std::size_t>(x)][(position(x, s) + 1) % 4]; };
  auto prev_clause = [&](int x, int s) { return occ_list[static_cast<std::size_t>(x)][(position(x, s) + 3) % 4]; };

  Draft d;
  std::vector<std::array<int, 3>> a(ua), b(ua), dd(ua), v(ua), fh(ua);
  std::vector<int> w(ua);
  for (int s = 0; s < alpha; ++s) {
    const auto us = static_cast<std::size_t>(s);
    const auto& c = f.clauses[us];
    for (std::size_t t = 0; t < 3; ++t) a[us][t] = d.resident(label('a', c[t] + 1, s + 1), {"a", c[t], s, -1});
    for (std::size_t t = 0; t < 3; ++t) b[us][t] = d.resident(label('b', c[t] + 1, s + 1), {"b", c[t], s, -1});
    for (std::size_t t = 0; t < 3; ++t)
      dd[us][t] = d.resident(label('d', static_cast<int>(t) + 1, s + 1), {"d", -1, s, static_cast<int>(t)});
  }
  for (int s = 0; s < alpha; ++s) {
    const auto us = static_cast<std::size_t>(s);
    const auto& c = f.clauses[us];
    for (std::size_t t = 0; t < 3; ++t) v[us][t] = d.hospital(label('v', c[t] + 1, s + 1), {"v", c[t], s, -1});
  }
  for (int s = 0; s < alpha; ++s) w[static_cast<std::size_t>(s)] = d.hospital(label('w', s + 1), {"w", -1, s, -1});
  if (resident_perfect)
    for (int s = 0; s < alpha; ++s)
      for (std::size_t t = 0; t < 3; ++t)
        fh[static_cast<std::size_t>(s)][t] =
            d.hospital(label('f', static_cast<int>(t) + 1, s + 1), {"f", -1, s, static_cast<int>(t)});

  auto slot_of = [&](int x, int s) {
    const auto& c = f.clauses[static_cast<std::size_t>(s)];
    return static_cast<std::size_t>(std::find(c.begin(), c.end(), x) - c.begin());
  };

  for (int s = 0; s < alpha; ++s) {
    const auto us = static_cast<std::size_t>(s);
    const auto& c = f.clauses[us];
    auto& wl = d.hospital_list[static_cast<std::size_t>(w[us])];
    wl = {{}, {}};
    for (std::size_t t = 0; t < 3; ++t) {
      const int x = c[t];
      const int nxt = next_clause(x, s);
      const int prv = prev_clause(x, s);
      d.resident_list[static_cast<std::size_t>(a[us][t])] = {v[us][t]};
      d.resident_list[static_cast<std::size_t>(b[us][t])] = {
          v[us][t], v[static_cast<std::size_t>(nxt)][slot_of(x, nxt)], w[us]};
      d.hospital_list[static_cast<std::size_t>(v[us][t])] = {
          {a[us][t]}, {b[us][t], b[static_cast<std::size_t>(prv)][slot_of(x, prv)]}};
      wl[0].push_back(b[us][t]);
    }
    for (std::size_t t = 0; t < 3; ++t) {
      const int dr = dd[us][t];
      wl[1].push_back(dr);
      d.resident_list[static_cast<std::size_t>(dr)] = {w[us]};
      if (resident_perfect) {
        d.resident_list[static_cast<std::size_t>(dr)].push_back(fh[us][t]);
        d.hospital_list[static_cast<std::size_t>(fh[us][t])] = {{dr}};
      }
    }
  }

  GadgetOutput out;
  out.document.instance = d.build();
  out.document.costs.assign(d.hospital_names.size(), std::nullopt);
  out.resident_origin = d.resident_origin;
  out.hospital_origin = d.hospital_origin;

  std::vector<Hospital> axis;
  for (const auto& vs : v)
    for (int h : vs) axis.emplace_back(h);
  for (int h : w) axis.emplace_back(h);
  if (resident_perfect)
    for (const auto& fs : fh)
      for (int h : fs) axis.emplace_back(h);
  out.single_peaked_axis = std::move(axis);

  std::vector<std::vector<Resident>> rm;
  for (const auto& as : a)
    for (int r : as) rm.push_back({Resident{r}});
  std::vector<Resident> all_b;
  for (const auto& bs : b)
    for (int r : bs) all_b.emplace_back(r);
  if (!all_b.empty()) rm.push_back(std::move(all_b));
  for (const auto& ds : dd) rm.push_back({Resident{ds[0]}, Resident{ds[1]}, Resident{ds[2]}});
  out.resident_master_list = std::move(rm);
  return out;
}

namespace {

// Restriction of a tied master ordering to `keep`, groups as sorted index sets.
template <class Id, class Keep>
auto restrict_master(const std::vector<std::vector<Id>>& master, Keep keep) -> std::vector<std::set<int>> {
  std::vector<std::set<int>> out;
  for (const auto& g : master) {
    std::set<int> s;
    for (Id x : g)
      if (keep(x)) s.insert(x.value());
    if (!s.empty()) out.push_back(std::move(s));
  }
  return out;
}

template <class Id>
auto covers_exactly_once(const std::vector<std::vector<Id>>& master, int n) -> bool {
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const auto& g : master) {
    if (g.empty()) return false;
    for (Id x : g) {
      if (x.value() < 0 || x.value() >= n) return false;
      ++seen[x.index()];
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

}  // namespace

auto verify_certificates(const GadgetOutput& g) -> CertificateReport {
  if (!g.hospital_master_list && !g.resident_master_list && !g.single_peaked_axis)
    throw std::invalid_argument("gadget output carries no certificate");
  const Instance& inst = g.instance();
  CertificateReport report;

  if (g.hospital_master_list) {
    bool ok = covers_exactly_once(*g.hospital_master_list, inst.num_hospitals());
    if (!ok) report.violations.push_back("hospital master list is not an ordering of all hospitals");
    for (Resident r : inst.residents()) {
      const auto& list = inst.preferences(r);
      auto restricted = restrict_master(*g.hospital_master_list,
                                        [&](Hospital h) { return inst.acceptable(r, h); });
      std::vector<std::set<int>> actual;
      for (Hospital h : list) actual.push_back({h.value()});
      if (restricted != actual) {
        ok = false;
        report.violations.push_back("list of " + inst.name(r) + " is not derived from the hospital master list");
      }
    }
    report.hospital_master_list = ok;
  }

  if (g.resident_master_list) {
    bool ok = covers_exactly_once(*g.resident_master_list, inst.num_residents());
    if (!ok) report.violations.push_back("resident master list is not an ordering of all residents");
    for (Hospital h : inst.hospitals()) {
      auto restricted = restrict_master(*g.resident_master_list,
                                        [&](Resident r) { return inst.acceptable(r, h); });
      std::vector<std::set<int>> actual;
      for (const auto& grp : inst.preferences(h)) {
        std::set<int> s;
        for (Resident r : grp) s.insert(r.value());
        actual.push_back(std::move(s));
      }
      if (restricted != actual) {
        ok = false;
        report.violations.push_back("list of " + inst.name(h) + " is not derived from the resident master list");
      }
    }
    report.resident_master_list = ok;
  }

  if (g.single_peaked_axis) {
    const auto& axis = *g.single_peaked_axis;
    std::vector<int> where(static_cast<std::size_t>(inst.num_hospitals()), -1);
    bool ok = axis.size() == static_cast<std::size_t>(inst.num_hospitals());
    for (std::size_t i = 0; ok && i < axis.size(); ++i) {
      const int h = axis[i].value();
      if (h < 0 || h >= inst.num_hospitals() || where[static_cast<std::size_t>(h)] >= 0) ok = false;
      else where[static_cast<std::size_t>(h)] = static_cast<int>(i);
    }
    if (!ok) report.violations.push_back("axis is not a strict ordering of all hospitals");
    for (Resident r : inst.residents()) {
      if (!ok) break;
      // Ranks read along the axis must fall strictly to the peak and rise strictly after it.
      std::vector<std::pair<int, int>> seq;
      for (Hospital h : inst.preferences(r)) seq.emplace_back(where[h.index()], *inst.rank(r, h));
      std::sort(seq.begin(), seq.end());
      std::size_t i = 1;
      while (i < seq.size() && seq[i].second < seq[i - 1].second) ++i;
      while (i < seq.size() && seq[i].second > seq[i - 1].second) ++i;
      if (i < seq.size()) {
        report.single_peaked = false;
        report.violations.push_back("list of " + inst.name(r) + " is not single-peaked on the axis");
      }
    }
    if (!report.single_peaked) report.single_peaked = ok;
  }
  return report;
}

auto decode_one_in_three(const Mono3SatFormula& f, const GadgetOutput& g, const Matching& m)
    -> std::optional<Assignment> {
  const Instance& inst = g.instance();
  std::vector<std::optional<bool>> value(static_cast<std::size_t>(f.num_vars));
  for (Resident r : inst.residents()) {
    const auto& o = g.resident_origin.at(r.index());
    if (o.role != "b") continue;
    const auto h = m.partner(r);
    const bool at_clause = h && g.hospital_origin.at(h->index()).role == "w";
    auto& slot = value[static_cast<std::size_t>(o.variable)];
    if (slot && *slot != at_clause) return std::nullopt;
    slot = at_clause;
  }
  Assignment x(static_cast<std::size_t>(f.num_vars));
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = value[i].value_or(false);
  return x;
}

auto decode_nae(const Mono3SatFormula& f, const GadgetOutput& g, const QuotaVector& quotas)
    -> std::optional<Assignment> {
  const Instance& inst = g.instance();
  std::vector<std::optional<bool>> value(static_cast<std::size_t>(f.num_vars));
  for (Hospital h : inst.hospitals()) {
    const auto& o = g.hospital_origin.at(h.index());
    if (o.role != "v") continue;
    const bool doubled = quotas[h] == 2;
    auto& slot = value[static_cast<std::size_t>(o.variable)];
    if (slot && *slot != doubled) return std::nullopt;
    slot = doubled;
  }
  Assignment x(static_cast<std::size_t>(f.num_vars));
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = value[i].value_or(false);
  return x;
}

}  // namespace hrht
