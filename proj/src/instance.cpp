#include "hrht/instance.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace hrht {

auto total_increase(const QuotaVector& base, const QuotaVector& augmented) -> long long {
  if (base.size() != augmented.size()) throw std::invalid_argument("quota vectors differ in size");
  long long total = 0;
  for (std::size_t i = 0; i < base.size(); ++i)
    total += std::max(0, augmented.values()[i] - base.values()[i]);
  return total;
}

auto max_increase(const QuotaVector& base, const QuotaVector& augmented) -> int {
  if (base.size() != augmented.size()) throw std::invalid_argument("quota vectors differ in size");
  int best = 0;
  for (std::size_t i = 0; i < base.size(); ++i)
    best = std::max(best, augmented.values()[i] - base.values()[i]);
  return best;
}

auto to_string(ErrorKind kind) -> std::string_view {
  switch (kind) {
    case ErrorKind::syntax: return "syntax error";
    case ErrorKind::unknown_id: return "unknown id";
    case ErrorKind::duplicate_id: return "duplicate id";
    case ErrorKind::duplicate_entry: return "duplicate entry";
    case ErrorKind::non_mutual_edge: return "non-mutual edge";
    case ErrorKind::resident_tie: return "resident-side tie";
    case ErrorKind::negative_quota: return "negative quota";
    case ErrorKind::not_an_edge: return "not an edge";
  }
  return "error";
}

InstanceError::InstanceError(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

namespace {

auto positioned(ErrorKind kind, int line, int column, const std::string& detail) -> std::string {
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": " << to_string(kind);
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

auto lookup(const std::vector<std::pair<int, int>>& table, int key) -> std::optional<int> {
  auto it = std::lower_bound(table.begin(), table.end(), std::pair{key, -1});
  if (it == table.end() || it->first != key) return std::nullopt;
  return it->second;
}

}  // namespace

ParseError::ParseError(ErrorKind kind, int line, int column, const std::string& detail)
    : InstanceError(kind, positioned(kind, line, column, detail)), line_(line), column_(column) {}

// ---------------------------------------------------------------------------
// Instance

auto Instance::find_resident(std::string_view name) const -> std::optional<Resident> {
  auto it = std::find(resident_names_.begin(), resident_names_.end(), name);
  if (it == resident_names_.end()) return std::nullopt;
  return Resident{static_cast<int>(it - resident_names_.begin())};
}

auto Instance::find_hospital(std::string_view name) const -> std::optional<Hospital> {
  auto it = std::find(hospital_names_.begin(), hospital_names_.end(), name);
  if (it == hospital_names_.end()) return std::nullopt;
  return Hospital{static_cast<int>(it - hospital_names_.begin())};
}

auto Instance::rank(Resident r, Hospital h) const -> std::optional<int> {
  return lookup(resident_rank_.at(r.index()), h.value());
}

auto Instance::rank(Hospital h, Resident r) const -> std::optional<int> {
  return lookup(hospital_rank_.at(h.index()), r.value());
}

auto Instance::degree(Hospital h) const -> int {
  return static_cast<int>(hospital_rank_.at(h.index()).size());
}

auto Instance::edges() const -> std::vector<Edge> {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (Resident r : residents())
    for (Hospital h : preferences(r)) out.push_back({r, h});
  return out;
}

void Instance::index_ranks() {
  resident_rank_.assign(resident_prefs_.size(), {});
  hospital_rank_.assign(hospital_prefs_.size(), {});
  num_edges_ = 0;
  for (std::size_t r = 0; r < resident_prefs_.size(); ++r) {
    auto& table = resident_rank_[r];
    const auto& list = resident_prefs_[r];
    for (std::size_t i = 0; i < list.size(); ++i)
      table.emplace_back(list[i].value(), static_cast<int>(i));
    std::sort(table.begin(), table.end());
    num_edges_ += static_cast<int>(list.size());
  }
  for (std::size_t h = 0; h < hospital_prefs_.size(); ++h) {
    auto& table = hospital_rank_[h];
    const auto& groups = hospital_prefs_[h];
    for (std::size_t g = 0; g < groups.size(); ++g)
      for (Resident r : groups[g]) table.emplace_back(r.value(), static_cast<int>(g));
    std::sort(table.begin(), table.end());
  }
}

auto Instance::with_quotas(QuotaVector quotas) const -> Instance {
  if (quotas.size() != static_cast<std::size_t>(num_hospitals()))
    throw std::invalid_argument("quota vector has wrong size");
  for (int q : quotas.values())
    if (q < 0) throw InstanceError(ErrorKind::negative_quota, "negative quota");
  Instance copy = *this;
  copy.quotas_ = std::move(quotas);
  return copy;
}

auto Instance::restricted(const std::function<bool(Resident, Hospital)>& keep,
                          QuotaVector quotas) const -> Instance {
  Instance out = with_quotas(std::move(quotas));
  for (Resident r : residents()) {
    auto& list = out.resident_prefs_[r.index()];
    std::erase_if(list, [&](Hospital h) { return !keep(r, h); });
  }
  for (Hospital h : hospitals()) {
    auto& groups = out.hospital_prefs_[h.index()];
    for (auto& g : groups) std::erase_if(g, [&](Resident r) { return !keep(r, h); });
    std::erase_if(groups, [](const auto& g) { return g.empty(); });
  }
  out.index_ranks();
  return out;
}

auto operator==(const Instance& a, const Instance& b) -> bool {
  return a.resident_names_ == b.resident_names_ && a.hospital_names_ == b.hospital_names_ &&
         a.quotas_ == b.quotas_ && a.resident_prefs_ == b.resident_prefs_ &&
         a.hospital_prefs_ == b.hospital_prefs_;
}

auto valid_identifier(std::string_view token) -> bool {
  if (token.empty()) return false;
  return std::none_of(token.begin(), token.end(), [](char c) {
    return c == '#' || c == '(' || c == ')' || c == '[' || c == ']' || c == ':' || c == ' ' ||
           c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  });
}

auto max_tie_length(const Instance& inst) -> int {
  int best = 1;
  for (Hospital h : inst.hospitals())
    for (const auto& g : inst.preferences(h)) best = std::max(best, static_cast<int>(g.size()));
  return best;
}

// ---------------------------------------------------------------------------
// InstanceBuilder

auto InstanceBuilder::add_resident(std::string name) -> Resident {
  inst_.resident_names_.push_back(std::move(name));
  inst_.resident_prefs_.emplace_back();
  return Resident{inst_.num_residents() - 1};
}

auto InstanceBuilder::add_hospital(std::string name, int quota) -> Hospital {
  inst_.hospital_names_.push_back(std::move(name));
  inst_.hospital_prefs_.emplace_back();
  quotas_.push_back(quota);
  return Hospital{inst_.num_hospitals() - 1};
}

void InstanceBuilder::set_preferences(Resident r, std::vector<Hospital> list) {
  inst_.resident_prefs_.at(r.index()) = std::move(list);
}

void InstanceBuilder::set_preferences(Hospital h, std::vector<std::vector<Resident>> groups) {
  inst_.hospital_prefs_.at(h.index()) = std::move(groups);
}

auto InstanceBuilder::build() && -> Instance {
  auto fail = [](ErrorKind kind, const std::string& msg) { throw InstanceError(kind, msg); };

  std::set<std::string_view> seen;
  for (const auto& n : inst_.resident_names_) {
    if (!valid_identifier(n)) fail(ErrorKind::syntax, "invalid resident id '" + n + "'");
    if (!seen.insert(n).second) fail(ErrorKind::duplicate_id, "resident " + n);
  }
  seen.clear();
  for (const auto& n : inst_.hospital_names_) {
    if (!valid_identifier(n)) fail(ErrorKind::syntax, "invalid hospital id '" + n + "'");
    if (!seen.insert(n).second) fail(ErrorKind::duplicate_id, "hospital " + n);
  }
  for (std::size_t h = 0; h < quotas_.size(); ++h)
    if (quotas_[h] < 0) fail(ErrorKind::negative_quota, "hospital " + inst_.hospital_names_[h]);

  const int nr = inst_.num_residents();
  const int nh = inst_.num_hospitals();
  std::set<std::pair<int, int>> from_residents;
  std::set<std::pair<int, int>> from_hospitals;
  for (int r = 0; r < nr; ++r) {
    for (Hospital h : inst_.resident_prefs_[static_cast<std::size_t>(r)]) {
      if (h.value() < 0 || h.value() >= nh) fail(ErrorKind::unknown_id, "hospital index");
      if (!from_residents.emplace(r, h.value()).second)
        fail(ErrorKind::duplicate_entry, "resident " + inst_.resident_names_[static_cast<std::size_t>(r)]);
    }
  }
  for (int h = 0; h < nh; ++h) {
    for (const auto& g : inst_.hospital_prefs_[static_cast<std::size_t>(h)]) {
      if (g.empty()) fail(ErrorKind::syntax, "empty rank group");
      for (Resident r : g) {
        if (r.value() < 0 || r.value() >= nr) fail(ErrorKind::unknown_id, "resident index");
        if (!from_hospitals.emplace(r.value(), h).second)
          fail(ErrorKind::duplicate_entry, "hospital " + inst_.hospital_names_[static_cast<std::size_t>(h)]);
      }
    }
  }
  if (from_residents != from_hospitals) {
    std::vector<std::pair<int, int>> diff;
    std::set_symmetric_difference(from_residents.begin(), from_residents.end(),
                                  from_hospitals.begin(), from_hospitals.end(),
                                  std::back_inserter(diff));
    const auto [r, h] = diff.front();
    fail(ErrorKind::non_mutual_edge, inst_.resident_names_[static_cast<std::size_t>(r)] + " " +
                                         inst_.hospital_names_[static_cast<std::size_t>(h)]);
  }

  inst_.quotas_ = QuotaVector(quotas_);
  inst_.index_ranks();
  return std::move(inst_);
}

// ---------------------------------------------------------------------------
// Matching

auto Matching::size() const -> int {
  return static_cast<int>(std::count_if(partner_.begin(), partner_.end(),
                                        [](const auto& p) { return p.has_value(); }));
}

auto Matching::loads(int num_hospitals) const -> std::vector<int> {
  std::vector<int> out(static_cast<std::size_t>(num_hospitals), 0);
  for (const auto& p : partner_)
    if (p) ++out.at(p->index());
  return out;
}

auto Matching::residents_at(Hospital h) const -> std::vector<Resident> {
  std::vector<Resident> out;
  for (std::size_t i = 0; i < partner_.size(); ++i)
    if (partner_[i] == h) out.emplace_back(static_cast<int>(i));
  return out;
}

auto Matching::edges() const -> std::vector<Edge> {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < partner_.size(); ++i)
    if (partner_[i]) out.push_back({Resident{static_cast<int>(i)}, *partner_[i]});
  return out;
}

void require_valid(const Instance& inst, const QuotaVector& quotas, const Matching& m) {
  if (m.num_residents() != inst.num_residents())
    throw std::invalid_argument("matching size does not match instance");
  if (quotas.size() != static_cast<std::size_t>(inst.num_hospitals()))
    throw std::invalid_argument("quota vector size does not match instance");
  for (Resident r : inst.residents()) {
    auto h = m.partner(r);
    if (h && !inst.acceptable(r, *h))
      throw std::invalid_argument("matching uses non-edge (" + inst.name(r) + ", " +
                                  inst.name(*h) + ")");
  }
  const auto loads = m.loads(inst.num_hospitals());
  for (Hospital h : inst.hospitals())
    if (loads[h.index()] > quotas[h])
      throw std::invalid_argument("hospital " + inst.name(h) + " over-subscribed: " +
                                  std::to_string(loads[h.index()]) + " > " +
                                  std::to_string(quotas[h]));
}

auto is_valid(const Instance& inst, const QuotaVector& quotas, const Matching& m) -> bool {
  try {
    require_valid(inst, quotas, m);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Token {
  std::string text;
  int column = 0;
  bool punct = false;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

auto is_punct(char c) -> bool { return c == '(' || c == ')' || c == '[' || c == ']' || c == ':'; }
auto is_space(char c) -> bool {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

auto lex(std::string_view text) -> std::vector<Line> {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      char c = raw[i];
      if (c == '#') break;
      if (is_space(c)) {
        ++i;
        continue;
      }
      if (is_punct(c)) {
        line.tokens.push_back({std::string(1, c), static_cast<int>(i) + 1, true});
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !is_space(raw[j]) && !is_punct(raw[j]) && raw[j] != '#') ++j;
      line.tokens.push_back({std::string(raw.substr(i, j - i)), static_cast<int>(i) + 1, false});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

// Cursor over one line's tokens, raising positioned errors.
class Cursor {
 public:
  explicit Cursor(const Line& line) : line_(line) {}

  [[nodiscard]] bool done() const { return i_ >= line_.tokens.size(); }
  [[nodiscard]] const Token& peek() const { return line_.tokens[i_]; }
  [[nodiscard]] int line() const { return line_.number; }
  [[nodiscard]] int column() const {
    if (!done()) return peek().column;
    if (line_.tokens.empty()) return 1;
    const auto& last = line_.tokens.back();
    return last.column + static_cast<int>(last.text.size());
  }

  [[noreturn]] void fail(ErrorKind kind, const std::string& detail) const {
    throw ParseError(kind, line(), column(), detail);
  }
  [[noreturn]] void fail_at(const Token& t, ErrorKind kind, const std::string& detail) const {
    throw ParseError(kind, line(), t.column, detail);
  }

  const Token& word(const char* what) {
    if (done()) fail(ErrorKind::syntax, std::string("expected ") + what);
    if (peek().punct) fail(ErrorKind::syntax, std::string("expected ") + what + ", got '" + peek().text + "'");
    return line_.tokens[i_++];
  }
  void expect(char c) {
    if (done() || !peek().punct || peek().text[0] != c)
      fail(ErrorKind::syntax, std::string("expected '") + c + "'");
    ++i_;
  }
  bool accept(char c) {
    if (!done() && peek().punct && peek().text[0] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void end() {
    if (!done()) fail(ErrorKind::syntax, "unexpected '" + peek().text + "'");
  }

 private:
  const Line& line_;
  std::size_t i_ = 0;
};

auto parse_int(const Cursor& cur, const Token& t) -> long long {
  long long value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) cur.fail_at(t, ErrorKind::syntax, "expected integer, got '" + t.text + "'");
  return value;
}

struct PendingEntry {
  Token token;
  std::size_t group = 0;
};

struct PendingVertex {
  Line line;
  Token id;
  std::vector<PendingEntry> entries;
};

void expect_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(ErrorKind::syntax, 1, 1, "missing header 'HRHT v1'");
  const auto& first = lines.front();
  if (first.tokens.size() != 2 || first.tokens[0].text != "HRHT" || first.tokens[1].text != "v1")
    throw ParseError(ErrorKind::syntax, first.number, first.tokens.front().column,
                     "expected header 'HRHT v1'");
}

}  // namespace

auto InstanceDocument::has_costs() const -> bool {
  return std::any_of(costs.begin(), costs.end(), [](const auto& c) { return c.has_value(); });
}

auto parse_document(std::string_view text) -> InstanceDocument {
  const auto lines = lex(text);
  expect_header(lines);

  std::vector<PendingVertex> residents;
  std::vector<PendingVertex> hospitals;
  std::vector<int> quotas;
  std::unordered_map<std::string, int> resident_index;
  std::unordered_map<std::string, int> hospital_index;
  struct Deferred {
    Line line;
    std::vector<Token> ids;
    long long value = 0;
  };
  std::vector<Deferred> forced_lines;
  std::vector<Deferred> cost_lines;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    Cursor cur(line);
    const Token& kw = cur.word("keyword");
    if (kw.text == "resident") {
      PendingVertex v{line, cur.word("resident id"), {}};
      cur.expect(':');
      std::size_t group = 0;
      while (!cur.done()) {
        if (cur.accept('(')) {
          std::vector<Token> members;
          while (!cur.accept(')')) members.push_back(cur.word("hospital id"));
          if (members.size() > 1)
            cur.fail_at(members[1], ErrorKind::resident_tie,
                        "resident " + v.id.text + " lists a tie");
          if (members.empty()) cur.fail(ErrorKind::syntax, "empty group");
          v.entries.push_back({members.front(), group++});
        } else {
          v.entries.push_back({cur.word("hospital id"), group++});
        }
      }
      if (!resident_index.emplace(v.id.text, static_cast<int>(residents.size())).second)
        cur.fail_at(v.id, ErrorKind::duplicate_id, "resident " + v.id.text);
      residents.push_back(std::move(v));
    } else if (kw.text == "hospital") {
      PendingVertex v{line, cur.word("hospital id"), {}};
      cur.expect('[');
      const Token& qt = cur.word("quota");
      long long q = parse_int(cur, qt);
      if (q < 0) cur.fail_at(qt, ErrorKind::negative_quota, "hospital " + v.id.text);
      if (q > 1'000'000'000) cur.fail_at(qt, ErrorKind::syntax, "quota too large");
      cur.expect(']');
      cur.expect(':');
      std::size_t group = 0;
      while (!cur.done()) {
        if (cur.accept('(')) {
          bool any = false;
          while (!cur.accept(')')) {
            v.entries.push_back({cur.word("resident id"), group});
            any = true;
          }
          if (!any) cur.fail(ErrorKind::syntax, "empty tie");
          ++group;
        } else {
          v.entries.push_back({cur.word("resident id"), group++});
        }
      }
      if (!hospital_index.emplace(v.id.text, static_cast<int>(hospitals.size())).second)
        cur.fail_at(v.id, ErrorKind::duplicate_id, "hospital " + v.id.text);
      hospitals.push_back(std::move(v));
      quotas.push_back(static_cast<int>(q));
    } else if (kw.text == "forced") {
      cur.expect(':');
      Deferred d{line, {}, 0};
      d.ids.push_back(cur.word("resident id"));
      d.ids.push_back(cur.word("hospital id"));
      cur.end();
      forced_lines.push_back(std::move(d));
    } else if (kw.text == "cost") {
      Deferred d{line, {}, 0};
      d.ids.push_back(cur.word("hospital id"));
      cur.expect(':');
      const Token& ct = cur.word("cost");
      d.value = parse_int(cur, ct);
      if (d.value < 0) cur.fail_at(ct, ErrorKind::syntax, "cost must be nonnegative");
      cur.end();
      cost_lines.push_back(std::move(d));
    } else {
      cur.fail_at(kw, ErrorKind::syntax, "unknown keyword '" + kw.text + "'");
    }
  }

  InstanceBuilder builder;
  for (const auto& v : residents) builder.add_resident(v.id.text);
  for (std::size_t h = 0; h < hospitals.size(); ++h) builder.add_hospital(hospitals[h].id.text, quotas[h]);

  // Resolution, with per-list duplicate detection.
  std::map<std::pair<int, int>, std::pair<int, int>> resident_side;  // edge -> (line, column)
  std::map<std::pair<int, int>, std::pair<int, int>> hospital_side;
  for (std::size_t r = 0; r < residents.size(); ++r) {
    const auto& v = residents[r];
    std::vector<Hospital> list;
    for (const auto& e : v.entries) {
      auto it = hospital_index.find(e.token.text);
      if (it == hospital_index.end())
        throw ParseError(ErrorKind::unknown_id, v.line.number, e.token.column, "hospital " + e.token.text);
      if (!resident_side.emplace(std::pair{static_cast<int>(r), it->second},
                                 std::pair{v.line.number, e.token.column}).second)
        throw ParseError(ErrorKind::duplicate_entry, v.line.number, e.token.column,
                         "hospital " + e.token.text + " listed twice");
      list.emplace_back(it->second);
    }
    builder.set_preferences(Resident{static_cast<int>(r)}, std::move(list));
  }
  for (std::size_t h = 0; h < hospitals.size(); ++h) {
    const auto& v = hospitals[h];
    std::vector<std::vector<Resident>> groups;
    for (const auto& e : v.entries) {
      auto it = resident_index.find(e.token.text);
      if (it == resident_index.end())
        throw ParseError(ErrorKind::unknown_id, v.line.number, e.token.column, "resident " + e.token.text);
      if (!hospital_side.emplace(std::pair{it->second, static_cast<int>(h)},
                                 std::pair{v.line.number, e.token.column}).second)
        throw ParseError(ErrorKind::duplicate_entry, v.line.number, e.token.column,
                         "resident " + e.token.text + " listed twice");
      if (groups.size() <= e.group) groups.resize(e.group + 1);
      groups[e.group].emplace_back(it->second);
    }
    builder.set_preferences(Hospital{static_cast<int>(h)}, std::move(groups));
  }

  // Mutual acceptability, reported at the earliest offending entry.
  std::optional<std::tuple<int, int, std::string>> first_bad;
  auto consider = [&](int line, int column, std::string detail) {
    if (!first_bad || std::pair{line, column} < std::pair{std::get<0>(*first_bad), std::get<1>(*first_bad)})
      first_bad.emplace(line, column, std::move(detail));
  };
  for (const auto& [edge, pos] : resident_side)
    if (!hospital_side.contains(edge))
      consider(pos.first, pos.second,
               residents[static_cast<std::size_t>(edge.first)].id.text + " lists " +
                   hospitals[static_cast<std::size_t>(edge.second)].id.text + " but not vice versa");
  for (const auto& [edge, pos] : hospital_side)
    if (!resident_side.contains(edge))
      consider(pos.first, pos.second,
               hospitals[static_cast<std::size_t>(edge.second)].id.text + " lists " +
                   residents[static_cast<std::size_t>(edge.first)].id.text + " but not vice versa");
  if (first_bad)
    throw ParseError(ErrorKind::non_mutual_edge, std::get<0>(*first_bad), std::get<1>(*first_bad),
                     std::get<2>(*first_bad));

  InstanceDocument doc{std::move(builder).build(), {}, {}};
  doc.costs.assign(hospitals.size(), std::nullopt);

  std::set<int> forced_residents;
  for (const auto& d : forced_lines) {
    auto r = doc.instance.find_resident(d.ids[0].text);
    if (!r) throw ParseError(ErrorKind::unknown_id, d.line.number, d.ids[0].column, "resident " + d.ids[0].text);
    auto h = doc.instance.find_hospital(d.ids[1].text);
    if (!h) throw ParseError(ErrorKind::unknown_id, d.line.number, d.ids[1].column, "hospital " + d.ids[1].text);
    if (!doc.instance.acceptable(*r, *h))
      throw ParseError(ErrorKind::not_an_edge, d.line.number, d.ids[0].column,
                       "forced pair " + d.ids[0].text + " " + d.ids[1].text);
    if (!forced_residents.insert(r->value()).second)
      throw ParseError(ErrorKind::duplicate_entry, d.line.number, d.ids[0].column,
                       "resident " + d.ids[0].text + " has two forced edges");
    doc.forced.push_back({*r, *h});
  }
  for (const auto& d : cost_lines) {
    auto h = doc.instance.find_hospital(d.ids[0].text);
    if (!h) throw ParseError(ErrorKind::unknown_id, d.line.number, d.ids[0].column, "hospital " + d.ids[0].text);
    if (doc.costs[h->index()])
      throw ParseError(ErrorKind::duplicate_entry, d.line.number, d.ids[0].column,
                       "second cost for " + d.ids[0].text);
    doc.costs[h->index()] = d.value;
  }
  return doc;
}

auto parse_instance(std::string_view text) -> Instance { return parse_document(text).instance; }

auto serialize_instance(const Instance& inst) -> std::string {
  std::ostringstream os;
  os << "HRHT v1\n";
  for (Resident r : inst.residents()) {
    os << "resident " << inst.name(r) << ':';
    for (Hospital h : inst.preferences(r)) os << ' ' << inst.name(h);
    os << '\n';
  }
  for (Hospital h : inst.hospitals()) {
    os << "hospital " << inst.name(h) << " [" << inst.quota(h) << "]:";
    for (const auto& g : inst.preferences(h)) {
      os << ' ';
      if (g.size() > 1) os << '(';
      for (std::size_t i = 0; i < g.size(); ++i) os << (i ? " " : "") << inst.name(g[i]);
      if (g.size() > 1) os << ')';
    }
    os << '\n';
  }
  return os.str();
}

auto serialize_document(const InstanceDocument& doc) -> std::string {
  std::string out = serialize_instance(doc.instance);
  for (const auto& e : doc.forced)
    out += "forced: " + doc.instance.name(e.resident) + " " + doc.instance.name(e.hospital) + "\n";
  for (Hospital h : doc.instance.hospitals())
    if (h.index() < doc.costs.size() && doc.costs[h.index()])
      out += "cost " + doc.instance.name(h) + ": " + std::to_string(*doc.costs[h.index()]) + "\n";
  return out;
}

auto serialize_matching(const Instance& inst, const QuotaVector& quotas, const Matching& m)
    -> std::string {
  std::ostringstream os;
  for (Hospital h : inst.hospitals()) os << "quota " << inst.name(h) << ' ' << quotas[h] << '\n';
  for (Resident r : inst.residents()) {
    if (auto h = m.partner(r))
      os << "match " << inst.name(r) << ' ' << inst.name(*h) << '\n';
    else
      os << "unmatched " << inst.name(r) << '\n';
  }
  return os.str();
}

auto parse_matching(std::string_view text, const Instance& inst) -> MatchingDocument {
  MatchingDocument doc{inst.quotas(), Matching(inst.num_residents())};
  std::vector<bool> quota_seen(static_cast<std::size_t>(inst.num_hospitals()), false);
  std::vector<bool> resident_seen(static_cast<std::size_t>(inst.num_residents()), false);

  auto resident = [&](Cursor& cur) {
    const Token& t = cur.word("resident id");
    auto r = inst.find_resident(t.text);
    if (!r) cur.fail_at(t, ErrorKind::unknown_id, "resident " + t.text);
    if (resident_seen[r->index()]) cur.fail_at(t, ErrorKind::duplicate_entry, "resident " + t.text);
    resident_seen[r->index()] = true;
    return std::pair{*r, t};
  };
  auto hospital = [&](Cursor& cur) {
    const Token& t = cur.word("hospital id");
    auto h = inst.find_hospital(t.text);
    if (!h) cur.fail_at(t, ErrorKind::unknown_id, "hospital " + t.text);
    return std::pair{*h, t};
  };

  for (const Line& line : lex(text)) {
    Cursor cur(line);
    const Token& kw = cur.word("keyword");
    if (kw.text == "quota") {
      auto [h, ht] = hospital(cur);
      if (quota_seen[h.index()]) cur.fail_at(ht, ErrorKind::duplicate_entry, "quota for " + ht.text);
      quota_seen[h.index()] = true;
      const Token& qt = cur.word("quota");
      long long q = parse_int(cur, qt);
      if (q < 0) cur.fail_at(qt, ErrorKind::negative_quota, "hospital " + ht.text);
      if (q > 1'000'000'000) cur.fail_at(qt, ErrorKind::syntax, "quota too large");
      doc.quotas[h] = static_cast<int>(q);
    } else if (kw.text == "match") {
      auto [r, rt] = resident(cur);
      auto [h, ht] = hospital(cur);
      if (!inst.acceptable(r, h))
        cur.fail_at(rt, ErrorKind::not_an_edge, "(" + rt.text + ", " + ht.text + ")");
      doc.matching.assign(r, h);
    } else if (kw.text == "unmatched") {
      (void)resident(cur);
    } else if (kw.text == "total-increase" || kw.text == "max-increase") {
      (void)parse_int(cur, cur.word("integer"));
    } else {
      cur.fail_at(kw, ErrorKind::syntax, "unknown keyword '" + kw.text + "'");
    }
    cur.end();
  }
  return doc;
}

}  // namespace hrht
