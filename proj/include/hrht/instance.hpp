#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ranges>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hrht {

// Dense index of a vertex within its side of an instance. Declared order of
// residents and hospitals fixes these indices.
template <class Tag>
class Id {
 public:
  constexpr Id() = default;
  constexpr explicit Id(int value) : value_(value) {}

  [[nodiscard]] constexpr int value() const { return value_; }
  [[nodiscard]] constexpr std::size_t index() const {
    return static_cast<std::size_t>(value_);
  }

  friend constexpr auto operator<=>(Id, Id) = default;

 private:
  int value_ = -1;
};

using Resident = Id<struct ResidentTag>;
using Hospital = Id<struct HospitalTag>;

struct Edge {
  Resident resident;
  Hospital hospital;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

class QuotaVector {
 public:
  QuotaVector() = default;
  explicit QuotaVector(std::vector<int> values) : values_(std::move(values)) {}
  QuotaVector(std::size_t size, int fill) : values_(size, fill) {}

  [[nodiscard]] int operator[](Hospital h) const { return values_.at(h.index()); }
  [[nodiscard]] int& operator[](Hospital h) { return values_.at(h.index()); }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] const std::vector<int>& values() const { return values_; }

  friend bool operator==(const QuotaVector&, const QuotaVector&) = default;

 private:
  std::vector<int> values_;
};

// Sum over hospitals of max(0, augmented - base).
[[nodiscard]] long long total_increase(const QuotaVector& base, const QuotaVector& augmented);
// Largest per-hospital increase; 0 for an empty vector.
[[nodiscard]] int max_increase(const QuotaVector& base, const QuotaVector& augmented);

enum class ErrorKind {
  syntax,
  unknown_id,
  duplicate_id,
  duplicate_entry,
  non_mutual_edge,
  resident_tie,
  negative_quota,
  not_an_edge,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind);

class InstanceError : public std::runtime_error {
 public:
  InstanceError(ErrorKind kind, const std::string& message);
  [[nodiscard]] ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the text readers; carries the 1-based position of the offending token.
class ParseError : public InstanceError {
 public:
  ParseError(ErrorKind kind, int line, int column, const std::string& detail);
  [[nodiscard]] int line() const { return line_; }
  [[nodiscard]] int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// An HR-HT instance: strict resident lists, hospital lists made of rank groups
// (ties), and a quota per hospital. Immutable once built.
class Instance {
 public:
  using HospitalList = std::vector<Hospital>;
  using RankGroups = std::vector<std::vector<Resident>>;

  Instance() = default;

  [[nodiscard]] int num_residents() const { return static_cast<int>(resident_names_.size()); }
  [[nodiscard]] int num_hospitals() const { return static_cast<int>(hospital_names_.size()); }
  [[nodiscard]] int num_edges() const { return num_edges_; }

  [[nodiscard]] auto residents() const {
    return std::views::iota(0, num_residents()) |
           std::views::transform([](int i) { return Resident{i}; });
  }
  [[nodiscard]] auto hospitals() const {
    return std::views::iota(0, num_hospitals()) |
           std::views::transform([](int i) { return Hospital{i}; });
  }

  [[nodiscard]] const std::string& name(Resident r) const { return resident_names_.at(r.index()); }
  [[nodiscard]] const std::string& name(Hospital h) const { return hospital_names_.at(h.index()); }
  [[nodiscard]] std::optional<Resident> find_resident(std::string_view name) const;
  [[nodiscard]] std::optional<Hospital> find_hospital(std::string_view name) const;

  [[nodiscard]] int quota(Hospital h) const { return quotas_[h]; }
  [[nodiscard]] const QuotaVector& quotas() const { return quotas_; }

  [[nodiscard]] const HospitalList& preferences(Resident r) const {
    return resident_prefs_.at(r.index());
  }
  [[nodiscard]] const RankGroups& preferences(Hospital h) const {
    return hospital_prefs_.at(h.index());
  }

  // Position of h in r's list (0 = most preferred), or nullopt if unacceptable.
  [[nodiscard]] std::optional<int> rank(Resident r, Hospital h) const;
  // Rank group of r in h's list (0 = most preferred), or nullopt if unacceptable.
  [[nodiscard]] std::optional<int> rank(Hospital h, Resident r) const;
  [[nodiscard]] bool acceptable(Resident r, Hospital h) const { return rank(r, h).has_value(); }

  [[nodiscard]] int degree(Resident r) const {
    return static_cast<int>(resident_prefs_.at(r.index()).size());
  }
  [[nodiscard]] int degree(Hospital h) const;

  [[nodiscard]] std::vector<Edge> edges() const;

  [[nodiscard]] Instance with_quotas(QuotaVector quotas) const;
  // Same vertices, only the edges accepted by `keep`, with the given quotas.
  // Relative order inside every list is preserved; emptied rank groups vanish.
  [[nodiscard]] Instance restricted(const std::function<bool(Resident, Hospital)>& keep,
                                    QuotaVector quotas) const;

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  friend class InstanceBuilder;
  void index_ranks();

  std::vector<std::string> resident_names_;
  std::vector<std::string> hospital_names_;
  QuotaVector quotas_;
  std::vector<HospitalList> resident_prefs_;
  std::vector<RankGroups> hospital_prefs_;
  // (other side index, rank), sorted by index, for O(log d) rank lookup.
  std::vector<std::vector<std::pair<int, int>>> resident_rank_;
  std::vector<std::vector<std::pair<int, int>>> hospital_rank_;
  int num_edges_ = 0;
};

class InstanceBuilder {
 public:
  Resident add_resident(std::string name);
  Hospital add_hospital(std::string name, int quota);
  void set_preferences(Resident r, std::vector<Hospital> list);
  void set_preferences(Hospital h, std::vector<std::vector<Resident>> groups);

  // Validates every instance invariant; throws InstanceError.
  [[nodiscard]] Instance build() &&;

 private:
  Instance inst_;
  std::vector<int> quotas_;
};

// Identifier tokens: nonempty, no whitespace and none of "#()[]:".
[[nodiscard]] bool valid_identifier(std::string_view token);

// Largest rank-group size over all hospital lists; 1 when every list is strict or empty.
[[nodiscard]] int max_tie_length(const Instance& inst);

// Assignment of residents to hospitals; an absent hospital is the bottom partner.
// Quota validity is checked against an explicit QuotaVector, never stored.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int num_residents) : partner_(static_cast<std::size_t>(num_residents)) {}

  [[nodiscard]] int num_residents() const { return static_cast<int>(partner_.size()); }
  [[nodiscard]] std::optional<Hospital> partner(Resident r) const { return partner_.at(r.index()); }
  [[nodiscard]] bool matched(Resident r) const { return partner_.at(r.index()).has_value(); }
  [[nodiscard]] bool contains(Edge e) const { return partner(e.resident) == e.hospital; }

  void assign(Resident r, Hospital h) { partner_.at(r.index()) = h; }
  void unassign(Resident r) { partner_.at(r.index()).reset(); }

  [[nodiscard]] int size() const;
  [[nodiscard]] std::vector<int> loads(int num_hospitals) const;
  [[nodiscard]] std::vector<Resident> residents_at(Hospital h) const;
  [[nodiscard]] std::vector<Edge> edges() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<std::optional<Hospital>> partner_;
};

// Throws std::invalid_argument when m uses a non-edge or over-subscribes a hospital.
void require_valid(const Instance& inst, const QuotaVector& quotas, const Matching& m);
[[nodiscard]] bool is_valid(const Instance& inst, const QuotaVector& quotas, const Matching& m);

// ---------------------------------------------------------------------------
// HRHT v1 text format.

struct InstanceDocument {
  Instance instance;
  std::vector<Edge> forced;                 // `forced:` lines, file order
  std::vector<std::optional<long long>> costs;  // per hospital, from `cost` lines

  [[nodiscard]] bool has_costs() const;
};

[[nodiscard]] InstanceDocument parse_document(std::string_view text);
[[nodiscard]] Instance parse_instance(std::string_view text);
[[nodiscard]] std::string serialize_instance(const Instance& inst);
[[nodiscard]] std::string serialize_document(const InstanceDocument& doc);

// Matching file: `quota` lines, then one `match`/`unmatched` line per resident.
struct MatchingDocument {
  QuotaVector quotas;
  Matching matching;
};

[[nodiscard]] std::string serialize_matching(const Instance& inst, const QuotaVector& quotas,
                                             const Matching& m);
// Missing `quota` lines default to the instance quota; missing residents are unmatched.
// Trailer lines `total-increase` and `max-increase` are accepted and ignored.
[[nodiscard]] MatchingDocument parse_matching(std::string_view text, const Instance& inst);

}  // namespace hrht
