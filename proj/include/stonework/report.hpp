#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stonework {

/// One (property, verdict, witness) triple. An empty `holds` means the
/// property was not applicable (a prerequisite failed). Informational verdicts
/// classify the input rather than check a claim, so they never make a report
/// fail.
struct Verdict {
  std::string property;
  std::optional<bool> holds;
  std::vector<int> witness;
  bool informational = false;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string name) : name_(std::move(name)) {}

  Verdict& add(std::string property, std::optional<bool> holds, std::vector<int> witness = {});
  Verdict& info(std::string property, std::optional<bool> holds, std::vector<int> witness = {});
  Verdict& not_applicable(std::string property);

  /// Appends the verdicts of `other`, prefixing their names with `prefix.`.
  void merge(const Report& other, std::string_view prefix = {});

  const std::string& name() const { return name_; }
  const std::vector<Verdict>& verdicts() const { return verdicts_; }

  const Verdict* find(std::string_view property) const;
  /// Verdict of `property`; throws std::out_of_range if absent or not applicable.
  bool holds(std::string_view property) const;
  bool applicable(std::string_view property) const;

  /// True when every applicable, non-informational verdict holds.
  bool passed() const;
  /// First failing checked verdict, if any.
  const Verdict* first_failure() const;

 private:
  std::string name_;
  std::vector<Verdict> verdicts_;
};

std::string to_text(const Report& report, const std::vector<std::string>* names = nullptr);

}  // namespace stonework
