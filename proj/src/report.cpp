#include "stonework/report.hpp"

#include <sstream>
#include <stdexcept>

namespace stonework {

Verdict& Report::add(std::string property, std::optional<bool> holds, std::vector<int> witness) {
  if (holds.value_or(true)) witness.clear();
  verdicts_.push_back(Verdict{std::move(property), holds, std::move(witness), false});
  return verdicts_.back();
}

Verdict& Report::info(std::string property, std::optional<bool> holds, std::vector<int> witness) {
  Verdict& v = add(std::move(property), holds, std::move(witness));
  v.informational = true;
  return v;
}

Verdict& Report::not_applicable(std::string property) {
  return add(std::move(property), std::nullopt);
}

void Report::merge(const Report& other, std::string_view prefix) {
  for (Verdict v : other.verdicts_) {
    if (!prefix.empty()) v.property = std::string(prefix) + "." + v.property;
    verdicts_.push_back(std::move(v));
  }
}

const Verdict* Report::find(std::string_view property) const {
  for (const auto& v : verdicts_)
    if (v.property == property) return &v;
  return nullptr;
}

bool Report::holds(std::string_view property) const {
  const Verdict* v = find(property);
  if (!v) throw std::out_of_range("no verdict for " + std::string(property) + " in " + name_);
  if (!v->holds) throw std::out_of_range(std::string(property) + " is not applicable");
  return *v->holds;
}

bool Report::applicable(std::string_view property) const {
  const Verdict* v = find(property);
  return v && v->holds.has_value();
}

const Verdict* Report::first_failure() const {
  for (const auto& v : verdicts_)
    if (!v.informational && v.holds && !*v.holds) return &v;
  return nullptr;
}

bool Report::passed() const { return first_failure() == nullptr; }

std::string to_text(const Report& report, const std::vector<std::string>* names) {
  std::ostringstream os;
  os << "[" << report.name() << "]\n";
  for (const auto& v : report.verdicts()) {
    os << "  " << v.property << ": ";
    if (!v.holds)
      os << "n/a";
    else
      os << (*v.holds ? "yes" : "no");
    if (v.informational) os << " (info)";
    if (!v.witness.empty()) {
      os << "  witness (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i) os << ", ";
        int w = v.witness[i];
        if (names && w >= 0 && static_cast<std::size_t>(w) < names->size())
          os << (*names)[w];
        else
          os << w;
      }
      os << ")";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace stonework
