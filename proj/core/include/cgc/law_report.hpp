#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cgc {

/// One falsifying assignment, e.g. {("x","0"), ("y","pos")}.
using Binding = std::vector<std::pair<std::string, std::string>>;

/// Outcome of an exhaustive (or sampled) law check. The verdict is derived
/// from the counterexample list: pass iff it is empty.
class LawReport {
 public:
  LawReport(std::string law, std::string carrier, std::optional<int> window = std::nullopt)
      : m_law(std::move(law)), m_carrier(std::move(carrier)), m_window(window) {}

  // At most kMaxStored bindings are kept; violations() counts all of them.
  static constexpr std::size_t kMaxStored = 256;

  void add(Binding b) {
    ++m_violations;
    if (m_counterexamples.size() < kMaxStored) {
      m_counterexamples.push_back(std::move(b));
    }
  }
  void note(std::string n) { m_notes.push_back(std::move(n)); }
  void set_checked(std::size_t n) { m_checked = n; }

  const std::string& law() const { return m_law; }
  const std::string& carrier() const { return m_carrier; }
  std::optional<int> window() const { return m_window; }
  bool passed() const { return m_violations == 0; }
  std::size_t violations() const { return m_violations; }
  const std::vector<Binding>& counterexamples() const { return m_counterexamples; }
  const std::vector<std::string>& notes() const { return m_notes; }
  std::size_t checked() const { return m_checked; }

  // True when some counterexample contains every given (name, value).
  bool has_counterexample(const Binding& partial) const;

  std::string summary() const;

 private:
  std::string m_law;
  std::string m_carrier;
  std::optional<int> m_window;
  std::vector<Binding> m_counterexamples;
  std::vector<std::string> m_notes;
  std::size_t m_checked = 0;
  std::size_t m_violations = 0;
};

// {"law","carrier","window","verdict","counterexamples"[, "checked", "notes"]}
void to_json(nlohmann::json& j, const LawReport& r);

} // namespace cgc
