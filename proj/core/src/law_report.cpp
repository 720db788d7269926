#include <cgc/law_report.hpp>

#include <algorithm>

namespace cgc {

bool LawReport::has_counterexample(const Binding& partial) const {
  return std::any_of(m_counterexamples.begin(), m_counterexamples.end(),
                     [&](const Binding& b) {
                       return std::all_of(partial.begin(), partial.end(),
                                          [&](const auto& kv) {
                                            return std::find(b.begin(), b.end(), kv) != b.end();
                                          });
                     });
}

std::string LawReport::summary() const {
  std::string s = (passed() ? "PASS " : "FAIL ") + m_law + " [" + m_carrier;
  if (m_window) {
    s += ", window " + std::to_string(*m_window);
  }
  s += "]";
  if (!passed()) {
    s += " " + std::to_string(m_violations) + " counterexample(s)";
  }
  return s;
}

void to_json(nlohmann::json& j, const LawReport& r) {
  nlohmann::json cex = nlohmann::json::array();
  for (const Binding& b : r.counterexamples()) {
    nlohmann::json o = nlohmann::json::object();
    for (const auto& [k, v] : b) {
      o[k] = v;
    }
    cex.push_back(std::move(o));
  }
  j = nlohmann::json{
      {"law", r.law()},
      {"carrier", r.carrier()},
      {"window", r.window() ? nlohmann::json(*r.window()) : nlohmann::json(nullptr)},
      {"verdict", r.passed() ? "pass" : "fail"},
      {"counterexamples", std::move(cex)},
      {"checked", r.checked()},
      {"violations", r.violations()},
  };
  if (!r.notes().empty()) {
    j["notes"] = r.notes();
  }
}

} // namespace cgc
