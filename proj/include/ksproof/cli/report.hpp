#pragma once

// Machine-readable verification reports. Layout is documented in
// docs/report-schema.md; bump kReportSchemaVersion on breaking changes.

#include "json.hpp"
#include "ksproof/kscolor.hpp"
#include "ksproof/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ksproof::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

/// Exact value as canonical string plus its float.
inline Json exact_value(const QRoot2& x) { return Json{{"exact", x.to_string()}, {"float", x.to_double()}}; }

/// sqrt(x) for x >= 0, with the best exact spelling available.
inline Json exact_sqrt_value(const QRoot2& x) {
  return Json{{"exact", sqrt_string(x)}, {"float", std::sqrt(x.to_double())}};
}

inline Json complex_value(const ApproxComplex& z) { return Json{{"re", z.re}, {"im", z.im}}; }

inline Json complex_value(const ExactComplex& z) {
  const ApproxComplex f = to_approx(z);
  return Json{{"exact", z.to_string()}, {"re", f.re}, {"im", f.im}};
}

inline Json constraint_json(const ConstraintSet& cs, ConstraintRef r) {
  return Json{{"kind", r.kind == ConstraintRef::Kind::Triad ? "triad" : "pair"},
              {"index", r.index},
              {"rays", members(cs, r)}};
}

inline Json contradiction_json(const ConstraintSet& cs, const Contradiction& x) {
  return Json{{"kind", x.kind == Contradiction::Kind::AllRed ? "all_red" : "two_greens"},
              {"constraint", constraint_json(cs, x.where)}};
}

inline Json trace_json(const ProofTrace& trace, const ConstraintSet& cs) {
  Json steps = Json::array();
  for (const TraceStep& s : trace.steps) {
    if (const auto* c = std::get_if<ChoiceStep>(&s)) {
      steps.push_back({{"step", "choice"}, {"greens", c->greens}, {"justification", c->justification}});
    } else if (const auto* f = std::get_if<ForcedStep>(&s)) {
      steps.push_back({{"step", "forced"},
                       {"ray", f->ray},
                       {"color", std::string(to_string(f->color))},
                       {"reason", constraint_json(cs, f->reason)}});
    } else {
      const auto& x = std::get<ContradictionStep>(s).contradiction;
      steps.push_back({{"step", "contradiction"}, {"contradiction", contradiction_json(cs, x)}});
    }
  }
  return steps;
}

inline Json coloring_json(const Coloring& c) { return Json{{"greens", c.greens()}, {"reds", c.reds()}}; }

class Report {
 public:
  Report(std::string command, Json parameters)
      : command_(std::move(command)), parameters_(std::move(parameters)) {}

  /// A failed check should carry a concrete counterexample.
  void check(std::string name, bool passed, Json detail = Json::object(), Json counterexample = nullptr) {
    Json c{{"name", std::move(name)}, {"passed", passed}, {"detail", std::move(detail)}};
    if (!passed) c["counterexample"] = counterexample.is_null() ? Json("none recorded") : std::move(counterexample);
    checks_.push_back(std::move(c));
  }

  Json& witness() { return witness_; }

  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Json& c) { return c["passed"].get<bool>(); });
  }

  Json to_json() const {
    return Json{{"schema_version", kReportSchemaVersion},
                {"command", command_},
                {"parameters", parameters_},
                {"passed", passed()},
                {"checks", checks_},
                {"witness", witness_}};
  }

  std::string to_text() const {
    std::ostringstream os;
    os << command_ << ' ' << parameters_.dump() << '\n';
    for (const Json& c : checks_) {
      os << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
      if (!c["detail"].empty()) os << "  " << c["detail"].dump();
      if (c.contains("counterexample")) os << "\n     counterexample: " << c["counterexample"].dump();
      os << '\n';
    }
    os << (passed() ? "all checks passed" : "some checks FAILED") << '\n';
    return os.str();
  }

 private:
  std::string command_;
  Json parameters_;
  Json checks_ = Json::array();
  Json witness_ = Json::object();
};

}  // namespace ksproof::cli
