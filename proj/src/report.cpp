#include "lucasres/report.hpp"

#include <json.hpp>

#include "lucasres/errors.hpp"

namespace lucasres {

const char* outcome_name(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skipped: return "skipped";
    case Outcome::Unsatisfiable: return "unsatisfiable";
  }
  return "unknown";
}

bool Clause::pass() const { return hypotheses_met && lhs == rhs; }

Clause Clause::congruence(std::string label, const Residue& lhs, const Residue& rhs) {
  Clause c;
  c.label = std::move(label);
  c.lhs = lhs.value();
  if (lhs.modulus() != rhs.modulus()) raise(ErrorCode::InvalidArgument, "clause sides use different moduli");
  c.rhs = rhs.value();
  c.modulus = lhs.modulus();
  return c;
}

Clause Clause::exact(std::string label, BigInt lhs, BigInt rhs) {
  Clause c;
  c.label = std::move(label);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

Clause Clause::skipped(std::string label, std::string why) {
  Clause c;
  c.label = std::move(label);
  c.hypotheses_met = false;
  c.note = std::move(why);
  return c;
}

bool CheckReport::hypotheses_met() const {
  if (unsatisfiable) return false;
  for (const auto& c : clauses)
    if (c.hypotheses_met) return true;
  return false;
}

bool CheckReport::pass() const {
  if (!hypotheses_met()) return false;
  for (const auto& c : clauses)
    if (c.hypotheses_met && !c.pass()) return false;
  return true;
}

Outcome CheckReport::outcome() const {
  if (unsatisfiable) return Outcome::Unsatisfiable;
  if (!hypotheses_met()) return Outcome::Skipped;
  return pass() ? Outcome::Pass : Outcome::Fail;
}

const Clause* CheckReport::primary() const {
  if (unsatisfiable) return nullptr;
  for (const auto& c : clauses)
    if (c.hypotheses_met) return &c;
  return nullptr;
}

std::string to_json_line(const CheckReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["check"] = report.check_id;
  j["p"] = report.p ? ordered_json(std::to_string(*report.p)) : ordered_json(nullptr);
  j["a"] = report.a ? ordered_json(to_string(*report.a)) : ordered_json(nullptr);
  j["outcome"] = outcome_name(report.outcome());
  j["hypotheses_met"] = report.hypotheses_met();
  j["pass"] = report.pass();
  if (const Clause* c = report.primary()) {
    j["lhs"] = to_string(c->lhs);
    j["rhs"] = to_string(c->rhs);
    j["modulus"] = c->modulus == 0 ? ordered_json(nullptr) : ordered_json(std::to_string(c->modulus));
  } else {
    j["lhs"] = nullptr;
    j["rhs"] = nullptr;
    j["modulus"] = nullptr;
  }
  j["detail"] = report.detail;
  ordered_json clauses = ordered_json::array();
  for (const auto& c : report.clauses) {
    ordered_json cj;
    cj["label"] = c.label;
    cj["hypotheses_met"] = c.hypotheses_met;
    if (c.hypotheses_met) {
      cj["lhs"] = to_string(c.lhs);
      cj["rhs"] = to_string(c.rhs);
      cj["modulus"] = c.modulus == 0 ? ordered_json(nullptr) : ordered_json(std::to_string(c.modulus));
      cj["pass"] = c.pass();
    }
    if (!c.note.empty()) cj["note"] = c.note;
    clauses.push_back(std::move(cj));
  }
  j["clauses"] = std::move(clauses);
  return j.dump();
}

}  // namespace lucasres
