#include "zeck/trace_table.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace zeck {

namespace {

std::string state_label(const LegalityReport& rep, const char* note) {
  std::string s;
  if (rep.is_gzd()) return "mli=0 sli=0 gzd";
  s = "mli=" + std::to_string(rep.mli) + " sli=" + std::to_string(rep.sli);
  if (rep.coi) s += " coi=" + std::to_string(*rep.coi);
  if (rep.rei) s += " rei=" + std::to_string(*rep.rei);
  if (note) s += std::string(" ") + note;
  return s;
}

std::string signed_cell(std::int64_t v) { return v > 0 ? "+" + std::to_string(v) : std::to_string(v); }

}  // namespace

std::string render_trace_table(const Representation& initial, const TracedRun& run) {
  const Signature& sig = initial.signature();
  const auto t = static_cast<Index>(sig.depth());
  std::vector<const Representation*> states{&initial};
  for (const auto& step : run.trace.steps) {
    if (!step.snapshot) throw std::invalid_argument("trace table needs a snapshot for every step");
    states.push_back(&*step.snapshot);
  }
  Index top = 0;
  for (const auto* r : states) top = std::max(top, r->top_index());
  const Index bottom = -(t - 1);

  std::vector<std::pair<std::string, std::map<Index, std::string>>> rows;
  std::map<Index, std::string> header;
  for (Index i = top; i >= bottom; --i) header[i] = std::to_string(i);
  rows.emplace_back("index", header);

  auto digits_of = [&](const Representation& r) {
    std::map<Index, std::string> cells;
    for (Index i = top; i >= bottom; --i) cells[i] = i < 0 ? "inf" : r.digit(i).str();
    return cells;
  };

  for (std::size_t k = 0; k < run.trace.steps.size(); ++k) {
    const Step& step = run.trace.steps[k];
    const char* note = nullptr;
    if (step.kind == StepKind::Carry) note = step.chained ? "(left neighbour block full)" : "(able to carry)";
    rows.emplace_back(state_label(legality(*states[k]), note), digits_of(*states[k]));
    std::map<Index, std::string> change;
    const std::int64_t dir = step.kind == StepKind::Borrow ? 1 : -1;
    change[step.index] = signed_cell(-dir);
    for (Index j = 1; j <= t; ++j) {
      const Index at = step.index - j;
      if (at < bottom) break;
      const std::int64_t c = sig.c(static_cast<std::size_t>(j));
      if (c != 0) change[at] = signed_cell(dir * c);
    }
    rows.emplace_back(std::string(step.kind == StepKind::Borrow ? "borrow at " : "carry to ") +
                          std::to_string(step.index) + (step.chained ? " (chained)" : ""),
                      change);
  }
  rows.emplace_back(state_label(legality(*states.back()), nullptr), digits_of(*states.back()));

  std::size_t label_width = 0;
  std::size_t cell_width = 0;
  for (const auto& [label, cells] : rows) {
    label_width = std::max(label_width, label.size());
    for (const auto& [i, c] : cells) cell_width = std::max(cell_width, c.size());
  }
  std::ostringstream out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& [label, cells] = rows[k];
    std::string line = label + std::string(label_width - label.size(), ' ') + " |";
    for (Index i = top; i >= bottom; --i) {
      auto it = cells.find(i);
      const std::string c = it == cells.end() ? "" : it->second;
      line += " " + std::string(cell_width - c.size(), ' ') + c;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  out << states.back()->to_string() << '\n';
  return out.str();
}

}  // namespace zeck
