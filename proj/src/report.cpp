#include "wigmore/report.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "wigmore/analytics.hpp"
#include "wigmore/error.hpp"

namespace wigmore {

namespace {

const std::set<std::string, std::less<>> kAuxiliaries = {"is",   "are",  "was",   "were", "has",   "have",
                                                        "had",  "will", "would", "can",  "could", "may",
                                                        "might", "does", "did",   "do",   "shall", "should"};

std::string token(std::string_view phrase) {
  return std::string(kTokenOpen) + std::string(phrase) + std::string(kTokenClose);
}

std::string without_period(std::string_view s) {
  while (!s.empty() && (s.back() == '.' || s.back() == ' ')) s.remove_suffix(1);
  return std::string(s);
}

// Lowercases a leading article so the statement reads inside a clause.
std::string in_clause(std::string_view statement) {
  std::string s = without_period(statement);
  for (std::string_view article : {"The ", "A ", "An "})
    if (s.rfind(article, 0) == 0) s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  return s;
}

std::string value_phrase(const DirectionalValue& v) {
  if (v.direction == Direction::for_) return label_phrase(v.strength);
  if (v.direction == Direction::against && v.strength >= Label::likely) return complement_label(v.strength).text();
  return label_phrase(Label::lacking_support);
}

bool is_chance_phrase(std::string_view phrase) {
  return phrase.find("chance") != std::string_view::npos;
}

std::string leading_with_token(std::string_view statement, std::string_view phrase) {
  std::string s = without_period(statement);
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    std::size_t end = s.find(' ', pos);
    if (end == std::string::npos) end = s.size();
    std::string word = s.substr(pos, end - pos);
    std::transform(word.begin(), word.end(), word.begin(), [](unsigned char c) { return std::tolower(c); });
    if (!first && kAuxiliaries.count(word)) return s.substr(0, pos) + token(phrase) + " " + s.substr(pos) + ".";
    first = false;
    pos = end + 1;
  }
  return "We assess it is " + token(phrase) + " that " + in_clause(statement) + ".";
}

std::string alternatives_with_tokens(const AnalysisTree& tree, const std::vector<HeadlineEntry>& ranking) {
  if (ranking.size() < 2) return {};
  std::vector<std::string> clauses;
  for (std::size_t i = 1; i < ranking.size(); ++i) {
    const auto& e = ranking[i];
    std::string lead = is_chance_phrase(e.phrase) ? "there is " : "it is ";
    clauses.push_back(lead + token(e.phrase) + " that " + in_clause(tree.find_hypothesis(e.hypothesis_id)->statement));
  }
  std::string out = "We assess " + clauses[0];
  for (std::size_t i = 1; i < clauses.size(); ++i)
    out += (i + 1 == clauses.size() ? " and that " : ", that ") + clauses[i];
  return out + ".";
}

std::string value_text(const NodeValue& v) {
  std::string out(direction_name(v.value.direction));
  if (v.value.direction == Direction::neutral)
    out += v.balance.dissonant ? " (dissonant)" : "";
  else
    out += " " + label_phrase(v.value.strength);
  return out;
}

std::string optional_phrase(const std::optional<Label>& l) { return l ? label_phrase(*l) : "not assessed"; }

class Builder {
 public:
  explicit Builder(const AnalysisTree& tree) : tree_(tree), computed_(*tree.computed) {}

  Report build() {
    Report r;
    r.question = tree_.question;
    r.ranking = ranking();

    if (!r.ranking.empty()) {
      const auto& lead = r.ranking.front();
      std::string headline = leading_with_token(tree_.find_hypothesis(lead.hypothesis_id)->statement, lead.phrase);
      std::string alternatives = alternatives_with_tokens(tree_, r.ranking);
      r.headline = strip_tokens(headline);
      r.alternatives = strip_tokens(alternatives);
      ReportSection summary{"summary", SectionKind::summary, "Assessment", headline, "", {}, false};
      if (!alternatives.empty()) summary.text += " " + alternatives;
      r.sections.push_back(std::move(summary));
    }

    for (const auto& entry : r.ranking) {
      const auto* top = tree_.find_hypothesis(entry.hypothesis_id);
      for (const auto& aid : top->arguments) r.sections.push_back(argument_section(*top, *tree_.find_argument(aid)));
      auto direct = tree_.links_of(top->id);
      if (!direct.empty()) r.sections.push_back(direct_section(*top, direct));
    }
    r.sections.push_back(assumptions_section());

    for (const auto& s : r.sections) {
      if (s.kind == SectionKind::argument) r.appendix.push_back(fragment(*tree_.find_argument(s.id.substr(9))));
    }
    std::set<std::string> cited;
    std::vector<std::string> order;
    for (const auto& s : r.sections)
      for (const auto& e : s.evidence)
        if (cited.insert(e).second) order.push_back(e);
    std::sort(order.begin(), order.end(), NaturalLess{});
    for (const auto& e : order) r.appendix.push_back(evidence_entry(*tree_.find_evidence(e)));
    return r;
  }

 private:
  std::vector<HeadlineEntry> ranking() const {
    std::vector<HeadlineEntry> out;
    for (const auto& id : tree_.top_hypotheses) {
      const auto& v = computed_.hypotheses.at(id).value;
      out.push_back({id, v, value_phrase(v)});
    }
    std::stable_sort(out.begin(), out.end(), [](const HeadlineEntry& a, const HeadlineEntry& b) {
      return signed_strength(a.value) > signed_strength(b.value);
    });
    return out;
  }

  // Evidence ids below a hypothesis, in first-seen order.
  void collect_evidence(const std::string& hid, std::vector<std::string>& out, std::set<std::string>& seen) const {
    for (const auto* l : tree_.links_of(hid))
      if (seen.insert(l->evidence_id).second) out.push_back(l->evidence_id);
    for (const auto& aid : tree_.find_hypothesis(hid)->arguments)
      for (const auto& s : tree_.find_argument(aid)->sub_hypotheses) collect_evidence(s, out, seen);
  }

  std::string evidence_list(const std::vector<std::string>& ids) const {
    std::string out;
    for (const auto& id : ids) {
      if (!out.empty()) out += ", ";
      out += id + " " + tree_.find_evidence(id)->name;
    }
    return out;
  }

  ReportSection argument_section(const HypothesisNode& top, const ArgumentNode& a) const {
    std::vector<std::string> statements;
    for (const auto& s : a.sub_hypotheses) statements.push_back(without_period(tree_.find_hypothesis(s)->statement));
    std::string joined;
    for (std::size_t i = 0; i < statements.size(); ++i)
      joined += (i == 0 ? "" : i + 1 == statements.size() ? " and " : ", ") + statements[i];

    std::vector<std::string> evidence;
    std::set<std::string> seen;
    for (const auto& s : a.sub_hypotheses) collect_evidence(s, evidence, seen);

    std::string text = joined + " (" + token(label_phrase(computed_.argument_forces.at(a.id))) + ")";
    text += a.polarity == Polarity::favoring ? " supports " : " argues against ";
    text += "\"" + without_period(top.statement) + "\".";
    if (!a.relevance_justification.empty()) text += " " + a.relevance_justification;
    if (!evidence.empty()) text += " Evidence: " + evidence_list(evidence) + ".";

    std::string title = std::string(a.polarity == Polarity::favoring ? "Favoring" : "Disfavoring") + " argument for \"" +
                        without_period(top.statement) + "\"";
    return {"argument:" + a.id, SectionKind::argument, title, text, "fragment-" + a.id, evidence, false};
  }

  ReportSection direct_section(const HypothesisNode& top, const std::vector<const EvidenceLink*>& links) const {
    std::vector<std::string> evidence;
    std::string text;
    for (const auto* l : links) {
      if (std::find(evidence.begin(), evidence.end(), l->evidence_id) == evidence.end())
        evidence.push_back(l->evidence_id);
      const auto* e = tree_.find_evidence(l->evidence_id);
      if (!text.empty()) text += " ";
      text += l->evidence_id + " " + e->name + " (" + token(label_phrase(computed_.link_forces.at(l->id))) + ") " +
              (l->polarity == Polarity::favoring ? "favors" : "disfavors") + " this hypothesis.";
      if (!l->relevance_justification.empty()) text += " " + l->relevance_justification;
    }
    return {"direct:" + top.id, SectionKind::direct_evidence,
            "Evidence bearing directly on \"" + without_period(top.statement) + "\"", text, "", evidence, false};
  }

  ReportSection assumptions_section() const {
    std::string text;
    int n = 0;
    for (const auto& h : tree_.hypotheses) {
      if (h.kind != NodeKind::assumption) continue;
      if (!text.empty()) text += " ";
      text += "Assumption " + std::to_string(++n) + ": " + without_period(h.statement) + " (" +
              token(label_phrase(h.assumed_probability.value_or(Label::lacking_support))) + ").";
      if (!h.assumption_justification.empty()) text += " " + without_period(h.assumption_justification) + ".";
      text += " Collect information that could corroborate or contradict this assumption.";
    }
    if (n == 0) text = "No assumptions are identified.";
    return {"assumptions", SectionKind::assumptions, "Assumptions and missing information", text, "", {}, false};
  }

  void fragment_lines(const std::string& hid, int depth, std::vector<std::string>& lines) const {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const auto* h = tree_.find_hypothesis(hid);
    if (h->kind == NodeKind::assumption) {
      lines.push_back(pad + hid + " " + h->statement + " [assumption: " + optional_phrase(h->assumed_probability) +
                      "]");
      return;
    }
    lines.push_back(pad + hid + " " + h->statement + " [" + value_text(computed_.hypotheses.at(hid)) + "]");
    for (const auto* l : tree_.links_of(hid)) {
      const auto* e = tree_.find_evidence(l->evidence_id);
      lines.push_back(pad + "  " + l->evidence_id + " " + e->name + " [" + std::string(polarity_name(l->polarity)) +
                      "; relevance " + (l->about_fact ? label_phrase(Label::certain) : optional_phrase(l->relevance)) +
                      "; credibility " + optional_phrase(e->credibility) + "; force " +
                      label_phrase(computed_.link_forces.at(l->id)) + "]");
    }
    for (const auto& aid : h->arguments) argument_lines(*tree_.find_argument(aid), depth + 1, lines);
  }

  void argument_lines(const ArgumentNode& a, int depth, std::vector<std::string>& lines) const {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    lines.push_back(pad + a.id + " " + std::string(polarity_name(a.polarity)) + " argument [relevance " +
                    optional_phrase(a.relevance) + "; force " + label_phrase(computed_.argument_forces.at(a.id)) +
                    "]");
    for (const auto& s : a.sub_hypotheses) fragment_lines(s, depth + 1, lines);
  }

  AppendixEntry fragment(const ArgumentNode& a) const {
    AppendixEntry out{"fragment-" + a.id, AppendixKind::fragment, "Argumentation fragment " + a.id, {}};
    argument_lines(a, 0, out.lines);
    return out;
  }

  AppendixEntry evidence_entry(const EvidenceItem& e) const {
    AppendixEntry out{"evidence-" + e.id, AppendixKind::evidence, e.id + " " + e.name, {}};
    if (!e.body.empty()) out.lines.push_back(e.body);
    std::string meta = "Source: " + std::string(e.source_kind ? source_kind_name(*e.source_kind) : "not identified") +
                       "; credibility " + optional_phrase(e.credibility);
    if (!e.credibility_justification.empty()) meta += " (" + without_period(e.credibility_justification) + ")";
    out.lines.push_back(meta + ".");
    return out;
  }

  const AnalysisTree& tree_;
  const ComputedValues& computed_;
};

std::string html_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Wraps text at `width` columns with a hanging indent.
std::string wrap(std::string_view text, std::size_t width, std::string_view indent) {
  std::string out, line(indent);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view word = text.substr(pos, end - pos);
    if (line.size() > indent.size() && line.size() + 1 + word.size() > width) {
      out += line + "\n";
      line = std::string(indent);
    }
    if (line.size() > indent.size()) line += " ";
    line += word;
    pos = end + 1;
  }
  if (line.size() > indent.size()) out += line + "\n";
  return out;
}

std::string links_line(const Report& r, const ReportSection& s, int paragraph) {
  std::string out;
  if (!s.fragment.empty()) out += "Figure for Paragraph " + std::to_string(paragraph) + " (" + s.fragment + ")";
  if (!s.evidence.empty()) {
    if (!out.empty()) out += " ; ";
    out += "Evidence for Paragraph " + std::to_string(paragraph) + ":";
    for (const auto& e : s.evidence) out += " " + r.find_anchor("evidence-" + e)->anchor;
  }
  return out;
}

std::string render_plain(const Report& r) {
  std::ostringstream out;
  out << r.question << "\n";
  int paragraph = 0;
  for (const auto& s : r.sections) {
    ++paragraph;
    out << "\n" << s.title << "\n" << strip_tokens(s.text) << "\n";
    auto links = links_line(r, s, paragraph);
    if (!links.empty()) out << links << "\n";
  }
  if (!r.appendix.empty()) {
    out << "\nAppendix\n";
    for (const auto& a : r.appendix) {
      out << "\n[" << a.anchor << "] " << a.title << "\n";
      for (const auto& l : a.lines) out << l << "\n";
    }
  }
  return out.str();
}

std::string render_print(const Report& r) {
  const std::size_t width = 78;
  std::ostringstream out;
  std::string rule(width, '=');
  out << rule << "\n" << wrap(r.question, width, "") << rule << "\n";
  int paragraph = 0;
  for (const auto& s : r.sections) {
    ++paragraph;
    out << "\n" << paragraph << ". " << s.title << "\n\n";
    out << wrap(strip_tokens(s.text), width, "   ");
    auto links = links_line(r, s, paragraph);
    if (!links.empty()) out << wrap(links, width, "   ");
  }
  auto part = [&](AppendixKind kind, std::string_view heading) {
    bool any = std::any_of(r.appendix.begin(), r.appendix.end(), [&](const AppendixEntry& a) { return a.kind == kind; });
    if (!any) return;
    out << "\n" << std::string(width, '-') << "\n" << heading << "\n" << std::string(width, '-') << "\n";
    for (const auto& a : r.appendix) {
      if (a.kind != kind) continue;
      out << "\n[" << a.anchor << "] " << a.title << "\n";
      for (const auto& l : a.lines) {
        if (kind == AppendixKind::fragment)
          out << "   " << l << "\n";
        else
          out << wrap(l, width, "   ");
      }
    }
  };
  part(AppendixKind::fragment, "Appendix A. Argumentation fragments");
  part(AppendixKind::evidence, "Appendix B. Evidence");
  return out.str();
}

std::string render_markup(const Report& r) {
  std::ostringstream out;
  out << "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n<title>" << html_escape(r.question)
      << "</title>\n</head>\n<body>\n<h1>" << html_escape(r.question) << "</h1>\n";
  int paragraph = 0;
  for (const auto& s : r.sections) {
    ++paragraph;
    std::string anchor = "section-" + s.id;
    std::replace(anchor.begin(), anchor.end(), ':', '-');
    out << "<section id=\"" << anchor << "\">\n<h2>" << html_escape(s.title) << "</h2>\n<p>";
    // Locked tokens become spans so clients can render them read-only.
    std::string_view text = s.text;
    std::size_t pos = 0;
    while (true) {
      auto open = text.find(kTokenOpen, pos);
      if (open == std::string_view::npos) break;
      auto close = text.find(kTokenClose, open);
      out << html_escape(text.substr(pos, open - pos)) << "<span class=\"probability\">"
          << html_escape(text.substr(open + kTokenOpen.size(), close - open - kTokenOpen.size())) << "</span>";
      pos = close + kTokenClose.size();
    }
    out << html_escape(text.substr(pos)) << "</p>\n";
    if (!s.fragment.empty() || !s.evidence.empty()) {
      out << "<p class=\"links\">";
      if (!s.fragment.empty())
        out << "<a href=\"#" << s.fragment << "\">Figure for Paragraph " << paragraph << "</a>";
      if (!s.fragment.empty() && !s.evidence.empty()) out << " ; ";
      if (!s.evidence.empty()) {
        out << "Evidence for Paragraph " << paragraph << ":";
        for (const auto& e : s.evidence)
          out << " <a href=\"#evidence-" << e << "\">" << html_escape(r.find_anchor("evidence-" + e)->title) << "</a>";
      }
      out << "</p>\n";
    }
    out << "</section>\n";
  }
  if (!r.appendix.empty()) {
    out << "<section id=\"appendix\">\n<h2>Appendix</h2>\n";
    for (const auto& a : r.appendix) {
      out << "<div id=\"" << a.anchor << "\">\n<h3>" << html_escape(a.title) << "</h3>\n";
      if (a.kind == AppendixKind::fragment) {
        out << "<pre>";
        for (const auto& l : a.lines) out << html_escape(l) << "\n";
        out << "</pre>\n";
      } else {
        for (const auto& l : a.lines) out << "<p>" << html_escape(l) << "</p>\n";
      }
      out << "</div>\n";
    }
    out << "</section>\n";
  }
  out << "</body>\n</html>\n";
  return out.str();
}

bool contains_no_assumptions_mark(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  return lower.find("no assumptions made") != std::string::npos;
}

}  // namespace

std::vector<std::string> locked_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto open = text.find(kTokenOpen, pos);
    auto close = text.find(kTokenClose, pos);
    if (open == std::string_view::npos) {
      if (close != std::string_view::npos) throw Error(Errc::locked_token, "unbalanced locked-token marker");
      return out;
    }
    if (close == std::string_view::npos || close < open)
      throw Error(Errc::locked_token, "unbalanced locked-token marker");
    auto inner = text.substr(open + kTokenOpen.size(), close - open - kTokenOpen.size());
    if (inner.find(kTokenOpen) != std::string_view::npos)
      throw Error(Errc::locked_token, "nested locked-token marker");
    out.emplace_back(inner);
    pos = close + kTokenClose.size();
  }
}

std::string strip_tokens(std::string_view text) {
  std::string out;
  std::size_t pos = 0;
  while (true) {
    auto open = text.find(kTokenOpen, pos);
    if (open == std::string_view::npos) break;
    auto close = text.find(kTokenClose, open);
    if (close == std::string_view::npos) break;
    out += text.substr(pos, open - pos);
    out += text.substr(open + kTokenOpen.size(), close - open - kTokenOpen.size());
    pos = close + kTokenClose.size();
  }
  out += text.substr(pos);
  return out;
}

std::string_view section_kind_name(SectionKind k) {
  switch (k) {
    case SectionKind::summary: return "summary";
    case SectionKind::argument: return "argument";
    case SectionKind::direct_evidence: return "direct_evidence";
    case SectionKind::assumptions: return "assumptions";
  }
  return "summary";
}

std::optional<SectionKind> parse_section_kind(std::string_view s) {
  for (auto k : {SectionKind::summary, SectionKind::argument, SectionKind::direct_evidence, SectionKind::assumptions})
    if (section_kind_name(k) == s) return k;
  return std::nullopt;
}

const ReportSection* Report::find_section(std::string_view id) const {
  for (const auto& s : sections)
    if (s.id == id) return &s;
  return nullptr;
}

const AppendixEntry* Report::find_anchor(std::string_view anchor) const {
  for (const auto& a : appendix)
    if (a.anchor == anchor) return &a;
  return nullptr;
}

std::string leading_sentence(std::string_view statement, std::string_view phrase) {
  return strip_tokens(leading_with_token(statement, phrase));
}

Report generate_report(const AnalysisTree& tree) {
  if (!tree.computed) throw Error(Errc::not_ready, "the analysis has not been propagated");
  if (auto errors = validate(tree); !errors.empty()) throw StructuralErrors(std::move(errors));
  return Builder(tree).build();
}

Report regenerate_report(const Report& previous, const AnalysisTree& tree) {
  Report next = generate_report(tree);
  for (auto& s : next.sections) {
    const auto* old = previous.find_section(s.id);
    if (!old || !old->edited) continue;
    auto fresh = locked_tokens(s.text);
    auto stale = locked_tokens(old->text);
    if (fresh.size() != stale.size()) continue;
    std::string merged;
    std::string_view text = old->text;
    std::size_t pos = 0;
    for (const auto& t : fresh) {
      auto open = text.find(kTokenOpen, pos);
      auto close = text.find(kTokenClose, open);
      merged += std::string(text.substr(pos, open - pos)) + token(t);
      pos = close + kTokenClose.size();
    }
    merged += text.substr(pos);
    s.text = std::move(merged);
    s.edited = true;
  }
  next.history = previous.history;
  return next;
}

Report edit_section(Report report, std::string_view section_id, std::string new_text, std::string_view author,
                    Timestamp at) {
  auto it = std::find_if(report.sections.begin(), report.sections.end(),
                         [&](const ReportSection& s) { return s.id == section_id; });
  if (it == report.sections.end()) throw Error(Errc::unknown_id, "unknown section id: " + std::string(section_id));
  auto before = locked_tokens(it->text);
  auto after = locked_tokens(new_text);
  if (before != after)
    throw Error(Errc::locked_token, "computed probability phrases cannot be edited; keep the [[...]] tokens "
                                    "unchanged and in order");
  report.history.push_back({it->id, std::string(author), at, it->text, new_text});
  it->text = std::move(new_text);
  it->edited = true;
  return report;
}

std::string_view render_format_name(RenderFormat f) {
  switch (f) {
    case RenderFormat::plain: return "plain";
    case RenderFormat::markup: return "markup";
    case RenderFormat::print: return "print";
  }
  return "plain";
}

std::optional<RenderFormat> parse_render_format(std::string_view s) {
  if (s == "plain" || s == "text") return RenderFormat::plain;
  if (s == "markup" || s == "html") return RenderFormat::markup;
  if (s == "print" || s == "print-ready") return RenderFormat::print;
  return std::nullopt;
}

std::string render(const Report& report, RenderFormat format) {
  switch (format) {
    case RenderFormat::plain: return render_plain(report);
    case RenderFormat::markup: return render_markup(report);
    case RenderFormat::print: return render_print(report);
  }
  throw Error(Errc::domain, "unknown render format");
}

std::string_view checklist_status_name(ChecklistStatus s) { return s == ChecklistStatus::pass ? "pass" : "attention"; }

std::vector<ChecklistEntry> quality_checklist(const AnalysisTree& tree, const Report& report) {
  std::vector<ChecklistEntry> out;
  auto status = [](bool ok) { return ok ? ChecklistStatus::pass : ChecklistStatus::attention; };

  AnalyticsConfig config;
  int developed = developed_hypotheses(tree);
  out.push_back({1, "Hypotheses generation and accuracy of solution", status(developed >= config.min_developed_hypotheses),
                 std::to_string(developed) + " developed alternative hypotheses"});

  auto structure = check_structure(tree);
  int errors = static_cast<int>(std::count_if(structure.begin(), structure.end(),
                                              [](const Finding& f) { return f.severity == Severity::error; }));
  int bias = static_cast<int>(check_confirmation_bias(tree).size());
  out.push_back({2, "Argumentation structure and reasoning", status(errors == 0 && bias == 0),
                 std::to_string(errors) + " structural error(s), " + std::to_string(bias) +
                     " confirmation-bias warning(s)"});

  std::vector<std::string> incomplete;
  for (const auto& e : tree.evidence)
    if (!e.source_kind || !e.credibility || e.credibility_justification.empty()) incomplete.push_back(e.id);
  std::string detail = incomplete.empty() ? "every evidence item has a source, credibility and justification"
                                          : "incomplete source or credibility:";
  for (const auto& id : incomplete) detail += " " + id;
  out.push_back({3, "Identification of sources and assessment of credibility of evidence", status(incomplete.empty()),
                 detail});

  int assumptions = static_cast<int>(std::count_if(tree.hypotheses.begin(), tree.hypotheses.end(),
                                                   [](const HypothesisNode& h) { return h.kind == NodeKind::assumption; }));
  const auto* section = report.find_section("assumptions");
  bool marked = section && contains_no_assumptions_mark(section->text);
  out.push_back({4, "Identification of key missing information and assumptions", status(assumptions > 0 || marked),
                 assumptions > 0 ? std::to_string(assumptions) + " assumption(s) listed"
                                 : (marked ? "marked as no assumptions made" : "no assumptions listed")});
  return out;
}

}  // namespace wigmore
