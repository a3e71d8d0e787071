#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bracelab/enumeration.hpp"
#include "bracelab/extraspecial.hpp"
#include "bracelab/series.hpp"
#include "bracelab/ybe.hpp"

namespace bracelab {

using json = nlohmann::json;

/// Interchange document: explicit full tables plus optional labels and
/// provenance. Tables are validated on load.
struct BraceDocument {
  FiniteBrace brace;
  std::vector<std::string> labels;
  json meta;
};

inline BraceDocument document_from_brace(FiniteBrace br, json meta = json::object()) {
  std::vector<std::string> labels;
  labels.reserve(br.order());
  for (int a = 0; a < br.order(); ++a) labels.push_back(br.label(a));
  if (br.codec.radices.size() > 1 ||
      (br.codec.radices.size() == 1 && br.codec.radices[0] != br.order()))
    meta["radices"] = br.codec.radices;
  return {std::move(br), std::move(labels), std::move(meta)};
}

inline json document_to_json(const BraceDocument& doc) {
  int n = doc.brace.order();
  json add = json::array(), mul = json::array();
  for (int a = 0; a < n; ++a) {
    json ra = json::array(), rm = json::array();
    for (int b = 0; b < n; ++b) {
      ra.push_back(doc.brace.add(a, b));
      rm.push_back(doc.brace.mul(a, b));
    }
    add.push_back(std::move(ra));
    mul.push_back(std::move(rm));
  }
  json j;
  j["order"] = n;
  j["add"] = std::move(add);
  j["mul"] = std::move(mul);
  if (!doc.labels.empty()) j["labels"] = doc.labels;
  if (!doc.meta.empty()) j["meta"] = doc.meta;
  return j;
}

inline BraceDocument load_document(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("add") ||
      !j.contains("mul"))
    throw std::invalid_argument("document needs order, add and mul fields");
  int n = j.at("order").get<int>();
  auto read_table = [&](const char* key) {
    const json& rows = j.at(key);
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
      throw std::invalid_argument(std::string(key) + " table has wrong shape");
    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (const json& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw std::invalid_argument(std::string(key) + " table has wrong shape");
      for (const json& v : row) flat.push_back(v.get<int>());
    }
    return flat;
  };
  FiniteBrace br = FiniteBrace::validate(n, read_table("add"), read_table("mul"));
  BraceDocument doc{std::move(br), {}, json::object()};
  if (j.contains("labels")) {
    doc.labels = j.at("labels").get<std::vector<std::string>>();
    if (static_cast<int>(doc.labels.size()) != n)
      throw std::invalid_argument("labels length differs from order");
  }
  if (j.contains("meta") && j.at("meta").is_object()) {
    doc.meta = j.at("meta");
    if (doc.meta.contains("radices")) {
      std::vector<int> radices = doc.meta.at("radices").get<std::vector<int>>();
      TupleCodec codec{radices};
      if (codec.size() == n && !radices.empty()) doc.brace.codec = codec;
    }
  }
  if (doc.labels.empty()) {
    for (int a = 0; a < n; ++a) doc.labels.push_back(doc.brace.label(a));
  }
  return doc;
}

inline json form_to_json(const BilinearForm& phi) {
  json j;
  j["p"] = phi.p();
  j["dim"] = phi.dim();
  j["matrix"] = phi.matrix();
  return j;
}

inline BilinearForm load_form(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("dim") ||
      !j.contains("matrix"))
    throw std::invalid_argument("form file needs p, dim and matrix fields");
  int p = j.at("p").get<int>();
  int dim = j.at("dim").get<int>();
  auto matrix = j.at("matrix").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(matrix.size()) != dim)
    throw std::invalid_argument("form matrix does not match dim");
  BilinearForm phi(p, std::move(matrix));
  if (phi.dim() != dim) throw std::invalid_argument("form matrix does not match dim");
  return phi;
}

/// Everything the analyzer derives from one brace. A pure function of the
/// input document.
struct AnalysisReport {
  int order = 0;
  std::vector<int> additive_shape;
  bool abelian = false;
  std::optional<std::vector<int>> multiplicative_shape;  // abelian case only
  SubsetMask socle, fix, centre;
  SeriesChain left_series, right_series, socle_series, central_series,
      fix_series;
  NilpotencyReport nilpotency;
  DedekindResult dedekind;
  std::optional<ExtraspecialCertificate> extraspecial;
  std::optional<FamilySpec> classification;
  SolutionReport ybe;
};

inline AnalysisReport analyze_brace(const FiniteBrace& br, int cap = 128) {
  if (br.order() > cap)
    throw cap_exceeded("analysis at order " + std::to_string(br.order()) +
                       " exceeds cap " + std::to_string(cap));
  AnalysisReport rep;
  rep.order = br.order();
  rep.additive_shape = br.additive_shape();
  rep.abelian = br.is_abelian();
  bool mul_abelian = true;
  for (int a = 0; a < br.order() && mul_abelian; ++a)
    for (int b = a + 1; b < br.order(); ++b)
      if (br.mul(a, b) != br.mul(b, a)) {
        mul_abelian = false;
        break;
      }
  if (mul_abelian)
    rep.multiplicative_shape = abelian_invariant_factors(
        br.order(), [&br](int a, int b) { return br.mul(a, b); });
  SocFixCentre sfc = socle_fix_centre(br);
  rep.socle = sfc.soc;
  rep.fix = sfc.fix;
  rep.centre = sfc.centre;
  rep.left_series = compute_series(br, SeriesKind::left);
  rep.right_series = compute_series(br, SeriesKind::right);
  rep.socle_series = compute_series(br, SeriesKind::socle);
  rep.central_series = compute_series(br, SeriesKind::central);
  rep.fix_series = compute_series(br, SeriesKind::fix);
  rep.nilpotency = nilpotency_report(br);
  rep.dedekind = is_dedekind(br, cap);
  rep.extraspecial = recognize_extraspecial(br);
  if (rep.extraspecial && rep.extraspecial->strong)
    rep.classification = classify_strong(br).spec;
  rep.ybe = check_solution(associated_solution(br));
  return rep;
}

inline const char* series_kind_name(SeriesKind k) {
  switch (k) {
    case SeriesKind::left: return "left";
    case SeriesKind::right: return "right";
    case SeriesKind::socle: return "socle";
    case SeriesKind::central: return "central";
    default: return "fix";
  }
}

inline json mask_to_json(const SubsetMask& m) {
  return json(m.elements());
}

inline json series_to_json(const SeriesChain& s) {
  json terms = json::array();
  for (const SubsetMask& t : s.terms) terms.push_back(mask_to_json(t));
  json j;
  j["kind"] = series_kind_name(s.kind);
  j["terms"] = std::move(terms);
  j["reached_terminal"] = s.reached_terminal;
  j["length"] = s.length();
  return j;
}

inline json report_to_json(const AnalysisReport& rep) {
  json j;
  j["order"] = rep.order;
  j["additive_shape"] = rep.additive_shape;
  j["abelian"] = rep.abelian;
  if (rep.multiplicative_shape)
    j["multiplicative_shape"] = *rep.multiplicative_shape;
  j["socle"] = mask_to_json(rep.socle);
  j["fix"] = mask_to_json(rep.fix);
  j["centre"] = mask_to_json(rep.centre);
  j["series"] = {series_to_json(rep.left_series),
                 series_to_json(rep.right_series),
                 series_to_json(rep.socle_series),
                 series_to_json(rep.central_series),
                 series_to_json(rep.fix_series)};
  json nil;
  nil["left_nilpotent"] = rep.nilpotency.left_nilpotent;
  nil["right_nilpotent"] = rep.nilpotency.right_nilpotent;
  nil["centrally_nilpotent"] = rep.nilpotency.centrally_nilpotent;
  if (rep.nilpotency.left_nilpotent) nil["left_level"] = rep.nilpotency.left_level;
  if (rep.nilpotency.right_nilpotent)
    nil["right_level"] = rep.nilpotency.right_level;
  if (rep.nilpotency.centrally_nilpotent)
    nil["central_level"] = rep.nilpotency.central_level;
  if (rep.nilpotency.multipermutation_level)
    nil["multipermutation_level"] = *rep.nilpotency.multipermutation_level;
  j["nilpotency"] = std::move(nil);
  json ded;
  ded["dedekind"] = rep.dedekind.dedekind;
  if (rep.dedekind.witness)
    ded["witness"] = mask_to_json(rep.dedekind.witness->mask);
  j["dedekind"] = std::move(ded);
  if (rep.extraspecial) {
    json ex;
    ex["c"] = rep.extraspecial->c;
    ex["C"] = mask_to_json(rep.extraspecial->C);
    ex["strong"] = rep.extraspecial->strong;
    if (rep.classification) {
      ex["family"] = family_name(rep.classification->family);
      ex["m"] = rep.classification->m;
      ex["p"] = rep.classification->p;
    }
    j["extraspecial"] = std::move(ex);
  }
  json ybe;
  ybe["braid"] = rep.ybe.braid;
  ybe["involutive"] = rep.ybe.involutive;
  ybe["nondegenerate"] = rep.ybe.nondegenerate;
  j["ybe"] = std::move(ybe);
  return j;
}

inline std::string join_labels(const std::vector<std::string>& labels,
                               const SubsetMask& mask) {
  std::string out = "{";
  bool first = true;
  mask.for_each([&](int a) {
    if (!first) out += ", ";
    out += labels[a];
    first = false;
  });
  return out + "}";
}

inline std::string shape_display(const std::vector<int>& factors) {
  if (factors.empty()) return "C1";
  std::string out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " x ";
    out += "C" + std::to_string(factors[i]);
  }
  return out;
}

inline std::string report_to_text(const AnalysisReport& rep,
                                  const std::vector<std::string>& labels) {
  std::string out;
  out += "order: " + std::to_string(rep.order) + "\n";
  out += "additive group: " + shape_display(rep.additive_shape) + "\n";
  out += std::string("abelian: ") + (rep.abelian ? "yes" : "no") + "\n";
  if (rep.multiplicative_shape)
    out += "multiplicative group: " + shape_display(*rep.multiplicative_shape) + "\n";
  else
    out += "multiplicative group: non-abelian, order " +
           std::to_string(rep.order) + "\n";
  out += "socle: " + join_labels(labels, rep.socle) + "\n";
  out += "fix: " + join_labels(labels, rep.fix) + "\n";
  out += "centre: " + join_labels(labels, rep.centre) + "\n";
  for (const SeriesChain* s :
       {&rep.left_series, &rep.right_series, &rep.socle_series,
        &rep.central_series, &rep.fix_series}) {
    out += std::string(series_kind_name(s->kind)) + " series sizes:";
    for (const SubsetMask& t : s->terms)
      out += " " + std::to_string(t.count());
    out += s->reached_terminal ? " (terminal)" : " (stalls)";
    out += "\n";
  }
  const NilpotencyReport& nil = rep.nilpotency;
  out += "left nilpotent: " +
         std::string(nil.left_nilpotent
                         ? "yes, level " + std::to_string(nil.left_level)
                         : "no") +
         "\n";
  out += "right nilpotent: " +
         std::string(nil.right_nilpotent
                         ? "yes, level " + std::to_string(nil.right_level)
                         : "no") +
         "\n";
  out += "centrally nilpotent: " +
         std::string(nil.centrally_nilpotent
                         ? "yes, level " + std::to_string(nil.central_level)
                         : "no") +
         "\n";
  if (nil.multipermutation_level)
    out += "multipermutation level: " +
           std::to_string(*nil.multipermutation_level) + "\n";
  out += std::string("dedekind: ") + (rep.dedekind.dedekind ? "true" : "false");
  if (rep.dedekind.witness)
    out += ", non-ideal subbrace " +
           join_labels(labels, rep.dedekind.witness->mask);
  out += "\n";
  if (rep.extraspecial) {
    out += "extraspecial: yes, c = " + labels[rep.extraspecial->c] +
           std::string(rep.extraspecial->strong ? ", strong" : ", not strong") +
           "\n";
    if (rep.classification)
      out += "classification: " + rep.classification->display() + "\n";
  } else {
    out += "extraspecial: no\n";
  }
  out += "ybe checks: braid=" + std::string(rep.ybe.braid ? "true" : "false") +
         " involutive=" + (rep.ybe.involutive ? "true" : "false") +
         " nondegenerate=" + (rep.ybe.nondegenerate ? "true" : "false") + "\n";
  return out;
}

}  // namespace bracelab
