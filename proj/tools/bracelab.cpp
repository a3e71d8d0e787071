// bracelab: construct, analyze and verify finite left braces.
//
// Exit codes: 0 success / property true, 1 checked property false,
// 2 invalid input, 3 resource cap exceeded, 70 internal engine error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bracelab/bracelab.hpp"

namespace {

constexpr int kExitProperty = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCap = 3;
constexpr int kExitEngine = 70;

int env_max_order(int fallback) {
  if (const char* v = std::getenv("BRACELAB_MAX_ORDER")) {
    try {
      int n = std::stoi(v);
      if (n >= 1) return n;
    } catch (...) {
    }
  }
  return fallback;
}

bracelab::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  bracelab::json j;
  in >> j;
  return j;
}

bracelab::BraceDocument load_document_file(const std::string& path) {
  return bracelab::load_document(read_json_file(path));
}

// cap check before the O(n^3) table validation
bracelab::BraceDocument load_document_file(const std::string& path, int cap) {
  bracelab::json j = read_json_file(path);
  if (j.is_object() && j.contains("order") && j.at("order").is_number() &&
      j.at("order").get<long long>() > cap)
    throw bracelab::cap_exceeded("document order exceeds cap " +
                                 std::to_string(cap));
  return bracelab::load_document(j);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite left brace engine"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a brace document");
  std::string family_name_arg, abelian_arg, form_path, out_path;
  std::vector<std::string> product_paths;
  int m_arg = -1, p_arg = -1;
  construct->add_option("--family", family_name_arg, "E0, E1 or E2");
  construct->add_option("--m", m_arg, "family parameter m");
  construct->add_option("--p", p_arg, "family prime p");
  construct->add_option("--abelian", abelian_arg,
                        "cyclic factors, e.g. \"4,2\"");
  construct->add_option("--from-form", form_path, "bilinear form JSON file");
  construct->add_option("--product", product_paths, "two brace documents")
      ->expected(2);
  construct->add_option("-o,--output", out_path, "output file (default stdout)");

  // validate
  auto* validate = app.add_subcommand("validate", "check brace axioms");
  std::string validate_path;
  validate->add_option("file", validate_path, "brace document")->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "full structural report");
  std::string analyze_path;
  bool analyze_json = false;
  int analyze_cap = 0;
  analyze->add_option("file", analyze_path, "brace document")->required();
  analyze->add_flag("--json", analyze_json, "machine-readable output");
  analyze->add_option("--max-order", analyze_cap,
                      "raise the analysis order cap");

  // subbraces
  auto* subbraces = app.add_subcommand("subbraces", "list all subbraces");
  std::string subbraces_path;
  bool subbraces_json = false;
  int subbraces_cap = 0;
  subbraces->add_option("file", subbraces_path, "brace document")->required();
  subbraces->add_flag("--json", subbraces_json, "machine-readable output");
  subbraces->add_option("--max-order", subbraces_cap,
                        "raise the enumeration order cap");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate",
                                       "all braces on an additive group");
  std::string enum_spec;
  bool enum_iso = false, enum_json = false;
  int enum_cap = 0;
  enumerate->add_option("--additive", enum_spec, "cyclic factors, e.g. \"2,2\"")
      ->required();
  enumerate->add_flag("--up-to-iso", enum_iso, "deduplicate up to isomorphism");
  enumerate->add_flag("--json", enum_json, "emit documents as a JSON array");
  enumerate->add_option("--max-order", enum_cap,
                        "raise the enumeration order cap");

  // classify
  auto* classify = app.add_subcommand("classify",
                                      "extraspecial recognition and family");
  std::string classify_path;
  bool classify_json = false;
  classify->add_option("file", classify_path, "brace document")->required();
  classify->add_flag("--json", classify_json, "machine-readable output");

  // ybe
  auto* ybe = app.add_subcommand("ybe", "associated solution checks");
  std::string ybe_path;
  bool ybe_json = false;
  ybe->add_option("file", ybe_path, "brace document")->required();
  ybe->add_flag("--json", ybe_json, "machine-readable output");

  // verify
  auto* verify = app.add_subcommand("verify", "run a theorem harness");
  std::string theorem;
  int verify_max_order = 8;
  bool verify_json = false;
  verify->add_option("--theorem", theorem, "harness name")->required();
  verify->add_option("--max-order", verify_max_order,
                     "enumeration bound for sweeps");
  verify->add_flag("--json", verify_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (construct->parsed()) {
      std::optional<bracelab::FiniteBrace> brace;
      bracelab::json meta = bracelab::json::object();
      int cap = env_max_order(bracelab::kDefaultMaxOrder);
      if (!family_name_arg.empty()) {
        bracelab::Family fam;
        if (family_name_arg == "E0") fam = bracelab::Family::E0;
        else if (family_name_arg == "E1") fam = bracelab::Family::E1;
        else if (family_name_arg == "E2") fam = bracelab::Family::E2;
        else throw std::invalid_argument("unknown family " + family_name_arg);
        if (m_arg < 0 || p_arg < 0)
          throw std::invalid_argument("--family needs --m and --p");
        bracelab::FamilySpec spec{fam, m_arg, p_arg};
        brace = bracelab::family_brace(spec);
        meta["construction"] = "family";
        meta["family"] = family_name_arg;
        meta["m"] = m_arg;
        meta["p"] = p_arg;
      } else if (!abelian_arg.empty()) {
        auto g = bracelab::AbelianGroupSpec::parse(abelian_arg);
        if (g.order() > cap)
          throw bracelab::cap_exceeded("abelian order exceeds cap");
        brace = bracelab::abelian_brace(g);
        meta["construction"] = "abelian";
        meta["factors"] = g.factors;
      } else if (!form_path.empty()) {
        bracelab::BilinearForm phi = bracelab::load_form(read_json_file(form_path));
        brace = bracelab::brace_from_form(phi, cap);
        meta["construction"] = "form";
        meta["p"] = phi.p();
        meta["dim"] = phi.dim();
        meta["matrix"] = phi.matrix();
      } else if (!product_paths.empty()) {
        bracelab::BraceDocument a = load_document_file(product_paths[0]);
        bracelab::BraceDocument b = load_document_file(product_paths[1]);
        brace = bracelab::direct_product(a.brace, b.brace, cap);
        meta["construction"] = "product";
      } else {
        throw std::invalid_argument(
            "construct needs one of --family, --abelian, --from-form, --product");
      }
      bracelab::BraceDocument doc =
          bracelab::document_from_brace(std::move(*brace), std::move(meta));
      emit(bracelab::document_to_json(doc).dump(2), out_path);
      return 0;
    }

    if (validate->parsed()) {
      try {
        load_document_file(validate_path);
      } catch (const bracelab::validation_error& e) {
        std::cout << "invalid: " << e.what() << "\n";
        return kExitProperty;
      }
      std::cout << "valid\n";
      return 0;
    }

    if (analyze->parsed()) {
      int cap = analyze_cap > 0 ? analyze_cap : env_max_order(128);
      bracelab::BraceDocument doc = load_document_file(analyze_path, cap);
      bracelab::AnalysisReport rep = bracelab::analyze_brace(doc.brace, cap);
      if (analyze_json)
        emit(bracelab::report_to_json(rep).dump(2), "");
      else
        emit(bracelab::report_to_text(rep, doc.labels), "");
      return 0;
    }

    if (subbraces->parsed()) {
      int cap = subbraces_cap > 0 ? subbraces_cap : env_max_order(128);
      bracelab::BraceDocument doc = load_document_file(subbraces_path, cap);
      auto subs = bracelab::all_subbraces(doc.brace, cap);
      if (subbraces_json) {
        bracelab::json arr = bracelab::json::array();
        for (const auto& s : subs) {
          bracelab::json j;
          j["elements"] = s.mask.elements();
          j["size"] = s.mask.count();
          j["lambda_invariant"] = s.is_lambda_invariant;
          j["ideal"] = s.is_ideal;
          arr.push_back(std::move(j));
        }
        emit(arr.dump(2), "");
      } else {
        std::cout << subs.size() << " subbraces\n";
        for (const auto& s : subs) {
          std::cout << (s.is_ideal ? "ideal    " : "subbrace ")
                    << bracelab::join_labels(doc.labels, s.mask) << "\n";
        }
      }
      return 0;
    }

    if (enumerate->parsed()) {
      int cap = enum_cap > 0 ? enum_cap : env_max_order(16);
      auto g = bracelab::AbelianGroupSpec::parse(enum_spec);
      auto braces = bracelab::enumerate_braces(g, enum_iso, cap);
      if (enum_json) {
        bracelab::json arr = bracelab::json::array();
        for (auto& br : braces) {
          bracelab::json meta;
          meta["construction"] = "enumeration";
          meta["additive"] = g.factors;
          arr.push_back(bracelab::document_to_json(
              bracelab::document_from_brace(std::move(br), std::move(meta))));
        }
        emit(arr.dump(2), "");
      } else {
        std::cout << braces.size() << " braces on " << g.display()
                  << (enum_iso ? " up to isomorphism" : "") << "\n";
        for (size_t i = 0; i < braces.size(); ++i) {
          const auto& br = braces[i];
          bool mul_abelian = true;
          for (int a = 0; a < br.order() && mul_abelian; ++a)
            for (int b = a + 1; b < br.order(); ++b)
              if (br.mul(a, b) != br.mul(b, a)) {
                mul_abelian = false;
                break;
              }
          std::cout << "#" << i << ": multiplicative group ";
          if (mul_abelian)
            std::cout << bracelab::shape_display(bracelab::abelian_invariant_factors(
                br.order(), [&br](int a, int b) { return br.mul(a, b); }));
          else
            std::cout << "non-abelian of order " << br.order();
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (classify->parsed()) {
      bracelab::BraceDocument doc = load_document_file(classify_path);
      auto cert = bracelab::recognize_extraspecial(doc.brace);
      if (!cert) {
        if (classify_json)
          emit(bracelab::json{{"extraspecial", false}}.dump(2), "");
        else
          std::cout << "not extraspecial\n";
        return kExitProperty;
      }
      bracelab::json j;
      j["extraspecial"] = true;
      j["c"] = cert->c;
      j["strong"] = cert->strong;
      if (!cert->strong) {
        if (classify_json)
          emit(j.dump(2), "");
        else
          std::cout << "extraspecial with c = " << doc.labels[cert->c]
                    << ", not strong; no family classification\n";
        return kExitProperty;
      }
      bracelab::Classification cls = bracelab::classify_strong(doc.brace);
      j["family"] = bracelab::family_name(cls.spec.family);
      j["m"] = cls.spec.m;
      j["p"] = cls.spec.p;
      j["witness"] = cls.witness.map;
      if (classify_json) {
        emit(j.dump(2), "");
      } else {
        std::cout << "strong extraspecial with c = " << doc.labels[cert->c]
                  << "\nisomorphic to " << cls.spec.display()
                  << " (verified witness)\n";
      }
      return 0;
    }

    if (ybe->parsed()) {
      bracelab::BraceDocument doc = load_document_file(ybe_path);
      bracelab::SolutionReport rep =
          bracelab::check_solution(bracelab::associated_solution(doc.brace));
      if (ybe_json) {
        bracelab::json j;
        j["braid"] = rep.braid;
        j["involutive"] = rep.involutive;
        j["nondegenerate"] = rep.nondegenerate;
        emit(j.dump(2), "");
      } else {
        std::cout << "braid: " << (rep.braid ? "true" : "false")
                  << "\ninvolutive: " << (rep.involutive ? "true" : "false")
                  << "\nnondegenerate: "
                  << (rep.nondegenerate ? "true" : "false") << "\n";
      }
      return rep.all() ? 0 : kExitProperty;
    }

    if (verify->parsed()) {
      std::vector<bracelab::CheckResult> results =
          bracelab::run_verify(theorem, verify_max_order);
      bool all_pass = true;
      bracelab::json arr = bracelab::json::array();
      for (const auto& r : results) {
        all_pass = all_pass && r.passed;
        if (verify_json) {
          bracelab::json j;
          j["name"] = r.name;
          j["passed"] = r.passed;
          j["instances"] = r.instances;
          j["failures"] = r.failures;
          j["seconds"] = r.seconds;
          arr.push_back(std::move(j));
        } else {
          std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name << " ("
                    << r.instances << " instances, " << r.seconds << " s)\n";
          for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        }
      }
      if (verify_json) emit(arr.dump(2), "");
      return all_pass ? 0 : kExitProperty;
    }
  } catch (const bracelab::cap_exceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const bracelab::internal_error& e) {
    std::cerr << "engine error: " << e.what() << "\n";
    return kExitEngine;
  } catch (const bracelab::validation_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}
