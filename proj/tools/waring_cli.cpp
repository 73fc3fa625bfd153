// Command-line front end: exact Waring rank computations, decomposition
// families, structure classification, and certificates, with JSON reports on
// standard output.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "waring/builders.hpp"
#include "waring/cert.hpp"
#include "waring/json_io.hpp"

using namespace waring;

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::TooLarge:
    case ErrorCode::SearchBudgetExceeded:
      return 3;
    case ErrorCode::InfeasibleParameters:
    case ErrorCode::CurveTooSmall:
    case ErrorCode::FamilyEmpty:
    case ErrorCode::NonSplitApolar:
    case ErrorCode::NoSplitWitness:
    case ErrorCode::DegenerateProjection:
      return 4;
    case ErrorCode::NotMinimalCertificate:
    case ErrorCode::PreconditionFailed:
    case ErrorCode::HypothesisFailed:
      return 5;
    default:
      return 2;
  }
}

FieldSpec parse_field(const std::string& text) {
  if (text == "rational" || text == "Q" || text == "q")
    return FieldSpec::rational();
  if (text.rfind("q=", 0) == 0 || text.rfind("p=", 0) == 0)
    return FieldSpec::prime(std::stoull(text.substr(2)));
  fail(ErrorCode::ParseError,
       "field must be 'rational' or 'q=<prime>', got '" + text + "'");
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
  }
  return j;
}

struct Emitter {
  std::string command;
  std::string output_path;
  bool with_timing = true;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  int emit(Json inputs, Json result) {
    Json report;
    report["command"] = command;
    report["inputs"] = std::move(inputs);
    report["result"] = std::move(result);
    if (with_timing)
      report["timing_ms"] =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - start)
              .count();
    std::string text = report.dump(2);
    if (!output_path.empty()) {
      std::ofstream out(output_path);
      out << text << "\n";
    }
    std::cout << text << "\n";
    return 0;
  }
};

BinaryForm parse_binary(const std::string& text, const FieldSpec& field) {
  HomogeneousForm f = parse_form(text, field, 1);
  return BinaryForm::from_homogeneous(f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symmetric-rank decomposition toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string field_text = "q=10007";
  std::string form_text, binary_text, input_path, pair_a, pair_b, output_path;
  std::string divisor_text, case_name = "a";
  std::vector<int> space_rd;
  std::uint64_t seed = 0, oracle_budget = 10000000ull;
  std::size_t count = 10;
  int enumerate_size = 0;
  int d_param = 6, r_param = 2, on_count = 0, off_count = 0;
  bool no_timing = false, json_flag = false;

  app.add_flag("--no-timing", no_timing,
               "omit the timing field (byte-identical reruns)");
  app.add_flag("--json", json_flag, "reports are always JSON; accepted for compatibility");

  auto add_field = [&](CLI::App* cmd) {
    cmd->add_option("--field", field_text, "'rational' or 'q=<prime>'");
  };

  CLI::App* rank = app.add_subcommand("rank", "symmetric rank of a form");
  add_field(rank);
  rank->add_option("--binary", binary_text, "binary form in x0, x1");
  rank->add_option("--form", form_text, "form in x0..xr (with --space)");
  rank->add_option("--space", space_rd, "ambient r and degree d")->expected(2);
  rank->add_option("--oracle-budget", oracle_budget, "subset cap");

  CLI::App* decomp = app.add_subcommand("decompose",
                                        "Sylvester decomposition of a binary form");
  add_field(decomp);
  decomp->add_option("--binary", binary_text, "binary form in x0, x1")
      ->required();
  decomp->add_option("--output", output_path, "also write the report here");

  CLI::App* classify = app.add_subcommand("classify",
                                          "structural case of a decomposition");
  classify->add_option("--input", input_path, "decomposition JSON")->required();

  CLI::App* family = app.add_subcommand("family",
                                        "exchange family through a decomposition");
  family->add_option("--input", input_path, "decomposition JSON")->required();
  family->add_option("--count", count, "members requested");
  family->add_option("--seed", seed, "sampling seed");

  CLI::App* certify = app.add_subcommand("certify", "certificates");
  certify->add_option("--input", input_path, "single decomposition JSON");
  certify->add_option("--pair", pair_a, "first decomposition JSON");
  certify->add_option("--with", pair_b, "second decomposition JSON");
  certify->add_option("--divisor", divisor_text,
                      "hypersurface equation for the residual split");

  CLI::App* oracle = app.add_subcommand("oracle",
                                        "exhaustive rank / decomposition search");
  add_field(oracle);
  oracle->add_option("--form", form_text, "form in x0..xr")->required();
  oracle->add_option("--space", space_rd, "ambient r and degree d")->expected(2);
  oracle->add_option("--enumerate", enumerate_size,
                     "enumerate decompositions of this size");
  oracle->add_option("--oracle-budget", oracle_budget, "subset cap");

  CLI::App* example = app.add_subcommand("example-i1",
                                         "boundary sharpness instance on a plane cubic");
  add_field(example);
  example->add_option("--d", d_param, "even degree >= 6");
  example->add_option("--seed", seed, "sampling seed");

  CLI::App* gen = app.add_subcommand("gen", "build a structural-case instance");
  add_field(gen);
  gen->add_option("--case", case_name, "a | b | c")->required();
  gen->add_option("--d", d_param, "degree");
  gen->add_option("--r", r_param, "ambient dimension");
  gen->add_option("--on", on_count, "points on the curve (cases a, b)");
  gen->add_option("--off", off_count, "points off the curve (cases a, b)");
  gen->add_option("--seed", seed, "sampling seed");
  gen->add_option("--output", output_path, "also write the report here");

  CLI11_PARSE(app, argc, argv);

  Emitter out;
  out.with_timing = !no_timing;
  out.output_path = output_path;

  try {
    if (rank->parsed()) {
      out.command = "rank";
      FieldSpec field = parse_field(field_text);
      Json inputs{{"field", field_to_json(field)}};
      if (!binary_text.empty()) {
        BinaryForm f = parse_binary(binary_text, field);
        BinaryAnalysis a = sylvester_analyze(f);
        inputs["binary"] = binary_text;
        Json result{{"rank", a.rank},
                    {"border_rank", a.border_rank},
                    {"method", "sylvester"},
                    {"family_dim", a.family_dim}};
        return out.emit(inputs, result);
      }
      if (form_text.empty() || space_rd.size() != 2)
        fail(ErrorCode::ParseError, "rank needs --binary, or --form with --space");
      VeroneseSpace space(space_rd[0], space_rd[1]);
      HomogeneousForm f = parse_form(form_text, field, space.r());
      if (f.degree() != space.d())
        fail(ErrorCode::ParseError, "form degree does not match --space");
      AmbientVector vec;
      for (const auto& m : space.monomials()) vec.push_back(f.coeff(m));
      OracleBudget budget;
      budget.max_subsets = oracle_budget;
      budget.max_points = 2000;
      inputs["form"] = form_text;
      inputs["space"] = Json{{"r", space.r()}, {"d", space.d()}};
      int rk = brute_rank(vec, space, field, budget);
      return out.emit(inputs, Json{{"rank", rk}, {"method", "oracle"}});
    }

    if (decomp->parsed()) {
      out.command = "decompose";
      FieldSpec field = parse_field(field_text);
      BinaryForm f = parse_binary(binary_text, field);
      BinaryAnalysis a = sylvester_analyze(f);
      BinaryDecomposition bd = decompose_with_witness(f, a.witness);
      VeroneseSpace space(1, f.degree());
      Decomposition dec{space, f.coeffs(), bd.nodes, bd.weights};
      Certificate cert = verify_decomposition(dec);
      Json result{{"analysis", analysis_to_json(a)},
                  {"decomposition", decomposition_to_json(dec)},
                  {"certificate", certificate_to_json(cert)}};
      int rc = out.emit(Json{{"field", field_to_json(field)},
                             {"binary", binary_text}},
                        result);
      return cert.valid ? rc : 5;
    }

    if (classify->parsed()) {
      out.command = "classify";
      Decomposition dec = decomposition_from_json(load_json(input_path));
      StructureReport rep = classify_decomposition(dec);
      return out.emit(Json{{"input", input_path}}, report_to_json(rep));
    }

    if (family->parsed()) {
      out.command = "family";
      Decomposition dec = decomposition_from_json(load_json(input_path));
      StructureReport rep = classify_decomposition(dec);
      std::vector<Decomposition> fam;
      if (rep.kind == StructureCase::A || rep.kind == StructureCase::B)
        fam = generate_family(dec, rep, count, seed);
      else if (rep.kind == StructureCase::C)
        fam = case_c_family(dec, rep, count, seed);
      else
        fail(ErrorCode::FamilyEmpty,
             "no exchange family: the decomposition classifies as " +
                 std::string(structure_case_name(rep.kind)));
      Json members = Json::array();
      bool all_valid = true;
      for (const auto& m : fam) {
        Certificate cert = verify_decomposition(m);
        all_valid = all_valid && cert.valid;
        members.push_back(Json{{"decomposition", decomposition_to_json(m)},
                               {"certificate", certificate_to_json(cert)}});
      }
      Json result{{"case", structure_case_name(rep.kind)},
                  {"count", members.size()},
                  {"members", std::move(members)}};
      int rc = out.emit(Json{{"input", input_path},
                             {"count", count},
                             {"seed", seed}},
                        result);
      return all_valid ? rc : 5;
    }

    if (certify->parsed()) {
      out.command = "certify";
      if (!pair_a.empty()) {
        if (pair_b.empty())
          fail(ErrorCode::ParseError, "--pair needs --with for the second file");
        Decomposition a = decomposition_from_json(load_json(pair_a));
        Decomposition b = decomposition_from_json(load_json(pair_b));
        Json result;
        Certificate v1 = lemma_v1_check(a, b);
        result["lemma_v1"] = certificate_to_json(v1);
        int defect = hilbert_defect(PointSet::union_of(a.points, b.points),
                                    a.degree());
        result["union_defect"] = defect;
        bool valid = v1.valid;
        if (!divisor_text.empty()) {
          FieldSpec field = a.target.front().field();
          Hypersurface div(parse_form(divisor_text, field, a.space.r()));
          Certificate v2 = lemma_v2_split(a, b, div);
          result["lemma_v2"] = certificate_to_json(v2);
          valid = valid && v2.valid;
        }
        int rc = out.emit(Json{{"pair", Json::array({pair_a, pair_b})}},
                          result);
        return valid ? rc : 5;
      }
      if (input_path.empty())
        fail(ErrorCode::ParseError, "certify needs --input or --pair/--with");
      Decomposition dec = decomposition_from_json(load_json(input_path));
      Certificate cert = verify_decomposition(dec);
      int rc = out.emit(Json{{"input", input_path}},
                        certificate_to_json(cert));
      return cert.valid ? rc : 5;
    }

    if (oracle->parsed()) {
      out.command = "oracle";
      FieldSpec field = parse_field(field_text);
      if (space_rd.size() != 2)
        fail(ErrorCode::ParseError, "oracle needs --space r d");
      VeroneseSpace space(space_rd[0], space_rd[1]);
      HomogeneousForm f = parse_form(form_text, field, space.r());
      if (f.degree() != space.d())
        fail(ErrorCode::ParseError, "form degree does not match --space");
      AmbientVector vec;
      for (const auto& m : space.monomials()) vec.push_back(f.coeff(m));
      OracleBudget budget;
      budget.max_subsets = oracle_budget;
      budget.max_points = 2000;
      Json inputs{{"field", field_to_json(field)},
                  {"form", form_text},
                  {"space", Json{{"r", space.r()}, {"d", space.d()}}}};
      if (enumerate_size > 0) {
        auto sets = enumerate_S(vec, enumerate_size, space, field, budget);
        Json arr = Json::array();
        for (const auto& s : sets) arr.push_back(point_set_to_json(s));
        return out.emit(inputs, Json{{"size", enumerate_size},
                                     {"count", sets.size()},
                                     {"decompositions", std::move(arr)}});
      }
      int rk = brute_rank(vec, space, field, budget);
      return out.emit(inputs, Json{{"rank", rk}, {"method", "oracle"}});
    }

    if (example->parsed()) {
      out.command = "example-i1";
      FieldSpec field = parse_field(field_text);
      SharpnessInstance inst = build_example_i1(d_param, field, seed);
      return out.emit(Json{{"field", field_to_json(field)},
                           {"d", d_param},
                           {"seed", seed}},
                      sharpness_to_json(inst));
    }

    if (gen->parsed()) {
      out.command = "gen";
      FieldSpec field = parse_field(field_text);
      Decomposition dec = [&]() {
        if (case_name == "a") {
          int on = on_count ? on_count : (d_param + 3) / 2;
          return build_case_a(d_param, r_param, on, off_count, field, seed);
        }
        if (case_name == "b") {
          int on = on_count ? on_count : d_param + 1;
          return build_case_b(d_param, r_param, on, off_count, field, seed);
        }
        if (case_name == "c") return build_case_c(d_param, r_param, field, seed);
        fail(ErrorCode::ParseError, "--case must be a, b, or c");
      }();
      Json dec_json = decomposition_to_json(dec);
      if (!output_path.empty()) {
        std::ofstream f(output_path);
        f << dec_json.dump(2) << "\n";
        out.output_path.clear();  // the report itself goes to stdout only
      }
      return out.emit(Json{{"case", case_name},
                           {"d", d_param},
                           {"r", r_param},
                           {"seed", seed}},
                      Json{{"decomposition", std::move(dec_json)},
                           {"certificate", certificate_to_json(
                                               verify_decomposition(dec))}});
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
