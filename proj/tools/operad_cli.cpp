#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "operad/battery.hpp"
#include "operad/cobar.hpp"
#include "operad/dual.hpp"
#include "operad/io.hpp"
#include "operad/presets.hpp"
#include "operad/series.hpp"
#include "operad/veronese.hpp"

using json = nlohmann::ordered_json;
using namespace operad;

namespace {

struct common_opts {
  std::string preset_name;
  std::string file;
  std::string order = "rpdl";
  std::string format = "json";
  int max_arity = 5;
};

presentation load(const common_opts& o, const order_spec& os) {
  if (!o.preset_name.empty()) return preset(o.preset_name, os);
  if (o.file.empty()) throw error("need --preset or --file");
  std::ifstream in(o.file);
  if (!in) throw error("cannot open " + o.file);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str(), os);
}

json report_shell(const std::string& command, const common_opts& o, json bounds) {
  json j;
  j["command"] = command;
  j["input"] = o.preset_name.empty() ? o.file : o.preset_name;
  j["order_spec"] = o.order;
  j["bounds"] = std::move(bounds);
  return j;
}

void emit(const json& j, const std::string& format) {
  if (format == "tsv") {
    const json& res = j.contains("result") ? j["result"] : j;
    if (res.is_array()) {
      bool first = true;
      for (const auto& v : res) {
        if (!first) std::cout << "\t";
        std::cout << (v.is_string() ? v.get<std::string>() : v.dump());
        first = false;
      }
      std::cout << "\n";
      return;
    }
  }
  std::cout << j.dump(2) << "\n";
}

void add_common(CLI::App* cmd, common_opts& o, bool with_arity = true,
                bool with_order_spec = true) {
  cmd->add_option("--preset", o.preset_name, "built-in presentation name");
  cmd->add_option("--file", o.file, "presentation file (.oprd)");
  if (with_order_spec) cmd->add_option("--order", o.order, "monomial order (rpdl | pdl-forward)");
  cmd->add_option("--format", o.format, "json | tsv");
  if (with_arity) cmd->add_option("--max-arity", o.max_arity, "arity bound");
}

json provenance(const groebner_data& g) {
  json p;
  p["groebner_complete_arity"] = g.bound().max_arity;
  p["groebner_complete_weight"] = g.bound().max_weight;
  p["basis_size"] = g.basis().size();
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computer algebra for weight-graded operads presented by generators and relations"};
  app.require_subcommand(1);

  common_opts o;
  unsigned long seed = 0;

  // dims
  auto* cmd_dims = app.add_subcommand("dims", "dimensions of the presented operad per arity");
  add_common(cmd_dims, o);
  bool use_oracle = false;
  cmd_dims->add_flag("--oracle", use_oracle, "use the linear-algebra slice oracle instead of a GB");

  // gb
  auto* cmd_gb = app.add_subcommand("gb", "truncated Groebner basis");
  add_common(cmd_gb, o);

  // normal-form
  auto* cmd_nf = app.add_subcommand("normal-form", "reduce a polynomial modulo the GB");
  add_common(cmd_nf, o);
  std::string poly_text;
  cmd_nf->add_option("--poly", poly_text, "polynomial in relation syntax")->required();

  // veronese
  auto* cmd_ver = app.add_subcommand("veronese", "Veronese powers");
  add_common(cmd_ver, o);
  std::string ver_mode = "generated";
  int ver_d = 2;
  cmd_ver->add_option("mode", ver_mode, "naive | generated | quadratic")->required();
  cmd_ver->add_option("-d,--power", ver_d, "Veronese weight d");

  // dual
  auto* cmd_dual = app.add_subcommand("dual", "quadratic Koszul dual presentation");
  add_common(cmd_dual, o, false);

  // pure
  auto* cmd_pure = app.add_subcommand("pure", "pure weight-k homotopy dual");
  add_common(cmd_pure, o, false);
  int pure_k = 2;
  cmd_pure->add_option("-k", pure_k, "weight k");

  // cobar
  auto* cmd_cobar = app.add_subcommand("cobar", "truncated cobar homology of the dual");
  add_common(cmd_cobar, o, false);
  int cobar_bound = 3, cobar_arity = 0, cycle_n = 0;
  cmd_cobar->add_option("--arity-bound", cobar_bound, "operad table bound");
  cmd_cobar->add_option("--arity", cobar_arity, "slice arity for homology ranks");
  cmd_cobar->add_option("--cycle-n", cycle_n, "run the pure-cycle certificate for n = 2 or 3");
  cmd_cobar->add_option("--seed", seed, "seed for the nonzero-witness search");

  // series
  auto* cmd_series = app.add_subcommand("series", "exact power-series analysis");
  std::string series_mode;
  cmd_series->add_option("mode", series_mode, "invert | gk | positivity | recurrence | ratios")
      ->required();
  std::string coeffs;
  int order_n = 9;
  cmd_series->add_option("--coeffs", coeffs, "comma-separated rational coefficients c0,c1,...");
  cmd_series->add_option("--order", order_n, "truncation order");
  add_common(cmd_series, o, true, false);

  // preset
  auto* cmd_preset = app.add_subcommand("preset", "list or dump built-in presentations");
  std::string preset_action = "list", preset_arg;
  cmd_preset->add_option("action", preset_action, "list | dump")->required();
  cmd_preset->add_option("name", preset_arg, "preset name for dump");

  // paper-suite
  auto* cmd_suite = app.add_subcommand("paper-suite", "run the full reproduction battery");
  cmd_suite->add_option("--seed", seed, "seed for randomized witness searches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    order_spec os = order_spec::from_name(o.order);

    if (cmd_dims->parsed()) {
      presentation p = load(o, os);
      json j = report_shell("dims", o, {{"max_arity", o.max_arity}});
      if (use_oracle) {
        std::vector<long> d;
        for (int a = 1; a <= o.max_arity; ++a) d.push_back(span_reduce(p, os, a).dim);
        j["result"] = d;
        j["provenance"] = "span_reduce oracle per arity";
      } else {
        groebner_data g = buchberger(p, os, bound_for_arity(p.gens, o.max_arity));
        j["result"] = dims(g, o.max_arity);
        j["provenance"] = provenance(g);
      }
      emit(j, o.format);
    } else if (cmd_gb->parsed()) {
      presentation p = load(o, os);
      groebner_data g = buchberger(p, os, bound_for_arity(p.gens, o.max_arity));
      json j = report_shell("gb", o, {{"max_arity", g.bound().max_arity},
                                      {"max_weight", g.bound().max_weight}});
      json basis = json::array();
      for (const auto& b : g.basis()) basis.push_back(b.text(g.gens()));
      j["result"] = basis;
      quadratic_report q = is_quadratic_up_to(g);
      j["quadratic"] = q.quadratic;
      j["provenance"] = provenance(g);
      emit(j, o.format);
    } else if (cmd_nf->parsed()) {
      presentation p = load(o, os);
      groebner_data g = buchberger(p, os, bound_for_arity(p.gens, o.max_arity));
      opoly q = parse_polynomial(poly_text, g.pres(), os);
      opoly nf = normal_form(g, q);
      json j = report_shell("normal-form", o, {{"max_arity", o.max_arity}});
      j["result"] = nf.zero() ? "0" : nf.text(g.gens());
      j["provenance"] = provenance(g);
      emit(j, o.format);
    } else if (cmd_ver->parsed()) {
      presentation p = load(o, os);
      groebner_data g = buchberger(p, os, bound_for_arity(p.gens, o.max_arity));
      json j = report_shell("veronese " + ver_mode, o,
                            {{"d", ver_d}, {"max_arity", o.max_arity}});
      if (ver_mode == "naive") {
        j["result"] = naive_dims(g, ver_d, o.max_arity);
      } else if (ver_mode == "generated") {
        j["result"] = suboperad_dims(g, ver_d, o.max_arity);
      } else if (ver_mode == "quadratic") {
        presentation qv = quadratic_veronese(g, ver_d);
        j["result"] = serialize_presentation(qv);
      } else {
        throw error("unknown veronese mode " + ver_mode);
      }
      j["provenance"] = provenance(g);
      emit(j, o.format);
    } else if (cmd_dual->parsed()) {
      presentation p = load(o, os);
      presentation sh = p.kind == presentation_kind::symmetric_input
                            ? symmetric_to_shuffle(p, os)
                            : p;
      dual_presentation d = quadratic_dual(sh, os);
      json j = report_shell("dual", o, json::object());
      j["result"] = serialize_presentation(d.pres);
      j["pairing_convention"] = d.pairing_convention;
      emit(j, o.format);
    } else if (cmd_pure->parsed()) {
      presentation p = load(o, os);
      groebner_data g = buchberger(p, os, bound_for_arity(p.gens, 2 * pure_k + 1));
      dual_presentation d = pure_homotopy(g, pure_k);
      json j = report_shell("pure", o, {{"k", pure_k}});
      j["result"] = serialize_presentation(d.pres);
      j["pairing_convention"] = d.pairing_convention;
      emit(j, o.format);
    } else if (cmd_cobar->parsed()) {
      presentation p = load(o, os);
      json j = report_shell("cobar", o, {{"arity_bound", cobar_bound}});
      if (cycle_n != 0) {
        groebner_data g = buchberger(p, os, bound_for_arity(p.gens, 2 * cycle_n - 1));
        pure_cycle_result res = pure_cycle_report(g, cycle_n, os, seed);
        json r;
        r["n"] = res.n;
        r["arity"] = res.arity;
        r["boundary_solved"] = res.boundary_solved;
        r["nu_all_nonzero"] = res.nu_all_nonzero;
        r["cycle_closed"] = res.cycle_closed;
        r["omega_in_beta_zero"] = res.omega_in_beta_zero;
        r["omega_coefficient"] = to_string(res.omega_coefficient);
        r["nonzero_in_homology"] = res.nonzero_in_homology;
        r["full_rank_comparison"] = res.full_rank_comparison;
        r["certificate_rows"] = res.certificate_rows;
        r["image_rank"] = res.image_rank;
        r["extended_rank"] = res.extended_rank;
        r["d_squared_ok"] = res.d_squared_ok;
        if (!res.detail.empty()) r["detail"] = res.detail;
        j["result"] = r;
      } else {
        groebner_data g = buchberger(p, os, bound_for_arity(p.gens, cobar_bound));
        operad_tables t = operad_tables::build(g, cobar_bound);
        json slices = json::array();
        int lo = cobar_arity ? cobar_arity : 2;
        int hi = cobar_arity ? cobar_arity : cobar_bound + 2;
        for (int a = lo; a <= hi; ++a) {
          json ranks = json::array();
          for (const auto& s : homology_ranks(t, a, os)) {
            json e;
            e["degree"] = s.degree;
            e["dim"] = s.dim;
            e["homology"] = s.homology;
            ranks.push_back(e);
          }
          slices.push_back({{"arity", a}, {"slices", ranks}});
        }
        j["result"] = slices;
      }
      emit(j, o.format);
    } else if (cmd_series->parsed()) {
      json j;
      j["command"] = "series " + series_mode;
      j["order_spec"] = o.order;
      if (series_mode == "invert") {
        rational_series f = parse_series(coeffs);
        rational_series g = lagrange_invert(f, order_n);
        j["bounds"] = {{"order", order_n}};
        j["result"] = series_text(g);
      } else if (series_mode == "positivity") {
        rational_series f;
        if (!o.preset_name.empty()) {
          order_spec pos = os;
          presentation p = preset(o.preset_name, pos);
          groebner_data g = buchberger(p, pos, bound_for_arity(p.gens, o.max_arity));
          std::vector<long> d = dims(g, o.max_arity);
          std::vector<int> degrees(o.max_arity, 0);
          for (int a = 2; a <= o.max_arity; ++a) {
            auto normals = g.normal_monomials(a);
            if (!normals.empty()) degrees[a - 1] = normals.front().parity();
          }
          f = egf_from_dims(d, sign_mode::euler, degrees, o.max_arity);
          j["input"] = o.preset_name;
        } else {
          f = parse_series(coeffs);
        }
        rational_series inv = lagrange_invert(f, order_n);
        auto neg = positivity_scan(inv);
        j["bounds"] = {{"order", order_n}};
        j["result"] = neg ? json(*neg) : json("none");
      } else if (series_mode == "gk") {
        presentation p = load(o, os);
        presentation sh =
            p.kind == presentation_kind::symmetric_input ? symmetric_to_shuffle(p, os) : p;
        groebner_data g = buchberger(sh, os, bound_for_arity(sh.gens, o.max_arity));
        dual_presentation d = quadratic_dual(sh, os);
        groebner_data gd = buchberger(d.pres, os, bound_for_arity(d.pres.gens, o.max_arity));
        std::vector<long> dp = dims(g, o.max_arity), dd = dims(gd, o.max_arity);
        std::vector<int> weights(o.max_arity, 0);
        int gw = sh.gens.size() ? sh.gens[0].weight : 1;
        int ga = sh.gens.size() ? sh.gens[0].arity : 2;
        for (int a = 1; a <= o.max_arity; ++a) weights[a - 1] = gw * (a - 1) / (ga - 1);
        rational_series f = egf_from_dims(dp, sign_mode::alternating, weights, o.max_arity);
        rational_series h = egf_from_dims(dd, sign_mode::plain, {}, o.max_arity);
        bool inverse = is_inverse(f, h, o.max_arity);
        auto neg = positivity_scan(lagrange_invert(f, std::max(order_n, o.max_arity)));
        j["input"] = o.preset_name.empty() ? o.file : o.preset_name;
        j["bounds"] = {{"max_arity", o.max_arity}, {"order", order_n}};
        j["result"] = {{"dims", dp},
                       {"dual_dims", dd},
                       {"inverse_to_order", inverse},
                       {"first_negative", neg ? json(*neg) : json("none")},
                       {"koszulness", neg ? "fails necessary Koszulness test" : "passes"}};
      } else if (series_mode == "recurrence") {
        recurrence_spec spec = recurrence_spec::paper_three_term();
        std::vector<rational> a;
        for (int n = 0; n <= order_n; ++n) a.push_back(inverse_coefficient_an(n));
        recurrence_report rep = recurrence_verify(a, spec, 2, order_n);
        j["bounds"] = {{"range", "2.." + std::to_string(order_n)}};
        j["result"] = {{"holds", rep.ok}, {"violations", rep.violations}};
      } else if (series_mode == "ratios") {
        asymptotics_report rep = ratio_report(order_n);
        j["bounds"] = {{"terms", order_n}};
        j["result"] = {{"lambda_minus", rep.lambda_minus},
                       {"lambda_plus", rep.lambda_plus},
                       {"a_ratio_last", rep.a_ratio_last},
                       {"a_ratio_extrapolated", rep.a_ratio_extrapolated},
                       {"b_ratio_last", rep.b_ratio_last},
                       {"b_ratio_extrapolated", rep.b_ratio_extrapolated},
                       {"radius_constant", rep.radius_constant},
                       {"ab_ratio_strictly_decreasing", rep.ab_ratio_strictly_decreasing},
                       {"b_ratio_at_least_one", rep.b_ratio_at_least_one}};
      } else {
        throw error("unknown series mode " + series_mode);
      }
      emit(j, o.format);
    } else if (cmd_preset->parsed()) {
      if (preset_action == "list") {
        json j;
        j["command"] = "preset list";
        json names = json::array();
        for (const auto& n : preset_names()) names.push_back(n);
        j["result"] = names;
        emit(j, o.format);
      } else if (preset_action == "dump") {
        if (preset_arg.empty()) throw error("preset dump needs a name");
        order_spec pos;
        std::cout << serialize_presentation(preset(preset_arg, pos));
      } else {
        throw error("unknown preset action " + preset_action);
      }
    } else if (cmd_suite->parsed()) {
      int failures = run_paper_suite(std::cout, seed);
      return failures == 0 ? 0 : 1;
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
