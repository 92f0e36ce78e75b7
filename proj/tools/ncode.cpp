#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ncode/bounds.hpp"
#include "ncode/code.hpp"
#include "ncode/families.hpp"
#include "ncode/json_io.hpp"
#include "ncode/morphisms.hpp"
#include "ncode/realize.hpp"
#include "ncode/sunflower.hpp"

using namespace ncode;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw PreconditionError("cannot write file: " + out_path);
    out << text << "\n";
  }
}

std::string words_str(const std::vector<Word>& ws, int n) {
  std::string s;
  for (Word w : ws) {
    if (!s.empty()) s += ", ";
    s += word_str(w, n);
  }
  return s;
}

int run_inspect(const std::string& path, bool json) {
  Code c = code_from_json(slurp(path));
  auto maxw = maximal_codewords(c);
  if (json) {
    std::ostringstream ss;
    ss << "{\n  \"n\": " << c.n << ",\n  \"codewords\": " << c.words.size()
       << ",\n  \"intersection_complete\": "
       << (is_intersection_complete(c) ? "true" : "false")
       << ",\n  \"simplicial_complex\": "
       << (is_simplicial_complex(c) ? "true" : "false")
       << ",\n  \"maximal\": " << maxw.size() << "\n}";
    std::cout << ss.str() << "\n";
  } else {
    std::cout << "n = " << c.n << "\n"
              << "codewords = " << c.words.size() << "\n"
              << "intersection complete = "
              << (is_intersection_complete(c) ? "true" : "false") << "\n"
              << "simplicial complex = "
              << (is_simplicial_complex(c) ? "true" : "false") << "\n"
              << "maximal = {" << words_str(maxw, c.n) << "}\n";
  }
  return 0;
}

int run_bounds(const std::string& path, bool json) {
  Code c = code_from_json(slurp(path));
  BoundReport r = bound_report(c);
  if (json) {
    std::cout << bound_report_to_json(r) << "\n";
    return 0;
  }
  std::cout << "n = " << r.n << ", maximal codewords = "
            << r.max_codeword_count << ", dim complex = "
            << r.complex_dimension << "\n"
            << "intersection complete = "
            << (r.intersection_complete ? "true" : "false") << "\n"
            << "odim in [" << r.odim_lower << ", " << r.odim_upper << "]";
  if (r.exact_odim) std::cout << " (exact: " << *r.exact_odim << ")";
  std::cout << "\ncdim in [" << r.cdim_lower << ", " << r.cdim_upper << "]\n";
  if (r.family) std::cout << "family: " << *r.family << "\n";
  for (const auto& s : r.reasons) std::cout << "  - " << s << "\n";
  return 0;
}

int run_verify(const std::string& code_path, const std::string& obj_path,
               bool deep, bool json) {
  Code c = code_from_json(slurp(code_path));
  std::string text = slurp(obj_path);
  RealizePlan plan;
  bool have_plan = text.find("\"scaffold\"") != std::string::npos;
  if (have_plan) {
    plan = plan_from_json(text);
    if (!(plan.code.n == c.n && plan.code.words == c.words))
      throw PreconditionError("verify: plan was built for a different code");
  } else {
    // Bare realization: synthesize a plan with witness points from the cell
    // enumeration, so all layers run off the same machinery.
    plan.code = c;
    plan.realization = realization_from_json(text);
    plan.m = plan.realization.dim;
    plan.d = complex_dim(c);
    std::map<Word, RatVec> wit;
    Code found = code_of_realization(plan.realization, &wit);
    if (!(found.n == c.n && found.words == c.words))
      throw PreconditionError(
          "verify: realization cuts out a different code (layer full-code)");
    for (Word w : c.words)
      if (w) plan.points[w] = wit.at(w);
  }
  VerifyReport rep = verify_plan(plan, deep);
  if (json)
    std::cout << verify_report_to_json(rep) << "\n";
  else {
    std::cout << "closure: " << (rep.closure_ok ? "ok" : "FAIL") << "\n"
              << "witnesses: " << (rep.witnesses_ok ? "ok" : "FAIL") << "\n"
              << "full code: "
              << (rep.full_code_ok ? (*rep.full_code_ok ? "ok" : "FAIL")
                                   : "skipped")
              << "\n";
    if (!rep.detail.empty()) std::cout << rep.detail << "\n";
  }
  if (!rep.ok()) {
    std::string layer = !rep.closure_ok      ? "closure"
                        : !rep.witnesses_ok  ? "witnesses"
                                             : "full-code";
    std::cerr << "verification failed at layer: " << layer << "\n";
    return 2;
  }
  return 0;
}

int run_trials(int d, int k, int n, int trials, uint64_t seed, int threads,
               bool json) {
  if (threads < 1) threads = 1;
  std::vector<int> hits(threads, 0), done(threads, 0);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (int i = t; i < trials; i += threads) {
        if (flexible_trial(d, k, n, seed + (uint64_t)i)) ++hits[t];
        ++done[t];
      }
    });
  for (auto& th : pool) th.join();
  int hit = 0, total = 0;
  for (int t = 0; t < threads; ++t) hit += hits[t], total += done[t];
  if (json)
    std::cout << "{\"trials\": " << total << ", \"hull_meets_center\": " << hit
              << "}\n";
  else
    std::cout << "hull met the center in " << hit << " of " << total
              << " trials\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics and geometry of convex neural codes"};
  app.require_subcommand(1);
  bool json = false;
  uint64_t seed = 0;
  int threads = 1;
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--seed", seed, "random seed (default 0)");
  app.add_option("--threads", threads, "parallel trial workers");

  std::string in1, in2, out_path, plan_path, eps_str;

  auto* inspect = app.add_subcommand("inspect", "summarize a code");
  inspect->add_option("code", in1)->required();

  auto* family = app.add_subcommand("family", "build a named code family");
  family->require_subcommand(1);
  int fam_n = 0;
  auto* sn = family->add_subcommand("sn");
  sn->add_option("n", fam_n)->required();
  auto* tn = family->add_subcommand("tn");
  tn->add_option("n", fam_n)->required();
  auto* sdelta = family->add_subcommand("sdelta");
  sdelta->add_option("complex", in1)->required();
  auto* scd = family->add_subcommand("scd");
  scd->add_option("C", in1)->required();
  scd->add_option("D", in2);

  auto* bounds_cmd = app.add_subcommand("bounds", "dimension bound report");
  bounds_cmd->add_option("code", in1)->required();

  auto* morphism = app.add_subcommand("morphism", "trunk morphisms");
  morphism->require_subcommand(1);
  auto* mapply = morphism->add_subcommand("apply");
  mapply->add_option("morphism", in1)->required();
  auto* msdelta = morphism->add_subcommand("sdelta-to-sm");
  msdelta->add_option("complex", in1)->required();

  auto* code_of = app.add_subcommand("code-of", "code of a realization");
  code_of->add_option("realization", in1)->required();

  auto* trim_cmd = app.add_subcommand("trim", "shrink sets; no --eps derives "
                                              "a code-preserving one");
  trim_cmd->add_option("realization", in1)->required();
  trim_cmd->add_option("--eps", eps_str);

  auto* inflate_cmd = app.add_subcommand("inflate", "closed-to-open thickening");
  inflate_cmd->add_option("realization", in1)->required();
  bool allow_nc = false;
  inflate_cmd->add_flag("--allow-non-complex", allow_nc);

  auto* realize_cmd = app.add_subcommand("realize", "closed realization");
  realize_cmd->add_option("code", in1)->required();
  realize_cmd->add_option("-o", out_path);
  realize_cmd->add_option("--plan", plan_path);

  auto* verify_cmd = app.add_subcommand("verify", "check a realization/plan");
  verify_cmd->add_option("code", in1)->required();
  verify_cmd->add_option("object", in2)->required();
  bool deep = false;
  verify_cmd->add_flag("--deep", deep);

  auto* sun = app.add_subcommand("sunflower", "flexible sunflower tools");
  sun->require_subcommand(1);
  int sd = 2, sk = 1, sn_petals = 0, trials = 100;
  bool skew = false;
  auto* counter = sun->add_subcommand("counterexample");
  counter->add_option("-d", sd)->required();
  counter->add_option("-k", sk)->required();
  counter->add_flag("--skew", skew);
  counter->add_option("-o", out_path);
  auto* trials_cmd = sun->add_subcommand("trials");
  trials_cmd->add_option("-d", sd)->required();
  trials_cmd->add_option("-k", sk)->required();
  trials_cmd->add_option("-n", sn_petals)->required();
  trials_cmd->add_option("--trials", trials);

  auto* tverberg_cmd = app.add_subcommand("tverberg", "partition with meeting hulls");
  tverberg_cmd->add_option("points", in1)->required();
  int parts = 2;
  tverberg_cmd->add_option("-r", parts)->required();

  // Let --json/--seed/--threads appear after the subcommand too.
  std::vector<CLI::App*> stack{&app};
  while (!stack.empty()) {
    CLI::App* a = stack.back();
    stack.pop_back();
    for (CLI::App* sc : a->get_subcommands({})) {
      sc->fallthrough();
      stack.push_back(sc);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    if (*inspect) return run_inspect(in1, json);
    if (*sn) emit(code_to_json(make_S_n(fam_n)), "");
    if (*tn) emit(code_to_json(make_T_n(fam_n)), "");
    if (*sdelta)
      emit(code_to_json(make_S_Delta(code_from_json(slurp(in1)))), "");
    if (*scd) {
      Code c = code_from_json(slurp(in1));
      Code out = in2.empty()
                     ? make_S_C_over_min(c)
                     : make_S_C_over_D(c, code_from_json(slurp(in2)));
      emit(code_to_json(out), "");
    }
    if (*bounds_cmd) return run_bounds(in1, json);
    if (*mapply) {
      auto f = morphism_from_json(slurp(in1));
      auto [img, fmap] = apply_morphism(f);
      emit(code_to_json(img), "");
      if (!json)
        for (const auto& [src, dst] : fmap)
          std::cerr << word_str(src, f.source.n) << " -> "
                    << word_str(dst, f.target_n()) << "\n";
    }
    if (*msdelta)
      emit(morphism_to_json(sdelta_to_sm(code_from_json(slurp(in1)))), "");
    if (*code_of)
      emit(code_to_json(code_of_realization(
               realization_from_json(slurp(in1)))),
           "");
    if (*trim_cmd) {
      Realization r = realization_from_json(slurp(in1));
      if (!eps_str.empty()) {
        emit(realization_to_json(trim_sets(r, parse_rat(eps_str))), "");
      } else {
        auto [closed, eps] = trim_realization(r);
        std::cerr << "eps = " << rat_str(eps) << "\n";
        emit(realization_to_json(closed), "");
      }
    }
    if (*inflate_cmd) {
      auto [open, eps] =
          inflate(realization_from_json(slurp(in1)), allow_nc);
      std::cerr << "eps = " << rat_str(eps) << "\n";
      emit(realization_to_json(open), "");
    }
    if (*realize_cmd) {
      RealizePlan plan = realize_closed(code_from_json(slurp(in1)));
      emit(realization_to_json(plan.realization), out_path);
      if (!plan_path.empty()) emit(plan_to_json(plan), plan_path);
    }
    if (*verify_cmd) return run_verify(in1, in2, deep, json);
    if (*counter) {
      Sunflower s = build_counterexample(sd, sk, skew);
      emit(sunflower_to_json(s), out_path);
    }
    if (*trials_cmd) return run_trials(sd, sk, sn_petals, trials, seed,
                                       threads, json);
    if (*tverberg_cmd) {
      int dim = 0;
      auto pts = points_from_json(slurp(in1), &dim);
      auto part = tverberg_partition(pts, parts);
      if (!part) {
        std::cout << (json ? "null" : "no partition found") << "\n";
      } else if (json) {
        std::cout << "[";
        for (size_t i = 0; i < part->size(); ++i) {
          std::cout << (i ? ", [" : "[");
          for (size_t j = 0; j < (*part)[i].size(); ++j)
            std::cout << (j ? ", " : "") << (*part)[i][j];
          std::cout << "]";
        }
        std::cout << "]\n";
      } else {
        for (size_t i = 0; i < part->size(); ++i) {
          std::cout << "part " << i + 1 << ":";
          for (int j : (*part)[i]) std::cout << " " << j;
          std::cout << "\n";
        }
      }
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
