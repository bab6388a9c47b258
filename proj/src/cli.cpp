#include "latmod/cli.hpp"

#include "latmod/birkhoff.hpp"
#include "latmod/congruence.hpp"
#include "latmod/constructions.hpp"
#include "latmod/enumerate.hpp"
#include "latmod/io.hpp"
#include "latmod/properties.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

namespace latmod {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

Lattice load_lattice(const std::string& path, std::string* name = nullptr) {
  return parse_lattice_file(read_file(path), name);
}

ordered_json report_to_json(const PropertyReport& rep) {
  ordered_json j;
  j["property"] = rep.property;
  j["holds"] = rep.holds;
  if (!rep.witness.empty()) j["witness"] = rep.witness;
  if (!rep.counterexample.empty()) j["counterexample"] = rep.counterexample;
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j;
}

ordered_json suite_record(const std::string& suite, const std::string& key,
                          bool pass, std::vector<std::string> witnesses,
                          double ms) {
  ordered_json rec;
  rec["suite"] = suite;
  rec["lattice_key"] = key;
  rec["verdict"] = pass ? "pass" : "fail";
  rec["witnesses"] = witnesses;
  rec["timings"] = {{"ms", ms}};
  return rec;
}

std::string report_line(const PropertyReport& rep) {
  std::string out = rep.property + ": " + (rep.holds ? "true" : "false");
  auto tuple = [](const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(v[i]);
    }
    return s + ")";
  };
  if (!rep.witness.empty()) out += "  witness " + tuple(rep.witness);
  if (!rep.counterexample.empty())
    out += "  counterexample " + tuple(rep.counterexample);
  if (!rep.detail.empty()) out += "  [" + rep.detail + "]";
  return out;
}

PropertyReport left_modular_report(const Lattice& L) {
  PropertyReport rep;
  rep.property = "left_modular";
  auto chain = find_left_modular_chain(L);
  rep.holds = chain.has_value();
  if (chain) rep.witness = *chain;
  else rep.detail = "no maximal chain of left modular elements";
  return rep;
}

int cmd_check(const std::string& file, const std::string& property,
              bool as_json) {
  Lattice L = load_lattice(file);
  std::vector<PropertyReport> reps;
  auto want = [&](const std::string& p) {
    return property == "all" || property == p;
  };
  if (want("graded")) reps.push_back(is_graded(L));
  if (want("distributive")) reps.push_back(is_distributive(L));
  if (want("left-modular") || want("left_modular"))
    reps.push_back(left_modular_report(L));
  if (want("supersolvable")) reps.push_back(is_supersolvable(L));
  if (reps.empty())
    throw param_error("unknown property '" + property + "'");
  bool all = true;
  for (const auto& r : reps) all = all && r.holds;
  if (as_json) {
    ordered_json j;
    j["file"] = file;
    j["size"] = L.size();
    j["properties"] = ordered_json::array();
    for (const auto& r : reps) j["properties"].push_back(report_to_json(r));
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : reps) std::cout << report_line(r) << "\n";
  }
  return all ? kOk : kFalse;
}

int cmd_congruences(const std::string& file, bool list, bool as_json,
                    size_t cap) {
  Lattice L = load_lattice(file);
  auto cons = all_congruences(L, cap);
  if (as_json) {
    ordered_json j;
    j["file"] = file;
    j["count"] = cons.size();
    if (list) {
      j["congruences"] = json::array();
      for (const auto& c : cons) j["congruences"].push_back(c.class_of);
    }
    std::cout << j.dump(2) << "\n";
  } else if (list) {
    for (const auto& c : cons) {
      json row = c.class_of;
      std::cout << row.dump() << "\n";
    }
  } else {
    std::cout << cons.size() << "\n";
  }
  return kOk;
}

int cmd_graded_quotient(const std::string& file, const std::string& out,
                        bool as_json, size_t cap) {
  Lattice L = load_lattice(file);
  auto q = maximum_graded_quotient(L, cap);
  if (!q) {
    std::cout << "no maximum graded quotient\n";
    return kFalse;
  }
  std::string text = serialize_lattice(q->first);
  if (!out.empty())
    write_file(out, text);
  else if (!as_json)
    std::cout << text;
  if (as_json) {
    ordered_json j;
    j["size"] = q->first.size();
    j["projection"] = q->second;
    if (!out.empty()) j["out"] = out;
    std::cout << j.dump(2) << "\n";
  }
  return kOk;
}

int cmd_construct(const std::string& family,
                  const std::map<std::string, long>& params,
                  const std::string& left, const std::string& right,
                  const std::string& out, const std::string& name) {
  Lattice L = [&] {
    if (family == "product") {
      if (left.empty() || right.empty())
        throw param_error("product needs --left and --right lattice files");
      Lattice A = load_lattice(left);
      Lattice B = load_lattice(right);
      return product(A, B);
    }
    return named_lattice(family, params);
  }();
  std::string text = serialize_lattice(L, name.empty() ? family : name);
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  return kOk;
}

int cmd_enumerate(int max_size, const std::vector<std::string>& filters,
                  std::string out_dir, int cap, bool as_json) {
  if (out_dir.empty()) {
    const char* cache = std::getenv("LATMOD_CACHE");
    if (cache) out_dir = cache;
  }
  LatticeCatalog cat = filter_corpus(max_size, filters, cap);
  std::vector<long> counts(max_size + 1, 0);
  for (const auto& [key, e] : cat.index()) ++counts[e.size];
  if (!out_dir.empty()) catalog_save(cat, out_dir);
  if (as_json) {
    ordered_json j;
    j["max_size"] = max_size;
    j["total"] = cat.size();
    j["counts"] = std::vector<long>(counts.begin() + 1, counts.end());
    if (!out_dir.empty()) j["out"] = out_dir;
    std::cout << j.dump(2) << "\n";
  } else {
    for (int s = 1; s <= max_size; ++s)
      std::cout << "size " << s << ": " << counts[s] << "\n";
    std::cout << "total: " << cat.size() << "\n";
    if (!out_dir.empty()) std::cout << "saved to " << out_dir << "\n";
  }
  return kOk;
}

int cmd_export_dot(const std::string& file, const std::string& out) {
  std::string name;
  Lattice L = load_lattice(file, &name);
  std::string dot = export_dot(L, {}, name.empty() ? "lattice" : name);
  if (out.empty())
    std::cout << dot;
  else
    write_file(out, dot);
  return kOk;
}

std::vector<Lattice> corpus_for_verify(const std::string& corpus_dir,
                                       int max_size) {
  std::vector<Lattice> corpus;
  std::string dir = corpus_dir;
  if (dir.empty()) {
    const char* cache = std::getenv("LATMOD_CACHE");
    if (cache && std::filesystem::exists(std::filesystem::path(cache) /
                                         "index.json"))
      dir = cache;
  }
  if (!dir.empty()) {
    LatticeCatalog cat = catalog_load(dir);
    for (const auto& [key, e] : cat.index()) corpus.push_back(cat.get(key));
  } else {
    enumerate_lattices(max_size,
                       [&](const Lattice& L) { corpus.push_back(L); });
  }
  return corpus;
}

int cmd_verify(const std::string& suite, const std::string& corpus_dir,
               int max_size, int tmax, bool as_json, size_t congruence_cap) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Lattice> corpus = corpus_for_verify(corpus_dir, max_size);
  ordered_json records = ordered_json::array();
  long failures = 0;

  if (suite == "theorem1") {
    TheoremSummary sum = verify_theorem1(corpus);
    failures = long(sum.violations.size());
    ordered_json j;
    j["suite"] = suite;
    j["lattices"] = sum.lattices;
    j["graded_left_modular"] = sum.graded_left_modular;
    j["supersolvable"] = sum.supersolvable;
    j["violations"] = json::array();
    for (const auto& v : sum.violations)
      j["violations"].push_back({{"lattice_key", v.lattice_key},
                                 {"reason", v.reason},
                                 {"lattice", v.lattice_json}});
    j["timings"] = {{"ms", ms_since(t0)}};
    if (as_json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << "theorem1: " << sum.lattices << " lattices, "
                << sum.graded_left_modular << " graded left modular, "
                << sum.supersolvable << " supersolvable, "
                << sum.violations.size() << " violations\n";
    return failures == 0 ? kOk : kFalse;
  }

  for (const Lattice& L : corpus) {
    auto tl = std::chrono::steady_clock::now();
    std::string key = canonical_hex(L);
    bool pass = true;
    std::vector<std::string> witnesses;

    if (suite == "lemmas") {
      LemmaSuiteReport rep = verify_lemma_suite(L, congruence_cap);
      pass = rep.all_pass();
      for (const auto& c : rep.checks)
        if (!c.holds) witnesses.push_back(report_line(c));
    } else if (suite == "pq") {
      if (is_graded(L).holds) {
        auto xs = left_modular_maximal_chains(L);
        auto ys = maximal_chains(L);
        for (const auto& x : xs)
          for (const auto& y : ys)
            for (int t = 1; t <= tmax && pass; ++t) {
              PropertyReport r = verify_pq(L, x, y, t);
              if (!r.holds) {
                pass = false;
                witnesses.push_back(report_line(r));
              }
            }
      }
    } else if (suite == "birkhoff") {
      PropertyReport ss = is_supersolvable(L);
      if (ss.holds) {
        CertifyResult res = certify_supersolvable(L, ss.witness);
        if (!res.ok()) {
          pass = false;
          witnesses.push_back("certification failed at " +
                              res.failure->check);
        }
      } else {
        for (const Chain& m : maximal_chains(L))
          if (certify_supersolvable(L, m).ok()) {
            pass = false;
            witnesses.push_back("non-supersolvable lattice certified");
          }
      }
    } else if (suite == "universal") {
      if (is_graded(L).holds) {
        for (const Chain& c : all_chains(L)) {
          for (int w = 0; w < L.size() && pass; ++w) {
            std::vector<int> gens = c;
            gens.push_back(w);
            if (int(sublattice_generated(L, gens).size()) != L.size())
              continue;
            PropertyReport r =
                universal_property_check(int(c.size()) - 1, L, c, w);
            if (!r.holds) {
              pass = false;
              witnesses.push_back(report_line(r));
            }
          }
          if (!pass) break;
        }
      }
    } else {
      throw param_error("unknown verify suite '" + suite + "'");
    }

    if (!pass) ++failures;
    records.push_back(suite_record(suite, key, pass, witnesses, ms_since(tl)));
  }

  if (as_json) {
    ordered_json j;
    j["suite"] = suite;
    j["lattices"] = corpus.size();
    j["failures"] = failures;
    j["records"] = records;
    j["timings"] = {{"ms", ms_since(t0)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << suite << ": " << corpus.size() << " lattices, " << failures
              << " failures\n";
  }
  return failures == 0 ? kOk : kFalse;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args) {
  CLI::App app{"finite lattice toolkit: gradedness, left modularity, "
               "congruences, supersolvability certificates"};
  app.require_subcommand(1);

  // check
  std::string check_file, check_property = "all";
  bool check_json = false;
  auto* check = app.add_subcommand("check", "evaluate structural properties");
  check->add_option("file", check_file)->required();
  check->add_option("--property", check_property,
                    "graded|distributive|left-modular|supersolvable|all");
  check->add_flag("--json", check_json);

  // congruences
  std::string cong_file;
  bool cong_count = false, cong_list = false, cong_json = false;
  size_t cong_cap = kDefaultCongruenceCap;
  auto* cong = app.add_subcommand("congruences", "list or count congruences");
  cong->add_option("file", cong_file)->required();
  cong->add_flag("--count", cong_count);
  cong->add_flag("--list", cong_list);
  cong->add_flag("--json", cong_json);
  cong->add_option("--cap", cong_cap, "congruence count cap");

  // graded-quotient
  std::string gq_file, gq_out;
  bool gq_json = false;
  size_t gq_cap = kDefaultCongruenceCap;
  auto* gq = app.add_subcommand("graded-quotient",
                                "maximum graded quotient, when it exists");
  gq->add_option("file", gq_file)->required();
  gq->add_option("-o,--out", gq_out);
  gq->add_flag("--json", gq_json);
  gq->add_option("--cap", gq_cap);

  // construct
  std::string cons_family, cons_out, cons_name, cons_left, cons_right;
  long pk = -1, pn = -1, pm = -1, pr = -1, ps = -1;
  auto* cons = app.add_subcommand("construct", "build a named lattice family");
  cons->add_option("family", cons_family,
                   "chain|boolean|m3|n5|benzene|figure1|partition|divisor|"
                   "point|grid|downset|product")
      ->required();
  cons->add_option("--k", pk);
  cons->add_option("--n", pn);
  cons->add_option("--m", pm);
  cons->add_option("--r", pr);
  cons->add_option("--s", ps);
  cons->add_option("--left", cons_left, "left factor file (product)");
  cons->add_option("--right", cons_right, "right factor file (product)");
  cons->add_option("-o,--out", cons_out);
  cons->add_option("--name", cons_name);

  // enumerate
  int enum_max = 0, enum_cap = kEnumerationCap;
  std::vector<std::string> enum_filters;
  std::string enum_out;
  bool enum_json = false;
  auto* en = app.add_subcommand("enumerate",
                                "all unlabeled lattices up to a size");
  en->add_option("--max-size", enum_max)->required();
  en->add_option("--filter", enum_filters)->delimiter(',');
  en->add_option("--out", enum_out, "catalog directory");
  en->add_option("--cap", enum_cap, "enumeration size cap");
  en->add_flag("--json", enum_json);

  // verify
  std::string ver_suite, ver_corpus;
  int ver_max = 8, ver_t = 3;
  bool ver_json = false;
  size_t ver_cap = kDefaultCongruenceCap;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", ver_suite, "theorem1|lemmas|pq|birkhoff|universal")
      ->required();
  ver->add_option("--corpus", ver_corpus, "catalog directory");
  ver->add_option("--max-size", ver_max, "in-memory corpus bound");
  ver->add_option("--t", ver_t, "max sequence length for pq");
  ver->add_flag("--json", ver_json);
  ver->add_option("--cap", ver_cap, "congruence count cap");

  // export-dot
  std::string dot_file, dot_out;
  auto* dot = app.add_subcommand("export-dot", "emit a Hasse diagram in DOT");
  dot->add_option("file", dot_file)->required();
  dot->add_option("-o,--out", dot_out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(check_file, check_property, check_json);
    if (cong->parsed())
      return cmd_congruences(cong_file, cong_list, cong_json, cong_cap);
    if (gq->parsed()) return cmd_graded_quotient(gq_file, gq_out, gq_json, gq_cap);
    if (cons->parsed()) {
      std::map<std::string, long> params;
      if (pk >= 0) params["k"] = pk;
      if (pn >= 0) params["n"] = pn;
      if (pm >= 0) params["m"] = pm;
      if (pr >= 0) params["r"] = pr;
      if (ps >= 0) params["s"] = ps;
      return cmd_construct(cons_family, params, cons_left, cons_right,
                           cons_out, cons_name);
    }
    if (en->parsed())
      return cmd_enumerate(enum_max, enum_filters, enum_out, enum_cap,
                           enum_json);
    if (ver->parsed())
      return cmd_verify(ver_suite, ver_corpus, ver_max, ver_t, ver_json,
                        ver_cap);
    if (dot->parsed()) return cmd_export_dot(dot_file, dot_out);
    std::cerr << app.help();
    return kInputError;
  } catch (const too_large_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternalError;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace latmod
