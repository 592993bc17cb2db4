#include "uclab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>

#include "uclab/json_io.hpp"
#include "uclab/theorems.hpp"

namespace uclab::cli {

namespace {

using io::json;

struct CliError {
  int code;
  std::string message;
};

json report_of(const AxiomReport& r) {
  json witnesses = json::array();
  for (const auto& f : r.witnesses) witnesses.push_back(io::family_to_json(f));
  return json{{"axiom", r.axiom},
              {"message", r.message},
              {"witnesses", std::move(witnesses)}};
}

void emit(std::ostream& out, const std::optional<std::string>& json_path,
          const json& doc) {
  out << io::canonical_dump(doc);
  if (json_path) io::save_file(*json_path, doc);
}

std::optional<int> env_max_atoms() {
  if (const char* v = std::getenv("UCLAB_MAX_ATOMS")) {
    return std::atoi(v);
  }
  return std::nullopt;
}

int effective_cap(int library_cap) {
  const auto env = env_max_atoms();
  return env ? std::min(*env, library_cap) : library_cap;
}

BooleanAlgebra letters_algebra(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, 'a' + i));
  return BooleanAlgebra(names);
}

int do_check(const std::string& in, const std::optional<std::string>& kind_arg,
             const std::optional<std::string>& json_path, std::ostream& out) {
  const json j = io::load_file(in);
  const std::string kind = kind_arg ? *kind_arg : io::detect_kind(j);
  std::optional<AxiomReport> violation;
  std::string label;

  if (kind == "uc" || kind == "stack-system") {
    const auto parts = io::witness_parts_from_json(j);
    label = kind == "uc" ? "ultracontact" : "stack system";
    violation = check_ss_axioms(parts.algebra, parts.witnesses);
    if (!violation && parts.explicit_members) {
      const ExplicitUc explicit_uc(parts.algebra, *parts.explicit_members);
      violation = check_uc_axioms(explicit_uc);
      if (!violation) {
        const auto canonical = uc_from_explicit(explicit_uc);
        const auto listed = io::uc_from_json(j);
        if (canonical != listed) {
          violation = AxiomReport{
              "K3",
              "the explicit member list and the witness list disagree",
              {}};
        }
      }
    }
  } else if (kind == "contact") {
    label = "contact relation";
    violation = check_contact_axioms(io::contact_from_json(j));
  } else if (kind == "hypercontact") {
    label = "hypercontact";
    violation = check_hypercontact_axioms(io::hypercontact_from_json(j));
  } else if (kind == "complex") {
    label = "simplicial complex";
    violation = check_complex_axioms(io::complex_from_json(j));
  } else {
    throw CliError{2, "check: unsupported kind '" + kind + "'"};
  }

  if (violation) {
    emit(out, json_path,
         json{{"command", "check"},
              {"valid", false},
              {"kind", kind},
              {"counterexample", report_of(*violation)}});
    return 1;
  }
  out << "valid " << label << "\n";
  if (json_path) {
    io::save_file(*json_path,
                  json{{"command", "check"}, {"valid", true}, {"kind", kind}});
  }
  return 0;
}

int do_enumerate(const std::string& what, int atoms,
                 const std::optional<std::string>& json_path,
                 std::ostream& out) {
  json items = json::array();
  if (what == "stacks") {
    if (atoms > effective_cap(4)) throw CapExceeded("enumerate: --atoms cap is 4");
    for (const auto& u : enumerate_stacks(letters_algebra(atoms))) {
      items.push_back(io::stack_to_json(u));
    }
  } else if (what == "grills") {
    if (atoms > effective_cap(4)) throw CapExceeded("enumerate: --atoms cap is 4");
    for (const auto& g : enumerate_grills(letters_algebra(atoms))) {
      items.push_back(io::family_to_json(g));
    }
  } else if (what == "ucs") {
    if (atoms > effective_cap(5)) throw CapExceeded("enumerate: --atoms cap is 5");
    for_each_uc(letters_algebra(atoms), [&](const Ultracontact& k) {
      items.push_back(io::uc_to_json(k));
    });
  } else {
    if (atoms > effective_cap(5)) throw CapExceeded("enumerate: --atoms cap is 5");
    for (const auto& s : enumerate_complexes(
             letters_algebra(atoms).atom_names())) {
      items.push_back(io::complex_to_json(s));
    }
  }
  emit(out, json_path,
       json{{"command", "enumerate"},
            {"what", what},
            {"atoms", atoms},
            {"count", items.size()},
            {"items", std::move(items)}});
  return 0;
}

int do_convert(const std::string& in, const std::string& to,
               const std::optional<std::string>& out_path, std::ostream& out) {
  const json j = io::load_file(in);
  const std::string kind = io::detect_kind(j);

  Ultracontact k = [&] {
    if (kind == "uc") return io::uc_from_json(j);
    if (kind == "stack-system") return uc_of(io::ss_from_json(j));
    if (kind == "complex") return sigma_inverse(io::complex_from_json(j));
    throw CliError{2, "convert: cannot read kind '" + kind + "'"};
  }();

  json result;
  if (to == "uc") {
    result = io::uc_to_json(k);
  } else if (to == "stack-system") {
    result = io::ss_to_json(ss_of(k));
  } else if (to == "complex") {
    result = io::complex_to_json(sigma(k));
  } else {
    throw CliError{2, "convert: unsupported target '" + to + "'"};
  }
  if (out_path) io::save_file(*out_path, result);
  out << io::canonical_dump(result);
  return 0;
}

int do_derive(const std::string& in, bool contact, bool hyper,
              const std::optional<std::string>& out_path, std::ostream& out) {
  const auto k = io::uc_from_json(io::load_file(in));
  json result;
  if (contact) {
    result = io::contact_to_json(derive_contact(k));
  } else if (hyper) {
    result = io::hypercontact_to_json(derive_hypercontact(k));
  } else {
    throw CliError{2, "derive: pick --contact or --hypercontact"};
  }
  if (out_path) io::save_file(*out_path, result);
  out << io::canonical_dump(result);
  return 0;
}

int do_lattice(const std::vector<std::string>& files, bool join, bool meet,
               const std::optional<std::string>& out_path, std::ostream& out) {
  if (join == meet) throw CliError{2, "lattice: pick --join or --meet"};
  std::vector<Ultracontact> ks;
  for (const auto& f : files) ks.push_back(io::uc_from_json(io::load_file(f)));
  if (ks.empty()) throw CliError{2, "lattice: at least one input file"};
  const auto result = io::uc_to_json(join ? uc_join(ks) : uc_meet(ks));
  if (out_path) io::save_file(*out_path, result);
  out << io::canonical_dump(result);
  return 0;
}

int do_extend(const std::string& in, const std::optional<std::string>& grill,
              const std::optional<std::string>& atoms,
              const std::optional<std::string>& set,
              const std::optional<std::string>& out_path, std::ostream& out) {
  const auto k = io::uc_from_json(io::load_file(in));
  const int given = int(grill.has_value()) + int(atoms.has_value()) +
                    int(set.has_value());
  if (given != 1) {
    throw CliError{2, "extend: pick exactly one of --grill, --atoms, --set"};
  }
  json result;
  if (grill) {
    result = io::uc_to_json(
        extend_by_grills(k, {io::family_from_json(io::load_file(*grill))}));
  } else if (atoms) {
    result = io::uc_to_json(
        extend_by_atoms(k, io::family_from_json(io::load_file(*atoms))));
  } else {
    const auto ext = extend_by_set(k, io::family_from_json(io::load_file(*set)));
    result = json{{"command", "extend"},
                  {"is_uc", ext.is_uc},
                  {"uc", ext.is_uc ? io::uc_to_json(*ext.as_uc) : json()},
                  {"violation",
                   ext.violation ? report_of(*ext.violation) : json()}};
  }
  if (out_path) io::save_file(*out_path, result);
  out << io::canonical_dump(result);
  return 0;
}

int do_topology_uc(const std::string& in,
                   const std::optional<std::string>& out_path,
                   std::ostream& out) {
  const auto space = io::space_from_json(io::load_file(in));
  const auto result = io::uc_to_json(intersection_uc(space));
  if (out_path) io::save_file(*out_path, result);
  out << io::canonical_dump(result);
  return 0;
}

int do_verify(const std::optional<std::string>& theorem, bool all,
              const std::optional<std::string>& json_path, std::ostream& out) {
  std::vector<std::string> ids;
  if (all) {
    ids = theorems::all_ids();
  } else if (theorem) {
    ids.push_back(*theorem);
  } else {
    throw CliError{2, "verify: pick --theorem <id> or --all"};
  }
  json reports = json::array();
  bool ok = true;
  for (const auto& id : ids) {
    const auto report = theorems::run(id);
    ok &= report.passed;
    out << (report.passed ? "PASS " : "FAIL ") << report.id << "\n";
    for (const auto& line : report.lines) out << "  " << line << "\n";
    reports.push_back(json{{"id", report.id},
                           {"passed", report.passed},
                           {"lines", report.lines},
                           {"counterexample", report.counterexample}});
  }
  const json doc{{"command", "verify"}, {"passed", ok}, {"suites", reports}};
  if (json_path) io::save_file(*json_path, doc);
  if (!ok) out << io::canonical_dump(doc);
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"finite ultracontact algebra workbench"};
  app.require_subcommand(1);

  std::string in, to, what;
  std::optional<std::string> kind, json_path, out_path, theorem, grill, atoms,
      set;
  int n_atoms = 3;
  bool flag_contact = false, flag_hyper = false, flag_join = false,
       flag_meet = false, flag_all = false;
  std::vector<std::string> files;

  auto* check = app.add_subcommand("check", "validate a structure's axioms");
  check->add_option("--in", in, "input JSON file")->required();
  check->add_option("--kind", kind,
                    "uc | stack-system | contact | hypercontact | complex");
  check->add_option("--json", json_path, "machine-readable report path");

  auto* enumerate = app.add_subcommand("enumerate", "list finite structures");
  enumerate->add_flag("--stacks{stacks},--grills{grills},--ucs{ucs},"
                      "--complexes{complexes}",
                      what, "what to enumerate")
      ->required();
  enumerate->add_option("--atoms", n_atoms, "atom count")->required();
  enumerate->add_option("--json", json_path, "machine-readable report path");

  auto* convert = app.add_subcommand("convert", "re-encode a structure");
  convert->add_option("--in", in, "input JSON file")->required();
  convert->add_option("--to", to, "uc | stack-system | complex")->required();
  convert->add_option("--out", out_path, "output file");

  auto* derive = app.add_subcommand("derive", "derive relations from a uc");
  derive->add_option("--in", in, "input uc JSON file")->required();
  derive->add_flag("--contact", flag_contact, "binary contact");
  derive->add_flag("--hypercontact", flag_hyper, "hypercontact");
  derive->add_option("--out", out_path, "output file");

  auto* lattice = app.add_subcommand("lattice", "join or meet of ucs");
  lattice->add_flag("--join", flag_join, "set union");
  lattice->add_flag("--meet", flag_meet, "greatest lower bound");
  lattice->add_option("files", files, "uc JSON files")->required();
  lattice->add_option("--out", out_path, "output file");

  auto* extend = app.add_subcommand("extend", "enlarge a uc");
  extend->add_option("--in", in, "input uc JSON file")->required();
  extend->add_option("--grill", grill, "family JSON file holding a grill");
  extend->add_option("--atoms", atoms, "family JSON file holding atoms");
  extend->add_option("--set", set, "family JSON file holding any set");
  extend->add_option("--out", out_path, "output file");

  auto* topo = app.add_subcommand("topology-uc",
                                  "intersection uc of a finite space");
  topo->add_option("--in", in, "space JSON file")->required();
  topo->add_option("--out", out_path, "output file");

  auto* verify = app.add_subcommand("verify", "run theorem suites");
  verify->add_option("--theorem", theorem, "suite id");
  verify->add_flag("--all", flag_all, "run every suite");
  verify->add_option("--json", json_path, "machine-readable report path");

  std::vector<std::string> argv{"uclab"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<char*> raw;
  for (auto& a : argv) raw.push_back(a.data());

  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return do_check(in, kind, json_path, out);
    if (enumerate->parsed()) return do_enumerate(what, n_atoms, json_path, out);
    if (convert->parsed()) return do_convert(in, to, out_path, out);
    if (derive->parsed())
      return do_derive(in, flag_contact, flag_hyper, out_path, out);
    if (lattice->parsed())
      return do_lattice(files, flag_join, flag_meet, out_path, out);
    if (extend->parsed())
      return do_extend(in, grill, atoms, set, out_path, out);
    if (topo->parsed()) return do_topology_uc(in, out_path, out);
    if (verify->parsed()) return do_verify(theorem, flag_all, json_path, out);
    err << "unknown subcommand\n";
    return 2;
  } catch (const CliError& e) {
    err << e.message << "\n";
    return e.code;
  } catch (const AxiomError& e) {
    emit(out, json_path,
         json{{"valid", false}, {"counterexample", report_of(e.report)}});
    return 1;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace uclab::cli
