#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "uclab/cli.hpp"
#include "uclab/json_io.hpp"

using namespace uclab;
using io::json;

namespace {

BooleanAlgebra b3() { return BooleanAlgebra({"a", "b", "c"}); }

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const json& j)
      : path("uclab_test_" + name + ".json") {
    io::save_file(path, j);
  }
  ~TempFile() { std::remove(path.c_str()); }
};

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("serialization round trips are idempotent") {
  const auto b = b3();

  auto idempotent = [](const json& j, auto load, auto save) {
    const auto first = save(load(j));
    const auto second = save(load(first));
    CHECK(io::canonical_dump(first) == io::canonical_dump(second));
  };

  idempotent(io::uc_to_json(kmin(b), /*include_explicit=*/true),
             io::uc_from_json,
             [](const Ultracontact& k) { return io::uc_to_json(k, true); });
  idempotent(io::ss_to_json(smin(b)), io::ss_from_json, io::ss_to_json);
  idempotent(io::contact_to_json(overlap_contact(b)), io::contact_from_json,
             io::contact_to_json);
  idempotent(io::hypercontact_to_json(derive_hypercontact(kmin(b))),
             io::hypercontact_from_json, io::hypercontact_to_json);
  idempotent(io::complex_to_json(sigma(kmax(b))), io::complex_from_json,
             io::complex_to_json);
  idempotent(
      io::space_to_json(make_space({"l", "m", "r"},
                                   {0b000, 0b001, 0b100, 0b101, 0b111})),
      io::space_from_json, io::space_to_json);
  idempotent(io::family_to_json(Family::from_masks(b, {0, 3, 5})),
             io::family_from_json, io::family_to_json);
}

TEST_CASE("element and algebra encodings") {
  const auto b = b3();
  CHECK(io::element_to_json(b.zero()) == json::array());
  CHECK(io::element_to_json(b.element(0b101)) == json({"a", "c"}));
  CHECK(io::element_from_json(b, json({"c", "a"})) == b.element(0b101));
  CHECK_THROWS_AS(io::element_from_json(b, json({"q"})), InvalidInput);
  CHECK(io::algebra_from_json(io::algebra_to_json(b)).same_as(b));
}

TEST_CASE("detect_kind") {
  CHECK(io::detect_kind(io::uc_to_json(kmin(b3()))) == "uc");
  CHECK(io::detect_kind(json{{"witnesses", json::array()},
                             {"algebra", {{"atoms", {"a"}}}}}) == "uc");
  CHECK(io::detect_kind(json{{"atoms", {"a"}}}) == "algebra");
  CHECK_THROWS_AS(io::detect_kind(json{{"foo", 1}}), InvalidInput);
}

TEST_CASE("cli check") {
  const auto b = b3();
  TempFile good("kmin", io::uc_to_json(kmin(b), true));
  auto r = run_cli({"check", "--in", good.path});
  CHECK(r.code == 0);
  CHECK(r.out == "valid ultracontact\n");

  // a witness list without the principal up-sets
  TempFile bad("bad_uc",
               json{{"kind", "uc"},
                    {"algebra", {{"atoms", {"a", "b", "c"}}}},
                    {"witnesses", {{{"a"}}}}});
  r = run_cli({"check", "--in", bad.path});
  CHECK(r.code == 1);
  const auto report = json::parse(r.out);
  CHECK(report["valid"] == false);
  CHECK(report["counterexample"]["axiom"] == "SS2");

  TempFile contact("overlap", io::contact_to_json(overlap_contact(b)));
  r = run_cli({"check", "--in", contact.path});
  CHECK(r.code == 0);
  CHECK(r.out == "valid contact relation\n");

  TempFile complex_bad("bad_complex",
                       json{{"kind", "complex"},
                            {"vertices", {"a", "b", "c"}},
                            {"faces", {{"a"}, {"b"}}}});
  r = run_cli({"check", "--in", complex_bad.path});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["counterexample"]["axiom"] == "SC1");

  r = run_cli({"check", "--in", "no_such_file.json"});
  CHECK(r.code == 2);
}

TEST_CASE("cli enumerate") {
  auto r = run_cli({"enumerate", "--ucs", "--atoms", "3"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["count"] == 9);

  r = run_cli({"enumerate", "--stacks", "--atoms", "3"});
  CHECK(json::parse(r.out)["count"] == 20);

  r = run_cli({"enumerate", "--grills", "--atoms", "3"});
  CHECK(json::parse(r.out)["count"] == 7);

  r = run_cli({"enumerate", "--complexes", "--atoms", "4"});
  CHECK(json::parse(r.out)["count"] == 114);

  r = run_cli({"enumerate", "--ucs", "--atoms", "9"});
  CHECK(r.code == 2);
}

TEST_CASE("cli convert, derive, lattice, extend, topology-uc") {
  const auto b = b3();
  TempFile kmin_file("kmin2", io::uc_to_json(kmin(b)));

  auto r = run_cli({"convert", "--in", kmin_file.path, "--to", "complex"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["faces"].size() == 3);

  r = run_cli({"convert", "--in", kmin_file.path, "--to", "stack-system"});
  CHECK(r.code == 0);
  const auto ss = json::parse(r.out);
  CHECK(ss["kind"] == "stack-system");
  CHECK(ss["witnesses"].size() == 10);
  {
    TempFile ss_file("ssround", ss);
    r = run_cli({"convert", "--in", ss_file.path, "--to", "uc"});
    CHECK(r.code == 0);
    CHECK(io::uc_from_json(json::parse(r.out)) == kmin(b));
  }

  r = run_cli({"derive", "--contact", "--in", kmin_file.path});
  CHECK(r.code == 0);
  CHECK(io::contact_from_json(json::parse(r.out)) == overlap_contact(b));

  r = run_cli({"derive", "--hypercontact", "--in", kmin_file.path});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["kind"] == "hypercontact");

  TempFile kab("kab",
               io::uc_to_json(extend_by_atoms(
                   kmin(b), Family::from_masks(b, {1, 2}))));
  TempFile kac("kac",
               io::uc_to_json(extend_by_atoms(
                   kmin(b), Family::from_masks(b, {1, 4}))));
  r = run_cli({"lattice", "--meet", kab.path, kac.path});
  CHECK(r.code == 0);
  CHECK(io::uc_from_json(json::parse(r.out)) == kmin(b));
  r = run_cli({"lattice", "--join", kab.path, kac.path});
  CHECK(io::uc_from_json(json::parse(r.out)).witness_count() == 16);

  TempFile atoms_file("atoms",
                      io::family_to_json(Family::from_masks(b, {1, 2})));
  r = run_cli({"extend", "--in", kmin_file.path, "--atoms", atoms_file.path});
  CHECK(r.code == 0);
  CHECK(io::uc_from_json(json::parse(r.out)) ==
        extend_by_atoms(kmin(b), Family::from_masks(b, {1, 2})));

  TempFile set_file("set", io::family_to_json(Family::from_masks(b, {1, 2})));
  r = run_cli({"extend", "--in", kmin_file.path, "--set", set_file.path});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["is_uc"] == false);

  TempFile nonatom("nonatom",
                   io::family_to_json(Family::from_masks(b, {3, 4})));
  r = run_cli({"extend", "--in", kmin_file.path, "--atoms", nonatom.path});
  CHECK(r.code == 2);

  TempFile space("space",
                 io::space_to_json(make_space(
                     {"l", "m", "r"}, {0b000, 0b001, 0b100, 0b101, 0b111})));
  r = run_cli({"topology-uc", "--in", space.path});
  CHECK(r.code == 0);
  const auto uc = io::uc_from_json(json::parse(r.out));
  CHECK(uc == kmax(uc.algebra()));
}

TEST_CASE("cli verify") {
  auto r = run_cli({"verify", "--theorem", "meet-not-intersection"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS meet-not-intersection") == 0);

  r = run_cli({"verify", "--theorem", "no-such-id"});
  CHECK(r.code == 2);

  TempFile report("verify_all", json::object());
  r = run_cli({"verify", "--all", "--json", report.path});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const auto doc = io::load_file(report.path);
  CHECK(doc["passed"] == true);
  CHECK(doc["suites"].size() == 20);
}

TEST_CASE("UCLAB_MAX_ATOMS lowers the enumeration caps") {
  setenv("UCLAB_MAX_ATOMS", "2", 1);
  CHECK(run_cli({"enumerate", "--ucs", "--atoms", "3"}).code == 2);
  CHECK(run_cli({"enumerate", "--ucs", "--atoms", "2"}).code == 0);
  unsetenv("UCLAB_MAX_ATOMS");
  CHECK(run_cli({"enumerate", "--ucs", "--atoms", "3"}).code == 0);
}

TEST_CASE("cli rejects unknown subcommands and bad flags") {
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"enumerate", "--atoms", "3"}).code == 2);  // missing kind
  CHECK(run_cli({}).code == 2);
}
