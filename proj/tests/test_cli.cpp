#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sln/cli.hpp"
#include "sln/io.hpp"

using namespace sln;
namespace fs = std::filesystem;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  int code = cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

fs::path write_matrix(const std::string& name, const json& doc) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream f(p);
  f << doc.dump();
  return p;
}

json shift_matrix_json(Index n) {
  MatrixOf<Rational> m = zero_matrix<Rational>(n);
  for (Index i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
  return matrix_to_json(m, kQ);
}

/// Runs the installed binary; used only where process-level behavior
/// (byte-identical stdout, exit status) is the thing under test.
RunResult run_binary(const std::string& cmdline) {
  std::string full = std::string(SLNGEN_BINARY) + " " + cmdline + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(full.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out, ""};
}

}  // namespace

TEST_CASE("partner command emits a verified certificate") {
  auto path = write_matrix("sln_x3.json", shift_matrix_json(3));
  auto r = run_cli({"partner", path.string()});
  CHECK(r.code == 0);
  json cert = json::parse(r.out);
  CHECK(cert["closure_dim"] == 8);
  CHECK(cert["verified"] == true);
  CHECK(cert["x_nilpotent"] == true);
  CHECK(cert["y_nilpotent"] == true);
}

TEST_CASE("partner rejects bad inputs with the documented codes") {
  auto zero = write_matrix("sln_zero.json", matrix_to_json(zero_matrix<Rational>(2), kQ));
  auto r1 = run_cli({"partner", zero.string()});
  CHECK(r1.code == cli::kPrecondition);
  CHECK(r1.err.find("nonzero nilpotent required") != std::string::npos);

  auto diag = write_matrix("sln_diag.json",
                           matrix_to_json(diagonal_matrix<Rational>({1, -1}), kQ));
  CHECK(run_cli({"partner", diag.string()}).code == cli::kPrecondition);

  fs::path garbage = fs::temp_directory_path() / "sln_garbage.json";
  std::ofstream(garbage) << "{not json";
  CHECK(run_cli({"partner", garbage.string()}).code == cli::kParse);
  CHECK(run_cli({"partner", "/nonexistent/file.json"}).code == cli::kParse);
  CHECK(run_cli({"nonsense-command"}).code == cli::kParse);
}

TEST_CASE("partner reads stdin") {
  auto r = run_cli({"partner", "-"}, shift_matrix_json(2).dump());
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["closure_dim"] == 3);
}

TEST_CASE("verify command reports the closure verdict") {
  auto e12 = write_matrix("sln_e12.json", matrix_to_json(unit_matrix<Rational>(2, 0, 1), kQ));
  auto e21 = write_matrix("sln_e21.json", matrix_to_json(unit_matrix<Rational>(2, 1, 0), kQ));
  auto r = run_cli({"--audit", "verify", e12.string(), e21.string()});
  CHECK(r.code == 0);
  json v = json::parse(r.out);
  CHECK(v["closure_dim"] == 3);
  CHECK(v["generates"] == true);
  CHECK(v["audit_passed"] == true);

  auto self = run_cli({"verify", e12.string(), e12.string()});
  CHECK(json::parse(self.out)["closure_dim"] == 1);
  CHECK(json::parse(self.out)["generates"] == false);

  // example 2 pair at n = 4 must come out negative
  auto m4 = write_matrix("sln_m4.json", shift_matrix_json(4));
  auto n4 = write_matrix("sln_n4.json", matrix_to_json(unit_matrix<Rational>(4, 3, 0), kQ));
  auto r4 = run_cli({"verify", m4.string(), n4.string()});
  CHECK(r4.code == 0);
  CHECK(json::parse(r4.out)["generates"] == false);

  // shape mismatch
  auto e12_3 = write_matrix("sln_e12_3.json", matrix_to_json(unit_matrix<Rational>(3, 0, 1), kQ));
  CHECK(run_cli({"verify", e12.string(), e12_3.string()}).code == cli::kPrecondition);
}

TEST_CASE("closure command accepts several generators") {
  auto e12 = write_matrix("sln_e12b.json", matrix_to_json(unit_matrix<Rational>(3, 0, 1), kQ));
  auto e23 = write_matrix("sln_e23.json", matrix_to_json(unit_matrix<Rational>(3, 1, 2), kQ));
  auto e31 = write_matrix("sln_e31.json", matrix_to_json(unit_matrix<Rational>(3, 2, 0), kQ));
  auto r = run_cli({"closure", e12.string(), e23.string(), e31.string()});
  CHECK(r.code == 0);
  json v = json::parse(r.out);
  CHECK(v["closure_dim"] == 8);
  CHECK(v["basis"].size() == 8);
}

TEST_CASE("consistent and split commands") {
  auto r = run_cli({"consistent", "4"});
  CHECK(r.code == 0);
  json v = json::parse(r.out);
  CHECK(v["values"] == json::array({"1", "2", "4", "-7"}));
  CHECK(v["consistent"] == true);

  auto rp = run_cli({"--field", "fp:13", "--seed", "9", "consistent", "3"});
  CHECK(rp.code == 0);
  CHECK(json::parse(rp.out)["consistent"] == true);

  auto diag = write_matrix("sln_cdiag.json",
                           matrix_to_json(diagonal_matrix<Rational>({1, -1}), kQ));
  auto rs = run_cli({"split", diag.string()});
  CHECK(rs.code == 0);
  json sv = json::parse(rs.out);
  CHECK(sv["checks"]["sum_matches"] == true);
  CHECK(sv["checks"]["a_rank"] == 1);
  CHECK(sv["a"]["entries"][0][0] == "1/2");

  auto bad = write_matrix("sln_baddiag.json",
                          matrix_to_json(diagonal_matrix<Rational>({1, 1}), kQ));
  CHECK(run_cli({"split", bad.string()}).code == cli::kPrecondition);
}

TEST_CASE("examples and f2check commands") {
  CHECK(run_cli({"examples", "example1", "3"}).code == 0);

  auto even = run_cli({"examples", "example2", "4"});
  CHECK(even.code == 0);
  CHECK(json::parse(even.out)["generates"] == false);

  auto odd = run_cli({"examples", "example2", "5"});
  CHECK(odd.code == 0);
  CHECK(json::parse(odd.out)["generates"] == true);

  auto lam = run_cli({"examples", "lambda", "4"});
  CHECK(lam.code == 0);
  CHECK(json::parse(lam.out)["lambda_dim"] == 10);

  CHECK(run_cli({"examples", "lambda12"}).code == 0);
  CHECK(run_cli({"examples", "no-such-example", "3"}).code == cli::kParse);

  auto f2 = run_cli({"f2check"});
  CHECK(f2.code == 0);
  json fv = json::parse(f2.out);
  CHECK(fv["nilpotent_count"] == 64);
  CHECK(fv["no_partner"] == true);

  auto f2text = run_cli({"--format", "text", "f2check"});
  CHECK(f2text.out.find("no nilpotent partner for E_12 in sl_3(F_2)") != std::string::npos);
}

TEST_CASE("examples run over prime fields too") {
  auto r = run_cli({"--field", "fp:11", "--seed", "3", "examples", "example1", "3"});
  CHECK(r.code == 0);
  json v = json::parse(r.out);
  CHECK(v["generates"] == true);
  CHECK(v["field"] == "fp:11");

  // over F_p the example 2 dichotomy is informational, not asserted
  CHECK(run_cli({"--field", "fp:11", "examples", "example2", "4"}).code == 0);
}

TEST_CASE("closure command rejects non-traceless generators") {
  auto id = write_matrix("sln_id.json", matrix_to_json(identity_matrix<Rational>(2), kQ));
  CHECK(run_cli({"closure", id.string()}).code == cli::kPrecondition);
}

TEST_CASE("field flag conflicts and prime-field warnings") {
  auto e12 = write_matrix("sln_e12c.json", matrix_to_json(unit_matrix<Rational>(2, 0, 1), kQ));
  CHECK(run_cli({"--field", "fp:7", "partner", e12.string()}).code == cli::kPrecondition);

  MatrixOf<Fp> xp = bind_matrix(unit_matrix<Fp>(2, 0, 1), 11);
  auto fp_file = write_matrix("sln_fp11.json", matrix_to_json(xp, FieldSpec::prime_field(11)));
  auto r = run_cli({"partner", fp_file.string()});
  CHECK(r.code == 0);
  CHECK(r.err.find("outside the theorem hypotheses") != std::string::npos);
  CHECK(json::parse(r.out)["provenance"]["outside_theorem_hypotheses"] == true);
}

TEST_CASE("identical seeds give byte-identical output from the real binary") {
  auto path = write_matrix("sln_det.json", shift_matrix_json(3));
  auto a = run_binary("--seed 7 partner " + path.string());
  auto b = run_binary("--seed 7 partner " + path.string());
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());

  auto c = run_binary("--seed 8 partner " + path.string());
  CHECK(c.code == 0);  // different seed, still a verified certificate

  // exit codes surface through the real process too
  auto zero = write_matrix("sln_zero2.json", matrix_to_json(zero_matrix<Rational>(2), kQ));
  CHECK(run_binary("partner " + zero.string()).code == cli::kPrecondition);
}
