#ifndef SLN_IO_HPP
#define SLN_IO_HPP

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "sln/construct.hpp"
#include "sln/gallery.hpp"
#include "sln/matrices.hpp"

namespace sln {

using json = nlohmann::json;

// Matrix wire format:
//   {"field": "q" | "fp:<p>", "n": <int>, "entries": [[<scalar>, ...], ...]}
// with scalars encoded as strings ("a/b" or "a" over the rationals, decimal
// residues over prime fields).

template <class S>
json matrix_to_json(const MatrixOf<S>& m, const FieldSpec& field) {
  json entries = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(scalar_to_string(S(m(i, j))));
    entries.push_back(std::move(row));
  }
  return json{{"field", field.name()}, {"n", m.rows()}, {"entries", std::move(entries)}};
}

inline FieldSpec field_of_json(const json& j) {
  if (!j.is_object() || !j.contains("field") || !j["field"].is_string())
    throw ParseError("matrix JSON must carry a \"field\" string");
  return FieldSpec::parse(j["field"].get<std::string>());
}

template <class S>
MatrixOf<S> matrix_from_json(const json& j, const FieldSpec& field) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw ParseError("matrix JSON must carry \"n\" and \"entries\"");
  if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  const Index n = j["n"].get<Index>();
  if (n < 1) throw ParseError("\"n\" must be positive");
  const json& entries = j["entries"];
  if (!entries.is_array() || static_cast<Index>(entries.size()) != n)
    throw ParseError("\"entries\" must be an n x n array");
  MatrixOf<S> m(n, n);
  for (Index i = 0; i < n; ++i) {
    const json& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      throw ParseError("\"entries\" must be an n x n array");
    for (Index j2 = 0; j2 < n; ++j2) {
      const json& cell = row[static_cast<std::size_t>(j2)];
      if (!cell.is_string()) throw ParseError("matrix entries must be strings");
      m(i, j2) = scalar_from_string<S>(cell.get<std::string>(), field);
    }
  }
  return m;
}

template <class S>
json scalars_to_json(const std::vector<S>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(scalar_to_string(v));
  return arr;
}

template <class S>
json witness_to_json(const SimilarityWitness<S>& w, const FieldSpec& field) {
  return json{{"c", matrix_to_json(w.c, field)}, {"c_inv", matrix_to_json(w.c_inv, field)}};
}

template <class S>
json certificate_to_json(const GeneratorCertificate<S>& cert, const FieldSpec& field) {
  return json{
      {"field", field.name()},
      {"n", cert.n},
      {"x", matrix_to_json(cert.x, field)},
      {"y", matrix_to_json(cert.y, field)},
      {"closure_dim", cert.closure_dim},
      {"x_nilpotent", cert.x_nilpotent},
      {"y_nilpotent", cert.y_nilpotent},
      {"verified", cert.verified},
      {"provenance",
       json{{"seed", cert.provenance.seed},
            {"budget", cert.provenance.budget},
            {"attempts", cert.provenance.attempts},
            {"alphas", scalars_to_json(cert.provenance.alphas)},
            {"pattern", scalars_to_json(cert.provenance.pattern)},
            {"form_witness", witness_to_json(cert.provenance.form_witness, field)},
            {"rescaling_witness", witness_to_json(cert.provenance.rescaling_witness, field)},
            {"outside_theorem_hypotheses", cert.provenance.outside_theorem_hypotheses}}},
  };
}

template <class S>
json example1_to_json(const Example1Data<S>& data, const FieldSpec& field) {
  return json{{"example", "example1"},
              {"field", field.name()},
              {"n", data.a.rows()},
              {"alphas", scalars_to_json(data.alphas)},
              {"partial_sums", scalars_to_json(data.partial_sums)},
              {"a", matrix_to_json(data.a, field)},
              {"b", matrix_to_json(data.b, field)},
              {"closure_dim", data.closure_dim},
              {"generates", data.generates}};
}

template <class S>
json example2_to_json(const Example2Result<S>& data, const FieldSpec& field) {
  return json{{"example", "example2"},
              {"field", field.name()},
              {"n", data.m.rows()},
              {"m", matrix_to_json(data.m, field)},
              {"n_matrix", matrix_to_json(data.nn, field)},
              {"closure_dim", data.closure_dim},
              {"generates", data.generates}};
}

template <class S>
json obstruction_to_json(const ObstructionReport<S>& report, const FieldSpec& field) {
  json basis = json::array();
  for (const auto& b : report.lambda_basis) basis.push_back(matrix_to_json(b, field));
  return json{{"example", "lambda"},
              {"field", field.name()},
              {"n", report.n},
              {"lambda_dim", report.lambda_dim},
              {"lambda_basis", std::move(basis)},
              {"bracket_closed", report.bracket_closed},
              {"proper", report.proper},
              {"contains_m", report.contains_m},
              {"contains_n", report.contains_n},
              {"closure_dim", report.closure_dim},
              {"closure_contained", report.closure_contained}};
}

inline json f2_report_to_json(const F2Report& report) {
  json dims = json::object();
  for (const auto& [dim, count] : report.closure_dim_counts)
    dims[std::to_string(dim)] = count;
  return json{{"example", "f2check"},
              {"field", "fp:2"},
              {"n", 3},
              {"total_candidates", report.total},
              {"nilpotent_count", report.nilpotent_count},
              {"nilpotent_formula", report.nilpotent_formula},
              {"max_closure_dim", report.max_closure_dim},
              {"no_partner", report.no_partner},
              {"closure_dim_counts", std::move(dims)},
              {"rank1_candidates", report.rank1_candidates},
              {"persymmetric_candidates", report.persymmetric_candidates},
              {"representative_dims",
               json::array({report.representative_dims[0], report.representative_dims[1],
                            report.representative_dims[2]})}};
}

inline json lambda12_to_json(const Lambda12Report& report) {
  return json{{"example", "lambda12"},
              {"field", "fp:2"},
              {"n", 3},
              {"lambda1_dim", report.lambda1_dim},
              {"lambda2_dim", report.lambda2_dim},
              {"lambda1_closed", report.lambda1_closed},
              {"lambda2_closed", report.lambda2_closed},
              {"a1_in_lambda1", report.a1_in_lambda1},
              {"b_in_lambda1", report.b_in_lambda1},
              {"a2_in_lambda2", report.a2_in_lambda2},
              {"a3_in_lambda2", report.a3_in_lambda2},
              {"b_in_lambda2", report.b_in_lambda2},
              {"all_hold", report.all_hold()}};
}

template <class S>
json consistent_to_json(const ConsistentSet<S>& s) {
  return json{{"field", s.field.name()},
              {"n", s.values.size()},
              {"values", scalars_to_json(s.values)},
              {"consistent", verify_consistent(s)}};
}

}  // namespace sln

#endif  // SLN_IO_HPP
