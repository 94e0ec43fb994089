#ifndef DQSIM_SERIALIZE_HPP
#define DQSIM_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "dqsim/discrete.hpp"
#include "dqsim/field.hpp"
#include "dqsim/linalg.hpp"

namespace dqsim {

using json = nlohmann::json;

inline json to_json(const FieldSpec& ctx) { return json{{"p", ctx.p}, {"degree", ctx.degree}}; }

inline FieldSpec field_from_json(const json& j) {
  return FieldSpec::validate(j.at("p").get<long long>(), j.at("degree").get<int>());
}

/// Elements serialize as symmetric-range integers: [re, im] at degree 2,
/// a bare integer at degree 1.
inline json to_json(const Fq& a) {
  if (a.ctx().degree == 1) return to_symmetric(a.re(), a.ctx().p);
  return json::array({to_symmetric(a.re(), a.ctx().p), to_symmetric(a.im(), a.ctx().p)});
}

inline Fq element_from_json(const json& j, FieldSpec ctx) {
  if (j.is_array()) return Fq(j.at(0).get<long long>(), j.at(1).get<long long>(), ctx);
  return Fq(j.get<long long>(), ctx);
}

inline json to_json(const Vector& v) {
  json entries = json::array();
  for (std::size_t j = 0; j < v.dim(); ++j) entries.push_back(to_json(v[j]));
  return json{{"dim", v.dim()}, {"entries", entries}};
}

inline Vector vector_from_json(const json& j, FieldSpec ctx) {
  std::vector<Fq> entries;
  for (const json& e : j.at("entries")) entries.push_back(element_from_json(e, ctx));
  if (entries.size() != j.at("dim").get<std::size_t>()) throw DimensionMismatch();
  return Vector(std::move(entries), ctx);
}

inline json to_json(const Matrix& m) {
  json entries = json::array();
  for (const Fq& e : m.entries()) entries.push_back(to_json(e));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline Matrix matrix_from_json(const json& j, FieldSpec ctx) {
  std::vector<Fq> entries;
  for (const json& e : j.at("entries")) entries.push_back(element_from_json(e, ctx));
  return Matrix(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                std::move(entries), ctx);
}

inline json to_json(const OracleTable& f) {
  json outputs = json::array();
  for (auto b : f.outputs) outputs.push_back(b ? 1 : 0);
  return json{{"n", f.n}, {"outputs", outputs}};
}

inline OracleTable oracle_from_json(const json& j) {
  std::vector<std::uint8_t> outputs;
  for (const json& e : j.at("outputs")) outputs.push_back(e.get<int>() ? 1 : 0);
  return OracleTable(j.at("n").get<std::size_t>(), std::move(outputs));
}

inline json to_json(const discrete::BlochCensus& c) {
  json reps = json::array();
  for (const Vector& v : c.class_reps) {
    json rep = json::array();
    for (std::size_t j = 0; j < v.dim(); ++j)
      rep.push_back(json::array({v[j].re(), v[j].im()}));
    reps.push_back(rep);
  }
  return json{{"p", c.p},
              {"unit_vectors", c.unit_vectors},
              {"classes", c.classes},
              {"phases", c.phases},
              {"matches_formula", c.matches_formula},
              {"reps", reps}};
}

inline std::string to_csv(const discrete::BlochCensus& c) {
  std::string out = "p,unit_vectors,classes,phases,rep0_re,rep0_im,rep1_re,rep1_im\n";
  for (const Vector& v : c.class_reps) {
    out += std::to_string(c.p) + "," + std::to_string(c.unit_vectors) + "," +
           std::to_string(c.classes) + "," + std::to_string(c.phases);
    for (std::size_t j = 0; j < v.dim(); ++j)
      out += "," + std::to_string(v[j].re()) + "," + std::to_string(v[j].im());
    out += "\n";
  }
  return out;
}

}  // namespace dqsim

#endif
