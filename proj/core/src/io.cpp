#include "skewalex/io.hpp"

#include <cctype>
#include <fstream>

#include "skewalex/errors.hpp"

namespace skewalex::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

IntMat int_matrix_from(const json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) fail("integer matrix row count");
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != cols) fail("integer matrix row size");
    for (int c = 0; c < cols; ++c) m.at(i, c) = row.at(c).get<std::int64_t>();
  }
  return m;
}

json int_matrix_to(const IntMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class rational_from_string(const std::string& s) {
  try {
    mpq_class q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail("malformed rational '" + s + "'");
  }
}

json field_to_json(const FieldSpec& spec) {
  switch (spec.kind()) {
    case FieldKind::rationals: return json{{"field", "Q"}};
    case FieldKind::prime_field: return json{{"field", "Fp"}, {"p", spec.prime()}};
    case FieldKind::rat_fun:
      return json{{"field", "ratfun"}, {"m", spec.vars()}, {"A", int_matrix_to(spec.automorphism())}};
  }
  fail("unknown field kind");
}

FieldSpec field_from_json(const json& j) {
  const std::string kind = require(j, "field").get<std::string>();
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "Fp") return FieldSpec::prime_field(require(j, "p").get<std::int64_t>());
  if (kind == "ratfun") {
    const int m = require(j, "m").get<int>();
    return FieldSpec::rat_fun(m, int_matrix_from(require(j, "A"), m, m));
  }
  fail("unknown field '" + kind + "'");
}

json scalar_to_json(const Scalar& s) {
  switch (s.spec().kind()) {
    case FieldKind::rationals: return rational_to_string(s.rational_value());
    case FieldKind::prime_field: return s.residue_value();
    case FieldKind::rat_fun: {
      auto poly_terms = [](const MPoly& p) {
        json terms = json::array();
        for (const auto& [e, c] : p.terms()) {
          json ev = json::array();
          for (auto x : e) ev.push_back(x);
          terms.push_back(json::array({c.get_str(), ev}));
        }
        return terms;
      };
      const auto& f = s.ratfun_value();
      return json{{"num", poly_terms(f.num)}, {"den", poly_terms(f.den)}};
    }
  }
  fail("unknown field kind");
}

Scalar scalar_from_json(const FieldSpec& spec, const json& j) {
  switch (spec.kind()) {
    case FieldKind::rationals:
      if (j.is_number_integer()) return Scalar::from_int(spec, j.get<std::int64_t>());
      return Scalar::rational(spec, rational_from_string(j.get<std::string>()));
    case FieldKind::prime_field:
      if (j.is_number_integer()) return Scalar::from_int(spec, j.get<std::int64_t>());
      return Scalar::rational(spec, rational_from_string(j.get<std::string>()));
    case FieldKind::rat_fun: {
      auto poly_from = [&](const json& terms) {
        MPoly p(spec.vars());
        if (!terms.is_array()) fail("ratfun polynomial must be a term list");
        for (const json& t : terms) {
          if (!t.is_array() || t.size() != 2) fail("ratfun term must be [coeff, exponents]");
          mpz_class c(t.at(0).is_string() ? t.at(0).get<std::string>()
                                          : std::to_string(t.at(0).get<std::int64_t>()));
          const json& ev = t.at(1);
          if (static_cast<int>(ev.size()) != spec.vars()) fail("ratfun exponent length");
          Exponents e(spec.vars());
          for (int i = 0; i < spec.vars(); ++i) e[i] = ev.at(i).get<std::int64_t>();
          p.add_term(e, c);
        }
        return p;
      };
      const MPoly num = poly_from(require(j, "num"));
      const MPoly den = j.contains("den") ? poly_from(j.at("den"))
                                          : MPoly::constant(spec.vars(), 1);
      return Scalar::fraction(spec, num, den);
    }
  }
  fail("unknown field kind");
}

json poly_to_json(const SkewPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.coeffs()) terms.push_back(json::array({e, scalar_to_json(c)}));
  return terms;
}

SkewPoly poly_from_json(const FieldSpec& spec, const json& j) {
  if (!j.is_array()) fail("polynomial must be a [exponent, coefficient] list");
  SkewPoly p(spec);
  for (const json& t : j) {
    if (!t.is_array() || t.size() != 2) fail("polynomial term must be [exponent, coefficient]");
    p.add_term(t.at(0).get<std::int64_t>(), scalar_from_json(spec, t.at(1)));
  }
  return p;
}

SpaceMode InputDocument::mode() const {
  if (presentation && presentation->kind() == PresentationKind::balanced_closed)
    return SpaceMode::closed;
  return SpaceMode::two_complex;
}

const AdmissiblePair& InputDocument::pair_named(const std::string& name) const {
  for (const auto& p : pairs)
    if (p.name() == name) return p;
  throw ParseError("no pair named '" + name + "' in the document");
}

InputDocument parse_input(const json& doc) {
  if (!doc.is_object()) fail("input document must be a JSON object");
  InputDocument in;
  in.field = doc.contains("field") ? field_from_json(doc.at("field")) : FieldSpec::rationals();

  if (doc.contains("complex")) {
    const json& cj = doc.at("complex");
    const FieldSpec spec = cj.contains("field") ? field_from_json(cj.at("field")) : in.field;
    std::vector<int> ranks;
    for (const json& r : require(cj, "ranks")) ranks.push_back(r.get<int>());
    std::vector<SkewMatrix> boundaries;
    const json& bj = require(cj, "boundaries");
    for (size_t i = 0; i + 1 < ranks.size(); ++i) {
      if (i >= bj.size()) fail("missing boundary matrix");
      const json& mj = bj.at(i);
      SkewMatrix m(spec, ranks[i], ranks[i + 1]);
      if (static_cast<int>(mj.size()) != ranks[i]) fail("boundary row count");
      for (int r = 0; r < ranks[i]; ++r) {
        if (static_cast<int>(mj.at(r).size()) != ranks[i + 1]) fail("boundary column count");
        for (int c = 0; c < ranks[i + 1]; ++c) m.at(r, c) = poly_from_json(spec, mj.at(r).at(c));
      }
      boundaries.push_back(std::move(m));
    }
    in.complex.emplace(spec, std::move(ranks), std::move(boundaries));
  }

  if (doc.contains("presentation")) {
    const json& pj = doc.at("presentation");
    std::vector<std::string> gens;
    for (const json& g : require(pj, "generators")) gens.push_back(g.get<std::string>());
    for (const auto& g : gens)
      if (g.size() != 1 || !std::islower(static_cast<unsigned char>(g[0])))
        fail("generator names must be single lowercase letters");
    const std::string kind_s = pj.value("kind", std::string("deficiency_one"));
    PresentationKind kind;
    if (kind_s == "deficiency_one") kind = PresentationKind::deficiency_one;
    else if (kind_s == "balanced_closed") kind = PresentationKind::balanced_closed;
    else fail("unknown presentation kind '" + kind_s + "'");
    std::vector<Word> relators;
    for (const json& r : require(pj, "relators"))
      relators.push_back(Word::parse(r.get<std::string>(), gens));
    std::vector<Word> duals;
    if (pj.contains("dual_words"))
      for (const json& d : pj.at("dual_words")) duals.push_back(Word::parse(d.get<std::string>(), gens));
    in.presentation.emplace(gens, std::move(relators), kind, std::move(duals));
    in.knot = pj.value("knot", false);
    in.fibered = pj.value("fibered", false);
    if (pj.contains("declared_norm"))
      in.declared_norm = pj.at("declared_norm").is_string()
                             ? rational_from_string(pj.at("declared_norm").get<std::string>())
                             : mpq_class(pj.at("declared_norm").get<std::int64_t>());

    const json& phij = require(doc, "phi");
    IntVec values;
    for (const auto& g : gens) {
      if (!phij.contains(g)) fail("phi missing generator '" + g + "'");
      values.push_back(phij.at(g).get<std::int64_t>());
    }
    try {
      in.phi.emplace(*in.presentation, values);
    } catch (const Error& e) {
      fail(std::string("invalid phi: ") + e.what());
    }

    if (doc.contains("rep")) {
      const json& rj = doc.at("rep");
      const int d = require(rj, "dimension").get<int>();
      const json& mats = require(rj, "matrices");
      std::vector<KMatrix> images;
      for (const auto& g : gens) {
        if (!mats.contains(g)) fail("rep missing generator '" + g + "'");
        const json& mj = mats.at(g);
        KMatrix m(in.field, d, d);
        if (static_cast<int>(mj.size()) != d) fail("rep matrix row count");
        for (int i = 0; i < d; ++i) {
          if (static_cast<int>(mj.at(i).size()) != d) fail("rep matrix column count");
          for (int j = 0; j < d; ++j) m.at(i, j) = scalar_from_json(in.field, mj.at(i).at(j));
        }
        images.push_back(std::move(m));
      }
      in.rep.emplace(*in.presentation, in.field, d, std::move(images));
    }

    if (doc.contains("pairs")) {
      for (const json& qj : doc.at("pairs")) {
        const int m = require(qj, "m").get<int>();
        IntMat aut = m == 0 ? IntMat(0, 0) : int_matrix_from(require(qj, "A"), m, m);
        const json& imgs = require(qj, "images");
        std::vector<PairElem> images;
        for (const auto& g : gens) {
          if (!imgs.contains(g)) fail("pair missing generator '" + g + "'");
          const json& ij = imgs.at(g);
          PairElem e;
          e.n = require(ij, "n").get<std::int64_t>();
          if (m > 0) {
            const json& vj = require(ij, "v");
            if (static_cast<int>(vj.size()) != m) fail("pair image vector length");
            for (const json& x : vj) e.v.push_back(x.get<std::int64_t>());
          }
          images.push_back(std::move(e));
        }
        in.pairs.emplace_back(*in.presentation, *in.phi, m, std::move(aut), std::move(images),
                              qj.value("name", std::string{}));
      }
    }

    if (doc.contains("triple")) {
      const json& tj = doc.at("triple");
      TripleSpec ts;
      ts.pair1 = require(tj, "pair1").get<std::string>();
      ts.pair2 = require(tj, "pair2").get<std::string>();
      const AdmissiblePair& p1 = in.pair_named(ts.pair1);
      const AdmissiblePair& p2 = in.pair_named(ts.pair2);
      ts.map.matrix = int_matrix_from(require(tj, "matrix"), p2.m(), p1.m());
      if (tj.contains("mu_image"))
        for (const json& x : tj.at("mu_image")) ts.map.mu_image_v.push_back(x.get<std::int64_t>());
      if (static_cast<int>(ts.map.mu_image_v.size()) != p2.m()) fail("triple mu_image length");
      in.triple = std::move(ts);
    }
  }

  if (!in.presentation && !in.complex)
    fail("document needs a presentation or a raw complex");
  return in;
}

InputDocument parse_input_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail("cannot open input file '" + path + "'");
  json doc;
  try {
    f >> doc;
  } catch (const json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  return parse_input(doc);
}

json serialize_input(const InputDocument& in) {
  json doc;
  doc["field"] = field_to_json(in.field);
  if (in.presentation) {
    const auto& p = *in.presentation;
    json pj;
    pj["generators"] = p.generator_names();
    json rels = json::array();
    for (const Word& r : p.relators()) rels.push_back(r.to_string(p.generator_names()));
    pj["relators"] = std::move(rels);
    pj["kind"] = p.kind() == PresentationKind::deficiency_one ? "deficiency_one"
                                                              : "balanced_closed";
    if (!p.dual_words().empty()) {
      json duals = json::array();
      for (const Word& d : p.dual_words()) duals.push_back(d.to_string(p.generator_names()));
      pj["dual_words"] = std::move(duals);
    }
    if (in.knot) pj["knot"] = true;
    if (in.fibered) pj["fibered"] = true;
    if (in.declared_norm) pj["declared_norm"] = rational_to_string(*in.declared_norm);
    doc["presentation"] = std::move(pj);
    json phij;
    for (int g = 0; g < p.generator_count(); ++g)
      phij[p.generator_names()[g]] = in.phi->value(g);
    doc["phi"] = std::move(phij);
    if (in.rep) {
      json rj;
      rj["dimension"] = in.rep->dim();
      json mats;
      for (int g = 0; g < p.generator_count(); ++g) {
        json mj = json::array();
        for (int i = 0; i < in.rep->dim(); ++i) {
          json row = json::array();
          for (int j = 0; j < in.rep->dim(); ++j)
            row.push_back(scalar_to_json(in.rep->image(g).at(i, j)));
          mj.push_back(std::move(row));
        }
        mats[p.generator_names()[g]] = std::move(mj);
      }
      rj["matrices"] = std::move(mats);
      doc["rep"] = std::move(rj);
    }
    if (!in.pairs.empty()) {
      json pairs = json::array();
      for (const auto& q : in.pairs) {
        json qj;
        if (!q.name().empty()) qj["name"] = q.name();
        qj["m"] = q.m();
        if (q.m() > 0) qj["A"] = int_matrix_to(q.automorphism());
        json imgs;
        for (int g = 0; g < p.generator_count(); ++g) {
          json ij;
          ij["n"] = q.image(g).n;
          if (q.m() > 0) {
            json vj = json::array();
            for (auto x : q.image(g).v) vj.push_back(x);
            ij["v"] = std::move(vj);
          }
          imgs[p.generator_names()[g]] = std::move(ij);
        }
        qj["images"] = std::move(imgs);
        pairs.push_back(std::move(qj));
      }
      doc["pairs"] = std::move(pairs);
    }
    if (in.triple) {
      json tj;
      tj["pair1"] = in.triple->pair1;
      tj["pair2"] = in.triple->pair2;
      tj["matrix"] = int_matrix_to(in.triple->map.matrix);
      json mu = json::array();
      for (auto x : in.triple->map.mu_image_v) mu.push_back(x);
      tj["mu_image"] = std::move(mu);
      doc["triple"] = std::move(tj);
    }
  }
  if (in.complex) {
    json cj;
    cj["field"] = field_to_json(in.complex->spec());
    cj["ranks"] = in.complex->ranks();
    json bs = json::array();
    for (int i = 1; i <= in.complex->top_dimension(); ++i) {
      const SkewMatrix& m = in.complex->boundary(i);
      json mj = json::array();
      for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(poly_to_json(m.at(r, c)));
        mj.push_back(std::move(row));
      }
      bs.push_back(std::move(mj));
    }
    cj["boundaries"] = std::move(bs);
    doc["complex"] = std::move(cj);
  }
  return doc;
}

}  // namespace skewalex::io
