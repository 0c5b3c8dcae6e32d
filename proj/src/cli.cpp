#include "polycyc/cli.hpp"

#include "polycyc/serial.hpp"
#include "polycyc/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>

namespace polycyc::cli {

namespace {

struct Options {
  std::string ring, f, elem, omega, gens, form, spectrum, lambda, xi, f1, f2, omega1, omega2;
  unsigned n = 0;
  std::string output;
  std::uint64_t seed = 0;
  bool pretty = false;
};

// Renders values either as nested coordinate lists or, with --pretty, as
// human-readable strings.
struct Emit {
  bool pretty;

  json elem(const GaloisRing& ring, const RingElem& a) const {
    return pretty ? json(ring.to_string(a)) : elem_to_json(a);
  }
  json vec(const GaloisRing& ring, std::span<const RingElem> v) const {
    if (!pretty) return vector_to_json(v);
    json j = json::array();
    for (const auto& a : v) j.push_back(ring.to_string(a));
    return j;
  }
  json poly(const Poly& f) const { return pretty ? json(f.to_string()) : poly_to_json(f); }
  json quot(const QuotElem& g) const { return pretty ? json(g.as_poly().to_string()) : vector_to_json(g.coeffs()); }
  json matrix(const RingMatrix& m) const {
    json j = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(vec(m.ring(), m.row(i)));
    return j;
  }
  json code(const Code& c) const {
    json j = code_to_json(c);
    j["basis"] = matrix(c.basis().matrix());
    return j;
  }
};

const std::string& need(const std::string& value, const std::string& flag) {
  if (value.empty()) throw ParseError("missing required option " + flag);
  return value;
}

GaloisRing ring_of(const Options& o) { return ring_from_json(parse_json_text(need(o.ring, "--ring"), "--ring")); }

Poly poly_arg(const GaloisRing& ring, const std::string& text, const std::string& flag) {
  return poly_from_json(ring, parse_json_text(need(text, flag), flag));
}

QuotElem quot_arg(const AmbientSpace& amb, const std::string& text, const std::string& flag) {
  return QuotElem::from_poly(amb, poly_arg(amb.ring(), text, flag));
}

std::vector<json> list_arg(const std::string& text, const std::string& flag) {
  const json j = parse_json_text(need(text, flag), flag);
  if (!j.is_array()) throw ParseError(flag + " must be a JSON list");
  return std::vector<json>(j.begin(), j.end());
}

json code_job(const Options& o, const std::function<json(const Code&, const Emit&)>& body) {
  const GaloisRing ring = ring_of(o);
  const Poly f = poly_arg(ring, o.f, "--f");
  const AlgebraPtr alg = univariate_algebra(f, o.seed);
  const AmbientSpace amb(f);
  std::vector<RowVector> gens;
  for (const auto& g : list_arg(o.gens, "--gens")) gens.push_back(QuotElem::from_poly(amb, poly_from_json(ring, g)).coeffs());
  const Emit e{o.pretty};
  json out = body(code_from_generators(alg, gens), e);
  out["ring"] = ring_to_json(ring);
  out["f"] = e.poly(f);
  return out;
}

json report_json(const DualityReport& r, const Emit& e) {
  json j;
  j["ann"] = e.code(r.ann);
  j["trace"] = e.code(r.trace);
  j["star"] = r.star ? e.code(*r.star) : json(nullptr);
  j["zero"] = r.zero ? e.code(*r.zero) : json(nullptr);
  j["trace_eq_ann"] = r.trace_eq_ann;
  j["star_eq_ann"] = r.star ? json(r.star_eq_ann) : json(nullptr);
  j["zero_eq_ann"] = r.zero ? json(r.zero_eq_ann) : json(nullptr);
  j["all_equal"] = r.all_equal;
  j["notes"] = r.notes;
  return j;
}

json verdict_json(const IsometryVerdict& v, const Emit& e, const GaloisRing& ring) {
  json j;
  j["kind"] = to_string(v.kind);
  j["rule"] = v.rule;
  j["rule_isometric"] = v.rule_isometric;
  j["w_monomial"] = v.w_monomial;
  j["agrees"] = v.agrees;
  j["target_h"] = v.target_h ? e.poly(*v.target_h) : json(nullptr);
  if (v.witness) {
    j["W"] = e.matrix(v.witness->W);
    j["detW"] = e.elem(ring, v.witness->det);
    if (v.kind != VerdictKind::NotApplicable) j["h"] = e.poly(v.witness->h);
  }
  if (v.monomial.monomial) {
    j["permutation"] = v.monomial.permutation;
    j["units"] = e.vec(ring, v.monomial.units);
  }
  j["counterexample_power"] = v.counterexample ? json(*v.counterexample) : json(nullptr);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

BivAmbient biv_of(const Options& o, const GaloisRing& ring) {
  return BivAmbient(poly_arg(ring, o.f1, "--f1"), poly_arg(ring, o.f2, "--f2"));
}

using Handler = std::function<json(const Options&)>;

std::map<std::string, Handler> handlers() {
  std::map<std::string, Handler> h;

  h["factor"] = [](const Options& o) {
    const GaloisRing ring = ring_of(o);
    const Poly f = poly_arg(ring, o.f, "--f");
    const Factorization fac = factor(f, o.seed);
    const Emit e{o.pretty};
    json j{{"ring", ring_to_json(ring)}, {"f", e.poly(f)}, {"in_class_J", true}};
    j["factors"] = json::array();
    j["residue_factors"] = json::array();
    for (const auto& g : fac.factors) j["factors"].push_back(e.poly(g));
    for (const auto& g : fac.residue_factors) j["residue_factors"].push_back(e.poly(g));
    return j;
  };

  h["idempotents"] = [](const Options& o) {
    const GaloisRing ring = ring_of(o);
    const Poly f = poly_arg(ring, o.f, "--f");
    const IdempotentSet ids = idempotents(f, o.seed);
    const Emit e{o.pretty};
    json j{{"ring", ring_to_json(ring)}, {"f", e.poly(f)}};
    j["factors"] = json::array();
    j["idempotents"] = json::array();
    for (std::size_t i = 0; i < ids.idems.size(); ++i) {
      j["factors"].push_back(e.poly(ids.factorization.factors[i]));
      j["idempotents"].push_back(e.quot(ids.idems[i]));
    }
    return j;
  };

  h["split"] = [](const Options& o) {
    const GaloisRing ring = ring_of(o);
    const Poly f = poly_arg(ring, o.f, "--f");
    const SplittingData s = splitting_extension(f, o.seed);
    const Emit e{o.pretty};
    return json{{"ring", ring_to_json(ring)},
                {"f", e.poly(f)},
                {"extension", ring_to_json(s.extension)},
                {"generator_image", e.elem(s.extension, s.embedding.image_of_generator())},
                {"roots", e.vec(s.extension, s.roots)}};
  };

  h["ms"] = [](const Options& o) {
    const GaloisRing ring = ring_of(o);
    const Poly f = poly_arg(ring, o.f, "--f");
    const AmbientSpace amb(f);
    const MattsonSolomon ms(splitting_extension(f, o.seed));
    const Spectrum b = ms.forward(quot_arg(amb, o.elem, "--elem"));
    const Emit e{o.pretty};
    return json{{"extension", ring_to_json(ms.extension())},
                {"roots", e.vec(ms.extension(), ms.splitting().roots)},
                {"spectrum", e.vec(ms.extension(), b.values)}};
  };

  h["ms-inv"] = [](const Options& o) {
    const GaloisRing ring = ring_of(o);
    const Poly f = poly_arg(ring, o.f, "--f");
    const AmbientSpace amb(f);
    const MattsonSolomon ms(splitting_extension(f, o.seed));
    const Spectrum b{vector_from_json(ms.extension(), parse_json_text(need(o.spectrum, "--spectrum"), "--spectrum"))};
    const Emit e{o.pretty};
    return json{{"element", e.quot(ms.inverse(amb, b))}};
  };

  h["dft-check"] = [](const Options& o) {
    const json rj = parse_json_text(need(o.ring, "--ring"), "--ring");
    const json xj = parse_json_text(need(o.xi, "--xi"), "--xi");
    if (rj.is_object() && rj.contains("modulusZ")) {
      if (!rj.at("modulusZ").is_number_integer() || rj.at("modulusZ").get<std::int64_t>() < 2) {
        throw ParseError("modulusZ must be an integer >= 2");
      }
      const ModularIntegers zm(rj.at("modulusZ").get<std::uint64_t>());
      if (!xj.is_number_integer()) throw ParseError("--xi must be an integer for modulusZ rings");
      const auto res = dft_invertible(zm, zm.from_int(xj.get<std::int64_t>()), o.n);
      return json{{"modulusZ", zm.modulus()},
                  {"invertible", res.invertible},
                  {"failing_k", res.failing_k ? json(*res.failing_k) : json(nullptr)},
                  {"witness", res.witness ? json(*res.witness) : json(nullptr)}};
    }
    const GaloisRing ring = ring_from_json(rj);
    const auto res = dft_invertible(ring, elem_from_json(ring, xj), o.n);
    const Emit e{o.pretty};
    return json{{"ring", ring_to_json(ring)},
                {"invertible", res.invertible},
                {"failing_k", res.failing_k ? json(*res.failing_k) : json(nullptr)},
                {"witness", res.witness ? e.elem(ring, *res.witness) : json(nullptr)}};
  };

  h["code"] = [](const Options& o) {
    return code_job(o, [](const Code& c, const Emit& e) { return json{{"code", e.code(c)}}; });
  };

  h["ann"] = [](const Options& o) {
    return code_job(o, [](const Code& c, const Emit& e) { return json{{"annihilator", e.code(annihilator(c))}}; });
  };

  h["dual"] = [](const Options& o) {
    const DualForm form = parse_dual_form(need(o.form, "--form"));
    return code_job(o, [form](const Code& c, const Emit& e) {
      return json{{"form", to_string(form)}, {"dual", e.code(dual(c, form))}};
    });
  };

  h["duality-report"] = [](const Options& o) {
    return code_job(o, [](const Code& c, const Emit& e) { return report_json(duality_report(c), e); });
  };

  h["decompose"] = [](const Options& o) {
    return code_job(o, [](const Code& c, const Emit&) {
      const Decomposition d = decompose(c);
      json comps = json::array();
      for (std::size_t i = 0; i < d.conductors.size(); ++i) {
        comps.push_back({{"index", i + 1}, {"factor", c.algebra().idem_labels[i]}, {"k", d.conductors[i]}});
      }
      return json{{"components", comps},
                  {"free", d.free},
                  {"reassembles", d.exact}};
    });
  };

  h["mindist"] = [](const Options& o) {
    return code_job(o, [](const Code& c, const Emit&) {
      const DistanceResult r = min_distance(c);
      return json{{"distance", r.distance}, {"empty", r.empty}, {"codewords", r.codewords}};
    });
  };

  h["theta"] = [](const Options& o) {
    const GaloisRing ring = ring_of(o);
    const Poly f = poly_arg(ring, o.f, "--f");
    const AmbientSpace amb(f);
    const OmegaWitness w = build_theta(f, quot_arg(amb, o.omega, "--omega"));
    const Emit e{o.pretty};
    const auto ce = theta_counterexample(w);
    return json{{"ring", ring_to_json(ring)},
                {"f", e.poly(f)},
                {"omega", e.quot(w.omega)},
                {"h", e.poly(w.h)},
                {"W", e.matrix(w.W)},
                {"detW", e.elem(ring, w.det)},
                {"isometric", is_monomial(w.W).monomial},
                {"counterexample_power", ce ? json(*ce) : json(nullptr)}};
  };

  h["isometry-classify"] = [](const Options& o) {
    const GaloisRing ring = ring_of(o);
    const Poly f = poly_arg(ring, o.f, "--f");
    const AmbientSpace amb(f);
    const Emit e{o.pretty};
    json j = verdict_json(classify_monomial(f, quot_arg(amb, o.omega, "--omega")), e, ring);
    j["f"] = e.poly(f);
    return j;
  };

  h["constacyclic-equiv"] = [](const Options& o) {
    const GaloisRing ring = ring_of(o);
    const RingElem lambda = elem_from_json(ring, parse_json_text(need(o.lambda, "--lambda"), "--lambda"));
    const auto w = constacyclic_to_cyclic(ring, lambda, o.n);
    const Emit e{o.pretty};
    json j{{"ring", ring_to_json(ring)}, {"lambda", e.elem(ring, lambda)}, {"n", o.n}, {"found", w.has_value()}};
    if (w) {
      j["root"] = e.elem(ring, w->root);
      j["f"] = e.poly(w->witness.ambient.f());
      j["omega"] = e.quot(w->witness.omega);
      j["h"] = e.poly(w->witness.h);
      j["W"] = e.matrix(w->witness.W);
    }
    return j;
  };

  h["serial-ms"] = [](const Options& o) {
    const GaloisRing ring = ring_of(o);
    const BivAmbient a = biv_of(o, ring);
    const BivSplitting s = biv_splitting(a, o.seed);
    const BivElem k(a, vector_from_json(ring, parse_json_text(need(o.elem, "--elem"), "--elem")));
    const Emit e{o.pretty};
    const GaloisRing& ext = s.first.extension;
    return json{{"extension", ring_to_json(ext)},
                {"roots1", e.vec(ext, s.first.roots)},
                {"roots2", e.vec(ext, s.second.roots)},
                {"spectrum", e.vec(ext, biv_ms(k, s))}};
  };

  h["serial-idem"] = [](const Options& o) {
    const GaloisRing ring = ring_of(o);
    const BivAmbient a = biv_of(o, ring);
    const BivIdempotents ids = biv_idempotents(a, o.seed);
    const Emit e{o.pretty};
    json list = json::array();
    for (std::size_t s = 0; s < ids.idems.size(); ++s) {
      list.push_back({{"i", ids.index[s].first + 1},
                      {"j", ids.index[s].second + 1},
                      {"primitive_pieces", ids.pieces[s]},
                      {"element", e.vec(ring, ids.idems[s].coeffs())}});
    }
    return json{{"n1", a.n1()}, {"n2", a.n2()}, {"idempotents", list}, {"primitive_count", ids.primitive_count()}};
  };

  h["serial-dual"] = [](const Options& o) {
    const GaloisRing ring = ring_of(o);
    const BivAmbient a = biv_of(o, ring);
    const AlgebraPtr alg = serial_algebra(a, o.seed);
    std::vector<RowVector> gens;
    for (const auto& g : list_arg(o.gens, "--gens")) gens.push_back(vector_from_json(ring, g));
    const Code c = code_from_generators(alg, gens);
    const Emit e{o.pretty};
    json j = report_json(duality_report(c), e);
    j["code"] = e.code(c);
    const Decomposition d = decompose(c);
    json comps = json::array();
    for (std::size_t i = 0; i < d.conductors.size(); ++i) {
      comps.push_back({{"component", alg->idem_labels[i]}, {"k", d.conductors[i]}});
    }
    j["components"] = comps;
    j["free"] = d.free;
    j["reassembles"] = d.exact;
    return j;
  };

  h["serial-iso"] = [](const Options& o) {
    const GaloisRing ring = ring_of(o);
    const Poly f1 = poly_arg(ring, o.f1, "--f1");
    const Poly f2 = poly_arg(ring, o.f2, "--f2");
    const SerialIsometry s = serial_isometry(f1, quot_arg(AmbientSpace(f1), o.omega1, "--omega1"), f2,
                                             quot_arg(AmbientSpace(f2), o.omega2, "--omega2"));
    const Emit e{o.pretty};
    return json{{"case", s.case_id}, {"h1", e.poly(s.h1)}, {"h2", e.poly(s.h2)}, {"monomial", s.monomial}};
  };

  return h;
}

struct SubcommandSpec {
  const char* name;
  const char* help;
  std::vector<std::string> options;
};

const std::vector<SubcommandSpec>& specs() {
  static const std::vector<SubcommandSpec> s = {
      {"factor", "factor f into monic pairwise coprime lifts", {"ring", "f"}},
      {"idempotents", "primitive idempotents of R[x]/<f>", {"ring", "f"}},
      {"split", "splitting extension and ordered roots of f", {"ring", "f"}},
      {"ms", "Mattson-Solomon transform of an element", {"ring", "f", "elem"}},
      {"ms-inv", "inverse transform of a spectrum", {"ring", "f", "spectrum"}},
      {"dft-check", "invertibility of the DFT generated by xi", {"ring", "xi", "n"}},
      {"code", "canonical basis of the ideal generated by --gens", {"ring", "f", "gens"}},
      {"ann", "annihilator of a code", {"ring", "f", "gens"}},
      {"dual", "dual code under the star, trace or zero form", {"ring", "f", "gens", "form"}},
      {"duality-report", "all duals and the annihilator, compared", {"ring", "f", "gens"}},
      {"decompose", "conductor exponents per idempotent component", {"ring", "f", "gens"}},
      {"mindist", "minimum Hamming distance by enumeration", {"ring", "f", "gens"}},
      {"theta", "isomorphism x -> omega and its target polynomial h", {"ring", "f", "omega"}},
      {"isometry-classify", "monomial classification of omega", {"ring", "f", "omega"}},
      {"constacyclic-equiv", "isometry of x^n - lambda with x^n - 1", {"ring", "lambda", "n"}},
      {"serial-ms", "bivariate transform", {"ring", "f1", "f2", "elem"}},
      {"serial-idem", "tensor idempotents", {"ring", "f1", "f2"}},
      {"serial-dual", "serial duality report and decomposition", {"ring", "f1", "f2", "gens"}},
      {"serial-iso", "serial isometry cases", {"ring", "f1", "omega1", "f2", "omega2"}},
  };
  return s;
}

void add_option(CLI::App* sub, const std::string& name, Options& o) {
  static const std::map<std::string, std::pair<std::string, std::string Options::*>> text = {
      {"ring", {"--ring", &Options::ring}},       {"f", {"--f,--poly", &Options::f}},
      {"elem", {"--elem", &Options::elem}},       {"omega", {"--omega", &Options::omega}},
      {"gens", {"--gens", &Options::gens}},       {"form", {"--form", &Options::form}},
      {"spectrum", {"--spectrum", &Options::spectrum}}, {"lambda", {"--lambda", &Options::lambda}},
      {"xi", {"--xi", &Options::xi}},             {"f1", {"--f1", &Options::f1}},
      {"f2", {"--f2", &Options::f2}},             {"omega1", {"--omega1", &Options::omega1}},
      {"omega2", {"--omega2", &Options::omega2}},
  };
  if (name == "n") {
    sub->add_option("--n", o.n, "length")->required();
    return;
  }
  const auto& [flag, member] = text.at(name);
  sub->add_option(flag, o.*member, "JSON payload")->required();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Polycyclic codes over Galois rings"};
  app.require_subcommand(1);
  app.add_flag("--pretty", o.pretty, "human-readable polynomials");
  app.add_option("--seed", o.seed, "seed for equal-degree splitting");
  std::map<std::string, CLI::App*> subs;
  for (const auto& s : specs()) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    for (const auto& opt : s.options) add_option(sub, opt, o);
    sub->add_flag("--pretty", o.pretty, "human-readable polynomials");
    sub->add_option("--seed", o.seed, "seed for equal-degree splitting");
    sub->add_option("--output", o.output, "write the result to a file instead of stdout");
    subs[s.name] = sub;
  }

  if (argc >= 2 && argv[1][0] != '-' && !subs.count(argv[1])) {
    err << "unknown subcommand '" << argv[1] << "'\n";
    return kUnknownSubcommand;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kMalformed;
  }

  const auto table = handlers();
  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    try {
      const json result = table.at(name)(o);
      const std::string text = (o.pretty ? result.dump(2) : result.dump()) + "\n";
      if (o.output.empty()) {
        out << text;
      } else {
        std::ofstream file(o.output);
        if (!(file << text)) {
          err << "cannot write " << o.output << "\n";
          return kPrecondition;
        }
      }
      return kOk;
    } catch (const ParseError& e) {
      err << "malformed payload: " << e.what() << "\n";
      return kMalformed;
    } catch (const json::exception& e) {
      err << "malformed payload: " << e.what() << "\n";
      return kMalformed;
    } catch (const PreconditionError& e) {
      err << "precondition violated: " << e.what() << "\n";
      return kPrecondition;
    } catch (const MathError& e) {
      err << "mathematical failure: " << e.what() << "\n";
      return kMathFailure;
    }
  }
  err << "no subcommand given\n";
  return kMalformed;
}

}  // namespace polycyc::cli
