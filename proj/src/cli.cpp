#include "jrigid/cli.hpp"

#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "jrigid/block_model.hpp"
#include "jrigid/classical.hpp"
#include "jrigid/coinvariants.hpp"
#include "jrigid/cyclotomic.hpp"
#include "jrigid/error.hpp"
#include "jrigid/fin_group.hpp"
#include "jrigid/group_action.hpp"
#include "jrigid/half_laurent.hpp"
#include "jrigid/idempotents.hpp"
#include "jrigid/kclass.hpp"
#include "jrigid/rep_ring.hpp"
#include "jrigid/rigid_example.hpp"
#include "jrigid/weyl.hpp"

namespace jrigid {

namespace {

using nlohmann::json;

// Bad option values exit with 2; mathematical failures on well-formed input
// exit with 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
auto parsed(F&& f, const std::string& what) -> decltype(f()) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw UsageError(what + ": " + e.what());
  }
}

long parse_long(const std::string& text) {
  std::size_t used = 0;
  const long v = std::stol(text, &used);
  if (used != text.size()) throw std::invalid_argument("trailing junk in '" + text + "'");
  return v;
}

json rational_json(const Rational& r) {
  return json::array({Integer(r.get_num()).get_str(), Integer(r.get_den()).get_str()});
}

json cyclotomic_json(const Cyclotomic& c) {
  json coords = json::array();
  for (const Rational& r : c.coords()) coords.push_back(rational_json(r));
  return json{{"order", c.order()}, {"coords", coords}};
}

// "zeta8", "zeta8^3", or a rational literal.
Cyclotomic parse_point(const std::string& text) {
  if (text.rfind("zeta", 0) == 0) {
    const std::string rest = text.substr(4);
    const auto caret = rest.find('^');
    return parsed(
        [&] {
          const long n = parse_long(rest.substr(0, caret));
          const long k = caret == std::string::npos ? 1 : parse_long(rest.substr(caret + 1));
          require(n >= 1, "root order must be positive");
          return Cyclotomic::root_of_unity(n, k);
        },
        "bad evaluation point '" + text + "'");
  }
  return Cyclotomic(
      parsed([&] { return parse_rational(text); }, "bad evaluation point '" + text + "'"));
}

// ---------------------------------------------------------------- centralizer

int centralizer_cmd(const std::string& type_text, int rank, const std::string& part_text,
                    bool as_json, std::ostream& out) {
  const LieType t =
      parsed([&] { return parse_lie_type(type_text, rank); }, "bad --type/--rank");
  const Partition u =
      parsed([&] { return parse_partition(part_text); }, "bad --partition");
  require(validate_partition(t, u),
          "partition " + u.str() + " does not label a unipotent class of " +
              family_name(t.family) + std::to_string(t.rank));

  const CentralizerDescriptor d = centralizer(t, u);
  const long dim = centralizer_dimension(t, u);
  const long a = a_value(t, u);
  const auto levis = levi_candidates(t, u);

  if (as_json) {
    json factors = json::array();
    for (const auto& f : d.factors) factors.push_back(json::array({f.kind, f.size}));
    json lv = json::array();
    for (const auto& cand : levis) {
      json splits = json::array();
      for (const auto& s : cand.split)
        splits.push_back(
            {{"part", s.part}, {"m_prime", s.m_prime}, {"m_double_prime", s.m_double_prime}});
      lv.push_back({{"gl_blocks", cand.gl_blocks},
                    {"tail", cand.tail},
                    {"tail_group", json::array({cand.tail_group_kind, cand.tail_group_size})},
                    {"split", splits}});
    }
    const json j = {{"family", family_name(t.family)},
                    {"rank", t.rank},
                    {"class", u.str()},
                    {"factors", factors},
                    {"det_condition", d.det_condition},
                    {"component_group_order", d.component_group.order()},
                    {"very_even", d.very_even},
                    {"reductive_dimension", d.reductive_dimension()},
                    {"centralizer_dimension", dim},
                    {"a_value", a},
                    {"levi_candidates", lv}};
    out << j.dump(2) << "\n";
    return 0;
  }

  out << "type " << family_name(t.family) << t.rank << ", unipotent class (" << u.str()
      << ")\n";
  out << "  centralizer factors:";
  for (const auto& f : d.factors) out << " " << f.kind << f.size;
  out << (d.det_condition ? "  (det condition)" : "") << "\n";
  out << "  component group: order " << d.component_group.order() << "\n";
  if (d.very_even) out << "  very even class (two classes share this partition)\n";
  out << "  reductive dimension: " << d.reductive_dimension() << "\n";
  out << "  centralizer dimension: " << dim << "\n";
  out << "  a-value: " << a << "\n";
  out << "  levi candidates:\n";
  for (const auto& cand : levis) {
    out << "    GL blocks:";
    if (cand.gl_blocks.empty()) out << " none";
    for (long b : cand.gl_blocks) out << " GL" << b;
    out << "; tail (";
    for (std::size_t i = 0; i < cand.tail.size(); ++i)
      out << (i ? "," : "") << cand.tail[i];
    out << ") -> " << cand.tail_group_kind << cand.tail_group_size << "\n";
  }
  return 0;
}

// ------------------------------------------------------- idempotents helpers

GAction action_from_flags(const std::string& group_spec, const std::string& action_text) {
  const FinGroup g =
      parsed([&] { return FinGroup::parse(group_spec); }, "bad --group '" + group_spec + "'");
  if (action_text.empty()) return GAction::regular(g);
  return parsed(
      [&] {
        const json j = json::parse(action_text);
        std::vector<std::vector<int>> images;
        for (const auto& row : j) images.push_back(row.get<std::vector<int>>());
        return GAction::from_generator_images(g, images);
      },
      "bad --action");
}

IdempotentFamily family_for(const GAction& act) {
  const auto orbits = pair_orbits(act);
  if (act.group().is_abelian()) return abelian_idempotents(orbits, 0);
  return s3_idempotents(orbits);
}

json kclass_json(const KClass& a) {
  json orbits = json::array();
  for (int k = 0; k < a.orbits().n_orbits(); ++k) {
    const PairOrbit& o = a.orbits().orbit(k);
    json coeffs = json::array();
    for (const Cyclotomic& c : a.coeffs(k)) coeffs.push_back(cyclotomic_json(c));
    orbits.push_back(
        {{"base", json::array({o.base_x, o.base_y})}, {"coefficients", coeffs}});
  }
  return orbits;
}

int idempotents_cmd(const std::string& group_spec, const std::string& action_text,
                    bool as_json, std::ostream& out, std::ostream& err) {
  const GAction act = action_from_flags(group_spec, action_text);
  const IdempotentFamily fam = family_for(act);

  bool orthogonal = true;
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    for (std::size_t j = 0; j < fam.members.size(); ++j)
      if (i != j && !convolve(fam.members[i], fam.members[j]).is_zero()) orthogonal = false;
  KClass total = KClass::zero(fam.members.at(0).orbits_ptr());
  for (const KClass& m : fam.members) total += m;
  const bool sums_to_diagonal = (total == KClass::diagonal(fam.members[0].orbits_ptr()));

  if (as_json) {
    json members = json::array();
    for (std::size_t i = 0; i < fam.members.size(); ++i)
      members.push_back({{"label", fam.labels[i]}, {"orbits", kclass_json(fam.members[i])}});
    const json j = {{"group", group_spec},
                    {"n_points", act.n_points()},
                    {"orthogonal", orthogonal},
                    {"sums_to_diagonal", sums_to_diagonal},
                    {"members", members}};
    out << j.dump(2) << "\n";
  } else {
    out << "group " << group_spec << " acting on " << act.n_points() << " points: "
        << fam.members.size() << " idempotents\n";
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
      out << "  " << fam.labels[i] << ":";
      const KClass& m = fam.members[i];
      for (int k = 0; k < m.orbits().n_orbits(); ++k) {
        const PairOrbit& o = m.orbits().orbit(k);
        for (std::size_t r = 0; r < m.coeffs(k).size(); ++r)
          if (!m.coeffs(k)[r].is_zero())
            out << "  (" << o.base_x << "," << o.base_y << ")@" << r << ": "
                << m.coeffs(k)[r].str();
      }
      out << "\n";
    }
    out << "orthogonal: " << (orthogonal ? "yes" : "NO") << "; sum is the diagonal class: "
        << (sums_to_diagonal ? "yes" : "NO") << "\n";
  }
  if (!orthogonal || !sums_to_diagonal) {
    err << "check failed: family is not an orthogonal decomposition of the diagonal\n";
    return 1;
  }
  return 0;
}

int specialize_cmd(const std::string& group_spec, const std::string& action_text, int element,
                   bool as_json, std::ostream& out) {
  const GAction act = action_from_flags(group_spec, action_text);
  require(element >= 0 && element < act.group().order(),
          "--element must name a group element (0.." +
              std::to_string(act.group().order() - 1) + ")");
  const IdempotentFamily fam = family_for(act);

  std::vector<SpecMatrix> mats;
  for (const KClass& m : fam.members) mats.push_back(specialize_at(m, element));

  if (as_json) {
    json members = json::array();
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
      json rows = json::array();
      for (int r = 0; r < mats[i].mat.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < mats[i].mat.cols(); ++c)
          row.push_back(cyclotomic_json(mats[i].mat.at(r, c)));
        rows.push_back(row);
      }
      members.push_back({{"label", fam.labels[i]}, {"matrix", rows}});
    }
    const json j = {{"group", group_spec},
                    {"element", element},
                    {"fixed_points", mats.empty() ? std::vector<int>{} : mats[0].points},
                    {"members", members}};
    out << j.dump(2) << "\n";
  } else {
    out << "specialization at element " << element << "; fixed points:";
    if (!mats.empty())
      for (int p : mats[0].points) out << " " << p;
    out << "\n";
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
      out << "  " << fam.labels[i] << ":\n";
      for (int r = 0; r < mats[i].mat.rows(); ++r) {
        out << "    [";
        for (int c = 0; c < mats[i].mat.cols(); ++c)
          out << (c ? ", " : "") << mats[i].mat.at(r, c).str();
        out << "]\n";
      }
    }
  }
  return 0;
}

// ----------------------------------------------------------------------- char

int char_cmd(const std::string& group, int rank, const std::string& which, int factor,
             bool as_json, std::ostream& out) {
  const RingSpec spec =
      parsed([&] { return parse_ring_spec(group, rank); }, "bad --group/--rank");
  const CharSelector sel =
      parsed([&] { return parse_selector(which); }, "bad --which '" + which + "'");
  const ClassFunctionElt elt = fundamental_character(spec, sel, factor);
  if (as_json) {
    const json j = {{"group", group},         {"rank", rank},
                    {"which", selector_str(sel)}, {"factor", factor},
                    {"n_vars", elt.chr.n_vars()}, {"character", elt.chr.str()}};
    out << j.dump(2) << "\n";
  } else {
    out << selector_str(sel) << " of " << group << rank << " (factor " << factor
        << "):\n  " << elt.chr.str() << "\n";
  }
  return 0;
}

// --------------------------------------------------------------------- jmodel

TorusChar random_admissible(BlockTag tag, std::mt19937& rng) {
  const RingSpec sl2 = make_ring_spec(RingFamily::SL, 1);
  auto vk = [&](long k) { return fundamental_character(sl2, {CharSelector::V_K, k}).chr; };
  std::uniform_int_distribution<long> coef(-2, 2);
  TorusChar acc(1);
  if (tag == BlockTag::FULL) {
    acc += TorusChar(1, Integer(coef(rng)));
    acc += vk(2) * Integer(coef(rng));
  } else {
    acc += vk(1) * Integer(coef(rng));
    acc += vk(3) * Integer(coef(rng));
  }
  return acc;
}

int jmodel_cmd(const std::string& name, const std::string& fiber_text, int closure_trials,
               bool as_json, std::ostream& out) {
  const BlockAlgebraModel model =
      parsed([&] { return model_by_name(name); }, "bad --name '" + name + "'");

  std::optional<FiberReport> fiber;
  Cyclotomic z0;
  if (!fiber_text.empty()) {
    z0 = parse_point(fiber_text);
    fiber = fiber_image_rank(model, z0);
  }

  int closed = 0;
  if (closure_trials > 0) {
    std::mt19937 rng(7);
    for (int t = 0; t < closure_trials; ++t) {
      const int n = model.dim();
      std::vector<std::vector<TorusChar>> ea, eb;
      for (int i = 0; i < n; ++i) {
        std::vector<TorusChar> ra, rb;
        for (int j = 0; j < n; ++j) {
          ra.push_back(random_admissible(model.tag_at(i, j), rng));
          rb.push_back(random_admissible(model.tag_at(i, j), rng));
        }
        ea.push_back(ra);
        eb.push_back(rb);
      }
      // model_multiply re-validates every product entry's membership.
      model_multiply(make_element(model, ea), make_element(model, eb));
      ++closed;
    }
  }

  if (as_json) {
    json j = {{"name", model.name}, {"block_sizes", model.block_sizes}, {"dim", model.dim()}};
    if (fiber)
      j["fiber"] = {{"point", cyclotomic_json(z0)},
                    {"image_dim", fiber->image_dim},
                    {"generic_dim", static_cast<long>(model.dim()) * model.dim()},
                    {"block_diagonal", fiber->block_diagonal},
                    {"family_size", fiber->family_size}};
    if (closure_trials > 0) j["closure_products_verified"] = closed;
    out << j.dump(2) << "\n";
  } else {
    out << "model " << model.name << ": blocks (";
    for (int i = 0; i < model.n_blocks(); ++i)
      out << (i ? "," : "") << model.block_sizes[i];
    out << "), total dimension " << model.dim() << "\n";
    if (fiber) {
      out << "fiber at " << z0.str() << ": image dimension " << fiber->image_dim << " of "
          << static_cast<long>(model.dim()) * model.dim()
          << (fiber->block_diagonal ? " (block diagonal)" : "") << ", family size "
          << fiber->family_size << "\n";
    }
    if (closure_trials > 0)
      out << "closure test: " << closed << " random products verified\n";
  }
  return 0;
}

// ---------------------------------------------------------------------- rigid

// c * (q^{1/2} + q^{-1/2})^k when the determinant has that shape.
std::optional<std::string> factored_det(const HalfLaurent& det) {
  if (det.is_zero()) return std::nullopt;
  const long span = det.max_key() - det.min_key();
  if (span <= 0 || span % 2 != 0) return std::nullopt;
  const long k = span / 2;
  const HalfLaurent base = HalfLaurent::parse("q^1/2+q^-1/2");
  HalfLaurent cand = base.pow(k);
  const Rational c = det.terms().rbegin()->second;
  if (!(c * cand == det)) return std::nullopt;
  std::string text;
  if (c != 1) text += to_string(c) + "*";
  text += "(q^1/2+q^-1/2)";
  if (k != 1) text += "^" + std::to_string(k);
  return text;
}

int rigid_cmd(const std::string& name, bool check, bool as_json, std::ostream& out,
              std::ostream& err) {
  if (name != "sl2" && name != "pgl2" && name != "so7")
    throw UsageError("unknown --example '" + name + "' (expected sl2, pgl2, or so7)");
  const RigidExample e = load_example(name);
  const StructureReport r = check_structure(e);

  std::optional<HalfLaurent> det;
  if (e.phi.has_value()) det = rigid_determinant(e);

  if (as_json) {
    json cells = json::array();
    for (const auto& b : e.blocks)
      cells.push_back({{"cell", b.cell}, {"a_value", b.a_value}, {"size", b.size}});
    json j = {{"name", e.name},
              {"size", e.size()},
              {"cells", cells},
              {"block_sizes", r.block_sizes},
              {"block_diagonal", r.block_diagonal},
              {"a_values_decreasing", r.a_values_decreasing},
              {"det_b", r.det_b.get_str()},
              {"has_phi", r.has_phi},
              {"phi_upper_triangular", r.phi_upper_triangular},
              {"ok", r.ok()},
              {"violations", r.violations}};
    if (det) {
      j["det"] = det->str();
      if (const auto f = factored_det(*det)) j["det_factored"] = *f;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "fixture " << e.name << ": " << e.size() << " basis elements, cells";
    for (const auto& b : e.blocks)
      out << " (" << b.cell << ")a" << b.a_value << ":" << b.size;
    out << "\n";
    out << "det B = " << r.det_b.get_str() << "\n";
    if (det) {
      if (const auto f = factored_det(*det))
        out << "det = " << *f << "\n";
      else
        out << "det = " << det->str() << "\n";
      out << "expanded = " << det->str() << "\n";
    }
    if (check) {
      out << "structure: " << (r.ok() ? "ok" : "FAILED") << " (block diagonal: "
          << (r.block_diagonal ? "yes" : "no") << ", det nonzero: "
          << (r.det_nonzero ? "yes" : "no") << ", a-values decreasing: "
          << (r.a_values_decreasing ? "yes" : "no") << ")\n";
      for (const auto& v : r.violations) out << "  violation: " << v << "\n";
    }
  }
  if (check && !r.ok()) {
    err << "check failed: fixture " << e.name << " violates its structure contract\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------- poincare and fdeg-check

WeylSpec weyl_from_flags(const std::string& weyl_text, const std::string& type_text,
                         int rank) {
  if (!weyl_text.empty())
    return parsed([&] { return parse_weyl(weyl_text); }, "bad --weyl '" + weyl_text + "'");
  if (type_text.empty() || rank <= 0)
    throw UsageError("give either --weyl or both --type and --rank");
  return parsed([&] { return parse_weyl(type_text + std::to_string(rank)); },
                "bad --type/--rank");
}

int poincare_cmd(const std::string& weyl_text, const std::string& type_text, int rank,
                 bool as_json, std::ostream& out) {
  const WeylSpec w = weyl_from_flags(weyl_text, type_text, rank);
  const HalfLaurent p = poincare_polynomial(w);
  const Rational at_one = p.eval_at_v(Rational(1));
  if (as_json) {
    const json j = {{"weyl", weyl_str(w)},
                    {"degrees", weyl_degrees(w)},
                    {"order", weyl_order(w)},
                    {"poincare", p.str()},
                    {"at_q_1", to_string(at_one)}};
    out << j.dump(2) << "\n";
  } else {
    out << "P_{" << weyl_str(w) << "}(q) = " << p.str() << "\n";
    out << "value at q = 1: " << to_string(at_one) << " (group order "
        << weyl_order(w) << ")\n";
  }
  return 0;
}

int fdeg_cmd(const std::string& num_text, const std::string& den_text,
             const std::string& weyl_text, const std::string& type_text, int rank,
             long bound_flag, bool as_json, std::ostream& out) {
  const HalfLaurent den =
      parsed([&] { return HalfLaurent::parse(den_text); }, "bad --den");
  require(!den.is_zero(), "formal-degree denominator must be nonzero");
  std::optional<HalfLaurent> num;
  if (!num_text.empty())
    num = parsed([&] { return HalfLaurent::parse(num_text); }, "bad --num");

  const WeylSpec w = weyl_from_flags(weyl_text, type_text, rank);
  const HalfLaurent p = poincare_product(w);
  const long bound =
      bound_flag > 0 ? bound_flag : std::max<long>(1, den.max_key() - den.min_key());
  const auto k = poly_divides_power(den, p, bound);

  if (as_json) {
    json j = {{"weyl", weyl_str(w)},
              {"den", den.str()},
              {"bound", bound},
              {"divides", k.has_value()}};
    if (num) j["num"] = num->str();
    if (k) j["power"] = *k;
    out << j.dump(2) << "\n";
  } else {
    if (num) out << "numerator: " << num->str() << "\n";
    out << "denominator: " << den.str() << "\n";
    if (k)
      out << "divides P_{" << weyl_str(w) << "}^k for minimal k = " << *k << "\n";
    else
      out << "no k <= " << bound << ": the denominator has zeros away from the zeros of P_{"
          << weyl_str(w) << "}\n";
  }
  return 0;
}

// --------------------------------------------------------------- coinvariants

int coinvariants_cmd(const std::string& matrix_text, bool as_json, std::ostream& out) {
  for (char ch : matrix_text)
    if (std::string("0123456789-+,; ").find(ch) == std::string::npos)
      throw UsageError("bad --matrix character '" + std::string(1, ch) + "'");
  const LatticeAuto a = parse_lattice_auto(matrix_text);
  const CoinvariantReport r = coinvariants(a);
  if (as_json) {
    json torsion = json::array();
    for (const Integer& d : r.torsion) torsion.push_back(d.get_str());
    const json j = {{"rank", a.rank()},
                    {"order", a.order()},
                    {"free_rank", r.free_rank},
                    {"torsion", torsion},
                    {"fixed_rank", r.fixed_rank}};
    out << j.dump(2) << "\n";
  } else {
    out << "automorphism of Z^" << a.rank() << ", order " << a.order() << "\n";
    out << "coinvariant free rank d(gamma) = " << r.free_rank << "\n";
    out << "torsion:";
    if (r.torsion.empty()) out << " none";
    for (const Integer& d : r.torsion) out << " Z/" << d.get_str();
    out << "\n";
    out << "fixed sublattice rank = " << r.fixed_rank << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations around asymptotic Hecke algebras"};
  app.name("jrigid");
  app.require_subcommand(1);

  std::string c_type, c_part;
  int c_rank = 0;
  bool c_json = false;
  auto* c = app.add_subcommand("centralizer", "reductive centralizer of a unipotent class");
  c->add_option("--type", c_type, "family A, B, C, or D")->required();
  c->add_option("--rank", c_rank, "Lie rank")->required();
  c->add_option("--partition", c_part, "unipotent class, e.g. 2,2,2")->required();
  c->add_flag("--json", c_json, "JSON output");

  std::string i_group, i_action;
  bool i_json = false;
  auto* i = app.add_subcommand("idempotents",
                               "rank-one idempotent family of a finite group action");
  i->add_option("--group", i_group, "group spec, e.g. Z2, Z2xZ2, S3")->required();
  i->add_option("--action", i_action,
                "JSON list of permutations, one per generator (default: regular action)");
  i->add_flag("--json", i_json, "JSON output");

  std::string s_group, s_action;
  int s_element = 0;
  bool s_json = false;
  auto* s = app.add_subcommand("specialize",
                               "exact matrices of the family at a group element");
  s->add_option("--group", s_group, "group spec, e.g. Z2, Z2xZ2, S3")->required();
  s->add_option("--action", s_action,
                "JSON list of permutations, one per generator (default: regular action)");
  s->add_option("--element", s_element, "group element index")->required();
  s->add_flag("--json", s_json, "JSON output");

  std::string ch_group, ch_which;
  int ch_rank = 0, ch_factor = 0;
  bool ch_json = false;
  auto* ch = app.add_subcommand("char", "fundamental character of a classical group");
  ch->add_option("--group", ch_group, "Sp, SO, O, Spin, Pin, GL, SL, PGL (SOodd/SOeven...)")
      ->required();
  ch->add_option("--rank", ch_rank, "rank")->required();
  ch->add_option("--which", ch_which, "V1, V(3), delta+, delta-, pi, det")->required();
  ch->add_option("--factor", ch_factor, "component factor for disconnected groups");
  ch->add_flag("--json", ch_json, "JSON output");

  std::string j_name, j_fiber;
  int j_closure = 0;
  bool j_json = false;
  auto* jm = app.add_subcommand("jmodel", "block matrix model of an asymptotic algebra");
  jm->add_option("--name", j_name, "sl2-j0 or bdd-sp6")->required();
  jm->add_option("--fiber", j_fiber, "evaluation point: zeta4, zeta8^3, a rational");
  jm->add_option("--closure-test", j_closure, "verify this many random products close");
  jm->add_flag("--json", j_json, "JSON output");

  std::string r_example;
  bool r_check = false, r_json = false;
  auto* r = app.add_subcommand("rigid", "rigid-pairing fixture inspection");
  r->add_option("--example", r_example, "sl2, pgl2, or so7")->required();
  r->add_flag("--check", r_check, "verify the structure contract (exit 1 on failure)");
  r->add_flag("--json", r_json, "JSON output");

  std::string p_weyl, p_type;
  int p_rank = 0;
  bool p_json = false;
  auto* p = app.add_subcommand("poincare", "Poincare polynomial of a finite Weyl group");
  auto* p_weyl_opt = p->add_option("--weyl", p_weyl, "compound spec, e.g. A1xA1");
  auto* p_type_opt = p->add_option("--type", p_type, "single family A, B, C, D, or G");
  p->add_option("--rank", p_rank, "rank for --type");
  p_weyl_opt->excludes(p_type_opt);
  p->add_flag("--json", p_json, "JSON output");

  std::string co_matrix;
  bool co_json = false;
  auto* co = app.add_subcommand("coinvariants", "coinvariant lattice of a torus automorphism");
  co->add_option("--matrix", co_matrix, "rows separated by ';', entries by ','")->required();
  co->add_flag("--json", co_json, "JSON output");

  std::string f_num, f_den, f_weyl, f_type;
  int f_rank = 0;
  long f_bound = 0;
  bool f_json = false;
  auto* f = app.add_subcommand("fdeg-check",
                               "divisibility of a formal-degree denominator into P_W^k");
  f->add_option("--num", f_num, "numerator polynomial (echoed only)");
  f->add_option("--den", f_den, "denominator polynomial, e.g. 1+q")->required();
  auto* f_weyl_opt = f->add_option("--weyl", f_weyl, "compound spec, e.g. A1xA1");
  auto* f_type_opt = f->add_option("--type", f_type, "single family A, B, C, D, or G");
  f->add_option("--rank", f_rank, "rank for --type");
  f->add_option("--bound", f_bound, "largest power to try (default: degree span)");
  f_weyl_opt->excludes(f_type_opt);
  f->add_flag("--json", f_json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      const auto subs = app.get_subcommands();
      out << (subs.empty() ? app.help() : subs.front()->help());
      return 0;
    }
    err << "error: " << e.what() << "\n";
    err << "run 'jrigid --help' or 'jrigid <verb> --help' for usage\n";
    return 2;
  }

  try {
    if (app.got_subcommand(c)) return centralizer_cmd(c_type, c_rank, c_part, c_json, out);
    if (app.got_subcommand(i)) return idempotents_cmd(i_group, i_action, i_json, out, err);
    if (app.got_subcommand(s))
      return specialize_cmd(s_group, s_action, s_element, s_json, out);
    if (app.got_subcommand(ch))
      return char_cmd(ch_group, ch_rank, ch_which, ch_factor, ch_json, out);
    if (app.got_subcommand(jm))
      return jmodel_cmd(j_name, j_fiber, j_closure, j_json, out);
    if (app.got_subcommand(r)) return rigid_cmd(r_example, r_check, r_json, out, err);
    if (app.got_subcommand(p)) return poincare_cmd(p_weyl, p_type, p_rank, p_json, out);
    if (app.got_subcommand(co)) return coinvariants_cmd(co_matrix, co_json, out);
    if (app.got_subcommand(f))
      return fdeg_cmd(f_num, f_den, f_weyl, f_type, f_rank, f_bound, f_json, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  }
  err << "error: no verb selected\n";
  return 2;
}

}  // namespace jrigid
