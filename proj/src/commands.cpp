#include "kuwalls/commands.hpp"

#include "kuwalls/tilt.hpp"


#include <algorithm>
#include <set>
#include <sstream>

namespace kuwalls {

namespace {

FanoContext fano(int degree) {
  if (degree < 1 || degree > 5) throw UsageError("degree out of range");
  return FanoContext(degree);
}

DPContext del_pezzo(int dp_degree) {
  if (dp_degree < 1 || dp_degree > 7) throw UsageError("del Pezzo degree out of range");
  return DPContext(dp_degree);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

ChernVector parse_class_spec(const FanoContext& ctx, const std::string& spec) {
  if (spec == "v") return v_vector(ctx);
  if (spec == "w") return w_vector(ctx);
  if (spec == "O") return ChernVector::unit();
  if (spec.find(',') != std::string::npos) {
    const auto parts = split(spec, ',');
    if (parts.size() != 4) throw UsageError("class vector needs 4 components: '" + spec + "'");
    try {
      return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]),
              parse_rational(parts[3])};
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("unparsable class: ") + e.what());
    }
  }
  try {
    return find_entry(catalog(ctx.degree()), spec).chern;
  } catch (const std::out_of_range&) {
    throw UsageError("unparsable class '" + spec + "'");
  }
}

Json cmd_euler(int degree) {
  const FanoContext ctx = fano(degree);
  const IntMatrix2 abstract = euler_matrix(degree);
  const ChernVector basis[2] = {v_vector(ctx), w_vector(ctx)};
  Json from_chern = Json::array();
  bool agree = true;
  for (int i = 0; i < 2; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 2; ++j) {
      const Rational chi = chi_pair(ctx, basis[i], basis[j]);
      agree = agree && chi == abstract[i][j];
      row.push_back(to_json(chi));
    }
    from_chern.push_back(std::move(row));
  }
  Json payload;
  payload["basis"] = {{{"name", "v"}, {"chern", to_json(basis[0])}},
                      {{"name", "w"}, {"chern", to_json(basis[1])}}};
  payload["euler_form"] = abstract;
  payload["chi_pair"] = std::move(from_chern);
  payload["agree"] = agree;
  return output_document("euler", degree, std::move(payload));
}

WallsResult cmd_walls(const WallsOptions& o) {
  const FanoContext ctx = fano(o.degree);
  const ChernVector target = parse_class_spec(ctx, o.class_spec);

  ChamberReportOptions opts;
  opts.rules = o.rules;
  if (o.denoms) {
    if (o.denoms->ch1 <= 0 || o.denoms->ch2 <= 0) throw UsageError("denominators must be positive");
    opts.denoms = o.denoms;
  } else if (o.degree_lattice) {
    opts.denoms = degree_denominators(ctx, o.beta);
  }
  if (o.degree_lattice) opts.rules.integral_lattice = ctx.default_lattice();
  if (o.x_bound) {
    if (*o.x_bound < 1) throw UsageError("x bound must be positive");
    opts.initial_x_bound = *o.x_bound;
    opts.max_x_bound = 2 * *o.x_bound;
  }
  ChamberReport report = chamber_report(ctx, target, o.beta, opts);

  Json payload;
  payload["class"] = o.class_spec;
  payload["chern"] = to_json(target);
  payload["twisted_chern"] = to_json(twist(target, o.beta));
  payload["discriminant"] = to_json(discriminant(target));
  payload["lattice"] = o.denoms ? "explicit" : (o.degree_lattice ? "degree" : "default");
  payload["report"] = to_json(report);
  return {output_document("walls", o.degree, std::move(payload)), std::move(report)};
}

Json cmd_roots(const RootsOptions& o) {
  const DPContext ctx = del_pezzo(o.dp_degree);
  if (o.nef_check && o.dp_degree != 2) {
    throw UsageError("--nef-check is only available for del Pezzo degree 2");
  }
  const auto roots = enumerate_roots(ctx);
  const auto lines = enumerate_lines(ctx);

  Json payload;
  payload["dp_degree"] = o.dp_degree;
  payload["canonical"] = to_json(ctx.canonical());
  payload["root_count"] = roots.size();
  payload["line_count"] = lines.size();
  if (o.list) {
    Json jr = Json::array();
    for (const auto& r : roots) jr.push_back(to_json(r));
    Json jl = Json::array();
    for (const auto& l : lines) jl.push_back(to_json(l));
    payload["roots"] = std::move(jr);
    payload["lines"] = std::move(jl);
  }
  if (o.pairs) {
    const PicVector minus_k = ctx.anticanonical();
    std::set<std::pair<PicVector, PicVector>> seen;
    Json jp = Json::array();
    bool closed = true;
    bool fixed_point_free = true;
    for (const auto& l : lines) {
      const PicVector partner = minus_k - l;
      if (partner == l) fixed_point_free = false;
      if (!std::binary_search(lines.begin(), lines.end(), partner)) closed = false;
      if (seen.insert(std::minmax(l, partner)).second) {
        jp.push_back(Json::array({to_json(std::min(l, partner)), to_json(std::max(l, partner))}));
      }
    }
    payload["line_pairs"] = {{"count", seen.size()},
                             {"closed", closed},
                             {"fixed_point_free", fixed_point_free},
                             {"pairs", std::move(jp)}};
  }
  if (o.as_line_diff) {
    Json jd = Json::array();
    std::size_t ok = 0;
    for (const auto& r : roots) {
      const auto split_pair = root_as_line_difference(ctx, r);
      Json item;
      item["root"] = to_json(r);
      if (split_pair) {
        ++ok;
        item["l1"] = to_json(split_pair->first);
        item["l2"] = to_json(split_pair->second);
      } else {
        item["l1"] = nullptr;
        item["l2"] = nullptr;
      }
      jd.push_back(std::move(item));
    }
    payload["line_differences"] = {{"decomposed", ok}, {"total", roots.size()},
                                   {"items", std::move(jd)}};
  }
  if (o.nef_check) {
    std::size_t interior = 0;
    for (const auto& r : roots) {
      if (nef_position(ctx, r - 2 * ctx.canonical(), lines) == NefPosition::interior) ++interior;
    }
    payload["nef_check"] = {
        {"divisor", "D - 2K"},
        {"interior", interior},
        {"total", roots.size()},
        {"summary", std::to_string(interior) + "/" + std::to_string(roots.size()) +
                        " of D-2K interior"}};
  }
  return output_document("roots", o.dp_degree, std::move(payload));
}

CheckOutcome cmd_check(std::optional<int> degree) {
  if (degree) fano(*degree);
  const auto items = degree ? degree_checks(*degree) : all_checks();
  CheckOutcome out;
  out.passed = all_passed(items);
  Json list = Json::array();
  std::ostringstream text;
  std::size_t passed = 0;
  for (const auto& item : items) {
    list.push_back(to_json(item));
    if (item.result.passed) ++passed;
    text << '[' << item.group << "] " << item.result.name << ": "
         << (item.result.passed ? "PASS" : "FAIL");
    if (!item.result.passed && !item.result.detail.empty()) text << " (" << item.result.detail << ')';
    text << '\n';
  }
  text << passed << '/' << items.size() << " checks passed\n";
  Json payload;
  payload["scope"] = degree ? "degree" : "all";
  payload["passed"] = out.passed;
  payload["total"] = items.size();
  payload["passed_count"] = passed;
  payload["checks"] = std::move(list);
  out.document = output_document("check", degree, std::move(payload));
  out.text = text.str();
  return out;
}

Json cmd_catalog(int degree) {
  fano(degree);
  Json entries = Json::array();
  for (const auto& e : catalog(degree)) entries.push_back(to_json(e));
  return output_document("catalog", degree, {{"entries", std::move(entries)}});
}

Json cmd_self_pairing(int degree, long target, long bound) {
  fano(degree);
  if (bound < 1) throw UsageError("bound must be at least 1");
  Json classes = Json::array();
  for (const auto& c : classes_with_self_pairing(degree, target, bound)) {
    classes.push_back(to_json(c));
  }
  Json payload;
  payload["target"] = target;
  payload["bound"] = bound;
  payload["classes"] = std::move(classes);
  return output_document("self-pairing", degree, std::move(payload));
}

}  // namespace kuwalls
