#include <sstream>

#include "cjp/io.hpp"

namespace cjp::io {

namespace {

Rational rat(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

std::string rat_str(const Rational& r) { return rational_to_string(r); }

const char* kind_name(skein::NodeKind k) {
  switch (k) {
    case skein::NodeKind::Cup: return "cup";
    case skein::NodeKind::Cap: return "cap";
    case skein::NodeKind::Crossing: return "crossing";
    case skein::NodeKind::Projector: return "projector";
    case skein::NodeKind::Box: return "box";
  }
  return "?";
}

skein::NodeKind kind_from(const std::string& s) {
  if (s == "cup") return skein::NodeKind::Cup;
  if (s == "cap") return skein::NodeKind::Cap;
  if (s == "crossing") return skein::NodeKind::Crossing;
  if (s == "projector") return skein::NodeKind::Projector;
  if (s == "box") return skein::NodeKind::Box;
  throw DomainError("diagram json: unknown node kind '" + s + "'");
}

json port(const skein::PortRef& p) { return json::array({p.node, p.port}); }
skein::PortRef port_from(const json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

// Wires the edges the way DiagramBuilder does: follow the frontier through the sweep.
std::vector<skein::Edge> sweep_edges(const std::vector<int>& inputs, const std::vector<skein::Node>& nodes) {
  std::vector<skein::PortRef> refs;
  std::vector<int> mult = inputs;
  for (int j = 0; j < static_cast<int>(inputs.size()); ++j) refs.push_back({-1, j});
  std::vector<skein::Edge> edges;
  for (int idx = 0; idx < static_cast<int>(nodes.size()); ++idx) {
    const auto& nd = nodes[idx];
    const int a = static_cast<int>(nd.lower.size());
    if (nd.position < 0 || nd.position + a > static_cast<int>(refs.size()))
      throw DomainError("diagram json: node " + std::to_string(idx) + " lies outside the frontier");
    for (int j = 0; j < a; ++j) edges.push_back({refs[nd.position + j], {idx, j}, nd.lower[j]});
    std::vector<skein::PortRef> up;
    for (int j = 0; j < static_cast<int>(nd.upper.size()); ++j) up.push_back({idx, j});
    refs.erase(refs.begin() + nd.position, refs.begin() + nd.position + a);
    refs.insert(refs.begin() + nd.position, up.begin(), up.end());
    mult.erase(mult.begin() + nd.position, mult.begin() + nd.position + a);
    mult.insert(mult.begin() + nd.position, nd.upper.begin(), nd.upper.end());
  }
  for (int j = 0; j < static_cast<int>(refs.size()); ++j) edges.push_back({refs[j], {-1, j}, mult[j]});
  return edges;
}

std::optional<Rational> opt_rat(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return rat(j.at(key));
}

}  // namespace

json to_json(const HalfLaurent& p) {
  json terms = json::array();
  for (auto& [e, c] : p.terms())
    terms.push_back({{"exp", rat_str(frac(e, 2))}, {"half_exp", e}, {"coeff", rat_str(c)}});
  return {{"text", p.to_string()}, {"terms", terms}};
}

HalfLaurent laurent_from_json(const json& j) {
  std::vector<HalfLaurent::Term> terms;
  for (auto& t : j.at("terms")) {
    int e;
    if (t.contains("half_exp")) {
      e = t.at("half_exp").get<int>();
    } else {
      Rational twice = 2 * rat(t.at("exp"));
      if (twice.get_den() != 1) throw DomainError("polynomial json: exponent is not a half-integer");
      e = static_cast<int>(twice.get_num().get_si());
    }
    terms.emplace_back(e, rat(t.at("coeff")));
  }
  return HalfLaurent::from_terms(std::move(terms));
}

json to_json(const RatFunc& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RatFunc ratfunc_from_json(const json& j) {
  return RatFunc(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

json to_json(const skein::PlanarDiagram& d) {
  json nodes = json::array();
  for (auto& n : d.nodes()) {
    json o = {{"kind", kind_name(n.kind)}, {"position", n.position}, {"lower", n.lower}, {"upper", n.upper}};
    if (n.kind == skein::NodeKind::Crossing)
      o["over"] = n.over == skein::Over::LeftToRight ? "left_to_right" : "right_to_left";
    if (n.kind == skein::NodeKind::Projector) o["rotation"] = n.rotation;
    if (n.kind == skein::NodeKind::Box)
      o["box"] = {{"top", n.box.top()}, {"bottom", n.box.bottom()}, {"partner", n.box.pairing()}};
    nodes.push_back(o);
  }
  json edges = json::array();
  for (auto& e : d.edges()) edges.push_back({{"from", port(e.from)}, {"to", port(e.to)}, {"multiplicity", e.multiplicity}});
  return {{"inputs", d.inputs()}, {"outputs", d.outputs()}, {"nodes", nodes}, {"edges", edges}};
}

skein::PlanarDiagram diagram_from_json(const json& j) {
  try {
    std::vector<int> inputs = j.value("inputs", std::vector<int>{});
    std::vector<skein::Node> nodes;
    for (auto& o : j.at("nodes")) {
      skein::Node n;
      n.kind = kind_from(o.at("kind").get<std::string>());
      n.position = o.at("position").get<int>();
      n.lower = o.value("lower", std::vector<int>{});
      n.upper = o.value("upper", std::vector<int>{});
      std::string over = o.value("over", std::string("left_to_right"));
      if (over != "left_to_right" && over != "right_to_left") throw DomainError("diagram json: bad crossing type " + over);
      n.over = over == "left_to_right" ? skein::Over::LeftToRight : skein::Over::RightToLeft;
      n.rotation = o.value("rotation", 0);
      if (o.contains("box")) {
        auto& b = o.at("box");
        n.box = tl::Matching(b.at("top").get<int>(), b.at("bottom").get<int>(), b.at("partner").get<std::vector<int>>());
      }
      nodes.push_back(std::move(n));
    }
    std::vector<skein::Edge> edges;
    if (j.contains("edges")) {
      for (auto& e : j.at("edges"))
        edges.push_back({port_from(e.at("from")), port_from(e.at("to")), e.value("multiplicity", 1)});
    } else {
      edges = sweep_edges(inputs, nodes);
    }
    std::vector<int> outputs;
    if (j.contains("outputs")) {
      outputs = j.at("outputs").get<std::vector<int>>();
    } else {
      for (auto& e : edges)
        if (e.to.node == -1) outputs.push_back(e.multiplicity);
    }
    return skein::PlanarDiagram(std::move(inputs), std::move(nodes), std::move(edges), std::move(outputs));
  } catch (const json::exception& e) {
    throw DomainError(std::string("diagram json: ") + e.what());
  }
}

json to_json(const degree::DegreeReport& r) {
  json fits = json::array();
  for (auto& f : r.fits)
    fits.push_back({{"residue", f.residue},
                    {"points", f.points},
                    {"exact", f.exact},
                    {"a", rat_str(f.a)},
                    {"b", rat_str(f.b)},
                    {"c", rat_str(f.c)}});
  json rows = json::array();
  for (auto& row : r.rows) {
    json o = {{"N", row.N}, {"residue", row.residue}};
    o["exact"] = row.exact ? json(rat_str(*row.exact)) : json(nullptr);
    o["predicted"] = row.predicted ? json(rat_str(*row.predicted)) : json(nullptr);
    o["match"] = row.match ? json(*row.match) : json(nullptr);
    rows.push_back(o);
  }
  json jx = json::array();
  for (auto& x : r.jx) jx.push_back(rat_str(x));
  return {{"w", r.w},
          {"in_regime", r.in_regime},
          {"caveat", r.caveat},
          {"s", rat_str(r.s)},
          {"s1", rat_str(r.s1)},
          {"js", rat_str(r.js)},
          {"modulus", r.modulus},
          {"cancellation_residues", r.cancellation_residues},
          {"jx", jx},
          {"fits", fits},
          {"rows", rows}};
}

degree::DegreeReport report_from_json(const json& j) {
  degree::DegreeReport r;
  r.w = j.at("w").get<std::vector<int>>();
  r.in_regime = j.at("in_regime").get<bool>();
  r.caveat = j.value("caveat", std::string());
  r.s = rat(j.at("s"));
  r.s1 = rat(j.at("s1"));
  r.js = rat(j.at("js"));
  r.modulus = j.at("modulus").get<int>();
  r.cancellation_residues = j.at("cancellation_residues").get<std::vector<int>>();
  for (auto& x : j.at("jx")) r.jx.push_back(rat(x));
  for (auto& f : j.at("fits")) {
    degree::QuadraticFit q;
    q.residue = f.at("residue").get<int>();
    q.points = f.at("points").get<int>();
    q.exact = f.at("exact").get<bool>();
    q.a = rat(f.at("a"));
    q.b = rat(f.at("b"));
    q.c = rat(f.at("c"));
    r.fits.push_back(q);
  }
  for (auto& o : j.at("rows")) {
    degree::DegreeRow row;
    row.N = o.at("N").get<int>();
    row.residue = o.at("residue").get<int>();
    row.exact = opt_rat(o, "exact");
    row.predicted = opt_rat(o, "predicted");
    if (o.contains("match") && !o.at("match").is_null()) row.match = o.at("match").get<bool>();
    r.rows.push_back(row);
  }
  return r;
}

std::string to_csv(const degree::DegreeReport& r) {
  std::ostringstream out;
  out << "# w=";
  for (std::size_t i = 0; i < r.w.size(); ++i) out << (i ? "," : "") << r.w[i];
  out << "\n# in_regime=" << (r.in_regime ? 1 : 0) << "\n# caveat=" << r.caveat << "\n# s=" << rat_str(r.s)
      << "\n# s1=" << rat_str(r.s1) << "\n# js=" << rat_str(r.js) << "\n# modulus=" << r.modulus
      << "\n# cancellation_residues=";
  for (std::size_t i = 0; i < r.cancellation_residues.size(); ++i) out << (i ? "," : "") << r.cancellation_residues[i];
  out << "\n# jx=";
  for (std::size_t i = 0; i < r.jx.size(); ++i) out << (i ? "," : "") << rat_str(r.jx[i]);
  out << '\n';
  for (auto& f : r.fits)
    out << "# fit=" << f.residue << ',' << f.points << ',' << (f.exact ? 1 : 0) << ',' << rat_str(f.a) << ','
        << rat_str(f.b) << ',' << rat_str(f.c) << '\n';
  out << "N,residue,exact,predicted,match\n";
  for (auto& row : r.rows) {
    out << row.N << ',' << row.residue << ',' << (row.exact ? rat_str(*row.exact) : "") << ','
        << (row.predicted ? rat_str(*row.predicted) : "") << ',' << (row.match ? (*row.match ? "1" : "0") : "") << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw DomainError("csv: not an integer: '" + s + "'");
}

}  // namespace

degree::DegreeReport report_from_csv(const std::string& text) {
  degree::DegreeReport r;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      auto eq = line.find('=');
      if (eq == std::string::npos) throw DomainError("csv: bad metadata line");
      std::string key = line.substr(2, eq - 2), val = line.substr(eq + 1);
      auto items = val.empty() ? std::vector<std::string>{} : split(val, ',');
      if (key == "w") {
        for (auto& x : items) r.w.push_back(to_int(x));
      } else if (key == "in_regime") {
        r.in_regime = val == "1";
      } else if (key == "caveat") {
        r.caveat = val;
      } else if (key == "s") {
        r.s = parse_rational(val);
      } else if (key == "s1") {
        r.s1 = parse_rational(val);
      } else if (key == "js") {
        r.js = parse_rational(val);
      } else if (key == "modulus") {
        r.modulus = to_int(val);
      } else if (key == "cancellation_residues") {
        for (auto& x : items) r.cancellation_residues.push_back(to_int(x));
      } else if (key == "jx") {
        for (auto& x : items) r.jx.push_back(parse_rational(x));
      } else if (key == "fit") {
        if (items.size() != 6) throw DomainError("csv: bad fit line");
        degree::QuadraticFit f;
        f.residue = to_int(items[0]);
        f.points = to_int(items[1]);
        f.exact = items[2] == "1";
        f.a = parse_rational(items[3]);
        f.b = parse_rational(items[4]);
        f.c = parse_rational(items[5]);
        r.fits.push_back(f);
      }
      continue;
    }
    if (!header) {
      if (line != "N,residue,exact,predicted,match") throw DomainError("csv: unexpected header");
      header = true;
      continue;
    }
    auto cells = split(line, ',');
    if (cells.size() != 5) throw DomainError("csv: expected 5 columns");
    degree::DegreeRow row;
    row.N = to_int(cells[0]);
    row.residue = to_int(cells[1]);
    if (!cells[2].empty()) row.exact = parse_rational(cells[2]);
    if (!cells[3].empty()) row.predicted = parse_rational(cells[3]);
    if (!cells[4].empty()) row.match = cells[4] == "1";
    r.rows.push_back(row);
  }
  return r;
}

bool same_report(const degree::DegreeReport& a, const degree::DegreeReport& b) { return to_json(a) == to_json(b); }

}  // namespace cjp::io
