#include "lensracks/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lensracks {

namespace {

struct Endpoint {
  // -1: none; otherwise index into crossings (kind 0) or strands (kind 1)
  int kind = -1;
  int index = -1;
  bool present() const { return kind >= 0; }
};

std::string arcstr(int a) { return "arc " + std::to_string(a); }

}  // namespace

LensDiagram LensDiagram::make(int p, int arc_count, std::vector<std::vector<int>> components,
                              std::vector<Crossing> crossings, std::vector<Strand> strands) {
  LensDiagram d;
  d.p_ = p;
  d.arc_count_ = arc_count;
  d.components_ = std::move(components);
  d.crossings_ = std::move(crossings);
  d.strands_ = std::move(strands);
  d.validate();
  d.normalize();
  return d;
}

void LensDiagram::validate() const {
  if (p_ < 1) fail(Err::ValidationError, "p must be >= 1");
  if (arc_count_ < 1) fail(Err::ValidationError, "arc count must be positive");
  auto check_arc = [&](int a, const std::string& where) {
    if (a < 1 || a > arc_count_)
      fail(Err::ValidationError, arcstr(a) + " out of range in " + where);
  };

  // Every arc in exactly one component cycle.
  std::vector<int> comp_of(arc_count_ + 1, 0);
  for (int c = 0; c < static_cast<int>(components_.size()); ++c) {
    if (components_[c].empty()) fail(Err::ValidationError, "empty component cycle");
    for (int a : components_[c]) {
      check_arc(a, "component cycle");
      if (comp_of[a]) fail(Err::ValidationError, arcstr(a) + " appears in two components");
      comp_of[a] = c + 1;
    }
  }
  for (int a = 1; a <= arc_count_; ++a)
    if (!comp_of[a]) fail(Err::ValidationError, arcstr(a) + " belongs to no component");

  // Unique terminator (under_in / strand in) and originator (under_out /
  // strand out) per arc.
  std::vector<Endpoint> term(arc_count_ + 1), orig(arc_count_ + 1);
  auto set_term = [&](int a, int kind, int idx) {
    if (term[a].present()) fail(Err::ValidationError, arcstr(a) + " has two terminators");
    term[a] = {kind, idx};
  };
  auto set_orig = [&](int a, int kind, int idx) {
    if (orig[a].present()) fail(Err::ValidationError, arcstr(a) + " has two originators");
    orig[a] = {kind, idx};
  };
  for (int i = 0; i < static_cast<int>(crossings_.size()); ++i) {
    const Crossing& c = crossings_[i];
    if (c.sign != 1 && c.sign != -1) fail(Err::ValidationError, "crossing sign must be +1/-1");
    check_arc(c.over, "crossing");
    check_arc(c.under_in, "crossing");
    check_arc(c.under_out, "crossing");
    if (comp_of[c.under_in] != comp_of[c.under_out])
      fail(Err::ValidationError, "crossing under-arcs in different components");
    set_term(c.under_in, 0, i);
    set_orig(c.under_out, 0, i);
  }
  for (int i = 0; i < static_cast<int>(strands_.size()); ++i) {
    const Strand& s = strands_[i];
    if (s.eps != 1 && s.eps != -1) fail(Err::ValidationError, "strand eps must be +1/-1");
    check_arc(s.in_arc, "strand");
    check_arc(s.out_arc, "strand");
    if (comp_of[s.in_arc] != comp_of[s.out_arc])
      fail(Err::ValidationError, "strand arcs in different components");
    set_term(s.in_arc, 1, i);
    set_orig(s.out_arc, 1, i);
  }

  for (int a = 1; a <= arc_count_; ++a) {
    if (term[a].present() != orig[a].present())
      fail(Err::ValidationError, arcstr(a) + " has a terminator or originator but not both");
    if (!term[a].present()) {
      // Allowed only for an isolated closed loop.
      const auto& cyc = components_[comp_of[a] - 1];
      if (cyc.size() != 1)
        fail(Err::ValidationError, arcstr(a) + " has no terminator but shares a component");
    }
  }

  // Consecutive arcs in a cycle share the first arc's terminator as the
  // second arc's originator.
  for (const auto& cyc : components_) {
    if (cyc.size() == 1 && !term[cyc[0]].present()) continue;  // free loop
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i];
      int b = cyc[(i + 1) % cyc.size()];
      if (!term[a].present())
        fail(Err::ValidationError, arcstr(a) + " has no terminator inside a multi-arc cycle");
      int out = term[a].kind == 0 ? crossings_[term[a].index].under_out
                                  : strands_[term[a].index].out_arc;
      if (out != b)
        fail(Err::ValidationError, "component cycle breaks between " + arcstr(a) + " and " +
                                       arcstr(b));
    }
  }
}

void LensDiagram::normalize() {
  for (auto& cyc : components_) {
    auto it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
  }
  std::sort(crossings_.begin(), crossings_.end(),
            [](const Crossing& a, const Crossing& b) { return a.under_in < b.under_in; });
}

int LensDiagram::component_of(int arc) const {
  for (int c = 0; c < component_count(); ++c)
    for (int a : components_[c])
      if (a == arc) return c + 1;
  fail(Err::ArcOutOfRange, arcstr(arc) + " out of range");
}

std::vector<int> LensDiagram::writhe_vector() const {
  std::vector<int> w(component_count(), 0);
  for (const Crossing& c : crossings_)
    if (component_of(c.over) == component_of(c.under_in)) w[component_of(c.under_in) - 1] += c.sign;
  return w;
}

LensDiagram LensDiagram::add_positive_kink(int component) const {
  if (component < 1 || component > component_count())
    fail(Err::ComponentOutOfRange, "component " + std::to_string(component) + " out of range");
  const auto& cyc = components_[component - 1];
  int a = *std::min_element(cyc.begin(), cyc.end());

  auto crossings = crossings_;
  auto strands = strands_;
  auto components = components_;

  int term_cross = -1, term_strand = -1;
  for (int i = 0; i < static_cast<int>(crossings.size()); ++i)
    if (crossings[i].under_in == a) term_cross = i;
  for (int i = 0; i < static_cast<int>(strands.size()); ++i)
    if (strands[i].in_arc == a) term_strand = i;

  if (term_cross < 0 && term_strand < 0) {
    // Free loop: the kink's undercrossing is the only cut, so the curve
    // stays a single arc.
    crossings.push_back({+1, a, a, a});
    return make(p_, arc_count_, std::move(components), std::move(crossings), std::move(strands));
  }

  int b = arc_count_ + 1;
  crossings.push_back({+1, a, a, b});
  if (term_cross >= 0)
    crossings[term_cross].under_in = b;
  else
    strands[term_strand].in_arc = b;
  auto& c = components[component - 1];
  c.insert(std::find(c.begin(), c.end(), a) + 1, b);
  return make(p_, arc_count_ + 1, std::move(components), std::move(crossings), std::move(strands));
}

LensDiagram LensDiagram::apply_omega2(int moving_arc, int over_arc) const {
  auto bad = [&](int a) { return a < 1 || a > arc_count_; };
  if (bad(moving_arc) || bad(over_arc))
    fail(Err::ArcOutOfRange, "omega2 arcs out of range");

  auto crossings = crossings_;
  auto strands = strands_;
  auto components = components_;

  int term_cross = -1, term_strand = -1;
  for (int i = 0; i < static_cast<int>(crossings.size()); ++i)
    if (crossings[i].under_in == moving_arc) term_cross = i;
  for (int i = 0; i < static_cast<int>(strands.size()); ++i)
    if (strands[i].in_arc == moving_arc) term_strand = i;

  int comp = component_of(moving_arc);
  auto& cyc = components[comp - 1];

  if (term_cross < 0 && term_strand < 0) {
    // Free loop: two undercuts split it into two arcs.
    int u = arc_count_ + 1;
    crossings.push_back({+1, over_arc, moving_arc, u});
    crossings.push_back({-1, over_arc, u, moving_arc});
    cyc.insert(std::find(cyc.begin(), cyc.end(), moving_arc) + 1, u);
    return make(p_, arc_count_ + 1, std::move(components), std::move(crossings),
                std::move(strands));
  }

  int u = arc_count_ + 1, v = arc_count_ + 2;
  crossings.push_back({+1, over_arc, moving_arc, u});
  crossings.push_back({-1, over_arc, u, v});
  if (term_cross >= 0)
    crossings[term_cross].under_in = v;
  else
    strands[term_strand].in_arc = v;
  auto it = std::find(cyc.begin(), cyc.end(), moving_arc);
  it = cyc.insert(it + 1, u);
  cyc.insert(it + 1, v);
  return make(p_, arc_count_ + 2, std::move(components), std::move(crossings), std::move(strands));
}

LensDiagram LensDiagram::mirror() const {
  auto crossings = crossings_;
  for (auto& c : crossings) c.sign = -c.sign;
  return make(p_, arc_count_, components_, std::move(crossings), strands_);
}

std::vector<std::pair<std::vector<int>, LensDiagram>> LensDiagram::framing_representatives(
    int N) const {
  if (N < 1) fail(Err::BadArgument, "N must be >= 1");
  const int n = component_count();
  const auto w0 = writhe_vector();
  std::vector<std::pair<std::vector<int>, LensDiagram>> out;
  std::vector<int> w(n, 0);
  for (;;) {
    LensDiagram d = *this;
    for (int c = 0; c < n; ++c) {
      int k = ((w[c] - w0[c]) % N + N) % N;
      for (int t = 0; t < k; ++t) d = d.add_positive_kink(c + 1);
    }
    out.emplace_back(w, std::move(d));
    int i = n - 1;
    while (i >= 0 && w[i] == N - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

LensDiagram LensDiagram::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int p = -1, arcs = -1;
  std::map<int, std::vector<int>> comps;
  std::vector<Crossing> crossings;
  std::vector<Strand> strands;

  auto syntax = [&](const std::string& what) -> void {
    fail(Err::SyntaxError, "line " + std::to_string(lineno) + ": " + what);
  };
  auto kv = [&](const std::string& tok, const std::string& key) {
    if (tok.rfind(key + "=", 0) != 0) syntax("expected " + key + "=<arc>");
    try {
      return std::stoi(tok.substr(key.size() + 1));
    } catch (...) {
      syntax("bad integer in " + tok);
    }
    return 0;
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "p") {
      if (p >= 0) syntax("duplicate p");
      if (!(ls >> p) || p < 1) syntax("bad p");
    } else if (head == "arcs") {
      if (arcs >= 0) syntax("duplicate arcs");
      if (!(ls >> arcs) || arcs < 1) syntax("bad arc count");
    } else if (head == "component") {
      std::string idtok;
      if (!(ls >> idtok)) syntax("missing component id");
      bool colon_attached = !idtok.empty() && idtok.back() == ':';
      if (colon_attached) idtok.pop_back();
      int id = 0;
      try {
        id = std::stoi(idtok);
      } catch (...) {
        syntax("bad component id");
      }
      if (!colon_attached) {
        std::string colon;
        if (!(ls >> colon) || colon != ":") syntax("expected ':' after component id");
      }
      std::vector<int> cyc;
      int a;
      while (ls >> a) cyc.push_back(a);
      if (!ls.eof()) syntax("bad arc list");
      if (cyc.empty()) syntax("empty component");
      if (comps.count(id)) syntax("duplicate component id");
      comps[id] = std::move(cyc);
    } else if (head == "crossing") {
      std::string sign, over, inn, outt, extra;
      if (!(ls >> sign >> over >> inn >> outt)) syntax("crossing needs <+|-> over= in= out=");
      if (ls >> extra) syntax("trailing tokens after crossing");
      if (sign != "+" && sign != "-") syntax("crossing sign must be + or -");
      crossings.push_back(
          {sign == "+" ? 1 : -1, kv(over, "over"), kv(inn, "in"), kv(outt, "out")});
    } else if (head == "strand") {
      std::string inn, outt, eps, extra;
      if (!(ls >> inn >> outt >> eps)) syntax("strand needs in= out= eps=");
      if (ls >> extra) syntax("trailing tokens after strand");
      int e = kv(eps, "eps");
      strands.push_back({kv(inn, "in"), kv(outt, "out"), e});
    } else {
      syntax("unknown directive '" + head + "'");
    }
  }
  if (p < 0) fail(Err::SyntaxError, "missing 'p <int>' line");
  if (arcs < 0) fail(Err::SyntaxError, "missing 'arcs <int>' line");

  std::vector<std::vector<int>> components;
  int expect = 1;
  for (auto& [id, cyc] : comps) {
    if (id != expect++)
      fail(Err::SyntaxError, "component ids must be 1..n, got " + std::to_string(id));
    components.push_back(std::move(cyc));
  }
  return make(p, arcs, std::move(components), std::move(crossings), std::move(strands));
}

std::string LensDiagram::serialize() const {
  std::ostringstream out;
  out << "p " << p_ << "\n";
  out << "arcs " << arc_count_ << "\n";
  for (int c = 0; c < component_count(); ++c) {
    out << "component " << (c + 1) << ":";
    for (int a : components_[c]) out << ' ' << a;
    out << "\n";
  }
  for (const Crossing& c : crossings_)
    out << "crossing " << (c.sign > 0 ? '+' : '-') << " over=" << c.over << " in=" << c.under_in
        << " out=" << c.under_out << "\n";
  for (const Strand& s : strands_)
    out << "strand in=" << s.in_arc << " out=" << s.out_arc << " eps=" << (s.eps > 0 ? "+1" : "-1")
        << "\n";
  return out.str();
}

}  // namespace lensracks
