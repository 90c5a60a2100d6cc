#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

#include "symq/diagram.hpp"

namespace symq {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  void skip() {  // separators between terms
    while (pos < s.size() &&
           (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == ',' ||
            s[pos] == ';'))
      ++pos;
  }
  bool eof() {
    skip();
    return pos >= s.size();
  }
  [[noreturn]] void error(const std::string& what) const {
    throw std::invalid_argument("pd parse error at offset " +
                                std::to_string(pos) + ": " + what);
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      error(std::string("expected '") + c + "'");
    ++pos;
  }
  long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) error("expected an integer");
    long v = 0;
    for (std::size_t i = start; i < pos; ++i) {
      v = v * 10 + (s[i] - '0');
      if (v > 1'000'000) error("edge label too large");
    }
    return v;
  }
};

constexpr int kIn = 1, kOut = 2;

// Resolves which way each edge runs through each slot, checks consistency,
// and checks that the code embeds in the plane. Fills the `positive` flags.
PdCode finish_pd(std::vector<std::array<long, 4>> raw, int loops) {
  PdCode pd;
  pd.loops = loops;
  if (raw.empty()) {
    pd.edges = 0;
    return pd;
  }

  std::map<long, std::vector<std::pair<int, int>>> occ;  // label -> (crossing, slot)
  for (std::size_t c = 0; c < raw.size(); ++c)
    for (int s = 0; s < 4; ++s) occ[raw[c][s]].push_back({int(c), s});
  std::map<long, int> dense;
  for (const auto& [label, where] : occ) {
    if (where.size() != 2)
      throw std::invalid_argument("edge label " + std::to_string(label) +
                                  " occurs " + std::to_string(where.size()) +
                                  " times (must be exactly 2)");
    int id = static_cast<int>(dense.size());
    dense[label] = id;
  }
  pd.edges = static_cast<int>(dense.size());
  pd.crossings.resize(raw.size());
  for (std::size_t c = 0; c < raw.size(); ++c)
    for (int s = 0; s < 4; ++s) pd.crossings[c].e[s] = dense[raw[c][s]];

  std::vector<std::vector<std::pair<int, int>>> edge_occ(pd.edges);
  for (std::size_t c = 0; c < raw.size(); ++c)
    for (int s = 0; s < 4; ++s)
      edge_occ[pd.crossings[c].e[s]].push_back({int(c), s});

  // roles: under slots are fixed, over slots propagate in pairs
  std::vector<std::array<int, 4>> role(raw.size(), {0, 0, 0, 0});
  std::deque<std::pair<int, int>> queue;
  auto set_role = [&](int c, int s, int r) {
    if (role[c][s] == r) return;
    if (role[c][s] != 0)
      throw std::invalid_argument(
          "code does not close up into oriented circles");
    role[c][s] = r;
    queue.push_back({c, s});
  };
  for (std::size_t c = 0; c < raw.size(); ++c) {
    set_role(int(c), 0, kIn);
    set_role(int(c), 2, kOut);
  }
  auto drain = [&] {
    while (!queue.empty()) {
      auto [c, s] = queue.front();
      queue.pop_front();
      int r = role[c][s];
      for (auto [c2, s2] : edge_occ[pd.crossings[c].e[s]])
        if (c2 != c || s2 != s) set_role(c2, s2, r == kIn ? kOut : kIn);
      if (s == 1) set_role(c, 3, r == kIn ? kOut : kIn);
      if (s == 3) set_role(c, 1, r == kIn ? kOut : kIn);
    }
  };
  drain();
  // components passing over everything have two consistent orientations;
  // pick one deterministically
  for (std::size_t c = 0; c < raw.size(); ++c)
    for (int s : {1, 3})
      if (role[c][s] == 0) {
        set_role(int(c), s, kIn);
        drain();
      }
  for (std::size_t c = 0; c < raw.size(); ++c)
    pd.crossings[c].positive = role[c][3] == kIn;

  // planarity: with the counterclockwise slot order as rotation system,
  // every connected component must satisfy V - E + F = 2 (E = 2V here)
  std::vector<int> comp(raw.size(), -1);
  int ncomp = 0;
  for (std::size_t c0 = 0; c0 < raw.size(); ++c0) {
    if (comp[c0] != -1) continue;
    std::deque<int> bfs{int(c0)};
    comp[c0] = ncomp;
    while (!bfs.empty()) {
      int c = bfs.front();
      bfs.pop_front();
      for (int s = 0; s < 4; ++s)
        for (auto [c2, s2] : edge_occ[pd.crossings[c].e[s]])
          if (comp[c2] == -1) {
            comp[c2] = ncomp;
            bfs.push_back(c2);
          }
    }
    ++ncomp;
  }
  auto other_end = [&](int c, int s) {
    for (auto [c2, s2] : edge_occ[pd.crossings[c].e[s]])
      if (c2 != c || s2 != s) return std::pair{c2, s2};
    return std::pair{c, s};  // edge with both ends in one slot pair
  };
  std::vector<std::array<char, 4>> seen(raw.size(), {0, 0, 0, 0});
  std::vector<int> faces(ncomp, 0);
  for (std::size_t c0 = 0; c0 < raw.size(); ++c0)
    for (int s0 = 0; s0 < 4; ++s0) {
      if (seen[c0][s0]) continue;
      ++faces[comp[c0]];
      int c = int(c0), s = s0;
      while (!seen[c][s]) {
        seen[c][s] = 1;
        auto [c2, s2] = other_end(c, s);
        c = c2;
        s = (s2 + 3) % 4;
      }
    }
  std::vector<int> verts(ncomp, 0);
  for (std::size_t c = 0; c < raw.size(); ++c) ++verts[comp[c]];
  for (int k = 0; k < ncomp; ++k)
    if (faces[k] != verts[k] + 2)
      throw std::invalid_argument(
          "code does not describe a planar diagram (component " +
          std::to_string(k) + ")");
  return pd;
}

}  // namespace

PdCode parse_pd(std::string_view text) {
  Cursor cur{text};
  std::vector<std::array<long, 4>> raw;
  int loops = 0;
  while (!cur.eof()) {
    char c = cur.s[cur.pos];
    if (c == 'O') {
      ++cur.pos;
      ++loops;
    } else if (c == 'X') {
      ++cur.pos;
      cur.expect('[');
      std::array<long, 4> term{};
      for (int i = 0; i < 4; ++i) {
        term[i] = cur.integer();
        cur.expect(i == 3 ? ']' : ',');
      }
      raw.push_back(term);
    } else {
      cur.error("expected 'X[a,b,c,d]' or 'O'");
    }
  }
  if (raw.empty() && loops == 0)
    throw std::invalid_argument("pd parse error: empty input");
  return finish_pd(std::move(raw), loops);
}

PdCode parse_gauss(std::string_view text) {
  struct Event {
    bool over;
    long id;
    int sign;  // +1 / -1 / 0 when omitted
  };
  Cursor cur{text};
  std::vector<Event> events;
  while (!cur.eof()) {
    char c = cur.s[cur.pos];
    if (c != 'O' && c != 'U') cur.error("expected 'O' or 'U'");
    ++cur.pos;
    Event ev{c == 'O', cur.integer(), 0};
    cur.skip();
    if (cur.pos < cur.s.size() &&
        (cur.s[cur.pos] == '+' || cur.s[cur.pos] == '-')) {
      ev.sign = cur.s[cur.pos] == '+' ? 1 : -1;
      ++cur.pos;
    }
    events.push_back(ev);
  }
  if (events.empty())
    throw std::invalid_argument("gauss parse error: empty input");

  const int L = static_cast<int>(events.size());
  std::map<long, std::pair<int, int>> visits;  // id -> (O event, U event)
  std::map<long, int> signs;
  for (int i = 0; i < L; ++i) {
    const Event& ev = events[i];
    auto [it, fresh] = visits.emplace(ev.id, std::pair{-1, -1});
    int& slot = ev.over ? it->second.first : it->second.second;
    if (slot != -1)
      throw std::invalid_argument("gauss: crossing " + std::to_string(ev.id) +
                                  " visited twice as " +
                                  (ev.over ? "over" : "under"));
    slot = i;
    if (ev.sign != 0) {
      auto [sit, sfresh] = signs.emplace(ev.id, ev.sign);
      if (!sfresh && sit->second != ev.sign)
        throw std::invalid_argument("gauss: conflicting signs at crossing " +
                                    std::to_string(ev.id));
    }
  }
  std::vector<std::array<long, 4>> raw;
  for (const auto& [id, visit] : visits) {
    auto [o, u] = visit;
    if (o == -1 || u == -1)
      throw std::invalid_argument("gauss: crossing " + std::to_string(id) +
                                  " missing an over or under visit");
    auto sit = signs.find(id);
    if (sit == signs.end())
      throw std::invalid_argument("gauss: crossing " + std::to_string(id) +
                                  " has no sign");
    // edge k runs from event k to event k+1; label edges 1..L by their
    // starting event
    auto in_edge = [&](int ev) { return long((ev + L - 1) % L) + 1; };
    auto out_edge = [&](int ev) { return long(ev) + 1; };
    std::array<long, 4> term{};
    term[0] = in_edge(u);
    term[2] = out_edge(u);
    if (sit->second > 0) {
      term[3] = in_edge(o);
      term[1] = out_edge(o);
    } else {
      term[1] = in_edge(o);
      term[3] = out_edge(o);
    }
    raw.push_back(term);
  }
  return finish_pd(std::move(raw), 0);
}

Diagram pd_to_diagram(const PdCode& pd, const std::vector<int>& flips) {
  Diagram d;
  d.m = pd.edges + pd.loops;
  d.dimension = 1;
  for (const PdCrossing& c : pd.crossings) {
    Stratum s;
    if (c.positive) {  // over runs d -> b; its normal points a -> c
      s.upper_i = c.e[3];
      s.upper_j = c.e[1];
      s.lower_s = c.e[0];
      s.lower_t = c.e[2];
    } else {  // over runs b -> d; its normal points c -> a
      s.upper_i = c.e[1];
      s.upper_j = c.e[3];
      s.lower_s = c.e[2];
      s.lower_t = c.e[0];
    }
    s.over = s.upper_i;
    s.upper_coherent = true;
    s.lower_coherent = true;
    d.strata.push_back(s);
  }
  for (int k : flips) d = flip_normal(std::move(d), k);
  return d;
}

}  // namespace symq
